#pragma once

#include <optional>
#include <vector>

#include "tzero/characters.hpp"
#include "tzero/padic.hpp"

namespace tzero {

/// L_p(1 - n, chi) for an even character chi, from the generalized Bernoulli number
/// of chi omega^(-n). Computed in chi's context.
PadicNumber kl_value(int n, const DirichletCharacter& chi);

/// Newton interpolation of the Iwasawa series f with L_p(s, chi) = f((1+p)^s - 1),
/// through the nodes T_n = (1+p)^(1-n) - 1, n = 1..J.
struct IwasawaInterpolation {
  DirichletCharacter chi;
  std::vector<PadicNumber> nodes;
  std::vector<PadicNumber> differences;

  int node_count() const { return static_cast<int>(nodes.size()); }
  /// f(t) for t in pZ_p. The precision is capped by the interpolation remainder,
  /// whose valuation is at least sum_n v(t - T_n).
  PadicNumber evaluate(const PadicNumber& t) const;
};

/// Builds the interpolation in chi's context. Node values are computed in parallel.
IwasawaInterpolation interpolate_kl(const DirichletCharacter& chi, int node_count);

/// How branch i of theta reads the Kubota-Leopoldt function:
/// L_{p,i}(s, theta) = L_p(offset + sign * s, kl_character).
///   i even: L_p(s, theta omega^(1-i));  i odd: L_p(1 - s, theta^-1 omega^i).
struct BranchNormalization {
  DirichletCharacter kl_character;
  long offset;
  int sign;
};

BranchNormalization branch_normalization(int i, const DirichletCharacter& theta);

struct BranchOptions {
  /// Node count J. Defaults to N + T; smaller values are rejected.
  std::optional<int> nodes;
  int max_nodes = 64;
};

/// Expansion of L_{p,i}(s, theta) = sum_t c_t (s - s0)^t, t < order.
struct BranchSeries {
  int branch;
  DirichletCharacter theta;
  long s0;
  std::vector<PadicNumber> coefficients;
  int certified_precision;
  int nodes;
  int working_precision;

  int order() const { return static_cast<int>(coefficients.size()); }
  /// Valuation bound for the neglected terms t >= order when v(s - s0) >= vh.
  int tail_valuation(int vh) const;
  /// Value at s in Z_p; precision capped by the certified coefficients and the tail.
  PadicNumber evaluate(const PadicNumber& s) const;
};

BranchSeries branch_series(int i, const DirichletCharacter& theta, long s0, int order,
                           const PadicContext& ctx, const BranchOptions& options = {});
PadicNumber branch_derivative(int i, const DirichletCharacter& theta, long s0, const PadicContext& ctx,
                              const BranchOptions& options = {});
/// Direct evaluation: Newton form at T = (1+p)^(s') - 1, no series expansion.
PadicNumber branch_value(int i, const DirichletCharacter& theta, const PadicNumber& s,
                         const PadicContext& ctx, const BranchOptions& options = {});

}  // namespace tzero
