#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tzero/cmform.hpp"
#include "tzero/kl_lfunction.hpp"

namespace tzero {

enum class FactorKind { dirichlet, modular };

/// One piece of Sym^n of a CM form. For the Dirichlet piece only `twist` is used.
struct SymPowerFactor {
  FactorKind kind;
  int index;   // j
  int weight;  // weight of f_j; 0 for the Dirichlet piece
  int shift;   // cyclotomic shift j(k-1)
  DirichletCharacter twist;
  std::optional<PadicNumber> alpha;
  std::optional<PadicNumber> beta;

  std::string label() const;
};

struct TrivialZero {
  int branch;
  long point;
  int order;
};

struct TrivialZeroReport {
  int n;
  int m;
  std::vector<TrivialZero> zeros;
};

struct SymPowerDecomposition {
  int n;
  int m;
  int weight;
  std::vector<SymPowerFactor> factors;
  TrivialZeroReport trivial_zeros;
};

SymPowerDecomposition decompose(const CMFormSpec& spec, int n, const PadicContext& ctx);

/// Frobenius eigenvalues at p of the normalized Sym^n read off the factor list.
std::vector<PadicNumber> factor_eigenvalues(const SymPowerDecomposition& dec);

/// Integers a with 2 - k <= a <= k - 1 that are critical for theta_F^m: odd a >= 1 or
/// even a <= 0 when m is odd; even a >= 1 or odd a <= 0 when m is even.
std::vector<long> critical_integers(int n, int k);

/// (branch, point) pairs of trivial zeroes: (0, 0) and (1, 1) when n = 2m with m odd.
TrivialZeroReport trivial_zero_locations(const CMFormSpec& spec, int n);

/// Numerical evidence that a trivial zero has order one: c_0 vanishes to the certified
/// precision while c_1 does not.
struct OrderCertificate {
  int branch;
  long point;
  PadicNumber c0;
  PadicNumber c1;
  int certified_precision;
  bool order_one;
};

std::vector<OrderCertificate> certify_trivial_zeros(const CMFormSpec& spec, int n, const PadicContext& ctx,
                                                    const BranchOptions& options = {});

/// Euler-type factor attached to one piece of Sym^n at the integer a (trivial twist).
struct InterpolationFactor {
  std::string factor;
  PadicNumber value;
};

/// Factors of every piece at which `a` is critical (the Dirichlet piece is skipped
/// otherwise).
std::vector<InterpolationFactor> interpolation_factors(const SymPowerDecomposition& dec, long a,
                                                       const PadicContext& ctx);

/// prod_{j=1}^m (1 - p^(i + j(k-1) - 1) / alpha_j) (1 - p^(-i - j(k-1)) beta_j).
PadicNumber e_plus(const CMFormSpec& spec, int n, int i, const PadicContext& ctx);

}  // namespace tzero
