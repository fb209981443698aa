#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tzero/cmform.hpp"
#include "tzero/kl_lfunction.hpp"
#include "tzero/quadfield.hpp"
#include "tzero/sympower.hpp"

namespace tzero {

/// lhs = L'_{p,0}(0, theta_F) from the branch series, rhs = (4 / w_F) log_p(pibar).
struct FgCheck {
  PadicNumber lhs;
  PadicNumber rhs;
  int residual_valuation;
  int target;
  bool pass;
};

struct LInvariantReport {
  PadicNumber l_at_1;  // -2 log_p(pibar) / h_F
  PadicNumber l_at_0;  // -l_at_1
  std::optional<PadicNumber> l_via_alpha;
  std::optional<int> agreement_valuation;
  std::optional<FgCheck> fg_check;
};

LInvariantReport l_invariant_analytic(const QuadFieldData& field, const PadicContext& ctx,
                                      SqrtLift lift = SqrtLift::least_residue);

/// -2 log_p(alpha_p) / (k - 1).
PadicNumber l_invariant_via_alpha(const CMFormSpec& spec, const PadicContext& ctx);

/// exp_p((s - 1) log_p(pibar) / h_F), the root of unity dropped.
PadicNumber hida_ap(const PadicNumber& s, const QuadFieldData& field, const PadicContext& ctx,
                    SqrtLift lift = SqrtLift::least_residue);

struct FgOptions {
  SqrtLift lift = SqrtLift::least_residue;
  /// Digits required for PASS; min(6, N) when unset.
  std::optional<int> target;
  BranchOptions branch;
};

FgCheck verify_ferrero_greenberg(const QuadFieldData& field, const PadicContext& ctx, const FgOptions& options = {});

/// Numeric core L'_{p,i}(i, theta_F) = L(i) L(0, theta_F) plus the symbolic shape of the
/// full derivative identity for Sym^n.
struct TrivialZeroCertificate {
  int n;
  int m;
  int branch;
  PadicNumber lhs;
  PadicNumber rhs;
  PadicNumber l_invariant;
  PadicNumber e_plus;
  mpq_class archimedean_value;  // L(0, theta_F)
  int residual_valuation;
  int target;
  bool pass;
  std::vector<std::string> modular_factors;
  std::vector<std::string> steps;
};

TrivialZeroCertificate verify_trivial_zero_formula(const CMFormSpec& spec, int n, int i, const PadicContext& ctx,
                                                   const FgOptions& options = {});

/// Everything at once: both L-invariants, their agreement and the FG check.
LInvariantReport l_invariant_report(const CMFormSpec& spec, const PadicContext& ctx, const FgOptions& options = {});

}  // namespace tzero
