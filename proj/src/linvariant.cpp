#include "tzero/linvariant.hpp"

#include <algorithm>
#include <stdexcept>

namespace tzero {

namespace {

void require_split(const QuadFieldData& field, unsigned long p) {
  if (split_behavior(field, p) != Splitting::split)
    throw std::domain_error("p does not split in F: no trivial zero");
}

int default_target(const PadicContext& ctx, const FgOptions& options) {
  return options.target.value_or(std::min(6, ctx.precision()));
}

}  // namespace

LInvariantReport l_invariant_analytic(const QuadFieldData& field, const PadicContext& ctx, SqrtLift lift) {
  require_split(field, ctx.prime());
  const SplitPrimeData sp = pi_bar(field, ctx, lift);
  const PadicNumber l1 = PadicNumber::from_rational(ctx, mpq_class(-2, field.class_number)) * sp.log_pibar;
  return LInvariantReport{l1, -l1, std::nullopt, std::nullopt, std::nullopt};
}

PadicNumber l_invariant_via_alpha(const CMFormSpec& spec, const PadicContext& ctx) {
  const HeckeRoots roots = unit_root(spec, ctx);
  return PadicNumber::from_rational(ctx, mpq_class(-2, spec.weight - 1)) * iwasawa_log(roots.alpha);
}

PadicNumber hida_ap(const PadicNumber& s, const QuadFieldData& field, const PadicContext& ctx, SqrtLift lift) {
  require_split(field, ctx.prime());
  if (s.valuation() < 0) throw std::domain_error("hida_ap: s must lie in Z_p");
  const SplitPrimeData sp = pi_bar(field, ctx, lift);
  const PadicNumber x = (s.rebind(ctx) - PadicNumber::one(ctx)) * sp.log_pibar /
                        PadicNumber::from_integer(ctx, field.class_number);
  if (!x.is_exact_zero() && x.valuation() < 1)
    throw std::domain_error("hida_ap: exponent left the convergence disc");
  return padic_exp(x);
}

FgCheck verify_ferrero_greenberg(const QuadFieldData& field, const PadicContext& ctx, const FgOptions& options) {
  require_split(field, ctx.prime());
  const DirichletCharacter theta = char_from_kronecker(field.disc, ctx);
  const PadicNumber lhs = branch_derivative(0, theta, 0, ctx, options.branch);
  const SplitPrimeData sp = pi_bar(field, ctx, options.lift);
  const PadicNumber rhs = PadicNumber::from_rational(ctx, mpq_class(4, field.roots_of_unity)) * sp.log_pibar;
  const int residual = agreement_valuation(lhs, rhs);
  const int target = default_target(ctx, options);
  return FgCheck{lhs, rhs, residual, target, residual >= target};
}

TrivialZeroCertificate verify_trivial_zero_formula(const CMFormSpec& spec, int n, int i, const PadicContext& ctx,
                                                   const FgOptions& options) {
  if (n < 2 || n % 2 != 0 || (n / 2) % 2 == 0)
    throw std::domain_error("verify_trivial_zero_formula: Sym^n has no trivial zero unless n = 2m with m odd");
  if (i != 0 && i != 1) throw std::domain_error("verify_trivial_zero_formula: trivial zeroes sit in branches 0 and 1");
  const int m = n / 2;
  const QuadFieldData& field = spec.field;
  const DirichletCharacter theta = char_from_kronecker(field.disc, ctx);
  const PadicNumber lhs = branch_derivative(i, theta, i, ctx, options.branch);
  const LInvariantReport linv = l_invariant_analytic(field, ctx, options.lift);
  const PadicNumber& l = i == 0 ? linv.l_at_0 : linv.l_at_1;
  const mpq_class l0 = dirichlet_L_nonpositive(0, theta);
  const PadicNumber rhs = l * PadicNumber::from_rational(ctx, l0);
  const int residual = agreement_valuation(lhs, rhs);
  const int target = default_target(ctx, options);
  const PadicNumber ep = e_plus(spec, n, i, ctx);

  const std::string si = std::to_string(i);
  std::vector<std::string> modular;
  for (int j = 1; j <= m; ++j)
    modular.push_back("L_p," + si + "(" + std::to_string(i + j * (spec.weight - 1)) + ", f_" + std::to_string(j) + ")");
  std::vector<std::string> steps;
  steps.push_back("L'_p," + si + "(" + si + ", rho_" + std::to_string(n) + ") = L'_p," + si + "(" + si +
                  ", theta_F) * prod_{j=1.." + std::to_string(m) + "} L_p," + si + "(" + si + " + j(k-1), f_j)");
  if (i == 1) steps.push_back("L(1, theta_F) / Omega(1, theta_F) = L(0, theta_F)");
  steps.push_back("L'_p," + si + "(" + si + ", theta_F) = Linv(" + si + ") * L(0, theta_F)");
  steps.push_back("L'_p," + si + "(" + si + ", rho_" + std::to_string(n) + ") = Linv(" + si + ") * E+(" + si +
                  ") * L(" + si + ", rho_" + std::to_string(n) + ") / Omega(" + si + ", rho_" + std::to_string(n) + ")");
  return TrivialZeroCertificate{n,  m,   i,        lhs,    rhs,    l,
                                ep, l0, residual, target, residual >= target && !ep.is_zero(),
                                std::move(modular), std::move(steps)};
}

LInvariantReport l_invariant_report(const CMFormSpec& spec, const PadicContext& ctx, const FgOptions& options) {
  LInvariantReport r = l_invariant_analytic(spec.field, ctx, options.lift);
  r.l_via_alpha = l_invariant_via_alpha(spec, ctx);
  r.agreement_valuation = agreement_valuation(r.l_at_1, *r.l_via_alpha);
  r.fg_check = verify_ferrero_greenberg(spec.field, ctx, options);
  return r;
}

}  // namespace tzero
