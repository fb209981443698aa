#include "tzero/sympower.hpp"

#include <stdexcept>

namespace tzero {

namespace {

DirichletCharacter char_pow(const DirichletCharacter& chi, long e) {
  const DirichletCharacter base = e < 0 ? chi.inverse() : chi;
  DirichletCharacter out = trivial_character(chi.context());
  for (long i = 0; i < (e < 0 ? -e : e); ++i) out = char_product(out, base);
  return out;
}

PadicNumber p_power(const PadicContext& ctx, long e) {
  return PadicNumber::from_parts(ctx, static_cast<int>(e), mpz_class(1), ctx.precision());
}

bool has_trivial_zero(int n) { return n % 2 == 0 && (n / 2) % 2 == 1; }

}  // namespace

std::string SymPowerFactor::label() const {
  if (kind == FactorKind::dirichlet) return twist.label();
  return "f_" + std::to_string(index);
}

SymPowerDecomposition decompose(const CMFormSpec& spec, int n, const PadicContext& ctx) {
  if (n < 1) throw std::invalid_argument("decompose: n must be positive");
  const int k = spec.weight;
  const int m = n / 2;
  const HeckeRoots roots = unit_root(spec, ctx);
  const DirichletCharacter psi = spec.nebentypus.rebind(ctx);
  const PadicNumber psi_p = psi(static_cast<long>(ctx.prime()));
  const DirichletCharacter theta = char_from_kronecker(spec.field.disc, ctx);

  std::vector<SymPowerFactor> factors;
  if (n % 2 == 0) {
    factors.push_back(SymPowerFactor{FactorKind::dirichlet, 0, 0, 0, char_pow(theta, m), std::nullopt, std::nullopt});
    for (int j = 1; j <= m; ++j) {
      const PadicNumber scale = psi_p.pow(-j);
      factors.push_back(SymPowerFactor{FactorKind::modular, j, 2 * j * (k - 1) + 1, j * (k - 1),
                                       char_product(char_pow(psi, -j), char_pow(theta, m - j)),
                                       scale * roots.alpha.pow(2 * j), scale * roots.beta.pow(2 * j)});
    }
  } else {
    for (int j = 0; j <= m; ++j) {
      const PadicNumber scale = psi_p.pow(-j);
      factors.push_back(SymPowerFactor{FactorKind::modular, j, (2 * j + 1) * (k - 1) + 1, j * (k - 1),
                                       char_pow(psi, -j), scale * roots.alpha.pow(2 * j + 1),
                                       scale * roots.beta.pow(2 * j + 1)});
    }
  }
  return SymPowerDecomposition{n, m, k, std::move(factors), trivial_zero_locations(spec, n)};
}

std::vector<PadicNumber> factor_eigenvalues(const SymPowerDecomposition& dec) {
  std::vector<PadicNumber> out;
  for (const auto& f : dec.factors) {
    if (f.kind == FactorKind::dirichlet) {
      const PadicContext& ctx = f.twist.context();
      out.push_back(f.twist(static_cast<long>(ctx.prime())));
      continue;
    }
    const PadicNumber unshift = p_power(f.alpha->context(), -f.shift);
    out.push_back(*f.alpha * unshift);
    out.push_back(*f.beta * unshift);
  }
  return out;
}

std::vector<long> critical_integers(int n, int k) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("critical_integers: only even n >= 2 is supported");
  if (k < 2) throw std::invalid_argument("critical_integers: weight must be at least 2");
  const bool m_odd = (n / 2) % 2 == 1;
  std::vector<long> out;
  for (long a = 2 - k; a <= k - 1; ++a) {
    const bool odd = (a % 2) != 0;
    const bool ok = a >= 1 ? (odd == m_odd) : (odd != m_odd);
    if (ok) out.push_back(a);
  }
  return out;
}

TrivialZeroReport trivial_zero_locations(const CMFormSpec& spec, int n) {
  (void)spec;
  if (n < 1) throw std::invalid_argument("trivial_zero_locations: n must be positive");
  TrivialZeroReport r{n, n / 2, {}};
  if (has_trivial_zero(n)) r.zeros = {TrivialZero{0, 0, 1}, TrivialZero{1, 1, 1}};
  return r;
}

std::vector<OrderCertificate> certify_trivial_zeros(const CMFormSpec& spec, int n, const PadicContext& ctx,
                                                    const BranchOptions& options) {
  const TrivialZeroReport r = trivial_zero_locations(spec, n);
  const DirichletCharacter theta = char_from_kronecker(spec.field.disc, ctx);
  std::vector<OrderCertificate> out;
  for (const auto& z : r.zeros) {
    const BranchSeries s = branch_series(z.branch, theta, z.point, 2, ctx, options);
    const PadicNumber& c0 = s.coefficients[0];
    const PadicNumber& c1 = s.coefficients[1];
    const bool ok = c0.valuation() >= s.certified_precision && !c1.is_zero() &&
                    c1.valuation() < s.certified_precision;
    out.push_back(OrderCertificate{z.branch, z.point, c0, c1, s.certified_precision, ok});
  }
  return out;
}

std::vector<InterpolationFactor> interpolation_factors(const SymPowerDecomposition& dec, long a,
                                                       const PadicContext& ctx) {
  std::vector<InterpolationFactor> out;
  const PadicNumber one = PadicNumber::one(ctx);
  const long p = static_cast<long>(ctx.prime());
  for (const auto& f : dec.factors) {
    if (f.kind == FactorKind::dirichlet) {
      const DirichletCharacter chi = f.twist.rebind(ctx);
      const bool odd_a = (a % 2) != 0;
      const bool critical = a >= 1 ? (odd_a == chi.is_odd()) : (odd_a != chi.is_odd());
      if (!critical) continue;
      const PadicNumber chi_p = chi(p);
      const PadicNumber value = a <= 0 ? one - p_power(ctx, -a) * chi_p : one - p_power(ctx, a - 1) * chi.inverse()(p);
      out.push_back(InterpolationFactor{f.label(), value});
      continue;
    }
    const PadicNumber alpha = f.alpha->rebind(ctx);
    const PadicNumber beta = f.beta->rebind(ctx);
    const PadicNumber value = (one - p_power(ctx, a + f.shift - 1) / alpha) * (one - p_power(ctx, -a - f.shift) * beta);
    out.push_back(InterpolationFactor{f.label(), value});
  }
  return out;
}

PadicNumber e_plus(const CMFormSpec& spec, int n, int i, const PadicContext& ctx) {
  if (!has_trivial_zero(n)) throw std::domain_error("e_plus: Sym^n has no trivial zero unless n = 2m with m odd");
  if (i != 0 && i != 1) throw std::invalid_argument("e_plus: branch must be 0 or 1");
  const SymPowerDecomposition dec = decompose(spec, n, ctx);
  const PadicNumber one = PadicNumber::one(ctx);
  PadicNumber prod = one;
  for (const auto& f : dec.factors) {
    if (f.kind != FactorKind::modular) continue;
    prod *= (one - p_power(ctx, i + f.shift - 1) / *f.alpha) * (one - p_power(ctx, -i - f.shift) * *f.beta);
  }
  return prod;
}

}  // namespace tzero
