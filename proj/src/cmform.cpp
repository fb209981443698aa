#include "tzero/cmform.hpp"

#include <stdexcept>

namespace tzero {

mpz_class curve_discriminant(const WeierstrassCurve& e) {
  // b2 = 4 a2, b4 = 2 a4, b6 = 4 a6, b8 = 4 a2 a6 - a4^2
  const mpz_class b2 = 4 * mpz_class(e.a2);
  const mpz_class b4 = 2 * mpz_class(e.a4);
  const mpz_class b6 = 4 * mpz_class(e.a6);
  const mpz_class b8 = 4 * mpz_class(e.a2) * e.a6 - mpz_class(e.a4) * e.a4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

long ap_point_count(const WeierstrassCurve& e, unsigned long p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("ap_point_count: p must be an odd prime");
  if (valuation_of(curve_discriminant(e), p) > 0 || curve_discriminant(e) == 0)
    throw std::domain_error("ap_point_count: bad reduction at p");
  const long lp = static_cast<long>(p);
  auto red = [lp](long v) { return ((v % lp) + lp) % lp; };
  const long a2 = red(e.a2), a4 = red(e.a4), a6 = red(e.a6);
  long count = 1;
  for (long x = 0; x < lp; ++x) {
    const long rhs = red(((x * x % lp) * x + a2 * (x * x % lp) + a4 * x + a6) % lp);
    count += 1 + kronecker_symbol(rhs, lp);
  }
  return lp + 1 - count;
}

PadicNumber CMFormSpec::psi_at_p() const { return nebentypus(static_cast<long>(prime())); }

CMFormSpec cm_spec(const QuadFieldData& field, int weight, const DirichletCharacter& psi,
                   const PadicNumber& ap, std::optional<long> level) {
  const unsigned long p = ap.prime();
  if (weight < 2) throw std::invalid_argument("cm_spec: weight must be at least 2");
  if (!psi.context().same_prime(ap.context()))
    throw std::invalid_argument("cm_spec: Nebentypus and a_p live over different primes");
  if (!ap.is_unit()) throw std::domain_error("cm_spec: a_p is not a p-adic unit (non-ordinary)");
  if (level && (*level < 1 || *level % static_cast<long>(p) == 0))
    throw std::domain_error("cm_spec: level must be positive and prime to p");
  if (psi.conductor() % p == 0) throw std::domain_error("cm_spec: Nebentypus conductor divisible by p");
  if (psi.parity() != (weight % 2 == 0 ? 1 : -1))
    throw std::domain_error("cm_spec: Nebentypus parity does not match the weight");
  if (split_behavior(field, p) != Splitting::split)
    throw std::domain_error("cm_spec: p does not split in F");
  return CMFormSpec{field, weight, psi, ap, level};
}

CMFormSpec cm_spec_from_curve(const WeierstrassCurve& e, const QuadFieldData& field,
                              const PadicContext& ctx, std::optional<long> level) {
  const long ap = ap_point_count(e, ctx.prime());
  return cm_spec(field, 2, trivial_character(ctx), PadicNumber::from_integer(ctx, ap), level);
}

HeckeRoots unit_root(const CMFormSpec& spec, const PadicContext& ctx) {
  const PadicNumber ap = spec.ap.rebind(ctx);
  const PadicNumber c =
      spec.nebentypus.rebind(ctx)(static_cast<long>(ctx.prime())) *
      PadicNumber::from_integer(ctx, mpz_class(ctx.power(spec.weight - 1)));
  PadicNumber x = PadicNumber::from_integer(ctx, ap.residue(1));
  const PadicNumber two = PadicNumber::from_integer(ctx, 2);
  for (int i = 0; i < 64; ++i) {
    const PadicNumber fx = x * x - ap * x + c;
    if (fx.is_zero()) break;
    x = x - fx / (two * x - ap);
  }
  return HeckeRoots{x, c / x};
}

}  // namespace tzero
