#include <cmath>
#include <random>

#include "doctest.h"
#include "tzero/cmform.hpp"

using namespace tzero;

namespace {

// #E(F_p) by testing every (x, y).
long ap_oracle(const WeierstrassCurve& e, long p) {
  long count = 1;
  for (long x = 0; x < p; ++x) {
    for (long y = 0; y < p; ++y) {
      const long lhs = (y * y) % p;
      long rhs = (x * x % p * x + e.a2 * x % p * x + e.a4 * x + e.a6) % p;
      rhs = (rhs + p * 8) % p;
      if (((lhs - rhs) % p + p) % p == 0) ++count;
    }
  }
  return p + 1 - count;
}

const WeierstrassCurve kX32{0, -1, 0};

}  // namespace

TEST_CASE("point counting examples") {
  CHECK(ap_point_count(kX32, 5) == -2);
  CHECK(ap_point_count(kX32, 3) == 0);
  CHECK(ap_point_count(kX32, 13) == 6);
  CHECK_THROWS_AS(ap_point_count(WeierstrassCurve{0, 0, 5}, 5), std::domain_error);
  CHECK_THROWS_AS(ap_point_count(WeierstrassCurve{0, 0, 5}, 3), std::domain_error);
  CHECK_THROWS_AS(ap_point_count(kX32, 2), std::invalid_argument);
  CHECK_THROWS_AS(ap_point_count(kX32, 9), std::invalid_argument);
}

TEST_CASE("point counting matches brute force and the Hasse bound") {
  const WeierstrassCurve curves[] = {kX32, {0, 0, 1}, {0, -35, -98}, {1, 2, 3}, {0, 4, -1}};
  for (const auto& e : curves) {
    for (long p = 3; p < 200; ++p) {
      if (!is_prime(static_cast<unsigned long>(p))) continue;
      if (valuation_of(curve_discriminant(e), static_cast<unsigned long>(p)) > 0) continue;
      const long ap = ap_point_count(e, static_cast<unsigned long>(p));
      CHECK(ap == ap_oracle(e, p));
      CHECK(static_cast<double>(ap * ap) <= 4.0 * static_cast<double>(p));
    }
  }
}

TEST_CASE("cm_spec validation") {
  const auto ctx = make_context(5, 10);
  const auto qi = quad_field_data(1);
  const auto triv = trivial_character(ctx);
  CHECK_NOTHROW(cm_spec(qi, 2, triv, PadicNumber::from_integer(ctx, -2), 32));
  CHECK_THROWS_AS(cm_spec(qi, 2, triv, PadicNumber::from_integer(ctx, 5), 32), std::domain_error);
  CHECK_THROWS_AS(cm_spec(qi, 2, triv, PadicNumber::from_integer(ctx, -2), 40), std::domain_error);
  CHECK_THROWS_AS(cm_spec(qi, 2, char_from_kronecker(-4, ctx), PadicNumber::from_integer(ctx, -2)),
                  std::domain_error);
  CHECK_THROWS_AS(cm_spec(qi, 1, triv, PadicNumber::from_integer(ctx, -2)), std::invalid_argument);
  CHECK_THROWS_AS(cm_spec(qi, 2, char_teichmuller_power(2, ctx), PadicNumber::from_integer(ctx, -2)),
                  std::domain_error);
  CHECK_NOTHROW(cm_spec(qi, 3, char_from_kronecker(-4, ctx), PadicNumber::from_integer(ctx, 6)));

  const auto ctx3 = make_context(3, 10);
  CHECK_THROWS_AS(cm_spec(qi, 2, trivial_character(ctx3), PadicNumber::from_integer(ctx3, 0), 32),
                  std::domain_error);
  CHECK_THROWS_AS(cm_spec(qi, 2, trivial_character(ctx3), PadicNumber::from_integer(ctx3, 1), 32),
                  std::domain_error);
  CHECK_THROWS_AS(cm_spec_from_curve(kX32, qi, ctx3, 32), std::domain_error);
}

TEST_CASE("unit root for the conductor 32 curve at 5") {
  const auto ctx = make_context(5, 12);
  const auto spec = cm_spec_from_curve(kX32, quad_field_data(1), ctx, 32);
  const auto r = unit_root(spec, ctx);
  CHECK(r.alpha.residue(1) == 3);
  CHECK(r.alpha.residue(2) == 13);
  CHECK(r.beta == PadicNumber::from_integer(ctx, 5) / r.alpha);
  CHECK(r.alpha + r.beta == PadicNumber::from_integer(ctx, -2));
  CHECK(r.alpha * r.beta == PadicNumber::from_integer(ctx, 5));
  const auto sp = pi_bar(quad_field_data(1), ctx);
  CHECK(iwasawa_log(r.alpha) == sp.log_pibar);
  CHECK(agreement_valuation(iwasawa_log(r.alpha), sp.log_pibar) >= 12);
}

TEST_CASE("Vieta identities for random ordinary specs") {
  std::mt19937 rng(31337);
  const auto qi = quad_field_data(1);
  for (unsigned long p : {5ul, 13ul, 17ul, 29ul, 37ul}) {
    const auto ctx = make_context(p, 14);
    for (int trial = 0; trial < 20; ++trial) {
      long ap;
      do {
        ap = static_cast<long>(rng() % 2001) - 1000;
      } while (ap % static_cast<long>(p) == 0);
      const int k = 2 + 2 * static_cast<int>(rng() % 3);
      const auto spec = cm_spec(qi, k, trivial_character(ctx), PadicNumber::from_integer(ctx, ap));
      const auto r = unit_root(spec, ctx);
      mpz_class pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), p, k - 1);
      CHECK(r.alpha + r.beta == spec.ap);
      CHECK(r.alpha * r.beta == PadicNumber::from_integer(ctx, pk));
      CHECK(r.alpha.valuation() == 0);
      CHECK(r.beta.valuation() == k - 1);
      CHECK(r.alpha.relative_precision() == ctx.precision());
    }
  }
}

TEST_CASE("log of the unit root against log of pibar for CM curves") {
  struct Case {
    WeierstrassCurve e;
    long d;
  };
  const Case cases[] = {{kX32, 1}, {{0, 0, 1}, 3}, {{0, -35, -98}, 7}, {{0, 4, 0}, 1}};
  for (const auto& c : cases) {
    const auto f = quad_field_data(c.d);
    for (unsigned long p = 5; p < 80; ++p) {
      if (!is_prime(p) || split_behavior(f, p) != Splitting::split) continue;
      if (valuation_of(curve_discriminant(c.e), p) > 0) continue;
      if (ap_point_count(c.e, p) % static_cast<long>(p) == 0) continue;
      CAPTURE(c.d);
      CAPTURE(p);
      const auto ctx = make_context(p, 12);
      const auto spec = cm_spec_from_curve(c.e, f, ctx);
      const auto r = unit_root(spec, ctx);
      const auto rhs = pi_bar(f, ctx).log_pibar / PadicNumber::from_integer(ctx, f.class_number);
      CHECK(iwasawa_log(r.alpha) == rhs);
      CHECK(agreement_valuation(iwasawa_log(r.alpha), rhs) >= 11);
    }
  }
}
