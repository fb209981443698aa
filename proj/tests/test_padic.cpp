#include <random>

#include "doctest.h"
#include "tzero/padic.hpp"

using namespace tzero;

namespace {

// Truncated log(1 + x) series over Q, reduced mod p^k. Needs every term to be p-integral.
mpz_class log1p_oracle(const mpq_class& x, unsigned long p, int k, int terms) {
  mpq_class sum = 0;
  mpq_class power = 1;
  for (int n = 1; n <= terms; ++n) {
    power *= x;
    mpq_class t = power / n;
    sum += (n % 2 == 1) ? t : mpq_class(-t);
  }
  sum.canonicalize();
  mpz_class mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), p, k);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), sum.get_den().get_mpz_t(), mod.get_mpz_t());
  mpz_class r = sum.get_num() * inv % mod;
  if (r < 0) r += mod;
  return r;
}

PadicNumber random_unit(const PadicContext& ctx, std::mt19937_64& rng) {
  mpz_class mod = ctx.power(ctx.precision());
  std::uniform_int_distribution<unsigned long> dist(1, 1000000000UL);
  mpz_class v;
  do {
    v = (mpz_class(dist(rng)) * dist(rng) + dist(rng)) % mod;
  } while (v % ctx.prime() == 0);
  return PadicNumber::from_integer(ctx, v);
}

}  // namespace

TEST_CASE("context validation") {
  CHECK(make_context(5, 32).prime() == 5);
  CHECK(make_context(5, 32).precision() == 32);
  CHECK(make_context(7).precision() == 32);
  CHECK_THROWS_AS(make_context(2, 32), std::invalid_argument);
  CHECK_THROWS_AS(make_context(9, 8), std::invalid_argument);
  CHECK_THROWS_AS(make_context(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_context(1, 4), std::invalid_argument);
}

TEST_CASE("construction and valuation") {
  const auto ctx = make_context(5, 10);
  const auto x = PadicNumber::from_integer(ctx, 250);
  CHECK(x.valuation() == 3);
  CHECK(x.unit() == 2);
  CHECK(x.relative_precision() == 10);
  CHECK(x.absolute_precision() == 13);
  const auto y = PadicNumber::from_rational(ctx, mpq_class(3, 25));
  CHECK(y.valuation() == -2);
  CHECK((y * PadicNumber::from_integer(ctx, 25)).equals(PadicNumber::from_integer(ctx, 3)));
  CHECK(PadicNumber::zero(ctx).is_exact_zero());
  CHECK(PadicNumber::big_oh(ctx, 4).is_zero());
  CHECK_FALSE(PadicNumber::big_oh(ctx, 4).is_exact_zero());
  CHECK(PadicNumber::big_oh(ctx, 4).valuation() == 4);
  CHECK(PadicNumber::from_integer(ctx, -1).digits() == std::vector<unsigned long>(10, 4));
}

TEST_CASE("arithmetic precision bookkeeping") {
  const auto ctx = make_context(7, 12);
  const auto a = PadicNumber::from_parts(ctx, 0, 3, 5);
  const auto b = PadicNumber::from_parts(ctx, 1, 2, 8);
  CHECK((a * b).relative_precision() == 5);
  CHECK((a + b).absolute_precision() == 5);
  CHECK((a / b).valuation() == -1);
  CHECK((a / b).relative_precision() == 5);
  // cancellation: 1 + 7^3 - 1 keeps absolute precision, loses relative precision
  const auto one = PadicNumber::one(ctx);
  const auto c = (one + PadicNumber::from_integer(ctx, 343)) - one;
  CHECK(c.valuation() == 3);
  CHECK(c.absolute_precision() == 12);
  CHECK(c.relative_precision() == 9);
  CHECK_THROWS_AS(one / PadicNumber::zero(ctx), std::domain_error);
  CHECK_THROWS_AS(one / PadicNumber::big_oh(ctx, 3), std::domain_error);
  CHECK_THROWS(one + PadicNumber::one(make_context(5, 12)));
}

TEST_CASE("equality at shared precision") {
  const auto ctx = make_context(5, 10);
  const auto a = PadicNumber::from_parts(ctx, 0, 7, 2);  // 7 + O(25)
  const auto b = PadicNumber::from_integer(ctx, 32);     // 32 = 7 mod 25
  CHECK(a == b);
  CHECK_FALSE(PadicNumber::from_integer(ctx, 8) == b);
  CHECK(agreement_valuation(a, b) == 2);
  CHECK(agreement_valuation(PadicNumber::from_integer(ctx, 1), PadicNumber::from_integer(ctx, 26)) == 2);
}

TEST_CASE("teichmuller examples") {
  const auto ctx = make_context(5, 20);
  CHECK(teichmuller(ctx, 1) == PadicNumber::one(ctx));
  CHECK(teichmuller(ctx, 2).residue(2) == 7);
  CHECK(teichmuller(ctx, 4) == PadicNumber::from_integer(ctx, -1));
  CHECK(teichmuller(ctx, 4).relative_precision() == 20);
  CHECK_THROWS_AS(teichmuller(PadicNumber::from_integer(ctx, 10)), std::domain_error);
}

TEST_CASE("teichmuller properties") {
  for (unsigned long p : {3ul, 5ul, 7ul, 13ul, 29ul}) {
    const auto ctx = make_context(p, 15);
    for (long a = 1; a < static_cast<long>(p); ++a) {
      const auto z = teichmuller(ctx, a);
      CHECK(z.pow(static_cast<long>(p - 1)) == PadicNumber::one(ctx));
      CHECK(z.residue(1) == a);
    }
  }
}

TEST_CASE("iwasawa log examples") {
  const auto ctx = make_context(5, 12);
  CHECK(iwasawa_log(PadicNumber::from_integer(ctx, 5)).is_zero());
  CHECK(iwasawa_log(PadicNumber::from_integer(ctx, -1)).is_zero());
  const auto l6 = iwasawa_log(PadicNumber::from_integer(ctx, 6));
  CHECK(l6.valuation() == 1);
  CHECK(l6.residue(6) == log1p_oracle(mpq_class(5), 5, 6, 40));
  CHECK(l6.digits()[0] == 1);
  CHECK(l6.digits()[1] == 2);
  CHECK_THROWS_AS(iwasawa_log(PadicNumber::zero(ctx)), std::domain_error);
}

TEST_CASE("iwasawa log matches the series oracle on 1 + pZ") {
  for (unsigned long p : {3ul, 7ul, 11ul}) {
    const auto ctx = make_context(p, 10);
    for (long t = 1; t < 6; ++t) {
      const long x = static_cast<long>(p) * t;
      const auto l = iwasawa_log(PadicNumber::from_integer(ctx, 1 + x));
      CHECK(l.residue(8) == log1p_oracle(mpq_class(x), p, 8, 60));
    }
  }
}

TEST_CASE("log is additive and kills roots of unity") {
  std::mt19937_64 rng(20261016);
  for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) {
    const auto ctx = make_context(p, 16);
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = random_unit(ctx, rng);
      const auto w = random_unit(ctx, rng);
      const auto lhs = iwasawa_log(u * w);
      const auto rhs = iwasawa_log(u) + iwasawa_log(w);
      CHECK(lhs == rhs);
      CHECK(agreement_valuation(lhs, rhs) >= std::min(lhs.absolute_precision(), rhs.absolute_precision()));
      const auto z = teichmuller(ctx, 1 + static_cast<long>(rng() % (p - 1)));
      CHECK(iwasawa_log(z * u) == iwasawa_log(u));
      const auto scaled = PadicNumber::from_integer(ctx, static_cast<long>(p)) * u;
      CHECK(iwasawa_log(scaled) == iwasawa_log(u));
    }
  }
}

TEST_CASE("exp examples") {
  const auto ctx = make_context(5, 12);
  CHECK(padic_exp(PadicNumber::zero(ctx)) == PadicNumber::one(ctx));
  const auto six = PadicNumber::from_integer(ctx, 6);
  const auto back = padic_exp(iwasawa_log(six));
  CHECK(agreement_valuation(back, six) >= 11);
  const auto e5 = padic_exp(PadicNumber::from_integer(ctx, 5));
  const auto half = padic_exp(PadicNumber::from_rational(ctx, mpq_class(5, 2)));
  CHECK(e5 == half * half);
  CHECK(e5.residue(2) == 6);
  CHECK_THROWS_AS(padic_exp(PadicNumber::one(ctx)), std::domain_error);
}

TEST_CASE("exp/log round trip and additivity") {
  std::mt19937_64 rng(7);
  for (unsigned long p : {3ul, 5ul, 7ul, 13ul}) {
    const auto ctx = make_context(p, 14);
    for (int trial = 0; trial < 15; ++trial) {
      const auto x = PadicNumber::from_integer(ctx, 1 + static_cast<long>(p) * static_cast<long>(rng() % 100000));
      CHECK(agreement_valuation(padic_exp(iwasawa_log(x)), x) >= ctx.precision() - 1);
      const auto a = PadicNumber::from_integer(ctx, static_cast<long>(p) * static_cast<long>(1 + rng() % 1000));
      const auto b = PadicNumber::from_integer(ctx, static_cast<long>(p) * static_cast<long>(1 + rng() % 1000));
      CHECK(padic_exp(a + b) == padic_exp(a) * padic_exp(b));
    }
  }
}

TEST_CASE("morita gamma values") {
  const auto ctx = make_context(5, 6);
  CHECK(morita_gamma_integer(ctx, 0) == PadicNumber::one(ctx));
  CHECK(morita_gamma_integer(ctx, 1) == PadicNumber::from_integer(ctx, -1));
  CHECK(morita_gamma_integer(ctx, 5) == PadicNumber::from_integer(ctx, -24));
  CHECK(morita_gamma(PadicNumber::from_integer(ctx, 5), 4) == PadicNumber::from_integer(ctx, -24));
}

TEST_CASE("morita gamma functional equation on integers") {
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    const auto ctx = make_context(p, 8);
    for (unsigned long n = 0; n < 60; ++n) {
      const auto g = morita_gamma_integer(ctx, n);
      const auto g1 = morita_gamma_integer(ctx, n + 1);
      const auto x = PadicNumber::from_integer(ctx, static_cast<long>(n));
      if (n % p == 0)
        CHECK(g1 == -g);
      else
        CHECK(g1 == -(x * g));
    }
  }
}

TEST_CASE("morita gamma continuity and cost ceiling") {
  const auto ctx = make_context(5, 6);
  // Gamma_p(x) depends on x mod p^d to d digits.
  for (long n = 1; n < 20; ++n) {
    const auto a = morita_gamma(PadicNumber::from_integer(ctx, n), 3);
    const auto b = morita_gamma(PadicNumber::from_integer(ctx, n + 125), 3);
    CHECK(a == b);
    CHECK(a == morita_gamma_integer(ctx, static_cast<unsigned long>(n)));
  }
  CHECK_THROWS_AS(morita_gamma(PadicNumber::from_integer(ctx, 3), 7), PrecisionError);
  const auto tight = ctx.with_gamma_cost_ceiling(200);
  CHECK_THROWS_AS(morita_gamma(PadicNumber::from_integer(tight, 3), 4), PrecisionError);
  CHECK(morita_gamma(PadicNumber::from_integer(tight, 3)).absolute_precision() == 3);
}

TEST_CASE("precision never increases through operations") {
  std::mt19937_64 rng(99);
  const auto ctx = make_context(7, 20);
  for (int trial = 0; trial < 50; ++trial) {
    const int ra = 1 + static_cast<int>(rng() % 20);
    const int rb = 1 + static_cast<int>(rng() % 20);
    const auto a = PadicNumber::from_parts(ctx, static_cast<int>(rng() % 4), 1 + 7 * static_cast<long>(rng() % 50), ra);
    const auto b = PadicNumber::from_parts(ctx, static_cast<int>(rng() % 4), 3 + 7 * static_cast<long>(rng() % 50), rb);
    CHECK((a * b).relative_precision() <= std::min(ra, rb));
    CHECK((a / b).relative_precision() <= std::min(ra, rb));
    CHECK((a + b).absolute_precision() <= std::min(a.absolute_precision(), b.absolute_precision()));
    CHECK(iwasawa_log(a).absolute_precision() <= a.relative_precision() + 1);
  }
}
