#include <numeric>
#include <set>

#include "doctest.h"
#include "tzero/characters.hpp"
#include "tzero/quadfield.hpp"

using namespace tzero;

namespace {

// Class number by reducing every primitive form with small coefficients.
long class_number_oracle(long disc) {
  std::set<std::array<long, 3>> classes;
  const long bound = 40;
  for (long a = 1; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      const long num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      long c = num / (4 * a);
      if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
      long A = a, B = b, C = c;
      for (;;) {
        // bring B into (-A, A]
        while (B > A || B <= -A) {
          const long k = (B > A) ? (B - 1 + A) / (2 * A) : -((-B + A) / (2 * A));
          const long nb = B - 2 * A * k;
          C = (nb * nb - disc) / (4 * A);
          B = nb;
        }
        if (C < A) {
          std::swap(A, C);
          B = -B;
          continue;
        }
        break;
      }
      if (A == C && B < 0) B = -B;
      classes.insert({A, B, C});
    }
  }
  return static_cast<long>(classes.size());
}

bool norm_ok(const NormRepresentation& r, long disc, unsigned long p, long h) {
  mpz_class lhs = mpz_class(r.x) * r.x - mpz_class(disc) * r.y * r.y;
  mpz_class rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), p, h);
  return lhs == 4 * rhs;
}

}  // namespace

TEST_CASE("field data examples") {
  const auto q1 = quad_field_data(1);
  CHECK(q1.disc == -4);
  CHECK(q1.class_number == 1);
  CHECK(q1.roots_of_unity == 4);
  const auto q23 = quad_field_data(23);
  CHECK(q23.disc == -23);
  CHECK(q23.class_number == 3);
  CHECK(reduced_forms(-23) == std::vector<std::array<long, 3>>{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}});
  const auto q3 = quad_field_data(3);
  CHECK(q3.disc == -3);
  CHECK(q3.class_number == 1);
  CHECK(q3.roots_of_unity == 6);
  CHECK(quad_field_data(5).disc == -20);
  CHECK(quad_field_data(5).class_number == 2);
  CHECK(quad_field_data(47).class_number == 5);
  CHECK(quad_field_data(14).class_number == 4);
  CHECK(quad_field_data(163).class_number == 1);
  CHECK_THROWS_AS(quad_field_data(4), std::invalid_argument);
  CHECK_THROWS_AS(quad_field_data(0), std::invalid_argument);
  CHECK_THROWS_AS(quad_field_from_discriminant(-12), std::invalid_argument);
  CHECK(quad_field_from_discriminant(-8).d == 2);
}

TEST_CASE("class numbers agree with brute-force reduction") {
  for (long d = -100; d < 0; ++d) {
    if (!is_fundamental_discriminant(d)) continue;
    CAPTURE(d);
    const auto f = quad_field_from_discriminant(d);
    CHECK(f.class_number == class_number_oracle(d));
    CHECK(f.roots_of_unity == (d == -3 ? 6 : d == -4 ? 4 : 2));
  }
}

TEST_CASE("splitting") {
  const auto f = quad_field_data(1);
  CHECK(split_behavior(f, 5) == Splitting::split);
  CHECK(split_behavior(f, 3) == Splitting::inert);
  CHECK(split_behavior(f, 2) == Splitting::ramified);
  CHECK(split_behavior(quad_field_data(3), 3) == Splitting::ramified);
  CHECK(split_behavior(quad_field_data(3), 7) == Splitting::split);
  CHECK(to_string(Splitting::inert) == "inert");
}

TEST_CASE("pi_bar for Q(i) at 5 under the embedding i -> 7 mod 25") {
  const auto ctx = make_context(5, 10);
  const auto f = quad_field_data(1);
  const auto s = sqrt_discriminant(f, ctx, SqrtLift::opposite);
  CHECK(s.residue(2) == 14);
  CHECK(sqrt_discriminant(f, ctx).residue(2) == 11);
  const auto sp = pi_bar_from(f, ctx, NormRepresentation{2, 2}, SqrtLift::opposite);
  CHECK(sp.pi_coords.x == 2);
  CHECK(sp.pi_coords.y == 2);
  CHECK(sp.pi_image.valuation() == 1);
  CHECK(sp.pi_image.residue(2) == 15);
  CHECK(sp.pibar_coords.y == -2);
  CHECK(sp.pibar_image.is_unit());
  CHECK(sp.pibar_image.residue(2) == 12);  // -13 mod 25
  CHECK(sp.log_pibar == iwasawa_log(sp.pibar_image));
  // the least-residue lift picks the same conjugate pair, with the roles exchanged
  const auto other = pi_bar_from(f, ctx, NormRepresentation{2, 2});
  CHECK(other.pibar_coords.y == 2);
  CHECK(other.log_pibar == sp.log_pibar);
}

TEST_CASE("pi_bar for Q(i) at 13") {
  const auto ctx = make_context(13, 10);
  const auto f = quad_field_data(1);
  const auto sp = pi_bar(f, ctx);
  CHECK(norm_ok(sp.pibar_coords, f.disc, 13, 1));
  CHECK(sp.pibar_image.is_unit());
  CHECK(sp.pi_image.valuation() == 1);
  CHECK((iwasawa_log(sp.pi_image) + sp.log_pibar).is_zero());
  const auto sp2 = pi_bar_from(f, ctx, NormRepresentation{6, 2});
  CHECK(sp2.log_pibar == sp.log_pibar);
}

TEST_CASE("pi_bar rejects non-split primes") {
  const auto ctx = make_context(3, 8);
  CHECK_THROWS_AS(pi_bar(quad_field_data(1), ctx), std::domain_error);
  CHECK_THROWS_AS(pi_bar(quad_field_data(3), ctx), std::domain_error);
}

TEST_CASE("split-prime invariants over many fields") {
  for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) {
    for (long d = 1; d <= 100; ++d) {
      if (!is_squarefree(d)) continue;
      const auto f = quad_field_data(d);
      const auto ctx = make_context(p, 12 + static_cast<int>(f.class_number));
      if (split_behavior(f, p) != Splitting::split) continue;
      CAPTURE(d);
      CAPTURE(p);
      const auto reps = norm_representations(f, p);
      REQUIRE_FALSE(reps.empty());
      const auto sp = pi_bar(f, ctx);
      CHECK(norm_ok(sp.pibar_coords, f.disc, p, f.class_number));
      CHECK(norm_ok(sp.pi_coords, f.disc, p, f.class_number));
      CHECK((sp.sqrt_disc * sp.sqrt_disc) == PadicNumber::from_integer(ctx, f.disc));
      CHECK(sp.pibar_image.is_unit());
      CHECK(sp.pi_image.valuation() == f.class_number);
      const auto log_pi = iwasawa_log(sp.pi_image);
      CHECK(log_pi == -sp.log_pibar);
      CHECK(agreement_valuation(log_pi, -sp.log_pibar) >=
            std::min(log_pi.absolute_precision(), sp.log_pibar.absolute_precision()));
      CHECK(sp.log_pibar.valuation() >= 1);
      // every primitive representation yields the same logarithm
      for (const auto& r : reps) {
        CHECK(norm_ok(r, f.disc, p, f.class_number));
        CHECK_FALSE((r.x % static_cast<long>(p) == 0 && r.y % static_cast<long>(p) == 0));
        CHECK(pi_bar_from(f, ctx, r).log_pibar == sp.log_pibar);
      }
      // the opposite lift swaps the roles of the two conjugates
      const auto swapped = pi_bar(f, ctx, SqrtLift::opposite);
      CHECK(swapped.sqrt_disc == -sp.sqrt_disc);
      CHECK(swapped.pibar_coords.x == sp.pi_coords.x);
      CHECK(swapped.pibar_coords.y == sp.pi_coords.y);
      CHECK(swapped.log_pibar == sp.log_pibar);
    }
  }
}

TEST_CASE("several representations for fields with extra units") {
  for (long d : {1L, 3L}) {
    const auto f = quad_field_data(d);
    for (unsigned long p : {5ul, 7ul, 13ul, 19ul, 37ul}) {
      if (split_behavior(f, p) != Splitting::split) continue;
      const auto ctx = make_context(p, 16);
      const auto reps = norm_representations(f, p);
      CHECK(reps.size() >= 4);
      const auto base = pi_bar(f, ctx).log_pibar;
      for (const auto& r : reps) CHECK(pi_bar_from(f, ctx, r).log_pibar == base);
    }
  }
}
