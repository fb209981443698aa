#include "tzero/quadfield.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tzero/characters.hpp"

namespace tzero {

std::string to_string(Splitting s) {
  switch (s) {
    case Splitting::split: return "split";
    case Splitting::inert: return "inert";
    case Splitting::ramified: return "ramified";
  }
  return "?";
}

std::string to_string(SqrtLift s) { return s == SqrtLift::least_residue ? "least" : "opposite"; }

std::vector<std::array<long, 3>> reduced_forms(long disc) {
  if (disc >= 0) throw std::invalid_argument("reduced_forms: discriminant must be negative");
  std::vector<std::array<long, 3>> forms;
  const long n = -disc;
  for (long a = 1; 3 * a * a <= n; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      if (((b - disc) % 2) != 0) continue;
      const long num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      const long c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
      forms.push_back({a, b, c});
    }
  }
  return forms;
}

QuadFieldData quad_field_data(long d) {
  if (d <= 0 || !is_squarefree(d)) throw std::invalid_argument("quad_field_data: d must be squarefree and positive");
  QuadFieldData f;
  f.d = d;
  f.disc = (d % 4 == 3) ? -d : -4 * d;
  f.class_number = static_cast<long>(reduced_forms(f.disc).size());
  f.roots_of_unity = f.disc == -3 ? 6 : (f.disc == -4 ? 4 : 2);
  return f;
}

QuadFieldData quad_field_from_discriminant(long disc) {
  if (disc >= 0 || !is_fundamental_discriminant(disc))
    throw std::invalid_argument("expected a negative fundamental discriminant");
  return quad_field_data(disc % 4 == 0 ? -disc / 4 : -disc);
}

Splitting split_behavior(const QuadFieldData& field, unsigned long p) {
  const int k = kronecker_symbol(field.disc, static_cast<long>(p));
  if (k == 0) return Splitting::ramified;
  return k == 1 ? Splitting::split : Splitting::inert;
}

namespace {

long exact_sqrt(__int128 n) {
  if (n < 0) return -1;
  long r = static_cast<long>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return static_cast<__int128>(r) * r == n ? r : -1;
}

}  // namespace

std::vector<NormRepresentation> norm_representations(const QuadFieldData& field, unsigned long p) {
  __int128 target = 4;
  for (long i = 0; i < field.class_number; ++i) {
    target *= p;
    if (target > (static_cast<__int128>(1) << 100))
      throw std::overflow_error("norm_representations: p^h too large for the norm search");
  }
  const long n = -field.disc;
  const long lp = static_cast<long>(p);
  std::vector<NormRepresentation> reps;
  for (long y = 1; static_cast<__int128>(n) * y * y <= target; ++y) {
    const long x = exact_sqrt(target - static_cast<__int128>(n) * y * y);
    if (x < 0) continue;
    if (((x - y * field.disc) % 2) != 0) continue;
    if (x % lp == 0 && y % lp == 0) continue;
    if (x != 0) reps.push_back({-x, y});
    reps.push_back({x, y});
  }
  return reps;
}

PadicNumber sqrt_discriminant(const QuadFieldData& field, const PadicContext& ctx, SqrtLift lift) {
  const unsigned long p = ctx.prime();
  const long lp = static_cast<long>(p);
  const long dmod = ((field.disc % lp) + lp) % lp;
  long root = -1;
  for (long r = 1; r < lp; ++r) {
    if ((r * r) % lp == dmod) {
      root = r;
      break;
    }
  }
  if (root < 0) throw std::domain_error("sqrt_discriminant: D is not a nonzero square mod p");
  const PadicNumber d = PadicNumber::from_integer(ctx, field.disc);
  const PadicNumber two = PadicNumber::from_integer(ctx, 2);
  PadicNumber s = PadicNumber::from_integer(ctx, root);
  for (int i = 0; i < 64; ++i) {
    PadicNumber next = s - (s * s - d) / (two * s);
    if ((next - s).is_zero()) break;
    s = next;
  }
  return lift == SqrtLift::least_residue ? s : -s;
}

SplitPrimeData pi_bar_from(const QuadFieldData& field, const PadicContext& ctx,
                           const NormRepresentation& rep, SqrtLift lift) {
  if (split_behavior(field, ctx.prime()) != Splitting::split)
    throw std::domain_error("pi_bar: p does not split in F");
  const PadicNumber s = sqrt_discriminant(field, ctx, lift);
  const PadicNumber two = PadicNumber::from_integer(ctx, 2);
  const PadicNumber x = PadicNumber::from_integer(ctx, rep.x);
  const PadicNumber y = PadicNumber::from_integer(ctx, rep.y);
  const PadicNumber plus = (x + y * s) / two;
  const PadicNumber minus = (x - y * s) / two;
  if (plus.is_unit() == minus.is_unit())
    throw std::logic_error("pi_bar: expected exactly one conjugate to be a p-adic unit");
  const bool minus_is_unit = minus.is_unit();
  const NormRepresentation conj{rep.x, -rep.y};
  const PadicNumber& unit_image = minus_is_unit ? minus : plus;
  return SplitPrimeData{ctx.prime(),
                        lift,
                        s,
                        minus_is_unit ? rep : conj,
                        minus_is_unit ? conj : rep,
                        minus_is_unit ? plus : minus,
                        unit_image,
                        iwasawa_log(unit_image)};
}

SplitPrimeData pi_bar(const QuadFieldData& field, const PadicContext& ctx, SqrtLift lift) {
  if (split_behavior(field, ctx.prime()) != Splitting::split)
    throw std::domain_error("pi_bar: p does not split in F");
  auto reps = norm_representations(field, ctx.prime());
  if (reps.empty())
    throw std::logic_error("pi_bar: no primitive solution of the norm equation found");
  return pi_bar_from(field, ctx, reps.front(), lift);
}

}  // namespace tzero
