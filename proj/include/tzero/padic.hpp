#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tzero {

/// Raised when a computation cannot deliver the precision it was asked for.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(unsigned long n);

/// p-adic valuation of a nonzero integer; strips the p-part from `n` in place.
int remove_p(mpz_class& n, unsigned long p);
int valuation_of(const mpz_class& n, unsigned long p);
int valuation_of(long n, unsigned long p);

/// Odd prime p plus the relative-precision cap N shared by every value built
/// against it.
class PadicContext {
 public:
  PadicContext(unsigned long p, int precision);

  unsigned long prime() const { return p_; }
  int precision() const { return precision_; }

  /// Upper bound on multiplications spent by morita_gamma. Defaults to p^6.
  std::uint64_t gamma_cost_ceiling() const { return gamma_ceiling_; }
  PadicContext with_gamma_cost_ceiling(std::uint64_t ceiling) const;
  PadicContext with_precision(int precision) const;

  mpz_class power(int k) const;

  bool same_prime(const PadicContext& other) const { return p_ == other.p_; }

 private:
  unsigned long p_;
  int precision_;
  std::uint64_t gamma_ceiling_;
};

PadicContext make_context(unsigned long p, int precision = 32);

/// An element of Q_p known to finite precision: p^v * u + O(p^(v + r)), with u a
/// unit residue mod p^r. r == 0 means the value is indistinguishable from zero
/// and only O(p^v) is known. The single exact value is zero.
class PadicNumber {
 public:
  static constexpr int kInfinity = std::numeric_limits<int>::max();

  /// Exact zero.
  explicit PadicNumber(const PadicContext& ctx);

  static PadicNumber zero(const PadicContext& ctx) { return PadicNumber(ctx); }
  static PadicNumber one(const PadicContext& ctx) { return from_integer(ctx, 1); }
  static PadicNumber from_integer(const PadicContext& ctx, const mpz_class& n);
  static PadicNumber from_integer(const PadicContext& ctx, long n) {
    return from_integer(ctx, mpz_class(n));
  }
  static PadicNumber from_rational(const PadicContext& ctx, const mpq_class& q);
  /// p^valuation * unit + O(p^(valuation + relative_precision)). `unit` is reduced
  /// and must be prime to p when relative_precision > 0.
  static PadicNumber from_parts(const PadicContext& ctx, int valuation, const mpz_class& unit,
                                int relative_precision);
  /// O(p^absolute_precision).
  static PadicNumber big_oh(const PadicContext& ctx, int absolute_precision);

  const PadicContext& context() const { return ctx_; }
  unsigned long prime() const { return ctx_.prime(); }

  bool is_exact_zero() const { return valuation_ == kInfinity; }
  /// True when the value cannot be told apart from zero at its precision.
  bool is_zero() const { return relprec_ == 0; }
  bool is_unit() const { return !is_zero() && valuation_ == 0; }

  /// kInfinity for exact zero; for O(p^k) this is k.
  int valuation() const { return valuation_; }
  int relative_precision() const { return relprec_; }
  int absolute_precision() const;
  const mpz_class& unit() const { return unit_; }

  /// Value mod p^k as an integer in [0, p^k). Requires valuation >= 0 and k no
  /// larger than the absolute precision.
  mpz_class residue(int k) const;
  /// Base-p digits of the unit part, least significant first (relative_precision of them).
  std::vector<unsigned long> digits() const;

  PadicNumber with_absolute_precision(int k) const;
  /// Same value under a context with the same prime; relative precision is capped
  /// by the new context.
  PadicNumber rebind(const PadicContext& ctx) const;

  PadicNumber operator-() const;
  PadicNumber& operator+=(const PadicNumber& rhs);
  PadicNumber& operator-=(const PadicNumber& rhs);
  PadicNumber& operator*=(const PadicNumber& rhs);
  PadicNumber& operator/=(const PadicNumber& rhs);

  PadicNumber inverse() const;
  PadicNumber pow(long e) const;

  /// Equality at the shared precision of the two operands.
  bool equals(const PadicNumber& rhs) const;

  std::string to_string() const;

 private:
  PadicNumber(const PadicContext& ctx, int valuation, mpz_class unit, int relprec);
  static PadicNumber normalized(const PadicContext& ctx, int valuation, mpz_class value,
                                int absolute_precision);
  const PadicContext& narrower(const PadicNumber& rhs) const;

  PadicContext ctx_;
  int valuation_;
  mpz_class unit_;
  int relprec_;
};

inline PadicNumber operator+(PadicNumber a, const PadicNumber& b) { return a += b; }
inline PadicNumber operator-(PadicNumber a, const PadicNumber& b) { return a -= b; }
inline PadicNumber operator*(PadicNumber a, const PadicNumber& b) { return a *= b; }
inline PadicNumber operator/(PadicNumber a, const PadicNumber& b) { return a /= b; }
inline bool operator==(const PadicNumber& a, const PadicNumber& b) { return a.equals(b); }

std::ostream& operator<<(std::ostream& os, const PadicNumber& x);

/// Valuation of a - b; the absolute precision of the difference when the two
/// agree at their shared precision.
int agreement_valuation(const PadicNumber& a, const PadicNumber& b);

/// Teichmuller representative: the (p-1)-st root of unity congruent to a unit `a` mod p.
PadicNumber teichmuller(const PadicNumber& a);
PadicNumber teichmuller(const PadicContext& ctx, long a);

/// Iwasawa branch of log_p (log_p(p) = 0, roots of unity map to 0).
PadicNumber iwasawa_log(const PadicNumber& x);

/// exp_p on pZ_p.
PadicNumber padic_exp(const PadicNumber& x);

/// Morita's Gamma function on Z_p. `digits` is the requested absolute precision;
/// without it the largest precision allowed by the input and the cost ceiling is used.
PadicNumber morita_gamma(const PadicNumber& x, std::optional<int> digits = std::nullopt);
/// Gamma_p(n) for a non-negative integer n, computed exactly from the product formula.
PadicNumber morita_gamma_integer(const PadicContext& ctx, unsigned long n);

}  // namespace tzero
