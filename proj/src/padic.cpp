#include "tzero/padic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tzero {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

int remove_p(mpz_class& n, unsigned long p) {
  if (n == 0) return PadicNumber::kInfinity;
  mpz_class pp(p);
  return static_cast<int>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

int valuation_of(const mpz_class& n, unsigned long p) {
  mpz_class m = n;
  return remove_p(m, p);
}

int valuation_of(long n, unsigned long p) { return valuation_of(mpz_class(n), p); }

namespace {

std::uint64_t saturating_power(unsigned long p, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p)
      return std::numeric_limits<std::uint64_t>::max();
    r *= p;
  }
  return r;
}

// floor(log_p(k)) for k >= 1; bounds ord_p(k).
int floor_log(unsigned long k, unsigned long p) {
  int e = 0;
  while (k >= p) {
    k /= p;
    ++e;
  }
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// PadicContext

PadicContext::PadicContext(unsigned long p, int precision)
    : p_(p), precision_(precision), gamma_ceiling_(saturating_power(p, 6)) {
  if (p < 3) throw std::invalid_argument("p-adic context requires an odd prime p >= 3");
  if (!is_prime(p)) throw std::invalid_argument("p-adic context requires p to be prime");
  if (precision < 1) throw std::invalid_argument("p-adic precision must be at least 1");
}

PadicContext PadicContext::with_gamma_cost_ceiling(std::uint64_t ceiling) const {
  PadicContext c = *this;
  c.gamma_ceiling_ = ceiling;
  return c;
}

PadicContext PadicContext::with_precision(int precision) const {
  if (precision < 1) throw std::invalid_argument("p-adic precision must be at least 1");
  PadicContext c = *this;
  c.precision_ = precision;
  return c;
}

mpz_class PadicContext::power(int k) const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p_, static_cast<unsigned long>(std::max(k, 0)));
  return r;
}

PadicContext make_context(unsigned long p, int precision) { return PadicContext(p, precision); }

// ---------------------------------------------------------------------------
// PadicNumber

PadicNumber::PadicNumber(const PadicContext& ctx)
    : ctx_(ctx), valuation_(kInfinity), unit_(0), relprec_(0) {}

PadicNumber::PadicNumber(const PadicContext& ctx, int valuation, mpz_class unit, int relprec)
    : ctx_(ctx), valuation_(valuation), unit_(std::move(unit)), relprec_(relprec) {}

PadicNumber PadicNumber::normalized(const PadicContext& ctx, int valuation, mpz_class value,
                                    int absolute_precision) {
  if (valuation >= absolute_precision) return big_oh(ctx, absolute_precision);
  mpz_class mod = ctx.power(absolute_precision - valuation);
  value %= mod;
  if (value < 0) value += mod;
  if (value == 0) return big_oh(ctx, absolute_precision);
  int w = valuation + remove_p(value, ctx.prime());
  int r = std::min(absolute_precision - w, ctx.precision());
  if (r <= 0) return big_oh(ctx, absolute_precision);
  value %= ctx.power(r);
  return PadicNumber(ctx, w, std::move(value), r);
}

PadicNumber PadicNumber::from_integer(const PadicContext& ctx, const mpz_class& n) {
  if (n == 0) return PadicNumber(ctx);
  mpz_class u = n;
  int v = remove_p(u, ctx.prime());
  mpz_class mod = ctx.power(ctx.precision());
  u %= mod;
  if (u < 0) u += mod;
  return PadicNumber(ctx, v, std::move(u), ctx.precision());
}

PadicNumber PadicNumber::from_rational(const PadicContext& ctx, const mpq_class& q) {
  if (q == 0) return PadicNumber(ctx);
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  int v = remove_p(num, ctx.prime()) - remove_p(den, ctx.prime());
  mpz_class mod = ctx.power(ctx.precision());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  mpz_class u = num * inv % mod;
  if (u < 0) u += mod;
  return PadicNumber(ctx, v, std::move(u), ctx.precision());
}

PadicNumber PadicNumber::from_parts(const PadicContext& ctx, int valuation, const mpz_class& unit,
                                    int relative_precision) {
  if (relative_precision <= 0) return big_oh(ctx, valuation);
  int r = std::min(relative_precision, ctx.precision());
  mpz_class mod = ctx.power(r);
  mpz_class u = unit % mod;
  if (u < 0) u += mod;
  if (u % ctx.prime() == 0)
    throw std::invalid_argument("PadicNumber::from_parts: unit part divisible by p");
  return PadicNumber(ctx, valuation, std::move(u), r);
}

PadicNumber PadicNumber::big_oh(const PadicContext& ctx, int absolute_precision) {
  return PadicNumber(ctx, absolute_precision, mpz_class(0), 0);
}

int PadicNumber::absolute_precision() const {
  if (is_exact_zero()) return kInfinity;
  return valuation_ + relprec_;
}

mpz_class PadicNumber::residue(int k) const {
  if (k <= 0) return 0;
  if (k > absolute_precision())
    throw PrecisionError("residue requested beyond known precision");
  if (is_exact_zero() || valuation_ >= k) return 0;
  if (valuation_ < 0) throw std::domain_error("residue of a non-integral p-adic number");
  mpz_class mod = ctx_.power(k);
  mpz_class r = unit_ * ctx_.power(valuation_) % mod;
  return r;
}

std::vector<unsigned long> PadicNumber::digits() const {
  std::vector<unsigned long> out;
  out.reserve(static_cast<std::size_t>(relprec_));
  mpz_class u = unit_;
  for (int i = 0; i < relprec_; ++i) {
    out.push_back(mpz_fdiv_q_ui(u.get_mpz_t(), u.get_mpz_t(), ctx_.prime()));
  }
  return out;
}

PadicNumber PadicNumber::with_absolute_precision(int k) const {
  if (k >= absolute_precision()) return *this;
  if (k <= valuation_) return big_oh(ctx_, k);
  int r = k - valuation_;
  return PadicNumber(ctx_, valuation_, unit_ % ctx_.power(r), r);
}

PadicNumber PadicNumber::rebind(const PadicContext& ctx) const {
  if (!ctx.same_prime(ctx_)) throw std::invalid_argument("rebind across different primes");
  if (relprec_ <= ctx.precision()) return PadicNumber(ctx, valuation_, unit_, relprec_);
  int r = ctx.precision();
  return PadicNumber(ctx, valuation_, unit_ % ctx.power(r), r);
}

const PadicContext& PadicNumber::narrower(const PadicNumber& rhs) const {
  if (!ctx_.same_prime(rhs.ctx_))
    throw std::invalid_argument("arithmetic between p-adic numbers for different primes");
  return ctx_.precision() <= rhs.ctx_.precision() ? ctx_ : rhs.ctx_;
}

PadicNumber PadicNumber::operator-() const {
  if (relprec_ == 0) return *this;
  mpz_class mod = ctx_.power(relprec_);
  return PadicNumber(ctx_, valuation_, mod - unit_, relprec_);
}

PadicNumber& PadicNumber::operator+=(const PadicNumber& rhs) {
  const PadicContext ctx = narrower(rhs);
  if (rhs.is_exact_zero()) {
    *this = rebind(ctx);
    return *this;
  }
  if (is_exact_zero()) {
    *this = rhs.rebind(ctx);
    return *this;
  }
  int a = std::min(absolute_precision(), rhs.absolute_precision());
  int v = std::min(valuation_, rhs.valuation_);
  if (v >= a) {
    *this = big_oh(ctx, a);
    return *this;
  }
  mpz_class s = 0;
  if (valuation_ < a) s += unit_ * ctx.power(valuation_ - v);
  if (rhs.valuation_ < a) s += rhs.unit_ * ctx.power(rhs.valuation_ - v);
  *this = normalized(ctx, v, std::move(s), a);
  return *this;
}

PadicNumber& PadicNumber::operator-=(const PadicNumber& rhs) { return *this += -rhs; }

PadicNumber& PadicNumber::operator*=(const PadicNumber& rhs) {
  const PadicContext ctx = narrower(rhs);
  if (is_exact_zero() || rhs.is_exact_zero()) {
    *this = PadicNumber(ctx);
    return *this;
  }
  int v = valuation_ + rhs.valuation_;
  int r = std::min(relprec_, rhs.relprec_);
  if (r == 0) {
    *this = big_oh(ctx, v);
    return *this;
  }
  mpz_class u = unit_ * rhs.unit_ % ctx.power(r);
  *this = PadicNumber(ctx, v, std::move(u), r);
  return *this;
}

PadicNumber& PadicNumber::operator/=(const PadicNumber& rhs) {
  const PadicContext ctx = narrower(rhs);
  if (rhs.is_zero()) throw std::domain_error("p-adic division by zero");
  if (is_exact_zero()) {
    *this = PadicNumber(ctx);
    return *this;
  }
  int v = valuation_ - rhs.valuation_;
  int r = std::min(relprec_, rhs.relprec_);
  if (r == 0) {
    *this = big_oh(ctx, v);
    return *this;
  }
  mpz_class mod = ctx.power(r);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), rhs.unit_.get_mpz_t(), mod.get_mpz_t());
  mpz_class u = unit_ * inv % mod;
  *this = PadicNumber(ctx, v, std::move(u), r);
  return *this;
}

PadicNumber PadicNumber::inverse() const { return one(ctx_) / *this; }

PadicNumber PadicNumber::pow(long e) const {
  if (e == 0) return one(ctx_);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("negative power of zero");
    if (is_exact_zero()) return *this;
    return big_oh(ctx_, static_cast<int>(valuation_ * e));
  }
  mpz_class mod = ctx_.power(relprec_);
  mpz_class u;
  mpz_class ee(e);
  mpz_powm(u.get_mpz_t(), unit_.get_mpz_t(), ee.get_mpz_t(), mod.get_mpz_t());
  return PadicNumber(ctx_, static_cast<int>(valuation_ * e), std::move(u), relprec_);
}

bool PadicNumber::equals(const PadicNumber& rhs) const {
  if (is_exact_zero() && rhs.is_exact_zero()) return ctx_.same_prime(rhs.ctx_);
  return (*this - rhs).is_zero();
}

std::string PadicNumber::to_string() const {
  std::ostringstream os;
  const unsigned long p = ctx_.prime();
  if (is_exact_zero()) return "0";
  auto digs = digits();
  bool first = true;
  for (std::size_t i = 0; i < digs.size(); ++i) {
    if (digs[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    int e = valuation_ + static_cast<int>(i);
    if (e == 0) {
      os << digs[i];
    } else {
      if (digs[i] != 1) os << digs[i] << "*";
      os << p;
      if (e != 1) os << "^" << e;
    }
  }
  if (!first) os << " + ";
  os << "O(" << p << "^" << absolute_precision() << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PadicNumber& x) { return os << x.to_string(); }

int agreement_valuation(const PadicNumber& a, const PadicNumber& b) { return (a - b).valuation(); }

// ---------------------------------------------------------------------------
// Special functions

PadicNumber teichmuller(const PadicNumber& a) {
  if (!a.is_unit()) throw std::domain_error("teichmuller: input must be a p-adic unit");
  const PadicContext& ctx = a.context();
  const int n = ctx.precision();
  mpz_class mod = ctx.power(n);
  mpz_class x = a.unit() % ctx.prime();
  mpz_class p(ctx.prime());
  // Each step x -> x^p fixes one more digit of the root of unity.
  for (int i = 0; i < n; ++i) mpz_powm(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t(), mod.get_mpz_t());
  return PadicNumber::from_parts(ctx, 0, x, n);
}

PadicNumber teichmuller(const PadicContext& ctx, long a) {
  return teichmuller(PadicNumber::from_integer(ctx, a));
}

PadicNumber iwasawa_log(const PadicNumber& x) {
  if (x.is_zero()) throw std::domain_error("iwasawa_log: zero input");
  const PadicContext& ctx = x.context();
  const unsigned long p = ctx.prime();
  // log_p(p^v u) = log_p(u) = log(u^(p-1)) / (p-1), and u^(p-1) lies in 1 + pZ_p.
  PadicNumber u = PadicNumber::from_parts(ctx, 0, x.unit(), x.relative_precision());
  PadicNumber z = u.pow(static_cast<long>(p - 1)) - PadicNumber::one(ctx);
  const int target = z.absolute_precision();
  if (z.is_zero()) return PadicNumber::big_oh(ctx, target);
  const int vz = z.valuation();

  PadicNumber sum(ctx);
  PadicNumber power = z;
  for (unsigned long k = 1;; ++k) {
    if (k > 1) power *= z;
    PadicNumber term = power / PadicNumber::from_integer(ctx, static_cast<long>(k));
    if (k % 2 == 0)
      sum -= term;
    else
      sum += term;
    // Remaining terms z^j/j have valuation >= j*vz - floor(log_p j), non-decreasing in j.
    const unsigned long next = k + 1;
    if (static_cast<long>(next) * vz - floor_log(next, p) >= target) break;
  }
  sum = sum.with_absolute_precision(target);
  return sum / PadicNumber::from_integer(ctx, static_cast<long>(p - 1));
}

PadicNumber padic_exp(const PadicNumber& x) {
  const PadicContext& ctx = x.context();
  if (x.is_exact_zero()) return PadicNumber::one(ctx);
  if (x.valuation() < 1) throw std::domain_error("padic_exp: argument must lie in pZ_p");
  const unsigned long p = ctx.prime();
  const int target = std::min(x.absolute_precision(), ctx.precision());
  const int vx = x.valuation();

  PadicNumber sum = PadicNumber::one(ctx);
  PadicNumber term = PadicNumber::one(ctx);
  for (unsigned long k = 1;; ++k) {
    term = term * x / PadicNumber::from_integer(ctx, static_cast<long>(k));
    sum += term;
    // ord_p(x^j / j!) >= j*vx - (j-1)/(p-1), increasing in j.
    const double next = static_cast<double>(k + 1);
    if (next * vx - (next - 1.0) / static_cast<double>(p - 1) >= target) break;
  }
  return sum.with_absolute_precision(target);
}

namespace {

// (-1)^n prod_{0<j<n, p∤j} j mod p^d.
mpz_class gamma_product(unsigned long p, const mpz_class& n, int d) {
  mpz_class mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), p, static_cast<unsigned long>(d));
  mpz_class r = 1;
  if (mod.fits_ulong_p() && mod.get_ui() < (1ULL << 62)) {
    const unsigned __int128 m = mod.get_ui();
    unsigned __int128 acc = 1;
    const unsigned long limit = n.get_ui();
    for (unsigned long j = 1; j < limit; ++j) {
      if (j % p == 0) continue;
      acc = acc * (j % static_cast<unsigned long>(m)) % m;
    }
    r = static_cast<unsigned long>(acc);
  } else {
    for (mpz_class j = 1; j < n; ++j) {
      if (mpz_divisible_ui_p(j.get_mpz_t(), p)) continue;
      r = r * j % mod;
    }
  }
  if (mpz_odd_p(n.get_mpz_t())) r = (mod - r) % mod;
  return r;
}

}  // namespace

PadicNumber morita_gamma(const PadicNumber& x, std::optional<int> digits) {
  const PadicContext& ctx = x.context();
  const unsigned long p = ctx.prime();
  if (!x.is_zero() && x.valuation() < 0) throw std::domain_error("morita_gamma: input not in Z_p");

  int feasible = 0;
  while (saturating_power(p, feasible + 1) <= ctx.gamma_cost_ceiling()) ++feasible;

  int d;
  if (digits) {
    d = *digits;
    if (d < 1) throw std::invalid_argument("morita_gamma: precision must be positive");
    if (d > feasible)
      throw PrecisionError("morita_gamma: requested precision exceeds the configured cost ceiling");
    if (d > x.absolute_precision())
      throw PrecisionError("morita_gamma: requested precision exceeds input precision");
  } else {
    d = std::min({x.absolute_precision(), ctx.precision(), feasible});
    if (d < 1) throw PrecisionError("morita_gamma: no precision available under the cost ceiling");
  }
  mpz_class n = x.residue(d);
  return PadicNumber::from_parts(ctx, 0, gamma_product(p, n, d), d);
}

PadicNumber morita_gamma_integer(const PadicContext& ctx, unsigned long n) {
  if (n > ctx.gamma_cost_ceiling())
    throw PrecisionError("morita_gamma_integer: argument exceeds the configured cost ceiling");
  return PadicNumber::from_parts(ctx, 0, gamma_product(ctx.prime(), mpz_class(n), ctx.precision()),
                                 ctx.precision());
}

}  // namespace tzero
