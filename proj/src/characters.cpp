#include "tzero/characters.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

namespace tzero {

int kronecker_symbol(long d, long n) {
  if (n <= 0) throw std::invalid_argument("kronecker_symbol: n must be positive");
  mpz_class nn(n);
  return mpz_si_kronecker(d, nn.get_mpz_t());
}

bool is_squarefree(long n) {
  if (n == 0) return false;
  unsigned long m = static_cast<unsigned long>(n < 0 ? -n : n);
  for (unsigned long q = 2; q * q <= m; ++q) {
    if (m % (q * q) == 0) return false;
    if (m % q == 0) m /= q;
  }
  return true;
}

bool is_fundamental_discriminant(long d) {
  if (d == 0 || d == 1) return false;
  long r = ((d % 4) + 4) % 4;
  if (r == 1) return is_squarefree(d);
  if (r != 0) return false;
  long m = d / 4;
  long mr = ((m % 4) + 4) % 4;
  return (mr == 2 || mr == 3) && is_squarefree(m);
}

namespace {

bool is_one(const PadicNumber& x) { return !x.is_zero() && (x - PadicNumber::one(x.context())).is_zero(); }
bool is_minus_one(const PadicNumber& x) {
  return !x.is_zero() && (x + PadicNumber::one(x.context())).is_zero();
}

unsigned long reduce(long a, unsigned long f) {
  long m = static_cast<long>(f);
  return static_cast<unsigned long>(((a % m) + m) % m);
}

}  // namespace

DirichletCharacter make_character(const PadicContext& ctx, unsigned long modulus,
                                  std::vector<PadicNumber> values, std::optional<long> kron,
                                  std::optional<long> omega_exp) {
  DirichletCharacter chi(ctx, modulus, std::move(values));
  chi.kron_ = kron;
  chi.omega_exp_ = omega_exp;
  return chi;
}

DirichletCharacter::DirichletCharacter(const PadicContext& ctx, unsigned long modulus,
                                       std::vector<PadicNumber> values)
    : ctx_(ctx), modulus_(modulus), values_(std::move(values)) {
  rational_ = true;
  for (const auto& v : values_)
    if (!v.is_exact_zero() && !is_one(v) && !is_minus_one(v)) rational_ = false;

  parity_ = modulus_ == 1 ? 1 : (is_one(values_[modulus_ - 1]) ? 1 : -1);

  conductor_ = modulus_;
  for (unsigned long d = 1; d < modulus_; ++d) {
    if (modulus_ % d != 0) continue;
    bool trivial_on_kernel = true;
    for (unsigned long a = 1 + d; a < modulus_ && trivial_on_kernel; a += d) {
      if (std::gcd(a, modulus_) != 1) continue;
      if (!is_one(values_[a])) trivial_on_kernel = false;
    }
    if (trivial_on_kernel) {
      conductor_ = d;
      break;
    }
  }
}

const PadicNumber& DirichletCharacter::operator()(long a) const { return values_[reduce(a, modulus_)]; }

int DirichletCharacter::sign_at(long a) const {
  if (!rational_) throw std::logic_error("sign_at: character is not rational-valued");
  const PadicNumber& v = (*this)(a);
  if (v.is_exact_zero()) return 0;
  return is_one(v) ? 1 : -1;
}

std::string DirichletCharacter::label() const {
  std::ostringstream os;
  if (rational_) {
    if (conductor_ == 1)
      os << "trivial";
    else
      os << "kron(" << parity_ * static_cast<long>(conductor_) << ")";
    if (conductor_ != modulus_) os << "@mod" << modulus_;
    return os.str();
  }
  if (kron_ && omega_exp_) {
    if (*kron_ != 1) os << "kron(" << *kron_ << ")*";
    os << "omega^" << *omega_exp_;
  } else {
    os << "char(mod " << modulus_ << ", cond " << conductor_ << ")";
  }
  return os.str();
}

DirichletCharacter DirichletCharacter::primitive() const {
  if (conductor_ == modulus_) return *this;
  const unsigned long c = conductor_;
  std::vector<PadicNumber> vals(c, PadicNumber(ctx_));
  for (unsigned long b = 0; b < c; ++b) {
    if (std::gcd(b, c) != 1) continue;
    unsigned long a = b;
    while (std::gcd(a, modulus_) != 1) a += c;
    vals[b] = values_[a % modulus_];
  }
  if (c == 1) vals[0] = PadicNumber::one(ctx_);
  return make_character(ctx_, c, std::move(vals), kron_, omega_exp_);
}

DirichletCharacter DirichletCharacter::inverse() const {
  std::vector<PadicNumber> vals = values_;
  for (auto& v : vals)
    if (!v.is_exact_zero()) v = v.inverse();
  std::optional<long> e;
  if (omega_exp_) {
    long pm1 = static_cast<long>(ctx_.prime() - 1);
    e = ((-*omega_exp_) % pm1 + pm1) % pm1;
  }
  return make_character(ctx_, modulus_, std::move(vals), kron_, e);
}

DirichletCharacter DirichletCharacter::rebind(const PadicContext& ctx) const {
  if (!ctx.same_prime(ctx_)) throw std::invalid_argument("rebind across different primes");
  if (kron_ && omega_exp_) {
    DirichletCharacter base = *kron_ == 1 ? trivial_character(ctx) : char_from_kronecker(*kron_, ctx);
    return char_product(base, char_teichmuller_power(*omega_exp_, ctx));
  }
  if (rational_) {
    std::vector<PadicNumber> vals;
    vals.reserve(values_.size());
    for (unsigned long a = 0; a < modulus_; ++a)
      vals.push_back(PadicNumber::from_integer(ctx, modulus_ == 1 ? 1 : sign_at(static_cast<long>(a))));
    return make_character(ctx, modulus_, std::move(vals), kron_, omega_exp_);
  }
  throw std::logic_error("rebind: character has no recorded structure to rebuild from");
}

DirichletCharacter trivial_character(const PadicContext& ctx) {
  return make_character(ctx, 1, {PadicNumber::one(ctx)}, 1L, 0L);
}

DirichletCharacter char_from_kronecker(long d, const PadicContext& ctx) {
  if (!is_fundamental_discriminant(d))
    throw std::invalid_argument("char_from_kronecker: not a fundamental discriminant");
  const unsigned long f = static_cast<unsigned long>(d < 0 ? -d : d);
  std::vector<PadicNumber> vals;
  vals.reserve(f);
  for (unsigned long a = 0; a < f; ++a) {
    int s = a == 0 ? 0 : kronecker_symbol(d, static_cast<long>(a));
    vals.push_back(PadicNumber::from_integer(ctx, s));
  }
  return make_character(ctx, f, std::move(vals), d, 0L);
}

DirichletCharacter char_teichmuller_power(long i, const PadicContext& ctx) {
  const unsigned long p = ctx.prime();
  const long pm1 = static_cast<long>(p - 1);
  const long e = ((i % pm1) + pm1) % pm1;
  if (e == 0) return trivial_character(ctx);
  std::vector<PadicNumber> vals(p, PadicNumber(ctx));
  for (unsigned long a = 1; a < p; ++a) vals[a] = teichmuller(ctx, static_cast<long>(a)).pow(e);
  return make_character(ctx, p, std::move(vals), 1L, e);
}

DirichletCharacter char_product(const DirichletCharacter& a, const DirichletCharacter& b) {
  const PadicContext& ctx =
      a.context().precision() <= b.context().precision() ? a.context() : b.context();
  if (!a.context().same_prime(b.context()))
    throw std::invalid_argument("char_product: characters over different primes");
  const unsigned long l = std::lcm(a.modulus(), b.modulus());
  std::vector<PadicNumber> vals(l, PadicNumber(ctx));
  for (unsigned long x = 0; x < l; ++x) {
    const PadicNumber& va = a(static_cast<long>(x));
    const PadicNumber& vb = b(static_cast<long>(x));
    if (va.is_exact_zero() || vb.is_exact_zero()) continue;
    vals[x] = va * vb;
  }
  std::optional<long> kron, omega;
  if (a.kronecker_part() && b.kronecker_part() && a.teichmuller_exponent() &&
      b.teichmuller_exponent()) {
    const long ka = *a.kronecker_part(), kb = *b.kronecker_part();
    const long pm1 = static_cast<long>(ctx.prime() - 1);
    omega = (*a.teichmuller_exponent() + *b.teichmuller_exponent()) % pm1;
    if (ka == 1)
      kron = kb;
    else if (kb == 1)
      kron = ka;
    else if (ka == kb)
      kron = 1;
    else if (std::gcd(ka, kb) == 1)
      kron = ka * kb;
    else
      omega.reset();
  }
  if (l == 1) vals[0] = PadicNumber::one(ctx);
  return make_character(ctx, l, std::move(vals), kron, omega).primitive();
}

// ---------------------------------------------------------------------------
// Bernoulli numbers

mpq_class bernoulli_number(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_number: negative index");
  static std::mutex mu;
  static std::vector<mpq_class> table{mpq_class(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= n) {
    const int m = static_cast<int>(table.size());
    mpq_class s = 0;
    mpz_class binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      s += binom * table[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    mpq_class b = -s / (m + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[n];
}

namespace {

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Coefficient C(n,k) B_k f^(k-1) of S_{n-k} in B_{n,chi} = sum_k C(n,k) B_k f^(k-1) S_{n-k},
// where S_j = sum_{a=1}^{f} chi(a) a^j.
mpq_class bernoulli_weight(int n, int k, unsigned long f) {
  mpq_class w = binomial(n, k) * bernoulli_number(k);
  mpz_class fp;
  if (k >= 1) {
    mpz_ui_pow_ui(fp.get_mpz_t(), f, static_cast<unsigned long>(k - 1));
    w *= fp;
  } else {
    w /= f;
  }
  w.canonicalize();
  return w;
}

}  // namespace

mpq_class gen_bernoulli_rational(int n, const DirichletCharacter& chi) {
  if (n < 1) throw std::invalid_argument("gen_bernoulli: n must be positive");
  if (!chi.is_rational_valued())
    throw std::invalid_argument("gen_bernoulli_rational: character is not rational-valued");
  const DirichletCharacter psi = chi.primitive();
  const unsigned long f = psi.modulus();
  std::vector<mpz_class> sums(n + 1, mpz_class(0));
  for (unsigned long a = 1; a <= f; ++a) {
    const int s = f == 1 ? 1 : psi.sign_at(static_cast<long>(a));
    if (s == 0) continue;
    mpz_class pw = 1;
    for (int j = 0; j <= n; ++j) {
      sums[j] += s * pw;
      pw *= a;
    }
  }
  mpq_class b = 0;
  for (int k = 0; k <= n; ++k) b += bernoulli_weight(n, k, f) * sums[n - k];
  b.canonicalize();
  return b;
}

PadicNumber gen_bernoulli(int n, const DirichletCharacter& chi) {
  if (n < 1) throw std::invalid_argument("gen_bernoulli: n must be positive");
  const DirichletCharacter psi = chi.primitive();
  const PadicContext& ctx = psi.context();
  if (psi.is_rational_valued()) return PadicNumber::from_rational(ctx, gen_bernoulli_rational(n, psi));

  const unsigned long f = psi.modulus();
  int prec = ctx.precision();
  for (unsigned long a = 0; a < f; ++a) {
    const PadicNumber& v = psi(static_cast<long>(a));
    if (!v.is_exact_zero()) prec = std::min(prec, v.relative_precision());
  }
  const mpz_class mod = ctx.power(prec);
  std::vector<mpz_class> sums(n + 1, mpz_class(0));
  for (unsigned long a = 1; a <= f; ++a) {
    const PadicNumber& v = psi(static_cast<long>(a));
    if (v.is_exact_zero()) continue;
    mpz_class term = v.unit() % mod;
    for (int j = 0; j <= n; ++j) {
      sums[j] += term;
      term = term * a % mod;
    }
  }
  PadicNumber b(ctx);
  for (int k = 0; k <= n; ++k) {
    PadicNumber s = PadicNumber::from_integer(ctx, mpz_class(sums[n - k] % mod)).with_absolute_precision(prec);
    b += PadicNumber::from_rational(ctx, bernoulli_weight(n, k, f)) * s;
  }
  return b;
}

mpq_class dirichlet_L_nonpositive(int a, const DirichletCharacter& chi) {
  if (a > 0) throw std::invalid_argument("dirichlet_L_nonpositive: a must be <= 0");
  mpq_class v = -gen_bernoulli_rational(1 - a, chi) / (1 - a);
  v.canonicalize();
  return v;
}

}  // namespace tzero
