#include "tzero/kl_lfunction.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

namespace tzero {

PadicNumber kl_value(int n, const DirichletCharacter& chi) {
  if (n < 1) throw std::invalid_argument("kl_value: n must be positive");
  if (!chi.is_even()) throw std::domain_error("kl_value: branch character must be even");
  const PadicContext& ctx = chi.context();
  const DirichletCharacter psi = char_product(chi, char_teichmuller_power(-n, ctx));
  const PadicNumber b = gen_bernoulli(n, psi);
  const PadicNumber euler = PadicNumber::one(ctx) - psi(static_cast<long>(ctx.prime())) *
                                                         PadicNumber::from_integer(ctx, ctx.power(n - 1));
  return -(euler * b) / PadicNumber::from_integer(ctx, n);
}

PadicNumber IwasawaInterpolation::evaluate(const PadicNumber& t) const {
  if (t.valuation() < 1) throw std::domain_error("IwasawaInterpolation: T must lie in pZ_p");
  const int j = node_count();
  PadicNumber q = differences[j - 1];
  long remainder = 0;
  for (int k = 0; k < j; ++k) remainder += (t - nodes[k]).valuation();
  for (int k = j - 2; k >= 0; --k) q = differences[k] + (t - nodes[k]) * q;
  if (remainder < q.absolute_precision()) q = q.with_absolute_precision(static_cast<int>(remainder));
  return q;
}

IwasawaInterpolation interpolate_kl(const DirichletCharacter& chi, int node_count) {
  if (node_count < 1) throw std::invalid_argument("interpolate_kl: need at least one node");
  if (!chi.is_even()) throw std::domain_error("interpolate_kl: branch character must be even");
  const PadicContext& ctx = chi.context();
  const PadicNumber u = PadicNumber::from_integer(ctx, static_cast<long>(ctx.prime()) + 1);
  const PadicNumber uinv = u.inverse();

  std::vector<PadicNumber> nodes;
  nodes.reserve(node_count);
  PadicNumber x = PadicNumber::one(ctx);
  for (int n = 1; n <= node_count; ++n) {
    nodes.push_back(x - PadicNumber::one(ctx));
    x *= uinv;
  }

  std::vector<std::optional<PadicNumber>> values(node_count);
  std::vector<std::exception_ptr> errors;
  const unsigned workers =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(node_count)));
  errors.resize(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int k = static_cast<int>(w); k < node_count; k += static_cast<int>(workers))
            values[k] = kl_value(k + 1, chi);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<PadicNumber> d;
  d.reserve(node_count);
  for (auto& v : values) d.push_back(*v);
  for (int level = 1; level < node_count; ++level)
    for (int k = node_count - 1; k >= level; --k) d[k] = (d[k] - d[k - 1]) / (nodes[k] - nodes[k - level]);
  return IwasawaInterpolation{chi, std::move(nodes), std::move(d)};
}

namespace {

void check_theta(const DirichletCharacter& theta) {
  if (!theta.is_rational_valued() || !theta.is_odd() || theta.is_trivial())
    throw std::invalid_argument("branch: theta must be an odd quadratic character");
  if (theta.conductor() % theta.context().prime() == 0)
    throw std::invalid_argument("branch: theta must have conductor prime to p");
}

void check_branch(int i, unsigned long p) {
  if (i < 0 || static_cast<unsigned long>(i) >= p - 1)
    throw std::invalid_argument("branch: index must lie in [0, p-2]");
}

int start_precision(int target, int nodes, unsigned long p) {
  return target + nodes + nodes / static_cast<int>(p - 1) + 8;
}

int min_absolute_precision(const std::vector<PadicNumber>& xs) {
  int m = PadicNumber::kInfinity;
  for (const auto& x : xs) m = std::min(m, x.absolute_precision());
  return m;
}

using Series = std::vector<PadicNumber>;

Series series_mul(const Series& a, const Series& b, const PadicContext& ctx) {
  const std::size_t n = a.size();
  Series out(n, PadicNumber::zero(ctx));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Coefficients in h of f(T(offset + sign * (s0 + h))), f given in Newton form.
Series compose(const IwasawaInterpolation& interp, long a, int sign, int order, const PadicContext& ctx) {
  const unsigned long p = ctx.prime();
  const PadicNumber u = PadicNumber::from_integer(ctx, static_cast<long>(p) + 1);
  const PadicNumber ua = u.pow(a);
  const PadicNumber log_u = iwasawa_log(u) * PadicNumber::from_integer(ctx, sign);
  Series g(order, PadicNumber::zero(ctx));
  g[0] = ua - PadicNumber::one(ctx);
  PadicNumber term = ua;
  for (int r = 1; r < order; ++r) {
    term = term * log_u / PadicNumber::from_integer(ctx, r);
    g[r] = term;
  }
  const int j = interp.node_count();
  Series q(order, PadicNumber::zero(ctx));
  q[0] = interp.differences[j - 1];
  for (int k = j - 2; k >= 0; --k) {
    Series shifted = g;
    shifted[0] -= interp.nodes[k];
    q = series_mul(shifted, q, ctx);
    q[0] += interp.differences[k];
  }
  return q;
}

}  // namespace

BranchNormalization branch_normalization(int i, const DirichletCharacter& theta) {
  check_branch(i, theta.context().prime());
  const PadicContext& ctx = theta.context();
  if (i % 2 == 0) return BranchNormalization{char_product(theta, char_teichmuller_power(1 - i, ctx)), 0, 1};
  return BranchNormalization{char_product(theta.inverse(), char_teichmuller_power(i, ctx)), 1, -1};
}

int BranchSeries::tail_valuation(int vh) const {
  const long p = static_cast<long>(theta.context().prime());
  const long t = order();
  const long bound = (t * (p - 2) + (p - 2)) / (p - 1) + t * vh;
  return static_cast<int>(std::min<long>(bound, PadicNumber::kInfinity - 1));
}

PadicNumber BranchSeries::evaluate(const PadicNumber& s) const {
  const PadicContext& ctx = coefficients.front().context();
  const PadicNumber h = s.rebind(ctx) - PadicNumber::from_integer(ctx, s0);
  if (h.is_exact_zero()) return coefficients.front();
  if (h.valuation() < 0) throw std::domain_error("BranchSeries: s must lie in Z_p");
  PadicNumber sum = coefficients.back();
  for (int t = order() - 2; t >= 0; --t) sum = coefficients[t] + h * sum;
  const int tail = tail_valuation(h.valuation());
  if (tail < sum.absolute_precision()) sum = sum.with_absolute_precision(tail);
  return sum;
}

BranchSeries branch_series(int i, const DirichletCharacter& theta, long s0, int order, const PadicContext& ctx,
                           const BranchOptions& options) {
  check_theta(theta);
  if (!theta.context().same_prime(ctx)) throw std::invalid_argument("branch_series: prime mismatch");
  check_branch(i, ctx.prime());
  if (order < 1) throw std::invalid_argument("branch_series: order must be positive");
  const int target = ctx.precision();
  const int j = options.nodes.value_or(target + order);
  if (j < target + order)
    throw PrecisionError("branch_series: node count below N + order cannot certify the requested precision");
  if (j > options.max_nodes) throw PrecisionError("branch_series: node budget exceeded");

  int working = start_precision(target, j, ctx.prime());
  for (int attempt = 0; attempt < 6; ++attempt) {
    const PadicContext wctx = ctx.with_precision(working);
    const BranchNormalization norm = branch_normalization(i, theta.rebind(wctx));
    const IwasawaInterpolation interp = interpolate_kl(norm.kl_character, j);
    Series coeffs = compose(interp, norm.offset + norm.sign * s0, norm.sign, order, wctx);
    const int tracked = min_absolute_precision(coeffs);
    if (tracked >= target) {
      const int cert = std::min(tracked, j);
      for (auto& c : coeffs) c = c.with_absolute_precision(std::min(cert, c.absolute_precision())).rebind(ctx);
      const int final_cert = std::min(cert, min_absolute_precision(coeffs));
      return BranchSeries{i, theta.rebind(ctx), s0, std::move(coeffs), final_cert, j, working};
    }
    working += (target - tracked) + 4;
  }
  throw PrecisionError("branch_series: could not reach the requested precision");
}

PadicNumber branch_derivative(int i, const DirichletCharacter& theta, long s0, const PadicContext& ctx,
                              const BranchOptions& options) {
  return branch_series(i, theta, s0, 2, ctx, options).coefficients[1];
}

PadicNumber branch_value(int i, const DirichletCharacter& theta, const PadicNumber& s, const PadicContext& ctx,
                         const BranchOptions& options) {
  check_theta(theta);
  if (!theta.context().same_prime(ctx) || !s.context().same_prime(ctx))
    throw std::invalid_argument("branch_value: prime mismatch");
  check_branch(i, ctx.prime());
  if (s.valuation() < 0) throw std::domain_error("branch_value: s must lie in Z_p");
  const int target = ctx.precision();
  const int j = options.nodes.value_or(target + 2);
  if (j < target) throw PrecisionError("branch_value: node count below N cannot certify the requested precision");
  if (j > options.max_nodes) throw PrecisionError("branch_value: node budget exceeded");

  int working = start_precision(target, j, ctx.prime());
  for (int attempt = 0; attempt < 6; ++attempt) {
    const PadicContext wctx = ctx.with_precision(working);
    const BranchNormalization norm = branch_normalization(i, theta.rebind(wctx));
    const IwasawaInterpolation interp = interpolate_kl(norm.kl_character, j);
    const PadicNumber sw = PadicNumber::from_integer(wctx, norm.offset) +
                           PadicNumber::from_integer(wctx, norm.sign) * s.rebind(wctx);
    const PadicNumber u = PadicNumber::from_integer(wctx, static_cast<long>(ctx.prime()) + 1);
    const PadicNumber t = padic_exp(sw * iwasawa_log(u)) - PadicNumber::one(wctx);
    const PadicNumber value = interp.evaluate(t);
    const int cap = std::min(s.absolute_precision(), target);
    if (value.absolute_precision() >= cap) return value.with_absolute_precision(std::min(value.absolute_precision(), j)).rebind(ctx);
    working += (cap - value.absolute_precision()) + 4;
  }
  throw PrecisionError("branch_value: could not reach the requested precision");
}

}  // namespace tzero
