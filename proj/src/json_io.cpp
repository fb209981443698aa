#include "tzero/json_io.hpp"

namespace tzero {

json to_json(const PadicNumber& x) {
  json j;
  if (x.is_exact_zero()) {
    j["valuation"] = nullptr;
    j["digits"] = json::array();
    j["precision"] = nullptr;
    return j;
  }
  j["valuation"] = x.valuation();
  j["digits"] = x.digits();
  j["precision"] = x.absolute_precision();
  return j;
}

json to_json(const mpq_class& q) { return q.get_str(); }

json to_json(const QuadFieldData& f) {
  return json{{"d", f.d}, {"D", f.disc}, {"h", f.class_number}, {"w", f.roots_of_unity}};
}

json to_json(const SplitPrimeData& s) {
  return json{{"p", s.p},
              {"lift", to_string(s.lift)},
              {"sqrtD", to_json(s.sqrt_disc)},
              {"pi", {{"x", s.pi_coords.x}, {"y", s.pi_coords.y}, {"image", to_json(s.pi_image)}}},
              {"pibar", {{"x", s.pibar_coords.x}, {"y", s.pibar_coords.y}, {"image", to_json(s.pibar_image)}}},
              {"log_pibar", to_json(s.log_pibar)}};
}

json to_json(const HeckeRoots& r) { return json{{"alpha", to_json(r.alpha)}, {"beta", to_json(r.beta)}}; }

json to_json(const SymPowerFactor& f) {
  json j{{"kind", f.kind == FactorKind::dirichlet ? "dirichlet" : "modular"},
         {"label", f.label()},
         {"character", f.twist.label()}};
  if (f.kind == FactorKind::modular) {
    j["j"] = f.index;
    j["weight"] = f.weight;
    j["shift"] = f.shift;
    j["alpha"] = to_json(*f.alpha);
    j["beta"] = to_json(*f.beta);
  }
  return j;
}

json to_json(const TrivialZeroReport& r) {
  json zeros = json::array();
  for (const auto& z : r.zeros) zeros.push_back({{"branch", z.branch}, {"point", z.point}, {"order", z.order}});
  return json{{"n", r.n}, {"m", r.m}, {"zeros", zeros}};
}

json to_json(const SymPowerDecomposition& d) {
  json factors = json::array();
  for (const auto& f : d.factors) factors.push_back(to_json(f));
  return json{{"n", d.n}, {"m", d.m}, {"k", d.weight}, {"factors", factors}, {"trivial_zeros", to_json(d.trivial_zeros)}};
}

json to_json(const BranchSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients) coeffs.push_back(to_json(c));
  return json{{"branch", s.branch},       {"character", s.theta.label()}, {"s0", s.s0},
              {"coefficients", coeffs},   {"N_cert", s.certified_precision}, {"J", s.nodes}};
}

json to_json(const OrderCertificate& c) {
  return json{{"branch", c.branch}, {"point", c.point},          {"c0", to_json(c.c0)},
              {"c1", to_json(c.c1)}, {"N_cert", c.certified_precision}, {"order_one", c.order_one}};
}

json to_json(const FgCheck& c) {
  return json{{"lhs", to_json(c.lhs)},
              {"rhs", to_json(c.rhs)},
              {"residual_valuation", c.residual_valuation},
              {"target", c.target},
              {"status", c.pass ? "PASS" : "FAIL"}};
}

json to_json(const LInvariantReport& r) {
  json j{{"l_at_1", to_json(r.l_at_1)}, {"l_at_0", to_json(r.l_at_0)}};
  if (r.l_via_alpha) j["l_via_alpha"] = to_json(*r.l_via_alpha);
  if (r.agreement_valuation) j["agreement_valuation"] = *r.agreement_valuation;
  if (r.fg_check) j["fg_check"] = to_json(*r.fg_check);
  return j;
}

json to_json(const TrivialZeroCertificate& c) {
  return json{{"n", c.n},
              {"m", c.m},
              {"branch", c.branch},
              {"lhs", to_json(c.lhs)},
              {"rhs", to_json(c.rhs)},
              {"l_invariant", to_json(c.l_invariant)},
              {"e_plus", to_json(c.e_plus)},
              {"L0_theta", to_json(c.archimedean_value)},
              {"residual_valuation", c.residual_valuation},
              {"target", c.target},
              {"status", c.pass ? "PASS" : "FAIL"},
              {"modular_factors", c.modular_factors},
              {"steps", c.steps}};
}

PadicNumber padic_from_json(const json& j, const PadicContext& ctx) {
  if (j.at("valuation").is_null()) return PadicNumber::zero(ctx);
  const int v = j.at("valuation").get<int>();
  const int prec = j.at("precision").get<int>();
  const auto digits = j.at("digits").get<std::vector<unsigned long>>();
  mpz_class unit = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) unit = unit * ctx.prime() + *it;
  if (digits.empty()) return PadicNumber::big_oh(ctx, prec);
  return PadicNumber::from_parts(ctx, v, unit, prec - v);
}

}  // namespace tzero
