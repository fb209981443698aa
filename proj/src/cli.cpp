#include "tzero/cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "tzero/acceptance.hpp"
#include "tzero/bernoulli_cache.hpp"
#include "tzero/cmform.hpp"
#include "tzero/json_io.hpp"
#include "tzero/kl_lfunction.hpp"
#include "tzero/linvariant.hpp"
#include "tzero/sympower.hpp"

namespace tzero {

namespace {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum Flag : unsigned {
  kP = 1u << 0,
  kPrec = 1u << 1,
  kField = 1u << 2,
  kCurve = 1u << 3,
  kN = 1u << 4,
  kK = 1u << 5,
  kBranch = 1u << 6,
  kNodes = 1u << 7,
  kOut = 1u << 8,
  kLift = 1u << 9,
  kTarget = 1u << 10,
  kCache = 1u << 11,
};

void add_flags(CLI::App* app, RunConfig& c, unsigned flags) {
  if (flags & kP) app->add_option("--p", c.p, "odd prime p");
  if (flags & kPrec) app->add_option("--prec", c.precision, "working precision N in p-adic digits")->check(CLI::PositiveNumber);
  if (flags & kField) {
    app->add_option("--D", c.disc, "negative fundamental discriminant of F");
    app->add_option("--d", c.d, "squarefree d > 0 with F = Q(sqrt(-d))");
  }
  if (flags & kCurve) {
    app->add_option("--curve", c.curve, "Weierstrass coefficients a4,a6 or a2,a4,a6")->delimiter(',')->expected(2, 3);
    app->add_option("--ap", c.ap, "Fourier coefficient a_p (instead of --curve)");
    app->add_option("--psi", c.psi, "Nebentypus: trivial or theta (the quadratic character of F)")
        ->check(CLI::IsMember({"trivial", "theta"}));
    app->add_option("--level", c.level, "level N (prime to p)");
  }
  if (flags & kN) app->add_option("--n", c.n, "symmetric power n");
  if (flags & kK) app->add_option("--k", c.k, "weight k");
  if (flags & kBranch) {
    app->add_option("--branch", c.branch, "branch index i");
    app->add_option("--at", c.at, "expansion point s0");
    app->add_option("--order", c.order, "number of series coefficients")->check(CLI::PositiveNumber);
  }
  if (flags & kNodes) app->add_option("--nodes", c.nodes, "interpolation node count J")->check(CLI::PositiveNumber);
  if (flags & kLift) {
    std::map<std::string, SqrtLift> m{{"least", SqrtLift::least_residue}, {"opposite", SqrtLift::opposite}};
    app->add_option("--lift", c.lift, "Hensel lift of sqrt(D): least or opposite")
        ->transform(CLI::CheckedTransformer(m, CLI::ignore_case));
  }
  if (flags & kTarget) app->add_option("--target", c.target, "digits required for PASS")->check(CLI::PositiveNumber);
  if (flags & kCache) app->add_option("--cache", c.cache, "Bernoulli cache file (read, then updated)");
  if (flags & kOut) app->add_option("--out", c.out, "write JSON here instead of standard output");
}

unsigned long require_p(const RunConfig& c) {
  if (!c.p) throw ConfigError("--p is required");
  if (*c.p < 3 || !is_prime(*c.p)) throw ConfigError("--p must be an odd prime");
  return *c.p;
}

int require_int(const std::optional<int>& v, const char* name) {
  if (!v) throw ConfigError(std::string(name) + " is required");
  return *v;
}

WeierstrassCurve curve_of(const std::vector<long>& v) {
  if (v.size() == 2) return WeierstrassCurve{0, v[0], v[1]};
  if (v.size() == 3) return WeierstrassCurve{v[0], v[1], v[2]};
  throw ConfigError("--curve takes a4,a6 or a2,a4,a6");
}

// Class-number-one CM j-invariants and the discriminant of the CM field.
std::optional<long> cm_field_of(const WeierstrassCurve& e) {
  const mpz_class b2 = 4 * mpz_class(e.a2), b4 = 2 * mpz_class(e.a4);
  const mpz_class c4 = b2 * b2 - 24 * b4;
  const mpz_class delta = curve_discriminant(e);
  if (delta == 0) return std::nullopt;
  mpq_class j(c4 * c4 * c4, delta);
  j.canonicalize();
  static const std::vector<std::pair<const char*, long>> table = {
      {"0", -3},          {"1728", -4},        {"-3375", -7},         {"8000", -8},
      {"-32768", -11},    {"54000", -3},       {"287496", -4},        {"-884736", -19},
      {"-12288000", -3},  {"16581375", -7},    {"-884736000", -43},   {"-147197952000", -67},
      {"-262537412640768000", -163}};
  for (const auto& [jv, disc] : table)
    if (mpq_class(mpz_class(jv)) == j) return disc;
  return std::nullopt;
}

QuadFieldData field_of(const RunConfig& c) {
  if (c.disc && c.d) throw ConfigError("give either --D or --d, not both");
  if (c.disc) return quad_field_from_discriminant(*c.disc);
  if (c.d) return quad_field_data(*c.d);
  if (c.curve) {
    if (auto disc = cm_field_of(curve_of(*c.curve))) return quad_field_from_discriminant(*disc);
    throw ConfigError("curve has no CM by a class-number-one order; pass --D");
  }
  throw ConfigError("a field is required (--D or --d)");
}

CMFormSpec spec_of(const RunConfig& c, const PadicContext& ctx) {
  const QuadFieldData field = field_of(c);
  if (c.curve && c.ap) throw ConfigError("give either --curve or --ap, not both");
  if (c.curve) {
    if (c.k && *c.k != 2) throw ConfigError("curve input has weight 2");
    if (c.psi != "trivial") throw ConfigError("curve input has trivial Nebentypus");
    return cm_spec_from_curve(curve_of(*c.curve), field, ctx, c.level);
  }
  if (!c.ap) throw ConfigError("a form is required (--curve or --ap)");
  const int k = c.k.value_or(2);
  const DirichletCharacter psi =
      c.psi == "theta" ? char_from_kronecker(field.disc, ctx) : trivial_character(ctx);
  return cm_spec(field, k, psi, PadicNumber::from_integer(ctx, *c.ap), c.level);
}

BranchOptions branch_options(const RunConfig& c) {
  BranchOptions o;
  o.nodes = c.nodes;
  if (c.nodes) o.max_nodes = std::max(o.max_nodes, *c.nodes);
  return o;
}

FgOptions fg_options(const RunConfig& c) {
  FgOptions o;
  o.lift = c.lift;
  o.target = c.target;
  o.branch = branch_options(c);
  return o;
}

bool has_trivial_zero(int n) { return n % 2 == 0 && (n / 2) % 2 == 1; }

struct Outcome {
  json body;
  int code = 0;
};

Outcome cmd_quadfield(const RunConfig& c) {
  const QuadFieldData f = field_of(c);
  json j = to_json(f);
  if (c.p) {
    const unsigned long p = require_p(c);
    const Splitting s = split_behavior(f, p);
    j["p"] = p;
    j["splitting"] = to_string(s);
    if (s == Splitting::split) j["split_data"] = to_json(pi_bar(f, make_context(p, c.precision), c.lift));
  }
  return {j, 0};
}

Outcome cmd_cmform(const RunConfig& c) {
  const PadicContext ctx = make_context(require_p(c), c.precision);
  const CMFormSpec spec = spec_of(c, ctx);
  json j{{"p", ctx.prime()}, {"k", spec.weight}, {"field", to_json(spec.field)}, {"psi", spec.nebentypus.label()}};
  if (c.curve) j["a_p_integer"] = ap_point_count(curve_of(*c.curve), ctx.prime());
  j["a_p"] = to_json(spec.ap);
  const HeckeRoots r = unit_root(spec, ctx);
  j["alpha"] = to_json(r.alpha);
  j["beta"] = to_json(r.beta);
  if (spec.level) j["level"] = *spec.level;
  return {j, 0};
}

Outcome cmd_klp(const RunConfig& c) {
  const PadicContext ctx = make_context(require_p(c), c.precision);
  const QuadFieldData f = field_of(c);
  const BranchSeries s =
      branch_series(c.branch, char_from_kronecker(f.disc, ctx), c.at, c.order, ctx, branch_options(c));
  json j = to_json(s);
  j["p"] = ctx.prime();
  j["D"] = f.disc;
  return {j, 0};
}

Outcome cmd_decompose(const RunConfig& c) {
  const PadicContext ctx = make_context(require_p(c), c.precision);
  const int n = require_int(c.n, "--n");
  if (n < 1) throw ConfigError("--n must be positive");
  const CMFormSpec spec = spec_of(c, ctx);
  json j = to_json(decompose(spec, n, ctx));
  j["p"] = ctx.prime();
  return {j, 0};
}

Outcome cmd_critical(const RunConfig& c) {
  const int n = require_int(c.n, "--n");
  const int k = require_int(c.k, "--k");
  if (n % 2 != 0) throw ConfigError("critical integers are only emitted for even n");
  return {json{{"n", n}, {"k", k}, {"C", critical_integers(n, k)}}, 0};
}

Outcome cmd_trivial_zeros(const RunConfig& c) {
  const int n = require_int(c.n, "--n");
  if (n < 1) throw ConfigError("--n must be positive");
  json j{{"n", n}, {"m", n / 2}};
  json zeros = json::array();
  if (has_trivial_zero(n))
    for (int i : {0, 1}) zeros.push_back({{"branch", i}, {"point", i}, {"order", 1}});
  j["zeros"] = zeros;
  int code = 0;
  if (c.p && !zeros.empty()) {
    const PadicContext ctx = make_context(require_p(c), c.precision);
    const CMFormSpec spec = spec_of(c, ctx);
    json certs = json::array();
    for (const auto& cert : certify_trivial_zeros(spec, n, ctx, branch_options(c))) {
      certs.push_back(to_json(cert));
      if (!cert.order_one) code = 1;
    }
    j["certificates"] = certs;
  }
  return {j, code};
}

Outcome cmd_linvariant(const RunConfig& c) {
  const PadicContext ctx = make_context(require_p(c), c.precision);
  const CMFormSpec spec = spec_of(c, ctx);
  if (c.k && *c.k != spec.weight) throw ConfigError("--k disagrees with the form's weight");
  const FgOptions opts = fg_options(c);
  const LInvariantReport r = l_invariant_report(spec, ctx, opts);
  json j = to_json(r);
  const int target = opts.target.value_or(std::min(6, ctx.precision()));
  const bool agree = r.agreement_valuation && *r.agreement_valuation >= target;
  bool pass = agree && r.fg_check->pass;
  j["agreement_status"] = agree ? "PASS" : "FAIL";
  if (c.n) {
    const int n = *c.n;
    if (n < 1) throw ConfigError("--n must be positive");
    j["n"] = n;
    json certs = json::array();
    if (has_trivial_zero(n)) {
      for (int i : {0, 1}) {
        const TrivialZeroCertificate cert = verify_trivial_zero_formula(spec, n, i, ctx, opts);
        pass = pass && cert.pass;
        certs.push_back(to_json(cert));
      }
    }
    j["trivial_zero_certificates"] = certs;
  }
  j["status"] = pass ? "PASS" : "FAIL";
  return {j, pass ? 0 : 1};
}

Outcome cmd_verify_fg(const RunConfig& c) {
  const PadicContext ctx = make_context(require_p(c), c.precision);
  const QuadFieldData f = field_of(c);
  const FgCheck r = verify_ferrero_greenberg(f, ctx, fg_options(c));
  json j = to_json(r);
  j["p"] = ctx.prime();
  j["D"] = f.disc;
  return {j, r.pass ? 0 : 1};
}

Outcome cmd_bernoulli(const RunConfig& c) {
  const int n = require_int(c.n, "--n");
  if (n < 1) throw ConfigError("--n must be positive");
  const PadicContext ctx = make_context(c.p.value_or(3), 4);
  const DirichletCharacter chi = c.disc ? char_from_kronecker(*c.disc, ctx) : trivial_character(ctx);
  BernoulliCache cache;
  if (c.cache) {
    std::ifstream probe(*c.cache);
    if (probe) cache = BernoulliCache::read(probe);
  }
  const mpq_class b = cache.get_or_compute(n, chi);
  if (c.cache) cache.save(*c.cache);
  return {json{{"n", n}, {"character", chi.label()}, {"B", to_json(b)}}, 0};
}

}  // namespace

std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv, std::ostream& out,
                                                std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exceptional zeroes of symmetric powers of CM forms: exact p-adic checks", "tzero"};
  app.require_subcommand(1);
  const unsigned spec_flags = kP | kPrec | kField | kCurve | kK | kLift;
  struct Sub {
    const char* name;
    const char* help;
    unsigned flags;
  };
  const Sub subs[] = {
      {"quadfield", "field invariants, splitting of p and the split-prime data", kP | kPrec | kField | kLift | kOut},
      {"cmform", "a_p and the Hecke roots of a CM form", spec_flags | kOut},
      {"klp", "Kubota-Leopoldt branch series", kP | kPrec | kField | kBranch | kNodes | kOut},
      {"decompose", "factors of Sym^n", spec_flags | kN | kOut},
      {"critical", "critical integers C_{n,k}", kN | kK | kOut},
      {"trivial-zeros", "trivial zero locations (with order certificates when a form is given)",
       spec_flags | kN | kNodes | kOut},
      {"linvariant", "L-invariants both ways plus the derivative identities", spec_flags | kN | kNodes | kTarget | kOut},
      {"verify-fg", "derivative of branch 0 at 0 against (4/w) log_p(pibar)",
       kP | kPrec | kField | kNodes | kLift | kTarget | kOut},
      {"acceptance", "run the acceptance battery", kPrec},
      {"bernoulli", "exact generalized Bernoulli number B_{n,chi}", kP | kField | kN | kCache | kOut},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_flags(sub, c, s.flags);
    sub->callback([&c, sub, name = std::string(s.name)] {
      c.command = name;
      if (name == "acceptance" && sub->count("--prec") == 0) c.precision = 12;
    });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  return c;
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.command == "acceptance") {
    AcceptanceOptions o;
    o.precision = c.precision;
    const auto results = run_acceptance(o);
    print_results(out, results);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    out << (all ? "ALL PASS" : "SOME FAILED") << "\n";
    return all ? 0 : 1;
  }
  Outcome o;
  try {
    if (c.command == "quadfield") o = cmd_quadfield(c);
    else if (c.command == "cmform") o = cmd_cmform(c);
    else if (c.command == "klp") o = cmd_klp(c);
    else if (c.command == "decompose") o = cmd_decompose(c);
    else if (c.command == "critical") o = cmd_critical(c);
    else if (c.command == "trivial-zeros") o = cmd_trivial_zeros(c);
    else if (c.command == "linvariant") o = cmd_linvariant(c);
    else if (c.command == "verify-fg") o = cmd_verify_fg(c);
    else if (c.command == "bernoulli") o = cmd_bernoulli(c);
    else throw ConfigError("unknown command '" + c.command + "'");
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const std::string text = o.body.dump(2) + "\n";
  if (c.out) {
    std::ofstream f(*c.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << *c.out << "\n";
      return 2;
    }
    f << text;
  } else {
    out << text;
  }
  return o.code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto parsed = parse_command_line(argc, argv, out, err);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return dispatch(std::get<RunConfig>(parsed), out, err);
}

}  // namespace tzero
