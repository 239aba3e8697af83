#include "commands.hpp"

#include <CLI11.hpp>
#include <iostream>

#include "expr.hpp"
#include "pommiez/duality.hpp"
#include "pommiez/operator.hpp"
#include "pommiez/oracle.hpp"

namespace pommiez::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

Omega parse_omega(const std::string& text) {
  if (text == "plane") return Omega::plane();
  std::vector<std::string> parts = split(text, ':');
  if (parts.size() == 2 && parts[0] == "disk") {
    GaussianRational r = parse_scalar(parts[1]);
    if (!r.is_real() || r.re() <= 0)
      throw DomainError("omega: disk radius must be a positive rational");
    return Omega::disk(r.re());
  }
  throw DomainError("omega: expected 'plane' or 'disk:R', got '" + text + "'");
}

UnitSpec parse_unit(const std::string& text) {
  if (text == "generic") return UnitSpec::generic();
  std::vector<std::string> parts = split(text, ':');
  if (parts.size() == 3) {
    GaussianRational c = parse_scalar(parts[1]);
    int n = std::stoi(parts[2]);
    if (parts[0] == "exp") return UnitSpec::exp_unit(c, n);
    if (parts[0] == "geom") return UnitSpec::geometric_unit(c, n);
  }
  throw DomainError("unit: expected 'generic', 'exp:c:N' or 'geom:c:N', got '" + text + "'");
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

Json function_json(const Holo& f) {
  Json j;
  j["f"] = print_function(f);
  return j;
}

std::pair<GaussianRational, int> parse_target(const std::string& text) {
  std::size_t pos = text.rfind(':');
  if (pos == std::string::npos)
    throw DomainError("target: expected 'point:order', got '" + text + "'");
  return {parse_scalar(text.substr(0, pos)), std::stoi(text.substr(pos + 1))};
}

CoFunction parse_cofunction(const std::string& text) {
  RationalFunction r = parse_rational_expr(text, 't');
  if (r.is_zero()) return {};
  if (!r.is_proper() || !r.den().coeff(0).is_zero() ||
      r.den() != Polynomial::monomial(r.den().degree()))
    throw DomainError("cofunction: expected a combination of 1/t^k terms");
  int m = r.den().degree();
  std::vector<GaussianRational> coeffs(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) coeffs[j - 1] = r.num().coeff(m - j);
  return CoFunction::from_coeffs(std::move(coeffs));
}

}  // namespace

ContextPtr context_from_flags(const std::string& omega, const std::string& q,
                              const std::string& unit) {
  RationalFunction qr = parse_rational_expr(q, 'z');
  if (!qr.is_polynomial()) throw DomainError("q: must be a polynomial");
  if (!qr.num().eval(GaussianRational()).is_one())
    throw DomainError("q: must satisfy q(0) = 1");
  std::vector<RootMult> roots;
  if (!qr.num().is_constant()) roots = linear_roots_checked(qr.num(), "q");
  return make_context(parse_omega(omega), std::move(roots), parse_unit(unit));
}

int run(int argc, const char* const* argv) {
  CLI::App app{"exact engine for the generalized backward shift (Pommiez) operator"};
  app.require_subcommand(1);

  std::string omega_s, q_s, unit_s = "generic", f_s, d1_s, d2_s, target_s, h_s;
  int times = 1, kernel_n = 1, cases = 25;
  std::uint64_t seed = 1;
  bool witness = false;

  auto add_ctx_flags = [&](CLI::App* sub) {
    sub->add_option("--omega", omega_s, "region: plane | disk:R")->required();
    sub->add_option("--q", q_s, "zero part of g0 in factored form, q(0) = 1")->required();
    sub->add_option("--unit", unit_s, "zero-free part: generic | exp:c:N | geom:c:N");
  };
  auto ctx = [&] { return context_from_flags(omega_s, q_s, unit_s); };
  auto parsed_f = [&](const ContextPtr& c) { return parse_function(f_s, c); };
  auto as_gmultiple = [&](const Holo& f) {
    if (!std::holds_alternative<GMultiple>(f))
      throw DomainError("this operation needs a g0-multiple; general functions leave the exact "
                        "class under the operator");
    return std::get<GMultiple>(f);
  };

  CLI::App* apply = app.add_subcommand("apply", "apply the operator to f");
  add_ctx_flags(apply);
  apply->add_option("--f", f_s, "function expression")->required();
  apply->add_option("--times", times, "number of applications")->check(CLI::NonNegativeNumber);
  apply->callback([&] {
    GMultiple g = as_gmultiple(parsed_f(ctx()));
    for (int j = 0; j < times; ++j) g = apply_pommiez(g);
    emit(function_json(Holo(g)));
  });

  CLI::App* classify = app.add_subcommand("classify", "invariant subspace generated by f");
  add_ctx_flags(classify);
  classify->add_option("--f", f_s, "function expression")->required();
  classify->callback([&] { emit(descriptor_to_json(generated_subspace(parsed_f(ctx())))); });

  CLI::App* member = app.add_subcommand("member", "is f in the descriptor subspace");
  add_ctx_flags(member);
  member->add_option("--f", f_s, "function expression")->required();
  member->add_option("--descriptor", d1_s, "descriptor JSON")->required();
  member->callback([&] {
    ContextPtr c = ctx();
    Json j;
    j["member"] = membership(parse_function(f_s, c), descriptor_from_string(c, d1_s));
    emit(j);
  });

  CLI::App* include = app.add_subcommand("include", "descriptor containment d1 in d2");
  add_ctx_flags(include);
  include->add_option("--d1", d1_s, "descriptor JSON")->required();
  include->add_option("--d2", d2_s, "descriptor JSON")->required();
  include->callback([&] {
    ContextPtr c = ctx();
    Json j;
    j["included"] = inclusion(c, descriptor_from_string(c, d1_s), descriptor_from_string(c, d2_s));
    emit(j);
  });

  CLI::App* join_cmd = app.add_subcommand("join", "smallest descriptor containing d1 and d2");
  add_ctx_flags(join_cmd);
  join_cmd->add_option("--d1", d1_s, "descriptor JSON")->required();
  join_cmd->add_option("--d2", d2_s, "descriptor JSON")->required();
  join_cmd->callback([&] {
    ContextPtr c = ctx();
    emit(descriptor_to_json(
        join(c, descriptor_from_string(c, d1_s), descriptor_from_string(c, d2_s))));
  });

  CLI::App* cyclic = app.add_subcommand("cyclic", "is f a cyclic vector");
  add_ctx_flags(cyclic);
  cyclic->add_option("--f", f_s, "function expression")->required();
  cyclic->callback([&] {
    Json j;
    j["cyclic"] = is_cyclic(parsed_f(ctx()));
    emit(j);
  });

  CLI::App* sieve = app.add_subcommand("sieve", "extract g0/(z-point)^order from f");
  add_ctx_flags(sieve);
  sieve->add_option("--f", f_s, "function expression")->required();
  sieve->add_option("--target", target_s, "point:order")->required();
  sieve->callback([&] {
    auto [point, order] = parse_target(target_s);
    IsolateResult iso = isolate(as_gmultiple(parsed_f(ctx())), point, order);
    Json j;
    Json coeffs = Json::array();
    for (const auto& a : iso.op.coeffs()) coeffs.push_back(to_string(a));
    j["operator"] = coeffs;
    j["f"] = print_function(Holo(iso.result));
    emit(j);
  });

  CLI::App* kernel = app.add_subcommand("kernel", "basis of ker D^n");
  add_ctx_flags(kernel);
  kernel->add_option("--n", kernel_n, "power of the operator")->required();
  kernel->callback([&] {
    Json j;
    Json basis = Json::array();
    for (const auto& g : kernel_basis(ctx(), kernel_n)) basis.push_back(print_function(Holo(g)));
    j["basis"] = basis;
    emit(j);
  });

  CLI::App* pair_cmd = app.add_subcommand("pair", "Cauchy-transform pairing <f, h>");
  pair_cmd->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
  pair_cmd->add_option("--f", f_s, "rational function of z, holomorphic at 0")->required();
  pair_cmd->add_option("--h", h_s, "combination of 1/t^k terms")->required();
  pair_cmd->callback([&] {
    Json j;
    j["value"] = to_string(pair_residue(parse_rational_expr(f_s, 'z'), parse_cofunction(h_s)));
    emit(j);
  });

  CLI::App* unicellular = app.add_subcommand("unicellular", "is the operator unicellular");
  add_ctx_flags(unicellular);
  unicellular->add_flag("--witness", witness, "include the chain witness when unicellular");
  unicellular->callback([&] {
    UnicellularityResult r = is_unicellular(ctx());
    Json j;
    j["unicellular"] = r.unicellular;
    if (witness && r.unicellular) {
      Json chain = Json::array();
      for (const auto& d : r.witness_chain) chain.push_back(descriptor_to_json(d));
      j["witness"] = chain;
    }
    emit(j);
  });

  CLI::App* selfcheck_cmd = app.add_subcommand("selfcheck", "randomized classification sweep");
  selfcheck_cmd->add_option("--seed", seed, "PRNG seed");
  selfcheck_cmd->add_option("--cases", cases, "cases per context")->check(CLI::PositiveNumber);
  selfcheck_cmd->callback([&] {
    SelfCheckResult r = selfcheck({seed, cases});
    Json j;
    j["seed"] = seed;
    j["contexts"] = r.contexts;
    j["cases_per_context"] = cases;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    Json fails = Json::array();
    for (const auto& s : r.failures) fails.push_back(s);
    j["failures"] = fails;
    emit(j);
    if (r.failed > 0) throw DomainError("selfcheck found failures");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    Json j;
    j["error"] = e.what();
    emit(j);
    return 1;
  }
  return 0;
}

}  // namespace pommiez::cli
