#include <doctest.h>

#include "commands.hpp"
#include "expr.hpp"
#include "json_io.hpp"
#include "support.hpp"

using namespace testsupport;
using namespace pommiez::cli;

namespace {

ContextPtr the_ctx() { return make_context(Omega::disk(2), {{gr(1), 1}}); }

}  // namespace

TEST_CASE("parsing the worked expressions") {
  auto ctx = the_ctx();
  SUBCASE("a g0-multiple") {
    Holo f = parse_function("g0*(z/(1-z) + 1/(z-3))", ctx);
    REQUIRE(std::holds_alternative<GMultiple>(f));
    RationalFunction expected =
        RationalFunction(Polynomial::variable(), Polynomial::from_coeffs({1, -1})) + q_frac(3, 1);
    CHECK(std::get<GMultiple>(f).R() == expected);
  }
  SUBCASE("a general function with an explicit zero g0 part") {
    Holo f = parse_function("(z-1) + g0*(0)", ctx);
    REQUIRE(std::holds_alternative<SymFunction>(f));
    CHECK(std::get<SymFunction>(f).A() == RationalFunction(linear(gr(1))));
    CHECK(std::get<SymFunction>(f).B().is_zero());
  }
  SUBCASE("holomorphy depends on the context") {
    CHECK_NOTHROW(parse_function("g0/(z-1)", ctx));
    auto bare = make_context(Omega::disk(2), {});
    CHECK_THROWS_WITH_AS(parse_function("g0/(z-1)", bare), doctest::Contains("pole 1"),
                         DomainError);
  }
}

TEST_CASE("grammar restrictions on g0") {
  auto ctx = the_ctx();
  CHECK_THROWS_AS(parse_function("1/g0", ctx), ParseError);
  CHECK_THROWS_AS(parse_function("g0*g0", ctx), ParseError);
  CHECK_THROWS_AS(parse_function("g0^2", ctx), ParseError);
  CHECK_NOTHROW(parse_function("g0^1 * (z+1)", ctx));
  CHECK_NOTHROW(parse_function("2*g0 + 1", ctx));
}

TEST_CASE("parse errors carry source offsets") {
  auto ctx = the_ctx();
  try {
    parse_function("z + @", ctx);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_function("z + ", ctx), ParseError);
  CHECK_THROWS_AS(parse_function("(z", ctx), ParseError);
  CHECK_THROWS_AS(parse_function("z^z", ctx), ParseError);
  CHECK_THROWS_AS(parse_function("w + 1", ctx), ParseError);
  CHECK_THROWS_AS(parse_function("1/(z-z)", ctx), ParseError);
}

TEST_CASE("scalar parse and print round-trip") {
  for (const char* s : {"0", "3", "-3/4", "1*i", "-1*i", "1+1*i", "-3/4+5/2*i", "1/2-7/3*i"}) {
    CHECK(to_string(parse_scalar(s)) == s);
  }
  CHECK(parse_scalar("-3/4+5/2*i") == gr(-3, 4) + gr(5, 2) * GaussianRational::i());
  CHECK(parse_scalar("i") == GaussianRational::i());
  CHECK_THROWS_AS(parse_scalar("z"), ParseError);
}

TEST_CASE("print then parse is the identity on random functions") {
  Rng rng(81);
  std::vector<ContextPtr> contexts = selfcheck_contexts();
  for (int k = 0; k < 80; ++k) {
    const ContextPtr& ctx = contexts[k % contexts.size()];
    Holo f = random_instance(ctx, 810, k);
    std::string text = print_function(f);
    Holo g = parse_function(text, ctx);
    CHECK(print_function(g) == text);  // printing is idempotent through a parse
    bool equal = std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          return std::holds_alternative<T>(g) && std::get<T>(g) == x;
        },
        f);
    CHECK(equal);
  }
}

TEST_CASE("factored polynomial printing") {
  CHECK(print_polynomial_factored(Polynomial::one()) == "1");
  Polynomial p = Polynomial::one_minus_z_over(gr(1)).pow(2) *
                 Polynomial::one_minus_z_over(gr(2));
  CHECK(print_polynomial_factored(p) == "(1-z)^2*(1-z/2)");
  Polynomial c = Polynomial::one_minus_z_over(gi(1, 1));
  std::string printed = print_polynomial_factored(c);
  CHECK(printed == "(1-z/(1+1*i))");
  CHECK(parse_rational_expr(printed, 'z').num() == c);
}

TEST_CASE("descriptor JSON round-trips through the documented schema") {
  auto ctx = the_ctx();
  std::vector<SubspaceDescriptor> ds = {
      SubspaceDescriptor::full(),
      SubspaceDescriptor::trivial(),
      SubspaceDescriptor::zero_variety(MultiplicityVariety({{gr(1), 1}})),
      SubspaceDescriptor::rational(Polynomial::from_coeffs({1, -1}), 1,
                                   MultiplicityVariety({{gr(3), 1}})),
      SubspaceDescriptor::rational(Polynomial::one(), std::nullopt,
                                   MultiplicityVariety({{gi(0, 2), 2}})),
  };
  for (const auto& d : ds) {
    Json j = descriptor_to_json(d);
    CHECK(descriptor_from_json(ctx, j) == d);
    CHECK(descriptor_to_json(descriptor_from_json(ctx, j)) == j);
  }
  CHECK(descriptor_to_json(ds[3]).dump() ==
        R"x({"type":"rational","p":"(1-z)","n":1,"upsilon":[{"point":"3","order":1}]})x");
  CHECK_THROWS_AS(descriptor_from_string(ctx, "{not json"), DomainError);
  CHECK_THROWS_AS(descriptor_from_string(ctx, R"({"type":"nope"})"), DomainError);
  CHECK_THROWS_AS(
      descriptor_from_string(ctx, R"({"type":"zero_variety","w":[{"point":"1","order":2}]})"),
      DomainError);
}

TEST_CASE("context construction from flags") {
  ContextPtr ctx = context_from_flags("disk:2", "(1-z)^2*(1-z/2)", "generic");
  CHECK(ctx->q_mult_at(gr(1)) == 2);
  CHECK(ctx->q_mult_at(gr(2)) == 1);
  CHECK(ctx->zero_variety() == MultiplicityVariety({{gr(1), 2}}));

  CHECK_NOTHROW(context_from_flags("disk:5/2", "1", "exp:1/2:16"));
  CHECK_NOTHROW(context_from_flags("plane", "1", "generic"));
  CHECK_THROWS_AS(context_from_flags("plane", "z", "generic"), DomainError);    // q(0) != 1
  CHECK_THROWS_AS(context_from_flags("cube", "1", "generic"), DomainError);
  CHECK_THROWS_AS(context_from_flags("disk:0", "1", "generic"), DomainError);
  CHECK_THROWS_AS(context_from_flags("plane", "1", "geom:1:8"), DomainError);
  CHECK_THROWS_AS(context_from_flags("plane", "1-z^9+z", "generic"), IrreducibleError);
}

TEST_CASE("run reports exit codes per error class") {
  auto rc = [](std::initializer_list<const char*> args) {
    std::vector<const char*> argv = {"pommiez"};
    argv.insert(argv.end(), args.begin(), args.end());
    return run(static_cast<int>(argv.size()), argv.data());
  };
  CHECK(rc({"cyclic", "--omega", "disk:2", "--q", "(1-z)", "--f", "1 + g0*(0)"}) == 0);
  CHECK(rc({"cyclic", "--omega", "disk:2", "--q", "(1-z)"}) == 2);          // missing --f
  CHECK(rc({"nonsense"}) == 2);
  CHECK(rc({"classify", "--omega", "disk:2", "--q", "1", "--f", "g0/(z-1)"}) == 1);
  CHECK(rc({"apply", "--omega", "disk:2", "--q", "1", "--f", "1 + g0*(z)"}) == 1);  // not a multiple
  CHECK(rc({"selfcheck", "--seed", "3", "--cases", "2"}) == 0);
}
