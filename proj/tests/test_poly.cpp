#include "doctest.h"

#include "confal/parse.hpp"
#include "confal/pgcd.hpp"
#include "confal/poly.hpp"

#include "test_util.hpp"

using namespace confal;

namespace {
Poly P(Context& ctx, const std::string& s) { return parse_poly(ctx, s); }
}  // namespace

TEST_CASE("ring arithmetic basics") {
  Context ctx = Context::make();
  CHECK((P(ctx, "d + 2*x") + P(ctx, "-d - 2*x")).is_zero());
  CHECK(P(ctx, "(d+x)*(d+2*x)") == P(ctx, "d^2 + 3*d*x + 2*x^2"));
  CHECK(to_string(P(ctx, "(d+x)*(d+2*x)")) == "d^2 + 3*d*x + 2*x^2");

  ParamField c2c1 = ParamField::var(ctx.param("c2")) / ParamField::var(ctx.param("c1"));
  Poly scaled = Poly::variable(ctx, ctx.lam(0)).scaled(c2c1);
  CHECK(to_string(scaled) == "c2/c1*x");
  CHECK(scaled == P(ctx, "c2/c1 * x"));
}

TEST_CASE("substitution") {
  Context ctx = Context::make();
  VarId y = ctx.lam(1);

  SUBCASE("skew-symmetry workhorse") {
    Poly p = P(ctx, "d + 2*y");
    CHECK(p.substitute(y, P(ctx, "-d - x")) == P(ctx, "-d - 2*x"));
    CHECK(to_string(p.substitute(y, P(ctx, "-d-x"))) == "-d - 2*x");
  }
  SUBCASE("to zero") {
    CHECK(P(ctx, "x^2").substitute(ctx.lam(0), Poly::zero(ctx)).is_zero());
  }
  SUBCASE("lambda shift") {
    Poly f = P(ctx, "d + a*y + b");
    CHECK(f.substitute(y, P(ctx, "x + y")) == P(ctx, "d + a*x + a*y + b"));
  }
  SUBCASE("param rejected") {
    VarId a = ctx.param("a");
    CHECK_THROWS_AS(P(ctx, "a*x").substitute(a, Poly::zero(ctx)), Error);
  }
  SUBCASE("simultaneous") {
    // x -> y, y -> x must swap, not chain
    Poly p = P(ctx, "x + 2*y");
    Poly q = p.substitute_many({{ctx.lam(0), P(ctx, "y")}, {y, P(ctx, "x")}});
    CHECK(q == P(ctx, "y + 2*x"));
  }
}

TEST_CASE("coefficient extraction") {
  Context ctx = Context::make();
  Poly p = P(ctx, "d + 2*x");
  VarId x = ctx.lam(0);
  CHECK(p.coefficient_of(x, 1) == P(ctx, "2"));
  CHECK(p.coefficient_of(x, 0) == P(ctx, "d"));
  CHECK(p.coefficient_of(x, 5).is_zero());

  // reconstruction
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 20; ++i) {
    Poly q = testutil::random_poly(rng, ctx, {ctx.del(), x, ctx.lam(1)}, {}, 6, 3);
    Poly sum = Poly::zero(ctx);
    for (std::uint32_t n = 0; n <= q.degree_in(x); ++n)
      sum = sum + q.coefficient_of(x, n) * Poly::variable(ctx, x, n);
    CHECK(sum == q);
  }
}

TEST_CASE("evaluate_params") {
  Context ctx = Context::make();
  ctx.param("a");
  CHECK(P(ctx, "(a-2)*x").evaluate_params({{"a", Rational(2)}}).is_zero());

  Poly km = P(ctx, "k*m/c0*x");
  CHECK(km.evaluate_params({{"k", Rational(0)}}).is_zero());
  CHECK_THROWS_AS(km.evaluate_params({{"c0", Rational(0)}}), Error);
  // partial binding keeps the rest symbolic
  CHECK(km.evaluate_params({{"m", Rational(3)}}) == P(ctx, "3*k/c0*x"));
  // binding a lambda variable name is an error
  CHECK_THROWS_AS(km.evaluate_params({{"x", Rational(1)}}), Error);
}

TEST_CASE("evaluate_params commutes with ring ops") {
  Context ctx = Context::make();
  std::vector<VarId> vars = {ctx.del(), ctx.lam(0)};
  std::vector<VarId> params = {ctx.param("a"), ctx.param("b")};
  std::map<std::string, Rational> bind{{"a", Rational(3, 2)}, {"b", Rational(-1)}};
  std::mt19937_64 rng(987);
  for (int i = 0; i < 25; ++i) {
    Poly p = testutil::random_poly(rng, ctx, vars, params, 5, 3);
    Poly q = testutil::random_poly(rng, ctx, vars, params, 5, 3);
    CHECK((p + q).evaluate_params(bind) == p.evaluate_params(bind) + q.evaluate_params(bind));
    CHECK((p * q).evaluate_params(bind) == p.evaluate_params(bind) * q.evaluate_params(bind));
  }
}

TEST_CASE("parse and print") {
  Context ctx = Context::make();
  CHECK(to_string(P(ctx, "d + 2*x")) == "d + 2*x");
  CHECK(P(ctx, "0").is_zero());
  CHECK(to_string(P(ctx, "(d + a*x + b)")) == "d + a*x + b");
  CHECK(P(ctx, "3/2") == Poly::constant(ctx, Rational(3, 2)));
  CHECK(P(ctx, "  d+2 * x ") == P(ctx, "d + 2*x"));

  SUBCASE("errors carry positions") {
    CHECK_THROWS_AS(P(ctx, "d + "), ParseError);
    CHECK_THROWS_AS(P(ctx, "(d"), ParseError);
    CHECK_THROWS_AS(P(ctx, "d ^ a"), ParseError);
    CHECK_THROWS_AS(P(ctx, "1/0"), ParseError);
    CHECK_THROWS_AS(P(ctx, "1/(x)"), ParseError);
    CHECK_THROWS_AS(P(ctx, "d $ x"), ParseError);
  }
  SUBCASE("strict mode rejects unknown identifiers") {
    Context c2 = Context::make();
    CHECK_THROWS_AS(parse_poly_strict(c2, "q*x"), ParseError);
    c2.param("q");
    CHECK(parse_poly_strict(c2, "q*x") == P(c2, "q*x"));
  }
  SUBCASE("print-parse fixed point on random polys") {
    std::mt19937_64 rng(555);
    std::vector<VarId> vars = {ctx.del(), ctx.lam(0), ctx.lam(1)};
    std::vector<VarId> params = {ctx.param("a"), ctx.param("b"), ctx.param("c0")};
    for (int i = 0; i < 40; ++i) {
      Poly p = testutil::random_poly(rng, ctx, vars, params, 6, 3);
      std::string s = to_string(p);
      CHECK(P(ctx, s) == p);
      CHECK(to_string(P(ctx, s)) == s);
    }
  }
  SUBCASE("rational-function coefficients round-trip") {
    Poly p = P(ctx, "(a+b)/(c0+1)*x + k*m/c0^2*d - 1/c0");
    CHECK(P(ctx, to_string(p)) == p);
  }
}

TEST_CASE("ring axioms on randomized polys") {
  Context ctx = Context::make();
  std::vector<VarId> vars = {ctx.del(), ctx.lam(0), ctx.lam(1)};
  std::vector<VarId> params = {ctx.param("a")};
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 20; ++i) {
    Poly p = testutil::random_poly(rng, ctx, vars, params, 4, 3);
    Poly q = testutil::random_poly(rng, ctx, vars, params, 4, 3);
    Poly r = testutil::random_poly(rng, ctx, vars, params, 4, 3);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("skew substitution is an involution") {
  Context ctx = Context::make();
  VarId x = ctx.lam(0);
  Poly minus = P(ctx, "-d - x");
  std::mt19937_64 rng(77);
  for (int i = 0; i < 25; ++i) {
    Poly p = testutil::random_poly(rng, ctx, {ctx.del(), x, ctx.lam(1)}, {}, 5, 3);
    CHECK(p.substitute(x, minus).substitute(x, minus) == p);
  }
}

TEST_CASE("parameter field normalization") {
  Context ctx = Context::make();
  VarId a = ctx.param("a"), b = ctx.param("b");
  PPoly pa = PPoly::variable(a.id, Rational(1));
  PPoly pb = PPoly::variable(b.id, Rational(1));

  ParamField f = ParamField::fraction(pa * pa - pb * pb, pa - pb);
  CHECK(f == ParamField(pa + pb));

  ParamField g = ParamField::fraction(pa, pb.scaled(Rational(2)));
  CHECK(to_string(g, ctx) == "1/2*a/b");
  CHECK(g * ParamField(pb) == ParamField(pa.scaled(Rational(1, 2))));

  CHECK_THROWS_AS(ParamField::fraction(pa, PPoly()), Error);
  CHECK((ParamField(pa) - ParamField(pa)).is_zero());

  // field axioms spot-check with denominators
  ParamField h = ParamField(1) / (ParamField(pa) + ParamField(1));
  CHECK((h * (ParamField(pa) + ParamField(1))).is_one());
}

TEST_CASE("polynomial gcd") {
  Context ctx = Context::make();
  VarId a = ctx.param("a"), b = ctx.param("b");
  PPoly pa = PPoly::variable(a.id, Rational(1));
  PPoly pb = PPoly::variable(b.id, Rational(1));

  CHECK(pp_gcd(pa * pa - pb * pb, pa - pb) == pa - pb);
  CHECK(pp_gcd(pa * pb, pa) == pa);
  CHECK(pp_gcd(pa, pb) == PPoly::constant(Rational(1)));
  CHECK(pp_gcd((pa + pb) * (pa + pb), (pa + pb) * pa) == pa + pb);
  CHECK(pp_divide_exact(pa * pa - pb * pb, pa + pb).value() == pa - pb);
  CHECK(!pp_divide_exact(pa * pa, pb).has_value());

  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> coeff(-4, 4);
  auto rand_pp = [&](int terms, int deg) {
    PPoly p;
    std::uniform_int_distribution<int> d(0, deg);
    for (int t = 0; t < terms; ++t) {
      Mono m;
      int ea = d(rng), eb = d(rng);
      if (ea) m.emplace_back(a.id, ea);
      if (eb) m.emplace_back(b.id, eb);
      p.add_term(m, Rational(coeff(rng)));
    }
    return p;
  };
  for (int i = 0; i < 15; ++i) {
    PPoly u = rand_pp(3, 2), v = rand_pp(3, 2), w = rand_pp(2, 2);
    if (u.is_zero() || v.is_zero() || w.is_zero()) continue;
    PPoly g = pp_gcd(u * w, v * w);
    // w divides the gcd of uw, vw
    CHECK(pp_divide_exact(g, pp_primitive(w)).has_value());
    // and the gcd divides both products
    CHECK(pp_divide_exact(u * w, g).has_value());
    CHECK(pp_divide_exact(v * w, g).has_value());
  }
}

TEST_CASE("context discipline") {
  Context c1 = Context::make(), c2 = Context::make();
  c1.param("a");
  c2.param("b");
  Poly p = Poly::variable(c1, *c1.find("a"));
  Poly q = Poly::variable(c2, *c2.find("b"));
  CHECK_THROWS_AS(p + q, Error);  // clashing parameter tables

  Context c3 = Context::make();
  c3.param("a");
  Poly r = Poly::variable(c3, *c3.find("a"));
  CHECK(p + r == r.scaled(Rational(2)));  // prefix-compatible contexts merge

  CHECK_THROWS_AS(c1.param("x"), Error);  // reserved name
}
