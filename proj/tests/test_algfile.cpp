#include "doctest.h"

#include "confal/algfile.hpp"
#include "confal/parse.hpp"
#include "confal/wab.hpp"

#include "test_util.hpp"

#include <string>
#include <vector>

using namespace confal;

namespace {

// Structural equality across independently created contexts.
void require_same(const ConformalAlgebra& a, const ConformalAlgebra& b) {
  REQUIRE(a.generators() == b.generators());
  REQUIRE(a.params().size() == b.params().size());
  for (std::size_t i = 0; i < a.params().size(); ++i) {
    CHECK(a.params()[i].name == b.params()[i].name);
    CHECK(a.params()[i].nonzero == b.params()[i].nonzero);
  }
  Context joined = Context::join(a.ctx(), b.ctx());
  REQUIRE(a.tables().size() == b.tables().size());
  for (const auto& [key, ta] : a.tables()) {
    REQUIRE(b.has_table(key));
    const StructureTable& tb = b.table(key);
    CHECK(ta.symmetry() == tb.symmetry());
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < a.rank(); ++j)
        for (std::size_t m = 0; m < a.rank(); ++m)
          CHECK(ta.entry(i, j)[m].with_ctx(joined) == tb.entry(i, j)[m].with_ctx(joined));
  }
}

}  // namespace

TEST_CASE("every catalog entry round-trips through its text form") {
  for (const std::string& id : wab::catalog_ids()) {
    CAPTURE(id);
    ConformalAlgebra alg = wab::catalog(id);
    std::string text = print_algebra_file(alg);
    ConformalAlgebra back = parse_algebra_file(text);
    require_same(alg, back);
    CHECK(print_algebra_file(back) == text);
  }
}

TEST_CASE("parsing tolerates comments, blank lines, and zero entries") {
  const std::string text =
      "# rank-2 example\n"
      "params: b, c1 nonzero\n"
      "\n"
      "generators: L, M\n"
      "table circ:\n"
      "  L L = c1*L   # diagonal\n"
      "  L M = 0\n"
      "  M M = (d + 2*x)*M + b*L\n";
  ConformalAlgebra alg = parse_algebra_file(text);
  CHECK(alg.rank() == 2);
  REQUIRE(alg.params().size() == 2);
  CHECK(alg.params()[0].name == "b");
  CHECK_FALSE(alg.params()[0].nonzero);
  CHECK(alg.params()[1].name == "c1");
  CHECK(alg.params()[1].nonzero);
  const StructureTable& t = alg.table("circ");
  Context& ctx = alg.ctx();
  CHECK(t.entry(0, 0)[0] == parse_poly(ctx, "c1"));
  CHECK(t.entry(0, 1).is_zero());
  CHECK(t.entry(1, 0).is_zero());
  CHECK(t.entry(1, 1)[0] == parse_poly(ctx, "b"));
  CHECK(t.entry(1, 1)[1] == parse_poly(ctx, "d + 2*x"));

  // An explicit zero entry prints the same as an omitted one.
  std::string canon = print_algebra_file(alg);
  CHECK(canon.find("L M") == std::string::npos);
  require_same(alg, parse_algebra_file(canon));
}

TEST_CASE("signed sums and negative coefficients round-trip") {
  auto alg = testutil::make_alg({"L", "M"}, {{"c1", false}});
  testutil::add_table(alg, "circ",
                      {{"d", "0 - x"}, {"0", "0"}, {"0 - c1", "0"}, {"0", "0 - 1"}});
  std::string text = print_algebra_file(alg);
  CHECK(text.find("d*L + (-x)*M") != std::string::npos);
  CHECK(text.find("(-c1)*L") != std::string::npos);
  CHECK(text.find("(-1)*M") != std::string::npos);
  ConformalAlgebra back = parse_algebra_file(text);
  require_same(alg, back);
  CHECK(print_algebra_file(back) == text);
}

TEST_CASE("bare generators and unit coefficients print without a factor") {
  auto alg = testutil::make_alg({"L"});
  testutil::add_table(alg, "circ", {{"1"}});
  std::string text = print_algebra_file(alg);
  CHECK(text.find("L L = L\n") != std::string::npos);
  require_same(alg, parse_algebra_file(text));
}

TEST_CASE("declared symmetry is verified on load") {
  const std::string skew_ok =
      "generators: L, M\n"
      "table bracket skew:\n"
      "  L L = (d + 2*x)*L\n";
  CHECK(parse_algebra_file(skew_ok).table("bracket").symmetry() == Symmetry::Skew);

  const std::string skew_bad =
      "generators: L, M\n"
      "table bracket skew:\n"
      "  L M = x*M\n";
  CHECK_THROWS_WITH_AS(parse_algebra_file(skew_bad),
                       doctest::Contains("symmetry fails"), Error);

  const std::string comm_bad =
      "generators: L, M\n"
      "table circ commutative:\n"
      "  L M = M\n"
      "  M L = 2*M\n";
  CHECK_THROWS_WITH_AS(parse_algebra_file(comm_bad),
                       doctest::Contains("symmetry fails"), Error);
}

TEST_CASE("malformed input is rejected with the offending line") {
  auto bad = [](const std::string& text, const char* needle) {
    CHECK_THROWS_WITH_AS(parse_algebra_file(text), doctest::Contains(needle), Error);
  };
  bad("table circ:\n  L L = L\n", "no generators section");
  bad("generators: L\ntable circ:\n  L L = L\n  L L = 2*L\n", "duplicate entry");
  bad("generators: L\ntable circ:\n  L L = L\ntable circ:\n", "duplicate table");
  bad("generators: L\ntable circ:\nparams: c\n", "must precede tables");
  bad("generators: L\ngenerators: L\n", "duplicate generators");
  bad("generators: L\ntable circ:\n  L L = d + 2*x\n", "must end in a generator");
  bad("generators: L\ntable circ:\n  L L = c9*L\n", "unknown variable name: c9");
  bad("generators: L, M\ntable circ:\n  L L = L*M\n", "unknown variable name: L");
  bad("generators: L\ntable circ:\n  L L = (d*L\n", "unbalanced");
  bad("generators: L\ntable circ:\n  L L = d*L +\n", "ends with an operator");
  bad("generators: L\ntable circ:\n  L L = d**L\n", "empty factor");
  bad("generators: L\ntable circ:\n  L L\n", "needs '='");
  bad("generators: L\ntable circ:\n  L L M = L\n", "two generator names");
  bad("generators: L\ntable circ:\n  L K = L\n", "unknown generator: K");
  bad("generators: L\ntable circ extra junk:\n", "table header");
  bad("generators: L\ntable circ sideways:\n", "unknown symmetry tag");
  bad("generators: L\ntable circ\n", "must end with ':'");
  bad("params: c1 mostly\ngenerators: L\n", "'name' or 'name nonzero'");
  bad("params: d\ngenerators: L\n", "invalid parameter name: d");
  bad("generators: x\n", "invalid generator name: x");
  bad("  L L = L\n", "expected a section header");
  CHECK_THROWS_WITH_AS(parse_algebra_file("generators: L\ntable circ:\n  L L = c9*L\n"),
                       doctest::Contains("line 3"), Error);
}

TEST_CASE("declared parameters absent from every table are not printed") {
  auto alg = testutil::make_alg({"L"}, {{"c1", true}, {"unused", false}});
  testutil::add_table(alg, "circ", {{"c1"}});
  std::string text = print_algebra_file(alg);
  CHECK(text.find("params: c1 nonzero\n") != std::string::npos);
  CHECK(text.find("unused") == std::string::npos);
  CHECK(print_algebra_file(parse_algebra_file(text)) == text);
}

TEST_CASE("undeclared parameters appearing in tables are printed after declared ones") {
  auto alg = testutil::make_alg({"L"}, {{"c1", true}});
  // parse_poly interns k on the fly without a declaration.
  testutil::add_table(alg, "circ", {{"c1 + k*x"}});
  std::string text = print_algebra_file(alg);
  CHECK(text.find("params: c1 nonzero, k\n") != std::string::npos);
  ConformalAlgebra back = parse_algebra_file(text);
  REQUIRE(back.params().size() == 2);
  CHECK(back.params()[1].name == "k");
  CHECK_FALSE(back.params()[1].nonzero);
  CHECK(print_algebra_file(back) == text);
}

TEST_CASE("octuple extraction works on parsed files") {
  std::string text = print_algebra_file(wab::catalog("2.2"));
  ConformalAlgebra alg = parse_algebra_file(text);
  wab::CandidateOctuple oct = wab::algebra_octuple(alg);
  CHECK(oct.nonzero == std::set<std::string>{"c1"});
  CHECK(wab::residual_system(oct, Poly::constant(oct.ctx, Rational(2)),
                             Poly::variable(oct.ctx, oct.ctx.param("b")))
            .empty());
}
