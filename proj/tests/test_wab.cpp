#include "confal/wab.hpp"

#include "confal/basis.hpp"
#include "confal/build.hpp"
#include "confal/checks.hpp"
#include "confal/parse.hpp"
#include "test_util.hpp"

#include "doctest.h"

#include <random>
#include <set>
#include <string>
#include <vector>

using namespace confal;

namespace {

bool passes_tpca_laws(const ConformalAlgebra& alg) {
  return check_associative(alg, "circ").overall && check_lie(alg, "bracket").overall &&
         check_transposed_leibniz(alg, "circ", "bracket").overall;
}

const SolutionFamily* family_with(const SolveResult& r,
                                  const std::vector<std::string>& assumptions) {
  for (const SolutionFamily& f : r.families)
    if (f.assumptions == assumptions) return &f;
  return nullptr;
}

void check_bindings(const SolutionFamily& fam,
                    const std::vector<std::pair<std::string, std::string>>& expected,
                    const std::vector<std::string>& frees) {
  for (const auto& [name, value] : expected) {
    REQUIRE_MESSAGE(fam.bindings.count(name) == 1, "missing binding for ", name);
    CHECK_MESSAGE(fam.bindings.at(name) == value, name, " = ", fam.bindings.at(name),
                  ", expected ", value);
  }
  CHECK(fam.free_params == frees);
}

}  // namespace

TEST_CASE("base bracket families satisfy the Lie axioms") {
  CHECK(check_lie(wab::make_vir(), "bracket").overall);
  CHECK(check_lie(wab::make_wab(), "bracket").overall);
  CHECK(check_lie(wab::make_wab(Rational(2)), "bracket").overall);
  CHECK(check_lie(wab::make_wab(Rational(2), Rational(1)), "bracket").overall);
}

TEST_CASE("numeric arguments specialize the symbolic bracket") {
  ConformalAlgebra alg = wab::make_wab(Rational(2));
  Context ctx = alg.ctx();
  CHECK(alg.table("bracket").entry(0, 1)[1] == parse_poly(ctx, "d + 2*x + b"));
  CHECK(alg.table("bracket").entry(1, 0)[1] == parse_poly(ctx, "d + 2*x - b"));
  ConformalAlgebra num = wab::make_wab(Rational(3), Rational(1));
  Context nctx = num.ctx();
  CHECK(num.table("bracket").entry(1, 0)[1] == parse_poly(nctx, "2*d + 3*x - 1"));
}

TEST_CASE("every catalog entry carries a compatible pair") {
  for (const std::string& id : wab::catalog_ids()) {
    ConformalAlgebra alg = wab::catalog(id);
    CHECK_MESSAGE(passes_tpca_laws(alg), "catalog entry ", id);
  }
  CHECK_THROWS_AS(wab::catalog("nope"), Error);
}

TEST_CASE("catalog octuples satisfy the full residual system") {
  Rational two(2);
  for (const std::string& id : {"2.1", "2.2", "2.3", "2.4", "NF1", "NF2", "NF3", "NF5"}) {
    wab::CandidateOctuple oct = wab::catalog_octuple(id);
    Context ctx = oct.ctx;
    wab::ResidualSystem sys = wab::residual_system(
        oct, Poly::constant(ctx, two), Poly::variable(ctx, ctx.param("b")));
    CHECK_MESSAGE(sys.empty(), "entry ", id, " first nonzero: ",
                  sys.nonzero_labels().empty() ? "-" : sys.nonzero_labels()[0]);
  }
  // NF4 lives over the b = 0 slice of the bracket.
  wab::CandidateOctuple nf4 = wab::catalog_octuple("NF4");
  CHECK(wab::residual_system(nf4, Rational(2), Rational(0)).empty());
  // The zero product is compatible with fully symbolic a and b.
  wab::CandidateOctuple zero = wab::catalog_octuple("1");
  Context zctx = zero.ctx;
  CHECK(wab::residual_system(zero, Poly::variable(zctx, zctx.param("a")),
                             Poly::variable(zctx, zctx.param("b")))
            .empty());
  CHECK_THROWS_AS(wab::catalog_octuple("vir-c"), Error);
}

TEST_CASE("residual system enumerates both laws over all triples") {
  wab::CandidateOctuple oct = wab::catalog_octuple("NF2");
  wab::ResidualSystem sys = wab::residual_system(oct, Rational(2), Rational(1));
  REQUIRE(sys.entries.size() == 32);
  CHECK(sys.entries.front().label == "assoc(L,L,L):L");
  CHECK(sys.entries.back().label == "leibniz(M,M,M):M");
  CHECK(sys.find("leibniz(L,M,L):M") != nullptr);
  CHECK(sys.find("nonsense") == nullptr);
}

TEST_CASE("residual system rejects candidates using a second lambda variable") {
  Context ctx = Context::make();
  wab::CandidateOctuple oct = wab::CandidateOctuple::zero(ctx);
  oct.f1 = Poly::variable(ctx, ctx.lam(1));
  CHECK_THROWS_AS(wab::residual_system(oct, Rational(2), Rational(0)), Error);
}

TEST_CASE("hand-computed residual for the linear-coefficient candidate") {
  // L o_x L = x L alone: associativity on (L,L,L) leaves exactly -x^2 on L.
  Context ctx = Context::make();
  wab::CandidateOctuple oct = wab::CandidateOctuple::zero(ctx);
  oct.f1 = Poly::variable(ctx, ctx.lam(0));
  wab::ResidualSystem sys = wab::residual_system(oct, Rational(2), Rational(0));
  const Poly* r = sys.find("assoc(L,L,L):L");
  REQUIRE(r != nullptr);
  Poly x = Poly::variable(ctx, ctx.lam(0));
  CHECK(*r == -(x * x));
  wab::ResidualSystem orc = wab::equation_oracle(oct, Poly::constant(ctx, Rational(2)),
                                                 Poly::zero(ctx), {"assoc(L,L,L):L"});
  CHECK(orc.entries.at(0).residual == -(x * x));
}

TEST_CASE("transcribed equations agree with the engine on random candidates") {
  const std::set<std::string> mirrored = {"leibniz(L,M,M):M", "leibniz(M,M,M):M"};
  const std::vector<std::pair<Rational, Rational>> ab = {
      {Rational(2), Rational(0)},  {Rational(2), Rational(1)}, {Rational(3), Rational(1)},
      {Rational(1), Rational(-1)}, {Rational(0), Rational(2)}, {Rational(1, 2), Rational(3)},
  };
  std::mt19937_64 rng(20240817);
  std::vector<std::string> labels = wab::oracle_labels();
  REQUIRE(labels.size() == 30);

  for (int trial = 0; trial < 54; ++trial) {
    Context ctx = Context::make();
    std::vector<VarId> vars = {ctx.del(), ctx.lam(0)};
    auto rand_fn = [&]() { return testutil::random_poly(rng, ctx, vars, {}, 3, 2); };
    wab::CandidateOctuple oct{ctx,       rand_fn(), rand_fn(), rand_fn(), rand_fn(),
                              rand_fn(), rand_fn(), rand_fn(), rand_fn(), {}};
    const auto& [a, b] = ab[trial % ab.size()];
    wab::ResidualSystem engine = wab::residual_system(oct, a, b);
    wab::ResidualSystem oracle = wab::equation_oracle(
        oct, Poly::constant(ctx, a), Poly::constant(ctx, b));
    REQUIRE(oracle.entries.size() == 30);

    for (const wab::ResidualEntry& e : oracle.entries) {
      const Poly* eng = engine.find(e.label);
      REQUIRE(eng != nullptr);
      bool same = mirrored.count(e.label) ? (*eng == -e.residual) : (*eng == e.residual);
      CHECK_MESSAGE(same, "label ", e.label, " trial ", trial);
    }
    for (const char* label : {"leibniz(L,M,M):L", "leibniz(M,M,M):L"}) {
      const Poly* eng = engine.find(label);
      REQUIRE(eng != nullptr);
      CHECK_MESSAGE(eng->is_zero(), "expected identically zero slot ", label);
    }
  }
}

TEST_CASE("equation oracle filters by label and rejects unknown ones") {
  wab::CandidateOctuple oct = wab::catalog_octuple("NF2");
  Context ctx = oct.ctx;
  Poly two = Poly::constant(ctx, Rational(2));
  Poly b = Poly::variable(ctx, ctx.param("b"));
  wab::ResidualSystem one = wab::equation_oracle(oct, two, b, {"leibniz(M,M,L):M"});
  REQUIRE(one.entries.size() == 1);
  CHECK(one.entries[0].label == "leibniz(M,M,L):M");
  CHECK_THROWS_AS(wab::equation_oracle(oct, two, b, {"leibniz(M,M,M):L"}), Error);
}

TEST_CASE("shape reduction collapses the system onto six equations") {
  CheckReport r = wab::verify_lemma_A();
  CHECK_MESSAGE(r.overall, r.to_text(true));
  CHECK(r.laws.size() == 34);
}

TEST_CASE("away from the special line only the zero product survives") {
  CheckReport r = wab::verify_lemma_A(Rational(3), Rational(1), 2);
  CHECK_MESSAGE(r.overall, r.to_text(true));
}

TEST_CASE("reduced solver returns the four families at degree 4, depth 2") {
  SolveResult r = wab::solve_reduced(4, 2);
  REQUIRE_MESSAGE(r.complete(), solve_result_to_json(r));
  REQUIRE_MESSAGE(r.families.size() == 4, solve_result_to_json(r));

  const SolutionFamily* b1 = family_with(r, {"c0 = 0", "c1 = 0"});
  REQUIRE(b1 != nullptr);
  check_bindings(*b1,
                 {{"c0", "0"},
                  {"c1", "0"},
                  {"p1", "0"},
                  {"p2", "0"},
                  {"p3", "0"},
                  {"p4", "0"},
                  {"l0", "0"},
                  {"l1", "0"},
                  {"l2", "0"},
                  {"l3", "0"},
                  {"l4", "0"}},
                 {"s0", "s1", "s2", "s3", "s4"});

  const SolutionFamily* b2 = family_with(r, {"c0 = 0", "c1 != 0", "l = 0"});
  REQUIRE(b2 != nullptr);
  check_bindings(*b2,
                 {{"c0", "0"},
                  {"p1", "0"},
                  {"p2", "0"},
                  {"p3", "0"},
                  {"p4", "0"},
                  {"s0", "0"},
                  {"s2", "0"},
                  {"s3", "0"},
                  {"s4", "0"},
                  {"l0", "0"},
                  {"l1", "0"},
                  {"l2", "0"},
                  {"l3", "0"},
                  {"l4", "0"}},
                 {"c1", "s1"});

  const SolutionFamily* b3 = family_with(r, {"c0 = 0", "c1 != 0", "l = c1"});
  REQUIRE(b3 != nullptr);
  check_bindings(*b3,
                 {{"c0", "0"},
                  {"p1", "0"},
                  {"p2", "0"},
                  {"p3", "0"},
                  {"p4", "0"},
                  {"s1", "0"},
                  {"s2", "0"},
                  {"s3", "0"},
                  {"s4", "0"},
                  {"l0", "c1"},
                  {"l1", "0"},
                  {"l2", "0"},
                  {"l3", "0"},
                  {"l4", "0"}},
                 {"c1", "s0"});

  const SolutionFamily* b4 = family_with(r, {"c0 != 0"});
  REQUIRE(b4 != nullptr);
  check_bindings(*b4,
                 {{"p1", "-l1"},
                  {"p2", "0"},
                  {"p3", "0"},
                  {"p4", "0"},
                  {"s0", "0"},
                  {"s1", "c1*l1/c0"},
                  {"s2", "-l1^2/c0"},
                  {"s3", "0"},
                  {"s4", "0"},
                  {"l0", "0"},
                  {"l2", "0"},
                  {"l3", "0"},
                  {"l4", "0"}},
                 {"c0", "c1", "l1"});
}

TEST_CASE("reduced solver with c0 substituted up front gives three families") {
  SolveResult r = wab::solve_reduced(4, 1, /*assume_c0_zero=*/true);
  REQUIRE_MESSAGE(r.complete(), solve_result_to_json(r));
  REQUIRE(r.families.size() == 3);
  CHECK(family_with(r, {"c1 = 0"}) != nullptr);
  CHECK(family_with(r, {"c1 != 0", "l = 0"}) != nullptr);
  CHECK(family_with(r, {"c1 != 0", "l = c1"}) != nullptr);
}

TEST_CASE("reduced solver at degree 0 keeps the same four-way case shape") {
  SolveResult r = wab::solve_reduced(0, 2);
  REQUIRE_MESSAGE(r.complete(), solve_result_to_json(r));
  REQUIRE(r.families.size() == 4);

  const SolutionFamily* b1 = family_with(r, {"c0 = 0", "c1 = 0"});
  REQUIRE(b1 != nullptr);
  check_bindings(*b1, {{"c0", "0"}, {"c1", "0"}, {"l0", "0"}}, {"s0"});

  const SolutionFamily* b2 = family_with(r, {"c0 = 0", "c1 != 0", "l = 0"});
  REQUIRE(b2 != nullptr);
  check_bindings(*b2, {{"c0", "0"}, {"s0", "0"}, {"l0", "0"}}, {"c1"});

  const SolutionFamily* b3 = family_with(r, {"c0 = 0", "c1 != 0", "l = c1"});
  REQUIRE(b3 != nullptr);
  check_bindings(*b3, {{"c0", "0"}, {"l0", "c1"}}, {"c1", "s0"});

  const SolutionFamily* b4 = family_with(r, {"c0 != 0"});
  REQUIRE(b4 != nullptr);
  check_bindings(*b4, {{"s0", "0"}, {"l0", "0"}}, {"c0", "c1"});
}

TEST_CASE("rank-1 ansatz solver finds exactly the constant family") {
  SolveResult r = wab::solve_vir(3);
  REQUIRE_MESSAGE(r.complete(), solve_result_to_json(r));
  REQUIRE(r.families.size() == 1);
  const SolutionFamily& fam = r.families[0];
  CHECK(fam.assumptions.empty());
  CHECK(fam.free_params == std::vector<std::string>{"f_00"});
  for (const auto& [id, val] : fam.raw_bindings) CHECK(val.is_zero());
}

TEST_CASE("full ansatz solver at a generic point returns only zero") {
  SolveResult r = wab::solve_full(Rational(3), Rational(1), 1);
  REQUIRE_MESSAGE(r.complete(), solve_result_to_json(r));
  REQUIRE(r.families.size() == 1);
  const SolutionFamily& fam = r.families[0];
  CHECK(fam.assumptions.empty());
  CHECK(fam.free_params.empty());
  for (const auto& [id, val] : fam.raw_bindings) CHECK(val.is_zero());
}

TEST_CASE("normal-form reductions and law checks all pass") {
  CheckReport r = wab::verify_normal_forms();
  CHECK_MESSAGE(r.overall, r.to_text(true));
  CHECK(r.laws.size() == 10);
}

TEST_CASE("rank-1 classification report passes") {
  CheckReport r = wab::verify_vir_classification();
  CHECK_MESSAGE(r.overall, r.to_text(true));
}

TEST_CASE("commutativity of the one-function family needs a constant") {
  ConformalAlgebra generic = wab::catalog("NF1");
  CHECK_FALSE(check_commutative(generic, "circ").overall);

  ConformalAlgebra constant = testutil::make_alg({"L", "M"}, {{"b", false}, {"s0", false}});
  testutil::add_table(constant, "circ",
                      {{"0", "s0"}, {"0", "0"}, {"0", "0"}, {"0", "0"}}, Symmetry::None);
  testutil::add_table(constant, "bracket",
                      {{"d + 2*x", "0"}, {"0", "d + 2*x + b"}, {"0", "d + 2*x - b"}, {"0", "0"}},
                      Symmetry::Skew);
  CHECK(check_commutative(constant, "circ").overall);
  CHECK(check_transposed_leibniz(constant, "circ", "bracket").overall);
}

TEST_CASE("basis changes round-trip every rank-2 catalog entry") {
  for (const std::string& id :
       {"1", "2.1", "2.2", "2.3", "2.4", "NF1", "NF2", "NF3", "NF4", "NF5"}) {
    ConformalAlgebra alg = wab::catalog(id);
    Context ctx = alg.ctx();
    std::vector<Poly> rows = {parse_poly(ctx, "1"), parse_poly(ctx, "d"),
                              parse_poly(ctx, "0"), parse_poly(ctx, "1")};
    BasisChange T(ctx, 2, rows);
    ConformalAlgebra after = change_basis(alg, T);
    BasisChange Tinv(ctx, 2,
                     {T.inverse_entry(0, 0), T.inverse_entry(0, 1), T.inverse_entry(1, 0),
                      T.inverse_entry(1, 1)});
    ConformalAlgebra back = change_basis(after, Tinv);
    for (const std::string& key : {std::string("circ"), std::string("bracket")})
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          for (std::size_t m = 0; m < 2; ++m)
            CHECK_MESSAGE(back.table(key).entry(i, j)[m] == alg.table(key).entry(i, j)[m],
                          "entry ", key, "(", i, ",", j, ")[", m, "] of ", id);
  }
}
