#include "doctest.h"

#include "confal/checks.hpp"

#include "test_util.hpp"

#include <random>

using namespace confal;
using testutil::add_table;
using testutil::make_alg;

namespace {

Poly P(Context& ctx, const std::string& s) { return parse_poly(ctx, s); }

const LawResult& find_law(const CheckReport& r, const std::string& law,
                          const std::string& tuple) {
  for (const auto& entry : r.laws) {
    if (entry.law == law && entry.tuple == tuple) return entry;
  }
  throw std::runtime_error("law result not found: " + law + " " + tuple);
}

bool group_passes(const CheckReport& r, const std::string& law) {
  bool all = true;
  bool seen = false;
  for (const auto& entry : r.laws) {
    if (entry.law != law) continue;
    seen = true;
    all = all && entry.pass;
  }
  REQUIRE(seen);
  return all;
}

// Rank-1 algebra with product L o L = c L for a nonzero parameter c.
ConformalAlgebra make_scalar_product(const std::string& coeff = "c") {
  auto alg = make_alg({"L"}, {{"c", true}});
  add_table(alg, "mul", {{coeff}}, Symmetry::None);
  return alg;
}

// Current algebra of the two matrix units e11, e12: associative but not
// commutative.
ConformalAlgebra make_matrix_units() {
  auto alg = make_alg({"A", "B"});
  add_table(alg, "mul", {{"1", "0"}, {"0", "1"}, {"0", "0"}, {"0", "0"}});
  return alg;
}

// Current algebra of C[t]/(t^2) with the product table of (U, T) = (1, t),
// together with the multiplication induced by the derivation t d/dt.
ConformalAlgebra make_dual_numbers_with_star() {
  auto alg = make_alg({"U", "T"});
  add_table(alg, "mul", {{"1", "0"}, {"0", "1"}, {"0", "1"}, {"0", "0"}},
            Symmetry::Commutative);
  add_table(alg, "star", {{"0", "0"}, {"0", "1"}, {"0", "0"}, {"0", "0"}});
  return alg;
}

// Rank-1 pair: circ L o L = cL and the multiplication induced from it by the
// derivation D = d, i.e. L * L = c(d + x)L.
ConformalAlgebra make_scalar_with_derived_star() {
  auto alg = make_alg({"L"}, {{"c", true}});
  add_table(alg, "mul", {{"c"}});
  add_table(alg, "star", {{"c*(d + x)"}});
  return alg;
}

// Rank-2 noncommutative pair: the rank-2 bracket with a = 2 and symbolic b,
// plus the product family L o L = (m - kx)L + (km/c0 x - k^2/c0 x^2)M,
// L o M = (m - kx)M, M o L = c0 L + kxM, M o M = c0 M with c0 nonzero.
ConformalAlgebra make_noncomm_pair() {
  auto alg = make_alg({"L", "M"},
                      {{"b", false}, {"c0", true}, {"k", false}, {"m", false}});
  add_table(alg, "bracket",
            {{"d + 2*x", "0"},
             {"0", "d + 2*x + b"},
             {"0", "d + 2*x - b"},
             {"0", "0"}},
            Symmetry::Skew);
  add_table(alg, "circ",
            {{"m - k*x", "k*m/c0*x - k^2/c0*x^2"},
             {"0", "m - k*x"},
             {"c0", "k*x"},
             {"0", "c0"}});
  return alg;
}

LambdaElement substituted(const LambdaElement& el, VarId v, const Poly& target) {
  return el.substitute(v, target);
}

// Random table for the named key whose declared symmetry really holds, built
// by symmetrizing random entries.
void add_random_symmetric_table(ConformalAlgebra& alg, const std::string& key, bool skew,
                                std::mt19937_64& rng) {
  Context& c = alg.ctx();
  VarId vd = c.del(), vx = c.lam(0);
  Poly mdx = -Poly::variable(c, vd) - Poly::variable(c, vx);
  std::size_t r = alg.rank();
  auto rand_elem = [&] {
    std::vector<Poly> comps;
    for (std::size_t t = 0; t < r; ++t) {
      comps.push_back(testutil::random_poly(rng, c, {vd, vx}, {}, 2, 2));
    }
    return LambdaElement(std::move(comps));
  };
  std::vector<LambdaElement> entries(r * r, LambdaElement::zero(c, r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      LambdaElement e = rand_elem();
      if (i == j) {
        LambdaElement mirror = substituted(e, vx, mdx);
        e = skew ? e - mirror : e + mirror;
        entries[i * r + j] = e;
      } else {
        entries[i * r + j] = e;
        LambdaElement mirror = substituted(e, vx, mdx);
        entries[j * r + i] = skew ? -mirror : mirror;
      }
    }
  }
  alg.add_table(key, StructureTable(c, r, std::move(entries),
                                    skew ? Symmetry::Skew : Symmetry::Commutative));
}

}  // namespace

TEST_CASE("associativity checker") {
  ConformalAlgebra good = make_scalar_product();
  CheckReport r = check_associative(good, "mul");
  CHECK(r.overall);
  CHECK(r.suite == "associative");
  CHECK(r.laws.size() == 1);
  CHECK(find_law(r, "associativity", "(L,L,L)").residual == "0");

  auto bad = make_alg({"L"});
  add_table(bad, "mul", {{"d"}});
  CheckReport rb = check_associative(bad, "mul");
  CHECK(!rb.overall);
  LambdaElement expected({P(bad.ctx(), "d^2 + 2*d*x + d*y")});
  CHECK(find_law(rb, "associativity", "(L,L,L)").residual ==
        to_string(expected, bad.generators()));

  auto zero = make_alg({"L"});
  add_table(zero, "mul", {{"0"}});
  CHECK(check_associative(zero, "mul").overall);

  CHECK_THROWS_AS((void)check_associative(good, "nope"), Error);
}

TEST_CASE("commutativity checker") {
  CHECK(check_commutative(make_scalar_product(), "mul").overall);

  auto bad = make_alg({"L"});
  add_table(bad, "mul", {{"x"}});
  CheckReport rb = check_commutative(bad, "mul");
  CHECK(!rb.overall);
  LambdaElement expected({P(bad.ctx(), "d + 2*x")});
  CHECK(find_law(rb, "commutativity", "(L,L)").residual ==
        to_string(expected, bad.generators()));

  auto zero = make_alg({"L"});
  add_table(zero, "mul", {{"0"}});
  CHECK(check_commutative(zero, "mul").overall);
}

TEST_CASE("lie checker accepts the standard brackets") {
  ConformalAlgebra vir = testutil::make_vir();
  CheckReport rv = check_lie(vir, "bracket");
  CHECK(rv.overall);
  CHECK(group_passes(rv, "sesquilinearity-left"));
  CHECK(group_passes(rv, "sesquilinearity-right"));
  CHECK(group_passes(rv, "skew-symmetry"));
  CHECK(group_passes(rv, "jacobi"));

  ConformalAlgebra wab = testutil::make_wab_symbolic();
  CHECK(check_lie(wab, "bracket").overall);
}

TEST_CASE("lie checker rejects a non-skew bracket") {
  auto bad = make_alg({"L"});
  add_table(bad, "bracket", {{"1"}});
  CheckReport r = check_lie(bad, "bracket");
  CHECK(!r.overall);
  LambdaElement two_l({P(bad.ctx(), "2")});
  CHECK(find_law(r, "skew-symmetry", "(L,L)").residual ==
        to_string(two_l, bad.generators()));
  // The constant bracket also misses Jacobi by L - L - L = -L.
  LambdaElement minus_l({P(bad.ctx(), "-1")});
  CHECK(find_law(r, "jacobi", "(L,L,L)").residual ==
        to_string(minus_l, bad.generators()));
}

TEST_CASE("hom-lie checker") {
  ConformalAlgebra vir = testutil::make_vir();
  Context& c = vir.ctx();

  Endomorphism id = Endomorphism::identity(c, 1);
  CHECK(check_hom_lie(vir, "bracket", id).overall);

  Endomorphism dmul = Endomorphism::scalar(c, 1, P(c, "d"));
  CheckReport r = check_hom_lie(vir, "bracket", dmul);
  CHECK(!r.overall);
  CHECK(group_passes(r, "skew-symmetry"));
  CHECK(!group_passes(r, "hom-jacobi"));

  Endomorphism wrong_rank = Endomorphism::identity(c, 2);
  CHECK_THROWS_AS((void)check_hom_lie(vir, "bracket", wrong_rank), Error);
}

TEST_CASE("left-symmetric and novikov checkers") {
  ConformalAlgebra paired = make_scalar_with_derived_star();
  CHECK(check_left_symmetric(paired, "star").overall);
  CHECK(check_novikov(paired, "star").overall);

  // Any associative product is left-symmetric, even a noncommutative one...
  ConformalAlgebra mat = make_matrix_units();
  CHECK(check_associative(mat, "mul").overall);
  CHECK(!check_commutative(mat, "mul").overall);
  CHECK(check_left_symmetric(mat, "mul").overall);
  // ...but right-commutativity can still fail.
  CheckReport rn = check_novikov(mat, "mul");
  CHECK(!rn.overall);
  CHECK(group_passes(rn, "left-symmetry"));
  CHECK(!group_passes(rn, "right-commutativity"));
  LambdaElement minus_b({Poly::zero(mat.ctx()), P(mat.ctx(), "-1")});
  CHECK(find_law(rn, "right-commutativity", "(A,B,A)").residual ==
        to_string(minus_b, mat.generators()));

  auto quad = make_alg({"L"});
  add_table(quad, "mul", {{"x^2"}});
  CHECK(!check_left_symmetric(quad, "mul").overall);
  CHECK(!check_novikov(quad, "mul").overall);
}

TEST_CASE("poisson leibniz checker") {
  // Zero bracket with any product: both Leibniz forms hold trivially.
  auto zb = make_alg({"L"}, {{"c", true}});
  add_table(zb, "mul", {{"c"}});
  add_table(zb, "bracket", {{"0"}});
  CHECK(check_poisson_leibniz(zb, "mul", "bracket").overall);

  // Zero product with any bracket likewise.
  auto zc = make_alg({"L"});
  add_table(zc, "mul", {{"0"}});
  add_table(zc, "bracket", {{"d + 2*x"}});
  CHECK(check_poisson_leibniz(zc, "mul", "bracket").overall);

  // The standard rank-1 bracket with L o L = cL violates the Leibniz rule:
  // the residual at (L,L,L) is -cx L.
  auto mixed = make_alg({"L"}, {{"c", true}});
  add_table(mixed, "mul", {{"c"}});
  add_table(mixed, "bracket", {{"d + 2*x"}}, Symmetry::Skew);
  CheckReport r = check_poisson_leibniz(mixed, "mul", "bracket");
  CHECK(!r.overall);
  LambdaElement expected({P(mixed.ctx(), "-c*x")});
  CHECK(find_law(r, "leibniz", "(L,L,L)").residual ==
        to_string(expected, mixed.generators()));
}

TEST_CASE("transposed leibniz checker") {
  // L o L = cL against the rank-1 bracket: both rule forms hold.
  auto good = make_alg({"L"}, {{"c", true}});
  add_table(good, "mul", {{"c"}});
  add_table(good, "bracket", {{"d + 2*x"}}, Symmetry::Skew);
  CheckReport r = check_transposed_leibniz(good, "mul", "bracket");
  CHECK(r.overall);
  CHECK(group_passes(r, "transposed-leibniz"));
  CHECK(group_passes(r, "transposed-leibniz-shifted"));

  // L o L = dL fails.
  auto bad = make_alg({"L"});
  add_table(bad, "mul", {{"d"}});
  add_table(bad, "bracket", {{"d + 2*x"}}, Symmetry::Skew);
  CHECK(!check_transposed_leibniz(bad, "mul", "bracket").overall);
}

TEST_CASE("noncommutative rank-2 pair passes the full bundle") {
  ConformalAlgebra alg = make_noncomm_pair();
  CHECK(check_lie(alg, "bracket").overall);
  CHECK(check_associative(alg, "circ").overall);
  CHECK(!check_commutative(alg, "circ").overall);
  // The direct transposed Leibniz form holds; the shifted rewriting is not
  // reported for this noncommutative product (it genuinely fails here).
  CheckReport tr = check_transposed_leibniz(alg, "circ", "bracket");
  CHECK(tr.overall);
  CHECK(group_passes(tr, "transposed-leibniz"));
  for (const auto& law : tr.laws) CHECK(law.law == "transposed-leibniz");
  CHECK(tr.laws.size() == 8);

  // All shifted-associativity consequences hold, and this particular family
  // even has commuting left multiplications without being commutative.
  CHECK(check_assoc_remarks(alg, "circ").overall);

  CHECK(is_tpca(alg, "circ", "bracket", /*require_commutative=*/false));
  CHECK(!is_tpca(alg, "circ", "bracket", /*require_commutative=*/true));
}

TEST_CASE("np conditions and pre-Lie checkers on derivation-induced products") {
  ConformalAlgebra paired = make_scalar_with_derived_star();
  CHECK(check_np_conditions(paired, "mul", "star").overall);
  CHECK(check_prelie_commutative(paired, "mul", "star").overall);
  CHECK(check_prelie_poisson(paired, "mul", "star").overall);
  CHECK(check_diff_np(paired, "mul", "star").overall);

  ConformalAlgebra dual = make_dual_numbers_with_star();
  CHECK(is_comm_assoc(dual, "mul"));
  CHECK(check_left_symmetric(dual, "star").overall);
  CHECK(check_novikov(dual, "star").overall);
  CHECK(check_np_conditions(dual, "mul", "star").overall);
  CHECK(check_prelie_commutative(dual, "mul", "star").overall);
  CHECK(check_diff_np(dual, "mul", "star").overall);

  // Zero star always passes the coupling laws.
  auto zs = make_alg({"L"}, {{"c", true}});
  add_table(zs, "mul", {{"c"}});
  add_table(zs, "star", {{"0"}});
  CHECK(check_np_conditions(zs, "mul", "star").overall);
  CHECK(check_prelie_commutative(zs, "mul", "star").overall);
  CHECK(check_diff_np(zs, "mul", "star").overall);
}

TEST_CASE("np conditions and pre-Lie checkers reject broken pairs") {
  // A non-associative product used for both operations breaks the mixed
  // associativity law.
  auto bad = make_alg({"L"});
  add_table(bad, "mul", {{"d"}});
  add_table(bad, "star", {{"d"}});
  CheckReport r = check_np_conditions(bad, "mul", "star");
  CHECK(!r.overall);
  CHECK(!group_passes(r, "circ-star-associativity"));
  CHECK(!check_prelie_poisson(bad, "mul", "star").overall);
  CHECK(!check_diff_np(bad, "mul", "star").overall);

  // L * L = L against L o L = L: the star-derivation law misses by -L.
  auto unit = make_alg({"L"});
  add_table(unit, "mul", {{"1"}});
  add_table(unit, "star", {{"1"}});
  CheckReport rp = check_prelie_commutative(unit, "mul", "star");
  CHECK(!rp.overall);
  LambdaElement minus_l({P(unit.ctx(), "-1")});
  CHECK(find_law(rp, "star-leibniz", "(L,L,L)").residual ==
        to_string(minus_l, unit.generators()));
}

TEST_CASE("associativity remarks checker") {
  ConformalAlgebra good = make_scalar_product();
  CHECK(check_assoc_remarks(good, "mul").overall);

  ConformalAlgebra dual = make_dual_numbers_with_star();
  CHECK(check_assoc_remarks(dual, "mul").overall);

  auto zero = make_alg({"L"});
  add_table(zero, "mul", {{"0"}});
  CHECK(check_assoc_remarks(zero, "mul").overall);

  auto bad = make_alg({"L"});
  add_table(bad, "mul", {{"d"}});
  CheckReport r = check_assoc_remarks(bad, "mul");
  CHECK(!r.overall);
  LambdaElement expected({P(bad.ctx(), "d*x - d*y")});
  CHECK(find_law(r, "shifted-associativity-1", "(L,L,L)").residual ==
        to_string(expected, bad.generators()));
}

TEST_CASE("the two transposed Leibniz forms agree on randomized tables") {
  std::mt19937_64 rng(20240817u);
  for (int iter = 0; iter < 12; ++iter) {
    std::size_t rank = (iter % 2) + 1;
    auto alg = make_alg(rank == 1 ? std::vector<std::string>{"L"}
                                  : std::vector<std::string>{"L", "M"});
    add_random_symmetric_table(alg, "mul", /*skew=*/false, rng);
    add_random_symmetric_table(alg, "bracket", /*skew=*/true, rng);

    CheckReport tr = check_transposed_leibniz(alg, "mul", "bracket");
    CHECK(group_passes(tr, "transposed-leibniz") ==
          group_passes(tr, "transposed-leibniz-shifted"));

    CheckReport pr = check_poisson_leibniz(alg, "mul", "bracket");
    CHECK(group_passes(pr, "leibniz") == group_passes(pr, "leibniz-shifted"));
  }
}

TEST_CASE("check reports serialize deterministically") {
  ConformalAlgebra good = make_scalar_product();
  CheckReport r = check_commutative(good, "mul");
  nlohmann::ordered_json j = r.to_json();
  CHECK(j["suite"] == "commutative");
  CHECK(j["overall"] == true);
  CHECK(j["laws"].size() == 1);
  CHECK(j["laws"][0]["law"] == "commutativity");
  CHECK(j["laws"][0]["tuple"] == "(L,L)");
  CHECK(j["laws"][0]["residual"] == "0");
  CHECK(j["laws"][0]["pass"] == true);
  CHECK(r.to_text().find("PASS") != std::string::npos);

  auto bad = make_alg({"L"});
  add_table(bad, "mul", {{"x"}});
  CheckReport rb = check_commutative(bad, "mul");
  CHECK(rb.to_text().find("FAIL") != std::string::npos);
  CHECK(rb.failure_count() == 1);

  std::vector<CheckReport> batch{r, rb};
  nlohmann::ordered_json jb = reports_to_json(batch);
  CHECK(jb["overall"] == false);
  CHECK(jb["suites"].size() == 2);
}
