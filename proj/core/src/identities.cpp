#include "confal/identities.hpp"

#include "confal/products.hpp"

namespace confal {

namespace {

using LE = LambdaElement;

// Shared state for one identity run: three spectral variables x, y, z.
struct Env {
  const ConformalAlgebra& alg;
  const std::string circ, bracket;
  VarId vx, vy, vz;
  Poly d, x, y, z;
  CheckReport report;

  Env(const ConformalAlgebra& a, std::string circ_key, std::string bracket_key,
      std::string suite)
      : alg(a),
        circ(std::move(circ_key)),
        bracket(std::move(bracket_key)),
        vx(a.ctx().lam(0)),
        vy(a.ctx().lam(1)),
        vz(a.ctx().lam(2)),
        d(Poly::variable(a.ctx(), a.ctx().del())),
        x(Poly::variable(a.ctx(), vx)),
        y(Poly::variable(a.ctx(), vy)),
        z(Poly::variable(a.ctx(), vz)) {
    report.suite = std::move(suite);
  }

  LE c(const LE& a, const LE& b, VarId v) const { return eval_product(alg, circ, a, b, v); }
  LE cat(const LE& a, const LE& b, const Poly& t) const {
    return eval_product_at(alg, circ, a, b, t);
  }
  LE br(const LE& a, const LE& b, VarId v) const {
    return eval_product(alg, bracket, a, b, v);
  }
  LE brat(const LE& a, const LE& b, const Poly& t) const {
    return eval_product_at(alg, bracket, a, b, t);
  }

  void record(const std::string& law, const std::string& tuple, const LE& residual) {
    LawResult r;
    r.law = law;
    r.tuple = tuple;
    r.residual = to_string(residual, alg.generators());
    r.pass = residual.is_zero();
    report.add(std::move(r));
  }

  std::string name(std::size_t i) const { return alg.generators()[i]; }

  template <typename F>
  void triples(const std::string& law, F&& residual) {
    for (std::size_t i = 0; i < alg.rank(); ++i) {
      for (std::size_t j = 0; j < alg.rank(); ++j) {
        for (std::size_t k = 0; k < alg.rank(); ++k) {
          record(law, "(" + name(i) + "," + name(j) + "," + name(k) + ")",
                 residual(alg.gen(i), alg.gen(j), alg.gen(k)));
        }
      }
    }
  }
  template <typename F>
  void quads(const std::string& law, F&& residual) {
    for (std::size_t h = 0; h < alg.rank(); ++h) {
      for (std::size_t i = 0; i < alg.rank(); ++i) {
        for (std::size_t j = 0; j < alg.rank(); ++j) {
          for (std::size_t k = 0; k < alg.rank(); ++k) {
            record(law,
                   "(" + name(h) + "," + name(i) + "," + name(j) + "," + name(k) + ")",
                   residual(alg.gen(h), alg.gen(i), alg.gen(j), alg.gen(k)));
          }
        }
      }
    }
  }
};

Rational binomial(std::uint32_t n, std::uint32_t j) {
  return factorial(n) / (factorial(j) * factorial(n - j));
}

}  // namespace

CheckReport check_theorem_identities(const ConformalAlgebra& alg, const std::string& circ,
                                     const std::string& bracket) {
  Env e(alg, circ, bracket, "derived-identities");
  if (!is_tpca(alg, circ, bracket)) {
    LawResult r;
    r.law = "vacuous";
    r.tuple = "()";
    r.residual = "transposed Poisson precondition not satisfied";
    r.pass = true;
    e.report.add(std::move(r));
    return std::move(e.report);
  }

  // x o_x [y_y z] + y o_y [z_{-d-x} x] + z o_{-d-x-y} [x_x y]
  e.triples("circ-bracket-cyclic", [&](const LE& X, const LE& Y, const LE& Z) {
    return e.c(X, e.br(Y, Z, e.vy), e.vx) + e.c(Y, e.brat(Z, X, -e.d - e.x), e.vy) +
           e.cat(Z, e.br(X, Y, e.vx), -e.d - e.x - e.y);
  });

  // [x_x y] o_y z + [y_{y-x} z] o_{-d-x} x + [z_{-d-x} x] o_{-d-y+x} y
  e.triples("bracket-circ-cyclic", [&](const LE& X, const LE& Y, const LE& Z) {
    return e.c(e.br(X, Y, e.vx), Z, e.vy) +
           e.cat(e.brat(Y, Z, e.y - e.x), X, -e.d - e.x) +
           e.cat(e.brat(Z, X, -e.d - e.x), Y, -e.d - e.y + e.x);
  });

  // [(h o_x [x_z y])_{x+y} z] + [(h o_x [y_{y-z} z])_{-d-z} x]
  //   + [(h o_x [z_{-d-z} x])_{-d-y+z} y]
  e.quads("scaled-bracket-cyclic", [&](const LE& H, const LE& X, const LE& Y, const LE& Z) {
    return e.brat(e.c(H, e.br(X, Y, e.vz), e.vx), Z, e.x + e.y) +
           e.brat(e.c(H, e.brat(Y, Z, e.y - e.z), e.vx), X, -e.d - e.z) +
           e.brat(e.c(H, e.brat(Z, X, -e.d - e.z), e.vx), Y, -e.d - e.y + e.z);
  });

  // [[x_z y]_y (h o_x z)] + [[y_{y-z} z]_{-d-x-z} (h o_x x)]
  //   + [[z_{-d-z} x]_{-d-x-y+z} (h o_x y)]
  e.quads("bracket-scaled-cyclic", [&](const LE& H, const LE& X, const LE& Y, const LE& Z) {
    return e.br(e.br(X, Y, e.vz), e.c(H, Z, e.vx), e.vy) +
           e.brat(e.brat(Y, Z, e.y - e.z), e.c(H, X, e.vx), -e.d - e.x - e.z) +
           e.brat(e.brat(Z, X, -e.d - e.z), e.c(H, Y, e.vx), -e.d - e.x - e.y + e.z);
  });

  // [h_x x] o_{x+z} [y_{y-z} z] + [h_x y] o_{x+y-z} [z_{-d-z} x]
  //   + [h_x z] o_{-d-y} [x_z y]
  e.quads("paired-brackets-cyclic", [&](const LE& H, const LE& X, const LE& Y, const LE& Z) {
    return e.cat(e.br(H, X, e.vx), e.brat(Y, Z, e.y - e.z), e.x + e.z) +
           e.cat(e.br(H, Y, e.vx), e.brat(Z, X, -e.d - e.z), e.x + e.y - e.z) +
           e.cat(e.br(H, Z, e.vx), e.br(X, Y, e.vz), -e.d - e.y);
  });

  // [(u o_x x)_y (v o_z y)] + [(v o_z x)_{z+y-x} (u o_x y)]
  //   - 2 (u o_x v) o_{x+z} [x_{y-x} y]
  e.quads("double-product-exchange", [&](const LE& U, const LE& V, const LE& X, const LE& Y) {
    return e.br(e.c(U, X, e.vx), e.c(V, Y, e.vz), e.vy) +
           e.brat(e.c(V, X, e.vz), e.c(U, Y, e.vx), e.z + e.y - e.x) -
           e.cat(e.c(U, V, e.vx), e.brat(X, Y, e.y - e.x), e.x + e.z)
               .scaled(Poly::constant(alg.ctx(), Rational(2)));
  });

  // x o_{y-x} [u_x (v o_z y)] + [(v o_z x)_{z+y-x} u] o_{z+y} y
  //   - (u o_x v) o_{x+z} [x_{y-x} y]
  e.quads("shifted-product-exchange", [&](const LE& U, const LE& V, const LE& X, const LE& Y) {
    return e.cat(X, e.br(U, e.c(V, Y, e.vz), e.vx), e.y - e.x) +
           e.cat(e.brat(e.c(V, X, e.vz), U, e.z + e.y - e.x), Y, e.z + e.y) -
           e.cat(e.c(U, V, e.vx), e.brat(X, Y, e.y - e.x), e.x + e.z);
  });

  return std::move(e.report);
}

CheckReport check_nth_transposed_leibniz(const ConformalAlgebra& alg, const std::string& circ,
                                         const std::string& bracket, std::uint32_t N) {
  CheckReport report;
  report.suite = "nth-transposed-leibniz";
  const std::size_t rank = alg.rank();
  const auto& gens = alg.generators();
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      for (std::size_t k = 0; k < rank; ++k) {
        LambdaElement a = alg.gen(i), b = alg.gen(j), c = alg.gen(k);
        for (std::uint32_t n = 0; n <= N; ++n) {
          for (std::uint32_t m = 0; m <= N; ++m) {
            LambdaElement lhs =
                nth_product_of(alg, circ, a, nth_product_of(alg, bracket, b, c, m), n)
                    .scaled(Poly::constant(alg.ctx(), Rational(2)));
            LambdaElement rhs =
                nth_product_of(alg, bracket, b, nth_product_of(alg, circ, a, c, n), m);
            for (std::uint32_t jj = 0; jj <= n; ++jj) {
              rhs = rhs + nth_product_of(alg, bracket,
                                         nth_product_of(alg, circ, a, b, jj), c, n + m - jj)
                              .scaled(Poly::constant(alg.ctx(), binomial(n, jj)));
            }
            LambdaElement residual = lhs - rhs;
            LawResult r;
            r.law = "nth-transposed-leibniz";
            r.tuple = "(" + gens[i] + "," + gens[j] + "," + gens[k] + "; n=" +
                      std::to_string(n) + ", m=" + std::to_string(m) + ")";
            r.residual = to_string(residual, gens);
            r.pass = residual.is_zero();
            report.add(std::move(r));
          }
        }
      }
    }
  }
  return report;
}

CompatibilityVerdict check_compatibility_criterion(const ConformalAlgebra& alg,
                                                   const std::string& circ,
                                                   const std::string& bracket) {
  Env e(alg, circ, bracket, "compatibility-criterion");

  // a o_x [b_y c]
  e.triples("mixed-triple-1", [&](const LE& A, const LE& B, const LE& C) {
    return e.c(A, e.br(B, C, e.vy), e.vx);
  });
  // [b_{y-x} a] o_y c
  e.triples("mixed-triple-2", [&](const LE& A, const LE& B, const LE& C) {
    return e.cat(e.brat(B, A, e.y - e.x), C, e.y);
  });
  // [(a o_x b)_{x+y} c]
  e.triples("mixed-triple-3", [&](const LE& A, const LE& B, const LE& C) {
    return e.brat(e.c(A, B, e.vx), C, e.x + e.y);
  });

  CompatibilityVerdict v;
  v.both_hold = check_poisson_leibniz(alg, circ, bracket).overall &&
                check_transposed_leibniz(alg, circ, bracket).overall;
  v.triple_products_vanish = e.report.overall;
  v.agreement = v.both_hold == v.triple_products_vanish;
  v.details = std::move(e.report);
  return v;
}

}  // namespace confal
