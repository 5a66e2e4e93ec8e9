#include "confal/build.hpp"

#include "confal/checks.hpp"
#include "confal/products.hpp"

#include <utility>

namespace confal {

namespace {

void copy_params(const ConformalAlgebra& from, ConformalAlgebra& to) {
  for (const ParamDecl& p : from.params()) to.declare_param(p.name, p.nonzero);
}

void require_rank(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw Error(std::string(what) + ": rank mismatch (" + std::to_string(got) + " vs " +
                std::to_string(want) + ")");
  }
}

// h must be an honest algebra element: coefficients polynomial in d (and
// parameters) only.
void require_element(const ConformalAlgebra& alg, const LambdaElement& h, const char* what) {
  require_rank(h.rank(), alg.rank(), what);
  std::set<std::uint32_t> vars;
  h.collect_vars(vars);
  for (std::uint32_t v : vars) {
    if (var_kind(VarId{v}) == VarKind::Lam) {
      throw Error(std::string(what) + ": h must have coefficients polynomial in d only");
    }
  }
}

}  // namespace

OrdinaryAlgebra::OrdinaryAlgebra(Context ctx, std::vector<std::string> generators,
                                 std::vector<ParamField> product,
                                 std::vector<ParamField> bracket)
    : ctx_(std::move(ctx)),
      generators_(std::move(generators)),
      product_(std::move(product)),
      bracket_(std::move(bracket)) {
  const std::size_t n = generators_.size();
  if (n == 0) throw Error("ordinary algebra requires positive dimension");
  const std::size_t want = n * n * n;
  if (product_.empty()) product_.assign(want, ParamField(Rational(0)));
  if (bracket_.empty()) bracket_.assign(want, ParamField(Rational(0)));
  if (product_.size() != want || bracket_.size() != want) {
    throw Error("ordinary algebra requires dim^3 structure constants per table");
  }
}

OrdinaryAlgebra OrdinaryAlgebra::zero(Context ctx, std::vector<std::string> generators) {
  return OrdinaryAlgebra(std::move(ctx), std::move(generators), {}, {});
}

const ParamField& OrdinaryAlgebra::product_const(std::size_t i, std::size_t j,
                                                 std::size_t k) const {
  return product_[(i * dim() + j) * dim() + k];
}

const ParamField& OrdinaryAlgebra::bracket_const(std::size_t i, std::size_t j,
                                                 std::size_t k) const {
  return bracket_[(i * dim() + j) * dim() + k];
}

ConformalAlgebra current(const OrdinaryAlgebra& ord) {
  ConformalAlgebra alg(ord.ctx(), ord.generators());
  const Context& ctx = alg.ctx();
  for (std::size_t p = 0; p < ctx.param_count(); ++p) {
    alg.declare_param(ctx.name(ctx.param_at(p)));
  }
  const std::size_t n = ord.dim();
  std::vector<LambdaElement> circ, bracket;
  circ.reserve(n * n);
  bracket.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Poly> pc, pb;
      pc.reserve(n);
      pb.reserve(n);
      for (std::size_t k = 0; k < n; ++k) {
        pc.push_back(Poly::constant(ctx, ord.product_const(i, j, k)));
        pb.push_back(Poly::constant(ctx, ord.bracket_const(i, j, k)));
      }
      circ.emplace_back(std::move(pc));
      bracket.emplace_back(std::move(pb));
    }
  }
  alg.add_table("circ", StructureTable(ctx, n, std::move(circ)));
  alg.add_table("bracket", StructureTable(ctx, n, std::move(bracket)));
  return alg;
}

ConformalAlgebra tensor(const ConformalAlgebra& a1, const ConformalAlgebra& a2) {
  for (const ConformalAlgebra* a : {&a1, &a2}) {
    if (!a->has_table("circ") || !a->has_table("bracket")) {
      throw Error("tensor requires circ and bracket tables on both factors");
    }
  }
  if (!is_tpca(a1, "circ", "bracket") || !is_tpca(a2, "circ", "bracket")) {
    throw Error(
        "tensor factors must pass the transposed Poisson checks "
        "(commutative circ, Lie bracket, transposed Leibniz)");
  }

  Context ctx = Context::make();
  const auto remap1 = ctx.absorb(a1.ctx());
  const auto remap2 = ctx.absorb(a2.ctx());

  const std::size_t r1 = a1.rank(), r2 = a2.rank();
  std::vector<std::string> gens;
  gens.reserve(r1 * r2);
  for (std::size_t i = 0; i < r1; ++i) {
    for (std::size_t j = 0; j < r2; ++j) {
      gens.push_back(a1.generators()[i] + "_" + a2.generators()[j]);
    }
  }
  ConformalAlgebra out(ctx, std::move(gens));
  copy_params(a1, out);
  copy_params(a2, out);

  auto lift1 = [&](const Poly& p) { return p.rename_params(remap1, ctx); };
  auto lift2 = [&](const Poly& p) { return p.rename_params(remap2, ctx); };

  const StructureTable& c1 = a1.table("circ");
  const StructureTable& b1 = a1.table("bracket");
  const StructureTable& c2 = a2.table("circ");
  const StructureTable& b2 = a2.table("bracket");

  const std::size_t rank = r1 * r2;
  std::vector<LambdaElement> circ, bracket;
  circ.reserve(rank * rank);
  bracket.reserve(rank * rank);
  for (std::size_t i1 = 0; i1 < r1; ++i1) {
    for (std::size_t i2 = 0; i2 < r2; ++i2) {
      for (std::size_t j1 = 0; j1 < r1; ++j1) {
        for (std::size_t j2 = 0; j2 < r2; ++j2) {
          std::vector<Poly> pc, pb;
          pc.reserve(rank);
          pb.reserve(rank);
          for (std::size_t k1 = 0; k1 < r1; ++k1) {
            for (std::size_t k2 = 0; k2 < r2; ++k2) {
              Poly cc1 = lift1(c1.entry(i1, j1)[k1]);
              Poly bb1 = lift1(b1.entry(i1, j1)[k1]);
              Poly cc2 = lift2(c2.entry(i2, j2)[k2]);
              Poly bb2 = lift2(b2.entry(i2, j2)[k2]);
              pc.push_back(cc1 * cc2);
              pb.push_back(bb1 * cc2 + cc1 * bb2);
            }
          }
          circ.emplace_back(std::move(pc));
          bracket.emplace_back(std::move(pb));
        }
      }
    }
  }
  out.add_table("circ", StructureTable(ctx, rank, std::move(circ), Symmetry::Commutative));
  out.add_table("bracket", StructureTable(ctx, rank, std::move(bracket), Symmetry::Skew));
  return out;
}

ConformalAlgebra direct_sum(const ConformalAlgebra& a1, const ConformalAlgebra& a2) {
  Context ctx = Context::make();
  const auto remap1 = ctx.absorb(a1.ctx());
  const auto remap2 = ctx.absorb(a2.ctx());

  const std::size_t r1 = a1.rank(), r2 = a2.rank();
  const std::size_t rank = r1 + r2;
  std::vector<std::string> gens;
  gens.reserve(rank);
  for (const std::string& g : a1.generators()) gens.push_back(g + "_1");
  for (const std::string& g : a2.generators()) gens.push_back(g + "_2");
  ConformalAlgebra out(ctx, std::move(gens));
  copy_params(a1, out);
  copy_params(a2, out);

  for (const auto& [key, t1] : a1.tables()) {
    if (!a2.has_table(key)) continue;
    const StructureTable& t2 = a2.table(key);
    std::vector<LambdaElement> entries(rank * rank, LambdaElement::zero(ctx, rank));
    for (std::size_t i = 0; i < r1; ++i) {
      for (std::size_t j = 0; j < r1; ++j) {
        std::vector<Poly> comps(rank, Poly::zero(ctx));
        for (std::size_t k = 0; k < r1; ++k) {
          comps[k] = t1.entry(i, j)[k].rename_params(remap1, ctx);
        }
        entries[i * rank + j] = LambdaElement(std::move(comps));
      }
    }
    for (std::size_t i = 0; i < r2; ++i) {
      for (std::size_t j = 0; j < r2; ++j) {
        std::vector<Poly> comps(rank, Poly::zero(ctx));
        for (std::size_t k = 0; k < r2; ++k) {
          comps[r1 + k] = t2.entry(i, j)[k].rename_params(remap2, ctx);
        }
        entries[(r1 + i) * rank + (r1 + j)] = LambdaElement(std::move(comps));
      }
    }
    Symmetry sym = t1.symmetry() == t2.symmetry() ? t1.symmetry() : Symmetry::None;
    out.add_table(key, StructureTable(ctx, rank, std::move(entries), sym));
  }
  return out;
}

StructureTable commutator(const ConformalAlgebra& alg, const std::string& star) {
  const StructureTable& st = alg.table(star);
  const Context& ctx = alg.ctx();
  const std::size_t rank = alg.rank();
  const VarId vx = StructureTable::lambda_var(ctx);
  const Poly minus_d_x =
      -(Poly::variable(ctx, ctx.del()) + Poly::variable(ctx, vx));
  std::vector<LambdaElement> entries;
  entries.reserve(rank * rank);
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      LambdaElement flipped = st.entry(j, i).substitute(vx, minus_d_x);
      entries.push_back(st.entry(i, j) - flipped);
    }
  }
  return StructureTable(ctx, rank, std::move(entries), Symmetry::Skew);
}

StructureTable derivation_product(const ConformalAlgebra& alg, const std::string& circ,
                                  const Endomorphism& D) {
  auto residuals = is_derivation(alg, circ, D);
  if (!residuals.empty()) {
    throw Error("derived product requires a derivation of the base product; first failure at " +
                residuals.front().label);
  }
  const Context& ctx = alg.ctx();
  const std::size_t rank = alg.rank();
  const VarId vx = StructureTable::lambda_var(ctx);
  std::vector<LambdaElement> entries;
  entries.reserve(rank * rank);
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      entries.push_back(eval_product(alg, circ, alg.gen(i), apply_endo(D, alg.gen(j)), vx));
    }
  }
  return StructureTable(ctx, rank, std::move(entries));
}

Endomorphism alpha_h(const ConformalAlgebra& alg, const std::string& circ,
                     const LambdaElement& h) {
  require_element(alg, h, "alpha_h");
  const Context& ctx = alg.ctx();
  const std::size_t rank = alg.rank();
  const Poly zero = Poly::zero(ctx);
  std::vector<Poly> entries(rank * rank, zero);
  for (std::size_t j = 0; j < rank; ++j) {
    LambdaElement g = alg.gen(j);
    VarId v = fresh_lam(ctx, {&h, &g});
    LambdaElement w = eval_product(alg, circ, h, g, v).substitute(v, zero);
    for (std::size_t k = 0; k < rank; ++k) entries[j * rank + k] = w[k];
  }
  return Endomorphism(ctx, rank, std::move(entries));
}

StructureTable h_bracket(const ConformalAlgebra& alg, const std::string& circ,
                         const std::string& bracket, const LambdaElement& h) {
  require_element(alg, h, "h_bracket");
  const StructureTable& br = alg.table(bracket);
  const Context& ctx = alg.ctx();
  const std::size_t rank = alg.rank();
  const Poly zero = Poly::zero(ctx);
  std::vector<LambdaElement> entries;
  entries.reserve(rank * rank);
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      const LambdaElement& inner = br.entry(i, j);
      VarId v = fresh_lam(ctx, {&h, &inner});
      entries.push_back(eval_product(alg, circ, h, inner, v).substitute(v, zero));
    }
  }
  Symmetry sym = br.symmetry() == Symmetry::Skew ? Symmetry::Skew : Symmetry::None;
  return StructureTable(ctx, rank, std::move(entries), sym);
}

ConformalAlgebra change_basis(const ConformalAlgebra& alg, const BasisChange& T) {
  require_rank(T.rank(), alg.rank(), "change_basis");
  Context ctx = Context::join(alg.ctx(), T.ctx());
  const std::size_t rank = alg.rank();
  const VarId vx = StructureTable::lambda_var(ctx);

  std::vector<LambdaElement> rows;
  rows.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<Poly> comps;
    comps.reserve(rank);
    for (std::size_t k = 0; k < rank; ++k) comps.push_back(T.entry(i, k).with_ctx(ctx));
    rows.emplace_back(std::move(comps));
  }

  ConformalAlgebra out(ctx, alg.generators());
  copy_params(alg, out);
  for (const auto& [key, tbl] : alg.tables()) {
    std::vector<LambdaElement> entries;
    entries.reserve(rank * rank);
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = 0; j < rank; ++j) {
        LambdaElement w = eval_product(alg, key, rows[i], rows[j], vx);
        std::vector<Poly> comps;
        comps.reserve(rank);
        for (std::size_t m = 0; m < rank; ++m) {
          Poly acc = Poly::zero(ctx);
          for (std::size_t l = 0; l < rank; ++l) {
            acc = acc + w[l] * T.inverse_entry(l, m).with_ctx(ctx);
          }
          comps.push_back(std::move(acc));
        }
        entries.emplace_back(std::move(comps));
      }
    }
    out.add_table(key, StructureTable(ctx, rank, std::move(entries), tbl.symmetry()));
  }
  return out;
}

}  // namespace confal
