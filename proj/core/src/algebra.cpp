#include "confal/algebra.hpp"

#include "confal/parse.hpp"

namespace confal {

LambdaElement LambdaElement::zero(const Context& ctx, std::size_t rank) {
  return LambdaElement(std::vector<Poly>(rank, Poly::zero(ctx)));
}

LambdaElement LambdaElement::generator(const Context& ctx, std::size_t rank, std::size_t i) {
  if (i >= rank) throw Error("generator index out of range");
  std::vector<Poly> comps(rank, Poly::zero(ctx));
  comps[i] = Poly::constant(ctx, Rational(1));
  return LambdaElement(std::move(comps));
}

bool LambdaElement::is_zero() const {
  for (auto& p : comps_)
    if (!p.is_zero()) return false;
  return true;
}

LambdaElement LambdaElement::operator+(const LambdaElement& o) const {
  if (rank() != o.rank()) throw Error("rank mismatch");
  std::vector<Poly> r;
  r.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) r.push_back(comps_[i] + o.comps_[i]);
  return LambdaElement(std::move(r));
}

LambdaElement LambdaElement::operator-(const LambdaElement& o) const { return *this + (-o); }

LambdaElement LambdaElement::operator-() const {
  std::vector<Poly> r;
  r.reserve(rank());
  for (auto& p : comps_) r.push_back(-p);
  return LambdaElement(std::move(r));
}

LambdaElement LambdaElement::scaled(const Poly& p) const {
  std::vector<Poly> r;
  r.reserve(rank());
  for (auto& c : comps_) r.push_back(c * p);
  return LambdaElement(std::move(r));
}

LambdaElement LambdaElement::scaled(const ParamField& c) const {
  std::vector<Poly> r;
  r.reserve(rank());
  for (auto& p : comps_) r.push_back(p.scaled(c));
  return LambdaElement(std::move(r));
}

LambdaElement LambdaElement::substitute(VarId v, const Poly& target) const {
  std::vector<Poly> r;
  r.reserve(rank());
  for (auto& p : comps_) r.push_back(p.substitute(v, target));
  return LambdaElement(std::move(r));
}

void LambdaElement::collect_vars(std::set<std::uint32_t>& out) const {
  for (auto& p : comps_) p.collect_vars(out);
}

std::string symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::None: return "none";
    case Symmetry::Commutative: return "commutative";
    case Symmetry::Skew: return "skew";
  }
  return "none";
}

StructureTable::StructureTable(const Context& ctx, std::size_t rank,
                               std::vector<LambdaElement> entries, Symmetry sym)
    : rank_(rank), entries_(std::move(entries)), sym_(sym) {
  if (rank_ == 0) throw Error("rank must be positive");
  if (entries_.size() != rank_ * rank_) throw Error("structure table must have rank^2 entries");
  VarId lam = lambda_var(ctx);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) {
      const LambdaElement& e = entry(i, j);
      if (e.rank() != rank_) throw Error("structure table entry has wrong rank");
      std::set<std::uint32_t> vars;
      e.collect_vars(vars);
      for (auto v : vars)
        if (v != ctx.del().id && v != lam.id)
          throw Error("structure table entries may use only d and the designated lambda");
    }
  if (sym_ == Symmetry::None) return;
  Poly flip = -Poly::variable(ctx, ctx.del()) - Poly::variable(ctx, lam);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) {
      LambdaElement expected = entry(j, i).substitute(lam, flip);
      if (sym_ == Symmetry::Skew) expected = -expected;
      if (!(entry(i, j) == expected))
        throw Error("declared " + symmetry_name(sym_) + " symmetry fails at entry (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

bool StructureTable::is_zero() const {
  for (auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

ConformalAlgebra::ConformalAlgebra(Context ctx, std::vector<std::string> generators)
    : ctx_(std::move(ctx)), generators_(std::move(generators)) {
  if (generators_.empty()) throw Error("algebra needs at least one generator");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!Context::valid_identifier(generators_[i]) || Context::reserved(generators_[i]))
      throw Error("invalid generator name: " + generators_[i]);
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] == generators_[j])
        throw Error("duplicate generator name: " + generators_[i]);
  }
}

std::size_t ConformalAlgebra::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == name) return i;
  throw Error("unknown generator: " + name);
}

ParamDecl& ConformalAlgebra::declare_param(const std::string& name, bool nonzero) {
  for (auto& g : generators_)
    if (g == name) throw Error("parameter name collides with generator: " + name);
  VarId v = ctx_.param(name);
  for (auto& p : params_)
    if (p.var == v) {
      p.nonzero = p.nonzero || nonzero;
      return p;
    }
  params_.push_back(ParamDecl{name, v, nonzero});
  return params_.back();
}

std::set<std::uint32_t> ConformalAlgebra::nonzero_params() const {
  std::set<std::uint32_t> out;
  for (auto& p : params_)
    if (p.nonzero) out.insert(p.var.id);
  return out;
}

void ConformalAlgebra::add_table(const std::string& key, StructureTable table) {
  if (table.rank() != rank()) throw Error("table rank mismatch");
  tables_.insert_or_assign(key, std::move(table));
}

const StructureTable& ConformalAlgebra::table(const std::string& key) const {
  auto it = tables_.find(key);
  if (it == tables_.end()) throw Error("missing table: " + key);
  return it->second;
}

Endomorphism::Endomorphism(const Context& ctx, std::size_t rank, std::vector<Poly> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (entries_.size() != rank_ * rank_) throw Error("endomorphism must have rank^2 entries");
  for (auto& p : entries_) {
    std::set<std::uint32_t> vars;
    p.collect_vars(vars);
    for (auto v : vars)
      if (var_kind(VarId{v}) == VarKind::Lam)
        throw Error("endomorphism entries must be free of lambda variables");
  }
}

Endomorphism Endomorphism::identity(const Context& ctx, std::size_t rank) {
  std::vector<Poly> e(rank * rank, Poly::zero(ctx));
  for (std::size_t i = 0; i < rank; ++i) e[i * rank + i] = Poly::constant(ctx, Rational(1));
  return Endomorphism(ctx, rank, std::move(e));
}

Endomorphism Endomorphism::zero(const Context& ctx, std::size_t rank) {
  return Endomorphism(ctx, rank, std::vector<Poly>(rank * rank, Poly::zero(ctx)));
}

Endomorphism Endomorphism::scalar(const Context& ctx, std::size_t rank, const Poly& p) {
  std::vector<Poly> e(rank * rank, Poly::zero(ctx));
  for (std::size_t i = 0; i < rank; ++i) e[i * rank + i] = p;
  return Endomorphism(ctx, rank, std::move(e));
}

}  // namespace confal
