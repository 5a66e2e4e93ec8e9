#pragma once

#include "confal/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace confal {

// Element of L[lambda, mu, ...]: one Poly per generator of the ambient rank.
class LambdaElement {
 public:
  LambdaElement() = default;
  explicit LambdaElement(std::vector<Poly> comps) : comps_(std::move(comps)) {}
  static LambdaElement zero(const Context& ctx, std::size_t rank);
  static LambdaElement generator(const Context& ctx, std::size_t rank, std::size_t i);

  std::size_t rank() const { return comps_.size(); }
  const Poly& operator[](std::size_t i) const { return comps_[i]; }
  const std::vector<Poly>& comps() const { return comps_; }

  bool is_zero() const;
  bool operator==(const LambdaElement&) const = default;

  LambdaElement operator+(const LambdaElement& o) const;
  LambdaElement operator-(const LambdaElement& o) const;
  LambdaElement operator-() const;
  LambdaElement scaled(const Poly& p) const;       // multiply every component
  LambdaElement scaled(const ParamField& c) const;

  LambdaElement substitute(VarId v, const Poly& target) const;
  void collect_vars(std::set<std::uint32_t>& out) const;

 private:
  std::vector<Poly> comps_;
};

enum class Symmetry { None, Commutative, Skew };

std::string symmetry_name(Symmetry s);

// rank x rank table of entries e_i o_lambda e_j, with the designated lambda
// variable fixed to the first pool variable "x". The symmetry tag, if not
// None, is verified identically at construction.
class StructureTable {
 public:
  StructureTable(const Context& ctx, std::size_t rank, std::vector<LambdaElement> entries,
                 Symmetry sym = Symmetry::None);

  std::size_t rank() const { return rank_; }
  Symmetry symmetry() const { return sym_; }
  const LambdaElement& entry(std::size_t i, std::size_t j) const {
    return entries_[i * rank_ + j];
  }
  static VarId lambda_var(const Context& ctx) { return ctx.lam(0); }
  bool is_zero() const;

 private:
  std::size_t rank_;
  std::vector<LambdaElement> entries_;
  Symmetry sym_;
};

struct ParamDecl {
  std::string name;
  VarId var;
  bool nonzero = false;
};

// Free C[d]-module of finite rank with named lambda-products on generators.
// Conventional table keys: "circ" (associative side), "bracket" (Lie side),
// "star" (auxiliary products).
class ConformalAlgebra {
 public:
  ConformalAlgebra(Context ctx, std::vector<std::string> generators);

  const Context& ctx() const { return ctx_; }
  Context& ctx() { return ctx_; }
  std::size_t rank() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  std::size_t generator_index(const std::string& name) const;

  ParamDecl& declare_param(const std::string& name, bool nonzero = false);
  const std::vector<ParamDecl>& params() const { return params_; }
  std::set<std::uint32_t> nonzero_params() const;

  void add_table(const std::string& key, StructureTable table);
  bool has_table(const std::string& key) const { return tables_.count(key) != 0; }
  const StructureTable& table(const std::string& key) const;
  const std::map<std::string, StructureTable>& tables() const { return tables_; }

  LambdaElement gen(std::size_t i) const {
    return LambdaElement::generator(ctx_, rank(), i);
  }

 private:
  Context ctx_;
  std::vector<std::string> generators_;
  std::vector<ParamDecl> params_;
  std::map<std::string, StructureTable> tables_;
};

// C[d]-module endomorphism: phi(e_i) = sum_j entry(i,j)(d) e_j with entries
// free of lambda variables (so phi commutes with d automatically).
class Endomorphism {
 public:
  Endomorphism(const Context& ctx, std::size_t rank, std::vector<Poly> entries);
  static Endomorphism identity(const Context& ctx, std::size_t rank);
  static Endomorphism zero(const Context& ctx, std::size_t rank);
  static Endomorphism scalar(const Context& ctx, std::size_t rank, const Poly& p);

  std::size_t rank() const { return rank_; }
  const Poly& entry(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }

 private:
  std::size_t rank_;
  std::vector<Poly> entries_;
};

}  // namespace confal
