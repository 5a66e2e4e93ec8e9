#include "confal/basis.hpp"

namespace confal {

namespace {

// Determinant of an n x n Poly matrix (row-major) by cofactor expansion along
// the first row; ranks in this library are small. The empty matrix has
// determinant 1 so rank-1 cofactors come out right.
Poly det_rec(const std::vector<Poly>& m, std::size_t n, const Context& ctx) {
  if (n == 0) return Poly::constant(ctx, Rational(1));
  if (n == 1) return m[0];
  Poly acc = Poly::zero(ctx);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[j].is_zero()) continue;
    std::vector<Poly> minor;
    minor.reserve((n - 1) * (n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) minor.push_back(m[r * n + c]);
      }
    }
    Poly term = m[j] * det_rec(minor, n - 1, ctx);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Minor of m with row `dr` and column `dc` deleted.
std::vector<Poly> minor_of(const std::vector<Poly>& m, std::size_t n, std::size_t dr,
                           std::size_t dc) {
  std::vector<Poly> out;
  out.reserve((n - 1) * (n - 1));
  for (std::size_t r = 0; r < n; ++r) {
    if (r == dr) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (c == dc) continue;
      out.push_back(m[r * n + c]);
    }
  }
  return out;
}

}  // namespace

BasisChange::BasisChange(const Context& ctx, std::size_t rank, std::vector<Poly> entries)
    : ctx_(ctx), rank_(rank), entries_(std::move(entries)), det_(Rational(0)) {
  if (rank_ == 0) throw Error("basis change requires positive rank");
  if (entries_.size() != rank_ * rank_) {
    throw Error("basis change requires rank*rank entries");
  }
  for (auto& p : entries_) {
    std::set<std::uint32_t> vars;
    p.collect_vars(vars);
    for (std::uint32_t v : vars) {
      if (var_kind(VarId{v}) == VarKind::Lam) {
        throw Error("basis change entries may use only d and parameters");
      }
    }
    p = p.with_ctx(ctx_);
  }

  Poly det = det_rec(entries_, rank_, ctx_);
  if (det.is_zero()) throw Error("basis change is singular");
  std::set<std::uint32_t> det_vars;
  det.collect_vars(det_vars);
  if (!det_vars.empty()) {
    throw Error("basis change is not invertible over C[d]: determinant depends on d");
  }
  det_ = det.terms().begin()->second;

  ParamField inv_det = ParamField(Rational(1)) / det_;
  inverse_.assign(rank_ * rank_, Poly::zero(ctx_));
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) {
      Poly cof = det_rec(minor_of(entries_, rank_, j, i), rank_ - 1, ctx_);
      if ((i + j) % 2 == 1) cof = -cof;
      inverse_[i * rank_ + j] = cof.scaled(inv_det);
    }
  }

  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) {
      Poly acc = Poly::zero(ctx_);
      for (std::size_t k = 0; k < rank_; ++k) {
        acc = acc + entries_[i * rank_ + k] * inverse_[k * rank_ + j];
      }
      Poly expect = (i == j) ? Poly::constant(ctx_, Rational(1)) : Poly::zero(ctx_);
      if (!(acc == expect)) throw Error("basis change inverse verification failed");
    }
  }
}

BasisChange BasisChange::identity(const Context& ctx, std::size_t rank) {
  std::vector<Poly> entries(rank * rank, Poly::zero(ctx));
  for (std::size_t i = 0; i < rank; ++i) {
    entries[i * rank + i] = Poly::constant(ctx, Rational(1));
  }
  return BasisChange(ctx, rank, std::move(entries));
}

}  // namespace confal
