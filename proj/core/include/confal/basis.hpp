#pragma once

#include "confal/poly.hpp"

#include <vector>

namespace confal {

// Invertible change of C[d]-basis: row i expresses the new generator as
// sum_j entry(i,j)(d) e_j. The determinant must be a nonzero constant in d
// (a unit of the coefficient field), which makes the inverse polynomial
// again; the inverse is computed by the adjugate and verified against the
// identity at construction.
class BasisChange {
 public:
  BasisChange(const Context& ctx, std::size_t rank, std::vector<Poly> entries);

  static BasisChange identity(const Context& ctx, std::size_t rank);

  std::size_t rank() const { return rank_; }
  const Context& ctx() const { return ctx_; }
  const Poly& entry(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }
  const Poly& inverse_entry(std::size_t i, std::size_t j) const {
    return inverse_[i * rank_ + j];
  }
  const ParamField& det() const { return det_; }

 private:
  Context ctx_;
  std::size_t rank_ = 0;
  std::vector<Poly> entries_;
  std::vector<Poly> inverse_;
  ParamField det_;
};

}  // namespace confal
