#pragma once

#include "confal/poly.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace confal {

// One solved branch of a scalar polynomial system: the case assumptions made
// on the way down, the eliminated unknowns resolved to closed form over the
// surviving free unknowns, and those free unknowns.
struct SolutionFamily {
  std::vector<std::string> assumptions;        // "c0 = 0", "c1 != 0", ...
  std::map<std::string, std::string> bindings; // unknown name -> printed value
  std::vector<std::string> free_params;
  std::map<std::uint32_t, ParamField> raw_bindings; // id -> closed-form value
  std::set<std::uint32_t> raw_nonzero;              // ids assumed nonzero
};

// A branch the rule set could not finish: assumptions so far plus the printed
// equations that remained. Reported, never silently dropped.
struct OpenBranch {
  std::vector<std::string> assumptions;
  std::vector<std::string> equations;
};

struct SolveResult {
  std::vector<SolutionFamily> families;
  std::vector<OpenBranch> open;
  bool complete() const { return open.empty(); }
};

struct SolveOptions {
  // Scalars offered for zero/nonzero case splits, consumed in order; each
  // split spends one unit of depth. A designated scalar absent from every
  // remaining equation is skipped at no cost.
  std::vector<VarId> designated;
  std::uint32_t depth = 0;
  // Safety cap on explored branches; exceeding it opens the branch.
  std::uint32_t branch_cap = 256;
};

// Splits residuals along d/lambda monomials and along monomials in parameters
// NOT listed as unknowns; what remains are polynomial equations in the unknown
// scalars alone (normalized, deduplicated, zero equations dropped).
std::vector<PPoly> extract_equations(const std::vector<Poly>& residuals,
                                     const std::set<std::uint32_t>& unknowns);

// Solves a polynomial system in unknown scalars over an algebraically closed
// field by iterating, to fixpoint per branch:
//   - drop zero equations; a nonzero constant kills the branch (no solutions);
//   - strip assumed-nonzero factors and rational content;
//   - a single-term equation in one unknown binds that unknown to zero;
//   - linear elimination where the pivot coefficient is a nonzero rational or
//     a monomial in assumed-nonzero scalars;
// then branches: zero/nonzero splits on the designated scalars while depth
// lasts, else a zero/nonzero split on a common factor of the first equation
// (in canonical order) whose terms share an unknown of unsettled status.
// Branches that exhaust every rule are reported open. Families are returned
// in a canonical order with bindings fully back-substituted.
SolveResult solve_system(const Context& ctx, std::vector<PPoly> equations,
                         const std::vector<VarId>& unknowns, const SolveOptions& opt);

// JSON rendering: {"families":[{"assumptions":[...],"bindings":{...},
// "free_params":[...]}],"open":[...],"complete":bool}.
std::string solve_result_to_json(const SolveResult& r);

}  // namespace confal
