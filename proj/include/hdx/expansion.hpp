#pragma once

#include <cstdint>

#include "hdx/cochain.hpp"
#include "hdx/errors.hpp"
#include "hdx/f2linalg.hpp"
#include "hdx/rational.hpp"
#include "hdx/weights.hpp"

namespace hdx {

struct SearchBudget {
  int exhaustive_bits = 24;  // enumerate the full coset when rank(B^j) <= this
  int restarts = 16;         // local-search restarts otherwise
  int passes = 32;
  std::uint64_t seed = 0x6b8b4567u;
};

struct ClassNormResult {
  Rat value;           // exact minimum, or the best norm found by search
  bool exact = false;  // search results are upper bounds on the true class norm
  BitVec argmin;       // a coset member attaining `value`
};

// ||[A]|| = min { ||B|| : [B] = [A] } over the coset A + B^j.
ClassNormResult class_norm(const WeightTable& W, const CosetBasis& B, const Cochain& A,
                           const SearchBudget& budget = {});

// h_j(A) = ||delta_j A|| / ||[A]||, exact; throws if ||[A]|| = 0 or the coset
// is too large to enumerate exactly.
Rat expansion(const Complex& X, const WeightTable& W, const CosetBasis& B, const Cochain& A,
              const SearchBudget& budget = {});

enum class ExpansionMethod { exhaustive, sampled };

struct ExpansionReport {
  int dim = 0;
  double h = 0.0;
  bool exact = false;
  Cochain argmin;  // minimum-norm member of the minimizing class
  double class_norm_of_argmin = 0.0;
  ExpansionMethod method = ExpansionMethod::exhaustive;
  Rat h_exact;            // exact when `exact`; best found value when sampled
  Rat class_norm_exact;
  bool pseudo_norm = false;   // dimension j has zero-weight cells
  bool empty_domain = false;  // no class with positive class norm
  std::uint64_t classes_enumerated = 0;
};

struct ExpansionBudget {
  std::uint64_t transversal_limit = std::uint64_t{1} << 24;
  SearchBudget search{};
  std::uint64_t samples = 4096;
  std::uint64_t seed = 1;
};

// h_j(X) = min h_j(A) over classes with ||[A]|| > 0. Exhaustive when the
// coset transversal (2^(|X^j| - rank B^j) representatives) fits the budget,
// otherwise a sampled upper bound with exact = false.
ExpansionReport expansion_constant(const Complex& X, int j, const ExpansionBudget& budget = {});

// max degree over X^{j-1} <= k and h_{j-1}(X) >= eps; certification requires
// the exact mode and throws BudgetError otherwise.
bool is_coboundary_expander(const Complex& X, int j, int k, const Rat& eps,
                            const ExpansionBudget& budget = {});

struct CountingCheckResult {
  bool ok = true;
  bool exhaustive = false;
  bool has_witness = false;
  Cochain witness;        // violating cochain when !ok
  Rat eps_tilde_exact;    // exact counting-norm constant (exhaustive mode)
  Rat h_weighted;         // exact weighted constant (exhaustive mode)
  bool bracket_ok = false;  // eps/(d+1) <= eps_tilde_exact <= k*eps/(d+1)
  int max_degree = 0;
};

// Counting-norm form of top-dimension expansion:
//   |delta_{d-1} A| >= eps_tilde * min{ |B| : [B] = [A] }  for all A.
// Requires 1 <= deg(sigma) for every (d-1)-cell. In exhaustive mode also
// computes both exact constants and checks the bracketing between them.
CountingCheckResult counting_expansion_check(const Complex& X, const Rat& eps_tilde,
                                             const ExpansionBudget& budget = {});

}  // namespace hdx
