#include "hdx/expansion.hpp"

#include <bit>
#include <limits>

#include "hdx/rng.hpp"

namespace hdx {

namespace {

// Flip `cur` by `row`, returning the signed change of sum(counts over set bits)
// and of the popcount.
void flip_update(BitVec& cur, const BitVec& row, const std::vector<std::int64_t>& counts,
                 std::int64_t& num, std::int64_t& pc) {
  row.for_each_set([&](std::size_t b) {
    if (cur.test(b)) {
      num -= counts[b];
      --pc;
    } else {
      num += counts[b];
      ++pc;
    }
    cur.flip(b);
  });
}

std::int64_t eval_flip_delta(const BitVec& cur, const BitVec& row,
                             const std::vector<std::int64_t>& counts) {
  std::int64_t d = 0;
  row.for_each_set([&](std::size_t b) { d += cur.test(b) ? -counts[b] : counts[b]; });
  return d;
}

// Exact scan of the coset start + span(B), reusing buffers across calls.
// Tracks the minimum weighted numerator (with lexicographic tie-break on the
// attaining member) and the minimum popcount.
class CosetScanner {
 public:
  CosetScanner(const CosetBasis& B, const std::vector<std::int64_t>& counts)
      : B_(B), counts_(counts) {}

  void run(const BitVec& start, std::int64_t start_num, std::int64_t start_pc) {
    cur_ = start;
    std::int64_t num = start_num, pc = start_pc;
    min_num_ = num;
    min_count_ = pc;
    argmin_ = cur_;
    const std::size_t r = B_.rank();
    for (std::uint64_t t = 1; t < (std::uint64_t{1} << r); ++t) {
      std::size_t i = static_cast<std::size_t>(std::countr_zero(t));
      flip_update(cur_, B_.rows()[i], counts_, num, pc);
      if (num < min_num_ || (num == min_num_ && cur_.compare_lex(argmin_) < 0)) {
        min_num_ = num;
        argmin_ = cur_;
      }
      if (pc < min_count_) min_count_ = pc;
    }
  }

  std::int64_t min_num() const { return min_num_; }
  std::int64_t min_count() const { return min_count_; }
  const BitVec& argmin() const { return argmin_; }

 private:
  const CosetBasis& B_;
  const std::vector<std::int64_t>& counts_;
  BitVec cur_, argmin_;
  std::int64_t min_num_ = 0, min_count_ = 0;
};

// Greedy descent over basis-row moves; returns the local minimum numerator.
std::int64_t greedy_descend(BitVec& cur, const CosetBasis& B,
                            const std::vector<std::int64_t>& counts, std::int64_t num,
                            int passes) {
  std::int64_t pc = 0;  // not tracked here
  for (int p = 0; p < passes; ++p) {
    bool improved = false;
    for (const BitVec& row : B.rows()) {
      if (eval_flip_delta(cur, row, counts) < 0) {
        flip_update(cur, row, counts, num, pc);
        improved = true;
      }
    }
    if (!improved) break;
  }
  return num;
}

std::int64_t sum_counts(const BitVec& v, const std::vector<std::int64_t>& counts) {
  std::int64_t s = 0;
  v.for_each_set([&](std::size_t b) { s += counts[b]; });
  return s;
}

// (a1/b1) vs (a2/b2) with shared external denominators; b > 0.
bool ratio_less(std::int64_t a1, std::int64_t b1, std::int64_t a2, std::int64_t b2) {
  return static_cast<__int128>(a1) * b2 < static_cast<__int128>(a2) * b1;
}

}  // namespace

ClassNormResult class_norm(const WeightTable& W, const CosetBasis& B, const Cochain& A,
                           const SearchBudget& budget) {
  if (B.dim() != A.dim || B.length() != A.bits.size())
    throw std::invalid_argument("class_norm: basis does not match cochain");
  const auto& counts = W.counts(A.dim);
  const std::int64_t den = W.denom(A.dim);

  if (B.rank() <= static_cast<std::size_t>(budget.exhaustive_bits)) {
    CosetScanner scan(B, counts);
    scan.run(A.bits, sum_counts(A.bits, counts),
             static_cast<std::int64_t>(A.bits.popcount()));
    return ClassNormResult{Rat(scan.min_num(), den), true, scan.argmin()};
  }

  // randomized local search: an upper bound on the true class norm
  Rng rng(budget.seed);
  BitVec best = B.reduce(A.bits);
  std::int64_t best_num = greedy_descend(best, B, counts, sum_counts(best, counts),
                                         budget.passes);
  BitVec cur(A.bits.size());
  for (int rs = 0; rs < budget.restarts; ++rs) {
    cur = A.bits;
    std::int64_t num = sum_counts(cur, counts);
    std::int64_t pc = 0;
    for (const BitVec& row : B.rows())
      if (rng.bernoulli(0.5)) flip_update(cur, row, counts, num, pc);
    num = greedy_descend(cur, B, counts, num, budget.passes);
    if (num < best_num || (num == best_num && cur.compare_lex(best) < 0)) {
      best_num = num;
      best = cur;
    }
  }
  return ClassNormResult{Rat(best_num, den), false, best};
}

Rat expansion(const Complex& X, const WeightTable& W, const CosetBasis& B, const Cochain& A,
              const SearchBudget& budget) {
  if (B.rank() > static_cast<std::size_t>(budget.exhaustive_bits))
    throw BudgetError("class norm enumeration exceeds budget");
  ClassNormResult cls = class_norm(W, B, A, budget);
  if (cls.value.is_zero())
    throw std::invalid_argument("cochain is a coboundary; expansion undefined");
  return W.norm(coboundary(X, A)) / cls.value;
}

ExpansionReport expansion_constant(const Complex& X, int j, const ExpansionBudget& budget) {
  if (j >= X.dimension()) throw std::invalid_argument("expansion_constant: need j < dim");
  WeightTable W = WeightTable::build(X);
  CosetBasis B = coboundary_basis(X, j);
  CoboundaryOp delta(X, j);

  const std::size_t m = X.size(j);
  const std::size_t rank = B.rank();
  const std::size_t free_bits = m - rank;
  const auto& cj = W.counts(j);
  const auto& cj1 = W.counts(j + 1);

  ExpansionReport rep;
  rep.dim = j;
  rep.pseudo_norm = W.has_zero_weight(j);

  const bool exhaustive =
      free_bits < 63 && (std::uint64_t{1} << free_bits) <= budget.transversal_limit &&
      rank <= static_cast<std::size_t>(budget.search.exhaustive_bits);

  bool found = false;
  std::int64_t best_dnum = 0, best_cnum = 1;
  BitVec best_argmin;

  if (exhaustive) {
    rep.method = ExpansionMethod::exhaustive;
    BitVec cur(m), db(X.size(j + 1));
    std::int64_t dnum = 0, dpc = 0;
    CosetScanner scan(B, cj);
    const auto& nonpiv = B.nonpivots();
    for (std::uint64_t t = 1; t < (std::uint64_t{1} << free_bits); ++t) {
      std::size_t col = nonpiv[static_cast<std::size_t>(std::countr_zero(t))];
      cur.flip(col);
      auto [ub, ue] = delta.up(col);
      for (auto it = ub; it != ue; ++it) {
        if (db.test(*it)) {
          dnum -= cj1[*it];
          --dpc;
        } else {
          dnum += cj1[*it];
          ++dpc;
        }
        db.flip(*it);
      }
      scan.run(cur, sum_counts(cur, cj), static_cast<std::int64_t>(cur.popcount()));
      std::int64_t cnum = scan.min_num();
      if (cnum == 0) continue;  // class norm zero: outside the quotient domain
      ++rep.classes_enumerated;
      if (!found || ratio_less(dnum, cnum, best_dnum, best_cnum) ||
          (!ratio_less(best_dnum, best_cnum, dnum, cnum) &&
           scan.argmin().compare_lex(best_argmin) < 0)) {
        found = true;
        best_dnum = dnum;
        best_cnum = cnum;
        best_argmin = scan.argmin();
      }
    }
    rep.exact = true;
  } else {
    rep.method = ExpansionMethod::sampled;
    rep.exact = false;
    Rng rng(budget.seed);
    Cochain A = make_cochain(X, j);
    for (std::uint64_t s = 0; s < budget.samples; ++s) {
      BitVec bits(m);
      for (std::size_t b = 0; b < m; ++b)
        if (rng.bernoulli(0.5)) bits.set(b);
      A.bits = B.reduce(bits);
      if (A.bits.none()) continue;
      SearchBudget sb = budget.search;
      sb.seed = derive_seed(budget.seed, s);
      ClassNormResult cls = class_norm(W, B, A, sb);
      if (cls.value.is_zero()) continue;
      std::int64_t cnum = cls.value.num() * (W.denom(j) / cls.value.den());
      std::int64_t dnum = W.norm_numerator(delta.apply(A));
      ++rep.classes_enumerated;
      if (!found || ratio_less(dnum, cnum, best_dnum, best_cnum)) {
        found = true;
        best_dnum = dnum;
        best_cnum = cnum;
        best_argmin = cls.argmin;
      }
    }
  }

  if (!found) {
    rep.empty_domain = true;
    rep.h = std::numeric_limits<double>::infinity();
    return rep;
  }
  rep.h_exact = Rat(best_dnum, W.denom(j + 1)) / Rat(best_cnum, W.denom(j));
  rep.h = rep.h_exact.to_double();
  rep.class_norm_exact = Rat(best_cnum, W.denom(j));
  rep.class_norm_of_argmin = rep.class_norm_exact.to_double();
  rep.argmin = Cochain{j, best_argmin};
  return rep;
}

bool is_coboundary_expander(const Complex& X, int j, int k, const Rat& eps,
                            const ExpansionBudget& budget) {
  if (j < 0 || j > X.dimension())
    throw std::invalid_argument("is_coboundary_expander: bad dimension");
  ExpansionReport rep = expansion_constant(X, j - 1, budget);
  if (!rep.exact) throw BudgetError("cannot certify with sampled bound");
  if (X.max_degree(j - 1) > k) return false;
  if (rep.empty_domain) return true;  // min over an empty set
  return rep.h_exact >= eps;
}

CountingCheckResult counting_expansion_check(const Complex& X, const Rat& eps_tilde,
                                             const ExpansionBudget& budget) {
  const int d = X.dimension();
  if (d < 1) throw std::invalid_argument("counting_expansion_check: need dim >= 1");
  WeightTable W = WeightTable::build(X);

  CountingCheckResult res;
  for (std::size_t i = 0; i < X.size(d - 1); ++i) {
    int dg = X.degree_at(d - 1, i);
    if (dg == 0) throw std::invalid_argument("counting equivalence requires deg >= 1");
    res.max_degree = std::max(res.max_degree, dg);
  }

  CosetBasis B = coboundary_basis(X, d - 1);
  CoboundaryOp delta(X, d - 1);
  const std::size_t m = X.size(d - 1);
  const std::size_t rank = B.rank();
  const std::size_t free_bits = m - rank;
  const auto& cj = W.counts(d - 1);

  const bool exhaustive =
      free_bits < 63 && (std::uint64_t{1} << free_bits) <= budget.transversal_limit &&
      rank <= static_cast<std::size_t>(budget.search.exhaustive_bits);
  res.exhaustive = exhaustive;

  // at the top dimension every cell lies in exactly one top cell, so the
  // weighted numerator of delta A equals its popcount
  bool found_eps = false, found_h = false;
  std::int64_t et_a = 0, et_b = 1;  // min |dA| / mincount
  std::int64_t h_a = 0, h_b = 1;    // min |dA| / min weighted numerator

  auto check_one = [&](const BitVec& bits, std::int64_t dpc, std::int64_t cnum,
                       std::int64_t wnum) {
    if (cnum > 0) {
      if (Rat(dpc) < eps_tilde * Rat(cnum)) {
        if (!res.has_witness) {
          res.witness = Cochain{d - 1, bits};
          res.has_witness = true;
        }
        res.ok = false;
      }
      if (!found_eps || ratio_less(dpc, cnum, et_a, et_b)) {
        found_eps = true;
        et_a = dpc;
        et_b = cnum;
      }
    }
    if (wnum > 0 && (!found_h || ratio_less(dpc, wnum, h_a, h_b))) {
      found_h = true;
      h_a = dpc;
      h_b = wnum;
    }
  };

  if (exhaustive) {
    BitVec cur(m), db(X.size(d));
    std::int64_t dpc = 0, dummy = 0;
    CosetScanner scan(B, cj);
    const auto& nonpiv = B.nonpivots();
    for (std::uint64_t t = 1; t < (std::uint64_t{1} << free_bits); ++t) {
      std::size_t col = nonpiv[static_cast<std::size_t>(std::countr_zero(t))];
      cur.flip(col);
      auto [ub, ue] = delta.up(col);
      for (auto it = ub; it != ue; ++it) {
        dpc += db.test(*it) ? -1 : 1;
        db.flip(*it);
      }
      (void)dummy;
      scan.run(cur, sum_counts(cur, cj), static_cast<std::int64_t>(cur.popcount()));
      check_one(cur, dpc, scan.min_count(), scan.min_num());
    }
    if (found_eps) res.eps_tilde_exact = Rat(et_a, et_b);
    if (found_h) res.h_weighted = Rat(h_a, W.denom(d)) / Rat(h_b, W.denom(d - 1));
    if (found_eps && found_h) {
      Rat lo = res.h_weighted / Rat(d + 1);
      Rat hi = Rat(res.max_degree) * res.h_weighted / Rat(d + 1);
      res.bracket_ok = lo <= res.eps_tilde_exact && res.eps_tilde_exact <= hi;
    }
  } else {
    Rng rng(budget.seed);
    for (std::uint64_t s = 0; s < budget.samples; ++s) {
      BitVec bits(m);
      for (std::size_t b = 0; b < m; ++b)
        if (rng.bernoulli(0.5)) bits.set(b);
      bits = B.reduce(bits);
      if (bits.none()) continue;
      SearchBudget sb = budget.search;
      sb.seed = derive_seed(budget.seed, s);
      Cochain A{d - 1, bits};
      ClassNormResult cls = class_norm(W, B, A, sb);
      std::int64_t cnum = static_cast<std::int64_t>(cls.argmin.popcount());
      std::int64_t wnum = cls.value.num() * (W.denom(d - 1) / cls.value.den());
      std::int64_t dpc = static_cast<std::int64_t>(delta.apply(A).bits.popcount());
      check_one(bits, dpc, cnum, wnum);
    }
  }
  return res;
}

}  // namespace hdx
