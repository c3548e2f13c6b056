#include "hdx/weights.hpp"

#include <stdexcept>

namespace hdx {

WeightTable WeightTable::build(const Complex& X) {
  const int d = X.dimension();
  if (d < 0 || X.size(d) == 0)
    throw std::invalid_argument("no top cells; weighted norm undefined");

  WeightTable W;
  W.counts_.resize(static_cast<std::size_t>(d + 2));
  W.denom_.resize(static_cast<std::size_t>(d + 2));
  W.has_zero_.resize(static_cast<std::size_t>(d + 2), false);
  for (int j = -1; j <= d; ++j) {
    W.counts_[static_cast<std::size_t>(j + 1)].assign(X.size(j), 0);
    W.denom_[static_cast<std::size_t>(j + 1)] =
        static_cast<std::int64_t>(binom(d + 1, j + 1)) * static_cast<std::int64_t>(X.size(d));
  }

  // one pass over the top cells, crediting every face
  std::vector<Vertex> sub;
  for (std::size_t t = 0; t < X.size(d); ++t) {
    Cell tau = X.cell_at(d, t);
    const auto& tv = tau.vertices();
    const unsigned full = 1u << tau.card();
    for (unsigned mask = 0; mask < full; ++mask) {
      sub.clear();
      for (int i = 0; i < tau.card(); ++i)
        if (mask & (1u << i)) sub.push_back(tv[static_cast<std::size_t>(i)]);
      int j = static_cast<int>(sub.size()) - 1;
      ++W.counts_[static_cast<std::size_t>(j + 1)][X.index_of(j, colex_rank(sub))];
    }
  }

  for (int j = -1; j <= d; ++j)
    for (std::int64_t c : W.counts_[static_cast<std::size_t>(j + 1)])
      if (c == 0) {
        W.has_zero_[static_cast<std::size_t>(j + 1)] = true;
        break;
      }
  return W;
}

std::int64_t WeightTable::norm_numerator(const Cochain& A) const {
  const auto& cnt = counts(A.dim);
  if (A.bits.size() != cnt.size())
    throw std::invalid_argument("norm: cochain does not match complex");
  std::int64_t s = 0;
  A.bits.for_each_set([&](std::size_t b) { s += cnt[b]; });
  return s;
}

Rat cell_weight(const Complex& X, const Cell& sigma) {
  const int d = X.dimension();
  if (d < 0 || X.size(d) == 0)
    throw std::invalid_argument("no top cells; weighted norm undefined");
  if (!X.contains(sigma)) throw std::invalid_argument("cell not in complex");
  std::int64_t cnt = 0;
  for (std::size_t t = 0; t < X.size(d); ++t)
    if (X.cell_at(d, t).contains_all(sigma)) ++cnt;
  return Rat(cnt, static_cast<std::int64_t>(binom(d + 1, sigma.card())) *
                      static_cast<std::int64_t>(X.size(d)));
}

}  // namespace hdx
