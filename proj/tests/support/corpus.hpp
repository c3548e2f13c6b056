#pragma once

// Seeded random complexes shared by the unit tests and the acceptance suite.

#include "hdx/complex.hpp"
#include "hdx/rng.hpp"

namespace corpus {

// Random d-complex on n vertices with at least one top cell. Half the draws
// get a complete (d-1)-skeleton, the rest are plain closures of random top
// cells, sometimes with a dangling lower-dimensional cell mixed in.
inline hdx::Complex random_complex(hdx::Rng& rng, int n, int d) {
  hdx::ComplexBuilder b(n, d);
  bool complete = rng.bernoulli(0.5);
  if (complete && d >= 1) b.add_complete_skeleton(d - 1);

  std::uint64_t ncells = hdx::binom(n, d + 1);
  std::uint64_t want = 1 + rng.below(std::max<std::uint64_t>(1, ncells / 3));
  for (std::uint64_t i = 0; i < want; ++i)
    b.add_cell(hdx::Cell::unrank(rng.below(ncells), d + 1));

  if (!complete && d >= 2 && rng.bernoulli(0.3)) {
    std::uint64_t nlow = hdx::binom(n, d);
    b.add_cell(hdx::Cell::unrank(rng.below(nlow), d));
  }
  return std::move(b).finalize();
}

struct Drawn {
  int n = 0, d = 0;
  hdx::Complex X;
};

inline Drawn random_complex_any(hdx::Rng& rng, int n_max = 12) {
  int d = 1 + static_cast<int>(rng.below(3));
  int n = d + 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max - d - 1)));
  return Drawn{n, d, random_complex(rng, n, d)};
}

}  // namespace corpus
