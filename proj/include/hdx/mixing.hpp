#pragma once

#include <vector>

#include "hdx/graph.hpp"

namespace hdx {

struct MixingResult {
  bool ok = false;
  double lhs = 0.0;    // |e(A,B) - vol(A) vol(B) / 2m|
  double rhs = 0.0;    // lambda * sqrt(vol(A) vol(B))
  double slack = 0.0;  // rhs - lhs
};

// Expander mixing lemma for the normalized adjacency:
//   |e(A,B) - vol(A) vol(B) / (2|E|)| <= lambda * sqrt(vol(A) vol(B)).
// e(A,B) follows the degree-sum convention: ordered incidences, so an edge
// with both endpoints in A intersect B counts twice. With the graph's true
// lambda this is a theorem for arbitrary (possibly overlapping) A, B.
MixingResult mixing_check(const Graph& G, const std::vector<Vertex>& A,
                          const std::vector<Vertex>& B, double lambda, double tol = 1e-9);

struct NormalizedMixingResult {
  bool factor2 = false;  // ||E(A,B)|| <= 2 (||A|| ||B|| + lambda sqrt(||A|| ||B||))
  bool factor4 = false;  // ||E(A,B)|| <= 4 (||A|| ||B|| + lambda sqrt(||A|| ||B||))
  double lhs = 0.0;
  double rhs2 = 0.0;
  double rhs4 = 0.0;
};

// Mixing in the weighted norms of the graph seen as a 1-complex:
// ||E(A,B)|| is the norm of the set of edges with one endpoint in A and one
// in B (each edge once), ||A|| = vol(A) / 2|E|.
NormalizedMixingResult normalized_mixing_check(const Graph& G, const std::vector<Vertex>& A,
                                               const std::vector<Vertex>& B, double lambda_bar,
                                               double tol = 1e-9);

// Certified lower bound on h_0 of a lambda-spectral-expander graph: (1-lambda)/2.
double cheeger_floor(double lambda);

}  // namespace hdx
