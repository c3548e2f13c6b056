#pragma once

#include <vector>

#include "hdx/graph.hpp"

namespace hdx {

struct JacobiResult {
  std::vector<double> eigenvalues;   // descending
  std::vector<double> eigenvectors;  // column-major, column i pairs with eigenvalue i
  int sweeps = 0;
  double max_offdiag = 0.0;
};

// Cyclic Jacobi on a dense symmetric matrix (row-major, size n*n). Fully
// deterministic; adequate for the few-hundred-vertex links this tool sees.
JacobiResult jacobi_eigensymm(std::vector<double> a, int n, double off_tol = 1e-12,
                              int max_sweeps = 64);

struct SpectrumReport {
  int n = 0;          // vertices of the input graph
  std::int64_t m = 0;
  std::vector<double> eigenvalues;  // descending; one per non-isolated vertex
  double lambda = 0.0;              // max(|lambda_2|, |lambda_min|)
  double solver_residual = 0.0;     // max_i ||A v_i - lambda_i v_i||_2
  std::vector<Vertex> nonisolated;
};

// Normalized adjacency D^{-1/2} A D^{-1/2} over the non-isolated vertices.
// `keep` (optional) receives the vertex ids that made it into the matrix.
std::vector<double> normalized_adjacency(const Graph& G, std::vector<Vertex>* keep = nullptr);

// Full eigensolve of the normalized adjacency. Verifies that the top
// eigenvalue is 1 with eigenvector v -> sqrt(deg v); throws on no edges.
SpectrumReport spectrum(const Graph& G, double tol = 1e-9);

// lambda only, skipping eigenvector accumulation and residuals.
double spectrum_lambda(const Graph& G);

}  // namespace hdx
