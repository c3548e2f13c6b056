#include "hdx/mixing.hpp"

#include <cmath>
#include <stdexcept>

namespace hdx {

namespace {
std::vector<char> mask_of(const Graph& G, const std::vector<Vertex>& S) {
  std::vector<char> m(static_cast<std::size_t>(G.n()), 0);
  for (Vertex v : S) {
    if (v < 0 || v >= G.n()) throw std::invalid_argument("mixing: vertex out of range");
    m[static_cast<std::size_t>(v)] = 1;
  }
  return m;
}
}  // namespace

MixingResult mixing_check(const Graph& G, const std::vector<Vertex>& A,
                          const std::vector<Vertex>& B, double lambda, double tol) {
  auto inA = mask_of(G, A);
  auto inB = mask_of(G, B);
  std::int64_t e_ordered = 0;
  for (auto [u, v] : G.edges()) {
    e_ordered += (inA[static_cast<std::size_t>(u)] && inB[static_cast<std::size_t>(v)]) ? 1 : 0;
    e_ordered += (inA[static_cast<std::size_t>(v)] && inB[static_cast<std::size_t>(u)]) ? 1 : 0;
  }
  double volA = 0.0, volB = 0.0;
  for (Vertex v = 0; v < G.n(); ++v) {
    if (inA[static_cast<std::size_t>(v)]) volA += G.degree(v);
    if (inB[static_cast<std::size_t>(v)]) volB += G.degree(v);
  }
  MixingResult r;
  double expected = (G.m() == 0) ? 0.0 : volA * volB / (2.0 * static_cast<double>(G.m()));
  r.lhs = std::abs(static_cast<double>(e_ordered) - expected);
  r.rhs = lambda * std::sqrt(volA * volB);
  r.slack = r.rhs - r.lhs;
  r.ok = r.lhs <= r.rhs + tol;
  return r;
}

NormalizedMixingResult normalized_mixing_check(const Graph& G, const std::vector<Vertex>& A,
                                               const std::vector<Vertex>& B, double lambda_bar,
                                               double tol) {
  if (G.m() == 0) throw std::invalid_argument("normalized mixing: graph has no edges");
  auto inA = mask_of(G, A);
  auto inB = mask_of(G, B);
  std::int64_t e_set = 0;
  for (auto [u, v] : G.edges()) {
    bool ab = inA[static_cast<std::size_t>(u)] && inB[static_cast<std::size_t>(v)];
    bool ba = inA[static_cast<std::size_t>(v)] && inB[static_cast<std::size_t>(u)];
    if (ab || ba) ++e_set;
  }
  double m = static_cast<double>(G.m());
  double volA = 0.0, volB = 0.0;
  for (Vertex v = 0; v < G.n(); ++v) {
    if (inA[static_cast<std::size_t>(v)]) volA += G.degree(v);
    if (inB[static_cast<std::size_t>(v)]) volB += G.degree(v);
  }
  double na = volA / (2.0 * m), nb = volB / (2.0 * m);
  NormalizedMixingResult r;
  r.lhs = static_cast<double>(e_set) / m;
  double core = na * nb + lambda_bar * std::sqrt(na * nb);
  r.rhs2 = 2.0 * core;
  r.rhs4 = 4.0 * core;
  r.factor2 = r.lhs <= r.rhs2 + tol;
  r.factor4 = r.lhs <= r.rhs4 + tol;
  return r;
}

double cheeger_floor(double lambda) {
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("cheeger_floor: lambda outside [0,1]");
  return (1.0 - lambda) / 2.0;
}

}  // namespace hdx
