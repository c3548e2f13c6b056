#include "hdx/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hdx {

namespace {

double max_offdiag(const std::vector<double>& a, int n) {
  double m = 0.0;
  for (int p = 0; p < n - 1; ++p)
    for (int q = p + 1; q < n; ++q)
      m = std::max(m, std::abs(a[static_cast<std::size_t>(p) * n + q]));
  return m;
}

// One Jacobi rotation zeroing a[p][q]; updates A (full symmetric storage) and,
// when given, the accumulated eigenvector matrix V.
void rotate(std::vector<double>& a, std::vector<double>* v, int n, int p, int q) {
  const std::size_t np = static_cast<std::size_t>(n);
  double apq = a[static_cast<std::size_t>(p) * np + q];
  double app = a[static_cast<std::size_t>(p) * np + p];
  double aqq = a[static_cast<std::size_t>(q) * np + q];
  double theta = (aqq - app) / (2.0 * apq);
  double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  double c = 1.0 / std::sqrt(t * t + 1.0);
  double s = t * c;

  for (int i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    double aip = a[static_cast<std::size_t>(i) * np + p];
    double aiq = a[static_cast<std::size_t>(i) * np + q];
    a[static_cast<std::size_t>(i) * np + p] = a[static_cast<std::size_t>(p) * np + i] =
        c * aip - s * aiq;
    a[static_cast<std::size_t>(i) * np + q] = a[static_cast<std::size_t>(q) * np + i] =
        s * aip + c * aiq;
  }
  a[static_cast<std::size_t>(p) * np + p] = app - t * apq;
  a[static_cast<std::size_t>(q) * np + q] = aqq + t * apq;
  a[static_cast<std::size_t>(p) * np + q] = a[static_cast<std::size_t>(q) * np + p] = 0.0;

  if (v) {
    for (int i = 0; i < n; ++i) {
      double vip = (*v)[static_cast<std::size_t>(i) * np + p];
      double viq = (*v)[static_cast<std::size_t>(i) * np + q];
      (*v)[static_cast<std::size_t>(i) * np + p] = c * vip - s * viq;
      (*v)[static_cast<std::size_t>(i) * np + q] = s * vip + c * viq;
    }
  }
}

void jacobi_core(std::vector<double>& a, std::vector<double>* v, int n, double off_tol,
                 int max_sweeps, int& sweeps_out, double& off_out) {
  const std::size_t np = static_cast<std::size_t>(n);
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (max_offdiag(a, n) <= off_tol) break;
    // rotate only entries that still matter this sweep
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[static_cast<std::size_t>(p) * np + q]) > off_tol * 0.01)
          rotate(a, v, n, p, q);
      }
    }
  }
  sweeps_out = sweep;
  off_out = max_offdiag(a, n);
}

}  // namespace

JacobiResult jacobi_eigensymm(std::vector<double> a, int n, double off_tol, int max_sweeps) {
  if (n < 0 || a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("jacobi: matrix size mismatch");
  const std::size_t np = static_cast<std::size_t>(n);
  std::vector<double> v(np * np, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * np + i] = 1.0;

  JacobiResult r;
  jacobi_core(a, &v, n, off_tol, max_sweeps, r.sweeps, r.max_offdiag);

  std::vector<int> order(np);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return a[static_cast<std::size_t>(x) * np + x] > a[static_cast<std::size_t>(y) * np + y];
  });
  r.eigenvalues.resize(np);
  r.eigenvectors.resize(np * np);
  for (std::size_t k = 0; k < np; ++k) {
    r.eigenvalues[k] = a[static_cast<std::size_t>(order[k]) * np + order[k]];
    for (std::size_t i = 0; i < np; ++i)
      r.eigenvectors[i * np + k] = v[i * np + static_cast<std::size_t>(order[k])];
  }
  return r;
}

std::vector<double> normalized_adjacency(const Graph& G, std::vector<Vertex>* keep) {
  std::vector<Vertex> live;
  std::vector<int> pos(static_cast<std::size_t>(G.n()), -1);
  for (Vertex v = 0; v < G.n(); ++v) {
    if (G.degree(v) > 0) {
      pos[static_cast<std::size_t>(v)] = static_cast<int>(live.size());
      live.push_back(v);
    }
  }
  const std::size_t k = live.size();
  std::vector<double> a(k * k, 0.0);
  for (auto [u, v] : G.edges()) {
    std::size_t iu = static_cast<std::size_t>(pos[static_cast<std::size_t>(u)]);
    std::size_t iv = static_cast<std::size_t>(pos[static_cast<std::size_t>(v)]);
    double w = 1.0 / std::sqrt(static_cast<double>(G.degree(u)) * G.degree(v));
    a[iu * k + iv] = a[iv * k + iu] = w;
  }
  if (keep) *keep = std::move(live);
  return a;
}

SpectrumReport spectrum(const Graph& G, double tol) {
  if (G.m() == 0) throw std::invalid_argument("empty spectrum");
  SpectrumReport rep;
  rep.n = G.n();
  rep.m = static_cast<std::int64_t>(G.m());

  std::vector<double> a0 = normalized_adjacency(G, &rep.nonisolated);
  const int k = static_cast<int>(rep.nonisolated.size());
  JacobiResult jr = jacobi_eigensymm(a0, k);
  rep.eigenvalues = jr.eigenvalues;

  // residuals against the untouched matrix
  const std::size_t kp = static_cast<std::size_t>(k);
  double worst = 0.0;
  std::vector<double> Av(kp);
  for (std::size_t col = 0; col < kp; ++col) {
    for (std::size_t i = 0; i < kp; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < kp; ++j)
        s += a0[i * kp + j] * jr.eigenvectors[j * kp + col];
      Av[i] = s - jr.eigenvalues[col] * jr.eigenvectors[i * kp + col];
    }
    double r2 = 0.0;
    for (double x : Av) r2 += x * x;
    worst = std::max(worst, std::sqrt(r2));
  }
  rep.solver_residual = worst;

  // v -> sqrt(deg v) must be an eigenvector for eigenvalue 1
  std::vector<double> sd(kp);
  double nrm = 0.0;
  for (std::size_t i = 0; i < kp; ++i) {
    sd[i] = std::sqrt(static_cast<double>(G.degree(rep.nonisolated[i])));
    nrm += sd[i] * sd[i];
  }
  nrm = std::sqrt(nrm);
  double dev = 0.0;
  for (std::size_t i = 0; i < kp; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < kp; ++j) s += a0[i * kp + j] * sd[j];
    dev += (s - sd[i]) * (s - sd[i]);
  }
  if (std::sqrt(dev) / nrm > tol)
    throw std::runtime_error("spectrum: sqrt-degree eigenvector check failed");
  if (std::abs(rep.eigenvalues.front() - 1.0) > tol)
    throw std::runtime_error("spectrum: top eigenvalue is not 1");

  rep.lambda = k >= 2 ? std::max(std::abs(rep.eigenvalues[1]), std::abs(rep.eigenvalues.back()))
                      : 0.0;
  return rep;
}

double spectrum_lambda(const Graph& G) {
  if (G.m() == 0) throw std::invalid_argument("empty spectrum");
  std::vector<Vertex> live;
  std::vector<double> a = normalized_adjacency(G, &live);
  const int k = static_cast<int>(live.size());
  int sweeps = 0;
  double off = 0.0;
  jacobi_core(a, nullptr, k, 1e-12, 64, sweeps, off);
  std::vector<double> ev(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    ev[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i) * k + i];
  std::sort(ev.begin(), ev.end());
  // ev is ascending: drop the top eigenvalue (which is 1)
  return std::max(std::abs(ev.front()), std::abs(ev[ev.size() - 2]));
}

}  // namespace hdx
