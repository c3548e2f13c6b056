#include "hdx/experiments.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "hdx/io.hpp"
#include "hdx/parallel.hpp"
#include "hdx/rng.hpp"
#include "hdx/spectrum.hpp"

namespace hdx {

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  std::size_t s = v.size();
  return (v[(s - 1) / 2] + v[s / 2]) / 2.0;
}

std::int64_t sum_counts(const BitVec& v, const std::vector<std::int64_t>& counts) {
  std::int64_t s = 0;
  v.for_each_set([&](std::size_t b) { s += counts[b]; });
  return s;
}

// min over the coset start + span(B) of the counts-numerator; clobbers scratch
std::int64_t coset_min_num(const CosetBasis& B, BitVec& scratch,
                           const std::vector<std::int64_t>& counts, std::int64_t num0) {
  std::int64_t best = num0, num = num0;
  const std::size_t r = B.rank();
  for (std::uint64_t t = 1; t < (std::uint64_t{1} << r); ++t) {
    const BitVec& row = B.rows()[static_cast<std::size_t>(std::countr_zero(t))];
    row.for_each_set([&](std::size_t b) {
      num += scratch.test(b) ? -counts[b] : counts[b];
      scratch.flip(b);
    });
    best = std::min(best, num);
  }
  return best;
}

bool ratio_less(std::int64_t a1, std::int64_t b1, std::int64_t a2, std::int64_t b2) {
  return static_cast<__int128>(a1) * b2 < static_cast<__int128>(a2) * b1;
}

}  // namespace

std::vector<Graph> codim2_link_graphs(const Complex& X) {
  const int d = X.dimension();
  if (d < 2) throw std::invalid_argument("codim2_link_graphs: need dim >= 2");
  const int nl = X.vertex_count() - (d - 1);
  std::vector<std::vector<std::pair<Vertex, Vertex>>> edges(X.size(d - 2));

  std::vector<Vertex> rho;
  for (std::size_t t = 0; t < X.size(d); ++t) {
    Cell tau = X.cell_at(d, t);
    const auto& tv = tau.vertices();
    for (int i = 0; i < tau.card() - 1; ++i) {
      for (int j = i + 1; j < tau.card(); ++j) {
        rho.clear();
        for (int q = 0; q < tau.card(); ++q)
          if (q != i && q != j) rho.push_back(tv[static_cast<std::size_t>(q)]);
        std::size_t idx = X.index_of(d - 2, colex_rank(rho));
        // dense relabeling of a and b on [n] minus rho: subtract the number of
        // rho-vertices below (all of which are tau-vertices here)
        Vertex a = tv[static_cast<std::size_t>(i)] - i;
        Vertex b = tv[static_cast<std::size_t>(j)] - (j - 1);
        edges[idx].emplace_back(a, b);
      }
    }
  }

  std::vector<Graph> out;
  out.reserve(edges.size());
  for (auto& es : edges) out.emplace_back(nl, std::move(es));
  return out;
}

std::vector<TrialRecord> run_condition_b(const ConditionBParams& p, int threads) {
  std::vector<TrialRecord> records(static_cast<std::size_t>(p.trials));
  parallel_for(static_cast<std::size_t>(p.trials), threads, [&](std::size_t i) {
    double t0 = now_ms();
    std::uint64_t seed = derive_seed(p.seed, i);
    ModelOptions mo;
    mo.completion = p.completion;
    ModelSample sample = sample_model(p.n, p.d, p.k, seed, mo);
    std::vector<Graph> links = codim2_link_graphs(sample.complex);

    std::vector<std::size_t> chosen(links.size());
    for (std::size_t q = 0; q < links.size(); ++q) chosen[q] = q;
    if (p.link_sample > 0 && static_cast<std::size_t>(p.link_sample) < links.size()) {
      Rng rng(derive_seed(seed, 0x11));
      rng.shuffle(chosen);
      chosen.resize(static_cast<std::size_t>(p.link_sample));
      std::sort(chosen.begin(), chosen.end());
    }

    std::vector<double> lambdas;
    lambdas.reserve(chosen.size());
    int edgeless = 0;
    for (std::size_t q : chosen) {
      if (links[q].m() == 0) {
        ++edgeless;
        lambdas.push_back(1.0);  // recorded as 1 and flagged
      } else {
        lambdas.push_back(spectrum_lambda(links[q]));
      }
    }
    double mx = 0.0;
    for (double l : lambdas) mx = std::max(mx, l);

    TrialRecord r;
    r.experiment = "condition_b";
    r.params = {{"n", std::to_string(p.n)},
                {"d", std::to_string(p.d)},
                {"k", std::to_string(p.k)},
                {"completion", p.completion ? "1" : "0"}};
    r.seed = seed;
    r.values = {{"max_lambda", mx},
                {"median_lambda", median_of(lambdas)},
                {"links", static_cast<double>(lambdas.size())},
                {"edgeless", static_cast<double>(edgeless)}};
    r.flagged = edgeless > 0;
    r.wall_ms = now_ms() - t0;
    records[i] = std::move(r);
  });
  return records;
}

LargeCochainResult measure_large_cochain_expansion(const Complex& link, double c,
                                                   const ExpansionBudget& budget,
                                                   std::uint64_t seed) {
  LargeCochainResult out;
  if (c >= 1.0) {  // the weighted norm is bounded by 1
    out.vacuous = true;
    out.exact = true;
    return out;
  }
  const int j = link.dimension() - 1;
  WeightTable W = WeightTable::build(link);
  CosetBasis B = coboundary_basis(link, j);
  CoboundaryOp delta(link, j);
  const std::size_t m = link.size(j);
  const std::size_t rank = B.rank();
  const std::size_t fb = m - rank;
  const auto& cj = W.counts(j);
  const auto& cj1 = W.counts(j + 1);
  const Rat cr = Rat::from_double(c);
  const Rat denj(W.denom(j));

  bool found = false;
  std::int64_t best_a = 0, best_b = 1;

  const bool exhaustive =
      fb < 63 && (std::uint64_t{1} << fb) <= budget.transversal_limit &&
      rank <= static_cast<std::size_t>(budget.search.exhaustive_bits);

  if (exhaustive) {
    out.exact = true;
    BitVec cur(m), db(link.size(j + 1)), scratch(m);
    std::int64_t dnum = 0;
    const auto& nonpiv = B.nonpivots();
    for (std::uint64_t t = 1; t < (std::uint64_t{1} << fb); ++t) {
      std::size_t col = nonpiv[static_cast<std::size_t>(std::countr_zero(t))];
      cur.flip(col);
      auto [ub, ue] = delta.up(col);
      for (auto it = ub; it != ue; ++it) {
        dnum += db.test(*it) ? -cj1[*it] : cj1[*it];
        db.flip(*it);
      }
      scratch = cur;
      std::int64_t cnum = coset_min_num(B, scratch, cj, sum_counts(cur, cj));
      if (!(Rat(cnum, W.denom(j)) > cr)) continue;
      ++out.tested;
      if (!found || ratio_less(dnum, cnum, best_a, best_b)) {
        found = true;
        best_a = dnum;
        best_b = cnum;
      }
    }
  } else {
    Rng rng(seed);
    Cochain A = make_cochain(link, j);
    std::uint64_t attempts = budget.samples * 8;
    for (std::uint64_t s = 0; s < attempts && out.tested < budget.samples; ++s) {
      BitVec bits(m);
      for (std::size_t b = 0; b < m; ++b)
        if (rng.bernoulli(0.5)) bits.set(b);
      A.bits = bits;
      SearchBudget sb = budget.search;
      sb.seed = derive_seed(seed, s);
      ClassNormResult cls = class_norm(W, B, A, sb);
      if (!(cls.value > cr)) continue;
      ++out.tested;
      std::int64_t cnum = cls.value.num() * (W.denom(j) / cls.value.den());
      std::int64_t dnum = W.norm_numerator(delta.apply(A));
      if (!found || ratio_less(dnum, cnum, best_a, best_b)) {
        found = true;
        best_a = dnum;
        best_b = cnum;
      }
    }
  }

  out.any = found;
  if (found) out.min_ratio = Rat(best_a, W.denom(j + 1)) / Rat(best_b, W.denom(j));
  return out;
}

std::vector<TrialRecord> run_condition_a(const ConditionAParams& p, int threads) {
  for (int j : p.rho_dims)
    if (j < -1 || j > p.d - 3)
      throw std::invalid_argument("condition_a: rho dimension outside [-1, d-3]");

  std::vector<TrialRecord> records(static_cast<std::size_t>(p.trials));
  parallel_for(static_cast<std::size_t>(p.trials), threads, [&](std::size_t i) {
    double t0 = now_ms();
    std::uint64_t seed = derive_seed(p.seed, i);
    ModelOptions mo;
    mo.completion = p.completion;
    ModelSample sample = sample_model(p.n, p.d, p.k, seed, mo);
    const Complex& X = sample.complex;

    Rng rng(derive_seed(seed, 0x22));
    bool have_min = false;
    double min_ratio = 0.0;
    std::uint64_t tested = 0;
    int skipped = 0, certified = 0, rho_count = 0;

    for (int j : p.rho_dims) {
      std::vector<std::size_t> cand(X.size(j));
      for (std::size_t q = 0; q < cand.size(); ++q) cand[q] = q;
      if (p.rho_sample > 0 && static_cast<std::size_t>(p.rho_sample) < cand.size()) {
        rng.shuffle(cand);
        cand.resize(static_cast<std::size_t>(p.rho_sample));
        std::sort(cand.begin(), cand.end());
      }
      for (std::size_t q : cand) {
        Cell rho = X.cell_at(j, q);
        LinkResult lr = X.link(rho);
        if (lr.complex.size(lr.complex.dimension()) == 0) {
          ++skipped;  // no top cells in the link: weighted norm undefined
          continue;
        }
        ++rho_count;
        LargeCochainResult res = measure_large_cochain_expansion(
            lr.complex, p.c, p.budget, derive_seed(seed, 0x100 + q));
        tested += res.tested;
        if (res.exact) ++certified;
        if (res.any) {
          double v = res.min_ratio.to_double();
          if (!have_min || v < min_ratio) {
            have_min = true;
            min_ratio = v;
          }
        }
      }
    }

    TrialRecord r;
    r.experiment = "condition_a";
    r.params = {{"n", std::to_string(p.n)},    {"d", std::to_string(p.d)},
                {"k", std::to_string(p.k)},    {"c", fmt_double(p.c)},
                {"completion", p.completion ? "1" : "0"}};
    r.seed = seed;
    r.values = {{"min_ratio", have_min ? min_ratio : -1.0},
                {"tested", static_cast<double>(tested)},
                {"rho_count", static_cast<double>(rho_count)},
                {"certified", static_cast<double>(certified)},
                {"skipped", static_cast<double>(skipped)}};
    r.flagged = skipped > 0;
    r.wall_ms = now_ms() - t0;
    records[i] = std::move(r);
  });
  return records;
}

CertificateResult complete_expansion_certificate(int n, int d, const CertificateBudget& budget) {
  Complex X = complete_complex(n, d);
  WeightTable W = WeightTable::build(X);
  CosetBasis B = coboundary_basis(X, d - 1);
  CoboundaryOp delta(X, d - 1);
  const std::size_t m = X.size(d - 1);
  const std::size_t rank = B.rank();
  const std::size_t fb = m - rank;
  const auto& cj = W.counts(d - 1);
  const Rat top_cells(static_cast<std::int64_t>(binom(n, d + 1)));
  const Rat denj(W.denom(d - 1));

  if (rank > static_cast<std::size_t>(budget.class_bits))
    throw BudgetError("complete_expansion_certificate: coset enumeration exceeds budget");

  CertificateResult res;
  const bool full = m < 63 && (std::uint64_t{1} << m) <= budget.full_limit;
  if (!full && !(fb < 63 && (std::uint64_t{1} << fb) <= budget.transversal_limit))
    throw BudgetError("complete_expansion_certificate: enumeration exceeds budget");
  res.full_enumeration = full;

  // walk either every cochain or one representative per class
  const std::size_t gray_bits = full ? m : fb;
  const std::vector<std::uint32_t>* cols = nullptr;
  std::vector<std::uint32_t> all_cols;
  if (full) {
    all_cols.resize(m);
    for (std::size_t b = 0; b < m; ++b) all_cols[b] = static_cast<std::uint32_t>(b);
    cols = &all_cols;
  } else {
    cols = &B.nonpivots();
  }

  BitVec cur(m), db(X.size(d)), scratch(m);
  std::int64_t dpc = 0;
  bool have = false;
  Rat min_slack;

  auto consider = [&]() {
    scratch = cur;
    std::int64_t cnum = coset_min_num(B, scratch, cj, sum_counts(cur, cj));
    Rat slack = Rat(dpc) - Rat(cnum, W.denom(d - 1)) * top_cells;
    if (!have || slack < min_slack) {
      have = true;
      min_slack = slack;
    }
    ++res.enumerated;
  };

  consider();  // the zero cochain
  for (std::uint64_t t = 1; t < (std::uint64_t{1} << gray_bits); ++t) {
    std::size_t col = (*cols)[static_cast<std::size_t>(std::countr_zero(t))];
    cur.flip(col);
    auto [ub, ue] = delta.up(col);
    for (auto it = ub; it != ue; ++it) {
      dpc += db.test(*it) ? -1 : 1;
      db.flip(*it);
    }
    consider();
  }

  res.min_slack = min_slack;
  res.ok = !(min_slack < Rat(0));
  return res;
}

std::vector<TrialRecord> run_intersection(const IntersectionParams& p, int threads) {
  for (int j : p.rho_dims)
    if (j < -1 || j > p.d - 3)
      throw std::invalid_argument("intersection: rho dimension outside [-1, d-3]");

  std::vector<TrialRecord> records(static_cast<std::size_t>(p.trials));
  parallel_for(static_cast<std::size_t>(p.trials), threads, [&](std::size_t i) {
    double t0 = now_ms();
    std::uint64_t seed = derive_seed(p.seed, i);
    // greedy prefixes only: the quantities are defined on the uniform stage
    ModelSample sample = sample_model(p.n, p.d, p.k, seed, ModelOptions{});
    const Complex& X = sample.complex;

    std::uint64_t T = p.T;
    for (const SystemRun& run : sample.systems)
      T = (T == 0) ? run.greedy_len : std::min<std::uint64_t>(T, run.greedy_len);

    Rng rng(derive_seed(seed, 0x33));
    int hard_failures = 0;
    std::uint64_t tested = 0;
    double ratio_min = 0.0, ratio_sum = 0.0;
    bool have_ratio = false;

    for (int j : p.rho_dims) {
      std::vector<std::size_t> cand(X.size(j));
      for (std::size_t q = 0; q < cand.size(); ++q) cand[q] = q;
      if (p.rho_sample > 0 && static_cast<std::size_t>(p.rho_sample) < cand.size()) {
        rng.shuffle(cand);
        cand.resize(static_cast<std::size_t>(p.rho_sample));
      }
      for (std::size_t q : cand) {
        Cell rho = X.cell_at(j, q);
        const int rc = rho.card();
        LinkResult lr = X.link(rho);
        const Complex& L = lr.complex;
        const int dl = L.dimension();
        if (L.size(dl) == 0) continue;
        Complex K = complete_complex(p.n - rc, dl);

        // host -> link vertex relabeling
        std::vector<Vertex> host_to_link(static_cast<std::size_t>(p.n), -1);
        for (std::size_t v = 0; v < lr.to_host.size(); ++v)
          host_to_link[static_cast<std::size_t>(lr.to_host[v])] = static_cast<Vertex>(v);

        // Y_i^rho(T): top cells of K coming from the first T greedy cells
        std::vector<BitVec> Y(sample.systems.size(), BitVec(K.size(dl)));
        std::vector<Vertex> relabeled;
        for (std::size_t s = 0; s < sample.systems.size(); ++s) {
          const SystemRun& run = sample.systems[s];
          std::uint64_t upto = std::min<std::uint64_t>(T, run.greedy_len);
          for (std::uint64_t tdx = 0; tdx < upto; ++tdx) {
            Cell tau = Cell::unrank(run.order[tdx], p.d + 1);
            if (!tau.contains_all(rho)) continue;
            Cell sigma = tau.difference(rho);
            relabeled.clear();
            for (Vertex v : sigma.vertices())
              relabeled.push_back(host_to_link[static_cast<std::size_t>(v)]);
            Y[s].set(K.index_of(dl, colex_rank(relabeled)));
          }
        }

        // sample cochains with class norm > c (exact class norms; links here
        // are small by construction)
        WeightTable WL = WeightTable::build(L);
        CosetBasis BL = coboundary_basis(L, dl - 1);
        CoboundaryOp deltaL(L, dl - 1);
        CoboundaryOp deltaK(K, dl - 1);
        if (L.size(dl - 1) != K.size(dl - 1)) {
          ++hard_failures;  // complete skeleton should make these agree
          continue;
        }
        const Rat cr = Rat::from_double(p.c);
        Cochain A = make_cochain(L, dl - 1);
        int found = 0;
        for (int attempt = 0; attempt < p.cochain_samples * 8 && found < p.cochain_samples;
             ++attempt) {
          BitVec bits(L.size(dl - 1));
          for (std::size_t b = 0; b < bits.size(); ++b)
            if (rng.bernoulli(0.5)) bits.set(b);
          A.bits = bits;
          ClassNormResult cls = class_norm(WL, BL, A);
          if (!cls.exact || !(cls.value > cr)) continue;
          ++found;
          ++tested;

          BitVec F = deltaK.apply(Cochain{dl - 1, bits}).bits;
          BitVec dA = deltaL.apply(A).bits;

          BitVec running(K.size(dl)), uni(K.size(dl));
          bool disjoint_ok = true, subset_ok = true;
          for (std::size_t s = 0; s < Y.size(); ++s) {
            BitVec H = and_not(F, running);
            H &= Y[s];
            if (H.intersects(uni)) disjoint_ok = false;
            uni |= H;
            running |= Y[s];
            // every member of H maps to a top cell of the actual link
            H.for_each_set([&](std::size_t tk) {
              CellRank rk = K.cells(dl)[tk];
              const auto& lt = L.cells(dl);
              auto it = std::lower_bound(lt.begin(), lt.end(), rk);
              if (it == lt.end() || *it != rk ||
                  !dA.test(static_cast<std::size_t>(it - lt.begin())))
                subset_ok = false;
            });
          }
          // F intersect union(Y_i) == union(H_i)
          BitVec lhs = F;
          lhs &= running;
          bool cover_ok = lhs == uni;
          if (!disjoint_ok || !subset_ok || !cover_ok) ++hard_failures;

          double denom = p.c * p.k * cls.value.to_double() *
                         std::pow(static_cast<double>(p.n), p.d - rc);
          double ratio = denom > 0 ? static_cast<double>(uni.popcount()) / denom : 0.0;
          ratio_sum += ratio;
          if (!have_ratio || ratio < ratio_min) ratio_min = ratio;
          have_ratio = true;
        }
      }
    }

    TrialRecord r;
    r.experiment = "intersection";
    r.params = {{"n", std::to_string(p.n)},
                {"d", std::to_string(p.d)},
                {"k", std::to_string(p.k)},
                {"c", fmt_double(p.c)},
                {"T", std::to_string(T)}};
    r.seed = seed;
    r.values = {{"tested", static_cast<double>(tested)},
                {"ratio_min", have_ratio ? ratio_min : -1.0},
                {"ratio_mean", tested ? ratio_sum / static_cast<double>(tested) : -1.0}};
    r.hard_failures = hard_failures;
    r.wall_ms = now_ms() - t0;
    records[i] = std::move(r);
  });
  return records;
}

void write_records_csv(std::ostream& os, const std::vector<TrialRecord>& records) {
  if (records.empty()) return;
  const TrialRecord& head = records.front();
  for (const TrialRecord& r : records) {
    if (r.experiment != head.experiment || r.params.size() != head.params.size() ||
        r.values.size() != head.values.size())
      throw std::logic_error("write_records_csv: mixed record schemas");
  }

  std::vector<std::size_t> order(records.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (records[a].params != records[b].params) return records[a].params < records[b].params;
    return records[a].seed < records[b].seed;
  });

  os << "experiment";
  for (const auto& [k, v] : head.params) os << ',' << k;
  os << ",seed";
  for (const auto& [k, v] : head.values) os << ',' << k;
  os << ",hard_failures,flagged,wall_ms\n";
  for (std::size_t i : order) {
    const TrialRecord& r = records[i];
    os << r.experiment;
    for (const auto& [k, v] : r.params) os << ',' << v;
    os << ',' << r.seed;
    for (const auto& [k, v] : r.values) os << ',' << fmt_double(v);
    os << ',' << r.hard_failures << ',' << (r.flagged ? 1 : 0) << ',' << fmt_double(r.wall_ms)
       << "\n";
  }
}

nlohmann::json summarize_records(const std::vector<TrialRecord>& records) {
  nlohmann::json out;
  out["schema"] = "hdx.v1";
  out["groups"] = nlohmann::json::array();
  int hard_total = 0;

  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < records.size(); ++i) {
    std::string key = records[i].experiment;
    for (const auto& [k, v] : records[i].params) key += "|" + k + "=" + v;
    groups[key].push_back(i);
  }

  for (const auto& [key, idx] : groups) {
    const TrialRecord& head = records[idx.front()];
    nlohmann::json g;
    g["experiment"] = head.experiment;
    nlohmann::json pj = nlohmann::json::object();
    for (const auto& [k, v] : head.params) pj[k] = v;
    g["params"] = pj;
    g["trials"] = idx.size();

    int hard = 0, flagged = 0;
    for (std::size_t i : idx) {
      hard += records[i].hard_failures;
      flagged += records[i].flagged ? 1 : 0;
    }
    hard_total += hard;
    g["hard_failures"] = hard;
    g["flagged"] = flagged;

    nlohmann::json vals = nlohmann::json::object();
    for (std::size_t vi = 0; vi < head.values.size(); ++vi) {
      std::vector<double> xs;
      xs.reserve(idx.size());
      for (std::size_t i : idx) xs.push_back(records[i].values[vi].second);
      std::sort(xs.begin(), xs.end());
      double mean = 0.0;
      for (double x : xs) mean += x;
      mean /= static_cast<double>(xs.size());
      std::size_t s = xs.size();
      nlohmann::json q;
      q["min"] = xs.front();
      q["q25"] = xs[(s - 1) / 4];
      q["median"] = (xs[(s - 1) / 2] + xs[s / 2]) / 2.0;
      q["q75"] = xs[(3 * (s - 1)) / 4];
      q["max"] = xs.back();
      q["mean"] = mean;
      vals[head.values[vi].first] = q;
    }
    g["values"] = vals;
    out["groups"].push_back(g);
  }
  out["total_hard_failures"] = hard_total;
  return out;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_array(const std::string& body) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : body) {
    if (ch == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

long long to_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw ParseError("config: bad integer: " + s);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("config: bad integer: " + s);
  }
}

double to_num(const std::string& s) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw ParseError("config: bad number: " + s);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("config: bad number: " + s);
  }
}

}  // namespace

ExperimentConfig parse_experiment_config(std::istream& is) {
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    // strip comments outside quotes
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line = line.substr(0, i);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') continue;  // section headers are decorative

    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (val.empty()) throw ParseError("config: empty value for " + key);

    auto as_int_list = [&](std::vector<int>& dst) {
      dst.clear();
      if (val.front() == '[') {
        if (val.back() != ']') throw ParseError("config: unterminated array for " + key);
        for (const std::string& tok : split_array(val.substr(1, val.size() - 2)))
          dst.push_back(static_cast<int>(to_int(tok)));
      } else {
        dst.push_back(static_cast<int>(to_int(val)));
      }
      if (dst.empty()) throw ParseError("config: empty array for " + key);
    };
    auto as_num_list = [&](std::vector<double>& dst) {
      dst.clear();
      if (val.front() == '[') {
        if (val.back() != ']') throw ParseError("config: unterminated array for " + key);
        for (const std::string& tok : split_array(val.substr(1, val.size() - 2)))
          dst.push_back(to_num(tok));
      } else {
        dst.push_back(to_num(val));
      }
      if (dst.empty()) throw ParseError("config: empty array for " + key);
    };
    auto as_string = [&]() {
      if (val.size() >= 2 && val.front() == '"' && val.back() == '"')
        return val.substr(1, val.size() - 2);
      return val;
    };
    auto as_bool = [&]() {
      std::string v = as_string();
      if (v == "true" || v == "on" || v == "1") return true;
      if (v == "false" || v == "off" || v == "0") return false;
      throw ParseError("config: bad boolean for " + key + ": " + v);
    };

    if (key == "name")
      cfg.name = as_string();
    else if (key == "n")
      as_int_list(cfg.n);
    else if (key == "d")
      as_int_list(cfg.d);
    else if (key == "k")
      as_int_list(cfg.k);
    else if (key == "c")
      as_num_list(cfg.c);
    else if (key == "trials")
      cfg.trials = static_cast<int>(to_int(val));
    else if (key == "seed")
      cfg.seed = static_cast<std::uint64_t>(to_int(val));
    else if (key == "completion")
      cfg.completion = as_bool();
    else if (key == "rho_dims")
      as_int_list(cfg.rho_dims);
    else if (key == "rho_sample")
      cfg.rho_sample = static_cast<int>(to_int(val));
    else if (key == "cochain_samples")
      cfg.cochain_samples = static_cast<int>(to_int(val));
    else if (key == "link_sample")
      cfg.link_sample = static_cast<int>(to_int(val));
    else if (key == "alpha")
      cfg.alpha = to_num(val);
    else if (key == "rho_card")
      cfg.rho_card = static_cast<int>(to_int(val));
    else if (key == "output")
      cfg.output = as_string();
    else
      throw ParseError("config: unknown key: " + key);
  }
  if (cfg.name.empty()) throw ParseError("config: missing experiment name");
  return cfg;
}

int run_config(const ExperimentConfig& cfg, const std::string& outdir, int threads,
               std::ostream& log) {
  std::vector<TrialRecord> all;
  bool hard_fail = false;
  std::uint64_t cell = 0;

  for (int n : cfg.n) {
    for (int d : cfg.d) {
      for (int k : cfg.k) {
        for (double c : cfg.c) {
          std::uint64_t cell_seed = derive_seed(cfg.seed, cell++);
          if (cfg.name == "condition_b") {
            ConditionBParams p;
            p.n = n;
            p.d = d;
            p.k = k;
            p.trials = cfg.trials;
            p.seed = cell_seed;
            p.completion = cfg.completion;
            p.link_sample = cfg.link_sample;
            auto recs = run_condition_b(p, threads);
            all.insert(all.end(), recs.begin(), recs.end());
          } else if (cfg.name == "condition_a") {
            ConditionAParams p;
            p.n = n;
            p.d = d;
            p.k = k;
            p.c = c;
            p.trials = cfg.trials;
            p.seed = cell_seed;
            p.rho_dims = cfg.rho_dims;
            p.rho_sample = cfg.rho_sample;
            p.completion = cfg.completion;
            auto recs = run_condition_a(p, threads);
            all.insert(all.end(), recs.begin(), recs.end());
          } else if (cfg.name == "intersection") {
            IntersectionParams p;
            p.n = n;
            p.d = d;
            p.k = k;
            p.c = c;
            p.trials = cfg.trials;
            p.seed = cell_seed;
            p.rho_dims = cfg.rho_dims;
            p.rho_sample = cfg.rho_sample;
            p.cochain_samples = cfg.cochain_samples;
            auto recs = run_intersection(p, threads);
            all.insert(all.end(), recs.begin(), recs.end());
          } else if (cfg.name == "complete_certificate") {
            double t0 = now_ms();
            CertificateResult r = complete_expansion_certificate(n, d);
            TrialRecord rec;
            rec.experiment = "complete_certificate";
            rec.params = {{"n", std::to_string(n)}, {"d", std::to_string(d)}};
            rec.seed = cell_seed;
            rec.values = {{"min_slack", r.min_slack.to_double()},
                          {"enumerated", static_cast<double>(r.enumerated)},
                          {"full", r.full_enumeration ? 1.0 : 0.0}};
            rec.hard_failures = r.ok ? 0 : 1;
            rec.wall_ms = now_ms() - t0;
            all.push_back(std::move(rec));
          } else if (cfg.name == "claim33") {
            double t0 = now_ms();
            Claim33Row row = claim33_stats(cfg.trials, n, d, cfg.rho_card, cfg.alpha, cell_seed);
            TrialRecord rec;
            rec.experiment = "claim33";
            rec.params = {{"n", std::to_string(n)},
                          {"d", std::to_string(d)},
                          {"rho_card", std::to_string(cfg.rho_card)},
                          {"alpha", fmt_double(cfg.alpha)}};
            rec.seed = cell_seed;
            rec.values = {{"freq_first", row.freq_first},
                          {"freq_second", row.freq_second},
                          {"freq_both", row.freq_both},
                          {"window_lo", static_cast<double>(row.window_lo)},
                          {"window_hi", static_cast<double>(row.window_hi)}};
            rec.wall_ms = now_ms() - t0;
            all.push_back(std::move(rec));
          } else {
            throw std::invalid_argument("unknown experiment: " + cfg.name);
          }
        }
      }
    }
  }

  for (const TrialRecord& r : all)
    if (r.hard_failures > 0) hard_fail = true;

  std::filesystem::create_directories(outdir);
  std::filesystem::path base = std::filesystem::path(outdir) / cfg.output;
  std::filesystem::create_directories(base.parent_path());
  {
    std::ofstream csv(base.string() + ".csv");
    write_records_csv(csv, all);
  }
  nlohmann::json summary = summarize_records(all);
  {
    std::ofstream js(base.string() + "_summary.json");
    js << summary.dump(2) << "\n";
  }
  log << "experiment " << cfg.name << ": " << all.size() << " records, hard failures "
      << summary["total_hard_failures"] << "\n";
  return hard_fail ? 1 : 0;
}

}  // namespace hdx
