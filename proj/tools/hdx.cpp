// hdx: generate, verify and measure bounded-degree random simplicial
// complexes built from unions of Steiner-system-style packings.
//
// Exit codes: 0 success / property holds, 1 property fails, 2 usage,
// 3 parse error, 4 budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hdx/errors.hpp"
#include "hdx/experiments.hpp"
#include "hdx/expansion.hpp"
#include "hdx/io.hpp"
#include "hdx/model.hpp"
#include "hdx/parallel.hpp"
#include "hdx/spectrum.hpp"

namespace {

using nlohmann::json;

hdx::Cell parse_cell(const std::string& s) {
  std::string t = s;
  for (char& ch : t)
    if (ch == ',') ch = ' ';
  std::istringstream ss(t);
  std::vector<hdx::Vertex> vs;
  long long x;
  while (ss >> x) vs.push_back(static_cast<hdx::Vertex>(x));
  if (ss.bad() || (ss.fail() && !ss.eof()))
    throw CLI::ValidationError("--rho", "expected a list of vertex ids");
  return hdx::Cell(vs);
}

// "3/4", "1.5" or "2" as an exact rational
hdx::Rat parse_rat(const std::string& s) {
  auto bad = [&]() { return CLI::ValidationError("eps", "expected p/q or a decimal: " + s); };
  if (s.find('/') != std::string::npos) {
    std::size_t pos = s.find('/');
    try {
      return hdx::Rat(std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 1)));
    } catch (const std::exception&) {
      throw bad();
    }
  }
  std::size_t dot = s.find('.');
  try {
    if (dot == std::string::npos) return hdx::Rat(std::stoll(s));
    std::string frac = s.substr(dot + 1);
    if (frac.size() > 15) throw bad();
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::string head = s.substr(0, dot);
    bool neg = !head.empty() && head[0] == '-';
    std::int64_t ip = head.empty() || head == "-" ? 0 : std::stoll(head);
    std::int64_t num = (neg ? -ip : ip) * den + (frac.empty() ? 0 : std::stoll(frac));
    return hdx::Rat(neg ? -num : num, den);
  } catch (const CLI::ValidationError&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

hdx::StopRule parse_stop(const std::string& s) {
  if (s == "maximal") return hdx::StopRule::maximal();
  if (s.rfind("steps=", 0) == 0)
    return hdx::StopRule::step_count(std::stoull(s.substr(6)));
  if (s.rfind("uncovered=", 0) == 0)
    return hdx::StopRule::uncovered_threshold(std::stoull(s.substr(10)));
  throw CLI::ValidationError("--stop", "expected maximal | steps=T | uncovered=M");
}

json cell_to_json(const hdx::Cell& c) {
  json a = json::array();
  for (hdx::Vertex v : c.vertices()) a.push_back(v);
  return a;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hdx::ParseError("cannot open file: " + path);
  return in;
}

hdx::Complex load_complex(const std::string& path) {
  auto in = open_input(path);
  if (hdx::sniff_file(in) != hdx::FileKind::complex)
    throw hdx::ParseError("not a complex file: " + path);
  return hdx::read_complex(in);
}

void emit(const json& j, const std::string& format) {
  if (format == "text") {
    for (auto it = j.begin(); it != j.end(); ++it)
      std::cout << it.key() << ": " << it.value().dump() << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

struct GenerateArgs {
  int n = 0, d = 2, k = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string stop = "maximal";
  std::string complete = "off";
  bool require_complete = false;
  std::string rho;
  std::string out = "sample";
};

int cmd_generate(const GenerateArgs& a, const std::string& format) {
  std::uint64_t seed = a.seed;
  if (!a.seed_given) seed = std::random_device{}();

  hdx::ModelOptions opt;
  opt.stop = parse_stop(a.stop);
  opt.completion = a.complete == "on";
  opt.require_complete = a.require_complete;
  if (a.require_complete && !opt.completion)
    throw CLI::ValidationError("--require-complete", "needs --complete on");

  hdx::ModelSample sample = hdx::sample_model(a.n, a.d, a.k, seed, opt);

  std::ofstream cf(a.out + ".complex");
  if (!cf) throw std::runtime_error("cannot write " + a.out + ".complex");
  hdx::write_complex(cf, sample.complex);

  json side;
  side["schema"] = "hdx.v1";
  side["n"] = a.n;
  side["d"] = a.d;
  side["k"] = a.k;
  side["seed"] = seed;
  side["stop"] = a.stop;
  side["completion"] = opt.completion;
  side["per_system"] = json::array();
  for (const hdx::SystemRun& run : sample.systems) {
    json s;
    s["seed"] = run.seed;
    s["steps"] = run.greedy_len;
    s["complete"] = run.complete;
    json blocks = json::array();
    for (hdx::CellRank r : run.order)
      blocks.push_back(cell_to_json(hdx::Cell::unrank(r, a.d + 1)));
    s["blocks"] = blocks;
    side["per_system"].push_back(s);
  }
  if (!a.rho.empty()) {
    hdx::Cell rho = parse_cell(a.rho);
    json inst = json::array();
    for (std::size_t i = 0; i < sample.systems.size(); ++i) {
      const hdx::SystemRun& run = sample.systems[i];
      hdx::PackingState st;
      st.n = a.n;
      st.d = a.d;
      st.seed = run.seed;
      st.chosen.assign(run.order.begin(),
                       run.order.begin() + static_cast<std::ptrdiff_t>(run.greedy_len));
      json rows = json::array();
      for (const hdx::InstrumentRow& row : hdx::instrument(st, rho)) {
        json rj;
        rj["t"] = row.t;
        rj["forbidden"] = row.forbidden;
        rj["counters"] = row.counters;
        rj["bound"] = row.bound;
        rj["ok"] = row.bound_ok;
        rows.push_back(rj);
      }
      inst.push_back({{"system", i}, {"rho", cell_to_json(rho)}, {"rows", rows}});
    }
    side["instrumentation"] = inst;
  }
  std::ofstream jf(a.out + ".json");
  if (!jf) throw std::runtime_error("cannot write " + a.out + ".json");
  jf << side.dump(2) << "\n";

  json summary;
  summary["schema"] = "hdx.v1";
  summary["seed"] = seed;
  summary["files"] = {a.out + ".complex", a.out + ".json"};
  json comp = json::array();
  for (const hdx::SystemRun& run : sample.systems) comp.push_back(run.complete);
  summary["complete"] = comp;
  summary["top_cells"] = sample.complex.size(a.d);
  emit(summary, format);
  return 0;
}

struct VerifyArgs {
  std::string file;
  std::string mode = "design";
  int j = 2, k = 1;
  std::string eps = "0";
  std::uint64_t budget = std::uint64_t{1} << 24;
};

int cmd_verify(const VerifyArgs& a, const std::string& format) {
  auto in = open_input(a.file);
  hdx::FileKind kind = hdx::sniff_file(in);
  json out;
  out["schema"] = "hdx.v1";
  out["mode"] = a.mode;

  if (a.mode == "design" || a.mode == "steiner") {
    hdx::DesignCheck chk;
    if (kind == hdx::FileKind::design) {
      hdx::Design D = hdx::read_design(in);
      chk = a.mode == "design" ? hdx::is_design(D) : hdx::is_steiner(D, D.n, D.q - 1);
    } else if (kind == hdx::FileKind::complex) {
      hdx::Complex X = hdx::read_complex(in);
      hdx::Design D;
      D.n = X.vertex_count();
      D.q = X.dimension() + 1;
      D.r = X.dimension();
      D.lambda = 1;
      for (std::size_t t = 0; t < X.size(X.dimension()); ++t)
        D.blocks.push_back(X.cell_at(X.dimension(), t));
      if (a.mode == "design")
        chk = hdx::is_design(D);
      else
        chk = hdx::is_steiner(D, D.n, D.q - 1);
    } else {
      throw hdx::ParseError("verify: expected a design or complex file");
    }
    out["ok"] = chk.ok;
    if (!chk.ok) {
      out["witness"] = cell_to_json(chk.witness);
      out["count"] = chk.actual;
    }
    emit(out, format);
    return chk.ok ? 0 : 1;
  }

  if (a.mode == "expander") {
    if (kind != hdx::FileKind::complex) throw hdx::ParseError("verify: expected a complex file");
    hdx::Complex X = hdx::read_complex(in);
    hdx::ExpansionBudget budget;
    budget.transversal_limit = a.budget;
    bool ok = hdx::is_coboundary_expander(X, a.j, a.k, parse_rat(a.eps), budget);
    out["ok"] = ok;
    out["j"] = a.j;
    out["k"] = a.k;
    out["eps"] = a.eps;
    emit(out, format);
    return ok ? 0 : 1;
  }
  throw CLI::ValidationError("--mode", "expected design | steiner | expander");
}

struct ExpandArgs {
  std::string file;
  int j = 0;
  std::uint64_t budget = std::uint64_t{1} << 24;
  std::uint64_t samples = 4096;
  std::uint64_t seed = 1;
};

int cmd_expand(const ExpandArgs& a, const std::string& format) {
  hdx::Complex X = load_complex(a.file);
  hdx::ExpansionBudget budget;
  budget.transversal_limit = a.budget;
  budget.samples = a.samples;
  budget.seed = a.seed;
  hdx::ExpansionReport rep = hdx::expansion_constant(X, a.j, budget);

  json out;
  out["schema"] = "hdx.v1";
  out["dim"] = rep.dim;
  if (rep.empty_domain)
    out["h"] = nullptr;
  else
    out["h"] = rep.h;
  out["exact"] = rep.exact;
  out["method"] = rep.method == hdx::ExpansionMethod::exhaustive ? "exhaustive" : "sampled";
  out["argmin"] = rep.argmin.bits.to_hex();
  out["h_rational"] = rep.h_exact.to_string();
  out["class_norm"] = rep.class_norm_of_argmin;
  out["pseudo_norm"] = rep.pseudo_norm;
  out["empty_domain"] = rep.empty_domain;
  out["classes"] = rep.classes_enumerated;
  emit(out, format);
  return 0;
}

int cmd_link(const std::string& file, const std::string& rho_str, const std::string& out) {
  hdx::Complex X = load_complex(file);
  hdx::LinkResult lr = X.link(parse_cell(rho_str));
  if (out.empty()) {
    hdx::write_complex(std::cout, lr.complex);
  } else {
    std::ofstream cf(out + ".complex");
    if (!cf) throw std::runtime_error("cannot write " + out + ".complex");
    hdx::write_complex(cf, lr.complex);
    json side;
    side["schema"] = "hdx.v1";
    side["vertex_map"] = lr.to_host;
    std::ofstream jf(out + ".json");
    jf << side.dump(2) << "\n";
  }
  return 0;
}

int cmd_spectrum(const std::string& file, const std::string& rho_str,
                 const std::string& format) {
  auto in = open_input(file);
  hdx::Graph G;
  if (hdx::sniff_file(in) == hdx::FileKind::complex) {
    hdx::Complex X = hdx::read_complex(in);
    if (!rho_str.empty()) {
      hdx::LinkResult lr = X.link(parse_cell(rho_str));
      G = hdx::Graph::from_skeleton(lr.complex);
    } else {
      G = hdx::Graph::from_skeleton(X);
    }
  } else {
    if (!rho_str.empty())
      throw CLI::ValidationError("--rho", "links need a complex file, not an edge list");
    G = hdx::read_edge_list(in);
  }
  hdx::SpectrumReport rep = hdx::spectrum(G);
  json out;
  out["schema"] = "hdx.v1";
  out["n"] = rep.n;
  out["m"] = rep.m;
  out["eigenvalues"] = rep.eigenvalues;
  out["lambda"] = rep.lambda;
  out["residual"] = rep.solver_residual;
  emit(out, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounded-degree random complexes: generation, certification, spectra"};
  app.require_subcommand(1);

  std::string format = "json";
  int threads = hdx::default_threads();
  app.add_option("--format", format, "output format: json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--threads", threads, "worker threads for parallel enumeration/trials");

  int rc = 0;

  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate", "sample a random complex");
  gen->add_option("-n", ga.n, "vertices")->required();
  gen->add_option("-d", ga.d, "dimension")->required();
  gen->add_option("-k", ga.k, "number of systems");
  auto* seed_opt = gen->add_option("--seed", ga.seed, "master seed (random if omitted)");
  gen->add_option("--stop", ga.stop, "maximal | steps=T | uncovered=M");
  gen->add_option("--complete", ga.complete, "on | off: complete packings to Steiner systems")
      ->check(CLI::IsMember({"on", "off"}));
  gen->add_flag("--require-complete", ga.require_complete, "fail unless every system completes");
  gen->add_option("--rho", ga.rho, "cell to instrument, e.g. \"0,1\"");
  gen->add_option("-o,--out", ga.out, "output prefix");
  gen->callback([&] {
    ga.seed_given = seed_opt->count() > 0;
    rc = cmd_generate(ga, format);
  });

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "check design/steiner/expander properties");
  ver->add_option("file", va.file, "input file")->required();
  ver->add_option("--mode", va.mode, "design | steiner | expander")->required();
  ver->add_option("--j", va.j, "expander: dimension j");
  ver->add_option("--k", va.k, "expander: degree bound");
  ver->add_option("--eps", va.eps, "expander: expansion bound (p/q or decimal)");
  ver->add_option("--budget", va.budget, "transversal budget");
  ver->callback([&] { rc = cmd_verify(va, format); });

  ExpandArgs ea;
  auto* exp = app.add_subcommand("expand", "coboundary expansion constant h_j");
  exp->add_option("file", ea.file, "complex file")->required();
  exp->add_option("-j", ea.j, "cochain dimension")->required();
  exp->add_option("--budget", ea.budget, "transversal budget");
  exp->add_option("--samples", ea.samples, "samples in sampled mode");
  exp->add_option("--seed", ea.seed, "seed for sampled mode");
  exp->callback([&] { rc = cmd_expand(ea, format); });

  std::string link_file, link_rho, link_out;
  auto* lnk = app.add_subcommand("link", "link of a cell, as a complex file");
  lnk->add_option("file", link_file, "complex file")->required();
  lnk->add_option("--rho", link_rho, "cell, e.g. \"0,1\"")->required();
  lnk->add_option("-o,--out", link_out, "output prefix (stdout if omitted)");
  lnk->callback([&] { rc = cmd_link(link_file, link_rho, link_out); });

  std::string spec_file, spec_rho;
  auto* spc = app.add_subcommand("spectrum", "normalized adjacency spectrum");
  spc->add_option("file", spec_file, "complex or edge-list file")->required();
  spc->add_option("--rho", spec_rho, "take the link at this cell first");
  spc->callback([&] { rc = cmd_spectrum(spec_file, spec_rho, format); });

  std::string cfg_file, out_dir = ".";
  std::uint64_t cfg_seed = 0;
  bool cfg_seed_given = false;
  auto* xp = app.add_subcommand("experiment", "run a configured experiment grid");
  xp->add_option("--config", cfg_file, "experiment config file")->required();
  xp->add_option("--out", out_dir, "output directory");
  auto* xps = xp->add_option("--seed", cfg_seed, "override the config seed");
  xp->callback([&] {
    auto in = open_input(cfg_file);
    hdx::ExperimentConfig cfg = hdx::parse_experiment_config(in);
    cfg_seed_given = xps->count() > 0;
    if (cfg_seed_given) cfg.seed = cfg_seed;
    rc = hdx::run_config(cfg, out_dir, threads, std::cout);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const hdx::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const hdx::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
