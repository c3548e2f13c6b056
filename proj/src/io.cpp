#include "hdx/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace hdx {

namespace {

std::vector<Vertex> parse_vertex_line(const std::string& line, int n) {
  std::istringstream ss(line);
  std::vector<Vertex> vs;
  long long x;
  while (ss >> x) {
    if (x < 0 || x >= n) throw ParseError("vertex id out of range: " + std::to_string(x));
    vs.push_back(static_cast<Vertex>(x));
  }
  std::string rest;
  if (ss.bad() || (ss.fail() && !ss.eof())) throw ParseError("bad vertex line: " + line);
  return vs;
}

long long parse_field(const std::string& tok, const std::string& key) {
  if (tok.size() <= key.size() + 1 || tok.compare(0, key.size(), key) != 0 ||
      tok[key.size()] != '=')
    throw ParseError("expected " + key + "=<int>, got: " + tok);
  try {
    return std::stoll(tok.substr(key.size() + 1));
  } catch (const std::exception&) {
    throw ParseError("bad integer in header field: " + tok);
  }
}

}  // namespace

void write_complex(std::ostream& os, const Complex& X) {
  os << "hdx v1 n=" << X.vertex_count() << " d=" << X.dimension()
     << " skeleton=" << X.complete_skeleton_dim() << "\n";
  for (int j = X.complete_skeleton_dim() + 1; j <= X.dimension(); ++j) {
    for (std::size_t i = 0; i < X.size(j); ++i) {
      if (X.degree_at(j, i) > 0) continue;  // not maximal
      Cell c = X.cell_at(j, i);
      for (int t = 0; t < c.card(); ++t) {
        if (t) os << ' ';
        os << c.vertices()[static_cast<std::size_t>(t)];
      }
      os << "\n";
    }
  }
}

Complex read_complex(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw ParseError("empty complex file");
  std::istringstream hs(header);
  std::string magic, version, ntok, dtok, stok;
  hs >> magic >> version >> ntok >> dtok >> stok;
  if (magic != "hdx" || version != "v1") throw ParseError("bad complex header");
  int n = static_cast<int>(parse_field(ntok, "n"));
  int d = static_cast<int>(parse_field(dtok, "d"));
  int skel = static_cast<int>(parse_field(stok, "skeleton"));
  if (n < 0 || d < -1 || skel < -1 || skel > d) throw ParseError("inconsistent complex header");

  ComplexBuilder b(n, d);
  if (skel >= 0) {
    if (skel >= n) throw ParseError("skeleton dimension needs more vertices");
    b.add_complete_skeleton(skel);
  }
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<Vertex> vs = parse_vertex_line(line, n);
    if (vs.empty()) continue;
    Cell c(vs);
    if (c.card() != static_cast<int>(vs.size()))
      throw ParseError("repeated vertex in cell: " + line);
    if (c.dim() > d) throw ParseError("cell dimension exceeds header d: " + line);
    b.add_cell(c);
  }
  return std::move(b).finalize();
}

std::string complex_to_string(const Complex& X) {
  std::ostringstream os;
  write_complex(os, X);
  return os.str();
}

Complex complex_from_string(const std::string& s) {
  std::istringstream is(s);
  return read_complex(is);
}

void write_design(std::ostream& os, const Design& D) {
  os << "design " << D.n << ' ' << D.q << ' ' << D.r << ' ' << D.lambda << "\n";
  std::vector<CellRank> ranks;
  ranks.reserve(D.blocks.size());
  for (const Cell& b : D.blocks) ranks.push_back(b.rank());
  std::sort(ranks.begin(), ranks.end());
  for (CellRank r : ranks) {
    Cell c = Cell::unrank(r, D.q);
    for (int t = 0; t < c.card(); ++t) {
      if (t) os << ' ';
      os << c.vertices()[static_cast<std::size_t>(t)];
    }
    os << "\n";
  }
}

Design read_design(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw ParseError("empty design file");
  std::istringstream hs(header);
  std::string magic;
  Design D;
  hs >> magic >> D.n >> D.q >> D.r >> D.lambda;
  if (magic != "design" || hs.fail()) throw ParseError("bad design header");
  if (D.n < 0 || D.q < 0 || D.r < 0 || D.r > D.q || D.q > D.n || D.lambda < 1)
    throw ParseError("inconsistent design header");
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<Vertex> vs = parse_vertex_line(line, D.n);
    if (vs.empty()) continue;
    Cell c(vs);
    if (c.card() != D.q) throw ParseError("block of wrong size: " + line);
    D.blocks.push_back(std::move(c));
  }
  return D;
}

void write_cochain(std::ostream& os, const Cochain& A) {
  os << "cochain j=" << A.dim << " len=" << A.bits.size() << "\n"
     << A.bits.to_hex() << "\n";
}

CochainData read_cochain(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw ParseError("empty cochain file");
  std::istringstream hs(header);
  std::string magic, jtok, ltok;
  hs >> magic >> jtok >> ltok;
  if (magic != "cochain") throw ParseError("bad cochain header");
  int j = static_cast<int>(parse_field(jtok, "j"));
  long long len = parse_field(ltok, "len");
  if (len < 0) throw ParseError("bad cochain length");
  std::string hex;
  if (!std::getline(is, hex)) throw ParseError("missing cochain payload");
  try {
    return CochainData{j, BitVec::from_hex(static_cast<std::size_t>(len), hex)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

void write_edge_list(std::ostream& os, const Graph& G) {
  for (auto [u, v] : G.edges()) os << u << ' ' << v << "\n";
}

Graph read_edge_list(std::istream& is) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex maxv = -1;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    long long u, v;
    if (!(ss >> u >> v)) throw ParseError("bad edge line: " + line);
    if (u < 0 || v < 0) throw ParseError("negative vertex id: " + line);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    maxv = std::max({maxv, static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  try {
    return Graph(maxv + 1, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

FileKind sniff_file(std::istream& is) {
  std::string word;
  auto pos = is.tellg();
  is >> word;
  is.clear();
  is.seekg(pos);
  if (word == "hdx") return FileKind::complex;
  if (word == "design") return FileKind::design;
  return FileKind::edge_list;
}

}  // namespace hdx
