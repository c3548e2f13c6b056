#pragma once

#include <iosfwd>
#include <string>

#include "hdx/cochain.hpp"
#include "hdx/complex.hpp"
#include "hdx/design.hpp"
#include "hdx/errors.hpp"
#include "hdx/graph.hpp"

namespace hdx {

// Complex file (text, bit-exact):
//   hdx v1 n=<n> d=<d> skeleton=<j>
//   <one line per maximal cell of dimension > j, increasing vertex ids>
// Cells of dimension <= j are implied by the complete-skeleton flag; the rest
// of the complex is the closure of the listed cells. Lines are sorted by
// (dimension, colexicographic rank), so serialization is canonical.
void write_complex(std::ostream& os, const Complex& X);
Complex read_complex(std::istream& is);

std::string complex_to_string(const Complex& X);
Complex complex_from_string(const std::string& s);

// Design file:
//   design <n> <q> <r> <lambda>
//   <one block per line>
void write_design(std::ostream& os, const Design& D);
Design read_design(std::istream& is);

// Cochain file:
//   cochain j=<j> len=<len>
//   <hex-encoded bit-vector, bit i in byte i/8 at position i%8>
struct CochainData {
  int dim = 0;
  BitVec bits;
};
void write_cochain(std::ostream& os, const Cochain& A);
CochainData read_cochain(std::istream& is);

// Edge list: one `u v` pair per line; vertex count is max id + 1.
void write_edge_list(std::ostream& os, const Graph& G);
Graph read_edge_list(std::istream& is);

// Reads a complex or design file and returns which it was.
enum class FileKind { complex, design, edge_list };
FileKind sniff_file(std::istream& is);

}  // namespace hdx
