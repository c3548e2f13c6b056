#pragma once

#include <vector>

#include "hdx/complex.hpp"
#include "hdx/design.hpp"

namespace fixtures {

// Fano plane: the unique STS(7) up to relabeling.
inline std::vector<hdx::Cell> fano_blocks() {
  return {hdx::Cell{0, 1, 2}, hdx::Cell{0, 3, 4}, hdx::Cell{0, 5, 6}, hdx::Cell{1, 3, 5},
          hdx::Cell{1, 4, 6}, hdx::Cell{2, 3, 6}, hdx::Cell{2, 4, 5}};
}

// STS(9): line classes of the 3x3 grid (rows, columns, both diagonal classes).
inline std::vector<hdx::Cell> sts9_blocks() {
  return {hdx::Cell{0, 1, 2}, hdx::Cell{3, 4, 5}, hdx::Cell{6, 7, 8},
          hdx::Cell{0, 3, 6}, hdx::Cell{1, 4, 7}, hdx::Cell{2, 5, 8},
          hdx::Cell{0, 4, 8}, hdx::Cell{1, 5, 6}, hdx::Cell{2, 3, 7},
          hdx::Cell{0, 5, 7}, hdx::Cell{1, 3, 8}, hdx::Cell{2, 4, 6}};
}

inline hdx::Design fano_design() {
  return hdx::Design{7, 3, 2, 1, fano_blocks()};
}

// K_7^1 union the Fano triples: d = 2, every edge in exactly one triangle.
inline hdx::Complex fano_complex() {
  hdx::ComplexBuilder b(7, 2);
  b.add_complete_skeleton(1);
  for (const hdx::Cell& c : fano_blocks()) b.add_cell(c);
  return std::move(b).finalize();
}

}  // namespace fixtures
