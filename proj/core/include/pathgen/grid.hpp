#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathgen/domain.hpp"

namespace pathgen {

// Per-dimension cell index, each component in [0, n). Index 0 is the
// lowest-value block along its dimension.
using CellId = std::vector<int>;

// Equal-width n-per-dimension partitioning of a box. Int dimensions are
// enlarged minimally (raising hi) until n divides their size; real
// dimensions split exactly and are never enlarged. The cells are disjoint
// and tile the (possibly enlarged) base box: int cell i along a dimension
// spans [lo + i*w, lo + (i+1)*w - 1]; real cells are half-open except the
// last, whose upper bound is the box bound exactly.
struct GridSpec {
  InputBox base;                   // after enlargement
  int n = 1;
  std::vector<double> cell_width;  // per dimension; int dims hold integer widths

  int dim_count() const { return static_cast<int>(base.dims.size()); }
  std::uint64_t cell_count() const;
};

// Throws DegenerateDomainError when an int dimension has fewer than n
// integers (some cell would be empty).
GridSpec partition(const InputBox& box, int n);

InputBox cell_box(const GridSpec& grid, const CellId& c);

// All cells at Chebyshev distance exactly 1 (diagonals included), clipped
// at the grid border, excluding c itself; deterministic order.
std::vector<CellId> neighbors_moore(const GridSpec& grid, const CellId& c);

// Linear index with the last dimension fastest; defines the canonical
// enumeration order used everywhere a cell list is built.
std::uint64_t cell_index(const GridSpec& grid, const CellId& c);
CellId cell_at(const GridSpec& grid, std::uint64_t index);
std::vector<CellId> all_cells(const GridSpec& grid);

// Presentation label. 2-d grids number cells column by column with the
// second index descending: label 1 is the lowest first-dimension block at
// the highest second-dimension block. Other dimensionalities fall back to
// the index tuple text.
std::string cell_label(const GridSpec& grid, const CellId& c);
std::string cell_tuple_text(const CellId& c);

// Cell whose box contains the point (real dims: half-open cells, the box
// bound falling into the last cell). The point must lie inside the base box.
CellId locate_cell(const GridSpec& grid, const Valuation& v);

// Sub-box of the neighbor cell touching its shared boundary with the
// valid cell: dimensions with equal indices keep the neighbor's full
// extent; dimensions differing by one keep the beta fraction of the
// neighbor's extent on the side facing the valid cell (int dims keep at
// least one integer, band width rounded up). beta in (0, 1]. Throws
// NotAdjacentError when the cells are not Moore neighbors.
InputBox boundary_band(const GridSpec& grid, const CellId& neighbor,
                       const CellId& valid, double beta);

}  // namespace pathgen
