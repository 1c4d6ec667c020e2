#include "pathgen/grid.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "pathgen/errors.hpp"

namespace pathgen {

namespace {

std::int64_t as_int(double v) { return static_cast<std::int64_t>(v); }

}  // namespace

std::uint64_t GridSpec::cell_count() const {
  std::uint64_t total = 1;
  for (int i = 0; i < dim_count(); ++i) total *= static_cast<std::uint64_t>(n);
  return total;
}

GridSpec partition(const InputBox& box, int n) {
  assert(n >= 1);
  assert(!box.dims.empty());
  GridSpec g;
  g.base = box;
  g.n = n;
  g.cell_width.resize(box.dims.size());
  for (std::size_t i = 0; i < box.dims.size(); ++i) {
    VarDomain& d = g.base.dims[i];
    if (d.kind == VarKind::Int) {
      std::int64_t size = as_int(d.hi) - as_int(d.lo) + 1;
      if (size < n) {
        throw DegenerateDomainError("int dimension '" + d.name + "' has only " +
                                    std::to_string(size) + " integers for " +
                                    std::to_string(n) + " cells");
      }
      std::int64_t rem = size % n;
      if (rem != 0) {
        size += n - rem;
        d.hi = static_cast<double>(as_int(d.lo) + size - 1);
      }
      g.cell_width[i] = static_cast<double>(size / n);
    } else {
      g.cell_width[i] = (d.hi - d.lo) / n;
    }
  }
  return g;
}

InputBox cell_box(const GridSpec& grid, const CellId& c) {
  assert(static_cast<int>(c.size()) == grid.dim_count());
  InputBox out;
  out.dims.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    assert(c[i] >= 0 && c[i] < grid.n);
    const VarDomain& d = grid.base.dims[i];
    VarDomain cd = d;
    if (d.kind == VarKind::Int) {
      std::int64_t w = as_int(grid.cell_width[i]);
      cd.lo = static_cast<double>(as_int(d.lo) + c[i] * w);
      cd.hi = static_cast<double>(as_int(d.lo) + (c[i] + 1) * w - 1);
    } else {
      double w = grid.cell_width[i];
      cd.lo = std::min(d.lo + c[i] * w, d.hi);
      cd.hi = c[i] + 1 == grid.n ? d.hi : std::min(d.lo + (c[i] + 1) * w, d.hi);
      if (cd.lo > cd.hi) cd.lo = cd.hi;
    }
    out.dims.push_back(std::move(cd));
  }
  return out;
}

std::vector<CellId> neighbors_moore(const GridSpec& grid, const CellId& c) {
  const int d = grid.dim_count();
  assert(static_cast<int>(c.size()) == d);
  std::vector<CellId> out;
  CellId cur(c);
  std::vector<int> off(c.size(), -1);
  for (;;) {
    bool all_zero = true;
    bool in_bounds = true;
    for (int i = 0; i < d; ++i) {
      if (off[i] != 0) all_zero = false;
      int v = c[i] + off[i];
      cur[i] = v;
      if (v < 0 || v >= grid.n) in_bounds = false;
    }
    if (!all_zero && in_bounds) out.push_back(cur);
    // odometer over {-1, 0, 1}^d, last dimension fastest
    int i = d - 1;
    while (i >= 0 && off[i] == 1) {
      off[i] = -1;
      --i;
    }
    if (i < 0) break;
    ++off[i];
  }
  return out;
}

std::uint64_t cell_index(const GridSpec& grid, const CellId& c) {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    idx = idx * static_cast<std::uint64_t>(grid.n) + static_cast<std::uint64_t>(c[i]);
  }
  return idx;
}

CellId cell_at(const GridSpec& grid, std::uint64_t index) {
  CellId c(grid.dim_count());
  for (int i = grid.dim_count() - 1; i >= 0; --i) {
    c[i] = static_cast<int>(index % static_cast<std::uint64_t>(grid.n));
    index /= static_cast<std::uint64_t>(grid.n);
  }
  return c;
}

std::vector<CellId> all_cells(const GridSpec& grid) {
  std::vector<CellId> out;
  const std::uint64_t total = grid.cell_count();
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(cell_at(grid, i));
  return out;
}

std::string cell_tuple_text(const CellId& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  out += ")";
  return out;
}

std::string cell_label(const GridSpec& grid, const CellId& c) {
  if (grid.dim_count() != 2) return cell_tuple_text(c);
  int label = c[0] * grid.n + (grid.n - 1 - c[1]) + 1;
  return "D_" + std::to_string(label);
}

CellId locate_cell(const GridSpec& grid, const Valuation& v) {
  CellId c(grid.dim_count());
  for (int i = 0; i < grid.dim_count(); ++i) {
    const VarDomain& d = grid.base.dims[i];
    auto it = v.find(d.name);
    assert(it != v.end());
    int idx;
    if (d.kind == VarKind::Int) {
      idx = static_cast<int>((as_int(it->second) - as_int(d.lo)) /
                             as_int(grid.cell_width[i]));
    } else {
      idx = static_cast<int>(std::floor((it->second - d.lo) / grid.cell_width[i]));
    }
    c[i] = std::clamp(idx, 0, grid.n - 1);
  }
  return c;
}

InputBox boundary_band(const GridSpec& grid, const CellId& neighbor,
                       const CellId& valid, double beta) {
  assert(beta > 0.0 && beta <= 1.0);
  const int d = grid.dim_count();
  assert(static_cast<int>(neighbor.size()) == d && static_cast<int>(valid.size()) == d);
  bool adjacent = false;
  for (int i = 0; i < d; ++i) {
    int diff = neighbor[i] - valid[i];
    if (diff < -1 || diff > 1) throw NotAdjacentError("cells are not Moore neighbors");
    if (diff != 0) adjacent = true;
  }
  if (!adjacent) throw NotAdjacentError("cells are not Moore neighbors");

  InputBox band = cell_box(grid, neighbor);
  for (int i = 0; i < d; ++i) {
    int diff = neighbor[i] - valid[i];
    if (diff == 0) continue;
    VarDomain& dim = band.dims[i];
    if (dim.kind == VarKind::Int) {
      std::int64_t w = as_int(grid.cell_width[i]);
      std::int64_t bw = static_cast<std::int64_t>(std::ceil(beta * static_cast<double>(w)));
      bw = std::clamp<std::int64_t>(bw, 1, w);
      if (diff > 0) {
        dim.hi = static_cast<double>(as_int(dim.lo) + bw - 1);
      } else {
        dim.lo = static_cast<double>(as_int(dim.hi) - bw + 1);
      }
    } else {
      double bw = beta * (dim.hi - dim.lo);
      if (diff > 0) {
        dim.hi = std::max(dim.lo, std::min(dim.lo + bw, dim.hi));
      } else {
        dim.lo = std::min(dim.hi, std::max(dim.hi - bw, dim.lo));
      }
    }
  }
  return band;
}

}  // namespace pathgen
