#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pathgen/expr.hpp"
#include "pathgen/rng.hpp"

namespace pathgen {

enum class VarKind { Int, Real };

// One variable's inclusive range. Int kinds carry integral bounds with
// magnitude at most 2^53 so every point is an exact double.
struct VarDomain {
  std::string name;
  VarKind kind = VarKind::Int;
  double lo = 0.0;
  double hi = 0.0;
};

// Axis-aligned box of variable domains. Dimension order is fixed and
// meaningful: sampling draws, point printing, and grid cell ids all
// follow it.
struct InputBox {
  std::vector<VarDomain> dims;

  int dim_count() const { return static_cast<int>(dims.size()); }
  const VarDomain* find(std::string_view name) const;
};

// Spec string: `name:kind:lo..hi` joined by `;`, kind in {int, real};
// for example `x:int:0..15;y:int:0..15`. Throws ParseError with 1-based
// position info on any violation (bad kind, lo exceeds hi, duplicate
// name, non-integer bound on an int variable).
InputBox parse_domain(std::string_view text);

std::string format_domain(const InputBox& box);

// One point, uniform over the box: int dims uniform over the inclusive
// integer range, real dims uniform over [lo, hi). Consumes exactly one
// stream draw per dimension, in dimension order.
Valuation sample_uniform(const InputBox& box, RandomStream& rng);

bool contains(const InputBox& box, const Valuation& v);

}  // namespace pathgen
