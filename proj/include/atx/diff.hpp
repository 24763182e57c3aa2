#pragma once

#include <cstdint>
#include <span>

#include "atx/orientation.hpp"

namespace atx {

// Counts every arc subset that is balanced (in-degree = out-degree at each vertex),
// connected or not, including the empty subset, split by arc-count parity.
DiffResult compute_diff(const Orientation& d);

// Same count with an explicit processing order over the non-loop arcs (a permutation of
// their indices in d.arcs()). The result does not depend on the order.
DiffResult compute_diff(const Orientation& d, std::span<const int> order);

// |coefficient| of prod_v x_v^{outdeg(v)} in prod_{uv in E, u<v} (x_u - x_v).
// The orientation must be of a simple graph. Equals |compute_diff(d).diff()|.
std::int64_t coefficient_oracle(const Orientation& d);

} // namespace atx
