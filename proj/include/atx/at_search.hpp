#pragma once

#include <optional>

#include "atx/diff.hpp"
#include "atx/orientation.hpp"

namespace atx {

// First orientation (backtracking over edges in canonical order, low->high tried first)
// with outdeg(v) <= f(v)-1 everywhere and nonzero diff.
std::optional<ATCertificate> is_f_AT(const Graph& g, const CapacityMap& f);

// Least k such that g is k-AT. Throws TooLarge beyond 24 edges.
int alon_tarsi_number(const Graph& g);

// Orientation with outdeg(v) <= deg(v)-1 and nonzero diff, for connected g that is not a
// Gallai tree; absent for Gallai trees. Throws TooLarge beyond 13 vertices.
std::optional<ATCertificate> degree_AT_orientation(const Graph& g);

// Recomputes diff and checks the caps. When a graph is given, also checks coverage.
bool verify_certificate(const ATCertificate& cert);
bool verify_certificate(const Graph& g, const ATCertificate& cert);

// Union of two orientations meeting only at u (both on a common vertex range).
Orientation glue_at_cutvertex(const Orientation& d1, const Orientation& d2, VertexId u);

// Checks that removing u1,u2 from the oriented triangle pattern leaves diff unchanged.
bool triangle_reduce_check(const Orientation& d, VertexId u1, VertexId u2, VertexId u3, VertexId u4);

} // namespace atx
