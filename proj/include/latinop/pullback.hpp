// pullback.hpp -- composition computed on cell sets as a relational join,
// and restriction of a hypercube to a fixed coordinate value.

#pragma once

#include "latinop/core.hpp"

#include <vector>

namespace latinop {

/// The cell set of compose_at(function_of(L), function_of(M), slot), built
/// without evaluating either operation: a cell (x_0..x_{d+e-1}) is present
/// iff some z has (x_0..x_{slot-1}, z, x_{slot+e}..) in L and
/// (x_slot..x_{slot+e-1}, z) in M. M is bucketed by its last coordinate and L
/// streamed against the buckets. Each output cell arises from exactly one z;
/// a second witness throws std::logic_error.
CellSet pullback_compose(const CellSet& outer, const CellSet& inner, int slot);

/// Cells of L whose coordinate `slot` (0..d) equals `value`, with that
/// coordinate deleted. Requires d >= 2; the result is a hypercube of
/// dimension d-1.
CellSet restrict(const CellSet& cells, int slot, int value);

/// The tuple with coordinate `slot` removed.
Tuple projection_tau(const Tuple& t, int slot);

}  // namespace latinop
