// graph.hpp -- the shared-coordinate graph of a Latin hypercube.

#pragma once

#include "latinop/core.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

namespace latinop {

/// Vertices are the cells of L in lexicographic order; distinct cells are
/// adjacent iff they agree in at least one slot.
struct HypercubeGraph
{
    std::size_t vertices = 0;
    /// Sorted (u, v) pairs with u < v.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    /// Largest number of slots on which two distinct cells agree. At most
    /// d-1 for any hypercube; at most 1 only when d <= 2.
    int max_shared_slots = 0;
};

/// Throws std::logic_error if two distinct cells agree on d slots, which the
/// hypercube invariant rules out.
HypercubeGraph hypercube_graph(const CellSet& cells);

struct GraphStats
{
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::map<std::size_t, std::size_t> degree_histogram;  // degree -> vertex count
    bool is_regular = false;
    int max_shared_slots = 0;
};

GraphStats graph_stats(const CellSet& cells);
GraphStats graph_stats(const HypercubeGraph& graph);

/// Common vertex degree by inclusion-exclusion over the slot classes of a
/// cell: any k <= d slots pin down n^(d-k) cells.
std::uint64_t predicted_degree(int n, int d);

/// One "u v" line per edge.
void write_edge_list(std::ostream& os, const HypercubeGraph& graph);

}  // namespace latinop
