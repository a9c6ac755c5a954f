#include "latinop/graph.hpp"

#include <algorithm>

namespace latinop {

HypercubeGraph hypercube_graph(const CellSet& cells)
{
    const int n = cells.order();
    const int d = cells.dimension();
    const auto w = static_cast<std::size_t>(d + 1);
    HypercubeGraph g;
    g.vertices = cells.size();

    // Each (slot, value) class is a clique. A pair agreeing on k slots turns
    // up once per shared slot, so run lengths after sorting give k.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::vector<std::vector<std::uint32_t>> classes(static_cast<std::size_t>(n));
    for (std::size_t s = 0; s < w; ++s) {
        for (auto& c : classes)
            c.clear();
        for (std::size_t v = 0; v < cells.size(); ++v)
            classes[cells.cell(v)[s]].push_back(static_cast<std::uint32_t>(v));
        for (const auto& c : classes)
            for (std::size_t a = 0; a < c.size(); ++a)
                for (std::size_t b = a + 1; b < c.size(); ++b)
                    pairs.emplace_back(c[a], c[b]);
    }
    std::sort(pairs.begin(), pairs.end());

    for (std::size_t i = 0; i < pairs.size();) {
        std::size_t j = i;
        while (j < pairs.size() && pairs[j] == pairs[i])
            ++j;
        const int shared = static_cast<int>(j - i);
        if (shared >= d)
            throw std::logic_error("cells " + std::to_string(pairs[i].first) + " and " +
                                   std::to_string(pairs[i].second) + " agree on " + std::to_string(shared) +
                                   " slots of a dimension-" + std::to_string(d) + " hypercube");
        g.max_shared_slots = std::max(g.max_shared_slots, shared);
        g.edges.push_back(pairs[i]);
        i = j;
    }
    return g;
}

GraphStats graph_stats(const HypercubeGraph& graph)
{
    GraphStats st;
    st.vertices = graph.vertices;
    st.edges = graph.edges.size();
    st.max_shared_slots = graph.max_shared_slots;
    std::vector<std::size_t> degree(graph.vertices, 0);
    for (const auto& [u, v] : graph.edges) {
        ++degree[u];
        ++degree[v];
    }
    for (std::size_t dgr : degree)
        ++st.degree_histogram[dgr];
    st.is_regular = st.degree_histogram.size() <= 1;
    return st;
}

GraphStats graph_stats(const CellSet& cells)
{
    return graph_stats(hypercube_graph(cells));
}

std::uint64_t predicted_degree(int n, int d)
{
    // |union of the d+1 classes through u| - 1. An intersection of k classes
    // has n^(d-k) cells for k <= d and is {u} for k = d+1.
    long long total = 0;
    long long binom = 1;
    for (int k = 1; k <= d + 1; ++k) {
        binom = binom * (d + 2 - k) / k;
        const long long size = k <= d ? static_cast<long long>(*checked_power(static_cast<std::uint64_t>(n), d - k)) : 1;
        total += (k % 2 == 1 ? 1 : -1) * binom * size;
    }
    return static_cast<std::uint64_t>(total - 1);
}

void write_edge_list(std::ostream& os, const HypercubeGraph& graph)
{
    for (const auto& [u, v] : graph.edges)
        os << u << ' ' << v << '\n';
}

}  // namespace latinop
