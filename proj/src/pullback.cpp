#include "latinop/pullback.hpp"

#include <algorithm>

namespace latinop {

CellSet pullback_compose(const CellSet& outer, const CellSet& inner, int slot)
{
    if (outer.order() != inner.order())
        throw ValidationError("carrier mismatch: " + std::to_string(outer.order()) + " vs " +
                              std::to_string(inner.order()));
    const int n = outer.order();
    const int d = outer.dimension();
    const int e = inner.dimension();
    if (slot < 0 || slot >= d)
        throw ValidationError("composition slot " + std::to_string(slot + 1) + " outside [1, " + std::to_string(d) +
                              "]");

    const auto iw = static_cast<std::size_t>(e + 1);
    const auto rw = static_cast<std::size_t>(d + e);
    const auto s = static_cast<std::size_t>(slot);

    // Bucket the inner cells by their output coordinate z.
    std::vector<std::vector<std::size_t>> bucket(static_cast<std::size_t>(n));
    for (std::size_t c = 0; c < inner.size(); ++c)
        bucket[inner.cell(c)[iw - 1]].push_back(c);

    std::vector<Symbol> out;
    out.reserve(outer.size() * inner.size() / static_cast<std::size_t>(n) * rw);
    for (std::size_t c = 0; c < outer.size(); ++c) {
        const auto l = outer.cell(c);
        for (std::size_t m : bucket[l[s]]) {
            const auto g = inner.cell(m);
            out.insert(out.end(), l.begin(), l.begin() + static_cast<std::ptrdiff_t>(s));
            out.insert(out.end(), g.begin(), g.begin() + static_cast<std::ptrdiff_t>(e));
            out.insert(out.end(), l.begin() + static_cast<std::ptrdiff_t>(s + 1), l.end());
        }
    }

    // Two joined pairs producing the same tuple would mean two witnesses z.
    const std::size_t count = out.size() / rw;
    std::vector<std::size_t> order(count);
    for (std::size_t i = 0; i < count; ++i)
        order[i] = i;
    auto cell_at = [&](std::size_t i) { return std::span<const Symbol>(out).subspan(i * rw, rw); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto x = cell_at(a);
        auto y = cell_at(b);
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    });
    for (std::size_t i = 1; i < count; ++i) {
        auto x = cell_at(order[i - 1]);
        auto y = cell_at(order[i]);
        if (std::equal(x.begin(), x.end(), y.begin(), y.end()))
            throw std::logic_error("pullback join produced a cell with two witnesses");
    }
    return CellSet::from_flat(n, d + e - 1, std::move(out));
}

CellSet restrict(const CellSet& cells, int slot, int value)
{
    const int n = cells.order();
    const int d = cells.dimension();
    if (d < 2)
        throw ValidationError("cannot restrict a hypercube of dimension " + std::to_string(d) +
                              ": the result would have dimension 0");
    if (slot < 0 || slot > d)
        throw ValidationError("restriction slot " + std::to_string(slot + 1) + " outside [1, " +
                              std::to_string(d + 1) + "]");
    if (value < 0 || value >= n)
        throw ValidationError("restriction value " + std::to_string(value) + " outside [0, " + std::to_string(n) +
                              ")");

    std::vector<Symbol> out;
    out.reserve(cells.size() / static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto x = cells.cell(c);
        if (x[static_cast<std::size_t>(slot)] != value)
            continue;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (static_cast<int>(k) != slot)
                out.push_back(x[k]);
    }
    return CellSet::from_flat(n, d - 1, std::move(out));
}

Tuple projection_tau(const Tuple& t, int slot)
{
    if (slot < 0 || slot >= static_cast<int>(t.size()))
        throw ValidationError("projection slot " + std::to_string(slot + 1) + " outside [1, " +
                              std::to_string(t.size()) + "]");
    Tuple out;
    out.reserve(t.size() - 1);
    for (std::size_t k = 0; k < t.size(); ++k)
        if (static_cast<int>(k) != slot)
            out.push_back(t[k]);
    return out;
}

}  // namespace latinop
