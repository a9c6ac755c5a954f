// shape.hpp -- row-major index arithmetic shared by the modules (internal).

#pragma once

#include "latinop/core.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace latinop::detail {

/// Index arithmetic for tables over X^d, last coordinate fastest.
struct Shape
{
    int n;
    int d;
    std::size_t size;
    std::vector<std::size_t> stride;  // stride[s] = n^(d-1-s)

    Shape(int n_, int d_) : n(n_), d(d_), size(table_size(n_, d_)), stride(static_cast<std::size_t>(d_))
    {
        std::size_t s = 1;
        for (int k = d - 1; k >= 0; --k) {
            stride[static_cast<std::size_t>(k)] = s;
            s *= static_cast<std::size_t>(n);
        }
    }

    std::size_t encode(std::span<const Symbol> x) const
    {
        std::size_t idx = 0;
        for (int k = 0; k < d; ++k)
            idx = idx * static_cast<std::size_t>(n) + x[static_cast<std::size_t>(k)];
        return idx;
    }

    void decode(std::size_t idx, std::span<Symbol> out) const
    {
        for (int k = d - 1; k >= 0; --k) {
            out[static_cast<std::size_t>(k)] = static_cast<Symbol>(idx % static_cast<std::size_t>(n));
            idx /= static_cast<std::size_t>(n);
        }
    }

    /// Index of the tuple with coordinate `slot` removed, in the (d-1)-shape.
    std::size_t project(std::size_t idx, int slot) const
    {
        const std::size_t st = stride[static_cast<std::size_t>(slot)];
        return (idx / (st * static_cast<std::size_t>(n))) * st + idx % st;
    }

    /// Index of the first cell (coordinate `slot` = 0) of the line through
    /// `idx` along `slot`.
    std::size_t line_base(std::size_t idx, int slot) const
    {
        const std::size_t st = stride[static_cast<std::size_t>(slot)];
        const std::size_t block = st * static_cast<std::size_t>(n);
        return (idx / block) * block + idx % st;
    }
};

/// Index of a (d+1)-tuple with `slot` removed, as a row-major index over X^d.
inline std::size_t project_cell(std::span<const Symbol> cell, int slot, int n)
{
    std::size_t idx = 0;
    for (std::size_t k = 0; k < cell.size(); ++k) {
        if (static_cast<int>(k) == slot)
            continue;
        idx = idx * static_cast<std::size_t>(n) + cell[k];
    }
    return idx;
}

inline std::uint64_t full_mask(int n)
{
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace latinop::detail
