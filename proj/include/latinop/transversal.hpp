// transversal.hpp -- transversals of hypercubes and the alternating-sum
// identity over Z/n.

#pragma once

#include "latinop/core.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace latinop {

class Transversal;

/// Transversals of L in lexicographic order of their cell sequences, at most
/// `limit` of them. `jobs` splits the search at the first level.
std::vector<Transversal> find_transversals(const CellSet& cells, std::optional<std::size_t> limit = std::nullopt,
                                           unsigned jobs = 1);

/// n cells of X^(d+1) whose values in every slot are pairwise distinct.
/// Cells are kept sorted by their first coordinate, so cell k starts with k.
class Transversal
{
public:
    /// Throws ValidationError unless there are n tuples of a common length
    /// >= 2 with entries in [0, n) and every slot takes n distinct values.
    static Transversal from_tuples(int n, const std::vector<Tuple>& cells);

    int order() const noexcept { return n_; }
    int dimension() const noexcept { return d_; }
    std::span<const Symbol> cell(std::size_t k) const
    {
        const auto w = static_cast<std::size_t>(d_ + 1);
        return std::span<const Symbol>(cells_).subspan(k * w, w);
    }
    std::vector<Tuple> tuples() const;

    friend bool operator==(const Transversal&, const Transversal&) = default;
    friend auto operator<=>(const Transversal&, const Transversal&) = default;

private:
    Transversal(int n, int d, std::vector<Symbol> cells) : n_(n), d_(d), cells_(std::move(cells)) {}
    friend std::vector<Transversal> find_transversals(const CellSet&, std::optional<std::size_t>, unsigned);

    int n_;
    int d_;
    std::vector<Symbol> cells_;
};

/// Number of transversals of L.
std::uint64_t count_transversals(const CellSet& cells, unsigned jobs = 1);

/// True iff every cell of `t` is a cell of L.
bool contained_in(const Transversal& t, const CellSet& cells);

/// x_1 - x_2 + x_3 - ... reduced mod n.
int alternating_sum(std::span<const int> tuple, int n);

struct DeltaReport
{
    int computed;
    int expected;
    bool pass;
};

/// Sum of alternating_sum over the cells of `t` against the predicted value:
/// 0 for odd d, and for even d the sum of the involutions of Z/n (0 for odd
/// n, n/2 for even n).
DeltaReport delta_check(const Transversal& t);

}  // namespace latinop
