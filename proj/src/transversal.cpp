#include "latinop/transversal.hpp"

#include "shape.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace latinop {

Transversal Transversal::from_tuples(int n, const std::vector<Tuple>& cells)
{
    (void)Carrier{n};
    if (cells.size() != static_cast<std::size_t>(n))
        throw ValidationError("a transversal over n=" + std::to_string(n) + " has " + std::to_string(n) +
                              " cells, got " + std::to_string(cells.size()));
    const std::size_t w = cells.front().size();
    if (w < 2)
        throw ValidationError("transversal cells need at least 2 coordinates");
    std::vector<std::uint64_t> seen(w, 0);
    std::vector<Symbol> flat(static_cast<std::size_t>(n) * w);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() != w)
            throw ValidationError("transversal cell " + std::to_string(c) + " has " +
                                  std::to_string(cells[c].size()) + " coordinates, expected " + std::to_string(w));
        for (std::size_t s = 0; s < w; ++s) {
            const int v = cells[c][s];
            if (v < 0 || v >= n)
                throw ValidationError("transversal cell " + std::to_string(c) + " coordinate " +
                                      std::to_string(s + 1) + " is " + std::to_string(v) + ", outside [0, " +
                                      std::to_string(n) + ")");
            const std::uint64_t bit = std::uint64_t{1} << v;
            if (seen[s] & bit)
                throw ValidationError("not a transversal: value " + std::to_string(v) + " repeats in slot " +
                                      std::to_string(s + 1));
            seen[s] |= bit;
        }
    }
    // Slot 1 is a bijection, so cell k goes to position k.
    for (const auto& t : cells)
        for (std::size_t s = 0; s < w; ++s)
            flat[static_cast<std::size_t>(t[0]) * w + s] = static_cast<Symbol>(t[s]);
    return Transversal(n, static_cast<int>(w) - 1, std::move(flat));
}

std::vector<Tuple> Transversal::tuples() const
{
    std::vector<Tuple> out;
    for (int k = 0; k < n_; ++k) {
        const auto c = cell(static_cast<std::size_t>(k));
        out.emplace_back(c.begin(), c.end());
    }
    return out;
}

namespace {

// Backtracking over the cells with first coordinate k = 0, 1, ...; in a
// sorted cell set those form the contiguous block [k*B, (k+1)*B) with
// B = n^(d-1). used[s] masks the values taken in slot s (s >= 1).
class TransversalSearch
{
public:
    explicit TransversalSearch(const CellSet& cells)
      : cells_(cells),
        n_(cells.order()),
        w_(static_cast<std::size_t>(cells.width())),
        block_(cells.size() / static_cast<std::size_t>(cells.order())),
        used_(w_, 0),
        chosen_(static_cast<std::size_t>(n_))
    {
    }

    template <typename Leaf>
    bool run(int level, Leaf& leaf)
    {
        if (level == n_)
            return leaf(chosen_);
        const std::size_t begin = static_cast<std::size_t>(level) * block_;
        for (std::size_t c = begin; c < begin + block_; ++c) {
            const auto x = cells_.cell(c);
            bool free = true;
            for (std::size_t s = 1; s < w_ && free; ++s)
                free = !(used_[s] >> x[s] & 1U);
            if (!free)
                continue;
            for (std::size_t s = 1; s < w_; ++s)
                used_[s] |= std::uint64_t{1} << x[s];
            chosen_[static_cast<std::size_t>(level)] = c;
            const bool go_on = run(level + 1, leaf);
            for (std::size_t s = 1; s < w_; ++s)
                used_[s] &= ~(std::uint64_t{1} << x[s]);
            if (!go_on)
                return false;
        }
        return true;
    }

    /// Runs only the subtree whose level-0 choice is cell `first`.
    template <typename Leaf>
    void run_from(std::size_t first, Leaf& leaf)
    {
        const auto x = cells_.cell(first);
        for (std::size_t s = 1; s < w_; ++s)
            used_[s] |= std::uint64_t{1} << x[s];
        chosen_[0] = first;
        run(1, leaf);
        for (std::size_t s = 1; s < w_; ++s)
            used_[s] &= ~(std::uint64_t{1} << x[s]);
    }

    std::size_t block() const noexcept { return block_; }

private:
    const CellSet& cells_;
    int n_;
    std::size_t w_;
    std::size_t block_;
    std::vector<std::uint64_t> used_;
    std::vector<std::size_t> chosen_;
};

template <typename PerBranch>
void for_each_first_choice(std::size_t block, unsigned jobs, PerBranch&& branch)
{
    if (jobs <= 1) {
        for (std::size_t b = 0; b < block; ++b)
            branch(b);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            for (std::size_t b; (b = next.fetch_add(1)) < block;)
                branch(b);
        });
}

}  // namespace

std::vector<Transversal> find_transversals(const CellSet& cells, std::optional<std::size_t> limit, unsigned jobs)
{
    const auto w = static_cast<std::size_t>(cells.width());
    auto materialize = [&](const std::vector<std::size_t>& chosen) {
        std::vector<Symbol> flat;
        flat.reserve(chosen.size() * w);
        for (std::size_t c : chosen) {
            const auto x = cells.cell(c);
            flat.insert(flat.end(), x.begin(), x.end());
        }
        return Transversal(cells.order(), cells.dimension(), std::move(flat));
    };

    std::vector<Transversal> out;
    if (limit || jobs <= 1) {
        TransversalSearch search(cells);
        auto leaf = [&](const std::vector<std::size_t>& chosen) {
            if (limit && out.size() >= *limit)
                return false;
            out.push_back(materialize(chosen));
            return !(limit && out.size() >= *limit);
        };
        search.run(0, leaf);
        return out;
    }

    // One result list per level-0 choice, concatenated in choice order.
    const std::size_t block = cells.size() / static_cast<std::size_t>(cells.order());
    std::vector<std::vector<Transversal>> parts(block);
    for_each_first_choice(block, jobs, [&](std::size_t b) {
        TransversalSearch search(cells);
        auto leaf = [&](const std::vector<std::size_t>& chosen) {
            parts[b].push_back(materialize(chosen));
            return true;
        };
        search.run_from(b, leaf);
    });
    for (auto& p : parts)
        for (auto& t : p)
            out.push_back(std::move(t));
    return out;
}

std::uint64_t count_transversals(const CellSet& cells, unsigned jobs)
{
    const std::size_t block = cells.size() / static_cast<std::size_t>(cells.order());
    std::atomic<std::uint64_t> total{0};
    for_each_first_choice(block, jobs, [&](std::size_t b) {
        TransversalSearch search(cells);
        std::uint64_t count = 0;
        auto leaf = [&](const std::vector<std::size_t>&) {
            ++count;
            return true;
        };
        search.run_from(b, leaf);
        total += count;
    });
    return total.load();
}

bool contained_in(const Transversal& t, const CellSet& cells)
{
    if (t.order() != cells.order() || t.dimension() != cells.dimension())
        return false;
    // In a sorted cell set, the cell with first coordinates y sits at y's
    // row-major index.
    for (int k = 0; k < t.order(); ++k) {
        const auto x = t.cell(static_cast<std::size_t>(k));
        const std::size_t pos = detail::project_cell(x, cells.dimension(), cells.order());
        const auto c = cells.cell(pos);
        if (!std::equal(x.begin(), x.end(), c.begin(), c.end()))
            return false;
    }
    return true;
}

int alternating_sum(std::span<const int> tuple, int n)
{
    (void)Carrier{n};
    long long acc = 0;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        const int v = tuple[k];
        if (v < 0 || v >= n)
            throw ValidationError("coordinate " + std::to_string(k + 1) + " is " + std::to_string(v) +
                                  ", outside [0, " + std::to_string(n) + ")");
        acc += (k % 2 == 0) ? v : -v;
    }
    const long long r = acc % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

DeltaReport delta_check(const Transversal& t)
{
    const int n = t.order();
    const int d = t.dimension();
    int computed = 0;
    std::vector<int> buf(static_cast<std::size_t>(d + 1));
    for (int k = 0; k < n; ++k) {
        const auto c = t.cell(static_cast<std::size_t>(k));
        std::copy(c.begin(), c.end(), buf.begin());
        computed = (computed + alternating_sum(buf, n)) % n;
    }
    const int expected = (d % 2 == 1 || n % 2 == 1) ? 0 : n / 2;
    return DeltaReport{computed, expected, computed == expected};
}

}  // namespace latinop
