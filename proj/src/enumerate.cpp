#include "latinop/enumerate.hpp"

#include "shape.hpp"

#include <atomic>
#include <bit>
#include <condition_variable>
#include <mutex>
#include <random>
#include <thread>

namespace latinop {

namespace {

using detail::Shape;

constexpr Symbol kFree = 0xFF;

// Backtracking state over a table of n^d cells filled in row-major order.
// Every cell lies on d lines (one per slot); a line is identified by the
// slot and the projection of the cell that discards that slot. Each line
// keeps the mask of symbols already placed and its number of free cells.
class Filler
{
public:
    Filler(int n, int d)
      : shape_(n, d),
        lines_per_slot_(shape_.size / static_cast<std::size_t>(n)),
        used_(lines_per_slot_ * static_cast<std::size_t>(d), 0),
        free_(lines_per_slot_ * static_cast<std::size_t>(d), static_cast<std::uint32_t>(n)),
        table_(shape_.size, kFree),
        full_(detail::full_mask(n))
    {
        trail_.reserve(shape_.size);
    }

    const Shape& shape() const noexcept { return shape_; }
    std::span<const Symbol> table() const noexcept { return table_; }
    std::size_t mark() const noexcept { return trail_.size(); }

    bool assigned(std::size_t cell) const noexcept { return table_[cell] != kFree; }

    std::uint64_t candidates(std::size_t cell) const noexcept
    {
        std::uint64_t taken = 0;
        for (int s = 0; s < shape_.d; ++s)
            taken |= used_[line(cell, s)];
        return full_ & ~taken;
    }

    /// Places `v` at `cell`, then fills every cell that became the last free
    /// cell of one of its lines. Returns false on a contradiction; the caller
    /// undoes to its mark either way.
    bool place(std::size_t cell, Symbol v)
    {
        assign(cell, v);
        std::size_t head = trail_.size() - 1;
        while (head < trail_.size()) {
            const std::size_t c = trail_[head++];
            for (int s = 0; s < shape_.d; ++s) {
                const std::size_t l = line(c, s);
                if (free_[l] != 1)
                    continue;
                const std::size_t st = shape_.stride[static_cast<std::size_t>(s)];
                const std::size_t base = shape_.line_base(c, s);
                std::size_t target = base;
                for (int k = 0; k < shape_.n; ++k, target += st)
                    if (!assigned(target))
                        break;
                const std::uint64_t missing = full_ & ~used_[l];
                if ((candidates(target) & missing) == 0)
                    return false;
                assign(target, static_cast<Symbol>(std::countr_zero(missing)));
            }
        }
        return true;
    }

    void undo(std::size_t to)
    {
        while (trail_.size() > to) {
            const std::size_t c = trail_.back();
            trail_.pop_back();
            const std::uint64_t bit = std::uint64_t{1} << table_[c];
            for (int s = 0; s < shape_.d; ++s) {
                const std::size_t l = line(c, s);
                used_[l] &= ~bit;
                ++free_[l];
            }
            table_[c] = kFree;
        }
    }

    std::size_t next_free(std::size_t from) const noexcept
    {
        while (from < shape_.size && assigned(from))
            ++from;
        return from;
    }

private:
    std::size_t line(std::size_t cell, int s) const noexcept
    {
        return static_cast<std::size_t>(s) * lines_per_slot_ + shape_.project(cell, s);
    }

    void assign(std::size_t cell, Symbol v)
    {
        table_[cell] = v;
        const std::uint64_t bit = std::uint64_t{1} << v;
        for (int s = 0; s < shape_.d; ++s) {
            const std::size_t l = line(cell, s);
            used_[l] |= bit;
            --free_[l];
        }
        trail_.push_back(cell);
    }

    Shape shape_;
    std::size_t lines_per_slot_;
    std::vector<std::uint64_t> used_;
    std::vector<std::uint32_t> free_;
    std::vector<Symbol> table_;
    std::vector<std::size_t> trail_;
    std::uint64_t full_;
};

void check_ceiling(int n, int d, std::uint64_t ceiling)
{
    if (d < 1)
        throw ValidationError("arity must be at least 1, got " + std::to_string(d));
    auto cells = checked_power(static_cast<std::uint64_t>(n), d);
    if (!cells || *cells > ceiling)
        throw CeilingError("refusing " + std::to_string(n) + "^" + std::to_string(d) +
                           " table cells: exceeds the cell ceiling of " + std::to_string(ceiling));
}

// Depth-first search in lexicographic order. `leaf` returns false to stop;
// the search then returns false as well.
template <typename Leaf>
bool search(Filler& filler, std::size_t from, Leaf& leaf)
{
    const std::size_t cell = filler.next_free(from);
    if (cell == filler.shape().size)
        return leaf(filler);
    std::uint64_t cand = filler.candidates(cell);
    while (cand) {
        const auto v = static_cast<Symbol>(std::countr_zero(cand));
        cand &= cand - 1;
        const std::size_t m = filler.mark();
        const bool ok = filler.place(cell, v);
        const bool go_on = !ok || search(filler, cell + 1, leaf);
        filler.undo(m);
        if (!go_on)
            return false;
    }
    return true;
}

// Branching choices that fix the first row (the first n cells); each prefix
// is an independent subtree, and prefixes come out in lexicographic order.
std::vector<std::vector<Symbol>> first_row_prefixes(int n, int d)
{
    Filler filler(n, d);
    const std::size_t depth = std::min<std::size_t>(static_cast<std::size_t>(n), filler.shape().size);
    std::vector<std::vector<Symbol>> out;
    std::vector<Symbol> choices;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        const std::size_t cell = filler.next_free(from);
        if (cell >= depth) {
            out.push_back(choices);
            return;
        }
        std::uint64_t cand = filler.candidates(cell);
        while (cand) {
            const auto v = static_cast<Symbol>(std::countr_zero(cand));
            cand &= cand - 1;
            const std::size_t m = filler.mark();
            if (filler.place(cell, v)) {
                choices.push_back(v);
                self(self, cell + 1);
                choices.pop_back();
            }
            filler.undo(m);
        }
    };
    rec(rec, 0);
    return out;
}

// Replays a prefix of branching choices; false if it dead-ends.
bool replay(Filler& filler, const std::vector<Symbol>& choices, std::size_t& next)
{
    next = 0;
    for (Symbol v : choices) {
        const std::size_t cell = filler.next_free(next);
        if (!filler.place(cell, v))
            return false;
        next = cell + 1;
    }
    return true;
}

LatinOp leaf_op(const Filler& f)
{
    const auto t = f.table();
    return LatinOp::assume_latin(RawOp(f.shape().n, f.shape().d, std::vector<Symbol>(t.begin(), t.end())));
}

unsigned effective_jobs(unsigned jobs)
{
    return jobs == 0 ? 1 : jobs;
}

}  // namespace

void enumerate_latin(Carrier carrier, int d, const OpVisitor& visit, const EnumerateOptions& options)
{
    const int n = carrier.order();
    check_ceiling(n, d, options.cell_ceiling);
    const unsigned jobs = effective_jobs(options.jobs);

    if (jobs == 1) {
        Filler filler(n, d);
        auto leaf = [&](const Filler& f) { return visit(leaf_op(f)); };
        search(filler, 0, leaf);
        return;
    }

    // Workers fill per-prefix buffers; this thread emits them in prefix order.
    const auto prefixes = first_row_prefixes(n, d);
    std::vector<std::vector<std::vector<Symbol>>> buffers(prefixes.size());
    std::vector<char> done(prefixes.size(), 0);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next_prefix{0};
    std::atomic<bool> cancel{false};
    std::exception_ptr failure;

    auto worker = [&] {
        try {
            for (;;) {
                const std::size_t p = next_prefix.fetch_add(1);
                if (p >= prefixes.size() || cancel.load())
                    break;
                std::vector<std::vector<Symbol>> found;
                Filler filler(n, d);
                std::size_t from = 0;
                if (replay(filler, prefixes[p], from)) {
                    auto leaf = [&](const Filler& f) {
                        const auto t = f.table();
                        found.emplace_back(t.begin(), t.end());
                        return !cancel.load(std::memory_order_relaxed);
                    };
                    search(filler, from, leaf);
                }
                std::lock_guard lock(mu);
                buffers[p] = std::move(found);
                done[p] = 1;
                cv.notify_all();
            }
        } catch (...) {
            std::lock_guard lock(mu);
            if (!failure)
                failure = std::current_exception();
            cancel = true;
            cv.notify_all();
        }
    };

    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j)
        pool.emplace_back(worker);

    for (std::size_t p = 0; p < prefixes.size(); ++p) {
        std::vector<std::vector<Symbol>> batch;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return done[p] || failure; });
            if (failure)
                break;
            batch = std::move(buffers[p]);
        }
        bool stop = false;
        for (auto& t : batch)
            if (!visit(LatinOp::assume_latin(RawOp(n, d, std::move(t))))) {
                stop = true;
                break;
            }
        if (stop) {
            cancel = true;
            break;
        }
    }
    cancel = true;
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
}

std::uint64_t count_latin(Carrier carrier, int d, const EnumerateOptions& options)
{
    const int n = carrier.order();
    check_ceiling(n, d, options.cell_ceiling);
    const unsigned jobs = effective_jobs(options.jobs);

    auto count_from = [&](Filler& filler, std::size_t from) {
        std::uint64_t count = 0;
        auto leaf = [&](const Filler&) {
            ++count;
            return true;
        };
        search(filler, from, leaf);
        return count;
    };

    if (jobs == 1) {
        Filler filler(n, d);
        return count_from(filler, 0);
    }

    const auto prefixes = first_row_prefixes(n, d);
    std::atomic<std::size_t> next_prefix{0};
    std::atomic<std::uint64_t> total{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t p = next_prefix.fetch_add(1);
                    if (p >= prefixes.size())
                        break;
                    Filler filler(n, d);
                    std::size_t from = 0;
                    if (replay(filler, prefixes[p], from))
                        total += count_from(filler, from);
                }
            });
    }
    return total.load();
}

std::vector<LatinOp> all_latin(Carrier carrier, int d, const EnumerateOptions& options)
{
    std::vector<LatinOp> out;
    enumerate_latin(
        carrier, d,
        [&](const LatinOp& f) {
            out.push_back(f);
            return true;
        },
        options);
    return out;
}

LatinOp random_latin(Carrier carrier, int d, std::uint64_t seed, std::uint64_t cell_ceiling)
{
    const int n = carrier.order();
    check_ceiling(n, d, cell_ceiling);
    std::mt19937_64 rng(seed);
    Filler filler(n, d);
    std::optional<LatinOp> result;

    // Fisher-Yates over the candidate symbols; draws are taken directly from
    // the 64-bit engine so the sequence is identical on every platform.
    auto rec = [&](auto&& self, std::size_t from) -> bool {
        const std::size_t cell = filler.next_free(from);
        if (cell == filler.shape().size) {
            result = leaf_op(filler);
            return true;
        }
        std::uint64_t cand = filler.candidates(cell);
        Symbol order[kMaxOrder];
        int k = 0;
        while (cand) {
            order[k++] = static_cast<Symbol>(std::countr_zero(cand));
            cand &= cand - 1;
        }
        for (int i = k - 1; i > 0; --i) {
            const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
            std::swap(order[i], order[j]);
        }
        for (int i = 0; i < k; ++i) {
            const std::size_t m = filler.mark();
            const bool found = filler.place(cell, order[i]) && self(self, cell + 1);
            filler.undo(m);
            if (found)
                return true;
        }
        return false;
    };
    rec(rec, 0);
    return std::move(*result);
}

}  // namespace latinop
