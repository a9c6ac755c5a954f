#include "latinop/core.hpp"

#include "shape.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace latinop {

using detail::Shape;

Carrier::Carrier(int n) : n_(n)
{
    if (n < 1 || n > kMaxOrder)
        throw ValidationError("carrier order " + std::to_string(n) + " outside [1, " +
                              std::to_string(kMaxOrder) + "]");
}

std::optional<std::uint64_t> checked_power(std::uint64_t n, int d)
{
    std::uint64_t r = 1;
    for (int k = 0; k < d; ++k) {
        if (n != 0 && r > std::numeric_limits<std::uint64_t>::max() / n)
            return std::nullopt;
        r *= n;
    }
    return r;
}

std::size_t table_size(int n, int d)
{
    auto p = checked_power(static_cast<std::uint64_t>(n), d);
    if (!p || *p > std::numeric_limits<std::size_t>::max() / 2)
        throw CeilingError(std::to_string(n) + "^" + std::to_string(d) + " cells does not fit in memory");
    return static_cast<std::size_t>(*p);
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const int v = images_[i];
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
            throw ValidationError("not a permutation: position " + std::to_string(i + 1) +
                                  " has image " + std::to_string(v + 1));
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int size)
{
    std::vector<int> v(static_cast<std::size_t>(size));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::from_one_based(std::span<const int> images)
{
    std::vector<int> v;
    v.reserve(images.size());
    for (int x : images)
        v.push_back(x - 1);
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const noexcept
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i))
            return false;
    return true;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size())
        throw ValidationError("cannot compose permutations of degree " + std::to_string(a.size()) +
                              " and " + std::to_string(b.size()));
    Permutation p;
    p.images_.resize(b.images_.size());
    for (std::size_t i = 0; i < b.images_.size(); ++i)
        p.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
    return p;
}

std::string Permutation::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i)
            s += ' ';
        s += std::to_string(images_[i] + 1);
    }
    return s;
}

std::vector<Permutation> all_permutations(int size)
{
    std::vector<int> v(static_cast<std::size_t>(size));
    std::iota(v.begin(), v.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// ---------------------------------------------------------------------------
// RawOp / LatinOp

namespace {

void check_arity(int d)
{
    if (d < 1)
        throw ValidationError("arity must be at least 1, got " + std::to_string(d));
}

struct LineViolation
{
    int slot;
    std::size_t base;
    Symbol symbol;
};

// Per slot, per line, a seen-mask of n bits. O(d n^d).
std::optional<LineViolation> find_violation(const RawOp& f)
{
    const Shape sh(f.order(), f.arity());
    const auto t = f.table();
    const auto n = static_cast<std::size_t>(sh.n);
    for (int s = sh.d - 1; s >= 0; --s) {
        const std::size_t st = sh.stride[static_cast<std::size_t>(s)];
        const std::size_t block = st * n;
        for (std::size_t outer = 0; outer < sh.size; outer += block) {
            for (std::size_t inner = 0; inner < st; ++inner) {
                const std::size_t base = outer + inner;
                std::uint64_t seen = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    const Symbol v = t[base + k * st];
                    const std::uint64_t bit = std::uint64_t{1} << v;
                    if (seen & bit)
                        return LineViolation{s, base, v};
                    seen |= bit;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

RawOp::RawOp(int n, int d, std::vector<Symbol> table) : n_(Carrier(n).order()), d_(d), table_(std::move(table))
{
    check_arity(d);
    const std::size_t expect = table_size(n, d);
    if (table_.size() != expect)
        throw ValidationError("table has " + std::to_string(table_.size()) + " entries, expected " +
                              std::to_string(n) + "^" + std::to_string(d) + " = " + std::to_string(expect));
    for (std::size_t i = 0; i < table_.size(); ++i)
        if (table_[i] >= n)
            throw ValidationError("table entry " + std::to_string(i) + " is " + std::to_string(table_[i]) +
                                  ", outside [0, " + std::to_string(n) + ")");
}

RawOp RawOp::from_ints(int n, int d, std::span<const int> table)
{
    std::vector<Symbol> t;
    t.reserve(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] < 0 || table[i] >= n || table[i] >= kMaxOrder)
            throw ValidationError("table entry " + std::to_string(i) + " is " + std::to_string(table[i]) +
                                  ", outside [0, " + std::to_string(n) + ")");
        t.push_back(static_cast<Symbol>(table[i]));
    }
    return RawOp(n, d, std::move(t));
}

std::size_t RawOp::index_of(std::span<const Symbol> args) const
{
    if (args.size() != static_cast<std::size_t>(d_))
        throw ValidationError("expected " + std::to_string(d_) + " arguments, got " + std::to_string(args.size()));
    std::size_t idx = 0;
    for (Symbol a : args) {
        if (a >= n_)
            throw ValidationError("argument " + std::to_string(a) + " outside the carrier");
        idx = idx * static_cast<std::size_t>(n_) + a;
    }
    return idx;
}

Symbol RawOp::operator()(std::span<const Symbol> args) const
{
    return table_[index_of(args)];
}

bool is_latin(const RawOp& f)
{
    return !find_violation(f).has_value();
}

LatinOp::LatinOp(RawOp op) : op_(std::move(op))
{
    if (auto v = find_violation(op_)) {
        std::ostringstream os;
        os << "operation is not latin: symbol " << int(v->symbol) << " repeats along slot " << (v->slot + 1)
           << " in the line through index " << v->base;
        throw NotLatinError(os.str());
    }
}

LatinOp LatinOp::assume_latin(RawOp op)
{
#ifndef NDEBUG
    return LatinOp(std::move(op));
#else
    return LatinOp(std::move(op), Trusted{});
#endif
}

// ---------------------------------------------------------------------------
// CellSet

int first_non_bijective_slot(int n, int d, std::span<const Symbol> flat)
{
    const auto w = static_cast<std::size_t>(d + 1);
    const std::size_t count = flat.size() / w;
    const std::size_t space = table_size(n, d);
    std::vector<bool> seen(space);
    for (int s = 0; s <= d; ++s) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t c = 0; c < count; ++c) {
            const std::size_t p = detail::project_cell(flat.subspan(c * w, w), s, n);
            if (seen[p])
                return s + 1;
            seen[p] = true;
        }
    }
    return 0;
}

namespace {

std::vector<Symbol> flatten_tuples(int n, int d, const std::vector<Tuple>& cells)
{
    (void)Carrier{n};
    check_arity(d);
    std::vector<Symbol> flat;
    flat.reserve(cells.size() * static_cast<std::size_t>(d + 1));
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() != static_cast<std::size_t>(d + 1))
            throw ValidationError("cell " + std::to_string(c) + " has " + std::to_string(cells[c].size()) +
                                  " coordinates, expected " + std::to_string(d + 1));
        for (std::size_t k = 0; k < cells[c].size(); ++k) {
            const int v = cells[c][k];
            if (v < 0 || v >= n)
                throw ValidationError("cell " + std::to_string(c) + " coordinate " + std::to_string(k + 1) +
                                      " is " + std::to_string(v) + ", outside [0, " + std::to_string(n) + ")");
            flat.push_back(static_cast<Symbol>(v));
        }
    }
    return flat;
}

}  // namespace

CellSet CellSet::from_tuples(int n, int d, const std::vector<Tuple>& cells)
{
    return from_flat(n, d, flatten_tuples(n, d, cells));
}

CellSet CellSet::from_flat(int n, int d, std::vector<Symbol> flat)
{
    (void)Carrier{n};
    check_arity(d);
    const auto w = static_cast<std::size_t>(d + 1);
    if (flat.size() % w != 0)
        throw ValidationError("cell data length " + std::to_string(flat.size()) + " is not a multiple of " +
                              std::to_string(w));
    for (std::size_t i = 0; i < flat.size(); ++i)
        if (flat[i] >= n)
            throw ValidationError("cell " + std::to_string(i / w) + " coordinate " + std::to_string(i % w + 1) +
                                  " is " + std::to_string(flat[i]) + ", outside [0, " + std::to_string(n) + ")");

    const std::size_t count = flat.size() / w;
    const std::size_t expect = table_size(n, d);
    if (int s = first_non_bijective_slot(n, d, flat))
        throw InvalidCellSet(s, "slot " + std::to_string(s) + " projection not bijective");
    if (count != expect)
        throw InvalidCellSet(1, "slot 1 projection not bijective: " + std::to_string(count) + " cells, expected " +
                                    std::to_string(expect));

    // Discarding the last slot is a bijection onto X^d, so the row-major index
    // of the first d coordinates is each cell's sorted position.
    std::vector<Symbol> sorted(flat.size());
    for (std::size_t c = 0; c < count; ++c) {
        const auto cell = std::span<const Symbol>(flat).subspan(c * w, w);
        const std::size_t pos = detail::project_cell(cell, d, n);
        std::copy(cell.begin(), cell.end(), sorted.begin() + static_cast<std::ptrdiff_t>(pos * w));
    }
    return CellSet(n, d, std::move(sorted));
}

std::vector<Tuple> CellSet::tuples() const
{
    std::vector<Tuple> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        auto c = cell(i);
        out.emplace_back(c.begin(), c.end());
    }
    return out;
}

bool is_latin_cellset(int n, int d, const std::vector<Tuple>& cells)
{
    const auto flat = flatten_tuples(n, d, cells);
    if (cells.size() != table_size(n, d))
        return false;
    return first_non_bijective_slot(n, d, flat) == 0;
}

std::vector<Tuple> graph_tuples(const RawOp& f)
{
    const Shape sh(f.order(), f.arity());
    std::vector<Tuple> out;
    out.reserve(sh.size);
    std::vector<Symbol> x(static_cast<std::size_t>(sh.d));
    for (std::size_t i = 0; i < sh.size; ++i) {
        sh.decode(i, x);
        Tuple t(x.begin(), x.end());
        t.push_back(f.at(i));
        out.push_back(std::move(t));
    }
    return out;
}

CellSet graph_of(const LatinOp& f)
{
    const Shape sh(f.order(), f.arity());
    const auto w = static_cast<std::size_t>(sh.d + 1);
    std::vector<Symbol> flat(sh.size * w);
    for (std::size_t i = 0; i < sh.size; ++i) {
        auto cell = std::span<Symbol>(flat).subspan(i * w, w);
        sh.decode(i, cell.first(w - 1));
        cell[w - 1] = f.at(i);
    }
    return CellSet::from_flat(sh.n, sh.d, std::move(flat));
}

LatinOp function_of(const CellSet& cells)
{
    const std::size_t count = cells.size();
    std::vector<Symbol> table(count);
    const auto d = static_cast<std::size_t>(cells.dimension());
    for (std::size_t i = 0; i < count; ++i)
        table[i] = cells.cell(i)[d];
    return LatinOp::assume_latin(RawOp(cells.order(), cells.dimension(), std::move(table)));
}

LatinOp conjugate(const LatinOp& f, int slot)
{
    const int d = f.arity();
    if (slot < 0 || slot > d)
        throw ValidationError("conjugate slot " + std::to_string(slot + 1) + " outside [1, " + std::to_string(d + 1) +
                              "]");
    if (slot == d)
        return f;
    const Shape sh(f.order(), d);
    std::vector<Symbol> x(static_cast<std::size_t>(d));
    std::vector<Symbol> y(static_cast<std::size_t>(d));
    std::vector<Symbol> table(sh.size);
    for (std::size_t i = 0; i < sh.size; ++i) {
        sh.decode(i, x);
        // cell = (x_0..x_{d-1}, f(x)); drop `slot`, keep order, output x_slot.
        std::size_t k = 0;
        for (int s = 0; s < d; ++s)
            if (s != slot)
                y[k++] = x[static_cast<std::size_t>(s)];
        y[k] = f.at(i);
        table[sh.encode(y)] = x[static_cast<std::size_t>(slot)];
    }
    return LatinOp::assume_latin(RawOp(f.order(), d, std::move(table)));
}

}  // namespace latinop
