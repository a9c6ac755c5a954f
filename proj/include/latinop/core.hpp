// core.hpp -- carrier, operation tables and cell sets of Latin hypercubes.
//
// A Latin hypercube of dimension d over the carrier {0, ..., n-1} is kept in
// one of two views:
//
//   - LatinOp: the d-ary operation f : X^d -> X as a dense table, row-major
//     with the last argument varying fastest.
//   - CellSet: the subset {(x_1, ..., x_d, f(x_1, ..., x_d))} of X^(d+1),
//     cells sorted lexicographically.
//
// Slots are 0-based everywhere in this library. The CLI and the C API accept
// 1-based slots and convert at the boundary.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace latinop {

/// A carrier element. Orders are bounded by kMaxOrder, so a byte suffices.
using Symbol = std::uint8_t;

/// Largest supported carrier order; line checks use one 64-bit mask per line.
inline constexpr int kMaxOrder = 64;

/// Loosely typed tuple used for unvalidated input (files, C API arrays).
using Tuple = std::vector<int>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: wrong sizes, out-of-range symbols, bad slots.
class ValidationError : public Error
{
public:
    using Error::Error;
};

/// A well-formed table that is not Latin where a Latin one was required.
class NotLatinError : public ValidationError
{
public:
    using ValidationError::ValidationError;
};

/// A cell set whose discard-slot projection is not bijective. The slot is
/// 1-based, as reported to users.
class InvalidCellSet : public ValidationError
{
public:
    InvalidCellSet(int slot, const std::string& what)
      : ValidationError(what), slot_(slot)
    {
    }

    int slot() const noexcept { return slot_; }

private:
    int slot_;
};

/// Refusal to start a computation whose size exceeds a configured ceiling.
class CeilingError : public Error
{
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Carrier and shape arithmetic
// ---------------------------------------------------------------------------

/// The finite set {0, ..., n-1}.
class Carrier
{
public:
    explicit Carrier(int n);

    int order() const noexcept { return n_; }

    friend bool operator==(const Carrier&, const Carrier&) = default;

private:
    int n_;
};

/// n^d, or nullopt on overflow of 64 bits.
std::optional<std::uint64_t> checked_power(std::uint64_t n, int d);

/// n^d for shapes that are known to fit in memory; throws CeilingError on
/// overflow.
std::size_t table_size(int n, int d);

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

/// A bijection of {0, ..., size-1} in one-line notation. Used for both slot
/// permutations and symbol permutations.
class Permutation
{
public:
    Permutation() = default;

    /// Throws ValidationError unless `images` is a bijection of 0..size-1.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int size);

    /// Accepts the 1-based one-line notation used on the command line.
    static Permutation from_one_based(std::span<const int> images);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }
    std::span<const int> images() const noexcept { return images_; }

    bool is_identity() const noexcept;
    Permutation inverse() const;

    /// (a * b)(i) = a(b(i)): b is applied first.
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    /// 1-based one-line notation, space separated.
    std::string to_string() const;

private:
    std::vector<int> images_;
};

/// All permutations of {0..size-1} in lexicographic order.
std::vector<Permutation> all_permutations(int size);

/// The slot permutations acting on the arguments of a d-ary operation.
using SlotPermutation = Permutation;

// ---------------------------------------------------------------------------
// Operation tables
// ---------------------------------------------------------------------------

/// A map X^d -> X stored as a dense table of n^d symbols, row-major, last
/// argument fastest. No Latin property is implied.
class RawOp
{
public:
    /// Throws ValidationError naming the offending index if the table has
    /// the wrong length or an entry outside [0, n).
    RawOp(int n, int d, std::vector<Symbol> table);

    static RawOp from_ints(int n, int d, std::span<const int> table);

    int order() const noexcept { return n_; }
    int arity() const noexcept { return d_; }
    std::size_t size() const noexcept { return table_.size(); }
    std::span<const Symbol> table() const noexcept { return table_; }

    Symbol at(std::size_t index) const { return table_[index]; }
    Symbol operator()(std::span<const Symbol> args) const;

    /// Row-major index of an argument tuple.
    std::size_t index_of(std::span<const Symbol> args) const;

    friend bool operator==(const RawOp&, const RawOp&) = default;
    friend auto operator<=>(const RawOp&, const RawOp&) = default;

private:
    int n_;
    int d_;
    std::vector<Symbol> table_;
};

/// True iff every unary slice of `f` is a bijection of the carrier.
bool is_latin(const RawOp& f);

/// A d-ary quasigroup: a RawOp that passed is_latin.
class LatinOp
{
public:
    /// Throws NotLatinError naming a slot and line if `op` is not Latin.
    explicit LatinOp(RawOp op);

    /// For results that are Latin by construction (closure, conjugation).
    /// Debug builds still verify.
    static LatinOp assume_latin(RawOp op);

    const RawOp& raw() const noexcept { return op_; }
    int order() const noexcept { return op_.order(); }
    int arity() const noexcept { return op_.arity(); }
    std::size_t size() const noexcept { return op_.size(); }
    std::span<const Symbol> table() const noexcept { return op_.table(); }
    Symbol at(std::size_t index) const { return op_.at(index); }
    Symbol operator()(std::span<const Symbol> args) const { return op_(args); }

    friend bool operator==(const LatinOp&, const LatinOp&) = default;
    friend auto operator<=>(const LatinOp&, const LatinOp&) = default;

private:
    struct Trusted {};
    LatinOp(RawOp op, Trusted) : op_(std::move(op)) {}

    RawOp op_;
};

// ---------------------------------------------------------------------------
// Cell sets
// ---------------------------------------------------------------------------

/// A Latin hypercube as a subset of X^(d+1): n^d cells, each discard-one-slot
/// projection a bijection onto X^d. Cells are stored flat and sorted.
class CellSet
{
public:
    /// Validates and sorts. Throws ValidationError for ragged or out-of-range
    /// tuples and InvalidCellSet naming the first slot whose projection is
    /// not bijective.
    static CellSet from_tuples(int n, int d, const std::vector<Tuple>& cells);

    /// Same contract over flat storage of (d+1)-tuples.
    static CellSet from_flat(int n, int d, std::vector<Symbol> flat);

    int order() const noexcept { return n_; }
    int dimension() const noexcept { return d_; }
    int width() const noexcept { return d_ + 1; }
    std::size_t size() const noexcept { return cells_.size() / static_cast<std::size_t>(d_ + 1); }

    std::span<const Symbol> cell(std::size_t i) const
    {
        const auto w = static_cast<std::size_t>(d_ + 1);
        return std::span<const Symbol>(cells_).subspan(i * w, w);
    }

    std::span<const Symbol> flat() const noexcept { return cells_; }
    std::vector<Tuple> tuples() const;

    friend bool operator==(const CellSet&, const CellSet&) = default;
    friend auto operator<=>(const CellSet&, const CellSet&) = default;

private:
    CellSet(int n, int d, std::vector<Symbol> sorted)
      : n_(n), d_(d), cells_(std::move(sorted))
    {
    }

    int n_;
    int d_;
    std::vector<Symbol> cells_;
};

/// 1-based slot whose discard-slot projection fails to be injective, 0 if
/// none does. A cardinality mismatch is reported as slot d+1 only when no
/// projection fails; callers wanting the count check use is_latin_cellset.
int first_non_bijective_slot(int n, int d, std::span<const Symbol> flat);

/// True iff |cells| = n^d and every discard-one-slot projection is injective.
/// Throws ValidationError on ragged tuples or out-of-range entries.
bool is_latin_cellset(int n, int d, const std::vector<Tuple>& cells);

/// {(x, f(x))} for any map, Latin or not, as loose tuples.
std::vector<Tuple> graph_tuples(const RawOp& f);

CellSet graph_of(const LatinOp& f);

/// Inverse of graph_of.
LatinOp function_of(const CellSet& cells);

/// The operation whose graph is graph_of(f) with `slot` (0-based, 0..d) moved
/// to the output position and the remaining slots kept in order. slot == d
/// returns f.
LatinOp conjugate(const LatinOp& f, int slot);

}  // namespace latinop
