// enumerate.hpp -- exhaustive and randomized generation of Latin operations,
// the paratopism action, canonical forms and the paratopism orbit census.

#pragma once

#include "latinop/core.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace latinop {

/// Default refusal bound on n^d for enumeration and random generation.
inline constexpr std::uint64_t kDefaultCellCeiling = 10'000'000;

/// Default refusal bound on the paratopism group order (n!)^(d+1) (d+1)!.
/// Admits n <= 4 at d = 2 and n <= 3 at d = 3.
inline constexpr std::uint64_t kDefaultGroupCeiling = 100'000;

struct EnumerateOptions
{
    std::uint64_t cell_ceiling = kDefaultCellCeiling;
    /// Worker threads; output order does not depend on it.
    unsigned jobs = 1;
};

/// Return false to stop the enumeration early.
using OpVisitor = std::function<bool(const LatinOp&)>;

/// Visits every Latin d-ary operation of the carrier exactly once, in
/// lexicographic table order. Throws CeilingError when n^d exceeds the ceiling.
void enumerate_latin(Carrier carrier, int d, const OpVisitor& visit, const EnumerateOptions& options = {});

/// Number of Latin d-ary operations of the carrier.
std::uint64_t count_latin(Carrier carrier, int d, const EnumerateOptions& options = {});

/// Convenience: all operations in lexicographic order.
std::vector<LatinOp> all_latin(Carrier carrier, int d, const EnumerateOptions& options = {});

/// Randomized backtracking with a shuffled value order at every branching
/// cell; the first completion is returned. Deterministic in `seed`, not
/// uniform over the Latin operations.
LatinOp random_latin(Carrier carrier, int d, std::uint64_t seed, std::uint64_t cell_ceiling = kDefaultCellCeiling);

// ---------------------------------------------------------------------------
// Paratopisms

/// An element of Sym(X)^(d+1) semidirect S_(d+1). A cell x maps to the cell y
/// with y[slots[s]] = symbols[s](x[s]).
class Paratopism
{
public:
    /// Throws ValidationError unless `slots` has degree d+1 and there are d+1
    /// symbol permutations of degree n.
    Paratopism(int n, Permutation slots, std::vector<Permutation> symbols);

    static Paratopism identity(int n, int d);

    int order() const noexcept { return n_; }
    int dimension() const noexcept { return slots_.size() - 1; }
    const Permutation& slots() const noexcept { return slots_; }
    const std::vector<Permutation>& symbols() const noexcept { return symbols_; }

    Paratopism inverse() const;

    /// (p * q) acts as q first, then p.
    friend Paratopism operator*(const Paratopism& p, const Paratopism& q);

    friend bool operator==(const Paratopism&, const Paratopism&) = default;

private:
    int n_;
    Permutation slots_;
    std::vector<Permutation> symbols_;
};

CellSet apply_paratopism(const Paratopism& p, const CellSet& cells);
LatinOp apply_paratopism(const Paratopism& p, const LatinOp& f);

/// (n!)^(d+1) (d+1)!, or nullopt on overflow.
std::optional<std::uint64_t> paratopism_group_order(int n, int d);

/// The lexicographically least cell set in the paratopism orbit. Throws
/// CeilingError when the group order exceeds `group_ceiling`.
CellSet canonical_form(const CellSet& cells, std::uint64_t group_ceiling = kDefaultGroupCeiling);
LatinOp canonical_form(const LatinOp& f, std::uint64_t group_ceiling = kDefaultGroupCeiling);

struct OrbitClass
{
    LatinOp canonical;
    std::uint64_t size;
};

struct CensusOptions
{
    std::uint64_t cell_ceiling = kDefaultCellCeiling;
    std::uint64_t group_ceiling = kDefaultGroupCeiling;
    unsigned jobs = 1;
};

/// Partition of all Latin d-ary operations into paratopism classes, sorted
/// by canonical representative.
std::vector<OrbitClass> orbit_census(Carrier carrier, int d, const CensusOptions& options = {});

}  // namespace latinop
