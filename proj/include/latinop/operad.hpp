// operad.hpp -- partial composition, symmetric-group actions and the unit of
// the operad of Latin operations, plus an axiom checker.
//
// Conventions (slots 0-based):
//
//   compose_at(f, g, i)(x_0..x_{d+e-2})
//       = f(x_0..x_{i-1}, g(x_i..x_{i+e-1}), x_{i+e}..x_{d+e-2})
//
//   act(sigma, f)(x_0..x_{d-1}) = f(x_{sigma(0)}, ..., x_{sigma(d-1)})
//
// With (sigma * tau)(k) = sigma(tau(k)), act is a left action:
// act(sigma * tau, f) == act(sigma, act(tau, f)). In this convention the
// equivariance laws read
//
//   compose_at(act(sigma, f), g, sigma(j)) == act(block_permutation(sigma, j, e), compose_at(f, g, j))
//   compose_at(f, act(tau, g), i)          == act(inner_permutation(tau, i, d), compose_at(f, g, i))

#pragma once

#include "latinop/core.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace latinop {

/// Composition in the endomorphism operad; defined for any maps.
RawOp compose_raw(const RawOp& f, const RawOp& g, int slot);

/// Composition of Latin operations. The result is Latin (closure); debug
/// builds verify it.
LatinOp compose_at(const LatinOp& f, const LatinOp& g, int slot);

/// The identity map of the carrier.
LatinOp unit(Carrier carrier);

RawOp act_raw(const SlotPermutation& sigma, const RawOp& f);
LatinOp act(const SlotPermutation& sigma, const LatinOp& f);

/// sigma with domain letter `slot` expanded into `e` consecutive letters
/// that move as one block onto the expansion of sigma(slot).
SlotPermutation block_permutation(const SlotPermutation& sigma, int slot, int e);

/// The permutation of d+e-1 letters that is tau on the block starting at
/// `slot` and the identity elsewhere.
SlotPermutation inner_permutation(const SlotPermutation& tau, int slot, int d);

// ---------------------------------------------------------------------------
// Axiom checker

using ComposeFn = std::function<RawOp(const RawOp&, const RawOp&, int)>;

struct OperadCheckOptions
{
    int max_degree = 2;
    /// Largest operand pool per degree that is used exhaustively; larger
    /// degrees are sampled with this many random operations.
    std::size_t sample_budget = 32;
    std::uint64_t seed = 0;
    /// Composition under test; defaults to compose_raw.
    ComposeFn compose;
};

struct AxiomResult
{
    std::string axiom;
    std::uint64_t checks = 0;
    bool passed = true;
    std::string witness;  // first counterexample, empty when passed
};

struct OperadReport
{
    std::vector<AxiomResult> axioms;
    /// Operand pool size per degree (index 0 is degree 1) and whether each
    /// pool was the full set of Latin operations.
    std::vector<std::size_t> pool_sizes;
    std::vector<bool> pool_exhaustive;

    bool all_passed() const;
};

/// Axiom names in report order.
inline const std::vector<std::string>& operad_axiom_names()
{
    static const std::vector<std::string> names = {
        "closure",
        "sequential_associativity",
        "parallel_associativity",
        "left_unit",
        "right_unit",
        "outer_equivariance",
        "inner_equivariance",
    };
    return names;
}

OperadReport verify_operad_axioms(Carrier carrier, const OperadCheckOptions& options);

}  // namespace latinop
