// morphisms.hpp -- homomorphisms between Latin operations of equal arity and
// the automorphism group of a single operation.

#pragma once

#include "latinop/core.hpp"

#include <vector>

namespace latinop {

/// Refusal bound on the carrier order for the n!-scan in automorphisms().
inline constexpr int kDefaultAutomorphismMaxOrder = 8;

/// True iff map(g(y_1..y_d)) == f(map(y_1)..map(y_d)) for all inputs, where
/// `map` sends the carrier of g into the carrier of f.
bool is_homomorphism(std::span<const int> map, const LatinOp& g, const LatinOp& f);

/// Bijections a of the carrier with a(f(x_1..x_d)) == f(a(x_1)..a(x_d)), in
/// lexicographic one-line order. Throws CeilingError above `max_order`.
std::vector<Permutation> automorphisms(const LatinOp& f, int max_order = kDefaultAutomorphismMaxOrder);

}  // namespace latinop
