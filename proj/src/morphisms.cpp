#include "latinop/morphisms.hpp"

#include "shape.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace latinop {

using detail::Shape;

namespace {

// Early exit on the first input where the square fails to commute.
bool commutes(std::span<const int> map, const LatinOp& g, const LatinOp& f)
{
    const Shape src(g.order(), g.arity());
    const auto d = static_cast<std::size_t>(g.arity());
    std::vector<Symbol> y(d);
    std::vector<Symbol> image(d);
    for (std::size_t i = 0; i < src.size; ++i) {
        src.decode(i, y);
        for (std::size_t k = 0; k < d; ++k)
            image[k] = static_cast<Symbol>(map[y[k]]);
        if (map[g.at(i)] != f(image))
            return false;
    }
    return true;
}

}  // namespace

bool is_homomorphism(std::span<const int> map, const LatinOp& g, const LatinOp& f)
{
    if (g.arity() != f.arity())
        throw ValidationError("arity mismatch: " + std::to_string(g.arity()) + " vs " + std::to_string(f.arity()));
    if (map.size() != static_cast<std::size_t>(g.order()))
        throw ValidationError("map has " + std::to_string(map.size()) + " images, expected " +
                              std::to_string(g.order()));
    for (std::size_t y = 0; y < map.size(); ++y)
        if (map[y] < 0 || map[y] >= f.order())
            throw ValidationError("map sends " + std::to_string(y) + " to " + std::to_string(map[y]) +
                                  ", outside [0, " + std::to_string(f.order()) + ")");
    return commutes(map, g, f);
}

std::vector<Permutation> automorphisms(const LatinOp& f, int max_order)
{
    const int n = f.order();
    if (n > max_order)
        throw CeilingError("refusing automorphism scan over " + std::to_string(n) +
                           "! bijections: order exceeds the ceiling of " + std::to_string(max_order));
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 0);
    std::vector<Permutation> out;
    do {
        if (commutes(a, f, f))
            out.emplace_back(a);
    } while (std::next_permutation(a.begin(), a.end()));

    // Closure against every element for small groups, against an evenly
    // spaced sample of at most 64 right factors otherwise.
    std::set<Permutation> group(out.begin(), out.end());
    const std::size_t step = std::max<std::size_t>(1, out.size() / 64);
    for (const auto& p : out) {
        if (!group.count(p.inverse()))
            throw std::logic_error("automorphism set not closed under inverse");
        for (std::size_t k = 0; k < out.size(); k += step)
            if (!group.count(p * out[k]))
                throw std::logic_error("automorphism set not closed under composition");
    }
    return out;
}

}  // namespace latinop
