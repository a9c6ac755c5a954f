#include "latinop/enumerate.hpp"

#include "shape.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

namespace latinop {

using detail::Shape;

Paratopism::Paratopism(int n, Permutation slots, std::vector<Permutation> symbols)
  : n_(Carrier(n).order()), slots_(std::move(slots)), symbols_(std::move(symbols))
{
    if (slots_.size() < 2)
        throw ValidationError("a paratopism permutes at least 2 slots");
    if (symbols_.size() != static_cast<std::size_t>(slots_.size()))
        throw ValidationError("expected " + std::to_string(slots_.size()) + " symbol permutations, got " +
                              std::to_string(symbols_.size()));
    for (std::size_t s = 0; s < symbols_.size(); ++s)
        if (symbols_[s].size() != n)
            throw ValidationError("symbol permutation " + std::to_string(s + 1) + " has degree " +
                                  std::to_string(symbols_[s].size()) + ", expected " + std::to_string(n));
}

Paratopism Paratopism::identity(int n, int d)
{
    return Paratopism(n, Permutation::identity(d + 1),
                      std::vector<Permutation>(static_cast<std::size_t>(d + 1), Permutation::identity(n)));
}

Paratopism Paratopism::inverse() const
{
    // q = p^-1 sends y back: x[s] = alpha_s^-1(y[slots(s)]), so q moves slot
    // t = slots(s) to s with symbol map alpha_s^-1.
    const Permutation inv = slots_.inverse();
    std::vector<Permutation> syms(symbols_.size());
    for (int t = 0; t < inv.size(); ++t)
        syms[static_cast<std::size_t>(t)] = symbols_[static_cast<std::size_t>(inv[t])].inverse();
    return Paratopism(n_, inv, std::move(syms));
}

Paratopism operator*(const Paratopism& p, const Paratopism& q)
{
    if (p.n_ != q.n_ || p.slots_.size() != q.slots_.size())
        throw ValidationError("cannot compose paratopisms of different shapes");
    std::vector<Permutation> syms(q.symbols_.size());
    for (int s = 0; s < q.slots_.size(); ++s)
        syms[static_cast<std::size_t>(s)] =
            p.symbols_[static_cast<std::size_t>(q.slots_[s])] * q.symbols_[static_cast<std::size_t>(s)];
    return Paratopism(p.n_, p.slots_ * q.slots_, std::move(syms));
}

namespace {

void check_shape(const Paratopism& p, int n, int d)
{
    if (p.order() != n || p.dimension() != d)
        throw ValidationError("paratopism for n=" + std::to_string(p.order()) + " d=" + std::to_string(p.dimension()) +
                              " applied to a hypercube with n=" + std::to_string(n) + " d=" + std::to_string(d));
}

}  // namespace

CellSet apply_paratopism(const Paratopism& p, const CellSet& cells)
{
    check_shape(p, cells.order(), cells.dimension());
    const auto w = static_cast<std::size_t>(cells.width());
    std::vector<Symbol> out(cells.flat().size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto x = cells.cell(c);
        for (std::size_t s = 0; s < w; ++s)
            out[c * w + static_cast<std::size_t>(p.slots()[static_cast<int>(s)])] =
                static_cast<Symbol>(p.symbols()[s][x[s]]);
    }
    return CellSet::from_flat(cells.order(), cells.dimension(), std::move(out));
}

LatinOp apply_paratopism(const Paratopism& p, const LatinOp& f)
{
    const int d = f.arity();
    check_shape(p, f.order(), d);
    const Shape sh(f.order(), d);
    const auto w = static_cast<std::size_t>(d + 1);
    std::vector<Symbol> x(w);
    std::vector<Symbol> y(w);
    std::vector<Symbol> out(sh.size);
    for (std::size_t i = 0; i < sh.size; ++i) {
        sh.decode(i, std::span<Symbol>(x).first(w - 1));
        x[w - 1] = f.at(i);
        for (std::size_t s = 0; s < w; ++s)
            y[static_cast<std::size_t>(p.slots()[static_cast<int>(s)])] = static_cast<Symbol>(p.symbols()[s][x[s]]);
        out[sh.encode(std::span<const Symbol>(y).first(w - 1))] = y[w - 1];
    }
    return LatinOp::assume_latin(RawOp(f.order(), d, std::move(out)));
}

std::optional<std::uint64_t> paratopism_group_order(int n, int d)
{
    std::uint64_t fact_n = 1;
    for (int k = 2; k <= n; ++k) {
        if (fact_n > UINT64_MAX / static_cast<std::uint64_t>(k))
            return std::nullopt;
        fact_n *= static_cast<std::uint64_t>(k);
    }
    auto order = checked_power(fact_n, d + 1);
    if (!order)
        return std::nullopt;
    for (int k = 2; k <= d + 1; ++k) {
        if (*order > UINT64_MAX / static_cast<std::uint64_t>(k))
            return std::nullopt;
        *order *= static_cast<std::uint64_t>(k);
    }
    return order;
}

namespace {

void check_group_ceiling(int n, int d, std::uint64_t ceiling)
{
    auto order = paratopism_group_order(n, d);
    if (!order || *order > ceiling)
        throw CeilingError("refusing paratopism group of order " + (order ? std::to_string(*order) : "> 2^64") +
                           " for n=" + std::to_string(n) + " d=" + std::to_string(d) +
                           ": exceeds the group ceiling of " + std::to_string(ceiling));
}

}  // namespace

LatinOp canonical_form(const LatinOp& f, std::uint64_t group_ceiling)
{
    const int n = f.order();
    const int d = f.arity();
    check_group_ceiling(n, d, group_ceiling);
    const Shape sh(n, d);
    const auto w = static_cast<std::size_t>(d + 1);

    std::vector<Symbol> cells(sh.size * w);
    for (std::size_t i = 0; i < sh.size; ++i) {
        sh.decode(i, std::span<Symbol>(cells).subspan(i * w, w - 1));
        cells[i * w + w - 1] = f.at(i);
    }

    const auto symbol_perms = all_permutations(n);
    const std::size_t nperm = symbol_perms.size();
    std::vector<Symbol> best(f.table().begin(), f.table().end());
    std::vector<Symbol> candidate(sh.size);
    std::vector<int> relabel(static_cast<std::size_t>(n));
    std::vector<std::size_t> digit(static_cast<std::size_t>(d));
    std::vector<int> source(static_cast<std::size_t>(d));

    // Enumerate slot permutations and symbol permutations of the d slots that
    // land on argument positions. The output slot's symbol permutation is then
    // forced: relabelling by first appearance is the lexicographic minimum.
    for (const auto& slots : all_permutations(d + 1)) {
        const Permutation inv = slots.inverse();
        for (int t = 0; t < d; ++t)
            source[static_cast<std::size_t>(t)] = inv[t];
        const auto out_slot = static_cast<std::size_t>(inv[d]);
        std::fill(digit.begin(), digit.end(), 0);
        for (;;) {
            for (std::size_t c = 0; c < sh.size; ++c) {
                const Symbol* x = &cells[c * w];
                std::size_t idx = 0;
                for (std::size_t t = 0; t < static_cast<std::size_t>(d); ++t)
                    idx = idx * static_cast<std::size_t>(n) +
                          static_cast<std::size_t>(
                              symbol_perms[digit[t]][x[static_cast<std::size_t>(source[t])]]);
                candidate[idx] = x[out_slot];
            }
            std::fill(relabel.begin(), relabel.end(), -1);
            int next = 0;
            for (auto& v : candidate) {
                int& r = relabel[v];
                if (r < 0)
                    r = next++;
                v = static_cast<Symbol>(r);
            }
            if (candidate < best)
                best = candidate;

            std::size_t k = 0;
            while (k < digit.size() && ++digit[k] == nperm)
                digit[k++] = 0;
            if (k == digit.size())
                break;
        }
    }
    return LatinOp::assume_latin(RawOp(n, d, std::move(best)));
}

CellSet canonical_form(const CellSet& cells, std::uint64_t group_ceiling)
{
    // Sorted cell sets share their first d coordinates, so comparing them is
    // comparing the tables of their operations.
    return graph_of(canonical_form(function_of(cells), group_ceiling));
}

namespace {

std::vector<Paratopism> generators(int n, int d)
{
    std::vector<Paratopism> gens;
    const int slots = d + 1;
    auto id_syms = std::vector<Permutation>(static_cast<std::size_t>(slots), Permutation::identity(n));

    std::vector<Permutation> symbol_gens;
    if (n >= 2) {
        std::vector<int> swap(static_cast<std::size_t>(n));
        std::vector<int> cycle(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            swap[static_cast<std::size_t>(k)] = k;
            cycle[static_cast<std::size_t>(k)] = (k + 1) % n;
        }
        std::swap(swap[0], swap[1]);
        symbol_gens.emplace_back(swap);
        if (n >= 3)
            symbol_gens.emplace_back(cycle);
    }
    for (int s = 0; s < slots; ++s)
        for (const auto& g : symbol_gens) {
            auto syms = id_syms;
            syms[static_cast<std::size_t>(s)] = g;
            gens.emplace_back(n, Permutation::identity(slots), std::move(syms));
        }

    std::vector<int> swap(static_cast<std::size_t>(slots));
    std::vector<int> cycle(static_cast<std::size_t>(slots));
    for (int k = 0; k < slots; ++k) {
        swap[static_cast<std::size_t>(k)] = k;
        cycle[static_cast<std::size_t>(k)] = (k + 1) % slots;
    }
    std::swap(swap[0], swap[1]);
    gens.emplace_back(n, Permutation(swap), id_syms);
    if (slots >= 3)
        gens.emplace_back(n, Permutation(cycle), id_syms);
    return gens;
}

std::string key_of(const LatinOp& f)
{
    const auto t = f.table();
    return std::string(reinterpret_cast<const char*>(t.data()), t.size());
}

}  // namespace

std::vector<OrbitClass> orbit_census(Carrier carrier, int d, const CensusOptions& options)
{
    const int n = carrier.order();
    check_group_ceiling(n, d, options.group_ceiling);
    const auto ops = all_latin(carrier, d, EnumerateOptions{options.cell_ceiling, options.jobs});

    std::unordered_map<std::string, std::size_t> index;
    index.reserve(ops.size());
    for (std::size_t i = 0; i < ops.size(); ++i)
        index.emplace(key_of(ops[i]), i);

    // Orbits are closed under the generators, so a breadth-first sweep from
    // any member visits exactly its class.
    const auto gens = generators(n, d);
    std::vector<char> seen(ops.size(), 0);
    std::vector<OrbitClass> classes;
    for (std::size_t start = 0; start < ops.size(); ++start) {
        if (seen[start])
            continue;
        std::uint64_t size = 0;
        std::deque<std::size_t> queue{start};
        seen[start] = 1;
        while (!queue.empty()) {
            const std::size_t cur = queue.front();
            queue.pop_front();
            ++size;
            for (const auto& g : gens) {
                const auto it = index.find(key_of(apply_paratopism(g, ops[cur])));
                if (it == index.end())
                    throw std::logic_error("paratopism image missing from the enumeration");
                if (!seen[it->second]) {
                    seen[it->second] = 1;
                    queue.push_back(it->second);
                }
            }
        }
        classes.push_back(OrbitClass{canonical_form(ops[start], options.group_ceiling), size});
    }
    std::sort(classes.begin(), classes.end(),
              [](const OrbitClass& a, const OrbitClass& b) { return a.canonical < b.canonical; });
    return classes;
}

}  // namespace latinop
