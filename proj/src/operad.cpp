#include "latinop/operad.hpp"

#include "latinop/enumerate.hpp"
#include "shape.hpp"

#include <random>
#include <sstream>

namespace latinop {

using detail::Shape;

RawOp compose_raw(const RawOp& f, const RawOp& g, int slot)
{
    if (f.order() != g.order())
        throw ValidationError("carrier mismatch: " + std::to_string(f.order()) + " vs " + std::to_string(g.order()));
    const int d = f.arity();
    const int e = g.arity();
    if (slot < 0 || slot >= d)
        throw ValidationError("composition slot " + std::to_string(slot + 1) + " outside [1, " + std::to_string(d) +
                              "]");
    const auto n = static_cast<std::size_t>(f.order());
    const std::size_t prefix = table_size(f.order(), slot);
    const std::size_t middle = g.size();
    const std::size_t suffix = table_size(f.order(), d - 1 - slot);
    const auto ft = f.table();
    const auto gt = g.table();

    std::vector<Symbol> out;
    out.reserve(prefix * middle * suffix);
    for (std::size_t p = 0; p < prefix; ++p)
        for (std::size_t m = 0; m < middle; ++m) {
            const std::size_t row = (p * n + gt[m]) * suffix;
            for (std::size_t s = 0; s < suffix; ++s)
                out.push_back(ft[row + s]);
        }
    return RawOp(f.order(), d + e - 1, std::move(out));
}

LatinOp compose_at(const LatinOp& f, const LatinOp& g, int slot)
{
    return LatinOp::assume_latin(compose_raw(f.raw(), g.raw(), slot));
}

LatinOp unit(Carrier carrier)
{
    std::vector<Symbol> t(static_cast<std::size_t>(carrier.order()));
    for (std::size_t x = 0; x < t.size(); ++x)
        t[x] = static_cast<Symbol>(x);
    return LatinOp::assume_latin(RawOp(carrier.order(), 1, std::move(t)));
}

RawOp act_raw(const SlotPermutation& sigma, const RawOp& f)
{
    const int d = f.arity();
    if (sigma.size() != d)
        throw ValidationError("permutation of degree " + std::to_string(sigma.size()) + " cannot act on arity " +
                              std::to_string(d));
    if (sigma.is_identity())
        return f;
    const Shape sh(f.order(), d);
    std::vector<Symbol> x(static_cast<std::size_t>(d));
    std::vector<Symbol> y(static_cast<std::size_t>(d));
    std::vector<Symbol> out(sh.size);
    for (std::size_t i = 0; i < sh.size; ++i) {
        sh.decode(i, x);
        for (int k = 0; k < d; ++k)
            y[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(sigma[k])];
        out[i] = f.at(sh.encode(y));
    }
    return RawOp(f.order(), d, std::move(out));
}

LatinOp act(const SlotPermutation& sigma, const LatinOp& f)
{
    return LatinOp::assume_latin(act_raw(sigma, f.raw()));
}

SlotPermutation block_permutation(const SlotPermutation& sigma, int slot, int e)
{
    const int d = sigma.size();
    if (slot < 0 || slot >= d)
        throw ValidationError("block slot " + std::to_string(slot + 1) + " outside [1, " + std::to_string(d) + "]");
    if (e < 1)
        throw ValidationError("block size must be at least 1, got " + std::to_string(e));
    const int target = sigma[slot];
    std::vector<int> out(static_cast<std::size_t>(d + e - 1));
    for (int p = 0; p < d + e - 1; ++p) {
        int k = p;
        int offset = 0;
        if (p >= slot && p < slot + e) {
            k = slot;
            offset = p - slot;
        } else if (p >= slot + e) {
            k = p - e + 1;
        }
        const int m = sigma[k];
        out[static_cast<std::size_t>(p)] = (m <= target ? m : m + e - 1) + offset;
    }
    return SlotPermutation(std::move(out));
}

SlotPermutation inner_permutation(const SlotPermutation& tau, int slot, int d)
{
    if (slot < 0 || slot >= d)
        throw ValidationError("inner slot " + std::to_string(slot + 1) + " outside [1, " + std::to_string(d) + "]");
    const int e = tau.size();
    std::vector<int> out(static_cast<std::size_t>(d + e - 1));
    for (int p = 0; p < d + e - 1; ++p)
        out[static_cast<std::size_t>(p)] = p;
    for (int k = 0; k < e; ++k)
        out[static_cast<std::size_t>(slot + k)] = slot + tau[k];
    return SlotPermutation(std::move(out));
}

// ---------------------------------------------------------------------------
// Axiom checker

bool OperadReport::all_passed() const
{
    for (const auto& a : axioms)
        if (!a.passed)
            return false;
    return true;
}

namespace {

std::string describe(const RawOp& f)
{
    std::ostringstream os;
    os << "[n=" << f.order() << " d=" << f.arity() << ":";
    for (Symbol s : f.table())
        os << ' ' << int(s);
    os << ']';
    return os.str();
}

class AxiomTally
{
public:
    explicit AxiomTally(std::string name) { result_.axiom = std::move(name); }

    template <typename Witness>
    void record(bool ok, Witness&& witness)
    {
        ++result_.checks;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.witness = witness();
        }
    }

    AxiomResult take() { return std::move(result_); }

private:
    AxiomResult result_;
};

}  // namespace

OperadReport verify_operad_axioms(Carrier carrier, const OperadCheckOptions& options)
{
    if (options.max_degree < 1)
        throw ValidationError("max degree must be at least 1");
    const ComposeFn compose = options.compose ? options.compose : ComposeFn(compose_raw);

    OperadReport report;
    std::mt19937_64 rng(options.seed);
    std::vector<RawOp> pool;
    for (int k = 1; k <= options.max_degree; ++k) {
        std::vector<RawOp> level;
        bool exhaustive = true;
        enumerate_latin(carrier, k, [&](const LatinOp& f) {
            if (level.size() >= options.sample_budget) {
                exhaustive = false;
                return false;
            }
            level.push_back(f.raw());
            return true;
        });
        if (!exhaustive) {
            level.clear();
            for (std::size_t s = 0; s < options.sample_budget; ++s)
                level.push_back(random_latin(carrier, k, rng()).raw());
        }
        report.pool_sizes.push_back(level.size());
        report.pool_exhaustive.push_back(exhaustive);
        pool.insert(pool.end(), level.begin(), level.end());
    }

    const RawOp id = unit(carrier).raw();

    AxiomTally closure("closure");
    for (const auto& f : pool)
        for (const auto& g : pool)
            for (int i = 0; i < f.arity(); ++i) {
                const RawOp h = compose(f, g, i);
                closure.record(is_latin(h), [&] {
                    return "f=" + describe(f) + " g=" + describe(g) + " slot=" + std::to_string(i + 1) +
                           " gives non-latin " + describe(h);
                });
            }

    AxiomTally sequential("sequential_associativity");
    AxiomTally parallel("parallel_associativity");
    for (const auto& f : pool)
        for (const auto& g : pool)
            for (const auto& h : pool) {
                const int d = f.arity();
                const int e = g.arity();
                for (int i = 0; i < d; ++i) {
                    const RawOp fg = compose(f, g, i);
                    for (int j = 0; j < e; ++j) {
                        const bool ok = compose(fg, h, i + j) == compose(f, compose(g, h, j), i);
                        sequential.record(ok, [&] {
                            return "f=" + describe(f) + " g=" + describe(g) + " h=" + describe(h) +
                                   " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
                        });
                    }
                    for (int k = i + 1; k < d; ++k) {
                        const bool ok = compose(fg, h, k + e - 1) == compose(compose(f, h, k), g, i);
                        parallel.record(ok, [&] {
                            return "f=" + describe(f) + " g=" + describe(g) + " h=" + describe(h) +
                                   " i=" + std::to_string(i + 1) + " k=" + std::to_string(k + 1);
                        });
                    }
                }
            }

    AxiomTally left("left_unit");
    AxiomTally right("right_unit");
    for (const auto& f : pool) {
        left.record(compose(id, f, 0) == f, [&] { return "f=" + describe(f); });
        for (int i = 0; i < f.arity(); ++i)
            right.record(compose(f, id, i) == f,
                         [&] { return "f=" + describe(f) + " slot=" + std::to_string(i + 1); });
    }

    AxiomTally outer("outer_equivariance");
    AxiomTally inner("inner_equivariance");
    for (const auto& f : pool) {
        const auto sigmas = all_permutations(f.arity());
        for (const auto& g : pool) {
            const int d = f.arity();
            const int e = g.arity();
            for (const auto& sigma : sigmas) {
                const RawOp sf = act_raw(sigma, f);
                for (int j = 0; j < d; ++j) {
                    const bool ok =
                        compose(sf, g, sigma[j]) == act_raw(block_permutation(sigma, j, e), compose(f, g, j));
                    outer.record(ok, [&] {
                        return "f=" + describe(f) + " g=" + describe(g) + " sigma=(" + sigma.to_string() +
                               ") j=" + std::to_string(j + 1);
                    });
                }
            }
            for (const auto& tau : all_permutations(e)) {
                const RawOp tg = act_raw(tau, g);
                for (int i = 0; i < d; ++i) {
                    const bool ok =
                        compose(f, tg, i) == act_raw(inner_permutation(tau, i, d), compose(f, g, i));
                    inner.record(ok, [&] {
                        return "f=" + describe(f) + " g=" + describe(g) + " tau=(" + tau.to_string() +
                               ") i=" + std::to_string(i + 1);
                    });
                }
            }
        }
    }

    report.axioms.push_back(closure.take());
    report.axioms.push_back(sequential.take());
    report.axioms.push_back(parallel.take());
    report.axioms.push_back(left.take());
    report.axioms.push_back(right.take());
    report.axioms.push_back(outer.take());
    report.axioms.push_back(inner.take());
    return report;
}

}  // namespace latinop
