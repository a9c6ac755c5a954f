// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Reference values come from the oracles in oracles.hpp.

#include "latinop/core.hpp"
#include "latinop/enumerate.hpp"
#include "latinop/format.hpp"
#include "latinop/graph.hpp"
#include "latinop/morphisms.hpp"
#include "latinop/operad.hpp"
#include "latinop/pullback.hpp"
#include "latinop/transversal.hpp"
#include "oracles.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace latinop;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome
{
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

oracle::Table table_of(const LatinOp& f)
{
    return oracle::Table(f.table().begin(), f.table().end());
}

LatinOp op_of(int n, int d, const oracle::Table& t)
{
    return LatinOp(RawOp::from_ints(n, d, t));
}

std::string run_cli(const std::string& args, int* code)
{
    const std::string cmd = std::string(LATINOP_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        *code = -1;
        return {};
    }
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

// --------------------------------------------------------------------------

Outcome closure()
{
    Outcome o;
    const Carrier c(3);
    std::uint64_t checks = 0, failures = 0;
    for (int d = 1; d <= 2; ++d)
        for (int e = 1; e <= 2; ++e)
            for (const auto& f : all_latin(c, d))
                for (const auto& g : all_latin(c, e))
                    for (int i = 0; i < d; ++i) {
                        ++checks;
                        const auto h = compose_raw(f.raw(), g.raw(), i);
                        failures += !is_latin(h);
                    }
    // (d,e) = (1,1), (1,2), (2,1), (2,2) with d choices of slot each
    const std::uint64_t expected = 6 * 6 + 6 * 12 + 12 * 6 * 2 + 12 * 12 * 2;
    o.require(checks == expected, "unexpected check count " + std::to_string(checks));
    o.require(failures == 0, std::to_string(failures) + " non-Latin composites");
    o.note(std::to_string(checks) + " composites");
    return o;
}

Outcome operad_axioms()
{
    Outcome o;
    for (auto [n, deg] : {std::pair{2, 3}, std::pair{3, 2}}) {
        OperadCheckOptions opts;
        opts.max_degree = deg;
        const auto report = verify_operad_axioms(Carrier(n), opts);
        for (bool b : report.pool_exhaustive)
            o.require(b, "n=" + std::to_string(n) + " pool not exhaustive");
        std::uint64_t checks = 0;
        for (const auto& a : report.axioms) {
            checks += a.checks;
            o.require(a.passed, "n=" + std::to_string(n) + " " + a.axiom + ": " + a.witness);
            o.require(a.checks > 0, "n=" + std::to_string(n) + " " + a.axiom + " never checked");
        }
        o.note("n=" + std::to_string(n) + " deg<=" + std::to_string(deg) + ": " + std::to_string(checks) +
               " checks over " + std::to_string(report.axioms.size()) + " axioms");
    }
    return o;
}

Outcome degree_one_group()
{
    Outcome o;
    for (int n : {3, 4}) {
        const auto ops = all_latin(Carrier(n), 1);
        std::size_t products = 0;
        for (const auto& f : ops) {
            const auto inv = conjugate(f, 0);
            for (std::size_t x = 0; x < static_cast<std::size_t>(n); ++x)
                o.require(inv.at(f.at(x)) == x && f.at(inv.at(x)) == x, "conjugate is not the inverse");
            for (const auto& g : ops) {
                ++products;
                const auto h = compose_at(f, g, 0);
                for (std::size_t x = 0; x < static_cast<std::size_t>(n); ++x)
                    if (h.at(x) != f.at(g.at(x)))
                        o.require(false, "product mismatch");
            }
        }
        const std::size_t expect = n == 3 ? 36 : 576;
        o.require(products == expect, "Sym_" + std::to_string(n) + " products " + std::to_string(products));
        o.note("Sym_" + std::to_string(n) + ": " + std::to_string(products) + " products");
    }
    return o;
}

Outcome pullback()
{
    Outcome o;
    std::uint64_t checks = 0;
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 2; ++d)
            for (int e = 1; e <= 2; ++e)
                for (const auto& f : all_latin(Carrier(n), d))
                    for (const auto& g : all_latin(Carrier(n), e))
                        for (int i = 0; i < d; ++i) {
                            ++checks;
                            if (pullback_compose(graph_of(f), graph_of(g), i) != graph_of(compose_at(f, g, i)))
                                o.require(false, "mismatch at n=" + std::to_string(n));
                        }
    o.note(std::to_string(checks) + " compositions");
    return o;
}

Outcome counts()
{
    Outcome o;
    auto expect = [&](int n, int d, std::uint64_t want, const char* source) {
        const auto t0 = Clock::now();
        const auto got = count_latin(Carrier(n), d);
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        o.require(got == want, "n=" + std::to_string(n) + " d=" + std::to_string(d) + ": " + std::to_string(got) +
                                   " vs " + source + " " + std::to_string(want));
        return secs;
    };
    for (int n = 1; n <= 8; ++n)
        expect(n, 1, oracle::count_layered(n, 1), "n!");
    for (int d = 1; d <= 6; ++d)
        expect(2, d, oracle::count_layered(2, d), "layered oracle");
    const auto c32 = oracle::count_layered(3, 2);
    o.require(c32 == 12, "layered oracle n=3 d=2 gave " + std::to_string(c32));
    expect(3, 2, c32, "layered oracle");
    const auto p4 = oracle::count_squares_by_permanent(4);
    o.require(p4 == 576, "permanent oracle n=4 gave " + std::to_string(p4));
    expect(4, 2, p4, "permanent oracle");
    const auto p5 = oracle::count_squares_by_permanent(5);
    o.require(p5 == 161280, "permanent oracle n=5 gave " + std::to_string(p5));
    const double secs5 = expect(5, 2, p5, "permanent oracle");
    o.require(secs5 < 60.0, "n=5 took " + std::to_string(secs5) + " s");
    const auto c33 = oracle::count_layered(3, 3);
    expect(3, 3, c33, "layered oracle");
    std::ostringstream ss;
    ss.precision(3);
    ss << "n=5 d=2: " << p5 << " in " << secs5 << " s; n=3 d=3: " << c33;
    o.note(ss.str());
    return o;
}

Outcome restriction()
{
    Outcome o;
    std::uint64_t checks = 0;
    for (int d : {2, 3})
        for (const auto& f : all_latin(Carrier(3), d)) {
            const auto cells = graph_of(f);
            for (int s = 0; s <= d; ++s)
                for (int c = 0; c < 3; ++c) {
                    ++checks;
                    const auto r = restrict(cells, s, c).tuples();
                    o.require(is_latin_cellset(3, d - 1, r) && oracle::is_latin_cells(r, 3, d - 1),
                              "restriction not Latin");
                }
        }
    o.note(std::to_string(checks) + " restrictions");
    return o;
}

Outcome delta_identity()
{
    Outcome o;
    std::uint64_t squares = 0, transversals = 0;
    for (int n = 1; n <= 5; ++n)
        enumerate_latin(Carrier(n), 2, [&](const LatinOp& f) {
            ++squares;
            for (const auto& t : find_transversals(graph_of(f))) {
                ++transversals;
                const auto r = delta_check(t);
                if (!r.pass || r.expected != (n % 2 ? 0 : n / 2))
                    o.require(false, "delta identity fails at n=" + std::to_string(n));
            }
            return true;
        });
    for (int n : {2, 4, 6}) {
        const auto found = find_transversals(graph_of(op_of(n, 2, oracle::cyclic(n, 2))));
        o.require(found.empty(), "cyclic square of order " + std::to_string(n) + " has transversals");
    }
    o.note(std::to_string(transversals) + " transversals in " + std::to_string(squares) + " squares");
    return o;
}

Outcome census()
{
    Outcome o;
    for (int n : {2, 3, 4}) {
        const auto classes = orbit_census(Carrier(n), 2);
        std::uint64_t total = 0;
        std::vector<std::size_t> sizes;
        for (const auto& c : classes) {
            total += c.size;
            sizes.push_back(c.size);
        }
        std::sort(sizes.begin(), sizes.end());
        o.require(total == count_latin(Carrier(n), 2), "orbit sizes do not sum to the count at n=" + std::to_string(n));

        std::map<LatinOp, std::uint64_t> buckets;
        for (const auto& f : all_latin(Carrier(n), 2))
            ++buckets[canonical_form(f)];
        std::vector<std::size_t> bucket_sizes;
        for (const auto& [rep, size] : buckets)
            bucket_sizes.push_back(size);
        std::sort(bucket_sizes.begin(), bucket_sizes.end());
        o.require(sizes == bucket_sizes, "census differs from bucketing at n=" + std::to_string(n));
        o.require(sizes == oracle::class_sizes(oracle::all_latin(n, 2), n, 2),
                  "census differs from union-find at n=" + std::to_string(n));
        o.note("n=" + std::to_string(n) + ": " + std::to_string(classes.size()) + " classes");
    }
    o.require(orbit_census(Carrier(3), 2).size() == 1, "n=3 class count");
    o.require(orbit_census(Carrier(4), 2).size() == 2, "n=4 class count");
    return o;
}

Outcome graph_regularity()
{
    Outcome o;
    for (auto [n, d] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
        std::size_t fired = 0, degree_mismatch = 0, total = 0;
        int worst = 0;
        std::set<std::size_t> degrees;
        for (const auto& f : all_latin(Carrier(n), d)) {
            ++total;
            const auto cells = graph_of(f);
            const auto g = hypercube_graph(cells);
            const auto stats = graph_stats(g);
            const auto facts = oracle::graph_facts(cells.tuples());
            // two distinct cells sharing two or more slots
            if (g.max_shared_slots > 1)
                ++fired;
            worst = std::max(worst, g.max_shared_slots);
            std::map<std::size_t, std::size_t> hist;
            for (auto deg : facts.degree)
                ++hist[deg];
            if (hist != stats.degree_histogram || !stats.is_regular)
                ++degree_mismatch;
            for (const auto& [deg, count] : stats.degree_histogram)
                degrees.insert(deg);
        }
        const std::string where = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
        o.require(fired == 0, where + ": at-most-one-shared-slot violated in " + std::to_string(fired) + "/" +
                                  std::to_string(total) + " hypercubes (cells share up to " + std::to_string(worst) +
                                  " slots)");
        o.require(degree_mismatch == 0, where + ": degree differs from oracle in " + std::to_string(degree_mismatch));
        if (degrees.size() == 1)
            o.note(where + " degree " + std::to_string(*degrees.begin()));
    }
    return o;
}

Outcome automorphism_groups()
{
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        const auto table = oracle::cyclic(n, 2);
        const auto autos = automorphisms(op_of(n, 2, table));
        o.require(autos.size() == static_cast<std::size_t>(oracle::euler_phi(n)),
                  "n=" + std::to_string(n) + ": " + std::to_string(autos.size()) + " automorphisms");
        std::vector<std::vector<int>> mine;
        for (const auto& a : autos)
            mine.emplace_back(a.images().begin(), a.images().end());
        o.require(mine == oracle::automorphisms(table, n, 2), "n=" + std::to_string(n) + " differs from scan");
        const std::set<Permutation> group(autos.begin(), autos.end());
        o.require(group.count(Permutation::identity(n)) == 1, "identity missing");
        for (const auto& a : autos) {
            o.require(group.count(a.inverse()) == 1, "not closed under inverse");
            for (const auto& b : autos)
                if (!group.count(a * b))
                    o.require(false, "not closed under composition");
        }
        o.note("n=" + std::to_string(n) + ": " + std::to_string(autos.size()));
    }
    return o;
}

Outcome format_and_determinism()
{
    Outcome o;
    std::uint64_t round_trips = 0;
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d)
            for (const auto& f : all_latin(Carrier(n), d)) {
                ++round_trips;
                if (parse_lhc(emit_lhc(f.raw())) != f.raw())
                    o.require(false, "round trip fails");
            }

    const std::vector<std::string> commands = {
        "enumerate --n 4 --d 2",
        "enumerate --n 3 --d 3 --count",
        "random --n 7 --d 2 --seed 12345",
        "random --n 4 --d 4 --seed 7",
        "orbits --n 4 --d 2",
        "verify-operad --n 4 --max-degree 2 --budget 6 --seed 3",
    };
    std::size_t runs = 0;
    for (const auto& cmd : commands) {
        std::string reference;
        for (int jobs : {1, 2, 4})
            for (int repeat = 0; repeat < 2; ++repeat) {
                int code = 0;
                const auto out = run_cli("--jobs " + std::to_string(jobs) + " " + cmd, &code);
                ++runs;
                o.require(code == 0, "\"" + cmd + "\" exited " + std::to_string(code));
                if (reference.empty())
                    reference = out;
                else if (out != reference)
                    o.require(false, "\"" + cmd + "\" differs at --jobs " + std::to_string(jobs));
            }
    }
    // transversal listing of a larger square, through a file
    {
        const std::string path = "/tmp/latinop_acceptance_" + std::to_string(::getpid()) + ".lhc";
        int code = 0;
        run_cli("random --n 7 --d 2 --seed 1 -o " + path, &code);
        std::string reference;
        for (int jobs : {1, 2, 4}) {
            const auto out = run_cli("--jobs " + std::to_string(jobs) + " transversals " + path, &code);
            ++runs;
            if (reference.empty())
                reference = out;
            else if (out != reference)
                o.require(false, "transversal listing differs at --jobs " + std::to_string(jobs));
        }
        std::remove(path.c_str());
    }
    o.note(std::to_string(round_trips) + " round trips, " + std::to_string(runs) + " CLI runs");
    return o;
}

struct Criterion
{
    int id;
    const char* name;
    double limit_seconds;  // 0: no limit
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "closure of composition (n=3, d,e<=2)", 1.0, closure},
        {2, "operad axioms (n=2 deg<=3, n=3 deg<=2)", 10.0, operad_axioms},
        {3, "degree-one slice is Sym_3 / Sym_4", 0.0, degree_one_group},
        {4, "pullback composition oracle", 5.0, pullback},
        {5, "enumeration counts vs oracles", 0.0, counts},
        {6, "restriction yields hypercubes", 0.0, restriction},
        {7, "delta identity and even cyclic obstruction", 30.0, delta_identity},
        {8, "paratopism census", 0.0, census},
        {9, "graph regularity and shared-slot bound", 0.0, graph_regularity},
        {10, "automorphisms of cyclic addition", 0.0, automorphism_groups},
        {11, "format round trip and CLI determinism", 0.0, format_and_determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
            o.pass = false;
            o.detail += "; exceeded " + std::to_string(c.limit_seconds) + " s";
        }
        failed += !o.pass;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3fs", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " [" << timing
                  << "] " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
