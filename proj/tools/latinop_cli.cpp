// latinop -- command-line front end over the latinop C interface.
//
// Exit codes: 0 success / true, 1 false / failed verification, 2 input or
// usage error, 3 resource ceiling refusal.

#include "latinop/latinop.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

enum Exit : int { kOk = 0, kFalse = 1, kInput = 2, kCeiling = 3 };

struct Failure
{
    int code;
    std::string message;
};

void check(lop_status s)
{
    switch (s) {
    case LOP_OK:
        return;
    case LOP_ERR_CEILING:
        throw Failure{kCeiling, lop_last_error()};
    case LOP_ERR_INVALID:
        throw Failure{kInput, lop_last_error()};
    default:
        throw Failure{kInput, std::string("internal error: ") + lop_last_error()};
    }
}

template <auto Free>
struct Deleter
{
    template <typename T>
    void operator()(T* p) const noexcept
    {
        Free(p);
    }
};

using Op = std::unique_ptr<lop_op, Deleter<lop_op_free>>;
using Cells = std::unique_ptr<lop_cells, Deleter<lop_cells_free>>;
using Transversals = std::unique_ptr<lop_transversals, Deleter<lop_transversals_free>>;
using Census = std::unique_ptr<lop_census, Deleter<lop_census_free>>;
using Report = std::unique_ptr<lop_operad_report, Deleter<lop_operad_report_free>>;
using Perms = std::unique_ptr<lop_perm_list, Deleter<lop_perm_list_free>>;
using Graph = std::unique_ptr<lop_graph, Deleter<lop_graph_free>>;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{kInput, "cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "-" means stdout.
void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw Failure{kInput, "cannot write " + path};
}

Op load_op(const std::string& path)
{
    const std::string text = read_file(path);
    lop_op* op = nullptr;
    const lop_status s = lop_op_parse(text.data(), text.size(), &op);
    if (s != LOP_OK)
        throw Failure{kInput, path + ": " + lop_last_error()};
    return Op(op);
}

Cells cells_of(const lop_op* f)
{
    lop_cells* c = nullptr;
    check(lop_graph_of(f, &c));
    return Cells(c);
}

std::string emit(const lop_op* op)
{
    char* s = nullptr;
    check(lop_op_emit(op, &s));
    std::string out(s);
    lop_string_free(s);
    return out;
}

struct Tuples
{
    std::vector<int> flat;
    std::size_t rows = 0;
    std::size_t width = 0;
};

Tuples load_tuples(const std::string& path)
{
    const std::string text = read_file(path);
    int* flat = nullptr;
    Tuples t;
    if (lop_parse_tuples(text.data(), text.size(), &flat, &t.rows, &t.width) != LOP_OK)
        throw Failure{kInput, path + ": " + lop_last_error()};
    t.flat.assign(flat, flat + t.rows * t.width);
    lop_ints_free(flat);
    return t;
}

std::vector<int> parse_ints(const std::string& text)
{
    std::istringstream in(text);
    std::vector<int> out;
    int v = 0;
    while (in >> v)
        out.push_back(v);
    if (!in.eof())
        throw Failure{kInput, "expected integers, got \"" + text + "\""};
    return out;
}

const char* yes_no(int b)
{
    return b ? "true" : "false";
}

struct Globals
{
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t cell_ceiling = 0;
    std::uint64_t group_ceiling = 0;

    lop_limits limits() const
    {
        lop_limits l;
        lop_limits_default(&l);
        l.jobs = jobs;
        if (cell_ceiling)
            l.cell_ceiling = cell_ceiling;
        if (group_ceiling)
            l.group_ceiling = group_ceiling;
        return l;
    }
};

int stream_visitor(void* user, const lop_op* op)
{
    auto* state = static_cast<std::pair<std::ostream*, bool>*>(user);
    if (!state->second)
        *state->first << '\n';
    state->second = false;
    char* s = nullptr;
    if (lop_op_emit(op, &s) != LOP_OK)
        return 1;
    *state->first << s;
    state->first->flush();
    lop_string_free(s);
    return 0;
}

void print_transversal(const std::vector<int>& buf, std::size_t rows, std::size_t width)
{
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < width; ++k)
            std::cout << (k ? "\t" : "") << buf[r * width + k];
        std::cout << '\n';
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Latin hypercubes: verification, operadic composition, enumeration and transversals"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--jobs", g.jobs, "worker threads (default: available parallelism)")
        ->check(CLI::PositiveNumber);
    app.add_option("--cell-ceiling", g.cell_ceiling, "max n^d table cells for enumeration")
        ->envname("LATINOP_CELL_CEILING");
    app.add_option("--group-ceiling", g.group_ceiling, "max paratopism group order for canonical forms");

    std::string f_path, g_path, out_path, aux_path;
    int slot = 0, value = 0, n = 0, d = 0, max_degree = 0;
    std::uint64_t seed = 0;
    std::size_t limit = 0, budget = 32;
    std::string perm_text;
    bool count_only = false, cells_mode = false, stats_only = false;

    auto* check_cmd = app.add_subcommand("check", "test the Latin property of an .lhc table or a tuple file");
    check_cmd->add_option("file", f_path, "input file")->required();
    check_cmd->add_flag("--cells", cells_mode, "input is a tuple file of cells");
    check_cmd->add_option("--n", n, "carrier order (with --cells)");

    auto* compose_cmd = app.add_subcommand("compose", "f o_i g");
    compose_cmd->add_option("f", f_path)->required();
    compose_cmd->add_option("g", g_path)->required();
    compose_cmd->add_option("--slot", slot, "1-based slot of f")->required();
    compose_cmd->add_option("-o,--output", out_path);

    auto* conj_cmd = app.add_subcommand("conjugate", "move a slot to the output position");
    conj_cmd->add_option("f", f_path)->required();
    conj_cmd->add_option("--slot", slot, "1-based slot in 1..d+1")->required();
    conj_cmd->add_option("-o,--output", out_path);

    auto* act_cmd = app.add_subcommand("act", "permute the arguments");
    act_cmd->add_option("f", f_path)->required();
    act_cmd->add_option("--perm", perm_text, "1-based one-line notation, e.g. \"2 1 3\"")->required();
    act_cmd->add_option("-o,--output", out_path);

    auto* restrict_cmd = app.add_subcommand("restrict", "cells with a fixed slot value, that slot dropped");
    restrict_cmd->add_option("f", f_path)->required();
    restrict_cmd->add_option("--slot", slot, "1-based slot in 1..d+1")->required();
    restrict_cmd->add_option("--value", value)->required();
    restrict_cmd->add_option("-o,--output", out_path);

    auto* enum_cmd = app.add_subcommand("enumerate", "all Latin operations of order n and arity d");
    enum_cmd->add_option("--n", n)->required();
    enum_cmd->add_option("--d", d)->required();
    auto* count_opt = enum_cmd->add_flag("--count", count_only, "print the count only");
    enum_cmd->add_option("--stream", out_path, "write an .lhcs stream (\"-\" for stdout)")->excludes(count_opt);

    auto* random_cmd = app.add_subcommand("random", "a random Latin operation (deterministic in the seed)");
    random_cmd->add_option("--n", n)->required();
    random_cmd->add_option("--d", d)->required();
    random_cmd->add_option("--seed", seed);
    random_cmd->add_option("-o,--output", out_path);

    auto* trans_cmd = app.add_subcommand("transversals", "transversals of the graph of f");
    trans_cmd->add_option("f", f_path)->required();
    trans_cmd->add_option("--limit", limit, "stop after k transversals");
    trans_cmd->add_flag("--count", count_only, "print the count only");

    auto* delta_cmd = app.add_subcommand("delta", "alternating-sum identity for a transversal");
    delta_cmd->add_option("f", f_path)->required();
    delta_cmd->add_option("--transversal", aux_path, "tuple file with n rows")->required();

    auto* canon_cmd = app.add_subcommand("canon", "min-lex representative of the paratopism class");
    canon_cmd->add_option("f", f_path)->required();
    canon_cmd->add_option("-o,--output", out_path);

    auto* orbits_cmd = app.add_subcommand("orbits", "paratopism classes of order n, arity d");
    orbits_cmd->add_option("--n", n)->required();
    orbits_cmd->add_option("--d", d)->required();
    orbits_cmd->add_option("--emit", out_path, "write class representatives as .lhcs");

    auto* graph_cmd = app.add_subcommand("graph", "shared-coordinate graph of the cells of f");
    graph_cmd->add_option("f", f_path)->required();
    auto* stats_opt = graph_cmd->add_flag("--stats", stats_only, "statistics only (default)");
    graph_cmd->add_option("--edges", out_path, "write the edge list")->excludes(stats_opt);

    auto* verify_cmd = app.add_subcommand("verify-operad", "check the operad axioms on Latin operations");
    verify_cmd->add_option("--n", n)->required();
    verify_cmd->add_option("--max-degree", max_degree)->required();
    verify_cmd->add_option("--budget", budget, "operand pool size per degree");
    verify_cmd->add_option("--seed", seed);

    auto* autos_cmd = app.add_subcommand("autos", "automorphisms of f");
    autos_cmd->add_option("f", f_path)->required();

    auto* pull_cmd = app.add_subcommand("pullback-compose", "composition computed on cell sets");
    pull_cmd->add_option("L", f_path)->required();
    pull_cmd->add_option("M", g_path)->required();
    pull_cmd->add_option("--slot", slot)->required();
    pull_cmd->add_option("-o,--output", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kInput;
    }

    const lop_limits limits = g.limits();
    try {
        if (*check_cmd) {
            if (cells_mode) {
                if (n < 1)
                    throw Failure{kInput, "--cells needs --n"};
                const auto t = load_tuples(f_path);
                if (t.width < 2)
                    throw Failure{kInput, "cells need at least two coordinates"};
                int latin = 0;
                check(lop_cells_is_latin(n, static_cast<int>(t.width) - 1, t.flat.data(), t.rows, &latin));
                std::cout << "cells: " << t.rows << "\nlatin: " << yes_no(latin) << '\n';
                if (latin) {
                    lop_cells* c = nullptr;
                    check(lop_cells_create(n, static_cast<int>(t.width) - 1, t.flat.data(), t.rows, &c));
                    lop_cells_free(c);
                }
                return latin ? kOk : kFalse;
            }
            const Op f = load_op(f_path);
            int latin = 0;
            check(lop_op_is_latin(f.get(), &latin));
            std::cout << "order: " << lop_op_order(f.get()) << "\narity: " << lop_op_arity(f.get())
                      << "\nlatin: " << yes_no(latin) << '\n';
            return latin ? kOk : kFalse;
        }
        if (*compose_cmd) {
            const Op f = load_op(f_path), h = load_op(g_path);
            lop_op* r = nullptr;
            check(lop_compose(f.get(), h.get(), slot, &r));
            write_text(out_path, emit(Op(r).get()));
            return kOk;
        }
        if (*conj_cmd) {
            const Op f = load_op(f_path);
            lop_op* r = nullptr;
            check(lop_conjugate(f.get(), slot, &r));
            write_text(out_path, emit(Op(r).get()));
            return kOk;
        }
        if (*act_cmd) {
            const Op f = load_op(f_path);
            const auto perm = parse_ints(perm_text);
            lop_op* r = nullptr;
            check(lop_act(perm.data(), perm.size(), f.get(), &r));
            write_text(out_path, emit(Op(r).get()));
            return kOk;
        }
        if (*restrict_cmd) {
            const Op f = load_op(f_path);
            const Cells cells = cells_of(f.get());
            lop_cells* r = nullptr;
            check(lop_restrict(cells.get(), slot, value, &r));
            const Cells restricted(r);
            lop_op* op = nullptr;
            check(lop_function_of(restricted.get(), &op));
            write_text(out_path, emit(Op(op).get()));
            return kOk;
        }
        if (*enum_cmd) {
            if (count_only) {
                std::uint64_t count = 0;
                check(lop_enumerate_count(n, d, &limits, &count));
                std::cout << "count: " << count << '\n';
                return kOk;
            }
            std::ofstream file;
            std::ostream* os = &std::cout;
            if (!out_path.empty() && out_path != "-") {
                file.open(out_path, std::ios::binary);
                if (!file)
                    throw Failure{kInput, "cannot write " + out_path};
                os = &file;
            }
            std::pair<std::ostream*, bool> state{os, true};
            check(lop_enumerate(n, d, &limits, stream_visitor, &state));
            return kOk;
        }
        if (*random_cmd) {
            lop_op* r = nullptr;
            check(lop_random(n, d, seed, &limits, &r));
            write_text(out_path, emit(Op(r).get()));
            return kOk;
        }
        if (*trans_cmd) {
            const Op f = load_op(f_path);
            const Cells cells = cells_of(f.get());
            if (count_only && limit == 0) {
                std::uint64_t count = 0;
                check(lop_count_transversals(cells.get(), &limits, &count));
                std::cout << "transversals: " << count << '\n';
                return kOk;
            }
            lop_transversals* t = nullptr;
            check(lop_find_transversals(cells.get(), limit, &limits, &t));
            const Transversals list(t);
            const std::size_t count = lop_transversals_count(t);
            if (count_only) {
                std::cout << "transversals: " << count << '\n';
                return kOk;
            }
            const auto rows = static_cast<std::size_t>(lop_transversals_order(t));
            const auto width = static_cast<std::size_t>(lop_transversals_dimension(t)) + 1;
            std::vector<int> buf(rows * width);
            for (std::size_t i = 0; i < count; ++i) {
                check(lop_transversals_get(t, i, buf.data()));
                if (i)
                    std::cout << '\n';
                print_transversal(buf, rows, width);
            }
            return kOk;
        }
        if (*delta_cmd) {
            const Op f = load_op(f_path);
            const Cells cells = cells_of(f.get());
            const auto t = load_tuples(aux_path);
            const int order = lop_op_order(f.get());
            int computed = 0, expected = 0, pass = 0, contained = 0;
            check(lop_delta_check(order, t.flat.data(), t.rows, t.width, &computed, &expected, &pass));
            check(lop_transversal_contained(order, t.flat.data(), t.rows, t.width, cells.get(), &contained));
            std::cout << "contained: " << yes_no(contained) << "\ncomputed: " << computed
                      << "\nexpected: " << expected << "\npass: " << yes_no(pass) << '\n';
            return pass ? kOk : kFalse;
        }
        if (*canon_cmd) {
            const Op f = load_op(f_path);
            lop_op* r = nullptr;
            check(lop_canonical_form(f.get(), &limits, &r));
            write_text(out_path, emit(Op(r).get()));
            return kOk;
        }
        if (*orbits_cmd) {
            lop_census* c = nullptr;
            check(lop_orbit_census(n, d, &limits, &c));
            const Census census(c);
            const std::size_t classes = lop_census_count(c);
            std::uint64_t total = 0;
            std::ostringstream reps;
            std::ostringstream sizes;
            for (std::size_t i = 0; i < classes; ++i) {
                const lop_op* rep = nullptr;
                std::uint64_t size = 0;
                check(lop_census_class(c, i, &rep, &size));
                total += size;
                sizes << "class " << i + 1 << ": " << size << '\n';
                reps << (i ? "\n" : "") << emit(rep);
            }
            std::cout << "classes: " << classes << "\ntotal: " << total << '\n' << sizes.str();
            if (!out_path.empty())
                write_text(out_path, reps.str());
            return kOk;
        }
        if (*graph_cmd) {
            const Op f = load_op(f_path);
            const Cells cells = cells_of(f.get());
            lop_graph* gr = nullptr;
            check(lop_graph_build(cells.get(), &gr));
            const Graph graph(gr);
            lop_graph_summary s{};
            lop_graph_summarize(gr, &s);
            if (!out_path.empty()) {
                std::ostringstream edges;
                for (std::size_t i = 0; i < s.edges; ++i) {
                    std::uint32_t u = 0, v = 0;
                    check(lop_graph_edge(gr, i, &u, &v));
                    edges << u << ' ' << v << '\n';
                }
                write_text(out_path, edges.str());
            }
            std::size_t len = 0;
            check(lop_graph_histogram(gr, nullptr, nullptr, 0, &len));
            std::vector<std::size_t> degs(len), counts(len);
            check(lop_graph_histogram(gr, degs.data(), counts.data(), len, &len));
            std::cout << "vertices: " << s.vertices << "\nedges: " << s.edges << "\nregular: " << yes_no(s.is_regular)
                      << '\n';
            if (s.is_regular)
                std::cout << "degree: " << s.min_degree << '\n';
            for (std::size_t i = 0; i < len; ++i)
                std::cout << "vertices of degree " << degs[i] << ": " << counts[i] << '\n';
            std::cout << "max shared slots: " << s.max_shared_slots << "\npredicted degree: "
                      << lop_predicted_degree(lop_op_order(f.get()), lop_op_arity(f.get())) << '\n';
            return kOk;
        }
        if (*verify_cmd) {
            lop_operad_report* r = nullptr;
            check(lop_verify_operad(n, max_degree, budget, seed, &r));
            const Report report(r);
            for (std::size_t i = 0; i < lop_operad_report_count(r); ++i) {
                const char* name = nullptr;
                const char* witness = nullptr;
                std::uint64_t checks = 0;
                int passed = 0;
                check(lop_operad_report_axiom(r, i, &name, &checks, &passed, &witness));
                std::cout << name << ": " << (passed ? "pass" : "FAIL") << " (" << checks << " checks)\n";
                if (!passed)
                    std::cout << name << " witness: " << witness << '\n';
            }
            const int ok = lop_operad_report_passed(r);
            std::cout << "exhaustive: " << yes_no(lop_operad_report_exhaustive(r)) << "\nresult: "
                      << (ok ? "pass" : "fail") << '\n';
            return ok ? kOk : kFalse;
        }
        if (*autos_cmd) {
            const Op f = load_op(f_path);
            lop_perm_list* p = nullptr;
            check(lop_automorphisms(f.get(), &limits, &p));
            const Perms perms(p);
            const std::size_t count = lop_perm_list_count(p);
            std::vector<int> buf(static_cast<std::size_t>(lop_perm_list_degree(p)));
            std::cout << "count: " << count << '\n';
            for (std::size_t i = 0; i < count; ++i) {
                check(lop_perm_list_get(p, i, buf.data()));
                std::cout << "automorphism:";
                for (int v : buf)
                    std::cout << ' ' << v;
                std::cout << '\n';
            }
            return kOk;
        }
        if (*pull_cmd) {
            const Op f = load_op(f_path), h = load_op(g_path);
            const Cells outer = cells_of(f.get()), inner = cells_of(h.get());
            lop_cells* r = nullptr;
            check(lop_pullback_compose(outer.get(), inner.get(), slot, &r));
            const Cells composite(r);
            lop_op* op = nullptr;
            check(lop_function_of(composite.get(), &op));
            write_text(out_path, emit(Op(op).get()));
            return kOk;
        }
    } catch (const Failure& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    }
    return kInput;
}
