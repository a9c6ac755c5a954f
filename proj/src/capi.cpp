#include "latinop/latinop.h"

#include "latinop/core.hpp"
#include "latinop/enumerate.hpp"
#include "latinop/format.hpp"
#include "latinop/graph.hpp"
#include "latinop/morphisms.hpp"
#include "latinop/operad.hpp"
#include "latinop/pullback.hpp"
#include "latinop/transversal.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

using namespace latinop;

struct lop_op
{
    RawOp op;
};

struct lop_cells
{
    CellSet cells;
};

struct lop_transversals
{
    int n;
    int d;
    std::vector<Transversal> list;
};

struct lop_census
{
    std::vector<lop_op> reps;
    std::vector<std::uint64_t> sizes;
};

struct lop_operad_report
{
    OperadReport report;
    bool exhaustive;
};

struct lop_perm_list
{
    int degree;
    std::vector<Permutation> perms;
};

struct lop_graph
{
    HypercubeGraph graph;
    GraphStats stats;
};

namespace {

thread_local std::string g_last_error;

lop_status fail(lop_status status, const char* what)
{
    g_last_error = what;
    return status;
}

// Runs `body` and maps the library's exceptions onto status codes.
template <typename Body>
lop_status guarded(Body&& body) noexcept
{
    try {
        body();
        return LOP_OK;
    } catch (const CeilingError& e) {
        return fail(LOP_ERR_CEILING, e.what());
    } catch (const ValidationError& e) {
        return fail(LOP_ERR_INVALID, e.what());
    } catch (const std::bad_alloc&) {
        return fail(LOP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(LOP_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(LOP_ERR_INTERNAL, "unknown error");
    }
}

#define LOP_REQUIRE(cond)                                                \
    do {                                                                 \
        if (!(cond))                                                     \
            return fail(LOP_ERR_INVALID, "null argument: " #cond);       \
    } while (0)

LatinOp latin(const lop_op* f)
{
    return LatinOp(f->op);
}

lop_limits limits_or_default(const lop_limits* l)
{
    lop_limits out;
    lop_limits_default(&out);
    return l ? *l : out;
}

std::vector<int> ints(const int* p, std::size_t len)
{
    return std::vector<int>(p, p + len);
}

std::vector<Tuple> rows_of(const int* flat, std::size_t rows, std::size_t width)
{
    std::vector<Tuple> out(rows);
    for (std::size_t r = 0; r < rows; ++r)
        out[r].assign(flat + r * width, flat + (r + 1) * width);
    return out;
}

}  // namespace

extern "C" {

const char* lop_version(void)
{
    return "1.0.0";
}

const char* lop_last_error(void)
{
    return g_last_error.c_str();
}

void lop_limits_default(lop_limits* out)
{
    if (!out)
        return;
    out->cell_ceiling = kDefaultCellCeiling;
    out->group_ceiling = kDefaultGroupCeiling;
    out->automorphism_max_order = kDefaultAutomorphismMaxOrder;
    out->jobs = 1;
}

void lop_string_free(char* s)
{
    std::free(s);
}

void lop_ints_free(int* p)
{
    std::free(p);
}

// ---- operations -----------------------------------------------------------

lop_status lop_op_create(int n, int d, const int* table, size_t len, lop_op** out)
{
    LOP_REQUIRE(out && (table || len == 0));
    return guarded([&] { *out = new lop_op{RawOp::from_ints(n, d, std::span<const int>(table, len))}; });
}

lop_status lop_op_parse(const char* text, size_t len, lop_op** out)
{
    LOP_REQUIRE(out && (text || len == 0));
    return guarded([&] { *out = new lop_op{parse_lhc(std::string_view(text, len))}; });
}

lop_status lop_op_emit(const lop_op* op, char** out)
{
    LOP_REQUIRE(op && out);
    return guarded([&] {
        const std::string s = emit_lhc(op->op);
        char* buf = static_cast<char*>(std::malloc(s.size() + 1));
        if (!buf)
            throw std::bad_alloc();
        std::memcpy(buf, s.c_str(), s.size() + 1);
        *out = buf;
    });
}

lop_op* lop_op_clone(const lop_op* op)
{
    if (!op)
        return nullptr;
    try {
        return new lop_op{op->op};
    } catch (...) {
        fail(LOP_ERR_INTERNAL, "out of memory");
        return nullptr;
    }
}

void lop_op_free(lop_op* op)
{
    delete op;
}

int lop_op_order(const lop_op* op)
{
    return op ? op->op.order() : 0;
}

int lop_op_arity(const lop_op* op)
{
    return op ? op->op.arity() : 0;
}

size_t lop_op_size(const lop_op* op)
{
    return op ? op->op.size() : 0;
}

lop_status lop_op_table(const lop_op* op, int* buf, size_t cap)
{
    LOP_REQUIRE(op && (buf || cap == 0));
    const auto t = op->op.table();
    for (std::size_t i = 0; i < t.size() && i < cap; ++i)
        buf[i] = t[i];
    return LOP_OK;
}

int lop_op_equal(const lop_op* a, const lop_op* b)
{
    return a && b && a->op == b->op;
}

lop_status lop_op_is_latin(const lop_op* op, int* out)
{
    LOP_REQUIRE(op && out);
    return guarded([&] { *out = is_latin(op->op) ? 1 : 0; });
}

// ---- cell sets ------------------------------------------------------------

lop_status lop_cells_create(int n, int d, const int* flat, size_t ncells, lop_cells** out)
{
    LOP_REQUIRE(out && (flat || ncells == 0) && d >= 1);
    return guarded([&] {
        *out = new lop_cells{CellSet::from_tuples(n, d, rows_of(flat, ncells, static_cast<std::size_t>(d + 1)))};
    });
}

lop_status lop_cells_is_latin(int n, int d, const int* flat, size_t ncells, int* out)
{
    LOP_REQUIRE(out && (flat || ncells == 0) && d >= 1);
    return guarded([&] {
        *out = is_latin_cellset(n, d, rows_of(flat, ncells, static_cast<std::size_t>(d + 1))) ? 1 : 0;
    });
}

lop_status lop_graph_of(const lop_op* f, lop_cells** out)
{
    LOP_REQUIRE(f && out);
    return guarded([&] { *out = new lop_cells{graph_of(latin(f))}; });
}

lop_status lop_function_of(const lop_cells* cells, lop_op** out)
{
    LOP_REQUIRE(cells && out);
    return guarded([&] { *out = new lop_op{function_of(cells->cells).raw()}; });
}

void lop_cells_free(lop_cells* cells)
{
    delete cells;
}

int lop_cells_order(const lop_cells* cells)
{
    return cells ? cells->cells.order() : 0;
}

int lop_cells_dimension(const lop_cells* cells)
{
    return cells ? cells->cells.dimension() : 0;
}

size_t lop_cells_count(const lop_cells* cells)
{
    return cells ? cells->cells.size() : 0;
}

lop_status lop_cells_get(const lop_cells* cells, size_t i, int* buf)
{
    LOP_REQUIRE(cells && buf);
    if (i >= cells->cells.size())
        return fail(LOP_ERR_INVALID, "cell index out of range");
    const auto c = cells->cells.cell(i);
    for (std::size_t k = 0; k < c.size(); ++k)
        buf[k] = c[k];
    return LOP_OK;
}

// ---- operad ---------------------------------------------------------------

lop_status lop_compose(const lop_op* f, const lop_op* g, int slot, lop_op** out)
{
    LOP_REQUIRE(f && g && out);
    return guarded([&] { *out = new lop_op{compose_at(latin(f), latin(g), slot - 1).raw()}; });
}

lop_status lop_unit(int n, lop_op** out)
{
    LOP_REQUIRE(out);
    return guarded([&] { *out = new lop_op{unit(Carrier(n)).raw()}; });
}

lop_status lop_act(const int* perm, size_t len, const lop_op* f, lop_op** out)
{
    LOP_REQUIRE(perm && f && out);
    return guarded([&] {
        const auto sigma = Permutation::from_one_based(ints(perm, len));
        *out = new lop_op{act(sigma, latin(f)).raw()};
    });
}

lop_status lop_conjugate(const lop_op* f, int slot, lop_op** out)
{
    LOP_REQUIRE(f && out);
    return guarded([&] { *out = new lop_op{conjugate(latin(f), slot - 1).raw()}; });
}

lop_status lop_block_permutation(const int* perm, size_t d, int slot, int e, int* out)
{
    LOP_REQUIRE(perm && out);
    return guarded([&] {
        const auto p = block_permutation(Permutation::from_one_based(ints(perm, d)), slot - 1, e);
        for (int k = 0; k < p.size(); ++k)
            out[k] = p[k] + 1;
    });
}

lop_status lop_verify_operad(int n, int max_degree, size_t sample_budget, uint64_t seed, lop_operad_report** out)
{
    LOP_REQUIRE(out);
    return guarded([&] {
        OperadCheckOptions opts;
        opts.max_degree = max_degree;
        opts.sample_budget = sample_budget;
        opts.seed = seed;
        auto report = verify_operad_axioms(Carrier(n), opts);
        bool exhaustive = true;
        for (bool b : report.pool_exhaustive)
            exhaustive = exhaustive && b;
        *out = new lop_operad_report{std::move(report), exhaustive};
    });
}

size_t lop_operad_report_count(const lop_operad_report* r)
{
    return r ? r->report.axioms.size() : 0;
}

lop_status lop_operad_report_axiom(const lop_operad_report* r, size_t i, const char** name, uint64_t* checks,
                                   int* passed, const char** witness)
{
    LOP_REQUIRE(r);
    if (i >= r->report.axioms.size())
        return fail(LOP_ERR_INVALID, "axiom index out of range");
    const auto& a = r->report.axioms[i];
    if (name)
        *name = a.axiom.c_str();
    if (checks)
        *checks = a.checks;
    if (passed)
        *passed = a.passed ? 1 : 0;
    if (witness)
        *witness = a.witness.c_str();
    return LOP_OK;
}

int lop_operad_report_passed(const lop_operad_report* r)
{
    return r && r->report.all_passed();
}

int lop_operad_report_exhaustive(const lop_operad_report* r)
{
    return r && r->exhaustive;
}

void lop_operad_report_free(lop_operad_report* r)
{
    delete r;
}

// ---- pullback -------------------------------------------------------------

lop_status lop_pullback_compose(const lop_cells* outer, const lop_cells* inner, int slot, lop_cells** out)
{
    LOP_REQUIRE(outer && inner && out);
    return guarded([&] { *out = new lop_cells{pullback_compose(outer->cells, inner->cells, slot - 1)}; });
}

lop_status lop_restrict(const lop_cells* cells, int slot, int value, lop_cells** out)
{
    LOP_REQUIRE(cells && out);
    return guarded([&] { *out = new lop_cells{restrict(cells->cells, slot - 1, value)}; });
}

// ---- enumeration ----------------------------------------------------------

lop_status lop_enumerate_count(int n, int d, const lop_limits* limits, uint64_t* out)
{
    LOP_REQUIRE(out);
    const lop_limits l = limits_or_default(limits);
    return guarded([&] { *out = count_latin(Carrier(n), d, EnumerateOptions{l.cell_ceiling, l.jobs}); });
}

lop_status lop_enumerate(int n, int d, const lop_limits* limits, lop_op_visitor visit, void* user)
{
    LOP_REQUIRE(visit);
    const lop_limits l = limits_or_default(limits);
    return guarded([&] {
        enumerate_latin(
            Carrier(n), d,
            [&](const LatinOp& f) {
                const lop_op handle{f.raw()};
                return visit(user, &handle) == 0;
            },
            EnumerateOptions{l.cell_ceiling, l.jobs});
    });
}

lop_status lop_random(int n, int d, uint64_t seed, const lop_limits* limits, lop_op** out)
{
    LOP_REQUIRE(out);
    const lop_limits l = limits_or_default(limits);
    return guarded([&] { *out = new lop_op{random_latin(Carrier(n), d, seed, l.cell_ceiling).raw()}; });
}

lop_status lop_apply_paratopism(const lop_op* f, const int* slot_perm, const int* symbol_perms, lop_op** out)
{
    LOP_REQUIRE(f && slot_perm && symbol_perms && out);
    return guarded([&] {
        const int n = f->op.order();
        const int w = f->op.arity() + 1;
        std::vector<Permutation> syms;
        for (int s = 0; s < w; ++s)
            syms.emplace_back(ints(symbol_perms + s * n, static_cast<std::size_t>(n)));
        const Paratopism p(n, Permutation::from_one_based(ints(slot_perm, static_cast<std::size_t>(w))),
                           std::move(syms));
        *out = new lop_op{apply_paratopism(p, latin(f)).raw()};
    });
}

lop_status lop_canonical_form(const lop_op* f, const lop_limits* limits, lop_op** out)
{
    LOP_REQUIRE(f && out);
    const lop_limits l = limits_or_default(limits);
    return guarded([&] { *out = new lop_op{canonical_form(latin(f), l.group_ceiling).raw()}; });
}

lop_status lop_orbit_census(int n, int d, const lop_limits* limits, lop_census** out)
{
    LOP_REQUIRE(out);
    const lop_limits l = limits_or_default(limits);
    return guarded([&] {
        const auto classes = orbit_census(Carrier(n), d, CensusOptions{l.cell_ceiling, l.group_ceiling, l.jobs});
        auto c = std::make_unique<lop_census>();
        for (const auto& k : classes) {
            c->reps.push_back(lop_op{k.canonical.raw()});
            c->sizes.push_back(k.size);
        }
        *out = c.release();
    });
}

size_t lop_census_count(const lop_census* c)
{
    return c ? c->reps.size() : 0;
}

lop_status lop_census_class(const lop_census* c, size_t i, const lop_op** canonical, uint64_t* size)
{
    LOP_REQUIRE(c);
    if (i >= c->reps.size())
        return fail(LOP_ERR_INVALID, "class index out of range");
    if (canonical)
        *canonical = &c->reps[i];
    if (size)
        *size = c->sizes[i];
    return LOP_OK;
}

void lop_census_free(lop_census* c)
{
    delete c;
}

// ---- transversals ---------------------------------------------------------

lop_status lop_find_transversals(const lop_cells* cells, size_t limit, const lop_limits* limits,
                                 lop_transversals** out)
{
    LOP_REQUIRE(cells && out);
    const lop_limits l = limits_or_default(limits);
    return guarded([&] {
        auto list = find_transversals(cells->cells, limit ? std::optional<std::size_t>(limit) : std::nullopt, l.jobs);
        *out = new lop_transversals{cells->cells.order(), cells->cells.dimension(), std::move(list)};
    });
}

lop_status lop_count_transversals(const lop_cells* cells, const lop_limits* limits, uint64_t* out)
{
    LOP_REQUIRE(cells && out);
    const lop_limits l = limits_or_default(limits);
    return guarded([&] { *out = count_transversals(cells->cells, l.jobs); });
}

size_t lop_transversals_count(const lop_transversals* t)
{
    return t ? t->list.size() : 0;
}

int lop_transversals_order(const lop_transversals* t)
{
    return t ? t->n : 0;
}

int lop_transversals_dimension(const lop_transversals* t)
{
    return t ? t->d : 0;
}

lop_status lop_transversals_get(const lop_transversals* t, size_t i, int* buf)
{
    LOP_REQUIRE(t && buf);
    if (i >= t->list.size())
        return fail(LOP_ERR_INVALID, "transversal index out of range");
    std::size_t k = 0;
    for (const auto& row : t->list[i].tuples())
        for (int v : row)
            buf[k++] = v;
    return LOP_OK;
}

void lop_transversals_free(lop_transversals* t)
{
    delete t;
}

lop_status lop_alternating_sum(const int* tuple, size_t len, int n, int* out)
{
    LOP_REQUIRE(tuple && out);
    return guarded([&] { *out = alternating_sum(std::span<const int>(tuple, len), n); });
}

lop_status lop_delta_check(int n, const int* flat, size_t rows, size_t width, int* computed, int* expected,
                           int* pass)
{
    LOP_REQUIRE(flat && computed && expected && pass);
    return guarded([&] {
        const auto report = delta_check(Transversal::from_tuples(n, rows_of(flat, rows, width)));
        *computed = report.computed;
        *expected = report.expected;
        *pass = report.pass ? 1 : 0;
    });
}

lop_status lop_transversal_contained(int n, const int* flat, size_t rows, size_t width, const lop_cells* cells,
                                     int* out)
{
    LOP_REQUIRE(flat && cells && out);
    return guarded(
        [&] { *out = contained_in(Transversal::from_tuples(n, rows_of(flat, rows, width)), cells->cells) ? 1 : 0; });
}

lop_status lop_parse_tuples(const char* text, size_t len, int** flat, size_t* rows, size_t* width)
{
    LOP_REQUIRE((text || len == 0) && flat && rows && width);
    return guarded([&] {
        const auto parsed = parse_tsv(std::string_view(text, len));
        const std::size_t w = parsed.empty() ? 0 : parsed.front().size();
        int* buf = static_cast<int*>(std::malloc(std::max<std::size_t>(1, parsed.size() * w) * sizeof(int)));
        if (!buf)
            throw std::bad_alloc();
        std::size_t k = 0;
        for (const auto& r : parsed)
            for (int v : r)
                buf[k++] = v;
        *flat = buf;
        *rows = parsed.size();
        *width = w;
    });
}

// ---- graph ----------------------------------------------------------------

lop_status lop_graph_build(const lop_cells* cells, lop_graph** out)
{
    LOP_REQUIRE(cells && out);
    return guarded([&] {
        auto g = hypercube_graph(cells->cells);
        auto stats = graph_stats(g);
        *out = new lop_graph{std::move(g), std::move(stats)};
    });
}

void lop_graph_summarize(const lop_graph* g, lop_graph_summary* out)
{
    if (!g || !out)
        return;
    const auto& s = g->stats;
    out->vertices = s.vertices;
    out->edges = s.edges;
    out->is_regular = s.is_regular ? 1 : 0;
    out->min_degree = s.degree_histogram.empty() ? 0 : s.degree_histogram.begin()->first;
    out->max_degree = s.degree_histogram.empty() ? 0 : s.degree_histogram.rbegin()->first;
    out->max_shared_slots = s.max_shared_slots;
}

lop_status lop_graph_histogram(const lop_graph* g, size_t* degrees, size_t* counts, size_t cap, size_t* len)
{
    LOP_REQUIRE(g && len);
    std::size_t k = 0;
    for (const auto& [deg, cnt] : g->stats.degree_histogram) {
        if (k < cap) {
            if (degrees)
                degrees[k] = deg;
            if (counts)
                counts[k] = cnt;
        }
        ++k;
    }
    *len = k;
    return LOP_OK;
}

lop_status lop_graph_edge(const lop_graph* g, size_t i, uint32_t* u, uint32_t* v)
{
    LOP_REQUIRE(g && u && v);
    if (i >= g->graph.edges.size())
        return fail(LOP_ERR_INVALID, "edge index out of range");
    *u = g->graph.edges[i].first;
    *v = g->graph.edges[i].second;
    return LOP_OK;
}

void lop_graph_free(lop_graph* g)
{
    delete g;
}

uint64_t lop_predicted_degree(int n, int d)
{
    return predicted_degree(n, d);
}

// ---- morphisms ------------------------------------------------------------

lop_status lop_is_homomorphism(const int* map, size_t len, const lop_op* g, const lop_op* f, int* out)
{
    LOP_REQUIRE(map && g && f && out);
    return guarded([&] { *out = is_homomorphism(std::span<const int>(map, len), latin(g), latin(f)) ? 1 : 0; });
}

lop_status lop_automorphisms(const lop_op* f, const lop_limits* limits, lop_perm_list** out)
{
    LOP_REQUIRE(f && out);
    const lop_limits l = limits_or_default(limits);
    return guarded([&] {
        *out = new lop_perm_list{f->op.order(), automorphisms(latin(f), l.automorphism_max_order)};
    });
}

size_t lop_perm_list_count(const lop_perm_list* l)
{
    return l ? l->perms.size() : 0;
}

int lop_perm_list_degree(const lop_perm_list* l)
{
    return l ? l->degree : 0;
}

lop_status lop_perm_list_get(const lop_perm_list* l, size_t i, int* buf)
{
    LOP_REQUIRE(l && buf);
    if (i >= l->perms.size())
        return fail(LOP_ERR_INVALID, "permutation index out of range");
    const auto images = l->perms[i].images();
    std::copy(images.begin(), images.end(), buf);
    return LOP_OK;
}

void lop_perm_list_free(lop_perm_list* l)
{
    delete l;
}

}  // extern "C"
