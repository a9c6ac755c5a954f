// Exercises the shared library through its C header only.

#include "latinop/latinop.h"

#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

namespace {

lop_op* make(int n, int d, std::vector<int> t)
{
    lop_op* op = nullptr;
    REQUIRE(lop_op_create(n, d, t.data(), t.size(), &op) == LOP_OK);
    return op;
}

lop_op* cyclic_square(int n)
{
    std::vector<int> t;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t.push_back((x + y) % n);
    return make(n, 2, t);
}

std::vector<int> table(const lop_op* op)
{
    std::vector<int> t(lop_op_size(op));
    REQUIRE(lop_op_table(op, t.data(), t.size()) == LOP_OK);
    return t;
}

}  // namespace

TEST_CASE("op handles")
{
    lop_op* f = cyclic_square(3);
    CHECK(lop_op_order(f) == 3);
    CHECK(lop_op_arity(f) == 2);
    int latin = 0;
    CHECK(lop_op_is_latin(f, &latin) == LOP_OK);
    CHECK(latin == 1);

    char* text = nullptr;
    REQUIRE(lop_op_emit(f, &text) == LOP_OK);
    CHECK(std::string(text) == "3 2\n0 1 2\n1 2 0\n2 0 1\n");
    lop_op* back = nullptr;
    REQUIRE(lop_op_parse(text, std::strlen(text), &back) == LOP_OK);
    CHECK(lop_op_equal(f, back));
    lop_string_free(text);

    lop_op* clone = lop_op_clone(f);
    CHECK(lop_op_equal(f, clone));
    lop_op_free(clone);
    lop_op_free(back);
    lop_op_free(f);
}

TEST_CASE("errors map to status codes")
{
    lop_op* op = nullptr;
    const int bad[] = {0, 1, 1};
    CHECK(lop_op_create(2, 2, bad, 3, &op) == LOP_ERR_INVALID);
    CHECK(op == nullptr);
    CHECK(std::string(lop_last_error()).find("3 entries") != std::string::npos);

    const char* text = "2 2\n0 1\n1 q\n";
    CHECK(lop_op_parse(text, std::strlen(text), &op) == LOP_ERR_INVALID);
    CHECK(std::string(lop_last_error()).rfind("line 3, column 3", 0) == 0);

    uint64_t count = 0;
    CHECK(lop_enumerate_count(10, 8, nullptr, &count) == LOP_ERR_CEILING);
    CHECK(lop_op_is_latin(nullptr, nullptr) == LOP_ERR_INVALID);

    lop_op* not_latin = make(2, 2, {0, 0, 1, 1});
    lop_op* out = nullptr;
    CHECK(lop_compose(not_latin, not_latin, 1, &out) == LOP_ERR_INVALID);
    lop_op_free(not_latin);
}

TEST_CASE("composition, action, conjugation")
{
    lop_op* add = cyclic_square(3);
    lop_op* cube = nullptr;
    REQUIRE(lop_compose(add, add, 2, &cube) == LOP_OK);
    CHECK(lop_op_arity(cube) == 3);
    const auto t = table(cube);
    for (std::size_t i = 0; i < t.size(); ++i)
        CHECK(t[i] == static_cast<int>((i / 9 + i / 3 % 3 + i % 3) % 3));
    CHECK(lop_compose(add, add, 3, &cube) == LOP_ERR_INVALID);

    const int swap[] = {2, 1};
    lop_op* acted = nullptr;
    REQUIRE(lop_act(swap, 2, add, &acted) == LOP_OK);
    CHECK(lop_op_equal(acted, add));

    lop_op* sub = nullptr;
    REQUIRE(lop_conjugate(add, 1, &sub) == LOP_OK);
    CHECK(table(sub) == std::vector<int>{0, 1, 2, 2, 0, 1, 1, 2, 0});

    int block[3] = {};
    const int sigma[] = {2, 1};
    REQUIRE(lop_block_permutation(sigma, 2, 1, 2, block) == LOP_OK);
    CHECK(std::vector<int>(block, block + 3) == std::vector<int>{2, 3, 1});

    lop_op* u = nullptr;
    REQUIRE(lop_unit(3, &u) == LOP_OK);
    CHECK(table(u) == std::vector<int>{0, 1, 2});

    for (lop_op* p : {add, cube, acted, sub, u})
        lop_op_free(p);
}

TEST_CASE("operad report")
{
    lop_operad_report* r = nullptr;
    REQUIRE(lop_verify_operad(2, 3, 32, 0, &r) == LOP_OK);
    CHECK(lop_operad_report_passed(r));
    CHECK(lop_operad_report_exhaustive(r));
    CHECK(lop_operad_report_count(r) == 7);
    const char* name = nullptr;
    const char* witness = nullptr;
    uint64_t checks = 0;
    int passed = 0;
    REQUIRE(lop_operad_report_axiom(r, 0, &name, &checks, &passed, &witness) == LOP_OK);
    CHECK(std::string(name) == "closure");
    CHECK(checks > 0);
    CHECK(passed == 1);
    CHECK(std::string(witness).empty());
    CHECK(lop_operad_report_axiom(r, 7, &name, &checks, &passed, &witness) == LOP_ERR_INVALID);
    lop_operad_report_free(r);
}

TEST_CASE("cells, pullback, restriction")
{
    lop_op* add = cyclic_square(3);
    lop_cells* cells = nullptr;
    REQUIRE(lop_graph_of(add, &cells) == LOP_OK);
    CHECK(lop_cells_count(cells) == 9);
    CHECK(lop_cells_dimension(cells) == 2);
    int cell[3] = {};
    REQUIRE(lop_cells_get(cells, 5, cell) == LOP_OK);
    CHECK(std::vector<int>(cell, cell + 3) == std::vector<int>{1, 2, 0});

    lop_cells* composite = nullptr;
    REQUIRE(lop_pullback_compose(cells, cells, 1, &composite) == LOP_OK);
    lop_op* f = nullptr;
    REQUIRE(lop_function_of(composite, &f) == LOP_OK);
    lop_op* direct = nullptr;
    REQUIRE(lop_compose(add, add, 1, &direct) == LOP_OK);
    CHECK(lop_op_equal(f, direct));

    lop_cells* r = nullptr;
    REQUIRE(lop_restrict(cells, 3, 0, &r) == LOP_OK);
    CHECK(lop_cells_count(r) == 3);
    CHECK(lop_restrict(cells, 4, 0, &r) == LOP_ERR_INVALID);

    const int bad[] = {0, 0, 1, 0};
    lop_cells* invalid = nullptr;
    CHECK(lop_cells_create(2, 1, bad, 2, &invalid) == LOP_ERR_INVALID);
    CHECK(std::string(lop_last_error()).find("slot 1") != std::string::npos);
    int latin = 1;
    REQUIRE(lop_cells_is_latin(2, 1, bad, 2, &latin) == LOP_OK);
    CHECK(latin == 0);

    lop_cells_free(r);
    lop_op_free(direct);
    lop_op_free(f);
    lop_cells_free(composite);
    lop_cells_free(cells);
    lop_op_free(add);
}

namespace {

int count_visits(void* user, const lop_op*)
{
    ++*static_cast<int*>(user);
    return 0;
}

}  // namespace

TEST_CASE("enumeration, census, canonical form")
{
    lop_limits limits;
    lop_limits_default(&limits);
    limits.jobs = 2;
    uint64_t count = 0;
    REQUIRE(lop_enumerate_count(4, 2, &limits, &count) == LOP_OK);
    CHECK(count == 576);
    int visits = 0;
    REQUIRE(lop_enumerate(3, 2, &limits, count_visits, &visits) == LOP_OK);
    CHECK(visits == 12);

    lop_op* r1 = nullptr;
    lop_op* r2 = nullptr;
    REQUIRE(lop_random(5, 2, 42, nullptr, &r1) == LOP_OK);
    REQUIRE(lop_random(5, 2, 42, &limits, &r2) == LOP_OK);
    CHECK(lop_op_equal(r1, r2));

    lop_census* census = nullptr;
    REQUIRE(lop_orbit_census(4, 2, &limits, &census) == LOP_OK);
    CHECK(lop_census_count(census) == 2);
    uint64_t total = 0;
    for (size_t i = 0; i < lop_census_count(census); ++i) {
        const lop_op* rep = nullptr;
        uint64_t size = 0;
        REQUIRE(lop_census_class(census, i, &rep, &size) == LOP_OK);
        total += size;
        lop_op* canon = nullptr;
        REQUIRE(lop_canonical_form(rep, &limits, &canon) == LOP_OK);
        CHECK(lop_op_equal(canon, rep));
        lop_op_free(canon);
    }
    CHECK(total == 576);
    lop_census_free(census);

    lop_op* canon = nullptr;
    CHECK(lop_canonical_form(r1, nullptr, &canon) == LOP_ERR_CEILING);

    const int slots[] = {2, 1, 3};
    const int syms[] = {1, 0, 2, 3, 4, 0, 1, 2, 3, 4, 0, 1, 2, 3, 4};
    lop_op* moved = nullptr;
    REQUIRE(lop_apply_paratopism(r1, slots, syms, &moved) == LOP_OK);
    int latin = 0;
    REQUIRE(lop_op_is_latin(moved, &latin) == LOP_OK);
    CHECK(latin == 1);

    lop_op_free(moved);
    lop_op_free(r1);
    lop_op_free(r2);
}

TEST_CASE("transversals and the delta identity")
{
    lop_op* add = cyclic_square(3);
    lop_cells* cells = nullptr;
    REQUIRE(lop_graph_of(add, &cells) == LOP_OK);
    lop_transversals* t = nullptr;
    REQUIRE(lop_find_transversals(cells, 0, nullptr, &t) == LOP_OK);
    REQUIRE(lop_transversals_count(t) == 3);
    std::vector<int> buf(9);
    REQUIRE(lop_transversals_get(t, 0, buf.data()) == LOP_OK);
    CHECK(buf == std::vector<int>{0, 0, 0, 1, 1, 2, 2, 2, 1});
    int computed = -1, expected = -1, pass = 0, contained = 0;
    REQUIRE(lop_delta_check(3, buf.data(), 3, 3, &computed, &expected, &pass) == LOP_OK);
    CHECK(pass == 1);
    CHECK(expected == 0);
    REQUIRE(lop_transversal_contained(3, buf.data(), 3, 3, cells, &contained) == LOP_OK);
    CHECK(contained == 1);
    uint64_t count = 0;
    REQUIRE(lop_count_transversals(cells, nullptr, &count) == LOP_OK);
    CHECK(count == 3);

    int sum = -1;
    const int tuple[] = {1, 2, 3};
    REQUIRE(lop_alternating_sum(tuple, 3, 5, &sum) == LOP_OK);
    CHECK(sum == 2);

    int* flat = nullptr;
    size_t rows = 0, width = 0;
    const char* text = "0\t0\t0\n1 1 2\n";
    REQUIRE(lop_parse_tuples(text, std::strlen(text), &flat, &rows, &width) == LOP_OK);
    CHECK(rows == 2);
    CHECK(width == 3);
    CHECK(flat[5] == 2);
    lop_ints_free(flat);

    lop_transversals_free(t);
    lop_cells_free(cells);
    lop_op_free(add);
}

TEST_CASE("graph and automorphisms")
{
    lop_op* add = cyclic_square(5);
    lop_cells* cells = nullptr;
    REQUIRE(lop_graph_of(add, &cells) == LOP_OK);
    lop_graph* g = nullptr;
    REQUIRE(lop_graph_build(cells, &g) == LOP_OK);
    lop_graph_summary s{};
    lop_graph_summarize(g, &s);
    CHECK(s.vertices == 25);
    CHECK(s.is_regular == 1);
    CHECK(s.min_degree == 12);
    CHECK(s.min_degree == lop_predicted_degree(5, 2));
    CHECK(s.edges == 25 * 12 / 2);
    size_t len = 0;
    REQUIRE(lop_graph_histogram(g, nullptr, nullptr, 0, &len) == LOP_OK);
    CHECK(len == 1);
    uint32_t u = 0, v = 0;
    REQUIRE(lop_graph_edge(g, 0, &u, &v) == LOP_OK);
    CHECK(u == 0);
    CHECK(v == 1);

    lop_perm_list* autos = nullptr;
    REQUIRE(lop_automorphisms(add, nullptr, &autos) == LOP_OK);
    CHECK(lop_perm_list_count(autos) == 4);
    std::vector<int> p(5);
    REQUIRE(lop_perm_list_get(autos, 1, p.data()) == LOP_OK);
    CHECK(p == std::vector<int>{0, 2, 4, 1, 3});
    int hom = 0;
    REQUIRE(lop_is_homomorphism(p.data(), p.size(), add, add, &hom) == LOP_OK);
    CHECK(hom == 1);

    lop_perm_list_free(autos);
    lop_graph_free(g);
    lop_cells_free(cells);
    lop_op_free(add);
}
