// Exercises the exported C surface of the shared library.
#include "tourney/tourney.h"

#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

namespace {

std::string serialize(const tny_tournament* t)
{
    size_t needed = 0;
    REQUIRE(tny_serialize(t, nullptr, 0, &needed) == TNY_E_BUFFER_TOO_SMALL);
    std::string buf(needed, '\0');
    REQUIRE(tny_serialize(t, buf.data(), buf.size(), nullptr) == TNY_OK);
    return buf.c_str();
}

} // namespace

TEST_SUITE("capi") {

TEST_CASE("construction, serialization and errors")
{
    const uint32_t arcs[] = {0, 1, 1, 2, 2, 0};
    tny_tournament* cycle = nullptr;
    REQUIRE(tny_from_arcs(3, arcs, 3, &cycle) == TNY_OK);
    CHECK(serialize(cycle) == "3:101");
    CHECK(tny_order(cycle) == 3);
    int b = 0;
    CHECK(tny_beats(cycle, 2, 0, &b) == TNY_OK);
    CHECK(b == 1);
    CHECK(tny_beats(cycle, 3, 0, &b) == TNY_E_BAD_VERTEX);

    const uint32_t conflicting[] = {0, 1, 1, 0, 1, 2, 2, 0};
    tny_tournament* bad = nullptr;
    CHECK(tny_from_arcs(3, conflicting, 4, &bad) == TNY_E_CONFLICTING_ARC);
    CHECK(bad == nullptr);
    CHECK(std::strlen(tny_last_error()) > 0);
    CHECK(tny_parse("4:101", &bad) == TNY_E_LENGTH_MISMATCH);
    CHECK(tny_parse("3:1?1", &bad) == TNY_E_BAD_FORMAT);
    CHECK(tny_quadratic_residue(5, &bad) == TNY_E_BAD_PARAMETER);
    const uint32_t both[] = {1, 4};
    CHECK(tny_circulant(5, both, 2, &bad) == TNY_E_NOT_A_TOURNAMENT);
    CHECK(tny_parse(nullptr, &bad) == TNY_E_NULL_ARGUMENT);
    CHECK(std::string(tny_status_name(TNY_E_NOT_AN_ARC)) == "NotAnArc");

    tny_tournament* rev = nullptr;
    REQUIRE(tny_reverse(cycle, &rev) == TNY_OK);
    CHECK(serialize(rev) == "3:010");
    const uint32_t dup[] = {0, 0, 1};
    CHECK(tny_relabel(cycle, dup, 3, &bad) == TNY_E_BAD_PERMUTATION);

    tny_free(rev);
    tny_free(cycle);
    tny_free(nullptr);
}

TEST_CASE("cycle counts, scores and bounds")
{
    const uint32_t offsets[] = {1, 2};
    tny_tournament* t = nullptr;
    REQUIRE(tny_circulant(5, offsets, 2, &t) == TNY_OK);

    tny_edge_score e;
    REQUIRE(tny_edge_score_of(t, 0, 1, &e) == TNY_OK);
    CHECK(e.a == 1);
    CHECK(e.b == 1);
    CHECK(e.c == 0);
    CHECK(e.d == 1);
    CHECK(tny_edge_score_of(t, 1, 0, &e) == TNY_E_NOT_AN_ARC);

    tny_c5_breakdown c5;
    REQUIRE(tny_c5_exact(t, &c5) == TNY_OK);
    CHECK(c5.c5 == 2);
    CHECK(c5.s1 == 10);
    CHECK(c5.s2 == 10);
    CHECK(c5.base.num == 3);
    CHECK(c5.base.den == 4);

    int64_t count = 0;
    CHECK(tny_c3_closed(t, &count) == TNY_OK);
    CHECK(count == 5);
    CHECK(tny_count_cycles_bruteforce(t, 4, &count) == TNY_OK);
    CHECK(count == 5);

    tny_rational r;
    CHECK(tny_lower_bound_c5(t, &r) == TNY_OK);
    CHECK(r.num == -3);
    CHECK(r.den == 1);
    CHECK(tny_upper_bound_c5(7, &r) == TNY_OK);
    CHECK(r.num == 777);
    CHECK(r.den == 16);
    CHECK(tny_max_c3(6, &r) == TNY_OK);
    CHECK(r.num == 8);
    CHECK(tny_max_c4(5, &r) == TNY_OK);
    CHECK(r.num == 5);
    CHECK(tny_expected_c5(10, &r) == TNY_OK);
    CHECK(r.num == 189);
    CHECK(tny_score_variance(t, &r) == TNY_OK);
    CHECK(r.num == 0);

    tny_chain chain;
    CHECK(tny_subtracted_sum_chain(t, &chain) == TNY_OK);
    CHECK(chain.s1 == 10);
    CHECK(chain.mid == 30);
    CHECK(chain.vertexform.num == 30);

    char text[32];
    size_t needed = 0;
    CHECK(tny_format_rational({-6, 4}, text, sizeof text, &needed) == TNY_OK);
    CHECK(std::string(text) == "-3/2");
    CHECK(needed == 5);
    CHECK(tny_format_rational({1, 0}, text, sizeof text, nullptr) == TNY_E_BAD_PARAMETER);

    tny_free(t);
}

TEST_CASE("census, matrix and acyclic counts")
{
    const uint32_t offsets[] = {1, 2};
    tny_tournament* t = nullptr;
    REQUIRE(tny_circulant(5, offsets, 2, &t) == TNY_OK);

    uint32_t cls = 0, ham = 0;
    char canonical[11];
    REQUIRE(tny_classify5(t, &cls) == TNY_OK);
    REQUIRE(tny_class_info(cls, &ham, canonical) == TNY_OK);
    CHECK(ham == 2);
    CHECK(std::strlen(canonical) == 10);
    CHECK(tny_class_info(12, &ham, canonical) == TNY_E_BAD_PARAMETER);

    int64_t counts[TNY_CLASS_COUNT];
    REQUIRE(tny_census5(t, counts) == TNY_OK);
    CHECK(counts[cls] == 1);

    int64_t r[TNY_R_COUNT];
    REQUIRE(tny_r_quantities(t, r) == TNY_OK);
    CHECK(r[12] == 1);
    CHECK(r[13] == 2);

    std::vector<int64_t> m(TNY_R_COUNT * TNY_CLASS_COUNT);
    REQUIRE(tny_relation_matrix(m.data()) == TNY_OK);
    for (int j = 0; j < TNY_CLASS_COUNT; ++j)
        CHECK(m[12 * TNY_CLASS_COUNT + j] == 1);
    for (int i = 0; i < TNY_R_COUNT; ++i)
        CHECK(m[i * TNY_CLASS_COUNT + cls] == r[i]);

    int64_t acyclic = 0;
    CHECK(tny_count_acyclic(t, 3, &acyclic) == TNY_OK);
    CHECK(acyclic == 5);
    CHECK(tny_count_acyclic_recursive(t, 3, &acyclic) == TNY_OK);
    CHECK(acyclic == 5);
    CHECK(tny_count_acyclic(t, 0, &acyclic) == TNY_E_BAD_PARAMETER);

    tny_rational f, g;
    CHECK(tny_f_lower(5, 3, &f) == TNY_OK);
    CHECK(f.num == 5);
    CHECK(tny_g_expected(5, 3, &g) == TNY_OK);
    CHECK(g.num == 15);
    CHECK(g.den == 2);
    // 4096^13 / 2^78 does not fit in 64 bits
    CHECK(tny_g_expected(4096, 13, &g) == TNY_E_OVERFLOW);

    tny_tournament* small = nullptr;
    REQUIRE(tny_transitive(4, &small) == TNY_OK);
    CHECK(tny_classify5(small, &cls) == TNY_E_WRONG_ORDER);
    tny_free(small);
    tny_free(t);
}

TEST_CASE("verify and scan")
{
    tny_report* report = nullptr;
    REQUIRE(tny_verify("matrix", 10, 3, &report) == TNY_OK);
    CHECK(tny_report_passed(report) == 1);
    CHECK(std::string(tny_report_text(report)).find("ok   matrix-row-relation") != std::string::npos);
    tny_report_free(report);
    CHECK(tny_verify("nonsense", 10, 3, &report) == TNY_E_BAD_PARAMETER);

    tny_scan_record rec;
    REQUIRE(tny_scan_record_compute(10, tny_scan_seed(7, 0), &rec) == TNY_OK);
    CHECK(rec.n == 10);
    CHECK(rec.seed == 7);
    CHECK(rec.c4 >= 0);
    tny_tournament* t = nullptr;
    REQUIRE(tny_random(10, 0.5, 7, &t) == TNY_OK);
    tny_c5_breakdown b;
    REQUIRE(tny_c5_exact(t, &b) == TNY_OK);
    CHECK(rec.c5 == b.c5);
    tny_free(t);

    REQUIRE(tny_scan_record_compute(20, 1, &rec) == TNY_OK);
    CHECK(rec.c4 == -1);

    char row[256];
    REQUIRE(tny_scan_csv_row(10, 7, row, sizeof row, nullptr) == TNY_OK);
    CHECK(std::string(row).rfind("7,10,", 0) == 0);
    CHECK(std::string(tny_scan_csv_header()).rfind("seed,n,", 0) == 0);
}

}
