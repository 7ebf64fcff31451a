#include "tourney/tourney.h"

#include "tourney/acyclic.hpp"
#include "tourney/census.hpp"
#include "tourney/edge_scores.hpp"
#include "tourney/error.hpp"
#include "tourney/scan.hpp"
#include "tourney/tournament.hpp"
#include "tourney/verify.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <new>
#include <set>
#include <string>
#include <vector>

struct tny_tournament {
    tourney::Tournament value;
};

struct tny_report {
    tourney::VerifyReport value;
    std::string text;
};

namespace {

thread_local std::string last_error;

struct Overflow : std::exception {};

tny_status fail(tny_status status, std::string message)
{
    last_error = std::move(message);
    return status;
}

// Runs body, translating exceptions into status codes.
template <class Fn>
tny_status guarded(Fn&& body) noexcept
{
    try {
        body();
        return TNY_OK;
    }
    catch (const tourney::Error& e) {
        return fail(static_cast<tny_status>(e.code()), e.what());
    }
    catch (const Overflow&) {
        return fail(TNY_E_OVERFLOW, "exact result does not fit in 64 bits");
    }
    catch (const std::bad_alloc&) {
        return fail(TNY_E_INTERNAL, "out of memory");
    }
    catch (const std::exception& e) {
        return fail(TNY_E_INTERNAL, e.what());
    }
    catch (...) {
        return fail(TNY_E_INTERNAL, "unknown error");
    }
}

std::int64_t to_i64(const tourney::Integer& value)
{
    if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
        throw Overflow{};
    return value.convert_to<std::int64_t>();
}

tny_rational to_c(const tourney::Rational& value)
{
    return {to_i64(boost::multiprecision::numerator(value)), to_i64(boost::multiprecision::denominator(value))};
}

tny_status copy_out(const std::string& text, char* buf, std::size_t cap, std::size_t* needed)
{
    if (needed)
        *needed = text.size() + 1;
    if (!buf || cap < text.size() + 1)
        return fail(TNY_E_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(text.size() + 1) + " bytes");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return TNY_OK;
}

tny_status null_argument()
{
    return fail(TNY_E_NULL_ARGUMENT, "required pointer argument is null");
}

template <class Fn>
tny_status make(tny_tournament** out, Fn&& build) noexcept
{
    if (!out)
        return null_argument();
    return guarded([&] { *out = new tny_tournament{build()}; });
}

} // namespace

extern "C" {

const char* tny_status_name(tny_status status)
{
    switch (status) {
    case TNY_OK: return "OK";
    case TNY_E_OVERFLOW: return "Overflow";
    case TNY_E_NULL_ARGUMENT: return "NullArgument";
    case TNY_E_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case TNY_E_INTERNAL: return "Internal";
    default: return tourney::to_string(static_cast<tourney::ErrorCode>(status));
    }
}

const char* tny_last_error(void)
{
    return last_error.c_str();
}

tny_status tny_from_arcs(uint32_t n, const uint32_t* arcs, size_t arc_count, tny_tournament** out)
{
    if (!arcs && arc_count > 0)
        return null_argument();
    return make(out, [&] {
        std::vector<std::pair<tourney::Vertex, tourney::Vertex>> pairs(arc_count);
        for (std::size_t i = 0; i < arc_count; ++i)
            pairs[i] = {arcs[2 * i], arcs[2 * i + 1]};
        return tourney::Tournament::from_arcs(n, pairs);
    });
}

tny_status tny_parse(const char* text, tny_tournament** out)
{
    if (!text)
        return null_argument();
    return make(out, [&] { return tourney::parse(text); });
}

tny_status tny_transitive(uint32_t n, tny_tournament** out)
{
    return make(out, [&] { return tourney::Tournament::transitive(n); });
}

tny_status tny_circulant(uint32_t n, const uint32_t* offsets, size_t offset_count, tny_tournament** out)
{
    if (!offsets && offset_count > 0)
        return null_argument();
    return make(out, [&] {
        return tourney::Tournament::circulant(n, std::set<tourney::Vertex>(offsets, offsets + offset_count));
    });
}

tny_status tny_quadratic_residue(uint32_t q, tny_tournament** out)
{
    return make(out, [&] { return tourney::Tournament::quadratic_residue(q); });
}

tny_status tny_random(uint32_t n, double p, uint64_t seed, tny_tournament** out)
{
    return make(out, [&] { return tourney::Tournament::random(n, p, seed); });
}

tny_status tny_reverse(const tny_tournament* t, tny_tournament** out)
{
    if (!t)
        return null_argument();
    return make(out, [&] { return t->value.reverse(); });
}

tny_status tny_relabel(const tny_tournament* t, const uint32_t* perm, size_t perm_len, tny_tournament** out)
{
    if (!t || (!perm && perm_len > 0))
        return null_argument();
    return make(out, [&] { return t->value.relabel(std::span<const tourney::Vertex>(perm, perm_len)); });
}

void tny_free(tny_tournament* t)
{
    delete t;
}

tny_status tny_serialize(const tny_tournament* t, char* buf, size_t cap, size_t* needed)
{
    if (!t)
        return null_argument();
    std::string text;
    const tny_status status = guarded([&] { text = tourney::serialize(t->value); });
    return status == TNY_OK ? copy_out(text, buf, cap, needed) : status;
}

uint32_t tny_order(const tny_tournament* t)
{
    return t ? t->value.order() : 0;
}

tny_status tny_beats(const tny_tournament* t, uint32_t u, uint32_t v, int* result)
{
    if (!t || !result)
        return null_argument();
    if (u >= t->value.order() || v >= t->value.order())
        return fail(TNY_E_BAD_VERTEX, "vertex out of range");
    *result = t->value.beats(u, v) ? 1 : 0;
    return TNY_OK;
}

tny_status tny_out_degree(const tny_tournament* t, uint32_t v, uint32_t* result)
{
    if (!t || !result)
        return null_argument();
    if (v >= t->value.order())
        return fail(TNY_E_BAD_VERTEX, "vertex out of range");
    *result = t->value.out_degree(v);
    return TNY_OK;
}

tny_status tny_edge_score_of(const tny_tournament* t, uint32_t u, uint32_t v, tny_edge_score* out)
{
    if (!t || !out)
        return null_argument();
    return guarded([&] {
        const auto e = tourney::edge_score(t->value, u, v);
        *out = {e.a, e.b, e.c, e.d};
    });
}

tny_status tny_c5_exact(const tny_tournament* t, tny_c5_breakdown* out)
{
    if (!t || !out)
        return null_argument();
    return guarded([&] {
        const auto r = tourney::c5_exact(t->value);
        *out = {to_c(r.base), r.s1, r.s2, r.c5};
    });
}

tny_status tny_c3_closed(const tny_tournament* t, int64_t* out)
{
    if (!t || !out)
        return null_argument();
    return guarded([&] { *out = tourney::c3_closed(t->value); });
}

tny_status tny_score_variance(const tny_tournament* t, tny_rational* out)
{
    if (!t || !out)
        return null_argument();
    return guarded([&] { *out = to_c(tourney::score_variance(t->value)); });
}

tny_status tny_lower_bound_c5(const tny_tournament* t, tny_rational* out)
{
    if (!t || !out)
        return null_argument();
    return guarded([&] { *out = to_c(tourney::lower_bound_c5(t->value)); });
}

tny_status tny_subtracted_sum_chain(const tny_tournament* t, tny_chain* out)
{
    if (!t || !out)
        return null_argument();
    return guarded([&] {
        const auto c = tourney::subtracted_sum_chain(t->value);
        *out = {c.s1, c.mid, to_c(c.vertexform)};
    });
}

tny_status tny_upper_bound_c5(uint32_t n, tny_rational* out)
{
    if (!out)
        return null_argument();
    return guarded([&] { *out = to_c(tourney::upper_bound_c5(n)); });
}

tny_status tny_max_c3(uint32_t n, tny_rational* out)
{
    if (!out)
        return null_argument();
    return guarded([&] { *out = to_c(tourney::max_c3(n)); });
}

tny_status tny_max_c4(uint32_t n, tny_rational* out)
{
    if (!out)
        return null_argument();
    return guarded([&] { *out = to_c(tourney::max_c4(n)); });
}

tny_status tny_expected_c5(uint32_t n, tny_rational* out)
{
    if (!out)
        return null_argument();
    return guarded([&] { *out = to_c(tourney::expected_c5(n)); });
}

tny_status tny_count_cycles_bruteforce(const tny_tournament* t, uint32_t k, int64_t* out)
{
    if (!t || !out)
        return null_argument();
    return guarded([&] { *out = tourney::count_k_cycles_bruteforce(t->value, k); });
}

tny_status tny_classify5(const tny_tournament* t, uint32_t* class_index)
{
    if (!t || !class_index)
        return null_argument();
    return guarded([&] { *class_index = static_cast<uint32_t>(tourney::classify5(t->value)); });
}

tny_status tny_class_info(uint32_t class_index, uint32_t* ham_count, char* canonical)
{
    if (class_index >= TNY_CLASS_COUNT)
        return fail(TNY_E_BAD_PARAMETER, "class index out of range");
    return guarded([&] {
        const auto& table = tourney::class_table();
        if (ham_count)
            *ham_count = static_cast<uint32_t>(table.ham_counts[class_index]);
        if (canonical)
            std::memcpy(canonical, table.canonical[class_index].c_str(), 11);
    });
}

tny_status tny_census5(const tny_tournament* t, int64_t counts[TNY_CLASS_COUNT])
{
    if (!t || !counts)
        return null_argument();
    return guarded([&] {
        const auto c = tourney::census5(t->value);
        std::copy(c.begin(), c.end(), counts);
    });
}

tny_status tny_r_quantities(const tny_tournament* t, int64_t r[TNY_R_COUNT])
{
    if (!t || !r)
        return null_argument();
    return guarded([&] {
        const auto q = tourney::r_quantities(t->value);
        std::copy(q.begin(), q.end(), r);
    });
}

tny_status tny_relation_matrix(int64_t m[TNY_R_COUNT * TNY_CLASS_COUNT])
{
    if (!m)
        return null_argument();
    return guarded([&] {
        const auto matrix = tourney::recover_matrix();
        for (std::size_t i = 0; i < TNY_R_COUNT; ++i)
            for (std::size_t j = 0; j < TNY_CLASS_COUNT; ++j)
                m[i * TNY_CLASS_COUNT + j] = matrix[i][j];
    });
}

tny_status tny_count_acyclic(const tny_tournament* t, uint32_t k, int64_t* out)
{
    if (!t || !out)
        return null_argument();
    return guarded([&] { *out = tourney::count_acyclic(t->value, k); });
}

tny_status tny_count_acyclic_recursive(const tny_tournament* t, uint32_t k, int64_t* out)
{
    if (!t || !out)
        return null_argument();
    return guarded([&] { *out = tourney::count_acyclic_recursive(t->value, k); });
}

tny_status tny_f_lower(uint32_t n, uint32_t k, tny_rational* out)
{
    if (!out)
        return null_argument();
    return guarded([&] { *out = to_c(tourney::f_lower(std::int64_t{n}, k)); });
}

tny_status tny_g_expected(uint32_t n, uint32_t k, tny_rational* out)
{
    if (!out)
        return null_argument();
    return guarded([&] { *out = to_c(tourney::g_expected(n, k)); });
}

tny_status tny_verify(const char* suite, uint32_t cases, uint64_t seed, tny_report** out)
{
    if (!suite || !out)
        return null_argument();
    return guarded([&] {
        auto report = tourney::verify(tourney::parse_suite(suite), cases, seed);
        auto text = report.text();
        *out = new tny_report{std::move(report), std::move(text)};
    });
}

int tny_report_passed(const tny_report* report)
{
    return report && report->value.passed() ? 1 : 0;
}

const char* tny_report_text(const tny_report* report)
{
    return report ? report->text.c_str() : "";
}

void tny_report_free(tny_report* report)
{
    delete report;
}

uint64_t tny_scan_seed(uint64_t base_seed, uint64_t index)
{
    return tourney::scan_seed(base_seed, index);
}

tny_status tny_scan_record_compute(uint32_t n, uint64_t seed, tny_scan_record* out)
{
    if (!out)
        return null_argument();
    return guarded([&] {
        const auto r = tourney::scan_record(n, seed);
        *out = {r.seed,
                r.n,
                r.c3,
                r.c4.value_or(-1),
                r.c5,
                r.s1,
                r.s2,
                to_c(r.lower_bound),
                to_c(r.upper_bound),
                to_c(r.score_variance)};
    });
}

const char* tny_scan_csv_header(void)
{
    static const std::string header = tourney::scan_csv_header();
    return header.c_str();
}

tny_status tny_scan_csv_row(uint32_t n, uint64_t seed, char* buf, size_t cap, size_t* needed)
{
    std::string row;
    const tny_status status = guarded([&] { row = tourney::scan_csv_row(tourney::scan_record(n, seed)); });
    return status == TNY_OK ? copy_out(row, buf, cap, needed) : status;
}

tny_status tny_format_rational(tny_rational value, char* buf, size_t cap, size_t* needed)
{
    if (value.den == 0)
        return fail(TNY_E_BAD_PARAMETER, "zero denominator");
    std::string text;
    const tny_status status =
        guarded([&] { text = tourney::format_rational(tourney::Rational(value.num, value.den)); });
    return status == TNY_OK ? copy_out(text, buf, cap, needed) : status;
}

} // extern "C"
