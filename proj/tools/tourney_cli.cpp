// tourney: command-line frontend over the tourney C API.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include "tourney/tourney.h"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int exit_failure_verify = 1;
constexpr int exit_usage = 2;

// Brute-force cycle counting enumerates C(n,k) (k-1)! orderings.
constexpr uint32_t brute_order_cap = 64;
constexpr uint32_t census_order_cap = 100;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TournamentDeleter {
    void operator()(tny_tournament* t) const { tny_free(t); }
};
using TournamentPtr = std::unique_ptr<tny_tournament, TournamentDeleter>;

void check(tny_status status)
{
    if (status != TNY_OK)
        throw UsageError(std::string(tny_status_name(status)) + ": " + tny_last_error());
}

std::string text(tny_rational r)
{
    char buf[64];
    check(tny_format_rational(r, buf, sizeof buf, nullptr));
    return buf;
}

TournamentPtr read_tournament(const std::string& path)
{
    std::string input;
    if (path.empty() || path == "-") {
        input.assign(std::istreambuf_iterator<char>(std::cin), {});
    }
    else {
        std::ifstream in(path);
        if (!in)
            throw UsageError("cannot open '" + path + "'");
        input.assign(std::istreambuf_iterator<char>(in), {});
    }
    tny_tournament* t = nullptr;
    check(tny_parse(input.c_str(), &t));
    return TournamentPtr(t);
}

std::string serialize(const tny_tournament* t)
{
    size_t needed = 0;
    tny_serialize(t, nullptr, 0, &needed);
    std::string buf(needed, '\0');
    check(tny_serialize(t, buf.data(), buf.size(), nullptr));
    buf.pop_back();
    return buf;
}

unsigned worker_count()
{
    if (const char* env = std::getenv("TOURNEY_THREADS")) {
        const long value = std::strtol(env, nullptr, 10);
        if (value > 0)
            return static_cast<unsigned>(value);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct GenOptions {
    std::string kind;
    uint32_t n = 0;
    double p = 0.5;
    uint64_t seed = 0;
    std::vector<uint32_t> offsets;
};

int run_gen(const GenOptions& o)
{
    tny_tournament* t = nullptr;
    if (o.kind == "random")
        check(tny_random(o.n, o.p, o.seed, &t));
    else if (o.kind == "transitive")
        check(tny_transitive(o.n, &t));
    else if (o.kind == "circulant")
        check(tny_circulant(o.n, o.offsets.data(), o.offsets.size(), &t));
    else
        check(tny_quadratic_residue(o.n, &t));
    TournamentPtr owned(t);
    std::cout << serialize(t) << "\n";
    return 0;
}

int run_count(uint32_t k, const std::string& method, const std::string& in)
{
    const TournamentPtr t = read_tournament(in);
    int64_t count = 0;
    if (method == "formula") {
        if (k == 5) {
            tny_c5_breakdown b;
            check(tny_c5_exact(t.get(), &b));
            count = b.c5;
        }
        else if (k == 3) {
            check(tny_c3_closed(t.get(), &count));
        }
        else {
            throw UsageError("--method formula supports k = 3 or 5");
        }
    }
    else {
        if (k < 3 || k > 5)
            throw UsageError("--method brute supports k = 3, 4 or 5");
        if (tny_order(t.get()) > brute_order_cap)
            throw UsageError("--method brute is limited to n <= " + std::to_string(brute_order_cap));
        check(tny_count_cycles_bruteforce(t.get(), k, &count));
    }
    std::cout << count << "\n";
    return 0;
}

int run_bounds(const std::string& in)
{
    const TournamentPtr t = read_tournament(in);
    const uint32_t n = tny_order(t.get());
    tny_c5_breakdown b;
    tny_rational lower, upper, expected, variance, m3, m4;
    int64_t c3 = 0;
    check(tny_c5_exact(t.get(), &b));
    check(tny_lower_bound_c5(t.get(), &lower));
    check(tny_upper_bound_c5(n, &upper));
    check(tny_expected_c5(n, &expected));
    check(tny_score_variance(t.get(), &variance));
    check(tny_c3_closed(t.get(), &c3));
    check(tny_max_c3(n, &m3));
    check(tny_max_c4(n, &m4));

    std::cout << "n: " << n << "\n"
              << "c5: " << b.c5 << "\n"
              << "s1: " << b.s1 << "\n"
              << "s2: " << b.s2 << "\n"
              << "expected_c5: " << text(expected) << "\n"
              << "lower_bound_c5: " << text(lower) << "\n"
              << "upper_bound_c5: " << text(upper) << "\n"
              << "score_variance: " << text(variance) << "\n";
    if (n >= 3) {
        tny_chain chain;
        check(tny_subtracted_sum_chain(t.get(), &chain));
        std::cout << "mid: " << chain.mid << "\n"
                  << "vertexform: " << text(chain.vertexform) << "\n";
    }
    std::cout << "c3: " << c3 << "\n"
              << "max_c3: " << text(m3) << "\n"
              << "max_c4: " << text(m4) << "\n";
    return 0;
}

int run_census(const std::string& in)
{
    const TournamentPtr t = read_tournament(in);
    if (tny_order(t.get()) > census_order_cap)
        throw UsageError("census is limited to n <= " + std::to_string(census_order_cap));
    int64_t counts[TNY_CLASS_COUNT];
    check(tny_census5(t.get(), counts));
    int64_t total = 0;
    for (uint32_t j = 0; j < TNY_CLASS_COUNT; ++j) {
        uint32_t ham = 0;
        char canonical[11];
        check(tny_class_info(j, &ham, canonical));
        std::cout << "class " << j << " ham=" << ham << " canonical=" << canonical << " count=" << counts[j] << "\n";
        total += counts[j];
    }
    std::cout << "total " << total << "\n";
    return 0;
}

int run_acyclic(uint32_t k, const std::string& in)
{
    const TournamentPtr t = read_tournament(in);
    const uint32_t n = tny_order(t.get());
    int64_t count = 0, recursive = 0;
    tny_rational f, g;
    check(tny_count_acyclic(t.get(), k, &count));
    check(tny_count_acyclic_recursive(t.get(), k, &recursive));
    check(tny_f_lower(n, k, &f));
    check(tny_g_expected(n, k, &g));
    std::cout << "count: " << count << "\n"
              << "count_recursive: " << recursive << "\n"
              << "f_lower: " << text(f) << "\n"
              << "g_expected: " << text(g) << "\n";
    return 0;
}

int run_verify(const std::string& suite, uint32_t cases, uint64_t seed)
{
    tny_report* report = nullptr;
    check(tny_verify(suite.c_str(), cases, seed, &report));
    const bool passed = tny_report_passed(report);
    std::cout << tny_report_text(report);
    std::cout << "verify " << suite << " cases=" << cases << " seed=" << seed << ": "
              << (passed ? "passed" : "FAILED") << "\n";
    tny_report_free(report);
    return passed ? 0 : exit_failure_verify;
}

int run_scan(uint32_t n, uint64_t samples, uint64_t seed, const std::string& out_path)
{
    if (n > TNY_MAX_ORDER)
        throw UsageError("--n exceeds " + std::to_string(TNY_MAX_ORDER));
    std::vector<std::string> rows(samples);
    std::vector<tny_status> status(samples, TNY_OK);
    std::atomic<uint64_t> next{0};
    auto work = [&] {
        for (uint64_t i = next++; i < samples; i = next++) {
            size_t needed = 0;
            const uint64_t row_seed = tny_scan_seed(seed, i);
            char buf[512];
            status[i] = tny_scan_csv_row(n, row_seed, buf, sizeof buf, &needed);
            if (status[i] == TNY_OK)
                rows[i] = buf;
        }
    };
    std::vector<std::thread> pool;
    const unsigned workers = static_cast<unsigned>(std::min<uint64_t>(worker_count(), std::max<uint64_t>(samples, 1)));
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(work);
    for (auto& th : pool)
        th.join();
    for (tny_status s : status)
        if (s != TNY_OK)
            throw UsageError(std::string("scan failed: ") + tny_status_name(s));

    std::ofstream file;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path, std::ios::binary);
        if (!file)
            throw UsageError("cannot write '" + out_path + "'");
    }
    std::ostream& out = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
    out << tny_scan_csv_header() << "\n";
    for (const auto& row : rows)
        out << row << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Tournament cycle counting, bounds and subtournament census"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a tournament in <n>:<bits> form");
    gen_cmd->add_option("--kind", gen.kind, "random, transitive, circulant or qr")
        ->required()
        ->check(CLI::IsMember({"random", "transitive", "circulant", "qr"}));
    gen_cmd->add_option("--n", gen.n, "Vertex count (the prime q for qr)")->required();
    gen_cmd->add_option("--p", gen.p, "Probability of i->j for i<j (random)")->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "Seed (random)")->capture_default_str();
    gen_cmd->add_option("--offsets", gen.offsets, "Comma separated offsets (circulant)")->delimiter(',');

    uint32_t count_k = 0;
    std::string method = "formula";
    std::string in;
    auto* count_cmd = app.add_subcommand("count", "Count directed k-cycles");
    count_cmd->add_option("--k", count_k, "Cycle length")->required();
    count_cmd->add_option("--method", method, "formula (k=3,5) or brute (k=3,4,5)")
        ->check(CLI::IsMember({"formula", "brute"}))
        ->capture_default_str();
    count_cmd->add_option("--in", in, "Input file (default stdin)");

    auto* bounds_cmd = app.add_subcommand("bounds", "5-cycle count with its lower, upper and expected values");
    bounds_cmd->add_option("--in", in, "Input file (default stdin)");

    auto* census_cmd = app.add_subcommand("census", "Counts of the 12 classes of 5-vertex subtournaments");
    census_cmd->add_option("--in", in, "Input file (default stdin)");

    uint32_t acyclic_k = 0;
    auto* acyclic_cmd = app.add_subcommand("acyclic", "Transitive k-subtournaments against f(n,k) and g(n,k)");
    acyclic_cmd->add_option("--k", acyclic_k, "Subtournament size")->required()->check(CLI::PositiveNumber);
    acyclic_cmd->add_option("--in", in, "Input file (default stdin)");

    std::string suite = "all";
    uint32_t cases = 100;
    uint64_t verify_seed = 1;
    auto* verify_cmd = app.add_subcommand("verify", "Run a property suite on random tournaments");
    verify_cmd->add_option("--suite", suite, "identities, matrix, acyclic or all")
        ->check(CLI::IsMember({"identities", "matrix", "acyclic", "all"}))
        ->capture_default_str();
    verify_cmd->add_option("--cases", cases, "Random instances per property")->capture_default_str();
    verify_cmd->add_option("--seed", verify_seed, "Seed")->capture_default_str();

    uint32_t scan_n = 0;
    uint64_t samples = 100;
    uint64_t scan_seed = 0;
    std::string out;
    auto* scan_cmd = app.add_subcommand("scan", "Monte-Carlo CSV of random tournament statistics");
    scan_cmd->add_option("--n", scan_n, "Vertex count")->required();
    scan_cmd->add_option("--samples", samples, "Number of rows")->capture_default_str();
    scan_cmd->add_option("--seed", scan_seed, "Seed of the first row")->capture_default_str();
    scan_cmd->add_option("--out", out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*gen_cmd)
            return run_gen(gen);
        if (*count_cmd)
            return run_count(count_k, method, in);
        if (*bounds_cmd)
            return run_bounds(in);
        if (*census_cmd)
            return run_census(in);
        if (*acyclic_cmd)
            return run_acyclic(acyclic_k, in);
        if (*verify_cmd)
            return run_verify(suite, cases, verify_seed);
        if (*scan_cmd)
            return run_scan(scan_n, samples, scan_seed, out);
    }
    catch (const UsageError& e) {
        std::cerr << "tourney: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
