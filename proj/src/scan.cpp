#include "tourney/scan.hpp"

#include "tourney/census.hpp"
#include "tourney/edge_scores.hpp"

namespace tourney {

ScanRecord scan_record(Vertex n, std::uint64_t seed)
{
    const Tournament t = Tournament::random(n, 0.5, seed);
    const C5Breakdown c5 = c5_exact(t);
    ScanRecord r;
    r.seed = seed;
    r.n = n;
    r.c3 = c3_closed(t);
    if (n <= scan_c4_cap)
        r.c4 = count_k_cycles_bruteforce(t, 4);
    r.c5 = c5.c5;
    r.s1 = c5.s1;
    r.s2 = c5.s2;
    r.lower_bound = lower_bound_c5(t);
    r.upper_bound = upper_bound_c5(n);
    r.score_variance = score_variance(t);
    return r;
}

std::string scan_csv_header()
{
    return "seed,n,c3,c4,c5,s1,s2,lower_bound,upper_bound,score_variance";
}

std::string scan_csv_row(const ScanRecord& r)
{
    std::string row = std::to_string(r.seed) + "," + std::to_string(r.n) + "," + std::to_string(r.c3) + ",";
    if (r.c4)
        row += std::to_string(*r.c4);
    row += "," + std::to_string(r.c5) + "," + std::to_string(r.s1) + "," + std::to_string(r.s2) + ",";
    row += format_decimal(r.lower_bound) + "," + format_decimal(r.upper_bound) + "," +
           format_decimal(r.score_variance);
    return row;
}

std::string format_decimal(const Rational& value)
{
    Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    const unsigned shift = boost::multiprecision::msb(den);
    if (den != Integer(1) << shift)
        return format_rational(value);

    const bool negative = num < 0;
    if (negative)
        num = -num;
    // num / 2^shift == num * 5^shift / 10^shift
    Integer scaled = num * boost::multiprecision::pow(Integer(5), shift);
    std::string digits = scaled.str();
    if (digits.size() <= shift)
        digits.insert(0, shift - digits.size() + 1, '0');
    digits.insert(digits.size() - shift, ".");
    while (digits.back() == '0')
        digits.pop_back();
    return (negative ? "-" : "") + digits;
}

} // namespace tourney
