#include "tourney/rational.hpp"

#include "tourney/error.hpp"

namespace tourney {

Integer binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < k)
        return 0;
    if (k > n - k)
        k = n - k;
    Integer result = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

std::string format_rational(const Rational& value)
{
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text)
{
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos)
            return Rational(Integer(text));
        const Integer den(text.substr(slash + 1));
        if (den == 0)
            throw Error(ErrorCode::BadFormat, "zero denominator in '" + text + "'");
        return Rational(Integer(text.substr(0, slash)), den);
    }
    catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e))
            throw;
        throw Error(ErrorCode::BadFormat, "not a rational: '" + text + "'");
    }
}

} // namespace tourney
