#include "randrank/rational.hpp"

#include <cmath>
#include <sstream>

namespace randrank {

namespace {

// Top 64 bits of |v| plus the exponent needed to rebuild the magnitude.
// Returns mantissa m and exponent e with |v| ~= m * 2^e.
std::pair<double, long> split_magnitude(const BigInt& v) {
    using boost::multiprecision::msb;
    BigInt a = abs(v);
    if (a == 0) return {0.0, 0};
    long bits = static_cast<long>(msb(a)) + 1;
    long shift = bits - 64;
    if (shift > 0) a >>= shift; else shift = 0;
    return {static_cast<double>(static_cast<std::uint64_t>(a)), shift};
}

} // namespace

double to_double(const Rational& q) {
    const BigInt num = numerator(q);
    const BigInt den = denominator(q);
    auto [mn, en] = split_magnitude(num);
    auto [md, ed] = split_magnitude(den);
    if (mn == 0.0) return 0.0;
    double mag = std::ldexp(mn / md, static_cast<int>(en - ed));
    return num < 0 ? -mag : mag;
}

double scaled_to_double(const BigInt& num, long pow2) {
    auto [m, e] = split_magnitude(num);
    if (m == 0.0) return 0.0;
    double mag = std::ldexp(m, static_cast<int>(e - pow2));
    return num < 0 ? -mag : mag;
}

std::string to_fraction_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q) << '/' << denominator(q);
    return os.str();
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace randrank
