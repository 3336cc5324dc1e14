#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rrcensus {

// Exact integer used for all counts, coefficients and dimensions.
using Int = boost::multiprecision::cpp_int;

// C(n, k), exact; zero for k < 0 or k > n.
inline Int binomial(long long n, long long k)
{
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int num = 1;
    for (long long i = 0; i < k; ++i) {
        num *= n - i;
        num /= i + 1; // num == C(n, i+1), division exact
    }
    return num;
}

} // namespace rrcensus
