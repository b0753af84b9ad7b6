#pragma once

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qks {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

// k (k-1) ... (k-m+1); empty product for m == 0.
inline Int falling(long long k, int m) {
    Int r = 1;
    for (int i = 0; i < m; ++i) r *= Int(k - i);
    return r;
}

inline Int binomial(long long n, int k) {
    if (k < 0) return 0;
    Int r = falling(n, k);
    return r / factorial(k);
}

// Stirling numbers of the second kind, S(n, k).
inline Int stirling2(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    std::vector<std::vector<Int>> s(n + 1, std::vector<Int>(n + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) s[i][j] = s[i - 1][j - 1] + Int(j) * s[i - 1][j];
    return s[n][k];
}

inline Rat rat_pow(const Rat& a, int e) {
    Rat r = 1, b = a;
    int n = e < 0 ? -e : e;
    for (; n; n >>= 1) {
        if (n & 1) r *= b;
        b *= b;
    }
    if (e < 0) {
        if (r == 0) throw std::domain_error("rat_pow: zero to negative power");
        r = Rat(1) / r;
    }
    return r;
}

} // namespace qks
