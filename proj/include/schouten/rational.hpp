#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace schouten {

/// Exact rational scalar used for every symbolic coefficient.
using Q = boost::multiprecision::cpp_rational;
using Z = boost::multiprecision::cpp_int;

inline double to_double(const Q& q) { return q.template convert_to<double>(); }

/// Exact conversion: every finite double is a dyadic rational.
inline Q q_from_double(double x) {
    if (x == 0.0) return Q(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    // 53 mantissa bits make mant * 2^53 integral.
    Z num = Z(static_cast<long long>(std::ldexp(mant, 53)));
    exp -= 53;
    if (exp >= 0) return Q(num << exp);
    return Q(num, Z(1) << (-exp));
}

inline Q q_pow(const Q& base, unsigned e) {
    Q r(1);
    Q b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

inline Q q_factorial(unsigned n) {
    Q r(1);
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Q q_binomial(unsigned n, unsigned k) {
    if (k > n) return Q(0);
    Q r(1);
    for (unsigned i = 0; i < k; ++i) {
        r *= Q(n - i);
        r /= Q(i + 1);
    }
    return r;
}

}  // namespace schouten
