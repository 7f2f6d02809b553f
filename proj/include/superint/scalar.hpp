#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "superint/dual.hpp"

namespace superint {

using cd = std::complex<double>;
using D1 = Dual<cd>;
using D2 = Dual<D1>;

/// Innermost complex value of a (possibly nested) dual.
inline cd value_of(const cd& v) { return v; }
template <class T>
cd value_of(const Dual<T>& v) {
    return value_of(v.val);
}

/// |value| of a scalar; used for singularity guards and tolerances.
template <class T>
double magnitude(const T& v) {
    return std::abs(value_of(v));
}

template <class T>
T imag_unit() {
    return T(cd(0.0, 1.0));
}

/// Integer power by repeated squaring; n may be negative.
template <class T>
T ipow(T base, int n) {
    if (n < 0) return T(1.0) / ipow(base, -n);
    T result(1.0);
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

inline constexpr double pi = std::numbers::pi;

}  // namespace superint
