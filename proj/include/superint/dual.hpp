#pragma once

// Forward-mode differentiation by truncated Taylor pairs.
//
// A Dual<T> is v + d*eps with eps^2 = 0. Arithmetic propagates d by the
// Leibniz rule, so evaluating f(Dual{x, 1}) yields {f(x), f'(x)} to machine
// precision. T may itself be a Dual, which gives nested (second-order)
// derivatives for brackets of brackets.

#include <cmath>
#include <complex>
#include <concepts>
#include <type_traits>

namespace superint {

template <class T>
struct Dual;

template <class T>
struct is_dual : std::false_type {};
template <class T>
struct is_dual<Dual<T>> : std::true_type {};

template <class T>
struct Dual {
    T val{};
    T der{};

    constexpr Dual() = default;
    constexpr Dual(T v, T d) : val(std::move(v)), der(std::move(d)) {}

    // Any scalar the value type can be built from is a constant.
    template <class S>
        requires(!is_dual<std::remove_cvref_t<S>>::value && std::constructible_from<T, S>)
    constexpr Dual(S s) : val(T(s)), der(T(0.0)) {}

    constexpr Dual(const Dual&) = default;
    constexpr Dual(Dual&&) = default;
    constexpr Dual& operator=(const Dual&) = default;
    constexpr Dual& operator=(Dual&&) = default;

    static Dual variable(T v) { return Dual(std::move(v), T(1.0)); }

    friend Dual operator+(const Dual& a, const Dual& b) { return {a.val + b.val, a.der + b.der}; }
    friend Dual operator-(const Dual& a, const Dual& b) { return {a.val - b.val, a.der - b.der}; }
    friend Dual operator*(const Dual& a, const Dual& b) {
        return {a.val * b.val, a.der * b.val + a.val * b.der};
    }
    friend Dual operator/(const Dual& a, const Dual& b) {
        T v = a.val / b.val;
        return {v, (a.der - v * b.der) / b.val};
    }
    friend Dual operator-(const Dual& a) { return {-a.val, -a.der}; }
    friend Dual operator+(const Dual& a) { return a; }

    Dual& operator+=(const Dual& o) { return *this = *this + o; }
    Dual& operator-=(const Dual& o) { return *this = *this - o; }
    Dual& operator*=(const Dual& o) { return *this = *this * o; }
    Dual& operator/=(const Dual& o) { return *this = *this / o; }

    friend Dual exp(const Dual& a) {
        using std::exp;
        T e = exp(a.val);
        return {e, a.der * e};
    }
    friend Dual log(const Dual& a) {
        using std::log;
        return {log(a.val), a.der / a.val};
    }
    friend Dual sin(const Dual& a) {
        using std::cos;
        using std::sin;
        return {sin(a.val), a.der * cos(a.val)};
    }
    friend Dual cos(const Dual& a) {
        using std::cos;
        using std::sin;
        return {cos(a.val), -(a.der * sin(a.val))};
    }
    friend Dual sqrt(const Dual& a) {
        using std::sqrt;
        T s = sqrt(a.val);
        return {s, a.der / (T(2.0) * s)};
    }
};

}  // namespace superint
