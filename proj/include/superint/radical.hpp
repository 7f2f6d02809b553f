#pragma once

// Commutative algebra over three formal square roots.
//
// A RadicalValue is sum_e c_e rho1^e1 rho2^e2 rho3^e3 with e in {0,1}^3.
// Products reduce rho_i^2 to the known square sq[i], so no numeric root is
// ever taken. Component index: bit 0 = rho1, bit 1 = rho2, bit 2 = rho3.

#include <array>
#include <complex>
#include <memory>
#include <string>
#include <utility>

#include "superint/errors.hpp"
#include "superint/scalar.hpp"

namespace superint {

/// Coefficient-type hooks. Numeric scalars use magnitudes; exact types
/// report 0 or 1 so that relative purity tests become exact zero tests.
template <class C>
struct CoeffTraits {
    static C rational(long num, long den) { return C(static_cast<double>(num) / static_cast<double>(den)); }
    static double magnitude(const C& v) { return superint::magnitude(v); }
    // Only a structural zero may be skipped; a dual with zero value can carry a derivative.
    static bool is_zero(const C&) { return false; }
};

template <>
inline bool CoeffTraits<cd>::is_zero(const cd& v) {
    return v == cd(0.0);
}

enum Parity : int {
    kP000 = 0,
    kP1 = 1,
    kP2 = 2,
    kP12 = 3,
    kP3 = 4,
    kP13 = 5,
    kP23 = 6,
    kP123 = 7,
};

inline std::string parity_name(int e) {
    if (e == 0) return "1";
    std::string s;
    for (int i = 0; i < 3; ++i)
        if (e >> i & 1) s += "rho" + std::to_string(i + 1);
    return s;
}

template <class C>
using RadicalSquares = std::array<C, 3>;

template <class C>
class RadicalValue {
public:
    RadicalValue() = default;
    explicit RadicalValue(std::shared_ptr<const RadicalSquares<C>> sq) : sq_(std::move(sq)) {
        comp_.fill(CoeffTraits<C>::rational(0, 1));
    }

    /// coeff * rho^e.
    static RadicalValue monomial(std::shared_ptr<const RadicalSquares<C>> sq, int e, C coeff) {
        RadicalValue v(std::move(sq));
        v.comp_[e] = std::move(coeff);
        return v;
    }

    const C& operator[](int e) const { return comp_[e]; }
    C& operator[](int e) { return comp_[e]; }
    const std::shared_ptr<const RadicalSquares<C>>& squares() const { return sq_; }

    friend RadicalValue operator+(const RadicalValue& u, const RadicalValue& v) {
        RadicalValue out(u.sq_);
        for (int e = 0; e < 8; ++e) out.comp_[e] = u.comp_[e] + v.comp_[e];
        return out;
    }
    friend RadicalValue operator-(const RadicalValue& u, const RadicalValue& v) {
        RadicalValue out(u.sq_);
        for (int e = 0; e < 8; ++e) out.comp_[e] = u.comp_[e] - v.comp_[e];
        return out;
    }
    friend RadicalValue operator-(const RadicalValue& u) {
        RadicalValue out(u.sq_);
        for (int e = 0; e < 8; ++e) out.comp_[e] = -u.comp_[e];
        return out;
    }
    friend RadicalValue operator*(const RadicalValue& u, const RadicalValue& v) {
        const auto& sq = *u.sq_;
        // factor[m] = product of sq[i] over bits i set in m
        std::array<C, 8> factor;
        factor[0] = CoeffTraits<C>::rational(1, 1);
        for (int m = 1; m < 8; ++m) {
            int low = m & -m;
            int i = low == 1 ? 0 : (low == 2 ? 1 : 2);
            factor[m] = factor[m ^ low] * sq[i];
        }
        RadicalValue out(u.sq_);
        for (int a = 0; a < 8; ++a) {
            if (CoeffTraits<C>::is_zero(u.comp_[a])) continue;
            for (int b = 0; b < 8; ++b) {
                if (CoeffTraits<C>::is_zero(v.comp_[b])) continue;
                C term = u.comp_[a] * v.comp_[b];
                if (int both = a & b) term = term * factor[both];
                out.comp_[a ^ b] = out.comp_[a ^ b] + term;
            }
        }
        return out;
    }
    friend RadicalValue operator*(const C& s, const RadicalValue& v) {
        RadicalValue out(v.sq_);
        for (int e = 0; e < 8; ++e) out.comp_[e] = s * v.comp_[e];
        return out;
    }

    /// Index of the largest component and the ratio (sum of the others)/(total).
    std::pair<int, double> dominant() const {
        int best = 0;
        double best_mag = -1.0;
        double total = 0.0;
        for (int e = 0; e < 8; ++e) {
            double m = CoeffTraits<C>::magnitude(comp_[e]);
            total += m;
            if (m > best_mag) {
                best_mag = m;
                best = e;
            }
        }
        double rest = total - best_mag;
        return {best, total > 0.0 ? rest / total : 0.0};
    }

private:
    std::shared_ptr<const RadicalSquares<C>> sq_;
    std::array<C, 8> comp_{};
};

template <class C>
RadicalValue<C> radical_one(const std::shared_ptr<const RadicalSquares<C>>& sq) {
    return RadicalValue<C>::monomial(sq, kP000, CoeffTraits<C>::rational(1, 1));
}

/// rho_i^n for i in {0,1,2}.
template <class C>
RadicalValue<C> radical_power(const std::shared_ptr<const RadicalSquares<C>>& sq, int i, int n) {
    C coeff = CoeffTraits<C>::rational(1, 1);
    for (int j = 0; j < n / 2; ++j) coeff = coeff * (*sq)[i];
    return RadicalValue<C>::monomial(sq, n % 2 ? (1 << i) : kP000, coeff);
}

template <class C>
RadicalValue<C> pow(RadicalValue<C> base, int n) {
    RadicalValue<C> out = radical_one(base.squares());
    while (n > 0) {
        if (n & 1) out = out * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return out;
}

/// (sinh x, cosh x) with c^2 - s^2 = 1 on shell.
template <class C>
struct HyperbolicPair {
    RadicalValue<C> s;
    RadicalValue<C> c;

    /// c*c - s*s, which is 1 for a valid pair.
    RadicalValue<C> identity_value() const { return c * c - s * s; }
};

template <class C>
HyperbolicPair<C> identity_pair(const std::shared_ptr<const RadicalSquares<C>>& sq) {
    return {RadicalValue<C>(sq), radical_one(sq)};
}

/// Pair for n*x, from (c +- s)^n = cosh nx +- sinh nx.
template <class C>
HyperbolicPair<C> compose_multiple(const HyperbolicPair<C>& x, int n) {
    if (n < 0) throw Error("compose_multiple needs n >= 0");
    RadicalValue<C> plus = pow(x.c + x.s, n);
    RadicalValue<C> minus = pow(x.c - x.s, n);
    C half = CoeffTraits<C>::rational(1, 2);
    return {half * (plus - minus), half * (plus + minus)};
}

/// Pair for x + y by the addition formulas.
template <class C>
HyperbolicPair<C> compose_sum(const HyperbolicPair<C>& x, const HyperbolicPair<C>& y) {
    return {x.c * y.s + x.s * y.c, x.c * y.c + x.s * y.s};
}

}  // namespace superint
