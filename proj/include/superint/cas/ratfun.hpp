#pragma once

// Rational functions N / prod_j A_j^e_j, N a Laurent polynomial and A_j one
// of a fixed set of linear atoms. Every denominator met by the constants of
// both families factors over this set (x^2 - y^2, x^2 + y^2, cos^2 k th and
// sin^2 k th in the exponential chart), so canonical form reduces to
// cancelling atoms against the numerator, and a value is zero iff its
// numerator is.

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "superint/cas/poly.hpp"

namespace superint::cas {

struct Atom {
    int v;      // leading variable
    int u;      // partner variable, -1 for a constant atom
    GaussRat c; // atom = v - c*u  or  v - c
    const char* name;
};

inline constexpr int kNumAtoms = 6;

inline const std::array<Atom, kNumAtoms>& atoms() {
    static const std::array<Atom, kNumAtoms> table{{
        {X, Y, GaussRat(1), "(x-y)"},
        {X, Y, GaussRat(-1), "(x+y)"},
        {X, Y, GaussRat::i(), "(x-i*y)"},
        {X, Y, -GaussRat::i(), "(x+i*y)"},
        {Z, -1, GaussRat(1), "(z-1)"},
        {Z, -1, GaussRat(-1), "(z+1)"},
    }};
    return table;
}

inline Poly atom_poly(int j) {
    const Atom& a = atoms()[j];
    Poly p = Poly::var(a.v);
    if (a.u >= 0) return p - Poly::var(a.u).scaled(a.c);
    return p - Poly(a.c);
}

inline bool atom_divides(const Poly& n, int j) {
    const Atom& a = atoms()[j];
    return n.substitute_linear(a.v, a.c, a.u).is_zero();
}

/// Exact quotient n / atom_j; n must be divisible.
inline Poly atom_divide(const Poly& n, int j) {
    const Atom& a = atoms()[j];
    int shift = n.min_exp(a.v);
    std::array<int, 1> vv{a.v};
    auto groups = n.split(vv);  // sorted ascending in the exponent of v
    std::vector<std::pair<int, Poly>> by_deg;
    for (auto& [m, p] : groups) by_deg.emplace_back(m.exp(a.v) - shift, std::move(p));
    int top = by_deg.empty() ? 0 : by_deg.back().first;
    std::vector<Poly> coeff(top + 1);
    for (auto& [d, p] : by_deg) coeff[d] = std::move(p);
    Mono um;
    if (a.u >= 0) um.set(a.u, 1);
    // n = (v - c u) q: q_{d-1} = n_d + c u q_d
    std::vector<Poly> q(top + 1);
    for (int d = top; d >= 1; --d) q[d - 1] = coeff[d] + q[d].scaled(a.c, um);
    Poly out;
    for (int d = 0; d < top; ++d) {
        if (q[d].is_zero()) continue;
        Mono vm;
        vm.set(a.v, d + shift);
        out += q[d].scaled(GaussRat(1), vm);
    }
    return out;
}

class RatFun {
public:
    using Den = std::array<std::int8_t, kNumAtoms>;

    RatFun() = default;
    RatFun(Poly num) : num_(std::move(num)) {}  // NOLINT: polynomials convert implicitly
    RatFun(GaussRat c) : num_(std::move(c)) {}  // NOLINT
    RatFun(long c) : num_(GaussRat(c)) {}       // NOLINT

    static RatFun make(Poly num, Den den) {
        RatFun r;
        r.num_ = std::move(num);
        r.den_ = den;
        r.reduce();
        return r;
    }
    static RatFun var(int v, int e = 1) { return RatFun(Poly::var(v, e)); }
    /// 1 / atom_j^power.
    static RatFun atom_inverse(int j, int power = 1) {
        RatFun r(Poly(1));
        r.den_[j] = static_cast<std::int8_t>(power);
        return r;
    }

    const Poly& num() const { return num_; }
    const Den& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const {
        for (auto e : den_)
            if (e != 0) return false;
        return true;
    }
    bool is_constant() const { return is_polynomial() && num_.is_constant(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) { return combine(a, b, false); }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return combine(a, b, true); }
    friend RatFun operator-(const RatFun& a) {
        RatFun r = a;
        r.num_ = -r.num_;
        return r;
    }
    RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
    RatFun& operator-=(const RatFun& b) { return *this = *this - b; }

    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        if (a.is_zero() || b.is_zero()) return {};
        RatFun r;
        r.num_ = a.num_ * b.num_;
        bool any = false;
        for (int j = 0; j < kNumAtoms; ++j) {
            r.den_[j] = static_cast<std::int8_t>(a.den_[j] + b.den_[j]);
            // cancellation needs an atom factor on one side and the atom below the other
            any = any || (a.den_[j] > 0 && b.den_[j] == 0) || (b.den_[j] > 0 && a.den_[j] == 0);
        }
        if (any) r.reduce();
        return r;
    }
    RatFun& operator*=(const RatFun& b) { return *this = *this * b; }

    /// Division; the divisor's numerator must be a monomial times atoms.
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

    RatFun inverse() const {
        if (is_zero()) throw Error("division by zero rational function");
        Poly n = num_;
        Den extra{};
        for (int j = 0; j < kNumAtoms; ++j)
            while (n.size() > 1 && atom_divides(n, j)) {
                n = atom_divide(n, j);
                ++extra[j];
            }
        if (n.size() != 1)
            throw Error("cannot invert " + num_.str() + ": numerator does not factor over the atom set");
        const auto& t = n.terms()[0];
        Poly inv = Poly::monomial(Mono{} / t.m, GaussRat(1) / t.c);
        for (int j = 0; j < kNumAtoms; ++j)
            if (den_[j] > 0) inv = inv * atom_poly(j).pow(den_[j]);
        RatFun r;
        r.num_ = std::move(inv);
        r.den_ = extra;
        r.reduce();
        return r;
    }

    RatFun pow(int n) const {
        if (n < 0) return inverse().pow(-n);
        RatFun result(1);
        RatFun base = *this;
        while (n > 0) {
            if (n & 1) result = result * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return result;
    }

    RatFun scaled(const GaussRat& c) const {
        RatFun r = *this;
        r.num_ = r.num_.scaled(c);
        if (c.is_zero()) r.den_ = {};
        return r;
    }

    RatFun derivative(int v) const {
        // d(N/D) = (N' P - N sum_j e_j A_j' P/A_j) / (D P), P = product of the atoms that depend on v
        std::vector<int> live;
        for (int j = 0; j < kNumAtoms; ++j) {
            const Atom& a = atoms()[j];
            if (den_[j] > 0 && (a.v == v || a.u == v)) live.push_back(j);
        }
        Poly dn = num_.derivative(v);
        if (live.empty()) {
            RatFun r;
            r.num_ = std::move(dn);
            r.den_ = den_;
            r.reduce();
            return r;
        }
        Poly p(1);
        for (int j : live) p = p * atom_poly(j);
        Poly out = dn * p;
        for (int j : live) {
            const Atom& a = atoms()[j];
            GaussRat da = a.v == v ? GaussRat(1) : -a.c;
            Poly rest(1);
            for (int m : live)
                if (m != j) rest = rest * atom_poly(m);
            out -= (num_ * rest).scaled(da * GaussRat(den_[j]));
        }
        RatFun r;
        r.num_ = std::move(out);
        r.den_ = den_;
        for (int j : live) ++r.den_[j];
        r.reduce();
        return r;
    }

    /// v times d/dv.
    RatFun euler(int v) const { return derivative(v) * RatFun::var(v); }

    /// Substitutes v := value; value must be a polynomial and v must not occur in any atom.
    RatFun substitute(int v, const Poly& value) const {
        for (int j = 0; j < kNumAtoms; ++j)
            if (den_[j] > 0 && (atoms()[j].v == v || atoms()[j].u == v))
                throw Error("substitute: variable occurs in a denominator atom");
        return make(num_.substitute(v, value), den_);
    }

    bool uses(int v) const {
        if (num_.uses(v)) return true;
        for (int j = 0; j < kNumAtoms; ++j)
            if (den_[j] > 0 && (atoms()[j].v == v || atoms()[j].u == v)) return true;
        return false;
    }

    std::complex<double> eval(const std::array<std::complex<double>, kNumVars>& vals) const {
        std::complex<double> d = 1.0;
        for (int j = 0; j < kNumAtoms; ++j) {
            if (den_[j] == 0) continue;
            const Atom& a = atoms()[j];
            std::complex<double> av = vals[a.v] - a.c.to_complex() * (a.u >= 0 ? vals[a.u] : 1.0);
            d *= std::pow(av, static_cast<int>(den_[j]));
        }
        return num_.eval(vals) / d;
    }

    GaussRat eval_exact(const std::array<GaussRat, kNumVars>& vals) const {
        GaussRat d(1);
        for (int j = 0; j < kNumAtoms; ++j) {
            const Atom& a = atoms()[j];
            GaussRat av = vals[a.v] - a.c * (a.u >= 0 ? vals[a.u] : GaussRat(1));
            for (int e = 0; e < den_[j]; ++e) d = d * av;
        }
        return num_.eval_exact(vals) / d;
    }

    std::string str() const {
        std::string d;
        for (int j = 0; j < kNumAtoms; ++j) {
            if (den_[j] == 0) continue;
            if (!d.empty()) d += "*";
            d += atoms()[j].name;
            if (den_[j] != 1) d += "^" + std::to_string(den_[j]);
        }
        if (d.empty()) return num_.str();
        return "(" + num_.str() + ")/(" + d + ")";
    }

    friend bool operator==(const RatFun& a, const RatFun& b) { return a.den_ == b.den_ && a.num_ == b.num_; }

    /// This value written over `target` (componentwise >= den()): the numerator it then has.
    Poly numerator_over(const Den& target) const {
        Poly n = num_;
        for (int j = 0; j < kNumAtoms; ++j) {
            int extra = target[j] - den_[j];
            if (extra < 0) throw Error("numerator_over: target denominator too small");
            if (extra > 0) n = n * atom_poly(j).pow(extra);
        }
        return n;
    }

private:
    static RatFun combine(const RatFun& a, const RatFun& b, bool subtract) {
        if (a.den_ == b.den_) {
            RatFun r;
            r.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
            r.den_ = a.den_;
            r.reduce();
            return r;
        }
        Den d{};
        for (int j = 0; j < kNumAtoms; ++j) d[j] = std::max(a.den_[j], b.den_[j]);
        Poly na = a.numerator_over(d);
        Poly nb = b.numerator_over(d);
        RatFun r;
        r.num_ = subtract ? na - nb : na + nb;
        r.den_ = d;
        r.reduce();
        return r;
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = {};
            return;
        }
        for (int j = 0; j < kNumAtoms; ++j)
            while (den_[j] > 0 && atom_divides(num_, j)) {
                num_ = atom_divide(num_, j);
                --den_[j];
            }
    }

    Poly num_;
    Den den_{};
};

using VarValues = std::array<std::complex<double>, kNumVars>;

}  // namespace superint::cas
