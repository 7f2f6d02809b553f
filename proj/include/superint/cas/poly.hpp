#pragma once

// Sparse Laurent polynomials over the Gaussian rationals.
//
// A monomial packs 16 signed exponents into two 64-bit words, one byte per
// variable biased by 64, so monomial products are word additions and the
// canonical term order is plain integer comparison. Exponents stay within
// [-64, 191]; nothing in this library comes close.

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superint/cas/gauss_rat.hpp"

namespace superint::cas {

enum Var : int { X, Y, PX, PY, W, Z, PR, PTH, OM, TAU, A, B, C, E, U, V, kNumVars };

inline const char* var_name(int v) {
    static constexpr const char* names[kNumVars] = {"x",  "y",   "px", "py", "w", "z", "pR", "pth",
                                                    "om", "tau", "a",  "b",  "c", "E", "u",  "v"};
    return names[v];
}

struct Mono {
    static constexpr std::uint64_t kBias = 0x4040404040404040ULL;
    std::uint64_t lo = kBias;
    std::uint64_t hi = kBias;

    int exp(int v) const {
        std::uint64_t word = v < 8 ? lo : hi;
        return static_cast<int>((word >> (8 * (v & 7))) & 0xff) - 64;
    }
    void set(int v, int e) {
        std::uint64_t& word = v < 8 ? lo : hi;
        int shift = 8 * (v & 7);
        word = (word & ~(0xffULL << shift)) | (static_cast<std::uint64_t>(e + 64) << shift);
    }
    bool is_one() const { return lo == kBias && hi == kBias; }

    friend Mono operator*(const Mono& a, const Mono& b) { return {a.lo + b.lo - kBias, a.hi + b.hi - kBias}; }
    friend Mono operator/(const Mono& a, const Mono& b) { return {a.lo - b.lo + kBias, a.hi - b.hi + kBias}; }
    friend bool operator==(const Mono& a, const Mono& b) { return a.lo == b.lo && a.hi == b.hi; }
    friend bool operator<(const Mono& a, const Mono& b) { return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo; }

    static Mono of(std::initializer_list<std::pair<int, int>> exps) {
        Mono m;
        for (auto [v, e] : exps) m.set(v, e);
        return m;
    }
};

struct MonoHash {
    std::size_t operator()(const Mono& m) const noexcept {
        std::uint64_t h = m.lo * 0x9E3779B97F4A7C15ULL ^ (m.hi + 0x632BE59BD9B4E019ULL + (m.lo << 6) + (m.lo >> 2));
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

class Poly {
public:
    struct Term {
        Mono m;
        GaussRat c;
    };

    Poly() = default;
    Poly(GaussRat c) {  // NOLINT: constants convert implicitly
        if (!c.is_zero()) terms_.push_back({Mono{}, std::move(c)});
    }
    Poly(long c) : Poly(GaussRat(c)) {}  // NOLINT

    static Poly var(int v, int e = 1) {
        Mono m;
        m.set(v, e);
        return monomial(m, GaussRat(1));
    }
    static Poly monomial(const Mono& m, GaussRat c) {
        Poly p;
        if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
        return p;
    }
    /// Terms must be sorted and free of zero coefficients.
    static Poly from_sorted(std::vector<Term> terms) {
        Poly p;
        p.terms_ = std::move(terms);
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    GaussRat constant_value() const { return terms_.empty() ? GaussRat(0) : terms_[0].c; }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
    friend Poly operator-(const Poly& a) {
        Poly out = a;
        for (auto& t : out.terms_) t.c = -t.c;
        return out;
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.size() == 1) return b.scaled(a.terms_[0].c, a.terms_[0].m);
        if (b.size() == 1) return a.scaled(b.terms_[0].c, b.terms_[0].m);
        std::unordered_map<Mono, GaussRat, MonoHash> acc;
        acc.reserve(a.size() * b.size() / 2 + 16);
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) acc[s.m * t.m] += s.c * t.c;
        return collect(acc);
    }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    /// c * m * this; order is preserved because every byte shifts equally.
    Poly scaled(const GaussRat& c, const Mono& m = Mono{}) const {
        if (c.is_zero()) return {};
        Poly out;
        out.terms_.reserve(terms_.size());
        bool unit = c.is_one();
        for (const auto& t : terms_) out.terms_.push_back({t.m * m, unit ? t.c : t.c * c});
        return out;
    }

    Poly pow(int n) const {
        Poly result(1);
        Poly base = *this;
        while (n > 0) {
            if (n & 1) result = result * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return result;
    }

    Poly derivative(int v) const {
        Poly out;
        for (const auto& t : terms_) {
            int e = t.m.exp(v);
            if (e == 0) continue;
            Mono m = t.m;
            m.set(v, e - 1);
            out.terms_.push_back({m, t.c * GaussRat(e)});
        }
        return out;
    }

    /// v times d/dv; keeps the support.
    Poly euler(int v) const {
        Poly out;
        for (const auto& t : terms_) {
            int e = t.m.exp(v);
            if (e != 0) out.terms_.push_back({t.m, t.c * GaussRat(e)});
        }
        return out;
    }

    /// Substitutes v := c * u (u = -1 means v := c).
    Poly substitute_linear(int v, const GaussRat& c, int u) const {
        std::unordered_map<Mono, GaussRat, MonoHash> acc;
        std::vector<GaussRat> powers{GaussRat(1)};
        for (const auto& t : terms_) {
            int e = t.m.exp(v);
            Mono m = t.m;
            m.set(v, 0);
            GaussRat factor(1);
            if (e >= 0) {
                while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * c);
                factor = powers[e];
            } else {
                factor = GaussRat(1) / c;
                for (int j = 1; j < -e; ++j) factor = factor / c;
            }
            if (u >= 0) m.set(u, m.exp(u) + e);
            acc[m] += t.c * factor;
        }
        return collect(acc);
    }

    /// Substitutes v := value (a polynomial); v must occur with nonnegative exponents.
    Poly substitute(int v, const Poly& value) const {
        std::vector<Poly> powers{Poly(1)};
        Poly out;
        for (const auto& t : terms_) {
            int e = t.m.exp(v);
            if (e < 0) throw Error("substitute: negative exponent");
            while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
            Mono m = t.m;
            m.set(v, 0);
            out += powers[e].scaled(t.c, m);
        }
        return out;
    }

    int min_exp(int v) const {
        int lo = 0;
        bool first = true;
        for (const auto& t : terms_) {
            int e = t.m.exp(v);
            lo = first ? e : std::min(lo, e);
            first = false;
        }
        return lo;
    }
    int max_exp(int v) const {
        int hi = 0;
        bool first = true;
        for (const auto& t : terms_) {
            int e = t.m.exp(v);
            hi = first ? e : std::max(hi, e);
            first = false;
        }
        return hi;
    }
    bool uses(int v) const {
        for (const auto& t : terms_)
            if (t.m.exp(v) != 0) return true;
        return false;
    }

    /// Largest total degree in the listed variables; 0 for the zero polynomial.
    int degree(std::span<const int> vars) const {
        int best = 0;
        for (const auto& t : terms_) {
            int d = 0;
            for (int v : vars) d += t.m.exp(v);
            best = std::max(best, d);
        }
        return best;
    }
    int degree(std::initializer_list<int> vars) const { return degree(std::span<const int>(vars.begin(), vars.size())); }

    /// Terms grouped by their exponents in `vars`: monomial in vars -> coefficient polynomial.
    std::vector<std::pair<Mono, Poly>> split(std::span<const int> vars) const {
        std::vector<std::pair<Mono, std::vector<Term>>> groups;
        std::unordered_map<Mono, std::size_t, MonoHash> index;
        for (const auto& t : terms_) {
            Mono key, rest = t.m;
            for (int v : vars) {
                key.set(v, t.m.exp(v));
                rest.set(v, 0);
            }
            auto [it, fresh] = index.try_emplace(key, groups.size());
            if (fresh) groups.push_back({key, {}});
            groups[it->second].second.push_back({rest, t.c});
        }
        std::vector<std::pair<Mono, Poly>> out;
        for (auto& [k, ts] : groups) {
            std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
            out.emplace_back(k, Poly::from_sorted(std::move(ts)));
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    std::complex<double> eval(const std::array<std::complex<double>, kNumVars>& vals) const {
        std::complex<double> sum = 0.0;
        for (const auto& t : terms_) {
            std::complex<double> term = t.c.to_complex();
            for (int v = 0; v < kNumVars; ++v) {
                int e = t.m.exp(v);
                if (e != 0) term *= std::pow(vals[v], e);
            }
            sum += term;
        }
        return sum;
    }

    GaussRat eval_exact(const std::array<GaussRat, kNumVars>& vals) const {
        GaussRat sum(0);
        for (const auto& t : terms_) {
            GaussRat term = t.c;
            for (int v = 0; v < kNumVars; ++v) {
                int e = t.m.exp(v);
                for (int j = 0; j < e; ++j) term = term * vals[v];
                for (int j = 0; j < -e; ++j) term = term / vals[v];
            }
            sum += term;
        }
        return sum;
    }

    /// Text form; `names` optionally relabels the variables (one entry per variable).
    std::string str(std::span<const char* const> names = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < terms_.size(); ++k) {
            const auto& t = terms_[k];
            std::string coeff = t.c.str();
            bool compound = sgn(t.c.re()) != 0 && sgn(t.c.im()) != 0;
            std::string mono;
            for (int v = 0; v < kNumVars; ++v) {
                int e = t.m.exp(v);
                if (e == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names.empty() ? var_name(v) : names[v];
                if (e != 1) mono += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
            }
            std::string piece;
            if (mono.empty()) piece = compound ? "(" + coeff + ")" : coeff;
            else if (t.c.is_one()) piece = mono;
            else if (t.c == GaussRat(-1)) piece = "-" + mono;
            else piece = (compound ? "(" + coeff + ")" : coeff) + "*" + mono;
            if (k > 0 && piece[0] != '-') out += " + ";
            else if (k > 0) {
                out += " - ";
                piece = piece.substr(1);
            }
            out += piece;
        }
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (!(a.terms_[k].m == b.terms_[k].m) || a.terms_[k].c != b.terms_[k].c) return false;
        return true;
    }

    GaussRat coeff(const Mono& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Mono& k) { return t.m < k; });
        if (it != terms_.end() && it->m == m) return it->c;
        return GaussRat(0);
    }

private:
    static Poly merge(const Poly& a, const Poly& b, bool subtract) {
        Poly out;
        out.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a.terms_[i].m < b.terms_[j].m)) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (i == a.size() || b.terms_[j].m < a.terms_[i].m) {
                out.terms_.push_back({b.terms_[j].m, subtract ? -b.terms_[j].c : b.terms_[j].c});
                ++j;
            } else {
                GaussRat c = subtract ? a.terms_[i].c - b.terms_[j].c : a.terms_[i].c + b.terms_[j].c;
                if (!c.is_zero()) out.terms_.push_back({a.terms_[i].m, std::move(c)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    static Poly collect(std::unordered_map<Mono, GaussRat, MonoHash>& acc) {
        Poly out;
        out.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) out.terms_.push_back({m, std::move(c)});
        std::sort(out.terms_.begin(), out.terms_.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
        return out;
    }

    std::vector<Term> terms_;
};

}  // namespace superint::cas
