#pragma once

// Linear differential operators sum_{i,j} f_ij(x, y) d_x^i d_y^j with
// rational-function coefficients. One-variable operators use j = 0 only.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superint/cas/ratfun.hpp"

namespace superint::cas {

/// Sum of rational functions over one common denominator, reduced once.
inline RatFun sum_all(const std::vector<RatFun>& parts) {
    if (parts.empty()) return {};
    if (parts.size() == 1) return parts[0];
    RatFun::Den d{};
    for (const auto& p : parts)
        for (int j = 0; j < kNumAtoms; ++j) d[j] = std::max(d[j], p.den()[j]);
    Poly n;
    for (const auto& p : parts)
        if (!p.is_zero()) n += p.numerator_over(d);
    return RatFun::make(std::move(n), d);
}

class DiffOp {
public:
    using Index = std::pair<int, int>;

    DiffOp() = default;
    DiffOp(RatFun f) {  // NOLINT: multiplication operators convert implicitly
        if (!f.is_zero()) terms_[{0, 0}] = std::move(f);
    }
    DiffOp(long c) : DiffOp(RatFun(c)) {}  // NOLINT

    static DiffOp partial(int i, int j) {
        DiffOp d;
        d.terms_[{i, j}] = RatFun(1);
        return d;
    }
    static DiffOp dx() { return partial(1, 0); }
    static DiffOp dy() { return partial(0, 1); }

    const std::map<Index, RatFun>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int order() const {
        int o = 0;
        for (const auto& [ix, f] : terms_) o = std::max(o, ix.first + ix.second);
        return o;
    }
    RatFun coeff(Index ix) const {
        auto it = terms_.find(ix);
        return it == terms_.end() ? RatFun() : it->second;
    }

    friend DiffOp operator+(const DiffOp& a, const DiffOp& b) { return combine(a, b, false); }
    friend DiffOp operator-(const DiffOp& a, const DiffOp& b) { return combine(a, b, true); }
    friend DiffOp operator-(const DiffOp& a) {
        DiffOp out;
        for (const auto& [ix, f] : a.terms_) out.terms_[ix] = -f;
        return out;
    }

    /// Left multiplication by a function.
    friend DiffOp operator*(const RatFun& f, const DiffOp& a) {
        DiffOp out;
        if (f.is_zero()) return out;
        for (const auto& [ix, g] : a.terms_) {
            RatFun h = f * g;
            if (!h.is_zero()) out.terms_[ix] = std::move(h);
        }
        return out;
    }
    DiffOp scaled(const GaussRat& c) const {
        DiffOp out;
        if (c.is_zero()) return out;
        for (const auto& [ix, g] : terms_) out.terms_[ix] = g.scaled(c);
        return out;
    }

    /// Composition a o b by the generalized Leibniz rule.
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b) {
        std::map<Index, std::vector<RatFun>> acc;
        for (const auto& [beta, g] : b.terms_) {
            // derivatives of g up to the largest order in a
            int max_i = 0, max_j = 0;
            for (const auto& [alpha, f] : a.terms_) {
                max_i = std::max(max_i, alpha.first);
                max_j = std::max(max_j, alpha.second);
            }
            std::vector<std::vector<RatFun>> table(max_i + 1, std::vector<RatFun>(max_j + 1));
            for (int i = 0; i <= max_i; ++i)
                for (int j = 0; j <= max_j; ++j) {
                    if (i == 0 && j == 0) table[0][0] = g;
                    else if (j > 0) table[i][j] = table[i][j - 1].derivative(Y);
                    else table[i][0] = table[i - 1][0].derivative(X);
                }
            for (const auto& [alpha, f] : a.terms_)
                for (int i = 0; i <= alpha.first; ++i)
                    for (int j = 0; j <= alpha.second; ++j) {
                        const RatFun& dgv = table[i][j];
                        if (dgv.is_zero()) continue;
                        GaussRat c = GaussRat(binom(alpha.first, i) * binom(alpha.second, j));
                        RatFun term = (f * dgv).scaled(c);
                        if (term.is_zero()) continue;
                        acc[{alpha.first - i + beta.first, alpha.second - j + beta.second}].push_back(std::move(term));
                    }
        }
        DiffOp out;
        for (auto& [ix, parts] : acc) {
            RatFun s = sum_all(parts);
            if (!s.is_zero()) out.terms_[ix] = std::move(s);
        }
        return out;
    }

    /// The operator applied to a function.
    RatFun apply(const RatFun& f) const {
        std::vector<RatFun> parts;
        for (const auto& [ix, c] : terms_) {
            RatFun d = f;
            for (int i = 0; i < ix.first; ++i) d = d.derivative(X);
            for (int j = 0; j < ix.second; ++j) d = d.derivative(Y);
            parts.push_back(c * d);
        }
        return sum_all(parts);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [ix, f] : terms_) {
            if (!out.empty()) out += " + ";
            out += "[" + f.str() + "]";
            if (ix.first) out += "*dx^" + std::to_string(ix.first);
            if (ix.second) out += "*dy^" + std::to_string(ix.second);
        }
        return out;
    }

    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }

private:
    static long binom(int n, int k) {
        long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    }

    static DiffOp combine(const DiffOp& a, const DiffOp& b, bool subtract) {
        DiffOp out = a;
        for (const auto& [ix, g] : b.terms_) {
            auto it = out.terms_.find(ix);
            if (it == out.terms_.end()) {
                out.terms_[ix] = subtract ? -g : g;
                continue;
            }
            it->second = subtract ? it->second - g : it->second + g;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
        return out;
    }

    std::map<Index, RatFun> terms_;
};

inline DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }
/// ab + ba.
inline DiffOp sym2(const DiffOp& a, const DiffOp& b) { return a * b + b * a; }
/// Sum over all six orderings.
inline DiffOp sym3(const DiffOp& a, const DiffOp& b, const DiffOp& c) {
    return a * b * c + a * c * b + b * a * c + b * c * a + c * a * b + c * b * a;
}
/// Cyclic sum abc + bca + cab; for a == b these are the three distinct orderings.
inline DiffOp sym3_distinct(const DiffOp& a, const DiffOp& b, const DiffOp& c) {
    return a * b * c + b * c * a + c * a * b;
}

}  // namespace superint::cas
