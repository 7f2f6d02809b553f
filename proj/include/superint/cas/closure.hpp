#pragma once

// Closure of a symmetry algebra as module membership. An expansion is a
// polynomial in formal generator symbols (H, C1, C2, R) with parameter
// coefficients, stored as a Poly whose slots X, Y, PX, PY hold the
// generators. Quantum expansions read each generator monomial as the average
// over its distinct operator orderings, with H (central) written first.
//
// Candidate terms come from two gradings under which every classical
// relation is homogeneous: a scaling weight W (x: 1, p: -1, a: -4, b, c: 0)
// and a strength grade G (p: 1, a, b, c: 2, x: 0).

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "superint/cas/linsolve.hpp"

namespace superint::cas {

inline constexpr int kGenH = X;
inline constexpr int kGenC1 = Y;
inline constexpr int kGenC2 = PX;
inline constexpr int kGenR = PY;

/// Variable names for printing expansions.
inline const std::array<const char*, kNumVars>& generator_names() {
    static const std::array<const char*, kNumVars> names{"H", "C1", "C2", "R", "w", "z", "pR", "pth",
                                                         "om", "tau", "a", "b", "c", "E", "u", "v"};
    return names;
}

inline std::string expansion_str(const Poly& p) { return p.str(generator_names()); }

namespace gen {
inline Poly H() { return Poly::var(kGenH); }
inline Poly C1() { return Poly::var(kGenC1); }
inline Poly C2() { return Poly::var(kGenC2); }
inline Poly R() { return Poly::var(kGenR); }
inline Poly a() { return Poly::var(A); }
inline Poly b() { return Poly::var(B); }
inline Poly c() { return Poly::var(C); }
inline Poly n(long v, long d = 1) { return Poly(GaussRat::ratio(v, d)); }
}  // namespace gen

struct Grading {
    int w = 0;
    int g = 0;
};

/// (W, G) of each formal symbol: H, C1, C2, R, a, b, c.
inline Grading grading_of(int var) {
    switch (var) {
        case kGenH: return {-2, 2};
        case kGenC1: return {0, 2};
        case kGenC2: return {-4, 4};
        case kGenR: return {-4, 5};
        case A: return {-4, 2};
        case B: return {0, 2};
        case C: return {0, 2};
    }
    return {0, 0};
}

struct KeyOptions {
    bool exact_grade = true;  // classical relations are homogeneous in G
    int max_r = 0;            // classical relations are even under time reversal
};

/// All monomials in {H, C1, C2, R, a, b, c} with W == w and G == g (or G <= g).
inline std::vector<Mono> closure_keys(int w, int g, const KeyOptions& opt) {
    static constexpr std::array<int, 7> vars{kGenH, kGenC1, kGenC2, kGenR, A, B, C};
    std::vector<Mono> out;
    std::array<int, 7> e{};
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t k, int cw, int cg) {
        if (cg > g) return;
        if (k == vars.size()) {
            if (cw == w && (opt.exact_grade ? cg == g : true)) {
                Mono m;
                for (std::size_t j = 0; j < vars.size(); ++j) m.set(vars[j], e[j]);
                out.push_back(m);
            }
            return;
        }
        Grading gr = grading_of(vars[k]);
        int limit = vars[k] == kGenR ? opt.max_r : g / gr.g;
        for (int n = 0; n <= limit; ++n) {
            e[k] = n;
            rec(k + 1, cw + n * gr.w, cg + n * gr.g);
            if (cg + (n + 1) * gr.g > g) break;
        }
        e[k] = 0;
    };
    rec(0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline RatFun param_monomial(const Mono& m) {
    RatFun out(1);
    for (int v : {A, B, C})
        if (int e = m.exp(v)) out = out * RatFun::var(v, e);
    return out;
}

/// Realizes formal keys as rational functions (classical generators).
class ClassicalRealizer {
public:
    ClassicalRealizer(RatFun h, RatFun c1, RatFun c2, RatFun r) : gens_{std::move(h), std::move(c1), std::move(c2), std::move(r)} {}

    RatFun operator()(const Mono& key) {
        RatFun out = param_monomial(key);
        static constexpr std::array<int, 4> slots{kGenH, kGenC1, kGenC2, kGenR};
        for (int j = 0; j < 4; ++j)
            if (int e = key.exp(slots[j])) out = out * power(j, e);
        return out;
    }

private:
    const RatFun& power(int j, int e) {
        auto& cache = powers_[j];
        if (cache.empty()) cache.push_back(RatFun(1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * gens_[j]);
        return cache[e];
    }

    std::array<RatFun, 4> gens_;
    std::array<std::vector<RatFun>, 4> powers_;
};

/// Realizes formal keys as operators: H^i times the ordering average of the C1, C2, R word.
class QuantumRealizer {
public:
    QuantumRealizer(DiffOp h, DiffOp c1, DiffOp c2, DiffOp r) : h_(std::move(h)), words_{std::move(c1), std::move(c2), std::move(r)} {}

    DiffOp operator()(const Mono& key) {
        DiffOp body = symmetric_word(key.exp(kGenC1), key.exp(kGenC2), key.exp(kGenR));
        for (int i = 0; i < key.exp(kGenH); ++i) body = h_ * body;
        return param_monomial(key) * body;
    }

    /// Average of the distinct orderings of C1^n1 C2^n2 R^n3.
    DiffOp symmetric_word(int n1, int n2, int n3) {
        auto key = std::array<int, 3>{n1, n2, n3};
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        std::vector<int> letters;
        for (int j = 0; j < 3; ++j) letters.insert(letters.end(), key[j], j);
        DiffOp sum;
        long count = 0;
        if (letters.empty()) sum = DiffOp(1);
        else
            do {
                DiffOp w = words_[letters[0]];
                for (std::size_t k = 1; k < letters.size(); ++k) w = w * words_[letters[k]];
                sum = sum + w;
                ++count;
            } while (std::next_permutation(letters.begin(), letters.end()));
        if (count > 1) sum = sum.scaled(GaussRat::ratio(1, count));
        cache_[key] = sum;
        return sum;
    }

private:
    DiffOp h_;
    std::array<DiffOp, 3> words_;
    std::map<std::array<int, 3>, DiffOp> cache_;
};

struct ClosureExpansion {
    bool member = false;
    bool unique = false;
    Poly expansion;          // formal polynomial in generators and parameters
    std::size_t candidates = 0;
    std::string detail;
};

/// Solves target = sum_key u_key realize(key) exactly over the candidate keys.
template <class Realizer, class Expr>
ClosureExpansion expand_in_generators(const Expr& target, const std::vector<Mono>& keys, Realizer& realize) {
    std::vector<Element> basis;
    basis.reserve(keys.size());
    for (const auto& k : keys) basis.push_back(as_element(realize(k)));
    LinearSolution sol = solve_linear(basis, as_element(target));
    ClosureExpansion out;
    out.candidates = keys.size();
    if (sol.status == LinearSolution::Status::inconsistent) {
        out.detail = sol.detail;
        return out;
    }
    out.member = true;
    out.unique = sol.status == LinearSolution::Status::unique;
    for (std::size_t j = 0; j < keys.size(); ++j)
        if (!sol.values[j].is_zero()) out.expansion += Poly::monomial(keys[j], sol.values[j]);
    if (!out.unique) out.detail = std::to_string(sol.null_space.size()) + "-dimensional null space";
    return out;
}

/// Term-by-term comparison of a computed expansion with a printed one.
struct ExpansionComparison {
    std::size_t agreeing = 0;
    std::vector<std::string> mismatches;  // "term: computed X, printed Y"
    bool matches() const { return mismatches.empty(); }
    std::string str() const {
        std::string out;
        for (const auto& m : mismatches) out += (out.empty() ? "" : "; ") + m;
        return out;
    }
};

inline ExpansionComparison compare_expansions(const Poly& computed, const Poly& printed) {
    std::map<Mono, std::pair<GaussRat, GaussRat>> all;
    for (const auto& t : computed.terms()) all[t.m].first = t.c;
    for (const auto& t : printed.terms()) all[t.m].second = t.c;
    ExpansionComparison out;
    for (const auto& [m, cv] : all) {
        if (cv.first == cv.second) {
            ++out.agreeing;
            continue;
        }
        std::string term = expansion_str(Poly::monomial(m, GaussRat(1)));
        out.mismatches.push_back(term + ": computed " + cv.first.str() + ", printed " + cv.second.str());
    }
    return out;
}

/// Coefficient of one formal monomial.
inline GaussRat expansion_coeff(const Poly& p, const Poly& monomial) {
    return p.coeff(monomial.terms().at(0).m);
}

}  // namespace superint::cas
