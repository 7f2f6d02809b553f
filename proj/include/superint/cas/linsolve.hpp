#pragma once

// Exact linear solves sum_j u_j B_j = T over the Gaussian rationals, where
// B_j and T are rational functions or differential operators. Equations are
// the coefficients of every (derivative index, monomial) pair once all
// values are written over one common denominator.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superint/cas/chart.hpp"
#include "superint/cas/diffop.hpp"

namespace superint::cas {

/// Derivative index -> coefficient; a rational function lives at index (0,0).
using Element = std::map<DiffOp::Index, RatFun>;

inline Element as_element(const RatFun& f) {
    Element e;
    if (!f.is_zero()) e[{0, 0}] = f;
    return e;
}
inline Element as_element(const DiffOp& op) { return Element(op.terms().begin(), op.terms().end()); }

struct LinearSolution {
    enum class Status { unique, underdetermined, inconsistent };
    Status status = Status::inconsistent;
    std::vector<GaussRat> values;                   // particular solution (free unknowns set to 0)
    std::vector<std::vector<GaussRat>> null_space;  // basis of the homogeneous solutions
    std::size_t equations = 0;                      // equations examined
    std::string detail;
};

inline std::string to_string(LinearSolution::Status s) {
    switch (s) {
        case LinearSolution::Status::unique: return "unique";
        case LinearSolution::Status::underdetermined: return "underdetermined";
        case LinearSolution::Status::inconsistent: return "inconsistent";
    }
    return "?";
}

namespace detail {

struct RowKey {
    DiffOp::Index ix;
    Mono m;
    friend bool operator<(const RowKey& a, const RowKey& b) {
        if (a.ix != b.ix) return a.ix < b.ix;
        return a.m < b.m;
    }
};

/// Incremental reduced row echelon form over Q(i) with an augmented column.
class Echelon {
public:
    explicit Echelon(std::size_t n) : n_(n) {}

    /// Returns false if the row is inconsistent with the rows seen so far.
    bool add(std::vector<GaussRat> row) {
        for (const auto& [col, piv] : pivots_) {
            if (row[col].is_zero()) continue;
            GaussRat f = row[col];
            for (std::size_t k = 0; k <= n_; ++k)
                if (!piv[k].is_zero()) row[k] -= f * piv[k];
        }
        std::size_t lead = n_;
        for (std::size_t k = 0; k < n_; ++k)
            if (!row[k].is_zero()) {
                lead = k;
                break;
            }
        if (lead == n_) return row[n_].is_zero();
        GaussRat inv = GaussRat(1) / row[lead];
        for (std::size_t k = 0; k <= n_; ++k)
            if (!row[k].is_zero()) row[k] = row[k] * inv;
        for (auto& [col, piv] : pivots_) {
            if (piv[lead].is_zero()) continue;
            GaussRat f = piv[lead];
            for (std::size_t k = 0; k <= n_; ++k)
                if (!row[k].is_zero()) piv[k] -= f * row[k];
        }
        pivots_.emplace_back(lead, std::move(row));
        return true;
    }

    std::size_t rank() const { return pivots_.size(); }

    std::vector<GaussRat> particular() const {
        std::vector<GaussRat> x(n_, GaussRat(0));
        for (const auto& [col, piv] : pivots_) x[col] = piv[n_];
        return x;
    }

    std::vector<std::vector<GaussRat>> null_space() const {
        std::vector<bool> is_pivot(n_, false);
        for (const auto& [col, piv] : pivots_) is_pivot[col] = true;
        std::vector<std::vector<GaussRat>> out;
        for (std::size_t f = 0; f < n_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<GaussRat> v(n_, GaussRat(0));
            v[f] = GaussRat(1);
            for (const auto& [col, piv] : pivots_) v[col] = -piv[f];
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    std::size_t n_;
    std::vector<std::pair<std::size_t, std::vector<GaussRat>>> pivots_;
};

}  // namespace detail

/// Solves sum_j u_j basis[j] = target exactly. A unique or particular
/// solution is always re-verified by exact substitution.
inline LinearSolution solve_linear(const std::vector<Element>& basis, const Element& target) {
    const std::size_t n = basis.size();
    // common denominator
    RatFun::Den den{};
    auto widen = [&](const Element& e) {
        for (const auto& [ix, f] : e)
            for (int j = 0; j < kNumAtoms; ++j) den[j] = std::max(den[j], f.den()[j]);
    };
    for (const auto& b : basis) widen(b);
    widen(target);

    using Numerators = std::map<DiffOp::Index, Poly>;
    auto numerators = [&](const Element& e) {
        Numerators out;
        for (const auto& [ix, f] : e) out[ix] = f.numerator_over(den);
        return out;
    };
    std::vector<Numerators> nb;
    nb.reserve(n);
    for (const auto& b : basis) nb.push_back(numerators(b));
    Numerators nt = numerators(target);

    // sparse equations: (index, monomial) -> entries
    std::map<detail::RowKey, std::vector<std::pair<std::size_t, GaussRat>>> rows;
    auto scatter = [&](const Numerators& nums, std::size_t col) {
        for (const auto& [ix, p] : nums)
            for (const auto& t : p.terms()) rows[{ix, t.m}].emplace_back(col, t.c);
    };
    for (std::size_t j = 0; j < n; ++j) scatter(nb[j], j);
    scatter(nt, n);

    LinearSolution sol;
    detail::Echelon ech(n);
    bool consistent = true;
    for (const auto& [key, entries] : rows) {
        std::vector<GaussRat> row(n + 1, GaussRat(0));
        for (const auto& [col, c] : entries) row[col] += c;
        ++sol.equations;
        if (!ech.add(std::move(row))) {
            consistent = false;
            break;
        }
        if (ech.rank() == n) break;
    }
    if (!consistent) {
        sol.status = LinearSolution::Status::inconsistent;
        sol.detail = "an equation contradicts the others";
        return sol;
    }
    sol.values = ech.particular();
    if (ech.rank() < n) sol.null_space = ech.null_space();

    // exact verification of every equation, including the ones not examined
    std::map<DiffOp::Index, Poly> residual = nt;
    for (std::size_t j = 0; j < n; ++j) {
        if (sol.values[j].is_zero()) continue;
        for (const auto& [ix, p] : nb[j]) residual[ix] -= p.scaled(sol.values[j]);
    }
    for (const auto& [ix, p] : residual)
        if (!p.is_zero()) {
            sol.status = LinearSolution::Status::inconsistent;
            sol.detail = "substitution leaves a nonzero residual";
            sol.values.clear();
            sol.null_space.clear();
            return sol;
        }
    sol.status = ech.rank() == n ? LinearSolution::Status::unique : LinearSolution::Status::underdetermined;
    return sol;
}

/// One unknown of an ansatz: a name and the expression it multiplies.
template <class Expr>
struct AnsatzTerm {
    std::string name;
    Expr term;
};

/// Result of fitting ansatz coefficients so that {fixed + sum u_j term_j, H} = 0.
struct CoefficientAssignment {
    LinearSolution::Status status = LinearSolution::Status::inconsistent;
    std::vector<std::string> names;
    std::vector<GaussRat> values;
    std::vector<std::vector<GaussRat>> null_space;
    /// The bracket (or commutator) with H of the repaired expression is exactly zero.
    bool certified = false;
    std::size_t equations = 0;
};

namespace detail {

template <class Expr, class Bracket>
CoefficientAssignment solve_coefficients_impl(const Expr& fixed, const std::vector<AnsatzTerm<Expr>>& ansatz,
                                              const Bracket& with_h) {
    std::vector<Element> basis;
    CoefficientAssignment out;
    for (const auto& t : ansatz) {
        basis.push_back(as_element(with_h(t.term)));
        out.names.push_back(t.name);
    }
    Element target = as_element(-with_h(fixed));
    LinearSolution sol = solve_linear(basis, target);
    out.status = sol.status;
    out.equations = sol.equations;
    if (sol.status == LinearSolution::Status::inconsistent)
        throw InconsistentSystemError("ansatz cannot be completed to a constant: " + sol.detail);
    out.values = sol.values;
    out.null_space = sol.null_space;
    Expr repaired = fixed;
    for (std::size_t j = 0; j < ansatz.size(); ++j)
        if (!out.values[j].is_zero()) repaired = repaired + ansatz[j].term.scaled(out.values[j]);
    out.certified = with_h(repaired).is_zero();
    return out;
}

}  // namespace detail

/// Classical repair: unknowns fixed by {fixed + sum u_j term_j, H} = 0.
inline CoefficientAssignment solve_coefficients(const RatFun& fixed, const std::vector<AnsatzTerm<RatFun>>& ansatz,
                                                const RatFun& h, const Derivation& d) {
    return detail::solve_coefficients_impl(fixed, ansatz, [&](const RatFun& f) { return sym_bracket(f, h, d); });
}

/// Quantum repair: unknowns fixed by [fixed + sum u_j term_j, H] = 0.
inline CoefficientAssignment solve_coefficients(const DiffOp& fixed, const std::vector<AnsatzTerm<DiffOp>>& ansatz,
                                                const DiffOp& h) {
    return detail::solve_coefficients_impl(fixed, ansatz, [&](const DiffOp& f) { return commutator(f, h); });
}

}  // namespace superint::cas
