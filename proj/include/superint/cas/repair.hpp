#pragma once

// Repair of garbled coefficients in the closed-form constants. Each target
// keeps the trusted part of an expression fixed and solves for the unknown
// coefficients exactly from the requirement that the result commutes with H.

#include <string>
#include <vector>

#include "superint/cas/expressions.hpp"
#include "superint/cas/linsolve.hpp"
#include "superint/errors.hpp"

namespace superint::cas {

struct RepairResult {
    std::string target;
    std::string description;
    std::string printed;  // the coefficients as they appear in the source form
    CoefficientAssignment solution;

    bool unique() const { return solution.status == LinearSolution::Status::unique; }
};

inline std::vector<std::string> repair_targets() { return {"c2-classical", "k2-holo", "c2-quantum", "k1-holo", "k1-quantum"}; }

namespace detail {

inline RepairResult repair_c2_classical() {
    using namespace expr;
    RatFun shape = ttw2::c2_ab_shape();
    std::vector<AnsatzTerm<RatFun>> ansatz{{"u_ab", v(A) * v(B) * shape}, {"u_ac", v(A) * v(C) * shape}};
    return {"c2-classical", "coefficient of (u_ab a b + u_ac a c) x^2 y^2/(x^2-y^2)^2 in classical C2",
            "8ab with a stray r in the denominator",
            solve_coefficients(ttw2::c2_without_ab(), ansatz, ttw2::hamiltonian(), Derivation(SymChart::cartesian))};
}

inline RepairResult repair_k2_holo() {
    using namespace expr;
    RatFun fixed = holo3::lz() * holo3::pm().pow(3);
    std::vector<AnsatzTerm<RatFun>> ansatz{{"u", holo3::k2_bracket_term()}, {"v", holo3::k2_final_term()}};
    return {"k2-holo", "K2 = Lz p-^3 + u a (x-iy)^-3 [quadratic bracket] + v a^2 z^3 (x-iy)^-6", "u = 1, v = -1",
            solve_coefficients(fixed, ansatz, holo3::hamiltonian(), Derivation(SymChart::cartesian))};
}

inline RepairResult repair_c2_quantum() {
    using namespace expr;
    std::vector<AnsatzTerm<DiffOp>> ansatz{{"u_sq", DiffOp(ttw2::c2_op_c2_term())}, {"u_lin", DiffOp(ttw2::c2_op_c2_alt_term())}};
    return {"c2-quantum", "c^2 term of quantum C2: u_sq c^2 (x^2-y^2)^2/(x^4 y^4) + u_lin c^2 (x^2-y^2)/(x^4 y^4)",
            "parentheses ambiguous between the two readings",
            solve_coefficients(ttw2::c2_op_without_c2(), ansatz, ttw2::hamiltonian_op())};
}

inline RepairResult repair_k1_holo() {
    using namespace expr;
    RatFun pre = v(A) * holo3::zb_inv(3);
    RatFun fixed = holo3::pm().pow(3) + pre * holo3::k1_py_shape() * v(PY);
    std::vector<AnsatzTerm<RatFun>> ansatz{{"u", pre * (im() * v(Y) + num(3) * v(X)) * v(PX)}};
    return {"k1-holo", "K1 = p-^3 + a (x-iy)^-3 (u (iy+3x) px + (ix-3y) py)", "u = 1",
            solve_coefficients(fixed, ansatz, holo3::hamiltonian(), Derivation(SymChart::cartesian))};
}

inline RepairResult repair_k1_quantum() {
    using namespace expr;
    DiffOp d = holo3::dm();
    RatFun pre = v(A) * holo3::zb_inv(3);
    DiffOp fixed = d * d * d + (pre * holo3::k1_px_shape()) * DiffOp::dx();
    std::vector<AnsatzTerm<DiffOp>> ansatz{{"u", (pre * holo3::k1_op_dy_printed()) * DiffOp::dy()}};
    return {"k1-quantum", "quantum K1 = d-^3 + a (x-iy)^-3 (-(iy+3x) dx + u (3iy+x) dy)", "u = 1",
            solve_coefficients(fixed, ansatz, holo3::hamiltonian_op())};
}

}  // namespace detail

/// Solves one repair target; throws ParseError for an unknown name and
/// InconsistentSystemError when the ansatz admits no conserved completion.
inline RepairResult repair(const std::string& target) {
    if (target == "c2-classical") return detail::repair_c2_classical();
    if (target == "k2-holo") return detail::repair_k2_holo();
    if (target == "c2-quantum") return detail::repair_c2_quantum();
    if (target == "k1-holo") return detail::repair_k1_holo();
    if (target == "k1-quantum") return detail::repair_k1_quantum();
    throw ParseError("unknown repair target '" + target + "'");
}

/// An ansatz that cannot work: C2 with only the a*c term free. Must throw.
inline CoefficientAssignment repair_negative_control() {
    using namespace expr;
    std::vector<AnsatzTerm<RatFun>> ansatz{{"u_ac", v(A) * v(C) * ttw2::c2_ab_shape()}};
    return solve_coefficients(ttw2::c2_without_ab(), ansatz, ttw2::hamiltonian(), Derivation(SymChart::cartesian));
}

}  // namespace superint::cas
