#pragma once

// Fixed expression constructors: the k = 2 TTW and k = 3 holomorphic
// constants (classical and quantum), the TTW system in the exponential
// trig chart, and the pieces the repair ansaetze are built from.
//
// Cartesian parameters: A, B, C are a, b, c of the k = 2 and k = 3 forms,
// with C the Cartesian sin-barrier strength (c' = gamma/4). In the trig
// chart A, B, C stand for alpha, beta, gamma.

#include "superint/cas/chart.hpp"
#include "superint/cas/diffop.hpp"

namespace superint::cas::expr {

inline RatFun v(int var, int e = 1) { return RatFun::var(var, e); }
inline RatFun num(long n, long d = 1) { return RatFun(GaussRat::ratio(n, d)); }
inline RatFun im() { return RatFun(GaussRat::i()); }

// ---- k = 2 TTW, Cartesian ------------------------------------------------

namespace ttw2 {

inline RatFun d2inv() { return RatFun::atom_inverse(0, 2) * RatFun::atom_inverse(1, 2); }
inline RatFun xy2inv() { return v(X, -2) * v(Y, -2); }
inline RatFun r2() { return v(X, 2) + v(Y, 2); }
inline RatFun d() { return v(X, 2) - v(Y, 2); }

inline RatFun potential() { return v(A) * r2() + v(B) * r2() * d2inv() + v(C) * r2() * xy2inv(); }

inline RatFun hamiltonian() { return v(PX, 2) + v(PY, 2) + potential(); }

inline RatFun lz() { return v(X) * v(PY) - v(Y) * v(PX); }

inline RatFun c1() {
    return lz().pow(2) + num(4) * v(B) * v(X, 2) * v(Y, 2) * d2inv() + v(C) * (v(X, 4) + v(Y, 4)) * xy2inv();
}

/// Momentum-dependent part of C2 (shared by the classical and quantum forms).
inline RatFun c2_fx() { return num(2) * v(A) * v(X, 2) + num(2) * v(B) * r2() * d2inv() - num(2) * v(C) * d() * xy2inv(); }
inline RatFun c2_fxy() { return num(-4) * v(A) * v(X) * v(Y) + num(8) * v(B) * v(X) * v(Y) * d2inv(); }
inline RatFun c2_fy() { return num(2) * v(A) * v(Y, 2) + num(2) * v(B) * r2() * d2inv() + num(2) * v(C) * d() * xy2inv(); }

/// The term x^2 y^2 / (x^2 - y^2)^2 whose coefficient is printed garbled.
inline RatFun c2_ab_shape() { return v(X, 2) * v(Y, 2) * d2inv(); }

/// Classical C2 without its a*b term.
inline RatFun c2_without_ab() {
    return (v(PX, 2) - v(PY, 2)).pow(2) + c2_fx() * v(PX, 2) + c2_fxy() * v(PX) * v(PY) + c2_fy() * v(PY, 2) +
           v(A, 2) * d().pow(2) + v(B, 2) * d2inv() + v(C, 2) * d().pow(2) * xy2inv().pow(2) +
           num(2) * v(B) * v(C) * xy2inv();
}

inline RatFun c2() { return c2_without_ab() + num(8) * v(A) * v(B) * c2_ab_shape(); }

/// L2 in Cartesian form with beta = b and gamma = 4c.
inline RatFun l2() { return lz().pow(2) + v(B) * r2().pow(2) * d2inv() + v(C) * r2().pow(2) * xy2inv(); }

// quantum operators, momenta replaced by partial derivatives

inline DiffOp lz_op() { return v(X) * DiffOp::dy() - v(Y) * DiffOp::dx(); }

inline DiffOp hamiltonian_op() { return DiffOp::partial(2, 0) + DiffOp::partial(0, 2) + DiffOp(potential()); }

inline DiffOp c1_op() {
    DiffOp l = lz_op();
    return l * l + DiffOp(num(4) * v(B) * v(X, 2) * v(Y, 2) * d2inv() + v(C) * (v(X, 4) + v(Y, 4)) * xy2inv());
}

/// The c^2 multiplication term of quantum C2 in its resolved reading c^2 (x^2-y^2)^2/(x^4 y^4).
inline RatFun c2_op_c2_term() { return v(C, 2) * d().pow(2) * xy2inv().pow(2); }
/// The other reading of the printed parentheses, c^2 (x^2-y^2)/(x^4 y^4).
inline RatFun c2_op_c2_alt_term() { return v(C, 2) * d() * xy2inv().pow(2); }

/// Quantum C2 without its c^2 multiplication term.
inline DiffOp c2_op_without_c2() {
    DiffOp k = DiffOp::partial(2, 0) - DiffOp::partial(0, 2);
    RatFun mult = v(A, 2) * d().pow(2) + v(B, 2) * d2inv() + num(8) * v(A) * v(B) * c2_ab_shape() +
                  num(2) * v(B) * v(C) * xy2inv() + num(6) * v(C) * (v(X, -4) + v(Y, -4));
    return k * k + c2_fx() * DiffOp::partial(2, 0) + c2_fxy() * DiffOp::partial(1, 1) + c2_fy() * DiffOp::partial(0, 2) +
           (num(2) * v(A) * v(X) - num(4) * v(C) * v(X, -3)) * DiffOp::dx() +
           (num(2) * v(A) * v(Y) - num(4) * v(C) * v(Y, -3)) * DiffOp::dy() + DiffOp(mult);
}

inline DiffOp c2_op() { return c2_op_without_c2() + DiffOp(c2_op_c2_term()); }

}  // namespace ttw2

// ---- k = 3 holomorphic, Cartesian ----------------------------------------

namespace holo3 {

inline RatFun zb_inv(int n) { return RatFun::atom_inverse(2, n); }  // (x - iy)^-n
inline RatFun z() { return v(X) + im() * v(Y); }
inline RatFun pm() { return v(PX) - im() * v(PY); }
inline RatFun lz() { return v(X) * v(PY) - v(Y) * v(PX); }

inline RatFun hamiltonian() { return v(PX, 2) + v(PY, 2) + v(A) * z().pow(2) * zb_inv(4); }

/// Coefficient functions of the a/(x-iy)^3 part of K1 (px and py slots).
inline RatFun k1_px_shape() { return -(im() * v(Y) + num(3) * v(X)); }
inline RatFun k1_py_shape() { return im() * v(X) - num(3) * v(Y); }

inline RatFun k1() { return pm().pow(3) + v(A) * zb_inv(3) * (k1_px_shape() * v(PX) + k1_py_shape() * v(PY)); }

/// The quadratic momentum bracket of K2.
inline RatFun k2_bracket() {
    RatFun x = v(X), y = v(Y), i = im();
    return (num(3) * x * x + num(3) * i * x * y - num(2) * y * y) * v(PX, 2) -
           (num(2) * x * x + num(3) * i * x * y - num(3) * y * y) * v(PY, 2) -
           i * (x + num(3) * i * y) * (i * y + num(3) * x) * v(PX) * v(PY);
}
inline RatFun k2_bracket_term() { return v(A) * zb_inv(3) * k2_bracket(); }
inline RatFun k2_final_term() { return v(A, 2) * z().pow(3) * zb_inv(6); }

/// K2 as repaired under {K2,H} = 0, with the overall sign fixed by {K1,K2} = 3i K1^2.
inline RatFun k2() { return -(lz() * pm().pow(3) - im() * k2_bracket_term() + im() * k2_final_term()); }

inline RatFun k3() {
    return lz().pow(2) + num(2) * im() * v(A) * v(Y) * (num(3) * v(X, 2) - v(Y, 2)) * zb_inv(3);
}

inline DiffOp dm() { return DiffOp::dx() - im() * DiffOp::dy(); }
inline DiffOp lz_op() { return v(X) * DiffOp::dy() - v(Y) * DiffOp::dx(); }

inline DiffOp hamiltonian_op() {
    return DiffOp::partial(2, 0) + DiffOp::partial(0, 2) + DiffOp(v(A) * z().pow(2) * zb_inv(4));
}

/// The d/dy coefficient of the a/(x-iy)^3 part of quantum K1, printed without its factor i.
inline RatFun k1_op_dy_printed() { return num(3) * im() * v(Y) + v(X); }

inline DiffOp k1_op() {
    DiffOp d = dm();
    return d * d * d + (v(A) * zb_inv(3)) * (k1_px_shape() * DiffOp::dx() + (im() * k1_op_dy_printed()) * DiffOp::dy());
}

inline DiffOp k2_op() {
    RatFun x = v(X), y = v(Y), i = im();
    DiffOp d = dm();
    DiffOp inner = (i * (num(2) * y * y - num(3) * i * x * y - num(3) * x * x)) * DiffOp::partial(2, 0) -
                   ((num(3) * i * y + x) * (i * y + num(3) * x)) * DiffOp::partial(1, 1) +
                   (i * (num(2) * x * x + num(3) * i * x * y - num(3) * y * y)) * DiffOp::partial(0, 2) -
                   (num(2) * i * (num(3) * i * y + x)) * DiffOp::dx() - (num(2) * (i * y + num(3) * x)) * DiffOp::dy() -
                   DiffOp(num(8) * i);
    return lz_op() * d * d * d + (v(A) * zb_inv(3)) * inner + DiffOp(i * k2_final_term());
}

inline DiffOp k3_op() {
    DiffOp l = lz_op();
    return l * l + DiffOp(num(2) * im() * v(A) * v(Y) * (num(3) * v(X, 2) - v(Y, 2)) * zb_inv(3));
}

}  // namespace holo3

// ---- TTW, exponential trig chart -----------------------------------------

namespace trig {

/// cos 2k th and sin 2k th in z = e^(2ik th).
inline RatFun cos2() { return (v(Z) + v(Z, -1)) * num(1, 2); }
inline RatFun sin2() { return (v(Z) - v(Z, -1)) * RatFun(GaussRat(1) / (GaussRat(2) * GaussRat::i())); }
/// 1/cos^2 k th = 4z/(z+1)^2, 1/sin^2 k th = -4z/(z-1)^2.
inline RatFun sec2() { return num(4) * v(Z) * RatFun::atom_inverse(5, 2); }
inline RatFun csc2() { return num(-4) * v(Z) * RatFun::atom_inverse(4, 2); }

inline RatFun l2() { return v(PTH, 2) + v(B) * sec2() + v(C) * csc2(); }
inline RatFun hamiltonian() { return (v(PR, 2) + l2()) * v(W, -1) + v(A) * v(W); }

}  // namespace trig

// ---- one-variable quantum model ------------------------------------------

namespace model1d {

inline DiffOp k1() { return DiffOp(-im() * num(1, 3) * v(X, -1)); }
inline DiffOp k2() { return DiffOp::dx(); }
inline DiffOp k3() {
    return (num(-9) * v(X, 2)) * DiffOp::partial(2, 0) + (num(-27) * v(X)) * DiffOp::dx() -
           DiffOp(num(9) + v(A) + num(9) * v(A) * v(E, 3) * v(X, 2));
}

}  // namespace model1d

}  // namespace superint::cas::expr
