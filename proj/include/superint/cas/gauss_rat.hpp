#pragma once

// Exact Gaussian rationals re + im*i with arbitrary-precision parts.

#include <gmpxx.h>

#include <complex>
#include <ostream>
#include <sstream>
#include <string>

#include "superint/errors.hpp"

namespace superint::cas {

class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long v) : re_(v) {}  // NOLINT: integers convert implicitly
    GaussRat(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussRat ratio(long num, long den) { return GaussRat(mpq_class(num, den)); }
    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return raw(a.re_ + b.re_, a.im_ + b.im_); }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return raw(a.re_ - b.re_, a.im_ - b.im_); }
    friend GaussRat operator-(const GaussRat& a) { return raw(-a.re_, -a.im_); }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        if (sgn(a.im_) == 0 && sgn(b.im_) == 0) return raw(a.re_ * b.re_, mpq_class(0));
        return raw(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        if (b.is_zero()) throw Error("division by zero in Gaussian rationals");
        if (sgn(b.im_) == 0) return raw(a.re_ / b.re_, a.im_ / b.re_);
        mpq_class n = b.re_ * b.re_ + b.im_ * b.im_;
        GaussRat num = a * b.conj();
        return raw(num.re_ / n, num.im_ / n);
    }
    GaussRat& operator+=(const GaussRat& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// "3/2", "-i", "1/2+3i".
    std::string str() const {
        bool has_re = sgn(re_) != 0;
        bool has_im = sgn(im_) != 0;
        if (!has_re && !has_im) return "0";
        std::string out;
        if (has_re) out = re_.get_str();
        if (has_im) {
            std::string mag;
            mpq_class a = abs(im_);
            if (a != 1) mag = a.get_str();
            if (sgn(im_) < 0) out += "-";
            else if (has_re) out += "+";
            out += mag + "i";
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussRat& g) { return os << g.str(); }

private:
    static GaussRat raw(mpq_class re, mpq_class im) {
        GaussRat g;
        g.re_ = std::move(re);
        g.im_ = std::move(im);
        return g;
    }

    mpq_class re_{0};
    mpq_class im_{0};
};

}  // namespace superint::cas
