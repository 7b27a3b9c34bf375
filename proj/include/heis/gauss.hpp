#pragma once

#include "heis/rational.hpp"

#include <complex>
#include <iosfwd>

namespace heis {

/// Gaussian rational a + b*i with exact rational parts.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(int v) : re_(v) {}
    GaussRational(long long v) : re_(v) {}
    GaussRational(Rational re) : re_(std::move(re)) {}
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRational conj() const { return GaussRational(re_, -im_); }

    GaussRational operator-() const { return GaussRational(-re_, -im_); }

    GaussRational& operator+=(const GaussRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        if (im_.is_zero() && o.im_.is_zero()) {
            re_ *= o.re_;
            return *this;
        }
        Rational re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) {
        if (o.is_zero()) throw std::domain_error("GaussRational: division by zero");
        if (o.im_.is_zero()) {
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        Rational n2 = o.re_ * o.re_ + o.im_ * o.im_;
        GaussRational c = o.conj();
        *this *= c;
        re_ /= n2;
        im_ /= n2;
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
    std::complex<long double> to_complex_ld() const {
        return {re_.to_long_double(), im_.to_long_double()};
    }

    std::string to_string() const {
        if (im_.is_zero()) return re_.to_string();
        return "(" + re_.to_string() + (im_.sign() < 0 ? "-" : "+") + im_.abs().to_string() + "i)";
    }
    friend std::ostream& operator<<(std::ostream& os, const GaussRational& v);

private:
    Rational re_, im_;
};

inline GaussRational conj(const GaussRational& z) { return z.conj(); }

std::ostream& operator<<(std::ostream& os, const GaussRational& v);

} // namespace heis
