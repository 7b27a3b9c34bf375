#pragma once

#include "heis/errors.hpp"
#include "heis/gauss.hpp"

#include <climits>
#include <initializer_list>
#include <iosfwd>
#include <sstream>
#include <vector>

namespace heis {

/// Degree of the zero polynomial.
inline constexpr int kNegInfDegree = INT_MIN;

/// Dense univariate polynomial over a commutative ring T, coefficients
/// ascending, canonical (no trailing zeros).
template <typename T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(T constant) { coeffs_.push_back(std::move(constant)); trim(); }
    Polynomial(int constant) : Polynomial(T(constant)) {}
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial variable() { return Polynomial(std::vector<T>{T(0), T(1)}); }
    static Polynomial monomial(size_t k, T c = T(1)) {
        std::vector<T> v(k + 1, T(0));
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    const std::vector<T>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kNegInfDegree : static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^k (zero beyond the stored range).
    const T& coeff(size_t k) const {
        static const T zero(0);
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }
    const T& leading() const {
        if (coeffs_.empty()) throw InternalError("Polynomial: leading coefficient of zero");
        return coeffs_.back();
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        if (a.is_zero() || b.is_zero()) return r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (is_coeff_zero(a.coeffs_[i])) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        r.trim();
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial& operator*=(const T& s) {
        for (auto& c : coeffs_) c = c * s;
        trim();
        return *this;
    }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative() const {
        Polynomial r;
        if (coeffs_.size() <= 1) return r;
        r.coeffs_.resize(coeffs_.size() - 1);
        for (size_t k = 1; k < coeffs_.size(); ++k) r.coeffs_[k - 1] = coeffs_[k] * T(static_cast<int>(k));
        r.trim();
        return r;
    }

    /// Horner evaluation with coefficients converted by `conv` into the
    /// evaluation ring U.
    template <typename U, typename Conv>
    U eval_with(const U& x, Conv conv) const {
        if (coeffs_.empty()) return U(0);
        U acc = conv(coeffs_.back());
        for (size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + conv(coeffs_[i]);
        return acc;
    }

    /// Horner evaluation at a point of the coefficient ring itself.
    T eval(const T& x) const {
        if (coeffs_.empty()) return T(0);
        T acc = coeffs_.back();
        for (size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    /// True if only even powers carry nonzero coefficients.
    bool is_even() const {
        for (size_t k = 1; k < coeffs_.size(); k += 2)
            if (!is_coeff_zero(coeffs_[k])) return false;
        return true;
    }
    bool is_odd() const {
        for (size_t k = 0; k < coeffs_.size(); k += 2)
            if (!is_coeff_zero(coeffs_[k])) return false;
        return true;
    }

    /// For an even polynomial p(x) returns q with p(x) = q(x^2).
    Polynomial even_part_in_square() const {
        if (!is_even()) throw InternalError("Polynomial: not even in x");
        Polynomial r;
        r.coeffs_.reserve(coeffs_.size() / 2 + 1);
        for (size_t k = 0; k < coeffs_.size(); k += 2) r.coeffs_.push_back(coeffs_[k]);
        r.trim();
        return r;
    }
    /// Substitutes x -> x^2.
    Polynomial compose_square() const {
        Polynomial r;
        if (coeffs_.empty()) return r;
        r.coeffs_.assign(2 * coeffs_.size() - 1, T(0));
        for (size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[2 * k] = coeffs_[k];
        r.trim();
        return r;
    }

    std::string to_string(const char* var = "x") const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t k = coeffs_.size(); k-- > 0;) {
            if (is_coeff_zero(coeffs_[k])) continue;
            if (!first) os << " + ";
            os << coeffs_[k];
            if (k >= 1) os << "*" << var;
            if (k >= 2) os << "^" << k;
            first = false;
        }
        return os.str();
    }

private:
    std::vector<T> coeffs_;

    static bool is_coeff_zero(const T& c) { return c == T(0); }

    void trim() {
        while (!coeffs_.empty() && is_coeff_zero(coeffs_.back())) coeffs_.pop_back();
    }
};

using GaussPoly = Polynomial<GaussRational>;
using QPoly = Polynomial<Rational>;

/// Quotient and remainder over a field (T must support division).
template <typename T>
std::pair<Polynomial<T>, Polynomial<T>> poly_divmod(const Polynomial<T>& a,
                                                    const Polynomial<T>& b) {
    if (b.is_zero()) throw InternalError("poly_divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {Polynomial<T>{}, a};
    std::vector<T> rem(a.coeffs());
    const int db = b.degree();
    const T& lead = b.leading();
    std::vector<T> quot(a.degree() - db + 1, T(0));
    for (int k = a.degree(); k >= db; --k) {
        T c = rem[static_cast<size_t>(k)] / lead;
        if (c == T(0)) continue;
        quot[static_cast<size_t>(k - db)] = c;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(k - db + i)] -= c * b.coeff(static_cast<size_t>(i));
    }
    return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

/// Exact division; throws NonDivisibleError when the remainder is nonzero.
template <typename T>
Polynomial<T> exact_divide(const Polynomial<T>& a, const Polynomial<T>& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw NonDivisibleError("exact_divide: nonzero remainder");
    return q;
}

/// Monic gcd via the Euclidean algorithm over a field.
template <typename T>
Polynomial<T> poly_gcd(Polynomial<T> a, Polynomial<T> b) {
    while (!b.is_zero()) {
        auto r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    const T inv_lead = T(1) / a.leading();
    return a * inv_lead;
}

template <typename T>
Polynomial<T> poly_pow(const Polynomial<T>& base, unsigned e) {
    Polynomial<T> r(T(1)), b = base;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p) {
    return os << p.to_string();
}

} // namespace heis
