#pragma once

#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace uqsl2 {

// Dense univariate polynomial over a field-like scalar T, coefficients stored
// lowest degree first. The zero polynomial has an empty coefficient vector.
template <class T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const T& value) { return Poly(std::vector<T>{value}); }
    // x^d with unit coefficient.
    static Poly monomial(std::size_t d, const T& coeff) {
        std::vector<T> c(d + 1, T(0));
        c[d] = coeff;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }

    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

    const T& leading() const {
        if (c_.empty()) throw std::invalid_argument("Poly: leading coefficient of zero");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return Poly(std::move(c));
    }
    Poly operator-() const {
        std::vector<T> c(c_.size(), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == T(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const T& s) {
        std::vector<T> c(a.c_.size(), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i] * s;
        return Poly(std::move(c));
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division; requires invertible leading coefficient of d.
    friend std::pair<Poly, Poly> divmod(const Poly& n, const Poly& d) {
        if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        Poly r = n;
        std::vector<T> q;
        const long dd = d.degree();
        if (r.degree() >= dd) q.assign(static_cast<std::size_t>(r.degree() - dd) + 1, T(0));
        while (!r.is_zero() && r.degree() >= dd) {
            const long k = r.degree() - dd;
            const T f = r.leading() / d.leading();
            q[static_cast<std::size_t>(k)] = f;
            for (long i = 0; i <= dd; ++i) {
                r.c_[static_cast<std::size_t>(i + k)] -= f * d.c_[static_cast<std::size_t>(i)];
            }
            r.trim();
        }
        return {Poly(std::move(q)), r};
    }

    // Exact quotient; throws if the remainder is nonzero.
    friend Poly exact_div(const Poly& n, const Poly& d) {
        auto [q, r] = divmod(n, d);
        if (!r.is_zero()) throw std::invalid_argument("Poly: exact_div with nonzero remainder");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (T(1) / leading());
    }

    // Horner evaluation in any ring X that embeds the coefficients.
    template <class X>
    X eval(const X& x) const {
        if (c_.empty()) return X(0);
        X acc = X(c_.back());
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + X(c_[i]);
        return acc;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

// Extended Euclid: returns (g, u, v), g monic, with u*a + v*b = g.
template <class T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> extended_gcd(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r0 = a, r1 = b;
    Poly<T> u0 = Poly<T>::constant(T(1)), u1;
    Poly<T> v0, v1 = Poly<T>::constant(T(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        u0 = std::exchange(u1, u0 - q * u1);
        v0 = std::exchange(v1, v0 - q * v1);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    const T lead = r0.leading();
    const T inv = T(1) / lead;
    return {r0 * inv, u0 * inv, v0 * inv};
}

}  // namespace uqsl2
