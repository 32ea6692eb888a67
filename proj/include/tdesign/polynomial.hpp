#pragma once

// Dense univariate polynomials over an exact scalar type. Degrees in this
// project stay small (<= ~60), so dense storage is the right trade.

#include <cstddef>
#include <utility>
#include <vector>

#include "tdesign/quadratic.hpp"
#include "tdesign/rational.hpp"

namespace tdesign {

template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const T& value) { return Polynomial(std::vector<T>{value}); }

    static Polynomial monomial(std::size_t deg, const T& coeff) {
        std::vector<T> c(deg + 1);
        c[deg] = coeff;
        return Polynomial(std::move(c));
    }

    // Degree of the zero polynomial is the sentinel -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(); }
    const std::vector<T>& coefficients() const { return c_; }

    T leading() const { return c_.empty() ? T() : c_.back(); }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return Polynomial(std::move(r));
    }
    Polynomial operator-(const Polynomial& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return Polynomial(std::move(r));
    }
    Polynomial operator*(const Polynomial& o) const {
        if (c_.empty() || o.c_.empty()) return Polynomial();
        std::vector<T> r(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return Polynomial(std::move(r));
    }
    Polynomial operator*(const T& s) const {
        std::vector<T> r(c_);
        for (auto& v : r) v = v * s;
        return Polynomial(std::move(r));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Horner evaluation; U may be a wider scalar than T (e.g. Q(sqrt(m))).
    template <class U>
    U evaluate(const U& x) const {
        U acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
        return acc;
    }

    // this(inner(x)), via Horner over polynomials.
    Polynomial compose(const Polynomial& inner) const {
        Polynomial acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(c_[i]);
        return acc;
    }

    // Multiply by x^k.
    Polynomial shifted_up(std::size_t k) const {
        if (c_.empty() || k == 0) return k == 0 ? *this : Polynomial(c_);
        std::vector<T> r(c_.size() + k);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return Polynomial(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T()) c_.pop_back();
    }

    std::vector<T> c_;
};

using RationalPolynomial = Polynomial<Rational>;
using QuadPolynomial = Polynomial<QuadraticNumber>;

inline QuadPolynomial lift_to_quad(const RationalPolynomial& p) {
    std::vector<QuadraticNumber> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) c.emplace_back(v);
    return QuadPolynomial(std::move(c));
}

} // namespace tdesign
