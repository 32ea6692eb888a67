#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars on top of GMP, plus the Pochhammer and
 *        generalized binomial evaluations used by the Jacobi formulas.
 *
 * Values are always canonical: positive denominator, coprime components,
 * zero stored as 0/1. Overflow cannot occur; GMP grows as needed.
 */

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "tdesign/error.hpp"

namespace tdesign {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts canonical text: optional '-', digits, optional "/digits" with a
    // positive denominator. Anything else is rejected.
    static Rational parse(const std::string& text) {
        if (!looks_like_rational(text))
            throw Error(ErrorKind::BadInput, "malformed rational '" + text + "'");
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw Error(ErrorKind::BadInput, "malformed rational '" + text + "'");
        if (q.get_den() == 0)
            throw Error(ErrorKind::BadInput, "zero denominator in '" + text + "'");
        q.canonicalize();
        return Rational(q);
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational reciprocal() const {
        if (is_zero()) throw Error(ErrorKind::DivisionByZero, "reciprocal of zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational pow(unsigned long e) const {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
        return Rational(num, den);
    }

    // Canonical text form: "p/q", or "p" when the value is an integer.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    // The value as an unsigned long; only valid for small non-negative integers.
    unsigned long to_ulong() const {
        if (!is_integer() || sign() < 0 || !v_.get_num().fits_ulong_p())
            throw Error(ErrorKind::BadInput, "value " + str() + " is not a small non-negative integer");
        return v_.get_num().get_ui();
    }

    const mpq_class& raw() const { return v_; }

private:
    static bool looks_like_rational(const std::string& s) {
        std::size_t i = 0;
        if (i < s.size() && s[i] == '-') ++i;
        std::size_t digits = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
        if (digits == 0) return false;
        if (i == s.size()) return true;
        if (s[i] != '/') return false;
        ++i;
        digits = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
        return digits > 0 && i == s.size();
    }

    mpq_class v_;
};

// x(x+1)...(x+n-1); empty product is 1.
inline Rational pochhammer(const Rational& x, unsigned long n) {
    Rational result(1);
    Rational factor = x;
    for (unsigned long i = 0; i < n; ++i) {
        result *= factor;
        factor += Rational(1);
    }
    return result;
}

inline Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

// binom(x, k) for rational x: pochhammer(x-k+1, k) / k!.
inline Rational generalized_binomial(const Rational& x, unsigned long k) {
    return pochhammer(x - Rational(static_cast<long>(k)) + Rational(1), k) / factorial(k);
}

} // namespace tdesign
