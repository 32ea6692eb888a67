#pragma once

/**
 * @file quadratic.hpp
 * @brief Exact arithmetic in Q(sqrt(m)): values a + b*sqrt(m) with rational
 *        a, b and a shared square-free radicand m.
 *
 * A value with b = 0 carries radicand 0 and is compatible with any field.
 * Combining two values whose radicands are distinct and both nonzero is a
 * MixedRadicands error; one computation context uses one radicand.
 */

#include <string>

#include "tdesign/error.hpp"
#include "tdesign/rational.hpp"

namespace tdesign {

inline bool is_square_free(long m) {
    if (m < 1) return false;
    for (long p = 2; p * p <= m; ++p)
        if (m % (p * p) == 0) return false;
    return true;
}

class QuadraticNumber {
public:
    QuadraticNumber() : rad_(0) {}
    QuadraticNumber(const Rational& a) : a_(a), rad_(0) {}
    QuadraticNumber(long n) : a_(n), rad_(0) {}
    QuadraticNumber(int n) : a_(n), rad_(0) {}

    QuadraticNumber(const Rational& a, const Rational& b, long radicand)
        : a_(a), b_(b), rad_(radicand) {
        if (!b_.is_zero()) {
            if (rad_ < 2 || !is_square_free(rad_))
                throw Error(ErrorKind::BadInput,
                            "radicand " + std::to_string(rad_) + " must be square-free and >= 2");
        } else {
            rad_ = 0;
        }
    }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    long radicand() const { return rad_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    // Radicand of the combined expression, or MixedRadicands.
    static long merge_radicands(const QuadraticNumber& x, const QuadraticNumber& y) {
        if (x.rad_ == 0) return y.rad_;
        if (y.rad_ == 0 || y.rad_ == x.rad_) return x.rad_;
        throw Error(ErrorKind::MixedRadicands,
                    "cannot combine sqrt(" + std::to_string(x.rad_) + ") with sqrt(" +
                        std::to_string(y.rad_) + ")");
    }

    QuadraticNumber operator-() const { return QuadraticNumber(-a_, -b_, rad_); }

    QuadraticNumber operator+(const QuadraticNumber& o) const {
        long m = merge_radicands(*this, o);
        return QuadraticNumber(a_ + o.a_, b_ + o.b_, m);
    }
    QuadraticNumber operator-(const QuadraticNumber& o) const {
        long m = merge_radicands(*this, o);
        return QuadraticNumber(a_ - o.a_, b_ - o.b_, m);
    }
    QuadraticNumber operator*(const QuadraticNumber& o) const {
        long m = merge_radicands(*this, o);
        if (b_.is_zero() && o.b_.is_zero()) return QuadraticNumber(a_ * o.a_);
        Rational a = a_ * o.a_ + b_ * o.b_ * Rational(m);
        Rational b = a_ * o.b_ + b_ * o.a_;
        return QuadraticNumber(a, b, m);
    }
    QuadraticNumber operator/(const QuadraticNumber& o) const {
        if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in Q(sqrt(m))");
        long m = merge_radicands(*this, o);
        if (o.b_.is_zero()) return QuadraticNumber(a_ / o.a_, b_ / o.a_, m);
        // 1/(a+b*sqrt(m)) = (a-b*sqrt(m)) / (a^2 - m*b^2)
        Rational denom = o.a_ * o.a_ - Rational(m) * o.b_ * o.b_;
        QuadraticNumber conj(o.a_, -o.b_, m);
        QuadraticNumber num = *this * conj;
        return QuadraticNumber(num.a_ / denom, num.b_ / denom, m);
    }

    QuadraticNumber& operator+=(const QuadraticNumber& o) { return *this = *this + o; }
    QuadraticNumber& operator-=(const QuadraticNumber& o) { return *this = *this - o; }
    QuadraticNumber& operator*=(const QuadraticNumber& o) { return *this = *this * o; }
    QuadraticNumber& operator/=(const QuadraticNumber& o) { return *this = *this / o; }

    QuadraticNumber conjugate() const { return QuadraticNumber(a_, -b_, rad_); }

    bool operator==(const QuadraticNumber& o) const {
        if (a_ != o.a_ || b_ != o.b_) return false;
        return b_.is_zero() || rad_ == o.rad_;
    }
    bool operator!=(const QuadraticNumber& o) const { return !(*this == o); }

    // Sign of a + b*sqrt(m), decided exactly by comparing a^2 against m*b^2.
    int sign() const {
        int sa = a_.sign();
        int sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rational a2 = a_ * a_;
        Rational mb2 = Rational(rad_) * b_ * b_;
        if (a2 == mb2) return 0;
        bool a_dominates = a2 > mb2;
        return a_dominates ? sa : sb;
    }

    bool operator<(const QuadraticNumber& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadraticNumber& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const QuadraticNumber& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const QuadraticNumber& o) const { return (*this - o).sign() >= 0; }

    // Human-readable form, e.g. "1/2 - 1/10*sqrt(5)".
    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string radical = b_.abs() == Rational(1)
                                  ? "sqrt(" + std::to_string(rad_) + ")"
                                  : b_.abs().str() + "*sqrt(" + std::to_string(rad_) + ")";
        if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + radical;
        return a_.str() + (b_.sign() < 0 ? " - " : " + ") + radical;
    }

private:
    Rational a_;
    Rational b_;
    long rad_;
};

} // namespace tdesign
