#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace plumbcalc {

using Int = mpz_class;

/// Exact rational built on GMP. Always reduced, denominator >= 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(-v_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// "p/q", or just "p" when integral.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    mpq_class v_;
};

}  // namespace plumbcalc
