#pragma once

#include "pvgauge/poly.hpp"

#include <string>

namespace pvg {

/// Element of the differential field Q(x) in canonical form:
/// gcd(num, den) = 1, den monic, zero is 0/1. Equal values have identical fields.
class RatFn {
public:
    RatFn() : den_(1) {}
    RatFn(const Poly& p) : num_(p), den_(1) {}
    RatFn(const Rat& c) : num_(c), den_(1) {}
    RatFn(long c) : num_(c), den_(1) {}
    /// Throws DivisionByZero when den is zero.
    RatFn(const Poly& num, const Poly& den);

    static RatFn x() { return RatFn(Poly::x()); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }
    bool is_constant() const noexcept { return is_polynomial() && num_.degree() <= 0; }
    /// Value of a constant; throws if not constant.
    Rat constant_value() const;

    RatFn operator-() const;
    RatFn& operator+=(const RatFn& o);
    RatFn& operator-=(const RatFn& o);
    RatFn& operator*=(const RatFn& o);
    RatFn& operator/=(const RatFn& o);

    friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
    friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
    friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
    friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }

    friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }
    friend bool operator<(const RatFn& a, const RatFn& b) {
        if (a.num_ != b.num_)
            return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    RatFn inverse() const;
    RatFn pow(long e) const;
    /// d/dx
    RatFn derivative() const;
    /// Throws PoleAtEvaluationPoint when at is a root of den.
    Rat eval(const Rat& at) const;

    /// Parseable text, e.g. "(x^2 + 1)/(x - 1)".
    std::string to_string() const;

private:
    struct Canonical {};
    RatFn(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Poly num_;
    Poly den_;
};

} // namespace pvg
