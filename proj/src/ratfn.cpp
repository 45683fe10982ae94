#include "pvgauge/ratfn.hpp"

#include "pvgauge/errors.hpp"

#include <stdexcept>

namespace pvg {

RatFn::RatFn(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero())
        throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RatFn::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    Rat lc = den_.lead();
    if (lc != 1) {
        Rat inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

Rat RatFn::constant_value() const {
    if (!is_constant())
        throw std::logic_error("rational function is not constant");
    return num_.coeff(0);
}

RatFn RatFn::operator-() const {
    return RatFn(-num_, den_, Canonical{});
}

RatFn& RatFn::operator+=(const RatFn& o) {
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (den_.degree() > 0)
            normalize();
        else if (num_.is_zero())
            den_ = Poly(1);
        return *this;
    }
    // Henrici: only gcd(num, g) can cancel
    Poly g = gcd(den_, o.den_);
    if (g.degree() == 0) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        if (num_.is_zero())
            den_ = Poly(1);
        return *this;
    }
    Poly b1 = exact_div(den_, g);
    Poly d1 = exact_div(o.den_, g);
    Poly n = num_ * d1 + o.num_ * b1;
    Poly d = b1 * o.den_;
    if (n.is_zero()) {
        num_ = Poly();
        den_ = Poly(1);
        return *this;
    }
    Poly h = gcd(n, g);
    if (h.degree() > 0) {
        n = exact_div(n, h);
        d = exact_div(d, h);
    }
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) {
    return *this += -o;
}

RatFn& RatFn::operator*=(const RatFn& o) {
    if (is_zero() || o.is_zero()) {
        num_ = Poly();
        den_ = Poly(1);
        return *this;
    }
    Poly a = num_, b = den_, c = o.num_, d = o.den_;
    if (d.degree() > 0) {
        Poly g1 = gcd(a, d);
        if (g1.degree() > 0) {
            a = exact_div(a, g1);
            d = exact_div(d, g1);
        }
    }
    if (b.degree() > 0) {
        Poly g2 = gcd(c, b);
        if (g2.degree() > 0) {
            c = exact_div(c, g2);
            b = exact_div(b, g2);
        }
    }
    num_ = a * c;
    den_ = b * d;
    Rat lc = den_.lead();
    if (lc != 1) {
        Rat inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

RatFn& RatFn::operator/=(const RatFn& o) {
    return *this *= o.inverse();
}

RatFn RatFn::inverse() const {
    if (is_zero())
        throw DivisionByZero("inverse of the zero rational function");
    Rat lc = num_.lead();
    Rat inv = 1 / lc;
    return RatFn(den_ * inv, num_ * inv, Canonical{});
}

RatFn RatFn::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    return RatFn(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Canonical{});
}

RatFn RatFn::derivative() const {
    if (den_.degree() == 0)
        return RatFn(num_.derivative(), den_, Canonical{});
    return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rat RatFn::eval(const Rat& at) const {
    Rat d = den_.eval(at);
    if (d == 0)
        throw PoleAtEvaluationPoint("evaluation point " + at.get_str() + " is a pole");
    return num_.eval(at) / d;
}

namespace {

std::string wrap(const Poly& p) {
    if (p.term_count() <= 1 && (p.is_zero() || p.lead() > 0))
        return p.to_string();
    return "(" + p.to_string() + ")";
}

} // namespace

std::string RatFn::to_string() const {
    if (is_polynomial())
        return num_.to_string();
    std::string n = num_.to_string();
    if (num_.term_count() > 1 || n.find('/') != std::string::npos)
        n = "(" + n + ")";
    return n + "/" + wrap(den_);
}

} // namespace pvg
