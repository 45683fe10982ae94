#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace pvg {

/// Arbitrary-precision rational; GMP keeps it canonical (gcd 1, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

std::string to_string(const Rat& r);

/// Dense univariate polynomial over Q in the variable x, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& constant);
    Poly(long constant) : Poly(Rat(constant)) {}
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

    static Poly x();
    static Poly monomial(const Rat& c, unsigned k);
    /// x - root
    static Poly linear(const Rat& root);

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(unsigned k) const;
    const Rat& lead() const;
    const std::vector<Rat>& coeffs() const noexcept { return c_; }
    std::size_t term_count() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    /// Total order: by degree, then coefficients from the top.
    friend bool operator<(const Poly& a, const Poly& b);

    Poly derivative() const;
    Rat eval(const Rat& at) const;
    Poly monic() const;
    Poly pow(unsigned e) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Quotient and remainder; throws DivisionByZero on b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// a / b, asserting the division is exact.
Poly exact_div(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
Poly inverse_mod(const Poly& a, const Poly& m);

/// Yun's algorithm: result[i] is the squarefree factor of multiplicity i + 1 (monic, possibly 1).
std::vector<Poly> squarefree_decomposition(const Poly& p);

/// Distinct rational roots, ascending.
std::vector<Rat> rational_roots(const Poly& p);
/// Distinct integer roots, ascending.
std::vector<Int> integer_roots(const Poly& p);
/// Multiplicity of root r in p (0 if not a root).
unsigned root_multiplicity(Poly p, const Rat& r);

} // namespace pvg
