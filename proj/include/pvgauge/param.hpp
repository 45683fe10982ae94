#pragma once

#include "pvgauge/matrix.hpp"

#include <map>
#include <string>
#include <tuple>

namespace pvg {

enum class ParamKind {
    free,       ///< polynomial variable
    cyclotomic, ///< primitive root of unity of a given order
    unit,       ///< invertible; negative exponents allowed
};

struct Param {
    std::string name;
    ParamKind kind = ParamKind::free;
    unsigned order = 0; ///< cyclotomic order

    static Param free(std::string name) { return {std::move(name), ParamKind::free, 0}; }
    static Param unit(std::string name) { return {std::move(name), ParamKind::unit, 0}; }
    /// Throws InputError for order 0.
    static Param cyclotomic(std::string name, unsigned order);

    friend bool operator<(const Param& a, const Param& b) {
        return std::tie(a.name, a.kind, a.order) < std::tie(b.name, b.kind, b.order);
    }
    friend bool operator==(const Param& a, const Param& b) {
        return a.name == b.name && a.kind == b.kind && a.order == b.order;
    }
};

/// Product of parameter powers; exponents are nonzero.
using ParamMonomial = std::map<Param, long>;

std::string to_string(const ParamMonomial& m);

/// Polynomial over Q in formal constants. A cyclotomic parameter of order m is reduced
/// modulo the m-th cyclotomic polynomial, so zeta^m = 1 and equal values compare equal.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(const Rat& c);
    ParamPoly(long c) : ParamPoly(Rat(c)) {}

    static ParamPoly param(const Param& p);
    /// c * m, reduced.
    static ParamPoly monomial(const ParamMonomial& m, const Rat& c = 1);

    const std::map<ParamMonomial, Rat>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_rational() const;
    /// Throws NotRational.
    Rat rational_value() const;
    /// A single term over unit or cyclotomic parameters, or a monomial in unit parameters
    /// times a nonzero element of one cyclotomic field.
    bool is_unit() const;
    /// Throws DivisionByZero unless is_unit().
    ParamPoly inverse() const;
    /// Negative exponents need a unit.
    ParamPoly pow(long e) const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }
    friend bool operator<(const ParamPoly& a, const ParamPoly& b) { return a.terms_ < b.terms_; }

    std::string to_string() const;

private:
    void add_term(const ParamMonomial& m, const Rat& c);

    std::map<ParamMonomial, Rat> terms_;
};

using MatP = Matrix<ParamPoly>;

/// The m-th cyclotomic polynomial.
Poly cyclotomic_polynomial(unsigned m);

ParamPoly det(const MatP& m);
MatP lift(const MatQ& m);
std::string to_string(const MatP& m);

} // namespace pvg
