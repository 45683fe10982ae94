#pragma once

#include "pvgauge/param.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pvg {

/// Transcendental part of a basic term: prod (x-a)^e * exp(r) * prod log(x-b)^k.
/// Power exponents lie strictly between 0 and 1; integer parts belong to the coefficient.
struct Signature {
    std::map<Rat, Rat> powers;          ///< a -> e
    RatFn exp_arg;                      ///< zero means no exponential factor
    std::map<Rat, unsigned> logs;       ///< b -> k > 0

    bool empty() const { return powers.empty() && exp_arg.is_zero() && logs.empty(); }

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.powers == b.powers && a.exp_arg == b.exp_arg && a.logs == b.logs;
    }
    friend bool operator<(const Signature& a, const Signature& b);

    std::string to_string() const;
};

/// Finite sum of coef(x) * param monomial * signature, merged by (signature, monomial).
class ClosedFormScalar {
public:
    using Key = std::pair<Signature, ParamMonomial>;

    ClosedFormScalar() = default;
    ClosedFormScalar(const RatFn& r);
    ClosedFormScalar(long c) : ClosedFormScalar(RatFn(c)) {}
    ClosedFormScalar(const ParamPoly& p);

    /// (x - a)^e for any rational e.
    static ClosedFormScalar power(const Rat& a, const Rat& e);
    static ClosedFormScalar exp(const RatFn& r);
    static ClosedFormScalar log(const Rat& b, unsigned k = 1);
    /// coef * monomial * sig, normalizing exponents.
    static ClosedFormScalar term(const RatFn& coef, const ParamMonomial& m, const Signature& sig);

    const std::map<Key, RatFn>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_rational() const;
    /// Throws NotRational.
    RatFn rational_value() const;
    /// Throws NotConstant.
    ParamPoly constant_value() const;

    ClosedFormScalar operator-() const;
    ClosedFormScalar& operator+=(const ClosedFormScalar& o);
    ClosedFormScalar& operator-=(const ClosedFormScalar& o);
    ClosedFormScalar& operator*=(const ClosedFormScalar& o);

    friend ClosedFormScalar operator+(ClosedFormScalar a, const ClosedFormScalar& b) { return a += b; }
    friend ClosedFormScalar operator-(ClosedFormScalar a, const ClosedFormScalar& b) { return a -= b; }
    friend ClosedFormScalar operator*(const ClosedFormScalar& a, const ClosedFormScalar& b);

    friend bool operator==(const ClosedFormScalar& a, const ClosedFormScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ClosedFormScalar& a, const ClosedFormScalar& b) { return !(a == b); }

    std::string to_string() const;

private:
    void add(const Key& k, const RatFn& c);

    std::map<Key, RatFn> terms_;
};

ClosedFormScalar cf_derive(const ClosedFormScalar& s);

using CFMatrix = Matrix<ClosedFormScalar>;

CFMatrix lift(const MatRF& m);
CFMatrix lift(const MatP& m);
CFMatrix cf_derive(const CFMatrix& m);
ClosedFormScalar det(const CFMatrix& m);
/// Inverse when det is a single invertible term; throws NonUnitDeterminant otherwise.
CFMatrix cf_inverse(const CFMatrix& m);
/// Throws NotRational.
MatRF to_rational(const CFMatrix& m);
/// Throws NotConstant.
MatP to_constant(const CFMatrix& m);
std::string to_string(const CFMatrix& m);

/// ρ + sum e_j log(x - b_j) with ρ in Q(x). Throws NonRationalResidueOrPole.
ClosedFormScalar antiderivative(const RatFn& a);

/// F with F' = system * F and det F != 0.
class FundamentalMatrix {
public:
    /// Throws DimensionMismatch, InputError if F' != system * F, SingularMatrix if det F = 0.
    FundamentalMatrix(CFMatrix entries, MatRF system);

    std::size_t n() const noexcept { return entries_.n(); }
    const CFMatrix& entries() const noexcept { return entries_; }
    const MatRF& system() const noexcept { return system_; }

private:
    CFMatrix entries_;
    MatRF system_;
};

/// diag(exp(∫a_i)). Throws DimensionMismatch, InputError (not diagonal), NonRationalResidueOrPole.
FundamentalMatrix fundamental_for_diagonal(const MatRF& a);
/// [[1, ∫a], [0, 1]] for [[0, a], [0, 0]].
FundamentalMatrix fundamental_2x2_triangular(const MatRF& a);
/// W F, a fundamental matrix of gauge_act(W, system).
FundamentalMatrix gauge_fundamental(const MatRF& w, const FundamentalMatrix& f);
/// F γ for constant invertible γ; same system.
FundamentalMatrix right_constant(const FundamentalMatrix& f, const MatQ& gamma);
/// F' F^{-1}. Throws NotRational, NonUnitDeterminant.
MatRF system_from_fundamental(const CFMatrix& f);
MatRF system_from_fundamental(const FundamentalMatrix& f);

struct PowerAction {
    Rat point;        ///< a
    Rat exponent;     ///< e0, not an integer
    ParamPoly factor; ///< (x-a)^e0 -> factor * (x-a)^e0
};

struct ExpAction {
    RatFn arg;        ///< r
    ParamPoly factor; ///< exp(r) -> factor * exp(r)
};

struct LogAction {
    Rat point;        ///< b
    ParamPoly shift;  ///< log(x-b) -> log(x-b) + shift
};

/// A differential automorphism fixing Q(x), given on tower generators.
class GaloisGen {
public:
    /// Throws InvalidGenerator: a power factor with factor^q != 1 (q the exponent's denominator),
    /// an exponential factor that is not a unit, dependent exponential arguments, duplicate entries.
    GaloisGen(std::string name, std::vector<PowerAction> powers, std::vector<ExpAction> exps,
              std::vector<LogAction> logs);

    /// Fixes every generator of f.
    static GaloisGen identity_for(const FundamentalMatrix& f, std::string name = "id");

    const std::string& name() const noexcept { return name_; }
    const std::vector<PowerAction>& powers() const noexcept { return powers_; }
    const std::vector<ExpAction>& exps() const noexcept { return exps_; }
    const std::vector<LogAction>& logs() const noexcept { return logs_; }

private:
    std::string name_;
    std::vector<PowerAction> powers_;
    std::vector<ExpAction> exps_;
    std::vector<LogAction> logs_;
};

/// g after h. Throws InvalidGenerator unless both tables cover the same generators.
GaloisGen compose(const GaloisGen& g, const GaloisGen& h);

/// Throws UnmappedGenerator.
ClosedFormScalar galois_act(const GaloisGen& g, const ClosedFormScalar& s);
CFMatrix galois_act(const GaloisGen& g, const CFMatrix& m);

/// c with g(F) = F c. Throws NotConstant, UnmappedGenerator.
MatP rep_matrix(const FundamentalMatrix& f, const GaloisGen& g);

struct RepConjugation {
    MatP transported; ///< rep_matrix(F γ, g)
    MatP conjugated;  ///< γ^{-1} rep_matrix(F, g) γ
};

RepConjugation rep_conjugation_check(const FundamentalMatrix& f, const MatQ& gamma, const GaloisGen& g);

struct Representation {
    std::vector<std::pair<GaloisGen, MatP>> images;
};

/// Throws NonUnitDeterminant if some image is not invertible.
Representation representation(const FundamentalMatrix& f, const std::vector<GaloisGen>& gens);

} // namespace pvg
