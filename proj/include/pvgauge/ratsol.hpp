#pragma once

#include "pvgauge/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pvg {

/// The intertwiner equation M' = A2 M - M A1. Triviality of [A] is the case a1 = 0, a2 = A.
class SylvesterSystem {
public:
    /// Throws DimensionMismatch unless a1, a2 are square of the same size.
    SylvesterSystem(MatRF a1, MatRF a2);

    const MatRF& a1() const noexcept { return a1_; }
    const MatRF& a2() const noexcept { return a2_; }
    std::size_t n() const noexcept { return a1_.n(); }

private:
    MatRF a1_;
    MatRF a2_;
};

enum class BoundProvenance { computed, user_supplied };

std::string to_string(BoundProvenance p);

struct PoleBound {
    Poly factor; ///< monic, squarefree
    unsigned bound = 0;
};

/// Solutions are searched in the form P / Q with Q = prod factor^bound and deg P <= numerator_degree.
struct DegreeBounds {
    std::vector<PoleBound> pole_orders;
    unsigned numerator_degree = 0;
    BoundProvenance provenance = BoundProvenance::computed;

    Poly denominator() const;
};

struct RatSolBasis {
    std::vector<MatRF> basis;
    SylvesterSystem system;
    DegreeBounds bounds_used;
};

/// M' - A2 M + M A1; zero iff m is an intertwiner.
MatRF sylvester_residual(const MatRF& m, const SylvesterSystem& sys);

/// L = I (x) A2 - A1^T (x) I, so that vec(residual) = vec(M)' - L vec(M).
MatRF vectorize(const SylvesterSystem& sys);

/// Pole-order and degree bounds from the local exponents of the vectorized system.
/// Complete for simple poles (finite and at infinity); only integer exponents constrain the bound.
/// Throws NeedsUserBound on a pole of order >= 2 or a non-simple pole at infinity.
DegreeBounds denominator_bound(const SylvesterSystem& sys);

/// Q-basis, in reduced echelon form, of the intertwiners admitted by the bounds.
/// With computed bounds this is the full space of rational solutions over Q(x).
RatSolBasis rational_solutions(const SylvesterSystem& sys, const std::optional<DegreeBounds>& bounds = {});

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'c0de'2024'0001ull;

struct SearchOptions {
    std::uint64_t seed = kDefaultSeed;
    unsigned random_trials = 16;
    unsigned threads = 1;
    std::optional<DegreeBounds> bounds;
};

enum class SearchTier {
    identity,            ///< A == B, witness I
    empty_space,         ///< no nonzero intertwiner
    basis_element,
    random_combination,
    generic_determinant, ///< det(sum t_i M_i) decided symbolically
};

std::string to_string(SearchTier t);

struct EquivalenceResult {
    std::optional<MatRF> witness; ///< U with gauge_act(U, A) = B
    SearchTier tier = SearchTier::identity;
    std::string certificate;
    std::size_t solution_dimension = 0;
    std::optional<DegreeBounds> bounds;
    std::uint64_t seed = kDefaultSeed;

    bool found() const noexcept { return witness.has_value(); }
};

/// Decides [A] = [B] within the rational intertwiners. Throws NeedsUserBound, Inconclusive.
/// A none-found answer certifies that no invertible U over Q(x) exists.
EquivalenceResult equivalent(const MatRF& a, const MatRF& b, const SearchOptions& opts = {});

/// equivalent(0, A); a witness U satisfies U' = A U.
EquivalenceResult is_trivial(const MatRF& a, const SearchOptions& opts = {});

} // namespace pvg
