#pragma once

#include "pvgauge/matrix.hpp"

namespace pvg {

/// U'U^{-1} + UAU^{-1}. Throws SingularMatrix, DimensionMismatch.
MatRF gauge_act(const MatRF& u, const MatRF& a);

/// Element (A, F) of M_n(K) x GL_n(K) with the law (A,F)(B,G) = (A + FBF^{-1}, FG).
class HPair {
public:
    /// Throws SingularMatrix if f is not invertible, DimensionMismatch on shape errors.
    HPair(MatRF a, MatRF f);

    static HPair identity(std::size_t n);

    const MatRF& a() const noexcept { return a_; }
    const MatRF& f() const noexcept { return f_; }
    std::size_t n() const noexcept { return a_.n(); }

    friend bool operator==(const HPair& p, const HPair& q) { return p.a_ == q.a_ && p.f_ == q.f_; }
    friend bool operator!=(const HPair& p, const HPair& q) { return !(p == q); }

private:
    HPair(MatRF a, MatRF f, MatRF f_inv) : a_(std::move(a)), f_(std::move(f)), f_inv_(std::move(f_inv)) {}
    friend HPair h_mul(const HPair&, const HPair&);
    friend HPair h_inv(const HPair&);
    friend HPair delta_elem(const MatRF&);

    MatRF a_;
    MatRF f_;
    MatRF f_inv_;
};

HPair h_mul(const HPair& p, const HPair& q);
/// (A,F)^{-1} = (-F^{-1}AF, F^{-1})
HPair h_inv(const HPair& p);
/// (U'U^{-1}, U), an element of the subgroup Delta_n(K).
HPair delta_elem(const MatRF& u);
/// Evaluates (U'U^{-1}, U)(A, 1)(0, U^{-1}) in H_n(K); checks the second component is the
/// identity and returns the first, which equals gauge_act(u, a).
MatRF conjugation_action_check(const MatRF& u, const MatRF& a);

/// A class [A] in Z_n(K), held through a chosen representative.
class GaugeClass {
public:
    explicit GaugeClass(MatRF rep);
    const MatRF& rep() const noexcept { return rep_; }
    std::size_t n() const noexcept { return rep_.n(); }

    /// Representative-level comparison only; class equality is decided by `equivalent`.
    friend bool operator==(const GaugeClass& a, const GaugeClass& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const GaugeClass& a, const GaugeClass& b) { return !(a == b); }

private:
    MatRF rep_;
};

} // namespace pvg
