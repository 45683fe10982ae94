#pragma once

#include "pvgauge/closedform.hpp"
#include "pvgauge/gauge.hpp"

#include <vector>

namespace pvg {

/// The residual M' - A2 M + M A1 of a rejected candidate.
class NotAnIntertwiner : public Error {
public:
    NotAnIntertwiner(const std::string& what, MatRF residual) : Error(what), residual_(std::move(residual)) {}
    const MatRF& residual() const noexcept { return residual_; }

private:
    MatRF residual_;
};

class Obj {
public:
    explicit Obj(MatRF rep) : cls_(std::move(rep)) {}
    explicit Obj(GaugeClass cls) : cls_(std::move(cls)) {}

    const GaugeClass& cls() const noexcept { return cls_; }
    const MatRF& rep() const noexcept { return cls_.rep(); }
    std::size_t n() const noexcept { return cls_.n(); }

    friend bool operator==(const Obj& a, const Obj& b) { return a.cls_ == b.cls_; }
    friend bool operator!=(const Obj& a, const Obj& b) { return !(a == b); }

private:
    GaugeClass cls_;
};

/// An intertwiner M with M' = A2 M - M A1, held as a concrete representative.
class Arrow {
public:
    const Obj& src() const noexcept { return src_; }
    const Obj& dst() const noexcept { return dst_; }
    const MatRF& m() const noexcept { return m_; }

private:
    Arrow(Obj src, Obj dst, MatRF m) : src_(std::move(src)), dst_(std::move(dst)), m_(std::move(m)) {}
    friend Arrow arrow_new(const Obj&, const Obj&, const MatRF&);

    Obj src_;
    Obj dst_;
    MatRF m_;
};

/// Throws NotAnIntertwiner, DimensionMismatch.
Arrow arrow_new(const Obj& src, const Obj& dst, const MatRF& m);
Arrow arrow_identity(const Obj& obj);
/// g after f. Throws SourceTargetMismatch.
Arrow arrow_compose(const Arrow& g, const Arrow& f);
/// Throws SingularMatrix.
Arrow arrow_inverse(const Arrow& f);
/// U2^{-1} M U1 from [B1] to [B2], where A_i = gauge_act(U_i, B_i). Throws SingularMatrix.
Arrow arrow_transport(const Arrow& f, const MatRF& u1, const MatRF& u2);
/// Equal rank over Q(x). Throws SourceTargetMismatch.
bool arrow_equal(const Arrow& f, const Arrow& g);
/// Sum in the hom-set. Throws SourceTargetMismatch.
Arrow arrow_add(const Arrow& f, const Arrow& g);
Arrow arrow_scale(const Arrow& f, const Rat& c);

/// F2^{-1} M F1, checked constant, and f c1(g) = c2(g) f for each listed generator.
/// Throws SourceTargetMismatch, NotConstant, IntertwiningFails.
MatP to_constant_morphism(const Arrow& f, const FundamentalMatrix& f1, const FundamentalMatrix& f2,
                          const std::vector<GaloisGen>& gens = {});
/// M = F2 c F1^{-1} as an arrow [system(F1)] -> [system(F2)]. Throws NotRational, InputError
/// (entries of c involve parameters).
Arrow from_constant_morphism(const MatP& c, const FundamentalMatrix& f1, const FundamentalMatrix& f2);

} // namespace pvg
