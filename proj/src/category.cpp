#include "pvgauge/category.hpp"

#include "pvgauge/ratsol.hpp"

namespace pvg {

Arrow arrow_new(const Obj& src, const Obj& dst, const MatRF& m) {
    MatRF r = sylvester_residual(m, SylvesterSystem(src.rep(), dst.rep()));
    if (!r.is_zero())
        throw NotAnIntertwiner("M is not an intertwiner; residual " + to_string(r), r);
    return Arrow(src, dst, m);
}

Arrow arrow_identity(const Obj& obj) {
    return arrow_new(obj, obj, MatRF::identity(obj.n()));
}

Arrow arrow_compose(const Arrow& g, const Arrow& f) {
    if (f.dst() != g.src())
        throw SourceTargetMismatch("target of the first arrow differs from the source of the second");
    return arrow_new(f.src(), g.dst(), g.m() * f.m());
}

Arrow arrow_inverse(const Arrow& f) {
    return arrow_new(f.dst(), f.src(), mat_inverse(f.m()).inverse);
}

Arrow arrow_transport(const Arrow& f, const MatRF& u1, const MatRF& u2) {
    MatRF u1_inv = mat_inverse(u1).inverse;
    MatRF u2_inv = mat_inverse(u2).inverse;
    Obj b1(gauge_act(u1_inv, f.src().rep()));
    Obj b2(gauge_act(u2_inv, f.dst().rep()));
    return arrow_new(b1, b2, u2_inv * f.m() * u1);
}

namespace {

void require_parallel(const Arrow& f, const Arrow& g) {
    if (f.src() != g.src() || f.dst() != g.dst())
        throw SourceTargetMismatch("arrows have different sources or targets");
}

} // namespace

bool arrow_equal(const Arrow& f, const Arrow& g) {
    require_parallel(f, g);
    return rank(f.m()) == rank(g.m());
}

Arrow arrow_add(const Arrow& f, const Arrow& g) {
    require_parallel(f, g);
    return arrow_new(f.src(), f.dst(), f.m() + g.m());
}

Arrow arrow_scale(const Arrow& f, const Rat& c) {
    return arrow_new(f.src(), f.dst(), f.m() * RatFn(c));
}

MatP to_constant_morphism(const Arrow& f, const FundamentalMatrix& f1, const FundamentalMatrix& f2,
                          const std::vector<GaloisGen>& gens) {
    if (f1.system() != f.src().rep() || f2.system() != f.dst().rep())
        throw SourceTargetMismatch("fundamental matrices do not belong to the arrow's source and target");
    CFMatrix k = cf_inverse(f2.entries()) * lift(f.m()) * f1.entries();
    if (!cf_derive(k).is_zero())
        throw NotConstant("F2^{-1} M F1 is not constant: " + to_string(k));
    MatP c = to_constant(k);
    for (const auto& g : gens) {
        MatP c1 = rep_matrix(f1, g);
        MatP c2 = rep_matrix(f2, g);
        if (c * c1 != c2 * c)
            throw IntertwiningFails("f does not intertwine the actions of " + g.name());
    }
    return c;
}

Arrow from_constant_morphism(const MatP& c, const FundamentalMatrix& f1, const FundamentalMatrix& f2) {
    if (c.rows() != f2.n() || c.cols() != f1.n())
        throw DimensionMismatch("constant morphism has the wrong size");
    for (const auto& e : c.data())
        if (!e.is_rational())
            throw InputError("constant morphism entry " + e.to_string() + " involves parameters");
    MatRF m = to_rational(f2.entries() * lift(c) * cf_inverse(f1.entries()));
    return arrow_new(Obj(f1.system()), Obj(f2.system()), m);
}

} // namespace pvg
