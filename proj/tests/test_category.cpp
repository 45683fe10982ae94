#include "doctest.h"

#include "pvgauge/category.hpp"
#include "pvgauge/ratsol.hpp"
#include "support/generators.hpp"

using namespace pvg;
using pvg::testing::Gen;

namespace {

const RatFn X = RatFn::x();
RatFn rf(long c) { return RatFn(c); }

Obj obj1(const RatFn& a) { return Obj(MatRF{{a}}); }

const MatRF kUnipotent{{RatFn(0), RatFn::x().inverse()}, {RatFn(0), RatFn(0)}};

} // namespace

TEST_CASE("arrow_new examples") {
    Gen g(51);
    Obj a(g.matrix(2, 2));
    Arrow id = arrow_new(a, a, MatRF::identity(2));
    CHECK(id.m() == MatRF::identity(2));
    CHECK(arrow_identity(a).m() == MatRF::identity(2));

    Arrow f = arrow_new(obj1(rf(0)), obj1(X.inverse()), MatRF{{X}});
    CHECK(f.m() == MatRF{{X}});

    try {
        arrow_new(obj1(rf(0)), obj1(X.inverse()), MatRF{{rf(1)}});
        FAIL("expected NotAnIntertwiner");
    } catch (const NotAnIntertwiner& e) {
        CHECK(e.residual() == MatRF{{-X.inverse()}});
    }
    CHECK_THROWS_AS(arrow_new(a, a, MatRF::identity(3)), DimensionMismatch);
}

TEST_CASE("arrow_compose examples") {
    Obj zero = obj1(rf(0)), one = obj1(X.inverse()), two = obj1(rf(2) / X);
    Arrow f = arrow_new(zero, one, MatRF{{X}});
    Arrow g = arrow_new(one, two, MatRF{{X}});
    Arrow gf = arrow_compose(g, f);
    CHECK(gf.m() == MatRF{{X * X}});
    CHECK(gf.src() == zero);
    CHECK(gf.dst() == two);
    CHECK(arrow_compose(f, arrow_identity(zero)).m() == f.m());
    CHECK(arrow_compose(arrow_identity(one), f).m() == f.m());
    CHECK_THROWS_AS(arrow_compose(f, g), SourceTargetMismatch);
}

TEST_CASE("arrow_inverse examples") {
    Obj zero = obj1(rf(0)), one = obj1(X.inverse());
    Arrow id = arrow_identity(one);
    CHECK(arrow_inverse(id).m() == id.m());
    Arrow f = arrow_new(zero, one, MatRF{{X}});
    Arrow inv = arrow_inverse(f);
    CHECK(inv.m() == MatRF{{X.inverse()}});
    CHECK(inv.src() == one);
    CHECK(inv.dst() == zero);
    Arrow z = arrow_new(zero, zero, MatRF(1, 1));
    CHECK_THROWS_AS(arrow_inverse(z), SingularMatrix);
}

TEST_CASE("arrow_transport examples") {
    Gen g(52);
    Obj a(g.matrix(2, 2));
    Arrow id = arrow_identity(a);
    Arrow same = arrow_transport(id, MatRF::identity(2), MatRF::identity(2));
    CHECK(same.m() == id.m());
    CHECK(same.src() == a);

    Arrow f = arrow_new(obj1(rf(0)), obj1(X.inverse()), MatRF{{X}});
    Arrow t = arrow_transport(f, MatRF{{rf(1)}}, MatRF{{X}});
    CHECK(t.m() == MatRF{{rf(1)}});
    CHECK(t.src().rep() == MatRF{{rf(0)}});
    CHECK(t.dst().rep() == MatRF{{rf(0)}});
    CHECK_THROWS_AS(arrow_transport(f, MatRF(1, 1), MatRF{{X}}), SingularMatrix);
}

TEST_CASE("arrow_equal examples") {
    Obj zero2(MatRF(2, 2));
    Arrow full = arrow_identity(zero2);
    Arrow half = arrow_new(zero2, zero2, MatRF::diagonal({rf(1), rf(0)}));
    CHECK(arrow_equal(full, full));
    CHECK_FALSE(arrow_equal(full, half));
    Obj zero = obj1(rf(0));
    CHECK(arrow_equal(arrow_new(zero, zero, MatRF{{rf(1)}}), arrow_new(zero, zero, MatRF{{rf(2)}})));
    CHECK_THROWS_AS(arrow_equal(full, arrow_identity(Obj(kUnipotent))), SourceTargetMismatch);
}

TEST_CASE("to_constant_morphism examples") {
    auto fu = fundamental_2x2_triangular(kUnipotent);
    Obj u(kUnipotent);
    CHECK(to_constant_morphism(arrow_identity(u), fu, fu) == MatP::identity(2));

    Obj zero = obj1(rf(0)), one = obj1(X.inverse());
    auto f1 = fundamental_for_diagonal(MatRF{{rf(0)}});
    auto f2 = fundamental_for_diagonal(MatRF{{X.inverse()}});
    CHECK(f2.entries()(0, 0) == ClosedFormScalar(X));
    Arrow f = arrow_new(zero, one, MatRF{{X}});
    CHECK(to_constant_morphism(f, f1, f2) == MatP::identity(1));
    CHECK_THROWS_AS(to_constant_morphism(f, f2, f1), SourceTargetMismatch);

    // the unipotent identity commutes with the log shift
    GaloisGen shift("shift", {}, {}, {{0, ParamPoly::param(Param::free("c1"))}});
    CHECK(to_constant_morphism(arrow_identity(u), fu, fu, {shift}) == MatP::identity(2));
}

TEST_CASE("to_constant_morphism with a constant change of basis") {
    // diag(1/(2x), 1/(2x)) with F = diag(x^{1/2}, x^{1/2}) and F2 = F * [[1, 1], [0, 1]]:
    // M = I gives f = [[1, -1], [0, 1]], which commutes with the scalar action of mu2
    MatRF d = MatRF::diagonal({rf(1) / (rf(2) * X), rf(1) / (rf(2) * X)});
    auto f1 = fundamental_for_diagonal(d);
    auto f2 = right_constant(f1, MatQ{{Rat(1), Rat(1)}, {Rat(0), Rat(1)}});
    GaloisGen mu2("mu2", {{0, Rat(1, 2), ParamPoly(-1)}}, {}, {});
    Arrow id = arrow_identity(Obj(d));
    MatP c = to_constant_morphism(id, f1, f2, {mu2});
    CHECK(c == MatP{{ParamPoly(1), ParamPoly(-1)}, {ParamPoly(0), ParamPoly(1)}});
}

TEST_CASE("from_constant_morphism examples") {
    auto fu = fundamental_2x2_triangular(kUnipotent);
    Arrow idu = from_constant_morphism(MatP::identity(2), fu, fu);
    CHECK(idu.m() == MatRF::identity(2));

    auto f1 = fundamental_for_diagonal(MatRF{{rf(0)}});
    auto f2 = fundamental_for_diagonal(MatRF{{X.inverse()}});
    Arrow m = from_constant_morphism(MatP::identity(1), f1, f2);
    CHECK(m.m() == MatRF{{X}});
    CHECK(to_constant_morphism(m, f1, f2) == MatP::identity(1));

    auto fh = fundamental_for_diagonal(MatRF{{rf(1) / (rf(2) * X)}});
    CHECK_THROWS_AS(from_constant_morphism(MatP::identity(1), f1, fh), NotRational);
    MatP c1{{ParamPoly::param(Param::free("c1"))}};
    CHECK_THROWS_AS(from_constant_morphism(c1, f1, f2), InputError);
}

TEST_CASE("category axioms on random composable triples") {
    Gen g(53);
    for (int i = 0; i < 30; ++i) {
        std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        MatRF a1 = g.matrix(n, 2);
        MatRF u = g.invertible(n, 1), v = g.invertible(n, 1), w = g.invertible(n, 1);
        Obj o1(a1), o2(gauge_act(u, a1));
        Obj o3(gauge_act(v, o2.rep())), o4(gauge_act(w, o3.rep()));
        Arrow f = arrow_new(o1, o2, u), gg = arrow_new(o2, o3, v), h = arrow_new(o3, o4, w);
        Arrow left = arrow_compose(arrow_compose(h, gg), f);
        Arrow right = arrow_compose(h, arrow_compose(gg, f));
        CHECK(left.m() == right.m());
        CHECK(arrow_compose(f, arrow_identity(o1)).m() == f.m());
        CHECK(arrow_compose(arrow_identity(o2), f).m() == f.m());

        Arrow inv = arrow_inverse(f);
        CHECK(arrow_compose(inv, f).m() == MatRF::identity(n));
        CHECK(arrow_compose(f, inv).m() == MatRF::identity(n));

        MatRF t1 = g.invertible(n, 1), t2 = g.invertible(n, 1);
        Arrow t = arrow_transport(f, t1, t2);
        CHECK(rank(t.m()) == rank(f.m()));
        CHECK(gauge_act(t1, t.src().rep()) == f.src().rep());
        CHECK(gauge_act(t2, t.dst().rep()) == f.dst().rep());
    }
}

TEST_CASE("hom-sets are Q-linear") {
    Gen g(54);
    int tested = 0;
    for (int i = 0; i < 20; ++i) {
        std::size_t n = static_cast<std::size_t>(g.integer(1, 2));
        MatRF a1 = g.fuchsian(n, 0, 2, false), a2 = g.fuchsian(n, -2, 0, false);
        auto sol = rational_solutions(SylvesterSystem(a1, a2));
        if (sol.basis.empty())
            continue;
        ++tested;
        Obj s(a1), d(a2);
        Arrow acc = arrow_new(s, d, MatRF(n, n));
        for (const auto& b : sol.basis)
            acc = arrow_add(acc, arrow_scale(arrow_new(s, d, b), g.rational()));
        CHECK(sylvester_residual(acc.m(), SylvesterSystem(a1, a2)).is_zero());
    }
    CHECK(tested > 5);
}

TEST_CASE("constant morphisms: round trips and functoriality") {
    Gen g(55);
    // D = diag(a, a) so every constant matrix commutes with D
    RatFn a = rf(1) / (rf(3) * X) + rf(1);
    MatRF d = MatRF::diagonal({a, a});
    auto fd = fundamental_for_diagonal(d);
    GaloisGen gen("g", {{0, Rat(1, 3), ParamPoly::param(Param::cyclotomic("zeta3", 3))}},
                  {{X, ParamPoly::param(Param::unit("chi"))}}, {});
    for (int i = 0; i < 20; ++i) {
        std::vector<FundamentalMatrix> fs;
        std::vector<MatRF> ws;
        std::vector<MatQ> gammas;
        for (int k = 0; k < 3; ++k) {
            MatRF w = g.invertible(2, 1);
            MatQ gamma = mat_eval(g.unimodular(2), 0);
            ws.push_back(w);
            gammas.push_back(gamma);
            fs.push_back(gauge_fundamental(w, right_constant(fd, gamma)));
        }
        Obj o0(fs[0].system()), o1(fs[1].system()), o2(fs[2].system());
        // M = W_j C W_i^{-1} for a constant C
        MatRF c01 = g.unimodular(2), c12 = g.unimodular(2);
        Arrow f = arrow_new(o0, o1, ws[1] * c01 * mat_inverse(ws[0]).inverse);
        Arrow h = arrow_new(o1, o2, ws[2] * c12 * mat_inverse(ws[1]).inverse);

        MatP kf = to_constant_morphism(f, fs[0], fs[1], {gen});
        MatP kh = to_constant_morphism(h, fs[1], fs[2], {gen});
        CHECK(to_constant_morphism(arrow_compose(h, f), fs[0], fs[2], {gen}) == kh * kf);
        CHECK(from_constant_morphism(kf, fs[0], fs[1]).m() == f.m());
        CHECK(to_constant_morphism(from_constant_morphism(kf, fs[0], fs[1]), fs[0], fs[1]) == kf);
    }
}
