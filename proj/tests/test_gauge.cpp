#include "doctest.h"

#include "pvgauge/gauge.hpp"
#include "support/generators.hpp"

using namespace pvg;
using pvg::testing::Gen;

namespace {

const RatFn X = RatFn::x();
RatFn rf(long c) { return RatFn(c); }

} // namespace

TEST_CASE("gauge_act examples") {
    Gen g(21);
    MatRF a = g.matrix(2, 2);
    CHECK(gauge_act(MatRF::identity(2), a) == a);

    // U'U^{-1} for diagonal U = diag(x, 1) is diag(1/x, 0)
    CHECK(gauge_act(MatRF::diagonal({X, rf(1)}), MatRF(2, 2)) == MatRF::diagonal({X.inverse(), rf(0)}));

    MatRF u{{rf(1), X}, {rf(0), rf(1)}};
    MatRF v = MatRF::diagonal({X, rf(1)});
    MatRF n{{rf(0), rf(1)}, {rf(0), rf(0)}};
    // V acts on N: V'V^{-1} = diag(1/x, 0), V N V^{-1} = [[0, x], [0, 0]]
    MatRF vn{{X.inverse(), X}, {rf(0), rf(0)}};
    CHECK(gauge_act(v, n) == vn);
    CHECK(gauge_act(u, gauge_act(v, n)) == gauge_act(u * v, n));

    CHECK_THROWS_AS(gauge_act(MatRF(2, 2), n), SingularMatrix);
    CHECK_THROWS_AS(gauge_act(MatRF::identity(3), n), DimensionMismatch);
}

TEST_CASE("h_mul and h_inv examples") {
    Gen g(22);
    HPair e = HPair::identity(2);
    HPair q(g.matrix(2, 2), g.invertible(2, 2));
    CHECK(h_mul(e, q) == q);
    HPair p(g.matrix(2, 2), g.invertible(2, 2));
    CHECK(h_mul(p, h_inv(p)) == e);
    CHECK(h_mul(h_inv(p), p) == e);

    MatRF a{{rf(5) * X}};
    HPair lhs(MatRF(1, 1), MatRF{{X}});
    HPair rhs(a, MatRF::identity(1));
    HPair prod = h_mul(lhs, rhs);
    CHECK(prod.a() == a);
    CHECK(prod.f() == MatRF{{X}});

    CHECK(h_inv(e) == e);
    MatRF b = g.matrix(2, 1);
    CHECK(h_inv(HPair(b, MatRF::identity(2))) == HPair(-b, MatRF::identity(2)));
    HPair scalar(MatRF{{rf(1)}}, MatRF{{X}});
    CHECK(h_inv(scalar) == HPair(MatRF{{rf(-1)}}, MatRF{{X.inverse()}}));

    CHECK_THROWS_AS(HPair(b, MatRF(2, 2)), SingularMatrix);
}

TEST_CASE("delta_elem examples") {
    CHECK(delta_elem(MatRF::identity(2)) == HPair::identity(2));
    HPair d = delta_elem(MatRF::diagonal({X, rf(1)}));
    CHECK(d.a() == MatRF::diagonal({X.inverse(), rf(0)}));
    CHECK(d.f() == MatRF::diagonal({X, rf(1)}));

    MatRF u{{rf(1), X}, {rf(0), rf(1)}};
    MatRF v = MatRF::diagonal({X, rf(1)});
    CHECK(h_mul(delta_elem(u), delta_elem(v)) == delta_elem(u * v));
    CHECK_THROWS_AS(delta_elem(MatRF(2, 2)), SingularMatrix);
}

TEST_CASE("conjugation_action_check examples") {
    Gen g(23);
    MatRF a = g.matrix(2, 2);
    CHECK(conjugation_action_check(MatRF::identity(2), a) == a);
    CHECK(conjugation_action_check(MatRF::diagonal({X, rf(1)}), MatRF(2, 2)) ==
          MatRF::diagonal({X.inverse(), rf(0)}));
    // n = 1: U'U^{-1} = 2/x and conjugation is trivial, so 2/x + 1/x = 3/x
    CHECK(conjugation_action_check(MatRF{{X * X}}, MatRF{{X.inverse()}}) == MatRF{{rf(3) / X}});
}

TEST_CASE("group laws on random samples") {
    Gen g(24);
    for (std::size_t n = 1; n <= 2; ++n)
        for (int i = 0; i < 25; ++i) {
            HPair p(g.matrix(n, 2), g.invertible(n, 1));
            HPair q(g.matrix(n, 2), g.invertible(n, 1));
            HPair r(g.matrix(n, 1), g.invertible(n, 1));
            CHECK(h_mul(h_mul(p, q), r) == h_mul(p, h_mul(q, r)));
            CHECK(h_mul(p, HPair::identity(n)) == p);

            // M_n(K) x {1} is normal
            HPair conj = h_mul(h_mul(p, HPair(g.matrix(n, 2), MatRF::identity(n))), h_inv(p));
            CHECK(conj.f() == MatRF::identity(n));

            MatRF u = g.invertible(n, 1), v = g.invertible(n, 1), a = g.matrix(n, 2);
            CHECK(gauge_act(u * v, a) == gauge_act(u, gauge_act(v, a)));
            CHECK(h_inv(delta_elem(u)) == delta_elem(mat_inverse(u).inverse));
            CHECK(conjugation_action_check(u, a) == gauge_act(u, a));
        }
}
