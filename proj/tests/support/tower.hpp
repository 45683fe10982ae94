#pragma once

// Random closed-form scalars and matching Galois generators.

#include "pvgauge/closedform.hpp"
#include "support/generators.hpp"

namespace pvg::testing {

struct Tower {
    Param c1 = Param::free("c1");
    Param chi = Param::unit("chi");
    Param zeta = Param::cyclotomic("zeta6", 6);

    std::vector<Rat> points{Rat(0), Rat(1), Rat(-1)};
    std::vector<RatFn> exp_args{RatFn::x(), RatFn::x() * RatFn::x(), RatFn::x().inverse()};
    std::vector<Rat> log_points{Rat(0), Rat(1)};

    ClosedFormScalar term(Gen& g) const {
        Signature s;
        if (g.coin()) {
            Rat e(g.integer(1, 5), 6);
            e += g.integer(-1, 1);
            s.powers[points[static_cast<std::size_t>(g.integer(0, 2))]] = e;
        }
        if (g.coin())
            for (const auto& r : exp_args)
                s.exp_arg += r * RatFn(g.integer(-1, 1));
        if (g.coin())
            s.logs[log_points[static_cast<std::size_t>(g.integer(0, 1))]] = static_cast<unsigned>(g.integer(1, 2));
        ParamMonomial m;
        if (g.integer(0, 2) == 0)
            m[c1] = 1;
        if (long e = g.integer(-1, 1))
            m[chi] = e;
        return ClosedFormScalar::term(g.nonzero_ratfn(2, 1), m, s);
    }

    ClosedFormScalar scalar(Gen& g) const {
        ClosedFormScalar s;
        long terms = g.integer(1, 3);
        for (long i = 0; i < terms; ++i)
            s += term(g);
        return s;
    }

    ParamPoly shift(Gen& g) const { return ParamPoly(g.rational()) + ParamPoly::param(c1) * ParamPoly(g.rational()); }

    GaloisGen gen(Gen& g, const std::string& name) const {
        std::vector<PowerAction> pw;
        for (const auto& a : points)
            pw.push_back({a, Rat(1, 6), ParamPoly::param(zeta).pow(g.integer(0, 5))});
        std::vector<ExpAction> ex;
        for (const auto& r : exp_args)
            ex.push_back({r, ParamPoly::param(chi).pow(g.integer(-2, 2)) * ParamPoly(g.coin() ? 2 : -1)});
        std::vector<LogAction> lg;
        for (const auto& b : log_points)
            lg.push_back({b, shift(g)});
        return GaloisGen(name, std::move(pw), std::move(ex), std::move(lg));
    }
};

} // namespace pvg::testing
