// Acceptance run: one [PASS]/[FAIL] line per criterion. All comparisons are exact.

#include "pvgauge/category.hpp"
#include "pvgauge/closedform.hpp"
#include "pvgauge/gauge.hpp"
#include "pvgauge/ratsol.hpp"
#include "support/ansatz_oracle.hpp"
#include "support/generators.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include <sys/wait.h>

using namespace pvg;
using pvg::testing::Gen;

namespace {

// Pinned sample sizes and limits.
constexpr int kGroupCasesPerN = 100;
constexpr int kGroupMaxDegree = 2;
constexpr int kOracleSystems = 50;
constexpr unsigned kOracleNumeratorDegree = 8;
constexpr int kGaugeInvarianceSamples = 20;
constexpr int kIdentityTriples = 20;
constexpr int kCategoryTriples = 50;
constexpr int kRoundTrips = 20;
constexpr int kCliRepeats = 3;
constexpr unsigned kCliThreads = 4;
constexpr double kTimeBudgetSeconds = 60.0;

const RatFn X = RatFn::x();
RatFn rf(long c) { return RatFn(c); }

struct Tally {
    long checks = 0;
    long failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures++ == 0)
            first_failure = what;
    }
};

MatRF unipotent() { return MatRF{{rf(0), X.inverse()}, {rf(0), rf(0)}}; }

ParamPoly c1() { return ParamPoly::param(Param::free("c1")); }

GaloisGen mu2() { return GaloisGen("mu2", {{0, Rat(1, 2), ParamPoly(-1)}}, {}, {}); }
GaloisGen log_shift() { return GaloisGen("shift", {}, {}, {{0, c1()}}); }

void group_laws(Tally& t) {
    Gen g(1001);
    for (std::size_t n = 1; n <= 3; ++n)
        for (int i = 0; i < kGroupCasesPerN; ++i) {
            const std::string tag = "n=" + std::to_string(n) + " case " + std::to_string(i);
            HPair p(g.matrix(n, kGroupMaxDegree), g.invertible(n, kGroupMaxDegree));
            HPair q(g.matrix(n, kGroupMaxDegree), g.invertible(n, 1));
            HPair r(g.matrix(n, kGroupMaxDegree), g.invertible(n, 1));
            HPair e = HPair::identity(n);
            t.check(h_mul(h_mul(p, q), r) == h_mul(p, h_mul(q, r)), tag + ": associativity");
            t.check(h_mul(p, e) == p && h_mul(e, p) == p, tag + ": identity");
            t.check(h_mul(p, h_inv(p)) == e && h_mul(h_inv(p), p) == e, tag + ": inverses");

            MatRF u = g.invertible(n, kGroupMaxDegree), v = g.invertible(n, 1);
            t.check(h_mul(delta_elem(u), delta_elem(v)) == delta_elem(u * v), tag + ": Delta closure");
            t.check(h_inv(delta_elem(u)) == delta_elem(mat_inverse(u).inverse), tag + ": Delta inverses");

            HPair normal = h_mul(h_mul(p, HPair(g.matrix(n, kGroupMaxDegree), MatRF::identity(n))), h_inv(p));
            t.check(normal.f() == MatRF::identity(n), tag + ": normality");

            MatRF a = g.matrix(n, kGroupMaxDegree);
            t.check(gauge_act(MatRF::identity(n), a) == a, tag + ": action identity");
            t.check(gauge_act(u * v, a) == gauge_act(u, gauge_act(v, a)), tag + ": action composition");
            t.check(conjugation_action_check(u, a) == gauge_act(u, a), tag + ": action via H_n");
        }
}

void solver_oracle(Tally& t) {
    Gen g(1002);
    const Poly window = (Poly::x() * Poly::linear(1)).pow(4);
    int nonzero = 0;
    for (int i = 0; i < kOracleSystems; ++i) {
        const std::string tag = "system " + std::to_string(i);
        auto n = static_cast<std::size_t>(g.integer(1, 2));
        MatRF a1 = g.fuchsian(n, 0, 2, g.coin());
        MatRF a2 = g.fuchsian(n, -2, 0, false);
        SylvesterSystem sys(a1, a2);
        auto sol = rational_solutions(sys);
        auto oracle = testing::ansatz_solutions(a1, a2, window, kOracleNumeratorDegree);
        t.check(testing::same_span(sol.basis, oracle), tag + ": solution spaces differ");
        nonzero += !sol.basis.empty();
    }
    t.check(nonzero >= kOracleSystems / 5, "too few systems with nonzero solution spaces");
}

void decision_fixtures(Tally& t) {
    auto triv = is_trivial(MatRF{{X.inverse()}});
    t.check(triv.witness && *triv.witness == MatRF{{X}}, "is_trivial([[1/x]]) = [[x]]");
    t.check(!is_trivial(unipotent()).found(), "is_trivial(unipotent) = none-found");
    t.check(!equivalent(MatRF{{rf(0)}}, MatRF{{rf(1) / (rf(2) * X)}}).found(),
            "equivalent([[0]], [[1/(2x)]]) = none-found");
    auto eq = equivalent(MatRF{{rf(0)}}, MatRF{{X.inverse()}});
    t.check(eq.witness && *eq.witness == MatRF{{X}}, "equivalent([[0]], [[1/x]]) = [[x]]");
}

void representation_fixtures(Tally& t) {
    Gen g(1004);
    auto half = fundamental_for_diagonal(MatRF{{rf(1) / (rf(2) * X)}});
    auto uni = fundamental_2x2_triangular(unipotent());
    t.check(rep_matrix(half, mu2()) == MatP{{ParamPoly(-1)}}, "rep of x^(1/2) under mu2");
    t.check(rep_matrix(uni, log_shift()) == MatP{{ParamPoly(1), c1()}, {ParamPoly(0), ParamPoly(1)}},
            "rep of the unipotent matrix under the log shift");

    const std::array<std::pair<const FundamentalMatrix*, GaloisGen>, 2> fixtures{
        std::pair{&half, mu2()}, std::pair{&uni, log_shift()}};
    for (const auto& [f, gen] : fixtures) {
        MatP base = rep_matrix(*f, gen);
        for (int i = 0; i < kGaugeInvarianceSamples; ++i) {
            MatRF w = g.invertible(f->n(), 2);
            t.check(rep_matrix(gauge_fundamental(w, *f), gen) == base, "gauge invariance");
            MatQ gamma = mat_eval(g.unimodular(f->n()), 0);
            for (std::size_t k = 0; k < f->n(); ++k)
                gamma(k, k) *= Rat(k + 2);
            auto conj = rep_conjugation_check(*f, gamma, gen);
            t.check(conj.transported == conj.conjugated, "conjugation by gamma");
        }
    }
}

// Intertwiner identities checked directly on one arrow M: [A1] -> [A2].
void arrow_identities(Tally& t, const MatRF& a1, const MatRF& a2, const MatRF& m, const MatRF& u1,
                      const MatRF& u2, const std::string& tag) {
    MatRF u1_inv = mat_inverse(u1).inverse, u2_inv = mat_inverse(u2).inverse;
    MatRF b1 = gauge_act(u1_inv, a1), b2 = gauge_act(u2_inv, a2);
    MatRF moved = u2_inv * m * u1;
    t.check(mat_derive(moved) == b2 * moved - moved * b1, tag + ": transported covariance");
    if (!det(m).is_zero()) {
        MatRF m_inv = mat_inverse(m).inverse;
        t.check(mat_derive(m_inv) == a1 * m_inv - m_inv * a2, tag + ": inverse formula");
    }
}

void intertwiner_identities(Tally& t) {
    Gen g(1005);
    // shipped fixtures
    {
        Obj zero(MatRF{{rf(0)}}), one(MatRF{{X.inverse()}}), two(MatRF{{rf(2) / X}});
        Arrow f = arrow_new(zero, one, MatRF{{X}}), h = arrow_new(one, two, MatRF{{X}});
        MatRF nm = h.m() * f.m();
        t.check(mat_derive(nm) == two.rep() * nm - nm * zero.rep(), "fixture composition");
        arrow_identities(t, zero.rep(), one.rep(), f.m(), MatRF{{rf(1)}}, MatRF{{X}}, "fixture");
        auto f0 = fundamental_for_diagonal(zero.rep()), f1 = fundamental_for_diagonal(one.rep());
        MatP c = to_constant_morphism(f, f0, f1);
        CFMatrix k = cf_inverse(f1.entries()) * lift(f.m()) * f0.entries();
        t.check(cf_derive(k).is_zero(), "fixture constancy");
        t.check(from_constant_morphism(c, f0, f1).m() == f.m(), "fixture rationality");
        t.check(to_constant_morphism(from_constant_morphism(c, f0, f1), f0, f1) == c, "fixture round trip");

        auto fu = fundamental_2x2_triangular(unipotent());
        Arrow idu = arrow_identity(Obj(unipotent()));
        MatP cu = to_constant_morphism(idu, fu, fu, {log_shift()});
        t.check(cu == MatP::identity(2), "unipotent identity");
        t.check(from_constant_morphism(cu, fu, fu).m() == MatRF::identity(2), "unipotent round trip");
    }

    RatFn a = rf(1) / (rf(3) * X) + rf(1);
    auto fd = fundamental_for_diagonal(MatRF::diagonal({a, a}));
    GaloisGen gen("g", {{0, Rat(1, 3), ParamPoly::param(Param::cyclotomic("zeta3", 3))}},
                  {{X, ParamPoly::param(Param::unit("chi"))}}, {});
    for (int i = 0; i < kIdentityTriples; ++i) {
        const std::string tag = "triple " + std::to_string(i);
        std::vector<FundamentalMatrix> fs;
        std::vector<MatRF> ws;
        for (int k = 0; k < 3; ++k) {
            ws.push_back(g.invertible(2, 1));
            fs.push_back(gauge_fundamental(ws.back(), right_constant(fd, mat_eval(g.unimodular(2), 0))));
        }
        Obj o0(fs[0].system()), o1(fs[1].system()), o2(fs[2].system());
        Arrow f = arrow_new(o0, o1, ws[1] * g.unimodular(2) * mat_inverse(ws[0]).inverse);
        Arrow h = arrow_new(o1, o2, ws[2] * g.unimodular(2) * mat_inverse(ws[1]).inverse);
        MatRF nm = h.m() * f.m();
        t.check(mat_derive(nm) == o2.rep() * nm - nm * o0.rep(), tag + ": composition");
        arrow_identities(t, o0.rep(), o1.rep(), f.m(), g.invertible(2, 1), g.invertible(2, 1), tag);

        CFMatrix k = cf_inverse(fs[1].entries()) * lift(f.m()) * fs[0].entries();
        t.check(cf_derive(k).is_zero(), tag + ": constancy");
        MatP kf = to_constant_morphism(f, fs[0], fs[1], {gen});
        MatP kh = to_constant_morphism(h, fs[1], fs[2], {gen});
        t.check(to_rational(fs[1].entries() * lift(kf) * cf_inverse(fs[0].entries())) == f.m(),
                tag + ": rationality");
        t.check(from_constant_morphism(kf, fs[0], fs[1]).m() == f.m(), tag + ": arrow round trip");
        t.check(to_constant_morphism(from_constant_morphism(kf, fs[0], fs[1]), fs[0], fs[1]) == kf,
                tag + ": constant round trip");
        t.check(to_constant_morphism(arrow_compose(h, f), fs[0], fs[2], {gen}) == kh * kf, tag + ": functoriality");
    }
}

void category_axioms(Tally& t) {
    Gen g(1006);
    for (int i = 0; i < kCategoryTriples; ++i) {
        const std::string tag = "triple " + std::to_string(i);
        auto n = static_cast<std::size_t>(g.integer(1, 3));
        Obj o1(g.matrix(n, 2));
        MatRF u = g.invertible(n, 1), v = g.invertible(n, 1), w = g.invertible(n, 1);
        Obj o2(gauge_act(u, o1.rep()));
        Obj o3(gauge_act(v, o2.rep()));
        Obj o4(gauge_act(w, o3.rep()));
        Arrow f = arrow_new(o1, o2, u), gg = arrow_new(o2, o3, v), h = arrow_new(o3, o4, w);
        t.check(arrow_compose(arrow_compose(h, gg), f).m() == arrow_compose(h, arrow_compose(gg, f)).m(),
                tag + ": associativity");
        t.check(arrow_compose(f, arrow_identity(o1)).m() == f.m(), tag + ": right identity");
        t.check(arrow_compose(arrow_identity(o2), f).m() == f.m(), tag + ": left identity");
    }

    int tested = 0;
    for (int i = 0; i < kCategoryTriples; ++i) {
        auto n = static_cast<std::size_t>(g.integer(1, 2));
        MatRF a1 = g.fuchsian(n, 0, 2, false), a2 = g.fuchsian(n, -2, 0, false);
        SylvesterSystem sys(a1, a2);
        auto sol = rational_solutions(sys);
        if (sol.basis.empty())
            continue;
        ++tested;
        MatRF sum(n, n);
        for (const auto& b : sol.basis)
            sum += b * RatFn(g.rational());
        t.check(sylvester_residual(sum, sys).is_zero(), "hom-set linearity");
    }
    t.check(tested >= 10, "too few nonzero hom-sets");
}

void system_round_trip(Tally& t) {
    Gen g(1007);
    const std::vector<Rat> poles{Rat(0), Rat(1), Rat(-1), Rat(2)};
    for (int i = 0; i < kRoundTrips; ++i) {
        auto n = static_cast<std::size_t>(g.integer(1, 3));
        std::vector<RatFn> diag;
        for (std::size_t k = 0; k < n; ++k) {
            RatFn a = g.ratfn(2, 2).derivative();
            for (const auto& p : poles)
                if (g.coin())
                    a += RatFn(Poly(g.rational()), Poly::linear(p));
            diag.push_back(a);
        }
        MatRF a = MatRF::diagonal(diag);
        t.check(system_from_fundamental(fundamental_for_diagonal(a)) == a, "diagonal round trip");

        RatFn b = g.ratfn(2, 2).derivative() + RatFn(Poly(g.rational()), Poly::linear(poles[i % 4]));
        if (b.is_zero())
            b = X.inverse();
        MatRF u{{rf(0), b}, {rf(0), rf(0)}};
        t.check(system_from_fundamental(fundamental_2x2_triangular(u)) == u, "unipotent round trip");
    }
}

std::string run_cli(const std::string& args, int& status) {
    std::string cmd = std::string(PVGAUGE_BIN) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("cannot start " + cmd);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int raw = pclose(pipe);
    status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return out;
}

void cli_determinism(Tally& t) {
    const std::array<std::pair<const char*, const char*>, 4> fixtures{
        std::pair{"trivial", "trivial_log"}, std::pair{"trivial", "trivial_unipotent"},
        std::pair{"equivalent", "equivalent_half"}, std::pair{"equivalent", "equivalent_x"}};
    for (const auto& [cmd, name] : fixtures) {
        std::string base = std::string(cmd) + " --json --input " + FIXTURE_DIR + "/" + name + ".txt";
        int status0 = 0;
        std::string first = run_cli(base + " --threads 1", status0);
        t.check(first.find("\"command\"") != std::string::npos, std::string(name) + ": no report");
        for (int r = 1; r < kCliRepeats; ++r) {
            int status = 0;
            t.check(run_cli(base + " --threads 1", status) == first && status == status0,
                    std::string(name) + ": repeated run differs");
        }
        int status = 0;
        t.check(run_cli(base + " --threads " + std::to_string(kCliThreads), status) == first && status == status0,
                std::string(name) + ": threaded run differs");
    }
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Tally&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "group laws of H_n, Delta_n and the gauge action", group_laws},
        {2, "rational_solutions agrees with the ansatz oracle", solver_oracle},
        {3, "decision fixtures", decision_fixtures},
        {4, "representation fixtures", representation_fixtures},
        {5, "intertwiner identities and constant morphisms", intertwiner_identities},
        {6, "category axioms and hom-set linearity", category_axioms},
        {7, "system <-> fundamental matrix round trip", system_round_trip},
        {8, "CLI determinism", cli_determinism},
    };
    auto start = std::chrono::steady_clock::now();
    bool all = true;
    for (const auto& c : criteria) {
        Tally t;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(t);
        } catch (const std::exception& e) {
            t.check(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = t.failures == 0 && t.checks > 0;
        all = all && ok;
        std::ostringstream line;
        line << (ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << ": " << t.checks << " checks, "
             << t.failures << " failures";
        if (!ok)
            line << " (first: " << t.first_failure << ")";
        line.precision(2);
        line << std::fixed << " [" << secs << " s]";
        std::cout << line.str() << std::endl;
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = total < kTimeBudgetSeconds;
    std::cout.precision(2);
    std::cout << std::fixed << (in_time ? "[PASS]" : "[FAIL]") << " total runtime " << total << " s (limit "
              << kTimeBudgetSeconds << " s)" << std::endl;
    return all && in_time ? 0 : 1;
}
