#include "pvgauge/closedform.hpp"

#include "pvgauge/gauge.hpp"

#include <gmp.h>

#include <algorithm>
#include <optional>
#include <set>

namespace pvg {

namespace {

Rat floor_of(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rat(f);
}

std::string base_of(const Rat& a) {
    return a == 0 ? "x" : "(" + Poly::linear(a).to_string() + ")";
}

RatFn linear_power(const Rat& a, const Rat& k) {
    return RatFn(Poly::linear(a)).pow(k.get_num().get_si());
}

} // namespace

bool operator<(const Signature& a, const Signature& b) {
    if (a.powers != b.powers)
        return a.powers < b.powers;
    if (a.exp_arg != b.exp_arg)
        return a.exp_arg < b.exp_arg;
    return a.logs < b.logs;
}

std::string Signature::to_string() const {
    std::string out;
    auto put = [&](const std::string& f) {
        if (!out.empty())
            out += "*";
        out += f;
    };
    for (const auto& [a, e] : powers)
        put(base_of(a) + "^(" + pvg::to_string(e) + ")");
    if (!exp_arg.is_zero())
        put("exp(" + exp_arg.to_string() + ")");
    for (const auto& [b, k] : logs)
        put("log(" + Poly::linear(b).to_string() + ")" + (k > 1 ? "^" + std::to_string(k) : ""));
    return out;
}

ClosedFormScalar::ClosedFormScalar(const RatFn& r) {
    add(Key{}, r);
}

ClosedFormScalar::ClosedFormScalar(const ParamPoly& p) {
    for (const auto& [m, c] : p.terms())
        add(Key{Signature{}, m}, RatFn(c));
}

ClosedFormScalar ClosedFormScalar::power(const Rat& a, const Rat& e) {
    Signature s;
    s.powers[a] = e;
    return term(RatFn(1), {}, s);
}

ClosedFormScalar ClosedFormScalar::exp(const RatFn& r) {
    Signature s;
    s.exp_arg = r;
    return term(RatFn(1), {}, s);
}

ClosedFormScalar ClosedFormScalar::log(const Rat& b, unsigned k) {
    Signature s;
    if (k)
        s.logs[b] = k;
    return term(RatFn(1), {}, s);
}

ClosedFormScalar ClosedFormScalar::term(const RatFn& coef, const ParamMonomial& m, const Signature& sig) {
    ClosedFormScalar r;
    if (coef.is_zero())
        return r;
    RatFn c = coef;
    Signature s;
    s.exp_arg = sig.exp_arg;
    for (const auto& [a, e] : sig.powers) {
        Rat whole = floor_of(e);
        if (whole != 0)
            c *= linear_power(a, whole);
        if (e != whole)
            s.powers[a] = e - whole;
    }
    for (const auto& [b, k] : sig.logs)
        if (k)
            s.logs[b] = k;
    const ParamPoly reduced = ParamPoly::monomial(m);
    for (const auto& [pm, pc] : reduced.terms())
        r.add(Key{s, pm}, c * RatFn(pc));
    return r;
}

void ClosedFormScalar::add(const Key& k, const RatFn& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

bool ClosedFormScalar::is_rational() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.first.empty() && terms_.begin()->first.second.empty());
}

RatFn ClosedFormScalar::rational_value() const {
    if (!is_rational())
        throw NotRational(to_string() + " does not lie in Q(x)");
    return terms_.empty() ? RatFn() : terms_.begin()->second;
}

ParamPoly ClosedFormScalar::constant_value() const {
    ParamPoly r;
    for (const auto& [k, c] : terms_) {
        if (!k.first.empty() || !c.is_constant())
            throw NotConstant(to_string() + " is not constant");
        r += ParamPoly::monomial(k.second, c.constant_value());
    }
    return r;
}

ClosedFormScalar ClosedFormScalar::operator-() const {
    ClosedFormScalar r = *this;
    for (auto& [k, c] : r.terms_)
        c = -c;
    return r;
}

ClosedFormScalar& ClosedFormScalar::operator+=(const ClosedFormScalar& o) {
    for (const auto& [k, c] : o.terms_)
        add(k, c);
    return *this;
}

ClosedFormScalar& ClosedFormScalar::operator-=(const ClosedFormScalar& o) {
    for (const auto& [k, c] : o.terms_)
        add(k, -c);
    return *this;
}

ClosedFormScalar& ClosedFormScalar::operator*=(const ClosedFormScalar& o) {
    *this = *this * o;
    return *this;
}

ClosedFormScalar operator*(const ClosedFormScalar& a, const ClosedFormScalar& b) {
    ClosedFormScalar r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            Signature s = ka.first;
            for (const auto& [pt, e] : kb.first.powers)
                s.powers[pt] += e;
            s.exp_arg += kb.first.exp_arg;
            for (const auto& [pt, k] : kb.first.logs)
                s.logs[pt] += k;
            ParamMonomial m = ka.second;
            for (const auto& [p, e] : kb.second)
                m[p] += e;
            r += ClosedFormScalar::term(ca * cb, m, s);
        }
    return r;
}

std::string ClosedFormScalar::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [k, c0] : terms_) {
        const auto& [sig, mon] = k;
        bool negative = c0.num().lead() < 0;
        RatFn c = negative ? -c0 : c0;
        std::vector<std::string> factors;
        bool unit_coef = c == RatFn(1);
        if (!unit_coef) {
            bool alone = mon.empty() && sig.empty();
            bool compound = !c.is_polynomial() || c.num().term_count() > 1;
            factors.push_back(compound && !alone ? "(" + c.to_string() + ")" : c.to_string());
        }
        if (!mon.empty())
            factors.push_back(pvg::to_string(mon));
        if (!sig.empty())
            factors.push_back(sig.to_string());
        if (factors.empty())
            factors.push_back("1");
        std::string t;
        for (std::size_t i = 0; i < factors.size(); ++i)
            t += (i ? "*" : "") + factors[i];
        if (out.empty())
            out = (negative ? "-" : "") + t;
        else
            out += (negative ? " - " : " + ") + t;
    }
    return out;
}

ClosedFormScalar cf_derive(const ClosedFormScalar& s) {
    ClosedFormScalar r;
    for (const auto& [k, c] : s.terms()) {
        const auto& [sig, mon] = k;
        RatFn log_deriv = sig.exp_arg.derivative();
        for (const auto& [a, e] : sig.powers)
            log_deriv += RatFn(Poly(e), Poly::linear(a));
        r += ClosedFormScalar::term(c.derivative() + c * log_deriv, mon, sig);
        for (const auto& [b, m] : sig.logs) {
            Signature lower = sig;
            lower.logs[b] = m - 1;
            r += ClosedFormScalar::term(c * RatFn(Poly(static_cast<long>(m)), Poly::linear(b)), mon, lower);
        }
    }
    return r;
}

CFMatrix lift(const MatRF& m) {
    return m.map([](const RatFn& r) { return ClosedFormScalar(r); });
}

CFMatrix lift(const MatP& m) {
    return m.map([](const ParamPoly& p) { return ClosedFormScalar(p); });
}

CFMatrix cf_derive(const CFMatrix& m) {
    return m.map([](const ClosedFormScalar& s) { return cf_derive(s); });
}

ClosedFormScalar det(const CFMatrix& m) {
    return det_expand(m);
}

CFMatrix cf_inverse(const CFMatrix& m) {
    ClosedFormScalar d = det(m);
    if (d.is_zero())
        throw SingularMatrix("closed-form matrix is singular");
    if (d.terms().size() != 1)
        throw NonUnitDeterminant("determinant " + d.to_string() + " is not a single term");
    const auto& [key, coef] = *d.terms().begin();
    const auto& [sig, mon] = key;
    ParamPoly pm = ParamPoly::monomial(mon);
    if (!sig.logs.empty() || !pm.is_unit())
        throw NonUnitDeterminant("determinant " + d.to_string() + " is not invertible in the tower");
    Signature inv;
    for (const auto& [a, e] : sig.powers)
        inv.powers[a] = -e;
    inv.exp_arg = -sig.exp_arg;
    ClosedFormScalar dinv = ClosedFormScalar::term(coef.inverse(), {}, inv) * ClosedFormScalar(pm.inverse());

    const std::size_t n = m.n();
    CFMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CFMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j)
                    continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c)
                    if (c != i)
                        minor(rr, cc++) = m(r, c);
                ++rr;
            }
            ClosedFormScalar cof = det_expand(minor);
            adj(i, j) = (i + j) % 2 ? -cof : cof;
        }
    return adj * dinv;
}

MatRF to_rational(const CFMatrix& m) {
    return m.map([](const ClosedFormScalar& s) { return s.rational_value(); });
}

MatP to_constant(const CFMatrix& m) {
    return m.map([](const ClosedFormScalar& s) { return s.constant_value(); });
}

std::string to_string(const CFMatrix& m) {
    return format_matrix(m);
}

namespace {

struct Antiderivative {
    RatFn rational;
    std::map<Rat, Rat> residues;
};

// Horowitz-Ostrogradsky: P/Q = (A/D1)' + B/D2 with D1 = gcd(Q, Q'), D2 = Q/D1.
Antiderivative integrate(const RatFn& f) {
    Antiderivative out;
    auto [quo, rem] = divmod(f.num(), f.den());
    std::vector<Rat> prim(quo.coeffs().size() + 1, Rat(0));
    for (std::size_t k = 0; k < quo.coeffs().size(); ++k)
        prim[k + 1] = quo.coeffs()[k] / Rat(static_cast<long>(k + 1));
    out.rational = RatFn(Poly(std::move(prim)));
    if (rem.is_zero())
        return out;

    const Poly& q = f.den();
    Poly d1 = gcd(q, q.derivative());
    Poly d2 = exact_div(q, d1);
    Poly b = rem;
    if (d1.degree() > 0) {
        const std::size_t n1 = static_cast<std::size_t>(d1.degree());
        const std::size_t n2 = static_cast<std::size_t>(d2.degree());
        const std::size_t rows = static_cast<std::size_t>(q.degree());
        Poly t = exact_div(d2 * d1.derivative(), d1);
        MatQ sys(rows, n1 + n2 + 1);
        auto put = [&](const Poly& p, std::size_t col) {
            for (std::size_t k = 0; k < p.coeffs().size(); ++k)
                sys(k, col) += p.coeffs()[k];
        };
        for (std::size_t i = 0; i < n1; ++i) {
            Poly xi = Poly::monomial(1, static_cast<unsigned>(i));
            put(xi.derivative() * d2 - xi * t, i);
        }
        for (std::size_t i = 0; i < n2; ++i)
            put(Poly::monomial(1, static_cast<unsigned>(i)) * d1, n1 + i);
        put(rem, n1 + n2);
        auto pivots = rref(sys);
        std::vector<Rat> sol(n1 + n2, Rat(0));
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] == n1 + n2)
                throw std::logic_error("Hermite reduction system is inconsistent");
            sol[pivots[r]] = sys(r, n1 + n2);
        }
        Poly a(std::vector<Rat>(sol.begin(), sol.begin() + static_cast<long>(n1)));
        b = Poly(std::vector<Rat>(sol.begin() + static_cast<long>(n1), sol.end()));
        out.rational += RatFn(a, d1);
    }
    RatFn log_part(b, d2);
    if (log_part.is_zero())
        return out;
    const Poly& den = log_part.den();
    auto roots = rational_roots(den);
    if (roots.size() != static_cast<std::size_t>(den.degree()))
        throw NonRationalResidueOrPole("the logarithmic part of the integral of " + f.to_string() +
                                       " has poles outside Q");
    Poly dd = den.derivative();
    for (const Rat& r : roots)
        out.residues[r] = log_part.num().eval(r) / dd.eval(r);
    return out;
}

// exp of the integral, as a single basic term
ClosedFormScalar exp_integral(const RatFn& a) {
    Antiderivative ad = integrate(a);
    Signature s;
    s.exp_arg = ad.rational;
    s.powers = ad.residues;
    return ClosedFormScalar::term(RatFn(1), {}, s);
}

} // namespace

ClosedFormScalar antiderivative(const RatFn& a) {
    Antiderivative ad = integrate(a);
    ClosedFormScalar r(ad.rational);
    for (const auto& [b, e] : ad.residues)
        r += ClosedFormScalar::log(b) * ClosedFormScalar(RatFn(e));
    return r;
}

FundamentalMatrix::FundamentalMatrix(CFMatrix entries, MatRF system)
    : entries_(std::move(entries)), system_(std::move(system)) {
    if (!entries_.is_square() || !system_.is_square() || entries_.n() != system_.n())
        throw DimensionMismatch("fundamental matrix and system differ in size");
    if (cf_derive(entries_) != lift(system_) * entries_)
        throw InputError("F' differs from A F");
    if (det(entries_).is_zero())
        throw SingularMatrix("fundamental matrix is singular");
}

FundamentalMatrix fundamental_for_diagonal(const MatRF& a) {
    if (!a.is_square())
        throw DimensionMismatch("system must be square");
    if (!is_diagonal(a))
        throw InputError("system is not diagonal");
    CFMatrix f(a.n(), a.n());
    for (std::size_t i = 0; i < a.n(); ++i)
        f(i, i) = exp_integral(a(i, i));
    return FundamentalMatrix(std::move(f), a);
}

FundamentalMatrix fundamental_2x2_triangular(const MatRF& a) {
    if (a.rows() != 2 || a.cols() != 2)
        throw DimensionMismatch("expected a 2 x 2 system");
    if (!a(0, 0).is_zero() || !a(1, 0).is_zero() || !a(1, 1).is_zero())
        throw InputError("system is not of the form [[0, a], [0, 0]]");
    CFMatrix f = CFMatrix::identity(2);
    f(0, 1) = antiderivative(a(0, 1));
    return FundamentalMatrix(std::move(f), a);
}

FundamentalMatrix gauge_fundamental(const MatRF& w, const FundamentalMatrix& f) {
    return FundamentalMatrix(lift(w) * f.entries(), gauge_act(w, f.system()));
}

FundamentalMatrix right_constant(const FundamentalMatrix& f, const MatQ& gamma) {
    return FundamentalMatrix(f.entries() * lift(lift(gamma)), f.system());
}

MatRF system_from_fundamental(const CFMatrix& f) {
    return to_rational(cf_derive(f) * cf_inverse(f));
}

MatRF system_from_fundamental(const FundamentalMatrix& f) {
    return system_from_fundamental(f.entries());
}

namespace {

// Common-denominator coefficient vectors of rational functions, one column each.
MatQ coefficient_columns(const std::vector<RatFn>& fs) {
    Poly common(1);
    for (const auto& f : fs)
        common = lcm(common, f.den());
    std::vector<Poly> nums;
    int deg = 0;
    for (const auto& f : fs) {
        nums.push_back(f.num() * exact_div(common, f.den()));
        deg = std::max(deg, nums.back().degree());
    }
    MatQ m(static_cast<std::size_t>(deg + 1), fs.size());
    for (std::size_t j = 0; j < nums.size(); ++j)
        for (std::size_t k = 0; k < nums[j].coeffs().size(); ++k)
            m(k, j) = nums[j].coeffs()[k];
    return m;
}

// Integer n with r = sum n_i args_i, if any.
std::optional<std::vector<long>> integer_combination(const std::vector<ExpAction>& table, const RatFn& r) {
    std::vector<RatFn> cols;
    for (const auto& e : table)
        cols.push_back(e.arg);
    cols.push_back(r);
    MatQ m = coefficient_columns(cols);
    auto pivots = rref(m);
    const std::size_t k = table.size();
    std::vector<long> out(k, 0);
    for (std::size_t row = 0; row < pivots.size(); ++row) {
        if (pivots[row] == k)
            return std::nullopt;
        const Rat& v = m(row, k);
        if (v.get_den() != 1 || !v.get_num().fits_slong_p())
            return std::nullopt;
        out[pivots[row]] = v.get_num().get_si();
    }
    return out;
}

long binomial(unsigned n, unsigned k) {
    long r = 1;
    for (unsigned i = 1; i <= k; ++i)
        r = r * static_cast<long>(n - k + i) / static_cast<long>(i);
    return r;
}

} // namespace

GaloisGen::GaloisGen(std::string name, std::vector<PowerAction> powers, std::vector<ExpAction> exps,
                     std::vector<LogAction> logs)
    : name_(std::move(name)), powers_(std::move(powers)), exps_(std::move(exps)), logs_(std::move(logs)) {
    std::set<Rat> seen;
    for (const auto& p : powers_) {
        if (p.exponent.get_den() == 1)
            throw InvalidGenerator(name_ + ": integer power of x - " + pvg::to_string(p.point) + " is rational");
        if (!seen.insert(p.point).second)
            throw InvalidGenerator(name_ + ": two power entries at " + pvg::to_string(p.point));
        long q = p.exponent.get_den().get_si();
        if (p.factor.pow(q) != ParamPoly(1))
            throw InvalidGenerator(name_ + ": factor " + p.factor.to_string() + " is not a root of unity of order " +
                                   std::to_string(q));
    }
    for (const auto& e : exps_) {
        if (e.arg.is_zero())
            throw InvalidGenerator(name_ + ": exp(0) is rational");
        if (!e.factor.is_unit())
            throw InvalidGenerator(name_ + ": factor " + e.factor.to_string() + " is not a unit");
    }
    if (!exps_.empty()) {
        std::vector<RatFn> args;
        for (const auto& e : exps_)
            args.push_back(e.arg);
        if (rank(coefficient_columns(args)) != args.size())
            throw InvalidGenerator(name_ + ": exponential arguments are linearly dependent");
    }
    seen.clear();
    for (const auto& l : logs_)
        if (!seen.insert(l.point).second)
            throw InvalidGenerator(name_ + ": two log entries at " + pvg::to_string(l.point));
}

GaloisGen GaloisGen::identity_for(const FundamentalMatrix& f, std::string name) {
    std::map<Rat, Int> denominators;
    std::vector<RatFn> args;
    std::set<Rat> logs;
    for (const auto& s : f.entries().data())
        for (const auto& [k, c] : s.terms()) {
            for (const auto& [a, e] : k.first.powers) {
                Int& d = denominators[a];
                if (d == 0)
                    d = 1;
                mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.get_den_mpz_t());
            }
            if (!k.first.exp_arg.is_zero() && std::find(args.begin(), args.end(), k.first.exp_arg) == args.end())
                args.push_back(k.first.exp_arg);
            for (const auto& [b, m] : k.first.logs)
                logs.insert(b);
        }
    std::vector<PowerAction> pw;
    for (const auto& [a, d] : denominators)
        pw.push_back({a, Rat(Int(1), d), ParamPoly(1)});
    std::vector<ExpAction> ex;
    for (const auto& r : args)
        ex.push_back({r, ParamPoly(1)});
    std::vector<LogAction> lg;
    for (const auto& b : logs)
        lg.push_back({b, ParamPoly()});
    return GaloisGen(std::move(name), std::move(pw), std::move(ex), std::move(lg));
}

GaloisGen compose(const GaloisGen& g, const GaloisGen& h) {
    const std::string name = g.name() + "*" + h.name();
    if (g.powers().size() != h.powers().size() || g.exps().size() != h.exps().size() ||
        g.logs().size() != h.logs().size())
        throw InvalidGenerator(name + ": tables cover different generators");
    std::vector<PowerAction> pw;
    for (const auto& p : g.powers()) {
        auto it = std::find_if(h.powers().begin(), h.powers().end(),
                               [&](const PowerAction& o) { return o.point == p.point && o.exponent == p.exponent; });
        if (it == h.powers().end())
            throw InvalidGenerator(name + ": tables cover different generators");
        pw.push_back({p.point, p.exponent, p.factor * it->factor});
    }
    std::vector<ExpAction> ex;
    for (const auto& e : g.exps()) {
        auto it = std::find_if(h.exps().begin(), h.exps().end(), [&](const ExpAction& o) { return o.arg == e.arg; });
        if (it == h.exps().end())
            throw InvalidGenerator(name + ": tables cover different generators");
        ex.push_back({e.arg, e.factor * it->factor});
    }
    std::vector<LogAction> lg;
    for (const auto& l : g.logs()) {
        auto it = std::find_if(h.logs().begin(), h.logs().end(), [&](const LogAction& o) { return o.point == l.point; });
        if (it == h.logs().end())
            throw InvalidGenerator(name + ": tables cover different generators");
        lg.push_back({l.point, l.shift + it->shift});
    }
    return GaloisGen(name, std::move(pw), std::move(ex), std::move(lg));
}

ClosedFormScalar galois_act(const GaloisGen& g, const ClosedFormScalar& s) {
    ClosedFormScalar out;
    for (const auto& [k, c] : s.terms()) {
        const auto& [sig, mon] = k;
        ParamPoly factor(1);
        for (const auto& [a, e] : sig.powers) {
            auto it = std::find_if(g.powers().begin(), g.powers().end(),
                                   [&](const PowerAction& p) { return p.point == a; });
            if (it == g.powers().end() || it->exponent.get_den() % e.get_den() != 0)
                throw UnmappedGenerator(g.name() + " does not act on " + base_of(a) + "^(" + pvg::to_string(e) + ")");
            // k e0 = e mod 1
            const Int q = it->exponent.get_den();
            Int target = e.get_num() * (q / e.get_den());
            Int inv;
            Int p0 = it->exponent.get_num();
            mpz_invert(inv.get_mpz_t(), p0.get_mpz_t(), q.get_mpz_t());
            Int kk = target * inv;
            mpz_fdiv_r(kk.get_mpz_t(), kk.get_mpz_t(), q.get_mpz_t());
            factor *= it->factor.pow(kk.get_si());
        }
        if (!sig.exp_arg.is_zero()) {
            auto n = integer_combination(g.exps(), sig.exp_arg);
            if (!n)
                throw UnmappedGenerator(g.name() + " does not act on exp(" + sig.exp_arg.to_string() + ")");
            for (std::size_t i = 0; i < n->size(); ++i)
                if ((*n)[i])
                    factor *= g.exps()[i].factor.pow((*n)[i]);
        }
        Signature base = sig;
        base.logs.clear();
        ClosedFormScalar image = ClosedFormScalar::term(c, mon, base) * ClosedFormScalar(factor);
        for (const auto& [b, m] : sig.logs) {
            auto it = std::find_if(g.logs().begin(), g.logs().end(), [&](const LogAction& l) { return l.point == b; });
            if (it == g.logs().end())
                throw UnmappedGenerator(g.name() + " does not act on log(" + Poly::linear(b).to_string() + ")");
            ClosedFormScalar shifted;
            for (unsigned j = 0; j <= m; ++j)
                shifted += ClosedFormScalar::log(b, j) * ClosedFormScalar(it->shift.pow(m - j) * ParamPoly(binomial(m, j)));
            image *= shifted;
        }
        out += image;
    }
    return out;
}

CFMatrix galois_act(const GaloisGen& g, const CFMatrix& m) {
    return m.map([&](const ClosedFormScalar& s) { return galois_act(g, s); });
}

MatP rep_matrix(const FundamentalMatrix& f, const GaloisGen& g) {
    return to_constant(cf_inverse(f.entries()) * galois_act(g, f.entries()));
}

RepConjugation rep_conjugation_check(const FundamentalMatrix& f, const MatQ& gamma, const GaloisGen& g) {
    MatRF lifted = gamma.map([](const Rat& r) { return RatFn(r); });
    MatQ gamma_inv = mat_inverse(lifted).inverse.map([](const RatFn& r) { return r.constant_value(); });
    RepConjugation out;
    out.transported = rep_matrix(right_constant(f, gamma), g);
    out.conjugated = lift(gamma_inv) * rep_matrix(f, g) * lift(gamma);
    return out;
}

Representation representation(const FundamentalMatrix& f, const std::vector<GaloisGen>& gens) {
    Representation r;
    for (const auto& g : gens) {
        MatP c = rep_matrix(f, g);
        if (!det(c).is_unit())
            throw NonUnitDeterminant(g.name() + " acts by a matrix with determinant " + det(c).to_string());
        r.images.emplace_back(g, std::move(c));
    }
    return r;
}

} // namespace pvg
