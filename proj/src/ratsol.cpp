#include "pvgauge/ratsol.hpp"

#include "pvgauge/gauge.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pvg {

SylvesterSystem::SylvesterSystem(MatRF a1, MatRF a2) : a1_(std::move(a1)), a2_(std::move(a2)) {
    if (!a1_.is_square() || !a2_.is_square() || a1_.n() != a2_.n() || a1_.n() == 0)
        throw DimensionMismatch("Sylvester system needs two nonempty square matrices of equal size");
}

std::string to_string(BoundProvenance p) {
    return p == BoundProvenance::computed ? "computed" : "user_supplied";
}

std::string to_string(SearchTier t) {
    switch (t) {
    case SearchTier::identity: return "identity";
    case SearchTier::empty_space: return "empty_space";
    case SearchTier::basis_element: return "basis_element";
    case SearchTier::random_combination: return "random_combination";
    case SearchTier::generic_determinant: return "generic_determinant";
    }
    return "unknown";
}

Poly DegreeBounds::denominator() const {
    Poly q(1);
    for (const auto& pb : pole_orders)
        q *= pb.factor.pow(pb.bound);
    return q;
}

MatRF sylvester_residual(const MatRF& m, const SylvesterSystem& sys) {
    if (!m.is_square() || m.n() != sys.n())
        throw DimensionMismatch("intertwiner candidate has the wrong size");
    return mat_derive(m) - sys.a2() * m + m * sys.a1();
}

MatRF vectorize(const SylvesterSystem& sys) {
    const MatRF id = MatRF::identity(sys.n());
    return kronecker(id, sys.a2()) - kronecker(sys.a1().transpose(), id);
}

namespace {

Poly reduce(const Poly& p, const Poly* modulus) {
    return modulus ? p % *modulus : p;
}

// Faddeev-LeVerrier over Q[x]/(modulus), or over Q[x] when modulus is null.
// Returns c_0..c_k with charpoly = sum c_i lambda^i.
std::vector<Poly> charpoly(const MatPoly& r, const Poly* modulus) {
    const std::size_t k = r.rows();
    std::vector<Poly> c(k + 1);
    c[k] = Poly(1);
    MatPoly m(k, k);
    for (std::size_t step = 1; step <= k; ++step) {
        MatPoly next = r * m;
        for (std::size_t i = 0; i < k; ++i)
            next(i, i) += c[k - step + 1];
        for (auto i = 0u; i < k; ++i)
            for (auto j = 0u; j < k; ++j)
                next(i, j) = reduce(next(i, j), modulus);
        m = std::move(next);
        MatPoly am = r * m;
        Poly trace;
        for (std::size_t i = 0; i < k; ++i)
            trace += am(i, i);
        c[k - step] = reduce(trace * Rat(-1, static_cast<long>(step)), modulus);
    }
    return c;
}

// Norm over Q[x]/(modulus) of sum_i c_i lambda^i, as a polynomial in lambda.
Poly norm_in_lambda(const std::vector<Poly>& c, const Poly& modulus) {
    const auto d = static_cast<std::size_t>(modulus.degree());
    MatRF mult(d, d);
    for (std::size_t i = 0; i < c.size(); ++i) {
        Poly basis(1);
        for (std::size_t s = 0; s < d; ++s) {
            Poly prod = (c[i] * basis) % modulus;
            for (std::size_t r = 0; r < d; ++r) {
                Rat v = prod.coeff(static_cast<unsigned>(r));
                if (v != 0)
                    mult(r, s) += RatFn(Poly::monomial(v, static_cast<unsigned>(i)));
            }
            basis *= Poly::x();
        }
    }
    return det(mult).num();
}

Poly common_denominator(const MatRF& m) {
    Poly d(1);
    for (const auto& v : m.data())
        if (v.den().degree() > 0)
            d = lcm(d, v.den());
    return d;
}

MatPoly numerators_over(const MatRF& m, const Poly& d) {
    MatPoly n(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            n(i, j) = m(i, j).num() * exact_div(d, m(i, j).den());
    return n;
}

std::vector<Poly> split_rational_roots(const Poly& g) {
    std::vector<Poly> pieces;
    Poly rest = g;
    for (const auto& r : rational_roots(g)) {
        Poly lin = Poly::linear(r);
        pieces.push_back(lin);
        rest = exact_div(rest, lin);
    }
    if (rest.degree() > 0)
        pieces.push_back(rest.monic());
    return pieces;
}

} // namespace

DegreeBounds denominator_bound(const SylvesterSystem& sys) {
    const MatRF l = vectorize(sys);
    const std::size_t k = l.rows();
    const Poly d = common_denominator(l);
    const MatPoly num = numerators_over(l, d);

    DegreeBounds out;
    out.provenance = BoundProvenance::computed;

    if (d.degree() > 0) {
        auto layers = squarefree_decomposition(d);
        for (std::size_t mult_minus_one = 0; mult_minus_one < layers.size(); ++mult_minus_one) {
            const Poly& g = layers[mult_minus_one];
            if (g.degree() <= 0)
                continue;
            if (mult_minus_one >= 1) {
                throw NeedsUserBound("pole of order " + std::to_string(mult_minus_one + 1) + " along " +
                                     g.to_string() + " is not of the first kind; supply degree bounds");
            }
            for (const Poly& piece : split_rational_roots(g)) {
                Poly cofactor = exact_div(d, piece);
                Poly s = inverse_mod((piece.derivative() * cofactor) % piece, piece);
                MatPoly residue(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        residue(i, j) = (num(i, j) * s) % piece;
                Poly norm = norm_in_lambda(charpoly(residue, &piece), piece);
                long bound = 0;
                for (const auto& e : integer_roots(norm))
                    bound = std::max(bound, -e.get_si());
                out.pole_orders.push_back({piece, static_cast<unsigned>(bound)});
            }
        }
    }

    MatPoly at_infinity(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const RatFn& v = l(i, j);
            if (v.is_zero())
                continue;
            int gap = v.den().degree() - v.num().degree();
            if (gap < 1)
                throw NeedsUserBound("singularity at infinity is not of the first kind; supply degree bounds");
            if (gap == 1)
                at_infinity(i, j) = Poly(v.num().lead());
        }
    std::vector<Poly> c = charpoly(at_infinity, nullptr);
    std::vector<Rat> lambda_coeffs;
    for (const auto& ci : c)
        lambda_coeffs.push_back(ci.coeff(0));
    long growth = 0;
    for (const auto& e : integer_roots(Poly(lambda_coeffs)))
        growth = std::max(growth, e.get_si());
    out.numerator_degree = static_cast<unsigned>(out.denominator().degree() + growth);
    return out;
}

namespace {

void check_user_bounds(const DegreeBounds& b, const Poly& d) {
    if (d.degree() <= 0)
        return;
    Poly squarefree = exact_div(d, gcd(d, d.derivative()));
    Poly covered(1);
    for (const auto& pb : b.pole_orders) {
        if (pb.factor.degree() <= 0)
            throw InputError("pole factor " + pb.factor.to_string() + " has degree 0");
        covered *= pb.factor;
    }
    if (!(covered % squarefree).is_zero())
        throw InputError("degree bounds do not list every singular factor of the system (" + squarefree.to_string() + ")");
}

} // namespace

RatSolBasis rational_solutions(const SylvesterSystem& sys, const std::optional<DegreeBounds>& bounds) {
    const MatRF l = vectorize(sys);
    const std::size_t k = l.rows();
    const std::size_t n = sys.n();
    const Poly d = common_denominator(l);

    DegreeBounds used = bounds ? *bounds : denominator_bound(sys);
    if (bounds)
        check_user_bounds(used, d);

    const Poly q = used.denominator();
    const MatPoly num = numerators_over(l, d);
    // (P/Q)' = L P/Q  <=>  den*D*P' - t*P - den*N*P = 0  where t/den = D Q'/Q
    const RatFn log_deriv(d * q.derivative(), q);
    const Poly& den = log_deriv.den();
    const Poly& t = log_deriv.num();
    const Poly den_d = den * d;

    const std::size_t deg_p = used.numerator_degree;
    const std::size_t per_entry = deg_p + 1;
    const std::size_t unknowns = k * per_entry;

    // columns: unknown coefficient of x^p in entry e of vec(P), ordered (e, p)
    std::vector<std::vector<Poly>> contributions(unknowns, std::vector<Poly>(k));
    std::size_t max_deg = 0;
    for (std::size_t e = 0; e < k; ++e)
        for (std::size_t p = 0; p < per_entry; ++p) {
            auto& col = contributions[e * per_entry + p];
            const auto pw = static_cast<unsigned>(p);
            Poly xp = Poly::monomial(1, pw);
            Poly own = -(t * xp);
            if (p > 0)
                own += den_d * Poly::monomial(Rat(static_cast<long>(p)), pw - 1);
            col[e] += own;
            for (std::size_t j = 0; j < k; ++j)
                if (!num(j, e).is_zero())
                    col[j] -= den * num(j, e) * xp;
            for (const auto& poly : col)
                max_deg = std::max<std::size_t>(max_deg, static_cast<std::size_t>(std::max(poly.degree(), 0)));
        }

    MatQ system(k * (max_deg + 1), unknowns);
    for (std::size_t c = 0; c < unknowns; ++c)
        for (std::size_t j = 0; j < k; ++j) {
            const auto& coeffs = contributions[c][j].coeffs();
            for (std::size_t s = 0; s < coeffs.size(); ++s)
                system(j * (max_deg + 1) + s, c) = coeffs[s];
        }

    auto kernel = nullspace(std::move(system));
    MatQ stacked(kernel.size(), unknowns);
    for (std::size_t r = 0; r < kernel.size(); ++r)
        for (std::size_t c = 0; c < unknowns; ++c)
            stacked(r, c) = kernel[r][c];
    std::size_t rank_k = rref(stacked).size();

    RatSolBasis out{{}, sys, used};
    for (std::size_t r = 0; r < rank_k; ++r) {
        MatRF v(k, 1);
        for (std::size_t e = 0; e < k; ++e) {
            std::vector<Rat> coeffs(per_entry);
            for (std::size_t p = 0; p < per_entry; ++p)
                coeffs[p] = stacked(r, e * per_entry + p);
            v(e, 0) = RatFn(Poly(std::move(coeffs)), q);
        }
        MatRF m = unvec(v, n);
        if (!sylvester_residual(m, sys).is_zero())
            throw std::logic_error("solver produced an element with nonzero residual");
        out.basis.push_back(std::move(m));
    }
    return out;
}

namespace {

using Exponents = std::vector<unsigned>;
using MultiPoly = std::map<Exponents, RatFn>;

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r[e] += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

// det(sum_i t_i M_i) by the Leibniz formula, as a polynomial in the t_i.
MultiPoly generic_determinant(const std::vector<MatRF>& basis) {
    const std::size_t n = basis.front().n();
    const std::size_t b = basis.size();
    auto linear_form = [&](std::size_t i, std::size_t j) {
        MultiPoly f;
        for (std::size_t l = 0; l < b; ++l)
            if (!basis[l](i, j).is_zero()) {
                Exponents e(b, 0);
                e[l] = 1;
                f[e] = basis[l](i, j);
            }
        return f;
    };
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = i;
    MultiPoly total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        MultiPoly term{{Exponents(b, 0), RatFn(inversions % 2 ? -1 : 1)}};
        for (std::size_t i = 0; i < n && !term.empty(); ++i)
            term = multiply(term, linear_form(i, perm[i]));
        for (const auto& [e, c] : term)
            total[e] += c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto it = total.begin(); it != total.end();)
        it = it->second.is_zero() ? total.erase(it) : std::next(it);
    return total;
}

MatRF combine(const std::vector<MatRF>& basis, const std::vector<long>& coeffs) {
    MatRF m(basis.front().n(), basis.front().n());
    for (std::size_t l = 0; l < basis.size(); ++l)
        if (coeffs[l] != 0)
            m += basis[l] * RatFn(coeffs[l]);
    return m;
}

// Index of the first candidate with nonzero determinant; evaluation may be split across threads.
std::optional<std::size_t> first_invertible(const std::vector<MatRF>& candidates, unsigned threads) {
    std::vector<char> ok(candidates.size(), 0);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            ok[i] = !det(candidates[i]).is_zero();
    };
    const std::size_t count = candidates.size();
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
    if (workers <= 1) {
        work(0, count);
    } else {
        std::vector<std::future<void>> jobs;
        const std::size_t chunk = (count + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            std::size_t begin = w * chunk, end = std::min(count, begin + chunk);
            if (begin < end)
                jobs.push_back(std::async(std::launch::async, work, begin, end));
        }
        for (auto& j : jobs)
            j.get();
    }
    for (std::size_t i = 0; i < count; ++i)
        if (ok[i])
            return i;
    return std::nullopt;
}

} // namespace

EquivalenceResult equivalent(const MatRF& a, const MatRF& b, const SearchOptions& opts) {
    if (!a.is_square() || !b.is_square() || a.n() != b.n())
        throw DimensionMismatch("equivalence of systems of different size");
    const std::size_t n = a.n();
    EquivalenceResult res;
    res.seed = opts.seed;
    if (a == b) {
        res.witness = MatRF::identity(n);
        res.tier = SearchTier::identity;
        res.certificate = "identical representatives";
        return res;
    }

    // U' = B U - U A  <=>  gauge_act(U, A) = B
    const SylvesterSystem sys(a, b);
    RatSolBasis sol = rational_solutions(sys, opts.bounds);
    res.bounds = sol.bounds_used;
    res.solution_dimension = sol.basis.size();
    const auto& basis = sol.basis;

    if (basis.empty()) {
        res.tier = SearchTier::empty_space;
        res.certificate = "rational intertwiner space is {0}";
        return res;
    }

    if (auto hit = first_invertible(basis, opts.threads)) {
        res.witness = basis[*hit];
        res.tier = SearchTier::basis_element;
        res.certificate = "basis element " + std::to_string(*hit) + " is invertible";
        return res;
    }

    if (basis.size() > 1) {
        std::mt19937_64 rng(opts.seed);
        std::vector<std::vector<long>> draws;
        std::vector<MatRF> candidates;
        for (unsigned trial = 0; trial < opts.random_trials; ++trial) {
            std::vector<long> c(basis.size());
            bool any = false;
            for (auto& v : c) {
                v = static_cast<long>(rng() % 17) - 8;
                any = any || v != 0;
            }
            if (!any)
                c[0] = 1;
            candidates.push_back(combine(basis, c));
            draws.push_back(std::move(c));
        }
        if (auto hit = first_invertible(candidates, opts.threads)) {
            res.witness = candidates[*hit];
            res.tier = SearchTier::random_combination;
            std::ostringstream msg;
            msg << "random combination " << *hit << " with coefficients (";
            for (std::size_t l = 0; l < draws[*hit].size(); ++l)
                msg << (l ? ", " : "") << draws[*hit][l];
            msg << ") is invertible";
            res.certificate = msg.str();
            return res;
        }
    }

    if (n > 3 || basis.size() > 6) {
        throw Inconclusive("intertwiner space of dimension " + std::to_string(basis.size()) +
                           ": no invertible basis element or random combination (seed " +
                           std::to_string(opts.seed) + "), generic determinant not attempted for n = " +
                           std::to_string(n));
    }

    res.tier = SearchTier::generic_determinant;
    MultiPoly gdet = generic_determinant(basis);
    if (gdet.empty()) {
        res.certificate = "det(sum t_i M_i) vanishes identically on the " + std::to_string(basis.size()) +
                          "-dimensional intertwiner space";
        return res;
    }
    // A nonzero polynomial of degree <= n in each variable is nonzero somewhere on {0..n}^b.
    const std::size_t dim = basis.size();
    std::vector<long> point(dim, 0);
    while (true) {
        std::size_t pos = 0;
        while (pos < dim && point[pos] == static_cast<long>(n)) {
            point[pos] = 0;
            ++pos;
        }
        if (pos == dim)
            break;
        ++point[pos];
        RatFn value;
        for (const auto& [e, c] : gdet) {
            Rat mono(1);
            for (std::size_t l = 0; l < dim; ++l)
                for (unsigned p = 0; p < e[l]; ++p)
                    mono *= point[l];
            if (mono != 0)
                value += c * RatFn(mono);
        }
        if (!value.is_zero()) {
            res.witness = combine(basis, point);
            std::ostringstream msg;
            msg << "generic determinant is nonzero; grid point (";
            for (std::size_t l = 0; l < dim; ++l)
                msg << (l ? ", " : "") << point[l];
            msg << ") gives an invertible intertwiner";
            res.certificate = msg.str();
            return res;
        }
    }
    throw std::logic_error("nonzero generic determinant vanished on the whole grid");
}

EquivalenceResult is_trivial(const MatRF& a, const SearchOptions& opts) {
    if (!a.is_square())
        throw DimensionMismatch("system matrix must be square");
    return equivalent(MatRF(a.n(), a.n()), a, opts);
}

} // namespace pvg
