#include "pvgauge/poly.hpp"

#include "pvgauge/errors.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace pvg {

std::string to_string(const Rat& r) {
    return r.get_str();
}

Poly::Poly(const Rat& constant) {
    if (constant != 0) {
        c_.push_back(constant);
        c_.back().canonicalize();
    }
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    for (auto& c : c_)
        c.canonicalize();
    trim();
}

Poly Poly::x() {
    return Poly(std::vector<Rat>{Rat(0), Rat(1)});
}

Poly Poly::monomial(const Rat& c, unsigned k) {
    if (c == 0)
        return Poly();
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    return Poly(std::move(v));
}

Poly Poly::linear(const Rat& root) {
    return Poly(std::vector<Rat>{Rat(-root), Rat(1)});
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rat Poly::coeff(unsigned k) const {
    return k < c_.size() ? c_[k] : Rat(0);
}

const Rat& Poly::lead() const {
    if (c_.empty())
        throw std::logic_error("leading coefficient of the zero polynomial");
    return c_.back();
}

std::size_t Poly::term_count() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Rat& r) { return r != 0; }));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& v : r.c_)
        v = -v;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    Rat t;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            r[i + j] += t;
        }
    }
    return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_)
        v *= s;
    return *this;
}

bool operator<(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size())
        return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i] != b.c_[i])
            return a.c_[i] < b.c_[i];
    }
    return false;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1)
        return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(r));
}

Rat Poly::eval(const Rat& at) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= at;
        acc += c_[i];
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero())
        return *this;
    Poly r = *this;
    Rat inv = 1 / lead();
    r *= inv;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly result(1);
    Poly base = *this;
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return result;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rat& c = c_[i];
        if (c == 0)
            continue;
        Rat mag = abs(c);
        if (first) {
            if (c < 0)
                out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1)
            out += mag.get_str() + "*";
        out += var;
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly(), a};
    std::vector<Rat> rem = a.coeffs();
    const std::vector<Rat>& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Rat> q(rem.size() - db, Rat(0));
    Rat inv_lead = 1 / bc.back();
    Rat t;
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k] == 0)
            continue;
        Rat f = rem[k] * inv_lead;
        q[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) {
            mpq_mul(t.get_mpq_t(), f.get_mpq_t(), bc[j].get_mpq_t());
            rem[k - db + j] -= t;
        }
    }
    rem.resize(db);
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw std::logic_error("inexact polynomial division");
    return q;
}

Poly operator%(const Poly& a, const Poly& b) {
    return divmod(a, b).second;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly u = a.monic();
    Poly v = b.monic();
    while (!v.is_zero()) {
        Poly r = (u % v).monic();
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    return (exact_div(a, gcd(a, b)) * b).monic();
}

Poly inverse_mod(const Poly& a, const Poly& m) {
    // extended Euclid on (a mod m, m)
    Poly r0 = m, r1 = a % m;
    Poly s0, s1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0)
        throw DivisionByZero("polynomial is not invertible modulo the given modulus");
    return (s0 * (1 / r0.lead())) % m;
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
    if (p.is_zero())
        throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<Poly> out;
    Poly f = p.monic();
    if (f.degree() == 0)
        return out;
    Poly df = f.derivative();
    Poly a = gcd(f, df);
    Poly b = exact_div(f, a);
    Poly c = exact_div(df, a);
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        Poly g = gcd(b, d);
        out.push_back(g);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0)
        out.pop_back();
    return out;
}

namespace {

// Integer coefficients with content 1, same roots as p.
std::vector<Int> primitive_integer_coeffs(const Poly& p) {
    Int den = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> out;
    Int content = 0;
    for (const auto& c : p.coeffs()) {
        Int v = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(v);
    }
    if (content != 0 && content != 1)
        for (auto& v : out)
            v /= content;
    return out;
}

std::vector<Int> positive_divisors(Int n) {
    if (n < 0)
        n = -n;
    if (n == 0)
        throw std::invalid_argument("divisors of zero");
    std::vector<std::pair<Int, unsigned>> factors;
    for (unsigned long p = 2; p <= 1000000ul && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned k = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++k;
            }
            factors.emplace_back(Int(p), k);
        }
    }
    if (n > 1) {
        if (n > Int("1000000000000") && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
            throw Error("coefficient too large to enumerate rational root candidates");
        factors.emplace_back(n, 1u);
    }
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, k] : factors) {
        std::size_t base = divs.size();
        Int pk = 1;
        for (unsigned e = 1; e <= k; ++e) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace

unsigned root_multiplicity(Poly p, const Rat& r) {
    if (p.is_zero())
        throw std::invalid_argument("root multiplicity in the zero polynomial");
    unsigned k = 0;
    Poly lin = Poly::linear(r);
    while (p.degree() > 0 && p.eval(r) == 0) {
        p = exact_div(p, lin);
        ++k;
    }
    return k;
}

std::vector<Rat> rational_roots(const Poly& p) {
    if (p.is_zero())
        throw std::invalid_argument("rational roots of the zero polynomial");
    std::vector<Rat> roots;
    if (p.degree() <= 0)
        return roots;
    auto ic = primitive_integer_coeffs(p);
    std::size_t low = 0;
    while (ic[low] == 0)
        ++low;
    if (low > 0)
        roots.emplace_back(0);
    Poly rest(std::vector<Rat>(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end()));
    if (rest.degree() > 0) {
        auto num_divs = positive_divisors(ic[low]);
        auto den_divs = positive_divisors(ic.back());
        for (const auto& q : den_divs) {
            for (const auto& a : num_divs) {
                for (int sign : {1, -1}) {
                    Rat cand(a * sign, q);
                    cand.canonicalize();
                    if (cand.get_den() != q)
                        continue; // reached with a smaller q already
                    if (rest.eval(cand) == 0)
                        roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Int> integer_roots(const Poly& p) {
    if (p.is_zero())
        throw std::invalid_argument("integer roots of the zero polynomial");
    std::vector<Int> roots;
    if (p.degree() <= 0)
        return roots;
    auto ic = primitive_integer_coeffs(p);
    std::size_t low = 0;
    while (ic[low] == 0)
        ++low;
    if (low > 0)
        roots.emplace_back(0);
    Poly rest(std::vector<Rat>(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end()));
    if (rest.degree() > 0) {
        for (const auto& a : positive_divisors(ic[low])) {
            for (int sign : {1, -1}) {
                Int cand = a * sign;
                if (rest.eval(Rat(cand)) == 0)
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace pvg
