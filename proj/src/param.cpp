#include "pvgauge/param.hpp"

#include <optional>
#include <vector>

namespace pvg {

Param Param::cyclotomic(std::string name, unsigned order) {
    if (order == 0)
        throw InputError("cyclotomic parameter " + name + " needs a positive order");
    return {std::move(name), ParamKind::cyclotomic, order};
}

Poly cyclotomic_polynomial(unsigned m) {
    Poly p = Poly::monomial(1, m) - Poly(1);
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0)
            p = exact_div(p, cyclotomic_polynomial(d));
    return p;
}

std::string to_string(const ParamMonomial& m) {
    std::string out;
    for (const auto& [p, e] : m) {
        if (!out.empty())
            out += "*";
        out += p.name;
        if (e < 0)
            out += "^(" + std::to_string(e) + ")";
        else if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

ParamPoly::ParamPoly(const Rat& c) {
    if (c != 0) {
        Rat v = c;
        v.canonicalize();
        terms_.emplace(ParamMonomial{}, v);
    }
}

ParamPoly ParamPoly::param(const Param& p) {
    return monomial(ParamMonomial{{p, 1}});
}

ParamPoly ParamPoly::monomial(const ParamMonomial& m, const Rat& c) {
    ParamPoly r;
    r.add_term(m, c);
    return r;
}

void ParamPoly::add_term(const ParamMonomial& m0, const Rat& c0) {
    std::vector<std::pair<ParamMonomial, Rat>> work{{m0, c0}};
    while (!work.empty()) {
        auto [m, c] = std::move(work.back());
        work.pop_back();
        if (c == 0)
            continue;
        const Param* over = nullptr;
        for (auto it = m.begin(); it != m.end();) {
            auto& [p, e] = *it;
            if (p.kind == ParamKind::cyclotomic) {
                e %= static_cast<long>(p.order);
                if (e < 0)
                    e += p.order;
            } else if (p.kind == ParamKind::free && e < 0) {
                throw DivisionByZero("negative power of the free parameter " + p.name);
            }
            if (e == 0) {
                it = m.erase(it);
                continue;
            }
            if (p.kind == ParamKind::cyclotomic && !over &&
                e >= cyclotomic_polynomial(p.order).degree())
                over = &p;
            ++it;
        }
        if (!over) {
            Rat& slot = terms_[m];
            slot += c;
            if (slot == 0)
                terms_.erase(m);
            continue;
        }
        // zeta^phi = -(lower coefficients of the cyclotomic polynomial)
        const Param p = *over;
        const Poly phi = cyclotomic_polynomial(p.order);
        const long shift = m[p] - phi.degree();
        for (int i = 0; i < phi.degree(); ++i) {
            if (phi.coeff(i) == 0)
                continue;
            ParamMonomial next = m;
            next[p] = shift + i;
            work.emplace_back(std::move(next), -c * phi.coeff(i));
        }
    }
}

bool ParamPoly::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat ParamPoly::rational_value() const {
    if (!is_rational())
        throw NotRational(to_string() + " involves parameters");
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

namespace {

// p = u * z with u a monomial in unit parameters and z a polynomial in one cyclotomic parameter.
struct UnitSplit {
    ParamMonomial unit_part;
    std::optional<Param> zeta;
    std::vector<Rat> zeta_coeffs;
};

std::optional<UnitSplit> split_unit(const std::map<ParamMonomial, Rat>& terms) {
    UnitSplit s;
    bool first = true;
    for (const auto& [m, c] : terms) {
        ParamMonomial u;
        long k = 0;
        for (const auto& [p, e] : m) {
            if (p.kind == ParamKind::free)
                return std::nullopt;
            if (p.kind == ParamKind::unit) {
                u[p] = e;
                continue;
            }
            if (s.zeta && !(*s.zeta == p))
                return std::nullopt;
            s.zeta = p;
            k = e;
        }
        if (first)
            s.unit_part = u;
        else if (u != s.unit_part)
            return std::nullopt;
        first = false;
        auto idx = static_cast<std::size_t>(k);
        if (s.zeta_coeffs.size() <= idx)
            s.zeta_coeffs.resize(idx + 1, Rat(0));
        s.zeta_coeffs[idx] = c;
    }
    return s;
}

} // namespace

bool ParamPoly::is_unit() const {
    if (terms_.empty())
        return false;
    if (terms_.size() == 1) {
        for (const auto& [p, e] : terms_.begin()->first)
            if (p.kind == ParamKind::free)
                return false;
        return true;
    }
    return split_unit(terms_).has_value();
}

ParamPoly ParamPoly::inverse() const {
    if (!is_unit())
        throw DivisionByZero(to_string() + " is not invertible among the parameters");
    if (terms_.size() == 1) {
        ParamMonomial m;
        for (const auto& [p, e] : terms_.begin()->first)
            m[p] = -e;
        return monomial(m, 1 / terms_.begin()->second);
    }
    UnitSplit s = *split_unit(terms_);
    ParamMonomial u_inv;
    for (const auto& [p, e] : s.unit_part)
        u_inv[p] = -e;
    Poly inv = inverse_mod(Poly(std::move(s.zeta_coeffs)), cyclotomic_polynomial(s.zeta->order));
    ParamPoly r;
    for (std::size_t e = 0; e < inv.coeffs().size(); ++e)
        if (inv.coeffs()[e] != 0)
            r.add_term(e ? ParamMonomial{{*s.zeta, static_cast<long>(e)}} : ParamMonomial{}, inv.coeffs()[e]);
    return r * monomial(u_inv, 1);
}

ParamPoly ParamPoly::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    ParamPoly r(1), base = *this;
    while (e) {
        if (e & 1)
            r *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return r;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
    *this = *this * o;
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            ParamMonomial m = ma;
            for (const auto& [p, e] : mb)
                m[p] += e;
            r.add_term(m, ca * cb);
        }
    return r;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (m.empty())
            out += pvg::to_string(mag);
        else if (mag == 1)
            out += pvg::to_string(m);
        else
            out += pvg::to_string(mag) + "*" + pvg::to_string(m);
    }
    return out;
}

ParamPoly det(const MatP& m) {
    return det_expand(m);
}

MatP lift(const MatQ& m) {
    return m.map([](const Rat& r) { return ParamPoly(r); });
}

std::string to_string(const MatP& m) {
    return format_matrix(m);
}

} // namespace pvg
