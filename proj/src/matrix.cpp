#include "pvgauge/matrix.hpp"

#include <utility>

namespace pvg {

namespace {

struct Cleared {
    MatPoly p;
    std::vector<Poly> row_den; // u(i, j) = p(i, j) / row_den[i]
};

Cleared clear_row_denominators(const MatRF& u) {
    Cleared c{MatPoly(u.rows(), u.cols()), {}};
    for (std::size_t i = 0; i < u.rows(); ++i) {
        Poly d(1);
        for (std::size_t j = 0; j < u.cols(); ++j)
            if (u(i, j).den().degree() > 0)
                d = lcm(d, u(i, j).den());
        for (std::size_t j = 0; j < u.cols(); ++j)
            c.p(i, j) = u(i, j).num() * exact_div(d, u(i, j).den());
        c.row_den.push_back(std::move(d));
    }
    return c;
}

// Bareiss forward elimination; returns the pivot count. On full rank the last
// pivot is (-1)^swaps * det.
std::size_t bareiss_forward(MatPoly& a, int& sign) {
    sign = 1;
    const std::size_t rows = a.rows(), cols = a.cols();
    Poly prev(1);
    std::size_t r = 0;
    for (std::size_t k = 0; k < cols && r < rows; ++k) {
        std::size_t p = r;
        while (p < rows && a(p, k).is_zero())
            ++p;
        if (p == rows)
            continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a(p, j), a(r, j));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            Poly aik = a(i, k);
            for (std::size_t j = k; j < cols; ++j)
                a(i, j) = exact_div(a(r, k) * a(i, j) - aik * a(r, j), prev);
        }
        prev = a(r, k);
        ++r;
    }
    return r;
}

} // namespace

InverseResult mat_inverse(const MatRF& u) {
    if (!u.is_square())
        throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = u.n();
    Cleared c = clear_row_denominators(u);
    MatPoly a(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = c.p(i, j);
        a(i, n + i) = Poly(1);
    }
    int sign = 1;
    Poly prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero())
            ++p;
        if (p == n)
            throw SingularMatrix("matrix is singular over Q(x)");
        if (p != k) {
            for (std::size_t j = 0; j < 2 * n; ++j)
                std::swap(a(p, j), a(k, j));
            sign = -sign;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k)
                continue;
            Poly aik = a(i, k);
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k)
                    continue;
                a(i, j) = exact_div(a(k, k) * a(i, j) - aik * a(k, j), prev);
            }
            a(i, k) = Poly();
        }
        prev = a(k, k);
    }
    // left block is now d*I with d = sign * det(P); right block is d * P^{-1}
    InverseResult out{MatRF(n, n), RatFn()};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.inverse(i, j) = RatFn(a(i, n + j) * c.row_den[j], a(i, i));
    Poly den(1);
    for (const auto& d : c.row_den)
        den *= d;
    out.det = RatFn(sign < 0 ? -prev : prev, den);
    return out;
}

RatFn det(const MatRF& u) {
    if (!u.is_square())
        throw DimensionMismatch("determinant of a non-square matrix");
    if (u.n() == 0)
        return RatFn(1);
    Cleared c = clear_row_denominators(u);
    int sign = 1;
    if (bareiss_forward(c.p, sign) < u.n())
        return RatFn();
    Poly d = c.p(u.n() - 1, u.n() - 1);
    Poly den(1);
    for (const auto& r : c.row_den)
        den *= r;
    return RatFn(sign < 0 ? -d : d, den);
}

std::size_t rank(const MatRF& m) {
    Cleared c = clear_row_denominators(m);
    int sign = 1;
    return bareiss_forward(c.p, sign);
}

MatRF mat_derive(const MatRF& u) {
    return u.map([](const RatFn& v) { return v.derivative(); });
}

MatQ mat_eval(const MatRF& a, const Rat& x0) {
    return a.map([&](const RatFn& v) { return v.eval(x0); });
}

MatRF kronecker(const MatRF& a, const MatRF& b) {
    MatRF k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero())
                continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return k;
}

MatRF vec(const MatRF& m) {
    MatRF v(m.rows() * m.cols(), 1);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            v(j * m.rows() + i, 0) = m(i, j);
    return v;
}

MatRF unvec(const MatRF& v, std::size_t n) {
    if (v.rows() != n * n || v.cols() != 1)
        throw DimensionMismatch("vector length is not n^2");
    MatRF m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            m(i, j) = v(j * n + i, 0);
    return m;
}

bool is_diagonal(const MatRF& m) {
    if (!m.is_square())
        return false;
    for (std::size_t i = 0; i < m.n(); ++i)
        for (std::size_t j = 0; j < m.n(); ++j)
            if (i != j && !m(i, j).is_zero())
                return false;
    return true;
}

std::vector<std::size_t> rref(MatQ& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t k = 0; k < m.cols() && r < m.rows(); ++k) {
        std::size_t p = r;
        while (p < m.rows() && m(p, k) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        Rat inv = 1 / m(r, k);
        for (std::size_t j = k; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, k) == 0)
                continue;
            Rat f = m(i, k);
            for (std::size_t j = k; j < m.cols(); ++j)
                if (m(r, j) != 0)
                    m(i, j) -= f * m(r, j);
        }
        pivots.push_back(k);
        ++r;
    }
    return pivots;
}

std::size_t rank(MatQ m) {
    return rref(m).size();
}

std::vector<std::vector<Rat>> nullspace(MatQ m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string to_string(const MatRF& m) {
    return format_matrix(m);
}

} // namespace pvg
