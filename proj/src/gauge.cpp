#include "pvgauge/gauge.hpp"

#include <stdexcept>

namespace pvg {

namespace {

void require_square_pair(const MatRF& a, const MatRF& b) {
    if (!a.is_square() || !b.is_square() || a.n() != b.n())
        throw DimensionMismatch("expected two square matrices of equal size");
}

} // namespace

MatRF gauge_act(const MatRF& u, const MatRF& a) {
    require_square_pair(u, a);
    MatRF u_inv = mat_inverse(u).inverse;
    return mat_derive(u) * u_inv + u * a * u_inv;
}

HPair::HPair(MatRF a, MatRF f) : a_(std::move(a)), f_(std::move(f)) {
    require_square_pair(a_, f_);
    f_inv_ = mat_inverse(f_).inverse;
}

HPair HPair::identity(std::size_t n) {
    return HPair(MatRF(n, n), MatRF::identity(n), MatRF::identity(n));
}

HPair h_mul(const HPair& p, const HPair& q) {
    if (p.n() != q.n())
        throw DimensionMismatch("H_n elements of different size");
    return HPair(p.a_ + p.f_ * q.a_ * p.f_inv_, p.f_ * q.f_, q.f_inv_ * p.f_inv_);
}

HPair h_inv(const HPair& p) {
    return HPair(-(p.f_inv_ * p.a_ * p.f_), p.f_inv_, p.f_);
}

HPair delta_elem(const MatRF& u) {
    MatRF u_inv = mat_inverse(u).inverse;
    if (!u.is_square())
        throw DimensionMismatch("gauge matrix must be square");
    return HPair(mat_derive(u) * u_inv, u, u_inv);
}

MatRF conjugation_action_check(const MatRF& u, const MatRF& a) {
    require_square_pair(u, a);
    const std::size_t n = u.n();
    MatRF u_inv = mat_inverse(u).inverse;
    HPair left = h_mul(delta_elem(u), HPair(a, MatRF::identity(n)));
    HPair result = h_mul(left, HPair(MatRF(n, n), u_inv));
    if (result.f() != MatRF::identity(n))
        throw std::logic_error("conjugated element left the normal subgroup M_n(K) x {1}");
    return result.a();
}

GaugeClass::GaugeClass(MatRF rep) : rep_(std::move(rep)) {
    if (!rep_.is_square() || rep_.n() == 0)
        throw DimensionMismatch("gauge class representative must be a nonempty square matrix");
}

} // namespace pvg
