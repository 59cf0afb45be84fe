#include "polymo/euler.hpp"

#include <stdexcept>

namespace polymo {

namespace {
bool is_zero_w(const WVector& w) {
    for (const auto& c : w)
        if (c != 0) return false;
    return true;
}
}  // namespace

DeformedEuler DeformedEuler::undeformed(const ToricVariety& v) {
    DeformedEuler e;
    e.rank_ = v.class_rank();
    e.undeformed_ = true;
    e.w_.assign(v.ray_count(), std::vector<WVector>(v.ray_count(), WVector(e.rank_)));
    for (int rho = 0; rho < v.ray_count(); ++rho)
        e.w_[rho][rho] = wvector_from_class(v.ray_degree(rho));
    return e;
}

DeformedEuler DeformedEuler::from_coefficients(const ToricVariety& v,
                                               const std::vector<Coefficient>& coeffs) {
    DeformedEuler e;
    e.rank_ = v.class_rank();
    e.w_.assign(v.ray_count(), std::vector<WVector>(v.ray_count(), WVector(e.rank_)));
    std::vector<bool> seen(size_t(v.ray_count()) * v.ray_count(), false);
    for (const auto& c : coeffs) {
        if (c.row_ray < 0 || c.row_ray >= v.ray_count() || c.col_ray < 0 ||
            c.col_ray >= v.ray_count())
            throw std::invalid_argument("deformation coefficient: ray index out of range");
        if (int(c.w.size()) != e.rank_)
            throw std::invalid_argument("deformation coefficient: W vector has wrong length");
        size_t slot = size_t(c.row_ray) * v.ray_count() + c.col_ray;
        if (seen[slot])
            throw std::invalid_argument("duplicate deformation coefficient for rays (" +
                                        std::to_string(c.row_ray) + "," +
                                        std::to_string(c.col_ray) + ")");
        seen[slot] = true;
        if (is_zero_w(c.w)) continue;
        if (v.ray_degree(c.row_ray) != v.ray_degree(c.col_ray))
            throw std::invalid_argument(
                "class-compatibility violation: rays " + std::to_string(c.row_ray) + " and " +
                std::to_string(c.col_ray) + " have different divisor classes");
        e.w_[c.row_ray][c.col_ray] = c.w;
    }

    DeformedEuler base = undeformed(v);
    e.undeformed_ = (e.w_ == base.w_);
    return e;
}

Polynomial DeformedEuler::row_component(int rho, int a) const {
    Polynomial p(ray_count());
    for (int col = 0; col < ray_count(); ++col) {
        const Rational& c = w_[rho][col][a];
        if (c != 0) p = p + Polynomial::variable(ray_count(), col, c);
    }
    return p;
}

}  // namespace polymo
