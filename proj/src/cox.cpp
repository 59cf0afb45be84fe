#include "polymo/cox.hpp"

#include <stdexcept>

namespace polymo {

DivisorClass monomial_class(const ToricVariety& v, const Monomial& m) {
    if (int(m.size()) != v.ray_count()) throw std::invalid_argument("monomial arity mismatch");
    DivisorClass cls(v.class_rank(), 0);
    for (int rho = 0; rho < v.ray_count(); ++rho) {
        if (m[rho] == 0) continue;
        cls = class_add(cls, class_scale(m[rho], v.ray_degree(rho)));
    }
    return cls;
}

std::optional<DivisorClass> polynomial_class(const ToricVariety& v, const Polynomial& p) {
    if (p.is_zero()) return std::nullopt;
    std::optional<DivisorClass> cls;
    for (const auto& [m, c] : p.terms()) {
        DivisorClass mc = monomial_class(v, m);
        if (!cls) cls = mc;
        else if (*cls != mc) return std::nullopt;
    }
    return cls;
}

}  // namespace polymo
