#include "polymo/sym.hpp"

#include <stdexcept>

namespace polymo {

WVector wvector_from_class(const DivisorClass& c) {
    WVector w(c.size());
    for (size_t i = 0; i < c.size(); ++i) w[i] = c[i];
    return w;
}

SymElement::SymElement(Polynomial p) : poly_(std::move(p)) {
    if (!poly_.is_homogeneous())
        throw std::invalid_argument("SymElement must be homogeneous");
}

SymElement SymElement::linear(const WVector& w) {
    Polynomial p(int(w.size()));
    for (int a = 0; a < int(w.size()); ++a)
        if (w[a] != 0) p = p + Polynomial::variable(int(w.size()), a, w[a]);
    return SymElement(p);
}

SymElement SymElement::operator+(const SymElement& o) const {
    if (!is_zero() && !o.is_zero() && degree() != o.degree())
        throw std::invalid_argument("SymElement sum of mixed degrees");
    return SymElement(poly_ + o.poly_);
}

std::string SymElement::to_string() const {
    std::vector<std::string> names;
    for (int a = 0; a < rank(); ++a) names.push_back("psi" + std::to_string(a + 1));
    return poly_.to_string(names);
}

}  // namespace polymo
