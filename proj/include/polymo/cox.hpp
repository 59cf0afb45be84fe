#pragma once

#include <optional>

#include "polymo/polynomial.hpp"
#include "polymo/variety.hpp"

namespace polymo {

// Divisor class of a Cox monomial: sum of ray degrees weighted by exponents.
DivisorClass monomial_class(const ToricVariety& v, const Monomial& m);

// Common class of all terms, or nullopt when p is not class-homogeneous.
// The zero polynomial has every class; it reports nullopt as well.
std::optional<DivisorClass> polynomial_class(const ToricVariety& v, const Polynomial& p);

}  // namespace polymo
