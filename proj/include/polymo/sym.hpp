#pragma once

#include <vector>

#include "polymo/polynomial.hpp"
#include "polymo/variety.hpp"

namespace polymo {

// Element of W = Pic (x) Q in the fixed basis; length is the class rank.
using WVector = QVector;

WVector wvector_from_class(const DivisorClass& c);

// Homogeneous element of Sym W, a polynomial in the basis symbols
// psi_1..psi_r. The zero element is homogeneous of every degree.
class SymElement {
public:
    SymElement() = default;
    explicit SymElement(Polynomial p);  // throws unless homogeneous

    static SymElement zero(int rank) { return SymElement(Polynomial::zero(rank)); }
    static SymElement one(int rank) { return SymElement(Polynomial::constant(rank, 1)); }
    static SymElement linear(const WVector& w);
    static SymElement linear(const DivisorClass& c) { return linear(wvector_from_class(c)); }

    const Polynomial& poly() const { return poly_; }
    int rank() const { return poly_.nvars(); }
    int degree() const { return poly_.degree(); }  // -1 for zero
    bool is_zero() const { return poly_.is_zero(); }

    SymElement operator*(const SymElement& o) const { return SymElement(poly_ * o.poly_); }
    SymElement operator+(const SymElement& o) const;  // throws on mixed degrees
    SymElement operator*(const Rational& c) const { return SymElement(poly_ * c); }
    bool operator==(const SymElement& o) const = default;

    std::string to_string() const;

private:
    Polynomial poly_;
};

}  // namespace polymo
