#pragma once

#include <vector>

#include "polymo/linear.hpp"
#include "polymo/polynomial.hpp"

namespace polymo {

// All exponent vectors of the given total degree, descending graded-lex.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

// One graded piece of a quotient by a homogeneous ideal: the monomial basis
// of Sym^d together with a pivot table for the ideal's span in that degree.
// Built once, then immutable; reduce() gives unique normal forms.
class GradedPiece {
public:
    GradedPiece(int nvars, int degree, const std::vector<Polynomial>& generators);

    int degree() const { return degree_; }
    int ambient_dim() const { return int(basis_.size()); }
    int ideal_rank() const { return reducer_.rank(); }
    int quotient_dim() const { return ambient_dim() - ideal_rank(); }

    // basis indices that are not pivots of the ideal span
    std::vector<int> free_indices() const;

    SparseVec to_vec(const Polynomial& p) const;  // p homogeneous of degree()
    SparseVec normal_form(const Polynomial& p) const { return reducer_.reduce(to_vec(p)); }

private:
    int nvars_;
    int degree_;
    std::vector<Monomial> basis_;
    std::map<Monomial, int, GrlexGreater> index_;
    SparseRowReducer reducer_;
};

}  // namespace polymo
