#pragma once

#include <memory>
#include <string>
#include <vector>

#include "polymo/euler.hpp"
#include "polymo/graded.hpp"
#include "polymo/sym.hpp"
#include "polymo/variety.hpp"

namespace polymo {

// Deformed Stanley-Reisner-type ideal: one generator per primitive
// collection, the product over divisor classes of the mixing-block
// determinants in Sym W.
struct SRIdeal {
    std::vector<SymElement> generators;
    std::vector<std::vector<int>> collections;  // provenance, parallel to generators
};

struct DeformationReport {
    bool class_compatible = true;  // enforced at DeformedEuler construction
    bool block_complete = false;
    bool nondegenerate = false;    // every block determinant generator nonzero
    bool dims_valid = false;       // quotient dims match the fan's Betti numbers
    std::vector<std::string> problems;

    bool ok() const { return class_compatible && block_complete && nondegenerate && dims_valid; }
};

// Each primitive collection, split by divisor class, must mix only within
// itself: w(rho, rho') = 0 for rho in K_c, rho' of class c outside K.
bool is_block_complete(const ToricVariety& v, const DeformedEuler& e,
                       std::vector<std::string>* problems = nullptr);

// Generators of SR(V, E); throws when the deformation is outside the
// block-complete class (the generator shape is only defined there).
SRIdeal sr_ideal(const ToricVariety& v, const DeformedEuler& e);

// Non-throwing diagnosis used by the validate query.
DeformationReport validate_deformation(const ToricVariety& v, const DeformedEuler& e);

// The quotient Sym* W / SR(V, E) with its graded pieces row-reduced once.
// Construction performs the single-writer cache population; afterwards the
// ring is immutable and queries may run concurrently.
class PolymologyRing {
public:
    PolymologyRing(ToricVariety v, DeformedEuler e);

    const ToricVariety& variety() const { return v_; }
    const DeformedEuler& euler() const { return e_; }
    const SRIdeal& ideal() const { return ideal_; }

    // graded dimensions d_0..d_n of the quotient
    const std::vector<long>& quotient_dims() const { return dims_; }

    // Image of a degree-n element in the one-dimensional top piece,
    // normalized so the reference-cone element  prod_{rho in cone} deg(D_rho)
    // evaluates to 1. Throws when d_n != 1 or the reference lies in the ideal.
    Rational eval_top(const SymElement& s) const;

    // <sigma_1, ..., sigma_n>_V
    Rational product(const std::vector<WVector>& sigmas) const;

    SymElement reference_element() const;

private:
    ToricVariety v_;
    DeformedEuler e_;
    SRIdeal ideal_;
    std::vector<std::unique_ptr<GradedPiece>> pieces_;  // degree 0..n
    std::vector<long> dims_;
    int top_free_index_ = -1;
    Rational top_ref_value_;
    std::string top_error_;  // non-empty when the top normalization failed
};

std::vector<long> quotient_dims(const ToricVariety& v, const DeformedEuler& e);
Rational product_V(const ToricVariety& v, const DeformedEuler& e,
                   const std::vector<WVector>& sigmas);

}  // namespace polymo
