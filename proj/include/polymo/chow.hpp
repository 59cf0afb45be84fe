#pragma once

#include <memory>
#include <vector>

#include "polymo/graded.hpp"
#include "polymo/variety.hpp"

namespace polymo {

// Classical intersection-number oracle: normal-form reduction in the
// Artinian ring Q[x_rho] / (square-free non-face monomials + linear
// equivalences), normalized so the square-free monomial of the reference
// maximal cone evaluates to 1. Construction caches the top-degree pivot
// table; queries afterwards are pure and thread-safe.
class ChowRing {
public:
    explicit ChowRing(ToricVariety v);

    const ToricVariety& variety() const { return v_; }

    // Classical intersection number of exactly n divisor classes.
    Rational intersection_number(const std::vector<DivisorClass>& classes) const;

    // Same evaluation anchored at another maximal cone's monomial; equal to
    // intersection_number on complete fans (normalization independence).
    Rational intersection_number_via_cone(const std::vector<DivisorClass>& classes,
                                          int max_cone_index) const;

private:
    Rational evaluate(const std::vector<DivisorClass>& classes,
                      const std::vector<int>& anchor_cone) const;
    Polynomial lift(const DivisorClass& c) const;

    ToricVariety v_;
    std::unique_ptr<GradedPiece> top_;
    QMatrix lift_;  // right inverse of the degree map, rays x rank
    int free_index_ = -1;
};

// Convenience wrapper building a fresh oracle; prefer ChowRing for loops.
Rational intersection_number(const ToricVariety& v, const std::vector<DivisorClass>& classes);

}  // namespace polymo
