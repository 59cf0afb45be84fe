#pragma once

#include <vector>

#include "polymo/fan.hpp"
#include "polymo/int_matrix.hpp"
#include "polymo/rational.hpp"

namespace polymo {

// Divisor class in the fixed Pic basis (free part of the class group).
using DivisorClass = std::vector<long>;

DivisorClass class_add(const DivisorClass& a, const DivisorClass& b);
DivisorClass class_scale(long k, const DivisorClass& a);

struct ClassGroup {
    int rank = 0;                          // r = #rays - n
    std::vector<DivisorClass> ray_degrees; // deg(D_rho), one per ray
};

// Cokernel of the ray matrix via Smith normal form. The basis of the free
// part is canonicalized by the row Hermite form of the degree matrix, so
// identical fans always yield identical coordinates. Torsion (possible only
// for non-smooth fans) is an error.
ClassGroup class_group(const Fan& fan);

// All minimal non-faces, each sorted, the list sorted.
std::vector<std::vector<int>> primitive_collections(const Fan& fan);

// Validated fan bundled with its class-group data. Immutable after build;
// safe to share across threads.
class ToricVariety {
public:
    static ToricVariety build(const Fan& fan);

    const Fan& fan() const { return fan_; }
    const FanValidation& validation() const { return validation_; }
    int dimension() const { return fan_.dimension; }
    int ray_count() const { return fan_.ray_count(); }
    int class_rank() const { return class_group_.rank; }
    const DivisorClass& ray_degree(int ray) const { return class_group_.ray_degrees[ray]; }
    const std::vector<DivisorClass>& ray_degrees() const { return class_group_.ray_degrees; }
    const std::vector<std::vector<int>>& primitive_collections() const { return collections_; }

    // reference maximal cone anchoring every top-degree normalization:
    // the lexicographically smallest sorted max cone
    const std::vector<int>& reference_cone() const { return reference_cone_; }
    std::vector<int> sorted_cone(int index) const;

    // Even-degree Betti numbers b_0, b_2, ..., b_2n from the cone counts.
    std::vector<long> betti_numbers() const;

private:
    Fan fan_;
    FanValidation validation_;
    ClassGroup class_group_;
    std::vector<std::vector<int>> collections_;
    std::vector<int> reference_cone_;
};

}  // namespace polymo
