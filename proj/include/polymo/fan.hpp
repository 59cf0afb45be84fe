#pragma once

#include <string>
#include <vector>

namespace polymo {

// Rational polyhedral fan given by primitive ray generators and maximal
// cones (ray-index sets). The combinatorial stand-in for the variety.
struct Fan {
    int dimension = 0;
    std::vector<std::vector<long>> rays;
    std::vector<std::vector<int>> max_cones;

    int ray_count() const { return int(rays.size()); }
};

struct FanValidation {
    bool structurally_valid = false;  // dimensions, primitivity, cone arity
    bool simplicial = false;          // every max cone spans (det != 0)
    bool smooth = false;              // every max cone unimodular (det = +-1)
    bool wall_condition = false;      // each wall shared by exactly two max cones
    bool ray_coverage = false;        // every ray used by some max cone
    bool complete_asserted = false;   // wall condition + each ray in >= n max cones
    std::vector<std::string> problems;

    bool ok() const { return structurally_valid && simplicial && smooth && wall_condition && ray_coverage; }
    std::string status() const;
};

// Structural violations (dimension mismatch, non-primitive ray, bad cone
// arity, repeated rays) are reported in the same way as geometric flags;
// nothing throws. Completeness gets asserted only through the wall-condition
// surrogate, otherwise callers must treat it as unverified.
FanValidation validate_fan(const Fan& fan);

}  // namespace polymo
