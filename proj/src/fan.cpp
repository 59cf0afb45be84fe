#include "polymo/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "polymo/int_matrix.hpp"

namespace polymo {

std::string FanValidation::status() const {
    if (ok()) return "ok";
    std::string s = "failed: ";
    if (!structurally_valid) s += "malformed fan";
    else if (!simplicial) s += "non-simplicial cone";
    else if (!smooth) s += "non-smooth cone";
    else if (!wall_condition) s += "wall condition";
    else s += "ray coverage";
    return s;
}

FanValidation validate_fan(const Fan& fan) {
    FanValidation v;
    const int n = fan.dimension;
    const int nrays = fan.ray_count();

    v.structurally_valid = n >= 1 && nrays > 0;
    if (n < 1) v.problems.push_back("dimension must be positive");
    for (int i = 0; i < nrays; ++i) {
        const auto& u = fan.rays[i];
        if (int(u.size()) != n) {
            v.structurally_valid = false;
            v.problems.push_back("ray " + std::to_string(i) + ": dimension mismatch");
            continue;
        }
        long g = 0;
        for (long e : u) g = std::gcd(g, e);
        if (g != 1) {
            v.structurally_valid = false;
            v.problems.push_back("ray " + std::to_string(i) + ": not primitive");
        }
        for (int j = 0; j < i; ++j)
            if (fan.rays[j] == u) {
                v.structurally_valid = false;
                v.problems.push_back("ray " + std::to_string(i) + ": duplicate of ray " + std::to_string(j));
            }
    }
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& cone = fan.max_cones[c];
        if (int(cone.size()) != n) {
            v.structurally_valid = false;
            v.problems.push_back("max cone " + std::to_string(c) + ": needs exactly " +
                                 std::to_string(n) + " rays");
        }
        for (int idx : cone)
            if (idx < 0 || idx >= nrays) {
                v.structurally_valid = false;
                v.problems.push_back("max cone " + std::to_string(c) + ": ray index out of range");
            }
        std::set<int> dedup(cone.begin(), cone.end());
        if (dedup.size() != cone.size()) {
            v.structurally_valid = false;
            v.problems.push_back("max cone " + std::to_string(c) + ": repeated ray");
        }
    }
    if (fan.max_cones.empty()) {
        v.structurally_valid = false;
        v.problems.push_back("no maximal cones");
    }
    if (!v.structurally_valid) return v;

    v.simplicial = true;
    v.smooth = true;
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = fan.rays[fan.max_cones[c][i]][j];
        BigInt d = m.det();
        if (d == 0) {
            v.simplicial = false;
            v.problems.push_back("max cone " + std::to_string(c) + ": rays not independent");
        } else if (abs(d) != 1) {
            v.smooth = false;
            v.problems.push_back("max cone " + std::to_string(c) + ": not unimodular (det " +
                                 d.get_str() + ")");
        }
    }
    if (!v.simplicial) v.smooth = false;

    // every (n-1)-subset of a simplicial max cone spans a wall; completeness
    // demands each wall sit between exactly two chambers
    std::map<std::vector<int>, int> wall_count;
    for (const auto& cone : fan.max_cones) {
        std::vector<int> sorted = cone;
        std::sort(sorted.begin(), sorted.end());
        for (size_t skip = 0; skip < sorted.size(); ++skip) {
            std::vector<int> wall;
            for (size_t i = 0; i < sorted.size(); ++i)
                if (i != skip) wall.push_back(sorted[i]);
            wall_count[wall] += 1;
        }
    }
    v.wall_condition = true;
    for (const auto& [wall, count] : wall_count)
        if (count != 2) {
            v.wall_condition = false;
            std::ostringstream os;
            os << "wall {";
            for (size_t i = 0; i < wall.size(); ++i) os << (i ? "," : "") << wall[i];
            os << "} lies in " << count << " max cone(s)";
            v.problems.push_back(os.str());
            break;
        }

    std::vector<int> cone_membership(nrays, 0);
    for (const auto& cone : fan.max_cones)
        for (int idx : cone) cone_membership[idx] += 1;
    v.ray_coverage = std::all_of(cone_membership.begin(), cone_membership.end(),
                                 [](int c) { return c > 0; });
    v.complete_asserted = v.wall_condition &&
                          std::all_of(cone_membership.begin(), cone_membership.end(),
                                      [n](int c) { return c >= n; });
    return v;
}

}  // namespace polymo
