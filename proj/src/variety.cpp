#include "polymo/variety.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polymo {

DivisorClass class_add(const DivisorClass& a, const DivisorClass& b) {
    if (a.size() != b.size()) throw std::invalid_argument("divisor class rank mismatch");
    DivisorClass out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

DivisorClass class_scale(long k, const DivisorClass& a) {
    DivisorClass out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
    return out;
}

ClassGroup class_group(const Fan& fan) {
    const int n = fan.dimension;
    const int nrays = fan.ray_count();
    // ray matrix: row per ray; Cl(V) = Z^rays / image(Z^n -> Z^rays)
    IntMatrix B(nrays, n);
    for (int i = 0; i < nrays; ++i) {
        if (int(fan.rays[i].size()) != n) throw std::invalid_argument("ray dimension mismatch");
        for (int j = 0; j < n; ++j) B.at(i, j) = fan.rays[i][j];
    }
    SmithNormalForm snf = smith_normal_form(B);
    int s = 0;
    for (int i = 0; i < std::min(nrays, n); ++i) {
        const BigInt& d = snf.D.at(i, i);
        if (d == 0) break;
        if (d != 1)
            throw std::invalid_argument("class group has torsion (invariant factor " +
                                        d.get_str() + "); fan is not smooth");
        ++s;
    }
    const int r = nrays - s;

    // rows s..nrays-1 of U present the free quotient; Hermite form pins the basis
    IntMatrix G(r, nrays);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < nrays; ++j) G.at(i, j) = snf.U.at(s + i, j);
    G = hermite_row_form(G);

    ClassGroup cg;
    cg.rank = r;
    cg.ray_degrees.assign(nrays, DivisorClass(r, 0));
    for (int j = 0; j < nrays; ++j)
        for (int i = 0; i < r; ++i) {
            const BigInt& e = G.at(i, j);
            if (!e.fits_slong_p()) throw std::overflow_error("degree entry overflow");
            cg.ray_degrees[j][i] = e.get_si();
        }
    return cg;
}

std::vector<std::vector<int>> primitive_collections(const Fan& fan) {
    const int nrays = fan.ray_count();
    if (nrays > 24) throw std::invalid_argument("too many rays for subset enumeration");

    std::vector<unsigned> cone_masks;
    for (const auto& cone : fan.max_cones) {
        unsigned m = 0;
        for (int idx : cone) m |= 1u << idx;
        cone_masks.push_back(m);
    }
    auto is_face = [&](unsigned s) {
        for (unsigned cm : cone_masks)
            if ((s & cm) == s) return true;
        return false;
    };

    std::vector<std::vector<int>> result;
    for (unsigned s = 1; s < (1u << nrays); ++s) {
        if (is_face(s)) continue;
        bool minimal = true;
        for (int i = 0; i < nrays && minimal; ++i)
            if ((s >> i) & 1u)
                if (!is_face(s & ~(1u << i))) minimal = false;
        if (!minimal) continue;
        std::vector<int> coll;
        for (int i = 0; i < nrays; ++i)
            if ((s >> i) & 1u) coll.push_back(i);
        result.push_back(std::move(coll));
    }
    std::sort(result.begin(), result.end());
    return result;
}

ToricVariety ToricVariety::build(const Fan& fan) {
    ToricVariety v;
    v.fan_ = fan;
    v.validation_ = validate_fan(fan);
    if (!v.validation_.structurally_valid)
        throw std::invalid_argument("malformed fan: " + (v.validation_.problems.empty()
                                                             ? std::string("unknown")
                                                             : v.validation_.problems.front()));
    if (v.validation_.smooth) v.class_group_ = class_group(fan);
    if (v.validation_.simplicial) v.collections_ = polymo::primitive_collections(fan);

    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        std::vector<int> sorted = fan.max_cones[c];
        std::sort(sorted.begin(), sorted.end());
        if (v.reference_cone_.empty() || sorted < v.reference_cone_) v.reference_cone_ = sorted;
    }
    return v;
}

std::vector<int> ToricVariety::sorted_cone(int index) const {
    std::vector<int> c = fan_.max_cones.at(index);
    std::sort(c.begin(), c.end());
    return c;
}

std::vector<long> ToricVariety::betti_numbers() const {
    const int n = fan_.dimension;
    // cones of dimension j = distinct j-subsets of max cones (simplicial fan)
    std::vector<long> cone_count(n + 1, 0);
    cone_count[0] = 1;
    for (int j = 1; j <= n; ++j) {
        std::set<std::vector<int>> seen;
        for (size_t c = 0; c < fan_.max_cones.size(); ++c) {
            std::vector<int> cone = sorted_cone(int(c));
            std::vector<int> subset(j);
            // enumerate j-subsets of an n-set by index vector
            std::vector<int> pick(j);
            for (int i = 0; i < j; ++i) pick[i] = i;
            while (true) {
                for (int i = 0; i < j; ++i) subset[i] = cone[pick[i]];
                seen.insert(subset);
                int i = j - 1;
                while (i >= 0 && pick[i] == n - j + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int t = i + 1; t < j; ++t) pick[t] = pick[t - 1] + 1;
            }
        }
        cone_count[j] = long(seen.size());
    }

    std::vector<std::vector<long>> binom(n + 1, std::vector<long>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }

    std::vector<long> betti(n + 1, 0);
    for (int k = 0; k <= n; ++k)
        for (int i = k; i <= n; ++i) {
            long term = binom[i][k] * cone_count[n - i];
            betti[k] += ((i - k) % 2 == 0) ? term : -term;
        }
    return betti;
}

}  // namespace polymo
