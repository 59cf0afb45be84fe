#include "polymo/graded.hpp"

#include <stdexcept>

namespace polymo {

namespace {
void enumerate(int nvars, int pos, int remaining, Monomial& scratch,
               std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        scratch[pos] = remaining;
        out.push_back(scratch);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        scratch[pos] = e;
        enumerate(nvars, pos + 1, remaining - e, scratch, out);
    }
}
}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    if (nvars <= 0) throw std::invalid_argument("monomials_of_degree needs variables");
    std::vector<Monomial> out;
    Monomial scratch(nvars, 0);
    enumerate(nvars, 0, degree, scratch, out);
    return out;
}

GradedPiece::GradedPiece(int nvars, int degree, const std::vector<Polynomial>& generators)
    : nvars_(nvars), degree_(degree), basis_(monomials_of_degree(nvars, degree)) {
    for (int i = 0; i < int(basis_.size()); ++i) index_.emplace(basis_[i], i);

    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (g.nvars() != nvars_) throw std::invalid_argument("generator variable-set mismatch");
        if (!g.is_homogeneous()) throw std::invalid_argument("generator not homogeneous");
        int dg = g.degree();
        if (dg > degree_) continue;
        for (const auto& m : monomials_of_degree(nvars_, degree_ - dg))
            reducer_.insert(to_vec(g * Polynomial::monomial(m, 1)));
    }
}

std::vector<int> GradedPiece::free_indices() const {
    std::vector<int> out;
    const auto& pivots = reducer_.pivot_rows();
    for (int i = 0; i < int(basis_.size()); ++i)
        if (!pivots.contains(i)) out.push_back(i);
    return out;
}

SparseVec GradedPiece::to_vec(const Polynomial& p) const {
    if (p.nvars() != nvars_) throw std::invalid_argument("polynomial variable-set mismatch");
    SparseVec v;
    for (const auto& [m, c] : p.terms()) {
        auto it = index_.find(m);
        if (it == index_.end()) throw std::invalid_argument("polynomial not homogeneous of piece degree");
        v[it->second] = c;
    }
    return v;
}

}  // namespace polymo
