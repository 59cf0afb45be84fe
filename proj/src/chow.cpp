#include "polymo/chow.hpp"

#include <stdexcept>

namespace polymo {

ChowRing::ChowRing(ToricVariety v) : v_(std::move(v)) {
    if (!v_.validation().ok())
        throw std::invalid_argument("fan not validated: " + v_.validation().status());
    const int nrays = v_.ray_count();
    const int n = v_.dimension();
    const int r = v_.class_rank();

    std::vector<Polynomial> generators;
    for (const auto& coll : v_.primitive_collections()) {
        Monomial m(nrays, 0);
        for (int rho : coll) m[rho] = 1;
        generators.push_back(Polynomial::monomial(m, 1));
    }
    // linear equivalences: sum_rho <m, u_rho> x_rho for each lattice basis vector m
    for (int j = 0; j < n; ++j) {
        Polynomial form(nrays);
        for (int rho = 0; rho < nrays; ++rho) {
            long coeff = v_.fan().rays[rho][j];
            if (coeff != 0) form = form + Polynomial::variable(nrays, rho, coeff);
        }
        generators.push_back(form);
    }

    top_ = std::make_unique<GradedPiece>(nrays, n, generators);
    if (top_->quotient_dim() != 1)
        throw std::runtime_error("top graded piece of the Chow ring has dimension " +
                                 std::to_string(top_->quotient_dim()) + ", expected 1");

    // locate the single free coordinate
    Monomial ref(nrays, 0);
    for (int rho : v_.reference_cone()) ref[rho] = 1;
    SparseVec nf = top_->normal_form(Polynomial::monomial(ref, 1));
    if (nf.empty())
        throw std::runtime_error("reference cone monomial lies in the ideal; cannot normalize");
    free_index_ = nf.begin()->first;

    // right inverse of the degree map: lift classes to Q-divisors
    QMatrix G(r, nrays);
    for (int rho = 0; rho < nrays; ++rho)
        for (int a = 0; a < r; ++a) G.at(a, rho) = v_.ray_degree(rho)[a];
    lift_ = QMatrix(nrays, r);
    for (int a = 0; a < r; ++a) {
        QVector e(r);
        e[a] = 1;
        LinearSolution sol = solve_linear(G, e);
        if (!sol.consistent) throw std::runtime_error("degree map is not surjective");
        for (int rho = 0; rho < nrays; ++rho) lift_.at(rho, a) = sol.particular[rho];
    }
}

Polynomial ChowRing::lift(const DivisorClass& c) const {
    if (int(c.size()) != v_.class_rank()) throw std::invalid_argument("divisor class rank mismatch");
    QVector cls(c.size());
    for (size_t i = 0; i < c.size(); ++i) cls[i] = c[i];
    QVector coeffs = lift_.apply(cls);
    Polynomial form(v_.ray_count());
    for (int rho = 0; rho < v_.ray_count(); ++rho)
        if (coeffs[rho] != 0) form = form + Polynomial::variable(v_.ray_count(), rho, coeffs[rho]);
    return form;
}

Rational ChowRing::evaluate(const std::vector<DivisorClass>& classes,
                            const std::vector<int>& anchor_cone) const {
    if (int(classes.size()) != v_.dimension())
        throw std::invalid_argument("intersection_number needs exactly n classes");

    Polynomial product = Polynomial::constant(v_.ray_count(), 1);
    for (const auto& c : classes) product = product * lift(c);
    if (product.is_zero()) return Rational(0);

    Monomial ref(v_.ray_count(), 0);
    for (int rho : anchor_cone) ref[rho] = 1;
    SparseVec nf_ref = top_->normal_form(Polynomial::monomial(ref, 1));
    SparseVec nf = top_->normal_form(product);

    auto coord = [&](const SparseVec& vec) {
        auto it = vec.find(free_index_);
        return it == vec.end() ? Rational(0) : it->second;
    };
    Rational ref_val = coord(nf_ref);
    if (ref_val == 0)
        throw std::runtime_error("anchor cone monomial lies in the ideal; cannot normalize");
    return coord(nf) / ref_val;
}

Rational ChowRing::intersection_number(const std::vector<DivisorClass>& classes) const {
    return evaluate(classes, v_.reference_cone());
}

Rational ChowRing::intersection_number_via_cone(const std::vector<DivisorClass>& classes,
                                                int max_cone_index) const {
    return evaluate(classes, v_.sorted_cone(max_cone_index));
}

Rational intersection_number(const ToricVariety& v, const std::vector<DivisorClass>& classes) {
    return ChowRing(v).intersection_number(classes);
}

}  // namespace polymo
