#include "polymo/score.hpp"

#include <algorithm>
#include <numeric>

#include "polymo/cox.hpp"

namespace polymo {

const char* const kWarnCodimension = "hypothesis m <= n-3 violated";
const char* const kWarnH1 = "H1(E*_X) = W identification unverified";
const char* const kWarnCompleteness = "completeness unverified";

HypersurfaceData make_hypersurface(const ToricVariety& v, std::string label, Polynomial f,
                                   std::vector<Polynomial> J) {
    if (f.is_zero()) throw std::invalid_argument("hypersurface section f must be nonzero");
    if (f.nvars() != v.ray_count())
        throw std::invalid_argument("f must live in the Cox ring (one variable per ray)");
    auto cls = polynomial_class(v, f);
    if (!cls) throw std::invalid_argument("f is not class-homogeneous");
    if (J.empty()) J.assign(v.ray_count(), Polynomial::zero(v.ray_count()));
    if (int(J.size()) != v.ray_count())
        throw std::invalid_argument("J needs one entry per ray");
    for (const auto& j : J)
        if (j.nvars() != v.ray_count())
            throw std::invalid_argument("J entries must live in the Cox ring");
    return HypersurfaceData{std::move(label), std::move(f), *cls, std::move(J)};
}

HypersurfaceData default_jacobian(const ToricVariety& v, std::string label, Polynomial f) {
    std::vector<Polynomial> J;
    for (int rho = 0; rho < v.ray_count(); ++rho) J.push_back(f.derivative(rho));
    return make_hypersurface(v, std::move(label), std::move(f), std::move(J));
}

WVector extract_gamma(const ToricVariety& v, const DeformedEuler& e,
                      const HypersurfaceData& hyp) {
    const int r = v.class_rank();
    // class check: J_rho must be homogeneous of class H - deg(D_rho)
    for (int rho = 0; rho < v.ray_count(); ++rho) {
        const Polynomial& j = hyp.J[rho];
        if (j.is_zero()) continue;
        auto cls = polynomial_class(v, j);
        DivisorClass expected = class_add(hyp.cls, class_scale(-1, v.ray_degree(rho)));
        if (!cls || *cls != expected)
            throw std::invalid_argument("class mismatch: J[" + std::to_string(rho) +
                                        "] is not homogeneous of class H - deg(D_" +
                                        std::to_string(rho) + ")");
    }

    WVector gamma(r);
    for (int a = 0; a < r; ++a) {
        Polynomial p_a(v.ray_count());
        for (int rho = 0; rho < v.ray_count(); ++rho) {
            if (hyp.J[rho].is_zero()) continue;
            p_a = p_a + hyp.J[rho] * e.row_component(rho, a);
        }
        auto q = poly_exact_div(p_a, hyp.f);
        if (!q)
            throw DivisibilityError("E(J) coordinate " + std::to_string(a + 1) +
                                    " is not divisible by f (label '" + hyp.label +
                                    "'): the data do not define a monad");
        if (q->is_zero()) continue;
        auto c = q->as_constant();
        if (!c)
            throw NonConstantQuotientError("E(J)/f coordinate " + std::to_string(a + 1) +
                                           " is not constant (label '" + hyp.label +
                                           "'): J is not a valid lift");
        gamma[a] = *c;
    }
    return gamma;
}

CompleteIntersectionData extract_gammas(const ToricVariety& v, const DeformedEuler& e,
                                        std::vector<HypersurfaceData> hypersurfaces) {
    if (hypersurfaces.empty())
        return CompleteIntersectionData{};
    CompleteIntersectionData ci;
    ci.hypersurfaces = std::move(hypersurfaces);
    for (const auto& h : ci.hypersurfaces) ci.gammas.push_back(extract_gamma(v, e, h));
    return ci;
}

std::vector<std::string> hypothesis_warnings(const PolymologyRing& ring, int m) {
    std::vector<std::string> warnings;
    const int n = ring.variety().dimension();
    bool codim_ok = (m <= n - 3);
    if (m > 0 && !codim_ok) warnings.push_back(kWarnCodimension);
    // Lefschetz covers the undeformed bundle when every X_k has dim >= 3;
    // a deformed bundle is never certified here.
    if (m > 0 && (!ring.euler().is_undeformed() || !codim_ok)) warnings.push_back(kWarnH1);
    if (!ring.variety().validation().complete_asserted) warnings.push_back(kWarnCompleteness);
    return warnings;
}

EvalReport score_product(const PolymologyRing& ring, const CompleteIntersectionData& ci,
                         const std::vector<WVector>& sigmas) {
    const int n = ring.variety().dimension();
    const int m = ci.codimension();
    if (int(ci.gammas.size()) != m)
        throw std::invalid_argument("gammas not extracted for every hypersurface");
    if (int(sigmas.size()) != n - m)
        throw std::invalid_argument("score_product needs exactly n - m = " +
                                    std::to_string(n - m) + " classes, got " +
                                    std::to_string(sigmas.size()));

    EvalReport report;
    SymElement prod = SymElement::one(ring.variety().class_rank());
    for (const auto& s : sigmas) prod = prod * SymElement::linear(s);
    for (const auto& g : ci.gammas) prod = prod * SymElement::linear(g);
    report.certificate = prod;
    report.value = ring.eval_top(prod);
    report.inserted_gammas = ci.gammas;
    report.warnings = hypothesis_warnings(ring, m);
    return report;
}

ConsistencyReport restriction_consistency_check(const PolymologyRing& ring,
                                                const CompleteIntersectionData& ci,
                                                const std::vector<WVector>& sigmas) {
    const int rank = ring.variety().class_rank();
    const int m = ci.codimension();

    auto eval_order = [&](const std::vector<int>& order) {
        SymElement prod = SymElement::one(rank);
        for (const auto& s : sigmas) prod = prod * SymElement::linear(s);
        for (int idx : order) prod = prod * SymElement::linear(ci.gammas[idx]);
        return ring.eval_top(prod);
    };

    ConsistencyReport rep;
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    rep.one_shot = eval_order(order);

    // step k: gammas k+1..m viewed as already inserted, then 1..k appended —
    // the identity <...>_{X_k} = <..., gamma_k>_{X_{k-1}} unrolled
    for (int k = m; k >= 0; --k) {
        std::vector<int> staged;
        for (int j = k; j < m; ++j) staged.push_back(j);
        for (int j = 0; j < k; ++j) staged.push_back(j);
        rep.stepwise.push_back(eval_order(staged));
    }

    std::vector<int> perm = order;
    std::reverse(perm.begin(), perm.end());
    rep.permuted.push_back(eval_order(perm));
    std::next_permutation(order.begin(), order.end());
    rep.permuted.push_back(eval_order(order));

    rep.consistent = true;
    for (const auto& v : rep.stepwise)
        if (v != rep.one_shot) rep.consistent = false;
    for (const auto& v : rep.permuted)
        if (v != rep.one_shot) rep.consistent = false;
    return rep;
}

}  // namespace polymo
