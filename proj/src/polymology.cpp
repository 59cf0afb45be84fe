#include "polymo/polymology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polymo {

namespace {

// class -> members of the collection with that class, in ray order
std::vector<std::pair<DivisorClass, std::vector<int>>> split_by_class(
    const ToricVariety& v, const std::vector<int>& collection) {
    std::vector<std::pair<DivisorClass, std::vector<int>>> parts;
    for (int rho : collection) {
        const DivisorClass& c = v.ray_degree(rho);
        auto it = std::find_if(parts.begin(), parts.end(),
                               [&](const auto& p) { return p.first == c; });
        if (it == parts.end()) parts.push_back({c, {rho}});
        else it->second.push_back(rho);
    }
    return parts;
}

SymElement determinant(const std::vector<std::vector<SymElement>>& m, int rank) {
    const int k = int(m.size());
    if (k == 0) return SymElement::one(rank);
    if (k == 1) return m[0][0];
    SymElement det = SymElement::zero(rank);
    std::vector<std::vector<SymElement>> minor(k - 1, std::vector<SymElement>(k - 1));
    for (int j = 0; j < k; ++j) {
        if (m[0][j].is_zero()) continue;
        for (int i = 1; i < k; ++i) {
            int col = 0;
            for (int jj = 0; jj < k; ++jj) {
                if (jj == j) continue;
                minor[i - 1][col++] = m[i][jj];
            }
        }
        SymElement cofactor = m[0][j] * determinant(minor, rank);
        det = (j % 2 == 0) ? det + cofactor : det + cofactor * Rational(-1);
    }
    return det;
}

}  // namespace

bool is_block_complete(const ToricVariety& v, const DeformedEuler& e,
                       std::vector<std::string>* problems) {
    bool ok = true;
    for (const auto& coll : v.primitive_collections()) {
        for (const auto& [cls, members] : split_by_class(v, coll)) {
            for (int rho : members)
                for (int col = 0; col < v.ray_count(); ++col) {
                    if (v.ray_degree(col) != cls) continue;
                    if (std::find(members.begin(), members.end(), col) != members.end()) continue;
                    bool zero = true;
                    for (const auto& c : e.coefficient(rho, col))
                        if (c != 0) zero = false;
                    if (!zero) {
                        ok = false;
                        if (problems)
                            problems->push_back("ray " + std::to_string(rho) +
                                                " mixes with same-class ray " +
                                                std::to_string(col) +
                                                " outside its primitive collection");
                    }
                }
        }
    }
    return ok;
}

SRIdeal sr_ideal(const ToricVariety& v, const DeformedEuler& e) {
    std::vector<std::string> problems;
    if (!is_block_complete(v, e, &problems))
        throw std::invalid_argument("deformation is not block-complete: " + problems.front());

    SRIdeal ideal;
    const int r = v.class_rank();
    for (const auto& coll : v.primitive_collections()) {
        SymElement gen = SymElement::one(r);
        for (const auto& [cls, members] : split_by_class(v, coll)) {
            const int k = int(members.size());
            std::vector<std::vector<SymElement>> block(k, std::vector<SymElement>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) block[i][j] = e.psi_entry(members[i], members[j]);
            gen = gen * determinant(block, r);
        }
        ideal.generators.push_back(gen);
        ideal.collections.push_back(coll);
    }
    return ideal;
}

DeformationReport validate_deformation(const ToricVariety& v, const DeformedEuler& e) {
    DeformationReport rep;
    rep.block_complete = is_block_complete(v, e, &rep.problems);
    if (!rep.block_complete) return rep;

    SRIdeal ideal = sr_ideal(v, e);
    rep.nondegenerate = true;
    for (size_t i = 0; i < ideal.generators.size(); ++i)
        if (ideal.generators[i].is_zero()) {
            rep.nondegenerate = false;
            std::string coll;
            for (int rho : ideal.collections[i]) coll += (coll.empty() ? "" : ",") + std::to_string(rho);
            rep.problems.push_back("block determinant vanishes for primitive collection {" + coll + "}");
        }

    std::vector<long> dims = quotient_dims(v, e);
    std::vector<long> betti = v.betti_numbers();
    rep.dims_valid = (dims == betti);
    if (!rep.dims_valid) rep.problems.push_back("graded quotient dimensions differ from Betti numbers");
    return rep;
}

PolymologyRing::PolymologyRing(ToricVariety v, DeformedEuler e)
    : v_(std::move(v)), e_(std::move(e)) {
    if (!v_.validation().ok())
        throw std::invalid_argument("fan not validated: " + v_.validation().status());
    const int r = v_.class_rank();
    const int n = v_.dimension();
    if (r < 1) throw std::invalid_argument("class rank must be positive");

    ideal_ = sr_ideal(v_, e_);
    std::vector<Polynomial> gen_polys;
    for (const auto& g : ideal_.generators) gen_polys.push_back(g.poly());

    for (int k = 0; k <= n; ++k) {
        pieces_.push_back(std::make_unique<GradedPiece>(r, k, gen_polys));
        dims_.push_back(pieces_.back()->quotient_dim());
    }

    if (dims_[n] != 1) {
        top_error_ = "top graded dimension is " + std::to_string(dims_[n]) +
                     ", expected 1 (degenerate deformation)";
        return;
    }
    top_free_index_ = pieces_[n]->free_indices().front();
    SparseVec nf = pieces_[n]->normal_form(reference_element().poly());
    auto it = nf.find(top_free_index_);
    if (it == nf.end()) {
        top_error_ = "reference cone element lies in the ideal (degenerate deformation)";
        return;
    }
    top_ref_value_ = it->second;
}

SymElement PolymologyRing::reference_element() const {
    SymElement ref = SymElement::one(v_.class_rank());
    for (int rho : v_.reference_cone()) ref = ref * SymElement::linear(v_.ray_degree(rho));
    return ref;
}

Rational PolymologyRing::eval_top(const SymElement& s) const {
    if (s.is_zero()) return Rational(0);
    if (s.rank() != v_.class_rank()) throw std::invalid_argument("SymElement rank mismatch");
    if (s.degree() != v_.dimension())
        throw std::invalid_argument("eval_top requires degree exactly n = " +
                                    std::to_string(v_.dimension()));
    if (!top_error_.empty()) throw std::runtime_error(top_error_);

    SparseVec nf = pieces_[v_.dimension()]->normal_form(s.poly());
    auto it = nf.find(top_free_index_);
    Rational val = (it == nf.end()) ? Rational(0) : it->second;
    return val / top_ref_value_;
}

Rational PolymologyRing::product(const std::vector<WVector>& sigmas) const {
    if (int(sigmas.size()) != v_.dimension())
        throw std::invalid_argument("product needs exactly n = " +
                                    std::to_string(v_.dimension()) + " classes");
    SymElement prod = SymElement::one(v_.class_rank());
    for (const auto& s : sigmas) prod = prod * SymElement::linear(s);
    return eval_top(prod);
}

std::vector<long> quotient_dims(const ToricVariety& v, const DeformedEuler& e) {
    SRIdeal ideal = sr_ideal(v, e);
    std::vector<Polynomial> gen_polys;
    for (const auto& g : ideal.generators) gen_polys.push_back(g.poly());
    std::vector<long> dims;
    for (int k = 0; k <= v.dimension(); ++k)
        dims.push_back(GradedPiece(v.class_rank(), k, gen_polys).quotient_dim());
    return dims;
}

Rational product_V(const ToricVariety& v, const DeformedEuler& e,
                   const std::vector<WVector>& sigmas) {
    return PolymologyRing(v, e).product(sigmas);
}

}  // namespace polymo
