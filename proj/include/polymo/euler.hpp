#pragma once

#include <vector>

#include "polymo/sym.hpp"
#include "polymo/variety.hpp"

namespace polymo {

// Linear deformation of the toric Euler map: one W-valued Cox linear form
// per ray, E_rho = sum_rho' x_rho' (x) w(rho, rho'), with w(rho, rho')
// allowed to be nonzero only between rays of equal divisor class.
class DeformedEuler {
public:
    struct Coefficient {
        int row_ray;
        int col_ray;
        WVector w;
    };

    // w(rho, rho) = deg(D_rho), everything else zero — the classical map.
    static DeformedEuler undeformed(const ToricVariety& v);

    // Throws on class-incompatible or malformed coefficients.
    static DeformedEuler from_coefficients(const ToricVariety& v,
                                           const std::vector<Coefficient>& coeffs);

    int ray_count() const { return int(w_.size()); }
    int rank() const { return rank_; }
    const WVector& coefficient(int row, int col) const { return w_[row][col]; }
    bool is_undeformed() const { return undeformed_; }

    // Component a of E_rho as a Cox polynomial: sum_rho' w(rho,rho')_a x_rho'.
    Polynomial row_component(int rho, int a) const;

    // Entry of the psi-weighted mixing matrix: w(row,col) . (psi_1..psi_r).
    SymElement psi_entry(int row, int col) const { return SymElement::linear(w_[row][col]); }

private:
    std::vector<std::vector<WVector>> w_;  // dense rays x rays, zero vectors allowed
    int rank_ = 0;
    bool undeformed_ = false;
};

}  // namespace polymo
