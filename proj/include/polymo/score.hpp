#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polymo/polymology.hpp"

namespace polymo {

// E(J) is not a multiple of f: the monad data do not form a complex.
struct DivisibilityError : std::runtime_error {
    explicit DivisibilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// E(J) is divisible by f but the quotient is not constant: J is not a
// valid lift for this E.
struct NonConstantQuotientError : std::runtime_error {
    explicit NonConstantQuotientError(const std::string& msg) : std::runtime_error(msg) {}
};

// Hypersurface with a chosen lift of the monad map: the section f of class
// H and per-ray entries J_rho of class H - deg(D_rho).
struct HypersurfaceData {
    std::string label;
    Polynomial f;
    DivisorClass cls;           // H, the divisor class of f
    std::vector<Polynomial> J;  // one entry per ray; the zero polynomial means absent
};

// Validates f (nonzero, class-homogeneous) and shapes J; J classes are
// checked later, by extract_gamma.
HypersurfaceData make_hypersurface(const ToricVariety& v, std::string label, Polynomial f,
                                   std::vector<Polynomial> J);

// J_rho = df/dx_rho, the classical lift.
HypersurfaceData default_jacobian(const ToricVariety& v, std::string label, Polynomial f);

// The unique gamma in W with E(J) = gamma * f, coordinatewise exact division.
WVector extract_gamma(const ToricVariety& v, const DeformedEuler& e,
                      const HypersurfaceData& hyp);

struct CompleteIntersectionData {
    std::vector<HypersurfaceData> hypersurfaces;
    std::vector<WVector> gammas;  // parallel to hypersurfaces

    int codimension() const { return int(hypersurfaces.size()); }
};

CompleteIntersectionData extract_gammas(const ToricVariety& v, const DeformedEuler& e,
                                        std::vector<HypersurfaceData> hypersurfaces);

// warning texts, kept verbatim across engine and reports
extern const char* const kWarnCodimension;   // m <= n-3 hypothesis violated
extern const char* const kWarnH1;            // H^1 identification unverified
extern const char* const kWarnCompleteness;  // fan completeness unverified

struct EvalReport {
    Rational value;
    std::vector<WVector> inserted_gammas;
    SymElement certificate;  // the degree-n element actually reduced
    std::vector<std::string> warnings;
};

std::vector<std::string> hypothesis_warnings(const PolymologyRing& ring, int codimension);

// <sigma_1,...,sigma_{n-m}>_X = <sigma_1,...,sigma_{n-m}, gamma_1,...,gamma_m>_V
EvalReport score_product(const PolymologyRing& ring, const CompleteIntersectionData& ci,
                         const std::vector<WVector>& sigmas);

struct ConsistencyReport {
    Rational one_shot;
    std::vector<Rational> stepwise;  // value recomputed after each partial insertion
    std::vector<Rational> permuted;  // values under permuted hypersurface order
    bool consistent = false;
};

// The induction step as a testable identity: one-shot insertion of all
// gammas equals every left-to-right partial insertion and every
// hypersurface reordering.
ConsistencyReport restriction_consistency_check(const PolymologyRing& ring,
                                                const CompleteIntersectionData& ci,
                                                const std::vector<WVector>& sigmas);

}  // namespace polymo
