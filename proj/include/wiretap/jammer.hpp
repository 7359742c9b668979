#pragma once

// Construction of information-preserving jamming covariances. Power is
// waterfilled over the subspace of jamming directions the receiver cannot
// see; for nh <= min(nr, nt) the equivalent closed form through Q and the
// block parameter N is exposed and verified.

#include "wiretap/rates.hpp"

#include <string>
#include <utility>

namespace wiretap {

enum class CaseTag { Zero, Case1, Case2, NullSpaceBaseline };

const char* to_string(CaseTag tag);

// A designed jamming covariance plus its provenance.
struct JammerDesign {
    Cmat Kw;                    // nh x nh Hermitian PSD
    CaseTag case_tag = CaseTag::Zero;
    double t = 0.0;             // Case1: line coordinate of N, 1 at Kw = 0
    Cmat N;                     // Case1: the achieved N block
    Cmat Gamma;                 // nh x d orthonormal jamming basis
    Cmat Pi;                    // d x d PSD subspace covariance
    double eta = 0.0;           // water level
    bool power_met = true;      // false when the trace target was unreachable
    std::string diagnostic;     // non-empty when the design degenerated
};

// Full design pipeline result.
struct DesignOutcome {
    JammerDesign design;
    Cmat Kx_updated;            // optimal Kx for the designed Kw
    double rate_no_helper = 0.0;
    double rate_with_helper = 0.0;
};

// N = Lambda22 + t (Lambda2 - Lambda22), the scalar path through the
// admissible range; t = 1 gives zero jamming power, t -> 0 unbounded power.
Cmat n_from_t(const PencilDecomposition& pencil, double t);

// Q = O^H S^{-1/2} C^{-H} blockdiag(0, Lambda2 - N) C^{-1} S^{-1/2} O with
// O the minimum-norm right inverse of G2^H H1. Requires S invertible.
Cmat case1_q(const ChannelSet& ch, const Cmat& S, const PencilDecomposition& pencil,
             const Cmat& N);

// Kw = Q - Q G2^H (G2 Q G2^H - I)^{-1} G2 Q. Throws NearSingularResolvent
// when an eigenvalue of G2 Q G2^H is within 1e-8 of 1, NotPSD when the
// result has an eigenvalue below -1e-9 * (1 + ||Kw||_F).
Cmat case1_kw(const Cmat& Q, const Cmat& G2);

// Designs the unique information-preserving Kw with Tr(Kw) = Ph: power is
// waterfilled over null(C1^H S^{1/2} H1^H G2) against the helper-eavesdropper
// channel, then N and its line coordinate t are read back off the achieved
// covariance. Falls back to Kw = 0 (power_met = false) when no jamming
// direction is invisible to the receiver or none reaches the eavesdropper.
std::pair<double, JammerDesign> solve_t_for_power(const ChannelSet& ch, const Cmat& S,
                                                  const PencilDecomposition& pencil,
                                                  double Ph, double tol = 1e-6);

// Orthonormal basis of the nullspace of Kx*^{1/2} H1^H G2; identity when
// Kx* = 0. Throws EmptyNullspace when the nullity is zero.
Cmat case2_gamma(const ChannelSet& ch, const Cmat& Kx_star);

// Waterfilling of Ph over the eigenmodes of Gamma^H H2^H H2 Gamma.
// Returns (Pi, eta) with Pi = U [eta I - D^{-1}]^+ U^H, Tr(Pi) = Ph.
std::pair<Cmat, double> waterfill_pi(const Cmat& Gamma, const Cmat& H2, double Ph);

// Artificial noise confined to null(G2), waterfilled against H2 there.
JammerDesign nullspace_baseline_kw(const ChannelSet& ch, double Ph);

// End-to-end design: pencil at Kw = 0, case dispatch, single Kx update with
// the designed Kw, rate report. No iteration beyond the one Kx update.
DesignOutcome design_jammer(const ChannelSet& ch, const PowerBudget& budget);

}  // namespace wiretap
