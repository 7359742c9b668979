#pragma once

#include "wiretap/types.hpp"

namespace wiretap {

// The four channel matrices of the helper-assisted wiretap model:
//   y1 = H1 x1 + G2 x2 + z1   (intended receiver, nr antennas)
//   y2 = G1 x1 + H2 x2 + z2   (eavesdropper, ne antennas)
struct ChannelSet {
    Cmat H1;  // nr x nt, transmitter -> receiver
    Cmat G1;  // ne x nt, transmitter -> eavesdropper
    Cmat H2;  // ne x nh, helper -> eavesdropper
    Cmat G2;  // nr x nh, helper -> receiver

    Eigen::Index nt() const { return H1.cols(); }
    Eigen::Index nr() const { return H1.rows(); }
    Eigen::Index ne() const { return G1.rows(); }
    Eigen::Index nh() const { return H2.cols(); }

    // Throws DimensionMismatch unless the four matrices are consistent.
    void validate() const;
};

// Transmit-side power description: matrix constraint Kx <= S, helper trace
// budget Ph, and (for the outer search) a transmitter trace budget Pt.
struct PowerBudget {
    Cmat S;          // nt x nt Hermitian PSD shaping matrix
    double Ph = 0.0;  // helper average power
    double Pt = 0.0;  // transmitter trace budget (power-search only)
};

}  // namespace wiretap
