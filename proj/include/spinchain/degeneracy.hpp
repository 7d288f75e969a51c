#pragma once

#include <vector>

#include "spinchain/spectrum.hpp"

namespace spinchain {

/// Result of the low-band scan. The low-lying band is separated from the
/// rest by the largest spectral gap below the median energy; the band is
/// accepted when that gap exceeds 3x the largest gap inside the band.
struct BandScan {
    bool found = false;
    int band_size = 0;           // states in the low band, ground doublet included
    int nearly_degenerate = 0;   // band_size minus the ground degeneracy group
    std::vector<double> delta_e; // one entry per degenerate doublet above the ground
    double delta_e_max = 0.0;
    double band_gap = 0.0;     // gap separating the band from the rest
    double internal_gap = 0.0; // largest gap inside the band
};

/// Detects the nearly degenerate band (RealEta regime) from a spectrum.
/// Odd-size degeneracy groups are reported as-is; delta_e carries
/// group_size/2 entries per group above the ground group.
BandScan nearly_degenerate_scan(const SpectrumResult& spec);

} // namespace spinchain
