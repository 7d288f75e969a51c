#include "spinchain/degeneracy.hpp"

namespace spinchain {

BandScan nearly_degenerate_scan(const SpectrumResult& spec) {
    BandScan out;
    const auto& ev = spec.eigenvalues;
    const int n = int(ev.size());
    if (n < 4) return out;

    // largest gap within the lower half locates the band boundary
    int boundary = -1;
    double gmax = -1.0;
    for (int i = 0; i + 1 < n / 2; ++i) {
        const double g = ev[i + 1] - ev[i];
        if (g > gmax) {
            gmax = g;
            boundary = i;
        }
    }
    if (boundary < 1) return out;

    double internal = 0.0;
    for (int i = 0; i < boundary; ++i) internal = std::max(internal, ev[i + 1] - ev[i]);
    out.band_gap = gmax;
    out.internal_gap = internal;
    if (internal > 0.0 && gmax < 3.0 * internal) return out; // no clear two-band structure

    out.found = true;
    out.band_size = boundary + 1;

    // doublet-resolved energy differences above the ground group
    const double e_ground = ev[0];
    for (const auto& g : spec.degeneracy_groups) {
        if (g.front() == 0) continue; // ground group
        if (g.front() > boundary) break;
        const int doublets = std::max(1, int(g.size()) / 2);
        for (int d = 0; d < doublets; ++d) out.delta_e.push_back(ev[g.front()] - e_ground);
    }
    int ground_size = int(spec.degeneracy_groups.front().size());
    out.nearly_degenerate = out.band_size - ground_size;
    if (!out.delta_e.empty()) out.delta_e_max = out.delta_e.back();
    return out;
}

} // namespace spinchain
