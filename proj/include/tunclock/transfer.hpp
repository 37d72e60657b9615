#pragma once

#include <complex>
#include <vector>

#include "tunclock/barrier.hpp"
#include "tunclock/rect.hpp"

namespace tunclock {

/// Constant-potential slabs covering a profile's truncated support,
/// midpoint-sampled. Rectangular profiles decompose to exactly one slab.
struct SlabDecomposition {
    std::vector<double> boundaries;  // size count+1, strictly increasing
    std::vector<double> heights;     // size count, J
    int count() const { return static_cast<int>(heights.size()); }
    double total_width() const { return boundaries.back() - boundaries.front(); }
};

SlabDecomposition decompose(const BarrierProfile& profile, int n_slabs,
                            double height_scale = 1.0);

struct TransferMatrix {
    std::complex<double> m11, m12, m21, m22;
    std::complex<double> determinant() const { return m11 * m22 - m12 * m21; }
};

/// Unscaled transfer-matrix product across a decomposition. det = 1 for equal
/// asymptotic wavenumbers. May overflow for extremely opaque profiles;
/// slab_amplitude uses the rescaled product instead.
TransferMatrix transfer_matrix(const SlabDecomposition& decomp, double energy, double mass);

/// Transmission/reflection amplitudes for a slab stack. Evanescent factors
/// are accumulated with a running log-scale so opaque barriers yield a
/// graceful underflow of t rather than overflow. Global phase convention
/// matches rect_amplitude (free propagation across the support divided out).
ScatteringSolution slab_amplitude(const SlabDecomposition& decomp, double energy, double mass);

struct AdaptiveResult {
    ScatteringSolution solution;
    int slabs;
};

/// Doubles the slab count from 64 until |t| and arg(t) both move by less
/// than rel_tol between refinements. Throws with the last two iterates on
/// non-convergence past 2^20 slabs.
AdaptiveResult adaptive_amplitude(const BarrierProfile& profile, double energy, double mass,
                                  double rel_tol = 1e-8, double height_scale = 1.0);

/// Tunneling time for an arbitrary profile via central finite differences of
/// the transfer-matrix phase with state-dependent mass m(1 +- eps/2) at fixed
/// momentum, eps = 1e-6. Coincides with the closed-form route for a single
/// slab.
double numeric_tunneling_time(const BarrierProfile& profile, double e_bar,
                              const ClockSpecies& species, double rel_tol = 1e-8);

}  // namespace tunclock
