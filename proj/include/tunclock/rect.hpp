#pragma once

#include <complex>
#include <span>

namespace tunclock {

struct ClockSpecies;

/// Scattering amplitudes for one (energy, state) pair.
///
/// t follows the global plane-wave convention: an incident wave e^{ikx}
/// produces the transmitted wave t e^{ikx}, so arg(t) is the phase acquired
/// relative to free propagation. For solutions built from dimensionless
/// (eBar, vBar) the wavenumbers are stored scaled by the barrier width
/// (kappa0 = a k0 = vBar sqrt(eBar)); the transfer-matrix route stores them
/// in 1/m.
struct ScatteringSolution {
    std::complex<double> t;
    std::complex<double> r;
    double transmission;  // |t|^2
    double phase;         // arg(t), principal branch
    double kappa0;
    std::complex<double> kappa1;
};

/// Closed-form rectangular-barrier amplitude, evaluated in complex
/// arithmetic so the same expression covers tunneling (eBar < 1) and
/// above-barrier (eBar > 1) energies.
ScatteringSolution rect_amplitude(double e_bar, double v_bar);

/// Mean transmission coefficient
/// Tbar = [1 - sinh^2(vBar sqrt(1-eBar)) / (4 eBar (eBar-1))]^-1,
/// equal to |t|^2 of rect_amplitude.
double mean_transmission(double e_bar, double v_bar);

/// Transmission phase
/// phibar = arctan[(2 eBar - 1) tanh(vBar sqrt(1-eBar)) / (2 sqrt(eBar) sqrt(1-eBar))]
///          - vBar sqrt(eBar),
/// i.e. including the propagation term, matching arg(rect_amplitude().t)
/// modulo 2 pi.
double rect_phase(double e_bar, double v_bar);

/// The arctan part alone, without the -vBar sqrt(eBar) propagation term.
double rect_phase_propagation_free(double e_bar, double v_bar);

/// Scaled tunneling time omega_bar * tau:
///   vBar Tbar / (4 sqrt(eBar) (eBar-1)) *
///       [(2 eBar - 1) - sinh(2 vBar sqrt(1-eBar)) / (2 vBar sqrt(1-eBar))].
/// Equal to |Phi_m|. Real on both sides of eBar = 1; the removable
/// singularity at eBar = 1 is handled by a series limit, where the value is
/// vBar Tbar (3 + vBar^2) / 6.
double tunneling_time_scaled(double e_bar, double v_bar);

/// Tunneling time in seconds, tau = tunneling_time_scaled / omega_bar.
double tunneling_time(double e_bar, double v_bar, const ClockSpecies& species);

/// First-order expansion coefficients of phase and transmission under the
/// state splits m(1 +- dm/2), p(1 +- dp/2), V(1 +- dv/2):
///   phi_{e/g} = phibar +- Phi_m dm/2 +- Phi_V dv/2 +- Phi_p dp/2,
///   T_{e/g}   = Tbar   +- T_m dm/2   +- T_V dv/2   +- T_p dp/2.
/// Phi_m = Phi_V in closed form (mass and height enter only through the
/// product m V). The T coefficients are central finite differences of the
/// exact |t|^2 with relative step 1e-6.
struct ExpansionCoefficients {
    double phi_m;
    double phi_p;
    double t_m;
    double t_v;
    double t_p;
};

ExpansionCoefficients expansion_coefficients(double e_bar, double v_bar);

double phase_coefficient_mass(double e_bar, double v_bar);      // Phi_m = Phi_V
double phase_coefficient_momentum(double e_bar, double v_bar);  // Phi_p

/// Wigner phase time tau_P = hbar d(phibar)/dE = hbar Phi_p / (2 eBar v0).
double wigner_phase_time(double e_bar, double v_bar, double v0);

/// Dimensionless point for one internal state under the relative splits
/// (dm, dp, dv) with sign +1 (excited) or -1 (ground):
///   eBar_j = eBar (1 + s dp/2)^2 / ((1 + s dm/2)(1 + s dv/2)),
///   vBar_j = vBar sqrt((1 + s dm/2)(1 + s dv/2)).
struct RemappedPoint {
    double e_bar;
    double v_bar;
};

RemappedPoint perturbed_point(double e_bar, double v_bar, double d_mass_rel,
                              double d_momentum_rel, double d_barrier_rel, int sign);

/// Nearest-branch phase unwrapping along a scan, in place.
void unwrap_phases(std::span<double> phases);

}  // namespace tunclock
