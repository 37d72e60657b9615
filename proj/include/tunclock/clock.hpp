#pragma once

#include <complex>
#include <string>

#include "tunclock/units.hpp"

namespace tunclock {

/// Two-level atom with a relativistic mass defect: the internal states carry
/// rest masses m_{e/g} = mbar (1 +- dOmega / (2 omegabar)) with
/// omegabar = mbar c^2 / hbar.
struct ClockSpecies {
    double mean_mass;        // kg
    double clock_frequency;  // rad/s, dOmega
    double mean_frequency;   // rad/s, omegabar = mbar c^2 / hbar
    std::string name;

    static ClockSpecies from_mass(std::string name, double mass_kg, double clock_frequency);
    static ClockSpecies from_compton(std::string name, double mean_frequency,
                                     double clock_frequency);

    /// Rb-87 hyperfine clock: m = 86.91 u, dOmega = 2 pi x 6.8 GHz.
    static const ClockSpecies& rb87();
    /// Yb-174 optical clock: omegabar = 2 pi x 3.92e25 Hz, dOmega = 2 pi x 522 THz.
    static const ClockSpecies& yb174();
};

/// (m_g, m_e); the mean is mbar exactly and m_e > m_g for dOmega > 0.
std::pair<double, double> state_masses(const ClockSpecies& species);

/// Kinetic time dilation dt = (1/2) (p / mbar c)^2 t, independent of any barrier.
double time_dilation(double momentum, double lab_time, const ClockSpecies& species);

/// Relative state splits dX = (X_e - X_g)/Xbar for mass, momentum, and
/// barrier height. All first-order machinery assumes |split| < 1e-3.
struct PerturbationSet {
    double d_mass_rel = 0.0;
    double d_momentum_rel = 0.0;
    double d_barrier_rel = 0.0;

    void validate() const;

    /// The physical mass split implied by the species' mass defect,
    /// d_mass_rel = dOmega / omegabar.
    static PerturbationSet mass_defect(const ClockSpecies& species);
};

/// Transmitted internal states computed from the exact per-state scattering
/// solution (no series truncation): this is the oracle the first-order
/// budget is tested against.
///
/// amp_j = sqrt(T_j) exp[-i (omega_j t - p^2 t/(2 m_j hbar) - phi_j)] with
/// (T_j, phi_j) from the closed-form amplitude at the remapped per-state
/// (eBar_j, vBar_j). phase_diff carries arg<e_T|g_T> evaluated in a
/// cancellation-free form.
struct TransmittedStates {
    std::complex<double> amp_g;
    std::complex<double> amp_e;
    double transmission_g;
    double transmission_e;
    double phase_g;  // phi_g, scattering phase
    double phase_e;
    double phase_diff;  // arg<e_T|g_T>
    double contrast;    // |<e_T|g_T>| / N_T
    double n_t;         // mean transmitted number per unit incident
};

TransmittedStates transmitted_states(double e_bar, double v_bar, double momentum,
                                     double lab_time, const ClockSpecies& species,
                                     const PerturbationSet& perturb);

/// Ramsey readout phase split into its five physics terms plus the laser
/// term. laser_term is stored as the signed contribution to the total,
/// -(phi(t) - phi(0)); the default locked-field model makes it zero.
struct PhaseBudget {
    double clock_term;     // dOmega t
    double dilation_term;  // dOmega dt
    double tunnel_term;    // dOmega tau = |Phi_m| dOmega / omegabar
    double larmor_term;    // tau_L omega_L = (hbar |Phi_V| / Vdim) omega_L
    double doppler_term;   // [t/2 + tau_P] pbar dp / (hbar mbar)
    double laser_term;
    double total;          // exact sum of the six terms

    // context, used by differential_phase consistency checks
    double lab_time;
    double momentum;
    std::string species_name;
};

/// First-order budget. larmor_freq must equal deltaV/hbar for the deltaV
/// implied by perturb.d_barrier_rel (single source of truth).
PhaseBudget phase_budget(double e_bar, double v_bar, double momentum, double lab_time,
                         const ClockSpecies& species, const PerturbationSet& perturb,
                         double larmor_freq, double laser_phase_diff = 0.0);

/// Barrier-free reference arm at the same |p|: clock, dilation, and laser
/// terms only (plus the kinetic half of the Doppler term).
PhaseBudget reference_budget(double momentum, double lab_time, const ClockSpecies& species,
                             const PerturbationSet& perturb, double laser_phase_diff = 0.0);

/// omega_eff = dOmega (1 + (omegabar/dOmega) (deltaV / vdim)); affine in
/// deltaV with slope omegabar / vdim.
double effective_clock_frequency(const ClockSpecies& species, double v_bar_dim,
                                 double delta_v);

/// Ground-state population after the Ramsey sequence,
/// I = (N_T / 2) [1 + contrast cos(total - readout_phase)].
double ramsey_intensity(const PhaseBudget& budget, double n_t, double contrast,
                        double readout_phase = 0.0);

struct RamseySignal {
    double n_t;
    double contrast;
    double phase;
    double intensity;
};

RamseySignal ramsey_signal(const PhaseBudget& budget, double n_t, double contrast,
                           double readout_phase = 0.0);

}  // namespace tunclock
