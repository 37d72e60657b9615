#pragma once

#include <utility>
#include <vector>

#include "tunclock/units.hpp"

namespace tunclock {

struct ClockSpecies;

/// A 1D potential barrier: rectangular, Gaussian, or tabulated
/// (piecewise-linear between samples). deltaV is a state-dependent height
/// difference realized as a uniform scaling of the profile,
/// V_{e/g}(x) = V(x) (1 +- deltaV/(2 V0)).
class BarrierProfile {
public:
    static BarrierProfile rectangular(double height, double width, double delta_v = 0.0);
    static BarrierProfile gaussian(double height, double stdev, double delta_v = 0.0);
    static BarrierProfile tabulated(std::vector<std::pair<double, double>> samples,
                                    double delta_v = 0.0);

    BarrierShape shape() const { return shape_; }
    double height() const { return height_; }   // peak height V0, J
    double width() const;                       // rectangular a, m
    double stdev() const;                       // gaussian sigma, m
    double delta_v() const { return delta_v_; } // J

    /// Potential at x in J (mean profile, no state split).
    double value(double x) const;

    /// Domain outside which the profile is treated as zero. Gaussian
    /// profiles are truncated where V(x)/V0 = 1e-8.
    std::pair<double, double> support() const;

    const std::vector<std::pair<double, double>>& samples() const { return samples_; }

    BarrierProfile with_delta_v(double delta_v) const;

private:
    BarrierProfile() = default;

    BarrierShape shape_ = BarrierShape::rectangular;
    double height_ = 0.0;
    double extent_ = 0.0;  // a or sigma
    double delta_v_ = 0.0;
    std::vector<std::pair<double, double>> samples_;
};

/// One internal state's realized potential, V_{e/g} = Vbar +- deltaV/2
/// applied as a uniform scale of the mean profile.
struct StatePotential {
    enum class State { ground, excited };

    BarrierProfile base;
    State state;

    double scale() const {
        const double s = base.delta_v() / (2.0 * base.height());
        return state == State::excited ? 1.0 + s : 1.0 - s;
    }
    double value(double x) const { return base.value(x) * scale(); }
    double peak_height() const { return base.height() * scale(); }
};

/// Dimensionless barrier parameter vBar = integral sqrt(2 mbar V(x)) dx / hbar.
/// Rectangular and Gaussian profiles use the closed forms, tabulated ones the
/// adaptive quadrature.
double opacity(const BarrierProfile& profile, const ClockSpecies& species);

/// Same integral evaluated by adaptive quadrature for any shape.
double opacity_by_quadrature(const BarrierProfile& profile, const ClockSpecies& species);

/// Gaussian width realizing a target vBar at fixed height:
/// sigma = vBar hbar / (2 sqrt(2 pi mbar v0)).
double solve_gaussian_width(double target_vbar, double v0, const ClockSpecies& species);

}  // namespace tunclock
