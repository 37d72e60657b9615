#pragma once

#include <stdexcept>

namespace tunclock {

inline constexpr const char* kVersion = "tunclock 1.0";

/// Physical constants in SI units. c and kB are exact by SI definition,
/// hbar and u are CODATA 2018. Fixed at build time.
struct PhysicalConstants {
    double hbar;  // J s
    double c;     // m/s
    double kB;    // J/K
    double u;     // kg, atomic mass unit
};

inline constexpr PhysicalConstants constants{
    1.054571817e-34,
    299792458.0,
    1.380649e-23,
    1.66053906660e-27,
};

enum class BarrierShape { rectangular, gaussian, tabulated };

/// Scaled kinetic energy eBar = E/V0 = p^2/(2 mbar V0) and barrier
/// parameter vBar = integral sqrt(2 mbar V(x)) dx / hbar. Kept as a
/// distinct type so dimensionless and SI quantities cannot be mixed.
struct DimensionlessPoint {
    double e_bar;
    double v_bar;

    DimensionlessPoint(double e, double v) : e_bar(e), v_bar(v) {
        if (!(e > 0.0) || !(v > 0.0))
            throw std::domain_error("DimensionlessPoint: eBar and vBar must be positive");
    }
};

class BarrierProfile;
struct ClockSpecies;

/// Map a momentum and barrier onto (eBar, vBar).
DimensionlessPoint to_dimensionless(double momentum, const BarrierProfile& barrier,
                                    const ClockSpecies& species);

/// Inverse of to_dimensionless: momentum plus the geometry parameter
/// (width a for rectangular, stdev sigma for gaussian) realizing the point
/// at peak height v0.
struct DimensionalPoint {
    double momentum;  // kg m/s
    double extent;    // m: a or sigma
};

DimensionalPoint from_dimensionless(const DimensionlessPoint& point, double v0,
                                    const ClockSpecies& species,
                                    BarrierShape shape = BarrierShape::rectangular);

}  // namespace tunclock
