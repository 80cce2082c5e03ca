#ifndef CHEMOPAT_STABILITY_HPP
#define CHEMOPAT_STABILITY_HPP

#include <optional>
#include <string_view>

#include "chemopat/model.hpp"

namespace chemopat {

// Linearization of the transport system about a homogeneous steady state,
// for perturbations ~ exp(lambda t) cos(k x):
//
//   [ -D k^2 + df/dn      chi(n*,c*) k^2 ]
//   [      1              -k^2 - 1       ]
struct CharacteristicMatrix {
    double a11, a12, a21, a22;
    double trace() const { return a11 + a22; }
    double det() const { return a11 * a22 - a12 * a21; }
};

// Matrix at the variant's pattern steady state ((1,1) with logistic kinetics,
// (n0,n0) otherwise). Throws SingularityError when chi is singular there.
CharacteristicMatrix characteristic_matrix(const ModelSpec& m, double k_sq);
CharacteristicMatrix characteristic_matrix(const ModelSpec& m, double k_sq,
                                           SteadyState at);

// Larger eigenvalue of the characteristic matrix (real in the unstable band;
// real part of the pair otherwise).
double growth_rate(const ModelSpec& m, double k_sq);

// Instability factor R_T = chi(n*,c*) / (D + r* + 2 sqrt(D r*)) with
// r* = -df/dn at the steady state. Exceeds 1 exactly when an unstable band
// exists. Throws DegenerateError when the denominator vanishes (D = r* = 0)
// and SingularityError when chi is singular at the steady state.
double instability_factor(const ModelSpec& m);

// Squared-wavenumber interval on which det M < 0. k2_sq is +infinity when
// D = 0 (the band is unbounded above).
struct Band {
    double k1_sq;
    double k2_sq;
};

// Present exactly when R_T > 1. The lower endpoint is 0 in the r* = 0 regime.
std::optional<Band> unstable_band(const ModelSpec& m);

// Pattern wavelength from the band midpoint: Lambda = pi sqrt(2D/(chi* - D - r*)).
// Throws RegimeError when chi* <= D + r* (no positive band midpoint) and
// DegenerateError when D = 0.
double wavelength_explicit(const ModelSpec& m);

// Squared wavenumber maximizing the growth rate over the unstable band
// (golden-section search, |dk^2| <= 1e-10; ties resolve to the smaller k^2).
// Throws RegimeError when there is no band or it is unbounded (D = 0).
double fastest_growing_mode(const ModelSpec& m);

// Pattern wavelength pi/k* of the fastest-growing mode.
double wavelength_implicit(const ModelSpec& m);

enum class Classification { HomogeneousStable, TravellingWave, TuringUnstable };

std::string_view classification_name(Classification c);

// TuringUnstable when R_T > 1; TravellingWave when R_T < 1 with logistic
// kinetics active; HomogeneousStable otherwise.
Classification classify(const ModelSpec& m);

struct StabilityReport {
    double rt = 0.0;
    std::optional<Band> band;                 // present iff rt > 1
    std::optional<double> k_av_sq;            // band midpoint
    std::optional<double> k_star_sq;          // fastest-growing mode
    std::optional<double> lambda_explicit;    // pi / sqrt(k_av_sq)
    std::optional<double> lambda_implicit;    // pi / sqrt(k_star_sq)
    Classification classification = Classification::HomogeneousStable;
};

// Everything above in one shot. The wavelength fields are only present when
// the band is (and finite, i.e. D > 0).
StabilityReport analyze(const ModelSpec& m);

} // namespace chemopat

#endif
