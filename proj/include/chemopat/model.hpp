#ifndef CHEMOPAT_MODEL_HPP
#define CHEMOPAT_MODEL_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace chemopat {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// The nine chemotaxis model variants. All share the dimensionless system
//
//   dn/dt = D n_xx - d/dx( chi(n,c) c_x ) + f(n)
//   dc/dt = c_xx + n - c
//
// and differ in the sensitivity chi(n,c) and in whether cells reproduce
// (f = r n (1-n)) or only move (f = 0):
//
//   M1: chi0              f = 0        M6: chi0 n/c            logistic
//   M2: chi0 n            f = 0        M7: chi0 n/(c+nu)       logistic
//   M3: chi0 n            logistic     M8: chi0 n/(c+nu)^2     logistic
//   M4: chi0/c            f = 0        M9: chi0 (n+nu1)/(c+nu2) logistic
//   M5: chi0/c            logistic
enum class Variant { M1, M2, M3, M4, M5, M6, M7, M8, M9 };

std::string_view variant_name(Variant v);
Variant parse_variant(std::string_view name); // throws std::invalid_argument

// True for the variants whose kinetics term is logistic (M3, M5..M9).
bool variant_has_kinetics(Variant v);

struct ModelSpec {
    Variant variant = Variant::M3;
    double D = 1.0;    // cell/chemical diffusivity ratio
    double chi0 = 1.9; // chemotactic sensitivity scale; may be negative (repulsion)
    double r = 0.1;    // dimensionless reproduction rate
    double nu = 0.0;   // receptor saturation offset (M7, M8)
    double nu1 = 0.0;  // numerator offset (M9)
    double nu2 = 0.0;  // denominator offset (M9)
    double n0 = 1.0;   // conserved mean density for the f = 0 regime

    // Throws std::invalid_argument on D < 0, r < 0, negative offsets, or a
    // non-positive n0 when the f = 0 regime applies.
    void validate() const;
};

// The default parameter point used throughout: M3 with D=1, chi0=1.9, r=0.1.
ModelSpec m3_defaults();

// A logistic variant run with r = 0 has no kinetics left, so it is treated
// exactly like an f = 0 variant (and then needs a valid n0).
bool logistic_active(const ModelSpec& m);

// Dimensional inputs for the nondimensionalization. Dc, p and k_cap must be
// positive; the rest non-negative.
struct DimensionalParams {
    double Dn;        // cell diffusivity
    double Dc;        // chemical diffusivity
    double chi_tilde; // dimensional chemotactic sensitivity
    double r0;        // dimensional reproduction rate
    double k_cap;     // carrying capacity
    double h;         // chemical production rate per cell
    double p;         // chemical degradation rate
};

struct DimensionlessGroups {
    double D;
    double chi0;
    double r;
};

// D = Dn/Dc, chi0 = chi_tilde h k_cap / (Dc p), r = r0 k_cap / p.
// Throws std::invalid_argument when Dc = 0 or p = 0 (or k_cap <= 0).
DimensionlessGroups nondimensionalize(const DimensionalParams& p);

// Sensitivity chi(n,c) of the given variant. Throws SingularityError when the
// variant's denominator (c, c+nu, or c+nu2) is <= 0; the value is never
// clamped.
double chi_at(const ModelSpec& m, double n, double c);

struct Kinetics {
    double f; // cell kinetics: r n (1-n), or 0 in the f = 0 regime
    double g; // chemical kinetics: n - c (all variants)
};

Kinetics kinetics_at(const ModelSpec& m, double n, double c);

// d f / d n, used by the linearization: r (1 - 2n) when logistic kinetics are
// active, 0 otherwise.
double dfdn_at(const ModelSpec& m, double n);

struct SteadyState {
    double n;
    double c;
};

// Spatially uniform steady states: [(0,0), (1,1)] with logistic kinetics,
// [(n0,n0)] in the f = 0 regime. The last entry is always the one the
// pattern analysis linearizes about.
std::vector<SteadyState> homogeneous_steady_states(const ModelSpec& m);

// The steady state the stability analysis uses, i.e. the last entry above.
SteadyState pattern_steady_state(const ModelSpec& m);

} // namespace chemopat

#endif
