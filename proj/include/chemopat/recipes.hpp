#ifndef CHEMOPAT_RECIPES_HPP
#define CHEMOPAT_RECIPES_HPP

#include <string>
#include <string_view>
#include <vector>

namespace chemopat {

// Canned dataset generators. Each target writes a set of CSV files plus a
// manifest.json into a directory, covering the standard survey plots:
//
//   wave        invasion front profiles over time (logistic chemotaxis)
//   boundaries  critical sensitivity vs diffusivity / growth rate
//   gallery     stationary profiles for all nine variants (one note per
//               variant that fails numerically, e.g. the constant-
//               sensitivity variant collapses)
//   wavelengths band-midpoint and fastest-mode wavelength estimates vs
//               each parameter
//   lengthsweep stationary cosine coefficients vs domain length, plus the
//               preferred length summary
//   spectra     projected steady-state coefficients vs truncation order and
//               vs domain length, with simulation overlays
//   panels      wavelength, coefficient and profile panels vs chi0, D, r
//   table       coefficient table: closed form, truncations 1..6, simulation
enum class Recipe {
    Wave,
    Boundaries,
    Gallery,
    Wavelengths,
    LengthSweep,
    Spectra,
    Panels,
    CoefficientTable,
};

Recipe parse_recipe(std::string_view name); // throws std::invalid_argument
std::string_view recipe_name(Recipe r);
std::vector<Recipe> all_recipes();

struct ReproduceOptions {
    std::string out_dir = ".";
    double dx = 0.05; // grid spacing for every simulation involved
    int jobs = 1;     // worker threads for sweep-based targets
};

struct ReproduceResult {
    std::vector<std::string> files; // paths written, manifest last
    std::vector<std::string> notes; // expected numerical events, if any
};

ReproduceResult run_reproduce(Recipe recipe, const ReproduceOptions& opts);

} // namespace chemopat

#endif
