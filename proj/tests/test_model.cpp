#include <doctest.h>

#include <stdexcept>

#include "chemopat/errors.hpp"
#include "chemopat/model.hpp"

using namespace chemopat;

TEST_SUITE_BEGIN("model");

TEST_CASE("variant names round-trip and bad names are rejected")
{
    for (int i = 0; i < 9; ++i) {
        const auto v = static_cast<Variant>(i);
        CHECK(parse_variant(variant_name(v)) == v);
    }
    CHECK(variant_name(Variant::M1) == "M1");
    CHECK(variant_name(Variant::M9) == "M9");
    CHECK_THROWS_AS(parse_variant("M10"), std::invalid_argument);
    CHECK_THROWS_AS(parse_variant("m3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_variant(""), std::invalid_argument);
}

TEST_CASE("kinetics split: M1, M2, M4 move only, the rest reproduce")
{
    CHECK_FALSE(variant_has_kinetics(Variant::M1));
    CHECK_FALSE(variant_has_kinetics(Variant::M2));
    CHECK(variant_has_kinetics(Variant::M3));
    CHECK_FALSE(variant_has_kinetics(Variant::M4));
    for (int i = 4; i < 9; ++i)
        CHECK(variant_has_kinetics(static_cast<Variant>(i)));
}

TEST_CASE("a logistic variant with r = 0 degenerates to the no-kinetics regime")
{
    ModelSpec m = m3_defaults();
    CHECK(logistic_active(m));
    m.r = 0.0;
    CHECK_FALSE(logistic_active(m));
    CHECK(kinetics_at(m, 0.7, 0.2).f == 0.0);
    CHECK(dfdn_at(m, 0.7) == 0.0);
    m.n0 = 0.0;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
}

TEST_CASE("sensitivity values for every variant at a generic point")
{
    ModelSpec m = m3_defaults();
    m.nu = 0.2;
    m.nu1 = 0.1;
    m.nu2 = 0.3;
    const double n = 0.7, c = 1.3, chi0 = m.chi0;

    auto at = [&](Variant v) {
        ModelSpec spec = m;
        spec.variant = v;
        return chi_at(spec, n, c);
    };
    CHECK(at(Variant::M1) == doctest::Approx(chi0).epsilon(1e-15));
    CHECK(at(Variant::M2) == doctest::Approx(chi0 * n).epsilon(1e-15));
    CHECK(at(Variant::M3) == doctest::Approx(chi0 * n).epsilon(1e-15));
    CHECK(at(Variant::M4) == doctest::Approx(chi0 / c).epsilon(1e-15));
    CHECK(at(Variant::M5) == doctest::Approx(chi0 / c).epsilon(1e-15));
    CHECK(at(Variant::M6) == doctest::Approx(chi0 * n / c).epsilon(1e-15));
    CHECK(at(Variant::M7) == doctest::Approx(chi0 * n / (c + 0.2)).epsilon(1e-15));
    CHECK(at(Variant::M8) ==
          doctest::Approx(chi0 * n / ((c + 0.2) * (c + 0.2))).epsilon(1e-15));
    CHECK(at(Variant::M9) ==
          doctest::Approx(chi0 * (n + 0.1) / (c + 0.3)).epsilon(1e-15));
}

TEST_CASE("sensitivity is singular, not clamped, where its denominator vanishes")
{
    ModelSpec m = m3_defaults();
    m.nu = 0.2;
    m.nu2 = 0.3;

    m.variant = Variant::M4;
    CHECK_THROWS_AS(chi_at(m, 1.0, 0.0), SingularityError);
    m.variant = Variant::M6;
    CHECK_THROWS_AS(chi_at(m, 1.0, -0.1), SingularityError);
    m.variant = Variant::M7;
    CHECK_THROWS_AS(chi_at(m, 1.0, -0.2), SingularityError);
    CHECK_NOTHROW(chi_at(m, 1.0, 0.0)); // offset keeps c = 0 regular
    m.variant = Variant::M8;
    CHECK_THROWS_AS(chi_at(m, 1.0, -0.25), SingularityError);
    m.variant = Variant::M9;
    CHECK_THROWS_AS(chi_at(m, 1.0, -0.3), SingularityError);
    // M1..M3 have no denominator at all.
    m.variant = Variant::M2;
    CHECK_NOTHROW(chi_at(m, 1.0, -5.0));
}

TEST_CASE("kinetics: logistic growth in n, linear production/decay in c")
{
    ModelSpec m = m3_defaults();
    const Kinetics k = kinetics_at(m, 0.4, 1.1);
    CHECK(k.f == doctest::Approx(0.1 * 0.4 * 0.6).epsilon(1e-15));
    CHECK(k.g == doctest::Approx(0.4 - 1.1).epsilon(1e-15));
    CHECK(dfdn_at(m, 0.4) == doctest::Approx(0.1 * (1.0 - 0.8)).epsilon(1e-15));

    m.variant = Variant::M2; // no cell kinetics
    CHECK(kinetics_at(m, 0.4, 1.1).f == 0.0);
    CHECK(kinetics_at(m, 0.4, 1.1).g == doctest::Approx(-0.7).epsilon(1e-15));
    CHECK(dfdn_at(m, 0.4) == 0.0);
}

TEST_CASE("homogeneous steady states and the one used for pattern analysis")
{
    ModelSpec m = m3_defaults();
    auto states = homogeneous_steady_states(m);
    REQUIRE(states.size() == 2);
    CHECK(states[0].n == 0.0);
    CHECK(states[0].c == 0.0);
    CHECK(states[1].n == 1.0);
    CHECK(states[1].c == 1.0);
    CHECK(pattern_steady_state(m).n == 1.0);

    m.variant = Variant::M2;
    m.n0 = 0.8;
    states = homogeneous_steady_states(m);
    REQUIRE(states.size() == 1);
    CHECK(states[0].n == 0.8);
    CHECK(states[0].c == 0.8);
    CHECK(pattern_steady_state(m).n == 0.8);
    CHECK(pattern_steady_state(m).c == 0.8);
}

TEST_CASE("parameter validation")
{
    ModelSpec m = m3_defaults();
    CHECK_NOTHROW(m.validate());

    SUBCASE("negative diffusivity")
    {
        m.D = -0.5;
        CHECK_THROWS_AS(m.validate(), std::invalid_argument);
    }
    SUBCASE("negative growth rate")
    {
        m.r = -0.1;
        CHECK_THROWS_AS(m.validate(), std::invalid_argument);
    }
    SUBCASE("negative offsets")
    {
        m.nu = -0.1;
        CHECK_THROWS_AS(m.validate(), std::invalid_argument);
    }
    SUBCASE("negative sensitivity scale is allowed (repulsion)")
    {
        m.chi0 = -1.0;
        CHECK_NOTHROW(m.validate());
    }
    SUBCASE("no-kinetics regime needs a positive mean density")
    {
        m.variant = Variant::M4;
        m.n0 = 0.0;
        CHECK_THROWS_AS(m.validate(), std::invalid_argument);
        m.n0 = 0.8;
        CHECK_NOTHROW(m.validate());
    }
}

TEST_CASE("dimensional parameters collapse to the three dimensionless groups")
{
    DimensionalParams p{};
    p.Dn = 0.3;
    p.Dc = 1.5;
    p.chi_tilde = 2.0;
    p.r0 = 0.05;
    p.k_cap = 4.0;
    p.h = 0.25;
    p.p = 0.5;

    const DimensionlessGroups g = nondimensionalize(p);
    CHECK(g.D == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(g.chi0 == doctest::Approx(2.0 * 0.25 * 4.0 / (1.5 * 0.5)).epsilon(1e-15));
    CHECK(g.r == doctest::Approx(0.05 * 4.0 / 0.5).epsilon(1e-15));

    p.Dc = 0.0;
    CHECK_THROWS_AS(nondimensionalize(p), std::invalid_argument);
    p.Dc = 1.5;
    p.p = 0.0;
    CHECK_THROWS_AS(nondimensionalize(p), std::invalid_argument);
    p.p = 0.5;
    p.k_cap = 0.0;
    CHECK_THROWS_AS(nondimensionalize(p), std::invalid_argument);
}

TEST_CASE("defaults are the reference parameter point")
{
    const ModelSpec m = m3_defaults();
    CHECK(m.variant == Variant::M3);
    CHECK(m.D == 1.0);
    CHECK(m.chi0 == 1.9);
    CHECK(m.r == 0.1);
}

TEST_SUITE_END();
