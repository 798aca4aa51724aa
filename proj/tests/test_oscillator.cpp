#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "spheroid/numerics.hpp"
#include "spheroid/oscillator.hpp"

using namespace spheroid;
using osc::OscParams;
using osc::OscState;

namespace {
// The three parameter sets used throughout: (lambda, omega) with eps = 0.1.
const SurfaceParams kSurfA = SurfaceParams::from_curvature(0.8, 0.1);
const SurfaceParams kSurfB = SurfaceParams::from_curvature(1.0, 0.1);
const OscParams kSetA{1.0, kSurfA};
const OscParams kSetB{1.0, kSurfB};
const OscParams kSetC{1.4, kSurfB};
}  // namespace

TEST_SUITE("oscillator") {

TEST_CASE("parameter derivation") {
    SUBCASE("effective frequency and exponent") {
        // Omega = sqrt(g + lambda^2/4) with g = omega^2; beta = Omega/lambda.
        CHECK(kSetA.g() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(kSetA.big_omega() == doctest::Approx(1.0770329614269).epsilon(1e-12));
        CHECK(kSetA.beta() == doctest::Approx(1.34629120178363).epsilon(1e-12));
        CHECK(kSetB.big_omega() == doctest::Approx(1.11803398874989).epsilon(1e-12));
        CHECK(kSetB.beta() == doctest::Approx(1.11803398874989).epsilon(1e-12));
        CHECK(kSetC.big_omega() == doctest::Approx(1.48660687473185).epsilon(1e-12));
    }
    SUBCASE("literal coupling uses g = omega") {
        const OscParams lit{1.4, kSurfB, Coupling::literal};
        CHECK(lit.g() == doctest::Approx(1.4).epsilon(1e-14));
        CHECK(lit.big_omega() ==
              doctest::Approx(std::sqrt(1.4 + 0.25)).epsilon(1e-13));
    }
    SUBCASE("negative frequency is rejected") {
        CHECK_THROWS_AS((void)OscParams(-1.0, kSurfB), std::domain_error);
    }
}

TEST_CASE("state validation") {
    CHECK(OscState(3, -1).abs_l() == 1);
    CHECK(OscState(3, -1).k_r() == 1);
    CHECK(OscState(4, 0).k_r() == 2);
    CHECK_THROWS_AS((void)OscState(2, 3), std::domain_error);   // |l| > n
    CHECK_THROWS_AS((void)OscState(3, 0), std::domain_error);   // n - |l| odd
    CHECK_THROWS_AS((void)OscState(-1, 1), std::domain_error);  // n < 0
}

TEST_CASE("unperturbed energies") {
    // E(0) = (n + 1) Omega + (lambda/2)(n + 1)^2.
    CHECK(osc::energy0(OscState(0, 0), kSetB) ==
          doctest::Approx(1.61803398874989).epsilon(1e-12));
    CHECK(osc::energy0(OscState(2, 0), kSetB) ==
          doctest::Approx(7.85410196624968).epsilon(1e-12));
    CHECK(osc::energy0(OscState(1, 1), OscParams{1.4, kSurfA}) ==
          doctest::Approx(4.51204395571221).epsilon(1e-12));
    CHECK(osc::energy0(OscState(3, 1), kSetC) ==
          doctest::Approx(13.9464274989274).epsilon(1e-12));
    SUBCASE("energy does not depend on l") {
        CHECK(osc::energy0(OscState(3, 3), kSetC) ==
              doctest::Approx(osc::energy0(OscState(3, 1), kSetC)).epsilon(1e-14));
    }
    SUBCASE("flat limit recovers the plain oscillator ladder") {
        const auto flat = SurfaceParams::from_curvature(1e-9, 0.0);
        const OscParams p{1.0, flat};
        CHECK(osc::energy0(OscState(3, 1), p) == doctest::Approx(4.0).epsilon(1e-7));
    }
}

TEST_CASE("radial factor") {
    const osc::RadialState rs(OscState(2, 0), kSetB);
    SUBCASE("exactly one interior node for n = 2, l = 0") {
        // Scan for sign changes on (0, pi/2).
        int sign_changes = 0;
        double prev = rs(1e-4);
        for (int i = 1; i <= 400; ++i) {
            const double chi = 1e-4 + (0.5 * std::numbers::pi - 2e-4) * i / 400.0;
            const double cur = rs(chi);
            if (prev != 0.0 && cur != 0.0 && (prev < 0.0) != (cur < 0.0)) ++sign_changes;
            prev = cur;
        }
        CHECK(sign_changes == 1);
    }
    SUBCASE("derivative routes agree with a finite difference") {
        for (double chi : {0.3, 0.8, 1.2}) {
            const double fd = numerics::central_diff(
                [&rs](double c) { return rs(c); }, chi, 1e-6, 1);
            CHECK(rs.derivative_chi(chi) == doctest::Approx(fd).epsilon(1e-7));
            // The x entry point returns the same chi-derivative expressed
            // through x = cos(2 chi), so the two must agree identically.
            const double x = std::cos(2.0 * chi);
            CHECK(rs.derivative_x(x) ==
                  doctest::Approx(rs.derivative_chi(chi)).epsilon(1e-12));
        }
    }
    SUBCASE("domain ends are rejected") {
        CHECK_THROWS_AS((void)osc::radial_wavefunction(OscState(2, 0), kSetB,
                                                       0.5 * std::numbers::pi),
                        std::domain_error);
        CHECK_THROWS_AS((void)osc::radial_wavefunction(OscState(2, 0), kSetB, -0.1),
                        std::domain_error);
    }
}

TEST_CASE("normalization constants") {
    SUBCASE("frozen full-measure values") {
        CHECK(osc::norm_constant(OscState(0, 0), kSetA) ==
              doctest::Approx(0.77296710687779).epsilon(1e-10));
        CHECK(osc::norm_constant(OscState(1, 1), kSetA) ==
              doctest::Approx(1.41397873780497).epsilon(1e-10));
        CHECK(osc::norm_constant(OscState(2, 0), kSetA) ==
              doctest::Approx(1.05203325337609).epsilon(1e-10));
        CHECK(osc::norm_constant(OscState(3, 3), kSetA) ==
              doctest::Approx(2.78261402177662).epsilon(1e-10));
        CHECK(osc::norm_constant(OscState(0, 0), kSetB) ==
              doctest::Approx(0.821091443075848).epsilon(1e-10));
        CHECK(osc::norm_constant(OscState(2, 2), kSetC) ==
              doctest::Approx(2.48813608990918).epsilon(1e-10));
        CHECK(osc::norm_constant(OscState(4, 2), kSetC) ==
              doctest::Approx(6.96049269463141).epsilon(1e-10));
    }
    SUBCASE("closed form tracks the radial-measure quadrature") {
        for (const auto& st : std::vector<OscState>{OscState(0, 0), OscState(2, 0),
                                                    OscState(3, 3), OscState(8, 2)}) {
            const auto check = osc::check_normalization(st, kSetC);
            CHECK(check.pass);
            CHECK(check.rel_dev <= 1e-8);
            // The closed form normalizes the radial measure; the full-measure
            // constant differs by exactly sqrt(2 pi).
            CHECK(check.azimuthal_convention_factor ==
                  doctest::Approx(2.5066282746310002).epsilon(1e-10));
        }
    }
}

TEST_CASE("first-order shifts against frozen references") {
    struct Case {
        const OscParams* p;
        int n;
        int l;
        double total;
    };
    const std::vector<Case> cases{
        Case{&kSetA, 0, 0, -0.118952876850362}, Case{&kSetA, 1, 1, -0.309311118243675},
        Case{&kSetA, 2, 0, -0.488910442126896}, Case{&kSetA, 2, 2, -0.575897489232944},
        Case{&kSetA, 3, 1, -0.751431407609807}, Case{&kSetA, 3, 3, -0.920495017235655},
        Case{&kSetA, 4, 0, -1.01118527352838},  Case{&kSetA, 4, 2, -1.09436792632763},
        Case{&kSetA, 4, 4, -1.34391588472536},  Case{&kSetB, 0, 0, -0.116658804646583},
        Case{&kSetB, 1, 1, -0.325529550378208}, Case{&kSetB, 2, 0, -0.524910936540668},
        Case{&kSetB, 2, 2, -0.631177305890439}, Case{&kSetB, 3, 1, -0.827244163688842},
        Case{&kSetB, 3, 3, -1.0351824760447},   Case{&kSetB, 4, 0, -1.12725749344297},
        Case{&kSetB, 4, 2, -1.23000245822531},  Case{&kSetB, 4, 4, -1.53823735257235},
        Case{&kSetC, 0, 0, -0.168359834127158}, Case{&kSetC, 1, 1, -0.424190129846471},
        Case{&kSetC, 2, 0, -0.664095984195217}, Case{&kSetC, 2, 2, -0.774341863741782},
        Case{&kSetC, 3, 1, -1.00797185302333},  Case{&kSetC, 3, 3, -1.2214413219132},
        Case{&kSetC, 4, 0, -1.34762505950181},  Case{&kSetC, 4, 2, -1.45239669432416},
        Case{&kSetC, 4, 4, -1.76671159879121}};
    for (const auto& c : cases) {
        CAPTURE(c.n);
        CAPTURE(c.l);
        CHECK(osc::shift_total(OscState(c.n, c.l), *c.p) ==
              doctest::Approx(c.total).epsilon(1e-10));
    }

    SUBCASE("kinetic and potential pieces add up") {
        // Frozen split for two states of the first set.
        CHECK(osc::shift_kinetic(OscState(0, 0), kSetA) ==
              doctest::Approx(-0.053851648071345).epsilon(1e-10));
        CHECK(osc::shift_potential(OscState(0, 0), kSetA) ==
              doctest::Approx(-0.0651012287790165).epsilon(1e-10));
        CHECK(osc::shift_kinetic(OscState(3, 3), kSetA) ==
              doctest::Approx(-0.695406592285381).epsilon(1e-10));
        CHECK(osc::shift_kinetic(OscState(4, 2), kSetA) ==
              doctest::Approx(-0.829258240356726).epsilon(1e-10));
        const double kin = osc::shift_kinetic(OscState(2, 2), kSetB);
        const double pot = osc::shift_potential(OscState(2, 2), kSetB);
        CHECK(kin + pot == doctest::Approx(-0.631177305890439).epsilon(1e-10));
    }
    SUBCASE("x-variable route reproduces the kinetic piece") {
        for (const auto& st :
             std::vector<OscState>{OscState(0, 0), OscState(2, 2), OscState(3, 1)}) {
            const double chi_route = osc::shift_kinetic(st, kSetB);
            const double x_route = osc::shift_kinetic_xform(st, kSetB);
            CHECK(x_route == doctest::Approx(chi_route).epsilon(1e-9));
        }
    }
    SUBCASE("shifts vanish on the sphere") {
        const OscParams round{1.0, SurfaceParams::from_curvature(1.0, 0.0)};
        CHECK(osc::shift_total(OscState(3, 1), round) == doctest::Approx(0.0));
        CHECK(osc::shift_kinetic(OscState(3, 1), round) == doctest::Approx(0.0));
        CHECK(osc::shift_potential(OscState(3, 1), round) == doctest::Approx(0.0));
    }
    SUBCASE("shift is linear in eps") {
        const OscParams half{1.0, SurfaceParams::from_curvature(1.0, 0.05)};
        const double d_half = osc::shift_total(OscState(2, 0), half);
        const double d_full = osc::shift_total(OscState(2, 0), kSetB);
        CHECK(d_full == doctest::Approx(2.0 * d_half).epsilon(1e-10));
    }
}

TEST_CASE("level table structure") {
    const LevelTable table = osc::level_table(3, kSetB);
    SUBCASE("row layout: one row per (n, l) with +-l pairs") {
        REQUIRE(table.rows.size() == 10);  // 1 + 2 + 3 + 4
        // n = 3 block: l = -3, -1, 1, 3.
        std::vector<int> l3;
        for (const auto& row : table.rows) {
            if (row.n == 3) l3.push_back(row.l.value());
        }
        CHECK(l3 == std::vector<int>{-3, -1, 1, 3});
    }
    SUBCASE("+-l rows carry identical energies") {
        for (const auto& row : table.rows) {
            if (!row.l || *row.l >= 0) continue;
            for (const auto& other : table.rows) {
                if (other.n == row.n && other.l && *other.l == -*row.l) {
                    CHECK(row.de1 == doctest::Approx(other.de1).epsilon(1e-14));
                }
            }
        }
    }
    SUBCASE("aggregates count sublevels both ways") {
        REQUIRE(table.aggregates.size() == 4);
        // n = 3: 4 rows but 2 distinct shifted energies.
        const auto& agg3 = table.aggregates[3];
        CHECK(agg3.n == 3);
        CHECK(agg3.sublevels_nominal == 4);
        CHECK(agg3.sublevels_distinct == 2);
        CHECK(agg3.width ==
              doctest::Approx(std::abs(-0.827244163688842 - -1.0351824760447))
                  .epsilon(1e-9));
        // n = 0 and n = 1 do not split.
        CHECK(table.aggregates[0].width == doctest::Approx(0.0));
        CHECK(table.aggregates[1].width <= 1e-12);
        CHECK(table.aggregates[1].sublevels_nominal == 2);
        CHECK(table.aggregates[1].sublevels_distinct == 1);
    }
    SUBCASE("cross route stays inside the recorded error band") {
        for (const auto& row : table.rows) {
            CHECK(std::abs(row.de1 - row.de1_cross) <= row.de1_err_est + 1e-15);
            CHECK(row.de1_err_est <= 1e-7);
        }
    }
}

}  // TEST_SUITE
