#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "spheroid/free_particle.hpp"

using namespace spheroid;
using free_particle::FreeState;

namespace {
const SurfaceParams kSphere = SurfaceParams::from_curvature(1.0, 0.0);
const SurfaceParams kSpheroid = SurfaceParams::from_curvature(1.0, 0.1);
}  // namespace

TEST_SUITE("free_particle") {

TEST_CASE("unperturbed energies lambda n (n+1) / 2") {
    CHECK(free_particle::energy0(0, kSphere) == doctest::Approx(0.0));
    CHECK(free_particle::energy0(1, kSphere) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(free_particle::energy0(2, kSphere) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(free_particle::energy0(3, kSphere) == doctest::Approx(6.0).epsilon(1e-14));
    const auto s2 = SurfaceParams::from_curvature(2.0, 0.0);
    CHECK(free_particle::energy0(2, s2) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK_THROWS_AS((void)free_particle::energy0(-1, kSphere), std::domain_error);
}

TEST_CASE("normalization constant") {
    // a_0 = sqrt(lambda / (2 pi)).
    CHECK(FreeState(0, kSphere).norm_a() ==
          doctest::Approx(0.398942280401433).epsilon(1e-12));
    // a_n^2 = lambda Gamma(3/2+n) / (pi^(3/2) Gamma(1+n)); ratio check at n = 1:
    // a_1^2 / a_0^2 = Gamma(5/2)/Gamma(3/2) / Gamma(2) = 3/2.
    const double a0 = FreeState(0, kSphere).norm_a();
    const double a1 = FreeState(1, kSphere).norm_a();
    CHECK(a1 * a1 / (a0 * a0) == doctest::Approx(1.5).epsilon(1e-13));
    // Scales as sqrt(lambda).
    const auto s2 = SurfaceParams::from_curvature(2.0, 0.0);
    CHECK(FreeState(3, s2).norm_a() / FreeState(3, kSphere).norm_a() ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("highest-weight wavefunction structure") {
    const FreeState st(2, kSphere);
    SUBCASE("polar factor and phase") {
        const TangentPoint t{0.6, 0.8};  // rho = 1, phi = atan2(0.8, 0.6)
        const auto psi = free_particle::wavefunction(st, t);
        const double chi = t.chi(kSphere);
        const double radial = st.norm_a() * std::pow(std::sin(chi), 2.0);
        CHECK(std::abs(psi) == doctest::Approx(radial).epsilon(1e-13));
        CHECK(std::arg(psi) == doctest::Approx(2.0 * t.phi()).epsilon(1e-13));
        CHECK(free_particle::radial_wavefunction(st, chi) ==
              doctest::Approx(radial).epsilon(1e-13));
    }
    SUBCASE("vanishes at the pole for n > 0") {
        CHECK(std::abs(free_particle::wavefunction(st, {0.0, 0.0})) ==
              doctest::Approx(0.0));
    }
    SUBCASE("n = 0 state is the constant a_0") {
        const FreeState ground(0, kSphere);
        const auto psi = free_particle::wavefunction(ground, {1.7, -0.4});
        CHECK(psi.real() == doctest::Approx(ground.norm_a()).epsilon(1e-14));
        CHECK(psi.imag() == doctest::Approx(0.0));
    }
}

TEST_CASE("first-order shifts") {
    SUBCASE("closed forms at small n") {
        // Shift is +eps lambda / 4 for n = 0 and -eps lambda / 2 for n = 1.
        CHECK(free_particle::shift1_closed(FreeState(0, kSpheroid)) ==
              doctest::Approx(0.025).epsilon(1e-13));
        CHECK(free_particle::shift1_closed(FreeState(1, kSpheroid)) ==
              doctest::Approx(-0.05).epsilon(1e-13));
        // General pattern -(eps lambda / 2)(n + 1)(n - 1/2).
        CHECK(free_particle::shift1_closed(FreeState(2, kSpheroid)) ==
              doctest::Approx(-0.225).epsilon(1e-13));
        CHECK(free_particle::shift1_closed(FreeState(3, kSpheroid)) ==
              doctest::Approx(-0.5).epsilon(1e-13));
    }
    SUBCASE("quadrature route agrees with the closed form") {
        for (double lambda : {0.5, 1.0, 2.0}) {
            const auto s = SurfaceParams::from_curvature(lambda, 0.1);
            for (int n : {0, 1, 2, 5, 12}) {
                const FreeState st(n, s);
                const double closed = free_particle::shift1_closed(st);
                const double quad = free_particle::shift1_quadrature(st);
                const double scale = std::max(std::abs(closed), 1e-12);
                CHECK(std::abs(quad - closed) / scale <= 1e-8);
            }
        }
    }
    SUBCASE("shift is linear in eps") {
        const auto s1 = SurfaceParams::from_curvature(1.0, 0.05);
        const auto s2 = SurfaceParams::from_curvature(1.0, 0.10);
        const double d1 = free_particle::shift1_closed(FreeState(3, s1));
        const double d2 = free_particle::shift1_closed(FreeState(3, s2));
        CHECK(d2 == doctest::Approx(2.0 * d1).epsilon(1e-14));
    }
    SUBCASE("sphere limit has no shift") {
        CHECK(free_particle::shift1_closed(FreeState(4, kSphere)) == doctest::Approx(0.0));
        CHECK(free_particle::shift1_quadrature(FreeState(4, kSphere)) ==
              doctest::Approx(0.0));
    }
}

TEST_CASE("off-diagonal elements of the perturbation vanish") {
    SUBCASE("pairs with m != n") {
        for (const auto& pair :
             {std::pair{0, 1}, std::pair{1, 2}, std::pair{2, 5}, std::pair{3, 4}}) {
            const auto el =
                free_particle::offdiag_element(pair.first, pair.second, kSpheroid);
            CHECK(std::abs(el) <= 1e-10);
        }
    }
    SUBCASE("diagonal request is rejected") {
        CHECK_THROWS_AS((void)free_particle::offdiag_element(2, 2, kSpheroid),
                        std::domain_error);
    }
}

TEST_CASE("spectrum table") {
    const LevelTable table = free_particle::spectrum(3, kSpheroid);
    REQUIRE(table.rows.size() == 4);
    for (int n = 0; n <= 3; ++n) {
        const auto& row = table.rows[static_cast<std::size_t>(n)];
        CHECK(row.n == n);
        CHECK_FALSE(row.l.has_value());
        CHECK(row.e0 == doctest::Approx(free_particle::energy0(n, kSpheroid)).epsilon(1e-14));
        CHECK(row.de1 ==
              doctest::Approx(free_particle::shift1_closed(FreeState(n, kSpheroid)))
                  .epsilon(1e-14));
        CHECK(row.total() == doctest::Approx(row.e0 + row.de1).epsilon(1e-14));
        // Closed form and quadrature cross route stay within the recorded band.
        CHECK(std::abs(row.de1 - row.de1_cross) <= row.de1_err_est + 1e-15);
        CHECK(row.de1_err_est <= 1e-8);
    }
    SUBCASE("one row per level, no splitting") {
        REQUIRE(table.aggregates.size() == 4);
        for (const auto& agg : table.aggregates) {
            CHECK(agg.width == doctest::Approx(0.0));
            CHECK(agg.sublevels_nominal == 1);
            CHECK(agg.sublevels_distinct == 1);
        }
        CHECK(table.mean_width(3) == doctest::Approx(0.0));
    }
    SUBCASE("csv header and first row") {
        const std::string csv = to_csv(table);
        CHECK(csv.rfind("n,l,E0,dE1,E,dE1_err_est\n", 0) == 0);
        CHECK(csv.find("\n0,,0,0.025,0.025,") != std::string::npos);
    }
}

}  // TEST_SUITE
