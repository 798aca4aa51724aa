"""End-to-end smoke tests for the Python surface of the core library."""

import json
import math

import pytest

import spheroid
from spheroid import Coupling, SurfaceParams


@pytest.fixture(scope="module")
def sphere():
    return SurfaceParams.from_curvature(1.0, 0.0)


@pytest.fixture(scope="module")
def spheroid_b():
    return SurfaceParams.from_curvature(1.0, 0.1)


def test_surface_params(spheroid_b):
    assert spheroid_b.lam == pytest.approx(1.0)
    assert spheroid_b.eps == pytest.approx(0.1)
    assert spheroid_b.a == pytest.approx(1.0)
    assert spheroid_b.a / spheroid_b.b == pytest.approx(math.sqrt(1.1))
    assert not spheroid_b.is_sphere()
    with pytest.raises(ValueError):
        SurfaceParams.from_curvature(-1.0, 0.0)


def test_free_particle_energies_and_shifts(sphere, spheroid_b):
    assert spheroid.free.energy0(3, sphere) == pytest.approx(6.0)
    st0 = spheroid.free.FreeState(0, spheroid_b)
    st1 = spheroid.free.FreeState(1, spheroid_b)
    assert spheroid.free.shift1_closed(st0) == pytest.approx(0.025, abs=1e-13)
    assert spheroid.free.shift1_closed(st1) == pytest.approx(-0.05, abs=1e-13)
    quad = spheroid.free.shift1_quadrature(st1)
    assert quad == pytest.approx(-0.05, abs=1e-8)
    assert st0.norm_a() == pytest.approx(0.398942280401433, rel=1e-12)


def test_free_spectrum_table(spheroid_b):
    table = spheroid.free.spectrum(3, spheroid_b)
    assert len(table.rows) == 4
    assert table.rows[0].l is None
    assert table.rows[2].e0 == pytest.approx(3.0)
    assert table.rows[2].de1 == pytest.approx(-0.225, abs=1e-12)
    csv = table.to_csv()
    assert csv.startswith("n,l,E0,dE1,E,dE1_err_est\n")
    assert len(csv.strip().splitlines()) == 5


def test_oscillator_levels(spheroid_b):
    params = spheroid.osc.OscParams(1.0, spheroid_b)
    assert params.big_omega() == pytest.approx(1.11803398874989, rel=1e-12)
    state = spheroid.osc.OscState(2, 0)
    assert spheroid.osc.energy0(state, params) == pytest.approx(
        7.85410196624968, rel=1e-12
    )
    assert spheroid.osc.shift_total(state, params) == pytest.approx(
        -0.524910936540668, rel=1e-9
    )
    with pytest.raises(ValueError):
        spheroid.osc.OscState(3, 0)  # parity mismatch


def test_oscillator_level_table(spheroid_b):
    params = spheroid.osc.OscParams(1.0, spheroid_b)
    table = spheroid.osc.level_table(3, params)
    assert len(table.rows) == 10
    n3 = [row.l for row in table.rows if row.n == 3]
    assert n3 == [-3, -1, 1, 3]
    agg = table.aggregates[3]
    assert agg.sublevels_nominal == 4
    assert agg.sublevels_distinct == 2
    assert agg.width == pytest.approx(0.207938312356, rel=1e-6)


def test_normalization_check(spheroid_b):
    params = spheroid.osc.OscParams(1.4, spheroid_b)
    check = spheroid.osc.check_normalization(spheroid.osc.OscState(2, 2), params)
    assert check.pass_
    assert check.rel_dev <= 1e-8
    assert check.azimuthal_convention_factor == pytest.approx(
        math.sqrt(2.0 * math.pi), rel=1e-10
    )
    assert check.n_quadrature_full == pytest.approx(2.48813608990918, rel=1e-9)


def test_oracle_sectors(sphere):
    report = spheroid.oracle.validate_free(sphere, 2, 2, n_grid=1000)
    assert report.pass_
    assert [sec.sector for sec in report.sectors] == ["m=0", "m=1", "m=2"]
    doc = json.loads(report.to_json())
    assert doc["pass"] is True

    rp = spheroid.oracle.RadialProblem()
    rp.m = 0
    rp.surface = sphere
    rp.n_grid = 2000
    evs = spheroid.oracle.lowest_eigenvalues(rp, 3)
    assert evs[0] == pytest.approx(0.0, abs=1e-6)
    assert evs[1] == pytest.approx(3.0, rel=1e-4)
    assert evs[2] == pytest.approx(10.0, rel=1e-4)


def test_oracle_coupling_certification(sphere):
    report = spheroid.oracle.validate_osc(sphere, 1.4, 1, n_grid=1000)
    assert report.pass_
    assert "matching convention: squared" in report.note
    literal = [sec for sec in report.sectors if not sec.gates]
    assert literal and all(max(sec.rel_err) > 1e-2 for sec in literal)


def test_grid_shift_routes(spheroid_b):
    params = spheroid.osc.OscParams(1.0, spheroid_b)
    state = spheroid.osc.OscState(1, 1)
    grid = spheroid.oracle.grid_shift_osc(state, params, n_grid=2000)
    quad = spheroid.osc.shift_total(state, params)
    assert grid == pytest.approx(quad, rel=1e-4)

    free_state = spheroid.free.FreeState(2, spheroid_b)
    grid_free = spheroid.oracle.grid_shift_free(free_state, n_grid=2000)
    assert grid_free == pytest.approx(-0.225, rel=1e-4)


def test_specfun_and_numerics():
    assert spheroid.specfun.gamma_fn(1.5) == pytest.approx(
        0.886226925452758, rel=1e-12
    )
    assert spheroid.specfun.hyp2f1_terminating(1, 2.0, 4.0, 0.5) == pytest.approx(0.75)
    assert spheroid.specfun.jacobi_p(1, 1.0, 2.0, 0.0) == pytest.approx(-0.5)
    assert spheroid.specfun.wallis_integral(2.0) == pytest.approx(math.pi / 4.0)

    value, err = spheroid.numerics.integrate(lambda x: math.sin(x) ** 4, 0.0, math.pi / 2.0)
    assert value == pytest.approx(3.0 * math.pi / 16.0, rel=1e-10)
    assert err < 1e-9

    evs = spheroid.numerics.eig_tridiag([2.0, 2.0, 2.0], [-1.0, -1.0], 1)
    assert evs[0] == pytest.approx(2.0 - math.sqrt(2.0), rel=1e-12)


def test_geometry_helpers(spheroid_b):
    g11, g12, g22 = spheroid.geometry.metric_tangent(
        spheroid.TangentPoint(0.3, -0.4), spheroid_b
    )
    assert g11 == pytest.approx(0.679098181818182, rel=1e-12)
    assert g12 == pytest.approx(0.0642327272727273, rel=1e-12)
    assert g22 == pytest.approx(0.641629090909091, rel=1e-12)

    h_exact, h0, h_eps = spheroid.geometry.classical_hamiltonians(
        0.7, -0.3, 0.4, 0.9, SurfaceParams.from_curvature(1.0, 1e-3), 1.0
    )
    assert h_exact == pytest.approx(0.596452012834774, rel=1e-12)
    assert abs(h_exact - h0 - h_eps) == pytest.approx(4.9e-07, rel=1e-2)


def test_validate_suites_json():
    doc = json.loads(spheroid.validate_json(["specfun", "numerics"]))
    assert doc["pass"] is True
    assert [s["suite"] for s in doc["suites"]] == ["specfun", "numerics"]
    assert spheroid.suite_names() == [
        "specfun",
        "numerics",
        "geometry",
        "free",
        "osc",
        "oracle",
    ]


def test_error_mapping(sphere):
    with pytest.raises(ValueError):
        spheroid.free.offdiag_element(2, 2, sphere)
    with pytest.raises(ValueError):
        spheroid.oracle.validate_free(sphere, 99, 2)
