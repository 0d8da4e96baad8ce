from modulicoh.bigraded import BigradedPolynomial, dumps_bigraded, is_poincare_serre
from modulicoh.cohomology import gl_poincare_serre
from modulicoh.fixtures import (
    POINT_MODULI_INSTANCES,
    fixture_polynomials,
    ps_m24,
    ps_point,
    read_fixture,
    write_fixtures,
)

EXPECTED_STEMS = {
    *(f"ps_gl_{k}" for k in range(1, 9)),
    "ps_point",
    "ps_m24",
    "ps_u_2_3",
    "ps_u_3_3",
    "ps_u_4_3",
    "ps_u_2_5",
    "ps_u_2_4",
}


def test_fixture_name_set():
    assert set(fixture_polynomials()) == EXPECTED_STEMS


def test_point_and_twist_values():
    assert ps_point() == BigradedPolynomial.one()
    assert ps_m24() == BigradedPolynomial({(0, 0): 1, (6, 12): 1})


def test_point_moduli_fixtures_are_group_polynomials():
    polys = fixture_polynomials()
    for n, d in POINT_MODULI_INSTANCES:
        assert polys[f"ps_u_{n}_{d}"] == gl_poincare_serre(n + 1)


def test_quartic_fixture_is_twisted_product():
    polys = fixture_polynomials()
    assert polys["ps_u_2_4"] == gl_poincare_serre(3) * ps_m24()


def test_all_fixtures_have_dimension_coefficients():
    assert all(is_poincare_serre(p) for p in fixture_polynomials().values())


def test_checked_in_files_match_regeneration(fixture_dir):
    polys = fixture_polynomials()
    on_disk = {path.stem for path in fixture_dir.glob("*.json")}
    assert on_disk == EXPECTED_STEMS
    for stem, poly in polys.items():
        path = fixture_dir / f"{stem}.json"
        assert path.read_text(encoding="utf-8") == dumps_bigraded(poly)


def test_write_and_read_round_trip(tmp_path):
    written = write_fixtures(tmp_path)
    assert len(written) == len(EXPECTED_STEMS)
    for path in written:
        assert read_fixture(path) == fixture_polynomials()[path.stem]
