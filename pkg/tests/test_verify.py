"""Verification suites at the sizes the CLI runs by default or above."""

from __future__ import annotations

import pytest

from steiner_kit.verify import SUITES, VerifyOptions, run_suites, suite_bases, suite_coherence

SUITE_BOUNDS = {
    "faces": VerifyOptions(max_n=7),
    "coherence": VerifyOptions(max_n=5, samples=1000),
    "horns": VerifyOptions(max_n=6),
    "complicial": VerifyOptions(max_n=6),
    "bases": VerifyOptions(max_n=7),
    "morphisms": VerifyOptions(max_n=5, morphism_pairs=200),
}


@pytest.mark.parametrize("name", SUITES)
def test_suite_passes_at_full_size(name):
    (report,) = run_suites([name], SUITE_BOUNDS[name])
    assert report.name == name
    assert report.checked > 0
    assert report.ok, report.failures[:3]


def test_faces_cover_every_simplex():
    (report,) = run_suites(["faces"], VerifyOptions(max_n=2))
    # two signs at every level of every simplex of Δ[0], Δ[1], Δ[2]
    face_checks = 2 + 8 + 24
    assert report.checked == 2 * 3 + face_checks + (1 + 3)


def test_globe_census_is_reported():
    report = suite_bases(VerifyOptions(max_n=6))
    assert report.ok
    assert report.checked == 7 * 2 * 2 + 7


def test_coherence_reports_composition_degrees():
    report = suite_coherence(VerifyOptions(max_n=5, samples=200, seed=3))
    assert report.ok
    census = report.to_dict()["stats"]["comp_degree"]
    assert sum(census.values()) == 200
    assert any(int(k) >= 1 for k in census)
