"""Verification suites run by ``steiner_cli.py verify``.

Each suite returns a SuiteReport listing what it checked and every failure
it found; suites run one after the other and report in a fixed order.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from .adc import AugmentedDirectedComplex, is_loop_free, is_unitary
from .algebra import Chain, leq_one, meet
from .chain_calculus import SIGNS, comp_degree, d, degree, is_coherent, is_fork_free, ordered_form, parallel, rest
from .decomposition import decompose_full, evaluate
from .errors import SteinerError
from .horns import (
    comparability_check,
    face_witness,
    gamma_family,
    horn_equation,
    horn_inclusion,
    inequality_check,
    verify_complicial_props,
)
from .morphisms import (
    apply_mu,
    cell_census,
    compose_morphisms,
    eq_adc,
    globe_adc,
    inclusion_morphism,
    is_quasi_rigid,
    morphism_q,
    morphism_q_horn,
    parameter_adc,
    preserves_atoms,
    projection_p,
)
from .omega import Cell, cell_compose, chain_of_table, table_of_chain
from .sampling import CellSampler, comp_degree_census, sample_cells
from .simplicial import (
    RegularSimplicialSet,
    build_complex,
    chains_of,
    check_simplicial_identities,
    face_formula,
    leibniz_check,
    oriental,
    regularity_witness,
    simplex_id,
)

logger = logging.getLogger(__name__)

SUITES = ("faces", "coherence", "horns", "complicial", "bases", "morphisms")


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    stats: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, ok: bool, **context: Any) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(context)

    def to_dict(self) -> dict[str, Any]:
        out = {"name": self.name, "ok": self.ok, "checked": self.checked, "failures": self.failures}
        if self.stats:
            out["stats"] = self.stats
        return out


@dataclass(frozen=True)
class VerifyOptions:
    max_n: int = 5
    seed: int = 1729
    samples: int = 1000
    morphism_pairs: int = 200


def suite_faces(opts: VerifyOptions) -> SuiteReport:
    """Recursive d against the signature-word formula, plus Leibniz and the simplicial identities."""
    report = SuiteReport("faces")
    for n in range(opts.max_n + 1):
        S = build_complex("standard", n)
        K = chains_of(S)
        report.check(not check_simplicial_identities(S), n=n, check="simplicial_identities")
        report.check(regularity_witness(S) is None, n=n, check="regular")
        for x in S.simplices.values():
            for k in range(x.dim + 1):
                for sign in SIGNS:
                    ok = d(K, K.chain_of_ids(x.id), k, sign) == face_formula(S, x.id, k, sign)
                    report.check(ok, n=n, simplex=x.id, k=k, sign=sign)
        top = simplex_id(range(n + 1))
        for length in range(n):
            for word in itertools.product("ip", repeat=length):
                report.check(leibniz_check(S, top, "".join(word)), n=n, word="".join(word))
    return report


def suite_coherence(opts: VerifyOptions) -> SuiteReport:
    """Round trips and coherence properties on seeded random cells."""
    report = SuiteReport("coherence")
    samples = sample_cells(opts.samples, opts.seed, opts.max_n)
    census = comp_degree_census(samples)
    report.stats["comp_degree"] = {str(k): census[k] for k in sorted(census)}
    for idx, (K, c) in enumerate(samples):
        a = c.chain
        where = {"sample": idx, "complex": K.name, "chain": a.to_mapping(), "dim": c.dim}
        table = table_of_chain(K, c)
        report.check(chain_of_table(K, table) == c, check="phi_psi", **where)
        report.check(table_of_chain(K, chain_of_table(K, table)) == table, check="psi_phi", **where)
        report.check(evaluate(K, decompose_full(K, c), c.dim) == c, check="decompose", **where)
        report.check(is_coherent(K, a) and leq_one(a), check="leq_one", **where)
        top = degree(a)
        globular = all(
            d(K, d(K, a, l, beta), k, alpha) == d(K, a, k, alpha)
            for l in range(top)
            for k in range(l)
            for alpha in SIGNS
            for beta in SIGNS
        )
        report.check(globular, check="globular", **where)
        rests = all(rest(a, m - 1) == meet(d(K, a, m - 1, "-"), d(K, a, m - 1, "+")) for m in range(1, top + 1))
        report.check(rests, check="rest_meet", **where)
        if comp_degree(a) >= 0:
            report.check(is_fork_free(K, ordered_form(K, a)), check="fork_free", **where)
    return report


def _horn_cells_ok(n: int, i: int, report: SuiteReport) -> None:
    fam = gamma_family(n, i)
    K, _ = oriental(n)
    report.check(fam.recompose(K) == fam.rhs, n=n, i=i, check="recompose")
    report.check(fam.level(1).gamma.chain == Chain.of(fam.face), n=n, i=i, check="gamma_1")
    top = simplex_id(range(n + 1))
    for lvl in fam.levels:
        k = lvl.k
        report.check(fam.face in lvl.gamma.chain, n=n, i=i, k=k, check="contains_face")
        report.check(comp_degree(lvl.gamma.chain) <= k - 2, n=n, i=i, k=k, check="comp_degree")
        if k >= 2:
            report.check(not rest(lvl.gamma.chain, k - 2), n=n, i=i, k=k, check="rest")
        outside = [
            b.id for cell in (lvl.a, lvl.b) for b in cell.chain.support() if b == fam.face or b.id == top
        ]
        report.check(not outside, n=n, i=i, k=k, check="horn_support", found=outside)
    if 0 < i < n:
        first = fam.level(1)
        report.check(first.a_is_unit and first.b_is_unit, n=n, i=i, check="first_level_units")
    report.check(horn_equation(n, i).check, n=n, i=i, check="horn_equation")
    for row in inequality_check(n, i):
        report.check(row["ok"], check="inequality", **{k: v for k, v in row.items() if k != "ok"})
    failures = comparability_check(n, i)
    report.check(not failures, n=n, i=i, check="comparability", pairs=failures)


def suite_horns(opts: VerifyOptions) -> SuiteReport:
    """Horn factorizations, horn equations and face witnesses."""
    report = SuiteReport("horns")
    for n in range(2, opts.max_n + 1):
        for i in range(n + 1):
            _horn_cells_ok(n, i, report)
    for n in range(1, min(opts.max_n, 4) + 1):
        K, top = oriental(n)
        for size in range(1, n + 1):
            for face in itertools.combinations(range(n + 1), size):
                w = face_witness(n, face)
                k = size - 1
                ok = (
                    K.element(simplex_id(face)) in w.chain
                    and is_coherent(K, w.chain)
                    and (k == 0 or parallel(K, w.chain, top.chain, k - 1))
                )
                report.check(ok, n=n, face=simplex_id(face), check="face_witness")
    return report


def suite_complicial(opts: VerifyOptions) -> SuiteReport:
    report = SuiteReport("complicial")
    props = verify_complicial_props(opts.max_n)
    report.checked += len(props.checks)
    report.failures.extend(props.violations)
    for n in range(1, opts.max_n + 1):
        for k in range(n + 1):
            _, _, regular = horn_inclusion(n, k)
            report.check(regular, n=n, k=k, check="horn_inclusion_regular")
    return report


def suite_bases(opts: VerifyOptions) -> SuiteReport:
    """Unitary and loop-free bases, and the cell census of the globes."""
    report = SuiteReport("bases")
    for n in range(opts.max_n + 1):
        for K in (oriental(n)[0], globe_adc(n)):
            report.check(is_unitary(K).ok, complex=K.name, check="unitary")
            loops = is_loop_free(K)
            report.check(loops.ok, complex=K.name, check="loop_free", witness=loops.to_dict()["witness"])
        census = cell_census(globe_adc(n))
        expected = {k: 2 * k + 2 for k in range(n)} | {n: 2 * n + 1}
        report.check(census == expected, n=n, check="globe_census", found=census)
    return report


def _pairs(K: AugmentedDirectedComplex, seed: int, count: int, max_dim: int) -> list[tuple[Cell, Cell, int]]:
    sampler = CellSampler(K, seed)
    out: list[tuple[Cell, Cell, int]] = []
    for idx in range(count * 4):
        if len(out) >= count:
            break
        pair = sampler.draw_composable(1 + idx % max_dim)
        if pair is not None:
            out.append(pair)
        sampler.draw(1 + idx % max_dim)
    return out


def suite_morphisms(opts: VerifyOptions) -> SuiteReport:
    """p and q, quasi-rigidity, the horn square and functoriality of μ."""
    report = SuiteReport("morphisms")
    for n in range(1, opts.max_n + 1):
        p = projection_p(n)
        K, top = oriental(n)
        report.check(apply_mu(p, top).chain == p.target.chain_of_ids(f"e{n}"), n=n, check="p_top")
    for n in range(1, opts.max_n):
        q = morphism_q(n)
        report.check(is_quasi_rigid(q), n=n, check="q_quasi_rigid")
        report.check(preserves_atoms(q), n=n, check="q_atoms")
        q_horn = morphism_q_horn(n)
        horn = q_horn.source
        K, _ = oriental(n + 1)
        incl = inclusion_morphism(horn, K)
        report.check(is_quasi_rigid(incl), n=n, check="inclusion_quasi_rigid")
        square = compose_morphisms(inclusion_morphism(parameter_adc(n), eq_adc(n)), q_horn)
        report.check(square.same_as(compose_morphisms(q, incl)), n=n, check="horn_square")
        per_n = max(1, opts.morphism_pairs // max(1, opts.max_n - 1))
        composite = compose_morphisms(q, incl)
        for x, y, k in _pairs(horn, opts.seed + n, per_n, n):
            xy = cell_compose(horn, x, y, k)
            report.check(
                apply_mu(composite, xy) == apply_mu(q, apply_mu(incl, xy)),
                n=n,
                check="functorial",
                chain=xy.chain.to_mapping(),
            )
            report.check(
                apply_mu(incl, xy) == cell_compose(K, apply_mu(incl, x), apply_mu(incl, y), k),
                n=n,
                check="preserves_composition",
                chain=xy.chain.to_mapping(),
            )
    return report


SUITE_RUNNERS: dict[str, Callable[[VerifyOptions], SuiteReport]] = {
    "faces": suite_faces,
    "coherence": suite_coherence,
    "horns": suite_horns,
    "complicial": suite_complicial,
    "bases": suite_bases,
    "morphisms": suite_morphisms,
}


def run_suites(names: list[str], opts: VerifyOptions) -> list[SuiteReport]:
    reports: list[SuiteReport] = []
    for name in names:
        report = SUITE_RUNNERS[name](opts)
        logger.info("suite %s: %d checks, %d failures", name, report.checked, len(report.failures))
        reports.append(report)
    return reports


def check_simplicial_set(S: RegularSimplicialSet) -> SuiteReport:
    """Faces suite for a user simplicial set: identities, regularity, bases of C_•(S)."""
    report = SuiteReport("faces")
    for violation in check_simplicial_identities(S):
        report.check(False, check="simplicial_identities", **violation)
    if not report.failures:
        report.check(True, check="simplicial_identities")
    witness = regularity_witness(S)
    report.check(witness is None, check="regular", witness=witness)
    try:
        K = chains_of(S)
    except SteinerError as exc:
        report.check(False, check="chain_complex", kind=exc.code, message=str(exc))
        return report
    report.check(is_unitary(K).ok, check="unitary", violators=list(is_unitary(K).violators))
    loops = is_loop_free(K)
    report.check(loops.ok, check="loop_free", witness=loops.to_dict()["witness"])
    return report
