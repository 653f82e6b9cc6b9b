"""Horn factorizations of d^α_{n-1} i_n and complicial stratifications of Δ[n].

For a missing face d^i the family (a_k, γ_k, b_k) isolates d^i level by level:
γ_{k+1} = a_k *_{k-1} γ_k *_{k-1} b_k with γ_n = d^α_{n-1} i_n and γ_1 = d^i.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import reduce
from typing import Any, Literal

from .adc import AugmentedDirectedComplex, order_relation
from .algebra import BasisElement, Chain, chain_sum, leq
from .chain_calculus import Sign, comp_degree, d, degree, opposite
from .decomposition import Compose, ExpressionTree, Identity, Variable, decompose_full, decompose_once, evaluate, render
from .errors import BadIndex, GradingViolation, InvariantViolation, UnknownBasisId
from .omega import Cell, cell_compose, cell_unit
from .simplicial import RegularSimplicialSet, build_complex, face_vertices, oriental, simplex_id, vertices_of

logger = logging.getLogger(__name__)

Variant = Literal["plain", "prime", "doubleprime"]


@dataclass(frozen=True)
class HornLevel:
    """a_k and b_k are k-cells; γ_k is kept at dimension n-1."""

    k: int
    a: Cell
    gamma: Cell
    b: Cell

    @property
    def a_is_unit(self) -> bool:
        return degree(self.a.chain) < self.k

    @property
    def b_is_unit(self) -> bool:
        return degree(self.b.chain) < self.k


@dataclass(frozen=True)
class HornFactorization:
    n: int
    i: int
    alpha: Sign
    face: BasisElement
    rhs: Cell
    levels: tuple[HornLevel, ...]

    def level(self, k: int) -> HornLevel:
        if not 1 <= k <= len(self.levels):
            raise BadIndex(f"levels run from 1 to {self.n - 1}, got {k}")
        return self.levels[k - 1]

    def gamma(self, k: int) -> Cell:
        """γ_k for 1 ≤ k ≤ n, with γ_n the boundary chain itself."""
        return self.rhs if k == self.n else self.level(k).gamma

    def recompose(self, K: AugmentedDirectedComplex) -> Cell:
        """Unfold a_{n-1} *_{n-2} (… (a_1 *_0 γ_1 *_0 b_1) …) *_{n-2} b_{n-1}."""
        top = self.n - 1
        cur = self.level(1).gamma
        for lvl in self.levels:
            left = cell_compose(K, cell_unit(lvl.a, top), cur, lvl.k - 1)
            cur = cell_compose(K, left, cell_unit(lvl.b, top), lvl.k - 1)
        return cur


def horn_sign(i: int) -> Sign:
    """α = + exactly when i is even."""
    return "+" if i % 2 == 0 else "-"


def _check_horn(n: int, i: int) -> None:
    if n < 2:
        raise BadIndex(f"horn factorizations need n ≥ 2, got {n}")
    if not 0 <= i <= n:
        raise BadIndex(f"horn index must lie in [0, {n}], got {i}")


def _fold(K: AugmentedDirectedComplex, cells: list[Cell], k: int) -> Cell:
    return reduce(lambda acc, nxt: cell_compose(K, acc, nxt, k), cells)


def _side(K: AugmentedDirectedComplex, cells: list[Cell], k: int, fallback: Chain) -> Cell:
    """Composite of ``cells`` as a k-cell, or the unit on ``fallback``."""
    chain = _fold(K, cells, k - 1).chain if cells else fallback
    if degree(chain) > k:
        raise InvariantViolation(f"side factor {chain!r} has degree above {k}")
    return Cell(chain=chain, dim=k)


def gamma_family(n: int, i: int) -> HornFactorization:
    """Isolate d^i inside d^α_{n-1} i_n by repeated one-step decomposition."""
    _check_horn(n, i)
    K, top = oriental(n)
    alpha = horn_sign(i)
    face = K.element(simplex_id(face_vertices(n, i)))
    rhs = Cell(chain=d(K, top.chain, n - 1, alpha), dim=n - 1)
    levels: list[HornLevel] = []
    split = rhs
    for k in range(n - 1, 0, -1):
        c = comp_degree(split.chain)
        if c > k - 1:
            raise InvariantViolation(f"γ_{k + 1} = {split.chain!r} has composition degree {c} > {k - 1}")
        if c < k - 1:
            a = Cell(chain=d(K, split.chain, k - 1, "+"), dim=k)
            b = Cell(chain=d(K, split.chain, k - 1, "-"), dim=k)
            gamma = split
        else:
            _, factors = decompose_once(K, split)
            hits = [j for j, f in enumerate(factors) if face in f.chain]
            if len(hits) != 1:
                raise InvariantViolation(f"{len(hits)} factors of {split.chain!r} contain {face.id}")
            (j,) = hits
            gamma = factors[j]
            a = _side(K, factors[:j], k, d(K, gamma.chain, k - 1, "+"))
            b = _side(K, factors[j + 1 :], k, d(K, gamma.chain, k - 1, "-"))
        logger.debug("γ^%d_%d = %r", i, k, gamma.chain)
        levels.append(HornLevel(k=k, a=a, gamma=gamma, b=b))
        split = gamma
    return HornFactorization(
        n=n, i=i, alpha=alpha, face=face, rhs=rhs, levels=tuple(reversed(levels))
    )


def _side_tree(K: AugmentedDirectedComplex, cell: Cell, k: int) -> ExpressionTree:
    inner = decompose_full(K, Cell(chain=cell.chain, dim=max(degree(cell.chain), 0)))
    return Identity(inner) if degree(cell.chain) < k else inner


def horn_template(K: AugmentedDirectedComplex, fam: HornFactorization) -> ExpressionTree:
    """a_{n-1} *_{n-2} (… (a_1 *_0 x *_0 b_1) …) *_{n-2} b_{n-1} with x free."""
    t: ExpressionTree = Variable("x")
    for lvl in fam.levels:
        t = Compose(k=lvl.k - 1, factors=(_side_tree(K, lvl.a, lvl.k), t, _side_tree(K, lvl.b, lvl.k)))
    return t


@dataclass(frozen=True)
class HornEquation:
    factorization: HornFactorization
    template: ExpressionTree
    other: Cell
    check: bool

    def to_dict(self) -> dict[str, Any]:
        fam = self.factorization
        lhs = render(self.template)
        other = _chain_text(self.other.chain)
        if fam.alpha == "+":
            equation = f"y : {other} → {lhs}"
        else:
            equation = f"y : {lhs} → {other}"
        return {
            "n": fam.n,
            "i": fam.i,
            "alpha": fam.alpha,
            "x": fam.face.id,
            "template": lhs,
            "rhs": fam.rhs.chain.to_mapping(),
            "other": self.other.chain.to_mapping(),
            "equation": equation,
            "check": self.check,
            "levels": [
                {
                    "k": lvl.k,
                    "a": lvl.a.chain.to_mapping(),
                    "gamma": lvl.gamma.chain.to_mapping(),
                    "b": lvl.b.chain.to_mapping(),
                    "a_unit": lvl.a_is_unit,
                    "b_unit": lvl.b_is_unit,
                }
                for lvl in fam.levels
            ],
        }


def _chain_text(chain: Chain) -> str:
    return "+".join(b.id for b in reversed(chain.support())) or "0"


def horn_equation(n: int, i: int) -> HornEquation:
    """The horn equation for Λ^i[n] and the check x := d^i gives d^α_{n-1} i_n."""
    fam = gamma_family(n, i)
    K, top = oriental(n)
    template = horn_template(K, fam)
    x = Cell(chain=Chain.of(fam.face), dim=n - 1)
    value = evaluate(K, template, n - 1, {"x": x})
    other = Cell(chain=d(K, top.chain, n - 1, opposite(fam.alpha)), dim=n - 1)
    return HornEquation(factorization=fam, template=template, other=other, check=value == fam.rhs)


def admissible_support(v: str | tuple[int, ...], n: int, i: int) -> bool:
    """True iff the vertices of v contain {i-1, i, i+1} ∩ [n]."""
    verts = set(vertices_of(v) if isinstance(v, str) else v)
    return {j for j in (i - 1, i, i + 1) if 0 <= j <= n} <= verts


def comparability_sign(v: str | tuple[int, ...], i: int) -> Sign:
    """+ if i sits at an even position of v, - otherwise."""
    verts = vertices_of(v) if isinstance(v, str) else tuple(v)
    if i not in verts:
        raise BadIndex(f"vertex {i} does not occur in {verts}")
    return "+" if verts.index(i) % 2 == 0 else "-"


def check_gamma_support(n: int, i: int, k: int, chain: Chain, face: BasisElement) -> list[dict[str, Any]]:
    """Violations of the support conditions for the simplices of chain ∖ d^i."""
    wanted = [j for j in (i - 1, i, i + 1) if 0 <= j <= n]
    out: list[dict[str, Any]] = []
    for b in chain.support():
        if b == face:
            continue
        verts = set(vertices_of(b.id))
        missing = [j for j in wanted if j not in verts]
        if missing:
            out.append({"n": n, "i": i, "k": k, "simplex": b.id, "missing": missing})
    return out


@dataclass(frozen=True)
class ComplicialReport:
    checks: tuple[dict[str, Any], ...]
    violations: tuple[dict[str, Any], ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        return {"ok": self.ok, "checks": list(self.checks), "violations": list(self.violations)}


def verify_complicial_props(n_max: int) -> ComplicialReport:
    """Support conditions on every γ^i_k and on d^α_{n-1} i_n (reported as k = n)."""
    checks: list[dict[str, Any]] = []
    violations: list[dict[str, Any]] = []
    for n in range(2, n_max + 1):
        for i in range(n + 1):
            fam = gamma_family(n, i)
            for k in range(1, n + 1):
                found = check_gamma_support(n, i, k, fam.gamma(k).chain, fam.face)
                checks.append({"n": n, "i": i, "k": k, "ok": not found})
                violations.extend(found)
    logger.info("complicial supports: %d checks, %d violations", len(checks), len(violations))
    return ComplicialReport(checks=tuple(checks), violations=tuple(violations))


def comparability_check(n: int, i: int) -> list[dict[str, Any]]:
    """Pairs breaking v ⊙ d^i (α^v_i = -) or d^i ⊙ v (α^v_i = +) at level k-2 of γ_k."""
    fam = gamma_family(n, i)
    K, _ = oriental(n)
    failures: list[dict[str, Any]] = []
    for k in range(2, n + 1):
        relation = order_relation(K, k - 2)
        for v in fam.gamma(k).chain.support():
            if v == fam.face:
                continue
            sign = comparability_sign(v.id, i)
            if sign == "-":
                ok = relation.precedes(v, fam.face)
            else:
                ok = relation.precedes(fam.face, v)
            if not ok:
                failures.append({"n": n, "i": i, "k": k, "simplex": v.id, "sign": sign})
    return failures


def inequality_check(n: int, i: int) -> list[dict[str, Any]]:
    """γ_k ≤ d^i + Σ_{v ∈ γ_{k+1} ∖ d^i} d^{α^v_i}_{k-1}(v), one row per 1 ≤ k ≤ n-1."""
    fam = gamma_family(n, i)
    K, _ = oriental(n)
    rows: list[dict[str, Any]] = []
    for k in range(1, n):
        parent = fam.gamma(k + 1).chain
        bound = chain_sum(
            [Chain.of(fam.face)]
            + [d(K, Chain.of(v), k - 1, comparability_sign(v.id, i)) for v in parent.support() if v != fam.face]
        )
        rows.append({"n": n, "i": i, "k": k, "ok": leq(fam.gamma(k).chain, bound)})
    return rows


def face_witness(n: int, face: tuple[int, ...]) -> Cell:
    """A coherent chain of Δ[n] containing ``face`` and (k-1)-parallel to i_n.

    k is the dimension of the face, which must be a proper face of i_n.
    """
    K, _ = oriental(n)
    verts = tuple(sorted(face))
    if not verts or len(verts) > n or any(not 0 <= v <= n for v in verts):
        raise BadIndex(f"{face} is not a proper face of Δ[{n}]")
    mapping = _witness(tuple(range(n + 1)), verts)
    chain = Chain((K.element(simplex_id(v)), c) for v, c in mapping.items())
    return Cell(chain=chain, dim=len(verts) - 1)


def _relabel(chain: Chain, top: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    return {tuple(top[j] for j in vertices_of(b.id)): c for b, c in chain.items()}


def _witness(top: tuple[int, ...], face: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    n = len(top) - 1
    missing = [j for j, v in enumerate(top) if v not in face]
    K, top_cell = oriental(n)
    if len(missing) == 1:
        chain = d(K, top_cell.chain, n - 1, horn_sign(missing[0]))
        return _relabel(chain, top)
    j = missing[0]
    sub = top[:j] + top[j + 1 :]
    out = _witness(sub, face)
    fam = gamma_family(n, j)
    k = len(face) - 1
    rest = Chain((b, c) for b, c in fam.gamma(k + 1).chain.items() if b != fam.face)
    for verts, c in _relabel(rest, top).items():
        out[verts] = out.get(verts, 0) + c
    return out


@dataclass(frozen=True)
class StratifiedComplex:
    """A simplicial set with a set of marked (thin) simplices of dimension ≥ 1."""

    base: RegularSimplicialSet
    marked: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for sid in self.marked:
            if self.base.simplex(sid).dim < 1:
                raise GradingViolation(f"only simplices of dimension ≥ 1 can be marked, not {sid!r}")

    def is_marked(self, simplex: str) -> bool:
        return simplex in self.marked

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.base.name, "marked": sorted(self.marked, key=lambda s: (len(s), s))}


def _stratify(S: RegularSimplicialSet, marked: Iterable[str]) -> StratifiedComplex:
    return StratifiedComplex(base=S, marked=frozenset(marked))


def stratify_standard(n: int, k: int, variant: Variant = "plain") -> StratifiedComplex:
    """Δ^k[n], Δ^k[n]' or Δ^k[n]''."""
    if n < 0 or not 0 <= k <= n:
        raise BadIndex(f"stratification Δ^{k}[{n}] needs 0 ≤ k ≤ n")
    S = build_complex("standard", n)
    marked = {x.id for x in S.simplices.values() if x.dim >= 1 and admissible_support(x.vertices, n, k)}
    if variant == "prime":
        marked |= {simplex_id(face_vertices(n, j)) for j in (k - 1, k + 1) if 0 <= j <= n and n >= 2}
    elif variant == "doubleprime":
        marked |= {x.id for x in S.in_dim(n - 1) if n >= 2}
    elif variant != "plain":
        raise BadIndex(f"unknown stratification variant {variant!r}")
    return _stratify(S, marked)


def stratify_sharp(n: int) -> StratifiedComplex:
    """Δ[n]^#: every simplex of positive dimension is marked."""
    S = build_complex("standard", n)
    return _stratify(S, (x.id for x in S.simplices.values() if x.dim >= 1))


def stratify_equivalence() -> StratifiedComplex:
    """Δ[3]^eq: the edges 02 and 13 and every simplex of dimension ≥ 2."""
    S = build_complex("standard", 3)
    marked = {"02", "13"} | {x.id for x in S.simplices.values() if x.dim >= 2}
    return _stratify(S, marked)


def restrict_marking(U: StratifiedComplex, sub: RegularSimplicialSet) -> StratifiedComplex:
    """U°: the marking of U restricted to a simplicial subset."""
    extra = [sid for sid in sub.simplices if sid not in U.base.simplices]
    if extra:
        raise UnknownBasisId(f"{', '.join(sorted(extra))} are not simplices of {U.base.name}")
    return _stratify(sub, (sid for sid in U.marked if sid in sub.simplices))


def is_regular_inclusion(U: StratifiedComplex, V: StratifiedComplex) -> bool:
    """U ⊆ V and a simplex of U is marked in U exactly when it is marked in V."""
    if not set(U.base.simplices) <= set(V.base.simplices):
        return False
    return all(U.is_marked(s) == V.is_marked(s) for s in U.base.simplices)


def is_entire_inclusion(U: StratifiedComplex, V: StratifiedComplex) -> bool:
    """Same simplices, with the marking of U contained in that of V."""
    return set(U.base.simplices) == set(V.base.simplices) and U.marked <= V.marked


def is_k_trivial(U: StratifiedComplex, k: int) -> bool:
    return all(U.is_marked(x.id) for x in U.base.simplices.values() if x.dim >= max(k, 1))


def horn_inclusion(n: int, k: int) -> tuple[StratifiedComplex, StratifiedComplex, bool]:
    """Λ^k[n] → Δ^k[n] with the inherited marking, and whether it is regular."""
    outer = stratify_standard(n, k)
    inner = restrict_marking(outer, build_complex("horn", n, k))
    return inner, outer, is_regular_inclusion(inner, outer)
