"""Morphisms of augmented directed complexes and the functor μ on cells.

Also builds the globe complex, the complex of the equation Eq(n) with its
parameter subcomplex P(n), and the comparison morphisms p and q out of
C_•(Δ[n]).
"""

from __future__ import annotations

import functools
import itertools
import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

from .adc import AugmentedDirectedComplex, SteinerTable, atom_table, sub_adc, validate_adc
from .algebra import BasisElement, Chain, GroupElement, element_sum, meet
from .chain_calculus import is_coherent
from .errors import (
    AugmentationMismatch,
    BadIndex,
    BoundaryMismatch,
    GradingViolation,
    InvariantViolation,
    MalformedInput,
    MixedComplexError,
    NegativeImage,
)
from .omega import Cell, chain_of_table, table_of_chain
from .simplicial import build_complex, chains_of, deletion_sequence, oriental, vertices_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AdcMorphism:
    """f: K → L given by the images of the basis of K."""

    source: AugmentedDirectedComplex
    target: AugmentedDirectedComplex
    images: dict[BasisElement, Chain] = field(default_factory=dict)

    def image(self, b: BasisElement) -> Chain:
        return self.images.get(b, Chain())

    def apply(self, x: GroupElement) -> GroupElement:
        """Linear extension of the basis images."""
        return element_sum(c * self.image(b) for b, c in x.items())

    def apply_chain(self, x: Chain) -> Chain:
        return Chain.from_element(self.apply(x))

    def same_as(self, other: AdcMorphism) -> bool:
        if self.source is not other.source or self.target is not other.target:
            return False
        return all(self.image(b) == other.image(b) for b in self.source.basis)

    def to_dict(self) -> dict[str, Any]:
        return {
            "source": self.source.name,
            "target": self.target.name,
            "images": {b.id: self.image(b).to_mapping() for b in self.source.basis},
        }


def validate_morphism(
    source: AugmentedDirectedComplex,
    target: AugmentedDirectedComplex,
    images: Mapping[str, Mapping[str, int]],
) -> AdcMorphism:
    """Check grading, positivity, ∂-commutation and augmentation of raw images."""
    missing = [b.id for b in source.basis if b.id not in images]
    if missing:
        raise MalformedInput(f"no image given for {', '.join(missing)}")
    table: dict[BasisElement, Chain] = {}
    for key, raw in images.items():
        b = source.element(key)
        img = target.element_from(raw)
        wrong = [t.id for t in img.support() if t.dim != b.dim]
        if wrong:
            raise GradingViolation(f"f({key}) uses {', '.join(wrong)} outside dimension {b.dim}")
        negative = [t.id for t, c in img.items() if c < 0]
        if negative:
            raise NegativeImage(f"f({key}) has negative coefficients on {', '.join(negative)}")
        table[b] = Chain.from_element(img)
    f = AdcMorphism(source=source, target=target, images=table)
    for b in source.basis:
        if b.dim > 0:
            lhs, rhs = target.boundary(f.image(b)), f.apply(source.diff[b])
            if lhs != rhs:
                raise BoundaryMismatch(f"∂f({b.id}) = {lhs!r} but f(∂{b.id}) = {rhs!r}")
        elif target.augment(f.image(b)) != source.aug[b]:
            raise AugmentationMismatch(
                f"e(f({b.id})) = {target.augment(f.image(b))} but e({b.id}) = {source.aug[b]}"
            )
    logger.debug("validated morphism %s → %s", source.name, target.name)
    return f


def identity_morphism(K: AugmentedDirectedComplex) -> AdcMorphism:
    return AdcMorphism(source=K, target=K, images={b: Chain.of(b) for b in K.basis})


def inclusion_morphism(sub: AugmentedDirectedComplex, K: AugmentedDirectedComplex) -> AdcMorphism:
    """The basis injection of a subcomplex whose ids are ids of K."""
    return validate_morphism(sub, K, {b.id: {b.id: 1} for b in sub.basis})


def compose_morphisms(g: AdcMorphism, f: AdcMorphism) -> AdcMorphism:
    """g ∘ f."""
    if f.target is not g.source:
        raise MixedComplexError(f"cannot compose {f.target.name} → … with {g.source.name} → …")
    return AdcMorphism(
        source=f.source,
        target=g.target,
        images={b: g.apply_chain(f.image(b)) for b in f.source.basis},
    )


def table_image(f: AdcMorphism, x: SteinerTable) -> SteinerTable:
    """ν(f): apply f row by row."""
    return SteinerTable(
        dim=x.dim,
        minus=tuple(f.apply_chain(r) for r in x.minus),
        plus=tuple(f.apply_chain(r) for r in x.plus),
    )


def apply_mu(f: AdcMorphism, c: Cell) -> Cell:
    """μ(f) = φ ∘ ν(f) ∘ ψ."""
    return chain_of_table(f.target, table_image(f, table_of_chain(f.source, c)))


@dataclass(frozen=True)
class QuasiRigidReport:
    ok: bool
    witness: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {"ok": self.ok, "witness": self.witness}


def quasi_rigidity(f: AdcMorphism) -> QuasiRigidReport:
    """f(b) ≠ 0 must be a basis element with f⟨b⟩_k^- ∧ f⟨b⟩_k^+ = 0 for k < |b|."""
    for b in f.source.basis:
        img = f.image(b)
        if not img:
            continue
        if len(img) != 1 or img.total() != 1:
            return QuasiRigidReport(ok=False, witness={"id": b.id, "image": img.to_mapping()})
        atom = atom_table(f.source, b)
        for k in range(b.dim):
            overlap = meet(f.apply(atom.minus[k]), f.apply(atom.plus[k]))
            if overlap:
                return QuasiRigidReport(
                    ok=False, witness={"id": b.id, "level": k, "overlap": overlap.to_mapping()}
                )
    return QuasiRigidReport(ok=True)


def is_quasi_rigid(f: AdcMorphism) -> bool:
    return quasi_rigidity(f).ok


def preserves_atoms(f: AdcMorphism) -> bool:
    """ν(f)⟨b⟩ = ⟨f(b)⟩ for every b with f(b) ≠ 0."""
    for b in f.source.basis:
        img = f.image(b)
        if not img:
            continue
        if len(img) != 1 or img.total() != 1:
            return False
        (target_b,) = img.support()
        if table_image(f, atom_table(f.source, b)) != atom_table(f.target, target_b):
            return False
    return True


@functools.lru_cache(maxsize=None)
def globe_adc(n: int) -> AugmentedDirectedComplex:
    """λ(I_n): e_k^± for k < n and a top element e_n."""
    if n < 0:
        raise BadIndex(f"globe dimension must be ≥ 0, got {n}")
    if n == 0:
        return validate_adc("globe(0)", [("e0", 0)], {}, {"e0": 1})
    basis: list[tuple[str, int]] = []
    diff: dict[str, dict[str, int]] = {}
    for k in range(n):
        for sign in "+-":
            basis.append((f"e{k}{sign}", k))
            if k > 0:
                diff[f"e{k}{sign}"] = {f"e{k - 1}+": 1, f"e{k - 1}-": -1}
    basis.append((f"e{n}", n))
    diff[f"e{n}"] = {f"e{n - 1}+": 1, f"e{n - 1}-": -1}
    return validate_adc(f"globe({n})", basis, diff, {"e0+": 1, "e0-": 1})


def projection_p(n: int) -> AdcMorphism:
    """p: C_•(Δ[n]) → globe(n), i_n ↦ e_n.

    A face d^{k_1,…,k_l} goes to e_{n-l}^+ when k_1 = 0, to e_{n-l}^- when
    k_1 = 1 and to 0 otherwise.
    """
    if n < 1:
        raise BadIndex(f"p is defined for n ≥ 1, got {n}")
    K, _ = oriental(n)
    G = globe_adc(n)
    images: dict[str, dict[str, int]] = {}
    for b in K.basis:
        seq = deletion_sequence(vertices_of(b.id), n)
        if not seq:
            images[b.id] = {f"e{n}": 1}
        elif seq[0] <= 1:
            images[b.id] = {f"e{n - len(seq)}{'+' if seq[0] == 0 else '-'}": 1}
        else:
            images[b.id] = {}
    return validate_morphism(K, G, images)


@functools.lru_cache(maxsize=None)
def eq_adc(n: int) -> AugmentedDirectedComplex:
    """The complex of Eq(y: f → e *_{n-1} x).

    ∂y = e + x - f, ∂f = c - a, ∂e = c - b, ∂x = b - a, and a, b, c are
    parallel (n-1)-cells over the globe spanned by the i_l^±.
    """
    if n < 1:
        raise BadIndex(f"Eq(n) is defined for n ≥ 1, got {n}")
    basis = [("y", n + 1), ("f", n), ("e", n), ("x", n), ("a", n - 1), ("b", n - 1), ("c", n - 1)]
    diff: dict[str, dict[str, int]] = {
        "y": {"e": 1, "x": 1, "f": -1},
        "f": {"c": 1, "a": -1},
        "e": {"c": 1, "b": -1},
        "x": {"b": 1, "a": -1},
    }
    if n == 1:
        return validate_adc("Eq(1)", basis, diff, {"a": 1, "b": 1, "c": 1})
    for l in range(n - 1):
        for sign in "+-":
            basis.append((f"i{l}{sign}", l))
            if l > 0:
                diff[f"i{l}{sign}"] = {f"i{l - 1}+": 1, f"i{l - 1}-": -1}
    for cell in "abc":
        diff[cell] = {f"i{n - 2}+": 1, f"i{n - 2}-": -1}
    return validate_adc(f"Eq({n})", basis, diff, {"i0+": 1, "i0-": 1})


_Q_SINGLE = {0: "e", 1: "f", 2: "x"}
_Q_DOUBLE = {(0, 0): "c", (1, 0): "b", (1, 1): "a"}


def _q_image(seq: tuple[int, ...], n: int) -> str | None:
    l = len(seq)
    if l == 0:
        return "y"
    if l == 1:
        return _Q_SINGLE.get(seq[0])
    if l == 2:
        return _Q_DOUBLE.get(seq)
    if seq[0] <= 1:
        return f"i{n + 1 - l}{'+' if seq[0] == 0 else '-'}"
    return None


def morphism_q(n: int) -> AdcMorphism:
    """q: C_•(Δ[n+1]) → Eq(n), i_{n+1} ↦ y."""
    K, _ = oriental(n + 1)
    E = eq_adc(n)
    images: dict[str, dict[str, int]] = {}
    for b in K.basis:
        target = _q_image(deletion_sequence(vertices_of(b.id), n + 1), n)
        images[b.id] = {target: 1} if target else {}
    return validate_morphism(K, E, images)


@functools.lru_cache(maxsize=None)
def parameter_adc(n: int) -> AugmentedDirectedComplex:
    """P(n): Eq(n) without y and x."""
    E = eq_adc(n)
    return sub_adc(E, [b.id for b in E.basis if b.id not in ("y", "x")], f"P({n})")


def corestrict(f: AdcMorphism, sub: AugmentedDirectedComplex) -> AdcMorphism:
    """f viewed as a morphism into a subcomplex containing its image."""
    images: dict[str, dict[str, int]] = {}
    for b in f.source.basis:
        img = f.image(b)
        outside = [t.id for t in img.support() if not sub.has(t.id)]
        if outside:
            raise InvariantViolation(f"f({b.id}) leaves {sub.name} through {', '.join(outside)}")
        images[b.id] = img.to_mapping()
    return validate_morphism(f.source, sub, images)


def morphism_q_horn(n: int) -> AdcMorphism:
    """q': C_•(Λ^2[n+1]) → P(n), the restriction of q to the horn."""
    horn = chains_of(build_complex("horn", n + 1, 2))
    K, _ = oriental(n + 1)
    restricted = compose_morphisms(morphism_q(n), inclusion_morphism(horn, K))
    return corestrict(restricted, parameter_adc(n))


def cell_census(K: AugmentedDirectedComplex, max_dim: int | None = None) -> dict[int, int]:
    """Number of coherent chains ≤ 1 of degree ≤ k, for each k up to max_dim."""
    top = K.max_dim if max_dim is None else max_dim
    counts: dict[int, int] = {}
    for k in range(top + 1):
        pool = [b for b in K.basis if b.dim <= k]
        total = 0
        for size in range(1, len(pool) + 1):
            for subset in itertools.combinations(pool, size):
                if is_coherent(K, Chain.of(*subset)):
                    total += 1
        counts[k] = total
    logger.debug("cell census of %s: %s", K.name, counts)
    return counts
