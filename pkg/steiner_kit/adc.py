"""Augmented directed complexes with a distinguished basis.

Holds the complex itself, Steiner tables, the atoms ⟨b⟩ and the two base
certifications used throughout the library: unitarity and loop-freeness.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import Any

import networkx as nx

from .algebra import BasisElement, Chain, GroupElement, element_sum, meet, split_parts
from .errors import (
    AugmentationNonzeroOnBoundary,
    BoundarySquareNonzero,
    GradingViolation,
    InvariantViolation,
    MalformedInput,
    NotHomogeneous,
    UnknownBasisId,
)

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class AugmentedDirectedComplex:
    """A finite ADC: graded basis, differential table and augmentation.

    Build instances through :func:`validate_adc`; the constructor trusts its
    arguments.
    """

    name: str
    basis: tuple[BasisElement, ...]
    diff: dict[BasisElement, GroupElement]
    aug: dict[BasisElement, int]
    _by_id: dict[str, BasisElement] = field(default_factory=dict, repr=False)
    _atoms: dict[BasisElement, SteinerTable] = field(default_factory=dict, repr=False)
    _orders: dict[int, OrderRelation] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self._by_id = {b.id: b for b in self.basis}

    @property
    def max_dim(self) -> int:
        return max((b.dim for b in self.basis), default=-1)

    def has(self, basis_id: str) -> bool:
        return basis_id in self._by_id

    def element(self, basis_id: str) -> BasisElement:
        try:
            return self._by_id[basis_id]
        except KeyError:
            raise UnknownBasisId(f"{basis_id!r} is not a basis element of {self.name}") from None

    def in_dim(self, n: int) -> tuple[BasisElement, ...]:
        return tuple(b for b in self.basis if b.dim == n)

    def boundary(self, x: GroupElement) -> GroupElement:
        """Linear extension of ∂; dimension-0 elements have zero boundary."""
        return element_sum(c * self.diff[b] for b, c in x.items() if b.dim > 0)

    def augment(self, x: GroupElement) -> int:
        """Linear extension of e over the dimension-0 part of x."""
        return sum(c * self.aug.get(b, 0) for b, c in x.items() if b.dim == 0)

    def element_from(self, mapping: Mapping[str, int]) -> GroupElement:
        return GroupElement((self.element(k), int(v)) for k, v in mapping.items())

    def chain(self, mapping: Mapping[str, int]) -> Chain:
        x = self.element_from(mapping)
        if any(c < 0 for _, c in x.items()):
            raise MalformedInput(f"chain over {self.name} must have non-negative coefficients")
        return Chain(x.items())

    def chain_of_ids(self, *ids: str) -> Chain:
        return Chain.of(*(self.element(i) for i in ids))


@dataclass(frozen=True)
class SteinerTable:
    """Rows (x_k^-, x_k^+) for k = 0..dim, each a homogeneous chain of dim k."""

    dim: int
    minus: tuple[Chain, ...]
    plus: tuple[Chain, ...]

    def row(self, k: int, sign: str) -> Chain:
        return self.plus[k] if sign == "+" else self.minus[k]

    def to_dict(self) -> dict[str, Any]:
        return {
            "dim": self.dim,
            "minus": [x.to_mapping() for x in self.minus],
            "plus": [x.to_mapping() for x in self.plus],
        }


@dataclass(frozen=True)
class OrderRelation:
    """Generating graph of ⊙_n: edge a → b iff ⟨a⟩_n^- ∧ ⟨b⟩_n^+ ≠ 0."""

    level: int
    graph: nx.DiGraph

    def precedes(self, a: BasisElement, b: BasisElement) -> bool:
        """a ⊙_n b in the reflexive-transitive closure."""
        if a == b:
            return True
        if a not in self.graph or b not in self.graph:
            return False
        return nx.has_path(self.graph, a, b)

    def edges(self) -> list[tuple[str, str]]:
        return sorted((a.id, b.id) for a, b in self.graph.edges)


@dataclass(frozen=True)
class UnitarityReport:
    ok: bool
    violators: tuple[dict[str, Any], ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {"ok": self.ok, "violators": list(self.violators)}


@dataclass(frozen=True)
class LoopFreeReport:
    ok: bool
    level: int | None = None
    cycle: tuple[str, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        witness = None if self.ok else {"level": self.level, "cycle": list(self.cycle)}
        return {"ok": self.ok, "witness": witness}


def validate_adc(
    name: str,
    basis: Iterable[tuple[str, int]],
    diff: Mapping[str, Mapping[str, int]] | None = None,
    aug: Mapping[str, int] | None = None,
) -> AugmentedDirectedComplex:
    """Check a raw description and build the complex.

    ``basis`` lists (id, dim) pairs, ``diff`` maps ids of positive dimension to
    coefficient maps and ``aug`` gives e on dimension-0 ids (missing means 0).
    """
    elements: list[BasisElement] = []
    seen: set[str] = set()
    for basis_id, dim in basis:
        if basis_id in seen:
            raise MalformedInput(f"duplicate basis id {basis_id!r}")
        if dim < 0:
            raise GradingViolation(f"basis element {basis_id!r} has negative dimension {dim}")
        seen.add(basis_id)
        elements.append(BasisElement(dim=dim, id=basis_id, owner=name))
    by_id = {b.id: b for b in elements}

    def lookup(basis_id: str) -> BasisElement:
        if basis_id not in by_id:
            raise UnknownBasisId(f"{basis_id!r} is not a basis element of {name}")
        return by_id[basis_id]

    table: dict[BasisElement, GroupElement] = {b: GroupElement() for b in elements if b.dim > 0}
    for key, value in (diff or {}).items():
        b = lookup(key)
        image = GroupElement((lookup(k), int(c)) for k, c in value.items())
        if b.dim == 0:
            if image:
                raise GradingViolation(f"dimension-0 element {key!r} cannot have a boundary")
            continue
        if any(t.dim != b.dim - 1 for t in image.support()):
            raise GradingViolation(f"boundary of {key!r} must have dimension {b.dim - 1}")
        table[b] = image

    values: dict[BasisElement, int] = {b: 0 for b in elements if b.dim == 0}
    for key, value in (aug or {}).items():
        b = lookup(key)
        if b.dim != 0:
            raise GradingViolation(f"augmentation is defined on dimension 0 only, not on {key!r}")
        values[b] = int(value)

    K = AugmentedDirectedComplex(name=name, basis=tuple(sorted(elements)), diff=table, aug=values)
    for b in K.basis:
        if b.dim >= 2 and K.boundary(table[b]):
            raise BoundarySquareNonzero(f"∂∂({b.id}) = {K.boundary(table[b])!r}")
        if b.dim == 1 and K.augment(table[b]) != 0:
            raise AugmentationNonzeroOnBoundary(f"e(∂{b.id}) = {K.augment(table[b])}")
    logger.debug("validated complex %s with %d basis elements", name, len(K.basis))
    return K


def basis_counts(K: AugmentedDirectedComplex) -> tuple[int, ...]:
    return tuple(len(K.in_dim(n)) for n in range(K.max_dim + 1))


def boundary_pm(K: AugmentedDirectedComplex, x: GroupElement) -> tuple[Chain, Chain]:
    """Return (∂^+x, ∂^-x) for a homogeneous chain of positive dimension."""
    if not x.is_homogeneous():
        raise NotHomogeneous(f"expected a homogeneous chain, got {x!r}")
    if x and min(x.dims()) == 0:
        raise GradingViolation("∂^± is defined on dimensions ≥ 1")
    return split_parts(K.boundary(x))


def atom_table(K: AugmentedDirectedComplex, b: BasisElement) -> SteinerTable:
    """The table ⟨b⟩ obtained by iterating ∂^- and ∂^+ down from b."""
    cached = K._atoms.get(b)
    if cached is not None:
        return cached
    if K._by_id.get(b.id) != b:
        raise UnknownBasisId(f"{b.id!r} is not a basis element of {K.name}")
    n = b.dim
    minus: list[Chain] = [Chain()] * (n + 1)
    plus: list[Chain] = [Chain()] * (n + 1)
    minus[n] = plus[n] = Chain.of(b)
    for k in range(n - 1, -1, -1):
        plus[k] = split_parts(K.boundary(plus[k + 1]))[0]
        minus[k] = split_parts(K.boundary(minus[k + 1]))[1]
    table = SteinerTable(dim=n, minus=tuple(minus), plus=tuple(plus))
    K._atoms[b] = table
    return table


def is_unitary(K: AugmentedDirectedComplex) -> UnitarityReport:
    violators: list[dict[str, Any]] = []
    for b in K.basis:
        atom = atom_table(K, b)
        e_minus, e_plus = K.augment(atom.minus[0]), K.augment(atom.plus[0])
        if e_minus != 1 or e_plus != 1:
            violators.append({"id": b.id, "e_minus": e_minus, "e_plus": e_plus})
    return UnitarityReport(ok=not violators, violators=tuple(violators))


def order_relation(K: AugmentedDirectedComplex, n: int) -> OrderRelation:
    """Generating graph of ⊙_n on the basis elements of dimension ≥ n."""
    cached = K._orders.get(n)
    if cached is not None:
        return cached
    nodes = [b for b in K.basis if b.dim >= n]
    graph = nx.DiGraph()
    graph.add_nodes_from(nodes)
    sources = {b: atom_table(K, b).minus[n] for b in nodes}
    targets = {b: atom_table(K, b).plus[n] for b in nodes}
    for a in nodes:
        for b in nodes:
            if a != b and meet(sources[a], targets[b]):
                graph.add_edge(a, b)
    relation = OrderRelation(level=n, graph=graph)
    K._orders[n] = relation
    return relation


def is_loop_free(K: AugmentedDirectedComplex) -> LoopFreeReport:
    for n in range(K.max_dim + 1):
        graph = order_relation(K, n).graph
        for component in nx.strongly_connected_components(graph):
            if len(component) < 2:
                continue
            cycle = nx.find_cycle(graph.subgraph(component))
            ids = tuple(edge[0].id for edge in cycle)
            logger.debug("cycle at level %d: %s", n, ids)
            return LoopFreeReport(ok=False, level=n, cycle=ids)
    return LoopFreeReport(ok=True)


def truncate(K: AugmentedDirectedComplex, n: int, name: str | None = None) -> AugmentedDirectedComplex:
    """τ_n K: the basis elements of dimension ≤ n with the restricted structure."""
    keep = [b.id for b in K.basis if b.dim <= n]
    return sub_adc(K, keep, name or f"τ{n}({K.name})")


def sub_adc(K: AugmentedDirectedComplex, ids: Iterable[str], name: str) -> AugmentedDirectedComplex:
    """Full subcomplex on ``ids``; the set must be closed under ∂."""
    kept = [K.element(i) for i in ids]
    kept_ids = {b.id for b in kept}
    for b in kept:
        if b.dim > 0:
            outside = [t.id for t in K.diff[b].support() if t.id not in kept_ids]
            if outside:
                raise InvariantViolation(f"∂{b.id} leaves the subcomplex through {', '.join(outside)}")
    return validate_adc(
        name,
        [(b.id, b.dim) for b in kept],
        {b.id: K.diff[b].to_mapping() for b in kept if b.dim > 0},
        {b.id: K.aug[b] for b in kept if b.dim == 0},
    )


def adc_to_dict(K: AugmentedDirectedComplex) -> dict[str, Any]:
    return {
        "basis": [{"id": b.id, "dim": b.dim} for b in K.basis],
        "d": {b.id: K.diff[b].to_mapping() for b in K.basis if b.dim > 0},
        "e": {b.id: K.aug[b] for b in K.basis if b.dim == 0},
    }
