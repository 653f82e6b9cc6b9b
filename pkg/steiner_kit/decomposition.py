"""Decomposition of coherent chains into composites of basis generators."""

from __future__ import annotations

import functools
import logging
from collections.abc import Mapping
from dataclasses import dataclass
from typing import ClassVar

from .adc import AugmentedDirectedComplex
from .algebra import BasisElement, Chain, join, truncated_diff
from .chain_calculus import d, ordered_form
from .errors import GradingViolation, MalformedInput, NothingToDecompose
from .omega import Cell, cell_compose, cell_unit

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Generator:
    """A basis element used as a leaf."""

    basis: BasisElement
    mapper_method: ClassVar[str] = "map_generator"

    @property
    def dim(self) -> int:
        return self.basis.dim


@dataclass(frozen=True)
class Compose:
    """factors[0] *_k factors[1] *_k …; the last factor is applied first."""

    k: int
    factors: tuple[ExpressionTree, ...]
    mapper_method: ClassVar[str] = "map_compose"


@dataclass(frozen=True)
class Identity:
    """A pure unit factor; evaluates like ``inner`` but renders as 1_{…}."""

    inner: ExpressionTree
    mapper_method: ClassVar[str] = "map_identity"


@dataclass(frozen=True)
class Variable:
    """A named placeholder bound at evaluation time."""

    name: str
    mapper_method: ClassVar[str] = "map_variable"


ExpressionTree = Generator | Compose | Identity | Variable


class TreeMapper:
    """Dispatch on node type through each node's ``mapper_method``."""

    def __call__(self, node: ExpressionTree):
        return getattr(self, node.mapper_method)(node)


class StringifyMapper(TreeMapper):
    """Render a tree as ``a *k b`` text."""

    def map_generator(self, node: Generator) -> str:
        return node.basis.id

    def map_variable(self, node: Variable) -> str:
        return node.name

    def map_identity(self, node: Identity) -> str:
        return "1_{%s}" % self(node.inner)

    def map_compose(self, node: Compose) -> str:
        parts = []
        for child in node.factors:
            text = self(child)
            parts.append(f"({text})" if isinstance(child, Compose) else text)
        return f" *{node.k} ".join(parts)


class LeafMapper(TreeMapper):
    """Collect generator leaves left to right."""

    def map_generator(self, node: Generator) -> list[BasisElement]:
        return [node.basis]

    def map_variable(self, node: Variable) -> list[BasisElement]:
        return []

    def map_identity(self, node: Identity) -> list[BasisElement]:
        return self(node.inner)

    def map_compose(self, node: Compose) -> list[BasisElement]:
        return [b for child in node.factors for b in self(child)]


def render(t: ExpressionTree) -> str:
    """Return the fully parenthesized text form of t."""
    return StringifyMapper()(t)


def tree_leaves(t: ExpressionTree) -> list[BasisElement]:
    """Return the generators of t in reading order, repeats kept."""
    return LeafMapper()(t)


def tree_dim(t: ExpressionTree, bindings: Mapping[str, Cell] | None = None) -> int:
    """Smallest dimension in which ``t`` can be evaluated."""
    if isinstance(t, Generator):
        return t.dim
    if isinstance(t, Identity):
        return tree_dim(t.inner, bindings)
    if isinstance(t, Variable):
        if bindings is None or t.name not in bindings:
            raise MalformedInput(f"variable {t.name!r} is not bound")
        return bindings[t.name].dim
    return max(t.k + 1, *(tree_dim(f, bindings) for f in t.factors))


def decompose_once(K: AugmentedDirectedComplex, c: Cell) -> tuple[int, list[Cell]]:
    """Split c at level |a|_c into the factors β_0 … β_m, β_0 applied last."""
    form = ordered_form(K, c.chain)
    k = form.comp_degree
    if k < 0:
        raise NothingToDecompose(f"{c.chain!r} has composition degree -1")
    factors: list[Cell] = []
    for idx, b in enumerate(form.top):
        own = Chain.of(b)
        before = truncated_diff(d(K, form.below(idx), k, "-"), d(K, own, k, "+"))
        after = truncated_diff(d(K, form.above(idx), k, "+"), d(K, own, k, "-"))
        beta = Chain.from_element(own + join(before, after) + form.rest)
        factors.append(Cell(chain=beta, dim=c.dim))
    logger.debug("split %r at level %d into %d factors", c.chain, k, len(factors))
    return k, factors


def decompose_full(K: AugmentedDirectedComplex, c: Cell) -> ExpressionTree:
    """Recursively decompose c until every leaf is a basis generator."""
    form = ordered_form(K, c.chain)
    if form.comp_degree < 0:
        (b,) = form.top
        return Generator(b)
    k, factors = decompose_once(K, c)
    return Compose(k=k, factors=tuple(decompose_full(K, f) for f in factors))


def evaluate(
    K: AugmentedDirectedComplex,
    t: ExpressionTree,
    target_dim: int | None = None,
    bindings: Mapping[str, Cell] | None = None,
) -> Cell:
    """Fold the tree with cell_compose, padding generators with units."""
    n = tree_dim(t, bindings) if target_dim is None else target_dim
    if isinstance(t, Generator):
        if n < t.dim:
            raise GradingViolation(f"generator {t.basis.id} has dimension {t.dim} > {n}")
        return Cell(chain=Chain.of(t.basis), dim=n)
    if isinstance(t, Variable):
        if bindings is None or t.name not in bindings:
            raise MalformedInput(f"variable {t.name!r} is not bound")
        return cell_unit(bindings[t.name], n)
    if isinstance(t, Identity):
        return evaluate(K, t.inner, n, bindings)
    cells = [evaluate(K, f, n, bindings) for f in t.factors]
    return functools.reduce(lambda acc, nxt: cell_compose(K, acc, nxt, t.k), cells)
