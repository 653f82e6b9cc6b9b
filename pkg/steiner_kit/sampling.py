"""Seeded random cells of μK, built by composing atoms and their boundaries."""

from __future__ import annotations

import logging
import random
from collections import Counter
from dataclasses import dataclass, field

from .adc import AugmentedDirectedComplex
from .algebra import Chain
from .chain_calculus import SIGNS, comp_degree, d, degree
from .omega import Cell, cell_compose
from .simplicial import oriental

logger = logging.getLogger(__name__)


@dataclass
class _Pool:
    cells: list[Cell]
    seen: set[Chain]
    by_target: dict[tuple[int, Chain], list[Cell]] = field(default_factory=dict)
    by_source: dict[tuple[int, Chain], list[Cell]] = field(default_factory=dict)


class CellSampler:
    """Grow pools of composites of atoms of K, one pool per cell dimension.

    A pool of dimension ``dim`` starts from the atoms of dimension ≤ dim and
    from the sources and targets d_k^± of every atom for k ≤ dim. Every draw
    composes two cells x *_k y that are not units along k and keeps the result.
    """

    def __init__(self, K: AugmentedDirectedComplex, seed: int, attempts: int = 16):
        self.K = K
        self.rng = random.Random(seed)
        self.attempts = attempts
        self._pools: dict[int, _Pool] = {}

    def _pool(self, dim: int) -> _Pool:
        pool = self._pools.get(dim)
        if pool is None:
            pool = _Pool(cells=[], seen=set())
            for b in self.K.basis:
                atom = Chain.of(b)
                if b.dim <= dim:
                    self._add(pool, Cell(chain=atom, dim=dim))
                for k in range(min(b.dim, dim + 1)):
                    for sign in SIGNS:
                        self._add(pool, Cell(chain=d(self.K, atom, k, sign), dim=dim))
            self._pools[dim] = pool
        return pool

    def _add(self, pool: _Pool, c: Cell) -> None:
        if c.chain in pool.seen:
            return
        pool.seen.add(c.chain)
        pool.cells.append(c)
        for k in range(c.dim):
            if degree(c.chain) > k:
                pool.by_target.setdefault((k, d(self.K, c.chain, k, "+")), []).append(c)
                pool.by_source.setdefault((k, d(self.K, c.chain, k, "-")), []).append(c)

    def pool_size(self, dim: int) -> int:
        return len(self._pool(dim).cells)

    def draw_before(self, c: Cell, k: int) -> Cell | None:
        """Return a pool cell y with d_k^+ y = d_k^- c, so that c *_k y is defined."""
        matches = self._pool(c.dim).by_target.get((k, d(self.K, c.chain, k, "-")))
        return self.rng.choice(matches) if matches else None

    def draw_after(self, c: Cell, k: int) -> Cell | None:
        """Return a pool cell w with d_k^- w = d_k^+ c, so that w *_k c is defined."""
        matches = self._pool(c.dim).by_source.get((k, d(self.K, c.chain, k, "+")))
        return self.rng.choice(matches) if matches else None

    def draw_composable(self, dim: int) -> tuple[Cell, Cell, int] | None:
        """Return a pair (x, y) with d_k^- x = d_k^+ y, neither a unit along k, or None."""
        if dim < 1:
            return None
        pool = self._pool(dim)
        for _ in range(self.attempts):
            x = self.rng.choice(pool.cells)
            top = degree(x.chain)
            if top < 1:
                continue
            k = self.rng.randrange(min(top, dim))
            y = self.draw_before(x, k)
            if y is not None:
                return x, y, k
        return None

    def draw(self, dim: int) -> Cell:
        """Return a fresh composite when one is found, else a cell already in the pool."""
        pool = self._pool(dim)
        pair = self.draw_composable(dim)
        if pair is None:
            return self.rng.choice(pool.cells)
        x, y, k = pair
        z = cell_compose(self.K, x, y, k)
        self._add(pool, z)
        return z


def sample_cells(count: int, seed: int, max_n: int) -> list[tuple[AugmentedDirectedComplex, Cell]]:
    """Return ``count`` random cells of the orientals Δ[1] … Δ[max_n]."""
    rng = random.Random(seed)
    samplers: dict[int, CellSampler] = {}
    out: list[tuple[AugmentedDirectedComplex, Cell]] = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        if n not in samplers:
            samplers[n] = CellSampler(oriental(n)[0], rng.randrange(2**32))
        sampler = samplers[n]
        out.append((sampler.K, sampler.draw(rng.randint(1, n))))
    logger.debug("sampled %d cells with seed %d: %s", count, seed, dict(comp_degree_census(out)))
    return out


def comp_degree_census(samples: list[tuple[AugmentedDirectedComplex, Cell]]) -> Counter[int]:
    """Return how many sampled cells have each composition degree."""
    return Counter(comp_degree(c.chain) for _, c in samples)
