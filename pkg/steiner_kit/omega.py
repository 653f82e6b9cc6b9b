"""Cells of νK (Steiner tables) and μK (coherent chains) and the maps between them."""

from __future__ import annotations

from dataclasses import dataclass

from .adc import AugmentedDirectedComplex, SteinerTable
from .algebra import BasisElement, Chain, GroupElement, element_sum, positive_part
from .chain_calculus import check_sign, d, degree, homogeneous_part, is_coherent
from .errors import BadIndex, GradingViolation, MalformedInput, NotCoherent, NotCoherentTable, NotComposable


@dataclass(frozen=True)
class Cell:
    """A coherent chain viewed as a cell of μK of dimension ``dim``.

    The same chain at two dimensions gives two different cells (the higher one
    is an iterated unit).
    """

    chain: Chain
    dim: int

    def __repr__(self) -> str:
        return f"Cell({self.chain!r}, dim={self.dim})"


def make_cell(K: AugmentedDirectedComplex, chain: Chain, dim: int | None = None) -> Cell:
    """Check coherence and grading, then wrap ``chain`` as a cell."""
    top = degree(chain)
    n = top if dim is None else dim
    if n < top or n < 0:
        raise GradingViolation(f"a chain of degree {top} is not a cell of dimension {n}")
    if not is_coherent(K, chain):
        raise NotCoherent(f"{chain!r} is not coherent")
    return Cell(chain=chain, dim=n)


def atom_cell(K: AugmentedDirectedComplex, b: BasisElement) -> Cell:
    return Cell(chain=K.chain_of_ids(b.id), dim=b.dim)


def cell_unit(c: Cell, m: int) -> Cell:
    """1^m_c, the same chain viewed in dimension m."""
    if m < c.dim:
        raise BadIndex(f"cannot lower a {c.dim}-cell to dimension {m}")
    return Cell(chain=c.chain, dim=m)


def cell_source(K: AugmentedDirectedComplex, c: Cell, k: int, sign: str = "-") -> Cell:
    """The k-dimensional source (sign -) or target (sign +) of c."""
    if not 0 <= k <= c.dim:
        raise BadIndex(f"no {k}-boundary on a {c.dim}-cell")
    if k == c.dim:
        return c
    return Cell(chain=d(K, c.chain, k, check_sign(sign)), dim=k)


def cell_target(K: AugmentedDirectedComplex, c: Cell, k: int) -> Cell:
    return cell_source(K, c, k, "+")


def check_table(K: AugmentedDirectedComplex, x: SteinerTable) -> None:
    """Raise NotCoherentTable unless x is a coherent Steiner table of K."""
    n = x.dim
    if n < 0 or len(x.minus) != n + 1 or len(x.plus) != n + 1:
        raise NotCoherentTable(f"a table of dimension {n} needs {n + 1} rows on each side")
    if x.minus[n] != x.plus[n]:
        raise NotCoherentTable("top rows of a table must agree")
    for k in range(n + 1):
        for row in (x.minus[k], x.plus[k]):
            if any(b.dim != k for b in row.support()):
                raise NotCoherentTable(f"row {k} must be homogeneous of dimension {k}")
    for k in range(1, n + 1):
        expected = x.plus[k - 1] - x.minus[k - 1]
        for row in (x.minus[k], x.plus[k]):
            if K.boundary(row) != expected:
                raise NotCoherentTable(f"row {k} does not bound row {k - 1}")
    if K.augment(x.minus[0]) != 1 or K.augment(x.plus[0]) != 1:
        raise NotCoherentTable("a coherent table has augmentation 1 on both dimension-0 rows")


def table_is_coherent(K: AugmentedDirectedComplex, x: SteinerTable) -> bool:
    try:
        check_table(K, x)
    except NotCoherentTable:
        return False
    return True


def chain_of_table(K: AugmentedDirectedComplex, x: SteinerTable) -> Cell:
    """φ: x_n^+ + Σ_{k<n} (x_k^+ - ∂^+ x_{k+1}^+)."""
    check_table(K, x)
    n = x.dim
    parts: list[GroupElement] = [x.plus[n]]
    for k in range(n):
        parts.append(x.plus[k] - positive_part(K.boundary(x.plus[k + 1])))
    total = element_sum(parts)
    try:
        chain = Chain.from_element(total)
    except MalformedInput as exc:
        raise NotCoherentTable(f"table does not encode a chain: {exc}") from exc
    return Cell(chain=chain, dim=n)


def table_of_chain(K: AugmentedDirectedComplex, c: Cell) -> SteinerTable:
    """ψ: rows ((d_k^- a)_k, (d_k^+ a)_k) and (a)_n on top."""
    a, n = c.chain, c.dim
    minus = [homogeneous_part(d(K, a, k, "-"), k) for k in range(n)]
    plus = [homogeneous_part(d(K, a, k, "+"), k) for k in range(n)]
    top = homogeneous_part(a, n)
    return SteinerTable(dim=n, minus=(*minus, top), plus=(*plus, top))


def table_source(x: SteinerTable, k: int, sign: str = "-") -> SteinerTable:
    """Truncate x at row k, keeping the ``sign`` side of row k on both sides."""
    if not 0 <= k <= x.dim:
        raise BadIndex(f"no {k}-boundary on a {x.dim}-table")
    if k == x.dim:
        return x
    last = x.row(k, check_sign(sign))
    return SteinerTable(dim=k, minus=(*x.minus[:k], last), plus=(*x.plus[:k], last))


def table_target(x: SteinerTable, k: int) -> SteinerTable:
    return table_source(x, k, "+")


def table_compose(x: SteinerTable, y: SteinerTable, k: int) -> SteinerTable:
    """x *_k y, defined when d_k^- x = d_k^+ y (y comes first)."""
    if x.dim != y.dim:
        raise NotComposable(f"tables of dimensions {x.dim} and {y.dim}")
    if not 0 <= k < x.dim:
        raise NotComposable(f"cannot compose {x.dim}-tables at level {k}")
    if table_source(x, k, "-") != table_target(y, k):
        raise NotComposable(f"d_{k}^- of the left table differs from d_{k}^+ of the right table")
    minus = list(x.minus[:k]) + [y.minus[k]]
    plus = list(x.plus[:k]) + [x.plus[k]]
    for i in range(k + 1, x.dim + 1):
        minus.append(Chain.from_element(x.minus[i] + y.minus[i]))
        plus.append(Chain.from_element(x.plus[i] + y.plus[i]))
    return SteinerTable(dim=x.dim, minus=tuple(minus), plus=tuple(plus))


def table_unit(x: SteinerTable, m: int) -> SteinerTable:
    """1^m_x: pad x with zero rows up to dimension m."""
    if m < x.dim:
        raise BadIndex(f"cannot lower a {x.dim}-table to dimension {m}")
    pad = (Chain(),) * (m - x.dim)
    return SteinerTable(dim=m, minus=x.minus + pad, plus=x.plus + pad)


def cell_compose(K: AugmentedDirectedComplex, x: Cell, y: Cell, k: int) -> Cell:
    """x *_k y := (x - z + y)_+ with z = d_k^- x = d_k^+ y."""
    if x.dim != y.dim:
        raise NotComposable(f"cells of dimensions {x.dim} and {y.dim}")
    if not 0 <= k < x.dim:
        raise NotComposable(f"cannot compose {x.dim}-cells at level {k}")
    z = d(K, x.chain, k, "-")
    if z != d(K, y.chain, k, "+"):
        raise NotComposable(f"d_{k}^-({x.chain!r}) ≠ d_{k}^+({y.chain!r})")
    return Cell(chain=positive_part(x.chain - z + y.chain), dim=x.dim)
