"""Sparse integer combinations over a graded basis and their lattice operations."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

from .errors import MalformedInput, MixedComplexError


@dataclass(frozen=True, order=True)
class BasisElement:
    """A generator b with |b| = dim, interned in the complex named ``owner``."""

    dim: int
    id: str
    owner: str = ""

    def __repr__(self) -> str:
        return f"<{self.id}:{self.dim}>"


def _owner_of(items: Iterable[BasisElement]) -> str | None:
    """Return the complex name shared by the elements, raising on a mix."""
    owner: str | None = None
    for b in items:
        if owner is None:
            owner = b.owner
        elif b.owner != owner:
            raise MixedComplexError(f"basis elements of {owner!r} and {b.owner!r} cannot be mixed")
    return owner


class GroupElement:
    """Immutable finite integer combination of basis elements.

    Entries are kept sorted by (dim, id) and zero coefficients are never stored,
    so two elements are equal exactly when their coefficient maps are.
    """

    __slots__ = ("_items", "_map", "_owner")

    def __init__(self, coeffs: Mapping[BasisElement, int] | Iterable[tuple[BasisElement, int]] = ()):
        pairs = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[BasisElement, int] = {}
        for b, c in pairs:
            if not isinstance(c, int):
                raise MalformedInput(f"coefficient of {b.id} must be an integer, got {c!r}")
            acc[b] = acc.get(b, 0) + c
        kept = {b: c for b, c in acc.items() if c != 0}
        self._owner = _owner_of(kept)
        self._items: tuple[tuple[BasisElement, int], ...] = tuple(sorted(kept.items()))
        self._map: dict[BasisElement, int] = dict(self._items)

    @classmethod
    def of(cls, *elements: BasisElement) -> GroupElement:
        """Sum of the given basis elements, each with coefficient 1."""
        return cls((b, 1) for b in elements)

    @property
    def owner(self) -> str | None:
        """Name of the complex the entries belong to, None for 0."""
        return self._owner

    def coeff(self, b: BasisElement) -> int:
        """Return λ_b, the coefficient of b (0 when absent)."""
        return self._map.get(b, 0)

    def items(self) -> tuple[tuple[BasisElement, int], ...]:
        """Return (element, coefficient) pairs in (dim, id) order."""
        return self._items

    def support(self) -> tuple[BasisElement, ...]:
        """Return supp(x), the elements with nonzero coefficient."""
        return tuple(b for b, _ in self._items)

    def dims(self) -> set[int]:
        """Return the dimensions occurring in the support."""
        return {b.dim for b, _ in self._items}

    def is_zero(self) -> bool:
        return not self._items

    def is_homogeneous(self) -> bool:
        """Return True when all entries share one dimension."""
        return len(self.dims()) <= 1

    def total(self) -> int:
        """Return the sum of the coefficients."""
        return sum(c for _, c in self._items)

    def to_mapping(self) -> dict[str, int]:
        """Return the coefficients keyed by basis id."""
        return {b.id: c for b, c in self._items}

    def __contains__(self, b: object) -> bool:
        return b in self._map

    def __iter__(self) -> Iterator[BasisElement]:
        return iter(self.support())

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __add__(self, other: GroupElement) -> GroupElement:
        return combine(self, other, 1, 1)

    def __sub__(self, other: GroupElement) -> GroupElement:
        return combine(self, other, 1, -1)

    def __neg__(self) -> GroupElement:
        return GroupElement((b, -c) for b, c in self._items)

    def __rmul__(self, scalar: int) -> GroupElement:
        return GroupElement((b, scalar * c) for b, c in self._items)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_element(self)})"


class Chain(GroupElement):
    """A GroupElement whose coefficients are all positive (an element of K*)."""

    __slots__ = ()

    def __init__(self, coeffs: Mapping[BasisElement, int] | Iterable[tuple[BasisElement, int]] = ()):
        super().__init__(coeffs)
        bad = [b.id for b, c in self._items if c < 0]
        if bad:
            raise MalformedInput(f"chain has negative coefficients on {', '.join(bad)}")

    @classmethod
    def of(cls, *elements: BasisElement) -> Chain:
        """Sum of the given basis elements as a chain."""
        return cls((b, 1) for b in elements)

    @classmethod
    def from_element(cls, x: GroupElement) -> Chain:
        """Return x as a Chain; negative coefficients raise MalformedInput."""
        return x if isinstance(x, Chain) else cls(x.items())

    def __add__(self, other: GroupElement) -> GroupElement:
        out = combine(self, other, 1, 1)
        return Chain(out.items()) if isinstance(other, Chain) else out

    def __rmul__(self, scalar: int) -> GroupElement:
        out = GroupElement.__rmul__(self, scalar)
        return Chain(out.items()) if scalar >= 0 else out


ZERO = Chain()


def format_element(x: GroupElement) -> str:
    """Render as ``-0+2*13+012`` in canonical (dim, id) order."""
    if not x.items():
        return "0"
    parts: list[str] = []
    for b, c in x.items():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        term = b.id if mag == 1 else f"{mag}*{b.id}"
        parts.append(f"{sign}{term}")
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


def combine(x: GroupElement, y: GroupElement, cx: int, cy: int) -> GroupElement:
    """Return cx·x + cy·y."""
    pairs = [(b, cx * c) for b, c in x.items()]
    pairs.extend((b, cy * c) for b, c in y.items())
    return GroupElement(pairs)


def split_parts(x: GroupElement) -> tuple[Chain, Chain]:
    """Return (x_+, x_-) with x = x_+ - x_- and disjoint supports."""
    pos = Chain((b, c) for b, c in x.items() if c > 0)
    neg = Chain((b, -c) for b, c in x.items() if c < 0)
    return pos, neg


def positive_part(x: GroupElement) -> Chain:
    """Return x_+."""
    return split_parts(x)[0]


def meet(x: GroupElement, y: GroupElement) -> Chain:
    """Pointwise minimum of two chains."""
    return Chain((b, min(c, y.coeff(b))) for b, c in x.items() if y.coeff(b) > 0)


def join(x: GroupElement, y: GroupElement) -> Chain:
    """Pointwise maximum of two chains."""
    keys = set(x.support()) | set(y.support())
    return Chain((b, max(x.coeff(b), y.coeff(b))) for b in keys)


def truncated_diff(x: GroupElement, y: GroupElement) -> Chain:
    """x ∖ y, the positive part of x - (y)_+."""
    return Chain((b, c - max(y.coeff(b), 0)) for b, c in x.items() if c > max(y.coeff(b), 0))


def leq(x: GroupElement, y: GroupElement) -> bool:
    """Return True when x ≤ y coefficientwise."""
    keys = set(x.support()) | set(y.support())
    return all(x.coeff(b) <= y.coeff(b) for b in keys)


def leq_one(x: GroupElement) -> bool:
    """Return True when no coefficient exceeds 1."""
    return all(c <= 1 for _, c in x.items())


def chain_sum(chains: Iterable[GroupElement]) -> Chain:
    """Sum of chains (positive coefficients are kept positive)."""
    pairs: list[tuple[BasisElement, int]] = []
    for x in chains:
        pairs.extend(x.items())
    return Chain(pairs)


def element_sum(elements: Iterable[GroupElement]) -> GroupElement:
    """Sum of group elements, signs kept."""
    pairs: list[tuple[BasisElement, int]] = []
    for x in elements:
        pairs.extend(x.items())
    return GroupElement(pairs)
