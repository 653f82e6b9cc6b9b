"""Degrees, rests and the recursive sources and targets d_n^± of chains."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal

import networkx as nx

from .adc import AugmentedDirectedComplex, atom_table, boundary_pm, order_relation
from .algebra import BasisElement, Chain, GroupElement, chain_sum, meet
from .errors import BadIndex, CycleDetected, NotCoherent

logger = logging.getLogger(__name__)

Sign = Literal["-", "+"]
SIGNS: tuple[Sign, Sign] = ("-", "+")


def check_sign(sign: str) -> Sign:
    if sign not in SIGNS:
        raise BadIndex(f"sign must be '-' or '+', got {sign!r}")
    return sign  # type: ignore[return-value]


def opposite(sign: Sign) -> Sign:
    return "+" if sign == "-" else "-"


def degree(a: GroupElement) -> int:
    """|a|: the largest dimension in the support, -1 for 0."""
    return max(a.dims(), default=-1)


def comp_degree(a: GroupElement) -> int:
    """|a|_c: one less than the second largest dimension of the support."""
    dims = sorted((b.dim for b in a.support()), reverse=True)
    if len(dims) <= 1:
        return -1
    return dims[1] - 1


def rest(a: GroupElement, k: int) -> Chain:
    """r_k(a), the part of a of dimension ≤ k."""
    return Chain((b, c) for b, c in a.items() if b.dim <= k)


def homogeneous_part(a: GroupElement, k: int) -> Chain:
    return Chain((b, c) for b, c in a.items() if b.dim == k)


def d(K: AugmentedDirectedComplex, a: Chain, n: int, sign: str) -> Chain:
    """d_n^α(a), unrolled from the top dimension of a down to n."""
    alpha = check_sign(sign)
    top = degree(a)
    if top <= n:
        return a
    if n < 0:
        raise BadIndex(f"d_n is defined for n ≥ 0, got {n}")
    cur = a
    for m in range(top - 1, n - 1, -1):
        plus, minus = boundary_pm(K, homogeneous_part(cur, m + 1))
        cur = (plus if alpha == "+" else minus) + rest(cur, m)
    return Chain.from_element(cur)


def augmentation(K: AugmentedDirectedComplex, a: Chain) -> int:
    """e(a) := e(d_0^+ a)."""
    return K.augment(d(K, a, 0, "+"))


def is_coherent(K: AugmentedDirectedComplex, a: Chain) -> bool:
    return augmentation(K, a) == 1


def parallel(K: AugmentedDirectedComplex, a: Chain, b: Chain, n: int) -> bool:
    return all(d(K, a, n, s) == d(K, b, n, s) for s in SIGNS)


@dataclass(frozen=True)
class OrderedForm:
    """a = b_0 + … + b_m + r_c(a) with no b_j ⊙_c b_i for i < j."""

    top: tuple[BasisElement, ...]
    rest: Chain
    comp_degree: int

    def below(self, k: int) -> Chain:
        """a_{<k}: the sum of the top elements before position k."""
        return Chain.of(*self.top[:k])

    def above(self, k: int) -> Chain:
        """a_{>k}: the sum of the top elements after position k."""
        return Chain.of(*self.top[k + 1 :])

    def chain(self) -> Chain:
        return Chain.from_element(Chain.of(*self.top) + self.rest)


def ordered_form(K: AugmentedDirectedComplex, a: Chain) -> OrderedForm:
    """Order the elements above the rest of a coherent chain by ⊙_{|a|_c}.

    Ties are broken by basis id so the result is deterministic.
    """
    if not is_coherent(K, a):
        raise NotCoherent(f"{a!r} has augmentation {augmentation(K, a)}")
    c = comp_degree(a)
    tops = [b for b in a.support() if b.dim > c]
    repeated = [b.id for b in tops if a.coeff(b) != 1]
    if repeated:
        raise NotCoherent(f"top elements {', '.join(repeated)} carry coefficients above 1")
    if c < 0:
        return OrderedForm(top=tuple(tops), rest=Chain(), comp_degree=c)
    relation = order_relation(K, c)
    reach = nx.DiGraph()
    reach.add_nodes_from(tops)
    for u in tops:
        below = nx.descendants(relation.graph, u)
        reach.add_edges_from((u, v) for v in tops if v in below)
    if not nx.is_directed_acyclic_graph(reach):
        cycle = [edge[0].id for edge in nx.find_cycle(reach)]
        raise CycleDetected(f"⊙_{c} has a cycle through {', '.join(cycle)}")
    order = tuple(nx.lexicographical_topological_sort(reach, key=lambda b: b.id))
    logger.debug("ordered form at level %d: %s", c, [b.id for b in order])
    return OrderedForm(top=order, rest=rest(a, c), comp_degree=c)


def is_fork_free(K: AugmentedDirectedComplex, form: OrderedForm) -> bool:
    """d^α b_k ∧ d^α b_l = 0 for k < l, and d^α b_k ∧ r_c(a) = 0."""
    c = form.comp_degree
    if c < 0:
        return True
    for sign in SIGNS:
        rows = [atom_table(K, b).row(c, sign) for b in form.top]
        for k, x in enumerate(rows):
            if meet(x, form.rest):
                return False
            if any(meet(x, y) for y in rows[k + 1 :]):
                return False
    return True


def sum_of_sources(K: AugmentedDirectedComplex, elements: tuple[BasisElement, ...], n: int, sign: str) -> Chain:
    """Σ d_n^α(b) over the given basis elements."""
    return chain_sum(d(K, Chain.of(b), n, sign) for b in elements)
