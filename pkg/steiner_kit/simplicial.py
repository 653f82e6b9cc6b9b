"""Finite regular simplicial sets, their chain complexes and signature-word faces."""

from __future__ import annotations

import functools
import itertools
import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any, Literal

from .adc import AugmentedDirectedComplex, validate_adc
from .algebra import Chain, GroupElement, chain_sum, element_sum
from .chain_calculus import check_sign
from .errors import BadIndex, GradingViolation, MalformedInput, UnknownBasisId, WordTooLong
from .omega import Cell

logger = logging.getLogger(__name__)

ComplexKind = Literal["standard", "boundary", "horn"]
LETTERS = ("p", "i")


@dataclass(frozen=True)
class Simplex:
    """A nondegenerate simplex; ``faces[j]`` is d_j or None when degenerate."""

    id: str
    dim: int
    faces: tuple[str | None, ...] = ()
    vertices: tuple[int, ...] | None = None


@dataclass(eq=False)
class RegularSimplicialSet:
    name: str
    simplices: dict[str, Simplex]
    _chains: AugmentedDirectedComplex | None = field(default=None, repr=False)

    def simplex(self, simplex_id: str) -> Simplex:
        try:
            return self.simplices[simplex_id]
        except KeyError:
            raise UnknownBasisId(f"{simplex_id!r} is not a simplex of {self.name}") from None

    def face(self, simplex_id: str, j: int) -> str | None:
        x = self.simplex(simplex_id)
        if not 0 <= j <= x.dim or x.dim == 0:
            raise BadIndex(f"d_{j} is not defined on the {x.dim}-simplex {simplex_id}")
        return x.faces[j]

    def in_dim(self, n: int) -> list[Simplex]:
        return sorted((x for x in self.simplices.values() if x.dim == n), key=lambda x: x.id)

    @property
    def max_dim(self) -> int:
        return max((x.dim for x in self.simplices.values()), default=-1)

    def ids(self) -> list[str]:
        return sorted(self.simplices, key=lambda i: (self.simplices[i].dim, i))


def simplex_id(vertices: Iterable[int]) -> str:
    """``0124`` for small vertices, ``0.1.12`` once a vertex needs two digits."""
    verts = list(vertices)
    sep = "." if any(v > 9 for v in verts) else ""
    return sep.join(str(v) for v in verts)


def _vertex_simplex(vertices: tuple[int, ...]) -> Simplex:
    faces: tuple[str | None, ...] = ()
    if len(vertices) > 1:
        faces = tuple(simplex_id(vertices[:j] + vertices[j + 1 :]) for j in range(len(vertices)))
    return Simplex(id=simplex_id(vertices), dim=len(vertices) - 1, faces=faces, vertices=vertices)


def simplices_of_standard(n: int, skip: Iterable[tuple[int, ...]] = ()) -> dict[str, Simplex]:
    omitted = set(skip)
    out: dict[str, Simplex] = {}
    for size in range(1, n + 2):
        for verts in itertools.combinations(range(n + 1), size):
            if verts not in omitted:
                x = _vertex_simplex(verts)
                out[x.id] = x
    return out


def face_vertices(n: int, i: int) -> tuple[int, ...]:
    """Vertices of d^i, the face of Δ[n] missing vertex i."""
    return tuple(v for v in range(n + 1) if v != i)


@functools.lru_cache(maxsize=None)
def build_complex(kind: ComplexKind, n: int, i: int | None = None) -> RegularSimplicialSet:
    """Δ[n], ∂Δ[n] or the horn Λ^i[n], simplices named by their vertex lists."""
    if n < 0:
        raise BadIndex(f"dimension must be ≥ 0, got {n}")
    top = tuple(range(n + 1))
    if kind == "standard":
        return RegularSimplicialSet(name=f"Δ[{n}]", simplices=simplices_of_standard(n))
    if kind == "boundary":
        return RegularSimplicialSet(name=f"∂Δ[{n}]", simplices=simplices_of_standard(n, [top]))
    if kind == "horn":
        if i is None or not 0 <= i <= n or n < 1:
            raise BadIndex(f"horn Λ^{i}[{n}] needs n ≥ 1 and 0 ≤ i ≤ n")
        skip = [top, face_vertices(n, i)]
        return RegularSimplicialSet(name=f"Λ^{i}[{n}]", simplices=simplices_of_standard(n, skip))
    raise BadIndex(f"unknown complex kind {kind!r}")


def simplicial_from_spec(name: str, entries: Iterable[Mapping[str, Any]]) -> RegularSimplicialSet:
    """Build a simplicial set from explicit face tables (degenerate faces as None)."""
    simplices: dict[str, Simplex] = {}
    for entry in entries:
        sid, dim = str(entry["id"]), int(entry["dim"])
        faces = tuple(entry.get("faces") or ())
        if sid in simplices:
            raise MalformedInput(f"duplicate simplex id {sid!r}")
        if dim < 0:
            raise GradingViolation(f"simplex {sid!r} has negative dimension")
        if dim == 0 and faces:
            raise GradingViolation(f"vertex {sid!r} cannot have faces")
        if dim > 0 and len(faces) != dim + 1:
            raise MalformedInput(f"simplex {sid!r} of dimension {dim} needs {dim + 1} faces")
        simplices[sid] = Simplex(id=sid, dim=dim, faces=faces)
    for x in simplices.values():
        for f in x.faces:
            if f is None:
                continue
            if f not in simplices:
                raise UnknownBasisId(f"face {f!r} of {x.id!r} is not a simplex")
            if simplices[f].dim != x.dim - 1:
                raise GradingViolation(f"face {f!r} of {x.id!r} has the wrong dimension")
    return RegularSimplicialSet(name=name, simplices=simplices)


def simplicial_to_dict(S: RegularSimplicialSet) -> dict[str, Any]:
    return {
        "simplices": [
            {"id": x.id, "dim": x.dim, "faces": list(x.faces)}
            for x in (S.simplices[i] for i in S.ids())
        ]
    }


def iterated_face(S: RegularSimplicialSet, simplex_id: str, seq: Sequence[int]) -> str | None:
    """d_{i_1} ⋯ d_{i_k} x, applying d_{i_k} first; None once degenerate."""
    cur: str | None = simplex_id
    for j in reversed(seq):
        if cur is None:
            return None
        cur = S.face(cur, j)
    return cur


def check_simplicial_identities(S: RegularSimplicialSet) -> list[dict[str, Any]]:
    """d_i d_j x = d_{j-1} d_i x for i < j wherever both sides are nondegenerate."""
    violations: list[dict[str, Any]] = []
    for sid in S.ids():
        x = S.simplex(sid)
        if x.dim < 2:
            continue
        for i, j in itertools.combinations(range(x.dim + 1), 2):
            dj, di = x.faces[j], x.faces[i]
            if dj is None or di is None:
                continue
            lhs, rhs = S.face(dj, i), S.face(di, j - 1)
            if lhs is not None and rhs is not None and lhs != rhs:
                violations.append({"simplex": sid, "i": i, "j": j, "lhs": lhs, "rhs": rhs})
    return violations


def regularity_witness(S: RegularSimplicialSet) -> dict[str, Any] | None:
    """Two index sequences of the same length with the same nondegenerate face."""
    for sid in S.ids():
        x = S.simplex(sid)
        for k in range(1, x.dim + 1):
            seen: dict[str, tuple[int, ...]] = {}
            for seq in itertools.combinations(range(x.dim + 1), k):
                image = iterated_face(S, sid, seq)
                if image is None:
                    continue
                if image in seen:
                    return {"simplex": sid, "first": list(seen[image]), "second": list(seq), "face": image}
                seen[image] = seq
    return None


def check_regular(S: RegularSimplicialSet) -> bool:
    return regularity_witness(S) is None


def chains_of(S: RegularSimplicialSet) -> AugmentedDirectedComplex:
    """C_•(S): ∂x = Σ (-1)^j d_j x over nondegenerate faces, e = 1 on vertices."""
    if S._chains is not None:
        return S._chains
    basis = [(x.id, x.dim) for x in S.simplices.values()]
    diff: dict[str, dict[str, int]] = {}
    for x in S.simplices.values():
        if x.dim == 0:
            continue
        coeffs: dict[str, int] = {}
        for j, f in enumerate(x.faces):
            if f is not None:
                coeffs[f] = coeffs.get(f, 0) + (-1) ** j
        diff[x.id] = coeffs
    aug = {x.id: 1 for x in S.simplices.values() if x.dim == 0}
    S._chains = validate_adc(S.name, basis, diff, aug)
    logger.debug("built chain complex of %s", S.name)
    return S._chains


def oriental(n: int) -> tuple[AugmentedDirectedComplex, Cell]:
    """C_•(Δ[n]) with its top cell i_n."""
    S = build_complex("standard", n)
    K = chains_of(S)
    top = simplex_id(range(n + 1))
    return K, Cell(chain=K.chain_of_ids(top), dim=n)


def letter(j: int) -> str:
    """σ(j): p for even indices, i for odd ones."""
    return "p" if j % 2 == 0 else "i"


def bar(word: str) -> str:
    return word.translate(str.maketrans("ip", "pi"))


def signature_of(seq: Iterable[int]) -> str:
    return "".join(letter(j) for j in seq)


def alternating_word(start: str, length: int) -> str:
    """s_i^k or s_p^k: the alternating word of the given length."""
    if start not in LETTERS:
        raise MalformedInput(f"signature letters are 'i' and 'p', got {start!r}")
    other = bar(start)
    return "".join(start if j % 2 == 0 else other for j in range(length))


def _check_word(word: str) -> None:
    bad = set(word) - set(LETTERS)
    if bad:
        raise MalformedInput(f"signature words use only 'i' and 'p', got {word!r}")


def d_s(S: RegularSimplicialSet, simplex_id: str, word: str) -> Chain:
    """Sum of d_{i_1}⋯d_{i_k} x over increasing sequences of signature ``word``."""
    _check_word(word)
    x = S.simplex(simplex_id)
    if len(word) > x.dim:
        raise WordTooLong(f"word {word!r} is longer than dim {simplex_id} = {x.dim}")
    K = chains_of(S)
    if not word:
        return K.chain_of_ids(simplex_id)
    hits: list[str] = []
    for seq in itertools.combinations(range(x.dim + 1), len(word)):
        if signature_of(seq) != word:
            continue
        image = iterated_face(S, simplex_id, seq)
        if image is not None:
            hits.append(image)
    return Chain((K.element(h), 1) for h in hits)


def apply_word(S: RegularSimplicialSet, x: GroupElement, word: str) -> GroupElement:
    """Linear extension of d_s to a combination of simplices."""
    return element_sum(c * d_s(S, b.id, word) for b, c in x.items())


def face_formula(S: RegularSimplicialSet, simplex_id: str, k: int, sign: str) -> Chain:
    """d_k^-(x) = d_{s_i^{n-k}}(x) and d_k^+(x) = d_{s_p^{n-k}}(x)."""
    alpha = check_sign(sign)
    n = S.simplex(simplex_id).dim
    if not 0 <= k <= n:
        raise BadIndex(f"k must lie in [0, {n}], got {k}")
    start = "i" if alpha == "-" else "p"
    return d_s(S, simplex_id, alternating_word(start, n - k))


def leibniz_check(S: RegularSimplicialSet, simplex_id: str, word: str) -> bool:
    """d_p d_s = Σ d_{s1·σ(l(s1))·s2} and d_i d_s = Σ d_{s1·σ̄(l(s1))·s2}."""
    inner = d_s(S, simplex_id, word)
    for outer in LETTERS:
        lhs = apply_word(S, inner, outer)
        pieces = []
        for cut in range(len(word) + 1):
            mid = letter(cut) if outer == "p" else bar(letter(cut))
            pieces.append(d_s(S, simplex_id, word[:cut] + mid + word[cut:]))
        if lhs != chain_sum(pieces):
            return False
    return True


def deletion_sequence(vertices: Sequence[int], n: int) -> tuple[int, ...]:
    """Decreasing indices (k_1 ≥ … ≥ k_l) with vertices = d^{k_1}⋯d^{k_l} of Δ[n]."""
    deleted = sorted(set(range(n + 1)) - set(vertices))
    l = len(deleted)
    return tuple(deleted[l - j] - (l - j) for j in range(1, l + 1))


def vertices_of(simplex: str | Simplex) -> tuple[int, ...]:
    """Vertex tuple of a simplex of a standard complex."""
    if isinstance(simplex, Simplex) and simplex.vertices is not None:
        return simplex.vertices
    text = simplex.id if isinstance(simplex, Simplex) else simplex
    parts = text.split(".") if "." in text else list(text)
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise MalformedInput(f"{text!r} does not name a simplex by its vertices") from None
