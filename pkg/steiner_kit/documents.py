"""JSON documents for complexes, chains, tables, trees and morphisms.

Every document is a frozen pydantic model; validation errors surface as
MalformedInput so callers only deal with library errors.
"""

from __future__ import annotations

from collections.abc import Mapping
from typing import Any, TypeVar

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError

from .adc import AugmentedDirectedComplex, SteinerTable, adc_to_dict, validate_adc
from .algebra import Chain
from .decomposition import Compose, ExpressionTree, Generator, Identity, Variable
from .errors import MalformedInput
from .morphisms import AdcMorphism, validate_morphism
from .omega import check_table
from .simplicial import RegularSimplicialSet, simplicial_from_spec

Model = TypeVar("Model", bound=BaseModel)


class _Document(BaseModel):
    """Frozen base model that rejects unknown fields."""

    model_config = ConfigDict(frozen=True, extra="forbid")


class BasisEntry(_Document):
    id: str
    dim: int


class AdcDocument(_Document):
    """JSON form of an augmented directed complex."""

    name: str | None = None
    basis: list[BasisEntry]
    d: dict[str, dict[str, int]] = Field(default_factory=dict)
    e: dict[str, int] = Field(default_factory=dict)

    def build(self, fallback_name: str = "K") -> AugmentedDirectedComplex:
        return validate_adc(self.name or fallback_name, [(b.id, b.dim) for b in self.basis], self.d, self.e)


class SimplexEntry(_Document):
    id: str
    dim: int
    faces: list[str | None] = Field(default_factory=list)


class SimplicialDocument(_Document):
    """JSON form of a simplicial set given by face tables."""

    name: str | None = None
    simplices: list[SimplexEntry]

    def build(self, fallback_name: str = "S") -> RegularSimplicialSet:
        return simplicial_from_spec(self.name or fallback_name, [s.model_dump() for s in self.simplices])


class TableDocument(_Document):
    """JSON form of a Steiner table, rows k = 0..dim on each side."""

    dim: int
    minus: list[dict[str, int]]
    plus: list[dict[str, int]]

    def build(self, K: AugmentedDirectedComplex) -> SteinerTable:
        return SteinerTable(
            dim=self.dim,
            minus=tuple(K.chain(r) for r in self.minus),
            plus=tuple(K.chain(r) for r in self.plus),
        )


class GeneratorNode(_Document):
    gen: str


class VariableNode(_Document):
    var: str


class UnitNode(_Document):
    unit: TreeNode


class ComposeNode(_Document):
    k: int = Field(ge=0)
    factors: list[TreeNode] = Field(min_length=1)


TreeNode = GeneratorNode | ComposeNode | UnitNode | VariableNode
UnitNode.model_rebuild()
ComposeNode.model_rebuild()

TREE_ADAPTER: TypeAdapter[TreeNode] = TypeAdapter(TreeNode)
CHAIN_ADAPTER: TypeAdapter[dict[str, int]] = TypeAdapter(dict[str, int])


class MorphismDocument(_Document):
    """Images of the source basis keyed by id, with both complexes named."""

    source: str
    target: str
    images: dict[str, dict[str, int]]

    def build(self, source: AugmentedDirectedComplex, target: AugmentedDirectedComplex) -> AdcMorphism:
        return validate_morphism(source, target, self.images)


def _describe(exc: ValidationError) -> str:
    first = exc.errors()[0]
    where = ".".join(str(p) for p in first.get("loc", ())) or "document"
    return f"{where}: {first.get('msg', 'invalid value')}"


def load_document(model: type[Model], payload: Any) -> Model:
    """Validate payload against model, raising MalformedInput."""
    try:
        return model.model_validate(payload)
    except ValidationError as exc:
        raise MalformedInput(f"invalid {model.__name__}: {_describe(exc)}") from exc


def parse_adc(payload: Any, fallback_name: str = "K") -> AugmentedDirectedComplex:
    """Return the complex described by payload."""
    return load_document(AdcDocument, payload).build(fallback_name)


def parse_simplicial(payload: Any, fallback_name: str = "S") -> RegularSimplicialSet:
    """Return the simplicial set described by payload."""
    return load_document(SimplicialDocument, payload).build(fallback_name)


def parse_chain(K: AugmentedDirectedComplex, payload: Any) -> Chain:
    """Return payload as a chain of K."""
    try:
        mapping = CHAIN_ADAPTER.validate_python(payload)
    except ValidationError as exc:
        raise MalformedInput(f"invalid chain: {_describe(exc)}") from exc
    return K.chain(mapping)


def parse_table(K: AugmentedDirectedComplex, payload: Any) -> SteinerTable:
    """Return the Steiner table in ``payload`` after checking it is coherent in K."""
    table = load_document(TableDocument, payload).build(K)
    check_table(K, table)
    return table


def is_table_payload(payload: Any) -> bool:
    """Return True when ``payload`` has the dim/minus/plus shape of a table document."""
    return isinstance(payload, dict) and {"dim", "minus", "plus"} <= set(payload)


def parse_tree(K: AugmentedDirectedComplex, payload: Any) -> ExpressionTree:
    """Return the expression tree in payload with generators resolved in K."""
    try:
        node = TREE_ADAPTER.validate_python(payload)
    except ValidationError as exc:
        raise MalformedInput(f"invalid tree: {_describe(exc)}") from exc
    return tree_from_node(K, node)


def tree_from_node(K: AugmentedDirectedComplex, node: TreeNode) -> ExpressionTree:
    if isinstance(node, GeneratorNode):
        return Generator(K.element(node.gen))
    if isinstance(node, VariableNode):
        return Variable(node.var)
    if isinstance(node, UnitNode):
        return Identity(tree_from_node(K, node.unit))
    return Compose(k=node.k, factors=tuple(tree_from_node(K, f) for f in node.factors))


def tree_to_dict(t: ExpressionTree) -> dict[str, Any]:
    """Return the JSON form read back by :func:`parse_tree`."""
    if isinstance(t, Generator):
        return {"gen": t.basis.id}
    if isinstance(t, Variable):
        return {"var": t.name}
    if isinstance(t, Identity):
        return {"unit": tree_to_dict(t.inner)}
    return {"k": t.k, "factors": [tree_to_dict(f) for f in t.factors]}


def adc_document(K: AugmentedDirectedComplex) -> dict[str, Any]:
    """The JSON form read back by :func:`parse_adc`."""
    return AdcDocument.model_validate({"name": K.name, **adc_to_dict(K)}).model_dump()


def parse_morphism(
    payload: Any, complexes: Mapping[str, AugmentedDirectedComplex]
) -> AdcMorphism:
    """Resolve source and target by name, then validate the images."""
    doc = load_document(MorphismDocument, payload)
    missing = [n for n in (doc.source, doc.target) if n not in complexes]
    if missing:
        raise MalformedInput(f"unknown complexes {', '.join(missing)}")
    return doc.build(complexes[doc.source], complexes[doc.target])
