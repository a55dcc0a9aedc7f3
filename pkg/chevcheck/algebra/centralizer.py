"""Subspaces of the Lie algebra, fixed spaces, Lie centralizers and separability probes."""

from __future__ import annotations

import logging
from typing import Any, Iterable, Optional, Sequence

from chevcheck.algebra.chevalley import LieAlgebraOverField, LieVector
from chevcheck.algebra.field import Field, FiniteField
from chevcheck.algebra.group import GroupElement
from chevcheck.algebra.linalg import null_space, pivot_columns, row_reduce, vstack
from chevcheck.models.separability import SeparabilityReport
from chevcheck.utils.errors import (
    AmbientMismatchError,
    DeclarationError,
    FieldMismatchError,
    NotComplementaryError,
)

logger = logging.getLogger(__name__)


class Subspace:
    """Row space of `basis`, kept in reduced echelon form."""

    def __init__(self, field: Field, ambient: int, rows: Any) -> None:
        self.field = field
        self.ambient = ambient
        self.basis = row_reduce(field, rows)

    @classmethod
    def span(cls, algebra: LieAlgebraOverField, vectors: Iterable[LieVector]) -> "Subspace":
        vectors = list(vectors)
        for v in vectors:
            if v.field != algebra.field:
                raise FieldMismatchError(f"{v.field.label} vs {algebra.field.label}")
        rows = vstack(algebra.field, [v.coeffs.reshape(1, algebra.dim) for v in vectors], algebra.dim)
        return cls(algebra.field, algebra.dim, rows)

    @classmethod
    def whole(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, field.identity(ambient))

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, field.zeros((0, ambient)))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def _same(self, other: "Subspace") -> None:
        if other.ambient != self.ambient or other.field != self.field:
            raise AmbientMismatchError(
                f"subspaces of {self.field.label}^{self.ambient} and {other.field.label}^{other.ambient}"
            )

    def annihilator(self) -> "Subspace":
        return Subspace(self.field, self.ambient, null_space(self.field, self.basis, self.ambient))

    def contains(self, v: LieVector) -> bool:
        if len(v.coeffs) != self.ambient or v.field != self.field:
            raise AmbientMismatchError("vector is not in the ambient space")
        rows = vstack(self.field, [self.basis, v.coeffs.reshape(1, self.ambient)], self.ambient)
        return row_reduce(self.field, rows).shape[0] == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        self._same(other)
        return self.sum(other).dim == self.dim

    def sum(self, other: "Subspace") -> "Subspace":
        self._same(other)
        return Subspace(self.field, self.ambient, vstack(self.field, [self.basis, other.basis], self.ambient))

    def intersect(self, other: "Subspace") -> "Subspace":
        self._same(other)
        return self.annihilator().sum(other.annihilator()).annihilator()

    def equals(self, other: "Subspace") -> bool:
        self._same(other)
        return self.dim == other.dim and self.field.mat_equal(self.basis, other.basis)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subspace) and other.ambient == self.ambient and self.equals(other)

    __hash__ = None  # type: ignore[assignment]

    def pivots(self) -> list[int]:
        return pivot_columns(self.field, self.basis)

    def standard_complement(self) -> "Subspace":
        """Span of the coordinate vectors at the non-pivot columns."""
        free = [j for j in range(self.ambient) if j not in self.pivots()]
        ident = self.field.identity(self.ambient)
        return Subspace(self.field, self.ambient, ident[free] if free else self.field.zeros((0, self.ambient)))

    def vectors(self, algebra: LieAlgebraOverField) -> list[LieVector]:
        return [LieVector(algebra, self.basis[i].copy()) for i in range(self.dim)]

    def rows_as_lists(self) -> list[list[int]]:
        return [_row_list(self.field, row) for row in self.basis]

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} in {self.field.label}^{self.ambient})"


def _row_list(field: Field, row: Any) -> list:
    if isinstance(field, FiniteField):
        return [int(v) for v in field.to_ints(row)]
    return [field.text(v) for v in row]


def _check_gens(algebra: LieAlgebraOverField, gens: Sequence[GroupElement]) -> None:
    for g in gens:
        if g.field != algebra.field:
            raise FieldMismatchError(f"{g.field.label} vs {algebra.field.label}")


def lie_fixed_space(algebra: LieAlgebraOverField, gens: Sequence[GroupElement]) -> Subspace:
    """Intersection of ker(Ad g - 1) over the generators."""
    _check_gens(algebra, gens)
    field, n = algebra.field, algebra.dim
    minus_one = field.from_int(-1).value
    blocks = [field.mat_add(g.matrix, field.scale(minus_one, field.identity(n))) for g in gens]
    return Subspace(field, n, null_space(field, vstack(field, blocks, n), n))


def lie_centralizer(algebra: LieAlgebraOverField, xs: Sequence[LieVector]) -> Subspace:
    """Intersection of ker(ad x)."""
    field, n = algebra.field, algebra.dim
    blocks = [algebra.ad(x) for x in xs]
    return Subspace(field, n, null_space(field, vstack(field, blocks, n), n))


def separability_probe(
    algebra: LieAlgebraOverField,
    gens: Sequence[GroupElement],
    declared: Subspace,
    subgroup: str = "H",
    ambient: str = "G",
    within: Optional[Subspace] = None,
) -> SeparabilityReport:
    """Compare the fixed space of `gens` (inside `within`, if given) with a declared tangent space.

    Witnesses are the echelon rows of the computed space that leave the span
    of the declaration and the earlier witnesses.
    """
    computed = lie_fixed_space(algebra, gens)
    if within is not None:
        computed = computed.intersect(within)
    if not computed.contains_subspace(declared):
        raise DeclarationError(
            f"declared space (dim {declared.dim}) is not fixed by {subgroup}"
        )
    span = declared
    witnesses: list[LieVector] = []
    for v in computed.vectors(algebra):
        if not span.contains(v):
            witnesses.append(v)
            span = span.sum(Subspace.span(algebra, [v]))
    report = SeparabilityReport(
        subgroup=subgroup,
        ambient=ambient,
        dim_computed=computed.dim,
        dim_declared=declared.dim,
        separable=computed.dim == declared.dim,
        witnesses=tuple(tuple(w.to_list()) for w in witnesses),
        witness_labels=tuple(w.label for w in witnesses),
    )
    logger.info(
        "separability %s in %s: computed %d, declared %d",
        subgroup,
        ambient,
        report.dim_computed,
        report.dim_declared,
    )
    return report


def reductive_pair_check(
    algebra: LieAlgebraOverField,
    h_gens: Sequence[GroupElement],
    h_span: Subspace,
    complement: Optional[Subspace] = None,
) -> bool:
    """Is `complement` (default: the standard one) stable under Ad of every generator?"""
    _check_gens(algebra, h_gens)
    comp = complement if complement is not None else h_span.standard_complement()
    if h_span.dim + comp.dim != algebra.dim or h_span.sum(comp).dim != algebra.dim:
        raise NotComplementaryError(
            f"spans of dim {h_span.dim} and {comp.dim} are not complementary in dim {algebra.dim}"
        )
    for g in h_gens:
        for v in comp.vectors(algebra):
            if not comp.contains(g.ad_apply(v)):
                logger.info("complement not stable under %s", g.label)
                return False
    return True
