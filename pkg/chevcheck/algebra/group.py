"""Elements of the adjoint Chevalley group, as matrices on the Lie algebra."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Union

from chevcheck.algebra.chevalley import LieAlgebraOverField, LieVector
from chevcheck.algebra.field import FieldElement
from chevcheck.algebra.rootsystem import Cocharacter, Root
from chevcheck.utils.errors import (
    DimensionMismatchError,
    FieldMismatchError,
    FieldZeroDivisionError,
)
from chevcheck.utils.formatting import root_label

Scalar = Union[FieldElement, int]


@dataclass(frozen=True, eq=False)
class GroupElement:
    algebra: LieAlgebraOverField
    matrix: Any
    word: tuple[str, ...] = ()

    @property
    def field(self) -> Any:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def key(self) -> bytes:
        return self.field.key(self.matrix)

    @property
    def label(self) -> str:
        return "*".join(self.word) if self.word else "g"

    def _check(self, other: "GroupElement") -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"{other.field.label} vs {self.field.label}")
        if other.dim != self.dim:
            raise DimensionMismatchError(f"dimension {other.dim} vs {self.dim}")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(
            self.algebra, self.field.matmul(self.matrix, other.matrix), self.word + other.word
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement) or other.field != self.field:
            return False
        return self.field.mat_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash(self.key)

    def __pow__(self, n: int) -> "GroupElement":
        base = self if n >= 0 else self.inverse()
        out = identity(self.algebra)
        for _ in range(abs(n)):
            out = out * base
        return out

    def inverse(self) -> "GroupElement":
        word = tuple(f"({w})^-1" for w in reversed(self.word))
        return GroupElement(self.algebra, self.field.inverse(self.matrix), word)

    def conj(self, h: "GroupElement") -> "GroupElement":
        """self * h * self^-1."""
        return self * h * self.inverse()

    def commutator(self, h: "GroupElement") -> "GroupElement":
        return self * h * self.inverse() * h.inverse()

    def ad_apply(self, v: LieVector) -> LieVector:
        if v.field != self.field:
            raise FieldMismatchError(f"{v.field.label} vs {self.field.label}")
        return self.algebra.apply(self.matrix, v)

    def is_identity(self) -> bool:
        return self.field.mat_equal(self.matrix, self.field.identity(self.dim))

    def entries(self) -> list[Any]:
        return [v for row in self.matrix for v in row]

    def renamed(self, name: str) -> "GroupElement":
        return GroupElement(self.algebra, self.matrix, (name,))

    def __repr__(self) -> str:
        return f"GroupElement({self.label} over {self.field.label})"


def _scalar(algebra: LieAlgebraOverField, a: Scalar) -> FieldElement:
    if isinstance(a, FieldElement):
        if a.field != algebra.field:
            raise FieldMismatchError(f"{a.field.label} vs {algebra.field.label}")
        return a
    return algebra.field.from_int(int(a))


def identity(algebra: LieAlgebraOverField) -> GroupElement:
    return GroupElement(algebra, algebra.field.identity(algebra.dim), ())


def root_element(algebra: LieAlgebraOverField, root: Root, a: Scalar) -> GroupElement:
    """x_g(a) = sum_n a^n (ad e_g)^n / n!."""
    field = algebra.field
    a = _scalar(algebra, a)
    powers = algebra.divided_powers(root)
    acc = powers[0]
    an = a
    for x in powers[1:]:
        if an.is_zero():
            break
        acc = field.mat_add(acc, field.scale(an.value, x))
        an = an * a
    return GroupElement(algebra, acc, (f"x[{root_label(root)}]({a})",))


def torus_element(algebra: LieAlgebraOverField, lam: Cocharacter, a: Scalar) -> GroupElement:
    """lambda(a): a^<g, lambda> on e_g, identity on the Cartan part."""
    field = algebra.field
    a = _scalar(algebra, a)
    if a.is_zero():
        raise FieldZeroDivisionError("torus elements need a nonzero parameter")
    mat = field.identity(algebra.dim)
    rs = algebra.rootsys
    for root in rs.roots:
        i = algebra.root_index(root)
        mat[i, i] = (a ** rs.cochar_pairing(root, lam)).value
    return GroupElement(algebra, mat, (f"{lam.label}({a})",))


def weyl_rep(algebra: LieAlgebraOverField, root: Root) -> GroupElement:
    """s_g = x_g(1) x_-g(-1) x_g(1)."""
    neg = tuple(-c for c in root)
    one = algebra.field.one()
    g = root_element(algebra, root, one) * root_element(algebra, neg, -one) * root_element(
        algebra, root, one
    )
    return g.renamed(f"s[{root_label(root)}]")
