"""R-parabolic data for a cocharacter: weight grading, P/L membership and c_lambda.

lambda(t) g lambda(t)^-1 scales entry (i, j) by t^(w_i - w_j), so the limit
at t -> 0 exists iff every entry with w_i < w_j vanishes, and the limit
keeps the entries with w_i = w_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Optional

import numpy as np

from chevcheck.algebra.chevalley import LieAlgebraOverField
from chevcheck.algebra.field import FiniteField
from chevcheck.algebra.group import GroupElement, identity
from chevcheck.algebra.rootsystem import Cocharacter
from chevcheck.utils.errors import FieldMismatchError


@dataclass(frozen=True)
class ParabolicSplit:
    in_p: bool
    levi_part: Optional[GroupElement]
    unipotent_ok: bool


@dataclass(frozen=True)
class ParabolicDatum:
    algebra: LieAlgebraOverField
    cochar: Cocharacter

    @cached_property
    def weights(self) -> tuple[int, ...]:
        rs = self.algebra.rootsys
        return (0,) * self.algebra.rank + tuple(rs.cochar_pairing(r, self.cochar) for r in rs.roots)

    @cached_property
    def _diff(self) -> np.ndarray:
        w = np.asarray(self.weights)
        return w[:, None] - w[None, :]

    @cached_property
    def order(self) -> list[int]:
        """Basis permutation sorting by decreasing weight."""
        return sorted(range(self.algebra.dim), key=lambda i: (-self.weights[i], i))

    def blocks(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i in self.order:
            out.setdefault(self.weights[i], []).append(i)
        return out

    def _nonzero(self, mat: Any) -> np.ndarray:
        field = self.algebra.field
        if isinstance(field, FiniteField):
            return mat.view(np.ndarray) != 0
        return np.vectorize(lambda v: not field.is_zero(v), otypes=[bool])(mat)

    def _check(self, g: GroupElement) -> None:
        if g.field != self.algebra.field:
            raise FieldMismatchError(f"{g.field.label} vs {self.algebra.field.label}")

    def in_p(self, g: GroupElement) -> bool:
        self._check(g)
        return not (self._nonzero(g.matrix) & (self._diff < 0)).any()

    def in_levi(self, g: GroupElement) -> bool:
        self._check(g)
        return not (self._nonzero(g.matrix) & (self._diff != 0)).any()

    def levi_part(self, g: GroupElement) -> Optional[GroupElement]:
        """c_lambda(g), or None when g is outside P_lambda."""
        if not self.in_p(g):
            return None
        field = self.algebra.field
        mat = g.matrix.copy()
        mask = self._diff != 0
        if isinstance(field, FiniteField):
            mat[mask] = 0
        else:
            zero = field.zero().value
            for i, j in zip(*np.nonzero(mask)):
                mat[i, j] = zero
        return GroupElement(self.algebra, mat, (f"c({g.label})",))

    def in_unipotent_radical(self, g: GroupElement) -> bool:
        c = self.levi_part(g)
        return c is not None and c.is_identity()

    def split(self, g: GroupElement) -> ParabolicSplit:
        c = self.levi_part(g)
        if c is None:
            return ParabolicSplit(False, None, False)
        rest = self.levi_part(g * c.inverse())
        ok = rest is not None and rest == identity(self.algebra)
        return ParabolicSplit(True, c, ok)

    def levi_mask(self, stack: Any) -> np.ndarray:
        """Which matrices of a finite-field stack lie in L_lambda."""
        off = self._diff != 0
        raw = stack.view(np.ndarray)[:, off]
        return ~(raw != 0).any(axis=1)

    def positive_roots(self) -> list[tuple[int, ...]]:
        rs = self.algebra.rootsys
        return [r for r in rs.roots if rs.cochar_pairing(r, self.cochar) > 0]


def parabolic_split(datum: ParabolicDatum, g: GroupElement) -> ParabolicSplit:
    return datum.split(g)
