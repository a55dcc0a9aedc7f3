"""Chevalley Z-form of the Lie algebra, its reduction to a field, and adjoint data.

Basis order: h_1..h_r, then e_g for the positive roots, then e_g for the
negative roots in the same order. Structure constants come from extraspecial
pairs with sign +1, extended by the usual identities on root triples and
quadruples; N_{-a,-b} = -N_{a,b}.
"""

from __future__ import annotations

import functools
import logging
import math
from fractions import Fraction
from typing import Any, Iterable, Union

import numpy as np

from chevcheck.algebra.field import Field, FieldElement, FiniteField
from chevcheck.algebra.rootsystem import Root, RootSystem
from chevcheck.utils.errors import (
    ConstructionError,
    DimensionMismatchError,
    FieldMismatchError,
)
from chevcheck.utils.formatting import root_label, vector_label

logger = logging.getLogger(__name__)


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _sparse_rows(mat: np.ndarray, stack: np.ndarray) -> np.ndarray:
    """out[r] = sum_c mat[r, c] * stack[c], visiting only the nonzero entries of mat."""
    out = np.zeros((mat.shape[0],) + stack.shape[1:], dtype=stack.dtype)
    rows, cols = np.nonzero(mat)
    if not len(rows):
        return out
    terms = mat[rows, cols].reshape((-1,) + (1,) * (stack.ndim - 1)) * stack[cols]
    starts = np.flatnonzero(np.r_[True, rows[1:] != rows[:-1]])
    out[rows[starts]] = np.add.reduceat(terms, starts, axis=0)
    return out


def _neg(a: Root) -> Root:
    return tuple(-x for x in a)


def _structure_constants(rs: RootSystem) -> dict[tuple[Root, Root], int]:
    positives = rs.positive_roots
    order = {r: i for i, r in enumerate(positives)}
    special: dict[tuple[Root, Root], int] = {}
    memo: dict[tuple[Root, Root], Fraction] = {}

    def n(a: Root, b: Root) -> Fraction:
        key = (a, b)
        if key in memo:
            return memo[key]
        s = _add(a, b)
        if not rs.is_root(s):
            return Fraction(0)
        a_pos, b_pos = rs.is_positive(a), rs.is_positive(b)
        if a_pos and b_pos:
            val = Fraction(special[(a, b)] if order[a] < order[b] else -special[(b, a)])
        elif not a_pos and not b_pos:
            val = -n(_neg(a), _neg(b))
        else:
            # a + b + c = 0: N_ab/|c|^2 = N_bc/|a|^2 = N_ca/|b|^2
            c = _neg(s)
            if rs.is_positive(b) == rs.is_positive(c):
                val = Fraction(rs.norm(c), rs.norm(a)) * n(b, c)
            else:
                val = Fraction(rs.norm(c), rs.norm(b)) * n(c, a)
        memo[key] = val
        return val

    for xi in positives:
        pairs = []
        for r in positives:
            s = tuple(x - y for x, y in zip(xi, r))
            if rs.is_root(s) and rs.is_positive(s) and order[r] < order[s]:
                pairs.append((r, s))
        if not pairs:
            continue
        r1, s1 = pairs[0]
        p = 0
        while rs.is_root(tuple(x - (p + 1) * y for x, y in zip(s1, r1))):
            p += 1
        special[(r1, s1)] = p + 1
        for r, s in pairs[1:]:
            total = Fraction(0)
            s_minus = tuple(x - y for x, y in zip(s, r1))
            if rs.is_root(s_minus):
                total += n(s, _neg(r1)) * n(r, _neg(s1)) / rs.norm(s_minus)
            r_minus = tuple(x - y for x, y in zip(r, r1))
            if rs.is_root(r_minus):
                total += n(_neg(r1), r) * n(s, _neg(s1)) / rs.norm(r_minus)
            val = Fraction(rs.norm(xi), special[(r1, s1)]) * total
            if val.denominator != 1:
                raise ConstructionError(f"non-integral N for {root_label(r)}, {root_label(s)}: {val}")
            special[(r, s)] = int(val)

    table: dict[tuple[Root, Root], int] = {}
    for a in rs.roots:
        for b in rs.roots:
            if not rs.is_root(_add(a, b)):
                continue
            val = n(a, b)
            if val.denominator != 1 or abs(val) not in (1, 2, 3):
                raise ConstructionError(f"bad N for {root_label(a)}, {root_label(b)}: {val}")
            table[(a, b)] = int(val)
    return table


class ChevalleyForm:
    """Integer structure constants and adjoint matrices over Z."""

    def __init__(self, rootsys: RootSystem) -> None:
        self.rootsys = rootsys
        self.rank = rootsys.rank
        self.dim = rootsys.rank + len(rootsys.roots)
        self.constants = _structure_constants(rootsys)
        self.tensor = self._build_tensor()
        # ad_tensor[i] is the matrix of ad b_i; column j holds [b_i, b_j]
        self.ad_tensor = np.ascontiguousarray(self.tensor.transpose(0, 2, 1))
        self._check_antisymmetry()
        self.jacobi_verified = False
        self.verify_jacobi()
        self._divided: dict[Root, tuple[np.ndarray, ...]] = {}
        self._reduced: dict[Field, LieAlgebraOverField] = {}

    # basis

    def root_index(self, root: Iterable[int]) -> int:
        return self.rank + self.rootsys.index(root)

    @property
    def basis_labels(self) -> list[str]:
        return [f"h{i + 1}" for i in range(self.rank)] + [
            f"e[{root_label(r)}]" for r in self.rootsys.roots
        ]

    def _build_tensor(self) -> np.ndarray:
        rs, r = self.rootsys, self.rank
        c = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
        for gi, g in enumerate(rs.roots):
            bi = r + gi
            for i, val in enumerate(rs.simple_pairings(g)):
                c[i, bi, bi] = val
                c[bi, i, bi] = -val
            c[bi, self.root_index(_neg(g)), :r] = rs.coroot(g).coeffs
        for (a, b), val in self.constants.items():
            c[self.root_index(a), self.root_index(b), self.root_index(_add(a, b))] = val
        return c

    def _check_antisymmetry(self) -> None:
        bad = np.argwhere(self.tensor + self.tensor.transpose(1, 0, 2))
        if len(bad):
            i, j, _ = bad[0]
            labels = self.basis_labels
            raise ConstructionError(f"bracket not alternating on ({labels[i]}, {labels[j]})")

    def verify_jacobi(self) -> None:
        """ad b_i is a derivation for every i, one slice of the tensor at a time."""
        c = self.tensor.astype(np.int32)
        by_last = np.ascontiguousarray(c.transpose(2, 0, 1))
        for i in range(self.dim):
            nested = _sparse_rows(c[i], c)  # [[b_i, b_j], b_k]
            outer = _sparse_rows(c[i].T, by_last).transpose(1, 2, 0)  # [b_i, [b_j, b_k]]
            residual = outer - nested + nested.transpose(1, 0, 2)
            bad = np.argwhere(residual)
            if len(bad):
                j, k, _ = bad[0]
                labels = self.basis_labels
                raise ConstructionError(f"Jacobi fails on ({labels[i]}, {labels[j]}, {labels[k]})")
        self.jacobi_verified = True

    # integer data

    def structure_constant(self, a: Root, b: Root) -> int:
        return self.constants.get((self.rootsys.check(a), self.rootsys.check(b)), 0)

    def bracket_ints(self, x: Any, y: Any) -> np.ndarray:
        return np.tensordot(np.tensordot(np.asarray(x), self.tensor, axes=(0, 0)), np.asarray(y), axes=(0, 0))

    def ad_matrix(self, v: Union[int, Iterable[int]]) -> np.ndarray:
        if isinstance(v, (int, np.integer)):
            return self.ad_tensor[int(v)].copy()
        return np.tensordot(np.asarray(v, dtype=np.int64), self.ad_tensor, axes=(0, 0))

    def divided_powers(self, root: Root) -> tuple[np.ndarray, ...]:
        """(ad e_g)^n / n! for n = 0, 1, ... up to the last nonzero one."""
        root = self.rootsys.check(root)
        if root not in self._divided:
            ad = self.ad_matrix(self.root_index(root))
            out = [np.eye(self.dim, dtype=np.int64)]
            power = out[0]
            n = 1
            while True:
                power = power @ ad
                if not power.any():
                    break
                fact = math.factorial(n)
                if (power % fact).any():
                    raise ConstructionError(
                        f"(ad e[{root_label(root)}])^{n} is not divisible by {n}!"
                    )
                out.append(power // fact)
                n += 1
            self._divided[root] = tuple(out)
        return self._divided[root]

    def nilpotency_bound(self, root: Root) -> int:
        return len(self.divided_powers(root))

    def integer_root_element(self, root: Root, t: int = 1) -> np.ndarray:
        """Ad x_g(t) as an integer matrix."""
        acc = np.zeros((self.dim, self.dim), dtype=np.int64)
        for n, x in enumerate(self.divided_powers(root)):
            acc += t**n * x
        return acc

    def integer_weyl_matrix(self, root: Root) -> np.ndarray:
        """Ad of x_g(1) x_-g(-1) x_g(1) over Z; a signed permutation on root vectors."""
        x = self.integer_root_element(root)
        return x @ self.integer_root_element(_neg(self.rootsys.check(root)), -1) @ x

    def constants_dump(self) -> dict[str, int]:
        return {
            f"{root_label(a)},{root_label(b)}": n
            for (a, b), n in sorted(
                self.constants.items(),
                key=lambda kv: (self.rootsys.index(kv[0][0]), self.rootsys.index(kv[0][1])),
            )
        }

    def reduce(self, field: Field) -> "LieAlgebraOverField":
        if field not in self._reduced:
            self._reduced[field] = LieAlgebraOverField(self, field)
        return self._reduced[field]


class LieVector:
    """Coefficient vector over the Chevalley basis, tagged with its algebra."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "LieAlgebraOverField", coeffs: Any) -> None:
        if len(coeffs) != algebra.dim:
            raise DimensionMismatchError(f"vector of length {len(coeffs)} in dimension {algebra.dim}")
        self.algebra = algebra
        self.coeffs = coeffs

    @property
    def field(self) -> Field:
        return self.algebra.field

    def _same(self, other: "LieVector") -> None:
        if other.algebra is not self.algebra:
            raise FieldMismatchError(f"{other.algebra.label} vs {self.algebra.label}")

    def __add__(self, other: "LieVector") -> "LieVector":
        self._same(other)
        return LieVector(self.algebra, self.field.mat_add(self.coeffs, other.coeffs))

    def __sub__(self, other: "LieVector") -> "LieVector":
        self._same(other)
        minus = self.field.scale(self.field.from_int(-1).value, other.coeffs)
        return LieVector(self.algebra, self.field.mat_add(self.coeffs, minus))

    def __rmul__(self, c: FieldElement) -> "LieVector":
        if isinstance(c, int):
            c = self.field.from_int(c)
        if c.field != self.field:
            raise FieldMismatchError(f"{c.field.label} vs {self.field.label}")
        return LieVector(self.algebra, self.field.scale(c.value, self.coeffs))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieVector) or other.algebra is not self.algebra:
            return False
        return self.field.mat_equal(self.coeffs, other.coeffs)

    def __hash__(self) -> int:
        return hash(self.field.key(self.coeffs))

    def is_zero(self) -> bool:
        return all(self.field.is_zero(v) for v in self.coeffs)

    def to_list(self) -> list:
        if isinstance(self.field, FiniteField):
            return [int(v) for v in self.field.to_ints(self.coeffs)]
        return [self.field.text(v) for v in self.coeffs]

    @property
    def label(self) -> str:
        if isinstance(self.field, FiniteField):
            return vector_label(self.algebra.basis_labels, self.to_list())
        terms = [
            f"({self.field.text(v)})*{lab}"
            for v, lab in zip(self.coeffs, self.algebra.basis_labels)
            if not self.field.is_zero(v)
        ]
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"LieVector({self.label})"


class LieAlgebraOverField:
    """The Chevalley algebra with structure constants reduced into a field."""

    def __init__(self, form: ChevalleyForm, field: Field) -> None:
        self.form = form
        self.field = field
        self.dim = form.dim
        self.ad_tensor = field.from_ints(form.ad_tensor)
        self._divided: dict[Root, tuple[Any, ...]] = {}

    @property
    def rootsys(self) -> RootSystem:
        return self.form.rootsys

    @property
    def rank(self) -> int:
        return self.form.rank

    @property
    def label(self) -> str:
        return f"Lie {self.rootsys.label} over {self.field.label}"

    @property
    def basis_labels(self) -> list[str]:
        return self.form.basis_labels

    def root_index(self, root: Iterable[int]) -> int:
        return self.form.root_index(root)

    # vectors

    def vector(self, coeffs: Iterable[Any]) -> LieVector:
        values = list(coeffs)
        if values and all(isinstance(v, FieldElement) for v in values):
            arr = self.field.zeros(len(values))
            for i, v in enumerate(values):
                if v.field != self.field:
                    raise FieldMismatchError(f"{v.field.label} vs {self.field.label}")
                arr[i] = v.value
            return LieVector(self, arr)
        return LieVector(self, self.field.from_ints([int(v) for v in values]))

    def zero(self) -> LieVector:
        return LieVector(self, self.field.zeros(self.dim))

    def basis(self, i: int) -> LieVector:
        coeffs = [0] * self.dim
        coeffs[i] = 1
        return self.vector(coeffs)

    def e(self, root: Iterable[int]) -> LieVector:
        return self.basis(self.root_index(root))

    def h(self, i: int) -> LieVector:
        """h_i, 1-based."""
        return self.basis(i - 1)

    def coroot_vector(self, root: Iterable[int]) -> LieVector:
        """h_g = [e_g, e_-g] in the h_i basis."""
        coeffs = list(self.rootsys.coroot(tuple(root)).coeffs) + [0] * (self.dim - self.rank)
        return self.vector(coeffs)

    # brackets

    def ad(self, v: Union[int, LieVector]) -> Any:
        if isinstance(v, (int, np.integer)):
            return self.ad_tensor[int(v)]
        if v.algebra is not self:
            raise FieldMismatchError(f"{v.algebra.label} vs {self.label}")
        acc = self.field.zeros((self.dim, self.dim))
        for i, c in enumerate(v.coeffs):
            if not self.field.is_zero(c):
                acc = self.field.mat_add(acc, self.field.scale(c, self.ad_tensor[i]))
        return acc

    def apply(self, mat: Any, v: LieVector) -> LieVector:
        if v.algebra is not self:
            raise FieldMismatchError(f"{v.algebra.label} vs {self.label}")
        out = self.field.matmul(mat, v.coeffs.reshape(self.dim, 1))
        return LieVector(self, out.reshape(self.dim))

    def bracket(self, x: LieVector, y: LieVector) -> LieVector:
        return self.apply(self.ad(x), y)

    def divided_powers(self, root: Root) -> tuple[Any, ...]:
        root = self.rootsys.check(root)
        if root not in self._divided:
            self._divided[root] = tuple(
                self.field.from_ints(x) for x in divided_exponential(self.form, root)
            )
        return self._divided[root]


@functools.lru_cache(maxsize=16)
def chevalley_build(rootsys: RootSystem) -> ChevalleyForm:
    form = ChevalleyForm(rootsys)
    logger.debug(
        "Chevalley form %s: dim %d, %d structure constants, jacobi_verified=%s",
        rootsys.label,
        form.dim,
        len(form.constants),
        form.jacobi_verified,
    )
    return form


def lie_reduce(form: ChevalleyForm, field: Field) -> LieAlgebraOverField:
    return form.reduce(field)


def divided_exponential(form: ChevalleyForm, root: Root) -> tuple[np.ndarray, ...]:
    """Integer (ad e_g)^n / n!, the coefficients of x_g(t) = sum_n t^n X_n."""
    return form.divided_powers(root)

