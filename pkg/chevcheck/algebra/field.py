"""Exact scalars: prime-power finite fields and rational function fields F_q(x).

Finite fields are thin descriptors over `galois` field classes. Rational
functions are reduced fractions of `galois.Poly` objects. Both kinds expose
the same scalar and matrix hooks so that group code never branches on the
field kind.
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from typing import Any, Union

import galois
import numpy as np

from chevcheck.utils.constants import MAX_FIELD_ORDER, RATFUNC_DEGREE_BOUND
from chevcheck.utils.errors import (
    DegreeOverflowError,
    FieldMismatchError,
    FieldTooLargeError,
    FieldZeroDivisionError,
    NotFiniteFieldError,
    NotPrimeError,
    UnsupportedFieldError,
)

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def _galois_field(p: int, m: int, modulus: tuple[int, ...]) -> type[galois.FieldArray]:
    if m == 1:
        return galois.GF(p)
    poly = galois.Poly(list(modulus), field=galois.GF(p))
    return galois.GF(p**m, irreducible_poly=poly)


@dataclass(frozen=True, eq=False)
class FieldElement:
    """A scalar tagged with its field; arithmetic refuses to mix fields."""

    field: "Field"
    value: Any

    def _coerce(self, other: Any) -> Any:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field.label} vs {other.field.label}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field.from_int(int(other)).value
        return NotImplemented

    def _wrap(self, value: Any) -> "FieldElement":
        return FieldElement(self.field, value)

    def __add__(self, other: Any) -> "FieldElement":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "FieldElement":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.sub(self.value, v))

    def __rsub__(self, other: Any) -> "FieldElement":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.sub(v, self.value))

    def __mul__(self, other: Any) -> "FieldElement":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "FieldElement":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.div(self.value, v))

    def __rtruediv__(self, other: Any) -> "FieldElement":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.div(v, self.value))

    def __neg__(self) -> "FieldElement":
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, n: int) -> "FieldElement":
        return self._wrap(self.field.power(self.value, int(n)))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.div(self.field.one().value, self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, np.integer)):
            other = self.field.from_int(int(other))
        if not isinstance(other, FieldElement) or other.field != self.field:
            return False
        return self.field.equal(self.value, other.value)

    def __hash__(self) -> int:
        return hash((self.field, self.field.text(self.value)))

    def __int__(self) -> int:
        if not isinstance(self.field, FiniteField):
            raise NotFiniteFieldError("only finite field elements have an integer representation")
        return int(self.value)

    def __str__(self) -> str:
        return self.field.text(self.value)

    def __repr__(self) -> str:
        return f"FieldElement({self.field.label}, {self.field.text(self.value)})"


@dataclass(frozen=True)
class FiniteField:
    p: int
    m: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.m

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def gf(self) -> type[galois.FieldArray]:
        return _galois_field(self.p, self.m, self.modulus)

    @property
    def label(self) -> str:
        return f"GF({self.order})"

    @property
    def is_finite(self) -> bool:
        return True

    # elements

    def element(self, value: int) -> FieldElement:
        """Element with integer representation `value` (polynomial basis, base p digits)."""
        return FieldElement(self, self.gf(int(value)))

    def from_int(self, n: int) -> FieldElement:
        return FieldElement(self, self.gf(n % self.p))

    def zero(self) -> FieldElement:
        return self.element(0)

    def one(self) -> FieldElement:
        return self.element(1)

    def primitive_element(self) -> FieldElement:
        return FieldElement(self, self.gf.primitive_element)

    def enumerate(self) -> list[FieldElement]:
        return [FieldElement(self, v) for v in self.gf.elements]

    def nonzero(self) -> list[FieldElement]:
        return self.enumerate()[1:]

    def cube_root_of_unity(self) -> FieldElement:
        if (self.order - 1) % 3:
            raise FieldMismatchError(f"{self.label} has no element of order 3")
        return self.primitive_element() ** ((self.order - 1) // 3)

    # scalar hooks

    def add(self, x: Any, y: Any) -> Any:
        return x + y

    def sub(self, x: Any, y: Any) -> Any:
        return x - y

    def mul(self, x: Any, y: Any) -> Any:
        return x * y

    def div(self, x: Any, y: Any) -> Any:
        if y == 0:
            raise FieldZeroDivisionError(f"division by zero in {self.label}")
        return x / y

    def neg(self, x: Any) -> Any:
        return -x

    def power(self, x: Any, n: int) -> Any:
        if n < 0 and x == 0:
            raise FieldZeroDivisionError(f"negative power of zero in {self.label}")
        return x**n

    def is_zero(self, x: Any) -> bool:
        return bool(x == 0)

    def equal(self, x: Any, y: Any) -> bool:
        return bool(x == y)

    def text(self, x: Any) -> str:
        return str(int(x))

    # matrix hooks

    def zeros(self, shape: Union[int, tuple[int, ...]]) -> galois.FieldArray:
        return self.gf.Zeros(shape)

    def identity(self, n: int) -> galois.FieldArray:
        return self.gf.Identity(n)

    def from_ints(self, arr: Any) -> galois.FieldArray:
        return self.gf(np.mod(np.asarray(arr, dtype=np.int64), self.p))

    def scale(self, c: Any, mat: galois.FieldArray) -> galois.FieldArray:
        return c * mat

    def mat_add(self, a: galois.FieldArray, b: galois.FieldArray) -> galois.FieldArray:
        return a + b

    def matmul(self, a: galois.FieldArray, b: galois.FieldArray) -> galois.FieldArray:
        return a @ b

    def inverse(self, a: galois.FieldArray) -> galois.FieldArray:
        return np.linalg.inv(a)

    def mat_equal(self, a: galois.FieldArray, b: galois.FieldArray) -> bool:
        return bool(np.array_equal(a.view(np.ndarray), b.view(np.ndarray)))

    def key(self, a: galois.FieldArray) -> bytes:
        return np.ascontiguousarray(a.view(np.ndarray)).tobytes()

    def to_ints(self, a: galois.FieldArray) -> np.ndarray:
        return a.view(np.ndarray).astype(np.int64)


@dataclass(frozen=True, eq=False)
class PolyFraction:
    """num/den with gcd 1 and monic den; zero is 0/1."""

    num: galois.Poly
    den: galois.Poly


@dataclass(frozen=True)
class RatFuncField:
    base: FiniteField
    degree_bound: int = RATFUNC_DEGREE_BOUND

    @property
    def characteristic(self) -> int:
        return self.base.p

    @property
    def gf(self) -> type[galois.FieldArray]:
        return self.base.gf

    @property
    def label(self) -> str:
        return f"GF({self.base.order})(x)"

    @property
    def is_finite(self) -> bool:
        return False

    def _poly(self, coeffs: Any) -> galois.Poly:
        if isinstance(coeffs, galois.Poly):
            return coeffs
        return galois.Poly(list(coeffs), field=self.gf)

    def _reduce(self, num: galois.Poly, den: galois.Poly) -> PolyFraction:
        zero = galois.Poly.Zero(self.gf)
        if den == zero:
            raise FieldZeroDivisionError(f"zero denominator in {self.label}")
        if num == zero:
            return PolyFraction(zero, galois.Poly.One(self.gf))
        g = galois.gcd(num, den)
        num, den = num // g, den // g
        lead = den.coeffs[0]
        if lead != 1:
            inv = lead**-1
            num = galois.Poly(num.coeffs * inv)
            den = galois.Poly(den.coeffs * inv)
        if max(num.degree, den.degree) > self.degree_bound:
            raise DegreeOverflowError(
                f"degree {max(num.degree, den.degree)} exceeds bound {self.degree_bound}"
            )
        return PolyFraction(num, den)

    # elements

    def element(self, num: Any, den: Any = None) -> FieldElement:
        """Reduced num/den from polynomials or descending coefficient lists."""
        n = self._poly(num)
        d = galois.Poly.One(self.gf) if den is None else self._poly(den)
        return FieldElement(self, self._reduce(n, d))

    def x(self) -> FieldElement:
        return self.element([1, 0])

    def constant(self, c: Union[FieldElement, int]) -> FieldElement:
        if isinstance(c, FieldElement):
            if c.field != self.base:
                raise FieldMismatchError(f"{c.field.label} is not the base of {self.label}")
            return self.element(galois.Poly(self.gf([int(c.value)])))
        return self.from_int(c)

    def from_int(self, n: int) -> FieldElement:
        return self.element([n % self.base.p])

    def zero(self) -> FieldElement:
        return self.from_int(0)

    def one(self) -> FieldElement:
        return self.from_int(1)

    def enumerate(self) -> list[FieldElement]:
        raise NotFiniteFieldError(f"{self.label} is infinite")

    def derivative(self, f: FieldElement) -> FieldElement:
        """Formal d/dx; its kernel is F_q(x^p)."""
        if f.field != self:
            raise FieldMismatchError(f"{f.field.label} vs {self.label}")
        return FieldElement(self, self._derive(f.value))

    def _poly_derivative(self, f: galois.Poly) -> galois.Poly:
        if f.degree == 0:
            return galois.Poly.Zero(self.gf)
        return f.derivative()

    def _derive(self, v: PolyFraction) -> PolyFraction:
        num = self._poly_derivative(v.num) * v.den - v.num * self._poly_derivative(v.den)
        return self._reduce(num, v.den * v.den)

    # scalar hooks

    def add(self, x: PolyFraction, y: PolyFraction) -> PolyFraction:
        return self._reduce(x.num * y.den + y.num * x.den, x.den * y.den)

    def sub(self, x: PolyFraction, y: PolyFraction) -> PolyFraction:
        return self._reduce(x.num * y.den - y.num * x.den, x.den * y.den)

    def mul(self, x: PolyFraction, y: PolyFraction) -> PolyFraction:
        return self._reduce(x.num * y.num, x.den * y.den)

    def div(self, x: PolyFraction, y: PolyFraction) -> PolyFraction:
        if self.is_zero(y):
            raise FieldZeroDivisionError(f"division by zero in {self.label}")
        return self._reduce(x.num * y.den, x.den * y.num)

    def neg(self, x: PolyFraction) -> PolyFraction:
        return PolyFraction(-x.num, x.den)

    def power(self, x: PolyFraction, n: int) -> PolyFraction:
        if n < 0:
            x = self.div(self.one().value, x)
            n = -n
        return self._reduce(x.num**n, x.den**n)

    def is_zero(self, x: PolyFraction) -> bool:
        return x.num == galois.Poly.Zero(self.gf)

    def equal(self, x: PolyFraction, y: PolyFraction) -> bool:
        return x.num == y.num and x.den == y.den

    def text(self, x: PolyFraction) -> str:
        if x.den == galois.Poly.One(self.gf):
            return str(x.num)
        return f"({x.num})/({x.den})"

    # matrix hooks (object arrays of PolyFraction)

    def zeros(self, shape: Union[int, tuple[int, ...]]) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(self.zero().value)
        return out

    def identity(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        one = self.one().value
        for i in range(n):
            out[i, i] = one
        return out

    def from_ints(self, arr: Any) -> np.ndarray:
        ints = np.mod(np.asarray(arr, dtype=np.int64), self.base.p)
        consts = [self.from_int(int(v)).value for v in range(self.base.p)]
        out = np.empty(ints.shape, dtype=object)
        for idx in np.ndindex(ints.shape):
            out[idx] = consts[ints[idx]]
        return out

    def scale(self, c: PolyFraction, mat: np.ndarray) -> np.ndarray:
        out = self.zeros(mat.shape)
        for idx in np.ndindex(mat.shape):
            if not self.is_zero(mat[idx]):
                out[idx] = self.mul(c, mat[idx])
        return out

    def mat_add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        out = np.empty(a.shape, dtype=object)
        for idx in np.ndindex(a.shape):
            if self.is_zero(a[idx]):
                out[idx] = b[idx]
            elif self.is_zero(b[idx]):
                out[idx] = a[idx]
            else:
                out[idx] = self.add(a[idx], b[idx])
        return out

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        rows, inner = a.shape
        cols = b.shape[1]
        out = self.zeros((rows, cols))
        for i in range(rows):
            for k in range(inner):
                aik = a[i, k]
                if self.is_zero(aik):
                    continue
                for j in range(cols):
                    bkj = b[k, j]
                    if self.is_zero(bkj):
                        continue
                    out[i, j] = self.add(out[i, j], self.mul(aik, bkj))
        return out

    def inverse(self, a: np.ndarray) -> np.ndarray:
        n = a.shape[0]
        work = np.concatenate([a.copy(), self.identity(n)], axis=1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if not self.is_zero(work[r, col])), None)
            if pivot is None:
                raise np.linalg.LinAlgError("matrix is singular")
            if pivot != col:
                work[[col, pivot]] = work[[pivot, col]]
            inv = self.div(self.one().value, work[col, col])
            work[col] = [self.mul(inv, v) for v in work[col]]
            for r in range(n):
                if r == col or self.is_zero(work[r, col]):
                    continue
                factor = work[r, col]
                work[r] = [self.sub(v, self.mul(factor, w)) for v, w in zip(work[r], work[col])]
        return work[:, n:]

    def mat_equal(self, a: np.ndarray, b: np.ndarray) -> bool:
        return a.shape == b.shape and all(
            self.equal(a[idx], b[idx]) for idx in np.ndindex(a.shape)
        )

    def key(self, a: np.ndarray) -> bytes:
        return "|".join(self.text(a[idx]) for idx in np.ndindex(a.shape)).encode()


Field = Union[FiniteField, RatFuncField]


@dataclass(frozen=True)
class FieldEmbedding:
    """GF(p^m) -> GF(p^n) sending the generator to `root`."""

    small: FiniteField
    big: FiniteField
    root: FieldElement

    def __call__(self, x: FieldElement) -> FieldElement:
        if x.field != self.small:
            raise FieldMismatchError(f"{x.field.label} vs {self.small.label}")
        value = int(x.value)
        out = self.big.zero()
        power = self.big.one()
        while value:
            value, digit = divmod(value, self.small.p)
            if digit:
                out = out + power * digit
            power = power * self.root
        return out

    def image(self) -> list[FieldElement]:
        return [self(x) for x in field_enumerate(self.small)]


def field_make(p: int, m: int = 1) -> FiniteField:
    """GF(p^m) with the lexicographically least monic irreducible modulus."""
    if not galois.is_prime(int(p)):
        raise NotPrimeError(f"{p} is not prime")
    if m < 1:
        raise FieldTooLargeError(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_FIELD_ORDER:
        raise FieldTooLargeError(f"GF({p}^{m}) exceeds the enumeration budget {MAX_FIELD_ORDER}")
    if m == 1:
        modulus: tuple[int, ...] = (1, 0)
    else:
        poly = galois.irreducible_poly(p, m, method="min")
        modulus = tuple(int(c) for c in poly.coeffs)
    field = FiniteField(p=int(p), m=int(m), modulus=modulus)
    logger.debug("built %s with modulus %s", field.label, modulus)
    return field


def field_from_order(q: int) -> FiniteField:
    if q < 2:
        raise NotPrimeError(f"{q} is not a prime power")
    primes, exponents = galois.factors(int(q))
    if len(primes) != 1:
        raise NotPrimeError(f"{q} is not a prime power")
    return field_make(int(primes[0]), int(exponents[0]))


def field_enumerate(field: Field) -> list[FieldElement]:
    return field.enumerate()


def ratfunc_field(base: FiniteField, degree_bound: int = RATFUNC_DEGREE_BOUND) -> RatFuncField:
    return RatFuncField(base=base, degree_bound=degree_bound)


def ratfunc_derivative(f: FieldElement) -> FieldElement:
    if not isinstance(f.field, RatFuncField):
        raise NotFiniteFieldError("derivative is defined on rational function fields only")
    return f.field.derivative(f)


def field_embedding(small: FiniteField, big: FiniteField) -> FieldEmbedding:
    if small.p != big.p or big.m % small.m:
        raise FieldMismatchError(f"{small.label} does not embed in {big.label}")
    if small.m == 1:
        return FieldEmbedding(small, big, big.one())
    poly = galois.Poly(list(small.modulus), field=big.gf)
    roots = sorted(int(r) for r in poly.roots())
    return FieldEmbedding(small, big, big.element(roots[0]))


def working_field(q: int) -> tuple[FiniteField, FieldEmbedding]:
    """Least extension of GF(q) that holds a cube root of unity, with the embedding."""
    small = field_from_order(q)
    if small.p == 3:
        raise UnsupportedFieldError(f"{small.label}: no extension holds an element of order 3")
    degree = small.m
    while (small.p ** degree - 1) % 3:
        degree += small.m
    big = small if degree == small.m else field_make(small.p, degree)
    return big, field_embedding(small, big)
