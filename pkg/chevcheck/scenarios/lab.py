"""Shared G2 objects for the characteristic 2 suite, built lazily per working field.

Simple roots are a (short) and b (long). The working field K always holds a
cube root of unity w, so t = a^v(w) has order 3; for q = 8 the points over
F_q are taken from the copy of GF(8) inside GF(64).
"""

from __future__ import annotations

import logging
from functools import cached_property
from typing import Optional

from chevcheck.algebra.centralizer import Subspace
from chevcheck.algebra.chevalley import (
    LieAlgebraOverField,
    LieVector,
    chevalley_build,
    lie_reduce,
)
from chevcheck.algebra.field import (
    Field,
    FieldElement,
    FieldEmbedding,
    FiniteField,
    RatFuncField,
    field_embedding,
    working_field,
)
from chevcheck.algebra.group import GroupElement, identity, root_element, torus_element, weyl_rep
from chevcheck.algebra.parabolic import ParabolicDatum
from chevcheck.algebra.rootsystem import Cocharacter, Root, rootsystem_build
from chevcheck.algebra.subgroup import FiniteSubgroup, closure, product_subgroup, root_subgroup
from chevcheck.utils.constants import CLOSURE_CAP
from chevcheck.utils.errors import BudgetExceededError

logger = logging.getLogger(__name__)

A: Root = (1, 0)
B: Root = (0, 1)
AB: Root = (1, 1)
A2B: Root = (2, 1)
A3B: Root = (3, 1)
A3B2: Root = (3, 2)
POSITIVE = (A, B, AB, A2B, A3B, A3B2)
RU_ROOTS = (B, AB, A2B, A3B, A3B2)

ALPHA_V = Cocharacter((1, 0))
BETA_V = Cocharacter((0, 1))
LAMBDA = Cocharacter((1, 2))


def neg(root: Root) -> Root:
    return tuple(-c for c in root)


def g2_rootsystem():
    return rootsystem_build("G", 2)


class G2Lab:
    def __init__(
        self,
        field: Field,
        embedding: Optional[FieldEmbedding] = None,
        budget: int = CLOSURE_CAP,
    ) -> None:
        self.field = field
        self.embedding = embedding
        self.budget = budget

    @classmethod
    def for_order(cls, q: int, budget: int = CLOSURE_CAP) -> "G2Lab":
        """Working field for points over F_q: GF(q) itself when it holds w."""
        big, emb = working_field(q)
        return cls(big, emb, budget)

    @classmethod
    def over(cls, field: FiniteField, budget: int = CLOSURE_CAP) -> "G2Lab":
        return cls(field, field_embedding(field, field), budget)

    @property
    def q(self) -> int:
        return self.embedding.small.order if self.embedding else 0

    @property
    def field_label(self) -> str:
        if self.embedding and self.embedding.small != self.field:
            return f"{self.embedding.small.label} in {self.field.label}"
        return self.field.label

    def need(self, size: int, what: str) -> None:
        if size > self.budget:
            raise BudgetExceededError(f"{what} needs {size} elements, budget is {self.budget}")

    # algebra

    @cached_property
    def rootsys(self):
        return g2_rootsystem()

    @cached_property
    def form(self):
        return chevalley_build(self.rootsys)

    @cached_property
    def lie(self) -> LieAlgebraOverField:
        return lie_reduce(self.form, self.field)

    @cached_property
    def z(self) -> LieVector:
        return self.lie.coroot_vector(A)

    @cached_property
    def y(self) -> LieVector:
        return self.lie.e(B) + self.lie.e(A3B)

    def span(self, vectors: list[LieVector]) -> Subspace:
        return Subspace.span(self.lie, vectors)

    def root_span(self, roots: list[Root], cartan: bool = True) -> Subspace:
        vectors = [self.lie.h(i + 1) for i in range(2)] if cartan else []
        return self.span(vectors + [self.lie.e(r) for r in roots])

    @cached_property
    def m_span(self) -> Subspace:
        return self.root_span([A, neg(A), A3B2, neg(A3B2)])

    @cached_property
    def l_span(self) -> Subspace:
        return self.root_span([A, neg(A)])

    def g_root_span(self, root: Root) -> Subspace:
        """Lie G_g = <e_g, e_-g, h_g>."""
        return self.span([self.lie.e(root), self.lie.e(neg(root)), self.lie.coroot_vector(root)])

    # scalars

    @cached_property
    def omega(self) -> FieldElement:
        if isinstance(self.field, RatFuncField):
            return self.field.constant(self.field.base.cube_root_of_unity())
        return self.field.cube_root_of_unity()

    def values(self) -> list[FieldElement]:
        """F_q inside the working field."""
        return self.embedding.image()

    def nonzero_values(self) -> list[FieldElement]:
        return [a for a in self.values() if not a.is_zero()]

    def additive_basis(self) -> list[FieldElement]:
        small = self.embedding.small
        return [self.embedding(small.element(small.p**i)) for i in range(small.m)]

    def default_parameter(self) -> FieldElement:
        return self.embedding(self.embedding.small.primitive_element())

    # group elements

    def x(self, root: Root, a) -> GroupElement:
        return root_element(self.lie, root, a)

    def u(self, a) -> GroupElement:
        """u(a) = x_b(a) x_{3a+b}(a)."""
        return self.x(B, a) * self.x(A3B, a)

    def one(self) -> GroupElement:
        return identity(self.lie)

    @cached_property
    def s_alpha(self) -> GroupElement:
        return weyl_rep(self.lie, A)

    @cached_property
    def t(self) -> GroupElement:
        return torus_element(self.lie, ALPHA_V, self.omega).renamed("t")

    @cached_property
    def h_gens(self) -> list[GroupElement]:
        return [self.s_alpha, self.t]

    @cached_property
    def m_pair(self) -> tuple[GroupElement, GroupElement]:
        return self.s_alpha, (self.t * self.x(A3B2, 1)).renamed("m2")

    def m_pair_at(self, a) -> tuple[GroupElement, GroupElement]:
        u = self.u(a)
        return tuple(u.conj(m) for m in self.m_pair)  # type: ignore[return-value]

    def h_a_gens(self, a) -> list[GroupElement]:
        """Generators of u(a) H u(a)^-1."""
        u = self.u(a)
        return [u.conj(g) for g in self.h_gens]

    def h_a_closed_form(self, a) -> list[GroupElement]:
        """s_a x_{3a+2b}(a^2) and t, in the order of h_gens."""
        return [self.s_alpha * self.x(A3B2, a * a), self.t]

    def hat_h_gens(self, a) -> list[GroupElement]:
        return list(self.m_pair_at(a))

    @cached_property
    def parabolic(self) -> ParabolicDatum:
        return ParabolicDatum(self.lie, LAMBDA)

    def torus_gens(self) -> list[GroupElement]:
        small = self.embedding.small
        if small.order == 2:
            return []
        g = self.embedding(small.primitive_element())
        return [torus_element(self.lie, ALPHA_V, g), torus_element(self.lie, BETA_V, g)]

    def root_sweep(self, roots: list[Root]) -> list[GroupElement]:
        return [self.x(r, a) for r in roots for a in self.nonzero_values()]

    # finite subgroups over F_q

    @cached_property
    def h_group(self) -> FiniteSubgroup:
        return closure(self.h_gens, self.budget, "H")

    def g_root(self, root: Root) -> FiniteSubgroup:
        gens = [self.x(r, a) for r in (root, neg(root)) for a in self.additive_basis()]
        return closure(gens, self.budget, f"G[{self.rootsys.root_label(root)}]")

    def u_root(self, root: Root) -> FiniteSubgroup:
        return root_subgroup(self.lie, root, self.values(), f"U[{self.rootsys.root_label(root)}]")

    @cached_property
    def g_alpha(self) -> FiniteSubgroup:
        return self.g_root(A)

    @cached_property
    def g_long(self) -> FiniteSubgroup:
        return self.g_root(A3B2)

    @cached_property
    def u_long(self) -> FiniteSubgroup:
        return self.u_root(A3B2)

    @cached_property
    def m_group(self) -> FiniteSubgroup:
        self.need(self.g_alpha.order * self.g_long.order, "M(F_q)")
        return product_subgroup(self.g_alpha, self.g_long, "M")

    @cached_property
    def ru_group(self) -> FiniteSubgroup:
        self.need(self.q ** len(RU_ROOTS), "R_u(P)(F_q)")
        group = self.u_root(RU_ROOTS[0])
        for root in RU_ROOTS[1:]:
            group = product_subgroup(group, self.u_root(root), "R_u")
        return group

    def simple_root_gens(self) -> list[GroupElement]:
        one = self.field.one()
        return [self.x(r, one) for r in (A, B, neg(A), neg(B))]

    def full_group(self) -> FiniteSubgroup:
        """G(F_q) by closure; only sensible for q = 2."""
        return closure(self.simple_root_gens(), self.budget, "G")
