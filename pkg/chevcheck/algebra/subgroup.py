"""Finite subgroups of the adjoint group over a finite field, stored as matrix stacks.

Every subgroup keeps its elements, their inverses and a key index. Searches
for conjugating elements solve g A = B g column by column, so most
candidates drop out after one matrix-vector product.
"""

from __future__ import annotations

import logging
import time
from typing import Any, Iterable, Optional, Sequence, Union

import numpy as np

from chevcheck.algebra.chevalley import LieAlgebraOverField, LieVector
from chevcheck.algebra.field import FieldElement, FiniteField
from chevcheck.algebra.group import GroupElement, root_element
from chevcheck.algebra.linalg import (
    batched_left_matvec,
    batched_matmul,
    batched_matvec,
    left_mul,
    right_mul,
    rows_equal,
    stack_keys,
)
from chevcheck.algebra.rootsystem import Root
from chevcheck.models.closure import ClosureStats
from chevcheck.utils.constants import CLOSURE_CAP
from chevcheck.utils.errors import (
    ClosureBudgetError,
    DimensionMismatchError,
    FieldMismatchError,
    NotFiniteFieldError,
    NotSubgroupError,
)

logger = logging.getLogger(__name__)


class FiniteSubgroup:
    def __init__(
        self,
        algebra: LieAlgebraOverField,
        matrices: Any,
        inverses: Any,
        generators: Sequence[GroupElement],
        stats: ClosureStats,
        name: str = "",
    ) -> None:
        self.algebra = algebra
        self.matrices = matrices
        self.inverses = inverses
        self.generators = tuple(generators)
        self.stats = stats
        self.name = name
        self._index = {k: i for i, k in enumerate(stack_keys(matrices))}

    @property
    def field(self) -> FiniteField:
        return self.algebra.field

    @property
    def order(self) -> int:
        return self.matrices.shape[0]

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        for i in range(self.order):
            yield self.element(i)

    def __repr__(self) -> str:
        return f"FiniteSubgroup({self.name or '?'}, order {self.order})"

    def element(self, i: int) -> GroupElement:
        return GroupElement(self.algebra, self.matrices[i], (f"{self.name or 'S'}[{i}]",))

    def index_of(self, g: GroupElement) -> Optional[int]:
        if g.field != self.field:
            raise FieldMismatchError(f"{g.field.label} vs {self.field.label}")
        return self._index.get(g.key)

    def __contains__(self, g: GroupElement) -> bool:
        return self.index_of(g) is not None

    def keys(self) -> set[bytes]:
        return set(self._index)

    def issubset(self, other: "FiniteSubgroup") -> bool:
        return self.keys() <= other.keys()

    def same_elements(self, other: "FiniteSubgroup") -> bool:
        return self.order == other.order and self.keys() == other.keys()

    def subset(self, mask: Any, name: str) -> "FiniteSubgroup":
        """Elements selected by a boolean mask or index array; the caller vouches for closure."""
        idx = np.flatnonzero(mask) if np.asarray(mask).dtype == bool else np.asarray(mask)
        stats = ClosureStats(len(idx), len(self.generators), 0, 0.0)
        return FiniteSubgroup(
            self.algebra, self.matrices[idx], self.inverses[idx], (), stats, name
        )

    def is_abelian(self) -> bool:
        gens = [g.matrix for g in self.generators] or [self.matrices[i] for i in range(self.order)]
        for a in gens:
            for b in gens:
                if not self.field.mat_equal(a @ b, b @ a):
                    return False
        return True


def _require_finite(algebra: LieAlgebraOverField) -> None:
    if not isinstance(algebra.field, FiniteField):
        raise NotFiniteFieldError(f"{algebra.field.label} cannot be enumerated")


def _stack(algebra: LieAlgebraOverField, mats: Iterable[Any]) -> Any:
    mats = list(mats)
    if not mats:
        return algebra.field.zeros((0, algebra.dim, algebra.dim))
    return np.concatenate([m[None] for m in mats])


def closure(
    gens: Sequence[GroupElement],
    cap: int = CLOSURE_CAP,
    name: str = "",
    algebra: Optional[LieAlgebraOverField] = None,
) -> FiniteSubgroup:
    """Breadth-first closure of <gens> under right multiplication by generators."""
    if not gens and algebra is None:
        raise DimensionMismatchError("closure of no generators needs an algebra")
    algebra = algebra or gens[0].algebra
    _require_finite(algebra)
    field = algebra.field
    for g in gens:
        if g.field != field:
            raise FieldMismatchError(f"{g.field.label} vs {field.label}")

    start = time.perf_counter()
    ident = field.identity(algebra.dim)
    gen_mats = [g.matrix for g in gens]
    gen_invs = [field.inverse(m) for m in gen_mats]
    index = {stack_keys(ident[None])[0]: 0}
    chunks, inv_chunks = [ident[None]], [ident[None]]
    frontier, frontier_inv = ident[None], ident[None]
    rounds = 0
    while frontier.shape[0]:
        rounds += 1
        new, new_inv = [], []
        for g, g_inv in zip(gen_mats, gen_invs):
            prod = right_mul(frontier, g)
            keys = stack_keys(prod)
            keep = []
            for i, k in enumerate(keys):
                if k not in index:
                    index[k] = len(index)
                    keep.append(i)
            if len(index) > cap:
                raise ClosureBudgetError(cap, len(index))
            if keep:
                sel = np.asarray(keep)
                new.append(prod[sel])
                new_inv.append(left_mul(g_inv, frontier_inv[sel]))
        if not new:
            break
        frontier = np.concatenate(new)
        frontier_inv = np.concatenate(new_inv)
        chunks.append(frontier)
        inv_chunks.append(frontier_inv)
        logger.debug("closure %s round %d: %d elements", name, rounds, len(index))

    elapsed = time.perf_counter() - start
    stats = ClosureStats(len(index), len(gens), rounds, elapsed)
    logger.info("closure %s: order %d in %.2fs", name or "<gens>", len(index), elapsed)
    return FiniteSubgroup(
        algebra, np.concatenate(chunks), np.concatenate(inv_chunks), gens, stats, name
    )


def root_subgroup(
    algebra: LieAlgebraOverField, root: Root, values: Sequence[FieldElement], name: str = ""
) -> FiniteSubgroup:
    """U_g = {x_g(a) : a in values}; values must form an additive group."""
    _require_finite(algebra)
    elements = [root_element(algebra, root, a) for a in values]
    inverses = [root_element(algebra, root, -a) for a in values]
    stats = ClosureStats(len(elements), len(elements), 0, 0.0)
    return FiniteSubgroup(
        algebra,
        _stack(algebra, [g.matrix for g in elements]),
        _stack(algebra, [g.matrix for g in inverses]),
        [g for g, a in zip(elements, values) if not a.is_zero()],
        stats,
        name,
    )


def product_subgroup(a: FiniteSubgroup, b: FiniteSubgroup, name: str = "") -> FiniteSubgroup:
    """The set A*B in the order i*|B| + j, duplicates dropped.

    It is a subgroup when A*B = B*A, e.g. for commuting factors or
    root subgroups multiplied along a unipotent radical.
    """
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field.label} vs {b.field.label}")
    start = time.perf_counter()
    field, n = a.field, a.algebra.dim
    mats = field.zeros((a.order, b.order, n, n))
    invs = field.zeros((a.order, b.order, n, n))
    if a.order <= b.order:
        for i in range(a.order):
            mats[i] = left_mul(a.matrices[i], b.matrices)
            invs[i] = right_mul(b.inverses, a.inverses[i])
    else:
        for j in range(b.order):
            mats[:, j] = right_mul(a.matrices, b.matrices[j])
            invs[:, j] = left_mul(b.inverses[j], a.inverses)
    mats = mats.reshape(a.order * b.order, n, n)
    invs = invs.reshape(a.order * b.order, n, n)

    keys = stack_keys(mats)
    seen: dict[bytes, int] = {}
    for i, k in enumerate(keys):
        seen.setdefault(k, i)
    injective = len(seen) == len(keys)
    if not injective:
        keep = np.asarray(sorted(seen.values()))
        mats, invs = mats[keep], invs[keep]
    elapsed = time.perf_counter() - start
    stats = ClosureStats(mats.shape[0], len(a.generators) + len(b.generators), 1, elapsed, injective)
    logger.info("product %s: %d elements (injective=%s) in %.2fs", name, mats.shape[0], injective, elapsed)
    return FiniteSubgroup(a.algebra, mats, invs, a.generators + b.generators, stats, name)


def is_closed(s: FiniteSubgroup, gens: Optional[Sequence[GroupElement]] = None) -> bool:
    """Right multiplication by each generator maps the set into itself."""
    for g in gens if gens is not None else s.generators:
        for k in stack_keys(right_mul(s.matrices, g.matrix)):
            if k not in s._index:
                return False
    return True


# conjugation searches


def intertwiners(
    s: FiniteSubgroup,
    sources: Sequence[GroupElement],
    targets: Sequence[GroupElement],
    first_only: bool = False,
) -> np.ndarray:
    """Indices of g in S with g a g^-1 = b for every pair (a, b)."""
    if len(sources) != len(targets):
        raise DimensionMismatchError("tuples of different lengths")
    cand = np.arange(s.order)
    n = s.algebra.dim
    for a, b in zip(sources, targets):
        for j in range(n):
            if not cand.size:
                return cand
            stack = s.matrices[cand]
            lhs = batched_matvec(stack, a.matrix[:, j])
            rhs = batched_left_matvec(b.matrix, stack[:, :, j])
            cand = cand[rows_equal(lhs, rhs)]
    return cand[:1] if first_only else cand


def centralizer_in(
    s: FiniteSubgroup, targets: Sequence[Union[GroupElement, LieVector]], name: str = ""
) -> FiniteSubgroup:
    groups = [t for t in targets if isinstance(t, GroupElement)]
    vectors = [t for t in targets if isinstance(t, LieVector)]
    for t in targets:
        if t.field != s.field:
            raise FieldMismatchError(f"{t.field.label} vs {s.field.label}")
    cand = intertwiners(s, groups, groups)
    for v in vectors:
        if not cand.size:
            break
        moved = batched_matvec(s.matrices[cand], v.coeffs)
        fixed = ~(moved.view(np.ndarray) != v.coeffs.view(np.ndarray)).any(axis=1)
        cand = cand[fixed]
    return s.subset(cand, name or f"C({s.name})")


def _conjugates_inside(s: FiniteSubgroup, gens: Sequence[GroupElement], target: FiniteSubgroup) -> np.ndarray:
    """Mask of g in S with g t g^-1 in target for every t in gens."""
    mask = np.ones(s.order, dtype=bool)
    for t in gens:
        conj = batched_matmul(s.field, right_mul(s.matrices, t.matrix), s.inverses)
        mask &= np.fromiter((k in target._index for k in stack_keys(conj)), dtype=bool, count=s.order)
    return mask


def _generators_of(t: FiniteSubgroup) -> Sequence[GroupElement]:
    return t.generators or [t.element(i) for i in range(t.order)]


def normalizer_in(s: FiniteSubgroup, t: FiniteSubgroup, name: str = "") -> FiniteSubgroup:
    """{g in S : g T g^-1 = T}; T must lie in S."""
    if not t.issubset(s):
        raise NotSubgroupError(f"{t.name or 'T'} is not contained in {s.name or 'S'}")
    mask = _conjugates_inside(s, _generators_of(t), t)
    return s.subset(mask, name or f"N({t.name})")


def are_conjugate_in(
    s: FiniteSubgroup, a: Sequence[GroupElement], b: Sequence[GroupElement]
) -> Optional[GroupElement]:
    """First g in S with g a_i g^-1 = b_i for all i, or None."""
    found = intertwiners(s, a, b, first_only=True)
    return s.element(int(found[0])) if found.size else None


def subgroup_conjugator(
    s: FiniteSubgroup, a: FiniteSubgroup, b: FiniteSubgroup
) -> Optional[GroupElement]:
    """First g in S with g A g^-1 = B as sets, or None."""
    if a.order != b.order:
        return None
    mask = _conjugates_inside(s, _generators_of(a), b)
    hits = np.flatnonzero(mask)
    return s.element(int(hits[0])) if hits.size else None


def tuple_classes(s: FiniteSubgroup, tuples: Sequence[Sequence[GroupElement]]) -> list[int]:
    """S-conjugacy class label of each tuple, numbered by first appearance."""
    reps: list[int] = []
    labels: list[int] = []
    for i, tup in enumerate(tuples):
        for label, r in enumerate(reps):
            if are_conjugate_in(s, tuples[r], tup) is not None:
                labels.append(label)
                break
        else:
            labels.append(len(reps))
            reps.append(i)
    logger.info("%d tuples fall into %d classes under %s", len(tuples), len(reps), s.name)
    return labels
