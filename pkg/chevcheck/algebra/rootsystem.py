"""Root systems in simple-root coordinates.

Roots are integer tuples over the base. The Cartan matrix follows the
convention C[i][j] = <a_j, a_i^v>, so <g, a_i^v> = sum_j g_j C[i][j].
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

import galois

from chevcheck.utils.constants import MAX_RANK
from chevcheck.utils.errors import (
    ForeignRootError,
    NonSymmetricSubsetError,
    UnsupportedTypeError,
)
from chevcheck.utils.formatting import root_label

logger = logging.getLogger(__name__)

Root = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def _dynkin(type_label: str, rank: int) -> tuple[tuple[int, ...], list[tuple[int, int]]]:
    """Relative squared lengths d_i and Bourbaki-numbered edges (0-based)."""
    chain = [(i, i + 1) for i in range(rank - 1)]
    if type_label == "A":
        return (1,) * rank, chain
    if type_label == "B":
        return (2,) * (rank - 1) + (1,), chain
    if type_label == "C":
        return (1,) * (rank - 1) + (2,), chain
    if type_label == "D":
        return (1,) * rank, chain[:-1] + [(rank - 3, rank - 1)]
    if type_label == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, rank - 1)]
        return (1,) * rank, edges
    if type_label == "F":
        return (2, 2, 1, 1), chain
    return (1, 3), chain


def _check_type(type_label: str, rank: int) -> None:
    if type_label in _MIN_RANK:
        ok = _MIN_RANK[type_label] <= rank <= MAX_RANK
    elif type_label in _EXCEPTIONAL_RANKS:
        ok = rank in _EXCEPTIONAL_RANKS[type_label]
    else:
        ok = False
    if not ok:
        raise UnsupportedTypeError(f"unsupported root system type {type_label}{rank}")


def parse_type_label(label: str) -> tuple[str, int]:
    match = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", label or "")
    if not match:
        raise UnsupportedTypeError(f"cannot parse root system type {label!r}")
    type_label, rank = match.group(1).upper(), int(match.group(2))
    _check_type(type_label, rank)
    return type_label, rank


def supported_type_labels() -> list[str]:
    labels = [f"{t}{n}" for t, lo in _MIN_RANK.items() for n in range(lo, MAX_RANK + 1)]
    return labels + [f"{t}{n}" for t, ranks in _EXCEPTIONAL_RANKS.items() for n in ranks]


@dataclass(frozen=True)
class Cocharacter:
    """lambda = sum_i n_i a_i^v, in simple-coroot coordinates."""

    coeffs: tuple[int, ...]

    def __add__(self, other: "Cocharacter") -> "Cocharacter":
        return Cocharacter(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Cocharacter") -> "Cocharacter":
        return Cocharacter(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Cocharacter":
        return Cocharacter(tuple(-a for a in self.coeffs))

    def __rmul__(self, n: int) -> "Cocharacter":
        return Cocharacter(tuple(n * a for a in self.coeffs))

    @property
    def label(self) -> str:
        return root_label(self.coeffs, symbol="h")


@dataclass(frozen=True)
class PrimeClassification:
    type_label: str
    rank: int
    bad: tuple[int, ...]

    def is_good(self, p: int) -> bool:
        return p not in self.bad

    def is_very_good(self, p: int) -> bool:
        if not self.is_good(p):
            return False
        return not (self.type_label == "A" and (self.rank + 1) % p == 0)

    def not_very_good_extra(self) -> tuple[int, ...]:
        """Good primes that still fail the very-good condition."""
        if self.type_label != "A":
            return ()
        primes = galois.factors(self.rank + 1)[0]
        return tuple(int(p) for p in primes if int(p) not in self.bad)

    def to_dict(self) -> dict:
        return {"bad": list(self.bad), "not_very_good_extra": list(self.not_very_good_extra())}


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...]
    roots: tuple[Root, ...] = field(repr=False)

    @property
    def label(self) -> str:
        return f"{self.type_label}{self.rank}"

    @cached_property
    def _index(self) -> dict[Root, int]:
        return {r: i for i, r in enumerate(self.roots)}

    @property
    def positive_roots(self) -> tuple[Root, ...]:
        return self.roots[: len(self.roots) // 2]

    @property
    def negative_roots(self) -> tuple[Root, ...]:
        return self.roots[len(self.roots) // 2 :]

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return self.positive_roots[: self.rank]

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    def simple(self, i: int) -> Root:
        """Simple root a_i, 1-based."""
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def index(self, root: Iterable[int]) -> int:
        key = tuple(int(c) for c in root)
        try:
            return self._index[key]
        except KeyError:
            raise ForeignRootError(f"{key} is not a root of {self.label}") from None

    def check(self, root: Iterable[int]) -> Root:
        return self.roots[self.index(root)]

    def is_root(self, root: Iterable[int]) -> bool:
        return tuple(int(c) for c in root) in self._index

    def is_positive(self, root: Root) -> bool:
        return self.index(root) < len(self.roots) // 2

    def height(self, root: Root) -> int:
        return sum(root)

    def norm(self, root: Root) -> int:
        """Squared length relative to the shortest root (1, 2 or 3)."""
        root = self.check(root)
        total = sum(
            root[i] * root[j] * self.lengths[i] * self.cartan[i][j]
            for i in range(self.rank)
            for j in range(self.rank)
        )
        return total // 2

    def simple_pairings(self, root: Root) -> tuple[int, ...]:
        """(<root, a_i^v>)_i."""
        return tuple(
            sum(root[j] * self.cartan[i][j] for j in range(self.rank)) for i in range(self.rank)
        )

    def coroot(self, root: Root) -> Cocharacter:
        root = self.check(root)
        d = self.norm(root)
        return Cocharacter(tuple(c * self.lengths[i] // d for i, c in enumerate(root)))

    def cochar_pairing(self, root: Root, lam: Cocharacter) -> int:
        """<root, lambda>."""
        return sum(n * p for n, p in zip(lam.coeffs, self.simple_pairings(root)))

    def pairing(self, gamma: Root, delta: Root) -> int:
        """<gamma, delta^v>."""
        self.check(gamma)
        return self.cochar_pairing(gamma, self.coroot(delta))

    def reflect(self, alpha: Root, gamma: Root) -> Root:
        """s_alpha . gamma = gamma - <gamma, alpha^v> alpha."""
        n = self.pairing(gamma, alpha)
        return tuple(g - n * a for g, a in zip(gamma, alpha))

    def coroot_reflect(self, alpha: Root, cochar: Cocharacter) -> Cocharacter:
        """s_alpha . delta^v = delta^v - <alpha, delta^v> alpha^v."""
        n = self.cochar_pairing(self.check(alpha), cochar)
        return cochar - n * self.coroot(alpha)

    def cochar_weights(self, lam: Cocharacter) -> dict[Root, int]:
        return {r: self.cochar_pairing(r, lam) for r in self.roots}

    def is_closed_subsystem(self, subset: Iterable[Root]) -> bool:
        members = {self.check(r) for r in subset}
        for r in members:
            if tuple(-c for c in r) not in members:
                raise NonSymmetricSubsetError(f"{root_label(r)} is in the subset but its negative is not")
        for g in members:
            for d in members:
                s = tuple(a + b for a, b in zip(g, d))
                if self.is_root(s) and s not in members:
                    return False
        return True

    def classify_primes(self) -> PrimeClassification:
        coeffs = {c for r in self.positive_roots for c in r if c > 1}
        bad: set[int] = set()
        for c in coeffs:
            bad.update(int(p) for p in galois.factors(c)[0])
        return PrimeClassification(self.type_label, self.rank, tuple(sorted(bad)))

    def root_label(self, root: Root) -> str:
        return root_label(root)

    def pairing_matrix(self, roots: Optional[Iterable[Root]] = None) -> list[list[int]]:
        rows = list(self.positive_roots if roots is None else roots)
        return [[self.pairing(g, d) for d in rows] for g in rows]


def rootsystem_build(type_label: str, rank: int) -> RootSystem:
    type_label = type_label.upper()
    _check_type(type_label, rank)
    lengths, edges = _dynkin(type_label, rank)
    form = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        form[i][i] = 2 * lengths[i]
    for i, j in edges:
        form[i][j] = form[j][i] = -max(lengths[i], lengths[j])
    cartan = tuple(tuple(form[i][j] // lengths[i] for j in range(rank)) for i in range(rank))

    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    found: set[Root] = set(simple)
    frontier = list(simple)
    while frontier:
        nxt: list[Root] = []
        for g in frontier:
            for i in range(rank):
                n = sum(g[j] * cartan[i][j] for j in range(rank))
                r = tuple(c - n if k == i else c for k, c in enumerate(g))
                if r not in found:
                    found.add(r)
                    nxt.append(r)
        frontier = nxt

    positives = sorted(
        (r for r in found if all(c >= 0 for c in r)), key=lambda r: (sum(r), tuple(-c for c in r))
    )
    negatives = [tuple(-c for c in r) for r in positives]
    roots = tuple(positives + negatives)
    logger.debug("built %s%d with %d roots", type_label, rank, len(roots))
    return RootSystem(type_label, rank, cartan, lengths, roots)


def rootsystem_from_label(label: str) -> RootSystem:
    return rootsystem_build(*parse_type_label(label))
