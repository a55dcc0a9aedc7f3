"""The G2 characteristic 2 suite: ten scenarios over GF(2), GF(4), GF(8), GF(16) and GF(4)(x).

Each runner receives a `Checks` object, performs exact computations and
records every assertion through it. The first failing assertion raises
ScenarioAssertionError with its operands; the service turns that into a
failed report.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Any, Callable, Iterable

import numpy as np

from chevcheck.algebra.centralizer import (
    Subspace,
    lie_fixed_space,
    reductive_pair_check,
    separability_probe,
)
from chevcheck.algebra.chevalley import LieVector, chevalley_build
from chevcheck.algebra.field import (
    FieldElement,
    RatFuncField,
    field_embedding,
    field_from_order,
    field_make,
    ratfunc_derivative,
    ratfunc_field,
)
from chevcheck.algebra.group import GroupElement, torus_element
from chevcheck.algebra.linalg import batched_matmul, right_mul
from chevcheck.algebra.parabolic import parabolic_split
from chevcheck.algebra.rootsystem import Cocharacter
from chevcheck.algebra.subgroup import (
    FiniteSubgroup,
    are_conjugate_in,
    centralizer_in,
    closure,
    normalizer_in,
    product_subgroup,
    subgroup_conjugator,
    tuple_classes,
)
from chevcheck.models.report import Scenario
from chevcheck.scenarios.lab import (
    A,
    A2B,
    A3B,
    A3B2,
    AB,
    ALPHA_V,
    B,
    BETA_V,
    LAMBDA,
    POSITIVE,
    RU_ROOTS,
    G2Lab,
    g2_rootsystem,
    neg,
)
from chevcheck.utils.constants import CLOSURE_CAP, DEFAULT_FIELDS, DEFAULT_SUITE
from chevcheck.utils.errors import ScenarioAssertionError, UnsupportedFieldError

logger = logging.getLogger(__name__)


def jsonable(value: Any) -> Any:
    """Operands and metrics as plain JSON values."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, FieldElement):
        return str(value)
    if isinstance(value, LieVector):
        return value.to_list()
    if isinstance(value, GroupElement):
        return {
            "label": value.label,
            "matrix": [[value.field.text(v) for v in row] for row in value.matrix],
        }
    if isinstance(value, Subspace):
        return value.rows_as_lists()
    if isinstance(value, FiniteSubgroup):
        return {"name": value.name, "order": value.order}
    if isinstance(value, Cocharacter):
        return list(value.coeffs)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in value]
    return str(value)


class Checks:
    """Assertion recorder for one scenario run."""

    def __init__(self, params: dict[str, Any]) -> None:
        self.params = params
        self.metrics: dict[str, Any] = {}
        self.witnesses: dict[str, Any] = {}
        self.fields: list[str] = []
        self.count = 0

    @property
    def budget(self) -> int:
        return int(self.params.get("budget") or CLOSURE_CAP)

    def that(self, check: str, ok: bool, **operands: Any) -> None:
        self.count += 1
        if not ok:
            logger.info("check failed: %s", check)
            raise ScenarioAssertionError(check, {k: jsonable(v) for k, v in operands.items()})

    def equal(self, check: str, got: Any, want: Any) -> None:
        self.that(check, got == want, got=got, want=want)

    def metric(self, name: str, value: Any) -> None:
        self.metrics[name] = jsonable(value)

    def witness(self, name: str, value: Any) -> None:
        self.witnesses[name] = jsonable(value)

    def uses(self, label: str) -> None:
        if label not in self.fields:
            self.fields.append(label)

    def lab(self, q: int) -> G2Lab:
        lab = G2Lab.for_order(q, self.budget)
        self.uses(lab.field_label)
        return lab

    def orders(self) -> list[int]:
        return [int(q) for q in self.params.get("fields") or ()]


Runner = Callable[[Checks], None]


@dataclass(frozen=True)
class RegisteredScenario:
    scenario: Scenario
    runner: Runner


SCENARIOS: dict[str, RegisteredScenario] = {}


def scenario(
    scenario_id: str,
    title: str,
    claim: str,
    shadow: bool = False,
    slow: bool = False,
    **defaults: Any,
) -> Callable[[Runner], Runner]:
    def register(fn: Runner) -> Runner:
        SCENARIOS[scenario_id] = RegisteredScenario(
            Scenario(scenario_id, title, claim, dict(defaults), shadow, slow), fn
        )
        return fn

    return register


def parse_field_label(label: str) -> int:
    """'gf4' -> 4; only characteristic 2 fields make sense for this suite."""
    match = re.fullmatch(r"\s*gf\(?(\d+)\)?\s*", str(label), flags=re.IGNORECASE)
    if not match:
        raise UnsupportedFieldError(f"cannot parse field label {label!r}")
    field = field_from_order(int(match.group(1)))
    if field.p != 2:
        raise UnsupportedFieldError(f"{field.label} does not have characteristic 2")
    return field.order


def _pairs(values: Iterable[FieldElement]) -> Iterable[tuple[FieldElement, FieldElement]]:
    values = list(values)
    return itertools.product(values, values)


# S1


@scenario(
    "S1",
    "G2 root data",
    "The pairings of every positive root with the simple coroots, the action of s_a "
    "on roots and coroots, and the roots of R_u(P) for lambda = a^v + 2b^v agree "
    "with the G2 tables.",
)
def root_data(c: Checks) -> None:
    rs = g2_rootsystem()
    c.uses("Z")
    fundamental = {
        "<a, a^v>": (rs.pairing(A, A), 2),
        "<b, a^v>": (rs.pairing(B, A), -3),
        "<a, b^v>": (rs.pairing(A, B), -1),
        "<b, b^v>": (rs.pairing(B, B), 2),
    }
    alpha = {
        "<a+b, a^v>": (rs.pairing(AB, A), -1),
        "<2a+b, a^v>": (rs.pairing(A2B, A), 1),
        "<3a+b, a^v>": (rs.pairing(A3B, A), 3),
        "<3a+2b, a^v>": (rs.pairing(A3B2, A), 0),
    }
    for name, (got, want) in {**fundamental, **alpha}.items():
        c.equal(name, got, want)
    c.equal("s_a . a", rs.reflect(A, A), neg(A))
    c.equal("s_a . b", rs.reflect(A, B), A3B)

    c.equal("s_a . a^v", rs.coroot_reflect(A, ALPHA_V), -ALPHA_V)
    c.equal("s_a . b^v", rs.coroot_reflect(A, BETA_V), ALPHA_V + BETA_V)

    ru = sorted(r for r in rs.roots if rs.cochar_pairing(r, LAMBDA) > 0)
    levi = sorted(r for r in rs.roots if rs.cochar_pairing(r, LAMBDA) == 0)
    c.equal("roots of R_u(P_lambda)", ru, sorted(RU_ROOTS))
    c.equal("roots of L_lambda", levi, sorted([A, neg(A)]))

    c.metric("pairing_checks", len(fundamental) + len(alpha) + 2)
    c.metric("pairings_with_a_v", {rs.root_label(r): rs.pairing(r, A) for r in POSITIVE})
    c.metric("ru_roots", [rs.root_label(r) for r in ru])
    c.metric("lambda_weights", {rs.root_label(r): rs.cochar_pairing(r, LAMBDA) for r in POSITIVE})

    # integer signs are recorded, never asserted
    form = chevalley_build(rs)
    n_a = form.integer_weyl_matrix(A)
    c.metric("jacobi_over_z", form.jacobi_verified)
    c.metric(
        "s_a_signs_over_z",
        {
            rs.root_label(r): int(n_a[form.root_index(rs.reflect(A, r)), form.root_index(r)])
            for r in RU_ROOTS
        },
    )


# S2


@scenario(
    "S2",
    "Group relations over GF(16)",
    "s_a permutes the root groups and root vectors as the reflection does, t acts "
    "trivially exactly on the roots whose pairing with a^v is divisible by 3, "
    "x_g(a) fixes z exactly when <g, a^v> is even, u(a)u(b) = u(a+b) x_{3a+2b}(ab), "
    "u(a)^-1 = u(a) x_{3a+2b}(a^2), Ad u(a) fixes e_b + e_{3a+b}, and conjugating a "
    "product over R_u by s_a obeys the explicit commutator rule over GF(4)^5.",
    slow=True,
)
def group_relations(c: Checks) -> None:
    lab = c.lab(16)
    rs, lie = lab.rootsys, lab.lie
    s = lab.s_alpha
    values = lab.values()

    relations = 0
    for gamma in RU_ROOTS:
        image = rs.reflect(A, gamma)
        c.equal(f"Ad s_a e[{rs.root_label(gamma)}]", s.ad_apply(lie.e(gamma)), lie.e(image))
        for a in values:
            relations += 1
            c.that(
                f"s_a x[{rs.root_label(gamma)}]({a}) s_a = x[{rs.root_label(image)}]({a})",
                s * lab.x(gamma, a) * s == lab.x(image, a),
                gamma=gamma,
                a=a,
            )

    for gamma in rs.roots:
        trivial = rs.pairing(gamma, A) % 3 == 0
        fixed = lab.t.ad_apply(lie.e(gamma)) == lie.e(gamma)
        c.equal(f"t fixes e[{rs.root_label(gamma)}]", fixed, trivial)
        for a in lab.nonzero_values():
            commutes = lab.t * lab.x(gamma, a) == lab.x(gamma, a) * lab.t
            c.equal(f"t commutes with x[{rs.root_label(gamma)}]({a})", commutes, trivial)
            even = rs.pairing(gamma, A) % 2 == 0
            c.equal(
                f"x[{rs.root_label(gamma)}]({a}) fixes z",
                lab.x(gamma, a).ad_apply(lab.z) == lab.z,
                even,
            )

    for a, b in _pairs(values):
        relations += 1
        c.that(
            "u(a)u(b) = u(a+b) x_{3a+2b}(ab)",
            lab.u(a) * lab.u(b) == lab.u(a + b) * lab.x(A3B2, a * b),
            a=a,
            b=b,
        )
    for a in values:
        relations += 2
        c.that("u(a)^-1 = u(a) x_{3a+2b}(a^2)", lab.u(a).inverse() == lab.u(a) * lab.x(A3B2, a * a), a=a)
        c.that("Ad u(a) y = y", lab.u(a).ad_apply(lab.y) == lab.y, a=a)
        c.that(
            "Ad x_{3a+b}(a) e_b = e_b + a e_{3a+2b}",
            lab.x(A3B, a).ad_apply(lie.e(B)) == lie.e(B) + a * lie.e(A3B2),
            a=a,
        )

    small = G2Lab.for_order(4, c.budget)
    c.uses(small.field_label)
    sa = small.s_alpha
    tuples = 0
    for a, a2, b, b2, z in itertools.product(small.values(), repeat=5):
        tuples += 1
        lhs = sa * small.x(B, a) * small.x(AB, a2) * small.x(A2B, b) * small.x(A3B, b2) * small.x(A3B2, z) * sa
        rhs = (
            small.x(B, b2)
            * small.x(AB, b)
            * small.x(A2B, a2)
            * small.x(A3B, a)
            * small.x(A3B2, a * b2 + a2 * b + z)
        )
        c.that("s_a conjugation of an R_u product", lhs == rhs, a=a, a2=a2, b=b, b2=b2, c=z)

    c.metric("relations_checked", relations)
    c.metric("commutator_tuples", tuples)


# S3


@scenario(
    "S3",
    "Reductive pairs from closed subsystems",
    "Psi(M) = {+-a, +-(3a+2b)} and Psi(L) = {+-a} are closed subsystems, and the "
    "span of the other root vectors is an Ad-stable complement to Lie M and to "
    "Lie L under every root element and torus generator.",
    fields=(4,),
)
def reductive_pairs(c: Checks) -> None:
    rs = g2_rootsystem()
    psi_m = [A, neg(A), A3B2, neg(A3B2)]
    psi_l = [A, neg(A)]
    c.that("Psi(M) is closed", rs.is_closed_subsystem(psi_m))
    c.that("Psi(L) is closed", rs.is_closed_subsystem(psi_l))
    c.that("{+-a, +-b} is not closed", not rs.is_closed_subsystem([A, neg(A), B, neg(B)]))

    for q in c.orders():
        lab = c.lab(q)
        m_gens = lab.root_sweep(psi_m) + lab.torus_gens()
        l_gens = lab.root_sweep(psi_l) + lab.torus_gens()
        c.that(f"(G, M) is a reductive pair over GF({q})", reductive_pair_check(lab.lie, m_gens, lab.m_span))
        c.that(f"(G, L) is a reductive pair over GF({q})", reductive_pair_check(lab.lie, l_gens, lab.l_span))
        whole = Subspace.whole(lab.field, lab.lie.dim)
        all_gens = lab.root_sweep(list(rs.roots)) + lab.torus_gens()
        c.that(f"(G, G) is a reductive pair over GF({q})", reductive_pair_check(lab.lie, all_gens, whole))
        c.metric(f"generators_q{q}", {"M": len(m_gens), "L": len(l_gens), "G": len(all_gens)})
        c.metric(f"complement_dims_q{q}", {"M": lab.lie.dim - lab.m_span.dim, "L": lab.lie.dim - lab.l_span.dim})


# S4


@scenario(
    "S4",
    "Centralizer and normalizer of M over GF(2)",
    "Over GF(2), |G(F_2)| = 12096, |M(F_2)| = 36 with G_a x G_{3a+2b} -> M bijective, "
    "C_{G(F_2)}(z) = M(F_2) and N_{G(F_2)}(M(F_2)) = M(F_2).",
    shadow=True,
)
def m_over_gf2(c: Checks) -> None:
    lab = G2Lab.over(field_make(2), c.budget)
    c.uses(lab.field_label)
    group = lab.full_group()
    q = 2
    c.equal("|G(F_2)|", group.order, q**6 * (q**6 - 1) * (q**2 - 1))

    m = lab.m_group
    c.equal("|M(F_2)|", m.order, 36)
    c.that("G_a x G_{3a+2b} -> M is injective", m.stats.injective)
    c.that("M(F_2) lies in G(F_2)", m.issubset(group))

    cent = centralizer_in(group, [lab.z], "C(z)")
    c.that("C_G(z) = M", cent.same_elements(m), centralizer_order=cent.order, m_order=m.order)
    norm = normalizer_in(group, m, "N(M)")
    c.that("N_G(M) = M", norm.same_elements(m), normalizer_order=norm.order, m_order=m.order)

    c.metric("g_order", group.order)
    c.metric("m_order", m.order)
    c.metric("centralizer_of_z", cent.order)
    c.metric("normalizer_of_m", norm.order)
    c.metric("closure_rounds", group.stats.rounds)


# S5


@scenario(
    "S5",
    "Separability of H in L and in G",
    "c_l(H) = k z, so H is separable in L, while c_g(H) has dimension 5 against "
    "dim Lie C_G(H) = 3, so H is not separable in G; e_b + e_{3a+b} witnesses it "
    "and is fixed by H and every u(a).",
)
def separability(c: Checks) -> None:
    lab = c.lab(4)
    lie = lab.lie
    h = lab.h_group
    c.equal("|H|", h.order, 6)
    c.that("H is not abelian", not h.is_abelian())

    in_l = separability_probe(lie, lab.h_gens, lab.span([lab.z]), "H", "L", within=lab.l_span)
    c.that("H is separable in L", in_l.separable, report=in_l.to_dict())
    c.equal("dim c_l(H)", in_l.dim_computed, 1)

    in_g = separability_probe(lie, lab.h_gens, lab.g_root_span(A3B2), "H", "G")
    c.that("H is not separable in G", not in_g.separable, report=in_g.to_dict())
    c.equal("dim c_g(H)", in_g.dim_computed, 5)
    c.equal("dim Lie C_G(H)", in_g.dim_declared, 3)
    c.that("e_b + e_{3a+b} is a witness", tuple(lab.y.to_list()) in in_g.witnesses, witnesses=in_g.witnesses)

    fixed_gens = lie_fixed_space(lie, lab.h_gens)
    fixed_all = lie_fixed_space(lie, list(h))
    c.that("generators suffice for the fixed space", fixed_gens == fixed_all)
    for w in in_g.witnesses:
        v = lie.vector(w)
        c.that("witness is fixed by all of H", all(g.ad_apply(v) == v for g in h), witness=v)

    hat = separability_probe(lie, list(lab.m_pair), lab.span([lie.e(A3B2)]), "H^_0", "G")
    c.that("H^_0 is not separable in G", not hat.separable, report=hat.to_dict())
    c.that("e_b + e_{3a+b} is fixed by H^_0", lie_fixed_space(lie, list(lab.m_pair)).contains(lab.y))

    for a in lab.nonzero_values():
        c.that("H and u(a) fix y", lie_fixed_space(lie, lab.h_gens + [lab.u(a)]).contains(lab.y), a=a)

    big = G2Lab.for_order(16, c.budget)
    c.uses(big.field_label)
    for a in big.values():
        c.that("Ad u(a) y = y over GF(16)", big.u(a).ad_apply(big.y) == big.y, a=a)

    c.metric("separable_in_L", in_l.separable)
    c.metric("separable_in_G", in_g.separable)
    c.metric("dims_in_L", {"computed": in_l.dim_computed, "declared": in_l.dim_declared})
    c.metric("dims_in_G", {"computed": in_g.dim_computed, "declared": in_g.dim_declared})
    c.metric("dims_hat_h0", {"computed": hat.dim_computed, "declared": hat.dim_declared})
    c.metric("h_order", h.order)
    c.witness("H_in_G", in_g.witnesses)
    c.witness("H_in_G_labels", in_g.witness_labels)
    c.witness("hat_H0_in_G", hat.witnesses)


# S6


@scenario(
    "S6",
    "Infinitely many M-classes in a single G-orbit",
    "The pairs (m1(a), m2(a)) = u(a).(s_a, t x_{3a+2b}(1)) all lie in M(F_q)^2 and "
    "fall into exactly q distinct M(F_q)-conjugacy classes; u(a)u(b)^-1 = "
    "u(a+b) x_{3a+2b}(ab+b^2); the centralizer in M(F_q) of each pair is U_{3a+2b}(F_q).",
    shadow=True,
    slow=True,
    fields=DEFAULT_FIELDS,
    tuple_length=3,
)
def orbit_classes(c: Checks) -> None:
    orders = c.orders()
    for q in orders:
        lab = c.lab(q)
        m = lab.m_group
        values = lab.values()
        pairs = [lab.m_pair_at(a) for a in values]
        if lab.field == lab.embedding.small:
            # t is an F_q-point only when F_q holds w
            for a, pair in zip(values, pairs):
                c.that("(m1(a), m2(a)) lies in M(F_q)^2", all(g in m for g in pair), a=a, q=q)

        labels = tuple_classes(m, pairs)
        c.equal(f"class count over GF({q})", len(set(labels)), q)

        for a, b in _pairs(values):
            c.that(
                "u(a)u(b)^-1 = u(a+b) x_{3a+2b}(ab+b^2)",
                lab.u(a) * lab.u(b).inverse() == lab.u(a + b) * lab.x(A3B2, a * b + b * b),
                a=a,
                b=b,
                q=q,
            )

        u_long = lab.u_long
        for a, pair in zip(values, pairs):
            cent = centralizer_in(m, list(pair))
            c.that(
                "C_M(m1(a), m2(a)) = U_{3a+2b}",
                cent.same_elements(u_long),
                a=a,
                q=q,
                centralizer_order=cent.order,
            )

        if q == min(orders):
            n = int(c.params.get("tuple_length", 3))
            padded = [tuple(pair) + (lab.one(),) * (n - 2) for pair in pairs]
            c.equal(f"{n}-tuple class count over GF({q})", len(set(tuple_classes(m, padded))), q)
            c.metric(f"tuple_length_q{q}", n)

        c.metric(f"class_count_q{q}", len(set(labels)))
        c.metric(f"m_order_q{q}", m.order)
        c.metric(f"class_labels_q{q}", labels)


# S7


@scenario(
    "S7",
    "H_a is G-cr but not M-cr",
    "For a != 0 in GF(4), c_lambda maps the generators of H_a to those of H, the "
    "generating pairs and the subgroups H_a and H are not M(F_4)-conjugate, and "
    "u(a) is not in M(F_4).",
    shadow=True,
)
def gcr_not_mcr(c: Checks) -> None:
    lab = c.lab(4)
    m = lab.m_group
    h = lab.h_group
    datum = lab.parabolic
    for a in lab.nonzero_values():
        h_a = lab.h_a_gens(a)
        c.that("H_a generators match the closed form", set(h_a) == set(lab.h_a_closed_form(a)), a=a)
        for g, want in zip(h_a, lab.h_gens):
            split = parabolic_split(datum, g)
            c.that("H_a generator lies in P_lambda", split.in_p, a=a, generator=g)
            c.that("c_lambda(H_a) generator is the H generator", split.levi_part == want, a=a, generator=g)
            c.that("H_a generator splits as L_lambda times R_u(P_lambda)", split.unipotent_ok, a=a, generator=g)
        c.that(
            "H_a and H pairs are not M-conjugate",
            are_conjugate_in(m, lab.h_gens, h_a) is None,
            a=a,
        )
        h_a_group = closure(h_a, c.budget, "H_a")
        c.that(
            "H_a and H are not M-conjugate",
            subgroup_conjugator(m, h, h_a_group) is None,
            a=a,
        )
        c.that("u(a) is not in M", lab.u(a) not in m, a=a)
    c.metric("m_order", m.order)
    c.metric("parameters", lab.nonzero_values())


# S8


@scenario(
    "S8",
    "H_a S is not G-cr",
    "With S = a^v(K*) for K = GF(q^2), c_lambda(H_a S) = <S, s_a>, the centralizer "
    "of S in R_u(P_lambda)(F_q) is U_{3a+2b}(F_q), and <S, s_a> is not "
    "R_u(P_lambda)(F_q)-conjugate to H_a S.",
    shadow=True,
    slow=True,
    fields=DEFAULT_FIELDS,
)
def torus_extension(c: Checks) -> None:
    for q in c.orders():
        small = field_from_order(q)
        big = field_make(small.p, 2 * small.m)
        lab = G2Lab(big, field_embedding(small, big), c.budget)
        c.uses(lab.field_label)
        s = torus_element(lab.lie, ALPHA_V, big.primitive_element())
        a = lab.default_parameter()
        h_a_s = lab.h_a_gens(a) + [s]

        projected = [lab.parabolic.levi_part(g) for g in h_a_s]
        c.that("H_a S lies in P_lambda", all(p is not None for p in projected), q=q)
        image = closure(projected, c.budget, "c(H_a S)")
        target = closure([s, lab.s_alpha], c.budget, "<S, s_a>")
        c.that("c_lambda(H_a S) = <S, s_a>", image.same_elements(target), q=q, image=image, target=target)

        ru = lab.ru_group
        cent = centralizer_in(ru, [s], "C_Ru(S)")
        c.that("C_Ru(S) = U_{3a+2b}", cent.same_elements(lab.u_long), q=q, centralizer_order=cent.order)

        small_torus = torus_element(lab.lie, ALPHA_V, lab.default_parameter())
        c.metric(f"small_torus_centralizer_q{q}", centralizer_in(ru, [small_torus]).order)

        h_a_s_group = closure(h_a_s, c.budget, "H_a S")
        c.equal(f"|H_a S| over GF({q})", h_a_s_group.order, target.order)
        c.that(
            "<S, s_a> and H_a S are not R_u-conjugate",
            subgroup_conjugator(ru, target, h_a_s_group) is None,
            q=q,
        )
        c.metric(f"ru_order_q{q}", ru.order)
        c.metric(f"s_order_q{q}", big.order - 1)
        c.metric(f"image_order_q{q}", image.order)


# S9


def _outside_kernel(rat: RatFuncField, g: GroupElement) -> list[Any]:
    """Entries of g with nonzero derivative."""
    return [v for v in g.matrix.flat if not ratfunc_derivative(FieldElement(rat, v)).is_zero()]


@scenario(
    "S9",
    "H_a is not G-cr over k_0",
    "Over GF(4)(x), H_x has generators with entries in GF(4)(x^2) while u(x) does "
    "not; over F_q the elements u of R_u(P_lambda)(F_q) with u^-1 H_a u in L_lambda "
    "form the coset u(a) U_{3a+2b}(F_q).",
    slow=True,
    fields=DEFAULT_FIELDS,
)
def rationality(c: Checks) -> None:
    rat = ratfunc_field(field_make(2, 2))
    lab = G2Lab(rat, None, c.budget)
    c.uses(rat.label)
    x = rat.x()
    gens = lab.h_a_gens(x)
    c.that("H_x generators match the closed form", set(gens) == set(lab.h_a_closed_form(x)))
    for g in gens:
        bad = _outside_kernel(rat, g)
        c.that("H_x generator has entries in k_0", not bad, generator=g.label, entries=[rat.text(v) for v in bad])
    moving = _outside_kernel(rat, lab.u(x))
    c.that("u(x) has an entry outside k_0", bool(moving))
    c.witness("u_x_entries_outside_k0", sorted({rat.text(v) for v in moving}))
    c.metric("degree_bound", rat.degree_bound)
    c.metric(
        "max_entry_degree",
        max(max(v.num.degree, v.den.degree) for g in [*gens, lab.u(x)] for v in g.matrix.flat),
    )

    for q in c.orders():
        fin = c.lab(q)
        ru = fin.ru_group
        a = fin.default_parameter()
        mask = np.ones(ru.order, dtype=bool)
        for g in fin.h_a_gens(a):
            conj = batched_matmul(fin.field, right_mul(ru.inverses, g.matrix), ru.matrices)
            mask &= fin.parabolic.levi_mask(conj)
        fiber = {ru.element(int(i)).key for i in np.flatnonzero(mask)}
        coset = {(fin.u(a) * fin.x(A3B2, y)).key for y in fin.values()}
        c.that(
            f"fiber over GF({q}) is u(a) U_{{3a+2b}}",
            fiber == coset,
            q=q,
            fiber_size=len(fiber),
            coset_size=len(coset),
        )
        c.metric(f"candidates_q{q}", ru.order)
        c.metric(f"fiber_size_q{q}", len(fiber))


# S10


@scenario(
    "S10",
    "Centralizer and normalizer of H in M(F_4)",
    "Within M(F_4), C(H) = G_{3a+2b}(F_4) and N(H) = H G_{3a+2b}(F_4).",
    shadow=True,
)
def h_in_m(c: Checks) -> None:
    lab = c.lab(4)
    m = lab.m_group
    h = lab.h_group
    g_long = lab.g_long
    cent = centralizer_in(m, lab.h_gens, "C_M(H)")
    c.that("C_M(H) = G_{3a+2b}", cent.same_elements(g_long), centralizer_order=cent.order)
    norm = normalizer_in(m, h, "N_M(H)")
    hg = product_subgroup(h, g_long, "H G_{3a+2b}")
    c.that("N_M(H) = H G_{3a+2b}", norm.same_elements(hg), normalizer_order=norm.order, product_order=hg.order)
    c.metric("centralizer_order", cent.order)
    c.metric("normalizer_order", norm.order)
    c.metric("g_long_order", g_long.order)


SUITES: dict[str, list[str]] = {DEFAULT_SUITE: [f"S{i}" for i in range(1, 11)]}
