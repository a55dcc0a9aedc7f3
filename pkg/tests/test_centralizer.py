"""
Unit tests for subspaces, fixed spaces, Lie centralizers and separability probes.
"""

import pytest

from chevcheck.algebra.centralizer import (
    Subspace,
    lie_centralizer,
    lie_fixed_space,
    reductive_pair_check,
    separability_probe,
)
from chevcheck.scenarios.lab import A, A3B, A3B2, AB, B, neg
from chevcheck.utils.errors import (
    AmbientMismatchError,
    DeclarationError,
    FieldMismatchError,
    NotComplementaryError,
)


# =============================================================================
# Subspace arithmetic
# =============================================================================

@pytest.mark.unit
def test_span_is_reduced(lie4):
    s = Subspace.span(lie4, [lie4.e(A), lie4.e(A) + lie4.e(B), lie4.e(B)])

    assert s.dim == 2
    assert s.contains(lie4.e(B))
    assert not s.contains(lie4.e(AB))


@pytest.mark.unit
def test_whole_and_zero(lie4, gf4):
    whole = Subspace.whole(gf4, 14)
    zero = Subspace.zero(gf4, 14)

    assert whole.dim == 14
    assert zero.dim == 0
    assert whole.annihilator().dim == 0
    assert zero.annihilator() == whole


@pytest.mark.unit
def test_sum_and_intersection(lab4):
    m, l = lab4.m_span, lab4.l_span

    assert (m.dim, l.dim) == (6, 4)
    assert (m.sum(l).dim, m.intersect(l).dim) == (6, 4)
    assert m.contains_subspace(l)
    assert not l.contains_subspace(m)


@pytest.mark.unit
def test_intersection_of_root_spans(lab4):
    left = lab4.root_span([A, B], cartan=False)
    right = lab4.root_span([B, AB], cartan=False)

    meet = left.intersect(right)

    assert meet.dim == 1
    assert meet.contains(lab4.lie.e(B))


@pytest.mark.unit
def test_standard_complement(lab4):
    m = lab4.m_span
    comp = m.standard_complement()

    assert comp.dim == 8
    assert m.sum(comp).dim == 14
    assert m.intersect(comp).dim == 0


@pytest.mark.unit
def test_equality_ignores_spanning_set(lie4):
    a = Subspace.span(lie4, [lie4.e(A), lie4.e(B)])
    b = Subspace.span(lie4, [lie4.e(A) + lie4.e(B), lie4.e(B)])

    assert a == b
    assert a.rows_as_lists() == b.rows_as_lists()


@pytest.mark.unit
def test_mismatched_ambients(lie4, lie2):
    a = Subspace.span(lie4, [lie4.e(A)])
    b = Subspace.span(lie2, [lie2.e(A)])

    with pytest.raises(AmbientMismatchError):
        a.sum(b)
    with pytest.raises(AmbientMismatchError):
        a.contains(lie2.e(A))
    with pytest.raises(FieldMismatchError):
        Subspace.span(lie4, [lie2.e(A)])


# =============================================================================
# Fixed spaces and centralizers
# =============================================================================

@pytest.mark.unit
def test_generators_suffice_for_the_fixed_space(lab4):
    assert lie_fixed_space(lab4.lie, lab4.h_gens) == lie_fixed_space(lab4.lie, list(lab4.h_group))


@pytest.mark.unit
def test_fixed_space_of_h(lab4):
    fixed = lie_fixed_space(lab4.lie, lab4.h_gens)

    assert fixed.dim == 5
    assert fixed.contains(lab4.y)
    assert fixed.contains(lab4.lie.e(A3B2))
    assert fixed.contains_subspace(lab4.g_root_span(A3B2))


@pytest.mark.unit
def test_fixed_space_of_no_generators_is_everything(lab4):
    assert lie_fixed_space(lab4.lie, []).dim == 14


@pytest.mark.unit
def test_lie_centralizer_of_a_root_vector(lab4):
    lie = lab4.lie
    c = lie_centralizer(lie, [lie.e(A3B2)])

    # the highest root vector commutes with itself and with every positive root vector
    for r in (A, B, AB, A3B, A3B2):
        assert c.contains(lie.e(r))
    assert not c.contains(lie.e(neg(A3B2)))


@pytest.mark.unit
def test_lie_centralizer_of_z_contains_cartan(lab4):
    lie = lab4.lie
    c = lie_centralizer(lie, [lab4.z])

    assert c.contains(lie.h(1))
    assert c.contains(lie.h(2))


@pytest.mark.unit
def test_fixed_space_checks_fields(lab4, lab2):
    with pytest.raises(FieldMismatchError):
        lie_fixed_space(lab4.lie, [lab2.x(A, 1)])


# =============================================================================
# Separability probes
# =============================================================================

@pytest.mark.unit
def test_h_is_not_separable_in_g(lab4, golden):
    report = separability_probe(lab4.lie, lab4.h_gens, lab4.g_root_span(A3B2), "H", "G")

    assert report.to_dict() == golden("separability_h_in_g_gf4.json")
    assert tuple(lab4.y.to_list()) in report.witnesses
    assert report.witness_labels[0] == "e[a2] + e[3a1+a2]"


@pytest.mark.unit
def test_h_is_separable_in_l(lab4):
    report = separability_probe(
        lab4.lie, lab4.h_gens, lab4.span([lab4.z]), "H", "L", within=lab4.l_span
    )

    assert report.separable
    assert report.dim_computed == 1
    assert report.witnesses == ()


@pytest.mark.unit
def test_false_declaration_is_refused(lab4):
    with pytest.raises(DeclarationError):
        separability_probe(lab4.lie, lab4.h_gens, lab4.span([lab4.lie.e(A)]))


@pytest.mark.unit
def test_witnesses_are_fixed_by_all_of_h(lab4):
    report = separability_probe(lab4.lie, lab4.h_gens, lab4.g_root_span(A3B2))

    for w in report.witnesses:
        v = lab4.lie.vector(w)
        assert all(g.ad_apply(v) == v for g in lab4.h_group)


# =============================================================================
# Reductive pairs
# =============================================================================

@pytest.mark.unit
def test_g_m_is_a_reductive_pair_over_gf2(lab2):
    gens = lab2.root_sweep([A, neg(A), A3B2, neg(A3B2)])

    assert reductive_pair_check(lab2.lie, gens, lab2.m_span)


@pytest.mark.unit
def test_whole_algebra_is_trivially_a_reductive_pair(lab2):
    gens = lab2.root_sweep(list(lab2.rootsys.roots))

    assert reductive_pair_check(lab2.lie, gens, Subspace.whole(lab2.field, 14))


@pytest.mark.unit
def test_unstable_complement_is_detected(lab2):
    # x_b(1) sends e_{-b} to e_{-b} + h_2 + e_b, leaving the standard complement
    assert not reductive_pair_check(lab2.lie, [lab2.x(B, 1)], lab2.m_span)


@pytest.mark.unit
def test_non_complementary_spaces_are_refused(lab2):
    with pytest.raises(NotComplementaryError):
        reductive_pair_check(lab2.lie, [], lab2.m_span, lab2.l_span)
