"""
Unit tests for root systems: construction, pairings, reflections and primes.
"""

import pytest

from chevcheck.algebra.rootsystem import (
    Cocharacter,
    parse_type_label,
    rootsystem_build,
    rootsystem_from_label,
    supported_type_labels,
)
from chevcheck.utils.errors import ForeignRootError, NonSymmetricSubsetError, UnsupportedTypeError

A, B = (1, 0), (0, 1)


# =============================================================================
# Construction
# =============================================================================

@pytest.mark.unit
@pytest.mark.parametrize(
    "label, count",
    [
        ("A1", 2),
        ("A4", 20),
        ("B3", 18),
        ("C4", 32),
        ("D4", 24),
        ("D6", 60),
        ("E6", 72),
        ("E7", 126),
        ("E8", 240),
        ("F4", 48),
        ("G2", 12),
    ],
)
def test_root_counts(label, count):
    assert len(rootsystem_from_label(label).roots) == count


@pytest.mark.unit
@pytest.mark.parametrize(
    "label, highest",
    [
        ("B3", (1, 2, 2)),
        ("C3", (2, 2, 1)),
        ("F4", (2, 3, 4, 2)),
        ("E8", (2, 3, 4, 6, 5, 4, 3, 2)),
        ("G2", (3, 2)),
    ],
)
def test_highest_roots(label, highest):
    assert rootsystem_from_label(label).highest_root == highest


@pytest.mark.unit
def test_g2_against_golden(g2, golden):
    expected = golden("g2_rootsys.json")

    assert [list(row) for row in g2.cartan] == expected["cartan"]
    assert list(g2.lengths) == expected["lengths"]
    assert [list(r) for r in g2.positive_roots] == expected["positive_roots"]
    assert [list(g2.coroot(r).coeffs) for r in g2.positive_roots] == expected["coroots"]
    assert [g2.norm(r) for r in g2.positive_roots] == expected["norms"]
    assert g2.pairing_matrix() == expected["pairings"]


@pytest.mark.unit
def test_positive_roots_sorted_by_height(g2):
    heights = [g2.height(r) for r in g2.positive_roots]

    assert heights == sorted(heights)
    assert g2.simple_roots == (A, B)
    assert g2.negative_roots[0] == (-1, 0)


@pytest.mark.unit
def test_roots_closed_under_reflections():
    rs = rootsystem_from_label("F4")

    for a in rs.simple_roots:
        assert {rs.reflect(a, g) for g in rs.roots} == set(rs.roots)


@pytest.mark.unit
@pytest.mark.parametrize("label", ["B2", "G2"])
def test_reflections_preserve_pairings(label):
    rs = rootsystem_from_label(label)

    for a in rs.simple_roots:
        for g in rs.roots:
            for d in rs.roots:
                assert rs.pairing(rs.reflect(a, g), rs.reflect(a, d)) == rs.pairing(g, d)


@pytest.mark.unit
@pytest.mark.parametrize("label", ["B2", "G2"])
def test_coroot_of_reflection_is_reflected_coroot(label):
    rs = rootsystem_from_label(label)

    for a in rs.simple_roots:
        for g in rs.roots:
            assert rs.coroot(rs.reflect(a, g)) == rs.coroot_reflect(a, rs.coroot(g))


@pytest.mark.unit
def test_norms_take_two_values_in_doubly_laced_types():
    rs = rootsystem_from_label("B4")

    assert {rs.norm(r) for r in rs.roots} == {1, 2}


# =============================================================================
# Pairings and reflections in G2
# =============================================================================

@pytest.mark.unit
@pytest.mark.parametrize(
    "gamma, value",
    [(A, 2), (B, -3), ((1, 1), -1), ((2, 1), 1), ((3, 1), 3), ((3, 2), 0)],
)
def test_pairings_with_short_simple_coroot(g2, gamma, value):
    assert g2.pairing(gamma, A) == value


@pytest.mark.unit
def test_pairings_with_long_simple_coroot(g2):
    assert g2.pairing(A, B) == -1
    assert g2.pairing(B, B) == 2


@pytest.mark.unit
def test_reflection_formula(g2):
    assert g2.reflect(A, A) == (-1, 0)
    assert g2.reflect(A, B) == (3, 1)
    assert g2.reflect(A, (3, 2)) == (3, 2)


@pytest.mark.unit
def test_coroot_reflection(g2):
    a_v, b_v = Cocharacter((1, 0)), Cocharacter((0, 1))

    assert g2.coroot_reflect(A, a_v) == -a_v
    assert g2.coroot_reflect(A, b_v) == a_v + b_v


@pytest.mark.unit
def test_cocharacter_arithmetic():
    lam = Cocharacter((1, 2))

    assert lam + Cocharacter((1, 0)) == Cocharacter((2, 2))
    assert lam - lam == Cocharacter((0, 0))
    assert 2 * lam == Cocharacter((2, 4))
    assert lam.label == "h1+2h2"


@pytest.mark.unit
def test_cochar_weights_for_parabolic(g2):
    weights = g2.cochar_weights(Cocharacter((1, 2)))

    assert [weights[r] for r in g2.positive_roots] == [0, 1, 1, 1, 1, 2]
    assert weights[(-3, -2)] == -2


@pytest.mark.unit
def test_foreign_root_raises(g2):
    with pytest.raises(ForeignRootError):
        g2.index((5, 5))
    assert not g2.is_root((2, 2))


# =============================================================================
# Closed subsystems
# =============================================================================

@pytest.mark.unit
def test_closed_subsystems_of_g2(g2):
    assert g2.is_closed_subsystem([A, (-1, 0), (3, 2), (-3, -2)])
    assert g2.is_closed_subsystem([A, (-1, 0)])
    assert not g2.is_closed_subsystem([A, (-1, 0), B, (0, -1)])


@pytest.mark.unit
def test_closed_subsystem_requires_symmetry(g2):
    with pytest.raises(NonSymmetricSubsetError):
        g2.is_closed_subsystem([A])


# =============================================================================
# Type labels and primes
# =============================================================================

@pytest.mark.unit
def test_parse_type_label():
    assert parse_type_label("g2") == ("G", 2)
    assert parse_type_label(" E8 ") == ("E", 8)


@pytest.mark.unit
@pytest.mark.parametrize("label", ["", "H3", "A9", "B1", "D3", "E5", "F3", "G3", "2G"])
def test_parse_type_label_rejects(label):
    with pytest.raises(UnsupportedTypeError):
        parse_type_label(label)


@pytest.mark.unit
def test_rootsystem_build_rejects_bad_rank():
    with pytest.raises(UnsupportedTypeError):
        rootsystem_build("C", 1)


@pytest.mark.unit
def test_supported_type_labels():
    labels = supported_type_labels()

    assert len(labels) == 32
    assert {"A1", "A8", "B2", "C8", "D4", "E6", "E8", "F4", "G2"} <= set(labels)
    assert "D3" not in labels


@pytest.mark.unit
def test_bad_primes_for_every_supported_type():
    for label in supported_type_labels():
        rs = rootsystem_from_label(label)
        bad = set(rs.classify_primes().bad)
        if rs.type_label == "A":
            expected = set()
        elif rs.type_label in "BCD":
            expected = {2}
        elif label == "E8":
            expected = {2, 3, 5}
        else:
            expected = {2, 3}
        assert bad == expected, label


@pytest.mark.unit
def test_very_good_primes_in_type_a():
    primes = rootsystem_from_label("A5").classify_primes()

    assert primes.is_good(2)
    assert not primes.is_very_good(2)
    assert not primes.is_very_good(3)
    assert primes.is_very_good(5)
    assert primes.not_very_good_extra() == (2, 3)


@pytest.mark.unit
def test_prime_classification_to_dict():
    assert rootsystem_from_label("A4").classify_primes().to_dict() == {
        "bad": [],
        "not_very_good_extra": [5],
    }
    assert rootsystem_from_label("G2").classify_primes().to_dict() == {
        "bad": [2, 3],
        "not_very_good_extra": [],
    }
