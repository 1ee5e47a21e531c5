import random

import pytest

from tautcalc.homology import (
    Family,
    SymplecticSpace,
    TwistGenerator,
    TwistWord,
    fixed_homology_trivial,
    image_check,
    mapping_torus_b2,
    word_action,
)
from tautcalc.penner import (
    CurveSystem,
    FillingStatus,
    Region,
    extend_to_genus,
    filling_check,
    genus3_marked_classes,
    genus3_system,
    validate_word,
)


def chain_system(genus, labels_and_families):
    """Small helper: chain with consecutive intersection one."""
    space = SymplecticSpace(genus)
    n = len(labels_and_families)
    geo = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        geo[i][i + 1] = geo[i + 1][i] = 1
    return CurveSystem(genus, tuple(labels_and_families), tuple(tuple(r) for r in geo))


def genus2_example():
    """Five-curve chain on a genus-2 surface: a1, b1, a2, b2, a3."""
    space = SymplecticSpace(2)
    curves = (
        TwistGenerator("a1", space.basis_r(1), Family.A),
        TwistGenerator("b1", space.basis_s(1), Family.B),
        TwistGenerator("a2", space.basis_r(1) + space.basis_r(2), Family.A),
        TwistGenerator("b2", space.basis_s(2), Family.B),
        TwistGenerator("a3", space.basis_r(2), Family.A),
    )
    return chain_system(2, curves)


GENUS2_WORD = TwistWord.of(
    ("a1", 2), ("a2", 1), ("b2", -3), ("a3", 1), ("b1", -1), ("a1", 1)
)


def test_genus2_example_word_valid():
    report = validate_word(GENUS2_WORD, genus2_example())
    assert report.word_valid
    assert report.all_curves_used
    assert report.sign_discipline


def test_genus3_word_valid():
    system, word = genus3_system()
    report = validate_word(word, system)
    assert report.word_valid


def test_unused_curve_invalidates():
    system = genus2_example()
    dropped = TwistWord(tuple(l for l in GENUS2_WORD if l[0] != "b1"))
    report = validate_word(dropped, system)
    assert not report.word_valid
    assert report.all_curves_used is False
    assert report.sign_discipline is True
    assert any("b1" in m for m in report.messages)


def test_mixed_signs_invalidate():
    system = genus2_example()
    mixed = GENUS2_WORD.concat(TwistWord.of(("a1", -1)))
    report = validate_word(mixed, system)
    assert report.sign_discipline is False
    assert not report.word_valid


def test_same_sign_families_invalidate():
    system = genus2_example()
    word = TwistWord.of(("a1", 1), ("a2", 1), ("a3", 1), ("b1", 2), ("b2", 1))
    assert validate_word(word, system).sign_discipline is False


def test_either_orientation_accepted():
    system = genus2_example()
    flipped = TwistWord(tuple((label, -exp) for label, exp in GENUS2_WORD))
    assert validate_word(flipped, system).sign_discipline is True


def test_validity_is_order_independent():
    system = genus2_example()
    rng = random.Random(13)
    letters = list(GENUS2_WORD)
    for _ in range(10):
        rng.shuffle(letters)
        assert validate_word(TwistWord(tuple(letters)), system).word_valid


def test_unknown_label_raises():
    with pytest.raises(ValueError):
        validate_word(TwistWord.of(("zz", 1)), genus2_example())


# -- filling checks ------------------------------------------------------------


def test_chain_passes_necessary_conditions():
    system, _ = genus3_system()
    report = filling_check(system)
    assert report.filling_status is FillingStatus.NECESSARY_ONLY
    assert report.word_valid is None


def test_isolated_curve_fails():
    space = SymplecticSpace(2)
    curves = (
        TwistGenerator("a1", space.basis_r(1), Family.A),
        TwistGenerator("b1", space.basis_s(1), Family.B),
        TwistGenerator("a2", space.basis_r(2), Family.A),
    )
    geo = [[0, 1, 0], [1, 0, 0], [0, 0, 0]]
    system = CurveSystem(2, curves, tuple(tuple(r) for r in geo))
    report = filling_check(system)
    assert report.filling_status is FillingStatus.FAILED


def test_disk_region_certificate_verifies():
    base, word = genus3_system()
    # chain on genus 3: chi = -4, intersections = 6, so 2 disk regions
    expected_regions = (2 - 2 * base.genus) + base.total_intersections
    assert expected_regions == 2
    system = CurveSystem(base.genus, base.curves, base.geo_int, (Region(True), Region(True)))
    assert filling_check(system).filling_status is FillingStatus.VERIFIED
    assert validate_word(word, system).filling_status is FillingStatus.VERIFIED


def test_non_disk_region_fails():
    base, _ = genus3_system()
    system = CurveSystem(base.genus, base.curves, base.geo_int, (Region(True), Region(False)))
    report = filling_check(system)
    assert report.filling_status is FillingStatus.FAILED


def test_miscounted_certificate_fails():
    base, _ = genus3_system()
    system = CurveSystem(base.genus, base.curves, base.geo_int, (Region(True),) * 5)
    report = filling_check(system)
    assert report.filling_status is FillingStatus.FAILED
    assert any("inconsistent" in m for m in report.messages)


def test_same_family_intersection_rejected():
    space = SymplecticSpace(2)
    curves = (
        TwistGenerator("a1", space.basis_r(1), Family.A),
        TwistGenerator("a2", space.basis_s(1), Family.A),
    )
    with pytest.raises(ValueError):
        CurveSystem(2, curves, ((0, 1), (1, 0)))


def test_geo_int_validation():
    space = SymplecticSpace(2)
    curves = (
        TwistGenerator("a1", space.basis_r(1), Family.A),
        TwistGenerator("b1", space.basis_s(1), Family.B),
    )
    with pytest.raises(ValueError):
        CurveSystem(2, curves, ((1, 1), (1, 0)))  # nonzero diagonal
    with pytest.raises(ValueError):
        CurveSystem(2, curves, ((0, 1), (2, 0)))  # not symmetric


# -- bundled systems -------------------------------------------------------------


def test_genus3_system_shape():
    system, word = genus3_system()
    assert system.genus == 3
    assert len(system.curves) == 7
    labels = [c.label for c in system.curves]
    assert labels == ["a1", "b1", "a2", "b2", "a3", "b3", "a4"]
    # written word: b2 a2^- a3^- b1 b3 a1^- a4^-
    assert tuple(word) == (
        ("b2", 1), ("a2", -1), ("a3", -1), ("b1", 1), ("b3", 1), ("a1", -1), ("a4", -1)
    )


def test_genus3_action_has_trivial_fixed_homology():
    system, word = genus3_system()
    action = word_action(word, system.generator_map())
    assert fixed_homology_trivial(action)
    assert mapping_torus_b2(action) == 1
    assert action.det() == 1
    assert action.minus_identity().det() == -4


def test_genus3_marked_classes_carried_by_action():
    system, word = genus3_system()
    action = word_action(word, system.generator_map())
    alpha, beta, gamma = genus3_marked_classes()
    assert (alpha - beta) == gamma
    assert not alpha.is_zero and not beta.is_zero and not gamma.is_zero
    assert alpha.is_primitive and beta.is_primitive and gamma.is_primitive
    result = image_check(action, alpha, beta)
    assert result.sends_to_target
    assert result.targets_distinct


def test_extend_to_genus_shapes():
    for genus in (6, 8):
        system, word = extend_to_genus(genus)
        assert len(system.curves) == 2 * genus + 1
        assert validate_word(word, system).word_valid
        assert len(word) == 2 * genus + 1


def test_extend_to_genus_action():
    system, word = extend_to_genus(6)
    action = word_action(word, system.generator_map())
    assert mapping_torus_b2(action) == 1
    assert abs(action.minus_identity().det()) == 7


def test_extend_requires_genus_six():
    with pytest.raises(ValueError):
        extend_to_genus(5)


def test_bundled_generators_commute_iff_disjoint():
    from tautcalc.homology import algebraic_intersection, transvection_matrix

    system, _ = genus3_system()
    curves = system.curves
    mats = [transvection_matrix(c, 1) for c in curves]
    for i in range(len(curves)):
        for j in range(len(curves)):
            commute = mats[i] @ mats[j] == mats[j] @ mats[i]
            pairing = algebraic_intersection(curves[i].cls, curves[j].cls)
            assert commute == (pairing == 0)
            # chain adjacency: consecutive curves pair to +-1, others to 0
            assert abs(pairing) == (1 if abs(i - j) == 1 else 0)


def test_chain_intersection_graph_is_path():
    for genus in (6, 9):
        system, _ = extend_to_genus(genus)
        n = len(system.curves)
        degrees = [sum(1 for j in range(n) if system.geo_int[i][j] > 0) for i in range(n)]
        assert sorted(degrees)[:2] == [1, 1]
        assert all(d == 2 for d in sorted(degrees)[2:])
