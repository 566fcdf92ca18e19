"""Root systems and the orthogonal-A1 search."""

import pytest

from wordmap import (
    InvalidType,
    build,
    expected_star,
    star_search,
    verify_lemma_table,
    verify_witness,
)


def test_counts_match_classical_formulas():
    assert build("A", 1).count() == 2
    assert build("A", 4).count() == 20
    assert build("B", 3).count() == 18
    assert build("C", 4).count() == 32
    assert build("D", 5).count() == 40
    assert build("E", 6).count() == 72
    assert build("E", 7).count() == 126
    assert build("E", 8).count() == 240
    assert build("F", 4).count() == 48
    assert build("G", 2).count() == 12


def test_negation_closure_and_cartan_integrality():
    # _validate runs inside build; spot-check the conditions independently
    for label, rank in [("B", 3), ("G", 2), ("E", 6), ("F", 4)]:
        system = build(label, rank)
        roots = set(system.roots)
        for alpha in system.roots:
            assert tuple(-c for c in alpha) in roots
            for beta in system.roots:
                num = 2 * sum(a * b for a, b in zip(alpha, beta))
                den = sum(b * b for b in beta)
                assert num % den == 0


def test_g2_contains_expected_roots():
    system = build("G", 2)
    assert (2, -2, 0) in system.roots  # e1 - e2 (doubled)
    assert (2, 2, -4) in system.roots  # e1 + e2 - 2 e3 (doubled)


def test_invalid_types():
    for label, rank in [("A", 0), ("B", 1), ("D", 3), ("E", 5), ("F", 3), ("G", 3), ("H", 2)]:
        with pytest.raises(InvalidType):
            build(label, rank)


def test_b3_witness():
    result = star_search(build("B", 3))
    assert result.holds
    assert set(result.witness) == {(2, 2, 0), (2, -2, 0), (0, 0, 2)}


def test_c3_witness_long_roots():
    result = star_search(build("C", 3))
    assert result.holds
    assert set(result.witness) == {(4, 0, 0), (0, 4, 0), (0, 0, 4)}


def test_failures():
    for label, rank in [("A", 2), ("A", 5), ("D", 5), ("D", 7), ("E", 6)]:
        assert not star_search(build(label, rank)).holds


def test_successes_with_verified_witnesses():
    for label, rank in [
        ("A", 1), ("B", 2), ("B", 7), ("C", 2), ("C", 8),
        ("D", 4), ("D", 6), ("D", 8), ("E", 7), ("E", 8), ("F", 4), ("G", 2),
    ]:
        system = build(label, rank)
        result = star_search(system)
        assert result.holds, (label, rank)
        assert verify_witness(system, result.witness)


def test_witness_verification_rejects_bad_sets():
    system = build("C", 3)
    # wrong cardinality
    assert not verify_witness(system, [(4, 0, 0)])
    # not orthogonal
    assert not verify_witness(system, [(4, 0, 0), (2, 2, 0), (0, 0, 4)])
    # sums present in R: in B3, {e1, e2, e3} fails because e1+e2 is a root
    b3 = build("B", 3)
    assert not verify_witness(b3, [(2, 0, 0), (0, 2, 0), (0, 0, 2)])


def test_search_deterministic():
    a = star_search(build("E", 7))
    b = star_search(build("E", 7))
    assert a == b


def test_lemma_table_no_discrepancies():
    rows = verify_lemma_table(8)
    assert all(row.holds == row.expected for row in rows)
    cells = {(r.type_label, r.rank) for r in rows}
    assert ("A", 1) in cells and ("A", 8) in cells
    assert ("B", 2) in cells and ("C", 8) in cells
    assert ("D", 4) in cells and ("D", 8) in cells
    assert ("E", 6) in cells and ("E", 8) in cells
    assert ("F", 4) in cells and ("G", 2) in cells
    with pytest.raises(InvalidType):
        verify_lemma_table(9)


def test_expected_star_table():
    assert expected_star("A", 1) and not expected_star("A", 2)
    assert expected_star("D", 6) and not expected_star("D", 5)
    assert expected_star("E", 7) and not expected_star("E", 6)
    assert expected_star("B", 5) and expected_star("C", 5)
    assert expected_star("F", 4) and expected_star("G", 2)
