import random
from fractions import Fraction

import pytest

import helpers
from orthogram import (
    GraphPolynomial,
    Multigraph,
    PointConfiguration,
    counterexample_matrix,
    counterexample_relation,
    determinant_polynomial,
    entry_cofactor_relations,
    enumerate_determinantal_classes,
    euclidean_configuration,
    eval_monomial,
    identity,
    minor_polynomial,
    multidegree,
    plucker_bracket,
    plucker_syzygy,
    vanishes_on_low_rank,
)
from orthogram.graphs import all_loops

TRIANGLE = Multigraph.of(3, [(0, 1), (0, 2), (1, 2)])


def test_eval_monomial_examples():
    assert eval_monomial(all_loops(3), identity(3)) == 1
    assert eval_monomial(TRIANGLE, identity(3)) == 0
    matched = Multigraph.of(5, [(0, 2), (0, 2), (1, 3), (1, 3), (4, 4)])
    assert eval_monomial(matched, counterexample_matrix()) == 1


def test_eval_monomial_size_mismatch():
    with pytest.raises(ValueError):
        eval_monomial(TRIANGLE, identity(4))


def test_multidegree():
    assert multidegree(TRIANGLE) == (2, 2, 2)
    assert multidegree(Multigraph.of(3, [(0, 1)])) == (1, 1, 0)
    relation = counterexample_relation()
    degrees = {multidegree(g) for _, g in relation.terms}
    assert degrees == {(4, 4, 4, 4, 4)}


def test_polynomial_combines_duplicates():
    p = GraphPolynomial.of(3, [(1, TRIANGLE), (2, TRIANGLE), (-3, TRIANGLE)])
    assert p.is_zero()
    q = GraphPolynomial.of(3, [(1, TRIANGLE), (Fraction(1, 2), all_loops(3))])
    assert len(q.terms) == 2


def test_determinant_polynomial_m3_coefficients():
    poly = determinant_polynomial(3)
    coeff = {g: c for c, g in poly.terms}
    assert coeff[TRIANGLE] == 2
    assert coeff[all_loops(3)] == 1
    for (a, b, c) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)]:
        assert coeff[Multigraph.of(3, [(a, b), (a, b), (c, c)])] == -1
    assert sorted(coeff.values()) == [-1, -1, -1, 1, 2]


def test_determinant_polynomial_m1():
    poly = determinant_polynomial(1)
    assert poly.terms == ((Fraction(1), all_loops(1)),)


def test_determinant_polynomial_evaluates_to_determinant():
    rng = random.Random(17)
    for m in (2, 3, 4, 5):
        poly = determinant_polynomial(m)
        for _ in range(20):
            matrix = helpers.random_symmetric(rng, m, span=5)
            assert poly.evaluate(matrix) == helpers.cofactor_det(matrix.rows)


def test_determinant_polynomial_matches_minor_expansion():
    for m in (2, 3, 4):
        everything = list(range(m))
        assert determinant_polynomial(m) == minor_polynomial(m, everything, everything)


def test_cubic_monomial_identity():
    # product of the three pair-plus-loop monomials equals
    # triangle^2 times the all-loops monomial
    t1 = Multigraph.of(3, [(0, 1), (0, 1), (2, 2)])
    t2 = Multigraph.of(3, [(0, 2), (0, 2), (1, 1)])
    t3 = Multigraph.of(3, [(1, 2), (1, 2), (0, 0)])
    lhs = t1.union(t2).union(t3)
    rhs = TRIANGLE.union(TRIANGLE).union(all_loops(3))
    assert lhs == rhs


def test_orientation_independence_of_classes():
    # both orientations of a long cycle give one unordered monomial, so
    # evaluating the class and summing signed permutation products agree
    rng = random.Random(19)
    matrix = helpers.random_symmetric(rng, 4)
    assert determinant_polynomial(4).evaluate(matrix) == matrix.det()


def test_low_rank_vanishing_det3():
    outcome = vanishes_on_low_rank(determinant_polynomial(3), 2)
    assert outcome.vanishes and outcome.witness is None


def test_low_rank_vanishing_counterexample_relation():
    relation = counterexample_relation()
    outcome = vanishes_on_low_rank(relation, 3, trials=20, seed=0)
    assert outcome.vanishes
    assert relation.evaluate(counterexample_matrix()) == -3


def test_low_rank_nonmember_has_witness():
    p = GraphPolynomial.of(1, [(1, all_loops(1))])  # the single diagonal entry
    outcome = vanishes_on_low_rank(p, 1, trials=10, seed=1)
    assert not outcome.vanishes
    assert outcome.witness is not None
    assert p.evaluate(outcome.witness) != 0


def test_low_rank_validation():
    with pytest.raises(ValueError):
        vanishes_on_low_rank(determinant_polynomial(2), 1, trials=0)


def test_entry_cofactor_relations_m4():
    relations = entry_cofactor_relations(4)
    assert len(relations) == 10
    for p in relations:
        degrees = {multidegree(g) for _, g in p.terms}
        assert degrees == {(2, 2, 2, 2)}
        assert vanishes_on_low_rank(p, 2, trials=10, seed=3).vanishes
    # span rank over the 17 class monomials, by an independent elimination
    basis = [cls.graph for cls in enumerate_determinantal_classes(4)]
    index = {g: i for i, g in enumerate(basis)}
    rows = []
    for p in relations:
        row = [Fraction(0)] * len(basis)
        for c, g in p.terms:
            row[index[g]] = c
        rows.append(row)
    assert helpers.gauss_rank(rows) == 7


def test_entry_cofactor_relations_vanish_on_rank2_samples():
    rng = random.Random(4)
    for p in entry_cofactor_relations(4):
        for _ in range(5):
            b = helpers.random_matrix(rng, 2, 4, span=4)
            gram = (b.transpose() @ b).as_symmetric()
            assert p.evaluate(gram) == 0


def test_polynomial_json_round_trip():
    poly = determinant_polynomial(3)
    payload = poly.to_json()
    assert payload["m"] == 3
    assert GraphPolynomial.from_json(payload) == poly


def test_plucker_bracket_basic():
    config = euclidean_configuration([(1, 0), (0, 1)])
    assert plucker_bracket(config, [0, 1]) == 1
    assert plucker_bracket(config, [0, 0]) == 0
    with pytest.raises(ValueError):
        plucker_bracket(config, [0])


def test_plucker_product_relation_with_form_factor():
    # det of the cross pairing block equals det(form) * p_I * p_J
    rng = random.Random(21)
    for _ in range(15):
        n = rng.randint(1, 3)
        form = helpers.random_positive_definite(rng, n + 1)
        m = n + 1 + rng.randint(0, 2)
        vectors = [
            tuple(Fraction(rng.randint(-4, 4)) for _ in range(n + 1)) for _ in range(m)
        ]
        if any(all(x == 0 for x in v) for v in vectors):
            continue
        config = PointConfiguration.of(form, vectors)
        i_set = tuple(sorted(rng.sample(range(m), n + 1)))
        j_set = tuple(sorted(rng.sample(range(m), n + 1)))
        block = [
            [config.pairing(a, b) for b in j_set] for a in i_set
        ]
        lhs = helpers.cofactor_det(block)
        rhs = form.det() * plucker_bracket(config, i_set) * plucker_bracket(config, j_set)
        assert lhs == rhs


def test_plucker_syzygy_hand_example():
    config = euclidean_configuration([(1, 0), (0, 1), (1, 1)])
    assert plucker_syzygy(config, [0, 1, 2], 0) == 0


def test_plucker_syzygy_randomized():
    rng = random.Random(27)
    for _ in range(50):
        n = rng.randint(1, 3)
        m = n + 2 + rng.randint(0, 1)
        vectors = []
        while len(vectors) < m:
            v = tuple(helpers.random_fraction(rng, 5) for _ in range(n + 1))
            if any(x != 0 for x in v):
                vectors.append(v)
        config = euclidean_configuration(vectors)
        indices = sorted(rng.sample(range(m), n + 2))
        k = rng.randrange(m)
        assert plucker_syzygy(config, indices, k) == 0
    with pytest.raises(ValueError):
        plucker_syzygy(config, list(range(n + 1)), 0)
