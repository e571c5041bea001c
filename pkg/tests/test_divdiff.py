import itertools
import random
from fractions import Fraction

import pytest

from nullgrid import (
    FieldSpec,
    MultiPoly,
    Multiset,
    MultisetGrid,
    PreconditionError,
    divided_difference,
    divided_difference_recursive,
    parse_poly,
    top_coefficient_identity_holds,
    top_weight_closed_form,
    weight_table,
)
from nullgrid.divdiff import WeightTable
from nullgrid.randgen import rand_grid, rand_poly, rand_spec
from oracles import dual_basis_poly, newton_table_oracle

F2 = FieldSpec.prime(2)
F5 = FieldSpec.prime(5)
Q = FieldSpec.rationals()


def test_bracket_base_cases():
    ms = MultisetGrid([Multiset.of(Q, {4: 1})])
    f = parse_poly("x1^2 - 3", 1, Q)
    assert divided_difference(f, ms).value == 13  # f(4)

    grid = MultisetGrid.of(Q, [{0: 1, 1: 1}])
    assert divided_difference(parse_poly("x1^2", 1, Q), grid).value == 1

    top = MultisetGrid.of(Q, [{0: 1, 1: 1, 2: 1}, {5: 2}])
    f_top = MultiPoly.monomial(2, Q, top.top_exponent)
    assert divided_difference(f_top, top).value == 1


def test_bracket_matches_newton_oracle():
    rng = random.Random(3)
    for _ in range(30):
        spec = rand_spec(rng, rational_weight=0.4)
        pool = list(range(spec.p)) if spec.is_prime_field else list(range(-8, 9))
        k = rng.randint(1, min(4, len(pool)))
        nodes = [spec.element(v) for v in rng.sample(pool, k)]
        grid = MultisetGrid([Multiset(spec, [(x, 1) for x in nodes])])
        f = rand_poly(rng, spec, 1, max_deg=4)
        expected = newton_table_oracle(
            sorted(nodes, key=lambda e: e.sort_key()),
            [f.evaluate([x]) for x in sorted(nodes, key=lambda e: e.sort_key())],
        )
        assert divided_difference(f, grid) == expected
        assert divided_difference_recursive(f, grid) == expected


def test_second_difference_example():
    grid = MultisetGrid.of(Q, [{0: 1, 1: 1, 2: 1}])
    f = parse_poly("x1^2", 1, Q)
    assert divided_difference_recursive(f, grid).value == 1


def test_singleton_multiplicity_is_expansion_coefficient():
    grid = MultisetGrid.of(Q, [{3: 4}])
    f = parse_poly("x1^4 + 2*x1^3", 1, Q)
    expected = f.expansion_coefficients([Q.element(3)], (4,))[(3,)]
    assert divided_difference(f, grid) == expected
    assert divided_difference_recursive(f, grid) == expected


def test_definitional_equals_recursive_random():
    rng = random.Random(11)
    for _ in range(60):
        spec = rand_spec(rng, rational_weight=0.25)
        n = rng.randint(1, 3)
        grid = rand_grid(rng, spec, n, max_size=4)
        f = rand_poly(rng, spec, n, max_deg=6)
        assert divided_difference(f, grid) == divided_difference_recursive(f, grid)


def test_randomized_pivots_agree_with_canonical():
    rng = random.Random(13)
    for trial in range(30):
        spec = rand_spec(rng, rational_weight=0.25)
        n = rng.randint(1, 2)
        grid = rand_grid(rng, spec, n, max_size=4)
        f = rand_poly(rng, spec, n, max_deg=5)
        canonical = divided_difference_recursive(f, grid)
        pivot_rng = random.Random(1000 + trial)
        assert divided_difference_recursive(f, grid, rng=pivot_rng) == canonical


def test_weight_table_examples():
    t01 = weight_table(MultisetGrid.of(Q, [{0: 1, 1: 1}]))
    vals = {pt[0].value: w.value for (pt, u), w in t01.weights.items()}
    assert vals == {0: -1, 1: 1}

    t012 = weight_table(MultisetGrid.of(Q, [{0: 1, 1: 1, 2: 1}]))
    vals = {pt[0].value: w.value for (pt, u), w in t012.weights.items()}
    assert vals == {0: Fraction(1, 2), 1: -1, 2: Fraction(1, 2)}

    single = weight_table(MultisetGrid.of(Q, [{7: 3}]))
    assert {(pt[0].value, u): w.value for (pt, u), w in single.weights.items()} == {
        (7, (0,)): 0,
        (7, (1,)): 0,
        (7, (2,)): 1,
    }


def test_weight_table_domain_cardinality():
    rng = random.Random(17)
    for _ in range(20):
        spec = rand_spec(rng)
        grid = rand_grid(rng, spec, rng.randint(1, 2), max_size=4)
        table = weight_table(grid)
        expected = 1
        for d in grid.sizes:
            expected *= d
        assert len(table.weights) == expected
        for (point, u) in table.weights:
            mv = grid.multiplicity_vector(point)
            assert all(e < m for e, m in zip(u, mv))


def test_top_weights_match_closed_form_and_are_nonzero():
    grid = MultisetGrid.of(Q, [{0: 1, 1: 1}])
    assert top_weight_closed_form(grid, [1]).value == 1
    assert top_weight_closed_form(grid, [0]).value == -1
    assert top_weight_closed_form(MultisetGrid.of(Q, [{9: 4}]), [9]).value == 1

    rng = random.Random(19)
    for _ in range(25):
        spec = rand_spec(rng, rational_weight=0.3)
        grid = rand_grid(rng, spec, rng.randint(1, 2), max_size=4)
        table = weight_table(grid)
        for point in grid.points():
            mv = grid.multiplicity_vector(point)
            top = tuple(m - 1 for m in mv)
            w = table.weight(point, top)
            assert not w.is_zero()
            assert w == top_weight_closed_form(grid, point)
    with pytest.raises(ValueError):
        top_weight_closed_form(grid, [2])


def test_identity_examples():
    grid = MultisetGrid.of(Q, [{0: 1, 1: 1, 2: 1}, {0: 2}])
    t = grid.top_exponent
    assert top_coefficient_identity_holds(MultiPoly.monomial(2, Q, t), grid)
    assert top_coefficient_identity_holds(MultiPoly.constant(2, Q, 9), grid)
    assert top_coefficient_identity_holds(MultiPoly.zero(2, Q), grid)
    with pytest.raises(PreconditionError):
        top_coefficient_identity_holds(parse_poly("x1^4*x2^2", 2, Q), grid)


def test_identity_random():
    rng = random.Random(23)
    for _ in range(50):
        spec = rand_spec(rng, rational_weight=0.25)
        n = rng.randint(1, 2)
        grid = rand_grid(rng, spec, n, max_size=4)
        budget = sum(grid.top_exponent)
        f = rand_poly(rng, spec, n, max_deg=budget) if budget else MultiPoly.constant(n, spec, 1)
        assert top_coefficient_identity_holds(f, grid)


def test_single_entry_perturbation_is_detected():
    rng = random.Random(29)
    for _ in range(25):
        spec = rand_spec(rng, rational_weight=0.3)
        n = rng.randint(1, 2)
        grid = rand_grid(rng, spec, n, max_size=3)
        table = weight_table(grid)
        key = rng.choice(sorted(table.weights, key=lambda k: (tuple(e.sort_key() for e in k[0]), k[1])))
        point, u = key
        delta = spec.one if spec.is_prime_field else spec.element(Fraction(1, 3))
        broken = WeightTable(grid, {**table.weights, key: table.weights[key] + delta})
        probe = dual_basis_poly(grid, point, u)
        deg = probe.total_degree()
        assert deg is not None and deg <= sum(grid.top_exponent)
        assert top_coefficient_identity_holds(probe, grid, table)
        assert not top_coefficient_identity_holds(probe, grid, broken)


def test_weight_table_degenerates_to_expansion_extraction():
    # singleton coordinates: the only weight is 1 at the top exponent, so the
    # bracket is a pure expansion coefficient
    grid = MultisetGrid.of(F5, [{2: 3}, {4: 2}])
    table = weight_table(grid)
    point = (F5.element(2), F5.element(4))
    for u in itertools.product(range(3), range(2)):
        expected = 1 if u == (2, 1) else 0
        assert table.weight(point, u).value == expected
