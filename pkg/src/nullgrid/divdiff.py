"""Generalized divided differences on multiset grids.

The bracket of a polynomial against a grid is the coefficient of the largest
standard monomial in its reduced form.  It can be computed two independent
ways: definitionally (reduce, then read the coefficient) or by a recursion
that splits one coordinate multiset at two distinct elements and divides by
their difference, bottoming out in expansion coefficients at single points.
Expanding that recursion symbolically yields a weight table: field constants,
depending only on the grid, expressing the bracket as a linear combination of
pointwise expansion coefficients.  The weights attached to the maximal
exponents are never zero, which is what powers the witness search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .errors import PreconditionError
from .fields import FieldElement
from .ideals import MultisetGrid, _check_poly_grid, reduce_poly
from .polynomials import MultiPoly

# a grid state is one row per coordinate, each row a tuple of
# (canonical representative, multiplicity) pairs sorted by representative
_State = Tuple[Tuple[Tuple[object, int], ...], ...]


def _state_of(grid: MultisetGrid) -> _State:
    return tuple(
        tuple((e.value, m) for e, m in ms.entries.items()) for ms in grid.sets
    )


def _drop_one(row, value):
    out = []
    for v, m in row:
        if v == value:
            if m > 1:
                out.append((v, m - 1))
        else:
            out.append((v, m))
    return tuple(out)


def _pick_pivot(state: _State, rng=None):
    eligible = [i for i, row in enumerate(state) if len(row) >= 2]
    if rng is None:
        i = eligible[0]
        return i, state[i][0][0], state[i][1][0]
    i = rng.choice(eligible)
    a, b = rng.sample([v for v, _ in state[i]], 2)
    return i, a, b


def divided_difference(f: MultiPoly, grid: MultisetGrid) -> FieldElement:
    """Definitional bracket: the coefficient of the largest standard monomial
    in the remainder of f modulo the grid generators."""
    _check_poly_grid(f, grid)
    return reduce_poly(f, grid).remainder.coefficient(grid.top_exponent)


def divided_difference_recursive(f: MultiPoly, grid: MultisetGrid, rng=None) -> FieldElement:
    """Recursive bracket; agrees with divided_difference on every input.

    The canonical pivot (first coordinate with two distinct elements, its two
    smallest elements) makes traces reproducible; pass an rng to randomize the
    pivots instead, which must not change the value.  Sub-brackets are
    memoized, the two pivot elements are distinct so the division is always
    legal, and single-point states reduce to one expansion coefficient.
    """
    _check_poly_grid(f, grid)
    spec = f.spec
    shifts: Dict[tuple, MultiPoly] = {}

    def expansion_at(point_raw, u):
        g = shifts.get(point_raw)
        if g is None:
            g = f.shift([FieldElement(v, spec) for v in point_raw])
            shifts[point_raw] = g
        return g.coefficient(u).value

    memo: Dict[_State, object] = {}

    def go(state: _State):
        cached = memo.get(state)
        if cached is not None:
            return cached
        if all(len(row) == 1 for row in state):
            point = tuple(row[0][0] for row in state)
            u = tuple(row[0][1] - 1 for row in state)
            val = expansion_at(point, u)
        else:
            i, a, b = _pick_pivot(state, rng)
            left = state[:i] + (_drop_one(state[i], a),) + state[i + 1:]
            right = state[:i] + (_drop_one(state[i], b),) + state[i + 1:]
            val = spec._mul(
                spec._sub(go(left), go(right)), spec._inv(spec._sub(b, a))
            )
        memo[state] = val
        return val

    return FieldElement(go(_state_of(grid)), spec)


@dataclass
class WeightTable:
    """Grid-determined weights turning pointwise expansion coefficients into
    the bracket.  The domain is exactly the pairs (grid point, exponent below
    the point's multiplicity vector); there are prod(d_i) of them."""

    grid: MultisetGrid
    weights: Dict[Tuple[Tuple[FieldElement, ...], Tuple[int, ...]], FieldElement]

    def weight(self, point, exponent) -> FieldElement:
        return self.weights[(tuple(point), tuple(exponent))]

    def sorted_items(self):
        return sorted(
            self.weights.items(),
            key=lambda kv: (tuple(e.sort_key() for e in kv[0][0]), kv[0][1]),
        )


def weight_table(grid: MultisetGrid) -> WeightTable:
    """Expand the bracket recursion symbolically, treating the polynomial as an
    indeterminate functional, and collect the weight of every base term."""
    spec = grid.spec
    zero = spec._zero_raw
    memo: Dict[_State, dict] = {}

    def go(state: _State) -> dict:
        cached = memo.get(state)
        if cached is not None:
            return cached
        if all(len(row) == 1 for row in state):
            point = tuple(row[0][0] for row in state)
            u = tuple(row[0][1] - 1 for row in state)
            res = {(point, u): spec._one_raw}
        else:
            i, a, b = _pick_pivot(state)
            left = go(state[:i] + (_drop_one(state[i], a),) + state[i + 1:])
            right = go(state[:i] + (_drop_one(state[i], b),) + state[i + 1:])
            inv = spec._inv(spec._sub(b, a))
            res = {k: spec._mul(v, inv) for k, v in left.items()}
            for k, v in right.items():
                t = spec._sub(res.get(k, zero), spec._mul(v, inv))
                if t:
                    res[k] = t
                else:
                    res.pop(k, None)
        memo[state] = res
        return res

    raw = go(_state_of(grid))
    weights = {}
    for point in grid.points():
        mv = grid.multiplicity_vector(point)
        key_point = tuple(e.value for e in point)
        for u in itertools.product(*(range(m) for m in mv)):
            weights[(point, u)] = FieldElement(raw.get((key_point, u), zero), spec)
    return WeightTable(grid, weights)


def top_weight_closed_form(grid: MultisetGrid, point) -> FieldElement:
    """Closed form for the weight at a point's maximal exponent: the product
    over coordinates of (s_i - s')^(-mult(s')) over the other elements s' of
    the i-th multiset.  Never zero; cross-checked against weight_table."""
    point = tuple(grid.spec.element(x) for x in point)
    grid.multiplicity_vector(point)  # raises if the point is off the grid
    spec = grid.spec
    denom = spec._one_raw
    for i, ms in enumerate(grid.sets):
        si = point[i].value
        for other, mult in ms.entries.items():
            if other.value != si:
                denom = spec._mul(denom, spec._pow(spec._sub(si, other.value), mult))
    return FieldElement(spec._inv(denom), spec)


def top_coefficient_identity_holds(
    f: MultiPoly, grid: MultisetGrid, table: Optional[WeightTable] = None
) -> bool:
    """For deg f at most the sum of (d_i - 1), the coefficient of the largest
    standard monomial must equal the weighted sum of f's expansion
    coefficients over the grid.  Exposed so tests can falsify broken tables."""
    _check_poly_grid(f, grid)
    t = grid.top_exponent
    deg = f.total_degree()
    if deg is not None and deg > sum(t):
        raise PreconditionError(
            "degree", f"deg f = {deg} exceeds the admissible total {sum(t)}"
        )
    if table is None:
        table = weight_table(grid)
    spec = f.spec
    acc = spec._zero_raw
    for point in grid.points():
        mv = grid.multiplicity_vector(point)
        shifted = f.shift(point)
        for u in itertools.product(*(range(m) for m in mv)):
            w = table.weight(point, u)
            if w.value:
                acc = spec._add(acc, spec._mul(w.value, shifted.coefficient(u).value))
    return f.coefficient(t).value == acc
