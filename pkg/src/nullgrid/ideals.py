"""Multisets, multiset grids, and the ideal of functions vanishing on a grid
with prescribed multiplicities.

Each coordinate carries a finite nonempty multiset; the grid ideal is cut out
by one monic univariate generator per coordinate, the product of (x_i - s)
raised to the multiplicity of s.  Reducing a polynomial modulo those
generators terminates, produces a unique remainder with per-variable degrees
below the multiset sizes, and decides ideal membership; membership can be
cross-checked pointwise through expansion coefficients, and the remainder and
cofactors never leave the subring generated by the inputs' coefficients
because the generators are monic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import ArityMismatchError, FieldMismatchError, PreconditionError
from .fields import FieldElement, FieldSpec
from .polynomials import MultiPoly, TermOrder, _grlex_key


class Multiset:
    """A finite nonempty multiset of field elements with multiplicities >= 1."""

    __slots__ = ("spec", "entries", "support")

    def __init__(self, spec: FieldSpec, pairs: Iterable):
        entries: Dict[FieldElement, int] = {}
        for value, mult in pairs:
            elem = spec.element(value)
            if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
                raise ValueError(f"multiplicity of {elem} must be a positive integer, got {mult!r}")
            if elem in entries:
                raise ValueError(f"duplicate element {elem} in multiset input")
            entries[elem] = mult
        if not entries:
            raise ValueError("multiset must be nonempty")
        self.spec = spec
        self.support = tuple(sorted(entries, key=FieldElement.sort_key))
        self.entries = {e: entries[e] for e in self.support}

    @classmethod
    def of(cls, spec: FieldSpec, mapping: Dict) -> "Multiset":
        return cls(spec, mapping.items())

    @property
    def size(self) -> int:
        """Total size counted with multiplicity."""
        return sum(self.entries.values())

    def multiplicity(self, value) -> int:
        return self.entries.get(self.spec.element(value), 0)

    def items(self):
        return tuple(self.entries.items())

    def generator_poly(self, var: int, arity: int) -> MultiPoly:
        """The monic univariate product of (x_{var+1} - s)^mult over this multiset."""
        spec = self.spec
        g = MultiPoly.constant(arity, spec, 1)
        x = MultiPoly.variable(arity, spec, var)
        for elem, mult in self.entries.items():
            g = g * (x - MultiPoly.constant(arity, spec, elem)) ** mult
        return g

    def __eq__(self, other):
        if not isinstance(other, Multiset):
            return NotImplemented
        return self.spec == other.spec and self.entries == other.entries

    def __hash__(self):
        return hash((self.spec, tuple(self.entries.items())))

    def __str__(self):
        return "{" + ", ".join(f"{e}:{m}" for e, m in self.entries.items()) + "}"

    def __repr__(self):
        return f"Multiset({self})"


class MultisetGrid:
    """A product of coordinate multisets over one shared field."""

    __slots__ = ("spec", "sets")

    def __init__(self, sets: Sequence[Multiset]):
        sets = tuple(sets)
        if not sets:
            raise ValueError("grid needs at least one coordinate multiset")
        spec = sets[0].spec
        for ms in sets[1:]:
            if ms.spec != spec:
                raise FieldMismatchError("grid multisets span different fields")
        self.spec = spec
        self.sets = sets

    @classmethod
    def of(cls, spec: FieldSpec, mappings: Sequence[Dict]) -> "MultisetGrid":
        return cls([Multiset.of(spec, m) for m in mappings])

    @property
    def arity(self) -> int:
        return len(self.sets)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(ms.size for ms in self.sets)

    @property
    def top_exponent(self) -> Tuple[int, ...]:
        """Componentwise sizes minus one: the largest standard monomial."""
        return tuple(d - 1 for d in self.sizes)

    def points(self):
        """All grid points, in lexicographic order of canonical representatives."""
        return itertools.product(*(ms.support for ms in self.sets))

    def point_count(self) -> int:
        prod = 1
        for ms in self.sets:
            prod *= len(ms.support)
        return prod

    def multiplicity_vector(self, point: Sequence) -> Tuple[int, ...]:
        if len(point) != self.arity:
            raise ArityMismatchError(f"point of length {len(point)} for arity {self.arity}")
        vec = []
        for ms, x in zip(self.sets, point):
            m = ms.multiplicity(x)
            if m == 0:
                raise ValueError(f"{x} is not in the grid's coordinate multiset")
            vec.append(m)
        return tuple(vec)

    def contains_point(self, point: Sequence) -> bool:
        return len(point) == self.arity and all(
            ms.multiplicity(x) > 0 for ms, x in zip(self.sets, point)
        )

    def generators(self) -> Tuple[MultiPoly, ...]:
        n = self.arity
        return tuple(ms.generator_poly(i, n) for i, ms in enumerate(self.sets))

    def replace(self, index: int, ms: Multiset) -> "MultisetGrid":
        sets = list(self.sets)
        sets[index] = ms
        return MultisetGrid(sets)

    def __eq__(self, other):
        if not isinstance(other, MultisetGrid):
            return NotImplemented
        return self.sets == other.sets

    def __str__(self):
        return " x ".join(str(ms) for ms in self.sets)

    def __repr__(self):
        return f"MultisetGrid({self})"


@dataclass
class ReductionResult:
    """Remainder plus cofactors certifying f = remainder + sum h_i * g_i,
    with deg_i(remainder) < d_i and deg(h_i) <= deg(f) - d_i."""

    remainder: MultiPoly
    cofactors: Tuple[MultiPoly, ...]


def _check_poly_grid(f: MultiPoly, grid: MultisetGrid):
    if f.arity != grid.arity:
        raise ArityMismatchError(f"polynomial arity {f.arity} vs grid arity {grid.arity}")
    if f.spec != grid.spec:
        raise FieldMismatchError(f"polynomial over {f.spec}, grid over {grid.spec}")


def reduce_poly(f: MultiPoly, grid: MultisetGrid) -> ReductionResult:
    """Reduce f modulo the grid generators.

    Strategy: repeatedly eliminate the graded-lex-largest monomial whose i-th
    exponent reaches the i-th multiset size (smallest such i when several
    qualify).  Every elimination replaces the monomial by strictly smaller
    total degrees, so the loop terminates; the remainder is independent of
    the strategy, and fixing one makes the cofactors reproducible.
    """
    _check_poly_grid(f, grid)
    spec = f.spec
    n = grid.arity
    d = grid.sizes
    zero = spec._zero_raw
    # generator tails: g_i minus its leading monomial, as univariate (exp, coeff) pairs
    tails: List[List[Tuple[int, object]]] = []
    for i, g in enumerate(grid.generators()):
        tails.append([(u[i], c.value) for u, c in g.terms.items() if u[i] != d[i]])

    work = {u: c.value for u, c in f.terms.items()}
    cof: List[Dict[Tuple[int, ...], object]] = [dict() for _ in range(n)]
    while True:
        target = None
        for u in work:
            for i in range(n):
                if u[i] >= d[i]:
                    if target is None or _grlex_key(u) > _grlex_key(target[0]):
                        target = (u, i)
                    break
        if target is None:
            break
        u, i = target
        c = work.pop(u)
        q = u[:i] + (u[i] - d[i],) + u[i + 1:]
        cof[i][q] = spec._add(cof[i].get(q, zero), c)
        for e, b in tails[i]:
            w = q[:i] + (q[i] + e,) + q[i + 1:]
            v = spec._sub(work.get(w, zero), spec._mul(c, b))
            if v:
                work[w] = v
            else:
                work.pop(w, None)
    return ReductionResult(
        remainder=MultiPoly._from_raw(n, spec, work),
        cofactors=tuple(MultiPoly._from_raw(n, spec, h) for h in cof),
    )


def in_local_ideal(f: MultiPoly, point: Sequence, box: Sequence[int]) -> bool:
    """Whether every expansion coefficient of f at the point with exponent
    strictly below box (componentwise) vanishes."""
    if len(box) != f.arity or any(b < 1 for b in box):
        raise ArityMismatchError(f"box {tuple(box)} must be >= 1 in every component")
    shifted = f.shift(point)
    # the shifted term map holds only nonzero coefficients
    return not any(all(e < b for e, b in zip(u, box)) for u in shifted.terms)


def in_grid_ideal(f: MultiPoly, grid: MultisetGrid, method: str = "remainder") -> bool:
    """Grid ideal membership, by zero remainder or by pointwise vanishing; the
    two must agree on every input."""
    _check_poly_grid(f, grid)
    if method == "remainder":
        return reduce_poly(f, grid).remainder.is_zero()
    if method == "pointwise":
        return all(
            in_local_ideal(f, s, grid.multiplicity_vector(s)) for s in grid.points()
        )
    raise ValueError(f"unknown membership method {method!r}")


def standard_monomials(grid: MultisetGrid):
    """Exponent vectors below the sizes in every coordinate; they form a basis
    of the quotient, so there are exactly prod(d_i) of them."""
    return set(itertools.product(*(range(d) for d in grid.sizes)))


def term_order_family(arity: int, rng=None, max_perms: int = 24) -> List[TermOrder]:
    """All three order kinds crossed with variable permutations: every
    permutation when there are at most four variables, a sample otherwise."""
    perms = list(itertools.permutations(range(arity)))
    if len(perms) > max_perms:
        if rng is None:
            perms = perms[:max_perms]
        else:
            perms = rng.sample(perms, max_perms)
    return [TermOrder(kind, perm) for kind in TermOrder.KINDS for perm in perms]


def universal_gb_check(f: MultiPoly, grid: MultisetGrid, orders: Iterable[TermOrder]) -> bool:
    """For a nonzero member of the grid ideal, check that under every supplied
    term order its leading monomial is divisible by some x_i^{d_i}."""
    _check_poly_grid(f, grid)
    if f.is_zero():
        raise PreconditionError("nonzero", "the zero polynomial has no leading monomial")
    if not in_grid_ideal(f, grid):
        raise PreconditionError("membership", "polynomial is not in the grid ideal")
    d = grid.sizes
    for order in orders:
        lm = f.leading_monomial(order)
        if not any(lm[i] >= d[i] for i in range(grid.arity)):
            return False
    return True


def coefficients_stay_integral(f: MultiPoly, grid: MultisetGrid) -> bool:
    """Over the rationals with integer inputs, reduction must not introduce
    denominators (the generators are monic).  True iff the remainder and all
    cofactors have integer coefficients."""
    _check_poly_grid(f, grid)
    if f.spec.is_prime_field:
        raise PreconditionError("field", "integrality is checked over the rationals")
    if any(c.value.denominator != 1 for c in f.terms.values()):
        raise PreconditionError("integral-input", "polynomial has a non-integer coefficient")
    for ms in grid.sets:
        for elem in ms.support:
            if elem.value.denominator != 1:
                raise PreconditionError("integral-input", f"grid element {elem} is not an integer")
    res = reduce_poly(f, grid)
    polys = (res.remainder,) + res.cofactors
    return all(c.value.denominator == 1 for q in polys for c in q.terms.values())


# -- JSON wire format ---------------------------------------------------------

def multiset_to_list(ms: Multiset) -> list:
    return [{"value": str(e), "mult": m} for e, m in ms.entries.items()]


def multiset_from_list(spec: FieldSpec, items: list) -> Multiset:
    pairs = []
    for item in items:
        if not isinstance(item, dict) or "value" not in item or "mult" not in item:
            raise ValueError(f"multiset entry must be {{'value': ..., 'mult': ...}}, got {item!r}")
        pairs.append((str(item["value"]), item["mult"]))
    return Multiset(spec, pairs)


def grid_to_dict(grid: MultisetGrid) -> dict:
    from .fields import field_to_dict

    return {
        "field": field_to_dict(grid.spec),
        "sets": [multiset_to_list(ms) for ms in grid.sets],
    }


def grid_from_dict(d: dict) -> MultisetGrid:
    from .fields import field_from_dict

    if "field" not in d or "sets" not in d:
        raise ValueError("grid object needs 'field' and 'sets'")
    spec = field_from_dict(d["field"])
    return MultisetGrid([multiset_from_list(spec, items) for items in d["sets"]])
