"""Exact coefficient arithmetic: prime fields F_p and arbitrary-precision rationals.

A FieldSpec fixes the coefficient domain at runtime (the CLI must accept any
prime modulus, so the modulus is a value, not a type parameter).  Elements are
kept in canonical form -- an integer in [0, p) for prime fields, a reduced
Fraction for the rationals -- so equality and hashing are representational.
All values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import FieldMismatchError

# Miller-Rabin witness set, deterministic for all inputs below 3.3 * 10^24
# (in particular for every 64-bit modulus); probabilistic-but-overwhelming
# beyond that.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldSpec:
    """Runtime description of the coefficient field.

    kind is "prime" (with modulus p) or "rational"; the characteristic is p,
    or 0 for the rationals (0 doubles as "unbounded" where a characteristic
    cap is consumed, e.g. in value-set bounds).
    """

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: int = None):
        if kind == "prime":
            if not isinstance(p, int) or isinstance(p, bool) or not is_probable_prime(p):
                raise ValueError(f"modulus must be a prime integer, got {p!r}")
        elif kind == "rational":
            if p is not None:
                raise ValueError("the rational field takes no modulus")
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.p = p

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("rational")

    @property
    def characteristic(self) -> int:
        return self.p if self.p is not None else 0

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return f"FieldSpec.prime({self.p})" if self.p else "FieldSpec.rationals()"

    def __str__(self):
        return f"F_{self.p}" if self.p else "QQ"

    # -- element construction ------------------------------------------------

    def element(self, value) -> "FieldElement":
        """Coerce an int, Fraction, decimal string ("a/b" over the rationals),
        or FieldElement into canonical form in this field."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldMismatchError(f"element of {value.spec} used in {self}")
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a field value")
        if isinstance(value, str):
            return FieldElement(self._raw_from_str(value), self)
        if isinstance(value, int):
            return FieldElement(value % self.p if self.p else Fraction(value), self)
        if isinstance(value, Fraction):
            if self.p is None:
                return FieldElement(value, self)
            if value.denominator == 1:
                return FieldElement(value.numerator % self.p, self)
            raise TypeError(f"non-integer rational {value} has no canonical image in {self}")
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def _raw_from_str(self, text: str):
        text = text.strip()
        try:
            if self.p is None:
                return Fraction(text)
            return int(text) % self.p
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"invalid {self} value {text!r}") from exc

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self._zero_raw, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self._one_raw, self)

    # -- raw canonical-representative arithmetic -----------------------------
    # Hot loops (polynomial kernels) run on raw representatives and wrap the
    # results once; FieldElement delegates here.

    @property
    def _zero_raw(self):
        return 0 if self.p else Fraction(0)

    @property
    def _one_raw(self):
        return 1 if self.p else Fraction(1)

    def _from_int(self, k: int):
        return k % self.p if self.p else Fraction(k)

    def _add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def _sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def _mul(self, a, b):
        return a * b % self.p if self.p else a * b

    def _neg(self, a):
        return -a % self.p if self.p else -a

    def _inv(self, a):
        if not a:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        return pow(a, -1, self.p) if self.p else 1 / a

    def _pow(self, a, e: int):
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        return pow(a, e, self.p) if self.p else a**e


class FieldElement:
    """An element of a FieldSpec field, in canonical form.

    value is an int in [0, p) over a prime field and a reduced Fraction over
    the rationals.  Arithmetic with a mismatched FieldSpec raises; plain ints
    are coerced for convenience.
    """

    __slots__ = ("value", "spec")

    def __init__(self, value, spec: FieldSpec):
        self.value = value
        self.spec = spec

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.spec is self.spec or other.spec == self.spec:
                return other
            raise FieldMismatchError(f"mixed fields {self.spec} and {other.spec}")
        if isinstance(other, int) and not isinstance(other, bool):
            return FieldElement(self.spec._from_int(other), self.spec)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec._add(self.value, other.value), self.spec)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec._sub(self.value, other.value), self.spec)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec._sub(other.value, self.value), self.spec)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec._mul(self.value, other.value), self.spec)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.spec._neg(self.value), self.spec)

    def __pow__(self, e: int):
        return FieldElement(self.spec._pow(self.value, e), self.spec)

    def inv(self) -> "FieldElement":
        return FieldElement(self.spec._inv(self.value), self.spec)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def is_zero(self) -> bool:
        return not self.value

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self.spec._from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.spec))

    def sort_key(self):
        """Canonical total order on one field's elements (by representative)."""
        return self.value

    def __lt__(self, other):
        other = self._coerce(other)
        return self.value < other.value

    def __le__(self, other):
        other = self._coerce(other)
        return self.value <= other.value

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.value}:{self.spec}"


FieldLike = Union[FieldElement, int, Fraction, str]


def field_to_dict(spec: FieldSpec) -> dict:
    if spec.is_prime_field:
        return {"kind": "prime", "p": spec.p}
    return {"kind": "rational"}


def field_from_dict(d: dict) -> FieldSpec:
    kind = d.get("kind")
    if kind == "prime":
        return FieldSpec.prime(d["p"])
    if kind == "rational":
        return FieldSpec.rationals()
    raise ValueError(f"unknown field kind {kind!r}")
