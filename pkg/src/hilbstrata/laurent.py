"""Exact sparse Laurent polynomials in one variable t.

A polynomial is a map {exponent: coefficient} with integer (arbitrary
precision) coefficients and integer exponents of either sign.  Zero
coefficients are never stored, so two values are equal iff their term
maps are equal, and the zero polynomial is the empty map.

This is the universal value type of the package: E-polynomials, their
duals, Gaussian binomials and every matrix/series entry are LaurentPoly
values.  No floating point anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping


class InexactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class LaurentPoly:
    """Immutable sparse Laurent polynomial in t with int coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        data: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            if coeff:
                data[exp] = data.get(exp, 0) + coeff
                if not data[exp]:
                    del data[exp]
        self._terms = data
        self._hash: int | None = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def t_power(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        """The monomial coeff * t^exp."""
        return cls({exp: coeff})

    # -- inspection ----------------------------------------------------

    def items(self) -> Iterator[tuple[int, int]]:
        """Terms as (exponent, coefficient) pairs, exponent ascending."""
        return iter(sorted(self._terms.items()))

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_polynomial(self) -> bool:
        """True iff no exponent is negative."""
        return all(e >= 0 for e in self._terms)

    def degree(self) -> int:
        """Top exponent; raises on the zero polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def valuation(self) -> int:
        """Bottom exponent; raises on the zero polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def eval_at_one(self) -> int:
        """Sum of all coefficients (the Euler-characteristic specialization)."""
        return sum(self._terms.values())

    def eval_fraction(self, value: Fraction | int) -> Fraction:
        """Exact evaluation at a rational point (negative exponents allowed)."""
        value = Fraction(value)
        return sum((value ** e) * c for e, c in self._terms.items()) + Fraction(0)

    def is_unit_monomial(self) -> bool:
        """True iff the value is +-t^k for some k."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return _raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> LaurentPoly:
        return _coerce(other) + (-self)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if not self._terms or not other._terms:
            return LaurentPoly()
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                k = e1 + e2
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by the monomial t^k."""
        if not k:
            return self
        return _raw({e + k: c for e, c in self._terms.items()})

    def invert_variable(self) -> LaurentPoly:
        """Substitute t -> 1/t (exponent negation)."""
        return _raw({-e: c for e, c in self._terms.items()})

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        """Exact division; raises InexactDivisionError if a remainder is left.

        Works for Laurent divisors: both operands are shifted so the
        divisor becomes an ordinary polynomial, then long division runs
        from the top degree over the integers.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        dtop = divisor.degree()
        dlead = divisor._terms[dtop]
        rem = dict(self._terms)
        quo: dict[int, int] = {}
        # Quotient valuation is fixed by the two valuations; anything below
        # it in the remainder can never be cancelled, so stop early there.
        floor_exp = self.valuation() - divisor.valuation() + dtop
        while rem:
            top = max(rem)
            if top < floor_exp:
                raise InexactDivisionError(f"{self} is not divisible by {divisor}")
            lead = rem[top]
            if lead % dlead:
                raise InexactDivisionError(f"{self} is not divisible by {divisor}")
            c = lead // dlead
            shift = top - dtop
            quo[shift] = c
            for e, dc in divisor._terms.items():
                k = e + shift
                s = rem.get(k, 0) - c * dc
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return _raw(quo)

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if len(self._terms) <= 1 and set(self._terms) <= {0}:
                # constants compare equal to ints, so they must hash alike
                self._hash = hash(self._terms.get(0, 0))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- rendering / parsing ---------------------------------------------

    def __str__(self) -> str:
        """Canonical string, descending degree: "t^4+2*t^3-t"."""
        return self._render(mul="*", brace=False)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def latex(self) -> str:
        """LaTeX-style cell, e.g. "t^4+2 t^3-t" with braces on long exponents."""
        return self._render(mul=" ", brace=True)

    def _render(self, mul: str, brace: bool) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                if brace and (e >= 10 or e < 0):
                    var = "t^{%d}" % e
                elif e == 1:
                    var = "t"
                else:
                    var = f"t^{e}"
                body = var if mag == 1 else f"{mag}{mul}{var}"
            parts.append(sign + body)
        return "".join(parts)

    @classmethod
    def from_string(cls, text: str) -> LaurentPoly:
        """Parse the canonical rendering (both "2*t^3" and "2 t^3" accepted)."""
        s = text.strip().replace(" ", "").replace("{", "").replace("}", "")
        if not s:
            raise ValueError("empty polynomial string")
        if s == "0":
            return cls()
        tokens = _TERM_RE.findall(s)
        if "".join(tokens) != s:
            raise ValueError(f"cannot parse polynomial string {text!r}")
        return cls(_parse_term(tok) for tok in tokens)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        """{"terms": [[exp, "coeff"], ...]} ascending, coefficients as strings."""
        return {"terms": [[e, str(c)] for e, c in self.items()]}

    @classmethod
    def from_json(cls, obj: dict) -> LaurentPoly:
        return cls((int(e), int(c)) for e, c in obj["terms"])


def _raw(terms: dict[int, int]) -> LaurentPoly:
    p = LaurentPoly.__new__(LaurentPoly)
    p._terms = terms
    p._hash = None
    return p


def _coerce(value: LaurentPoly | int) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.const(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to LaurentPoly")


# one monomial: optional sign, optional coefficient, optional t[^exp]
_TERM_RE = re.compile(r"[+-]?(?:\d+\*?)?t(?:\^-?\d+)?|[+-]?\d+")


def _parse_term(chunk: str) -> tuple[int, int]:
    neg = chunk.startswith("-")
    if neg or chunk.startswith("+"):
        chunk = chunk[1:]
    if "t" not in chunk:
        return (0, -int(chunk) if neg else int(chunk))
    head, _, tail = chunk.partition("t")
    head = head.rstrip("*")
    coeff = int(head) if head else 1
    if tail == "":
        exp = 1
    elif tail.startswith("^"):
        exp = int(tail[1:])
    else:
        raise ValueError(f"cannot parse term {chunk!r}")
    return (exp, -coeff if neg else coeff)


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
T = LaurentPoly.t_power(1)


@lru_cache(maxsize=None)
def gauss_binomial(m: int, a: int) -> LaurentPoly:
    """Gaussian binomial coefficient as an exact polynomial in t.

    Defined as prod_{i=0}^{a-1} (1 - t^{m-i}) / (1 - t^{i+1}) for
    1 <= a <= m, as 1 for a = 0 and as 0 for a > m.  Every partial
    product in that order is itself a Gaussian binomial, so the
    division below is exact at each step (a hard error otherwise).
    This is the E-polynomial of the Grassmannian of a-planes in m-space.
    """
    if m < 0 or a < 0:
        raise ValueError("gauss_binomial needs nonnegative arguments")
    if a == 0:
        return ONE
    if a > m:
        return ZERO
    result = ONE
    for i in range(a):
        result = result * (ONE - LaurentPoly.t_power(m - i))
        result = result.exact_div(ONE - LaurentPoly.t_power(i + 1))
    return result
