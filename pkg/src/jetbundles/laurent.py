"""Exact Laurent polynomials in one variable over the rationals.

A Laurent polynomial is stored as a dict mapping integer exponents to
nonzero ``fractions.Fraction`` coefficients.  The zero polynomial is the
empty dict.  All arithmetic is exact; nothing is ever rounded or
approximated.  Units of the ring Q[t, t^-1] are exactly the monomials
c*t^m with c != 0, which is what makes transition determinants easy to
classify.

JSON form: a list of ``{"exp": int, "num": str, "den": str}`` objects
sorted by ascending exponent, with numerator and denominator rendered as
decimal strings so arbitrarily large values survive a round trip.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

Coeff = Fraction | int


def _as_fraction(c: Coeff) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class LaurentPoly:
    """Element of Q[t, t^-1]."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        data: dict[int, Fraction] = {}
        if terms:
            for exp, c in terms.items():
                f = _as_fraction(c)
                if f:
                    data[int(exp)] = f
        self._terms = data

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def constant(cls, c: Coeff) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, coeff: Coeff, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def variable(cls) -> "LaurentPoly":
        return cls({1: 1})

    # -- inspection --------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exp: int) -> Fraction:
        return self._terms.get(exp, Fraction(0))

    def terms(self) -> Iterator[tuple[int, Fraction]]:
        """Yield (exponent, coefficient) pairs in ascending exponent order."""
        for exp in sorted(self._terms):
            yield exp, self._terms[exp]

    @property
    def min_exp(self) -> int | None:
        return min(self._terms) if self._terms else None

    @property
    def max_exp(self) -> int | None:
        return max(self._terms) if self._terms else None

    def is_polynomial(self) -> bool:
        """Membership in the subring Q[t]."""
        return all(e >= 0 for e in self._terms)

    def is_inverse_polynomial(self) -> bool:
        """Membership in the subring Q[t^-1]."""
        return all(e <= 0 for e in self._terms)

    def is_unit(self) -> bool:
        """Units of Q[t, t^-1] are single terms c*t^m, c != 0."""
        return len(self._terms) == 1

    def unit_parts(self) -> tuple[Fraction, int]:
        """Return (c, m) with self == c*t^m, or raise if not a unit."""
        if not self.is_unit():
            raise ValueError(f"not a unit of Q[t, t^-1]: {self}")
        ((exp, coeff),) = self._terms.items()
        return coeff, exp

    # -- ring operations ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LaurentPoly | Coeff") -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        data = dict(self._terms)
        for exp, c in other._terms.items():
            s = data.get(exp, Fraction(0)) + c
            if s:
                data[exp] = s
            else:
                data.pop(exp, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = data
        return out

    def __radd__(self, other: Coeff) -> "LaurentPoly":
        return self.__add__(other)

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other: "LaurentPoly | Coeff") -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coeff) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: "LaurentPoly | Coeff") -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            out = LaurentPoly.__new__(LaurentPoly)
            out._terms = {e: c * f for e, c in self._terms.items()} if f else {}
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        data: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = data.get(e, Fraction(0)) + c1 * c2
                if s:
                    data[e] = s
                else:
                    data.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = data
        return out

    def __rmul__(self, other: Coeff) -> "LaurentPoly":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            coeff, exp = self.unit_parts()
            return LaurentPoly.monomial(coeff ** n, exp * n)
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shifted(self, m: int) -> "LaurentPoly":
        """Multiply by t^m (an exponent shift)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = {e + m: c for e, c in self._terms.items()}
        return out

    @staticmethod
    def _coerce(value: "LaurentPoly | Coeff") -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return LaurentPoly.constant(value)
        return NotImplemented

    # -- evaluation and division -------------------------------------

    def evaluate(self, x: Coeff) -> Fraction:
        """Evaluate at a rational point.

        Zero is a valid argument only when no negative exponents are
        present; otherwise the value is undefined and ZeroDivisionError
        is raised.
        """
        x = _as_fraction(x)
        if not x:
            if any(e < 0 for e in self._terms):
                raise ZeroDivisionError(
                    "evaluation at 0 with negative exponents present"
                )
            return self.coefficient(0)
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * x ** e
        return total

    def divexact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError when the quotient is not Laurent.

        Both operands are shifted to ordinary polynomials, divided by
        long division, and the remainder is required to vanish.  Used by
        the fraction-free determinant, where divisibility is guaranteed.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        shift = self.min_exp - divisor.min_exp
        num = {e - self.min_exp: c for e, c in self._terms.items()}
        den = {e - divisor.min_exp: c for e, c in divisor._terms.items()}
        den_deg = max(den)
        den_lead = den[den_deg]
        quot: dict[int, Fraction] = {}
        rem = dict(num)
        while rem and max(rem) >= den_deg:
            deg = max(rem)
            factor = rem[deg] / den_lead
            qexp = deg - den_deg
            quot[qexp] = factor
            for e, c in den.items():
                target = e + qexp
                s = rem.get(target, Fraction(0)) - factor * c
                if s:
                    rem[target] = s
                else:
                    rem.pop(target, None)
        if rem:
            raise ValueError(f"{divisor} does not divide {self} exactly")
        return LaurentPoly({e + shift: c for e, c in quot.items()})

    # -- serialization and display -----------------------------------

    def to_json(self) -> list[dict[str, object]]:
        return [
            {"exp": e, "num": str(c.numerator), "den": str(c.denominator)}
            for e, c in self.terms()
        ]

    @classmethod
    def from_json(cls, data: list[dict[str, object]]) -> "LaurentPoly":
        terms: dict[int, Fraction] = {}
        for item in data:
            exp = int(item["exp"])
            coeff = Fraction(int(str(item["num"])), int(str(item["den"])))
            if exp in terms:
                raise ValueError(f"duplicate exponent {exp} in JSON payload")
            terms[exp] = coeff
        return cls(terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            if e == 0:
                body = str(c)
            else:
                var = "t" if e == 1 else f"t^{e}"
                if c == 1:
                    body = var
                elif c == -1:
                    body = f"-{var}"
                else:
                    body = f"{c}*{var}"
            if not parts:
                parts.append(body)
            elif body.startswith("-"):
                parts.append(f"- {body[1:]}")
            else:
                parts.append(f"+ {body}")
        return " ".join(parts)


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
T = LaurentPoly.variable()
