"""Exact arithmetic in Q[q,t] and its fraction field Q(q,t).

Both types are immutable value objects backed by FLINT's sparse
multivariate polynomials over the rationals.  A ``QTRat`` is always kept in
normalized form: numerator and denominator are coprime and the denominator
has leading coefficient 1 in lex order on ``(deg_q, deg_t)``.  Structural
equality is therefore mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

import flint

from .errors import DegreeExceeded, NotUnivariate, PoleAtPoint, ZeroDenominator

_CTX = flint.fmpq_mpoly_ctx.get(("q", "t"), "lex")
_FQ, _FT = _CTX.gens()

Scalar = Union[int, Fraction]


def _to_fmpq(c) -> flint.fmpq:
    if isinstance(c, flint.fmpq):
        return c
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    if isinstance(c, int):
        return flint.fmpq(c)
    raise TypeError(f"unsupported coefficient {c!r}")


def _to_fraction(c: flint.fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _parse_fraction(s: str) -> Fraction:
    return Fraction(s)


class QTPoly:
    """Polynomial in q and t with rational coefficients."""

    __slots__ = ("_p", "_hash")

    def __init__(self, value=0):
        if isinstance(value, flint.fmpq_mpoly):
            self._p = value
        elif isinstance(value, QTPoly):
            self._p = value._p
        elif isinstance(value, Mapping):
            self._p = _CTX.from_dict(
                {tuple(k): _to_fmpq(c) for k, c in value.items() if c != 0}
            )
        else:
            self._p = _CTX.constant(_to_fmpq(value))
        self._hash = None

    @staticmethod
    def q(power: int = 1) -> "QTPoly":
        return QTPoly(_FQ**power)

    @staticmethod
    def t(power: int = 1) -> "QTPoly":
        return QTPoly(_FT**power)

    @staticmethod
    def monomial(i: int, j: int, coeff: Scalar = 1) -> "QTPoly":
        return QTPoly({(i, j): coeff})

    @property
    def raw(self) -> flint.fmpq_mpoly:
        return self._p

    def terms(self) -> list:
        """Terms as ``((deg_q, deg_t), Fraction)`` sorted lexicographically."""
        return sorted(
            (tuple(int(e) for e in m), _to_fraction(c))
            for m, c in self._p.to_dict().items()
        )

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_constant(self) -> bool:
        return self._p.is_constant()

    def constant_value(self) -> Fraction:
        if not self._p.is_constant():
            raise ValueError("not a constant")
        return self.terms()[0][1] if not self._p.is_zero() else Fraction(0)

    def degree_q(self) -> int:
        return -1 if self.is_zero() else int(self._p.degrees()[0])

    def degree_t(self) -> int:
        return -1 if self.is_zero() else int(self._p.degrees()[1])

    def coeff(self, i: int, j: int = 0) -> Fraction:
        return dict(self.terms()).get((i, j), Fraction(0))

    def q_coefficients(self) -> list:
        """Coefficient list in q, for polynomials free of t."""
        if any(j for (_, j), _c in self.terms()):
            raise NotUnivariate("polynomial involves t")
        out = [Fraction(0)] * (self.degree_q() + 1)
        for (i, _), c in self.terms():
            out[i] = c
        return out

    def subs(self, at_q: Optional[Scalar] = None, at_t: Optional[Scalar] = None) -> "QTPoly":
        d = {}
        if at_q is not None:
            d["q"] = _to_fmpq(at_q)
        if at_t is not None:
            d["t"] = _to_fmpq(at_t)
        return QTPoly(self._p.subs(d)) if d else self

    def swap_qt(self) -> "QTPoly":
        return QTPoly({(j, i): c for (i, j), c in self.terms()})

    @staticmethod
    def _coerce(other):
        if isinstance(other, QTPoly):
            return other._p
        if isinstance(other, (int, Fraction, flint.fmpq)):
            return _to_fmpq(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QTPoly(self._p + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QTPoly(self._p - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QTPoly(o - self._p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QTPoly(self._p * o)

    __rmul__ = __mul__

    def __neg__(self):
        return QTPoly(-self._p)

    def __pow__(self, e: int):
        return QTPoly(self._p**e)

    def __truediv__(self, other):
        if isinstance(other, (QTPoly, QTRat)):
            return QTRat(self) / other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDenominator("division by zero")
        return QTPoly(self._p / o)

    def __eq__(self, other):
        if isinstance(other, QTRat):
            return other == self
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._p == o

    def __hash__(self):
        if self._hash is None:
            terms = self.terms()
            if len(terms) == 1 and terms[0][0] == (0, 0):
                self._hash = hash(terms[0][1])
            elif not terms:
                self._hash = hash(0)
            else:
                self._hash = hash(tuple(terms))
        return self._hash

    def __bool__(self):
        return not self._p.is_zero()

    def __repr__(self):
        return f"QTPoly({self})"

    def __str__(self):
        return format_qt(self.terms())

    def to_json(self) -> list:
        return [[i, j, str(c)] for (i, j), c in self.terms()]

    @staticmethod
    def from_json(data: Iterable) -> "QTPoly":
        return QTPoly({(int(i), int(j)): _parse_fraction(c) for i, j, c in data})


def _sup(n: int) -> str:
    return "" if n == 1 else f"^{n}"


def format_qt(terms) -> str:
    """Human-readable ascending rendering such as ``1 + 3q + 2q^2``."""
    if not terms:
        return "0"
    pieces = []
    for (i, j), c in terms:
        mono = ""
        if i:
            mono += "q" + _sup(i)
        if j:
            mono += "t" + _sup(j)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}{mono}" if mag.denominator == 1 else f"({mag}){mono}"
        else:
            body = str(mag)
        pieces.append(("-" if c < 0 else "+", body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


ONE_POLY = QTPoly(1)


class QTRat:
    """Normalized element of Q(q,t)."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None, _normalized: bool = False):
        if isinstance(num, QTRat):
            if den is not None:
                raise TypeError("QTRat numerator with explicit denominator")
            self.num, self.den, self._hash = num.num, num.den, num._hash
            return
        n = num if isinstance(num, QTPoly) else QTPoly(num)
        d = ONE_POLY if den is None else (den if isinstance(den, QTPoly) else QTPoly(den))
        if not _normalized and den is not None:
            n, d = _normalize(n._p, d._p)
        self.num, self.den, self._hash = n, d, None

    @staticmethod
    def q(power: int = 1) -> "QTRat":
        return QTRat(QTPoly.q(power)) if power >= 0 else QTRat(1, QTPoly.q(-power))

    @staticmethod
    def t(power: int = 1) -> "QTRat":
        return QTRat(QTPoly.t(power)) if power >= 0 else QTRat(1, QTPoly.t(-power))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den._p.is_one()

    def as_poly(self) -> QTPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    @staticmethod
    def _coerce(other):
        if isinstance(other, QTRat):
            return other
        if isinstance(other, (QTPoly, int, Fraction)):
            return QTRat(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero():
            return o
        if o.num.is_zero():
            return self
        a, b, c, d = self.num._p, self.den._p, o.num._p, o.den._p
        if b.is_one() and d.is_one():
            return QTRat(QTPoly(a + c))
        if b == d:
            return QTRat(QTPoly(a + c), self.den)
        return QTRat(QTPoly(a * d + b * c), QTPoly(b * d))

    __radd__ = __add__

    def __neg__(self):
        return QTRat(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return QTRat(self.num * other, self.den, _normalized=True)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return ZERO
        if self.den._p.is_one() and o.den._p.is_one():
            return QTRat(self.num * o.num)
        # cross-cancel first to keep sizes small
        g1 = self.num._p.gcd(o.den._p)
        g2 = o.num._p.gcd(self.den._p)
        n = (self.num._p / g1) * (o.num._p / g2)
        d = (self.den._p / g2) * (o.den._p / g1)
        lc = d.leading_coefficient()
        return QTRat(QTPoly(n / lc), QTPoly(d / lc), _normalized=True)

    __rmul__ = __mul__

    def inverse(self) -> "QTRat":
        if self.num.is_zero():
            raise ZeroDenominator("inverse of zero")
        lc = self.num._p.leading_coefficient()
        return QTRat(QTPoly(self.den._p / lc), QTPoly(self.num._p / lc), _normalized=True)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return QTRat(self.num**e, self.den**e, _normalized=True)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num._p == o.num._p and self.den._p == o.den._p

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.num) if self.is_polynomial() else hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        return f"QTRat({self})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @staticmethod
    def from_json(data: Mapping) -> "QTRat":
        return qt_normalize(QTPoly.from_json(data["num"]), QTPoly.from_json(data["den"]))


def _normalize(n: flint.fmpq_mpoly, d: flint.fmpq_mpoly):
    if d.is_zero():
        raise ZeroDenominator("zero denominator")
    if n.is_zero():
        return QTPoly(0), ONE_POLY
    if not d.is_constant():
        g = n.gcd(d)
        if not g.is_one():
            n = n / g
            d = d / g
    lc = d.leading_coefficient()
    if lc != 1:
        n = n / lc
        d = d / lc
    return QTPoly(n), QTPoly(d)


ZERO = QTRat(0)
ONE = QTRat(1)


def qt_normalize(num: QTPoly, den: QTPoly) -> QTRat:
    """Return the normalized fraction num/den."""
    return QTRat(num, den)


def qt_eval(f: QTRat, at_q: Optional[Scalar] = None, at_t: Optional[Scalar] = None) -> QTRat:
    """Substitute rational values for q and/or t.

    Raises ``PoleAtPoint`` when the substitution kills the denominator.
    """
    f = QTRat(f) if not isinstance(f, QTRat) else f
    n = f.num.subs(at_q, at_t)
    d = f.den.subs(at_q, at_t)
    if d.is_zero():
        raise PoleAtPoint(f"denominator of {f} vanishes at q={at_q}, t={at_t}")
    return QTRat(n, d)


def rev_q(f: QTPoly, top_degree: int) -> QTPoly:
    """Return ``q**top_degree * f(1/q)`` for a polynomial in q alone."""
    if isinstance(f, QTRat):
        f = f.as_poly()
    terms = f.terms()
    if any(j for (_, j), _c in terms):
        raise NotUnivariate("rev_q needs a polynomial in q alone")
    if f.degree_q() > top_degree:
        raise DegreeExceeded(f"degree {f.degree_q()} exceeds window {top_degree}")
    return QTPoly({(top_degree - i, 0): c for (i, _), c in terms})


def as_qtrat(x) -> QTRat:
    return x if isinstance(x, QTRat) else QTRat(x)
