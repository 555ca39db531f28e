"""Polynomial rings Q[x_1..x_n], Groebner bases and coinvariant-type quotients.

Term orders
-----------
``neglex`` is lexicographic with x_n > ... > x_1: compare exponent vectors
from the last coordinate backwards.  ``graded_neglex`` compares total degree
first and breaks ties with neglex.  Internally both are realized by FLINT
contexts whose variables are listed as (x_n, ..., x_1).

Exponent vectors seen by callers are always ordered (a_1, ..., a_n).
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import flint

from .arith import ONE, ZERO, QTPoly, QTRat
from .combinatorics import (
    osp_top_degree,
    q_binomial,
    q_multinomial,
    skip_sequence,
    syt_enumerate,
    syt_stats,
)
from .errors import (
    BadParams,
    DivisionFailure,
    DuplicatePoints,
    LengthMismatch,
    NotEquivariant,
    NotPolynomial,
    NotZeroDimensional,
)
from .linalg import solve_unique
from .symfunc import Partition, SymFunc, convert, frobenius_from_character, partitions

ORDERS = ("neglex", "graded_neglex")
Exp = Tuple[int, ...]

# ---------------------------------------------------------------------------
# contexts and the XPoly wrapper


@lru_cache(maxsize=None)
def _ctx(n: int, order: str = "neglex"):
    if order not in ORDERS:
        raise BadParams(f"unknown term order {order!r}")
    names = tuple(f"x{i}" for i in range(n, 0, -1))
    return flint.fmpq_mpoly_ctx.get(names, "lex" if order == "neglex" else "deglex")


def _fq(c) -> flint.fmpq:
    if isinstance(c, flint.fmpq):
        return c
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    return flint.fmpq(c)


def _frac(c: flint.fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


class XPoly:
    """Polynomial in x_1..x_n with rational coefficients (immutable)."""

    __slots__ = ("n", "_p")

    def __init__(self, n: int, terms: Optional[Mapping[Exp, object]] = None, _raw=None):
        self.n = n
        if _raw is not None:
            self._p = _raw
            return
        ctx = _ctx(n)
        d = {}
        for exp, c in (terms or {}).items():
            if len(exp) != n:
                raise LengthMismatch(f"exponent {exp} has length != {n}")
            if c:
                d[tuple(reversed(exp))] = _fq(c)
        self._p = ctx.from_dict(d)

    @classmethod
    def from_raw(cls, n: int, raw) -> "XPoly":
        if raw.context() is not _ctx(n):
            raw = _ctx(n).from_dict(raw.to_dict())
        return cls(n, _raw=raw)

    @classmethod
    def var(cls, n: int, i: int) -> "XPoly":
        exp = [0] * n
        exp[i - 1] = 1
        return cls(n, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff=1) -> "XPoly":
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def constant(cls, n: int, c=1) -> "XPoly":
        return cls(n, {(0,) * n: c})

    @property
    def raw(self):
        return self._p

    def in_order(self, order: str):
        return _ctx(self.n, order).from_dict(self._p.to_dict())

    def terms(self) -> Dict[Exp, Fraction]:
        return {tuple(reversed(tuple(int(e) for e in m))): _frac(c) for m, c in self._p.to_dict().items()}

    def sorted_terms(self, order: str = "neglex") -> List[Tuple[Exp, Fraction]]:
        """Terms from largest to smallest in the given order."""
        key = order_key(order)
        return sorted(self.terms().items(), key=lambda kv: key(kv[0]), reverse=True)

    def leading_monomial(self, order: str = "neglex") -> Exp:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        p = self.in_order(order) if order != "neglex" else self._p
        return tuple(reversed(tuple(int(e) for e in p.monomial(0))))

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def total_degree(self) -> int:
        return -1 if self.is_zero() else int(self._p.total_degree())

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms()}) <= 1

    def top_form(self) -> "XPoly":
        d = self.total_degree()
        return XPoly(self.n, {e: c for e, c in self.terms().items() if sum(e) == d})

    def permute(self, perm: Sequence[int]) -> "XPoly":
        """Substitute x_i -> x_{perm(i)} (perm given in one-line notation, 1-based)."""
        out = {}
        for e, c in self.terms().items():
            new = [0] * self.n
            for i, a in enumerate(e):
                new[perm[i] - 1] += a
            out[tuple(new)] = c
        return XPoly(self.n, out)

    def swap(self, i: int) -> "XPoly":
        """Exchange x_i and x_{i+1}."""
        perm = list(range(1, self.n + 1))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return self.permute(perm)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms().items():
            v = c
            for x, a in zip(point, e):
                if a:
                    v *= Fraction(x) ** a
            total += v
        return total

    def _coerce(self, other):
        if isinstance(other, XPoly):
            if other.n != self.n:
                raise LengthMismatch("polynomials in different numbers of variables")
            return other._p
        if isinstance(other, (int, Fraction, flint.fmpq)):
            return _fq(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else XPoly(self.n, _raw=self._p + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else XPoly(self.n, _raw=self._p - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else XPoly(self.n, _raw=o - self._p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else XPoly(self.n, _raw=self._p * o)

    __rmul__ = __mul__

    def __neg__(self):
        return XPoly(self.n, _raw=-self._p)

    def __pow__(self, e: int):
        return XPoly(self.n, _raw=self._p**e)

    def exact_div(self, other: "XPoly") -> "XPoly":
        q, r = divmod(self._p, other._p)
        if not r.is_zero():
            raise DivisionFailure(f"{other} does not divide {self}")
        return XPoly(self.n, _raw=q)

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self.n == other.n and self._p == other._p
        o = self._coerce(other)
        return NotImplemented if o is None else self._p == o

    def __hash__(self):
        return hash((self.n, frozenset(self.terms().items())))

    def __bool__(self):
        return not self._p.is_zero()

    def __repr__(self):
        return f"XPoly({self})"

    def __str__(self):
        return format_xpoly(self)

    def to_json(self) -> list:
        return [[list(e), str(c)] for e, c in self.sorted_terms()]

    @staticmethod
    def from_json(n: int, data) -> "XPoly":
        return XPoly(n, {tuple(e): Fraction(c) for e, c in data})


def format_xpoly(f: XPoly, order: str = "neglex") -> str:
    if f.is_zero():
        return "0"
    parts = []
    for e, c in f.sorted_terms(order):
        mono = "*".join(
            (f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}") for i, a in enumerate(e) if a
        )
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, b in parts[1:]:
        out += f" {s} {b}"
    return out


def e_poly(n: int, d: int, S: Optional[Iterable[int]] = None) -> XPoly:
    """Elementary symmetric polynomial e_d in the variables x_i, i in S."""
    S = list(range(1, n + 1)) if S is None else sorted(S)
    if d < 0 or d > len(S):
        return XPoly(n)
    terms = {}
    for combo in itertools.combinations(S, d):
        exp = [0] * n
        for i in combo:
            exp[i - 1] = 1
        terms[tuple(exp)] = 1
    return XPoly(n, terms)


def h_poly(n: int, d: int, S: Optional[Iterable[int]] = None) -> XPoly:
    """Complete homogeneous symmetric polynomial h_d in the variables x_i, i in S."""
    S = list(range(1, n + 1)) if S is None else sorted(S)
    terms = {}
    for combo in itertools.combinations_with_replacement(S, d):
        exp = [0] * n
        for i in combo:
            exp[i - 1] += 1
        terms[tuple(exp)] = 1
    return XPoly(n, terms)


# ---------------------------------------------------------------------------
# term orders


def neglex_less(m1: Sequence[int], m2: Sequence[int]) -> bool:
    if len(m1) != len(m2):
        raise LengthMismatch("exponent vectors of different lengths")
    return tuple(reversed(m1)) < tuple(reversed(m2))


def graded_neglex_less(m1: Sequence[int], m2: Sequence[int]) -> bool:
    if len(m1) != len(m2):
        raise LengthMismatch("exponent vectors of different lengths")
    return (sum(m1), tuple(reversed(m1))) < (sum(m2), tuple(reversed(m2)))


def order_key(order: str) -> Callable[[Sequence[int]], tuple]:
    if order == "neglex":
        return lambda m: tuple(reversed(m))
    if order == "graded_neglex":
        return lambda m: (sum(m), tuple(reversed(m)))
    raise BadParams(f"unknown term order {order!r}")


def less(m1: Sequence[int], m2: Sequence[int], order: str = "neglex") -> bool:
    return neglex_less(m1, m2) if order == "neglex" else graded_neglex_less(m1, m2)


# ---------------------------------------------------------------------------
# ideals and Groebner bases


@dataclass
class Ideal:
    n: int
    generators: List[XPoly]
    label: str = ""

    def to_json(self) -> dict:
        return {"n": self.n, "label": self.label, "generators": [g.to_json() for g in self.generators]}


@dataclass
class GB:
    n: int
    order: str
    polys: List[XPoly]
    reduced: bool = True
    _raw: list = field(default_factory=list, repr=False)

    def leading_monomials(self) -> List[Exp]:
        return [g.leading_monomial(self.order) for g in self.polys]

    def __eq__(self, other):
        if not isinstance(other, GB):
            return NotImplemented
        return (
            self.n == other.n
            and self.order == other.order
            and sorted(map(_poly_key, self.polys)) == sorted(map(_poly_key, other.polys))
        )

    def to_json(self) -> dict:
        return {"n": self.n, "order": self.order, "reduced": self.reduced,
                "generators": [g.to_json() for g in self.polys]}


def _poly_key(f: XPoly):
    return tuple(sorted((e, str(c)) for e, c in f.terms().items()))


def _lm(p) -> tuple:
    return tuple(int(e) for e in p.monomial(0))


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _reduce_raw(f, G: list):
    """Fully reduce f by the list G (same FLINT context)."""
    if f.is_zero() or not G:
        return f
    changed = True
    while changed and not f.is_zero():
        changed = False
        for g in G:
            q, r = divmod(f, g)
            if not q.is_zero():
                f = r
                changed = True
                if f.is_zero():
                    break
    return f


def _monic(p):
    lc = p.leading_coefficient()
    return p if lc == 1 else p / lc


def _raw_buchberger(F: list, ctx, sort_key) -> list:
    """Reduced Groebner basis of FLINT polynomials (normal selection strategy)."""
    G: list = []
    LM: List[tuple] = []
    pairs: list = []
    counter = itertools.count()

    def add(g):
        g = _monic(g)
        lm = _lm(g)
        idx = len(G)
        new_pairs = []
        for j in range(idx):
            if LM[j] is None:
                continue
            lcm = tuple(max(a, b) for a, b in zip(lm, LM[j]))
            new_pairs.append((j, lcm))
        # Gebauer-Moeller style pruning of the new pairs
        kept = []
        coprime = []
        for j, lcm in new_pairs:
            if all(a == 0 or b == 0 for a, b in zip(lm, LM[j])):
                coprime.append((j, lcm))
                continue
            kept.append((j, lcm))
        # drop pairs whose lcm is a proper multiple of another new pair's lcm
        lcms = [l for _, l in kept] + [l for _, l in coprime]
        filtered = []
        for j, lcm in kept:
            if any(other != lcm and _divides(other, lcm) for other in lcms):
                continue
            if (lcm, ) in [(l,) for _, l in filtered]:
                continue
            filtered.append((j, lcm))
        # old pairs (a, b) whose lcm is divisible by lm strictly are redundant
        nonlocal pairs
        survivors = []
        for item in pairs:
            _key, _c, a, b, lcm = item
            la, lb = LM[a], LM[b]
            if (
                _divides(lm, lcm)
                and tuple(max(x, y) for x, y in zip(la, lm)) != lcm
                and tuple(max(x, y) for x, y in zip(lb, lm)) != lcm
            ):
                continue
            survivors.append(item)
        pairs = survivors
        heapq.heapify(pairs)
        G.append(g)
        LM.append(lm)
        for j, lcm in filtered:
            heapq.heappush(pairs, (sort_key(lcm), next(counter), j, idx, lcm))

    for f in F:
        f = _reduce_raw(f, [g for g, l in zip(G, LM) if l is not None])
        if not f.is_zero():
            add(f)
    while pairs:
        _key, _c, i, j, lcm = heapq.heappop(pairs)
        if LM[i] is None or LM[j] is None:
            continue
        gi, gj = G[i], G[j]
        mi = ctx.term(exp_vec=tuple(a - b for a, b in zip(lcm, LM[i])))
        mj = ctx.term(exp_vec=tuple(a - b for a, b in zip(lcm, LM[j])))
        s = mi * gi - mj * gj
        active = [g for g, l in zip(G, LM) if l is not None]
        r = _reduce_raw(s, active)
        if not r.is_zero():
            add(r)
    # minimalize
    active = [(g, l) for g, l in zip(G, LM) if l is not None]
    minimal = []
    for idx, (g, l) in enumerate(active):
        if any(
            _divides(l2, l) and (l2 != l or j < idx)
            for j, (g2, l2) in enumerate(active)
            if j != idx
        ):
            continue
        minimal.append(g)
    # inter-reduce
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        lead = ctx.term(coeff=g.leading_coefficient(), exp_vec=_lm(g))
        tail = _reduce_raw(g - lead, others)
        out.append(_monic(lead + tail))
    out.sort(key=lambda p: sort_key(_lm(p)), reverse=True)
    return out


def _internal_key(order: str):
    # internal exponent tuples are (x_n, ..., x_1)
    if order == "neglex":
        return lambda m: m
    return lambda m: (sum(m), m)


def buchberger(I, order: str = "neglex") -> GB:
    """Reduced Groebner basis of an ideal (or generator list)."""
    gens = I.generators if isinstance(I, Ideal) else list(I)
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        n = I.n if isinstance(I, Ideal) else 0
        return GB(n, order, [])
    n = gens[0].n
    ctx = _ctx(n, order)
    F = [g.in_order(order) for g in gens]
    F.sort(key=lambda p: _internal_key(order)(_lm(p)))
    raw = _raw_buchberger(F, ctx, _internal_key(order))
    polys = [XPoly.from_raw(n, p) for p in raw]
    return GB(n, order, polys, True, raw)


def _gb_raw(G: GB) -> list:
    if not G._raw and G.polys:
        G._raw = [g.in_order(G.order) for g in G.polys]
    return G._raw


def normal_form(f: XPoly, G: GB) -> XPoly:
    """Unique remainder of f modulo the Groebner basis G."""
    if not G.polys:
        return f
    r = _reduce_raw(f.in_order(G.order), _gb_raw(G))
    return XPoly.from_raw(f.n, r)


def ideal_contains(G: GB, f: XPoly) -> bool:
    return normal_form(f, G).is_zero()


# ---------------------------------------------------------------------------
# Demazure characters and Schubert-type divided differences


def isobaric_divided_difference(f: XPoly, i: int) -> XPoly:
    """pi_i f = (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1})."""
    n = f.n
    xi, xj = XPoly.var(n, i), XPoly.var(n, i + 1)
    return (xi * f - xj * f.swap(i)).exact_div(xi - xj)


def divided_difference(f: XPoly, i: int) -> XPoly:
    """partial_i f = (f - s_i f) / (x_i - x_{i+1})."""
    n = f.n
    return (f - f.swap(i)).exact_div(XPoly.var(n, i) - XPoly.var(n, i + 1))


@lru_cache(maxsize=None)
def demazure(gamma: Tuple[int, ...]) -> XPoly:
    """Demazure character (key polynomial) of a weak composition."""
    gamma = tuple(gamma)
    if any(x < 0 for x in gamma):
        raise BadParams("compositions have nonnegative entries")
    n = len(gamma)
    for i in range(n - 1):
        if gamma[i] < gamma[i + 1]:
            swapped = list(gamma)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            return isobaric_divided_difference(demazure(tuple(swapped)), i + 1)
    return XPoly.monomial(gamma)


# ---------------------------------------------------------------------------
# ideal builders


def m_in(lam: Partition, i: int, n: int) -> int:
    """lam'_n + lam'_{n-1} + ... + lam'_{n-i+1}: boxes outside the first n-i columns."""
    conj = lam.conjugate()
    return sum(conj[j - 1] for j in range(n - i + 1, n + 1) if j - 1 < len(conj))


def _tanisaki_generators(n: int, lam: Partition) -> List[XPoly]:
    gens = []
    for size in range(1, n + 1):
        bound = size - m_in(lam, size, n)
        for S in itertools.combinations(range(1, n + 1), size):
            for d in range(max(bound + 1, 1), size + 1):
                gens.append(e_poly(n, d, S))
    return gens


def build_ideal(kind: str, **params) -> Ideal:
    """Construct one of the named ideals.

    kinds: ``coinvariant`` (n), ``nk`` (n, k), ``nks`` (n, k, s),
    ``tanisaki`` (lam with n = |lam| or n given), ``griffin`` (n, lam, s),
    ``line`` (n, k, r: the ideal with h_d(x_1..x_r), d > k - r).
    """
    try:
        if kind == "coinvariant":
            n = int(params["n"])
            return Ideal(n, [e_poly(n, d) for d in range(1, n + 1)], f"I_{n}")
        if kind == "nk":
            n, k = int(params["n"]), int(params["k"])
            if not 1 <= k <= n:
                raise BadParams("need 1 <= k <= n")
            gens = [e_poly(n, d) for d in range(n, n - k, -1)]
            gens += [XPoly.monomial(tuple(k if j == i else 0 for j in range(n))) for i in range(n)]
            return Ideal(n, gens, f"I_{n},{k}")
        if kind == "nks":
            n, k, s = int(params["n"]), int(params["k"]), int(params["s"])
            if not (0 <= k <= s <= n) or s < 1:
                raise BadParams("need 0 <= k <= s <= n and s >= 1")
            gens = [XPoly.monomial(tuple(s if j == i else 0 for j in range(n))) for i in range(n)]
            gens += [e_poly(n, d) for d in range(n, n - k, -1)]
            return Ideal(n, gens, f"I_{n},{k},{s}")
        if kind == "tanisaki":
            lam = Partition(params["lam"])
            n = int(params.get("n", lam.n))
            if lam.n != n:
                raise BadParams("Tanisaki ideals need |lam| = n")
            return Ideal(n, _tanisaki_generators(n, lam), f"I_{tuple(lam)}")
        if kind == "griffin":
            n, s = int(params["n"]), int(params["s"])
            lam = Partition(params["lam"])
            if len(lam) > s or lam.n > n or s < 1:
                raise BadParams("need l(lam) <= s and |lam| <= n")
            gens = _tanisaki_generators(n, lam)
            gens += [XPoly.monomial(tuple(s if j == i else 0 for j in range(n))) for i in range(n)]
            return Ideal(n, gens, f"I_{n},{tuple(lam)},{s}")
        if kind == "line":
            n, k, r = int(params["n"]), int(params["k"]), int(params["r"])
            if not (1 <= r <= k <= n):
                raise BadParams("need 1 <= r <= k <= n")
            gens = [XPoly.monomial(tuple(k if j == i else 0 for j in range(n))) for i in range(n)]
            gens += [e_poly(n, d) for d in range(n, n - k, -1)]
            gens += [h_poly(n, d, range(1, r + 1)) for d in range(k - r + 1, k + 1)]
            return Ideal(n, gens, f"I^({r})_{n},{k}")
    except KeyError as exc:
        raise BadParams(f"missing parameter {exc}") from None
    raise BadParams(f"unknown ideal kind {kind!r}")


# ---------------------------------------------------------------------------
# quotients


@dataclass
class Quotient:
    ideal: Ideal
    order: str
    gb: GB
    standard_monomials: List[Exp]
    hilbert: QTPoly

    @property
    def dimension(self) -> int:
        return len(self.standard_monomials)

    @property
    def n(self) -> int:
        return self.gb.n


def standard_monomials(G: GB) -> List[Exp]:
    """Monomials outside the initial ideal, sorted by degree then order."""
    n = G.n
    lms = G.leading_monomials()
    bounds = []
    for i in range(n):
        pure = [m[i] for m in lms if all(m[j] == 0 for j in range(n) if j != i) and m[i] > 0]
        if not pure:
            raise NotZeroDimensional(f"no pure power of x{i + 1} in the initial ideal")
        bounds.append(min(pure))
    out = []
    if any(all(a == 0 for a in m) for m in lms):
        return out
    exp = [0] * n

    def rec(i):
        if i == n:
            out.append(tuple(exp))
            return
        for a in range(bounds[i]):
            exp[i] = a
            if a > 0 and any(_divides(m, exp) for m in lms):
                break
            rec(i + 1)
        exp[i] = 0

    rec(0)
    # the divisibility test above only checks prefixes; re-filter exactly
    out = [m for m in out if not any(_divides(l, m) for l in lms)]
    out.sort(key=order_key(G.order))
    out.sort(key=sum)
    return out


def quotient_basis(I: Ideal, order: str = "neglex", gb: Optional[GB] = None) -> Quotient:
    G = gb if gb is not None else buchberger(I, order)
    std = standard_monomials(G)
    hil: Dict[int, int] = {}
    for m in std:
        hil[sum(m)] = hil.get(sum(m), 0) + 1
    return Quotient(I, order, G, std, QTPoly({(d, 0): c for d, c in hil.items()}))


def cycle_type_representative(mu: Sequence[int]) -> Tuple[int, ...]:
    """One-line permutation with cycles (1..mu_1)(mu_1+1..)..."""
    perm = []
    start = 1
    for part in mu:
        cyc = list(range(start, start + part))
        perm.extend(cyc[1:] + cyc[:1])
        start += part
    return tuple(perm)


def check_equivariant(I: Ideal, G: GB) -> None:
    n = I.n
    for i in range(1, n):
        for g in I.generators:
            if not normal_form(g.swap(i), G).is_zero():
                raise NotEquivariant(f"ideal {I.label} is not stable under s_{i}")


def graded_character(Q: Quotient) -> Dict[Partition, QTPoly]:
    """Graded trace of one permutation per cycle type on the quotient."""
    n = Q.n
    index = {m: i for i, m in enumerate(Q.standard_monomials)}
    chars = {}
    for mu in partitions(n):
        perm = cycle_type_representative(mu)
        trace: Dict[int, Fraction] = {}
        for m in Q.standard_monomials:
            image = XPoly.monomial(m).permute(perm)
            nf = normal_form(image, Q.gb)
            c = nf.terms().get(m)
            if c:
                trace[sum(m)] = trace.get(sum(m), Fraction(0)) + c
        chars[mu] = QTPoly({(d, 0): c for d, c in trace.items()})
    return chars


def graded_frobenius(Q: Quotient, check: bool = True) -> SymFunc:
    """sum_d Frob(degree d piece) q^d, as a SymFunc with q-polynomial coefficients."""
    n = Q.n
    if check:
        check_equivariant(Q.ideal, Q.gb)
    chars = graded_character(Q)
    top = max((sum(m) for m in Q.standard_monomials), default=0)
    total = SymFunc(n, "s", {})
    for d in range(top + 1):
        chi = {mu: chars[mu].coeff(d, 0) for mu in chars}
        if all(v == 0 for v in chi.values()):
            continue
        total = total + frobenius_from_character(n, chi) * QTPoly.q(d)
    return total


# ---------------------------------------------------------------------------
# closed formulas for R_{n,k}


def syt_formula(n: int, k: int) -> SymFunc:
    """sum_T q^maj(T) [n - des(T) - 1 choose n - k]_q s_shape(T)."""
    if not 1 <= k <= n:
        raise BadParams("need 1 <= k <= n")
    coeffs = {}
    for lam in partitions(n):
        poly = QTPoly(0)
        for T in syt_enumerate(lam):
            des, maj = syt_stats(T)
            poly = poly + QTPoly.q(maj) * q_binomial(n - des - 1, n - k)
        if not poly.is_zero():
            coeffs[lam] = poly
    return SymFunc(n, "s", coeffs)


def hl_formula(n: int, k: int) -> SymFunc:
    """Hall-Littlewood expansion of grFrob(R_{n,k}), expanded into Schur functions."""
    from .qtops import hall_littlewood

    if not 1 <= k <= n:
        raise BadParams("need 1 <= k <= n")
    total = SymFunc(n, "s", {})
    for lam in partitions(n):
        if len(lam) != k:
            continue
        mult = [lam.multiplicities().get(i, 0) for i in range(1, n + 1)]
        expo = sum(math.comb(m, 2) for m in mult) - sum(
            i * (2 * part - 1) for i, part in enumerate(lam)
        )
        coeff = QTRat.q(expo + (n - k) * (k - 1)) * q_multinomial(mult)
        total = total + hall_littlewood(lam) * coeff
    return total


# ---------------------------------------------------------------------------
# point loci and orbit harmonics


@dataclass
class PointLocus:
    points: List[Tuple[Fraction, ...]]
    symmetric: bool = True
    label: str = ""

    def __post_init__(self):
        self.points = [tuple(Fraction(x) for x in p) for p in self.points]
        if len(set(self.points)) != len(self.points):
            raise DuplicatePoints("locus has repeated points")
        if self.points and len({len(p) for p in self.points}) != 1:
            raise LengthMismatch("points of different dimensions")

    @property
    def n(self) -> int:
        return len(self.points[0]) if self.points else 0

    def is_stable(self) -> bool:
        pts = set(self.points)
        n = self.n
        for i in range(n - 1):
            for p in self.points:
                q = list(p)
                q[i], q[i + 1] = q[i + 1], q[i]
                if tuple(q) not in pts:
                    return False
        return True

    @classmethod
    def orbit_union(cls, seeds: Iterable[Sequence], label: str = "") -> "PointLocus":
        pts = set()
        for s in seeds:
            pts.update(itertools.permutations(tuple(Fraction(x) for x in s)))
        return cls(sorted(pts), True, label)

    @classmethod
    def from_csv(cls, text: str) -> "PointLocus":
        import csv
        import io

        rows = [r for r in csv.reader(io.StringIO(text)) if r and any(x.strip() for x in r)]
        return cls([tuple(Fraction(x.strip()) for x in r) for r in rows])


def alphas(k: int) -> List[int]:
    """Distinct parameters alpha_i = i - 1."""
    return list(range(k))


def locus_nk(n: int, k: int) -> PointLocus:
    from .combinatorics import fubini_words

    a = alphas(k)
    return PointLocus([tuple(a[x - 1] for x in w) for w in fubini_words(n, k)], True, f"Z_{n},{k}")


def locus_nks(n: int, k: int, s: int) -> PointLocus:
    a = alphas(s)
    pts = [
        p for p in itertools.product(a, repeat=n) if set(a[:k]) <= set(p)
    ]
    return PointLocus(pts, True, f"Z_{n},{k},{s}")


def locus_partition(lam: Sequence[int]) -> PointLocus:
    lam = Partition(lam)
    a = alphas(len(lam))
    seed = [a[i] for i, part in enumerate(lam) for _ in range(part)]
    return PointLocus.orbit_union([seed], f"Z_{tuple(lam)}")


def vanishing_ideal(Z: PointLocus, order: str = "graded_neglex") -> GB:
    """Reduced Groebner basis of I(Z) by the Buchberger-Moeller algorithm."""
    n = Z.n
    pts = [tuple(_fq(x) for x in p) for p in Z.points]
    npts = len(pts)
    key = order_key(order)
    zero, one = flint.fmpq(0), flint.fmpq(1)

    def evaluate(m):
        out = []
        for p in pts:
            v = one
            for x, a in zip(p, m):
                if a:
                    v = v * x**a
            out.append(v)
        return out

    # echelon rows: (pivot column, vector, combination over standard monomials)
    rows: List[Tuple[int, list, dict]] = []
    std: List[Exp] = []
    lead: List[Exp] = []
    gb_terms: List[dict] = []
    heap = [(key((0,) * n), (0,) * n)]
    seen = {(0,) * n}
    while heap:
        _k, m = heapq.heappop(heap)
        if any(_divides(l, m) for l in lead):
            continue
        vec = evaluate(m)
        comb = {m: one}
        for piv, rv, rc in rows:
            c = vec[piv]
            if c != 0:
                vec = [a - c * b for a, b in zip(vec, rv)]
                for mono, v in rc.items():
                    comb[mono] = comb.get(mono, zero) - c * v
        piv = next((i for i, x in enumerate(vec) if x != 0), None)
        if piv is None:
            lead.append(m)
            gb_terms.append({mono: v for mono, v in comb.items() if v != 0})
            continue
        inv = one / vec[piv]
        vec = [x * inv for x in vec]
        comb = {mono: v * inv for mono, v in comb.items()}
        # keep rows fully reduced at their pivots
        new_rows = []
        for p2, rv, rc in rows:
            c = rv[piv]
            if c != 0:
                rv = [a - c * b for a, b in zip(rv, vec)]
                rc = dict(rc)
                for mono, v in comb.items():
                    rc[mono] = rc.get(mono, zero) - c * v
            new_rows.append((p2, rv, rc))
        rows = new_rows + [(piv, vec, comb)]
        std.append(m)
        if len(std) > npts:
            raise AssertionError("more standard monomials than points")
        for i in range(n):
            nxt = list(m)
            nxt[i] += 1
            nxt = tuple(nxt)
            if nxt not in seen:
                seen.add(nxt)
                heapq.heappush(heap, (key(nxt), nxt))
    polys = [
        XPoly(n, {mono: _frac(v) for mono, v in t.items()}) for t in gb_terms
    ]
    polys.sort(key=lambda f: key(f.leading_monomial(order)), reverse=True)
    return GB(n, order, polys, True)


def associated_graded(I) -> Ideal:
    """gr I: top-degree forms of a graded Groebner basis of I."""
    if isinstance(I, GB):
        G = I if I.order == "graded_neglex" else buchberger(I.polys, "graded_neglex")
        n = G.n
    else:
        G = buchberger(I, "graded_neglex")
        n = I.n
    return Ideal(n, [g.top_form() for g in G.polys], "gr")


def orbit_quotient(Z: PointLocus, order: str = "neglex") -> Quotient:
    """Q[x]/gr I(Z) together with its Groebner data."""
    grI = associated_graded(vanishing_ideal(Z))
    return quotient_basis(grI, order)


def permutation_character(Z: PointLocus) -> Dict[Partition, int]:
    pts = set(Z.points)
    out = {}
    for mu in partitions(Z.n):
        perm = cycle_type_representative(mu)
        fixed = 0
        for p in pts:
            image = [None] * Z.n
            for i, x in enumerate(p):
                image[perm[i] - 1] = x
            fixed += tuple(image) == p
        out[mu] = fixed
    return out


# ---------------------------------------------------------------------------
# Hall-Littlewood positivity


@dataclass
class PositivityReport:
    coefficients: Dict[Partition, QTPoly]
    positive: bool

    @property
    def status(self) -> str:
        return "positive" if self.positive else "NOT_POSITIVE"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "coefficients": [
                {"partition": list(lam), "coeff": c.to_json(), "pretty": str(c)}
                for lam, c in sorted(self.coefficients.items(), reverse=True)
            ],
        }


def hl_expand(F: SymFunc) -> Dict[Partition, QTRat]:
    """Coefficients of F in the basis {H_lam(x;q)} by a triangular solve."""
    from .qtops import hall_littlewood

    n = F.degree
    Fs = convert(F, "s")
    parts = partitions(n)  # reverse lex refines dominance
    remaining = dict(Fs.coeffs)
    out: Dict[Partition, QTRat] = {}
    # H_mu = q^n(mu) s_mu + (terms s_lam with lam > mu); peel off the smallest first
    for mu in reversed(parts):
        c = remaining.get(mu, ZERO)
        if c.is_zero():
            continue
        H = hall_littlewood(mu)
        c = c / H.coefficient(mu)
        out[mu] = c
        for lam, a in H.coeffs.items():
            remaining[lam] = remaining.get(lam, ZERO) - c * a
    if any(not v.is_zero() for v in remaining.values()):
        raise AssertionError("Hall-Littlewood expansion did not terminate cleanly")
    return out


def hl_positivity_check(F: SymFunc) -> PositivityReport:
    for c in F.coeffs.values():
        if not c.is_polynomial() or c.num.degree_t() > 0:
            raise NotPolynomial(f"coefficient {c} is not a polynomial in q")
    coeffs = hl_expand(F)
    polys = {lam: c.as_poly() if c.is_polynomial() else None for lam, c in coeffs.items()}
    positive = True
    out = {}
    for lam, c in coeffs.items():
        if not c.is_polynomial():
            positive = False
            out[lam] = c.num
            continue
        p = c.as_poly()
        out[lam] = p
        if any(v < 0 or v.denominator != 1 or j != 0 for (_, j), v in p.terms()):
            positive = False
    return PositivityReport(out, positive)


def orbit_loci(n: int, values: Sequence[int] = (0, 1, 2), max_orbits: int = 2) -> List[PointLocus]:
    """S_n-stable loci that are unions of at most ``max_orbits`` orbits of
    points with coordinates in ``values``."""
    seeds = sorted(set(tuple(sorted(c)) for c in itertools.product(values, repeat=n)))
    out = []
    for r in range(1, max_orbits + 1):
        for combo in itertools.combinations(seeds, r):
            out.append(PointLocus.orbit_union(combo, "+".join(str(list(s)) for s in combo)))
    return out


# ---------------------------------------------------------------------------
# Demazure membership and the short exact sequence recursion


def demazure_membership(S: Iterable[int], n: int, k: int) -> bool:
    S = sorted(S)
    if len(S) != n - k + 1:
        raise BadParams("|S| must be n - k + 1")
    gamma = skip_sequence(S, n)[::-1]
    G = buchberger([e_poly(n, d) for d in range(n, n - k, -1)], "neglex")
    return normal_form(demazure(tuple(gamma)), G).is_zero()


def rnks_frobenius(n: int, k: int, s: int) -> SymFunc:
    Q = quotient_basis(build_ideal("nks", n=n, k=k, s=s))
    return graded_frobenius(Q)


def ses_recursion_check(n: int, k: int, s: int) -> bool:
    """grFrob(R_{n,k,s}) = q^(n-k) grFrob(R_{n,k,s-1}) + grFrob(R_{n,k+1,s})."""
    if not (0 <= k < s <= n):
        raise BadParams("need 0 <= k < s <= n")
    lhs = rnks_frobenius(n, k, s)
    rhs = rnks_frobenius(n, k + 1, s)
    if s - 1 >= max(k, 1):
        rhs = rhs + rnks_frobenius(n, k, s - 1) * QTPoly.q(n - k)
    return lhs == rhs


def op_nls_count(n: int, lam: Sequence[int], s: int) -> int:
    """|OP_{n,lam,s}|: s-tuples of disjoint blocks covering [n] with |B_i| >= lam_i."""
    lam = list(Partition(lam)) + [0] * s
    lam = lam[:s]

    @lru_cache(maxsize=None)
    def rec(i, remaining):
        if i == s:
            return 1 if remaining == 0 else 0
        return sum(
            math.comb(remaining, size) * rec(i + 1, remaining - size)
            for size in range(lam[i], remaining + 1)
        )

    return rec(0, n)


def known_gb_nk(n: int, k: int) -> List[XPoly]:
    """Demazure characters kappa_{rev(gamma(S))}, |S| = n-k+1, plus x_i^k."""
    out = [demazure(tuple(skip_sequence(S, n)[::-1])) for S in itertools.combinations(range(1, n + 1), n - k + 1)]
    out += [XPoly.monomial(tuple(k if j == i else 0 for j in range(n))) for i in range(n)]
    return out
