"""Homogeneous symmetric functions over Q(q,t).

A ``SymFunc`` is a partition-indexed coefficient map tagged with a basis
name.  The classical bases are ``m``, ``e``, ``h``, ``p`` and ``s``; every
conversion is routed through the Schur basis using transition matrices that
are built once per degree.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

import flint

from .arith import ONE, ZERO, QTPoly, QTRat, as_qtrat, qt_eval
from .errors import DegreeMismatch, NonIntegralMultiplicity, UnsupportedBasis

CLASSICAL_BASES = ("m", "e", "h", "p", "s")
ALL_BASES = CLASSICAL_BASES + ("HL_q", "Mac_qt")


class Partition(tuple):
    """Integer partition stored as a weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts if x != 0)
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            parts = tuple(sorted(parts, reverse=True))
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def parts(self) -> Tuple[int, ...]:
        return tuple(self)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def multiplicities(self) -> Dict[int, int]:
        return dict(Counter(self))

    def cells(self) -> List[Tuple[int, int]]:
        """Cells (row, column), 1-based, rows numbered from the longest."""
        return [(r + 1, c + 1) for r, part in enumerate(self) for c in range(part)]

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"


def partitions(n: int, max_part: Optional[int] = None) -> List[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    return [Partition(p) for p in _partitions(n, n if max_part is None else max_part)]


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def dominates(lam: Partition, mu: Partition) -> bool:
    """lam >= mu in dominance order (prefix sums)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def z_mu(mu: Iterable[int]) -> int:
    """Size of the centralizer of a permutation of cycle type mu."""
    out = 1
    for part, mult in Counter(mu).items():
        out *= part**mult * math.factorial(mult)
    return out


def class_size(mu: Partition) -> int:
    return math.factorial(sum(mu)) // z_mu(mu)


# ---------------------------------------------------------------------------
# tableaux


def horizontal_strips(shape: Tuple[int, ...], size: int) -> Iterator[Tuple[int, ...]]:
    """Shapes nu containing ``shape`` with nu/shape a horizontal strip of given size."""
    rows = list(shape) + [0]

    def rec(i, remaining, acc):
        if i == len(rows):
            if remaining == 0:
                yield tuple(x for x in acc if x)
            return
        cap = rows[i - 1] - rows[i] if i > 0 else remaining
        for add in range(min(cap, remaining), -1, -1):
            yield from rec(i + 1, remaining - add, acc + [rows[i] + add])

    yield from rec(0, size, [])


def ssyt(shape: Iterable[int], content: Iterable[int]) -> Iterator[List[List[int]]]:
    """Semistandard tableaux of a shape with a given content, as row lists."""
    shape = tuple(shape)
    content = tuple(content)
    if sum(shape) != sum(content):
        return

    def rec(i, cur, chain):
        if i == len(content):
            if cur == shape:
                yield chain
            return
        for nxt in horizontal_strips(cur, content[i]):
            if len(nxt) > len(shape) or any(a > b for a, b in zip(nxt, shape)):
                continue
            yield from rec(i + 1, nxt, chain + [nxt])

    for chain in rec(0, (), []):
        rows = [[] for _ in shape]
        prev: Tuple[int, ...] = ()
        for letter, sh in enumerate(chain, start=1):
            for r, length in enumerate(sh):
                before = prev[r] if r < len(prev) else 0
                rows[r].extend([letter] * (length - before))
            prev = sh
        yield rows


@lru_cache(maxsize=None)
def kostka(lam: Tuple[int, ...], mu: Tuple[int, ...]) -> int:
    """Number of SSYT of shape lam and content mu (mu any composition)."""
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1 if not lam else 0
    last = mu[-1]
    total = 0
    # remove the largest letter: lam/nu must be a horizontal strip of size last
    for nu in _strip_removals(lam, last):
        total += kostka(nu, mu[:-1])
    return total


def _strip_removals(lam: Tuple[int, ...], size: int) -> Iterator[Tuple[int, ...]]:
    rows = list(lam)

    def rec(i, remaining, acc):
        if i == len(rows):
            if remaining == 0:
                yield tuple(x for x in acc if x)
            return
        lower = rows[i + 1] if i + 1 < len(rows) else 0
        for take in range(0, min(rows[i] - lower, remaining) + 1):
            yield from rec(i + 1, remaining - take, acc + [rows[i] - take])

    yield from rec(0, size, [])


# ---------------------------------------------------------------------------
# transition matrices

Matrix = Dict[Partition, Dict[Partition, Fraction]]

_TRANSITIONS: Dict[int, Dict[str, Tuple[Matrix, Matrix]]] = {}


def _mat_to_flint(rows: List[List[Fraction]]) -> flint.fmpq_mat:
    m = len(rows)
    return flint.fmpq_mat(m, m, [flint.fmpq(x.numerator, x.denominator) for r in rows for x in r])


def _flint_to_rows(mat: flint.fmpq_mat) -> List[List[Fraction]]:
    return [
        [Fraction(int(mat[i, j].p), int(mat[i, j].q)) for j in range(mat.ncols())]
        for i in range(mat.nrows())
    ]


def _rows_to_matrix(parts: List[Partition], rows: List[List[Fraction]]) -> Matrix:
    return {
        lam: {mu: rows[i][j] for j, mu in enumerate(parts) if rows[i][j] != 0}
        for i, lam in enumerate(parts)
    }


def _power_to_monomial(lam: Tuple[int, ...], mu: Tuple[int, ...]) -> int:
    """Coefficient of m_mu in p_lam: ways to drop lam's parts into mu's bins."""

    @lru_cache(maxsize=None)
    def rec(i, bins):
        if i == len(lam):
            return 1 if all(b == 0 for b in bins) else 0
        total = 0
        for j, b in enumerate(bins):
            if b >= lam[i]:
                total += rec(i + 1, bins[:j] + (b - lam[i],) + bins[j + 1 :])
        return total

    return rec(0, tuple(mu))


def _build_transitions(n: int) -> Dict[str, Tuple[Matrix, Matrix]]:
    parts = partitions(n)
    size = len(parts)
    K = [[Fraction(kostka(lam, mu)) for mu in parts] for lam in parts]  # s_lam -> m_mu
    Kinv = _flint_to_rows(_mat_to_flint(K).inv())  # m_lam -> s_mu
    R = [[Fraction(_power_to_monomial(lam, mu)) for mu in parts] for lam in parts]  # p -> m
    P2S = _flint_to_rows(_mat_to_flint(R) * _mat_to_flint(Kinv))
    H2S = [[K[j][i] for j in range(size)] for i in range(size)]  # h_lam = sum K_{mu,lam} s_mu
    index = {lam: i for i, lam in enumerate(parts)}
    E2S = [[K[index[mu.conjugate()]][i] for mu in parts] for i in range(size)]
    to_s = {"m": Kinv, "p": P2S, "h": H2S, "e": E2S}
    out: Dict[str, Tuple[Matrix, Matrix]] = {}
    ident = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    out["s"] = (_rows_to_matrix(parts, ident), _rows_to_matrix(parts, ident))
    for b, rows in to_s.items():
        inv = _flint_to_rows(_mat_to_flint(rows).inv())
        out[b] = (_rows_to_matrix(parts, rows), _rows_to_matrix(parts, inv))
    return out


def transition(n: int, basis: str) -> Tuple[Matrix, Matrix]:
    """Return ``(to_s, from_s)`` for a classical basis in degree n.

    ``to_s[lam][mu]`` is the coefficient of s_mu in b_lam and ``from_s`` is
    the inverse change of basis.
    """
    if basis not in CLASSICAL_BASES:
        raise UnsupportedBasis(basis)
    if n not in _TRANSITIONS:
        from . import cache

        stored = cache.load_transitions(n)
        if stored is None:
            stored = _build_transitions(n)
            cache.store_transitions(n, stored)
        _TRANSITIONS[n] = stored
    return _TRANSITIONS[n][basis]


# ---------------------------------------------------------------------------
# SymFunc


def _apply(coeffs: Mapping[Partition, QTRat], mat: Matrix) -> Dict[Partition, QTRat]:
    out: Dict[Partition, QTRat] = {}
    for lam, c in coeffs.items():
        for mu, a in mat[lam].items():
            out[mu] = out.get(mu, ZERO) + c * a
    return {k: v for k, v in out.items() if not v.is_zero()}


class SymFunc:
    """Homogeneous symmetric function of fixed degree in a named basis."""

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree: int, basis: str, coeffs: Optional[Mapping] = None):
        if basis not in ALL_BASES:
            raise UnsupportedBasis(basis)
        self.degree = int(degree)
        self.basis = basis
        clean: Dict[Partition, QTRat] = {}
        for lam, c in (coeffs or {}).items():
            lam = Partition(lam)
            if lam.n != self.degree:
                raise DegreeMismatch(f"{lam} is not a partition of {degree}")
            c = as_qtrat(c)
            if not c.is_zero():
                clean[lam] = clean.get(lam, ZERO) + c
        self.coeffs = {k: v for k, v in clean.items() if not v.is_zero()}

    # constructors -----------------------------------------------------
    @classmethod
    def basis_element(cls, basis: str, lam: Iterable[int], coeff=1) -> "SymFunc":
        lam = Partition(lam)
        return cls(lam.n, basis, {lam: coeff})

    @classmethod
    def zero(cls, degree: int, basis: str = "s") -> "SymFunc":
        return cls(degree, basis, {})

    # basics -------------------------------------------------------------
    def coefficient(self, lam: Iterable[int]) -> QTRat:
        return self.coeffs.get(Partition(lam), ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self) -> List[Tuple[Partition, QTRat]]:
        """Terms sorted by partition in reverse-lexicographic order."""
        return sorted(self.coeffs.items(), key=lambda kv: kv[0], reverse=True)

    def convert(self, target: str) -> "SymFunc":
        return convert(self, target)

    def map_coeffs(self, fn: Callable[[QTRat], QTRat]) -> "SymFunc":
        return SymFunc(self.degree, self.basis, {k: fn(v) for k, v in self.coeffs.items()})

    def subs(self, at_q=None, at_t=None) -> "SymFunc":
        return self.map_coeffs(lambda c: qt_eval(c, at_q, at_t))

    def _same_basis(self, other: "SymFunc") -> Tuple["SymFunc", "SymFunc"]:
        if self.degree != other.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")
        if self.basis == other.basis:
            return self, other
        return convert(self, "s"), convert(other, "s")

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        a, b = self._same_basis(other)
        out = dict(a.coeffs)
        for k, v in b.coeffs.items():
            out[k] = out.get(k, ZERO) + v
        return SymFunc(a.degree, a.basis, out)

    def __neg__(self):
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return product(self, other)
        if isinstance(other, (int, Fraction, QTPoly, QTRat)):
            c = as_qtrat(other)
            return self.map_coeffs(lambda v: v * c)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QTPoly, QTRat)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return self.is_zero() and other.is_zero()
        if self.basis == other.basis:
            return self.coeffs == other.coeffs
        if self.basis in CLASSICAL_BASES and other.basis in CLASSICAL_BASES:
            return convert(self, "s").coeffs == convert(other, "s").coeffs
        return False

    def __hash__(self):
        s = convert(self, "s") if self.basis in CLASSICAL_BASES else self
        return hash((s.degree, s.basis, frozenset(s.coeffs.items())))

    def __repr__(self):
        return f"SymFunc({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        name = {"HL_q": "HL", "Mac_qt": "H"}.get(self.basis, self.basis)
        out = []
        for lam, c in self.items():
            label = name + "[" + ",".join(map(str, lam)) + "]"
            if c == 1:
                out.append(label)
            else:
                out.append(f"({c})*{label}")
        return " + ".join(out)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [{"partition": list(lam), "coeff": c.to_json()} for lam, c in self.items()],
        }

    @staticmethod
    def from_json(data: Mapping) -> "SymFunc":
        return SymFunc(
            data["degree"],
            data["basis"],
            {Partition(t["partition"]): QTRat.from_json(t["coeff"]) for t in data["terms"]},
        )


def s(*lam) -> SymFunc:
    return SymFunc.basis_element("s", _flat(lam))


def e(*lam) -> SymFunc:
    return SymFunc.basis_element("e", _flat(lam))


def h(*lam) -> SymFunc:
    return SymFunc.basis_element("h", _flat(lam))


def p(*lam) -> SymFunc:
    return SymFunc.basis_element("p", _flat(lam))


def m(*lam) -> SymFunc:
    return SymFunc.basis_element("m", _flat(lam))


def _flat(lam) -> Tuple[int, ...]:
    if len(lam) == 1 and not isinstance(lam[0], int):
        return tuple(lam[0])
    return tuple(lam)


def convert(f: SymFunc, target: str) -> SymFunc:
    """Re-expand f in another classical basis."""
    if target not in CLASSICAL_BASES or f.basis not in CLASSICAL_BASES:
        raise UnsupportedBasis(f"cannot convert {f.basis} -> {target}")
    if f.basis == target:
        return f
    n = f.degree
    coeffs = f.coeffs
    if f.basis != "s":
        coeffs = _apply(coeffs, transition(n, f.basis)[0])
    if target != "s":
        coeffs = _apply(coeffs, transition(n, target)[1])
    return SymFunc(n, target, coeffs)


def hall_inner(f: SymFunc, g: SymFunc) -> QTRat:
    """Hall inner product, with the Schur basis orthonormal."""
    if f.degree != g.degree:
        raise DegreeMismatch(f"degrees {f.degree} and {g.degree}")
    fs, gs = convert(f, "s"), convert(g, "s")
    total = ZERO
    for lam, c in fs.coeffs.items():
        if lam in gs.coeffs:
            total = total + c * gs.coeffs[lam]
    return total


def omega(f: SymFunc) -> SymFunc:
    """The involution sending s_lam to s_lam'."""
    fs = convert(f, "s")
    out = SymFunc(f.degree, "s", {lam.conjugate(): c for lam, c in fs.coeffs.items()})
    return convert(out, f.basis)


def product(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product of symmetric functions, computed in the power-sum basis."""
    fp, gp = convert(f, "p"), convert(g, "p")
    out: Dict[Partition, QTRat] = {}
    for a, ca in fp.coeffs.items():
        for b, cb in gp.coeffs.items():
            lam = Partition(tuple(a) + tuple(b))
            out[lam] = out.get(lam, ZERO) + ca * cb
    res = SymFunc(f.degree + g.degree, "p", out)
    return convert(res, f.basis if f.basis == g.basis else "s")


# plethystic scaling presets: p_k -> scale(k) p_k


def ONE_MINUS_Q(k: int) -> QTRat:
    return QTRat(1 - QTPoly.q(k))


def ONE_MINUS_T(k: int) -> QTRat:
    return QTRat(1 - QTPoly.t(k))


def MACDONALD_KERNEL(k: int) -> QTRat:
    return QTRat(1, (1 - QTPoly.q(k)) * (1 - QTPoly.t(k)))


def plethystic_scale(f: SymFunc, scale: Callable[[int], QTRat]) -> SymFunc:
    """Apply p_k -> scale(k) * p_k multiplicatively; result in f's basis."""
    fp = convert(f, "p")
    cache: Dict[int, QTRat] = {}

    def factor(lam):
        out = ONE
        for part in lam:
            if part not in cache:
                cache[part] = as_qtrat(scale(part))
            out = out * cache[part]
        return out

    res = SymFunc(f.degree, "p", {lam: c * factor(lam) for lam, c in fp.coeffs.items()})
    return convert(res, f.basis)


def frobenius_from_character(n: int, chi: Mapping) -> SymFunc:
    """Frobenius image sum_mu chi(mu)/z_mu p_mu, returned in the Schur basis."""
    coeffs = {}
    for mu in partitions(n):
        val = Fraction(chi[mu] if mu in chi else chi[tuple(mu)])
        if val:
            coeffs[mu] = QTRat(val / z_mu(mu))
    res = convert(SymFunc(n, "p", coeffs), "s")
    for lam, c in res.coeffs.items():
        if not c.is_polynomial() or not c.num.is_constant():
            raise NonIntegralMultiplicity(f"coefficient {c} of s{lam}")
        v = c.num.constant_value()
        if v.denominator != 1 or v < 0:
            raise NonIntegralMultiplicity(f"coefficient {v} of s{lam}")
    return res


def monomial_table_to_symfunc(n: int, table: Mapping[Tuple[int, ...], QTRat]) -> SymFunc:
    """Convert a symmetric table of degree-n monomials into the Schur basis.

    Only the coefficients of dominant monomials are read; symmetry is the
    caller's responsibility (see ``is_symmetric_table``).
    """
    coeffs = {}
    for lam in partitions(n):
        key = tuple(lam) + (0,) * (n - len(lam))
        c = table.get(key)
        if c is not None and not as_qtrat(c).is_zero():
            coeffs[lam] = c
    return convert(SymFunc(n, "m", coeffs), "s")


def is_symmetric_table(table: Mapping[Tuple[int, ...], QTRat]) -> bool:
    """True when coefficients depend only on the sorted exponent vector."""
    seen: Dict[Tuple[int, ...], QTRat] = {}
    counts: Dict[Tuple[int, ...], int] = {}
    for mono, c in table.items():
        if as_qtrat(c).is_zero():
            continue
        key = tuple(sorted(mono, reverse=True))
        if key in seen and seen[key] != c:
            return False
        seen[key] = c
        counts[key] = counts.get(key, 0) + 1
    # every rearrangement of a present monomial must be present
    for key, cnt in counts.items():
        length = len(key)
        perms = math.factorial(length)
        for v in Counter(key).values():
            perms //= math.factorial(v)
        if cnt != perms:
            return False
    return True
