"""Pattern matrices, echelon decompositions and Schubert polynomials of words.

Matrices are lists of rows.  Field arithmetic is exact: ``Fraction`` for the
rationals, FLINT ``nmod`` for prime fields and ``fq_default`` for prime
powers.  Permutations are 1-based one-line tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import flint

from .arith import QTPoly
from .coinvariant import XPoly, build_ideal, buchberger, divided_difference, normal_form, standard_monomials
from .combinatorics import fubini_words, is_fubini, q_factorial, q_stirling
from .errors import BadParams, BudgetExceeded, NotConvex, SingularBasis, ZeroColumn
from .linalg import inverse, rank, solve_unique, transpose

STAR = "*"

# ---------------------------------------------------------------------------
# words


def _check_word(w: Sequence[int]) -> Tuple[int, ...]:
    w = tuple(int(x) for x in w)
    if not w or min(w) < 1:
        raise BadParams("words use letters 1, 2, ...")
    return w


def initial_positions(w: Sequence[int]) -> List[int]:
    """0-based positions holding the first copy of their letter."""
    seen = set()
    out = []
    for j, a in enumerate(w):
        if a not in seen:
            seen.add(a)
            out.append(j)
    return out


@dataclass(frozen=True)
class PatternMatrix:
    word: Tuple[int, ...]
    k: int
    entries: Tuple[Tuple[object, ...], ...]

    @property
    def stars(self) -> int:
        return sum(x == STAR for row in self.entries for x in row)

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)

    def fits(self, B: Sequence[Sequence]) -> bool:
        for prow, brow in zip(self.entries, B):
            for p, b in zip(prow, brow):
                if p == STAR:
                    continue
                if b != p:
                    return False
        return True


def pattern_matrix(w: Sequence[int], k: Optional[int] = None) -> PatternMatrix:
    """The {0, 1, *} grid attached to a word in [k]^n."""
    w = _check_word(w)
    k = max(w) if k is None else k
    if max(w) > k:
        raise BadParams(f"letter {max(w)} exceeds k={k}")
    n = len(w)
    first = {}
    for j, a in enumerate(w):
        first.setdefault(a, j)
    grid = [[0] * n for _ in range(k)]
    for j, a in enumerate(w):
        grid[a - 1][j] = 1
    for j, a in enumerate(w):
        if first[a] == j:
            # rows above whose leading 1 lies to the west
            for i in range(1, a):
                if i in first and first[i] < j:
                    grid[i - 1][j] = STAR
        else:
            # rows whose leading 1 lies west of this row's leading 1
            for i in range(1, k + 1):
                if i != a and i in first and first[i] < first[a]:
                    grid[i - 1][j] = STAR
    return PatternMatrix(w, k, tuple(tuple(r) for r in grid))


def dim_stat(w: Sequence[int]) -> int:
    """Number of stars in the pattern matrix, computed without building it."""
    order: Dict[int, int] = {}
    total = 0
    for a in w:
        rank_a = order.get(a)
        if rank_a is None:
            total += sum(1 for b in order if b < a)
            order[a] = len(order)
        else:
            total += rank_a
    return total


def dim_generating_function(n: int, k: int) -> QTPoly:
    counts: Dict[int, int] = {}
    for w in fubini_words(n, k):
        d = dim_stat(w)
        counts[d] = counts.get(d, 0) + 1
    return QTPoly({(d, 0): c for d, c in counts.items()})


# ---------------------------------------------------------------------------
# fields


class Field:
    """Exact field wrapper: ``Field.QQ``, ``Field(p)`` or ``Field(q)`` for q = p^e."""

    def __init__(self, order: Optional[int] = None):
        self.order = order
        if order is None:
            self._ctx = None
            self.name = "QQ"
            return
        p, e = _prime_power(order)
        self.name = f"GF({order})"
        if e == 1:
            self._ctx = ("nmod", p)
        else:
            self._ctx = ("fq", flint.fq_default_ctx(p, e))

    def __call__(self, x):
        if self._ctx is None:
            return Fraction(x)
        kind, c = self._ctx
        if kind == "nmod":
            if isinstance(x, Fraction):
                return flint.nmod(x.numerator, c) / flint.nmod(x.denominator, c)
            return flint.nmod(int(x), c)
        if isinstance(x, flint.fq_default):
            return x
        return c(x) if not isinstance(x, Fraction) else c(x.numerator) / c(x.denominator)

    def elements(self) -> List:
        if self._ctx is None:
            raise BadParams("the rationals are infinite")
        kind, c = self._ctx
        if kind == "nmod":
            return [flint.nmod(i, c) for i in range(c)]
        p, e = int(c.prime()), int(c.degree())
        return [c(list(digits)) for digits in itertools.product(range(p), repeat=e)]

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __eq__(self, other):
        return isinstance(other, Field) and other.order == self.order

    def __hash__(self):
        return hash(self.order)

    def __repr__(self):
        return self.name


Field.QQ = Field(None)


def _prime_power(q: int) -> Tuple[int, int]:
    if q < 2:
        raise BadParams("field order must be at least 2")
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1:
                raise BadParams(f"{q} is not a prime power")
            return p, e
    raise BadParams(f"{q} is not a prime power")


def _is_zero(x) -> bool:
    return x == 0


# ---------------------------------------------------------------------------
# echelon decomposition


@dataclass
class Echelon:
    """Row-reduction data: ``u A = B t`` with u lower unitriangular.

    ``u`` records the downward row operations, so the original matrix is
    recovered as ``u^{-1} B t`` (see ``reconstruct``).
    """

    u: List[list]
    B: List[list]
    t: List
    w: Tuple[int, ...]
    field: Field

    def reconstruct(self) -> List[list]:
        k = len(self.B)
        uinv = inverse(self.u, self.field.zero, self.field.one)
        Bt = [[b * self.t[j] for j, b in enumerate(row)] for row in self.B]
        return [
            [sum((uinv[i][r] * Bt[r][j] for r in range(k)), self.field.zero) for j in range(len(Bt[0]))]
            for i in range(k)
        ]

    @property
    def u_inverse(self) -> List[list]:
        return inverse(self.u, self.field.zero, self.field.one)

    @property
    def spans(self) -> bool:
        return set(self.w) == set(range(1, len(self.B) + 1))

    def to_json(self) -> dict:
        return {
            "field": self.field.name,
            "w": list(self.w),
            "u": [[str(x) for x in r] for r in self.u],
            "B": [[str(x) for x in r] for r in self.B],
            "t": [str(x) for x in self.t],
        }


def echelon_decompose(A: Sequence[Sequence], field: Field = Field.QQ) -> Echelon:
    """Write A (k x n, no zero columns) as row operations, a pattern matrix and a torus element."""
    M = [[field(x) for x in row] for row in A]
    k = len(M)
    n = len(M[0]) if M else 0
    u = [[field.one if i == j else field.zero for j in range(k)] for i in range(k)]
    lead_col: Dict[int, int] = {}  # pivot row -> its initial column
    w = []
    for j in range(n):
        fresh = [i for i in range(k) if i not in lead_col and not _is_zero(M[i][j])]
        if fresh:
            p = fresh[0]
            lead_col[p] = j
            inv = field.one / M[p][j]
            for i in range(p + 1, k):
                c = M[i][j]
                if _is_zero(c):
                    continue
                f = c * inv
                M[i] = [a - f * b for a, b in zip(M[i], M[p])]
                u[i] = [a - f * b for a, b in zip(u[i], u[p])]
        else:
            used = [i for i in lead_col if not _is_zero(M[i][j])]
            if not used:
                raise ZeroColumn(f"column {j + 1} is zero")
            p = max(used, key=lambda i: lead_col[i])
        w.append(p + 1)
    t = [M[w[j] - 1][j] for j in range(n)]
    B = [[M[i][j] / t[j] for j in range(n)] for i in range(k)]
    return Echelon(u, B, t, tuple(w), field)


# ---------------------------------------------------------------------------
# spanning line configurations over finite fields


def projective_points(field: Field, k: int) -> List[tuple]:
    """Normalized representatives (first nonzero coordinate 1) of lines in F^k."""
    els = field.elements()
    one, zero = field.one, field.zero
    out = []
    for lead in range(k):
        for tail in itertools.product(els, repeat=k - lead - 1):
            out.append((zero,) * lead + (one,) + tuple(tail))
    return out


def _insert(basis: List[list], v: Sequence, field: Field) -> Optional[List[list]]:
    """Add v to an echelon basis; None if v is already in the span."""
    v = list(v)
    for piv, row in basis:
        c = v[piv]
        if not _is_zero(c):
            v = [a - c * b for a, b in zip(v, row)]
    piv = next((i for i, x in enumerate(v) if not _is_zero(x)), None)
    if piv is None:
        return None
    inv = field.one / v[piv]
    v = [x * inv for x in v]
    return basis + [(piv, v)]


def _count_from(lines, field, n, k, basis, depth) -> int:
    if depth == n:
        return 1 if len(basis) == k else 0
    remaining = n - depth
    if k - len(basis) > remaining:
        return 0
    total = 0
    # lines inside the current span do not grow it; count them by cardinality
    inside = 0
    for ell in lines:
        new = _insert(basis, ell, field)
        if new is None:
            inside += 1
        else:
            total += _count_from(lines, field, n, k, new, depth + 1)
    if inside:
        total += inside * _count_from(lines, field, n, k, basis, depth + 1)
    return total


def count_spanning_fq(n: int, k: int, q: int, budget: int = 10**8, jobs: int = 1) -> int:
    """Number of n-tuples of lines in F_q^k spanning the whole space (exhaustive)."""
    if not (1 <= k <= n):
        raise BadParams("need 1 <= k <= n")
    if q > 9:
        raise BadParams("field order must be at most 9")
    field = Field(q)
    lines = projective_points(field, k)
    if len(lines) ** n > budget:
        raise BudgetExceeded(f"{len(lines)}^{n} configurations exceed budget {budget}")
    if jobs > 1 and len(lines) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = ex.map(_count_first_line, [(n, k, q, i) for i in range(len(lines))])
            return sum(parts)
    return _count_from(lines, field, n, k, [], 0)


def _count_first_line(args) -> int:
    n, k, q, idx = args
    field = Field(q)
    lines = projective_points(field, k)
    basis = _insert([], lines[idx], field)
    return _count_from(lines, field, n, k, basis, 1)


def spanning_formula(n: int, k: int, q: int) -> int:
    """q^C(k,2) [k]!_q Stir_q(n,k) evaluated at the integer q."""
    poly = q_factorial(k) * q_stirling(n, k)
    val = poly.subs(at_q=q).constant_value()
    return int(q ** (k * (k - 1) // 2) * val)


# ---------------------------------------------------------------------------
# convexification and Schubert polynomials


def is_convex(v: Sequence[int]) -> bool:
    seen = set()
    prev = None
    for a in v:
        if a != prev:
            if a in seen:
                return False
            seen.add(a)
        prev = a
    return True


def conv(w: Sequence[int]) -> Tuple[int, ...]:
    """Group equal letters together, keeping the order of first appearances."""
    w = _check_word(w)
    counts: Dict[int, int] = {}
    for a in w:
        counts[a] = counts.get(a, 0) + 1
    out = []
    for j in initial_positions(w):
        out.extend([w[j]] * counts[w[j]])
    return tuple(out)


def sort_perm(w: Sequence[int]) -> Tuple[int, ...]:
    """Bruhat-minimal u with w(u(i)) = conv(w)(i): copies keep their relative order."""
    w = _check_word(w)
    positions: Dict[int, List[int]] = {}
    for j, a in enumerate(w, start=1):
        positions.setdefault(a, []).append(j)
    used = {a: 0 for a in positions}
    out = []
    for a in conv(w):
        out.append(positions[a][used[a]])
        used[a] += 1
    return tuple(out)


def standardize(v: Sequence[int]) -> Tuple[int, ...]:
    """Replace non-initial letters of a convex word by k+1, k+2, ... from left to right."""
    v = _check_word(v)
    if not is_convex(v):
        raise NotConvex(f"{list(v)} is not convex")
    k = len(set(v))
    if set(v) != set(range(1, k + 1)):
        raise BadParams("standardization needs a Fubini word")
    nxt = k + 1
    seen = set()
    out = []
    for a in v:
        if a in seen:
            out.append(nxt)
            nxt += 1
        else:
            seen.add(a)
            out.append(a)
    return tuple(out)


def perm_inverse(u: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * len(u)
    for i, a in enumerate(u, start=1):
        out[a - 1] = i
    return tuple(out)


@lru_cache(maxsize=None)
def _schubert(u: Tuple[int, ...]) -> XPoly:
    n = len(u)
    for i in range(n - 1):
        if u[i] < u[i + 1]:
            v = list(u)
            v[i], v[i + 1] = v[i + 1], v[i]
            return divided_difference(_schubert(tuple(v)), i + 1)
    return XPoly.monomial(tuple(range(n - 1, -1, -1)))


def schubert_classical(u: Sequence[int]) -> XPoly:
    u = tuple(int(x) for x in u)
    if sorted(u) != list(range(1, len(u) + 1)):
        raise BadParams(f"{list(u)} is not a permutation")
    return _schubert(u)


def schubert_fubini(w: Sequence[int]) -> XPoly:
    """Schubert polynomial of a Fubini word (see the module notes on the substitution)."""
    w = _check_word(w)
    if not is_fubini(w):
        raise BadParams(f"{list(w)} is not a Fubini word")
    base = schubert_classical(standardize(conv(w)))
    return base.permute(substitution(w))


def substitution(w: Sequence[int]) -> Tuple[int, ...]:
    """The permutation sigma with S_w(x_1..x_n) = S_st(conv w)(x_sigma(1)..x_sigma(n)).

    sigma is the sorting permutation itself: the variable x_i of the convex
    model is sent to x_{sort(w)(i)}, the position its letter came from.
    """
    return sort_perm(w)


# ---------------------------------------------------------------------------
# expansion in the Schubert basis of R_{n,k}


@lru_cache(maxsize=None)
def _schubert_system(n: int, k: int):
    G = buchberger(build_ideal("nk", n=n, k=k))
    std = standard_monomials(G)
    index = {m: i for i, m in enumerate(std)}
    words = sorted(fubini_words(n, k))
    rows = []
    for w in words:
        nf = normal_form(schubert_fubini(w), G)
        row = [Fraction(0)] * len(std)
        for m, c in nf.terms().items():
            row[index[m]] = c
        rows.append(row)
    return G, std, index, words, rows


def schubert_basis_rank(n: int, k: int) -> Tuple[int, int]:
    """(rank of the normal-form matrix of all S_w, dim R_{n,k})."""
    _G, std, _i, _w, rows = _schubert_system(n, k)
    return rank(rows), len(std)


def expand_in_schubert(f: XPoly, n: int, k: int) -> Dict[Tuple[int, ...], Fraction]:
    G, std, index, words, rows = _schubert_system(n, k)
    nf = normal_form(f, G)
    rhs = [Fraction(0)] * len(std)
    for m, c in nf.terms().items():
        rhs[index[m]] = c
    try:
        sol = solve_unique(transpose(rows), rhs, Fraction(0))
    except Exception as exc:
        raise SingularBasis(f"Schubert polynomials do not form a basis of R_{n},{k}") from exc
    return {w: c for w, c in zip(words, sol) if c}
