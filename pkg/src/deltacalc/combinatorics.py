"""Ordered set partitions, coinversion codes, q-analogues, tableaux and
labeled Dyck paths.

Ordered set partitions are stored as tuples of sorted blocks.  Fubini
words are plain tuples of letters; the word ``w`` corresponds to the
ordered set partition whose j-th block is ``{i : w(i) = j}``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .arith import QTPoly, QTRat
from .errors import BadParams, NotSubstaircase, NotSymmetric
from .symfunc import Partition, SymFunc, is_symmetric_table, monomial_table_to_symfunc, partitions

# ---------------------------------------------------------------------------
# q-analogues


def q_int(k: int) -> QTPoly:
    """[k]_q = 1 + q + ... + q^(k-1)."""
    return QTPoly({(i, 0): 1 for i in range(k)})


@lru_cache(maxsize=None)
def q_factorial(k: int) -> QTPoly:
    out = QTPoly(1)
    for i in range(1, k + 1):
        out = out * q_int(i)
    return out


def q_binomial(n: int, k: int) -> QTPoly:
    if k < 0 or k > n:
        return QTPoly(0)
    return (q_factorial(n) / q_factorial(k) / q_factorial(n - k)).as_poly()


def q_multinomial(parts: Sequence[int]) -> QTPoly:
    out = QTRat(q_factorial(sum(parts)))
    for p in parts:
        out = out / q_factorial(p)
    return out.as_poly()


@lru_cache(maxsize=None)
def q_stirling(n: int, k: int) -> QTPoly:
    """q-Stirling number of the second kind."""
    if n < 0 or k < 0:
        raise BadParams("negative argument")
    if n == 0:
        return QTPoly(1 if k == 0 else 0)
    if k == 0:
        return QTPoly(0)
    return q_stirling(n - 1, k - 1) + q_int(k) * q_stirling(n - 1, k)


def stirling2(n: int, k: int) -> int:
    return int(q_stirling(n, k).subs(at_q=1).constant_value())


def mahonian_osp(n: int, k: int) -> QTPoly:
    """[k]!_q Stir_q(n,k)."""
    return q_factorial(k) * q_stirling(n, k)


def osp_top_degree(n: int, k: int) -> int:
    return math.comb(k, 2) + (n - k) * (k - 1)


# ---------------------------------------------------------------------------
# ordered set partitions and Fubini words

Block = Tuple[int, ...]


@dataclass(frozen=True)
class OSP:
    """Ordered set partition (B_1 | ... | B_k) of {1..n}."""

    blocks: Tuple[Block, ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        flat = [x for b in blocks for x in b]
        if any(not b for b in blocks):
            raise ValueError("ordered set partitions have nonempty blocks")
        if sorted(flat) != list(range(1, len(flat) + 1)):
            raise ValueError(f"blocks {blocks} do not partition [n]")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    def block_of(self) -> Dict[int, int]:
        return {x: j for j, b in enumerate(self.blocks) for x in b}

    def __str__(self):
        sep = " " if self.n >= 10 else ""
        return "(" + " | ".join(sep.join(map(str, b)) for b in self.blocks) + ")"

    @classmethod
    def parse(cls, text: str) -> "OSP":
        """Parse ``"6|14|237|5"`` (or with spaces inside blocks for n >= 10)."""
        text = text.strip().strip("()")
        blocks = []
        for part in text.split("|"):
            part = part.strip()
            if " " in part or "," in part:
                blocks.append(tuple(int(x) for x in part.replace(",", " ").split()))
            else:
                blocks.append(tuple(int(ch) for ch in part))
        return cls(tuple(blocks))


def is_fubini(w: Sequence[int]) -> bool:
    return bool(w) and set(w) == set(range(1, max(w) + 1))


def word_to_osp(w: Sequence[int]) -> OSP:
    if not is_fubini(w):
        raise ValueError(f"{list(w)} is not a Fubini word")
    k = max(w)
    return OSP(tuple(tuple(i + 1 for i, x in enumerate(w) if x == j) for j in range(1, k + 1)))


def osp_to_word(sigma: OSP) -> Tuple[int, ...]:
    where = sigma.block_of()
    return tuple(where[i] + 1 for i in range(1, sigma.n + 1))


def ordered_set_partitions(n: int, k: int) -> Iterator[OSP]:
    """All of OP_{n,k}, generated by placing 1..n into blocks."""
    for w in fubini_words(n, k):
        yield word_to_osp(w)


def fubini_words(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """Words of length n using every letter of {1..k}."""
    if k > n or (k == 0 and n > 0):
        return
    word = [0] * n
    counts = [0] * (k + 1)

    def rec(i, missing):
        if n - i < missing:
            return
        if i == n:
            yield tuple(word)
            return
        for letter in range(1, k + 1):
            word[i] = letter
            new = missing - (counts[letter] == 0)
            counts[letter] += 1
            yield from rec(i + 1, new)
            counts[letter] -= 1

    yield from rec(0, k)


def _inv_coinv(blocks: Sequence[Block]) -> Tuple[int, int]:
    mins = [b[0] for b in blocks]
    k = len(blocks)
    inv = coinv = 0
    for j in range(k):
        mj = mins[j]
        for i in range(k):
            if i == j:
                continue
            for a in blocks[i]:
                if a == mins[i]:
                    continue  # pairs of two minima handled below
                if i < j and a > mj:
                    inv += 1
                else:
                    coinv += 1
    for i in range(k):
        for j in range(i + 1, k):
            if mins[i] > mins[j]:
                inv += 1
            else:
                coinv += 1
    return inv, coinv


def inv(sigma: OSP) -> int:
    """Number of inversion pairs: b minimal in its block, a in an earlier block, a > b."""
    return _inv_coinv(sigma.blocks)[0]


def coinv(sigma: OSP) -> int:
    return _inv_coinv(sigma.blocks)[1]


def inversion_pairs(sigma: OSP) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
    """Explicit (inversion, coinversion) pair lists, each pair sorted."""
    where = sigma.block_of()
    mins = {b[0] for b in sigma.blocks}
    invs, coinvs = [], []
    for a, b in itertools.combinations(range(1, sigma.n + 1), 2):
        if where[a] == where[b] or not (a in mins or b in mins):
            continue
        is_inv = any(
            y in mins and where[x] < where[y] and x > y for x, y in ((a, b), (b, a))
        )
        (invs if is_inv else coinvs).append((a, b))
    return invs, coinvs


def code(sigma: OSP) -> Tuple[int, ...]:
    """Coinversion code (c_1, ..., c_n)."""
    mins = [b[0] for b in sigma.blocks]
    where = sigma.block_of()
    out = []
    for i in range(1, sigma.n + 1):
        ell = where[i]
        later = sum(1 for j in range(ell + 1, sigma.k) if mins[j] > i)
        out.append(later if i == mins[ell] else ell + later)
    return tuple(out)


def code_perm(w: Sequence[int]) -> Tuple[int, ...]:
    """Coinversion code of a permutation: c_i counts larger values right of i."""
    pos = {x: i for i, x in enumerate(w)}
    n = len(w)
    return tuple(sum(1 for x in w[pos[i] + 1 :] if x > i) for i in range(1, n + 1))


def _coinversion_labels(blocks: Sequence[Sequence[int]]) -> List[int]:
    # empty sets are labeled 0, 1, ... from the right, nonempty ones
    # continue from the left
    k = len(blocks)
    empties = [j for j in range(k) if not blocks[j]]
    nonempty = [j for j in range(k) if blocks[j]]
    labels = [0] * k
    for lab, j in enumerate(reversed(empties)):
        labels[j] = lab
    for lab, j in enumerate(nonempty):
        labels[j] = len(empties) + lab
    return labels


def iota_steps(c: Sequence[int], n: int, k: int) -> List[Tuple[int, int, Tuple[Tuple[Tuple[int, ...], int], ...]]]:
    """Rows (i, c_i, labeled blocks before inserting i) of the insertion algorithm."""
    c = tuple(c)
    if len(c) != n or not is_substaircase(c, n, k):
        raise NotSubstaircase(f"{c} is not ({n},{k})-substaircase")
    blocks: List[List[int]] = [[] for _ in range(k)]
    rows = []
    for i, ci in enumerate(c, start=1):
        labels = _coinversion_labels(blocks)
        rows.append((i, ci, tuple((tuple(b), lab) for b, lab in zip(blocks, labels))))
        if ci not in labels:
            raise NotSubstaircase(f"label {ci} unavailable while inserting {i}")
        blocks[labels.index(ci)].append(i)
    rows.append((n + 1, None, tuple((tuple(b), lab) for b, lab in zip(blocks, _coinversion_labels(blocks)))))
    return rows


def iota(c: Sequence[int], n: int, k: int) -> OSP:
    """Insertion algorithm inverting ``code`` on E_{n,k}."""
    final = iota_steps(c, n, k)[-1][2]
    return OSP(tuple(b for b, _ in final))


def iota_perm(c: Sequence[int]) -> Tuple[int, ...]:
    """Insertion algorithm inverting ``code_perm``."""
    n = len(c)
    sigma = iota(c, n, n)
    return tuple(b[0] for b in sigma.blocks)


def staircases(n: int, k: int) -> List[Tuple[int, ...]]:
    """(n,k)-staircases: shuffles of (k-1,...,0) with n-k copies of k-1."""
    if not 1 <= k <= n:
        raise BadParams(f"need 1 <= k <= n, got n={n}, k={k}")
    out = set()
    stair = tuple(range(k - 1, -1, -1))
    for pos in itertools.combinations(range(n), k):
        seq = [k - 1] * n
        for p, v in zip(pos, stair):
            seq[p] = v
        out.add(tuple(seq))
    return sorted(out, reverse=True)


def is_substaircase(c: Sequence[int], n: int, k: int) -> bool:
    """Componentwise <= some (n,k)-staircase.

    Read right to left, a staircase places the values 0, 1, ..., k-1 in
    order and fills the other slots with k-1, so it suffices to claim each
    position for the next staircase value as early as possible.
    """
    c = tuple(c)
    if len(c) != n or any(x < 0 or x > k - 1 for x in c):
        return False
    placed = 0
    for x in reversed(c):
        if placed < k and x <= placed:
            placed += 1
    return placed == k


def substaircase_sequences(n: int, k: int) -> List[Tuple[int, ...]]:
    """E_{n,k} as the union of the boxes under all (n,k)-staircases."""
    out = set()
    for st in staircases(n, k):
        out.update(itertools.product(*[range(x + 1) for x in st]))
    return sorted(out)


def skip_sequence(S: Iterable[int], n: int) -> Tuple[int, ...]:
    S = sorted(set(S))
    if not S:
        raise BadParams("skip sequences need a nonempty set")
    out = [0] * n
    for j, s in enumerate(S, start=1):
        out[s - 1] = s - j + 1
    return tuple(out)


@lru_cache(maxsize=None)
def _skip_family(n: int, size: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(skip_sequence(S, n) for S in itertools.combinations(range(1, n + 1), size))


def is_nonskip(c: Sequence[int], n: int, k: int) -> bool:
    c = tuple(c)
    if len(c) != n or any(x >= k or x < 0 for x in c):
        return False
    rev = c[::-1]
    for g in _skip_family(n, n - k + 1):
        if all(a <= b for a, b in zip(g, rev)):
            return False
    return True


# ---------------------------------------------------------------------------
# standard Young tableaux


def syt_enumerate(shape: Iterable[int]) -> List[Tuple[Tuple[int, ...], ...]]:
    """Standard Young tableaux of a shape, as tuples of rows."""
    shape = Partition(shape)
    n = shape.n
    out = []

    def rec(i, rows):
        if i > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for r in range(len(shape)):
            if len(rows[r]) < shape[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(i)
                rec(i + 1, rows)
                rows[r].pop()

    rec(1, [[] for _ in shape])
    return out


def syt_stats(T: Sequence[Sequence[int]]) -> Tuple[int, int]:
    """(des, maj): i is a descent when i+1 sits in a lower row."""
    row = {x: r for r, entries in enumerate(T) for x in entries}
    n = len(row)
    des = [i for i in range(1, n) if row[i + 1] > row[i]]
    return len(des), sum(des)


# ---------------------------------------------------------------------------
# labeled Dyck paths


def dyck_paths(n: int) -> List[str]:
    """Dyck paths from (0,0) to (n,n) staying weakly above the diagonal."""
    out = []

    def rec(path, north, east):
        if north == n and east == n:
            out.append(path)
            return
        if north < n:
            rec(path + "N", north + 1, east)
        if east < north:
            rec(path + "E", north, east + 1)

    rec("", 0, 0)
    return out


def path_area_vector(path: str) -> Tuple[int, ...]:
    """a_i: full boxes between the path and the diagonal in row i (from the bottom)."""
    out = []
    east = 0
    row = 0
    for step in path:
        if step == "N":
            out.append(row - east)
            row += 1
        else:
            east += 1
    return tuple(out)


def path_runs(path: str) -> List[int]:
    """Lengths of the maximal vertical runs, bottom to top."""
    return [len(r) for r in path.split("E") if r]


@dataclass(frozen=True)
class LabeledPath:
    path: str
    labels: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        n = self.path.count("N")
        if self.path.count("E") != n or len(self.labels) != n:
            raise ValueError("path and labels do not match")
        north = east = 0
        for s in self.path:
            north += s == "N"
            east += s == "E"
            if east > north:
                raise ValueError("path goes below the diagonal")
        if any(x < 1 for x in self.labels):
            raise ValueError("labels must be positive")
        i = 0
        for length in path_runs(self.path):
            run = self.labels[i : i + length]
            if any(run[j] >= run[j + 1] for j in range(length - 1)):
                raise ValueError("labels must increase up vertical runs")
            i += length

    @property
    def n(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class PathStats:
    area: int
    dinv: int
    a: Tuple[int, ...]
    d: Tuple[int, ...]
    val: FrozenSet[int]


def _d_vector(a: Sequence[int], labels: Sequence[int]) -> List[int]:
    n = len(a)
    d = [0] * n
    for i in range(n):
        ai, li = a[i], labels[i]
        cnt = 0
        for j in range(i + 1, n):
            if a[j] == ai and li < labels[j]:
                cnt += 1
            elif a[j] + 1 == ai and li > labels[j]:
                cnt += 1
        d[i] = cnt
    return d


def _valleys(a: Sequence[int], labels: Sequence[int]) -> List[int]:
    """0-based rows i >= 1 that are contractible valleys."""
    return [
        i
        for i in range(1, len(a))
        if a[i] < a[i - 1] or (a[i] == a[i - 1] and labels[i] > labels[i - 1])
    ]


def path_stats(P: LabeledPath) -> PathStats:
    a = path_area_vector(P.path)
    d = _d_vector(a, P.labels)
    val = frozenset(i + 1 for i in _valleys(a, P.labels))
    return PathStats(sum(a), sum(d), a, tuple(d), val)


def _run_labelings(runs: Sequence[int], alphabet: int, content: Optional[Tuple[int, ...]]):
    """Label tuples (bottom to top) increasing on each run.

    With ``content`` given (multiplicity of each letter 1..alphabet), only
    labelings of that content are produced.
    """
    if content is None:
        pools = [list(itertools.combinations(range(1, alphabet + 1), r)) for r in runs]
        for choice in itertools.product(*pools):
            yield tuple(x for part in choice for x in part)
        return
    counts = list(content)

    def rec(idx, acc):
        if idx == len(runs):
            if not any(counts):
                yield tuple(acc)
            return
        avail = [x for x in range(1, alphabet + 1) if counts[x - 1] > 0]
        for combo in itertools.combinations(avail, runs[idx]):
            for x in combo:
                counts[x - 1] -= 1
            yield from rec(idx + 1, acc + list(combo))
            for x in combo:
                counts[x - 1] += 1

    yield from rec(0, [])


def word_parking_functions(n: int, alphabet: Optional[int] = None) -> Iterator[LabeledPath]:
    alphabet = n if alphabet is None else alphabet
    for path in dyck_paths(n):
        for labels in _run_labelings(path_runs(path), alphabet, None):
            yield LabeledPath(path, labels)


def _esym_exponents(values: Sequence[int], r: int) -> Dict[int, int]:
    """Elementary symmetric e_r in the monomials y^v as {exponent: multiplicity}."""
    poly: List[Dict[int, int]] = [dict() for _ in range(r + 1)]
    poly[0][0] = 1
    for v in values:
        for k in range(r, 0, -1):
            for e, c in poly[k - 1].items():
                poly[k][e + v] = poly[k].get(e + v, 0) + c
    return poly[r]


MonomialTable = Dict[Tuple[int, ...], QTRat]


def _table_from_counts(counts: Dict[Tuple[int, ...], Dict[Tuple[int, int], int]]) -> MonomialTable:
    out: MonomialTable = {}
    for mono, terms in counts.items():
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            continue
        shift_q = -min(0, min(i for i, _ in terms))
        shift_t = -min(0, min(j for _, j in terms))
        num = QTPoly({(i + shift_q, j + shift_t): c for (i, j), c in terms.items()})
        den = QTPoly.monomial(shift_q, shift_t)
        out[mono] = QTRat(num, den)
    return out


def _contents(n: int, alphabet: int, dominant_only: bool):
    if dominant_only:
        for lam in partitions(n):
            if len(lam) <= alphabet:
                yield tuple(lam) + (0,) * (alphabet - len(lam))
    else:
        yield None


def _accumulate(n: int, k: int, kind: str, alphabet: int, dominant_only: bool):
    if not 1 <= k <= n:
        raise BadParams(f"need 1 <= k <= n, got n={n}, k={k}")
    r = n - k
    counts: Dict[Tuple[int, ...], Dict[Tuple[int, int], int]] = {}
    for path in dyck_paths(n):
        a = path_area_vector(path)
        area = sum(a)
        runs = path_runs(path)
        if kind == "rise":
            rises = [a[i] for i in range(1, n) if a[i] > a[i - 1]]
            rise_poly = _esym_exponents(rises, r)  # exponent: sum of chosen a_i
            if not rise_poly:
                continue
        for content in _contents(n, alphabet, dominant_only):
            for labels in _run_labelings(runs, alphabet, content):
                d = _d_vector(a, labels)
                dinv = sum(d)
                mono = [0] * alphabet
                for x in labels:
                    mono[x - 1] += 1
                key = tuple(mono)
                bucket = counts.setdefault(key, {})
                if kind == "shuffle":
                    e = (area, dinv)
                    bucket[e] = bucket.get(e, 0) + 1
                elif kind == "rise":
                    for s, c in rise_poly.items():
                        e = (dinv, area - s)
                        bucket[e] = bucket.get(e, 0) + c
                else:
                    vals = [d[i] + 1 for i in _valleys(a, labels)]
                    for s, c in _esym_exponents(vals, r).items():
                        e = (dinv - s, area)
                        bucket[e] = bucket.get(e, 0) + c
    return _table_from_counts(counts)


def shuffle_table(n: int, alphabet: Optional[int] = None, dominant_only: bool = False) -> MonomialTable:
    """Monomial table of sum_P q^area t^dinv x^P."""
    return _accumulate(n, n, "shuffle", alphabet or n, dominant_only)


def rise_table(n: int, k: int, alphabet: Optional[int] = None, dominant_only: bool = False) -> MonomialTable:
    """Monomial table of the z^(n-k) coefficient of the rise generating function."""
    return _accumulate(n, k, "rise", alphabet or n, dominant_only)


def val_table(n: int, k: int, alphabet: Optional[int] = None, dominant_only: bool = False) -> MonomialTable:
    """Monomial table of the z^(n-k) coefficient of the valley generating function."""
    return _accumulate(n, k, "val", alphabet or n, dominant_only)


def _table_to_symfunc(n: int, table: MonomialTable, check: bool) -> SymFunc:
    if check and not is_symmetric_table(table):
        raise NotSymmetric("monomial table is not symmetric")
    return monomial_table_to_symfunc(n, table)


def shuffle_rhs(n: int, check_symmetric: bool = True) -> SymFunc:
    return _table_to_symfunc(n, shuffle_table(n, dominant_only=not check_symmetric), check_symmetric)


def rise_rhs(n: int, k: int, check_symmetric: bool = True) -> SymFunc:
    return _table_to_symfunc(n, rise_table(n, k, dominant_only=not check_symmetric), check_symmetric)


def val_rhs(n: int, k: int, as_symfunc: bool = False):
    """Raw monomial table; with ``as_symfunc`` also the Schur expansion.

    Conversion raises ``NotSymmetric`` if the table is not symmetric.
    """
    table = val_table(n, k)
    if not as_symfunc:
        return table
    return table, _table_to_symfunc(n, table, True)


def table_coefficient(table: MonomialTable, mono: Sequence[int]) -> QTRat:
    return table.get(tuple(mono), QTRat(0))


def specialize_table(table: MonomialTable, at_q=None, at_t=None, swap: bool = False) -> MonomialTable:
    """Substitute into every coefficient; ``swap`` renames t -> q afterwards."""
    from .arith import qt_eval

    out = {}
    for mono, c in table.items():
        v = qt_eval(c, at_q, at_t)
        if swap:
            v = QTRat(v.num.swap_qt(), v.den.swap_qt())
        if not v.is_zero():
            out[mono] = v
    return out
