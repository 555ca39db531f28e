"""Hall-Littlewood and modified Macdonald polynomials with their eigenoperators.

Cell convention: the cell in row r and column c of a Young diagram (rows
counted from the longest part) carries the monomial q^(c-1) t^(r-1).  With
this filling the operator Delta_{e_n} acts on the Macdonald basis with
eigenvalue q^kappa(mu') t^kappa(mu), and it is taken as the definition of
nabla.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import cache
from .arith import ONE, ZERO, QTPoly, QTRat, as_qtrat
from .errors import DegreeMismatch, NotPartitionContent, SingularSystem
from .linalg import inverse, solve_unique, vec_mat
from .symfunc import (
    ONE_MINUS_Q,
    ONE_MINUS_T,
    MACDONALD_KERNEL,
    Partition,
    SymFunc,
    convert,
    dominates,
    partitions,
    plethystic_scale,
    product,
    ssyt,
)

# ---------------------------------------------------------------------------
# cocharge


def _check_content(w: Sequence[int]) -> None:
    if not w:
        return
    counts = [0] * (max(w) + 1)
    for x in w:
        if x < 1:
            raise NotPartitionContent(f"letter {x} is not positive")
        counts[x] += 1
    if any(counts[j] < counts[j + 1] for j in range(1, len(counts) - 1)):
        raise NotPartitionContent(f"content of {list(w)} is not a partition")


def _subword_positions(w: Sequence[int]) -> List[List[int]]:
    remaining = list(range(len(w)))
    out = []
    while remaining:
        letters = [w[i] for i in remaining]
        top = max(letters)
        # rightmost 1, then cyclically previous 2, 3, ...
        idx = max(j for j, x in enumerate(letters) if x == 1)
        chosen = [idx]
        for letter in range(2, top + 1):
            cands = [j for j, x in enumerate(letters) if x == letter]
            left = [j for j in cands if j < idx]
            idx = max(left) if left else max(cands)
            chosen.append(idx)
        chosen_set = set(chosen)
        out.append(sorted(remaining[j] for j in chosen_set))
        remaining = [remaining[j] for j in range(len(remaining)) if j not in chosen_set]
    return out


def standard_subwords(w: Sequence[int]) -> List[List[int]]:
    """Standard subword decomposition of a word with partition content."""
    w = list(w)
    _check_content(w)
    return [[w[i] for i in pos] for pos in _subword_positions(w)]


def permutation_cocharge(v: Sequence[int]) -> int:
    pos = {x: i for i, x in enumerate(v)}
    cc = total = 0
    for i in range(1, len(v)):
        if pos[i + 1] < pos[i]:
            cc += 1
        total += cc
    return total


def cocharge(w: Sequence[int]) -> int:
    """Cocharge of a word with partition content."""
    return sum(permutation_cocharge(v) for v in standard_subwords(w))


@dataclass(frozen=True)
class CochargeWord:
    word: Tuple[int, ...]
    subwords: Tuple[Tuple[int, ...], ...]
    value: int

    @classmethod
    def of(cls, w: Sequence[int]) -> "CochargeWord":
        subs = standard_subwords(w)
        return cls(tuple(w), tuple(map(tuple, subs)), sum(map(permutation_cocharge, subs)))


def reading_word(rows: Sequence[Sequence[int]]) -> List[int]:
    """Rows read left to right, from the bottom row up (English notation)."""
    out: List[int] = []
    for row in reversed(rows):
        out.extend(row)
    return out


def hall_littlewood(mu: Iterable[int]) -> SymFunc:
    """Schur expansion sum_lam Ktilde_{lam,mu}(q) s_lam via cocharge."""
    mu = Partition(mu)
    coeffs: Dict[Partition, QTPoly] = {}
    for lam in partitions(mu.n):
        if not dominates(lam, mu):
            continue
        poly = QTPoly(0)
        for T in ssyt(lam, mu):
            poly = poly + QTPoly.q(cocharge(reading_word(T)))
        if not poly.is_zero():
            coeffs[lam] = QTRat(poly)
    return SymFunc(mu.n, "s", coeffs)


def hall_littlewood_literal(mu: Iterable[int]) -> SymFunc:
    """Diagnostic: the sum of q^cocharge(read T) m_shape(T) taken literally.

    This differs from ``hall_littlewood`` (already at mu = (1,1)); it is kept
    only so the two readings can be compared.
    """
    mu = Partition(mu)
    coeffs: Dict[Partition, QTRat] = {}
    for lam in partitions(mu.n):
        for T in ssyt(lam, mu):
            coeffs[lam] = coeffs.get(lam, ZERO) + QTRat.q(cocharge(reading_word(T)))
    return SymFunc(mu.n, "m", coeffs)


# ---------------------------------------------------------------------------
# cell statistics


def kappa(lam: Iterable[int]) -> int:
    return sum(i * part for i, part in enumerate(Partition(lam)))


def cell_monomials(mu: Iterable[int], skip_corner: bool = False) -> List[Tuple[int, int]]:
    """Exponent pairs (q, t) of the cells of mu under the row/column filling."""
    out = [(c - 1, r - 1) for r, c in Partition(mu).cells()]
    return out[1:] if skip_corner else out


def b_mu(mu: Iterable[int]) -> QTPoly:
    return QTPoly({}) + sum((QTPoly.monomial(i, j) for i, j in cell_monomials(mu)), QTPoly(0))


def pi_eigenvalue(mu: Iterable[int]) -> QTPoly:
    out = QTPoly(1)
    for i, j in cell_monomials(mu, skip_corner=True):
        out = out * (1 - QTPoly.monomial(i, j))
    return out


FLabel = Union[SymFunc, Tuple[str, int]]


def _label_to_symfunc(F: FLabel) -> SymFunc:
    if isinstance(F, SymFunc):
        return F
    kind, d = F
    if kind not in ("e", "h", "s", "p", "m"):
        raise ValueError(f"unknown label {F}")
    if kind == "s" or kind == "m" or kind == "p":
        raise ValueError("use a SymFunc for s/m/p labels")
    return SymFunc.basis_element(kind, (d,) if d else ())


def evaluate_at_monomials(F: FLabel, monos: Sequence[Tuple[int, int]]) -> QTPoly:
    """F evaluated at the alphabet of the given q,t monomials."""
    if isinstance(F, tuple) and F[0] in ("e", "h"):
        kind, d = F
        # generating-function recursion over the alphabet
        vals = [QTPoly(1)] + [QTPoly(0)] * d
        for i, j in monos:
            x = QTPoly.monomial(i, j)
            if kind == "e":
                for k in range(d, 0, -1):
                    vals[k] = vals[k] + x * vals[k - 1]
            else:
                for k in range(1, d + 1):
                    vals[k] = vals[k] + x * vals[k - 1]
        return vals[d]
    f = convert(_label_to_symfunc(F), "p")
    power_cache: Dict[int, QTPoly] = {}

    def pk(k):
        if k not in power_cache:
            power_cache[k] = sum((QTPoly.monomial(k * i, k * j) for i, j in monos), QTPoly(0))
        return power_cache[k]

    total = QTRat(0)
    for lam, c in f.coeffs.items():
        term = QTPoly(1)
        for part in lam:
            term = term * pk(part)
        total = total + c * term
    return total.as_poly()


def delta_eigenvalue(F: FLabel, mu: Iterable[int], prime: bool = False) -> QTPoly:
    return evaluate_at_monomials(F, cell_monomials(mu, skip_corner=prime))


# ---------------------------------------------------------------------------
# Macdonald basis


@dataclass
class MacdonaldBasis:
    degree: int
    table: Dict[Partition, SymFunc]
    _inverse: Optional[List[list]] = None

    @property
    def order(self) -> List[Partition]:
        return partitions(self.degree)

    def __getitem__(self, mu) -> SymFunc:
        return self.table[Partition(mu)]

    def matrix(self) -> List[List[QTRat]]:
        parts = self.order
        return [[self.table[mu].coefficient(lam) for lam in parts] for mu in parts]

    def expand(self, f: SymFunc) -> Dict[Partition, QTRat]:
        """Coefficients of f in the Macdonald basis."""
        if f.degree != self.degree:
            raise DegreeMismatch(f"degree {f.degree} vs basis degree {self.degree}")
        if self._inverse is None:
            self._inverse = inverse(self.matrix(), ZERO, ONE)
        fs = convert(f, "s")
        vec = [fs.coefficient(lam) for lam in self.order]
        coeffs = vec_mat(vec, self._inverse, ZERO)
        return {mu: c for mu, c in zip(self.order, coeffs) if not c.is_zero()}

    def combine(self, coeffs: Dict[Partition, QTRat]) -> SymFunc:
        out: Dict[Partition, QTRat] = {}
        for mu, c in coeffs.items():
            for lam, a in self.table[mu].coeffs.items():
                out[lam] = out.get(lam, ZERO) + c * a
        return SymFunc(self.degree, "s", out)

    def to_json(self) -> list:
        return [
            {"partition": list(mu), "symfunc": self.table[mu].to_json()}
            for mu in sorted(self.table, reverse=True)
        ]


def _scaling_matrix(n: int, scale) -> Dict[Partition, SymFunc]:
    return {lam: plethystic_scale(SymFunc.basis_element("s", lam), scale) for lam in partitions(n)}


def _solve_macdonald(n: int, mu: Partition, Aq, At) -> SymFunc:
    parts = partitions(n)
    rows: List[List[QTRat]] = []
    rhs: List[QTRat] = []
    mu_c = mu.conjugate()
    for nu in parts:
        if not dominates(nu, mu):
            rows.append([Aq[lam].coefficient(nu) for lam in parts])
            rhs.append(ZERO)
        if not dominates(nu, mu_c):
            rows.append([At[lam].coefficient(nu) for lam in parts])
            rhs.append(ZERO)
    rows.append([ONE if lam == Partition((n,)) else ZERO for lam in parts])
    rhs.append(ONE)
    sol = solve_unique(rows, rhs, ZERO)
    return SymFunc(n, "s", dict(zip(parts, sol)))


def verify_macdonald(n: int, table: Dict[Partition, SymFunc]) -> None:
    """Check normalization and both triangularity conditions; raise on failure."""
    for mu, H in table.items():
        if H.coefficient((n,)) != 1:
            raise SingularSystem(f"normalization fails for {mu}")
        hq = convert(plethystic_scale(H, ONE_MINUS_Q), "s")
        ht = convert(plethystic_scale(H, ONE_MINUS_T), "s")
        for lam in hq.coeffs:
            if not dominates(lam, mu):
                raise SingularSystem(f"q-triangularity fails for {mu} at {lam}")
        for lam in ht.coeffs:
            if not dominates(lam, mu.conjugate()):
                raise SingularSystem(f"t-triangularity fails for {mu} at {lam}")


_MAC: Dict[int, MacdonaldBasis] = {}


def macdonald_basis(n: int, verify: bool = True) -> MacdonaldBasis:
    """Modified Macdonald polynomials of degree n from their defining axioms."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n in _MAC:
        return _MAC[n]
    if n == 0:
        basis = MacdonaldBasis(0, {Partition(()): SymFunc(0, "s", {(): 1})})
        _MAC[0] = basis
        return basis
    table = cache.load_macdonald(n)
    if table is None:
        Aq = _scaling_matrix(n, ONE_MINUS_Q)
        At = _scaling_matrix(n, ONE_MINUS_T)
        table = {mu: _solve_macdonald(n, mu, Aq, At) for mu in partitions(n)}
        if verify:
            verify_macdonald(n, table)
        cache.store_macdonald(n, table)
    basis = MacdonaldBasis(n, table)
    _MAC[n] = basis
    return basis


def clear_memory_cache() -> None:
    _MAC.clear()


# ---------------------------------------------------------------------------
# operators


def _eigen_apply(f: SymFunc, eig) -> SymFunc:
    basis = macdonald_basis(f.degree)
    coeffs = basis.expand(f)
    return basis.combine({mu: c * eig(mu) for mu, c in coeffs.items()})


def delta(F: FLabel, f: SymFunc) -> SymFunc:
    """Delta_F: H_mu -> F[B_mu] H_mu."""
    return _eigen_apply(f, lambda mu: delta_eigenvalue(F, mu))


def delta_prime(F: FLabel, f: SymFunc) -> SymFunc:
    """Delta'_F: H_mu -> F[B_mu - 1] H_mu."""
    return _eigen_apply(f, lambda mu: delta_eigenvalue(F, mu, prime=True))


def nabla(f: SymFunc) -> SymFunc:
    n = f.degree
    return delta(("e", n), f)


def nabla_eigenvalue(mu: Iterable[int]) -> QTPoly:
    mu = Partition(mu)
    return QTPoly.monomial(kappa(mu.conjugate()), kappa(mu))


def pi_op(f: SymFunc) -> SymFunc:
    return _eigen_apply(f, pi_eigenvalue)


def pi_inverse(f: SymFunc) -> SymFunc:
    return _eigen_apply(f, lambda mu: QTRat(1, pi_eigenvalue(mu)))


def theta_op(F: SymFunc, f: SymFunc) -> SymFunc:
    """Theta_F = Pi * (multiplication by F[X/((1-q)(1-t))]) * Pi^{-1}."""
    g = pi_inverse(f) if f.degree else convert(f, "s")
    kern = plethystic_scale(F, MACDONALD_KERNEL)
    return pi_op(product(kern, g))


def specialize_hl(H: SymFunc) -> SymFunc:
    """q -> 0 then t -> q, turning a Macdonald polynomial into Hall-Littlewood form."""
    def fn(c: QTRat) -> QTRat:
        from .arith import qt_eval

        z = qt_eval(c, at_q=0)
        return QTRat(z.num.swap_qt(), z.den.swap_qt())

    return H.map_coeffs(fn)
