"""Symmetric and quasisymmetric functions.

SymFunc is a basis-tagged sparse map from partitions (int tuples) to
coefficients.  Coefficients may be int, Fraction, LaurentPolyQ, PolyQT or
RatFuncQT; a value mixes sizes freely (inhomogeneous) but not bases.
Conversions route through the Schur basis using per-degree Kostka matrices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

from .config import check_degree
from .errors import NotSymmetricError, UnsupportedConversionError, SizeMismatchError
from .partitions import (
    conjugate,
    partition_order_key,
    partitions_of,
    sort_to_partition,
)
from .rings import LaurentPolyQ, as_qt_coeff

BASES = ("m", "h", "e", "p", "s", "Htilde")


class SymFunc:
    """Basis-tagged symmetric function with exact coefficients."""

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean = {}
        if terms:
            for mu, c in terms.items():
                if c == 0:
                    continue
                clean[tuple(mu)] = c
        self._terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, basis="s"):
        return cls(basis)

    @classmethod
    def single(cls, basis, mu, coeff=1):
        return cls(basis, {tuple(mu): coeff})

    @classmethod
    def schur(cls, mu, coeff=1):
        return cls.single("s", mu, coeff)

    # -- queries -------------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def coeff(self, mu):
        return self._terms.get(tuple(mu), 0)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: partition_order_key(kv[0]))

    def degrees(self):
        return sorted({sum(mu) for mu in self._terms})

    def degree(self):
        """Degree of a homogeneous value (error on mixed degrees)."""
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous value, degrees {degs}")
        return degs[0] if degs else 0

    def graded_piece(self, d):
        return SymFunc(self.basis,
                       {mu: c for mu, c in self._terms.items() if sum(mu) == d})

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    def __hash__(self):
        return hash((self.basis, frozenset(self._terms.items())))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch {self.basis!r} vs {other.basis!r}")
        out = dict(self._terms)
        for mu, c in other._terms.items():
            s = out.get(mu, 0) + c if mu in out else c
            if s == 0:
                out.pop(mu, None)
            else:
                out[mu] = s
        return SymFunc(self.basis, out)

    def __neg__(self):
        return SymFunc(self.basis, {mu: -c for mu, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if c == 0:
            return SymFunc.zero(self.basis)
        return SymFunc(self.basis, {mu: _mul_coeff(x, c) for mu, x in self._terms.items()})

    def map_coeffs(self, fn):
        return SymFunc(self.basis, {mu: fn(c) for mu, c in self._terms.items()})

    def as_laurent(self):
        """Lift int/Fraction coefficients into LaurentPolyQ."""
        return self.map_coeffs(_to_laurent)

    def as_qt(self):
        """Lift every coefficient into RatFuncQT (for cross-type comparison)."""
        return self.map_coeffs(as_qt_coeff)

    # -- io --------------------------------------------------------------------

    def to_json(self):
        out = []
        for mu, c in self.sorted_terms():
            out.append({"partition": list(mu), "coeff": _coeff_json(c)})
        return {"basis": self.basis, "terms": out}

    def __repr__(self):
        if not self._terms:
            return f"SymFunc({self.basis!r}, 0)"
        bits = [f"({c!r})*{self.basis}{list(mu)}" for mu, c in self.sorted_terms()]
        return " + ".join(bits)


def _mul_coeff(x, c):
    out = x * c
    return out


def _to_laurent(c):
    if isinstance(c, (int, Fraction)):
        return LaurentPolyQ.from_scalar(c)
    if isinstance(c, LaurentPolyQ):
        return c
    raise TypeError(f"cannot lift {type(c).__name__} to LaurentPolyQ")


def _coeff_json(c):
    if isinstance(c, int):
        c = LaurentPolyQ.from_scalar(c)
    if isinstance(c, Fraction):
        c = LaurentPolyQ.from_scalar(c)
    if isinstance(c, LaurentPolyQ):
        return c.to_json()
    return as_qt_coeff(c).to_json()


# ---------------------------------------------------------------------------
# Quasisymmetric functions in Gessel's fundamental basis
# ---------------------------------------------------------------------------

class QSymFunc:
    """Sparse map from (degree, descent subset) to coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (n, subset), c in terms.items():
                if c == 0:
                    continue
                subset = frozenset(subset)
                if any(i < 1 or i > n - 1 for i in subset):
                    raise ValueError(f"descents {set(subset)} out of range for degree {n}")
                clean[(n, subset)] = c
        self._terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def fundamental(cls, n, subset, coeff=1):
        return cls({(n, frozenset(subset)): coeff})

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, QSymFunc):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other):
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, 0) + c if key in out else c
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
        return QSymFunc(out)

    def __neg__(self):
        return QSymFunc({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if c == 0:
            return QSymFunc.zero()
        return QSymFunc({k: x * c for k, x in self._terms.items()})

    def degrees(self):
        return sorted({n for n, _ in self._terms})

    def __repr__(self):
        bits = [f"({c!r})*F[{n};{sorted(s)}]" for (n, s), c in sorted(
            self._terms.items(), key=lambda kv: (kv[0][0], sorted(kv[0][1])))]
        return " + ".join(bits) if bits else "QSymFunc(0)"


# ---------------------------------------------------------------------------
# Straightening
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SignedPartition:
    sign: int                      # +1, -1 or 0
    partition: tuple | None = None # absent iff sign == 0

    def __post_init__(self):
        if (self.sign == 0) != (self.partition is None):
            raise ValueError("sign 0 iff partition absent")


def straighten(gamma) -> SignedPartition:
    """Resolve a Schur function with arbitrary integer index via the delta rule.

    With delta = (l-1, ..., 1, 0), sort gamma+delta; a repeat or negative
    entry kills the term, otherwise the permutation's sign is picked up.
    """
    gamma = tuple(gamma)
    ell = len(gamma)
    v = [g + (ell - 1 - i) for i, g in enumerate(gamma)]
    if any(x < 0 for x in v) or len(set(v)) != ell:
        return SignedPartition(0)
    sign = 1
    # parity via insertion count (lists are tiny)
    w = list(v)
    for i in range(ell):
        for j in range(ell - 1 - i):
            if w[j] < w[j + 1]:
                w[j], w[j + 1] = w[j + 1], w[j]
                sign = -sign
    lam = [w[i] - (ell - 1 - i) for i in range(ell)]
    while lam and lam[-1] == 0:
        lam.pop()
    return SignedPartition(sign, tuple(lam))


# ---------------------------------------------------------------------------
# Strips, Pieri rules, skewing operators
# ---------------------------------------------------------------------------

def horizontal_strips_below(lam):
    """Yield (mu, k) over mu inside lam with lam/mu a horizontal strip of size k."""
    lam = tuple(lam)
    ell = len(lam)

    def rec(i, acc, removed):
        if i == ell:
            mu = tuple(acc)
            while mu and mu[-1] == 0:
                mu = mu[:-1]
            yield mu, removed
            return
        lo = lam[i + 1] if i + 1 < ell else 0
        for val in range(lo, lam[i] + 1):
            acc.append(val)
            yield from rec(i + 1, acc, removed + lam[i] - val)
            acc.pop()

    yield from rec(0, [], 0)


def horizontal_strips_above(lam, k):
    """All nu containing lam with nu/lam a horizontal strip of size k."""
    lam = tuple(lam)
    out = []
    ell = len(lam)

    def rec(i, acc, left):
        if i == ell:
            # optional new bottom row of size <= lam[-1] (or anything if empty)
            cap = lam[ell - 1] if ell else left
            if left == 0:
                out.append(tuple(acc))
            elif left <= cap:
                out.append(tuple(acc) + (left,))
            return
        hi = (lam[i - 1] if i else lam[0] + left) - lam[i]
        for add in range(min(left, hi) + 1):
            acc.append(lam[i] + add)
            rec(i + 1, acc, left - add)
            acc.pop()

    rec(0, [], k)
    return out


def vertical_strips_below(lam):
    """Yield (mu, k) with lam/mu a vertical strip of size k."""
    for mu_c, k in horizontal_strips_below(conjugate(lam)):
        yield conjugate(mu_c), k


def pieri_h(f: SymFunc, m: int) -> SymFunc:
    """Multiply by h_m in the Schur basis (horizontal-strip Pieri rule)."""
    _need_basis(f, "s")
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return f
    out = {}
    for lam, c in f.terms.items():
        for nu in horizontal_strips_above(lam, m):
            _accum(out, nu, c)
    return SymFunc("s", out)


def pieri_e(f: SymFunc, m: int) -> SymFunc:
    """Multiply by e_m in the Schur basis (vertical-strip Pieri rule)."""
    _need_basis(f, "s")
    if m == 0:
        return f
    out = {}
    for lam, c in f.terms.items():
        for nu_c in horizontal_strips_above(conjugate(lam), m):
            _accum(out, conjugate(nu_c), c)
    return SymFunc("s", out)


def perp_h(f: SymFunc, k: int) -> SymFunc:
    """Skewing operator h_k-perp: remove horizontal k-strips."""
    _need_basis(f, "s")
    out = {}
    for lam, c in f.terms.items():
        for mu, size in horizontal_strips_below(lam):
            if size == k:
                _accum(out, mu, c)
    return SymFunc("s", out)


def perp_e(f: SymFunc, k: int) -> SymFunc:
    """Skewing operator e_k-perp: remove vertical k-strips."""
    _need_basis(f, "s")
    out = {}
    for lam, c in f.terms.items():
        for mu, size in vertical_strips_below(lam):
            if size == k:
                _accum(out, mu, c)
    return SymFunc("s", out)


def _accum(store, key, c):
    s = store.get(key, 0) + c if key in store else c
    if s == 0:
        store.pop(key, None)
    else:
        store[key] = s


def _need_basis(f, basis):
    if f.basis != basis:
        raise ValueError(f"expected {basis}-basis input, got {f.basis!r}")


# ---------------------------------------------------------------------------
# Kostka numbers and basis conversion
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _kostka(lam, mu):
    if not mu:
        return 1 if not lam else 0
    total = 0
    for nu, k in horizontal_strips_below(lam):
        if k == mu[-1]:
            total += _kostka(nu, mu[:-1])
    return total


def kostka(lam, mu) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatchError(f"|{lam}| != |{mu}|")
    return _kostka(lam, mu)


@lru_cache(maxsize=None)
def _kostka_inverse(n):
    """Rows of K^(-1): m_mu = sum_lam Kinv[mu][lam] s_lam, integer entries."""
    parts = partitions_of(n)           # descending lex, refines dominance
    idx = {p: i for i, p in enumerate(parts)}
    size = len(parts)
    K = [[0] * size for _ in range(size)]
    for i, lam in enumerate(parts):
        for j, mu in enumerate(parts):
            if j >= i:                 # upper triangular support
                K[i][j] = _kostka(lam, mu)
    inv = [[0] * size for _ in range(size)]
    for i in range(size):
        inv[i][i] = 1
        for j in range(i + 1, size):
            acc = 0
            for k in range(i, j):
                acc += inv[i][k] * K[k][j]
            inv[i][j] = -acc
    # s = K m  =>  m = K^(-1) s, so row i of inv expands m_{parts[i]}.
    rows = {}
    for i, mu in enumerate(parts):
        rows[mu] = {parts[j]: inv[i][j] for j in range(size) if inv[i][j]}
    return rows, idx


@lru_cache(maxsize=None)
def _kostka_rows(n):
    """s_lam = sum_mu K[lam][mu] m_mu per degree."""
    parts = partitions_of(n)
    return {lam: {mu: _kostka(lam, mu) for mu in parts if _kostka(lam, mu)}
            for lam in parts}


def _m_to_s_row(mu):
    rows, _ = _kostka_inverse(sum(mu))
    # m_mu = sum_lam c_lam s_lam; invert direction: rows[mu] maps lam -> coeff?
    return rows[mu]


def _s_to_h_row(lam):
    """s_lam = sum_mu c_mu h_mu with integer c (inverse Kostka transpose)."""
    rows, _ = _kostka_inverse(sum(lam))
    out = {}
    for mu, row in rows.items():
        c = row.get(lam, 0)
        if c:
            out[mu] = c
    return out


def convert(f: SymFunc, target: str, guard: int | None = None) -> SymFunc:
    """Re-express f in another classical basis.

    Supported: any of m/h/e/s to any of m/h/e/s, and p -> {m,h,e,s} for
    single-row p_n terms only.  Conversions to the p basis are not supported.
    """
    if target not in ("m", "h", "e", "s"):
        raise UnsupportedConversionError(f"conversion to {target!r} unsupported")
    if f.basis == "Htilde":
        raise UnsupportedConversionError("expand Htilde via MacdonaldTable instead")
    for d in f.degrees():
        check_degree(d, guard)
    if f.basis == target:
        return f
    via_s = _to_schur(f)
    if target == "s":
        return via_s
    return _from_schur(via_s, target)


def _to_schur(f: SymFunc) -> SymFunc:
    out = {}
    for mu, c in f.terms.items():
        if f.basis == "s":
            _accum(out, mu, c)
        elif f.basis == "m":
            for lam, k in _m_to_s_row(mu).items():
                _accum(out, lam, _mul_coeff(c, k))
        elif f.basis == "h":
            chain = SymFunc.schur(())
            for part in mu:
                chain = pieri_h(chain, part)
            for lam, k in chain.terms.items():
                _accum(out, lam, _mul_coeff(c, k))
        elif f.basis == "e":
            chain = SymFunc.schur(())
            for part in mu:
                chain = pieri_e(chain, part)
            for lam, k in chain.terms.items():
                _accum(out, lam, _mul_coeff(c, k))
        elif f.basis == "p":
            if len(mu) == 0:
                _accum(out, (), c)
            elif len(mu) == 1:
                n = mu[0]
                for r in range(n, 0, -1):
                    hook = (r,) + (1,) * (n - r)
                    _accum(out, hook, _mul_coeff(c, (-1) ** (n - r)))
            else:
                raise UnsupportedConversionError(
                    f"general p_lambda unsupported (got p{list(mu)})")
        else:
            raise UnsupportedConversionError(f.basis)
    return SymFunc("s", out)


def _from_schur(f: SymFunc, target: str) -> SymFunc:
    out = {}
    for lam, c in f.terms.items():
        if target == "m":
            for mu, k in _kostka_rows(sum(lam))[lam].items():
                _accum(out, mu, _mul_coeff(c, k))
        elif target == "h":
            for mu, k in _s_to_h_row(lam).items():
                _accum(out, mu, _mul_coeff(c, k))
        elif target == "e":
            # omega involution: s_lam in e equals s_{lam'} in h
            for mu, k in _s_to_h_row(conjugate(lam)).items():
                _accum(out, mu, _mul_coeff(c, k))
        else:
            raise UnsupportedConversionError(target)
    return SymFunc(target, out)


def hook_m_to_s(a: int, k: int) -> SymFunc:
    """Schur expansion of the hook monomial m_(a,1^k) by the closed formula.

    Cases: coefficient (-1)^(a-1) (k+1) on s_{1^(a+k)}; (-1)^(a-l) on
    s_(l,2^j,1^i) for l >= 2, j+l <= a and j <= k; zero otherwise.  (The
    j <= k restriction is forced by matching Kostka inversion; without it
    the k = 0 row m_(n) = p_n would pick up spurious non-hook terms.)
    For a = 1 the identity m_{1^(k+1)} = s_{1^(k+1)} applies directly.
    """
    if a < 1 or k < 0:
        raise ValueError("need a >= 1, k >= 0")
    n = a + k
    if a == 1:
        return SymFunc.schur((1,) * n)
    terms = {(1,) * n: (-1) ** (a - 1) * (k + 1)}
    for ell in range(2, a + 1):
        for j in range(0, min(k, a - ell) + 1):
            i = n - ell - 2 * j
            if i < 0:
                continue
            mu = (ell,) + (2,) * j + (1,) * i
            terms[mu] = (-1) ** (a - ell)
    return SymFunc("s", terms)


# ---------------------------------------------------------------------------
# Quasisymmetric to symmetric
# ---------------------------------------------------------------------------

def _subset_to_composition(subset, n):
    pts = sorted(subset)
    prev, parts = 0, []
    for p in pts:
        parts.append(p - prev)
        prev = p
    parts.append(n - prev)
    return tuple(parts)


def fqsym_to_sym(g: QSymFunc) -> SymFunc:
    """Expand a fundamental-basis value into the monomial symmetric basis.

    Each F_S contributes to M_beta for every composition beta of n whose
    partial-sum set contains S.  The result is symmetric iff the M
    coefficients only depend on the multiset of parts; otherwise raises
    NotSymmetricError with the offending pair.
    """
    if g.is_zero():
        return SymFunc.zero("m")
    degs = g.degrees()
    if len(degs) != 1:
        raise NotSymmetricError(f"mixed degrees {degs}")
    n = degs[0]
    full = frozenset(range(1, n))
    mcoeffs = {}
    for (_, subset), c in g.terms.items():
        rest = sorted(full - subset)
        for mask in range(1 << len(rest)):
            extra = {rest[i] for i in range(len(rest)) if mask >> i & 1}
            beta = _subset_to_composition(subset | extra, n)
            _accum(mcoeffs, beta, c)
    by_partition = {}
    for beta, c in mcoeffs.items():
        by_partition.setdefault(sort_to_partition(beta), {})[beta] = c
    out = {}
    for mu in partitions_of(n):
        group = by_partition.get(mu, {})
        ref = group.get(mu, 0)
        # every rearrangement of mu must carry the same coefficient (0 counts)
        counts = Counter(mu)
        n_rearr = factorial(len(mu))
        for v in counts.values():
            n_rearr //= factorial(v)
        if len(group) < n_rearr and ref != 0:
            missing = next(b for b in _rearrangements(mu) if b not in group)
            raise NotSymmetricError(
                f"M{missing} coefficient 0 but M{mu} coefficient {ref!r}")
        for beta, c in group.items():
            if c != ref:
                raise NotSymmetricError(
                    f"M{beta} coefficient {c!r} differs from M{mu} coefficient {ref!r}")
        if ref != 0:
            out[mu] = ref
    return SymFunc("m", out)


def _rearrangements(mu):
    return sorted({p for p in permutations(mu)})
