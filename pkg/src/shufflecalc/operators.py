"""Compositional-shuffle creation operators and the hook expansion identity.

C_m acts on the Schur basis through the horizontal-strip formula
(-q)^(m-1) C_m s_lam = sum_mu s_(m+|lam/mu|, mu) / q^|lam/mu| over horizontal
strips lam/mu, with straightening of the prepended index.  S_a prepends a row
index and straightens.  All coefficients live in Q[q, 1/q].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .config import check_degree
from .errors import SizeMismatchError
from .partitions import compositions_of
from .rings import LaurentPolyQ, qint
from .symfunc import (
    SymFunc,
    _accum,
    _need_basis,
    convert,
    horizontal_strips_below,
    straighten,
)


def c_apply(m: int, f: SymFunc) -> SymFunc:
    """Apply the creation operator C_m to a Schur-basis value."""
    _need_basis(f, "s")
    if m < 1:
        raise ValueError("C_m needs m >= 1")
    base = LaurentPolyQ.q_power(-(m - 1), (-1) ** (m - 1))
    out = {}
    for lam, c in f.terms.items():
        for mu, j in horizontal_strips_below(lam):
            sp = straighten((m + j,) + mu)
            if sp.sign == 0:
                continue
            w = base.shift(-j) * c
            if sp.sign < 0:
                w = -w
            _accum(out, sp.partition, w)
    return SymFunc("s", out)


def s_apply(a: int, f: SymFunc) -> SymFunc:
    """Apply the row-prepending operator S_a (with straightening)."""
    _need_basis(f, "s")
    out = {}
    for lam, c in f.terms.items():
        sp = straighten((a,) + lam)
        if sp.sign == 0:
            continue
        _accum(out, sp.partition, -c if sp.sign < 0 else c)
    return SymFunc("s", out)


@lru_cache(maxsize=None)
def c_alpha_one(alpha: tuple) -> SymFunc:
    """C_alpha 1 = C_(a1) ... C_(ak) applied to 1, rightmost part first."""
    alpha = tuple(alpha)
    if any(p < 1 for p in alpha):
        raise ValueError(f"composition parts must be >= 1: {alpha}")
    f = SymFunc.schur((), LaurentPolyQ.one())
    for part in reversed(alpha):
        f = c_apply(part, f)
    return f


# ---------------------------------------------------------------------------
# The hook-monomial expansion identity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TheoremCoefficient:
    n: int
    k: int
    alpha: tuple
    poly: LaurentPolyQ


def theorem_coeff(n: int, k: int, alpha) -> TheoremCoefficient:
    """Coefficient of C_alpha 1 in the hook expansion of (-1)^(n-1) m_(n,1^k).

    A position j of alpha qualifies when a = n - (alpha_1+...+alpha_(j-1))
    lies in [1, n] and b = alpha_j - a lies in [0, k]; each such j adds
    k+1 + q^(n-1) + ... + q^(n-a+1).
    """
    alpha = tuple(alpha)
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    if sum(alpha) != n + k:
        raise SizeMismatchError(f"|{alpha}| = {sum(alpha)} != n+k = {n + k}")
    poly = LaurentPolyQ.zero()
    before = 0
    for part in alpha:
        a = n - before
        b = part - a
        if 1 <= a <= n and 0 <= b <= k:
            bracket = LaurentPolyQ.from_scalar(k + 1)
            for i in range(1, a):
                bracket = bracket + LaurentPolyQ.q_power(n - i)
            poly = poly + bracket
        before += part
    return TheoremCoefficient(n, k, alpha, poly)


def _rhs_grouped(n, k):
    total = SymFunc.zero("s")
    for alpha in compositions_of(n + k):
        coeff = theorem_coeff(n, k, alpha).poly
        if coeff:
            total = total + c_alpha_one(alpha).scale(coeff)
    return total


def _rhs_quadruple(n, k):
    total = SymFunc.zero("s")
    for a in range(1, n + 1):
        bracket = LaurentPolyQ.from_scalar(k + 1)
        for i in range(1, a):
            bracket = bracket + LaurentPolyQ.q_power(n - i)
        for b in range(0, k + 1):
            for tau in compositions_of(n - a):
                for rho in compositions_of(k - b):
                    alpha = tau + (a + b,) + rho
                    total = total + c_alpha_one(alpha).scale(bracket)
    return total


def theorem_rhs(n: int, k: int, guard: int | None = None) -> SymFunc:
    """Right-hand side of the hook expansion, computed two ways and compared."""
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    check_degree(n + k, guard)
    grouped = _rhs_grouped(n, k)
    quadruple = _rhs_quadruple(n, k)
    if grouped != quadruple:
        raise RuntimeError("grouped and quadruple sums disagree "
                           f"for n={n}, k={k}")
    return grouped


# ---------------------------------------------------------------------------
# Identity suite
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: SymFunc | None = None


def en_identity(n: int, guard: int | None = None) -> Verdict:
    """Check sum over all alpha of C_alpha 1 = e_n = s_{1^n}."""
    if n < 1:
        raise ValueError("need n >= 1")
    check_degree(n, guard)
    total = SymFunc.zero("s")
    for alpha in compositions_of(n):
        total = total + c_alpha_one(alpha)
    diff = total - SymFunc.schur((1,) * n).as_laurent()
    return Verdict(diff.is_zero(), None if diff.is_zero() else diff)


def pn_identity(n: int, reading: str = "first-part",
                guard: int | None = None) -> Verdict:
    """Check (-1)^(n-1) p_n = sum over alpha of [selected part]_q C_alpha 1.

    ``reading`` picks which part of alpha feeds the q-integer: the published
    subscript is ambiguous, and only the first-part reading survives testing
    (the part whose operator is applied last).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if reading not in ("first-part", "last-part"):
        raise ValueError(f"unknown reading {reading!r}")
    check_degree(n, guard)
    total = SymFunc.zero("s")
    for alpha in compositions_of(n):
        part = alpha[0] if reading == "first-part" else alpha[-1]
        total = total + c_alpha_one(alpha).scale(qint(part))
    target = convert(SymFunc.single("p", (n,)), "s").as_laurent()
    if (n - 1) % 2:
        target = -target
    diff = total - target
    return Verdict(diff.is_zero(), None if diff.is_zero() else diff)
