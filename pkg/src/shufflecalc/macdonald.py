"""Modified Macdonald polynomials and the nabla operator.

H-tilde polynomials are built from standard fillings weighted q^inv t^maj
and expanded through the fundamental quasisymmetric basis.  Nabla is realized
per degree as an integer-polynomial matrix on the monomial basis: the
change-of-basis system is solved fraction-free (Bareiss) at integer values
of t, the eigenvalue scaling is applied, and the matrix is recovered by
exact finite-difference interpolation.  The table is then verified exactly
against the eigen-equation N*K = K*diag(eigenvalues), so a bad bound or a
bad solve cannot go unnoticed.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial, gcd

from .config import DEFAULT_LIMITS
from .errors import DegreeGuardError, InhomogeneousInputError, SingularSystemError
from .partitions import conjugate, partitions_of, stat_n
from .rings import LaurentPolyQ, PolyQT, RatFuncQT
from .symfunc import QSymFunc, SymFunc, convert, fqsym_to_sym

CACHE_ENV = "SHUFFLECALC_CACHE_DIR"


def eigenvalue(mu) -> PolyQT:
    """Nabla eigenvalue t^n(mu) q^n(mu') on H-tilde_mu."""
    return PolyQT.monomial(stat_n(conjugate(mu)), stat_n(mu))


# ---------------------------------------------------------------------------
# The filling formula
# ---------------------------------------------------------------------------

def _ides(word):
    pos = {v: i for i, v in enumerate(word)}
    return frozenset(i for i in range(1, len(word)) if pos[i + 1] < pos[i])


@lru_cache(maxsize=None)
def macdonald(mu) -> SymFunc:
    """H-tilde_mu[X; q, t] in the monomial basis with PolyQT coefficients.

    Cells of mu are filled with 1..n in all ways; each standard filling
    contributes q^inv t^maj F_ides(reading word).  Rows are indexed bottom
    to top, the reading word runs top row to bottom row, left to right.
    """
    mu = tuple(mu)
    n = sum(mu)
    if n == 0:
        return SymFunc("m", {(): PolyQT.one()})
    muc = conjugate(mu)
    rows = len(mu)
    # reading order: top row down to row 1, left to right; cell = (row, col)
    cells = [(i, j) for i in range(rows, 0, -1) for j in range(1, mu[i - 1] + 1)]
    index = {cell: pos for pos, cell in enumerate(cells)}
    attack = []
    for p, (i, j) in enumerate(cells):
        for pp in range(p + 1, len(cells)):
            ii, jj = cells[pp]
            if ii == i or (i == ii + 1 and j > jj):
                attack.append((p, pp))
    below = [(index[(i, j)], index[(i - 1, j)], muc[j - 1] - i + 1, mu[i - 1] - j)
             for (i, j) in cells if i >= 2]  # (cell, south, leg+1, arm)
    qsym_terms = {}
    for word in permutations(range(1, n + 1)):
        maj = 0
        inv = 0
        for p, ps, legp1, arm in below:
            if word[p] > word[ps]:
                maj += legp1
                inv -= arm
        for p, pp in attack:
            if word[p] > word[pp]:
                inv += 1
        key = (n, _ides(word))
        mono = PolyQT.monomial(inv, maj)
        qsym_terms[key] = qsym_terms.get(key, PolyQT.zero()) + mono
    return fqsym_to_sym(QSymFunc(qsym_terms))


# ---------------------------------------------------------------------------
# Dense integer polynomials in q (solver internals)
# ---------------------------------------------------------------------------

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _ptrim(out)


def _psub(a, b):
    n = max(len(a), len(b))
    return _ptrim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                   for i in range(n)])


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                   for i in range(n)])


def _pdivexact(a, b):
    """Exact division in Z[q]; raises ValueError when inexact."""
    if not a:
        return []
    if not b:
        raise ZeroDivisionError
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        head = a[len(b) - 1 + i]
        if head % b[-1]:
            raise ValueError("inexact Z[q] division")
        c = head // b[-1]
        out[i] = c
        if c:
            for j in range(len(b)):
                a[i + j] -= c * b[j]
    if any(a):
        raise ValueError("inexact Z[q] division")
    return _ptrim(out)


def _bareiss_scaled_inverse(M):
    """Return (Y, d) with M @ Y = d * I over Z[q], fraction-free.

    M is a square matrix of dense q-coefficient lists.  d is the last Bareiss
    pivot (the determinant of the row-permuted matrix).  Raises
    SingularSystemError when M is singular.
    """
    n = len(M)
    A = [[list(M[i][j]) for j in range(n)] +
         [([1] if j == i else []) for j in range(n)] for i in range(n)]
    width = 2 * n
    prev = [1]
    for k in range(n):
        pivot_row = None
        best = None
        for r in range(k, n):
            if A[r][k]:
                if best is None or len(A[r][k]) < best:
                    best = len(A[r][k])
                    pivot_row = r
        if pivot_row is None:
            raise SingularSystemError("singular system at evaluation point")
        if pivot_row != k:
            A[k], A[pivot_row] = A[pivot_row], A[k]
        piv = A[k][k]
        for i in range(k + 1, n):
            head = A[i][k]
            for j in range(k + 1, width):
                num = _psub(_pmul(piv, A[i][j]), _pmul(head, A[k][j]))
                A[i][j] = _pdivexact(num, prev)
            A[i][k] = []
        prev = piv
    det = A[n - 1][n - 1]
    # back substitution producing Y = det * M^(-1), exact at every division
    Y = [[None] * n for _ in range(n)]
    for c in range(n):
        for i in range(n - 1, -1, -1):
            acc = _pmul(det, A[i][n + c]) if i < n - 1 else list(A[i][n + c])
            for j in range(i + 1, n):
                acc = _psub(acc, _pmul(A[i][j], Y[j][c]))
            Y[i][c] = _pdivexact(acc, A[i][i]) if i < n - 1 else acc
    return Y, det


def _interp_columns(samples, offset):
    """Exact polynomial-in-t interpolation of integer samples.

    samples[r] is the value at t = offset + r.  Returns the coefficient list
    in t.  Uses Newton forward differences (integer arithmetic) and converts
    through falling factorials; raises ValueError when the data is not
    polynomial of degree < len(samples).
    """
    D = len(samples) - 1
    diffs = list(samples)
    deltas = [diffs[0]]
    for _ in range(D):
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
        deltas.append(diffs[0])
    # p(t) = sum_k deltas[k] * C(t - offset, k)
    coeffs = [Fraction(0)] * (D + 1)
    for k, dk in enumerate(deltas):
        if dk == 0:
            continue
        for e, c in enumerate(_falling_shifted(k, offset)):
            coeffs[e] += Fraction(dk, factorial(k)) * c
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ValueError("non-integer interpolation result")
        out.append(c.numerator)
    return _ptrim(out)


@lru_cache(maxsize=None)
def _falling_shifted(k, offset):
    """Coefficients of (t-offset)(t-offset-1)...(t-offset-k+1) in t."""
    poly = [1]
    for i in range(k):
        root = offset + i
        poly = _psub([0] + poly, [root * c for c in poly])
    return tuple(poly)


# ---------------------------------------------------------------------------
# Per-degree nabla tables
# ---------------------------------------------------------------------------

@dataclass
class MacdonaldTable:
    degree: int
    order: tuple                      # partitions in the fixed total order
    expansions: dict                  # mu -> SymFunc (m basis, PolyQT coeffs)
    kostka_qt: list                   # K[i][j]: m_(order[i]) coeff of Htilde_(order[j])
    nabla_matrix: list                # N[i][j]: m_(order[i]) coeff of nabla m_(order[j])

_TABLES: dict[int, MacdonaldTable] = {}


def macdonald_table(n: int, guard: int | None = None) -> MacdonaldTable:
    limit = DEFAULT_LIMITS.macdonald if guard is None else guard
    if n > limit:
        raise DegreeGuardError(f"degree {n} exceeds Macdonald guard {limit}")
    table = _TABLES.get(n)
    if table is None:
        table = _load_cached(n) or _build_table(n)
        _TABLES[n] = table
    return table


def _build_table(n: int) -> MacdonaldTable:
    order = partitions_of(n)
    size = len(order)
    expansions = {mu: macdonald(mu) for mu in order}
    K = [[expansions[mu].coeff(lam) or PolyQT.zero() for mu in order]
         for lam in order]
    K = [[c if isinstance(c, PolyQT) else PolyQT.from_int(c) for c in row]
         for row in K]
    eig = [eigenvalue(mu) for mu in order]
    base_deg = comb(n, 2) + 2
    last_error = None
    for degree_bound in (base_deg, 2 * base_deg + 4, 4 * base_deg + 8):
        for offset in (0, degree_bound + 1, 2 * degree_bound + 17):
            try:
                N = _solve_nabla(K, eig, order, degree_bound, offset)
            except (SingularSystemError, ValueError) as exc:
                last_error = exc
                continue
            if _verify(N, K, eig, size):
                return MacdonaldTable(n, order, expansions, K, N)
            last_error = SingularSystemError("eigen-equation check failed")
    raise SingularSystemError(f"nabla table build failed at degree {n}: {last_error}")


def _solve_nabla(K, eig, order, degree_bound, offset):
    size = len(order)
    samples = []
    for r in range(degree_bound + 1):
        tval = offset + r
        Kt = [[K[i][j].eval_t(tval) for j in range(size)] for i in range(size)]
        Y, det = _bareiss_scaled_inverse(Kt)
        eig_t = [e.eval_t(tval) for e in eig]
        # N_t = K_t @ diag(eig_t) @ Y / det
        scaled = [[_pmul(eig_t[i], Y[i][j]) for j in range(size)] for i in range(size)]
        Nt = [[None] * size for _ in range(size)]
        for i in range(size):
            for j in range(size):
                acc = []
                for l in range(size):
                    if Kt[i][l] and scaled[l][j]:
                        acc = _padd(acc, _pmul(Kt[i][l], scaled[l][j]))
                Nt[i][j] = _pdivexact(acc, det)
        samples.append(Nt)
    N = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            qlen = max(len(s[i][j]) for s in samples)
            terms = {}
            for qe in range(qlen):
                vals = [s[i][j][qe] if qe < len(s[i][j]) else 0 for s in samples]
                if any(vals):
                    for te, c in enumerate(_interp_columns(vals, offset)):
                        if c:
                            terms[(qe, te)] = c
            N[i][j] = PolyQT(terms)
    return N


def _verify(N, K, eig, size) -> bool:
    """Exact check of N @ K == K @ diag(eig)."""
    for j in range(size):
        for i in range(size):
            lhs = PolyQT.zero()
            for l in range(size):
                if N[i][l] and K[l][j]:
                    lhs = lhs + N[i][l] * K[l][j]
            if lhs != K[i][j] * eig[j]:
                return False
    return True


# ---------------------------------------------------------------------------
# Optional disk cache
# ---------------------------------------------------------------------------

def _cache_path(n):
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return os.path.join(root, f"macdonald_table_{n}.json")


def _load_cached(n):
    path = _cache_path(n)
    if not path or not os.path.exists(path):
        return None
    with open(path) as fh:
        data = json.load(fh)
    order = tuple(tuple(p) for p in data["order"])
    if data["degree"] != n or order != partitions_of(n):
        return None
    expansions = {mu: macdonald(mu) for mu in order}
    K = [[expansions[mu].coeff(lam) or PolyQT.zero() for mu in order]
         for lam in order]
    N = [[PolyQT.from_json(cell) for cell in row] for row in data["nabla"]]
    eig = [eigenvalue(mu) for mu in order]
    if not _verify(N, K, eig, len(order)):
        return None
    return MacdonaldTable(n, order, expansions, K, N)


def save_table(table: MacdonaldTable) -> str | None:
    path = _cache_path(table.degree)
    if not path:
        return None
    os.makedirs(os.path.dirname(path), exist_ok=True)
    payload = {
        "degree": table.degree,
        "order": [list(p) for p in table.order],
        "nabla": [[cell.to_json() for cell in row] for row in table.nabla_matrix],
    }
    with open(path, "w") as fh:
        json.dump(payload, fh)
    return path


# ---------------------------------------------------------------------------
# nabla
# ---------------------------------------------------------------------------

def nabla(f: SymFunc, guard: int | None = None) -> SymFunc:
    """Apply nabla to a homogeneous symmetric function.

    The result comes back in f's basis (Schur basis for p input) with PolyQT
    coefficients when they are polynomial in q and t, RatFuncQT otherwise.
    """
    if f.basis == "Htilde":
        return SymFunc("Htilde", {mu: c * eigenvalue(mu)
                                  for mu, c in f.terms.items()})
    degs = f.degrees()
    if len(degs) > 1:
        raise InhomogeneousInputError(f"nabla needs homogeneous input, got {degs}")
    if not degs or degs[0] == 0:
        return f
    n = degs[0]
    table = macdonald_table(n, guard)
    fm = convert(f, "m")
    vec, qshift, denom = _clear_vector(fm, table.order)
    size = len(table.order)
    out_vec = []
    for i in range(size):
        acc = PolyQT.zero()
        for j in range(size):
            if vec[j] and table.nabla_matrix[i][j]:
                acc = acc + table.nabla_matrix[i][j] * vec[j]
        out_vec.append(acc)
    coeffs = _restore_vector(out_vec, qshift, denom)
    target = f.basis if f.basis in ("m", "h", "e", "s") else "s"
    result_m = SymFunc("m", dict(zip(table.order, coeffs)))
    if target == "m":
        return result_m
    return convert(result_m, target)


def _clear_vector(fm: SymFunc, order):
    """m-coefficients as PolyQT after clearing q-powers and denominators."""
    qshift = 0
    denom = 1
    for c in fm.terms.values():
        if isinstance(c, LaurentPolyQ):
            qshift = max(qshift, -c.min_exp())
            for frac in c.terms.values():
                denom = denom * frac.denominator // gcd(denom, frac.denominator)
        elif isinstance(c, Fraction):
            denom = denom * c.denominator // gcd(denom, c.denominator)
        elif isinstance(c, (int, PolyQT)):
            pass
        else:
            raise TypeError(f"nabla cannot clear coefficient type {type(c).__name__}")
    vec = []
    for mu in order:
        c = fm.coeff(mu)
        if c == 0:
            vec.append(PolyQT.zero())
        elif isinstance(c, int):
            vec.append(PolyQT.monomial(qshift, 0, c * denom))
        elif isinstance(c, Fraction):
            vec.append(PolyQT.monomial(qshift, 0, _as_int(c * denom)))
        elif isinstance(c, PolyQT):
            if qshift or denom != 1:
                vec.append(c * PolyQT.monomial(qshift, 0, denom))
            else:
                vec.append(c)
        else:
            terms = {}
            for e, frac in c.terms.items():
                terms[(e + qshift, 0)] = _as_int(frac * denom)
            vec.append(PolyQT(terms))
    return vec, qshift, denom


def _as_int(frac: Fraction) -> int:
    if frac.denominator != 1:
        raise ValueError(f"expected integral value, got {frac}")
    return frac.numerator


def _restore_vector(vec, qshift, denom):
    """Divide each PolyQT by q^qshift * denom, falling back to RatFuncQT."""
    divisor = PolyQT.monomial(qshift, 0, denom)
    polys = []
    exact = True
    for p in vec:
        if p.is_zero():
            polys.append(p)
            continue
        if qshift == 0 and denom == 1:
            polys.append(p)
            continue
        try:
            shifted = {}
            for (qe, te), c in p.terms.items():
                if qe < qshift or c % denom:
                    raise ValueError
                shifted[(qe - qshift, te)] = c // denom
            polys.append(PolyQT(shifted))
        except ValueError:
            exact = False
            break
    if exact:
        return polys
    return [RatFuncQT(p, divisor) for p in vec]
