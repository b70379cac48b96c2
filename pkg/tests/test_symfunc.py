"""Symmetric-function core: straightening, Pieri, Kostka, conversions.

Independent oracles: Kostka numbers are recomputed by brute-force SSYT
filling enumeration, and basis conversions are checked against raw monomial
expansions in n variables at low degree.
"""

import random
from itertools import combinations_with_replacement, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shufflecalc.errors import NotSymmetricError, SizeMismatchError, UnsupportedConversionError
from shufflecalc.partitions import conjugate, dominates, partitions_of
from shufflecalc.symfunc import (
    QSymFunc,
    SymFunc,
    convert,
    fqsym_to_sym,
    hook_m_to_s,
    kostka,
    perp_e,
    perp_h,
    pieri_e,
    pieri_h,
    straighten,
)

# ---------------------------------------------------------------------------
# straightening
# ---------------------------------------------------------------------------

def test_straighten_examples():
    sp = straighten((1, 3))
    assert (sp.sign, sp.partition) == (-1, (2, 2))
    assert straighten((2, 3)).sign == 0
    sp = straighten((4, 2, 1))
    assert (sp.sign, sp.partition) == (1, (4, 2, 1))
    assert straighten(()).partition == ()
    assert straighten((0,)).partition == ()


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 6), st.integers(0, 6))
def test_straighten_two_entry_exchange(a, b):
    left = straighten((b - 1, a + 1))
    right = straighten((a, b))
    if right.sign == 0:
        assert left.sign == 0
    else:
        assert left.sign == -right.sign
        assert left.partition == right.partition


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 8))
def test_straighten_adjacent_vanishes(a):
    assert straighten((a, a + 1)).sign == 0


# ---------------------------------------------------------------------------
# Pieri rules and skewing operators
# ---------------------------------------------------------------------------

def test_pieri_h_examples():
    assert pieri_h(SymFunc.schur(()), 2).terms == {(2,): 1}
    assert pieri_h(SymFunc.schur((1,)), 1).terms == {(2,): 1, (1, 1): 1}
    f = pieri_h(SymFunc.schur((2, 1)), 2)
    assert f.terms == {(4, 1): 1, (3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1}


def test_perp_examples():
    assert perp_h(SymFunc.schur((2,)), 1).terms == {(1,): 1}
    assert perp_h(SymFunc.schur((1, 1)), 1).terms == {(1,): 1}
    assert perp_h(SymFunc.schur((2, 1)), 2).terms == {(1,): 1}
    assert perp_e(SymFunc.schur((1, 1)), 2).terms == {(): 1}
    assert perp_e(SymFunc.schur((2,)), 2).is_zero()
    assert perp_e(SymFunc.schur((2, 1)), 1).terms == {(2,): 1, (1, 1): 1}


def _brute_horizontal_strips_above(lam, m):
    """Oracle: nu from adding m boxes, no two in one column."""
    out = set()
    rows = len(lam) + 1
    padded = tuple(lam) + (0,)

    def rec(i, acc, left):
        if i == rows:
            if left == 0:
                nu = tuple(x for x in acc if x)
                if all(nu[j] >= nu[j + 1] for j in range(len(nu) - 1)):
                    # horizontal strip: added cells in distinct columns
                    cols = []
                    for r in range(len(nu)):
                        old = padded[r] if r < len(padded) else 0
                        cols.extend(range(old, nu[r]))
                    if len(cols) == len(set(cols)):
                        out.add(nu)
            return
        for add in range(left + 1):
            rec(i + 1, acc + [padded[i] + add], left - add)

    rec(0, [], m)
    return out


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 6), st.integers(0, 3))
def test_pieri_h_against_brute_force(n, m):
    for lam in partitions_of(n):
        got = set(pieri_h(SymFunc.schur(lam), m).terms)
        assert got == _brute_horizontal_strips_above(lam, m)


def test_adjointness_sanity():
    for n in range(0, 6):
        for lam in partitions_of(n):
            for m in range(0, 4):
                f = perp_h(pieri_h(SymFunc.schur(lam), m), m)
                assert f.coeff(lam) >= 1


def test_pieri_perp_conjugation_duality():
    for n in range(0, 6):
        for lam in partitions_of(n):
            for m in range(1, 4):
                via_e = pieri_e(SymFunc.schur(lam), m)
                conj = pieri_h(SymFunc.schur(conjugate(lam)), m)
                assert {conjugate(p) for p in via_e.terms} == set(conj.terms)


# ---------------------------------------------------------------------------
# Kostka numbers
# ---------------------------------------------------------------------------

def _brute_kostka(lam, mu):
    """Oracle: explicit SSYT fillings, rows weakly / columns strictly increasing."""
    cells = [(r, c) for r, row_len in enumerate(lam) for c in range(row_len)]
    entries = []
    for val, count in enumerate(mu, start=1):
        entries.extend([val] * count)
    found = 0
    for perm in set(permutations(entries)):
        grid = {}
        ok = True
        for (r, c), v in zip(cells, perm):
            grid[(r, c)] = v
        for (r, c), v in grid.items():
            if c > 0 and grid[(r, c - 1)] > v:
                ok = False
                break
            if r > 0 and grid[(r - 1, c)] >= v:
                ok = False
                break
        found += ok
    return found


def test_kostka_examples():
    assert kostka((3,), (3,)) == 1
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((1, 1, 1), (2, 1)) == 0
    with pytest.raises(SizeMismatchError):
        kostka((2,), (1,))


def test_kostka_against_brute_force():
    for n in range(0, 6):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert kostka(lam, mu) == _brute_kostka(lam, mu), (lam, mu)


def test_kostka_unitriangular():
    for n in range(0, 8):
        for lam in partitions_of(n):
            assert kostka(lam, lam) == 1
            for mu in partitions_of(n):
                if kostka(lam, mu) != 0:
                    assert dominates(lam, mu)


# ---------------------------------------------------------------------------
# conversions against raw monomial expansions
# ---------------------------------------------------------------------------

def _mono_mul(f, g):
    out = {}
    for ka, va in f.items():
        for kb, vb in g.items():
            k = tuple(a + b for a, b in zip(ka, kb))
            out[k] = out.get(k, 0) + va * vb
            if out[k] == 0:
                del out[k]
    return out


def _expand(basis, mu, nvars):
    """Raw expansion of basis_mu in nvars variables as {exponent tuple: int}."""
    one = {(0,) * nvars: 1}
    if basis == "m":
        out = {}
        padded = tuple(mu) + (0,) * (nvars - len(mu))
        for perm in set(permutations(padded)):
            out[perm] = 1
        return out
    if basis in ("h", "e"):
        total = one
        for part in mu:
            single = {}
            if basis == "h":
                gen = combinations_with_replacement(range(nvars), part)
            else:
                gen = combinations(range(nvars), part)
            for combo in gen:
                key = [0] * nvars
                for i in combo:
                    key[i] += 1
                key = tuple(key)
                single[key] = single.get(key, 0) + 1
            total = _mono_mul(total, single)
        return total
    if basis == "p":
        total = one
        for part in mu:
            single = {}
            for i in range(nvars):
                key = [0] * nvars
                key[i] = part
                single[tuple(key)] = 1
            total = _mono_mul(total, single)
        return total
    if basis == "s":
        # SSYT with entries in 1..nvars
        out = {}
        cells = [(r, c) for r, row_len in enumerate(mu) for c in range(row_len)]

        def rec(idx, grid):
            if idx == len(cells):
                key = [0] * nvars
                for v in grid.values():
                    key[v - 1] += 1
                key = tuple(key)
                out[key] = out.get(key, 0) + 1
                return
            r, c = cells[idx]
            lo = 1
            if c > 0:
                lo = max(lo, grid[(r, c - 1)])
            if r > 0:
                lo = max(lo, grid[(r - 1, c)] + 1)
            for v in range(lo, nvars + 1):
                grid[(r, c)] = v
                rec(idx + 1, grid)
            grid.pop((r, c), None)

        rec(0, {})
        return out
    raise ValueError(basis)


from itertools import combinations  # noqa: E402  (used by _expand)


def _expand_symfunc(f, nvars):
    out = {}
    for mu, c in f.terms.items():
        for key, v in _expand(f.basis, mu, nvars).items():
            out[key] = out.get(key, 0) + c * v
            if out[key] == 0:
                del out[key]
    return out


@pytest.mark.parametrize("source,target", [
    ("m", "s"), ("s", "m"), ("h", "s"), ("s", "h"),
    ("e", "s"), ("s", "e"), ("m", "h"), ("h", "m"), ("e", "m"),
])
def test_convert_matches_monomial_expansion(source, target):
    for n in range(0, 5):
        for mu in partitions_of(n):
            f = SymFunc.single(source, mu)
            g = convert(f, target)
            assert _expand_symfunc(f, max(n, 1)) == _expand_symfunc(g, max(n, 1)), \
                (source, target, mu)


def test_convert_examples():
    h3 = convert(SymFunc.single("h", (3,)), "m")
    assert h3.terms == {(3,): 1, (2, 1): 1, (1, 1, 1): 1}
    m21h = convert(SymFunc.single("m", (2, 1)), "h")
    assert m21h.terms == {(3,): -3, (2, 1): 5, (1, 1, 1): -2}
    m21s = convert(SymFunc.single("m", (2, 1)), "s")
    assert m21s.terms == {(2, 1): 1, (1, 1, 1): -2}


def test_convert_p_single_row():
    for n in range(1, 6):
        ps = convert(SymFunc.single("p", (n,)), "s")
        expected = {(r,) + (1,) * (n - r): (-1) ** (n - r) for r in range(1, n + 1)}
        assert ps.terms == expected
        assert _expand_symfunc(SymFunc.single("p", (n,)), n) == _expand_symfunc(ps, n)


def test_convert_unsupported():
    with pytest.raises(UnsupportedConversionError):
        convert(SymFunc.single("p", (2, 1)), "s")
    with pytest.raises(UnsupportedConversionError):
        convert(SymFunc.single("m", (2,)), "p")


def test_convert_roundtrips_randomized():
    rng = random.Random(2024)
    bases = ["m", "h", "e", "s"]
    for _ in range(40):
        n = rng.randint(1, 6)
        src, dst = rng.sample(bases, 2)
        parts = partitions_of(n)
        f = SymFunc(src, {mu: rng.randint(-3, 3)
                          for mu in rng.sample(parts, min(3, len(parts)))})
        assert convert(convert(f, dst), src) == f


# ---------------------------------------------------------------------------
# hook monomials
# ---------------------------------------------------------------------------

def test_hook_m_to_s_paper_values():
    f = hook_m_to_s(2, 1)
    assert f.coeff((1, 1, 1)) == -2
    assert f.coeff((2, 1)) == 1
    assert f.coeff((3,)) == 0


def test_hook_m_to_s_matches_kostka_inversion():
    for a in range(1, 9):
        for k in range(0, 9 - a):
            mu = (a,) + (1,) * k
            assert hook_m_to_s(a, k) == convert(SymFunc.single("m", mu), "s"), (a, k)


def test_hook_m_to_s_row_case_is_power_sum():
    for n in range(2, 7):
        assert hook_m_to_s(n, 0) == convert(SymFunc.single("p", (n,)), "s")


# ---------------------------------------------------------------------------
# quasisymmetric conversion
# ---------------------------------------------------------------------------

def test_fqsym_examples():
    assert fqsym_to_sym(QSymFunc.fundamental(2, ())).terms == {(2,): 1, (1, 1): 1}
    for n in range(1, 7):
        full = frozenset(range(1, n))
        f = fqsym_to_sym(QSymFunc.fundamental(n, full))
        assert f.terms == {(1,) * n: 1}
        # h_n = F_empty reproduces the full monomial sum
        g = fqsym_to_sym(QSymFunc.fundamental(n, ()))
        assert g.terms == {mu: 1 for mu in partitions_of(n)}


def test_fqsym_not_symmetric():
    with pytest.raises(NotSymmetricError):
        fqsym_to_sym(QSymFunc.fundamental(3, {1}))
    with pytest.raises(NotSymmetricError):
        fqsym_to_sym(QSymFunc.fundamental(4, {2}))


def test_fqsym_schur_via_tableaux():
    # s_lam = sum of F over standard tableaux descent sets (degree 4 spot check)
    syt_descents = {
        (2, 2): [{2}, {1, 3}],
        (3, 1): [{3}, {2}, {1}],
    }
    for lam, descent_sets in syt_descents.items():
        total = QSymFunc.zero()
        for ds in descent_sets:
            total = total + QSymFunc.fundamental(4, frozenset(ds))
        assert fqsym_to_sym(total) == convert(SymFunc.schur(lam), "m"), lam
