"""Bi-brick permutations through Lyndon words over {B < L < N < U}.

A cycle carries an outer bricking (lengths -> a composition) and an inner
bricking (lengths -> partition parts); reading clockwise, each segment gets
B (both brick kinds start), L (outer only), U (inner only) or N (neither).
Aperiodic cycles correspond to the unique Lyndon word in the rotation orbit,
and a bi-brick permutation is a multiset of such cycles.  The letters are
chosen so plain string comparison is the right order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import PeriodicWordError, SizeMismatchError
from .operators import Verdict
from .partitions import check_partition, sort_to_partition
from .symfunc import SymFunc, _accum, convert

ALPHABET = "BLNU"
OUTER = {"B", "L"}
INNER = {"B", "U"}


def is_valid_cycle_word(w: str) -> bool:
    return (bool(w) and all(ch in ALPHABET for ch in w)
            and any(ch in OUTER for ch in w) and any(ch in INNER for ch in w))


def is_lyndon(w: str) -> bool:
    """True iff w is strictly smaller than every proper rotation."""
    if not w:
        raise ValueError("empty word")
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def _is_periodic(w: str) -> bool:
    return w in (w + w)[1:-1]


def _min_rotation(w: str) -> str:
    return min(w[i:] + w[:i] for i in range(len(w)))


@dataclass(frozen=True, order=True)
class BiBrickCycle:
    word: str

    def __post_init__(self):
        if not is_valid_cycle_word(self.word):
            raise ValueError(f"invalid cycle word {self.word!r}")
        if not is_lyndon(self.word):
            raise ValueError(f"{self.word!r} is not a Lyndon word")

    @property
    def length(self):
        return len(self.word)

    def outer_starts(self):
        return tuple(i for i, ch in enumerate(self.word) if ch in OUTER)

    def inner_starts(self):
        return tuple(i for i, ch in enumerate(self.word) if ch in INNER)

    def outer_lengths(self):
        return _cyclic_gaps(self.outer_starts(), self.length)

    def inner_lengths(self):
        return _cyclic_gaps(self.inner_starts(), self.length)


def _cyclic_gaps(starts, n):
    return tuple(starts[i + 1] - starts[i] for i in range(len(starts) - 1)) \
        + (n + starts[0] - starts[-1],)


def _word_from_starts(n, outer, inner) -> str:
    letters = []
    for i in range(n):
        o, s = i in outer, i in inner
        letters.append("B" if o and s else "L" if o else "U" if s else "N")
    return "".join(letters)


def canonical_rotation(w: str) -> BiBrickCycle:
    """The unique Lyndon rotation of an aperiodic valid cycle word."""
    if not is_valid_cycle_word(w):
        raise ValueError(f"invalid cycle word {w!r}")
    if _is_periodic(w):
        raise PeriodicWordError(f"{w!r} has rotational symmetry")
    return BiBrickCycle(_min_rotation(w))


def cfl_factorize(w: str) -> list[str]:
    """Chen-Fox-Lyndon factorization into weakly decreasing Lyndon words."""
    if not w:
        raise ValueError("empty word")
    out = []
    k = 0
    n = len(w)
    while k < n:
        i, j = k, k + 1
        while j < n and w[i] <= w[j]:
            i = k if w[i] < w[j] else i + 1
            j += 1
        while k <= i:
            out.append(w[k:k + j - i])
            k += j - i
    return out


@lru_cache(maxsize=None)
def alpha_of_cycle(cycle: BiBrickCycle) -> tuple:
    """Outer-brick composition of one cycle.

    With a B present the gaps of {B, L} positions read off directly.
    Otherwise the inner bricks are rotated clockwise (positions +1) until an
    inner start meets an outer start; the re-encoded cycle's Lyndon word is
    the reading origin while the original word keeps its sorting role.
    """
    w = cycle.word
    n = len(w)
    if "B" in w:
        return cycle.outer_lengths()
    outer = set(cycle.outer_starts())
    inner = set(cycle.inner_starts())
    for r in range(1, n + 1):
        shifted = {(i + r) % n for i in inner}
        if shifted & outer:
            rotated = _word_from_starts(n, outer, shifted)
            return canonical_rotation(rotated).outer_lengths()
    raise ValueError(f"no aligning rotation for {w!r}")  # unreachable


@dataclass(frozen=True)
class BiBrickPermutation:
    cycles: tuple  # BiBrickCycle multiset, words in weakly decreasing order

    def __post_init__(self):
        words = [c.word for c in self.cycles]
        if words != sorted(words, reverse=True):
            raise ValueError("cycles must be sorted in reverse-lex word order")

    @classmethod
    def from_words(cls, words):
        return cls(tuple(BiBrickCycle(w)
                         for w in sorted(words, reverse=True)))

    @property
    def size(self):
        return sum(c.length for c in self.cycles)

    def mu(self) -> tuple:
        parts = []
        for c in self.cycles:
            parts.extend(c.inner_lengths())
        return sort_to_partition(parts)

    def text(self):
        return ",".join(c.word for c in self.cycles)


def alpha_of(pi: BiBrickPermutation) -> tuple:
    """Concatenated alpha of the cycles, reverse-lex by original words."""
    out = []
    for c in pi.cycles:
        out.extend(alpha_of_cycle(c))
    return tuple(out)


def mu_of(pi: BiBrickPermutation) -> tuple:
    return pi.mu()


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _cycle_pool(max_len: int):
    """Valid cycle words of length <= max_len with their inner partitions,
    in descending lexicographic order (the multiset-construction order)."""
    pool = []
    for ell in range(1, max_len + 1):
        for letters in product(ALPHABET, repeat=ell):
            w = "".join(letters)
            if not is_valid_cycle_word(w) or not is_lyndon(w):
                continue
            inner = Counter(BiBrickCycle(w).inner_lengths())
            pool.append((w, inner))
    pool.sort(key=lambda pair: pair[0], reverse=True)
    return tuple(pool)


def enumerate_bibrick(mu, guard: int = 8):
    """Every bi-brick permutation with inner-brick partition mu, exactly once.

    Cycles are chosen in weakly decreasing word order from the candidate
    pool, so each multiset appears once without explicit deduplication.
    """
    mu = check_partition(mu)
    n = sum(mu)
    if n > guard:
        raise ValueError(f"|mu| = {n} exceeds guard {guard}")
    target = Counter(mu)
    pool = [(w, inner) for (w, inner) in _cycle_pool(n)
            if not (inner - target)]

    def rec(start, remaining, total, acc):
        if total == 0:
            yield BiBrickPermutation(tuple(BiBrickCycle(w) for w in acc))
            return
        for idx in range(start, len(pool)):
            w, inner = pool[idx]
            if len(w) > total or (inner - remaining):
                continue
            acc.append(w)
            yield from rec(idx, remaining - inner, total - len(w), acc)
            acc.pop()

    yield from rec(0, target, n, [])


# ---------------------------------------------------------------------------
# The hook construction
# ---------------------------------------------------------------------------

def hook_construct(n: int, k: int, alpha) -> list[tuple[BiBrickPermutation, int]]:
    """Bi-brick permutations with mu = (n,1^k) and the given alpha, with stats.

    Two families: one permutation per inner-brick start of the single
    (n,1^k) cycle arrangement (the CFL chop of a B-rooted reading; stat 0),
    and the rotations of the main cycle of the minimal split, where the
    stat counts segments covered by the size-n inner brick before the
    alpha_r outer brick starts.
    """
    alpha = tuple(alpha)
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    total = n + k
    if sum(alpha) != total:
        raise SizeMismatchError(f"|{alpha}| != n+k = {total}")
    outer_rel = set()
    acc = 0
    for part in alpha[:-1]:
        acc += part
        outer_rel.add(acc)
    outer_rel.add(0)
    inner_base = [0] + list(range(n, total))
    out = []
    for c in inner_base:
        inner_rel = {(p - c) % total for p in inner_base}
        word = _word_from_starts(total, outer_rel, inner_rel)
        factors = cfl_factorize(word)
        out.append((BiBrickPermutation.from_words(factors), 0))
    # rotation family from the minimal (r, s) with alpha_1+...+alpha_r = n+s
    partial = 0
    r = 0
    while partial < n:
        partial += alpha[r]
        r += 1
    P = partial - alpha[r - 1]
    s = partial - n
    a = n - P
    # remaining bricks alpha_(r+1).. on all-ones inner cycles: lay them on a
    # single cycle and chop, so the reverse-lex reading recovers their order
    rest = alpha[r:]
    tail = []
    if rest:
        tail_size = sum(rest)
        touter = set()
        acc2 = 0
        for part in rest:
            touter.add(acc2)
            acc2 += part
        tword = _word_from_starts(tail_size, touter, set(range(tail_size)))
        tail = [BiBrickCycle(w) for w in cfl_factorize(tword)]
    main_outer = set()
    acc = 0
    for part in alpha[:r]:
        main_outer.add(acc)
        acc += part
    m_size = n + s
    for j in range(1, a):
        w = P + s + j
        inner = set(range(w - s, w + 1))
        cycle = canonical_rotation(_word_from_starts(m_size, main_outer, inner))
        words = [cycle.word] + [c.word for c in tail]
        out.append((BiBrickPermutation.from_words(words), n - j))
    return out


# ---------------------------------------------------------------------------
# q = 1 verification
# ---------------------------------------------------------------------------

def verify_q1(mu, guard: int = 8) -> Verdict:
    """Check the q=1 shadow: the signed h-sum over bi-brick permutations
    with inner partition mu equals (-1)^(|mu|-l(mu)) m_mu."""
    mu = check_partition(mu)
    terms = {}
    for pi in enumerate_bibrick(mu, guard=guard):
        alpha = alpha_of(pi)
        sign = -1 if (sum(alpha) - len(alpha)) % 2 else 1
        _accum(terms, sort_to_partition(alpha), sign)
    total = SymFunc("h", terms)
    target = convert(SymFunc.single("m", mu), "h")
    if (sum(mu) - len(mu)) % 2:
        target = -target
    diff = total - target
    return Verdict(diff.is_zero(), None if diff.is_zero() else diff)
