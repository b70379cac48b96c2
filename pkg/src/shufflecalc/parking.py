"""Dyck paths, parking functions and their statistics.

A Dyck path is stored through its area word a_1..a_n (bottom row to top
row, a_i = full cells between the path and the diagonal in row i); a
parking function adds a car permutation c_1..c_n that is column-increasing
(a_{i+1} = a_i + 1 forces c_{i+1} > c_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import NotSymmetricError
from .partitions import compositions_of
from .rings import LaurentPolyQ, PolyQT
from .symfunc import QSymFunc, SymFunc, convert, fqsym_to_sym


@dataclass(frozen=True)
class DyckPath:
    area_word: tuple

    def __post_init__(self):
        a = self.area_word
        if not a or a[0] != 0:
            raise ValueError(f"area word must start at 0: {a}")
        for x, y in zip(a, a[1:]):
            if y < 0 or y > x + 1:
                raise ValueError(f"invalid area word {a}")

    @property
    def size(self):
        return len(self.area_word)

    def area(self):
        return sum(self.area_word)

    def touches(self):
        """Interior diagonal points (i,i) the path returns to, as i values."""
        return tuple(i for i in range(1, self.size) if self.area_word[i] == 0)

    def comp(self):
        """Distances between consecutive diagonal points, a composition."""
        pts = (0,) + self.touches() + (self.size,)
        return tuple(b - a for a, b in zip(pts, pts[1:]))


@dataclass(frozen=True)
class ParkingFunction:
    path: DyckPath
    cars: tuple

    def __post_init__(self):
        a, c = self.path.area_word, self.cars
        n = len(a)
        if sorted(c) != list(range(1, n + 1)):
            raise ValueError(f"cars must be a permutation of 1..{n}: {c}")
        for i in range(n - 1):
            if a[i + 1] == a[i] + 1 and c[i + 1] <= c[i]:
                raise ValueError(f"cars not column-increasing at row {i + 1}")

    @property
    def size(self):
        return len(self.cars)

    def text(self):
        a = ",".join(str(x) for x in self.path.area_word)
        c = ",".join(str(x) for x in self.cars)
        return f"a={a};c={c}"

    @classmethod
    def from_text(cls, text):
        apart, cpart = text.strip().split(";")
        aw = tuple(int(x) for x in apart.split("=")[1].split(","))
        cars = tuple(int(x) for x in cpart.split("=")[1].split(","))
        return cls(DyckPath(aw), cars)


@dataclass(frozen=True)
class PFStatistics:
    area: int
    dinv: int
    word: tuple
    ides: frozenset
    comp: tuple


def statistics(pf: ParkingFunction) -> PFStatistics:
    """area, dinv, diagonal reading word, ides and touch composition."""
    a, c = pf.path.area_word, pf.cars
    n = len(a)
    order = sorted(range(n), key=lambda i: (-a[i], -i))
    word = tuple(c[i] for i in order)
    pos = {v: i for i, v in enumerate(word)}
    ides = frozenset(i for i in range(1, n) if pos[i + 1] < pos[i])
    dinv = 0
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] == a[j] and c[i] < c[j]:
                dinv += 1
            elif a[i] == a[j] + 1 and c[i] > c[j]:
                dinv += 1
    return PFStatistics(pf.path.area(), dinv, word, ides, pf.path.comp())


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def dyck_paths(n: int):
    """All Dyck paths of size n, area words in lexicographic order."""
    def rec(prefix):
        if len(prefix) == n:
            yield DyckPath(tuple(prefix))
            return
        for v in range(0, prefix[-1] + 2):
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    if n >= 1:
        yield from rec([0])


def _labelings(area_word):
    """Column-increasing car assignments, deterministic order.

    Rows split into maximal runs of consecutive +1 steps; each run gets an
    increasing set of labels.
    """
    n = len(area_word)
    runs = []
    start = 0
    for i in range(1, n + 1):
        if i == n or area_word[i] != area_word[i - 1] + 1:
            runs.append((start, i - start))
            start = i
    labels = list(range(1, n + 1))

    def rec(run_idx, remaining):
        if run_idx == len(runs):
            yield {}
            return
        _, size = runs[run_idx]
        for chosen in combinations(remaining, size):
            rest = tuple(x for x in remaining if x not in chosen)
            for tail in rec(run_idx + 1, rest):
                tail = dict(tail)
                tail[run_idx] = chosen
                yield tail

    for assignment in rec(0, tuple(labels)):
        cars = [0] * n
        for run_idx, (start, size) in enumerate(runs):
            for off, label in enumerate(sorted(assignment[run_idx])):
                cars[start + off] = label
        yield tuple(cars)


def enumerate_pf(n: int, guard: int = 8):
    """Every parking function of size n exactly once."""
    if not 1 <= n <= guard:
        raise ValueError(f"need 1 <= n <= {guard}")
    for path in dyck_paths(n):
        for cars in _labelings(path.area_word):
            yield ParkingFunction(path, cars)


def count_pf(n: int) -> int:
    return sum(1 for _ in enumerate_pf(n))


# ---------------------------------------------------------------------------
# Quasisymmetric sums
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _per_path_data(n):
    """[(path, area, ((dinv, ides) per labeling))] for all paths of size n."""
    out = []
    for path in dyck_paths(n):
        rows = []
        for cars in _labelings(path.area_word):
            st = statistics(ParkingFunction(path, cars))
            rows.append((st.dinv, st.ides))
        out.append((path, path.area(), tuple(rows)))
    return tuple(out)


def shuffle_sum(alpha, guard: int = 8) -> QSymFunc:
    """Sum of t^area q^dinv F_ides over parking functions with comp = alpha."""
    alpha = tuple(alpha)
    n = sum(alpha)
    if n > guard:
        raise ValueError(f"|alpha| = {n} exceeds guard {guard}")
    terms = {}
    for path, area, rows in _per_path_data(n):
        if path.comp() != alpha:
            continue
        for dinv, ides in rows:
            key = (n, ides)
            mono = PolyQT.monomial(dinv, area)
            terms[key] = terms.get(key, PolyQT.zero()) + mono
    return QSymFunc(terms)


def wpoly(n: int, k: int, path: DyckPath) -> LaurentPolyQ:
    """The hook weight of a Dyck path of size n+k.

    Starts at k+1; walking i = n-1, n-2, ..., 1, adds q^i while (i,i) is
    not a diagonal touch point and stops at the first touch.
    """
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    if path.size != n + k:
        raise ValueError(f"path size {path.size} != n+k = {n + k}")
    touches = set(path.touches())
    terms = {0: k + 1}
    for i in range(n - 1, 0, -1):
        if i in touches:
            break
        terms[i] = 1
    return LaurentPolyQ(terms)


def corollary_rhs(n: int, k: int, guard: int = 7) -> SymFunc:
    """Schur form of the weighted parking-function sum for nabla m_(n,1^k).

    Sums wpoly(n,k,path) t^area q^dinv F_ides over all parking functions of
    size n+k (the weight only depends on the path).
    """
    if n + k > guard:
        raise ValueError(f"n+k = {n + k} exceeds guard {guard}")
    terms = {}
    for path, area, rows in _per_path_data(n + k):
        w = wpoly(n, k, path)
        wqt = PolyQT({(qe, area): c.numerator for qe, c in w.terms.items()})
        for dinv, ides in rows:
            key = (n + k, ides)
            mono = wqt * PolyQT.monomial(dinv, 0)
            terms[key] = terms.get(key, PolyQT.zero()) + mono
    return convert(fqsym_to_sym(QSymFunc(terms)), "s")


def llt_by_path(path: DyckPath, guard: int = 7) -> QSymFunc:
    """Sum of q^dinv F_ides over the labelings of one path (area factored out)."""
    if path.size > guard:
        raise ValueError(f"path size {path.size} exceeds guard {guard}")
    terms = {}
    n = path.size
    for cars in _labelings(path.area_word):
        st = statistics(ParkingFunction(path, cars))
        key = (n, st.ides)
        mono = LaurentPolyQ.q_power(st.dinv)
        terms[key] = terms.get(key, LaurentPolyQ.zero()) + mono
    return QSymFunc(terms)
