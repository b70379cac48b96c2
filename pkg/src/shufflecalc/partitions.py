"""Partitions and compositions as plain int tuples."""

from __future__ import annotations

from functools import lru_cache


def is_partition(mu) -> bool:
    return all(a >= b for a, b in zip(mu, mu[1:])) and all(p >= 1 for p in mu)


def check_partition(mu):
    mu = tuple(int(p) for p in mu)
    if not is_partition(mu):
        raise ValueError(f"{mu} is not a partition")
    return mu


def size(mu) -> int:
    return sum(mu)


def length(mu) -> int:
    return len(mu)


def conjugate(mu) -> tuple:
    if not mu:
        return ()
    out = [0] * mu[0]
    for part in mu:
        for i in range(part):
            out[i] += 1
    return tuple(out)


def stat_n(mu) -> int:
    """n(mu) = sum (i-1) * mu_i, the nabla eigenvalue exponent."""
    return sum(i * p for i, p in enumerate(mu))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of n, largest-part-first, in descending lex order."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    return tuple(rec(n, n))


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple:
    """All 2^(n-1) compositions of n (the empty composition for n = 0)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ((),)
    out = []

    def rec(rest, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for first in range(1, rest + 1):
            acc.append(first)
            rec(rest - first, acc)
            acc.pop()

    rec(n, [])
    return tuple(out)


def sort_to_partition(alpha) -> tuple:
    return tuple(sorted(alpha, reverse=True))


def partial_sums(alpha) -> tuple:
    total, out = 0, []
    for part in alpha:
        total += part
        out.append(total)
    return tuple(out)


def partition_order_key(mu):
    """Fixed total order: degree, then descending lex (refines dominance)."""
    return (sum(mu), tuple(-p for p in mu))


def dominates(lam, mu) -> bool:
    """lam >= mu in dominance order (same size assumed)."""
    s1 = s2 = 0
    for i in range(max(len(lam), len(mu))):
        s1 += lam[i] if i < len(lam) else 0
        s2 += mu[i] if i < len(mu) else 0
        if s1 < s2:
            return False
    return True


def contains(lam, mu) -> bool:
    """mu's diagram fits inside lam's."""
    return len(mu) <= len(lam) and all(m <= l for l, m in zip(lam, mu))


def parse_partition(text: str) -> tuple:
    """Parse the comma-separated text form, e.g. '5,1,1,1'; '' is empty."""
    text = text.strip()
    if not text:
        return ()
    return check_partition(int(p) for p in text.split(","))


def parse_composition(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    parts = tuple(int(p) for p in text.split(","))
    if any(p < 1 for p in parts):
        raise ValueError(f"composition parts must be >= 1: {parts}")
    return parts


def format_parts(parts) -> str:
    return ",".join(str(p) for p in parts)
