"""Exact coefficient domains.

Three coefficient types cover everything downstream:

* ``Fraction`` (stdlib) for plain rational scalars,
* ``LaurentPolyQ`` for Laurent polynomials in q over the rationals,
* ``PolyQT`` for integer polynomials in q and t,
* ``RatFuncQT`` for canonical ratios of two ``PolyQT`` values.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd


# ---------------------------------------------------------------------------
# Laurent polynomials in q over Q
# ---------------------------------------------------------------------------

class LaurentPolyQ:
    """Sparse Laurent polynomial in q with Fraction coefficients.

    The zero polynomial is the empty term map; no stored coefficient is zero.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                c = c if isinstance(c, Fraction) else Fraction(c)
                if c != 0:
                    clean[int(exp)] = c
        self._terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: Fraction(1)})

    @classmethod
    def q_power(cls, k, coeff=1):
        return cls({k: Fraction(coeff)})

    @classmethod
    def from_scalar(cls, c):
        return cls({0: Fraction(c)})

    # -- basic queries ------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolyQ.from_scalar(other)
        if not isinstance(other, LaurentPolyQ):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPolyQ(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolyQ({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_laurent(other) - self

    def __mul__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers: invert explicitly")
        out = LaurentPolyQ.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k):
        """Multiply by q**k."""
        return LaurentPolyQ({e + k: c for e, c in self._terms.items()})

    # -- specializations ----------------------------------------------------

    def eval_q1(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def min_exp(self):
        return min(self._terms) if self._terms else 0

    def max_exp(self):
        return max(self._terms) if self._terms else 0

    def as_int_terms(self):
        """Terms as {exp: int}; raises if any coefficient is not integral."""
        out = {}
        for e, c in self._terms.items():
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            out[e] = c.numerator
        return out

    # -- io ------------------------------------------------------------------

    def to_json(self):
        return [[e, f"{c.numerator}/{c.denominator}"]
                for e, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data):
        return cls({int(e): Fraction(s) for e, s in data})

    def __repr__(self):
        if not self._terms:
            return "0"
        bits = []
        for e, c in sorted(self._terms.items()):
            if e == 0:
                bits.append(str(c))
            elif e == 1:
                bits.append(f"{c}*q")
            else:
                bits.append(f"{c}*q^{e}")
        return " + ".join(bits)


def _as_laurent(x):
    if isinstance(x, LaurentPolyQ):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPolyQ.from_scalar(x)
    return NotImplemented


def qint(m: int) -> LaurentPolyQ:
    """The q-integer [m]_q = 1 + q + ... + q^(m-1); [0]_q = 0."""
    if m < 0:
        raise ValueError("qint needs m >= 0")
    return LaurentPolyQ({e: Fraction(1) for e in range(m)})


def laurent_arith(a: LaurentPolyQ, b: LaurentPolyQ, op: str) -> LaurentPolyQ:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def eval_q1(a: LaurentPolyQ) -> Fraction:
    return a.eval_q1()


# ---------------------------------------------------------------------------
# Integer polynomials in q, t
# ---------------------------------------------------------------------------

class PolyQT:
    """Sparse integer polynomial in q and t with non-negative exponents."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in terms.items():
                c = int(c)
                if c:
                    qe, te = key
                    if qe < 0 or te < 0:
                        raise ValueError("PolyQT exponents must be >= 0")
                    clean[(qe, te)] = c
        self._terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def from_int(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, qe, te, c=1):
        return cls({(qe, te): c})

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = PolyQT.from_int(other)
        if not isinstance(other, PolyQT):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        other = _as_qt(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return PolyQT(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyQT({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_qt(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_qt(other) - self

    def __mul__(self, other):
        other = _as_qt(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for (q1, t1), c1 in self._terms.items():
            for (q2, t2), c2 in other._terms.items():
                k = (q1 + q2, t1 + t2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return PolyQT(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = PolyQT.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def q_degree(self):
        return max((k[0] for k in self._terms), default=-1)

    def t_degree(self):
        return max((k[1] for k in self._terms), default=-1)

    def swap_qt(self):
        return PolyQT({(te, qe): c for (qe, te), c in self._terms.items()})

    def eval_t(self, tval: int):
        """Dense coefficient list in q after substituting t=tval."""
        if not self._terms:
            return []
        out = [0] * (self.q_degree() + 1)
        for (qe, te), c in self._terms.items():
            out[qe] += c * tval ** te
        while out and out[-1] == 0:
            out.pop()
        return out

    def eval_qt(self, qval: int, tval: int) -> int:
        return sum(c * qval ** qe * tval ** te
                   for (qe, te), c in self._terms.items())

    def leading_grlex(self):
        """(monomial, coeff) for the graded-lex (q > t) leading term."""
        key = max(self._terms, key=lambda k: (k[0] + k[1], k[0]))
        return key, self._terms[key]

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = _int_gcd(g, abs(c))
        return g

    def divexact_int(self, d: int):
        out = {}
        for k, c in self._terms.items():
            if c % d:
                raise ValueError("inexact integer division")
            out[k] = c // d
        return PolyQT(out)

    def to_json(self):
        return [[qe, te, c] for (qe, te), c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data):
        return cls({(int(qe), int(te)): int(c) for qe, te, c in data})

    def __repr__(self):
        if not self._terms:
            return "0"
        bits = []
        for (qe, te), c in sorted(self._terms.items()):
            mono = "".join(
                [f"q^{qe}" if qe > 1 else "q" * min(qe, 1),
                 f"t^{te}" if te > 1 else "t" * min(te, 1)])
            bits.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(bits)


def _as_qt(x):
    if isinstance(x, PolyQT):
        return x
    if isinstance(x, int):
        return PolyQT.from_int(x)
    return NotImplemented


# ---------------------------------------------------------------------------
# Polynomial gcd machinery (fraction-free, integer coefficients throughout)
# ---------------------------------------------------------------------------
# Z[t] values are dense int lists without trailing zeros; Z[t][q] values are
# dense-in-q lists of such lists.  Only used to canonicalize RatFuncQT, so
# simplicity beats speed here.

def _zt_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zt_add(a, b):
    n = max(len(a), len(b))
    return _zt_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                     for i in range(n)])


def _zt_neg(a):
    return [-c for c in a]


def _zt_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _zt_trim(out)


def _zt_content(a):
    g = 0
    for c in a:
        g = _int_gcd(g, abs(c))
    return g


def _zt_scale(a, k):
    return [c * k for c in a]


def _zt_divexact_int(a, d):
    return [c // d for c in a]


def _zt_prem(a, b):
    """Pseudo-remainder of a by b in Z[t]: lc(b)^(da-db+1) * a mod b."""
    da, db = len(a) - 1, len(b) - 1
    lc = b[-1]
    r = list(a)
    for i in range(da - db, -1, -1):
        head = r[db + i]            # capture before scaling (Knuth R)
        r = _zt_scale(r, lc)
        if head:
            for j in range(db + 1):
                r[i + j] -= head * b[j]
    return _zt_trim(r)


def _zt_gcd(a, b):
    a, b = list(a), list(b)
    if not a:
        return _zt_normalize_sign(b)
    if not b:
        return _zt_normalize_sign(a)
    ca, cb = _zt_content(a), _zt_content(b)
    a = _zt_divexact_int(a, ca)
    b = _zt_divexact_int(b, cb)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _zt_prem(a, b)
        a, b = b, r
        if b:
            b = _zt_divexact_int(b, _zt_content(b))
    g = _zt_scale(a, _int_gcd(ca, cb))
    return _zt_normalize_sign(g)


def _zt_normalize_sign(a):
    return _zt_neg(a) if a and a[-1] < 0 else list(a)


def _ztq_from_polyqt(p: PolyQT):
    if p.is_zero():
        return []
    out = [[] for _ in range(p.q_degree() + 1)]
    for (qe, te), c in p.terms.items():
        row = out[qe]
        if len(row) <= te:
            row.extend([0] * (te + 1 - len(row)))
        row[te] = c
    return [_zt_trim(r) for r in out]


def _ztq_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _ztq_to_polyqt(a):
    terms = {}
    for qe, row in enumerate(a):
        for te, c in enumerate(row):
            if c:
                terms[(qe, te)] = c
    return PolyQT(terms)


def _ztq_content(a):
    g = []
    for row in a:
        if row:
            g = _zt_gcd(g, row)
    return g


def _ztq_scale(a, k):
    return [_zt_mul(row, k) for row in a]


def _ztq_prem(a, b):
    da, db = len(a) - 1, len(b) - 1
    lc = b[-1]
    r = [list(row) for row in a]
    for i in range(da - db, -1, -1):
        head = r[db + i]            # capture before scaling (Knuth R)
        r = _ztq_scale(r, lc)
        if head:
            for j in range(db + 1):
                r[i + j] = _zt_add(r[i + j], _zt_neg(_zt_mul(head, b[j])))
    return _ztq_trim(r)


def _ztq_divexact_zt(a, d):
    """Divide every Z[t] coefficient of a by d exactly."""
    return [_zt_divexact(row, d) for row in a]


def _zt_divexact(a, b):
    """Exact division in Z[t]; raises ValueError if not divisible."""
    if not a:
        return []
    if not b:
        raise ZeroDivisionError
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        head = a[len(b) - 1 + i]
        if head % b[-1]:
            raise ValueError("inexact division in Z[t]")
        c = head // b[-1]
        out[i] = c
        if c:
            for j in range(len(b)):
                a[i + j] -= c * b[j]
    if any(a):
        raise ValueError("inexact division in Z[t]")
    return _zt_trim(out)


def polyqt_gcd(p: PolyQT, r: PolyQT) -> PolyQT:
    """GCD in Z[q,t] via a fraction-free primitive remainder sequence."""
    if p.is_zero():
        return _gcd_normalize(r)
    if r.is_zero():
        return _gcd_normalize(p)
    a, b = _ztq_from_polyqt(p), _ztq_from_polyqt(r)
    ca, cb = _ztq_content(a), _ztq_content(b)
    a = _ztq_divexact_zt(a, ca)
    b = _ztq_divexact_zt(b, cb)
    if len(a) < len(b):
        a, b = b, a
    while b:
        rr = _ztq_prem(a, b)
        a, b = b, rr
        if b:
            b = _ztq_divexact_zt(b, _ztq_content(b))
    g = _ztq_scale(a, _zt_gcd(ca, cb))
    return _gcd_normalize(_ztq_to_polyqt(g))


def _gcd_normalize(p: PolyQT) -> PolyQT:
    if p.is_zero():
        return p
    _, lead = p.leading_grlex()
    return -p if lead < 0 else p


def polyqt_divexact(a: PolyQT, b: PolyQT) -> PolyQT:
    """Exact division in Z[q,t]; raises ValueError when b does not divide a."""
    if a.is_zero():
        return a
    if b.is_zero():
        raise ZeroDivisionError
    num, den = _ztq_from_polyqt(a), _ztq_from_polyqt(b)
    if len(num) < len(den):
        raise ValueError("inexact division in Z[q,t]")
    out = [[] for _ in range(len(num) - len(den) + 1)]
    for i in range(len(num) - len(den), -1, -1):
        head = num[len(den) - 1 + i]
        c = _zt_divexact(head, den[-1]) if head else []
        out[i] = c
        if c:
            for j in range(len(den)):
                num[i + j] = _zt_add(num[i + j], _zt_neg(_zt_mul(c, den[j])))
    if any(row for row in num):
        raise ValueError("inexact division in Z[q,t]")
    return _ztq_to_polyqt(out)


# ---------------------------------------------------------------------------
# Canonical rational functions in q, t
# ---------------------------------------------------------------------------

class RatFuncQT:
    """num/den over Z[q,t] in canonical form.

    gcd(num, den) = 1 (including integer content) and the graded-lex (q > t)
    leading coefficient of den is positive, so equality is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: PolyQT, den: PolyQT | None = None, *, _canonical=False):
        den = PolyQT.one() if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _canonical:
            num, den = _ratfunc_reduce(num, den)
        self.num = num
        self.den = den

    @classmethod
    def zero(cls):
        return cls(PolyQT.zero(), PolyQT.one(), _canonical=True)

    @classmethod
    def one(cls):
        return cls(PolyQT.one(), PolyQT.one(), _canonical=True)

    @classmethod
    def from_int(cls, c):
        return cls(PolyQT.from_int(c), PolyQT.one(), _canonical=True)

    @classmethod
    def from_polyqt(cls, p: PolyQT):
        return cls(p, PolyQT.one(), _canonical=True)

    @classmethod
    def from_laurent(cls, a: LaurentPolyQ):
        """Embed Q[q, 1/q] by clearing q-powers and integer denominators."""
        if a.is_zero():
            return cls.zero()
        shift = max(0, -a.min_exp())
        denom = 1
        for c in a.terms.values():
            denom = denom * c.denominator // _int_gcd(denom, c.denominator)
        num = PolyQT({(e + shift, 0): c.numerator * (denom // c.denominator)
                      for e, c in a.terms.items()})
        return cls(num, PolyQT.monomial(shift, 0, denom))

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFuncQT(self.num + other.num, self.den)
        return RatFuncQT(self.num * other.den + other.num * self.den,
                         self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncQT(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_ratfunc(other) - self

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFuncQT(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero RatFuncQT")
        return RatFuncQT(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_ratfunc(other) / self

    def as_polyqt(self) -> PolyQT:
        """The underlying polynomial; raises if the denominator is not 1."""
        if self.den != PolyQT.one():
            raise ValueError(f"not polynomial: denominator {self.den!r}")
        return self.num

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(PolyQT.from_json(data["num"]), PolyQT.from_json(data["den"]))

    def __repr__(self):
        if self.den == PolyQT.one():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def _ratfunc_reduce(num, den):
    if num.is_zero():
        return num, PolyQT.one()
    g = polyqt_gcd(num, den)
    if g != PolyQT.one():
        num = polyqt_divexact(num, g)
        den = polyqt_divexact(den, g)
    _, lead = den.leading_grlex()
    if lead < 0:
        num, den = -num, -den
    return num, den


def _as_ratfunc(x):
    if isinstance(x, RatFuncQT):
        return x
    if isinstance(x, int):
        return RatFuncQT.from_int(x)
    if isinstance(x, PolyQT):
        return RatFuncQT.from_polyqt(x)
    if isinstance(x, LaurentPolyQ):
        return RatFuncQT.from_laurent(x)
    return NotImplemented


def ratfunc_arith(a: RatFuncQT, b: RatFuncQT, op: str) -> RatFuncQT:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def as_qt_coeff(x) -> RatFuncQT:
    """Coerce any supported coefficient into RatFuncQT."""
    r = _as_ratfunc(x)
    if r is NotImplemented:
        if isinstance(x, Fraction):
            return RatFuncQT(PolyQT.from_int(x.numerator),
                             PolyQT.from_int(x.denominator))
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFuncQT")
    return r
