"""Exact spectral certification for graphs.

Characteristic polynomials are computed by Hessenberg reduction modulo several
word-sized primes and lifted with the Chinese remainder theorem.  Every claim
about eigenvalues (equalities, multiplicities, sign conditions) is decided by
integer arithmetic: Sturm sequences for root counting, polynomial gcds for
shared roots, and fraction-free elimination for ranks.  Floating point
eigenvalues are only used to seed the location of an isolating interval; the
interval is then certified exactly.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .graph import Graph

DEFAULT_WIDTH = Fraction(1, 2**30)


class UnsupportedInput(ValueError):
    pass


# ---------------------------------------------------------------- polynomials


class IntPoly:
    """Polynomial with integer coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def from_roots(cls, roots: Sequence[int]) -> "IntPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = "" if (a == 1 and i > 0) else str(a)
            if i >= 1:
                body += "t" if i == 1 else f"t^{i}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> "IntPoly":
        return IntPoly([-x for x in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([other * x for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly([])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        out = IntPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Divide by the content; leading coefficient made positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lead < 0:
            g = -g
        return IntPoly([c // g for c in self.coeffs])

    def reflect(self) -> "IntPoly":
        """p(-t)."""
        return IntPoly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def scale_roots(self, s: int) -> "IntPoly":
        """Integer polynomial whose roots are s times the roots of p: s^d p(t/s)."""
        d = self.degree
        return IntPoly([c * s ** (d - i) for i, c in enumerate(self.coeffs)])

    def shift(self, r: int) -> "IntPoly":
        """p(t + r)."""
        out = IntPoly([])
        lin = IntPoly([r, 1])
        for c in reversed(self.coeffs):
            out = out * lin + IntPoly([c])
        return out

    def sign_at(self, x: Fraction | int) -> int:
        """Sign of p(x) for rational x, in integer arithmetic."""
        x = Fraction(x)
        return _sign_at(self.coeffs, x.numerator, x.denominator)

    def pseudo_remainder(self, other: "IntPoly") -> "IntPoly":
        """lc(other)^(deg a - deg b + 1) * a mod other."""
        if other.is_zero():
            raise ZeroDivisionError("pseudo-division by zero polynomial")
        r = list(self.coeffs)
        b = other.coeffs
        db = other.degree
        lb = other.lead
        e = len(r) - 1 - db + 1
        if e <= 0:
            return IntPoly(r)
        while r and len(r) - 1 >= db:
            lr = r[-1]
            shift = len(r) - 1 - db
            r = [lb * x for x in r]
            for i, y in enumerate(b):
                r[shift + i] -= lr * y
            while r and r[-1] == 0:
                r.pop()
            e -= 1
        return IntPoly([x * lb**e for x in r])

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Quotient self / other; the division must be exact over the integers."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self.coeffs)
        db = other.degree
        lb = other.lead
        b = other.coeffs
        q = [0] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            lr = r[-1]
            if lr % lb:
                raise ArithmeticError("inexact polynomial division")
            f = lr // lb
            shift = len(r) - 1 - db
            q[shift] = f
            for i, y in enumerate(b):
                r[shift + i] -= f * y
            while r and r[-1] == 0:
                r.pop()
        if r:
            raise ArithmeticError("inexact polynomial division")
        return IntPoly(q)

    def squarefree_part(self) -> "IntPoly":
        if self.degree <= 0:
            return self.primitive()
        return self.primitive().exact_div(poly_gcd(self, self.derivative()))


def _sign_at(coeffs: Sequence[int], a: int, b: int) -> int:
    # sign of sum c_i a^i b^(d-i), with b > 0
    if not coeffs:
        return 0
    acc = coeffs[-1]
    bp = 1
    for c in reversed(coeffs[:-1]):
        bp *= b
        acc = acc * a + c * bp
    return (acc > 0) - (acc < 0)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive remainder sequence)."""
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    r0, r1 = a.primitive(), b.primitive()
    if r0.degree < r1.degree:
        r0, r1 = r1, r0
    while not r1.is_zero():
        if r1.degree == 0:
            return IntPoly([1])
        r = r0.pseudo_remainder(r1)
        r0, r1 = r1, r.primitive()
    return r0.primitive()


def _prem_signed(a: IntPoly, b: IntPoly) -> IntPoly:
    """Positive multiple of the true remainder of a by b."""
    r = a.pseudo_remainder(b)
    delta = a.degree - b.degree
    if b.lead < 0 and (delta + 1) % 2 == 1:
        r = -r
    return r


def sturm_chain(p: IntPoly) -> tuple[tuple[int, ...], ...]:
    """Sturm sequence of a square-free polynomial, reduced to primitive parts."""
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    chain = [p.primitive()]
    if p.degree == 0:
        return (chain[0].coeffs,)
    chain.append(p.derivative().primitive())
    while chain[-1].degree > 0:
        r = _prem_signed(chain[-2], chain[-1])
        if r.is_zero():
            break
        r = -r
        g = r.content()
        chain.append(IntPoly([c // g for c in r.coeffs]))
    return tuple(q.coeffs for q in chain)


def _variations(chain, x: Fraction | None, sign_inf: int = 0) -> int:
    prev = 0
    count = 0
    for coeffs in chain:
        if x is None:
            d = len(coeffs) - 1
            s = 1 if coeffs[-1] > 0 else -1
            if sign_inf < 0 and d % 2 == 1:
                s = -s
        else:
            s = _sign_at(coeffs, x.numerator, x.denominator)
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


@dataclass(frozen=True)
class RationalInterval:
    """Half-open interval (lo, hi] with exact rational end points."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError("interval with lo > hi")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.mid)

    def contains(self, x) -> bool:
        return self.lo < x <= self.hi

    def scaled(self, s: int) -> "RationalInterval":
        a, b = self.lo * s, self.hi * s
        return RationalInterval(min(a, b), max(a, b))


def cauchy_bound(p: IntPoly) -> Fraction:
    """Every real root lies strictly inside (-B, B)."""
    lead = abs(p.lead)
    return Fraction(max((abs(c) for c in p.coeffs[:-1]), default=0), lead) + 1


class RootCounter:
    """Sturm-based root counting and isolation for one polynomial.

    ``hints`` are floating point approximations of the real roots used only to
    place candidate intervals; every interval returned is verified by counting.
    """

    def __init__(self, p: IntPoly, hints: Sequence[float] | None = None):
        if p.is_zero():
            raise ValueError("zero polynomial")
        self.poly = p
        self.sqfree = p.squarefree_part()
        self.chain = sturm_chain(self.sqfree)
        self.bound = cauchy_bound(self.sqfree)
        self.hints = sorted(hints) if hints is not None else None
        self._cache: dict[Fraction, int] = {}

    def _v(self, x: Fraction) -> int:
        v = self._cache.get(x)
        if v is None:
            v = _variations(self.chain, x)
            self._cache[x] = v
        return v

    def count(self, lo, hi) -> int:
        """Distinct real roots in (lo, hi]."""
        lo, hi = Fraction(lo), Fraction(hi)
        if lo >= hi:
            return 0
        return self._v(lo) - self._v(hi)

    def total(self) -> int:
        return _variations(self.chain, None, -1) - _variations(self.chain, None, 1)

    def is_root(self, x) -> bool:
        return self.sqfree.sign_at(Fraction(x)) == 0

    def isolate_extreme(self, which: str, width: Fraction = DEFAULT_WIDTH) -> RationalInterval:
        """Interval (lo, hi] holding exactly one root, the largest or smallest one."""
        if self.total() == 0:
            raise UnsupportedInput("polynomial has no real roots")
        top = which == "max"
        B = self.bound
        iv = None
        if self.hints:
            x = Fraction(self.hints[-1] if top else self.hints[0])
            d = Fraction(1, 2**20) * max(1, abs(x))
            lo, hi = x - d, x + d
            if top:
                if self.count(hi, B) == 0 and self.count(lo, hi) >= 1:
                    iv = (lo, hi)
            elif self.count(-B, lo) == 0 and self.count(lo, hi) >= 1:
                iv = (lo, hi)
        if iv is None:
            iv = (-B, B)
        lo, hi = iv
        while self.count(lo, hi) > 1 or hi - lo > width:
            mid = _dyadic_mid(lo, hi)
            upper = self.count(mid, hi)
            if top:
                if upper >= 1:
                    lo = mid
                else:
                    hi = mid
            else:
                if self.count(lo, mid) >= 1:
                    hi = mid
                else:
                    lo = mid
        return RationalInterval(lo, hi)

    def refine(self, iv: RationalInterval, width: Fraction) -> RationalInterval:
        """Shrink an interval that holds exactly one root."""
        lo, hi = iv.lo, iv.hi
        while hi - lo > width:
            mid = _dyadic_mid(lo, hi)
            if self.count(mid, hi) >= 1:
                lo = mid
            else:
                hi = mid
        return RationalInterval(lo, hi)

    def isolate_all(self, width: Fraction = DEFAULT_WIDTH) -> list[RationalInterval]:
        """Disjoint intervals, one per distinct real root, ascending."""
        n_roots = self.total()
        out: list[RationalInterval] = []
        if self.hints:
            vals = []
            for x in self.hints:
                if not vals or x - vals[-1] > 1e-7 * max(1.0, abs(x)):
                    vals.append(x)
            if len(vals) == n_roots:
                cand = []
                for i, x in enumerate(vals):
                    gaps = [abs(x - y) for y in (vals[i - 1] if i else None, vals[i + 1] if i + 1 < len(vals) else None) if y is not None]
                    d = min([g / 3 for g in gaps] + [2.0**-20])
                    fx = Fraction(x)
                    fd = Fraction(d)
                    cand.append(RationalInterval(fx - fd, fx + fd))
                if all(self.count(c.lo, c.hi) == 1 for c in cand):
                    return [self.refine(c, width) for c in cand]
        stack = [(-self.bound, self.bound)]
        while stack:
            lo, hi = stack.pop()
            k = self.count(lo, hi)
            if k == 0:
                continue
            if k == 1:
                out.append(self.refine(RationalInterval(lo, hi), width))
                continue
            mid = _dyadic_mid(lo, hi)
            stack.append((lo, mid))
            stack.append((mid, hi))
        out.sort(key=lambda r: r.lo)
        return out


def _dyadic_mid(lo: Fraction, hi: Fraction) -> Fraction:
    return (lo + hi) / 2


def count_roots(p: IntPoly, iv: RationalInterval) -> int:
    """Number of distinct real roots of p in (lo, hi]."""
    return _counter(p).count(iv.lo, iv.hi)


@lru_cache(maxsize=8192)
def _counter(p: IntPoly) -> RootCounter:
    return RootCounter(p)


def extreme_roots_equal(p: IntPoly, q: IntPoly, which: str = "max",
                        p_hints: Sequence[float] | None = None,
                        q_hints: Sequence[float] | None = None) -> bool:
    """Decide exactly whether the largest (or smallest) real roots of p and q coincide."""
    if which == "min":
        neg = lambda h: None if h is None else [-x for x in h]
        return extreme_roots_equal(p.reflect(), q.reflect(), "max", neg(p_hints), neg(q_hints))
    rp = RootCounter(p, p_hints)
    rq = RootCounter(q, q_hints)
    if rp.total() == 0 or rq.total() == 0:
        return False
    g = poly_gcd(rp.sqfree, rq.sqfree)
    if g.degree <= 0:
        return False
    rg = RootCounter(g)
    iv = rp.isolate_extreme("max", Fraction(1, 2**20))
    # shrink until q also has at most one root inside
    lo, hi = iv.lo, iv.hi
    while rq.count(lo, hi) > 1:
        mid = _dyadic_mid(lo, hi)
        if rp.count(mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    if rg.count(lo, hi) == 0:
        return False
    # the top root of p is a root of q; nothing of q may lie above it
    return rq.count(hi, rq.bound) == 0


# ----------------------------------------------------- characteristic polynomial


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes_below(limit: int, count: int) -> list[int]:
    out = []
    x = limit - 1
    while len(out) < count:
        if _is_prime(x):
            out.append(x)
        x -= 2 if x % 2 else 1
    return out


_PRIMES = _primes_below(2**31, 64)


def _charpoly_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Characteristic polynomial of a (mod p) by Hessenberg reduction, constant first."""
    n = a.shape[0]
    h = a % p
    for j in range(n - 2):
        col = h[j + 1:, j]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        i = j + 1 + int(nz[0])
        if i != j + 1:
            h[[i, j + 1], :] = h[[j + 1, i], :]
            h[:, [i, j + 1]] = h[:, [j + 1, i]]
        inv = pow(int(h[j + 1, j]), p - 2, p)
        u = (h[j + 2:, j] * inv) % p
        if not u.any():
            continue
        h[j + 2:, :] = (h[j + 2:, :] - (u[:, None] * h[j + 1, :][None, :]) % p) % p
        h[:, j + 1] = (h[:, j + 1] + ((h[:, j + 2:] * u[None, :]) % p).sum(axis=1)) % p
    polys = [np.zeros(n + 1, dtype=np.int64)]
    polys[0][0] = 1
    for k in range(n):
        prev = polys[k]
        new = np.zeros(n + 1, dtype=np.int64)
        new[1:] = prev[:-1]
        new = (new - (int(h[k, k]) * prev) % p) % p
        prod = 1
        for i in range(k - 1, -1, -1):
            prod = prod * int(h[i + 1, i]) % p
            if prod == 0:
                break
            f = int(h[i, k]) * prod % p
            if f:
                new = (new - (f * polys[i]) % p) % p
        polys.append(new)
    return polys[n]


def char_poly_of_matrix(m: Sequence[Sequence[int]]) -> IntPoly:
    """det(tI - M) for an integer matrix."""
    n = len(m)
    if n == 0:
        return IntPoly([1])
    rowsum = max(sum(abs(int(x)) for x in row) for row in m)
    bound = (1 + rowsum) ** n
    a = np.array(m, dtype=np.int64)
    modulus = 1
    residues: list[int] | None = None
    for p in _PRIMES:
        r = [int(x) for x in _charpoly_mod(a.copy(), p)]
        if residues is None:
            residues = r
        else:
            # CRT combine: x = residues (mod modulus), x = r (mod p)
            inv = pow(modulus % p, p - 2, p)
            residues = [x + modulus * (((y - x) * inv) % p) for x, y in zip(residues, r)]
        modulus *= p
        if modulus > 2 * bound:
            break
    else:
        raise ArithmeticError("coefficient bound exceeds available primes")
    half = modulus // 2
    return IntPoly([x - modulus if x > half else x for x in residues])


@lru_cache(maxsize=16384)
def char_poly(g: Graph) -> IntPoly:
    """Characteristic polynomial det(tI - A) of the adjacency matrix."""
    return char_poly_of_matrix(g.adjacency_matrix())


def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free elimination (independent of char_poly)."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def exact_rank(m: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free elimination."""
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    rank = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        for i in range(rank + 1, rows):
            f = a[i][c]
            ri, rr = a[i], a[rank]
            for j in range(c, cols):
                ri[j] = (ri[j] * p - f * rr[j]) // prev
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


# ------------------------------------------------------------ graph predicates


def eigenvalues(g: Graph) -> list[float]:
    """Floating point spectrum, ascending (location hints and test oracle only)."""
    if g.n == 0:
        return []
    return [float(x) for x in np.linalg.eigvalsh(np.array(g.adjacency_matrix(), dtype=float))]


@lru_cache(maxsize=16384)
def _graph_counter(g: Graph) -> RootCounter:
    return RootCounter(char_poly(g), eigenvalues(g))


def extreme_eigenvalue_interval(g: Graph, which: str = "max", width: Fraction = DEFAULT_WIDTH) -> RationalInterval:
    if g.n == 0:
        raise UnsupportedInput("empty graph has no eigenvalues")
    if which not in ("max", "min"):
        raise ValueError("which must be 'max' or 'min'")
    return _graph_counter(g).isolate_extreme(which, Fraction(width))


def lambda_min_geq(g: Graph, bound) -> bool:
    """True iff no eigenvalue lies strictly below ``bound``."""
    if g.n == 0:
        return True
    rc = _graph_counter(g)
    b = Fraction(bound)
    below = rc.count(-rc.bound, b) - (1 if rc.is_root(b) else 0)
    return below == 0 if b > -rc.bound else True


def multiplicity_at(g: Graph, r) -> int:
    """Dimension of the eigenspace for the rational r, via exact rank of A - rI."""
    r = Fraction(r)
    a, b = r.numerator, r.denominator
    m = [[b * x for x in row] for row in g.adjacency_matrix()]
    for i in range(g.n):
        m[i][i] -= a
    return g.n - exact_rank(m)


def integer_eigenvalue(g: Graph, which: str) -> int | None:
    """The extreme eigenvalue if it is an integer, else None (decided exactly)."""
    if g.n == 0:
        return None
    ev = eigenvalues(g)
    x = round(ev[-1] if which == "max" else ev[0])
    rc = _graph_counter(g)
    if not rc.is_root(x):
        return None
    if which == "max":
        return x if rc.count(x, rc.bound) == 0 else None
    return x if rc.count(-rc.bound, x) == 1 else None


def integer_radius_certify(g: Graph, t: int) -> bool:
    """True iff lambda_max(g) equals the integer t exactly."""
    if g.n == 0:
        return False
    rc = _graph_counter(g)
    return rc.is_root(t) and rc.count(t, max(rc.bound, Fraction(t) + 1)) == 0


def perron_vector_rational(g: Graph) -> list[Fraction]:
    """Positive eigenvector for an integral spectral radius, minimum entry 1."""
    if g.n == 0 or not g.is_connected():
        raise UnsupportedInput("Perron vector requires a connected non-empty graph")
    lam = integer_eigenvalue(g, "max")
    if lam is None:
        raise UnsupportedInput("spectral radius is not an integer")
    n = g.n
    a = [[Fraction(x) for x in row] for row in g.adjacency_matrix()]
    for i in range(n):
        a[i][i] -= lam
    # reduced row echelon form
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(n):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise UnsupportedInput("eigenspace of the spectral radius is not one-dimensional")
    f = free[0]
    x = [Fraction(0)] * n
    x[f] = Fraction(1)
    for row, c in enumerate(pivots):
        x[c] = -a[row][f]
    if x[0] < 0:
        x = [-v for v in x]
    low = min(x)
    if low <= 0:
        raise ArithmeticError("kernel vector is not positive")
    return [v / low for v in x]


def negated_radius_is_eigenvalue(g: Graph) -> bool:
    """True iff -lambda_max(g) is an eigenvalue of g."""
    if g.n == 0:
        return False
    p = char_poly(g)
    rc = _graph_counter(g)
    q = p.reflect()
    common = poly_gcd(p, q)
    if common.degree <= 0:
        return False
    iv = rc.isolate_extreme("max", Fraction(1, 2**20))
    return RootCounter(common).count(iv.lo, iv.hi) >= 1


def scaled_radius_relation(g: Graph, m: int) -> bool:
    """True iff lambda_max(g) = -(m-1) * lambda_min(g), decided exactly."""
    if g.n == 0 or m < 2:
        return False
    p = char_poly(g)
    s = m - 1
    ev = eigenvalues(g)
    q = p.scale_roots(-s)
    return extreme_roots_equal(p, q, "max", ev, [-s * x for x in ev])


# ------------------------------------------------------------- fingerprints


@dataclass(frozen=True)
class SpectrumFingerprint:
    poly: IntPoly
    entries: tuple[tuple[RationalInterval, int], ...]  # descending eigenvalues

    @property
    def values(self) -> list[float]:
        return [float(iv.mid) for iv, _ in self.entries]

    @property
    def multiplicities(self) -> list[int]:
        return [k for _, k in self.entries]

    def display(self, digits: int = 4) -> str:
        parts = []
        for iv, k in self.entries:
            v = round(float(iv.mid), digits)
            if v == 0:
                v = 0.0
            txt = f"{v:.{digits}f}".rstrip("0").rstrip(".")
            parts.append(txt if k == 1 else f"{txt}^{k}")
        return ", ".join(parts)


def multiplicity_chain(p: IntPoly) -> list[IntPoly]:
    """p, gcd(p, p'), gcd of that with its derivative, ... (until constant)."""
    out = [p]
    while out[-1].degree > 0:
        q = out[-1]
        out.append(poly_gcd(q, q.derivative()))
    return out[:-1]


def fingerprint(g: Graph, width: Fraction = DEFAULT_WIDTH) -> SpectrumFingerprint:
    p = char_poly(g)
    rc = _graph_counter(g)
    ivs = rc.isolate_all(Fraction(width))
    chain = [RootCounter(q) for q in multiplicity_chain(p)]
    entries = []
    for iv in ivs:
        k = sum(1 for c in chain if c.count(iv.lo, iv.hi) >= 1)
        entries.append((iv, k))
    entries.reverse()
    if sum(k for _, k in entries) != g.n:
        raise ArithmeticError("multiplicities do not sum to the order")
    return SpectrumFingerprint(p, tuple(entries))
