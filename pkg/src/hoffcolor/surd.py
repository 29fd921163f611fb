"""Spectra with quadratic-surd entries, compared exactly to characteristic polynomials.

A value a + b*sqrt(d) with b != 0 must appear together with its conjugate
a - b*sqrt(d) at equal multiplicity; the pair contributes the integer factor
t^2 - 2a t + (a^2 - b^2 d).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .exactspec import IntPoly


@dataclass(frozen=True)
class Surd:
    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 1

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def conjugate(self) -> "Surd":
        return Surd(self.a, -self.b, self.d)

    @property
    def rational(self) -> bool:
        return self.b == 0


_PHI = Surd(Fraction(1, 2), Fraction(1, 2), 5)
_ATOM = re.compile(r"^(?P<sign>[+-]?)(?P<coef>\d*)(?P<name>sqrt(?P<d>\d+)|phi)?$")


def _atom(tok: str) -> Surd:
    m = _ATOM.match(tok)
    if not m or (not m.group("coef") and not m.group("name")):
        raise ValueError(f"cannot parse spectrum value {tok!r}")
    sign = -1 if m.group("sign") == "-" else 1
    if not m.group("name"):
        return Surd(Fraction(sign * int(m.group("coef"))))
    coef = int(m.group("coef") or 1) * sign
    if m.group("name") == "phi":
        return Surd(_PHI.a * coef, _PHI.b * coef, 5)
    return Surd(Fraction(0), Fraction(coef), int(m.group("d")))


def parse_value(text: str) -> Surd:
    s = text.replace(" ", "").strip("()")
    parts = re.findall(r"[+-]?[^+-]+", s)
    total = Surd(Fraction(0))
    for p in parts:
        x = _atom(p)
        if x.b and total.b and x.d != total.d:
            raise ValueError(f"mixed radicals in {text!r}")
        total = Surd(total.a + x.a, total.b + x.b, x.d if x.b else total.d)
    return total


def parse_spectrum(text: str) -> list[tuple[Surd, int]]:
    out = []
    for item in _split_items(text):
        if "^" in item and not item.endswith(")"):
            val, mult = item.rsplit("^", 1)
            out.append((parse_value(val), int(mult)))
        else:
            out.append((parse_value(item), 1))
    return out


def _split_items(text: str) -> list[str]:
    items, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            items.append(cur.strip())
            cur = ""
        else:
            cur += ch
    if cur.strip():
        items.append(cur.strip())
    return items


def spectrum_polynomial(spec: list[tuple[Surd, int]]) -> IntPoly:
    """The monic integer polynomial with exactly these roots; raises if conjugates are missing."""
    poly = IntPoly((1,))
    pending: dict[tuple[Fraction, Fraction, int], int] = {}
    for val, mult in spec:
        if val.rational:
            if val.a.denominator != 1:
                raise ValueError("non-integral rational eigenvalue")
            poly = poly * IntPoly((-int(val.a), 1)) ** mult
            continue
        key = (val.a, abs(val.b), val.d)
        sign = 1 if val.b > 0 else -1
        pending[key] = pending.get(key, 0) + sign * mult
        s = 2 * val.a
        p = val.a * val.a - val.b * val.b * val.d
        if sign > 0:
            if s.denominator != 1 or p.denominator != 1:
                raise ValueError("surd pair is not an algebraic integer pair")
            poly = poly * IntPoly((int(p), -int(s), 1)) ** mult
    if any(v != 0 for v in pending.values()):
        raise ValueError("a surd eigenvalue lacks its conjugate at equal multiplicity")
    return poly


def spectrum_floats(spec: list[tuple[Surd, int]]) -> list[float]:
    out = []
    for val, mult in spec:
        out += [float(val)] * mult
    return sorted(out)


def spectrum_size(spec: list[tuple[Surd, int]]) -> int:
    return sum(m for _, m in spec)


# ------------------------------------------------------------------ formatting

def _divide_monic(p: IntPoly, q: IntPoly) -> IntPoly | None:
    """p / q when q is monic and divides p exactly, else None."""
    rem = list(p.coeffs)
    dq = q.degree
    if len(rem) - 1 < dq:
        return None
    quot = [0] * (len(rem) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        quot[i - dq] = c
        if c:
            for j, qc in enumerate(q.coeffs):
                rem[i - dq + j] -= c * qc
    if any(rem[:dq]):
        return None
    return IntPoly(quot)


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = f^2 * d with d squarefree."""
    f, d, k = 1, n, 2
    while k * k <= d:
        while d % (k * k) == 0:
            d //= k * k
            f *= k
        k += 1
    return f, d


def exact_roots(poly: IntPoly, approx: list[float]) -> list[tuple[Surd, int]]:
    """Factor a monic polynomial into integer roots and conjugate quadratic surd pairs.

    ``approx`` are numerical roots used only to propose candidates; every
    factor is confirmed by exact division.  Raises if something is left over.
    """
    out: list[tuple[Surd, int]] = []
    rest = poly
    for r in sorted({round(x) for x in approx}):
        lin = IntPoly((-r, 1))
        m = 0
        while (q := _divide_monic(rest, lin)) is not None:
            rest, m = q, m + 1
        if m:
            out.append((Surd(Fraction(r)), m))
    left = sorted(x for x in approx if abs(x - round(x)) > 1e-6)
    used = [False] * len(left)
    for i, x in enumerate(left):
        if used[i] or rest.degree <= 0:
            continue
        for j in range(i + 1, len(left)):
            if used[j]:
                continue
            s, p = x + left[j], x * left[j]
            if abs(s - round(s)) > 1e-6 or abs(p - round(p)) > 1e-6:
                continue
            s, p = round(s), round(p)
            quad = IntPoly((p, -s, 1))
            m = 0
            while (q := _divide_monic(rest, quad)) is not None:
                rest, m = q, m + 1
            if not m:
                continue
            f, d = _squarefree_split(s * s - 4 * p)
            a, b = Fraction(s, 2), Fraction(f, 2)
            out += [(Surd(a, b, d), m), (Surd(a, -b, d), m)]
            cnt = 0
            for k in range(len(left)):
                if not used[k] and cnt < 2 * m and (abs(left[k] - float(Surd(a, b, d))) < 1e-6
                                                     or abs(left[k] - float(Surd(a, -b, d))) < 1e-6):
                    used[k] = True
                    cnt += 1
            break
    if rest.degree > 0:
        raise ValueError("spectrum has eigenvalues of degree above two")
    return sorted(out, key=lambda vm: -float(vm[0]))


def _fmt_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_value(v: Surd) -> str:
    if v.rational:
        return _fmt_frac(v.a)
    if v.d == 5:
        # a + b sqrt5 = (a - b) + 2b phi
        a, b = v.a - v.b, 2 * v.b
        name = "phi"
    else:
        a, b = v.a, v.b
        name = f"sqrt{v.d}"
    coef = "" if abs(b) == 1 else _fmt_frac(abs(b))
    if a == 0:
        return f"{'-' if b < 0 else ''}{coef}{name}"
    return f"({_fmt_frac(a)}{'-' if b < 0 else '+'}{coef}{name})"


def format_spectrum(spec: list[tuple[Surd, int]]) -> str:
    return ", ".join(format_value(v) + (f"^{m}" if m > 1 else "") for v, m in spec)
