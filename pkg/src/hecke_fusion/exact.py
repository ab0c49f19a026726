"""
Exact scalars and univariate rational functions.

Two kinds of base-field scalar are used:

* specialized mode: :class:`fractions.Fraction` (plain ``int`` is accepted
  wherever a scalar is expected);
* generic mode: :class:`GenericScalar`, a rational function in the
  indeterminates q_1..q_m whose denominator is kept as a multiset of linear
  forms ``d + q_s - q_t``.  Generic scalars that happen to be constant are
  demoted to ``Fraction`` so that equality and hashing agree across modes.

:class:`RatFun` is a rational function in a single live indeterminate ``z``
over either kind of scalar.  Its denominator is stored as a multiset of roots
(a monic product of ``z - c``) and every instance is in lowest terms.

>>> z = RatFun.z()
>>> ((z * z - 1) / (z - 1)).substitute(1)
Fraction(2, 1)
>>> q1, q2 = GenericScalar.variables(2)
>>> ((1 + q1 - q2) * (2 + q1 - q2)) / (1 + q1 - q2)
GenericScalar('q1 - q2 + 2')
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Iterable, Sequence, Union

from .errors import (
    DivisionByZero,
    NonAdmissibleDivisor,
    PoleAtEvaluationPoint,
    SeparationViolated,
)

__all__ = [
    "GenericScalar", "RatFun", "Parameters", "Scalar",
    "scalar_arith", "ratfun_substitute", "separation_value",
    "scalar_key", "as_scalar", "specialize",
]

# search window for the integer shift d when splitting a generic numerator
FORM_SEARCH_BOUND = 64

# sample point used to pretest candidate linear factors before exact division
_PROBE = (Fraction(7, 3), Fraction(-11, 5), Fraction(13, 7), Fraction(-17, 11),
          Fraction(19, 13), Fraction(-23, 17), Fraction(29, 19), Fraction(-31, 23))


# ---------------------------------------------------------------------------
# sparse multivariate polynomials: dict {exponent tuple: Fraction}
# ---------------------------------------------------------------------------

def _mono(nvars: int, i: int | None = None) -> tuple[int, ...]:
    e = [0] * nvars
    if i is not None:
        e[i] = 1
    return tuple(e)


def _padd(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) + sign * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _pscale(a: dict, c) -> dict:
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            w = out.get(k, 0) + va * vb
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return out


def _form_poly(form: tuple[int, int, int], nvars: int) -> dict:
    d, s, t = form
    p = {_mono(nvars, s): Fraction(1), _mono(nvars, t): Fraction(-1)}
    if d:
        p[_mono(nvars)] = Fraction(d)
    return p


def _peval(p: dict, point: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for k, v in p.items():
        term = v
        for x, e in zip(point, k):
            if e:
                term *= x ** e
        total += term
    return total


def _pdiv_form(p: dict, form: tuple[int, int, int]) -> dict | None:
    """Exact quotient p / (d + q_s - q_t), or None when the form does not divide p."""
    d, s, t = form
    # view p as a polynomial in q_s and divide by (q_s - a), a = q_t - d
    by_deg: dict[int, dict] = {}
    for k, v in p.items():
        e = k[s]
        kk = k[:s] + (0,) + k[s + 1:]
        by_deg.setdefault(e, {})[kk] = v
    top = max(by_deg)
    if top == 0:
        return None

    def times_a(c: dict) -> dict:
        out: dict = {}
        for k, v in c.items():
            kt = k[:t] + (k[t] + 1,) + k[t + 1:]
            out[kt] = out.get(kt, 0) + v
            if d:
                out[k] = out.get(k, 0) - d * v
        return {k: v for k, v in out.items() if v}

    quot: dict[int, dict] = {top - 1: by_deg[top]}
    for e in range(top - 1, 0, -1):
        quot[e - 1] = _padd(by_deg.get(e, {}), times_a(quot[e]))
    if _padd(by_deg.get(0, {}), times_a(quot[0])):
        return None
    out: dict = {}
    for e, c in quot.items():
        for k, v in c.items():
            out[k[:s] + (e,) + k[s + 1:]] = v
    return out


def _lead_key(p: dict) -> tuple[int, ...]:
    return max(p, key=lambda k: (sum(k), k))


def _total_degree(p: dict) -> int:
    return max((sum(k) for k in p), default=0)


def _canon_form(coeffs: dict, d) -> tuple[tuple[int, int, int], Fraction] | None:
    """Recognize c*(d' + q_s - q_t) from a linear poly; returns (form, c)."""
    vars_ = [(i, c) for i, c in coeffs.items()]
    if len(vars_) != 2:
        return None
    (i, ci), (j, cj) = sorted(vars_)
    if ci != -cj:
        return None
    # ci*q_i - ci*q_j + d = ci*(d/ci + q_i - q_j), with i < j
    shift = Fraction(d) / ci
    if shift.denominator != 1:
        return None
    return (int(shift), i, j), Fraction(ci)


def _split_forms(p: dict, nvars: int) -> tuple[Counter, dict]:
    """Peel admissible linear forms off p; returns (found forms, leftover)."""
    found: Counter = Counter()
    if _total_degree(p) == 1:
        lin = {}
        const = Fraction(0)
        for k, v in p.items():
            if sum(k) == 0:
                const = v
            else:
                lin[k.index(1)] = v
        hit = _canon_form(lin, const)
        if hit is None:
            return found, p
        form, c = hit
        found[form] += 1
        return found, {_mono(nvars): c}
    pairs = [(s, t) for s in range(nvars) for t in range(s + 1, nvars)]
    shifts = [0] + [x for k in range(1, FORM_SEARCH_BOUND + 1) for x in (k, -k)]
    probe = list(_PROBE[:nvars]) + [Fraction(3 * i + 1, 2) for i in range(max(0, nvars - len(_PROBE)))]
    progress = True
    while progress and _total_degree(p) > 0:
        progress = False
        for s, t in pairs:
            for d in shifts:
                pt = list(probe)
                pt[s] = pt[t] - d
                if _peval(p, pt):
                    continue
                q = _pdiv_form(p, (d, s, t))
                if q is None:
                    continue
                found[(d, s, t)] += 1
                p = q
                progress = True
                break
            if progress:
                break
    return found, p


def _poly_str(p: dict, names: Sequence[str]) -> str:
    if not p:
        return "0"
    parts = []
    for k in sorted(p, key=lambda k: (-sum(k), tuple(-x for x in k))):
        c = p[k]
        mono = "*".join(
            names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(k) if e
        )
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# generic-mode scalar
# ---------------------------------------------------------------------------

class GenericScalar:
    """
    A nonconstant element of Q(q_1..q_m) of the form num / (const * prod forms).

    ``num`` is a sparse polynomial whose leading coefficient (graded lex) is 1,
    ``den`` is a sorted tuple of ((d, s, t), multiplicity) with ``s < t``
    (0-based) standing for ``d + q_s - q_t``, and no form divides ``num``.
    Construct through :meth:`variables` and arithmetic, not directly.
    """

    __slots__ = ("nvars", "num", "den", "const", "_hash")

    def __init__(self, nvars: int, num: tuple, den: tuple, const: Fraction):
        self.nvars = nvars
        self.num = num
        self.den = den
        self.const = const
        self._hash = hash((nvars, num, den, const))

    @classmethod
    def variables(cls, m: int) -> tuple["GenericScalar", ...]:
        return tuple(
            cls(m, ((_mono(m, i), Fraction(1)),), (), Fraction(1)) for i in range(m)
        )

    @classmethod
    def _build(cls, nvars: int, num: dict, den: Counter, const: Fraction):
        if not num:
            return Fraction(0)
        if not const:
            raise DivisionByZero("zero constant in denominator")
        for form in sorted(den):
            k = den[form]
            while k:
                q = _pdiv_form(num, form)
                if q is None:
                    break
                num = q
                k -= 1
            if k:
                den[form] = k
            else:
                del den[form]
        lk = _lead_key(num)
        lead = num[lk]
        if lead != 1:
            num = {k: v / lead for k, v in num.items()}
            const = const / lead
        den = +den
        if not den and sum(lk) == 0:
            return Fraction(1) / const
        return cls(nvars, tuple(sorted(num.items())), tuple(sorted(den.items())), Fraction(const))

    def _parts(self):
        return dict(self.num), Counter(dict(self.den)), self.const

    @staticmethod
    def _other_parts(x, nvars: int):
        if isinstance(x, GenericScalar):
            if x.nvars != nvars:
                raise ValueError("generic scalars over different numbers of parameters")
            return x._parts()
        x = Fraction(x)
        return ({_mono(nvars): x} if x else {}), Counter(), Fraction(1)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (GenericScalar, int, Fraction)):
            return NotImplemented
        na, da, ca = self._parts()
        nb, db, cb = self._other_parts(other, self.nvars)
        den = da | db
        ea, eb = _expand_forms(den - da, self.nvars), _expand_forms(den - db, self.nvars)
        num = _padd(_pscale(_pmul(na, ea), 1 / ca), _pscale(_pmul(nb, eb), 1 / cb))
        return GenericScalar._build(self.nvars, num, den, Fraction(1))

    __radd__ = __add__

    def __neg__(self):
        return GenericScalar(self.nvars, self.num, self.den, -self.const)

    def __sub__(self, other):
        if not isinstance(other, (GenericScalar, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (GenericScalar, int, Fraction)):
            return NotImplemented
        na, da, ca = self._parts()
        nb, db, cb = self._other_parts(other, self.nvars)
        if not nb:
            return Fraction(0)
        return GenericScalar._build(self.nvars, _pmul(na, nb), da + db, ca * cb)

    __rmul__ = __mul__

    def inverse(self):
        forms, rest = _split_forms(dict(self.num), self.nvars)
        if _total_degree(rest) > 0:
            raise NonAdmissibleDivisor(
                f"numerator of {self} does not split into forms d + q_s - q_t"
            )
        k = rest[_mono(self.nvars)]
        num = _pscale(_expand_forms(Counter(dict(self.den)), self.nvars), self.const / k)
        return GenericScalar._build(self.nvars, num, forms, Fraction(1))

    def __truediv__(self, other):
        if isinstance(other, GenericScalar):
            if other.num == self.num:
                na, da, ca = self._parts()
                _, db, cb = other._parts()
                return GenericScalar._build(
                    self.nvars, _pscale(_expand_forms(db, self.nvars), cb / ca), da, Fraction(1))
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionByZero("division by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Fraction(1)
        for _ in range(k):
            out = out * self
        return out

    # -- comparison and display -------------------------------------------

    def __bool__(self) -> bool:
        return True

    def __eq__(self, other) -> bool:
        if isinstance(other, GenericScalar):
            return (self._hash == other._hash and self.nvars == other.nvars and self.num == other.num
                    and self.den == other.den and self.const == other.const)
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def key(self) -> tuple:
        return (self.nvars, self.num, self.den, self.const)

    def names(self) -> list[str]:
        return [f"q{i + 1}" for i in range(self.nvars)]

    def numerator_str(self) -> str:
        return _poly_str(dict(self.num), self.names())

    def denominator_forms(self) -> list[list[int]]:
        """Denominator factors as [d, s, t] (1-based), repeated by multiplicity."""
        return [[d, s + 1, t + 1] for (d, s, t), k in self.den for _ in range(k)]

    def __str__(self) -> str:
        if not self.den:
            return _poly_str(_pscale(dict(self.num), 1 / self.const), self.names())
        num = self.numerator_str()
        dens = []
        if self.const != 1:
            dens.append(str(self.const))
        names = self.names()
        for (d, s, t), k in self.den:
            f = _poly_str(_form_poly((d, s, t), self.nvars), names)
            dens.append(f"({f})" + (f"^{k}" if k > 1 else ""))
        if not dens:
            return num
        return f"({num})/(" + "*".join(dens) + ")"

    def __repr__(self) -> str:
        return f"GenericScalar({str(self)!r})"

    def specialize(self, values: Sequence) -> Fraction:
        pt = [Fraction(v) for v in values]
        den = self.const
        for (d, s, t), k in self.den:
            den *= (d + pt[s] - pt[t]) ** k
        if not den:
            raise DivisionByZero(f"{self} has a pole at q = {values}")
        return _peval(dict(self.num), pt) / den


def _expand_forms(forms: Counter, nvars: int) -> dict:
    out = {_mono(nvars): Fraction(1)}
    for form, k in sorted(forms.items()):
        fp = _form_poly(form, nvars)
        for _ in range(k):
            out = _pmul(out, fp)
    return out


Scalar = Union[int, Fraction, GenericScalar]


def as_scalar(x) -> Scalar:
    if isinstance(x, (GenericScalar, Fraction)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def scalar_key(x) -> tuple:
    """Total order on scalars used to sort roots canonically."""
    if isinstance(x, GenericScalar):
        return (1, x.key())
    return (0, Fraction(x))


def specialize(x, values: Sequence):
    """Evaluate a scalar (or RatFun coefficients) at concrete q values."""
    if isinstance(x, GenericScalar):
        return x.specialize(values)
    if isinstance(x, RatFun):
        roots = {}
        for c, k in x.den_roots:
            c = specialize(c, values)
            roots[c] = roots.get(c, 0) + k
        return RatFun(tuple(specialize(c, values) for c in x.num), roots)
    return Fraction(x)


def scalar_arith(a, b, op: str):
    """Exact ``a op b`` for op in {add, sub, mul, div}."""
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# dense univariate polynomials: tuples of coefficients, constant term first
# ---------------------------------------------------------------------------

def ptrim(p: Sequence) -> tuple:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(p)


def padd(a: Sequence, b: Sequence) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return ptrim(out)


def pneg(a: Sequence) -> tuple:
    return tuple(-c for c in a)


def psub(a: Sequence, b: Sequence) -> tuple:
    return padd(a, pneg(b))


def pscale(a: Sequence, c) -> tuple:
    if not c:
        return ()
    return ptrim([x * c for x in a])


def pmul(a: Sequence, b: Sequence) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return ptrim(out)


def pmul_linear(a: Sequence, c) -> tuple:
    """a(z) * (z - c)."""
    if not a:
        return ()
    out = [0] * (len(a) + 1)
    for i, x in enumerate(a):
        out[i + 1] = out[i + 1] + x
        out[i] = out[i] - c * x
    return ptrim(out)


def peval(a: Sequence, c):
    acc = 0
    for x in reversed(a):
        acc = acc * c + x
    return acc


def pdiv_linear(a: Sequence, c) -> tuple[tuple, object]:
    """Synthetic division of a(z) by (z - c): returns (quotient, remainder)."""
    if not a:
        return (), 0
    n = len(a) - 1
    q = [0] * n
    acc = a[n]
    for i in range(n - 1, -1, -1):
        q[i] = acc
        acc = a[i] + c * acc
    return ptrim(q), acc


def pfrom_roots(roots: Iterable[tuple[object, int]]) -> tuple:
    out: tuple = (Fraction(1),)
    for c, k in roots:
        for _ in range(k):
            out = pmul_linear(out, c)
    return out


def _rational_roots(p: tuple) -> list[Fraction]:
    """All rational roots (with multiplicity) of a polynomial with rational coefficients."""
    roots: list[Fraction] = []
    while len(p) > 1 and p[0] == 0:
        roots.append(Fraction(0))
        p = p[1:]
    if len(p) <= 1:
        return roots
    lcm = 1
    for c in p:
        lcm = lcm * Fraction(c).denominator // math.gcd(lcm, Fraction(c).denominator)
    ints = [int(Fraction(c) * lcm) for c in p]

    def divisors(k: int) -> list[int]:
        k = abs(k)
        small = [d for d in range(1, math.isqrt(k) + 1) if k % d == 0]
        return sorted(set(small + [k // d for d in small]))

    for num in divisors(ints[0]):
        for den in divisors(ints[-1]):
            for sign in (1, -1):
                r = Fraction(sign * num, den)
                while len(p) > 1:
                    q, rem = pdiv_linear(p, r)
                    if rem != 0:
                        break
                    roots.append(r)
                    p = q
    return roots


# ---------------------------------------------------------------------------
# univariate rational functions in z
# ---------------------------------------------------------------------------

class RatFun:
    """
    A rational function ``num(z) / prod (z - c)^k`` in lowest terms.

    ``num`` is a tuple of scalar coefficients (constant term first, no
    trailing zeros); ``den_roots`` is a tuple of (root, multiplicity) pairs
    sorted by :func:`scalar_key`.  Every factor of the denominator is tested
    against the numerator by exact synthetic division, so no root of the
    denominator is a root of the numerator.
    """

    __slots__ = ("num", "den_roots", "_hash")

    def __init__(self, num: Sequence = (), den_roots: dict | Iterable | None = None):
        num = ptrim(num)
        roots: dict = {}
        if den_roots:
            items = den_roots.items() if isinstance(den_roots, dict) else den_roots
            for c, k in items:
                if k:
                    roots[c] = roots.get(c, 0) + k
        if not num:
            roots = {}
        kept = []
        for c in sorted(roots, key=scalar_key):
            k = roots[c]
            while k and len(num) > 1:
                q, rem = pdiv_linear(num, c)
                if rem:
                    break
                num = q
                k -= 1
            if k:
                kept.append((c, k))
        self.num = num
        self.den_roots = tuple(kept)
        self._hash = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def z(cls) -> "RatFun":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "RatFun":
        return cls((c,))

    @classmethod
    def linear(cls, c) -> "RatFun":
        """z - c."""
        return cls((-c, 1))

    @classmethod
    def pole(cls, c) -> "RatFun":
        """1 / (z - c)."""
        return cls((1,), {c: 1})

    @staticmethod
    def coerce(x) -> "RatFun":
        return x if isinstance(x, RatFun) else RatFun((x,))

    # -- structure -----------------------------------------------------------

    @property
    def denominator(self) -> tuple:
        """Dense monic denominator polynomial."""
        return pfrom_roots(self.den_roots)

    @property
    def numerator(self) -> tuple:
        return self.num

    def is_polynomial(self) -> bool:
        return not self.den_roots

    def is_constant(self) -> bool:
        return not self.den_roots and len(self.num) <= 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num[0] if self.num else Fraction(0)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (RatFun, int, Fraction, GenericScalar)):
            return NotImplemented
        other = RatFun.coerce(other)
        if not other.num:
            return self
        if not self.num:
            return other
        a, b = dict(self.den_roots), dict(other.den_roots)
        den = {c: max(a.get(c, 0), b.get(c, 0)) for c in set(a) | set(b)}
        ea = pfrom_roots((c, k - a.get(c, 0)) for c, k in den.items())
        eb = pfrom_roots((c, k - b.get(c, 0)) for c, k in den.items())
        return RatFun(padd(pmul(self.num, ea), pmul(other.num, eb)), den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(pneg(self.num), self.den_roots)

    def __sub__(self, other):
        if not isinstance(other, (RatFun, int, Fraction, GenericScalar)):
            return NotImplemented
        return self + (-RatFun.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatFun):
            roots = dict(self.den_roots)
            for c, k in other.den_roots:
                roots[c] = roots.get(c, 0) + k
            return RatFun(pmul(self.num, other.num), roots)
        if isinstance(other, (int, Fraction, GenericScalar)):
            if not other:
                return RatFun()
            return RatFun(pscale(self.num, other), self.den_roots)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self, candidates: Iterable = ()) -> "RatFun":
        """
        Reciprocal; the numerator must split into linear factors.

        Roots are looked for among ``candidates`` first, then (for rational
        coefficients) by the rational root test.
        """
        if not self.num:
            raise DivisionByZero("inverse of zero rational function")
        num = self.num
        roots: dict = {}
        for c in candidates:
            while len(num) > 1:
                q, rem = pdiv_linear(num, c)
                if rem:
                    break
                num = q
                roots[c] = roots.get(c, 0) + 1
        if len(num) == 2:
            r = -num[0] * _reciprocal(num[1])
            num = (num[1],)
            roots[r] = roots.get(r, 0) + 1
        if len(num) > 1 and all(isinstance(c, (int, Fraction)) for c in num):
            for r in _rational_roots(num):
                num, _ = pdiv_linear(num, r)
                roots[r] = roots.get(r, 0) + 1
        if len(num) > 1:
            raise NonAdmissibleDivisor(f"numerator of {self} does not split into linear factors")
        return RatFun(pscale(self.denominator, _reciprocal(num[0])), roots)

    def __truediv__(self, other):
        if isinstance(other, RatFun):
            if other.is_constant():
                other = other.constant_value()
            else:
                return self * other.inverse()
        if isinstance(other, (int, Fraction, GenericScalar)):
            if not other:
                raise DivisionByZero("division by zero")
            return self * _reciprocal(other)
        return NotImplemented

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction, GenericScalar)):
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RatFun.const(1)
        for _ in range(k):
            out = out * self
        return out

    # -- evaluation ------------------------------------------------------------

    def substitute(self, c):
        """Value at z = c after cancellation of every removable factor."""
        for r, _ in self.den_roots:
            if r == c:
                raise PoleAtEvaluationPoint(f"{self} has a pole at z = {c}")
        val = peval(self.num, c)
        if not val:
            return Fraction(0)
        den = Fraction(1)
        for r, k in self.den_roots:
            den = den * (c - r) ** k
        return val / den

    def evaluate_naive(self, c):
        """num(c) / den(c) with no cancellation; raises on a vanishing denominator."""
        d = peval(self.denominator, c)
        if not d:
            raise DivisionByZero(f"denominator of {self} vanishes at {c}")
        return peval(self.num, c) / d

    def map_coefficients(self, fn) -> "RatFun":
        roots: dict = {}
        for c, k in self.den_roots:
            c2 = fn(c)
            roots[c2] = roots.get(c2, 0) + k
        return RatFun(tuple(fn(c) for c in self.num), roots)

    # -- comparison and display -----------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFun):
            return self.num == other.num and self.den_roots == other.den_roots
        if isinstance(other, (int, Fraction, GenericScalar)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den_roots))
        return self._hash

    def __str__(self) -> str:
        num = _upoly_str(self.num)
        if not self.den_roots:
            return num
        den = "*".join(
            f"(z - ({c}))" + (f"^{k}" if k > 1 else "") for c, k in self.den_roots
        )
        return f"({num})/({den})"

    def __repr__(self) -> str:
        return f"RatFun({str(self)!r})"


def _reciprocal(c):
    return c.inverse() if isinstance(c, GenericScalar) else 1 / Fraction(c)


def _upoly_str(p: Sequence) -> str:
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
        cs = f"({c})" if isinstance(c, GenericScalar) else str(c)
        terms.append(cs if not mono else (mono if c == 1 else f"{cs}*{mono}"))
    return " + ".join(terms)


def ratfun_substitute(r: RatFun, c):
    """Exact value of the reduced fraction ``r`` at ``z = c``."""
    return RatFun.coerce(r).substitute(c)


# ---------------------------------------------------------------------------
# parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Parameters:
    """The data (m, n, Q) fixing one algebra H_{m,n}(Q)."""
    m: int
    n: int
    qmode: str  # "specialized" or "generic"
    qvalues: tuple

    def __post_init__(self):
        if self.m < 1 or self.n < 0:
            raise ValueError(f"need m >= 1 and n >= 0, got m={self.m}, n={self.n}")
        if len(self.qvalues) != self.m:
            raise ValueError(f"expected {self.m} q values, got {len(self.qvalues)}")
        if self.qmode not in ("specialized", "generic"):
            raise ValueError(f"unknown qmode {self.qmode!r}")

    @classmethod
    def default(cls, m: int, n: int) -> "Parameters":
        """Specialized q_i = (n+1)(i-1), which always separates."""
        return cls(m, n, "specialized", tuple(Fraction((n + 1) * i) for i in range(m)))

    @classmethod
    def specialized(cls, m: int, n: int, qs: Sequence, check: bool = True) -> "Parameters":
        p = cls(m, n, "specialized", tuple(as_scalar(q) for q in qs))
        if check and separation_value(p) == 0:
            raise SeparationViolated(f"q = {[str(q) for q in p.qvalues]} fails separation for n = {n}")
        return p

    @classmethod
    def generic(cls, m: int, n: int) -> "Parameters":
        return cls(m, n, "generic", GenericScalar.variables(m))

    @property
    def generic_mode(self) -> bool:
        return self.qmode == "generic"

    def with_n(self, n: int) -> "Parameters":
        return Parameters(self.m, n, self.qmode, self.qvalues)

    def node_residue(self, row: int, col: int, comp: int):
        """b - a + q_c for the node (row a, column b, component c), all 1-based."""
        return (col - row) + self.qvalues[comp - 1]

    def f_poly(self) -> tuple:
        """f(z) = (z - q_1)...(z - q_m) as a dense polynomial."""
        return pfrom_roots((q, 1) for q in self.qvalues)


def separation_value(P: Parameters):
    """n! * prod_{i<j} prod_{|d|<=n} (d + q_i - q_j); zero means Q is rejected."""
    val = Fraction(math.factorial(P.n))
    q = P.qvalues
    for i, j in iproduct(range(P.m), repeat=2):
        if i >= j:
            continue
        for d in range(-P.n, P.n + 1):
            val = val * (d + q[i] - q[j])
    return val
