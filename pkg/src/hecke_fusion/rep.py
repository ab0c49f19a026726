"""
The seminormal matrix model of H_{m,n}(Q).

Each Specht module S^la has the basis {v_t : t in Std(la)} on which t acts
by res_t(1) and t_i acts on at most two basis vectors.  With
d = res_t(i+1) - res_t(i) and s = t(i, i+1):

* s not standard:  t_i v_t = v_t / d           (d = +-1)
* t before s:      t_i v_t = v_t / d + v_s,  t_i v_s = (1 - 1/d^2) v_t - v_s / d

Matrices act on column vectors, so the coefficient of v_s in t_i v_t sits
in row s, column t.  An algebra element is the tuple of its blocks over all
multipartitions of n; under separation this map is faithful, so identities
in the algebra are checked as exact matrix identities.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .combinat import (
    MultiPartition, StandardTableau, enumerate_multipartitions,
    enumerate_standard_tableaux, residue,
)
from .errors import SeparationViolated, SpectralCollision
from .exact import GenericScalar, Parameters, RatFun, separation_value
from .matrix import (
    ONE, ZERO, Matrix, diag, identity, is_diagonal, matadd, matmap, matmul,
    matscale, trace, zeros,
)
from .report import Check, check

__all__ = [
    "SpechtBlock", "AlgebraElement", "SeminormalRep", "build_specht_block",
    "verify_defining_relations", "jm_element", "t_of_z", "baxterized",
    "verify_reflection_equation", "verify_reflection_variant", "verify_center", "verify_yang_baxter",
    "verify_unitarity", "verify_jm_diagonal",
]


def _check_separation(P: Parameters) -> None:
    if not P.generic_mode and separation_value(P) == 0:
        raise SeparationViolated(
            f"q = {[str(q) for q in P.qvalues]} fails the separation condition for n = {P.n}")


@dataclass(frozen=True)
class SpechtBlock:
    shape: MultiPartition
    basis: tuple[StandardTableau, ...]
    t: Matrix
    gens: tuple[Matrix, ...]  # t_1 .. t_{n-1}
    params: Parameters

    @property
    def dim(self) -> int:
        return len(self.basis)


def _generator_matrix(basis: Sequence[StandardTableau], i: int, P: Parameters) -> Matrix:
    pos = {t: k for k, t in enumerate(basis)}
    dim = len(basis)
    rows = [[ZERO] * dim for _ in range(dim)]
    for k, t in enumerate(basis):
        d = residue(t, i + 1, P) - residue(t, i, P)
        inv = 1 / d
        rows[k][k] = inv
        s = t.swap(i)
        if s is None:
            continue
        ks = pos[s]
        if k < ks:
            rows[ks][k] = ONE
        else:
            rows[ks][k] = 1 - inv * inv
    return tuple(tuple(r) for r in rows)


def build_specht_block(la: MultiPartition, P: Parameters) -> SpechtBlock:
    _check_separation(P)
    basis = tuple(enumerate_standard_tableaux(la))
    n = basis[0].n
    tmat = diag([residue(t, 1, P) for t in basis]) if n else zeros(1)
    gens = tuple(_generator_matrix(basis, i, P) for i in range(1, n))
    return SpechtBlock(la, basis, tmat, gens, P)


def verify_defining_relations(B: SpechtBlock) -> Check:
    """Every defining relation as an exact matrix identity; reports the first failure."""
    inst = f"shape={list(map(list, B.shape))}"
    dim = B.dim
    one = identity(dim)
    t = B.t
    g = B.gens
    n = len(g) + 1
    if not B.basis[0].n:
        return check("defining_relations", inst, True)
    cyc = one
    for q in B.params.qvalues:
        cyc = matmul(cyc, matadd(t, matscale(one, q), sign=-1))
    if cyc != zeros(dim):
        return check("defining_relations", inst, False, "(t-q_1)...(t-q_m) != 0")
    if n >= 2:
        x = matadd(matmul(matmul(g[0], t), g[0]), g[0])
        if matmul(t, x) != matmul(x, t):
            return check("defining_relations", inst, False, "t(t_1 t t_1 + t_1) != (t_1 t t_1 + t_1) t")
    for i in range(2, n):
        if matmul(t, g[i - 1]) != matmul(g[i - 1], t):
            return check("defining_relations", inst, False, f"t t_{i} != t_{i} t")
    for i in range(1, n):
        if matmul(g[i - 1], g[i - 1]) != one:
            return check("defining_relations", inst, False, f"t_{i}^2 != 1")
    for i in range(1, n - 1):
        a, b = g[i - 1], g[i]
        if matmul(matmul(a, b), a) != matmul(matmul(b, a), b):
            return check("defining_relations", inst, False, f"braid relation fails at i={i}")
    for i in range(1, n):
        for j in range(i + 2, n):
            if matmul(g[i - 1], g[j - 1]) != matmul(g[j - 1], g[i - 1]):
                return check("defining_relations", inst, False, f"t_{i} t_{j} != t_{j} t_{i}")
    return check("defining_relations", inst, True)


class AlgebraElement:
    """An element of H_{m,n}(Q) as its tuple of blocks, one per multipartition."""

    __slots__ = ("rep", "blocks")

    def __init__(self, rep: "SeminormalRep", blocks: Sequence[Matrix]):
        self.rep = rep
        self.blocks = tuple(blocks)

    def _zip(self, other, fn):
        return AlgebraElement(self.rep, [fn(a, b) for a, b in zip(self.blocks, other.blocks)])

    def __add__(self, other):
        if isinstance(other, AlgebraElement):
            return self._zip(other, matadd)
        return self + self.rep.identity() * other

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, AlgebraElement):
            return self._zip(other, lambda a, b: matadd(a, b, sign=-1))
        return self - self.rep.identity() * other

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self * -1

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self._zip(other, matmul)
        return AlgebraElement(self.rep, [matscale(b, other) for b in self.blocks])

    def __rmul__(self, other):
        return AlgebraElement(self.rep, [matscale(b, other) for b in self.blocks])

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return self.blocks == other.blocks
        return NotImplemented

    __hash__ = None

    def map(self, fn) -> "AlgebraElement":
        return AlgebraElement(self.rep, [matmap(b, fn) for b in self.blocks])

    def substitute(self, c) -> "AlgebraElement":
        """Evaluate RatFun entries at z = c (scalar entries pass through)."""
        return self.map(lambda x: x.substitute(c) if isinstance(x, RatFun) else x)

    def trace(self):
        total = ZERO
        for b in self.blocks:
            total = total + trace(b)
        return total

    def is_zero(self) -> bool:
        return all(not x for b in self.blocks for row in b for x in row)

    def block(self, shape: MultiPartition) -> Matrix:
        return self.blocks[self.rep.shape_index[shape]]

    def commutes_with(self, other: "AlgebraElement") -> bool:
        return self * other == other * self

    def __repr__(self) -> str:
        return f"AlgebraElement({self.blocks!r})"


class SeminormalRep:
    """All Specht blocks of H_{m,n}(Q) with generator, JM and fusion ingredients."""

    def __init__(self, P: Parameters):
        _check_separation(P)
        self.params = P
        self.shapes = tuple(enumerate_multipartitions(P.m, P.n))
        self.shape_index = {la: k for k, la in enumerate(self.shapes)}
        self.blocks = tuple(build_specht_block(la, P) for la in self.shapes)
        self.tableaux = tuple(t for B in self.blocks for t in B.basis)
        self.position = {t: (b, k) for b, B in enumerate(self.blocks) for k, t in enumerate(B.basis)}

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(B.dim for B in self.blocks)

    def element(self, blocks) -> AlgebraElement:
        return AlgebraElement(self, blocks)

    def identity(self) -> AlgebraElement:
        return AlgebraElement(self, [identity(d) for d in self.dims])

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, [zeros(d) for d in self.dims])

    @cached_property
    def t(self) -> AlgebraElement:
        return AlgebraElement(self, [B.t for B in self.blocks])

    def gen(self, i: int) -> AlgebraElement:
        """t_i for 1 <= i < n."""
        if not 1 <= i < self.n:
            raise ValueError(f"t_{i} does not exist for n = {self.n}")
        return self._gens[i - 1]

    @cached_property
    def _gens(self) -> tuple[AlgebraElement, ...]:
        return tuple(AlgebraElement(self, [B.gens[i] for B in self.blocks]) for i in range(self.n - 1))

    def jm(self, i: int) -> AlgebraElement:
        """J_1 = t, J_{i+1} = t_i J_i t_i + t_i, by the recursion."""
        return self._jm[i - 1]

    @cached_property
    def _jm(self) -> tuple[AlgebraElement, ...]:
        out = [self.t]
        for i in range(1, self.n):
            g = self.gen(i)
            out.append(g * out[-1] * g + g)
        return tuple(out)

    def matrix_unit(self, t: StandardTableau) -> AlgebraElement:
        b, k = self.position[t]
        blocks = []
        for idx, d in enumerate(self.dims):
            if idx != b:
                blocks.append(zeros(d))
            else:
                blocks.append(tuple(tuple(ONE if i == j == k else ZERO for j in range(d))
                                    for i in range(d)))
        return AlgebraElement(self, blocks)

    @cached_property
    def t_of_z(self) -> AlgebraElement:
        """f(z)(z - t)^{-1}; t is diagonal so each entry is f(z)/(z - res_t(1))."""
        f = self.params.f_poly()
        blocks = []
        for B in self.blocks:
            entries = []
            for k in range(B.dim):
                r = B.t[k][k]
                entries.append(RatFun(f, {r: 1}))
            blocks.append(diag(entries))
        return AlgebraElement(self, blocks)

    def t_at(self, x) -> AlgebraElement:
        """t(x) for a scalar x or the live variable (a RatFun)."""
        if isinstance(x, RatFun) and x == RatFun.z():
            return self.t_of_z
        if isinstance(x, RatFun):
            raise ValueError("t(x) is only formed at a scalar or at z itself")
        return self.t_of_z.substitute(x)

    def baxterized(self, i: int, a, b) -> AlgebraElement:
        """t_i(a, b) = 1/(a - b) + t_i."""
        diff = a - b
        if not diff:
            raise SpectralCollision(f"spectral parameters {a} and {b} coincide")
        coef = diff.inverse() if isinstance(diff, (RatFun, GenericScalar)) else 1 / diff
        return self.gen(i) + coef


def jm_element(i: int, P: Parameters | SeminormalRep) -> AlgebraElement:
    rep = P if isinstance(P, SeminormalRep) else SeminormalRep(P)
    if not 1 <= i <= rep.n:
        raise ValueError(f"J_{i} does not exist for n = {rep.n}")
    return rep.jm(i)


def t_of_z(P: Parameters | SeminormalRep) -> AlgebraElement:
    rep = P if isinstance(P, SeminormalRep) else SeminormalRep(P)
    return rep.t_of_z


def baxterized(rep: SeminormalRep, i: int, a, b) -> AlgebraElement:
    if not 1 <= i < rep.n:
        raise ValueError(f"t_{i} does not exist for n = {rep.n}")
    return rep.baxterized(i, a, b)


def _inst(rep: SeminormalRep, extra: str = "") -> str:
    P = rep.params
    base = f"m={P.m} n={P.n} {P.qmode}"
    return f"{base} {extra}".strip()


def verify_jm_diagonal(rep: SeminormalRep) -> list[Check]:
    """J_i is diagonal with entry res_t(i) at basis vector t."""
    out = []
    for i in range(1, rep.n + 1):
        J = rep.jm(i)
        ok, wit = True, None
        for B, blk in zip(rep.blocks, J.blocks):
            want = diag([residue(t, i, rep.params) for t in B.basis])
            if blk != want:
                ok, wit = False, f"J_{i} on {list(map(list, B.shape))}"
                break
        out.append(check("jm_diagonal_residues", _inst(rep, f"i={i}"), ok, wit))
    return out


def _sample_points(rng: random.Random, count: int, avoid: Sequence = ()) -> list[Fraction]:
    out: list[Fraction] = []
    while len(out) < count:
        x = Fraction(rng.randint(-997, 997), rng.randint(1, 97))
        if x not in out and x not in avoid:
            out.append(x)
    return out


def verify_unitarity(rep: SeminormalRep, rng: random.Random, samples: int = 3) -> list[Check]:
    """t_i(x, y) t_i(y, x) = 1 - (x - y)^{-2} with x live and y numeric."""
    out = []
    z = RatFun.z()
    for i in range(1, rep.n):
        ok = True
        for y in _sample_points(rng, samples):
            lhs = rep.baxterized(i, z, y) * rep.baxterized(i, y, z)
            rhs = rep.identity() * (1 - (z - y) ** -2)
            if lhs != rhs:
                ok = False
                break
        out.append(check("baxterized_unitarity", _inst(rep, f"i={i}"), ok, None if ok else f"y={y}"))
    return out


def verify_yang_baxter(rep: SeminormalRep, rng: random.Random, samples: int = 3) -> list[Check]:
    """
    t_i(x,y) t_{i+1}(x,w) t_i(y,w) = t_{i+1}(y,w) t_i(x,w) t_{i+1}(x,y).

    Checked exactly in x (live) for numeric (y, w), and at fully numeric triples.
    """
    out = []
    z = RatFun.z()
    for i in range(1, rep.n - 1):
        ok, wit = True, None
        for _ in range(samples):
            y, w = _sample_points(rng, 2)
            x3 = _sample_points(rng, 1, avoid=(y, w))[0]
            for x in (z, x3):
                a, b = rep.baxterized(i, x, y), rep.baxterized(i + 1, x, w)
                c = rep.baxterized(i, y, w)
                lhs = a * b * c
                rhs = rep.baxterized(i + 1, y, w) * rep.baxterized(i, x, w) * rep.baxterized(i + 1, x, y)
                if lhs != rhs:
                    ok, wit = False, f"x={x} y={y} w={w}"
                    break
            if not ok:
                break
        out.append(check("yang_baxter", _inst(rep, f"i={i}"), ok, wit))
    return out


def reflection_sides(rep: SeminormalRep, x, y, tz: AlgebraElement | None = None):
    """Both sides of t(x)t_1(x,y)t(y)t_1 + t(x)t_1(x,y) = t_1(x,y)t(x) + t_1 t(y)t_1(x,y)t(x)."""
    tx = tz if tz is not None and isinstance(x, RatFun) else rep.t_at(x)
    ty = rep.t_at(y)
    b = rep.baxterized(1, x, y)
    t1 = rep.gen(1)
    lhs = tx * b * ty * t1 + tx * b
    rhs = b * tx + t1 * ty * b * tx
    return lhs, rhs


def _reflection_points(rng: random.Random, samples: int) -> list:
    pts = [tuple(_sample_points(rng, 2)) for _ in range(samples)]
    pts.append((RatFun.z(), _sample_points(rng, 1)[0]))
    return pts


def verify_reflection_equation(rep: SeminormalRep, rng: random.Random | None = None,
                               samples: int = 5, tz: AlgebraElement | None = None) -> Check:
    """
    The reflection equation at ``samples`` random numeric (x, y), plus once
    exactly in x (live) at a numeric y.  ``tz`` overrides t(z) (negative controls).
    """
    if rep.n < 2:
        raise ValueError("the reflection equation needs n >= 2")
    for x, y in _reflection_points(rng or random.Random(0), samples):
        if tz is not None:
            tx = tz if isinstance(x, RatFun) else tz.substitute(x)
            ty = tz.substitute(y)
            b = rep.baxterized(1, x, y)
            t1 = rep.gen(1)
            lhs = tx * b * ty * t1 + tx * b
            rhs = b * tx + t1 * ty * b * tx
        else:
            lhs, rhs = reflection_sides(rep, x, y)
        if lhs != rhs:
            return check("reflection_equation", _inst(rep), False, f"x={x} y={y}")
    return check("reflection_equation", _inst(rep), True)


def verify_reflection_variant(rep: SeminormalRep, rng: random.Random | None = None,
                              samples: int = 5) -> Check:
    """t_1(x,y) t(x) t_1 t(y) = t(y) t_1 t(x) t_1(x,y), sampled like the stated form."""
    if rep.n < 2:
        raise ValueError("the reflection equation needs n >= 2")
    t1 = rep.gen(1)
    for x, y in _reflection_points(rng or random.Random(0), samples):
        b = rep.baxterized(1, x, y)
        tx, ty = rep.t_at(x), rep.t_at(y)
        if b * tx * t1 * ty != ty * t1 * tx * b:
            return check("reflection_variant", _inst(rep), False, f"x={x} y={y}")
    return check("reflection_variant", _inst(rep), True)


def elementary_symmetric(elems: Sequence[AlgebraElement], k: int, rep: SeminormalRep) -> AlgebraElement:
    e = [rep.identity()] + [rep.zero()] * k
    for J in elems:
        for j in range(k, 0, -1):
            e[j] = e[j] + J * e[j - 1]
    return e[k]


def verify_center(rep: SeminormalRep, k: int) -> Check:
    """e_k(J_1, ..., J_n) commutes with t and every t_i."""
    if not 1 <= k <= rep.n:
        raise ValueError(f"need 1 <= k <= n, got k={k}")
    ek = elementary_symmetric([rep.jm(i) for i in range(1, rep.n + 1)], k, rep)
    gens = [("t", rep.t)] + [(f"t_{i}", rep.gen(i)) for i in range(1, rep.n)]
    for name, g in gens:
        if not ek.commutes_with(g):
            return check("center_symmetric_jm", _inst(rep, f"k={k}"), False, f"e_{k} vs {name}")
    return check("center_symmetric_jm", _inst(rep, f"k={k}"), True)


def jm_diagonal_entries(J: AlgebraElement) -> list[list]:
    out = []
    for b in J.blocks:
        if not is_diagonal(b):
            raise ValueError("JM element is not diagonal in the seminormal basis")
        out.append([b[i][i] for i in range(len(b))])
    return out
