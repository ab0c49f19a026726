"""
Primitive idempotents by consecutive evaluation.

For a standard tableau t with residues r_1..r_n the idempotent is built one
entry at a time, starting from E^(0) = 1:

    E^(k) = [ Theta_{t|k}(z) * phi_k(r_1..r_{k-1}; z) * E^(k-1) ]  at z = r_k

where phi_1(z) = t(z) and phi_{k+1}(..; z) = t_k(z, r_k) phi_k(..; z) t_k.
Only z is ever live.  The product of the step factors Theta_{t|k}(r_k) is
Theta_la(Q), which ties the step-wise scheme to the single global constant.

Two independent routes to the same E_t are kept for cross-checking: the
product of JM factors (``jm_idempotent``) and the literal product
Theta_la(Q) * phi_n ... phi_1 evaluated in order (``raw_phi_product``).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinat import StandardTableau, addable_removable, node_residue, residue
from .errors import InvariantBreach
from .exact import Parameters, RatFun, padd, pdiv_linear, pmul, pmul_linear, pscale
from .matrix import ZERO, diag, matmul, rank
from .rep import AlgebraElement, SeminormalRep, jm_diagonal_entries
from .report import Check, check
from .weights import theta_multipartition, theta_tableau

__all__ = [
    "FusionStep", "FusionTrace", "phi", "fused_idempotent", "raw_phi_product",
    "raw_phi_product_check", "jm_idempotent", "verify_key_lemma",
    "verify_idempotent_suite", "fuse_all",
]


@dataclass(frozen=True)
class FusionStep:
    k: int
    target: object  # r_k, the value substituted for z
    factor: object  # Theta_{t|k}(r_k)
    checksum: object  # trace of E^(k)


@dataclass(frozen=True)
class FusionTrace:
    tableau: StandardTableau
    steps: tuple[FusionStep, ...]
    final: AlgebraElement

    @property
    def normalization(self):
        out = Fraction(1)
        for s in self.steps:
            out = out * s.factor
        return out


def _residues(t: StandardTableau, P: Parameters) -> list:
    return [residue(t, i, P) for i in range(1, t.n + 1)]


def phi(rep: SeminormalRep, k: int, prefix: Sequence) -> AlgebraElement:
    """phi_k(r_1..r_{k-1}; z) with RatFun entries, by the defining recursion."""
    if len(prefix) != k - 1:
        raise ValueError(f"phi_{k} needs {k - 1} fixed residues, got {len(prefix)}")
    z = RatFun.z()
    out = rep.t_of_z
    for j in range(1, k):
        out = rep.baxterized(j, z, prefix[j - 1]) * out * rep.gen(j)
    return out


# -- polynomial-matrix fast path -------------------------------------------------
#
# phi_k(..; z) E = B_{k-1} ... B_1 t(z) t_1 ... t_{k-1} E with B_j = 1/(z - r_j) + t_j.
# Kept as P(z) / prod_j (z - r_j) with P a matrix of dense polynomials.

def _scalar_times_polys(a, P):
    out = []
    for row in a:
        acc = [()] * len(P[0])
        for l, x in enumerate(row):
            if not x:
                continue
            for j, p in enumerate(P[l]):
                if p:
                    acc[j] = padd(acc[j], pscale(p, x))
        out.append(acc)
    return out


def _t_of_z_polys(rep: SeminormalRep) -> list[list[tuple]]:
    cache = rep.__dict__.setdefault("_tz_polys", None)
    if cache is not None:
        return cache
    f = rep.params.f_poly()
    out = []
    for B in rep.blocks:
        row = []
        for k in range(B.dim):
            q, rem = pdiv_linear(f, B.t[k][k])
            if rem:
                raise InvariantBreach("f(z) is not divisible by z - res_t(1)")
            row.append(q)
        out.append(row)
    rep.__dict__["_tz_polys"] = out
    return out


def _phi_times(rep: SeminormalRep, k: int, prefix: Sequence, E: AlgebraElement):
    """(P, roots) with phi_k(prefix; z) E = P(z) / prod (z - r)."""
    blocks = list(E.blocks)
    for j in range(k - 1, 0, -1):
        g = rep.gen(j).blocks
        blocks = [matmul(gb, eb) for gb, eb in zip(g, blocks)]
    tz = _t_of_z_polys(rep)
    polys = []
    for b, Y in enumerate(blocks):
        polys.append([[pscale(tz[b][i], x) if x else () for x in row] for i, row in enumerate(Y)])
    roots: dict = {}
    for j in range(1, k):
        r = prefix[j - 1]
        g = rep.gen(j).blocks
        new = []
        for b, P in enumerate(polys):
            tP = _scalar_times_polys(g[b], P)
            new.append([[padd(p, pmul_linear(tp, r)) for p, tp in zip(prow, trow)]
                        for prow, trow in zip(P, tP)])
        polys = new
        roots[r] = roots.get(r, 0) + 1
    return polys, roots


def _fusion_step(rep: SeminormalRep, tk: StandardTableau, prefix: Sequence, E: AlgebraElement):
    k = tk.n
    r = residue(tk, k, rep.params)
    theta = theta_tableau(tk, rep.params)
    polys, roots = _phi_times(rep, k, prefix, E)
    for c, mult in theta.den_roots:
        roots[c] = roots.get(c, 0) + mult
    blocks = []
    for P in polys:
        blocks.append(tuple(
            tuple(RatFun(pmul(p, theta.num), roots).substitute(r) if p else ZERO for p in row)
            for row in P))
    return AlgebraElement(rep, blocks), theta.substitute(r), r


def fused_idempotent(t: StandardTableau, rep: SeminormalRep | Parameters):
    """
    E_t by consecutive evaluation; returns (E_t, FusionTrace).

    ``t`` may have fewer than n entries, giving E_t as an element of the
    larger algebra (used for branching checks).
    """
    if isinstance(rep, Parameters):
        rep = SeminormalRep(rep)
    if t.n > rep.n:
        raise ValueError(f"tableau with {t.n} entries in an algebra with n = {rep.n}")
    res = _residues(t, rep.params)
    E = rep.identity()
    steps = []
    for k in range(1, t.n + 1):
        E, factor, target = _fusion_step(rep, t.restrict(k), res[:k - 1], E)
        steps.append(FusionStep(k, target, factor, E.trace()))
    tr = FusionTrace(t, tuple(steps), E)
    expected = theta_multipartition(t.shape, rep.params)
    if tr.normalization != expected:
        raise InvariantBreach(
            f"step factors multiply to {tr.normalization}, Theta = {expected} for {t}")
    return E, tr


def raw_phi_product(t: StandardTableau, rep: SeminormalRep) -> AlgebraElement:
    """Theta_la(Q) * phi_n(r..; z_n) ... phi_1(z_1) with z_1 = r_1, then z_2 = r_2, ..."""
    res = _residues(t, rep.params)
    acc = rep.identity()
    for k in range(1, t.n + 1):
        acc = (phi(rep, k, res[:k - 1]) * acc).substitute(res[k - 1])
    return acc * theta_multipartition(t.shape, rep.params)


def raw_phi_product_check(t: StandardTableau, rep: SeminormalRep, max_n: int = 3,
                          fused: AlgebraElement | None = None) -> Check:
    if rep.n > max_n:
        raise ValueError(f"raw Phi product is limited to n <= {max_n}")
    if fused is None:
        fused = fused_idempotent(t, rep)[0]
    raw = raw_phi_product(t, rep)
    return check("raw_phi_product", _tinst(rep, t), raw == fused, "Theta*Phi differs from fusion")


def jm_idempotent(t: StandardTableau, rep: SeminormalRep) -> AlgebraElement:
    """E_t = E_u prod_{b in A(mu), b != alpha} (J_n - res b) / (r_n - res b), E_empty = 1."""
    P = rep.params
    E = rep.identity()
    for k in range(1, t.n + 1):
        mu = t.restrict(k - 1).shape
        alpha = t.node_of(k)
        r = node_residue(alpha, P)
        J = rep.jm(k)
        for b in addable_removable(mu)[0]:
            if b == alpha:
                continue
            c = node_residue(b, P)
            E = E * ((J - c) * (1 / (r - c)))
    return E


def verify_key_lemma(t: StandardTableau, rep: SeminormalRep, E_u: AlgebraElement | None = None) -> Check:
    """Theta_t(z) phi_n(r..; z) E_u = (z - r_n)(z - J_n)^{-1} E_u as RatFun matrices."""
    n = t.n
    res = _residues(t, rep.params)
    if E_u is None:
        E_u = fused_idempotent(t.restrict(n - 1), rep)[0]
    lhs = phi(rep, n, res[:n - 1]) * E_u * theta_tableau(t, rep.params)
    J = jm_diagonal_entries(rep.jm(n))
    r = res[-1]
    resolvent = AlgebraElement(rep, [diag([RatFun((-r, 1), {c: 1}) for c in d]) for d in J])
    rhs = resolvent * E_u
    return check("key_lemma", _tinst(rep, t), lhs == rhs, "Theta_t phi_n E_u != (z-r_n)/(z-J_n) E_u")


def _tinst(rep: SeminormalRep, t: StandardTableau) -> str:
    P = rep.params
    return f"m={P.m} n={P.n} {P.qmode} t={t}"


# -- batch evaluation -------------------------------------------------------------

_WORKER_REP: SeminormalRep | None = None


def _init_worker(P: Parameters) -> None:
    global _WORKER_REP
    _WORKER_REP = SeminormalRep(P)


def _fuse_blocks(t: StandardTableau):
    E, tr = fused_idempotent(t, _WORKER_REP)
    return E.blocks, [(s.k, s.target, s.factor, s.checksum) for s in tr.steps]


def fuse_all(rep: SeminormalRep, tableaux: Sequence[StandardTableau], jobs: int = 1):
    """fused_idempotent over many tableaux; results come back in input order."""
    if jobs <= 1 or len(tableaux) < 2:
        return [fused_idempotent(t, rep) for t in tableaux]
    with ProcessPoolExecutor(jobs, initializer=_init_worker, initargs=(rep.params,)) as pool:
        raw = list(pool.map(_fuse_blocks, tableaux, chunksize=max(1, len(tableaux) // (4 * jobs))))
    out = []
    for t, (blocks, steps) in zip(tableaux, raw):
        E = AlgebraElement(rep, blocks)
        out.append((E, FusionTrace(t, tuple(FusionStep(*s) for s in steps), E)))
    return out


def _element_rank(E: AlgebraElement) -> int:
    return sum(rank(b) for b in E.blocks)


def verify_idempotent_suite(rep: SeminormalRep, jobs: int = 1, raw_max_n: int = 3,
                            fused: dict | None = None) -> list[Check]:
    """
    Idempotent-system checks over every standard tableau of every shape:

    (a) E_t^2 = E_t, (b) E_s E_t = 0 for s != t, (c) sum E_t = 1,
    (d) J_i E_t = E_t J_i = res_t(i) E_t, (e) E_t is the seminormal matrix
    unit, (f) fusion = JM product = matrix unit, (g) E_u = sum of E_t over
    the t extending u; plus rank one, telescoping, the key step identity and
    (for n <= raw_max_n) the literal Phi product.
    """
    P = rep.params
    tabs = list(rep.tableaux)
    if fused is None:
        fused = {t: E for t, (E, _) in zip(tabs, fuse_all(rep, tabs, jobs))}
    out: list[Check] = []
    total = rep.zero()
    jms = [rep.jm(i) for i in range(1, rep.n + 1)]
    for t in tabs:
        E = fused[t]
        inst = _tinst(rep, t)
        out.append(check("idempotent", inst, E * E == E, "E_t^2 != E_t"))
        bad = next((s for s in tabs if s != t and not (fused[s] * E).is_zero()), None)
        out.append(check("orthogonal", inst, bad is None, f"E_s E_t != 0 for s={bad}"))
        ok, wit = True, None
        for i, J in enumerate(jms, 1):
            r = residue(t, i, P)
            target = E * r
            if J * E != target or E * J != target:
                ok, wit = False, f"i={i}"
                break
        out.append(check("jm_eigen", inst, ok, wit))
        unit = rep.matrix_unit(t)
        out.append(check("matrix_unit", inst, E == unit, "fusion result is not the matrix unit"))
        jm = jm_idempotent(t, rep)
        out.append(check("three_way_agreement", inst, E == jm == unit,
                         "fusion, JM product and matrix unit disagree"))
        out.append(check("rank_one", inst, _element_rank(E) == 1, f"rank {_element_rank(E)}"))
        total = total + E
    out.append(check("resolution_of_identity", f"m={P.m} n={P.n} {P.qmode}",
                     total == rep.identity(), "sum of E_t != 1"))
    out.extend(verify_branching(rep, fused))
    for t in tabs:
        if t.n:
            out.append(verify_key_lemma(t, rep))
        if rep.n <= raw_max_n:
            out.append(raw_phi_product_check(t, rep, max_n=raw_max_n, fused=fused[t]))
    return out


def verify_branching(rep: SeminormalRep, fused: dict) -> list[Check]:
    """E_u = sum of E_t over standard t extending u, for every u with n - 1 entries."""
    if rep.n == 0:
        return []
    children: dict = {}
    for t in rep.tableaux:
        children.setdefault(t.restrict(rep.n - 1), []).append(t)
    out = []
    for u in sorted(children):
        E_u = fused_idempotent(u, rep)[0]
        total = rep.zero()
        for t in children[u]:
            total = total + fused[t]
        out.append(check("branching_sum", _tinst(rep, u), total == E_u, "E_u != sum E_t"))
    return out
