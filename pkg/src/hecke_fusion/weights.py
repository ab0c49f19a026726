"""
Weights of multipartitions and tableaux, and the identities relating them.

``theta_multipartition`` is the inverse Schur element of a Specht module,
a product of generalized-hook linear forms.  ``theta_tableau`` is the
rational function in z that normalizes one fusion step.  The ``*_check``
functions compare two exact expressions of the same quantity.
"""

from __future__ import annotations

from fractions import Fraction

from .combinat import (
    MultiPartition, Partition, StandardTableau,
    _ghook, addable_nodes, addable_removable, conjugate, hook,
    node_residue, nodes, removable_nodes, residue,
)
from .errors import InvariantBreach, NotRemovable, ZeroDenominator
from .exact import Parameters, RatFun, pfrom_roots

__all__ = [
    "theta_multipartition", "theta_multipartition_split", "theta_pair",
    "theta_pair_ratio_check", "hook_ratio_check", "theta_branching_check",
    "theta_branching_rhs", "theta_tableau", "theta_tableau_product_form",
    "theta_tableau_at_top",
]


def _recip(x):
    if x == 0:
        raise ZeroDenominator("vanishing linear factor (separation violated)")
    return 1 / x


def theta_multipartition(la: MultiPartition, P: Parameters, check: bool = True):
    """
    prod_s prod_{(i,j) in la^s} prod_t 1 / (h^{la^s, la^t}_{i,j} + q_s - q_t).

    With ``check`` the own-hook split form is computed as well and must agree.
    """
    q = P.qvalues
    conj = [conjugate(part) for part in la]
    val = Fraction(1)
    for s, part in enumerate(la):
        for i, j in nodes(part):
            for t in range(len(la)):
                val = val * _recip(_ghook(part, conj[t], i, j) + q[s] - q[t])
    if check:
        other = theta_multipartition_split(la, P)
        if other != val:
            raise InvariantBreach(f"two forms of Theta for {la} disagree: {val} vs {other}")
    return val


def theta_multipartition_split(la: MultiPartition, P: Parameters):
    """Same weight with the s = t factor written as the ordinary hook 1/h^{la^s}."""
    q = P.qvalues
    conj = [conjugate(part) for part in la]
    val = Fraction(1)
    for s, part in enumerate(la):
        for i, j in nodes(part):
            val = val / hook(part, i, j)
            for t in range(len(la)):
                if t != s:
                    val = val * _recip(_ghook(part, conj[t], i, j) + q[s] - q[t])
    return val


def theta_pair(la: Partition, mu: Partition) -> RatFun:
    """
    Theta_{la,mu}(x, y) as a rational function of the single variable u = x - y.

    prod_{(i,j) in mu} 1/(h^{la,mu}_{i,j} + u) * prod_{(i,j) in la} 1/(h^{mu,la}_{i,j} - u)
    """
    la_c, mu_c = conjugate(la), conjugate(mu)
    out = RatFun.const(1)
    for i, j in nodes(mu):
        out = out * RatFun.pole(-_ghook(la, mu_c, i, j))
    for i, j in nodes(la):
        # 1/(h - u) = -1/(u - h)
        out = out * RatFun.pole(_ghook(mu, la_c, i, j)) * -1
    return out


def _content(node: tuple[int, int]) -> int:
    i, j = node
    return j - i


def _check_removable(la: Partition, alpha: tuple[int, int]) -> Partition:
    if tuple(alpha) not in removable_nodes(la):
        raise NotRemovable(f"{alpha} is not a removable node of {la}")
    i, _ = alpha
    nu = list(la)
    nu[i - 1] -= 1
    return tuple(p for p in nu if p)


def theta_pair_ratio_check(la: Partition, mu: Partition, alpha: tuple[int, int]) -> bool:
    """Theta_{la,mu}/Theta_{nu,mu} against the removable/addable product of mu, in u = x - y."""
    nu = _check_removable(la, alpha)
    lhs = theta_pair(la, mu) / theta_pair(nu, mu)
    a = _content(alpha)
    rhs = RatFun.const(1)
    # res(b) - res(a) + y - x = -(u - (res(b) - res(a)))
    for b in removable_nodes(mu):
        rhs = rhs * RatFun.linear(_content(b) - a) * -1
    for g in addable_nodes(mu):
        rhs = rhs * RatFun.pole(_content(g) - a) * -1
    return lhs == rhs


def hook_ratio_check(la: Partition, alpha: tuple[int, int]) -> bool:
    """Hook-product ratio of la minus alpha over la, against both product forms."""
    mu = _check_removable(la, alpha)
    lhs = Fraction(1)
    for i, j in nodes(mu):
        lhs *= hook(mu, i, j)
    for i, j in nodes(la):
        lhs /= hook(la, i, j)
    a = _content(alpha)
    rem = [_content(b) for b in removable_nodes(mu)]
    add = [_content(g) for g in addable_nodes(mu) if g != tuple(alpha)]
    first = Fraction(1)
    second = Fraction(1)
    for b in rem:
        first *= b - a
        second *= a - b
    for g in add:
        first /= g - a
        second /= a - g
    return lhs == first and lhs == second


def _branching_data(t: StandardTableau, P: Parameters):
    alpha = t.node_of(t.n)
    mu = t.restrict(t.n - 1).shape
    add, rem = addable_removable(mu)
    r = node_residue(alpha, P)
    return alpha, mu, add, rem, r


def theta_branching_rhs(t: StandardTableau, P: Parameters, orientation: str = "stated"):
    """
    prod_{b in R(mu)} (res b - r) / prod_{g in A(mu), g != alpha} (res g - r), r = res_t(n).

    ``orientation="top"`` gives the factors as (r - res b) and (r - res g)
    instead, which differs by (-1)^(m-1).
    """
    alpha, mu, add, rem, r = _branching_data(t, P)
    sign = 1 if orientation == "stated" else -1
    val = Fraction(1)
    for b in rem:
        val = val * (sign * (node_residue(b, P) - r))
    for g in add:
        if g != alpha:
            val = val * _recip(sign * (node_residue(g, P) - r))
    return val


def theta_branching_check(la: MultiPartition, t: StandardTableau, P: Parameters,
                          orientation: str = "stated") -> bool:
    """Theta_la / Theta_mu, mu = la minus the node of n, against the branching product."""
    if t.shape != la:
        raise ValueError(f"tableau of shape {t.shape} given for {la}")
    if t.n == 0:
        return True
    mu = t.restrict(t.n - 1).shape
    lhs = theta_multipartition(la, P) / theta_multipartition(mu, P)
    return lhs == theta_branching_rhs(t, P, orientation)


def _f_ratfun(P: Parameters) -> RatFun:
    return RatFun(P.f_poly())


def theta_tableau(t: StandardTableau, P: Parameters, check: bool = True) -> RatFun:
    """
    Theta_t(z) = (z - r_n)/f(z) * prod_{i<n} (z - r_i)^2 / ((z - r_i + 1)(z - r_i - 1)).

    Returns 1 for the empty tableau.  With ``check`` the addable/removable
    product form is computed too and must be the same reduced function.
    """
    n = t.n
    if n == 0:
        return RatFun.const(1)
    num = pfrom_roots([(residue(t, n, P), 1)] + [(residue(t, i, P), 2) for i in range(1, n)])
    den: dict = {}
    for q in P.qvalues:
        den[q] = den.get(q, 0) + 1
    for i in range(1, n):
        r = residue(t, i, P)
        for c in (r - 1, r + 1):
            den[c] = den.get(c, 0) + 1
    val = RatFun(num, den)
    if check:
        other = theta_tableau_product_form(t, P)
        if other != val:
            raise InvariantBreach(f"Theta_t(z) forms disagree for {t}: {val} vs {other}")
    return val


def theta_tableau_product_form(t: StandardTableau, P: Parameters) -> RatFun:
    """(z - r_n) prod_{b in R(mu)} (z - res b) / prod_{g in A(mu)} (z - res g)."""
    if t.n == 0:
        return RatFun.const(1)
    _, _, add, rem, r = _branching_data(t, P)
    num = pfrom_roots([(r, 1)] + [(node_residue(b, P), 1) for b in rem])
    den: dict = {}
    for g in add:
        c = node_residue(g, P)
        den[c] = den.get(c, 0) + 1
    return RatFun(num, den)


def theta_tableau_at_top(t: StandardTableau, P: Parameters, check: bool = True):
    """Theta_t(res_t(n)); with ``check`` it must equal Theta_la / Theta_mu."""
    if t.n == 0:
        return Fraction(1)
    val = theta_tableau(t, P, check=check).substitute(residue(t, t.n, P))
    if check:
        ratio = theta_multipartition(t.shape, P) / theta_multipartition(t.restrict(t.n - 1).shape, P)
        if ratio != val:
            raise InvariantBreach(f"Theta_t(r_n) = {val} but Theta ratio = {ratio} for {t}")
    return val
