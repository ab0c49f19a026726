"""
Verification batteries, grouped the way the CLI exposes them.

``relations``  defining relations, JM data, Yang-Baxter, unitarity,
               reflection equation and the symmetric-JM centre.
``identities`` weight identities: exhaustive on one (m, n) plus a seeded fuzz.
``fusion``     the idempotent system, telescoping and the key step identity.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .combinat import (
    StandardTableau, count_standard_tableaux, enumerate_multipartitions,
    enumerate_standard_tableaux, partitions, removable_nodes,
)
from .exact import Parameters
from .fusion import fuse_all, verify_idempotent_suite
from .rep import (
    SeminormalRep, verify_center, verify_defining_relations, verify_jm_diagonal,
    verify_reflection_equation, verify_reflection_variant, verify_unitarity, verify_yang_baxter,
)
from .report import Check, check
from .weights import (
    hook_ratio_check, theta_branching_check, theta_multipartition,
    theta_pair_ratio_check, theta_tableau, theta_tableau_product_form,
)

SUITES = ("relations", "identities", "fusion")
DEFAULT_GRID = tuple([(1, n) for n in range(1, 6)] + [(2, n) for n in range(1, 5)]
                     + [(3, n) for n in range(1, 4)])
FUZZ_INSTANCES = 500
FUZZ_MAX_SIZE = 6


def _inst(P: Parameters, extra: str = "") -> str:
    return f"m={P.m} n={P.n} {P.qmode} {extra}".strip()


def relations_suite(rep: SeminormalRep, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    out = [verify_defining_relations(B) for B in rep.blocks]
    out.extend(verify_jm_diagonal(rep))
    out.extend(verify_unitarity(rep, rng))
    out.extend(verify_yang_baxter(rep, rng))
    if rep.n >= 2:
        out.append(verify_reflection_equation(rep, rng))
        out.append(verify_reflection_variant(rep, rng))
    for k in range(1, rep.n + 1):
        out.append(verify_center(rep, k))
    return out


def structural_checks(P: Parameters) -> list[Check]:
    total = sum(count_standard_tableaux(la) ** 2 for la in enumerate_multipartitions(P.m, P.n))
    want = P.m ** P.n * math.factorial(P.n)
    return [check("dimension_count", _inst(P), total == want, f"sum #Std^2 = {total}, m^n n! = {want}")]


def tableau_weight_checks(P: Parameters) -> list[Check]:
    """Per-tableau weight identities over every shape of P."""
    out = []
    for la in enumerate_multipartitions(P.m, P.n):
        for t in enumerate_standard_tableaux(la):
            inst = _inst(P, f"t={t}")
            ok = theta_tableau(t, P, check=False) == theta_tableau_product_form(t, P)
            out.append(check("theta_tableau_dual_form", inst, ok, "the two Theta_t(z) forms differ"))
            if t.n:
                out.append(check("theta_branching", inst, theta_branching_check(la, t, P),
                                 "Theta_la/Theta_mu != branching product"))
                out.append(check("theta_branching_top_orientation", inst,
                                 theta_branching_check(la, t, P, orientation="top"),
                                 "Theta_la/Theta_mu != product of (r - res) factors"))
    if P.m == 1:
        for la in enumerate_multipartitions(1, P.n):
            want = Fraction(count_standard_tableaux(la), math.factorial(P.n))
            got = theta_multipartition(la, P)
            out.append(check("theta_hook_formula", _inst(P, f"la={list(la[0])}"),
                             got == want, f"Theta = {got}, #Std/n! = {want}"))
    return out


def partition_checks(max_size: int) -> list[Check]:
    """theta_pair_ratio_check and hook_ratio_check over all small instances."""
    out = []
    every = [la for k in range(max_size + 1) for la in partitions(k)]
    for la in every:
        for alpha in removable_nodes(la):
            inst = f"la={list(la)} alpha={list(alpha)}"
            out.append(check("hook_ratio", inst, hook_ratio_check(la, alpha)))
            for mu in every:
                out.append(check("theta_pair_ratio", f"{inst} mu={list(mu)}",
                                 theta_pair_ratio_check(la, mu, alpha)))
    return out


def _random_partition(rng: random.Random, k: int) -> tuple:
    parts = partitions(k)
    return parts[rng.randrange(len(parts))]


def _random_tableau(rng: random.Random, la) -> StandardTableau:
    tabs = enumerate_standard_tableaux(la)
    return tabs[rng.randrange(len(tabs))]


def fuzz_identities(seed: int, count: int = FUZZ_INSTANCES, max_size: int = FUZZ_MAX_SIZE) -> list[Check]:
    """
    ``count`` seeded instances, each exercising all three identity checkers.

    Partitions have sizes up to ``max_size``; the branching check runs on a
    random multipartition with m in 1..3, alternating generic and default Q.
    """
    rng = random.Random(seed)
    out = []
    for k in range(count):
        la = _random_partition(rng, rng.randint(1, max_size))
        mu = _random_partition(rng, rng.randint(0, max_size))
        rem = removable_nodes(la)
        alpha = rem[rng.randrange(len(rem))]
        inst = f"fuzz#{k} la={list(la)} mu={list(mu)} alpha={list(alpha)}"
        out.append(check("fuzz_theta_pair_ratio", inst, theta_pair_ratio_check(la, mu, alpha)))
        out.append(check("fuzz_hook_ratio", inst, hook_ratio_check(la, alpha)))
        m = rng.randint(1, 3)
        n = rng.randint(1, max_size)
        shapes = enumerate_multipartitions(m, n)
        shape = shapes[rng.randrange(len(shapes))]
        t = _random_tableau(rng, shape)
        P = Parameters.generic(m, n) if k % 2 == 0 else Parameters.default(m, n)
        out.append(check("fuzz_theta_branching", f"fuzz#{k} {_inst(P)} t={t}",
                         theta_branching_check(shape, t, P),
                         "Theta_la/Theta_mu != branching product"))
    return out


def identities_suite(P: Parameters) -> list[Check]:
    out = structural_checks(P)
    out.extend(tableau_weight_checks(P))
    out.extend(partition_checks(P.n))
    return out


def fusion_suite(rep: SeminormalRep, jobs: int = 1) -> list[Check]:
    P = rep.params
    tabs = list(rep.tableaux)
    results = fuse_all(rep, tabs, jobs)
    fused = {}
    out = []
    for t, (E, tr) in zip(tabs, results):
        fused[t] = E
        want = theta_multipartition(t.shape, P)
        out.append(check("telescoping", _inst(P, f"t={t}"), tr.normalization == want,
                         f"prod of step factors {tr.normalization} != Theta {want}"))
    out.extend(verify_idempotent_suite(rep, fused=fused))
    return out


def run_suites(P: Parameters, suites, jobs: int = 1, seed: int = 0) -> list[Check]:
    """Per-(m, n) suites; the seeded fuzz is separate since it ignores (m, n)."""
    rep = SeminormalRep(P) if {"relations", "fusion"} & set(suites) else None
    out = []
    for name in SUITES:
        if name not in suites:
            continue
        if name == "relations":
            out.extend(relations_suite(rep, seed))
        elif name == "identities":
            out.extend(identities_suite(P))
        else:
            out.extend(fusion_suite(rep, jobs))
    return out
