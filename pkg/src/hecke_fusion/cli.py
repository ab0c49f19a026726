"""
hecke-fusion: enumerate, weights, rep dump, fuse, verify.

Exit codes: 0 pass, 1 a check failed, 2 usage error, 3 separation
rejected, 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass

from . import serialize as ser
from .combinat import (
    StandardTableau, enumerate_multipartitions, enumerate_standard_tableaux,
)
from .errors import InvariantBreach, PoleAtEvaluationPoint, SeparationViolated
from .exact import Parameters
from .fusion import fuse_all
from .rep import SeminormalRep
from .report import Report
from .suites import DEFAULT_GRID, SUITES, fuzz_identities, run_suites
from .weights import theta_multipartition, theta_tableau, theta_tableau_at_top

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SEPARATION, EXIT_BREACH = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    m: int | None
    n: int | None
    generic: bool = False
    q: tuple[str, ...] | None = None
    suite: str = "all"
    grid: bool = False
    fmt: str = "json"
    jobs: int = 1
    seed: int = 0

    def params(self, m: int | None = None, n: int | None = None) -> Parameters:
        m = self.m if m is None else m
        n = self.n if n is None else n
        if m is None or n is None:
            raise UsageError("both -m and -n are required")
        if self.generic:
            if self.q is not None:
                raise UsageError("-q and --generic are mutually exclusive")
            return Parameters.generic(m, n)
        if self.q is None:
            return Parameters.default(m, n)
        if len(self.q) != m:
            raise UsageError(f"-q gives {len(self.q)} values but m = {m}")
        try:
            qs = [ser.parse_frac(s) for s in self.q]
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        return Parameters.specialized(m, n, qs)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["q"] = list(self.q) if self.q is not None else None
        return d


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("-m", type=int, help="number of cyclotomic parameters")
    p.add_argument("-n", type=int, help="number of strands")
    p.add_argument("-q", help="comma-separated exact fractions q_1,...,q_m")
    p.add_argument("--generic", action="store_true", help="keep q_1..q_m symbolic")
    p.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hecke-fusion",
                                 description="Primitive idempotents of degenerate cyclotomic Hecke algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="multipartitions, standard tableaux and residues")
    _add_common(p)

    p = sub.add_parser("weights", help="Theta weights of shapes or tableaux")
    p.add_argument("what", choices=("shapes", "tableaux"), nargs="?", default="shapes")
    _add_common(p)

    p = sub.add_parser("rep", help="seminormal representation")
    p.add_argument("action", choices=("dump",))
    _add_common(p)

    p = sub.add_parser("fuse", help="fused idempotents with their evaluation traces")
    sel = p.add_mutually_exclusive_group()
    sel.add_argument("--tableau", help='JSON rows, e.g. "[[[1,2]],[]]"')
    sel.add_argument("--index", type=int, help="0-based position in enumeration order")
    _add_common(p)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--grid", action="store_true", help="run the default (m, n) grid")
    _add_common(p)
    return ap


def _config(args: argparse.Namespace) -> RunConfig:
    q = tuple(s.strip() for s in args.q.split(",")) if args.q else None
    return RunConfig(m=args.m, n=args.n, generic=args.generic, q=q,
                     suite=getattr(args, "suite", "all"), grid=getattr(args, "grid", False),
                     fmt=args.fmt, jobs=max(1, args.jobs), seed=args.seed)


def cmd_enumerate(cfg: RunConfig) -> Report:
    P = cfg.params()
    rep = Report("enumerate", cfg.as_dict())
    shapes = []
    total = 0
    for la in enumerate_multipartitions(P.m, P.n):
        tabs = enumerate_standard_tableaux(la)
        total += len(tabs)
        shapes.append({"shape": ser.shape(la), "tableaux": [
            {"tableau": ser.tableau(t), "residues": ser.residues(t, P)} for t in tabs]})
    rep.data = {"params": ser.params(P), "shape_count": len(shapes),
                "tableau_count": total, "shapes": shapes}
    return rep


def cmd_weights(cfg: RunConfig, what: str = "shapes") -> Report:
    P = cfg.params()
    rep = Report(f"weights {what}", cfg.as_dict())
    rows = []
    for la in enumerate_multipartitions(P.m, P.n):
        if what == "shapes":
            rows.append({"shape": ser.shape(la), "theta": ser.scalar(theta_multipartition(la, P))})
            continue
        for t in enumerate_standard_tableaux(la):
            th = theta_tableau(t, P)
            rows.append({"tableau": ser.tableau(t), "theta_z": ser.scalar(th),
                         "theta_at_top": ser.scalar(theta_tableau_at_top(t, P))})
    rep.data = {"params": ser.params(P), what: rows}
    return rep


def cmd_rep_dump(cfg: RunConfig) -> Report:
    P = cfg.params()
    R = SeminormalRep(P)
    rep = Report("rep dump", cfg.as_dict())
    blocks = []
    for B in R.blocks:
        blocks.append({
            "shape": ser.shape(B.shape),
            "basis": [ser.tableau(t) for t in B.basis],
            "t": ser.matrix(B.t),
            "generators": [ser.matrix(g) for g in B.gens],
        })
    rep.data = {"params": ser.params(P), "blocks": blocks}
    return rep


def _select(R: SeminormalRep, tableau: str | None, index: int | None) -> list[StandardTableau]:
    tabs = list(R.tableaux)
    if tableau is not None:
        try:
            t = StandardTableau.from_rows(json.loads(tableau))
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad tableau {tableau!r}: {exc}") from exc
        if t not in R.position:
            raise UsageError(f"tableau {tableau} is not in Std for m={R.params.m}, n={R.n}")
        return [t]
    if index is not None:
        if not 0 <= index < len(tabs):
            raise UsageError(f"tableau index {index} out of range 0..{len(tabs) - 1}")
        return [tabs[index]]
    return tabs


def cmd_fuse(cfg: RunConfig, tableau: str | None = None, index: int | None = None) -> Report:
    P = cfg.params()
    R = SeminormalRep(P)
    chosen = _select(R, tableau, index)
    rep = Report("fuse", dict(cfg.as_dict(), tableau=tableau, index=index))
    out = []
    for t, (E, tr) in zip(chosen, fuse_all(R, chosen, cfg.jobs)):
        out.append({"tableau": ser.tableau(t), "blocks": ser.element(E), "trace": ser.fusion_trace(tr)})
    rep.data = {"params": ser.params(P), "idempotents": out}
    return rep


def cmd_verify(cfg: RunConfig) -> Report:
    suites = SUITES if cfg.suite == "all" else (cfg.suite,)
    if cfg.grid or (cfg.m is None and cfg.n is None):
        if cfg.q is not None:
            raise UsageError("-q cannot be combined with the grid")
        todo = [cfg.params(m, n) for m, n in DEFAULT_GRID]
    else:
        todo = [cfg.params()]
    rep = Report("verify", cfg.as_dict())
    for P in todo:
        start = time.perf_counter()
        rep.extend(run_suites(P, suites, cfg.jobs, cfg.seed))
        rep.timing[f"m={P.m} n={P.n}"] = time.perf_counter() - start
    if "identities" in suites:
        start = time.perf_counter()
        rep.extend(fuzz_identities(cfg.seed))
        rep.timing["fuzz"] = time.perf_counter() - start
    return rep


def _dispatch(args: argparse.Namespace, cfg: RunConfig) -> Report:
    if args.command == "enumerate":
        return cmd_enumerate(cfg)
    if args.command == "weights":
        return cmd_weights(cfg, args.what)
    if args.command == "rep":
        return cmd_rep_dump(cfg)
    if args.command == "fuse":
        return cmd_fuse(cfg, args.tableau, args.index)
    return cmd_verify(cfg)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = _config(args)
    try:
        report = _dispatch(args, cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SeparationViolated as exc:
        print(f"separation rejected: {exc}", file=sys.stderr)
        return EXIT_SEPARATION
    except (InvariantBreach, PoleAtEvaluationPoint) as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_BREACH
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = report.to_json() if cfg.fmt == "json" else report.to_text()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if report.failed:
        for c in report.failed[:20]:
            print(f"FAIL {c.name} [{c.instance}] {c.witness or ''}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
