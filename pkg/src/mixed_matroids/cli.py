"""Command-line front end.

Every command prints a JSON report on stdout. Exit status: 0 true/feasible,
1 false/infeasible, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .errors import InternalConsistencyError, MatroidError
from .graphs import MixedGraph, acyclic_orientation, mixed_graphic_matroid, p_orientation_pairs, strong_orientation
from .io import (
    candidate_circuits,
    dump,
    matroid_to_dict,
    mixed_circuit_to_dict,
    pairs_from_dict,
    parse_instance,
    read_json,
)
from .mixed import (
    MixedMatroid,
    acyclic_check,
    contract_mixed,
    delete_mixed,
    dual_mixed,
    mixed_circuits,
    totally_cyclic_check,
)
from .oriented import verify_circuit_axioms
from .solver import (
    OrientationResult,
    Status,
    brute_force_p_orientation,
    essential_characterization,
    find_p_orientation,
    is_p_essential,
    make_pset,
    p_connectivity,
)

VERBS = (
    "check-axioms",
    "circuits",
    "cocircuits",
    "dual",
    "minor",
    "p-connected",
    "essential",
    "orient",
    "strong-orient",
    "acyclic-orient",
    "pairs-orient",
)
NEEDS_P = {"p-connected", "essential", "orient"}
NEEDS_GRAPH = {"strong-orient", "acyclic-orient", "pairs-orient"}


class UsageError(MatroidError):
    pass


@dataclass
class Command:
    verb: str
    path: str
    p: list[str] | None = None
    delete: list[str] = field(default_factory=list)
    contract: list[str] = field(default_factory=list)
    pairs: list[tuple[str, str]] | None = None
    brute_force: bool = False
    relax: bool = False

    def validate(self) -> None:
        if self.verb not in VERBS:
            raise UsageError(f"unknown command {self.verb!r}")
        if self.verb in NEEDS_P and not self.p:
            raise UsageError(f"{self.verb} needs --p")


def _split(text: str | None) -> list[str]:
    if not text:
        return []
    return [x.strip() for x in text.split(",") if x.strip()]


def _pairs(text: str | None) -> list[tuple[str, str]] | None:
    if text is None:
        return None
    out = []
    for item in _split(text):
        s, sep, t = item.partition(":")
        if not sep:
            raise UsageError(f"pair {item!r} must look like source:target")
        out.append((s, t))
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mixed-matroids", description="Mixed matroids and mixed graph orientation.")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("verb", choices=VERBS)
    ap.add_argument("input", help="graph or matroid JSON file")
    ap.add_argument("--p", help="comma-separated labels of the elements of P")
    ap.add_argument("--delete", help="comma-separated labels to delete (minor)")
    ap.add_argument("--contract", help="comma-separated labels to contract (minor)")
    ap.add_argument("--pairs", help="vertex pairs s:t,s:t (overrides the file's 'pairs')")
    ap.add_argument("--brute-force", action="store_true", help="scan all coherent orientations")
    ap.add_argument("--relax", action="store_true", help="drop the total cyclicity condition of P-connectivity")
    ap.add_argument("--summary", action="store_true", help="also print a plain-text summary on stderr")
    return ap


def _as_mixed(inst: MixedGraph | MixedMatroid) -> MixedMatroid:
    return mixed_graphic_matroid(inst) if isinstance(inst, MixedGraph) else inst


def _circuit_list(mm: MixedMatroid) -> list[dict]:
    return [mixed_circuit_to_dict(c, mm.ground) for c in mixed_circuits(mm)]


def _orientation_report(res: OrientationResult) -> tuple[dict, int]:
    return res.to_dict(), 0 if res.status is Status.FEASIBLE else 1


def run(cmd: Command) -> tuple[dict[str, Any], int]:
    """Execute a command and return ``(report, exit_code)``."""
    cmd.validate()
    if cmd.verb == "check-axioms":
        data = read_json(cmd.path)
        if "vertices" in data:
            mm = _as_mixed(parse_instance(data))
            ground, cands = mm.ground, mm.om.signed_circuits()
        else:
            ground, cands = candidate_circuits(data)
            # close under negation like the loader does
            cands = list(set(cands) | {-c for c in cands})
        violations = verify_circuit_axioms(cands, ground)
        report = {"valid": not violations, "violations": [{"kind": v.kind, "detail": v.detail} for v in violations]}
        return report, 0 if not violations else 1

    data = read_json(cmd.path)
    inst = parse_instance(data)
    if cmd.verb in NEEDS_GRAPH:
        if not isinstance(inst, MixedGraph):
            raise UsageError(f"{cmd.verb} needs a graph file")
        if cmd.verb == "strong-orient":
            res = strong_orientation(inst)
            return res.to_dict(), 0 if res.feasible else 1
        if cmd.verb == "acyclic-orient":
            res = acyclic_orientation(inst)
            return res.to_dict(), 0 if res.feasible else 1
        pairs = cmd.pairs if cmd.pairs is not None else pairs_from_dict(data)
        if not pairs:
            raise UsageError("pairs-orient needs 'pairs' in the file or --pairs")
        return _orientation_report(p_orientation_pairs(inst, pairs, relax=cmd.relax, brute_force=cmd.brute_force))

    mm = _as_mixed(inst)
    if cmd.verb == "circuits":
        cyclic, method = totally_cyclic_check(mm)
        acyc, amethod = acyclic_check(mm)
        report = {
            "labels": list(mm.ground.labels),
            "unsigned": mm.unsigned_labels(),
            "circuits": _circuit_list(mm),
            "totally_cyclic": {"value": cyclic, "method": method},
            "acyclic_coherent": {"value": acyc, "method": amethod},
        }
        return report, 0
    if cmd.verb == "cocircuits":
        d = dual_mixed(mm)
        return {"labels": list(mm.ground.labels), "unsigned": mm.unsigned_labels(), "cocircuits": _circuit_list(d)}, 0
    if cmd.verb == "dual":
        return matroid_to_dict(dual_mixed(mm)), 0
    if cmd.verb == "minor":
        minor = mm
        if cmd.delete:
            minor = delete_mixed(minor, cmd.delete)
        if cmd.contract:
            minor = contract_mixed(minor, cmd.contract)
        return matroid_to_dict(minor), 0

    P = make_pset(mm, cmd.p)
    if cmd.verb == "p-connected":
        info = p_connectivity(mm, P, cmd.relax)
        ok = info.holds(cmd.relax)
        report = {
            "p_connected": ok,
            "P": cmd.p,
            "conditions": {"isolated_circuits": info.isolated, "totally_cyclic": info.totally_cyclic},
            "missing": mm.ground.names(sum(1 << p for p in info.missing)),
            "method": info.cyclic_method,
        }
        return report, 0 if ok else 1
    if cmd.verb == "essential":
        info = p_connectivity(mm, P, cmd.relax)
        if not info.holds(cmd.relax):
            return {"status": Status.NOT_P_CONNECTED.value, "P": cmd.p}, 1
        elements = []
        for e in mm.unsigned_labels():
            entry: dict[str, Any] = {"element": e, "essential": is_p_essential(mm, e, P, cmd.relax)}
            if len(P) == 2 and not mm.om.loops & P.mask:
                entry["characterization"] = essential_characterization(mm, e, P, cmd.relax)
            elements.append(entry)
        essential = [x["element"] for x in elements if x["essential"]]
        return {"P": cmd.p, "essential": essential, "elements": elements}, 0 if not essential else 1
    if cmd.verb == "orient":
        solve = brute_force_p_orientation if cmd.brute_force else find_p_orientation
        return _orientation_report(solve(mm, P, cmd.relax))
    raise UsageError(f"unhandled command {cmd.verb!r}")  # pragma: no cover


def _summary(verb: str, report: dict, code: int) -> str:
    verdict = {0: "yes/feasible", 1: "no/infeasible", 2: "error"}[code]
    parts = [f"{verb}: {verdict}"]
    for key in ("status", "witness", "signature", "orientation", "certificate", "essential"):
        if key in report:
            parts.append(f"{key}={report[key]}")
    return "  ".join(parts)


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        cmd = Command(
            verb=args.verb,
            path=args.input,
            p=_split(args.p) or None,
            delete=_split(args.delete),
            contract=_split(args.contract),
            pairs=_pairs(args.pairs),
            brute_force=args.brute_force,
            relax=args.relax,
        )
        report, code = run(cmd)
    except InternalConsistencyError:
        raise
    except MatroidError as exc:
        print(dump({"error": str(exc)}))
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(dump(report))
    if args.summary:
        print(_summary(args.verb, report, code), file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
