"""Command-line front end.

Exit status: 0 success, 1 verification failed, 2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core_sets import parse_set_system, random_set_system
from .errors import BudgetExceeded, InputError, InternalCheckError, NonGenericError
from .matroid import TUTTE_MAX_N, h_vector_from_tutte, tutte
from .pipeline import Instance, RunConfig, verify
from .symbolic import build_representation, hyperplanes_with_forms

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed indentation."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def monomial(q) -> str:
    parts = [f"x_{j + 1}" if e == 1 else f"x_{j + 1}^{e}" for j, e in enumerate(q) if e]
    return "*".join(parts) or "1"


def load(path: str) -> Instance:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    inst = Instance.from_system(parse_set_system(text))
    if inst.normalized:
        print(f"note: presentation reduced to {inst.system.d} blocks (matroid rank)", file=sys.stderr)
    return inst


def info(inst: Instance) -> dict:
    M = inst.matroid
    return {"n": M.n, "d": inst.system.d, "rank": M.d, "bases": len(M.bases()),
            "normalized": inst.normalized, "system": inst.system.to_json()}


def powerideal(inst: Instance, cfg: RunConfig) -> tuple[dict, list]:
    V = build_representation(inst.system, cfg.mode, cfg.seed, inst.matroid)
    hyps = hyperplanes_with_forms(V, inst.matroid)
    ground = inst.system.ground
    return {"representation": V.to_json(),
            "hyperplanes": [h.to_json(ground) for h in hyps]}, hyps


def cmd_info(inst, cfg, out):
    data = info(inst)
    if cfg.format == "json":
        out(dumps(data))
    else:
        for key in ("n", "d", "rank", "bases"):
            out(f"{key} = {data[key]}")
    return EXIT_OK


def cmd_tutte(inst, cfg, out):
    T = tutte(inst.matroid, cfg.max_n)
    out(dumps(T.to_json()) if cfg.format == "json" else str(T))
    return EXIT_OK


def cmd_hvector(inst, cfg, out):
    h = h_vector_from_tutte(inst.matroid, tutte(inst.matroid, cfg.max_n))
    out(dumps(h) if cfg.format == "json" else json.dumps(h, separators=(",", ":")))
    return EXIT_OK


def cmd_polytope(inst, cfg, out):
    P = inst.polymatroid
    if cfg.format == "json":
        out(dumps(P.to_json()))
        return EXIT_OK
    out("inequalities:")
    for line in P.facets():
        out(f"  {line}")
    out("lattice points by degree:")
    for k, level in enumerate(P.lattice_points()):
        out(f"  {k} ({len(level)}): " + ", ".join(monomial(q) for q in level))
    out("minimal nonparking monomials:")
    out("  " + ", ".join(monomial(q) for q in P.minimal_nonmembers()))
    return EXIT_OK


def cmd_parking(inst, cfg, out):
    levels = inst.polymatroid.lattice_points()
    if cfg.degree is not None:
        pts = levels[cfg.degree] if 0 <= cfg.degree < len(levels) else []
    else:
        pts = [q for level in levels for q in level]
    if cfg.format == "json":
        out(dumps([list(q) for q in pts]))
    else:
        for q in pts:
            out(" ".join(map(str, q)))
    return EXIT_OK


def cmd_powerideal(inst, cfg, out):
    data, hyps = powerideal(inst, cfg)
    if cfg.format == "json":
        out(dumps(data))
    else:
        ground = inst.system.ground
        for h in hyps:
            out(f"({h.form_str()})^{h.rho}    H = {{{', '.join(ground.names(h.flat))}}}")
    return EXIT_OK


def cmd_verify(inst, cfg, out):
    rep = verify(inst, cfg.mode, cfg.seed, cfg.max_n, cfg.max_degree)
    if cfg.format == "json":
        out(dumps(rep.to_json()))
    else:
        for name, stage in rep.stages.items():
            status = "PASS" if stage["passed"] else "FAIL"
            extra = {k: v for k, v in stage.items() if k != "passed" and v is not None}
            out(f"[{status}] {name}: {json.dumps(extra, sort_keys=True)}")
        s = rep.summary
        if s:
            out(f"h-vector {s['h_vector']}, {s['lattice_points']} parking functions, "
                f"{s['generators']} power generators, {s['minimal_nonmembers']} minimal nonparking monomials")
        out("VERIFIED" if rep.passed else "VERIFICATION FAILED")
    return EXIT_OK if rep.passed else EXIT_FAILED


def cmd_report(inst, cfg, out):
    T = tutte(inst.matroid, cfg.max_n)
    rep = verify(inst, cfg.mode, cfg.seed, cfg.max_n, cfg.max_degree)
    data = {
        "info": info(inst),
        "tutte": T.to_json(),
        "h_vector": h_vector_from_tutte(inst.matroid, T),
        "polytope": inst.polymatroid.to_json(),
        "verification": rep.to_json(),
    }
    if rep.stages["genericity"]["passed"]:
        data["powerideal"] = powerideal(inst, cfg)[0]
    out(dumps(data))
    return EXIT_OK if rep.passed else EXIT_FAILED


COMMANDS = {
    "info": cmd_info, "tutte": cmd_tutte, "hvector": cmd_hvector, "polytope": cmd_polytope,
    "parking": cmd_parking, "powerideal": cmd_powerideal, "verify": cmd_verify, "report": cmd_report,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=["powers", "random"], default="powers")
    common.add_argument("--seed", type=int, default=0, help="seed for --mode random")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--max-n", type=int, default=TUTTE_MAX_N, help="Tutte sweep budget")
    common.add_argument("--max-degree", type=int, default=None,
                        help="refuse verification beyond this degree")

    parser = argparse.ArgumentParser(prog="transpark", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("input")
        if name == "parking":
            g = p.add_mutually_exclusive_group()
            g.add_argument("--degree", type=int)
            g.add_argument("--all", action="store_true")
    g = sub.add_parser("gen", help="print a random full-rank set system")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    return parser


def run(argv=None, out=print) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            out(json.dumps(random_set_system(args.n, args.d, args.seed).to_json()))
            return EXIT_OK
        cfg = RunConfig(args.input, args.command, args.mode, args.seed, args.format,
                        args.max_n, args.max_degree, getattr(args, "degree", None))
        inst = load(cfg.input)
        return COMMANDS[args.command](inst, cfg, out)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (NonGenericError, InternalCheckError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
