"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 malformed input.  Output is
deterministic for fixed flags; per-check wall times are only shown when
explicitly requested (``verify --timings``).
"""
from __future__ import annotations

import argparse
import json
import sys

from .affine import affine_relation_instances, find_relation_counterexample
from .center import center_basis_in_degree, central_candidate, expected_center_dimension
from .core import (
    AlgebraElement,
    MultiDegree,
    NormalMonomial,
    Word,
    multidegrees_up_to,
    parse_ints,
)
from .normal_form import enumerate_basis, nm_product, normalize
from .particles import ANNIHILATED, Configuration, act_gen, act_word, configurations
from .rewriting import PARTIC, PLACTIC
from .verify import VerifyConfig, run_verify

SCHEMA = 1


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        payload = {"schema": SCHEMA, **payload}
        print(json.dumps(payload, sort_keys=True))
    elif not args.quiet:
        for line in lines:
            print(line)


def _fmt_monomial(m: NormalMonomial) -> str:
    d = ",".join(str(x) for x in m.d)
    k = ",".join(str(x) for x in m.k)
    return f"d=[{d}], k=[{k}]"


def _parse_monomial_arg(n: int, text: str) -> NormalMonomial:
    """A word string like '2 1 2' or a JSON monomial {'N':..,'d':..,'k':..}."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ValueError(f"bad JSON monomial: {exc}") from None
        m = NormalMonomial.from_json(obj)
        if m.n != n:
            raise ValueError(f"monomial rank {m.n} does not match --N {n}")
        return m
    return normalize(Word.parse(n, text))


def cmd_normalize(args) -> int:
    m = normalize(Word.parse(args.N, args.word))
    _emit(args, {"command": "normalize", "result": m.to_json()}, [f"{_fmt_monomial(m)}  ({m})"])
    return 0


def cmd_mul(args) -> int:
    left = _parse_monomial_arg(args.N, args.left)
    right = _parse_monomial_arg(args.N, args.right)
    m = nm_product(left, right)
    _emit(args, {"command": "mul", "result": m.to_json()}, [f"{_fmt_monomial(m)}  ({m})"])
    return 0


def cmd_basis(args) -> int:
    counts = parse_ints(args.degree)
    if len(counts) != args.N - 1:
        raise ValueError(f"--degree needs {args.N - 1} components for --N {args.N}")
    basis = enumerate_basis(MultiDegree(counts))
    _emit(
        args,
        {"command": "basis", "degree": list(counts), "result": [m.to_json() for m in basis]},
        [f"{_fmt_monomial(m)}  ({m})" for m in basis] + [f"total: {len(basis)}"],
    )
    return 0


def _action_graph_dot(n: int, particles: int) -> list[str]:
    lines = ["digraph action {", "  rankdir=LR;"]
    nodes = [c for c in configurations(n, particles) if c.total() == particles]
    for c in sorted(nodes):
        lines.append(f'  "{c}";')
    for c in sorted(nodes):
        for i in range(1, n):
            out = act_gen(i, c)
            if out is not ANNIHILATED:
                lines.append(f'  "{c}" -> "{out}" [label="a{i}"];')
    lines.append("}")
    return lines


def cmd_act(args) -> int:
    if args.dot:
        if args.particles is None:
            raise ValueError("--dot requires --particles")
        lines = _action_graph_dot(args.N, args.particles)
        _emit(args, {"command": "act", "dot": "\n".join(lines)}, lines)
        return 0
    if args.word is None or args.config is None:
        raise ValueError("act requires --word and --config (or --dot --particles)")
    w = Word.parse(args.N, args.word)
    c = Configuration.parse(args.N, args.config)
    out = act_word(w, c)
    if out is ANNIHILATED:
        _emit(args, {"command": "act", "annihilated": True}, ["annihilated"])
    else:
        _emit(args, {"command": "act", "annihilated": False, "config": list(out.occ)}, [str(out)])
    return 0


def cmd_center(args) -> int:
    lines = []
    degrees = []
    mismatch = None
    for delta in multidegrees_up_to(args.N, args.max_degree):
        basis = center_basis_in_degree(args.N, delta)
        want = expected_center_dimension(delta)
        ok = len(basis) == want
        if ok and want == 1:
            cand = AlgebraElement.from_monomial(central_candidate(args.N, delta.counts[0]))
            ok = basis[0] == cand
        if not ok and mismatch is None:
            mismatch = str(delta)
        entry = {
            "degree": list(delta.counts),
            "dimension": len(basis),
            "basis": [[[str(c), m.to_json()] for m, c in b.sorted_terms()] for b in basis],
        }
        degrees.append(entry)
        line = f"degree ({delta}): dimension {len(basis)}"
        if basis:
            line += "  basis: " + "; ".join(b.pretty() for b in basis)
        lines.append(line)
    if args.expect_theorem:
        lines.append("prediction check: " + ("ok" if mismatch is None else f"MISMATCH at ({mismatch})"))
    _emit(args, {"command": "center", "degrees": degrees, "mismatch": mismatch}, lines)
    return 1 if (args.expect_theorem and mismatch is not None) else 0


def cmd_verify(args) -> int:
    cfg = VerifyConfig(
        n=args.N,
        max_len=args.max_len,
        relations=args.relations,
        include_center=args.center or args.max_degree is not None,
        max_degree=args.max_degree if args.max_degree is not None else 6,
        max_deposit=args.max_deposit,
    )
    report = run_verify(cfg)
    lines = []
    payload_checks = []
    for c in report.checks:
        params = ", ".join(f"{k}={v}" for k, v in sorted(c.params.items()))
        status = "PASS" if c.passed else "FAIL"
        line = f"[{status}] {c.name} ({params})"
        if args.timings:
            line += f"  [{c.seconds:.2f}s]"
        lines.append(line)
        if c.counterexample:
            lines.append(f"       counterexample: {c.counterexample}")
        entry = {
            "name": c.name,
            "params": c.params,
            "passed": c.passed,
            "counterexample": c.counterexample,
        }
        if args.timings:
            entry["seconds"] = round(c.seconds, 3)
        payload_checks.append(entry)
    lines.append("all checks passed" if report.passed else "VERIFICATION FAILED")
    _emit(args, {"command": "verify", "checks": payload_checks, "passed": report.passed}, lines)
    return 0 if report.passed else 1


def cmd_affine_verify(args) -> int:
    instances = affine_relation_instances(args.N, args.m_max, args.k_max)
    for lhs, rhs in instances:
        witness = find_relation_counterexample(lhs, rhs, args.particles)
        if witness is not None:
            _emit(
                args,
                {
                    "command": "affine-verify",
                    "passed": False,
                    "lhs": list(lhs.letters),
                    "rhs": list(rhs.letters),
                    "witness": list(witness.occ),
                },
                [f"FAIL: [{lhs}] vs [{rhs}] differ on configuration {witness}"],
            )
            return 1
    _emit(
        args,
        {"command": "affine-verify", "passed": True, "instances": len(instances)},
        [
            f"all {len(instances)} relation instances verified on configurations "
            f"with <= {args.particles} particles"
        ],
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--quiet", action="store_true", help="suppress text output")

    parser = argparse.ArgumentParser(prog="partic", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("normalize", parents=[common], help="normal form of a word")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--word", required=True, help="letters, e.g. '4 3 2 1 2' (empty = unit)")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("mul", parents=[common], help="product of two words or JSON monomials")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("basis", parents=[common], help="basis monomials of one multidegree")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--degree", required=True, help="occurrence counts, e.g. '1,1,1'")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("act", parents=[common], help="act with a word on a configuration")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--word", help="rightmost letter acts first")
    p.add_argument("--config", help="counts k_1,...,k_{N-1},k_0 (deposit last)")
    p.add_argument("--dot", action="store_true", help="emit the action graph as DOT")
    p.add_argument("--particles", type=int, help="particle number for --dot")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("center", parents=[common], help="graded center basis")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument(
        "--expect-theorem",
        action="store_true",
        help="exit nonzero unless dimensions are 1 at r*(1,...,1) and 0 elsewhere",
    )
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("verify", parents=[common], help="run the certification suite")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--max-len", type=int, default=6, help="word-length bound (keep <= 6)")
    p.add_argument("--relations", choices=[PLACTIC, PARTIC], default=PARTIC)
    p.add_argument("--center", action="store_true", help="also certify graded center dimensions")
    p.add_argument("--max-degree", type=int, default=None, help="degree bound for --center")
    p.add_argument("--max-deposit", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="include wall times (non-reproducible)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("affine-verify", parents=[common], help="check the cyclic relation families")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--particles", type=int, default=6)
    p.add_argument("--m-max", type=int, default=2)
    p.add_argument("--k-max", type=int, default=1)
    p.set_defaults(func=cmd_affine_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
