"""Command-line front end.

Exit codes: 0 when every check holds, 1 when a verification finds a
counterexample, 2 for usage errors and size-cap failures.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from .characters import DecompResult, Functor, SizeCapExceeded, size_cap
from .detector import (
    DetectionReport,
    GroupSpec,
    classify_gl9,
    detect,
    verify_lr_oracle,
    verify_plethysm_oracle,
    verify_rs_detection,
    verify_theorem_a1,
    verify_theorem_a2,
    verify_theorem_schur,
)
from .liealg import enumerate_irreps_of_dim, weyl_dimension
from .lr import lr_coefficient, tensor_decompose_lr
from .partitions import Partition, count_bounded_partitions, verify_corollary_identities
from .plethysm import sym_of_sym_sl2
from .properties import run_property_suite
from .report import Report

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2

# fixed so failures localize: later suites lean on machinery the earlier ones check
VERIFY_ORDER = ("corollary", "a1", "plethysm", "a2", "schur", "rs", "gl9")
VERIFY_TARGETS = VERIFY_ORDER + ("lr", "properties", "all")


@dataclass
class RunConfig:
    command: str
    fmt: str
    size_cap: int | None
    seed: int
    out: str | None
    args: argparse.Namespace


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # usage errors exit 2 with the message
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _partition_arg(text: str) -> Partition:
    body = text.strip().strip("()[]")
    try:
        return Partition(int(x) for x in body.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid partition {text!r}: {exc}") from None


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("table", "json"), default="table")
    common.add_argument("--size-cap", type=_positive, default=None,
                        help="maximum weight entries per character (env LINEDETECT_SIZE_CAP)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized property checks")
    common.add_argument("--out", default=None, help="also write the output to this file")

    parser = _Parser(prog="linedetect", description="Detection of reductive subgroups by invariant lines.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson decomposition")
    p.add_argument("lam", type=_partition_arg)
    p.add_argument("mu", type=_partition_arg)
    p.add_argument("--rank", type=_positive, required=True, help="m, the dimension of V")
    p.add_argument("--nu", type=_partition_arg, default=None, help="print the single coefficient C^nu")

    p = sub.add_parser("plethysm", parents=[common], help="Sym^j(Sym^k) for SL2")
    p.add_argument("j", type=_positive)
    p.add_argument("k", type=_nonneg)

    p = sub.add_parser("partitions", parents=[common], help="p(k, j, n)")
    p.add_argument("k", type=_nonneg)
    p.add_argument("j", type=_nonneg)
    p.add_argument("n", type=_nonneg)

    p = sub.add_parser("enumerate-dim", parents=[common], help="irreducibles of a given dimension")
    p.add_argument("d", type=_positive)

    p = sub.add_parser("detect", parents=[common], help="decide detection for one group")
    p.add_argument("--group", required=True, help='e.g. "B4:[1,0,0,0]" or "A2:[1,0];A2:[1,0]"')
    p.add_argument("--functor", required=True, help="sym2..sym4, ext2..ext4, tensor2..tensor4")
    p.add_argument("--method", choices=("auto", "character", "weyl"), default="auto")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("target", choices=VERIFY_TARGETS)
    p.add_argument("--n-max", type=_positive, default=13)
    p.add_argument("--k-max", type=_positive, default=6)
    p.add_argument("--l-max", type=_positive, default=300, help="largest l for the bounded-partition identities")
    p.add_argument("--size-max", type=_positive, default=4, help="largest |lambda| for schur")
    p.add_argument("--m-window", type=_nonneg, default=3, help="schur checks 3l < m <= 3l + window")
    p.add_argument("--rs-m", type=_positive, nargs="+", default=[2, 3])
    return parser


def _table(columns: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [[str(c) for c in columns]] + [[_cell(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(columns))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _cell(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(map(str, value)) + "]"
    return str(value)


def _dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


def emit(result: Any, fmt: str = "table") -> str:
    """Render a result as a fixed-width table or canonical compact JSON."""
    if isinstance(result, DecompResult):
        if fmt == "json":
            return result.to_json()
        key = "partition" if result.kind == "partition" else "weight"
        return _table([key, "mult"], [[_key_cell(k), m] for k, m in result.terms.items()])
    if isinstance(result, DetectionReport):
        if fmt == "json":
            return _dumps(result.to_dict())
        d = result.to_dict()
        head = [f"group: {d['group']} ({d['lie_type']}), dimension {d['rep_dimension']}",
                f"functor: {d['functor']}  method: {d['method']}",
                f"rs_factorization: {d['rs_factorization']}",
                result.summary()]
        body = _table(["weight", "mult"], [[_key_cell(k), m] for k, m in result.decomposition_digest])
        return "\n".join(head) + f"\ntop {len(result.decomposition_digest)} of {d['n_terms']} summands:\n" + body
    if isinstance(result, Report):
        if fmt == "json":
            return _dumps(result.to_dict())
        status = "PASS" if result.passed else "FAIL"
        text = f"[{status}] {result.name}: {result.summary}\n"
        text += _table(result.columns, [[row.get(c, "") for c in result.columns] for row in result.rows])
        if result.failures:
            text += "\nfailures:\n" + "\n".join(f"  {f}" for f in result.failures)
        return text
    if isinstance(result, list) and all(isinstance(r, Report) for r in result):
        if fmt == "json":
            return _dumps({"passed": all(r.passed for r in result), "suites": [r.to_dict() for r in result]})
        parts = [emit(r, fmt) for r in result]
        summary = "\n".join(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.summary}" for r in result)
        return "\n\n".join(parts) + "\n\nsummary:\n" + summary
    if isinstance(result, dict):
        if fmt == "json":
            return _dumps(result)
        if "entries" in result:
            cols = ["group", "weight", "lie_type", "dimension"]
            return _table(cols, [[e[c] for c in cols] for e in result["entries"]])
        if "value" in result:
            return str(result["value"])
        return _table(list(result), [list(result.values())])
    raise TypeError(f"cannot emit {type(result).__name__}")


def _key_cell(key: Any) -> str:
    if isinstance(key, Partition):
        return str(key)
    return _cell(key)


def _run_verify(cfg: RunConfig) -> list[Report]:
    a = cfg.args
    suites = {
        "corollary": lambda: verify_corollary_identities(a.l_max),
        "a1": lambda: verify_theorem_a1(a.n_max),
        "plethysm": lambda: verify_plethysm_oracle(),
        "a2": lambda: verify_theorem_a2(a.k_max),
        "schur": lambda: verify_theorem_schur(size_max=a.size_max, m_window=a.m_window),
        "rs": lambda: verify_rs_detection(a.rs_m),
        "gl9": classify_gl9,
        "lr": verify_lr_oracle,
        "properties": lambda: run_property_suite(cfg.seed),
    }
    targets = VERIFY_ORDER if a.target == "all" else (a.target,)
    return [suites[t]() for t in targets]


def _dispatch(cfg: RunConfig) -> tuple[Any, int]:
    a = cfg.args
    if cfg.command == "lr":
        if a.nu is not None:
            c = lr_coefficient(a.lam, a.mu, a.nu)
            return {"lambda": str(a.lam), "mu": str(a.mu), "nu": str(a.nu), "value": str(c)}, EXIT_OK
        try:
            return tensor_decompose_lr(a.lam, a.mu, a.rank), EXIT_OK
        except ValueError as exc:
            raise _UsageError(f"--rank: {exc}") from None
    if cfg.command == "plethysm":
        return sym_of_sym_sl2(a.j, a.k), EXIT_OK
    if cfg.command == "partitions":
        value = count_bounded_partitions(a.k, a.j, a.n)
        return {"k": a.k, "j": a.j, "n": a.n, "value": str(value)}, EXIT_OK
    if cfg.command == "enumerate-dim":
        entries = []
        for group, weight in enumerate_irreps_of_dim(a.d):
            spec = GroupSpec.from_entry(group, weight)
            entries.append({"group": group.name, "weight": list(weight), "lie_type": spec.lie_type,
                            "dimension": weyl_dimension(group, weight)})
        return {"d": a.d, "entries": entries}, EXIT_OK
    if cfg.command == "detect":
        try:
            spec = GroupSpec.parse(a.group)
        except ValueError as exc:
            raise _UsageError(f"--group: {exc}") from None
        try:
            functor = Functor.parse(a.functor)
        except ValueError as exc:
            raise _UsageError(f"--functor: {exc}") from None
        return detect(spec, functor, a.method), EXIT_OK
    if cfg.command == "verify":
        reports = _run_verify(cfg)
        code = EXIT_OK if all(r.passed for r in reports) else EXIT_COUNTEREXAMPLE
        return (reports if len(reports) > 1 else reports[0]), code
    raise _UsageError(f"unknown command {cfg.command}")


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    """Parse ``argv``, run the subcommand, print its output, return the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(list(argv) if argv is not None else None)
    except _UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    cfg = RunConfig(ns.command, ns.fmt, ns.size_cap, ns.seed, ns.out, ns)
    try:
        if cfg.size_cap is not None:
            with size_cap(cfg.size_cap):
                result, code = _dispatch(cfg)
        else:
            result, code = _dispatch(cfg)
    except _UsageError as exc:
        print(f"linedetect: error: {exc}", file=stderr)
        return EXIT_USAGE
    except SizeCapExceeded as exc:
        print(f"linedetect: size cap exceeded (--size-cap / LINEDETECT_SIZE_CAP): {exc}", file=stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"linedetect: error: {exc}", file=stderr)
        return EXIT_USAGE
    text = emit(result, cfg.fmt)
    print(text, file=stdout)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
