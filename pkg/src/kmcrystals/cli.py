"""Command-line front end: batch verification, single-case traces, enumeration.

Exit codes: 0 all checks passed, 1 at least one verification failure,
2 configuration or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .binf import BInfElement
from .cartan import PRESETS, CartanData, Weight
from .engine import lusztig_params, run_recursion, verify_identity, vertices
from .errors import CrystalError, MembershipError, NotReducedError
from .hw import enumerate_crystal
from .sweep import run_sweep

EXIT_OK = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_CONFIG_ERROR = 2


class ConfigError(Exception):
    pass


def _parse_cartan(spec: str) -> tuple[CartanData, str | None]:
    """Resolve a preset name or a path to a JSON file {"gcm": [[...]]}."""
    if spec in PRESETS:
        return CartanData.preset(spec), spec
    path = Path(spec)
    if not path.exists():
        raise ConfigError(f"--cartan {spec!r}: not a preset {sorted(PRESETS)} and no such file")
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
        return CartanData.from_gcm(payload["gcm"]), None
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as err:
        raise ConfigError(f"--cartan {spec!r}: invalid Cartan file: {err}") from None


def _parse_ints(text: str, flag: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ConfigError(f"{flag} expects comma-separated integers, got {text!r}") from None


def _parse_lambda(cartan: CartanData, text: str) -> Weight:
    coeffs = _parse_ints(text, "--lambda")
    if len(coeffs) != cartan.rank:
        raise ConfigError(f"--lambda {text!r}: expected {cartan.rank} coordinates")
    if any(c < 0 for c in coeffs):
        raise ConfigError(f"--lambda {text!r}: coordinates must be nonnegative")
    return Weight.from_dominant(coeffs)


def _write_out(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _weight_json(mu: Weight) -> dict:
    return {"dominant": list(mu.dominant), "root": list(mu.root.coords)}


def cmd_verify(args) -> int:
    cartan, label = _parse_cartan(args.cartan)
    lams = [_parse_lambda(cartan, text) for text in args.lam]
    report = run_sweep(
        cartan,
        [l.dominant for l in lams],
        depth=args.depth,
        max_word_len=args.max_word_len,
        jobs=args.jobs,
        cartan_label=label,
    )
    _write_out(report.to_json_str(), args.out)
    print(
        f"{report.cases} cases, {len(report.failures)} failures, "
        f"{report.elapsed_seconds}s",
        file=sys.stderr,
    )
    return report.exit_code


def cmd_trace(args) -> int:
    cartan, _ = _parse_cartan(args.cartan)
    lam = _parse_lambda(cartan, args.lam)
    b_word = _parse_ints(args.b, "--b")
    word = _parse_ints(args.word, "--word")
    for i in (*b_word, *word):
        if not 1 <= i <= cartan.rank:
            raise ConfigError(f"index {i} out of range 1..{cartan.rank}")
    b = BInfElement.from_word(cartan, b_word)
    try:
        trace = run_recursion(b, lam, word)
    except (MembershipError, NotReducedError) as err:
        raise ConfigError(str(err)) from None
    payload = trace.to_json()
    payload["cartan"] = {"gcm": [list(r) for r in cartan.gcm]}
    payload["identity_holds"] = verify_identity(trace)
    if args.verbose:
        payload["strings"] = {
            "b_seq": [x.data.to_json() for x in trace.b_seq],
            "cascade": [x.data.to_json() for x in trace.cascade],
            "lhs": trace.lhs.data.to_json(),
            "rhs": trace.rhs.data.to_json(),
        }
    try:
        payload["vertices"] = [_weight_json(mu) for mu in vertices(trace)]
        payload["n"] = lusztig_params(trace)
    except CrystalError as err:
        payload["finding"] = str(err)
    _write_out(json.dumps(payload, ensure_ascii=False, indent=2), args.out)
    ok = payload["identity_holds"] and "finding" not in payload
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILURE


def cmd_enumerate(args) -> int:
    cartan, _ = _parse_cartan(args.cartan)
    lam = _parse_lambda(cartan, args.lam)
    enum = enumerate_crystal(cartan, lam, args.depth)
    lines = [
        json.dumps(
            {"word": list(x.b.word), "weight": _weight_json(x.weight())},
            ensure_ascii=False,
        )
        for x in enum.elements
    ]
    lines.append(
        json.dumps({"count": len(enum.elements), "complete": enum.complete}, ensure_ascii=False)
    )
    _write_out("\n".join(lines), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kmcrystals",
        description="Crystal combinatorics for symmetrizable Kac-Moody algebras: "
        "verify reflection identities, trace single cases, enumerate crystals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--cartan",
        required=True,
        help="preset name (%s) or path to a JSON file {'gcm': [[...]]}" % ", ".join(sorted(PRESETS)),
    )
    common.add_argument("--out", help="write output to this file instead of stdout")

    p_verify = sub.add_parser("verify", parents=[common], help="run a batch verification sweep")
    p_verify.add_argument(
        "--lambda",
        dest="lam",
        action="append",
        required=True,
        metavar="CSV",
        help="dominant weight coordinates; repeat the flag to sweep several",
    )
    p_verify.add_argument("--depth", type=int, required=True, help="enumeration depth cap")
    p_verify.add_argument(
        "--max-word-len", type=int, required=True, help="reduced-word length cap"
    )
    p_verify.add_argument("--jobs", type=int, default=1, help="parallel workers (per lambda)")
    p_verify.set_defaults(func=cmd_verify)

    p_trace = sub.add_parser("trace", parents=[common], help="trace one case as JSON")
    p_trace.add_argument("--lambda", dest="lam", required=True, metavar="CSV")
    p_trace.add_argument(
        "--b",
        default="",
        metavar="CSV",
        help="lowering word of the element, applied left to right (empty = highest)",
    )
    p_trace.add_argument("--word", default="", metavar="CSV", help="reduced reflection word")
    p_trace.add_argument(
        "--verbose", action="store_true", help="include canonical string data per element"
    )
    p_trace.set_defaults(func=cmd_trace)

    p_enum = sub.add_parser(
        "enumerate", parents=[common], help="enumerate a highest-weight crystal as JSON lines"
    )
    p_enum.add_argument("--lambda", dest="lam", required=True, metavar="CSV")
    p_enum.add_argument("--depth", type=int, required=True, help="enumeration depth cap")
    p_enum.set_defaults(func=cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())
