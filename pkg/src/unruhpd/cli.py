"""Command line front end.

Subcommands:
  play        score a single game configuration
  sweep       tabulate payoffs over an acceleration range (CSV)
  fig2        payoff-vs-acceleration curves at maximal entanglement (CSV)
  verify      replay the closed-form cross-check suites
  equilibria  analyze a finite strategy set at one configuration

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
All floating point output uses 17 significant digits so that reruns are
byte-identical and values round-trip exactly.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys

import numpy as np

from .equilibrium import analyze
from .game import GAMMA_MAX, NAMED_STRATEGIES, Strategy
from .payoff import PayoffTable, GameSetup, play
from .unruh import R_MAX
from .verify import DEFAULT_GRID, DEFAULT_TOL, SUITE_NAMES, run_suite

_PI_TOKEN = re.compile(
    r"^(?P<sign>[+-])?(?P<coef>\d+(?:\.\d*)?)?pi(?:/(?P<den>\d+(?:\.\d*)?))?$"
)


def fmt(value: float) -> str:
    return f"{value:.17g}"


def parse_angle(token: str) -> float:
    """Accept plain floats plus pi fractions: 'pi', 'pi/4', '3pi/4', '-pi/2'."""
    text = token.strip().lower().replace(" ", "").replace("*", "")
    match = _PI_TOKEN.match(text)
    if match:
        value = math.pi
        if match.group("coef"):
            value *= float(match.group("coef"))
        if match.group("den"):
            value /= float(match.group("den"))
        if match.group("sign") == "-":
            value = -value
        return value
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse angle {token!r}") from None


def parse_strategy(token: str) -> Strategy:
    """A named move C|D|Q|M, or 'alpha,theta' with angles as in parse_angle."""
    text = token.strip()
    if text in NAMED_STRATEGIES:
        return NAMED_STRATEGIES[text]
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"strategy must be one of {'|'.join(NAMED_STRATEGIES)} or 'alpha,theta', got {token!r}"
        )
    return Strategy(parse_angle(parts[0]), parse_angle(parts[1]))


def parse_profile(token: str) -> str:
    text = token.strip()
    if len(text) != 2 or any(ch not in NAMED_STRATEGIES for ch in text):
        raise argparse.ArgumentTypeError(f"profile must be two of {'|'.join(NAMED_STRATEGIES)}, got {token!r}")
    return text


def parse_payoffs(token: str) -> PayoffTable:
    parts = token.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"--payoffs wants R,S,T,P, got {token!r}")
    try:
        reward, sucker, temptation, punishment = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--payoffs wants four numbers, got {token!r}") from None
    return PayoffTable.from_scalars(reward, sucker, temptation, punishment)


def load_config_table(path: str, base: PayoffTable) -> PayoffTable:
    """Read 'cc/cd/dc/dd = a,b' overrides from a small key=value file."""
    entries = {"cc": base.cc, "cd": base.cd, "dc": base.dc, "dd": base.dd}
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
            key, _, value = line.partition("=")
            key = key.strip().lower()
            if key not in entries:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r} (use cc, cd, dc, dd)")
            parts = [p.strip() for p in value.split(",")]
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: value must be 'alice,bob', got {value.strip()!r}")
            try:
                entries[key] = (float(parts[0]), float(parts[1]))
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-numeric payoff in {value.strip()!r}") from None
    return PayoffTable(**entries)


def resolve_table(args: argparse.Namespace) -> PayoffTable:
    table = getattr(args, "payoffs", None) or PayoffTable()
    config = getattr(args, "config", None)
    if config:
        table = load_config_table(config, table)
    return table


def add_table_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--payoffs",
        type=parse_payoffs,
        default=None,
        metavar="R,S,T,P",
        help="payoff scalars: reward, sucker, temptation, punishment (default 3,0,5,1)",
    )
    parser.add_argument(
        "--config",
        default=None,
        metavar="PATH",
        help="key=value file overriding payoff pairs (keys cc, cd, dc, dd; values 'alice,bob')",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unruhpd",
        description="Quantum prisoner's dilemma with one uniformly accelerated player.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_play = sub.add_parser("play", help="score a single game configuration")
    p_play.add_argument("--gamma", type=parse_angle, required=True, help=f"entanglement angle in [0, {fmt(GAMMA_MAX)}]")
    p_play.add_argument("--r", type=parse_angle, required=True, help=f"acceleration angle in [0, {fmt(R_MAX)}]")
    p_play.add_argument("--alice", type=parse_strategy, required=True, help="C|D|Q|M or 'alpha,theta'")
    p_play.add_argument("--bob", type=parse_strategy, required=True, help="C|D|Q|M or 'alpha,theta'")
    p_play.add_argument("--json", action="store_true", help="emit a JSON object instead of key=value lines")
    add_table_flags(p_play)
    p_play.set_defaults(func=cmd_play)

    p_sweep = sub.add_parser("sweep", help="tabulate payoffs over an acceleration range")
    p_sweep.add_argument("--gamma", type=parse_angle, required=True)
    p_sweep.add_argument("--r-start", type=parse_angle, default=0.0)
    p_sweep.add_argument("--r-end", type=parse_angle, default=R_MAX)
    p_sweep.add_argument("--steps", type=int, required=True, help="number of grid points, at least 2")
    p_sweep.add_argument(
        "--profiles",
        type=parse_profile,
        nargs="+",
        default=["CC", "CD", "DC", "DD"],
        help="profiles to tabulate, e.g. CC CD DC DD",
    )
    p_sweep.add_argument("--out", default="-", help="output CSV path, '-' for stdout")
    add_table_flags(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_fig2 = sub.add_parser("fig2", help="payoff curves at maximal entanglement")
    p_fig2.add_argument("--steps", type=int, required=True, help="number of grid points, at least 2")
    p_fig2.add_argument("--out", default="-", help="output CSV path, '-' for stdout")
    add_table_flags(p_fig2)
    p_fig2.set_defaults(func=cmd_fig2)

    p_verify = sub.add_parser("verify", help="replay the closed-form cross-check suites")
    p_verify.add_argument("--suite", choices=SUITE_NAMES + ("all",), default="all")
    p_verify.add_argument("--grid", type=int, default=DEFAULT_GRID, help="acceleration grid points, at least 3")
    p_verify.add_argument("--tol", type=float, default=DEFAULT_TOL, help="maximum tolerated deviation")
    p_verify.set_defaults(func=cmd_verify)

    p_eq = sub.add_parser("equilibria", help="analyze a finite strategy set")
    p_eq.add_argument("--gamma", type=parse_angle, required=True)
    p_eq.add_argument("--r", type=parse_angle, required=True)
    p_eq.add_argument(
        "--set",
        dest="strategy_set",
        default="C,D",
        help="comma list of named moves, e.g. C,D,Q,M",
    )
    add_table_flags(p_eq)
    p_eq.set_defaults(func=cmd_equilibria)

    return parser


def cmd_play(args: argparse.Namespace) -> int:
    setup = GameSetup(gamma=args.gamma, r=args.r, table=resolve_table(args))
    result = play(setup, args.alice, args.bob)
    record = {
        "gamma": args.gamma,
        "r": args.r,
        "alice_strategy": str(args.alice),
        "bob_strategy": str(args.bob),
        "alice_payoff": result.alice,
        "bob_payoff": result.bob,
    }
    if args.json:
        print(json.dumps(record))
    else:
        for key, value in record.items():
            print(f"{key}={fmt(value) if isinstance(value, float) else value}")
    return 0


def _write_csv(path: str, header: str, rows: list[str]) -> None:
    text = "\n".join([header, *rows]) + "\n"
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.steps < 2:
        raise ValueError("--steps must be at least 2")
    if args.r_start > args.r_end:
        raise ValueError("--r-start must not exceed --r-end")
    table = resolve_table(args)
    rows = []
    for r in np.linspace(args.r_start, args.r_end, args.steps):
        setup = GameSetup(gamma=args.gamma, r=float(r), table=table)
        for profile in args.profiles:
            alice, bob = NAMED_STRATEGIES[profile[0]], NAMED_STRATEGIES[profile[1]]
            result = play(setup, alice, bob)
            rows.append(
                ",".join(
                    [fmt(args.gamma), fmt(float(r)), profile[0], profile[1], fmt(result.alice), fmt(result.bob)]
                )
            )
    _write_csv(args.out, "gamma,r,alice_strategy,bob_strategy,alice_payoff,bob_payoff", rows)
    return 0


def cmd_fig2(args: argparse.Namespace) -> int:
    if args.steps < 2:
        raise ValueError("--steps must be at least 2")
    table = resolve_table(args)
    rows = []
    for r in np.linspace(0.0, R_MAX, args.steps):
        setup = GameSetup(gamma=math.pi / 2.0, r=float(r), table=table)
        p_cc = play(setup, NAMED_STRATEGIES["C"], NAMED_STRATEGIES["C"]).alice
        p_dd = play(setup, NAMED_STRATEGIES["D"], NAMED_STRATEGIES["D"]).alice
        p_a_cd = play(setup, NAMED_STRATEGIES["C"], NAMED_STRATEGIES["D"]).alice
        p_a_dc = play(setup, NAMED_STRATEGIES["D"], NAMED_STRATEGIES["C"]).alice
        rows.append(",".join([fmt(float(r)), fmt(p_cc), fmt(p_dd), fmt(p_a_cd), fmt(p_a_dc)]))
    _write_csv(args.out, "r,P_CC,P_DD,P_A_CD,P_A_DC", rows)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.grid < 3:
        raise ValueError("--grid must be at least 3")
    if args.tol <= 0.0:
        raise ValueError("--tol must be positive")
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    outcomes = [run_suite(name, args.grid, args.tol) for name in names]
    for outcome in outcomes:
        print(f"suite={outcome.suite}")
        print(f"points_checked={outcome.points_checked}")
        print(f"max_abs_error={fmt(outcome.max_abs_error)}")
        print(f"passed={'true' if outcome.passed else 'false'}")
        for note in outcome.discrepancy_notes:
            print(f"note={note}")
        print()
    all_passed = all(o.passed for o in outcomes)
    print(f"overall={'pass' if all_passed else 'fail'}")
    return 0 if all_passed else 1


def cmd_equilibria(args: argparse.Namespace) -> int:
    labels = [token.strip() for token in args.strategy_set.split(",") if token.strip()]
    if not labels:
        raise ValueError("--set must name at least one strategy")
    unknown = [label for label in labels if label not in NAMED_STRATEGIES]
    if unknown:
        raise ValueError(f"unknown strategies in --set: {', '.join(unknown)}")
    strategies = [NAMED_STRATEGIES[label] for label in labels]
    setup = GameSetup(gamma=args.gamma, r=args.r, table=resolve_table(args))
    report = analyze(setup, strategies)

    print(f"gamma={fmt(args.gamma)}")
    print(f"r={fmt(args.r)}")
    print(f"set={','.join(labels)}")
    for i, row_label in enumerate(labels):
        for j, col_label in enumerate(labels):
            alice, bob = report.table[i][j]
            print(f"payoff[{row_label},{col_label}]={fmt(alice)},{fmt(bob)}")
    nash_text = ",".join(f"({labels[i]},{labels[j]})" for i, j in report.nash)
    print(f"nash={nash_text}")
    for player, found in (("alice", report.dominant_alice), ("bob", report.dominant_bob)):
        if found is None:
            print(f"dominant_{player}=none")
        else:
            index, kind = found
            print(f"dominant_{player}={labels[index]}:{kind}")
    pareto_text = ",".join(f"({labels[i]},{labels[j]})" for i, j in report.pareto)
    print(f"pareto={pareto_text}")
    for j, reply in report.best_responses_alice.items():
        print(f"best_response_alice[{labels[j]}]={labels[reply]}")
    for i, reply in report.best_responses_bob.items():
        print(f"best_response_bob[{labels[i]}]={labels[reply]}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
