"""Command line interface: run one experiment or a suite, emit reports.

Exit protocol: 0 when every checked claim held, 1 when a claim was
falsified by the input, 2 when the input or a resource guard stopped
the run before any claim could be judged.
"""

import argparse
import json
import os
import sys
import traceback
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import belt, bigraph, green, laurent, tropical
from .errors import ClaimViolation, InputError

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_INPUT = 2


def _resolve_target(target):
    if target.endswith(".json") or os.path.sep in target or os.path.isfile(target):
        try:
            return bigraph.load_bigraph(target)
        except FileNotFoundError as exc:
            raise InputError("no such file: %s" % target) from exc
        except json.JSONDecodeError as exc:
            raise InputError("bad JSON in %s: %s" % (target, exc)) from exc
    return bigraph.catalog(target)


def _parse_labeling(text, n):
    parts = [p.strip() for p in text.split(",")]
    try:
        values = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError("bad labeling %r" % text) from exc
    if len(values) == 1:
        return tuple(values * n)
    if len(values) != n:
        raise InputError("labeling has %d entries, expected %d" % (len(values), n))
    return tuple(values)


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_text(doc):
    return json.dumps(doc, indent=2) + "\n"


# -- individual commands ------------------------------------------------------


def cmd_belt(args):
    g = _resolve_target(args.target)
    states = belt.run_belt(g, args.steps)
    doc = {
        "name": args.target,
        "steps": args.steps,
        "cluster": ", ".join(v.render() for v in states[-1].values),
        "catalogVersion": bigraph.catalog_version(),
    }
    return _json_text(doc), EXIT_OK


def cmd_halfperiod(args):
    g = _resolve_target(args.target)
    report = belt.half_period(g)
    period = belt.detect_period(g, 2 * report.N)
    if period is None:
        raise ClaimViolation("no recurrence within 2N = %d steps" % (2 * report.N))
    census_size = None
    if not any(any(row) for row in g.delta):
        census_size = len(belt.cluster_variable_census(g))
    doc = {
        "name": args.target,
        "N": report.N,
        "period": period,
        "sigma": report.sigma.cycles(),
        "colorBehavior": report.color_behavior,
        "identity": report.identity,
        "censusSize": census_size,
        "catalogVersion": bigraph.catalog_version(),
    }
    return _json_text(doc), EXIT_OK


def cmd_green(args):
    g = _resolve_target(args.target)
    cert_gamma, cert_delta = green.verify_bipartite_belt_mgs(g)
    symbolic = None if args.skip_symbolic else belt.half_period(g).sigma
    frozen_sigma = green.frozen_isomorphism_check(g, symbolic)

    def cert_doc(cert):
        return {
            "sequence": [k + 1 for k in cert.sequence],
            "factors": cert.factors,
            "finalCIsMinusPermutation": cert.permutation is not None,
            "permutation": cert.permutation.cycles(),
        }

    doc = {
        "name": args.target,
        "lengths": [g.h_gamma, g.h_delta],
        "certificates": [cert_doc(cert_gamma), cert_doc(cert_delta)],
        "frozenIsomorphism": {
            "sigma": frozen_sigma.cycles(),
            "matchesSymbolic": None if symbolic is None else True,
        },
        "catalogVersion": bigraph.catalog_version(),
    }
    return _json_text(doc), EXIT_OK


def cmd_tropical(args):
    g = _resolve_target(args.target)
    n_half = g.half_period
    rng = tropical.make_rng(args.seed)
    sigma = green.frozen_isomorphism_check(g)
    periods_ok = True
    shift_ok = True
    for _ in range(args.trials):
        lam = tropical.random_labeling(rng, g.n)
        period = tropical.tropical_period(g, lam, 2 * n_half)
        if period is None or (2 * n_half) % period != 0:
            periods_ok = False
        if not tropical.tropical_half_period(g, lam, sigma):
            shift_ok = False
    doc = {
        "name": args.target,
        "N": n_half,
        "seed": args.seed,
        "trials": args.trials,
        "periodsDivide2N": periods_ok,
        "sigma": sigma.cycles(),
        "halfPeriodShiftOk": shift_ok,
        "catalogVersion": bigraph.catalog_version(),
    }
    code = EXIT_OK if periods_ok and shift_ok else EXIT_FALSIFIED
    return _json_text(doc), code


def cmd_census(args):
    g = _resolve_target(args.target)
    lam = _parse_labeling(args.lam, g.n)
    primary, rerun = tropical.census_with_tie_policy(g, lam)
    rows = [("%s" % args.lam, primary)]
    if rerun is not None:
        rows.append(("perturbed", rerun))
    judged = rerun if rerun is not None else primary
    expected_red = g.h_gamma * g.n
    expected_blue = 2 * g.n
    ok = (
        judged.red == expected_red
        and judged.blue == expected_blue
        and judged.ties == 0
        and tropical.blue_times_admissible(judged, g.half_period)
    )
    lines = ["name,lambdaSeed,period,red,blue,ties"]
    for label, census in rows:
        lines.append(
            "%s,%s,%d,%d,%d,%d"
            % (args.target, label, census.period, census.red, census.blue, census.ties)
        )
    text = "\n".join(lines) + "\n"
    return text, EXIT_OK if ok else EXIT_FALSIFIED


def cmd_dual_check(args):
    g = _resolve_target(args.target)
    rng = tropical.make_rng(args.seed)
    labelings = [tropical.constant_labeling(g.n, -1)]
    labelings += [tropical.random_labeling(rng, g.n) for _ in range(args.trials)]
    ok = all(tropical.dual_transfer_check(g, lam) for lam in labelings)
    doc = {
        "name": args.target,
        "seed": args.seed,
        "trials": args.trials,
        "ok": ok,
        "catalogVersion": bigraph.catalog_version(),
    }
    return _json_text(doc), EXIT_OK if ok else EXIT_FALSIFIED


def cmd_catalog_list(args):
    entries = []
    for name in bigraph.catalog_names():
        g = bigraph.catalog(name)
        entries.append(
            {
                "name": name,
                "n": g.n,
                "gammaComponents": [c.name for c in g.gamma_components],
                "deltaComponents": [c.name for c in g.delta_components],
                "hGamma": g.h_gamma,
                "hDelta": g.h_delta,
                "N": g.half_period,
            }
        )
    doc = {"catalogVersion": bigraph.catalog_version(), "entries": entries}
    return _json_text(doc), EXIT_OK


# -- dispatch and the suite runner -------------------------------------------

_COMMANDS = {
    "belt": cmd_belt,
    "halfperiod": cmd_halfperiod,
    "green": cmd_green,
    "tropical": cmd_tropical,
    "census": cmd_census,
    "dual-check": cmd_dual_check,
    "catalog-list": cmd_catalog_list,
}

_CONFIG_DEFAULTS = {
    "steps": 0,
    "seed": 0,
    "trials": 100,
    "lam": "-1",
    "skip_symbolic": False,
    "out": None,
}


def run_experiment(config):
    """Run one config dict; returns (report text, exit code).

    Never raises: failures are folded into the exit code so one bad
    suite entry cannot take down its siblings.
    """
    try:
        command = config.get("command")
        if command not in _COMMANDS:
            raise InputError("unknown command %r" % command)
        guard = config.get("termGuard")
        if guard is not None:
            laurent.set_term_guard(int(guard))
        args = argparse.Namespace(target=config.get("target"), **_CONFIG_DEFAULTS)
        for key in ("steps", "seed", "trials"):
            if key in config:
                setattr(args, key, int(config[key]))
        if "lambda" in config:
            args.lam = str(config["lambda"])
        if "skipSymbolic" in config:
            args.skip_symbolic = bool(config["skipSymbolic"])
        return _COMMANDS[command](args)
    except InputError as exc:
        return "error: %s\n" % exc, EXIT_INPUT
    except ClaimViolation as exc:
        return "falsified: %s\n" % exc, EXIT_FALSIFIED
    except Exception:
        return traceback.format_exc(), EXIT_INPUT


def cmd_suite(args):
    with open(args.file) as handle:
        configs = json.load(handle)
    if not isinstance(configs, list):
        raise InputError("suite file must hold a list of configs")
    if args.jobs > 1 and configs:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run_experiment, configs))
    else:
        results = [run_experiment(cfg) for cfg in configs]
    entries = []
    worst = EXIT_OK
    tally = {EXIT_OK: 0, EXIT_FALSIFIED: 0, EXIT_INPUT: 0}
    for config, (text, code) in zip(configs, results):
        worst = max(worst, code)
        tally[code] += 1
        entries.append({"config": config, "exitCode": code, "report": text})
    doc = {
        "summary": {
            "total": len(configs),
            "verified": tally[EXIT_OK],
            "falsified": tally[EXIT_FALSIFIED],
            "errors": tally[EXIT_INPUT],
        },
        "results": entries,
        "catalogVersion": bigraph.catalog_version(),
    }
    return _json_text(doc), worst


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="zamobelt",
        description="exact engine for bipartite-belt dynamics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.add_argument("--out", default=None, help="write the report here")
        sp.add_argument(
            "--term-guard",
            type=int,
            default=None,
            help="cap on polynomial term counts (env ZAMOBELT_TERM_GUARD)",
        )
        return sp

    sp = add("belt", help="run the symbolic belt and print the cluster")
    sp.add_argument("target")
    sp.add_argument("--steps", type=int, default=0)

    sp = add("halfperiod", help="half-period permutation report")
    sp.add_argument("target")

    sp = add("green", help="maximal green certificates and frozen isomorphism")
    sp.add_argument("target")
    sp.add_argument("--skip-symbolic", action="store_true")

    sp = add("tropical", help="tropical periodicity over random labelings")
    sp.add_argument("target")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=100)

    sp = add("census", help="colored mutation counts over one period")
    sp.add_argument("target")
    sp.add_argument("--lambda", dest="lam", default="-1")

    sp = add("dual-check", help="transfer check against the Langlands dual")
    sp.add_argument("target")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=10)

    add("catalog-list", help="list built-in entries")

    sp = add("suite", help="run a JSON list of experiment configs")
    sp.add_argument("file")
    sp.add_argument("--jobs", type=int, default=1)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    guard = args.term_guard
    if guard is None:
        env = os.environ.get("ZAMOBELT_TERM_GUARD")
        guard = int(env) if env else laurent.DEFAULT_TERM_GUARD
    try:
        laurent.set_term_guard(guard)
        if args.command == "suite":
            text, code = cmd_suite(args)
        else:
            text, code = _COMMANDS[args.command](args)
    except InputError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INPUT
    except ClaimViolation as exc:
        sys.stderr.write("falsified: %s\n" % exc)
        return EXIT_FALSIFIED
    except ValueError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INPUT
    except Exception:
        traceback.print_exc()
        return EXIT_INPUT
    _emit(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
