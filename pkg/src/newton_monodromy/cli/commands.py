import argparse
import json
import logging
import sys

from newton_monodromy.config import configure_logging
from newton_monodromy.errors import MonodromyError
from newton_monodromy.model.model_classes import ASSUMPTIONS, COMMANDS, JobSpec, run
from newton_monodromy.newton.polyhedra import MODES
from newton_monodromy.parsing.parse_polynomial import parse_polynomial, parse_root_list
from newton_monodromy.reporting.report_functions import render
from newton_monodromy.zeta.cyclotomic import RootOfUnity

logger = logging.getLogger(__name__)


def read_inputs(path):
    """Loads an inputs block, as echoed in the machine output, from a JSON file."""

    with open(path, "r") as f:
        document = json.load(f)
    return document.get("inputs", document)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="newton-monodromy",
        description="Monodromy invariants of f = P/Q computed from Newton polyhedra.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("-n", type=int, help="number of variables")
    parser.add_argument("-P", help='numerator, e.g. "x^2 + y^3"')
    parser.add_argument("-Q", help='denominator, e.g. "x + y" (default 1)')
    parser.add_argument("--mode", choices=MODES)
    parser.add_argument("--lambda", dest="roots", action="append", help="eigenvalue class k/d, repeatable")
    parser.add_argument("--all-lambdas", action="store_true", default=None)
    parser.add_argument("--format", dest="output_format", choices=("text", "machine"), default="text")
    for name in ASSUMPTIONS:
        parser.add_argument(f"--assume-{name}", dest=f"assume_{name}", action="store_true", default=None)
    parser.add_argument("--m", type=int, help="power of the monodromy for lefschetz")
    parser.add_argument("--k", type=int, help="block size threshold for jordan")
    parser.add_argument("--input", help="JSON file holding an inputs block")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    return parser


def _merged(args, inputs, key, attribute=None):
    value = getattr(args, attribute or key)
    return inputs.get(key) if value is None else value


def job_from_args(args):
    """Combines command line flags with an optional inputs file; flags win."""

    inputs = read_inputs(args.input) if args.input else {}
    n = _merged(args, inputs, "n")
    P = _merged(args, inputs, "P")
    if n is None or P is None:
        raise MonodromyError("both -n and -P are required (directly or through --input)")
    Q = _merged(args, inputs, "Q") or "1"
    roots = []
    for item in args.roots or inputs.get("lambda") or []:
        roots.extend(parse_root_list(item) if isinstance(item, str) else [RootOfUnity.from_string(str(item))])
    file_assumptions = inputs.get("assumptions", {})
    assumptions = {}
    for name in ASSUMPTIONS:
        flag = getattr(args, f"assume_{name}")
        assumptions[name] = bool(file_assumptions.get(name)) if flag is None else flag
    return JobSpec(
        command=args.command,
        n=int(n),
        P=parse_polynomial(P, int(n)),
        Q=parse_polynomial(Q, int(n)),
        mode=_merged(args, inputs, "mode") or "local",
        roots=roots,
        all_lambdas=bool(_merged(args, inputs, "all_lambdas")),
        output_format=args.output_format,
        assumptions=assumptions,
        m=_merged(args, inputs, "m"),
        k=_merged(args, inputs, "k"),
    )


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        spec = job_from_args(args)
    except (MonodromyError, OSError, ValueError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    report, status = run(spec)
    print(render(report, spec.output_format))
    logger.info("%s finished with status %d", spec.command, status)
    return status


if __name__ == "__main__":
    sys.exit(main())
