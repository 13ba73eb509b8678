import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from contextlib import nullcontext

from bench_calculator import BenchCalculator
from errors import IdentifyError
from functions import dump_document, load_settings, read_instance, serialize_instance
from generators import gen_instance
from hilbert import PointSet, cayley_bacharach, hilbert_profile
from identify import identify
from kruskal_calculator import KruskalCalculator
from terracini import terracini_dimension

logger = logging.getLogger(__name__)

EXIT_ERROR = 1

GLOBAL_DEFAULTS = {
    "diagnostics": None,
    "strict": False,
    "quiet": False,
    "verbose": False,
    "settings": None,
}


def configure_logging(quiet: bool = False, verbose: bool = False):
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with EXIT_ERROR; 2 is the Inconclusive exit code"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the subcommand from being reset by the subparser
    common = _Parser(add_help=False)
    common.add_argument("--diagnostics", action="store_true", default=argparse.SUPPRESS,
                        help="attach the position report and family obstruction to verdicts")
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS,
                        help="reject zero coefficients while parsing")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="only log warnings and errors")
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS,
                        help="log every step")
    common.add_argument("--settings", metavar="PATH", default=argparse.SUPPRESS,
                        help="settings file (default Identify_Settings.json)")
    return common


def _int_list(text: str):
    try:
        return [int(v) for v in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a list of integers, got '{text}'")


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags()
    parser = _Parser(
        prog="main.py",
        description="Identifiability of Waring decompositions of ternary forms",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    check = sub.add_parser("check", parents=[common], help="run the identifiability pipeline")
    check.add_argument("file")

    hilbert = sub.add_parser("hilbert", parents=[common], help="Hilbert function of the points")
    hilbert.add_argument("file")
    hilbert.add_argument("--dmax", type=int, default=None)

    kruskal = sub.add_parser("kruskal", parents=[common], help="Kruskal rank of the degree-d Veronese image")
    kruskal.add_argument("file")
    kruskal.add_argument("--d", type=int, default=None,
                         help="Veronese degree; without it the (n+3, n+3, 2) criterion is run")
    kruskal.add_argument("--workers", type=int, default=None, help="threads testing subsets in batches")

    terracini = sub.add_parser("terracini", parents=[common], help="dimension of the Terracini space")
    terracini.add_argument("file")

    gen = sub.add_parser("gen", parents=[common], help="generate an instance")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--r", type=int, required=True)
    gen.add_argument("--position", default="general",
                     help="general, collinear(s), conic(s) or cubic")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output", default=None)
    gen.add_argument("--allow-out-of-range", action="store_true",
                     help="allow r > 3n+11")

    bench = sub.add_parser("bench", parents=[common], help="Terracini pipeline against the Kruskal baseline")
    bench.add_argument("--n-list", type=_int_list, default=None)
    bench.add_argument("--r-list", type=_int_list, default=None)
    bench.add_argument("--trials", type=int, default=None)
    bench.add_argument("--seed", type=int, default=None)
    bench.add_argument("--csv", default=None)
    bench.add_argument("--workers", type=int, default=None)
    bench.add_argument("--position", default="general",
                       help="position of the benchmarked instances, as for gen")

    gui = sub.add_parser("gui", parents=[common], help="open the verdict viewer")
    gui.add_argument("file", nargs="?", default=None)
    return parser


def parse_args(argv=None) -> argparse.Namespace:
    args = build_parser().parse_args(argv)
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    return args


def cmd_check(args, settings) -> int:
    inst = read_instance(args.file, strict=args.strict)
    diagnostics = args.diagnostics if args.diagnostics is not None else settings["pipeline"]["diagnostics"]
    verdict = identify(inst, diagnostics=diagnostics)
    print(dump_document(verdict.to_document()))
    return verdict.exit_code


def cmd_hilbert(args, settings) -> int:
    inst = read_instance(args.file, strict=args.strict)
    points = PointSet(inst.points)
    profile = hilbert_profile(points, args.dmax)
    document = profile.as_dict()
    if len(points) and inst.degree >= 0:
        document["cayley_bacharach"] = {"d": inst.degree, "holds": cayley_bacharach(points, inst.degree)}
    print(dump_document(document))
    return 0


def cmd_kruskal(args, settings) -> int:
    inst = read_instance(args.file, strict=args.strict)
    workers = args.workers if args.workers is not None else settings["kruskal"]["max_workers"]
    with ThreadPoolExecutor(max_workers=workers) if workers > 1 else nullcontext() as executor:
        calculator = KruskalCalculator(executor, batch_size=settings["kruskal"]["batch_size"])
        if args.d is None:
            _, details = calculator.prop31_check(inst)
            document = details.as_dict()
        else:
            document = calculator.kruskal_rank_d(PointSet(inst.points), args.d).as_dict()
    print(dump_document(document))
    return 0


def cmd_terracini(args, settings) -> int:
    inst = read_instance(args.file, strict=args.strict)
    print(dump_document(terracini_dimension(inst).as_dict()))
    return 0


def cmd_gen(args, settings) -> int:
    inst = gen_instance(args.n, args.r, args.position, args.seed,
                        allow_out_of_range=args.allow_out_of_range, settings=settings["generator"])
    text = serialize_instance(inst)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text + "\n")
        logger.info(f"Wrote {args.output}")
    else:
        print(text)
    return 0


def cmd_bench(args, settings) -> int:
    defaults = settings["bench"]
    calculator = BenchCalculator(settings)
    records = calculator.run(
        args.n_list if args.n_list is not None else defaults["n_list"],
        args.r_list if args.r_list is not None else defaults["r_list"],
        args.trials if args.trials is not None else defaults["trials"],
        args.seed if args.seed is not None else defaults["seed"],
        max_workers=args.workers if args.workers is not None else defaults["max_workers"],
        position=args.position,
    )
    summary = calculator.summarize(records)
    slopes = calculator.fit_slopes(records)
    if args.csv:
        records.to_csv(args.csv, index=False)
        logger.info(f"Wrote {len(records)} records to {args.csv}")
        print(summary.to_string(index=False))
        print(slopes.to_string(index=False))
    else:
        sys.stdout.write(records.to_csv(index=False))
        logger.info("Summary:\n" + summary.to_string(index=False) + "\n" + slopes.to_string(index=False))
    return 0


def cmd_gui(args, settings) -> int:
    from verdict_window import main_func
    return main_func(args.file, settings)


COMMANDS = {
    "check": cmd_check,
    "hilbert": cmd_hilbert,
    "kruskal": cmd_kruskal,
    "terracini": cmd_terracini,
    "gen": cmd_gen,
    "bench": cmd_bench,
    "gui": cmd_gui,
}


def main(argv=None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as e:
        # usage errors and --help
        return e.code if isinstance(e.code, int) else EXIT_ERROR
    configure_logging(args.quiet, args.verbose)
    settings = load_settings(args.settings)
    try:
        return COMMANDS[args.command](args, settings)
    except IdentifyError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_ERROR
    except OSError as e:
        logger.error(f"{e}")
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
