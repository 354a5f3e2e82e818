"""Command line interface of SemiflowNet.

    semiflownet semiflows NET [--semiring N|Qplus|Q]
    semiflownet bounds NET [--init A=1,...]
    semiflownet rg NET [--plot FILE]
    semiflownet check NET [--safe] [--live] [--home-state] [--deadlocks]
    semiflownet decompose NET --target SPEC [--generators FILE] [--order ...]
    semiflownet unreachable NET --marking A=1,... [--generators FILE]
    semiflownet sweep --template NAME --grid k=0..2,x=1|3

NET is a path to a .net file, or fixture:<name> for a shipped fixture
(fixture:stc2 and fixture:stc3 load the vector families). Reports are
JSON on stdout; logs go to stderr.

Exit codes: 0 when every requested property holds, 1 when one is
violated, 2 on parse or usage errors, 3 when a resource cap was hit.
"""

import argparse
import logging
import sys

from . import __version__
from .config import DEFAULT_SETTINGS
from .exceptions import (DimensionError, NetParseError, NotASemiflowError,
                         ResourceLimitError, SemiflowNetError,
                         UnknownIdentifierError)
from .net import Marking
from .netio import (STC2Vectors, STC3Vectors, emit_report, fixture_names,
                    load_fixture, load_net, parse_assignments,
                    parse_generators, parse_grid)
from .netio.report import (bounds_section, certificate_section,
                           decomposition_section, net_section,
                           reachability_section, semiflows_section,
                           sweep_section)
from .reachability import (build_rg, check_linear_invariant,
                           draw_reachability_graph, is_home_state,
                           live_transitions, parameter_sweep,
                           safeness_and_deadlocks,
                           unreachability_certificate)
from .semiflows import (Semiflow, Semiring, compute_fundamental_set,
                        compute_minimal_semiflows, compute_q_basis, decompose,
                        minimal_supports, optimized_sperner_bound,
                        place_bounds, sperner_bound)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_VECTOR_FIXTURES = {"stc2": STC2Vectors, "stc3": STC3Vectors}


class _Loaded:
    """Net, initial marking and default generators of the NET argument."""

    def __init__(self, net, marking, generators=None, targets=None):
        self.net = net
        self.marking = marking
        self.generators = generators
        self.targets = targets or {}


def _load(args):
    params = _parse_params(args.param) if args.param else None
    if args.net.startswith("fixture:"):
        name = args.net[len("fixture:"):]
        if name in _VECTOR_FIXTURES:
            fixture = _VECTOR_FIXTURES[name]()
            empty = Marking([0] * len(fixture.net.places))
            loaded = _Loaded(fixture.net, empty, fixture.generators,
                             fixture.targets)
        elif name in fixture_names():
            loaded = _Loaded(*load_fixture(name, **(params or {})))
        else:
            raise NetParseError(0, "unknown fixture '{}'".format(name))
    else:
        source = load_net(args.net, params)
        loaded = _Loaded(source.net, source.marking)
    if getattr(args, "init", None):
        loaded.marking = Marking(parse_assignments(loaded.net, args.init,
                                                   base=loaded.marking))
    return loaded


def _parse_params(text):
    params = {}
    for name, values in parse_grid(text).items():
        if len(values) != 1:
            raise NetParseError(1, "parameter '{}' needs a single value"
                                .format(name))
        params[name] = values[0]
    return params


def _settings(args):
    return DEFAULT_SETTINGS.with_overrides(
        max_states=getattr(args, "max_states", None))


def _generators(args, loaded, semiring):
    if getattr(args, "generators", None):
        with open(args.generators, encoding="utf-8") as handle:
            gens = parse_generators(loaded.net, handle.read(), semiring)
    elif loaded.generators is not None:
        gens = loaded.generators
    elif semiring is Semiring.N:
        gens = compute_minimal_semiflows(
            loaded.net, _settings(args).hilbert_coordinate_cap)
    elif semiring is Semiring.Q:
        gens = compute_q_basis(loaded.net)
    else:
        gens = compute_fundamental_set(loaded.net)
    if getattr(args, "order", None):
        gens = gens.reordered([s.strip() for s in args.order.split(",")
                               if s.strip()])
    return gens


def _emit(sections):
    sys.stdout.write(emit_report(sections))


# Subcommands

def _run_semiflows(args):
    loaded = _load(args)
    net = loaded.net
    semiring = Semiring(args.semiring)
    hilbert = compute_minimal_semiflows(
        net, _settings(args).hilbert_coordinate_cap)
    fundamental = compute_fundamental_set(net)
    if semiring is Semiring.N:
        gens = hilbert
    elif semiring is Semiring.Q:
        gens = compute_q_basis(net, fundamental)
    else:
        gens = fundamental
    _emit({"net": net_section(net),
           "semiflows": semiflows_section(net, gens, hilbert),
           "minimal_supports": [sorted(s) for s in
                                minimal_supports(net, fundamental)]})
    return EXIT_OK


def _run_bounds(args):
    loaded = _load(args)
    net = loaded.net
    report = place_bounds(net, loaded.marking)
    _emit({"net": net_section(net, loaded.marking),
           "bounds": bounds_section(report, sperner_bound(len(net.places)),
                                    optimized_sperner_bound(net))})
    return EXIT_OK


def _run_rg(args):
    loaded = _load(args)
    rg = build_rg(loaded.net, loaded.marking, _settings(args).max_states)
    safeness = safeness_and_deadlocks(rg)
    liveness = live_transitions(rg)
    home = is_home_state(rg, rg.initial_marking)
    _emit({"net": net_section(loaded.net, loaded.marking),
           "reachability": reachability_section(rg, safeness, liveness,
                                                home)})
    if args.plot:
        draw_reachability_graph(rg, args.plot)
        logger.info("reachability graph drawn to %s", args.plot)
    return EXIT_RESOURCE if rg.truncated else EXIT_OK


def _run_check(args):
    loaded = _load(args)
    net = loaded.net
    rg = build_rg(net, loaded.marking, _settings(args).max_states)
    requested = [name for name in ("safe", "live", "home_state", "deadlocks")
                 if getattr(args, name)]
    if not requested:
        requested = ["safe", "live", "home_state", "deadlocks"]

    safeness = safeness_and_deadlocks(rg)
    verdicts = {}
    if "safe" in requested:
        verdicts["safe"] = safeness.safe
    if "deadlocks" in requested:
        if safeness.deadlocks:
            verdicts["deadlock_free"] = False
        else:
            verdicts["deadlock_free"] = None if rg.truncated else True
    liveness = None
    if "live" in requested:
        liveness = live_transitions(rg)
        verdicts["live"] = liveness.is_live_net
    home = None
    if "home_state" in requested:
        home = is_home_state(rg, rg.initial_marking)
        verdicts["home_state_q0"] = home.holds

    invariants = {}
    fundamental = compute_fundamental_set(net)
    for label, member in zip(fundamental.labels, fundamental.members):
        invariants[label] = check_linear_invariant(rg, member.weights).holds

    _emit({"net": net_section(net, loaded.marking),
           "reachability": reachability_section(rg, safeness, liveness, home,
                                                include_states=False),
           "check": {"verdicts": verdicts, "invariants": invariants}})
    if any(v is False for v in verdicts.values()) or \
            any(v is False for v in invariants.values()):
        return EXIT_VIOLATED
    return EXIT_RESOURCE if rg.truncated else EXIT_OK


def _run_decompose(args):
    loaded = _load(args)
    net = loaded.net
    semiring = Semiring(args.semiring)
    gens = _generators(args, loaded, semiring)
    if args.target in loaded.targets:
        target = loaded.targets[args.target]
    elif loaded.generators is not None and \
            args.target in loaded.generators.labels:
        target = loaded.generators.member(args.target)
    elif args.target in gens.labels:
        target = gens.member(args.target)
    else:
        target = Semiflow(parse_assignments(net, args.target))
    result = decompose(target, gens, semiring,
                       node_cap=DEFAULT_SETTINGS.decomposition_node_cap)
    section = decomposition_section(result)
    _emit({"net": net_section(net), "decomposition": section})
    return EXIT_OK if section["feasible"] else EXIT_VIOLATED


def _run_unreachable(args):
    loaded = _load(args)
    net = loaded.net
    q = Marking(parse_assignments(net, args.marking))
    gens = _generators(args, loaded, Semiring.Qplus)
    certificate = unreachability_certificate(net, loaded.marking, q, gens)
    _emit({"net": net_section(net, loaded.marking),
           "certificates": [certificate_section(net, q, certificate)]})
    return EXIT_OK if certificate is not None else EXIT_VIOLATED


def _run_sweep(args):
    grid = parse_grid(args.grid)
    rows = parameter_sweep(args.template, grid, _settings(args).max_states)
    _emit({"sweep": sweep_section(rows)})
    if any(row.matches is False for row in rows):
        return EXIT_VIOLATED
    if any(row.truncated for row in rows):
        return EXIT_RESOURCE
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="logging verbosity on stderr")
    common.add_argument("-v", "--verbose", action="store_true",
                        help="shorthand for --log-level INFO")
    common.add_argument("--max-states", type=int, default=None,
                        metavar="N", help="state cap of the exploration")

    marked = argparse.ArgumentParser(add_help=False, parents=[common])
    marked.add_argument("net", help="path to a .net file or fixture:<name>")
    marked.add_argument("--param", metavar="k=2,...",
                        help="override net parameters")
    marked.add_argument("--init", metavar="A=1,...",
                        help="override the initial marking place by place")

    parser = argparse.ArgumentParser(
        prog="semiflownet",
        description="Semiflows, invariants and behavioural properties of "
                    "place/transition nets")
    parser.add_argument("--version", action="version",
                        version="%(prog)s " + __version__)
    commands = parser.add_subparsers(dest="command", required=True)

    semiflows = commands.add_parser("semiflows", parents=[marked],
                                    help="compute a generating set")
    semiflows.add_argument("--semiring", default="Qplus",
                           choices=[s.value for s in Semiring],
                           help="N: minimal semiflows, Qplus: fundamental "
                                "set, Q: Q-basis")
    semiflows.set_defaults(run=_run_semiflows)

    bounds = commands.add_parser("bounds", parents=[marked],
                                 help="place bounds and Sperner bounds")
    bounds.set_defaults(run=_run_bounds)

    rg = commands.add_parser("rg", parents=[marked],
                             help="build the reachability graph")
    rg.add_argument("--plot", metavar="FILE",
                    help="draw the graph to an image file")
    rg.set_defaults(run=_run_rg)

    check = commands.add_parser("check", parents=[marked],
                                help="decide behavioural properties")
    check.add_argument("--safe", action="store_true")
    check.add_argument("--live", action="store_true")
    check.add_argument("--home-state", dest="home_state", action="store_true")
    check.add_argument("--deadlocks", action="store_true",
                       help="require deadlock freedom")
    check.set_defaults(run=_run_check)

    decompose_ = commands.add_parser("decompose", parents=[marked],
                                     help="decompose a semiflow")
    decompose_.add_argument("--target", required=True,
                            help="A=1,... or the label of a generator")
    decompose_.add_argument("--generators", metavar="FILE",
                            help="one '<label> <place>:<weight> ...' per "
                                 "line")
    decompose_.add_argument("--order", metavar="g1,g2,...",
                            help="order of the generators")
    decompose_.add_argument("--semiring", default="N",
                            choices=[s.value for s in Semiring])
    decompose_.set_defaults(run=_run_decompose)

    unreachable = commands.add_parser("unreachable", parents=[marked],
                                      help="prove a marking unreachable")
    unreachable.add_argument("--marking", required=True, metavar="A=1,...")
    unreachable.add_argument("--generators", metavar="FILE")
    unreachable.set_defaults(run=_run_unreachable)

    sweep = commands.add_parser("sweep", parents=[common],
                                help="sweep a parameterized template")
    sweep.add_argument("--template", required=True,
                       choices=["mutex_param", "mutex3", "tinyk"])
    sweep.add_argument("--grid", required=True, metavar="k=0..2,x=1|3")
    sweep.set_defaults(run=_run_sweep)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else EXIT_USAGE

    level = "INFO" if args.verbose and args.log_level == "WARNING" \
        else args.log_level
    logging.basicConfig(stream=sys.stderr, level=getattr(logging, level),
                        format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.run(args)
    except ResourceLimitError as error:
        logger.error("%s", error)
        return EXIT_RESOURCE
    except (NetParseError, UnknownIdentifierError, DimensionError,
            NotASemiflowError, KeyError, ValueError, OSError) as error:
        logger.error("%s", error)
        return EXIT_USAGE
    except SemiflowNetError as error:
        logger.error("%s", error)
        return EXIT_USAGE
