"""Command line front end: loads theory, valuation and map files, runs the
   constructions and checks, and writes JSON, DOT or text reports.

   Exit codes are 0 on success, 1 when a domain error occurs or a check
   finds a violation, and 2 on usage errors and malformed input.
"""

import argparse
import json
import os
import sys

from restheory import config, convex, dist, gen, harness, inform, log, monotones, translate
from restheory.core import resource_order, theory_from_json, theory_to_json, validate
from restheory.dump_table import dump_relation, dump_table, dump_values
from restheory.errors import FormatError, TheoryError
from restheory.order import OrderedResources
from restheory.preorder import hasse, to_dot

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

BUILTIN_PREFIX = 'builtin:'


class UsageError(Exception):
    """Raised for option combinations argparse cannot rule out itself."""


def load_json(path):
    """Reads a JSON file, reporting parse errors with their line number."""
    try:
        with open(path) as file:
            return json.load(file)
    except OSError as err:
        raise FormatError(err.strerror or str(err), field=path) from err
    except json.JSONDecodeError as err:
        raise FormatError(err.msg, field='{} line {} column {}'.format(
            path, err.lineno, err.colno)) from err


def load_theory(spec, base_dir=None):
    """Loads a theory from a file, or a builtin fixture named 'builtin:TRI'.
       A file with a "points" field is read as a convex theory.
    """
    if spec.startswith(BUILTIN_PREFIX):
        name = spec[len(BUILTIN_PREFIX):]
        if name not in gen.BUILTINS:
            raise FormatError("unknown builtin '{}'".format(name), field=spec)
        return gen.builtin(name)
    if base_dir is not None and not os.path.isabs(spec):
        spec = os.path.join(base_dir, spec)
    return theory_from_object(load_json(spec))


def theory_from_object(obj):
    if isinstance(obj, dict) and 'points' in obj:
        return convex.convex_from_json(obj)
    return theory_from_json(obj)


def load_valuation(path, labels):
    return monotones.valuation_from_json(load_json(path), labels)


def load_set(spec, theory, field='--D'):
    """Resolves a named subset: 'free' or a file holding a list of names."""
    if spec is None:
        return None
    if spec == 'free':
        return theory.free
    names = load_json(spec)
    if not isinstance(names, list) or any(not theory.has_name(n) for n in names):
        raise FormatError('expecting a list of resource names', field=field)
    return theory.parse_set(names)


def load_map(path, theory_spec=None):
    """Loads a mediating map file. "source" and "target" are embedded theory
       objects, or paths relative to the map file. A missing source falls
       back to --theory.
    """
    obj = load_json(path)
    if not isinstance(obj, dict):
        raise FormatError('expecting an object', field='<root>')
    base_dir = os.path.dirname(path)
    theories = {}
    for key in ('source', 'target'):
        value = obj.get(key)
        if value is None and key == 'source' and theory_spec is not None:
            theories[key] = load_theory(theory_spec)
        elif isinstance(value, str):
            theories[key] = load_theory(value, base_dir)
        elif isinstance(value, dict):
            try:
                theories[key] = theory_from_object(value)
            except FormatError as err:
                raise FormatError(err.message, field='{}.{}'.format(
                    key, err.field or '<root>')) from err
        else:
            raise FormatError('expecting a theory object or a path', field=key)
    return translate.mediating_from_json(obj, theories['source'], theories['target'])


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError('{} requires --{}'.format(args.command, name.replace('_', '-')))


def _theory_arg(args):
    spec = getattr(args, 'theory_file', None) or args.theory
    if spec is None:
        raise UsageError('{} requires --theory'.format(args.command))
    theory = load_theory(spec)
    if log.showing(log.SHOW_TABLES):
        dump_table(theory, 'theory', log.log)
    return theory


def _formats(args, *allowed):
    if args.format not in allowed:
        raise UsageError("{} does not support --format {}".format(args.command, args.format))


def cmd_validate(args):
    _formats(args, 'json', 'text')
    theory = _theory_arg(args)
    report = validate(theory, strict=args.strict, all_witnesses=args.all_witnesses,
                      cap=args.cap, seed=args.seed)
    code = EXIT_OK if report.ok else EXIT_FAILED
    if args.format == 'text':
        lines = []
        dump_table(theory, log=lines.append)
        lines.append('coverage: {}'.format(report.coverage))
        if report.ok:
            lines.append('ok')
        for axiom, witness in report.violations:
            lines.append('violation: {} at {}'.format(axiom, ','.join(witness)))
        return code, lines
    result = report.to_json()
    result['resources'] = list(theory.names)
    return code, result


def cmd_order(args):
    theory = _theory_arg(args)
    pre = resource_order(theory)
    if args.format == 'dot':
        return EXIT_OK, to_dot(pre)
    if args.format == 'text':
        lines = []
        dump_relation(pre, log=lines.append)
        return EXIT_OK, lines
    _, order, covers = hasse(pre)
    return EXIT_OK, {
        'order': pre.to_json(),
        'classes': list(order.labels),
        'covers': [[order.labels[a], order.labels[b]] for a, b in covers],
    }


def _monotone_output(args, m):
    if args.format == 'text':
        lines = []
        dump_values(m.labels, m.values, log=lines.append)
        return EXIT_OK, lines
    return EXIT_OK, m.to_json()


def _yield_cost(args, construct):
    _require(args, 'valuation')
    theory = _theory_arg(args)
    fW = load_valuation(args.valuation[0], theory.names)
    D = load_set(args.D, theory)
    return _monotone_output(args, construct(theory, fW, D))


def cmd_monotone(args):
    _formats(args, 'json', 'text')
    kind = args.construction
    if kind == 'yield':
        return _yield_cost(args, monotones.yield_monotone)
    if kind == 'cost':
        return _yield_cost(args, monotones.cost_monotone)
    if kind == 'pullback':
        _require(args, 'map', 'valuation')
        F = load_map(args.map, args.theory)
        root = load_valuation(args.valuation[0], F.target.names)
        mode = args.mode or (translate.MAX if F.kind == translate.ENH else translate.MIN)
        m = translate.pull_back(F, root, mode, force=args.force, inclusion=args.inclusion)
        return _monotone_output(args, m)
    if kind == 'contraction':
        base = _theory_arg(args)
        tt = dist.build_k_dist(base, args.k, cap=args.cap)
        f_cert = dist.certify_contraction(dist.difference_indicator(tt), tt)
        target = dist.build_k_dist(base, args.k, constrained=True, cap=args.cap)
        W_dc = target.carrier if args.D is None else load_set(args.D, target)
        m = dist.contraction_monotone(base, f_cert, args.axis, W_dc, force=args.force,
                                      cap=args.cap)
        return _monotone_output(args, m)
    ct = _theory_arg(args)
    if not isinstance(ct, convex.ConvexTheory):
        raise FormatError('expecting a convex theory with "points"', field='--theory')
    if args.kind != 'all':
        return _monotone_output(args, convex.named_monotone(ct, args.kind))
    result = {kind: convex.named_monotone(ct, kind) for kind in sorted(convex.NAMED)}
    if args.format == 'text':
        lines = []
        for kind, m in result.items():
            dump_values(m.labels, m.values, prefix=kind, log=lines.append)
        return EXIT_OK, lines
    report = {kind: m.to_json() for kind, m in result.items()}
    report['classification'] = convex.classification_to_json(
        convex.classify_constructions(ct))
    return EXIT_OK, report


def cmd_compare(args):
    _formats(args, 'json', 'text')
    if args.valuation is None or len(args.valuation) != 2:
        raise UsageError('compare requires --valuation twice')
    theory = _theory_arg(args)
    fW = load_valuation(args.valuation[0], theory.names)
    gW = load_valuation(args.valuation[1], theory.names)
    D = load_set(args.D, theory)
    report = inform.compare(OrderedResources.wrap(theory), fW, gW, D)
    if args.format == 'text':
        return EXIT_OK, ['{}: {}'.format(name, 'holds' if verdict else 'fails')
                         for name, verdict in report.items()]
    return EXIT_OK, inform.compare_to_json(report)


def cmd_dist(args):
    _formats(args, 'json', 'text')
    base = _theory_arg(args)
    tt = dist.build_k_dist(base, args.k, constrained=args.constrained, cap=args.cap)
    if args.format == 'text':
        lines = []
        dump_table(tt, log=lines.append)
        return EXIT_OK, lines
    return EXIT_OK, tt.to_json()


def cmd_gen(args):
    _formats(args, 'json', 'text')
    if args.spec is not None:
        spec = gen.FamilySpec.from_json(load_json(args.spec))
    else:
        _require(args, 'family')
        generators = None if args.generators is None else args.generators.split(',')
        spec = gen.FamilySpec(args.family, size=args.size, bound=args.bound,
                              generators=generators, name=args.name)
    theory = gen.build(spec, args.seed)
    if args.format == 'text':
        lines = []
        dump_table(theory, log=lines.append)
        return EXIT_OK, lines
    if isinstance(theory, convex.ConvexTheory):
        return EXIT_OK, convex.convex_to_json(theory)
    return EXIT_OK, theory_to_json(theory)


def cmd_check(args):
    _formats(args, 'json', 'text')
    names = args.suite or ['all']
    reports = harness.run_suites(names, trials=args.trials, seed=args.seed)
    ok = all(reports)
    code = EXIT_OK if ok else EXIT_FAILED
    if args.format == 'text':
        lines = []
        for report in reports:
            lines.append('suite {}: {} cases, {} failures'.format(
                report.name, report.cases, len(report.failures)))
            for case, witness in report.failures:
                lines.append('  {}: {}'.format(case, witness))
        return code, lines
    return code, {
        'ok': ok,
        'seed': config.DEFAULT_SEED if args.seed is None else args.seed,
        'suites': [report.to_json() for report in reports],
    }


COMMANDS = {
    'validate': cmd_validate,
    'order': cmd_order,
    'monotone': cmd_monotone,
    'compare': cmd_compare,
    'dist': cmd_dist,
    'gen': cmd_gen,
    'check': cmd_check,
}


def common_options():
    """Options accepted by every command."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--seed",
        dest="seed",
        type=int,
        help="Seed for sampling and generators (default = %d)" % config.DEFAULT_SEED,
        default=None
    )
    parser.add_argument(
        "--cap",
        dest="cap",
        type=int,
        help="Override the size cap of the construction",
        default=None
    )
    parser.add_argument(
        "--out",
        dest="out",
        help="Write the report to a file instead of stdout",
        default=None
    )
    parser.add_argument(
        "--log-file",
        dest="log_file",
        help="Write log messages to a file instead of stderr",
        default=None
    )
    parser.add_argument(
        "--format",
        dest="format",
        choices=('json', 'dot', 'text'),
        help="Report format (default = json)",
        default='json'
    )
    parser.add_argument(
        "--theory",
        dest="theory",
        help="Theory file, or builtin:NAME for one of " + ', '.join(gen.BUILTINS),
        default=None
    )
    parser.add_argument(
        "-q", "--quiet",
        dest="quiet",
        action="store_true",
        help="Turn off log messages",
        default=False
    )
    parser.add_argument(
        "-v", "--verbose",
        dest="verbose",
        action="store_true",
        help="Turn on summary messages",
        default=False
    )
    parser.add_argument(
        "--show-tables",
        dest="show_tables",
        action="store_true",
        help="Log the combination tables of loaded theories",
        default=False
    )
    parser.add_argument(
        "--show-witnesses",
        dest="show_witnesses",
        action="store_true",
        help="Log every witness found",
        default=False
    )
    return parser


def build_parser():
    common = common_options()
    parser = argparse.ArgumentParser(
        prog="restheory",
        description="Build and check monotones of finite resource theories",
        epilog=("The RESTHEORY_SEED, RESTHEORY_TRIALS and RESTHEORY_*_CAP "
                "environment variables set the defaults.")
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    cmd = commands.add_parser("validate", parents=[common],
                              help="Check the axioms of a theory")
    cmd.add_argument("theory_file", nargs="?", help="Theory file")
    cmd.add_argument("--strict", dest="strict", action="store_true", default=False,
                     help="Warn about incompatible pairs")
    cmd.add_argument("--all-witnesses", dest="all_witnesses", action="store_true",
                     default=False, help="Report every violation")

    commands.add_parser("order", parents=[common],
                        help="Print the resource ordering")

    cmd = commands.add_parser("monotone", parents=[common], help="Construct a monotone")
    cmd.add_argument("construction",
                     choices=('yield', 'cost', 'pullback', 'contraction', 'convex'))
    cmd.add_argument("--valuation", dest="valuation", action="append", default=None,
                     help="Valuation file (the root valuation for pullback)")
    cmd.add_argument("--D", dest="D", default=None,
                     help="'free' or a file listing the names of D (W_dc for contraction)")
    cmd.add_argument("--map", dest="map", default=None, help="Mediating map file")
    cmd.add_argument("--mode", dest="mode", choices=(translate.MAX, translate.MIN),
                     default=None, help="Pull back with max or min")
    cmd.add_argument("--inclusion", dest="inclusion", action="store_true", default=False,
                     help="Pull back along the inclusion orders")
    cmd.add_argument("--force", dest="force", action="store_true", default=False,
                     help="Skip certification of the inputs")
    cmd.add_argument("--k", dest="k", type=int, default=2, help="Tuple length (default = 2)")
    cmd.add_argument("--axis", dest="axis", type=int, default=1,
                     help="Tuple axis (default = 1)")
    cmd.add_argument("--kind", dest="kind", default='all',
                     choices=sorted(convex.NAMED) + ['all'],
                     help="Convex monotone to compute (default = all)")

    cmd = commands.add_parser("compare", parents=[common],
                              help="Compare two valuations by informativeness")
    cmd.add_argument("--valuation", dest="valuation", action="append", default=None,
                     help="Valuation file, given twice")
    cmd.add_argument("--D", dest="D", default=None, help="'free' or a file of names")

    cmd = commands.add_parser("dist", parents=[common],
                              help="Build a k-distinguishability theory")
    cmd.add_argument("--k", dest="k", type=int, default=2, help="Tuple length (default = 2)")
    cmd.add_argument("--constrained", dest="constrained", action="store_true",
                     default=False, help="Only constant tuples of free resources are free")

    cmd = commands.add_parser("gen", parents=[common], help="Generate a theory")
    cmd.add_argument("--family", dest="family", choices=gen.FAMILIES, default=None)
    cmd.add_argument("--size", dest="size", type=int, default=None,
                     help="Ground set size of a union monoid")
    cmd.add_argument("--bound", dest="bound", type=int, default=None,
                     help="Largest value of truncated addition or tropical")
    cmd.add_argument("--generators", dest="generators", default=None,
                     help="Comma separated names generating the free set")
    cmd.add_argument("--name", dest="name", default=None, help="Builtin fixture name")
    cmd.add_argument("--spec", dest="spec", default=None, help="Family spec file")

    cmd = commands.add_parser("check", parents=[common], help="Run the property suites")
    cmd.add_argument("--suite", dest="suite", action="append", default=None,
                     choices=sorted(harness.SUITES) + ['all'])
    cmd.add_argument("--trials", dest="trials", type=int, default=None,
                     help="Trials per suite (default = %d)" % config.DEFAULT_TRIALS)
    return parser


def _write(args, output):
    if isinstance(output, str):
        text = output
    elif isinstance(output, list):
        text = ''.join(line + '\n' for line in output)
    else:
        text = json.dumps(output, indent=2, sort_keys=True) + '\n'
    if args.out:
        with open(args.out, 'w') as file:
            file.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    """Runs one command and returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(sys.argv[1:] if argv is None else argv)
    except SystemExit as err:
        return err.code

    saved_fn = log.log_fn
    saved_show = log.show
    show = log.SHOW_NONE
    if args.verbose:
        show |= log.SHOW_SUMMARY
    if args.show_tables:
        show |= log.SHOW_TABLES
    if args.show_witnesses:
        show |= log.SHOW_WITNESSES
    log.set_show(show)
    log_file = None
    if args.log_file:
        log_file = open(args.log_file, 'w')
        log.log_to_file(log_file)
    if args.quiet:
        log.log_to_null()
    try:
        code, output = COMMANDS[args.command](args)
        _write(args, output)
        return code
    except UsageError as err:
        parser.print_usage(sys.stderr)
        log.log('restheory: error: {}'.format(err))
        return EXIT_USAGE
    except FormatError as err:
        log.log('restheory: {}'.format(err))
        return EXIT_USAGE
    except TheoryError as err:
        log.log('restheory: {}'.format(err))
        return EXIT_FAILED
    finally:
        log.log_to_fn(saved_fn)
        log.set_show(saved_show)
        if log_file is not None:
            log_file.close()


if __name__ == '__main__':
    sys.exit(main())
