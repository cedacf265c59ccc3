'''The homhopf command line.

    homhopf verify bialgebra kc2.struct
    homhopf construct smash flip.cot --out s.struct
    homhopf equation ybe --hopf h4.struct --p 0 --modules u.mod v.mod w.mod

Exit status 0 means that every axiom checked held, 1 that at least one
failed, and 2 that an input was malformed or a construction's
precondition failed.  Reports go to --out or standard output as text, as
tab-separated lines, or both; diagnostics go to standard error.
'''

__author__ = 'The homhopf developers'

import argparse
import hashlib
import logging
import os
import sys

from . import applications, entwining, formats, generators, smash, structures
from .linear import DimensionMismatchError, NotInvertibleError
from .report import format_tuple
from .version import __version__
from ._types import has_antipode, has_comultiplication, has_multiplication

log = logging.getLogger('homhopf')

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

DEGREES = ('i', 'j', 'k', 'm', 'n', 'p', 'q')
FORMATS = ('text', 'lines', 'both')
SEPARATOR = '--'

VERIFY_SUBJECTS = ('algebra', 'coalgebra', 'bialgebra', 'hopf', 'cotwistor',
                   'entwining', 'module', 'comodule', 'entwined', 'long', 'yd',
                   'doi-datum')
CONSTRUCT_SUBJECTS = ('dual-coalgebra', 'dual-bialgebra', 'smash', 'smash-bialgebra',
                      'codouble', 'codouble-bialgebra', 'drinfeld-codouble',
                      'doi-codouble', 'yau-twist')
CORRESPOND_SUBJECTS = ('entwining-to-cotwistor', 'cotwistor-to-entwining')
EQUATION_SUBJECTS = ('d', 'ybe', 'zeta')


class UsageError(ValueError):
    '''A subclass of ValueError for option combinations the parser cannot reject.'''
    pass


# Reports

class ReportRecord(object):
    '''A rendered report: every field is already a string.'''

    def __init__(self, command, parameters, inputs, subject, disabled, axioms,
                 verdict, version=__version__):
        self.version = version
        self.command = command
        self.parameters = parameters
        self.inputs = inputs
        self.subject = subject
        self.disabled = disabled
        self.axioms = axioms
        self.verdict = verdict

    @property
    def passed(self):
        return self.verdict == 'PASS'


def _dash(value):
    return '-' if value is None else value


def record_report(command, parameters, inputs, report):
    '''Freeze a CheckReport with its command, parameters and input digests.'''
    axioms = []
    for result in report:
        axioms.append((result.axiom, result.verdict(), _dash(result.group),
                       '-' if result.witness is None else format_tuple(result.witness),
                       '-' if result.lhs is None else format_tuple(result.lhs),
                       '-' if result.rhs is None else format_tuple(result.rhs)))
    return ReportRecord(command,
                        [(name, str(parameters[name])) for name in sorted(parameters)],
                        [(path, digest(path)) for path in inputs],
                        report.subject, sorted(report.disabled_groups()), axioms,
                        report.verdict())


def digest(path):
    with open(path, 'rb') as f:
        return hashlib.sha256(f.read()).hexdigest()


def to_lines(record):
    '''The tab-separated machine form of a report.'''
    lines = ['homhopf-report\t' + record.version,
             'command\t' + record.command]
    lines.extend('parameter\t{0}\t{1}'.format(name, value)
                 for name, value in record.parameters)
    lines.extend('input\t{0}\t{1}'.format(path, value) for path, value in record.inputs)
    lines.append('subject\t' + record.subject)
    lines.extend('disabled\t' + group for group in record.disabled)
    lines.extend('axiom\t' + '\t'.join(fields) for fields in record.axioms)
    lines.append('verdict\t' + record.verdict)
    return '\n'.join(lines) + '\n'


def parse_lines(text, path='<string>'):
    '''Read the machine form of a report back.

    Anything up to a line holding only '--' is skipped, so the output of
    --format both can be read directly.

    Raises:
        FormatError: If a line is not a report field.
    '''
    lines = text.splitlines()
    if SEPARATOR in lines:
        start = lines.index(SEPARATOR) + 1
    else:
        start = 0
    fields = {'parameter': [], 'input': [], 'disabled': [], 'axiom': []}
    single = {}
    arities = {'homhopf-report': 1, 'command': 1, 'subject': 1, 'verdict': 1,
               'parameter': 2, 'input': 2, 'disabled': 1, 'axiom': 6}
    for number, line in enumerate(lines[start:], start=start + 1):
        if not line:
            continue
        tag, _, rest = line.partition('\t')
        if tag not in arities:
            raise formats.FormatError("Unknown report field '{0}'".format(tag),
                                      path, number)
        values = rest.split('\t')
        if len(values) != arities[tag]:
            raise formats.FormatError("Report field '{0}' needs {1} values"
                                      .format(tag, arities[tag]), path, number)
        if tag in fields:
            fields[tag].append(values[0] if len(values) == 1 else tuple(values))
        else:
            single[tag] = values[0]
    for tag in ('homhopf-report', 'command', 'subject', 'verdict'):
        if tag not in single:
            raise formats.FormatError("Report has no '{0}' field".format(tag), path)
    return ReportRecord(single['command'], fields['parameter'], fields['input'],
                        single['subject'], fields['disabled'], fields['axiom'],
                        single['verdict'], version=single['homhopf-report'])


def to_text(record):
    '''The human-readable form of a report.'''
    lines = ['homhopf ' + record.version,
             'command: ' + record.command,
             'parameters: ' + ' '.join('{0}={1}'.format(name, value)
                                       for name, value in record.parameters)]
    lines.extend('input: {0} sha256:{1}'.format(path, value)
                 for path, value in record.inputs)
    lines.append('subject: ' + record.subject)
    if record.disabled:
        lines.append('disabled: ' + ' '.join(record.disabled))
    for axiom, verdict, group, witness, lhs, rhs in record.axioms:
        text = '[' + verdict + '] ' + axiom
        if group != '-':
            text += ' (' + group + ')'
        if witness != '-':
            text += ' witness=' + witness
        if lhs != '-':
            text += ' lhs=' + lhs + ' rhs=' + rhs
        lines.append(text)
    lines.append('verdict: ' + record.verdict)
    return '\n'.join(lines) + '\n'


def render(record, output_format):
    if output_format == 'text':
        return to_text(record)
    if output_format == 'lines':
        return to_lines(record)
    return to_text(record) + SEPARATOR + '\n' + to_lines(record)


# Loading

def _structure(path, need):
    s = formats.load_structure(path)
    missing = None
    if need in ('algebra', 'bialgebra', 'hopf') and not has_multiplication(s):
        missing = 'product'
    elif need in ('coalgebra', 'bialgebra', 'hopf') and not has_comultiplication(s):
        missing = 'coproduct'
    elif need == 'hopf' and not has_antipode(s):
        missing = 'antipode'
    if missing is not None:
        raise structures.StructureError("{0} holds a {1} without a {2}, but a {3} "
                                        "is needed".format(path, formats.structure_kind(s),
                                                           missing, need))
    return s


def _object(path, cls, description):
    obj = formats.load(path)
    if not isinstance(obj, cls):
        raise structures.StructureError("{0} does not hold {1}".format(path, description))
    return obj


def _module_file(path):
    return _object(path, formats.ModuleFile, 'a module')


def _require_option(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError("--{0} is required for {1} {2}".format(name, args.verb,
                                                               args.subject))
    return value


def _degree(args, name, default=0):
    value = getattr(args, name)
    if value is None:
        value = default
        setattr(args, name, value)
    return value


def _context(args):
    return structures.MonoidalContext(args.i, args.j)


def _relative(path, out):
    start = os.path.dirname(os.path.abspath(out)) if out else os.getcwd()
    return os.path.relpath(os.path.abspath(path), start)


# Verbs

def _verify(args, inputs):
    subject, path = args.subject, args.file
    if subject in ('algebra', 'coalgebra', 'bialgebra', 'hopf'):
        s = _structure(path, subject)
        checker = {'algebra': structures.check_hom_algebra,
                   'coalgebra': structures.check_hom_coalgebra,
                   'bialgebra': structures.check_hom_bialgebra,
                   'hopf': structures.check_hom_hopf}[subject]
        return checker(s)
    if subject == 'cotwistor':
        c = _object(path, smash.Cotwistor, 'a cotwistor')
        return smash.check_cotwistor(c, monoidal=args.monoidal)
    if subject == 'entwining':
        e = _object(path, entwining.EntwiningMap, 'an entwining')
        return entwining.check_entwining(e, monoidal=args.monoidal)
    if subject == 'doi-datum':
        datum = _object(path, applications.DoiHopfDatum, 'a Doi-Hopf datum')
        args.k, args.m = datum.k, datum.m
        report = applications.check_doi_hopf_datum(datum)
        if args.monoidal:
            report.extend(applications.check_doi_monoidal(datum), 'monoidal')
        return report
    mf = _module_file(path)
    if subject == 'entwined':
        e_path = _require_option(args, 'entwining')
        inputs.append(e_path)
        e = _object(e_path, entwining.EntwiningMap, 'an entwining')
        n = _degree(args, 'n', mf.degree)
        return entwining.check_entwined_module(mf.build(entwining.EntwinedModule, n), e)
    over = _require_option(args, 'over')
    inputs.append(over)
    if subject == 'module':
        return structures.check_right_module(mf.as_module(), _structure(over, 'algebra'))
    if subject == 'comodule':
        return structures.check_right_comodule(mf.as_comodule(),
                                               _structure(over, 'coalgebra'))
    if subject == 'long':
        return applications.check_long_dimodule(mf.build(applications.LongDimodule),
                                                _structure(over, 'bialgebra'))
    p = _degree(args, 'p', mf.degree)
    return applications.check_yd_module(mf.build(applications.YDModule, p),
                                        _structure(over, 'hopf'))


def _construct(args):
    subject, path = args.subject, args.file
    if subject == 'dual-coalgebra':
        return structures.dual_coalgebra(_structure(path, 'algebra'))
    if subject == 'dual-bialgebra':
        return structures.dual_bialgebra(_structure(path, 'bialgebra'))
    if subject in ('smash', 'smash-bialgebra'):
        c = _object(path, smash.Cotwistor, 'a cotwistor')
        if subject == 'smash':
            return smash.build_smash_coproduct(c)
        return smash.build_smash_bialgebra(c, args.order)
    if subject in ('codouble', 'codouble-bialgebra'):
        e = _object(path, entwining.EntwiningMap, 'an entwining')
        if subject == 'codouble':
            return entwining.codouble(e)
        return entwining.codouble_bialgebra(e)
    if subject == 'drinfeld-codouble':
        return applications.drinfeld_codouble(_structure(path, 'hopf'), _degree(args, 'm'))
    if subject == 'doi-codouble':
        datum = _object(path, applications.DoiHopfDatum, 'a Doi-Hopf datum')
        if args.m is not None:
            datum = datum.with_degrees(m=args.m)
        return applications.doi_codouble(datum)
    by = _module_file(_require_option(args, 'by'))
    return generators.yau_twist(_structure(path, 'bialgebra'), by.alpha)


def _correspond(args):
    document = formats.load_document(args.file)
    if args.subject == 'entwining-to-cotwistor':
        e = _object(args.file, entwining.EntwiningMap, 'an entwining')
        structures.require(entwining.check_entwining(e), 'form a cotwistor')
        c = entwining.cotwistor_from_entwining(e)
        return formats.dumps_cotwistor(c.phi, _relative(document.resolve('H'), args.out),
                                       bdual_path=_relative(document.resolve('A'), args.out))
    c = _object(args.file, smash.Cotwistor, 'a cotwistor')
    if not document.has('Bdual'):
        raise structures.StructureError("{0} does not present its first factor as "
                                        "a dual with 'Bdual'".format(args.file))
    structures.require(smash.check_cotwistor(c), 'form an entwining')
    e = entwining.entwining_from_cotwistor(c)
    return formats.dumps_entwining(e.Phi, _relative(document.resolve('H'), args.out),
                                   _relative(document.resolve('Bdual'), args.out))


def _equation(args, inputs):
    over = _require_option(args, 'over')
    inputs.append(over)
    ctx = _context(args)
    if args.subject == 'zeta':
        return applications.check_zeta_d_type(_degree(args, 'q'),
                                              _structure(over, 'bialgebra'))
    paths = _require_option(args, 'modules')
    inputs.extend(paths)
    files = [_module_file(path) for path in paths]
    if args.subject == 'd':
        h = _structure(over, 'bialgebra')
        u, v, w = [mf.build(applications.LongDimodule) for mf in files]
        return applications.check_d_equation(ctx, _degree(args, 'm'), u, v, w, h)
    h = _structure(over, 'hopf')
    p = _degree(args, 'p')
    modules = [mf.build(applications.YDModule, p) for mf in files]
    if args.literal and len(set(paths)) == 1:
        modules = [modules[0]] * 3
    u, v, w = modules
    return applications.check_hom_ybe(ctx, p, u, v, w, h, literal=args.literal)


def _write(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, 'w') as f:
            f.write(text)


def run(args):
    '''Execute a parsed command and return its exit status.'''
    if args.verb == 'generate':
        _write(formats.dumps(generators.EXAMPLES[args.subject]()), args.out)
        log.info("Wrote example %s", args.subject)
        return EXIT_PASS
    if args.verb == 'report':
        record = parse_lines(formats.read_text(args.file), args.file)
        _write(to_text(record), args.out)
        return EXIT_PASS if record.passed else EXIT_FAIL
    if args.verb == 'construct':
        _write(formats.dumps(_construct(args)), args.out)
        log.info("Constructed %s from %s", args.subject, args.file)
        return EXIT_PASS
    if args.verb == 'correspond':
        _write(_correspond(args), args.out)
        log.info("Wrote the %s of %s", args.subject, args.file)
        return EXIT_PASS
    inputs = [args.file] if args.verb == 'verify' else []
    if args.verb == 'verify':
        report = _verify(args, inputs)
    else:
        report = _equation(args, inputs)
    for group in args.disable or ():
        report.disable(group)
    report.log(log, args.verb + ' ' + args.subject)
    parameters = dict((name, _degree(args, name)) for name in DEGREES)
    record = record_report(args.verb + ' ' + args.subject, parameters, inputs, report)
    _write(render(record, args.format), args.out)
    return EXIT_PASS if report.passed else EXIT_FAIL


def _add_common(parser, degrees=True):
    parser.add_argument('--out', help="write the output to this file instead of "
                        "standard output")
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help="log more; repeat for debug output")
    if degrees:
        parser.add_argument('-i', type=int, default=0, help="associator degree i")
        parser.add_argument('-j', type=int, default=0, help="associator degree j")
        for name in ('k', 'm', 'n', 'p', 'q'):
            parser.add_argument('--' + name, type=int, default=None,
                                help="degree parameter {0} (default 0)".format(name))


def _add_report_options(parser):
    parser.add_argument('--format', choices=FORMATS, default='text')
    parser.add_argument('--disable', action='append', metavar='GROUP',
                        help="exclude an axiom group from the verdict")


def build_parser():
    parser = argparse.ArgumentParser(
        prog='homhopf',
        description="Check and build finite-dimensional Hom-Hopf structures.")
    parser.add_argument('--version', action='version', version='homhopf ' + __version__)
    verbs = parser.add_subparsers(dest='verb')
    verbs.required = True

    verify = verbs.add_parser('verify', help="check a structure or module")
    verify.add_argument('subject', choices=VERIFY_SUBJECTS)
    verify.add_argument('file')
    verify.add_argument('--over', help="the structure a module is over")
    verify.add_argument('--entwining', help="the entwining of an entwined module")
    verify.add_argument('--monoidal', action='store_true',
                        help="also check the monoidal axioms")
    _add_common(verify)
    _add_report_options(verify)

    construct = verbs.add_parser('construct', help="build a derived structure")
    construct.add_argument('subject', choices=CONSTRUCT_SUBJECTS)
    construct.add_argument('file')
    construct.add_argument('--order', choices=smash.ORDERS,
                           help="product order of a smash bialgebra")
    construct.add_argument('--by', help="module file whose alpha twists the input")
    _add_common(construct)

    correspond = verbs.add_parser('correspond',
                                  help="translate between entwinings and cotwistors")
    correspond.add_argument('subject', choices=CORRESPOND_SUBJECTS)
    correspond.add_argument('file')
    _add_common(correspond, degrees=False)

    equation = verbs.add_parser('equation', help="check an equation on modules")
    equation.add_argument('subject', choices=EQUATION_SUBJECTS)
    equation.add_argument('--over', '--hopf', '--bialgebra', dest='over',
                          help="the Hom-bialgebra or Hom-Hopf algebra")
    equation.add_argument('--modules', nargs=3, metavar='FILE')
    equation.add_argument('--literal', action='store_true',
                          help="use the untyped reading of the Yang-Baxter identity")
    _add_common(equation)
    _add_report_options(equation)

    report = verbs.add_parser('report', help="render a saved machine report as text")
    report.add_argument('file')
    _add_common(report, degrees=False)

    generate = verbs.add_parser('generate', help="write a built-in example")
    generate.add_argument('subject', choices=sorted(generators.EXAMPLES))
    _add_common(generate, degrees=False)
    return parser


def _configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    log.setLevel(level)
    if not log.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter('%(name)s: %(levelname)s: %(message)s'))
        log.addHandler(handler)


def main(argv=None):
    '''The console entry point.

    Args:
        argv: The arguments, excluding the program name. Defaults to
            sys.argv[1:].

    Returns:
        The exit status.
    '''
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    if args.verb == 'construct' and args.subject == 'smash-bialgebra' and args.order is None:
        parser.error("construct smash-bialgebra requires --order gh or --order hg")
    try:
        return run(args)
    except (formats.FormatError, structures.StructureError, UsageError,
            DimensionMismatchError, NotInvertibleError) as e:
        log.error(str(e))
        return EXIT_ERROR
    except (IOError, OSError) as e:
        log.error("Cannot write output: {0}".format(e))
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
