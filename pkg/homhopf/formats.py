'''Canonical text files for structures, modules, cotwistors, entwinings and data.

A file is a sequence of fields, one per line, starting with its kind:

    kind hopf
    dim 2
    alpha 2 2
    1 0
    0 1
    mult 2 4
    ...

A matrix field gives its shape and is followed by one line per row, with
entries written as integers or p/q.  Path fields (H, A, B, Bdual, C) name
other files, relative to the directory of the file naming them.  Integer
fields are dim, degree, k and m.  Blank lines and lines starting with '#'
are ignored.  dumps() writes the canonical form, which loads() reads back
to equal maps and which dumps() reproduces byte for byte.
'''

__author__ = 'The homhopf developers'

import os

from .applications import ComoduleAlgebra, DoiHopfDatum, ModuleCoalgebra
from .entwining import EntwiningMap, flip_entwining
from .linear import LinearMap, format_scalar, scalar
from .smash import Cotwistor, flip_cotwistor
from .structures import (HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra,
                         ModuleComodule, RightHomComodule, RightHomModule,
                         StructureError, dual_bialgebra, dual_coalgebra)
from ._types import has_antipode, has_comultiplication, has_multiplication

MATRIX_FIELDS = frozenset(['alpha', 'mult', 'unit', 'comult', 'counit', 'antipode',
                           'action', 'coaction', 'phi', 'Phi'])
PATH_FIELDS = frozenset(['H', 'A', 'B', 'Bdual', 'C'])
INTEGER_FIELDS = frozenset(['dim', 'degree', 'k', 'm'])

STRUCTURE_KINDS = ('algebra', 'coalgebra', 'bialgebra', 'hopf')
KINDS = STRUCTURE_KINDS + ('module', 'cotwistor', 'entwining', 'doi-datum')

_REQUIRED = {
    'algebra': ('alpha', 'mult', 'unit'),
    'coalgebra': ('alpha', 'comult', 'counit'),
    'bialgebra': ('alpha', 'mult', 'unit', 'comult', 'counit'),
    'hopf': ('alpha', 'mult', 'unit', 'comult', 'counit', 'antipode'),
    'module': ('alpha',),
    'cotwistor': ('H', 'phi'),
    'entwining': ('H', 'A', 'Phi'),
    'doi-datum': ('H', 'A', 'coaction', 'C', 'action'),
}


class FormatError(ValueError):
    '''A subclass of ValueError for malformed file content.

    Attributes:
        path: The file, or a description of the text source.
        line: The 1-based line number, or None if the problem is not tied to
            a line.
    '''

    def __init__(self, message, path, line=None):
        location = path if line is None else '{0}:{1}'.format(path, line)
        super(FormatError, self).__init__('{0}: {1}'.format(location, message))
        self.path = path
        self.line = line


class Document(object):
    '''The fields of a parsed file, each with the line it started on.'''

    def __init__(self, path, kind):
        self.path = path
        self.kind = kind
        self.fields = {}
        self.lines = {}

    def has(self, name):
        return name in self.fields

    def get(self, name, default=None):
        return self.fields.get(name, default)

    def require(self, name):
        if name not in self.fields:
            raise FormatError("Missing field '{0}' for kind '{1}'".format(name, self.kind),
                              self.path)
        return self.fields[name]

    def error(self, name, message):
        return FormatError(message, self.path, self.lines.get(name))

    def resolve(self, name):
        '''The path in a path field, relative to the directory of this file.'''
        value = self.require(name)
        if os.path.isabs(value):
            return value
        return os.path.join(os.path.dirname(self.path), value)


def _content_lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith('#'):
            yield number, line.split()


def parse_document(text, path='<string>'):
    '''Split text into fields.

    Raises:
        FormatError: On unknown kinds or fields, duplicate fields, bad
            shapes, ragged rows and malformed rationals.
    '''
    lines = list(_content_lines(text))
    if not lines or lines[0][1][0] != 'kind' or len(lines[0][1]) != 2:
        raise FormatError("The first field must be 'kind <name>'", path,
                          lines[0][0] if lines else None)
    kind = lines[0][1][1]
    if kind not in KINDS:
        raise FormatError("Unknown kind '{0}'".format(kind), path, lines[0][0])
    document = Document(path, kind)
    position = 1
    while position < len(lines):
        number, tokens = lines[position]
        name, args = tokens[0], tokens[1:]
        position += 1
        if name in document.fields:
            raise FormatError("Duplicate field '{0}'".format(name), path, number)
        document.lines[name] = number
        if name in MATRIX_FIELDS:
            if args == ['flip'] and name in ('phi', 'Phi'):
                document.fields[name] = 'flip'
                continue
            rows, cols = _shape(args, name, path, number)
            if position + rows > len(lines):
                raise FormatError("Matrix '{0}' needs {1} rows".format(name, rows),
                                  path, number)
            matrix = []
            for row_number, row in lines[position:position + rows]:
                if len(row) != cols:
                    raise FormatError("Row has {0} entries, expected {1}"
                                      .format(len(row), cols), path, row_number)
                matrix.append([_rational(token, path, row_number) for token in row])
            position += rows
            document.fields[name] = LinearMap(matrix)
        elif name in PATH_FIELDS:
            if len(args) != 1:
                raise FormatError("Field '{0}' takes one path".format(name), path, number)
            document.fields[name] = args[0]
        elif name in INTEGER_FIELDS:
            if len(args) != 1:
                raise FormatError("Field '{0}' takes one integer".format(name),
                                  path, number)
            try:
                document.fields[name] = int(args[0])
            except ValueError:
                raise FormatError("Field '{0}' is not an integer: {1!r}"
                                  .format(name, args[0]), path, number)
        else:
            raise FormatError("Unknown field '{0}'".format(name), path, number)
    for name in _REQUIRED[kind]:
        document.require(name)
    return document


def _shape(args, name, path, number):
    try:
        rows, cols = [int(arg) for arg in args]
    except ValueError:
        raise FormatError("Matrix '{0}' needs a shape 'rows cols'".format(name),
                          path, number)
    if rows < 1 or cols < 1:
        raise FormatError("Matrix '{0}' has an empty shape".format(name), path, number)
    return rows, cols


def _rational(token, path, number):
    try:
        return scalar(token)
    except ValueError as e:
        raise FormatError(str(e), path, number)


def _check_dim(document, alpha):
    if document.has('dim') and document.get('dim') != alpha.dom_dim:
        raise document.error('dim', "dim {0} does not match alpha of dimension {1}"
                             .format(document.get('dim'), alpha.dom_dim))


class ModuleFile(object):
    '''The content of a module file: alpha, an optional action and coaction, a degree.

    The same file can be read as a module, a comodule or any of the
    module-comodule categories; the caller picks the reading.
    '''

    def __init__(self, alpha, action=None, coaction=None, degree=0):
        self.alpha = alpha
        self.action = action
        self.coaction = coaction
        self.degree = degree

    @property
    def dim(self):
        return self.alpha.dom_dim

    def _require(self, *names):
        for name in names:
            if getattr(self, name) is None:
                raise StructureError("The module file has no {0}".format(name))

    def as_module(self):
        self._require('action')
        return RightHomModule(self.alpha, self.action)

    def as_comodule(self):
        self._require('coaction')
        return RightHomComodule(self.alpha, self.coaction)

    def build(self, cls, *args):
        '''Build a ModuleComodule subclass from alpha, action, coaction and args.'''
        self._require('action', 'coaction')
        return cls(self.alpha, self.action, self.coaction, *args)

    @classmethod
    def of(cls, module):
        degree = getattr(module, 'n', getattr(module, 'p', 0))
        return cls(module.alpha, getattr(module, 'action', None),
                   getattr(module, 'coaction', None), degree)


def build_structure(document):
    '''The HomAlgebra, HomCoalgebra, HomBialgebra or HomHopfAlgebra of a document.'''
    kind = document.kind
    if kind not in STRUCTURE_KINDS:
        raise FormatError("Expected a structure file, got kind '{0}'".format(kind),
                          document.path)
    f = document.fields
    _check_dim(document, f['alpha'])
    if kind == 'algebra':
        return HomAlgebra(f['alpha'], f['mult'], f['unit'])
    if kind == 'coalgebra':
        return HomCoalgebra(f['alpha'], f['comult'], f['counit'])
    if kind == 'bialgebra':
        return HomBialgebra.from_maps(f['alpha'], f['mult'], f['unit'], f['comult'],
                                      f['counit'])
    return HomHopfAlgebra.from_maps(f['alpha'], f['mult'], f['unit'], f['comult'],
                                    f['counit'], f['antipode'])


def _build(document):
    kind = document.kind
    f = document.fields
    if kind in STRUCTURE_KINDS:
        return build_structure(document)
    if kind == 'module':
        _check_dim(document, f['alpha'])
        return ModuleFile(f['alpha'], f.get('action'), f.get('coaction'),
                          f.get('degree', 0))
    if kind == 'cotwistor':
        h = load_structure(document.resolve('H'))
        if document.has('Bdual') == document.has('B'):
            raise FormatError("A cotwistor needs exactly one of 'B' and 'Bdual'",
                              document.path)
        if document.has('Bdual'):
            algebra = load_structure(document.resolve('Bdual'))
            if has_comultiplication(algebra):
                b = dual_bialgebra(algebra)
            else:
                b = dual_coalgebra(algebra)
        else:
            b = load_structure(document.resolve('B'))
        if f['phi'] == 'flip':
            return flip_cotwistor(b, h)
        return Cotwistor(b, h, f['phi'])
    if kind == 'entwining':
        h = load_structure(document.resolve('H'))
        a = load_structure(document.resolve('A'))
        if f['Phi'] == 'flip':
            return flip_entwining(h, a)
        return EntwiningMap(h, a, f['Phi'])
    h = load_structure(document.resolve('H'))
    a = ComoduleAlgebra(load_structure(document.resolve('A')), f['coaction'])
    c = ModuleCoalgebra(load_structure(document.resolve('C')), f['action'])
    return DoiHopfDatum(h, a, c, f.get('k', 0), f.get('m', 0))


def loads(text, path='<string>'):
    '''Parse and build the object described by text.

    Args:
        text: The file content.
        path: The name used in error messages and to resolve relative paths.

    Returns:
        A structure, a ModuleFile, a Cotwistor, an EntwiningMap or a
        DoiHopfDatum, according to the kind.

    Raises:
        FormatError: If the text is malformed.
        StructureError, NotInvertibleError, DimensionMismatchError: If the
            matrices do not form a structure of the kind.
    '''
    return _build(parse_document(text, path))


def read_text(path):
    try:
        with open(path, 'r') as f:
            return f.read()
    except (IOError, OSError) as e:
        raise FormatError("Cannot read file: {0}".format(e.strerror or e), path)


def load_document(path):
    '''Parse a file without building its object, for access to its path fields.'''
    return parse_document(read_text(path), path)


def load(path):
    '''Read and build the object in a file.

    Raises:
        FormatError: If the file cannot be read or is malformed.
    '''
    return loads(read_text(path), path)


def load_structure(path):
    document_object = load(path)
    if not (has_multiplication(document_object) or has_comultiplication(document_object)):
        raise FormatError("Expected a structure file", path)
    return document_object


def _matrix_lines(name, f):
    lines = ['{0} {1} {2}'.format(name, f.cod_dim, f.dom_dim)]
    for row in f.entries:
        lines.append(' '.join(format_scalar(value) for value in row))
    return lines


def structure_kind(s):
    if has_multiplication(s) and has_comultiplication(s):
        return 'hopf' if has_antipode(s) else 'bialgebra'
    return 'algebra' if has_multiplication(s) else 'coalgebra'


def dumps(obj):
    '''The canonical text of a structure or module.

    Args:
        obj: A HomAlgebra, HomCoalgebra, HomBialgebra, HomHopfAlgebra,
            ModuleFile, RightHomModule, RightHomComodule or ModuleComodule.

    Raises:
        TypeError: For any other object.
    '''
    if isinstance(obj, (RightHomModule, RightHomComodule, ModuleComodule)):
        obj = ModuleFile.of(obj)
    if isinstance(obj, ModuleFile):
        lines = ['kind module', 'dim {0}'.format(obj.dim)]
        lines.extend(_matrix_lines('alpha', obj.alpha))
        if obj.action is not None:
            lines.extend(_matrix_lines('action', obj.action))
        if obj.coaction is not None:
            lines.extend(_matrix_lines('coaction', obj.coaction))
        lines.append('degree {0}'.format(obj.degree))
        return '\n'.join(lines) + '\n'
    if not (has_multiplication(obj) or has_comultiplication(obj)):
        raise TypeError("Cannot serialise {0}".format(str(type(obj))[7: -2]))
    kind = structure_kind(obj)
    lines = ['kind ' + kind, 'dim {0}'.format(obj.dim)]
    for name in _REQUIRED[kind]:
        lines.extend(_matrix_lines(name, getattr(obj, name)))
    return '\n'.join(lines) + '\n'


def dump(obj, path):
    with open(path, 'w') as f:
        f.write(dumps(obj))


def dumps_cotwistor(phi, h_path, b_path=None, bdual_path=None):
    '''The text of a cotwistor file referring to its factors by path.

    Exactly one of b_path and bdual_path is given; bdual_path names the
    algebra whose dual is the first factor.
    '''
    if (b_path is None) == (bdual_path is None):
        raise ValueError("Give exactly one of b_path and bdual_path")
    lines = ['kind cotwistor']
    if b_path is not None:
        lines.append('B ' + b_path)
    else:
        lines.append('Bdual ' + bdual_path)
    lines.append('H ' + h_path)
    lines.extend(_matrix_lines('phi', phi))
    return '\n'.join(lines) + '\n'


def dumps_entwining(phi, h_path, a_path):
    '''The text of an entwining file referring to H and A by path.'''
    lines = ['kind entwining', 'H ' + h_path, 'A ' + a_path]
    lines.extend(_matrix_lines('Phi', phi))
    return '\n'.join(lines) + '\n'
