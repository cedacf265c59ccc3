import os
import shutil
import tempfile
import unittest

from homhopf.applications import (DoiHopfDatum, regular_comodule_algebra,
                                  yau_yd_module)
from homhopf.entwining import EntwiningMap, flip_entwining
from homhopf.formats import (FormatError, ModuleFile, dump, dumps, dumps_cotwistor,
                             dumps_entwining, load, load_document, load_structure,
                             loads, parse_document, structure_kind)
from homhopf.generators import kc2, sweedler_h4, twisted_kc4
from homhopf.linear import DimensionMismatchError, LinearMap
from homhopf.smash import Cotwistor
from homhopf.structures import (HomAlgebra, HomHopfAlgebra, StructureError,
                                dual_coalgebra, regular_module, same_structure)

__author__ = "The homhopf developers"

KC2_ALGEBRA = '''# the group algebra of C2
kind algebra
dim 2
alpha 2 2
1 0
0 1
mult 2 4
1 0 0 1
0 1 1 0
unit 2 1
1
0
'''


class TestParse(unittest.TestCase):

    def test_parse_algebra(self):
        a = loads(KC2_ALGEBRA)
        self.assertTrue(isinstance(a, HomAlgebra))
        self.assertEqual(a.mult, kc2().mult)

    def test_rationals(self):
        text = KC2_ALGEBRA.replace('alpha 2 2\n1 0\n0 1', 'alpha 2 2\n2/2 0\n0 6/6')
        self.assertEqual(loads(text).alpha, kc2().alpha)

    def test_first_field(self):
        self.assertRaises(FormatError, lambda: parse_document('dim 2\n'))
        self.assertRaises(FormatError, lambda: parse_document(''))

    def test_unknown_kind(self):
        self.assertRaises(FormatError, lambda: parse_document('kind ring\n'))

    def test_unknown_field(self):
        try:
            parse_document(KC2_ALGEBRA + 'colour 3\n', 'a.struct')
        except FormatError as e:
            self.assertEqual(e.line, 13)
            self.assertEqual(e.path, 'a.struct')
            self.assertTrue(str(e).startswith('a.struct:13: '))
        else:
            self.fail("Expected FormatError")

    def test_ragged_row(self):
        text = KC2_ALGEBRA.replace('1 0 0 1', '1 0 0')
        self.assertRaises(FormatError, lambda: parse_document(text))

    def test_decimal_entry(self):
        text = KC2_ALGEBRA.replace('1 0 0 1', '1 0 0 1.0')
        try:
            parse_document(text, 'a.struct')
        except FormatError as e:
            self.assertEqual(e.line, 8)
        else:
            self.fail("Expected FormatError")

    def test_missing_rows(self):
        text = KC2_ALGEBRA.replace('unit 2 1\n1\n0\n', 'unit 2 1\n1\n')
        self.assertRaises(FormatError, lambda: parse_document(text))

    def test_missing_field(self):
        text = KC2_ALGEBRA.replace('unit 2 1\n1\n0\n', '')
        self.assertRaises(FormatError, lambda: parse_document(text))

    def test_duplicate_field(self):
        self.assertRaises(FormatError, lambda: parse_document(KC2_ALGEBRA + 'dim 2\n'))

    def test_bad_integer(self):
        text = KC2_ALGEBRA.replace('dim 2', 'dim two')
        self.assertRaises(FormatError, lambda: parse_document(text))

    def test_dim_mismatch(self):
        text = KC2_ALGEBRA.replace('dim 2', 'dim 3')
        self.assertRaises(FormatError, lambda: loads(text))

    def test_shape_mismatch(self):
        text = KC2_ALGEBRA.replace('unit 2 1\n1\n0\n', 'unit 1 1\n1\n')
        self.assertRaises(DimensionMismatchError, lambda: loads(text))


class TestDump(unittest.TestCase):

    def test_canonical(self):
        text = dumps(kc2().algebra)
        self.assertEqual(text, KC2_ALGEBRA.replace('# the group algebra of C2\n', ''))
        self.assertEqual(dumps(loads(text)), text)

    def test_hopf_round_trip(self):
        for h in (sweedler_h4(), twisted_kc4()):
            back = loads(dumps(h))
            self.assertTrue(isinstance(back, HomHopfAlgebra))
            self.assertTrue(same_structure(back, h))

    def test_kinds(self):
        h = kc2()
        self.assertEqual(structure_kind(h), 'hopf')
        self.assertEqual(structure_kind(h.bialgebra), 'bialgebra')
        self.assertEqual(structure_kind(h.algebra), 'algebra')
        self.assertEqual(structure_kind(dual_coalgebra(h)), 'coalgebra')

    def test_module(self):
        h = sweedler_h4()
        u = yau_yd_module(h, 2)
        mf = loads(dumps(u))
        self.assertTrue(isinstance(mf, ModuleFile))
        self.assertEqual(mf.degree, 2)
        self.assertEqual(mf.action, u.action)
        self.assertEqual(mf.coaction, u.coaction)

    def test_module_readings(self):
        h = kc2()
        mf = loads(dumps(regular_module(h)))
        self.assertEqual(mf.as_module().action, h.mult)
        self.assertEqual(mf.coaction, None)
        self.assertRaises(StructureError, lambda: mf.as_comodule())

    def test_unserialisable(self):
        self.assertRaises(TypeError, lambda: dumps(LinearMap([[1]])))


class TestFiles(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def path(self, name):
        return os.path.join(self.directory, name)

    def test_load_missing(self):
        self.assertRaises(FormatError, lambda: load(self.path('missing.struct')))

    def test_load_structure_rejects_module(self):
        dump(regular_module(kc2()), self.path('u.mod'))
        self.assertRaises(FormatError, lambda: load_structure(self.path('u.mod')))

    def test_entwining_flip(self):
        dump(kc2(), self.path('h.struct'))
        with open(self.path('e.ent'), 'w') as f:
            f.write('kind entwining\nH h.struct\nA h.struct\nPhi flip\n')
        e = load(self.path('e.ent'))
        self.assertTrue(isinstance(e, EntwiningMap))
        self.assertEqual(e.Phi, flip_entwining(kc2(), kc2()).Phi)

    def test_entwining_text(self):
        dump(kc2(), self.path('h.struct'))
        phi = flip_entwining(kc2(), kc2()).Phi
        with open(self.path('e.ent'), 'w') as f:
            f.write(dumps_entwining(phi, 'h.struct', 'h.struct'))
        self.assertEqual(load(self.path('e.ent')).Phi, phi)

    def test_cotwistor_dual(self):
        h = twisted_kc4()
        dump(h, self.path('h.struct'))
        phi = LinearMap.from_columns(16, [{(i % 4) * 4 + i // 4: 1} for i in range(16)])
        with open(self.path('c.cot'), 'w') as f:
            f.write(dumps_cotwistor(phi, 'h.struct', bdual_path='h.struct'))
        c = load(self.path('c.cot'))
        self.assertTrue(isinstance(c, Cotwistor))
        self.assertEqual(c.B.comult, dual_coalgebra(h).comult)
        self.assertTrue(c.B.predual is not None)
        self.assertTrue(load_document(self.path('c.cot')).has('Bdual'))

    def test_cotwistor_needs_one_first_factor(self):
        dump(kc2(), self.path('h.struct'))
        with open(self.path('c.cot'), 'w') as f:
            f.write('kind cotwistor\nH h.struct\nphi flip\n')
        self.assertRaises(FormatError, lambda: load(self.path('c.cot')))
        self.assertRaises(ValueError, lambda: dumps_cotwistor(None, 'h.struct'))

    def test_doi_datum(self):
        h = kc2()
        dump(h, self.path('h.struct'))
        rho = regular_comodule_algebra(h).coaction
        text = ['kind doi-datum', 'H h.struct', 'A h.struct', 'C h.struct', 'k 1', 'm 2']
        text.append('coaction 4 2')
        text.extend(' '.join(str(v) for v in row) for row in rho.entries)
        text.append('action 2 4')
        text.extend(' '.join(str(v) for v in row) for row in h.mult.entries)
        with open(self.path('d.doi'), 'w') as f:
            f.write('\n'.join(text) + '\n')
        datum = load(self.path('d.doi'))
        self.assertTrue(isinstance(datum, DoiHopfDatum))
        self.assertEqual(datum.parameters(), {'k': 1, 'm': 2})
        self.assertEqual(datum.A.coaction, rho)
