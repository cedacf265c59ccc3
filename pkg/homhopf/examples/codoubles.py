'''Build codoubles of a few entwinings and check what comes out.

Run with python -m homhopf.examples.codoubles
'''
from homhopf.entwining import (canonical_module_HA, check_entwined_module,
                               check_entwining, codouble, codouble_bialgebra,
                               entwined_to_codouble_comodule, flip_entwining,
                               hopf_module_entwining)
from homhopf.generators import kc2, twisted_kc4
from homhopf.structures import check_hom_bialgebra, check_right_comodule


def describe(name, report):
    print('{0}: {1} ({2} axioms)'.format(name, report.verdict(), len(report)))


h = twisted_kc4()

# Hom-Hopf modules over the twisted group algebra are entwined modules
hopf = hopf_module_entwining(h)
describe('Hopf module entwining', check_entwining(hopf))

d = codouble(hopf)
for n in (-1, 0, 1):
    u = canonical_module_HA(hopf, n)
    describe('H (x) A of degree {0}'.format(n), check_entwined_module(u, hopf))
    # every degree lands in the same comodule category over the codouble
    describe('  as a codouble comodule',
             check_right_comodule(entwined_to_codouble_comodule(u, hopf), d))

# The flip entwining is monoidal, so its codouble is a Hom-bialgebra
flip = flip_entwining(kc2(), h)
describe('flip entwining', check_entwining(flip, monoidal=True))
describe('flip codouble', check_hom_bialgebra(codouble_bialgebra(flip)))
