'''Yetter-Drinfeld modules over Sweedler's algebra and their braiding.

Run with python -m homhopf.examples.yetter_drinfeld
'''
import logging

from homhopf.applications import (braiding_tau, check_hom_ybe, check_yd_module,
                                  coquasi_form, drinfeld_codouble, induced_braiding,
                                  tensor_yd, trivial_yd_module, yau_yd_module,
                                  yd_candidates, yd_to_codouble_comodule)
from homhopf.generators import sweedler_h4
from homhopf.structures import MonoidalContext, check_hom_bialgebra

logging.basicConfig(level=logging.DEBUG, format='%(message)s')
log = logging.getLogger('yetter_drinfeld')

h = sweedler_h4()
ctx = MonoidalContext()

u = yau_yd_module(h)
k = trivial_yd_module(h)
check_yd_module(u, h).log(log, 'adjoint module')
check_yd_module(tensor_yd(ctx, u, k, h), h).log(log, 'adjoint (x) trivial')
check_hom_ybe(ctx, 0, u, k, u, h).log(log, 'Yang-Baxter')

print('{0} Yetter-Drinfeld structures among the twisted regular ones'
      .format(len(yd_candidates(h))))

# The braiding comes from the coquasitriangular form on the codouble
check_hom_bialgebra(drinfeld_codouble(h)).log(log, 'Drinfeld codouble')
induced = induced_braiding(ctx, coquasi_form(h), yd_to_codouble_comodule(u, h),
                           yd_to_codouble_comodule(k, h))
print('induced braiding agrees: {0}'.format(induced == braiding_tau(ctx, 0, u, k, h)))
