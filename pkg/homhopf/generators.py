'''Factory functions for example Hom-bialgebras and Hom-Hopf algebras.'''

__author__ = 'The homhopf developers'

from .linear import LinearMap, compose, covector, identity, vector
from .structures import (HomBialgebra, HomHopfAlgebra, StructureError,
                         check_hom_algebra_morphism, check_hom_coalgebra_morphism)
from ._types import has_antipode, is_integer


def trivial():
    '''The one-dimensional Hom-Hopf algebra k.'''
    one = identity(1)
    return HomHopfAlgebra.from_maps(one, one, one, one, one, one)


def cyclic_group_algebra(order):
    '''The group algebra kC_order with alpha = id.

    The basis element of index a is g^a.  g^a is grouplike, the product is
    g^a g^b = g^(a+b mod order) and the antipode is S(g^a) = g^(-a).

    Args:
        order: A positive integer.

    Returns:
        A HomHopfAlgebra.
    '''
    if not is_integer(order) or order < 1:
        raise ValueError("order must be a positive integer")
    n = order
    mult = LinearMap.from_columns(n, [{(a + b) % n: 1} for a in range(n) for b in range(n)])
    unit = vector([1] + [0] * (n - 1))
    comult = LinearMap.from_columns(n * n, [{a * n + a: 1} for a in range(n)])
    counit = covector([1] * n)
    antipode = LinearMap.from_columns(n, [{(-a) % n: 1} for a in range(n)])
    return HomHopfAlgebra.from_maps(identity(n), mult, unit, comult, counit, antipode)


def kc2():
    return cyclic_group_algebra(2)


def kc4():
    return cyclic_group_algebra(4)


def cyclic_power_automorphism(order, exponent):
    '''The automorphism g -> g^exponent of kC_order, as a LinearMap.'''
    return LinearMap.from_columns(order, [{(a * exponent) % order: 1}
                                          for a in range(order)])


# Sweedler's algebra: basis g^a x^b has index a + 2b, so the order is
# 1, g, x, gx.
def _sweedler_index(a, b):
    return a + 2 * b


def sweedler_h4():
    '''Sweedler's four-dimensional Hopf algebra H4 with alpha = id.

    It is generated by g and x with g^2 = 1, x^2 = 0 and xg = -gx; g is
    grouplike, Delta(x) = x (x) 1 + g (x) x, epsilon(x) = 0, S(g) = g and
    S(x) = -gx.
    '''
    columns = []
    for left in range(4):
        a, b = left % 2, left // 2
        for right in range(4):
            c, d = right % 2, right // 2
            if b + d > 1:
                columns.append({})
                continue
            sign = -1 if b * c else 1
            columns.append({_sweedler_index((a + c) % 2, b + d): sign})
    mult = LinearMap.from_columns(4, columns)
    unit = vector([1, 0, 0, 0])

    def tensor(i, j):
        return i * 4 + j

    one, g, x, gx = range(4)
    comult = LinearMap.from_columns(16, [
        {tensor(one, one): 1},
        {tensor(g, g): 1},
        {tensor(x, one): 1, tensor(g, x): 1},
        {tensor(gx, g): 1, tensor(one, gx): 1},
    ])
    counit = covector([1, 1, 0, 0])
    antipode = LinearMap.from_columns(4, [{one: 1}, {g: 1}, {gx: -1}, {x: 1}])
    return HomHopfAlgebra.from_maps(identity(4), mult, unit, comult, counit, antipode)


def sweedler_sign_automorphism():
    '''The automorphism of H4 fixing g and sending x to -x.'''
    return LinearMap([[1, 0, 0, 0],
                      [0, 1, 0, 0],
                      [0, 0, -1, 0],
                      [0, 0, 0, -1]])


def yau_twist(b, alpha, check=True):
    '''Twist a classical bialgebra into a Hom-bialgebra along an automorphism.

    The result is (B, alpha mu, 1, Delta alpha, epsilon, alpha).  For a Hopf
    algebra the antipode is kept unchanged, which is correct when alpha
    commutes with it.

    Args:
        b: A HomBialgebra or HomHopfAlgebra whose alpha is the identity.
        alpha: A bialgebra automorphism of b.
        check: If True, verify that alpha is an automorphism first.

    Returns:
        A HomBialgebra, or a HomHopfAlgebra when b has an antipode.

    Raises:
        StructureError: If b is not classical, or if check is True and alpha
            violates an automorphism identity; the message names it.
    '''
    if b.alpha != identity(b.dim):
        raise StructureError("yau_twist needs a classical input with alpha = id")
    if check:
        reports = [check_hom_algebra_morphism(alpha, b, b),
                   check_hom_coalgebra_morphism(alpha, b, b)]
        for report in reports:
            failure = report.first_failure()
            if failure is not None:
                raise StructureError("Twisting map is not a bialgebra "
                                     "automorphism: {0} fails".format(failure.axiom))
        if has_antipode(b) and compose(alpha, b.antipode) != compose(b.antipode, alpha):
            raise StructureError("Twisting map does not commute with the antipode")
    twisted = HomBialgebra.from_maps(alpha, compose(alpha, b.mult), b.unit,
                                     compose(b.comult, alpha), b.counit)
    if has_antipode(b):
        return HomHopfAlgebra(twisted, b.antipode)
    return twisted


def twisted_kc4():
    '''kC4 twisted along g -> g^3.'''
    return yau_twist(kc4(), cyclic_power_automorphism(4, 3))


def twisted_h4():
    '''H4 twisted along its sign automorphism x -> -x.'''
    return yau_twist(sweedler_h4(), sweedler_sign_automorphism())


EXAMPLES = {
    'trivial': trivial,
    'kc2': kc2,
    'kc4': kc4,
    'kc4-twisted': twisted_kc4,
    'h4': sweedler_h4,
    'h4-twisted': twisted_h4,
}
