'''Cotwistors, smash coproducts and bicomodules.

A cotwistor is a map phi : B (x) H -> H (x) B between two Hom-coalgebras.
When it satisfies M1-M4 and commutes with the structure maps, B (x) H is a
Hom-coalgebra under

    Delta(b (x) h) = (b_1 (x) h_1^phi) (x) (b_2^phi (x) h_2)

and when both factors are Hom-bialgebras and M5-M6 hold as well, it is a
Hom-bialgebra.  Comodules over the smash coproduct correspond to
bicomodules through the comparison maps p_functor and q_functor.
'''

__author__ = 'The homhopf developers'

import random

from .linear import (LinearMap, NotInvertibleError, add, compose, identity,
                     invert, kron, permutation, permute, permute_domain)
from .report import CheckReport
from .structures import (Carried, HomAlgebra, HomBialgebra, HomCoalgebra,
                         ObjectWithAut, RightHomComodule, StructureError,
                         check_right_comodule, require)
from ._types import (has_comultiplication, has_multiplication, is_integer,
                     is_linear_map)

MONOIDAL = 'monoidal'
ORDERS = ('gh', 'hg')


class Cotwistor(object):
    '''A linear map phi : B (x) H -> H (x) B between two Hom-coalgebras.'''

    def __init__(self, b, h, phi):
        '''Initialise a Cotwistor.

        Args:
            b: A HomCoalgebra or HomBialgebra.
            h: A HomCoalgebra or HomBialgebra.
            phi: A LinearMap B (x) H -> H (x) B.

        Raises:
            StructureError: If phi does not have shape (dH dB) x (dB dH).
        '''
        if not (has_comultiplication(b) and has_comultiplication(h)):
            raise TypeError("Both factors of a Cotwistor must be Hom-coalgebras")
        if not is_linear_map(phi):
            raise TypeError("phi must be a LinearMap")
        n = b.dim * h.dim
        if phi.shape != (n, n):
            raise StructureError("phi has shape {0}x{1}, expected {2}x{2}"
                                 .format(phi.cod_dim, phi.dom_dim, n))
        self.B = b
        self.H = h
        self.phi = phi

    def __repr__(self):
        return ('Cotwistor(dim_B=' + str(self.B.dim) + ', dim_H=' +
                str(self.H.dim) + ')')


def flip_cotwistor(b, h):
    '''The cotwistor b (x) h -> h (x) b.'''
    return Cotwistor(b, h, permutation((b.dim, h.dim), (1, 0)))


def check_cotwistor(c, monoidal=False):
    '''Check the cotwistor axioms.

    Always checked: compatibility with alpha and

        M1  (phi (x) id_B)(id_B (x) phi)(Delta_B (x) alpha_H) = (alpha_H (x) Delta_B) phi
        M2  (id_H (x) phi)(phi (x) id_H)(alpha_B (x) Delta_H) = (Delta_H (x) alpha_B) phi
        M3  (epsilon_H (x) id_B) phi = id_B (x) epsilon_H
        M4  (id_H (x) epsilon_B) phi = epsilon_B (x) id_H

    With monoidal set, also in the group 'monoidal':

        M5  phi(mu_B (x) mu_H)(id (x) flip (x) id) = (mu_H (x) mu_B)(id (x) flip (x) id)(phi (x) phi)
        M6  phi(1_B (x) 1_H) = 1_H (x) 1_B

    Args:
        c: A Cotwistor.
        monoidal: If True, also check M5 and M6.

    Returns:
        A CheckReport.

    Raises:
        StructureError: If monoidal is set but a factor is not a bialgebra.
    '''
    b, h, phi = c.B, c.H, c.phi
    db, dh = b.dim, h.dim
    ib, ih = identity(db), identity(dh)
    report = CheckReport('cotwistor ' + str(db) + 'x' + str(dh))
    report.compare('alpha-compatibility', compose(phi, kron(b.alpha, h.alpha)),
                   compose(kron(h.alpha, b.alpha), phi), (db, dh))
    report.compare('M1', compose(kron(phi, ib), kron(ib, phi), kron(b.comult, h.alpha)),
                   compose(kron(h.alpha, b.comult), phi), (db, dh))
    report.compare('M2', compose(kron(ih, phi), kron(phi, ih), kron(b.alpha, h.comult)),
                   compose(kron(h.comult, b.alpha), phi), (db, dh))
    report.compare('M3', compose(kron(h.counit, ib), phi), kron(ib, h.counit), (db, dh))
    report.compare('M4', compose(kron(ih, b.counit), phi), kron(b.counit, ih), (db, dh))
    if monoidal:
        if not (has_multiplication(b) and has_multiplication(h)):
            raise StructureError("The monoidal cotwistor axioms need two "
                                 "Hom-bialgebras")
        lhs = compose(phi, permute_domain(kron(b.mult, h.mult), (db, dh, db, dh),
                                          (0, 2, 1, 3)))
        rhs = compose(kron(h.mult, b.mult),
                      permute(kron(phi, phi), (dh, db, dh, db), (0, 2, 1, 3)))
        report.compare('M5', lhs, rhs, (db, dh, db, dh), group=MONOIDAL)
        report.compare('M6', compose(phi, kron(b.unit, h.unit)),
                       kron(h.unit, b.unit), (1,), group=MONOIDAL)
    return report


def smash_comult(c):
    '''The coproduct (id_B (x) phi (x) id_H)(Delta_B (x) Delta_H) on B (x) H.'''
    b, h = c.B, c.H
    return compose(kron(identity(b.dim), c.phi, identity(h.dim)),
                   kron(b.comult, h.comult))


def build_smash_coproduct(c, check=True):
    '''The smash coproduct Hom-coalgebra on B (x) H.

    Args:
        c: A Cotwistor.
        check: If True, refuse a cotwistor failing M1-M4 or alpha-compatibility.

    Returns:
        A HomCoalgebra with counit epsilon_B (x) epsilon_H and alpha
        alpha_B (x) alpha_H.

    Raises:
        PreconditionError: If check is set and the cotwistor is invalid; the
            message names the failing axiom.
    '''
    if check:
        require(check_cotwistor(c), 'build a smash coproduct')
    b, h = c.B, c.H
    return HomCoalgebra(kron(b.alpha, h.alpha), smash_comult(c),
                        kron(b.counit, h.counit))


def smash_mult(b, h, order):
    '''The product on B (x) H: ab (x) hg for order 'hg', ab (x) gh for 'gh'.'''
    if order not in ORDERS:
        raise ValueError("order must be one of {0}, got {1!r}".format(ORDERS, order))
    db, dh = b.dim, h.dim
    # Input factors are a, h, b, g.
    shuffle = (0, 2, 1, 3) if order == 'hg' else (0, 2, 3, 1)
    return permute_domain(kron(b.mult, h.mult), (db, dh, db, dh), shuffle)


def build_smash_bialgebra(c, order, check=True):
    '''The smash coproduct of two Hom-bialgebras with a componentwise product.

    Args:
        c: A Cotwistor between two Hom-bialgebras.
        order: 'gh' for the product (a (x) h)(b (x) g) = ab (x) gh, or 'hg'
            for ab (x) hg. There is no default.
        check: If True, refuse a cotwistor failing M1-M6.

    Returns:
        A HomBialgebra with unit 1_B (x) 1_H.

    Raises:
        ValueError: If order is not 'gh' or 'hg'.
        PreconditionError: If check is set and the cotwistor is invalid.
    '''
    b, h = c.B, c.H
    mult = smash_mult(b, h, order)
    if check:
        require(check_cotwistor(c, monoidal=True), 'build a smash bialgebra')
    coalgebra = build_smash_coproduct(c, check=False)
    algebra = HomAlgebra(coalgebra.alpha, mult, kron(b.unit, h.unit))
    return HomBialgebra(algebra, coalgebra)


class Bicomodule(Carried):
    '''A space with right coactions over both factors of a cotwistor.

    Attributes:
        n: The degree of the compatibility condition.
    '''

    def __init__(self, alpha, h_coaction, b_coaction, n=0):
        if not is_integer(n):
            raise TypeError("n must be an integer")
        self._carrier = ObjectWithAut(alpha)
        self._h = RightHomComodule(alpha, h_coaction)
        self._b = RightHomComodule(alpha, b_coaction)
        self.n = n

    @property
    def h_coaction(self):
        return self._h.coaction

    @property
    def b_coaction(self):
        return self._b.coaction

    @property
    def h_comodule(self):
        return self._h

    @property
    def b_comodule(self):
        return self._b

    def __repr__(self):
        return 'Bicomodule(dim=' + str(self.dim) + ', n=' + str(self.n) + ')'


def psi(c, n):
    '''The twisted cotwistor (id_H (x) alpha_B^n) phi (alpha_B^{-n-1} (x) alpha_H).'''
    b, h = c.B, c.H
    return compose(kron(identity(h.dim), b.power(n)), c.phi,
                   kron(b.power(-n - 1), h.alpha))


def check_bicomodule(m, c):
    '''Check a bicomodule of degree m.n over a cotwistor.

    Both coactions must be Hom-comodule structures and

        (rho_H (x) id_B) rho_B = (id_U (x) psi_n)(rho_B (x) id_H) rho_H

    where psi_n is the twisted cotwistor returned by psi().
    '''
    b, h = c.B, c.H
    du = m.dim
    if m.h_coaction.cod_dim != du * h.dim or m.b_coaction.cod_dim != du * b.dim:
        raise StructureError("Bicomodule coactions do not match the cotwistor "
                             "factors")
    report = CheckReport('bicomodule of dimension ' + str(du), {'n': m.n})
    report.extend(check_right_comodule(m.h_comodule, h), 'H')
    report.extend(check_right_comodule(m.b_comodule, b), 'B')
    lhs = compose(kron(m.h_coaction, identity(b.dim)), m.b_coaction)
    rhs = compose(kron(identity(du), psi(c, m.n)), kron(m.b_coaction, identity(h.dim)),
                  m.h_coaction)
    report.compare('bicomodule-compatibility', lhs, rhs, (du,))
    return report


def p_functor(n, u, c):
    '''Split a comodule over the smash coproduct into a bicomodule.

    The H-coaction is (id (x) epsilon_B (x) alpha_H^{-1}) rho and the
    B-coaction is (id (x) alpha_B^n (x) epsilon_H) rho.

    Args:
        n: The degree.
        u: A RightHomComodule over build_smash_coproduct(c).
        c: The Cotwistor.

    Returns:
        A Bicomodule of degree n.
    '''
    b, h = c.B, c.H
    one = identity(u.dim)
    h_coaction = compose(kron(one, b.counit, h.power(-1)), u.coaction)
    b_coaction = compose(kron(one, b.power(n), h.counit), u.coaction)
    return Bicomodule(u.alpha, h_coaction, b_coaction, n)


def q_functor(m, c):
    '''Merge a bicomodule into a comodule over the smash coproduct.

    The coaction is (alpha_U^{-1} (x) alpha_B^{-n-1} (x) alpha_H)(rho_B (x) id_H) rho_H,
    the inverse of p_functor at the same degree.
    '''
    b, h = c.B, c.H
    coaction = compose(kron(m.power(-1), b.power(-m.n - 1), h.alpha),
                       kron(m.b_coaction, identity(h.dim)), m.h_coaction)
    return RightHomComodule(m.alpha, coaction)


def transport_bicomodule(m, c, n):
    '''Move a bicomodule of degree m.n to degree n.

    The B-coaction becomes (id (x) alpha_B^{n - m.n}) rho_B; the H-coaction
    is unchanged.
    '''
    b_coaction = compose(kron(identity(m.dim), c.B.power(n - m.n)), m.b_coaction)
    return Bicomodule(m.alpha, m.h_coaction, b_coaction, n)


def tensor_coaction(ctx, u_coaction, v_coaction, du, dv, d):
    '''The coaction u_0 (x) v_0 (x) alpha^i(u_1) alpha^j(v_1) on U (x) V.

    Args:
        ctx: The MonoidalContext.
        u_coaction, v_coaction: The coactions of U and V.
        du, dv: The dimensions of U and V.
        d: The Hom-bialgebra coacting.
    '''
    product = compose(d.mult, kron(d.power(ctx.i), d.power(ctx.j)))
    return compose(kron(identity(du * dv), product),
                   permute(kron(u_coaction, v_coaction), (du, d.dim, dv, d.dim),
                           (0, 2, 1, 3)))


def tensor_corep(ctx, u, v, d):
    '''The tensor product of two comodules over a Hom-bialgebra.'''
    return RightHomComodule(kron(u.alpha, v.alpha),
                            tensor_coaction(ctx, u.coaction, v.coaction, u.dim, v.dim, d))


def tensor_bicomodule(ctx, u, v, c):
    '''The tensor product of two bicomodules of the same degree.

    Raises:
        StructureError: If the degrees differ.
    '''
    if u.n != v.n:
        raise StructureError("Cannot tensor bicomodules of degrees {0} and {1}"
                             .format(u.n, v.n))
    return Bicomodule(kron(u.alpha, v.alpha),
                      tensor_coaction(ctx, u.h_coaction, v.h_coaction, u.dim, v.dim, c.H),
                      tensor_coaction(ctx, u.b_coaction, v.b_coaction, u.dim, v.dim, c.B),
                      u.n)


def _commutant_of_finite_order(alpha, rng, limit=24):
    # An element T = sum_k alpha^k R alpha^{-k} commutes with alpha when
    # alpha^order = id.
    d = alpha.dim
    order = None
    for k in range(1, limit + 1):
        if alpha.power(k) == identity(d):
            order = k
            break
    if order is None:
        raise StructureError("alpha has no finite order up to {0}".format(limit))
    r = LinearMap([[rng.randint(-2, 2) for _ in range(d)] for _ in range(d)])
    total = None
    for k in range(order):
        term = compose(alpha.power(k), r, alpha.power(-k))
        total = term if total is None else add(total, term)
    return total


def random_comodule(d, seed=0, attempts=64):
    '''A comodule isomorphic to the regular one over a Hom-coalgebra.

    The regular coaction is conjugated by a random invertible T commuting
    with alpha: rho = (T^{-1} (x) id) Delta T.  The result is deterministic
    for a given seed.

    Raises:
        StructureError: If alpha has no small finite order, or no invertible
            T was found.
    '''
    rng = random.Random(seed)
    carrier = d.carrier
    for _ in range(attempts):
        t = _commutant_of_finite_order(carrier, rng)
        try:
            t_inverse = invert(t)
        except NotInvertibleError:
            continue
        coaction = compose(kron(t_inverse, identity(d.dim)), d.comult, t)
        return RightHomComodule(d.alpha, coaction)
    raise StructureError("No invertible intertwiner found in {0} attempts"
                         .format(attempts))
