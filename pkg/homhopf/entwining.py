'''Hom-entwining structures, entwined modules and codoubles.

An entwining (H, A, Phi) pairs a Hom-coalgebra H with a Hom-algebra A
through Phi : H (x) A -> A (x) H.  In Sweedler-like notation
Phi(h (x) a) = a_Phi (x) h^Phi.  Entwinings correspond one to one with
cotwistors (A*)^cop (x) H -> H (x) (A*)^cop by a reindexing of structure
constants, and the smash coproduct of that cotwistor is the codouble.
'''

__author__ = 'The homhopf developers'

from .linear import LinearMap, compose, identity, kron, permutation, permute
from .report import CheckReport
from .smash import (Bicomodule, Cotwistor, build_smash_bialgebra,
                    build_smash_coproduct, p_functor, q_functor,
                    tensor_coaction)
from .structures import (ModuleComodule, StructureError, check_comodule_morphism,
                         check_module_morphism, check_right_comodule,
                         check_right_module, dual_bialgebra, dual_coalgebra,
                         require)
from ._types import (has_comultiplication, has_multiplication, is_integer,
                     is_linear_map)

MONOIDAL = 'monoidal'


class EntwiningMap(object):
    '''A map Phi : H (x) A -> A (x) H.

    Attributes:
        H: The Hom-coalgebra (or Hom-bialgebra).
        A: The Hom-algebra (or Hom-bialgebra).
        Phi: The LinearMap.
    '''

    def __init__(self, h, a, phi):
        if not has_comultiplication(h):
            raise TypeError("H of an entwining must be a Hom-coalgebra")
        if not has_multiplication(a):
            raise TypeError("A of an entwining must be a Hom-algebra")
        if not is_linear_map(phi):
            raise TypeError("Phi must be a LinearMap")
        n = h.dim * a.dim
        if phi.shape != (n, n):
            raise StructureError("Phi has shape {0}x{1}, expected {2}x{2}"
                                 .format(phi.cod_dim, phi.dom_dim, n))
        self.H = h
        self.A = a
        self.Phi = phi

    def with_phi(self, phi):
        '''A copy of this entwining with Phi replaced.'''
        return EntwiningMap(self.H, self.A, phi)

    def __repr__(self):
        return ('EntwiningMap(dim_H=' + str(self.H.dim) + ', dim_A=' +
                str(self.A.dim) + ')')


def flip_entwining(h, a):
    '''Phi(h (x) a) = a (x) h.'''
    return EntwiningMap(h, a, permutation((h.dim, a.dim), (1, 0)))


def check_entwining(e, monoidal=False):
    '''Check the entwining axioms.

    Always checked: (alpha_A (x) alpha_H) Phi = Phi (alpha_H (x) alpha_A) and

        E1  (mu_A (x) alpha_H)(id_A (x) Phi)(Phi (x) id_A) = Phi (alpha_H (x) mu_A)
        E2  (Phi (x) id_H)(id_H (x) Phi)(Delta_H (x) alpha_A) = (alpha_A (x) Delta_H) Phi
        E3  (id_A (x) epsilon_H) Phi = epsilon_H (x) id_A
        E4  Phi (id_H (x) 1_A) = 1_A (x) id_H

    With monoidal set, also in the group 'monoidal':

        E5  (a_1)_Phi (x) (a_2)_Psi (x) alpha_H^2(h)^Phi alpha_H^2(g)^Psi
              = Delta_A(a_Phi) (x) alpha_H^2((hg)^Phi)
        E6  epsilon_A(a_Phi) (1_H)^Phi = epsilon_A(a) 1_H

    Args:
        e: An EntwiningMap.
        monoidal: If True, also check E5 and E6.

    Returns:
        A CheckReport.

    Raises:
        StructureError: If monoidal is set but H or A is not a Hom-bialgebra.
    '''
    h, a, phi = e.H, e.A, e.Phi
    dh, da = h.dim, a.dim
    ih, ia = identity(dh), identity(da)
    report = CheckReport('entwining ' + str(dh) + 'x' + str(da))
    report.compare('alpha-compatibility', compose(kron(a.alpha, h.alpha), phi),
                   compose(phi, kron(h.alpha, a.alpha)), (dh, da))
    report.compare('E1', compose(kron(a.mult, h.alpha), kron(ia, phi), kron(phi, ia)),
                   compose(phi, kron(h.alpha, a.mult)), (dh, da, da))
    report.compare('E2', compose(kron(phi, ih), kron(ih, phi), kron(h.comult, a.alpha)),
                   compose(kron(a.alpha, h.comult), phi), (dh, da))
    report.compare('E3', compose(kron(ia, h.counit), phi), kron(h.counit, ia), (dh, da))
    report.compare('E4', compose(phi, kron(ih, a.unit)), kron(a.unit, ih), (dh,))
    if monoidal:
        if not (has_comultiplication(a) and has_multiplication(h)):
            raise StructureError("The monoidal entwining axioms need A and H to "
                                 "be Hom-bialgebras")
        h2 = h.power(2)
        lhs = compose(kron(ia, ia, h.mult),
                      permute(compose(kron(phi, phi),
                                      permute(kron(h2, h2, a.comult), (dh, dh, da, da),
                                              (0, 2, 1, 3))),
                              (da, dh, da, dh), (0, 2, 1, 3)))
        rhs = compose(kron(a.comult, h2), phi, kron(h.mult, ia))
        report.compare('E5', lhs, rhs, (dh, dh, da), group=MONOIDAL)
        report.compare('E6', compose(kron(a.counit, ih), phi, kron(h.unit, ia)),
                       kron(a.counit, h.unit), (da,), group=MONOIDAL)
    return report


def _dual_factor(a):
    if has_comultiplication(a):
        return dual_bialgebra(a)
    return dual_coalgebra(a)


def cotwistor_from_entwining(e):
    '''The cotwistor (A*)^cop (x) H -> H (x) (A*)^cop of an entwining.

    phi(f (x) h) = sum_i f((e_i)_Phi) h^Phi (x) e^i, which on structure
    constants reads phi[(p, s)][(i, h)] = Phi[(i, p)][(h, s)].

    Returns:
        A Cotwistor whose B is dual_coalgebra(A), or dual_bialgebra(A) when
        A is a Hom-bialgebra.
    '''
    h, a, big_phi = e.H, e.A, e.Phi
    dh, da = h.dim, a.dim
    columns = [{} for _ in range(da * dh)]
    for col in range(dh * da):
        hh, s = divmod(col, da)
        for row, value in big_phi.nonzeros(col):
            i, p = divmod(row, dh)
            columns[i * dh + hh][p * da + s] = value
    phi = LinearMap.from_columns(dh * da, columns)
    return Cotwistor(_dual_factor(a), h, phi)


def entwining_from_cotwistor(c, algebra=None):
    '''The entwining of a cotwistor whose first factor is a dual (A*)^cop.

    Phi(h (x) a) = sum_i (e^i)^phi(a) e_i (x) h^phi, the inverse of
    cotwistor_from_entwining.

    Args:
        c: A Cotwistor.
        algebra: The Hom-algebra A with c.B = (A*)^cop. If omitted, the
            predual recorded on c.B is used.

    Returns:
        An EntwiningMap.

    Raises:
        StructureError: If B is not presented as the dual of an algebra, or
            is not the dual of the algebra given.
    '''
    a = algebra if algebra is not None else c.B.predual
    if a is None:
        raise StructureError("The cotwistor's first factor is not presented as "
                             "the dual of a Hom-algebra")
    dual = dual_coalgebra(a)
    if (dual.alpha != c.B.alpha or dual.comult != c.B.comult or
            dual.counit != c.B.counit):
        raise StructureError("The cotwistor's first factor is not the dual of "
                             "the given Hom-algebra")
    h, phi = c.H, c.phi
    dh, da = h.dim, a.dim
    columns = [{} for _ in range(dh * da)]
    for col in range(da * dh):
        i, hh = divmod(col, dh)
        for row, value in phi.nonzeros(col):
            p, s = divmod(row, da)
            columns[hh * da + s][i * dh + p] = value
    return EntwiningMap(h, a, LinearMap.from_columns(da * dh, columns))


class EntwinedModule(ModuleComodule):
    '''A right A-module and right H-comodule with degree n.'''

    def __init__(self, alpha, action, coaction, n=0):
        if not is_integer(n):
            raise TypeError("n must be an integer")
        super(EntwinedModule, self).__init__(alpha, action, coaction)
        self.n = n

    def __repr__(self):
        return 'EntwinedModule(dim=' + str(self.dim) + ', n=' + str(self.n) + ')'


def entwined_compatibility(u, e, n=None):
    '''Both sides of the n-th entwined module condition as maps U (x) A -> U (x) H.

    rho(u a) = u_(0) alpha_A(a_Phi) (x) alpha_H^{-n}((alpha_H^{n+1}(u_(1)))^Phi)
    '''
    n = u.n if n is None else n
    h, a = e.H, e.A
    du = u.dim
    iu = identity(du)
    lhs = compose(u.coaction, u.action)
    rhs = compose(kron(u.action, identity(h.dim)),
                  kron(iu, a.alpha, h.power(-n)),
                  kron(iu, e.Phi),
                  kron(iu, h.power(n + 1), identity(a.dim)),
                  kron(u.coaction, identity(a.dim)))
    return lhs, rhs


def check_entwined_module(u, e):
    '''Check an entwined module of degree u.n over an entwining.'''
    report = CheckReport('entwined module of dimension ' + str(u.dim), {'n': u.n})
    report.extend(check_right_module(u.module, e.A), 'A')
    report.extend(check_right_comodule(u.comodule, e.H), 'H')
    lhs, rhs = entwined_compatibility(u, e)
    report.compare('entwined-compatibility', lhs, rhs, (u.dim, e.A.dim))
    return report


def check_entwined_morphism(f, u, v, e):
    '''Check that f : U -> V is A-linear and H-colinear.'''
    report = CheckReport('entwined module morphism')
    report.extend(check_module_morphism(f, u.module, v.module, e.A))
    report.extend(check_comodule_morphism(f, u.comodule, v.comodule, e.H), 'H')
    return report


def canonical_module_HA(e, n=0):
    '''H (x) A as an entwined module of degree n.

    The action is (h (x) b) a = alpha_H(h) (x) b alpha_A^{-1}(a) and the
    coaction is (id_H (x) alpha_A^{n+1} (x) id_H)(id_H (x) Phi)(Delta_H (x) alpha_A^{-n}).
    '''
    h, a = e.H, e.A
    ih = identity(h.dim)
    action = kron(h.alpha, compose(a.mult, kron(identity(a.dim), a.power(-1))))
    coaction = compose(kron(ih, a.power(n + 1), ih), kron(ih, e.Phi),
                       kron(h.comult, a.power(-n)))
    return EntwinedModule(kron(h.alpha, a.alpha), action, coaction, n)


def canonical_module_AH(e, n=0):
    '''A (x) H as an entwined module of degree n.

    The coaction is a (x) h -> alpha_A(a) (x) h_1 (x) alpha_H^{-n}(h_2) and the
    action is (b (x) h) a = b (alpha_A^{-1}(a))_Phi (x) alpha_H(h)^Phi.
    '''
    h, a = e.H, e.A
    ia = identity(a.dim)
    coaction = kron(a.alpha, compose(kron(identity(h.dim), h.power(-n)), h.comult))
    action = compose(kron(a.mult, identity(h.dim)), kron(ia, e.Phi),
                     kron(ia, h.alpha, a.power(-1)))
    return EntwinedModule(kron(a.alpha, h.alpha), action, coaction, n)


def hopf_module_entwining(h, n=0):
    '''The entwining of Hom-Hopf modules on a Hom-bialgebra.

    Phi(h (x) g) = alpha^{-1}(g_1) (x) alpha^{-1}(h) alpha^n(g_2).
    '''
    d = h.dim
    phi = compose(kron(identity(d), h.mult),
                  kron(h.power(-1), h.power(-1), h.power(n)),
                  permute(kron(identity(d), h.comult), (d, d, d), (1, 0, 2)))
    return EntwiningMap(h, h, phi)


def regular_hopf_module(h, n=0):
    '''H with action mu and coaction Delta, as an entwined module of degree n.'''
    return EntwinedModule(h.alpha, h.mult, h.comult, n)


def trivial_algebra_entwining(h):
    '''The entwining of H with the one-dimensional algebra k, Phi = id_H.'''
    from .generators import trivial
    return EntwiningMap(h, trivial(), identity(h.dim))


def trivial_coalgebra_entwining(a):
    '''The entwining of the one-dimensional coalgebra k with A, Phi = id_A.'''
    from .generators import trivial
    return EntwiningMap(trivial(), a, identity(a.dim))


def trivial_entwined_module(e, n=0):
    '''k with action epsilon_A and coaction lambda -> lambda (x) 1_H.

    It is an entwined module exactly when E6 holds.
    '''
    return EntwinedModule(identity(1), e.A.counit, e.H.unit, n)


def tensor_action(ctx, u_action, v_action, du, dv, a):
    '''The action (u (x) v) a = u alpha^{-i-2}(a_1) (x) v alpha^{-j-2}(a_2).'''
    da = a.dim
    split = compose(kron(a.power(-ctx.i - 2), a.power(-ctx.j - 2)), a.comult)
    return compose(kron(u_action, v_action),
                   permute(kron(identity(du * dv), split), (du, dv, da, da),
                           (0, 2, 1, 3)))


def tensor_entwined(ctx, u, v, e, check=True):
    '''The tensor product of two entwined modules of the same degree.

    Args:
        ctx: The MonoidalContext.
        u, v: EntwinedModules of the same degree.
        e: The entwining; it must satisfy E1-E6.
        check: If True, refuse an entwining failing E1-E6.

    Returns:
        An EntwinedModule on U (x) V.

    Raises:
        StructureError: If the degrees differ.
        PreconditionError: If check is set and e is not monoidal.
    '''
    if u.n != v.n:
        raise StructureError("Cannot tensor entwined modules of degrees {0} and "
                             "{1}".format(u.n, v.n))
    if check:
        require(check_entwining(e, monoidal=True), 'tensor entwined modules')
    return EntwinedModule(kron(u.alpha, v.alpha),
                          tensor_action(ctx, u.action, v.action, u.dim, v.dim, e.A),
                          tensor_coaction(ctx, u.coaction, v.coaction, u.dim, v.dim, e.H),
                          u.n)


def check_unit_constraints(ctx, u, e, check=True):
    '''Check that l_U and r_U are morphisms of entwined modules.

    l_U = alpha_U^{j+1} : k (x) U -> U and r_U = alpha_U^{i+1} : U (x) k -> U.
    '''
    unit = trivial_entwined_module(e, u.n)
    report = CheckReport('unit constraints', ctx.parameters())
    left = tensor_entwined(ctx, unit, u, e, check)
    right = tensor_entwined(ctx, u, unit, e, check=False)
    report.extend(check_entwined_morphism(u.power(ctx.j + 1), left, u, e), 'left')
    report.extend(check_entwined_morphism(u.power(ctx.i + 1), right, u, e), 'right')
    return report


def transport_entwined_module(u, e, n):
    '''Move an entwined module of degree u.n to degree n.

    The action becomes u * a = u alpha_A^{u.n - n}(a); the coaction is kept.
    This is an isomorphism between the categories of degree u.n and n.
    '''
    action = compose(u.action, kron(identity(u.dim), e.A.power(u.n - n)))
    return EntwinedModule(u.alpha, action, u.coaction, n)


def r_functor(u, e):
    '''An entwined module as a bicomodule over the codouble factors.

    The (A*)^cop-coaction is u -> sum_i u e_i (x) e^i.
    '''
    du, da = u.dim, e.A.dim
    columns = [{} for _ in range(du)]
    for col in range(du * da):
        j, i = divmod(col, da)
        for r, value in u.action.nonzeros(col):
            columns[j][r * da + i] = value
    b_coaction = LinearMap.from_columns(du * da, columns)
    return Bicomodule(u.alpha, u.coaction, b_coaction, u.n)


def t_functor(m, e):
    '''A bicomodule as an entwined module: u a = u_[1](a) u_[0].'''
    du, da = m.dim, e.A.dim
    columns = [{} for _ in range(du * da)]
    for j in range(du):
        for row, value in m.b_coaction.nonzeros(j):
            r, i = divmod(row, da)
            columns[j * da + i][r] = value
    action = LinearMap.from_columns(du, columns)
    return EntwinedModule(m.alpha, action, m.h_coaction, m.n)


def entwined_to_codouble_comodule(u, e):
    '''The comodule over the codouble corresponding to an entwined module.'''
    return q_functor(r_functor(u, e), cotwistor_from_entwining(e))


def codouble_comodule_to_entwined(m, e, n=0):
    '''The entwined module of degree n corresponding to a codouble comodule.'''
    return t_functor(p_functor(n, m, cotwistor_from_entwining(e)), e)


def codouble(e, check=True):
    '''The codouble (A*)^cop (x) H, the smash coproduct of the associated cotwistor.'''
    return build_smash_coproduct(cotwistor_from_entwining(e), check)


def codouble_bialgebra(e, check=True):
    '''The codouble of a monoidal entwining as a Hom-bialgebra.

    The product is (f (x) x)(f' (x) y) = f*f' (x) xy and the unit is
    epsilon_A (x) 1_H.

    Raises:
        StructureError: If A or H is not a Hom-bialgebra.
        PreconditionError: If check is set and E1-E6 fail.
    '''
    if not (has_comultiplication(e.A) and has_multiplication(e.H)):
        raise StructureError("A codouble bialgebra needs A and H to be "
                             "Hom-bialgebras")
    if check:
        require(check_entwining(e, monoidal=True), 'build a codouble bialgebra')
    return build_smash_bialgebra(cotwistor_from_entwining(e), 'hg', check=False)
