'''Hom-algebras, Hom-coalgebras, Hom-bialgebras and Hom-Hopf algebras.

Every structure is given by structure constants as LinearMaps together with
an invertible structure map alpha.  The check_ functions evaluate every
axiom as an equality of linear maps, which by multilinearity is the same as
checking all basis tuples, and return a CheckReport.
'''

# Copyright (c) 2026 The homhopf developers.

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.

__author__ = 'The homhopf developers'

from .linear import (DimensionMismatchError, LinearMap, compose, flip, identity,
                     invert, kron, power, transpose)
from .report import CheckReport
from ._types import (has_antipode, has_comultiplication, has_multiplication,
                     is_integer, is_linear_map)

MULTIPLICATIVITY = 'multiplicativity'
ANTIPODE_DERIVED = 'antipode-derived'


class StructureError(ValueError):
    '''A subclass of ValueError for inconsistent or unsuitable structures.'''
    pass


class PreconditionError(StructureError):
    '''Raised when an input fails a check that a construction requires.

    Attributes:
        report: The CheckReport which failed, if any.
    '''

    def __init__(self, message, report=None):
        super(PreconditionError, self).__init__(message)
        self.report = report


def require(report, what):
    '''Raise PreconditionError unless report passed.

    Args:
        report: A CheckReport.
        what: A description of the construction requiring it.

    Returns:
        The report, if it passed.
    '''
    if not report.passed:
        failure = report.first_failure()
        raise PreconditionError("Cannot {0}: {1} fails axiom {2}".format(
            what, report.subject, failure.axiom), report)
    return report


def _require_map(obj, name, shape=None):
    if not is_linear_map(obj):
        raise TypeError("{0} must be a LinearMap".format(name))
    if shape is not None and obj.shape != shape:
        raise DimensionMismatchError("{0} has shape {1}x{2}, expected {3}x{4}"
            .format(name, obj.cod_dim, obj.dom_dim, shape[0], shape[1]))


class ObjectWithAut(object):
    '''A finite-dimensional space X paired with an automorphism alpha_X.'''

    def __init__(self, alpha):
        '''Initialise from the automorphism.

        Raises:
            TypeError: If alpha is not a LinearMap.
            NotInvertibleError: If alpha is singular.
        '''
        _require_map(alpha, 'alpha')
        self._alpha = alpha
        self._powers = {0: identity(alpha.dom_dim), 1: alpha, -1: invert(alpha)}

    @property
    def dim(self):
        return self._alpha.dom_dim

    @property
    def alpha(self):
        return self._alpha

    def power(self, exponent):
        '''alpha raised to an integer power, memoised.'''
        if not is_integer(exponent):
            raise TypeError("exponent must be an integer")
        if exponent not in self._powers:
            base = self._powers[1] if exponent > 0 else self._powers[-1]
            self._powers[exponent] = power(base, abs(exponent))
        return self._powers[exponent]

    @property
    def carrier(self):
        return self

    def __eq__(self, rhs):
        return isinstance(rhs, ObjectWithAut) and self._alpha == rhs._alpha

    def __ne__(self, rhs):
        return not self == rhs

    def __hash__(self):
        return hash(self._alpha)

    def __repr__(self):
        return 'ObjectWithAut(dim=' + str(self.dim) + ')'


def carrier_of(obj):
    '''The ObjectWithAut underlying a structure, module or bare object.'''
    carrier = getattr(obj, 'carrier', None)
    if isinstance(carrier, ObjectWithAut):
        return carrier
    raise TypeError("{0} has no carrier".format(str(type(obj))[7: -2]))


def unit_object():
    '''The monoidal unit (k, id).'''
    return ObjectWithAut(identity(1))


def tensor_object(x, y):
    '''The object (X (x) Y, alpha_X (x) alpha_Y).'''
    return ObjectWithAut(kron(carrier_of(x).alpha, carrier_of(y).alpha))


class Carried(object):
    '''Base class for anything built on an ObjectWithAut.

    Subclasses set self._carrier and inherit alpha, dim and power().
    '''

    @property
    def carrier(self):
        return self._carrier

    @property
    def alpha(self):
        return self._carrier.alpha

    @property
    def dim(self):
        return self._carrier.dim

    def power(self, exponent):
        return self._carrier.power(exponent)


class HomAlgebra(Carried):
    '''A Hom-algebra (A, mu, 1_A, alpha).'''

    def __init__(self, alpha, mult, unit):
        '''Initialise a HomAlgebra.

        Args:
            alpha: The structure automorphism, a d x d LinearMap.
            mult: The product A (x) A -> A, a d x d^2 LinearMap.
            unit: The unit k -> A, a d x 1 LinearMap.

        Raises:
            DimensionMismatchError: If the shapes are inconsistent.
            NotInvertibleError: If alpha is singular.
        '''
        self._carrier = ObjectWithAut(alpha)
        d = self.dim
        _require_map(mult, 'mult', (d, d * d))
        _require_map(unit, 'unit', (d, 1))
        self._mult = mult
        self._unit = unit

    @property
    def mult(self):
        return self._mult

    @property
    def unit(self):
        return self._unit

    def __repr__(self):
        return 'HomAlgebra(dim=' + str(self.dim) + ')'


class HomCoalgebra(Carried):
    '''A Hom-coalgebra (C, alpha, Delta, epsilon).'''

    def __init__(self, alpha, comult, counit, predual=None):
        '''Initialise a HomCoalgebra.

        Args:
            alpha: The structure automorphism, a d x d LinearMap.
            comult: The coproduct C -> C (x) C, a d^2 x d LinearMap.
            counit: The counit C -> k, a 1 x d LinearMap.
            predual: For a coalgebra built as the dual of an algebra, that
                algebra. None otherwise.
        '''
        self._carrier = ObjectWithAut(alpha)
        d = self.dim
        _require_map(comult, 'comult', (d * d, d))
        _require_map(counit, 'counit', (1, d))
        self._comult = comult
        self._counit = counit
        self._predual = predual

    @property
    def comult(self):
        return self._comult

    @property
    def counit(self):
        return self._counit

    @property
    def predual(self):
        return self._predual

    def __repr__(self):
        return 'HomCoalgebra(dim=' + str(self.dim) + ')'


class HomBialgebra(Carried):
    '''A Hom-algebra and a Hom-coalgebra sharing carrier and alpha.'''

    def __init__(self, algebra, coalgebra):
        '''Initialise a HomBialgebra.

        Raises:
            StructureError: If the algebra and coalgebra do not share alpha.
        '''
        if algebra.alpha != coalgebra.alpha:
            raise StructureError("Algebra and coalgebra of a Hom-bialgebra must "
                                 "share the same alpha")
        self._algebra = algebra
        self._coalgebra = coalgebra
        self._carrier = algebra.carrier

    @classmethod
    def from_maps(cls, alpha, mult, unit, comult, counit, predual=None):
        return cls(HomAlgebra(alpha, mult, unit),
                   HomCoalgebra(alpha, comult, counit, predual))

    @property
    def algebra(self):
        return self._algebra

    @property
    def coalgebra(self):
        return self._coalgebra

    @property
    def mult(self):
        return self._algebra.mult

    @property
    def unit(self):
        return self._algebra.unit

    @property
    def comult(self):
        return self._coalgebra.comult

    @property
    def counit(self):
        return self._coalgebra.counit

    @property
    def predual(self):
        return self._coalgebra.predual

    def __repr__(self):
        return 'HomBialgebra(dim=' + str(self.dim) + ')'


class HomHopfAlgebra(HomBialgebra):
    '''A Hom-bialgebra with an antipode S.'''

    def __init__(self, bialgebra, antipode):
        super(HomHopfAlgebra, self).__init__(bialgebra.algebra, bialgebra.coalgebra)
        _require_map(antipode, 'antipode', (self.dim, self.dim))
        self._antipode = antipode

    @classmethod
    def from_maps(cls, alpha, mult, unit, comult, counit, antipode):
        return cls(HomBialgebra.from_maps(alpha, mult, unit, comult, counit),
                   antipode)

    @property
    def bialgebra(self):
        return HomBialgebra(self.algebra, self.coalgebra)

    @property
    def antipode(self):
        return self._antipode

    def __repr__(self):
        return 'HomHopfAlgebra(dim=' + str(self.dim) + ')'


class RightHomModule(Carried):
    '''A space (U, alpha_U) with a right action U (x) A -> U.'''

    def __init__(self, alpha, action):
        self._carrier = ObjectWithAut(alpha)
        _require_map(action, 'action')
        if action.cod_dim != self.dim or action.dom_dim % self.dim:
            raise DimensionMismatchError("An action on a {0}-dimensional space "
                "cannot have shape {1}x{2}".format(self.dim, action.cod_dim,
                                                   action.dom_dim))
        self._action = action

    @property
    def action(self):
        return self._action


class RightHomComodule(Carried):
    '''A space (M, alpha_M) with a right coaction M -> M (x) C.'''

    def __init__(self, alpha, coaction):
        self._carrier = ObjectWithAut(alpha)
        _require_map(coaction, 'coaction')
        if coaction.dom_dim != self.dim or coaction.cod_dim % self.dim:
            raise DimensionMismatchError("A coaction on a {0}-dimensional space "
                "cannot have shape {1}x{2}".format(self.dim, coaction.cod_dim,
                                                   coaction.dom_dim))
        self._coaction = coaction

    @property
    def coaction(self):
        return self._coaction


class ModuleComodule(Carried):
    '''A space which is both a right Hom-module and a right Hom-comodule.

    Entwined modules, Long dimodules, Yetter-Drinfeld modules and Doi-Hopf
    modules are the ModuleComodules satisfying a compatibility condition.
    '''

    def __init__(self, alpha, action, coaction):
        self._module = RightHomModule(alpha, action)
        self._comodule = RightHomComodule(alpha, coaction)
        self._carrier = self._module.carrier

    @property
    def action(self):
        return self._module.action

    @property
    def coaction(self):
        return self._comodule.coaction

    @property
    def module(self):
        return self._module

    @property
    def comodule(self):
        return self._comodule

    def __repr__(self):
        return (type(self).__name__ + '(dim=' + str(self.dim) + ')')


class MonoidalContext(object):
    '''The integers (i, j) selecting the monoidal category of spaces with automorphisms.

    The associator is (x (x) y) (x) z -> alpha_X^{i+1}(x) (x) (y (x) alpha_Z^{-j-1}(z))
    and the unit constraints are l_X = alpha_X^{j+1}, r_X = alpha_X^{i+1}.
    '''

    def __init__(self, i=0, j=0):
        if not (is_integer(i) and is_integer(j)):
            raise TypeError("MonoidalContext parameters must be integers")
        self.i = i
        self.j = j

    def parameters(self):
        return {'i': self.i, 'j': self.j}

    def __eq__(self, rhs):
        return isinstance(rhs, MonoidalContext) and (self.i, self.j) == (rhs.i, rhs.j)

    def __ne__(self, rhs):
        return not self == rhs

    def __hash__(self):
        return hash((self.i, self.j))

    def __repr__(self):
        return 'MonoidalContext(i=' + str(self.i) + ', j=' + str(self.j) + ')'


def associator(ctx, x, y, z):
    '''The associativity constraint a_{X,Y,Z} on X (x) Y (x) Z.'''
    return kron(carrier_of(x).power(ctx.i + 1), identity(carrier_of(y).dim),
                carrier_of(z).power(-ctx.j - 1))


def associator_inverse(ctx, x, y, z):
    return kron(carrier_of(x).power(-ctx.i - 1), identity(carrier_of(y).dim),
                carrier_of(z).power(ctx.j + 1))


def unit_left(ctx, x):
    '''l_X : k (x) X -> X, which is alpha_X^{j+1} under k (x) X = X.'''
    return carrier_of(x).power(ctx.j + 1)


def unit_right(ctx, x):
    '''r_X : X (x) k -> X, which is alpha_X^{i+1} under X (x) k = X.'''
    return carrier_of(x).power(ctx.i + 1)


def check_monoidal_context(ctx, x, y, z, w):
    '''Check the pentagon identity on (X, Y, Z, W) and the triangle on (X, Y).'''
    report = CheckReport('monoidal context', ctx.parameters())
    xy = tensor_object(x, y)
    yz = tensor_object(y, z)
    zw = tensor_object(z, w)
    dims = [carrier_of(obj).dim for obj in (x, y, z, w)]
    lhs = compose(associator(ctx, x, y, zw), associator(ctx, xy, z, w))
    rhs = compose(kron(identity(dims[0]), associator(ctx, y, z, w)),
                  associator(ctx, x, yz, w),
                  kron(associator(ctx, x, y, z), identity(dims[3])))
    report.compare('pentagon', lhs, rhs, dims)
    k = unit_object()
    lhs = compose(kron(identity(dims[0]), unit_left(ctx, y)), associator(ctx, x, k, y))
    rhs = kron(unit_right(ctx, x), identity(dims[1]))
    report.compare('triangle', lhs, rhs, (dims[0], dims[1]))
    return report


def check_hom_algebra(a):
    '''Check the Hom-algebra axioms.

    The axioms are Hom-associativity mu(alpha (x) mu) = mu(mu (x) alpha),
    alpha(1) = 1, Hom-unitality mu(1 (x) a) = mu(a (x) 1) = alpha(a), and,
    in the group 'multiplicativity', alpha mu = mu(alpha (x) alpha).

    Args:
        a: A HomAlgebra, or any structure with alpha, mult and unit.

    Returns:
        A CheckReport.
    '''
    report = CheckReport('Hom-algebra of dimension ' + str(a.dim))
    d = a.dim
    alpha, mu, eta, one = a.alpha, a.mult, a.unit, identity(d)
    report.compare('hom-associativity', compose(mu, kron(alpha, mu)),
                   compose(mu, kron(mu, alpha)), (d, d, d))
    report.compare('unit-fixed', compose(alpha, eta), eta, (1,))
    report.compare('left-unit', compose(mu, kron(eta, one)), alpha, (d,))
    report.compare('right-unit', compose(mu, kron(one, eta)), alpha, (d,))
    report.compare('multiplicativity', compose(alpha, mu), compose(mu, kron(alpha, alpha)),
                   (d, d), group=MULTIPLICATIVITY)
    return report


def check_hom_coalgebra(c):
    '''Check the Hom-coalgebra axioms, the duals of those of check_hom_algebra.'''
    report = CheckReport('Hom-coalgebra of dimension ' + str(c.dim))
    d = c.dim
    alpha, delta, eps, one = c.alpha, c.comult, c.counit, identity(d)
    report.compare('hom-coassociativity', compose(kron(alpha, delta), delta),
                   compose(kron(delta, alpha), delta), (d,))
    report.compare('counit-invariance', compose(eps, alpha), eps, (d,))
    report.compare('left-counit', compose(kron(eps, one), delta), alpha, (d,))
    report.compare('right-counit', compose(kron(one, eps), delta), alpha, (d,))
    report.compare('comultiplicativity', compose(delta, alpha),
                   compose(kron(alpha, alpha), delta), (d,), group=MULTIPLICATIVITY)
    return report


def product_of_coproducts(b):
    '''The map a (x) c -> a_1 c_1 (x) a_2 c_2 on B (x) B.

    This is (mu (x) mu)(id (x) flip (x) id)(Delta (x) Delta), summed term by
    term so that nothing on the fourth tensor power of B is built.
    '''
    d = b.dim
    mu, delta = b.mult, b.comult
    columns = []
    for a in range(d):
        for c in range(d):
            column = {}
            for left, x in delta.nonzeros(a):
                a1, a2 = divmod(left, d)
                for right, y in delta.nonzeros(c):
                    c1, c2 = divmod(right, d)
                    for r1, v1 in mu.nonzeros(a1 * d + c1):
                        for r2, v2 in mu.nonzeros(a2 * d + c2):
                            row = r1 * d + r2
                            column[row] = column.get(row, 0) + x * y * v1 * v2
            columns.append(column)
    return LinearMap.from_columns(d * d, columns)


def check_hom_bialgebra(b):
    '''Check a Hom-bialgebra: algebra, coalgebra and their compatibility.

    Raises:
        StructureError: If b lacks either the product or the coproduct.
    '''
    if not (has_multiplication(b) and has_comultiplication(b)):
        raise StructureError("A Hom-bialgebra check needs both a product and a "
                             "coproduct")
    report = CheckReport('Hom-bialgebra of dimension ' + str(b.dim))
    report.extend(check_hom_algebra(b))
    report.extend(check_hom_coalgebra(b))
    d = b.dim
    mu, eta, delta, eps = b.mult, b.unit, b.comult, b.counit
    report.compare('comult-multiplicative', compose(delta, mu), product_of_coproducts(b),
                   (d, d))
    report.compare('comult-unit', compose(delta, eta), kron(eta, eta), (1,))
    report.compare('counit-multiplicative', compose(eps, mu), kron(eps, eps), (d, d))
    report.compare('counit-unit', compose(eps, eta), identity(1), (1,))
    return report


def check_hom_hopf(h):
    '''Check a Hom-Hopf algebra.

    On top of check_hom_bialgebra the antipode must satisfy
    mu(S (x) id)Delta = eta epsilon = mu(id (x) S)Delta and S alpha = alpha S.
    The group 'antipode-derived' reports the consequences S(ab) = S(b)S(a),
    S(1) = 1, Delta S = (S (x) S) flip Delta and epsilon S = epsilon.

    Raises:
        StructureError: If h has no antipode.
    '''
    if not has_antipode(h):
        raise StructureError("A Hom-Hopf algebra check needs an antipode")
    report = check_hom_bialgebra(h)
    report.subject = 'Hom-Hopf algebra of dimension ' + str(h.dim)
    d = h.dim
    mu, eta, delta, eps, s = h.mult, h.unit, h.comult, h.counit, h.antipode
    one = identity(d)
    unit_counit = compose(eta, eps)
    report.compare('antipode-left', compose(mu, kron(s, one), delta), unit_counit, (d,))
    report.compare('antipode-right', compose(mu, kron(one, s), delta), unit_counit, (d,))
    report.compare('antipode-alpha', compose(s, h.alpha), compose(h.alpha, s), (d,))
    report.compare('antipode-antimultiplicative', compose(s, mu),
                   compose(mu, kron(s, s), flip(d, d)), (d, d), group=ANTIPODE_DERIVED)
    report.compare('antipode-unit', compose(s, eta), eta, (1,), group=ANTIPODE_DERIVED)
    report.compare('antipode-anticomultiplicative', compose(delta, s),
                   compose(kron(s, s), flip(d, d), delta), (d,), group=ANTIPODE_DERIVED)
    report.compare('antipode-counit', compose(eps, s), eps, (d,), group=ANTIPODE_DERIVED)
    return report


def check_right_module(m, a):
    '''Check that an action U (x) A -> U makes U a right Hom-module over A.

    The axioms are alpha_U(u)(ab) = (ua)alpha_A(b), u 1_A = alpha_U(u) and,
    in the group 'multiplicativity', alpha_U(ua) = alpha_U(u)alpha_A(a).

    Raises:
        DimensionMismatchError: If the action does not have domain U (x) A.
    '''
    du, da = m.dim, a.dim
    _require_map(m.action, 'action', (du, du * da))
    report = CheckReport('right Hom-module of dimension ' + str(du))
    act, alpha_u = m.action, m.alpha
    report.compare('module-associativity', compose(act, kron(alpha_u, a.mult)),
                   compose(act, kron(act, a.alpha)), (du, da, da))
    report.compare('module-unit', compose(act, kron(identity(du), a.unit)), alpha_u, (du,))
    report.compare('module-alpha', compose(alpha_u, act), compose(act, kron(alpha_u, a.alpha)),
                   (du, da), group=MULTIPLICATIVITY)
    return report


def check_right_comodule(m, c):
    '''Check that a coaction M -> M (x) C makes M a right Hom-comodule over C.'''
    dm, dc = m.dim, c.dim
    _require_map(m.coaction, 'coaction', (dm * dc, dm))
    report = CheckReport('right Hom-comodule of dimension ' + str(dm))
    rho, alpha_m = m.coaction, m.alpha
    report.compare('comodule-coassociativity', compose(kron(alpha_m, c.comult), rho),
                   compose(kron(rho, c.alpha), rho), (dm,))
    report.compare('comodule-counit', compose(kron(identity(dm), c.counit), rho),
                   alpha_m, (dm,))
    report.compare('comodule-alpha', compose(rho, alpha_m),
                   compose(kron(alpha_m, c.alpha), rho), (dm,), group=MULTIPLICATIVITY)
    return report


def check_module_morphism(f, u, v, a):
    '''Check that f : U -> V commutes with alpha and is A-linear.'''
    report = CheckReport('module morphism')
    report.compare('morphism-alpha', compose(f, u.alpha), compose(v.alpha, f), (u.dim,))
    report.compare('morphism-linear', compose(f, u.action),
                   compose(v.action, kron(f, identity(a.dim))), (u.dim, a.dim))
    return report


def check_comodule_morphism(f, u, v, c):
    '''Check that f : U -> V commutes with alpha and is C-colinear.'''
    report = CheckReport('comodule morphism')
    report.compare('morphism-alpha', compose(f, u.alpha), compose(v.alpha, f), (u.dim,))
    report.compare('morphism-colinear', compose(kron(f, identity(c.dim)), u.coaction),
                   compose(v.coaction, f), (u.dim,))
    return report


def check_hom_algebra_morphism(f, a, b):
    report = CheckReport('Hom-algebra morphism')
    report.compare('morphism-alpha', compose(f, a.alpha), compose(b.alpha, f), (a.dim,))
    report.compare('morphism-mult', compose(f, a.mult), compose(b.mult, kron(f, f)),
                   (a.dim, a.dim))
    report.compare('morphism-unit', compose(f, a.unit), b.unit, (1,))
    return report


def check_hom_coalgebra_morphism(f, c, d):
    report = CheckReport('Hom-coalgebra morphism')
    report.compare('morphism-alpha', compose(f, c.alpha), compose(d.alpha, f), (c.dim,))
    report.compare('morphism-comult', compose(kron(f, f), c.comult),
                   compose(d.comult, f), (c.dim,))
    report.compare('morphism-counit', compose(d.counit, f), c.counit, (c.dim,))
    return report


def regular_module(a):
    '''A acting on itself by its product.'''
    return RightHomModule(a.alpha, a.mult)


def regular_comodule(c):
    '''C coacting on itself by its coproduct.'''
    return RightHomComodule(c.alpha, c.comult)


def trivial_module(b):
    '''k as a right module over a Hom-bialgebra through the counit.'''
    return RightHomModule(identity(1), b.counit)


def trivial_comodule(b):
    '''k as a right comodule over a Hom-bialgebra: lambda -> lambda (x) 1.'''
    return RightHomComodule(identity(1), b.unit)


def dual_coalgebra(a):
    '''The Hom-coalgebra (A*)^cop dual to a Hom-algebra.

    With coordinates in the basis dual to that of A: alpha(f) = f alpha^{-1},
    epsilon(f) = f(1_A) and Delta(f)(x (x) y) = f(alpha^{-2}(yx)).

    Args:
        a: A HomAlgebra or any structure with alpha, mult and unit.

    Returns:
        A HomCoalgebra whose predual is a.
    '''
    d = a.dim
    alpha = transpose(a.power(-1))
    comult = transpose(compose(a.power(-2), a.mult, flip(d, d)))
    counit = transpose(a.unit)
    return HomCoalgebra(alpha, comult, counit, predual=a)


def dual_bialgebra(b):
    '''The Hom-bialgebra (B*)^cop dual to a Hom-bialgebra.

    The coalgebra is dual_coalgebra(b); the product is the convolution
    (f*g)(y) = f(alpha^{-2}(y_1)) g(alpha^{-2}(y_2)) and the unit is epsilon.
    '''
    coalgebra = dual_coalgebra(b)
    mult = transpose(compose(kron(b.power(-2), b.power(-2)), b.comult))
    unit = transpose(b.counit)
    return HomBialgebra(HomAlgebra(coalgebra.alpha, mult, unit), coalgebra)


def opposite(a):
    '''The opposite Hom-algebra, with product mu o flip.'''
    algebra = HomAlgebra(a.alpha, compose(a.mult, flip(a.dim, a.dim)), a.unit)
    if has_comultiplication(a):
        return HomBialgebra(algebra, HomCoalgebra(a.alpha, a.comult, a.counit))
    return algebra


def coopposite(c):
    '''The coopposite Hom-coalgebra, with coproduct flip o Delta.'''
    coalgebra = HomCoalgebra(c.alpha, compose(flip(c.dim, c.dim), c.comult), c.counit)
    if has_multiplication(c):
        return HomBialgebra(HomAlgebra(c.alpha, c.mult, c.unit), coalgebra)
    return coalgebra


def is_commutative(a):
    return compose(a.mult, flip(a.dim, a.dim)) == a.mult


def is_cocommutative(c):
    return compose(flip(c.dim, c.dim), c.comult) == c.comult


def same_structure(x, y):
    '''True if two structures have identical alpha and structure maps.'''
    names = ('alpha', 'mult', 'unit', 'comult', 'counit', 'antipode')
    for name in names:
        if hasattr(x, name) != hasattr(y, name):
            return False
        if hasattr(x, name) and getattr(x, name) != getattr(y, name):
            return False
    return True
