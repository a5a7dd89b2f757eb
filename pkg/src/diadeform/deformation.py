"""Order-N deformations of a dialgebra morphism and their calculus.

A truncated deformation carries coefficient 2-cochains for the deformed
products of D and E and coefficient linear maps for the deformed morphism,
with the order-0 data pinned to the undeformed model.  On top of that
this module implements validity checking, infinitesimals, obstruction
classes, one-step and iterated extension, transport along formal
isomorphisms, trivialization, and rigidity probing.

All series are dense per-order coefficient lists truncated at a cap.
"""

import itertools
import random
from dataclasses import dataclass

from .cochain import Cochain, coboundary, product_cochain
from .dialgebra import AXIOMS, LEFT, RIGHT, check_morphism
from .errors import (BaseMismatch, InvalidDeformation, CapExceeded,
                     NonIdentityConstantTerm, NotACoboundary, OrderMismatch,
                     OrderTooLow, ShapeMismatch)
from .linalg import Matrix
from .morphism_complex import MorphismCochain, MorphismComplex
from .trees import enumerate_trees, face

DEFAULT_ORDER_CAP = 6

# Y_2 indices under the documented enumeration
TREE_L = 0  # [21], carrying the left product
TREE_R = 1  # [12], carrying the right product


def cochain1_to_matrix(c):
    """A degree-1 cochain D -> M as a module_dim x dim matrix."""
    rows = c.rep.module_dim
    cols = c.dialgebra.dim
    grid = [[None] * cols for _ in range(rows)]
    for a in range(cols):
        v = c.value(0, (a,))
        for w in range(rows):
            grid[w][a] = v[w]
    return Matrix(c.field, rows, cols, grid)


def matrix_to_cochain1(mat, d, rep):
    """Inverse of cochain1_to_matrix."""
    coeffs = []
    for a in range(d.dim):
        for w in range(rep.module_dim):
            coeffs.append(mat[w, a])
    return Cochain(1, d, rep, coeffs)


def _bilinear_of(cochain2, label):
    """The bilinear map carried by a 2-cochain on the [21] or [12] slot."""
    tree = TREE_L if label is LEFT else TREE_R
    return lambda va, vb: cochain2.evaluate(tree, [va, vb])


class TruncatedDeformation:
    """A deformation of psi truncated at order N.

    fd[n] and fe[n] are the order-n product 2-cochains of D and E (order 0
    being the undeformed products); psis[n] is the order-n coefficient of
    the deformed morphism as a target x source matrix (order 0 being psi).
    """

    __slots__ = ("psi", "fd", "fe", "psis")

    def __init__(self, psi, fd, fe, psis):
        fd, fe, psis = tuple(fd), tuple(fe), tuple(psis)
        if not len(fd) == len(fe) == len(psis) or not fd:
            raise ShapeMismatch("coefficient lists must share length >= 1")
        d, e = psi.source, psi.target
        for c in fd:
            if c.degree != 2 or c.dialgebra != d:
                raise ShapeMismatch("fd entries must be 2-cochains on D")
        for c in fe:
            if c.degree != 2 or c.dialgebra != e:
                raise ShapeMismatch("fe entries must be 2-cochains on E")
        for m in psis:
            if (m.rows, m.cols) != (e.dim, d.dim):
                raise ShapeMismatch("psi coefficients must be %dx%d"
                                    % (e.dim, d.dim))
        if fd[0] != product_cochain(d):
            raise BaseMismatch("order-0 D products disagree with the model")
        if fe[0] != product_cochain(e):
            raise BaseMismatch("order-0 E products disagree with the model")
        if psis[0] != psi.matrix:
            raise BaseMismatch("order-0 morphism disagrees with the model")
        object.__setattr__(self, "psi", psi)
        object.__setattr__(self, "fd", fd)
        object.__setattr__(self, "fe", fe)
        object.__setattr__(self, "psis", psis)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedDeformation is immutable")

    @property
    def order(self):
        return len(self.fd) - 1

    @property
    def field(self):
        return self.psi.field

    @classmethod
    def trivial(cls, psi, order=0):
        d, e = psi.source, psi.target
        fd = [product_cochain(d)]
        fe = [product_cochain(e)]
        psis = [psi.matrix]
        z2d = Cochain.zero(2, d, fd[0].rep)
        z2e = Cochain.zero(2, e, fe[0].rep)
        zpsi = Matrix.zero(psi.field, e.dim, d.dim)
        for _ in range(order):
            fd.append(z2d)
            fe.append(z2e)
            psis.append(zpsi)
        return cls(psi, fd, fe, psis)

    def extended_with(self, theta):
        """Append a degree-2 morphism cochain as the next coefficient."""
        return TruncatedDeformation(
            self.psi,
            self.fd + (theta.xi,),
            self.fe + (theta.pi,),
            self.psis + (cochain1_to_matrix(theta.phi),))

    def theta(self, k, complex_):
        """The order-k coefficient as a degree-2 morphism cochain."""
        return MorphismCochain(
            self.fd[k], self.fe[k],
            matrix_to_cochain1(self.psis[k], complex_.D, complex_.rep_de))

    def __repr__(self):
        return "TruncatedDeformation(order=%d, psi=%r)" % (self.order, self.psi)


class FormalIso:
    """A pair of truncated formal isomorphism series with identity constant
    terms, acting on deformations of psi by conjugation."""

    __slots__ = ("phi_d", "phi_e")

    def __init__(self, phi_d, phi_e):
        phi_d, phi_e = tuple(phi_d), tuple(phi_e)
        if len(phi_d) != len(phi_e) or not phi_d:
            raise OrderMismatch("the two series must share an order")
        for series in (phi_d, phi_e):
            n = series[0].rows
            if series[0] != Matrix.identity(series[0].field, n):
                raise NonIdentityConstantTerm(
                    "constant term of a formal isomorphism must be 1")
        object.__setattr__(self, "phi_d", phi_d)
        object.__setattr__(self, "phi_e", phi_e)

    def __setattr__(self, name, value):
        raise AttributeError("FormalIso is immutable")

    @property
    def order(self):
        return len(self.phi_d) - 1

    @classmethod
    def identity(cls, psi, order=0):
        f = psi.field
        idd = [Matrix.identity(f, psi.source.dim)]
        ide = [Matrix.identity(f, psi.target.dim)]
        zd = Matrix.zero(f, psi.source.dim, psi.source.dim)
        ze = Matrix.zero(f, psi.target.dim, psi.target.dim)
        for _ in range(order):
            idd.append(zd)
            ide.append(ze)
        return cls(idd, ide)


def series_inverse(series):
    """Coefficients of the truncated inverse of a series with phi_0 = id."""
    f = series[0].field
    n = series[0].rows
    inv = [Matrix.identity(f, n)]
    for k in range(1, len(series)):
        acc = Matrix.zero(f, n, n)
        for i in range(1, k + 1):
            acc = acc + series[i] * inv[k - i]
        inv.append(-acc)
    return inv


# -- reports -----------------------------------------------------------


@dataclass(frozen=True)
class DeformationReport:
    valid: bool
    first_failing_order: int = None
    failing_identity: str = None

    def __bool__(self):
        return self.valid


@dataclass(frozen=True)
class CocycleReport:
    passed: bool
    leading_order: int = None
    residual_location: str = None

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class ObstructionClass:
    """The degree-3 obstruction cochain (Ob_D; Ob_E; Ob_psi) at order N."""

    cochain: MorphismCochain
    order: int

    def is_zero(self):
        return self.cochain.is_zero()


@dataclass(frozen=True)
class ExtensionReport:
    reached: int
    target: int
    deformation: TruncatedDeformation
    hy3_dim: int
    guaranteed: bool
    certificate: str = None

    @property
    def succeeded(self):
        return self.reached >= self.target


@dataclass(frozen=True)
class RigidityReport:
    hy2_dim: int
    verdict: str
    trivialized_samples: int = 0


# -- validity ----------------------------------------------------------


def _axiom_side_at_order(fs, side, nu, vx, vy, vz):
    """Order-nu coefficient of one bracketed side of an axiom.

    ``fs`` is the coefficient list of 2-cochains; ``side`` is ("R"|"L",
    outer label, inner label).
    """
    which, outer, inner = side
    f = fs[0].field
    mdim = fs[0].rep.module_dim
    out = (f.zero,) * mdim
    for p in range(nu + 1):
        q = nu - p
        fo = _bilinear_of(fs[p], outer)
        fi = _bilinear_of(fs[q], inner)
        if which == "R":
            term = fo(vx, fi(vy, vz))
        else:
            term = fo(fi(vx, vy), vz)
        out = tuple(a + b for a, b in zip(out, term))
    return out


def _axiom_residuals(d, fs, nu):
    """Yield (axiom number, triple, lhs, rhs) for order-nu failures."""
    for num, (lhs, rhs) in enumerate(AXIOMS, start=1):
        for i in range(d.dim):
            vx = d.basis_vector(i)
            for j in range(d.dim):
                vy = d.basis_vector(j)
                for k in range(d.dim):
                    vz = d.basis_vector(k)
                    lv = _axiom_side_at_order(fs, lhs, nu, vx, vy, vz)
                    rv = _axiom_side_at_order(fs, rhs, nu, vx, vy, vz)
                    if lv != rv:
                        yield num, (i, j, k), lv, rv


def _morphism_eq_residual(th, nu, label):
    """lhs - rhs of the order-nu morphism equation on all basis pairs."""
    d = th.psi.source
    for a in range(d.dim):
        va = d.basis_vector(a)
        for b in range(d.dim):
            vb = d.basis_vector(b)
            lhs = None
            for i in range(nu + 1):
                v = _bilinear_of(th.fd[nu - i], label)(va, vb)
                term = th.psis[i].apply(v)
                lhs = term if lhs is None else tuple(
                    x + y for x, y in zip(lhs, term))
            rhs = None
            for i in range(nu + 1):
                fe_i = _bilinear_of(th.fe[i], label)
                for j in range(nu + 1 - i):
                    k = nu - i - j
                    term = fe_i(th.psis[j].apply(va), th.psis[k].apply(vb))
                    rhs = term if rhs is None else tuple(
                        x + y for x, y in zip(rhs, term))
            if lhs != rhs:
                yield (a, b), lhs, rhs


def verify_deformation(th):
    """Check the deformation equations order by order; report first failure.

    Per order nu: the five product axioms for the deformed products of D
    and of E, coefficientwise on all basis triples, then the deformed
    morphism equation on all basis pairs for both products.
    """
    for nu in range(th.order + 1):
        for tag, d, fs in (("f_D", th.psi.source, th.fd),
                           ("f_E", th.psi.target, th.fe)):
            for num, triple, lv, rv in _axiom_residuals(d, fs, nu):
                return DeformationReport(
                    False, nu,
                    "axiom %d for %s at order %d, triple %r: %r != %r"
                    % (num, tag, nu, triple, lv, rv))
        for label, tag in ((LEFT, "l"), (RIGHT, "r")):
            for pair, lv, rv in _morphism_eq_residual(th, nu, label):
                return DeformationReport(
                    False, nu,
                    "morphism equation (%s) at order %d, pair %r: %r != %r"
                    % (tag, nu, pair, lv, rv))
    return DeformationReport(True)


# -- infinitesimal and leading cocycle ---------------------------------


def infinitesimal(th, complex_=None):
    """The order-1 coefficient as a degree-2 morphism cochain."""
    if th.order < 1:
        raise OrderTooLow("infinitesimal needs order >= 1")
    if complex_ is None:
        complex_ = MorphismComplex(th.psi)
    return th.theta(1, complex_)


def leading_cocycle_check(th, complex_=None):
    """Assert that the first nonzero coefficient is an exact 2-cocycle."""
    if complex_ is None:
        complex_ = MorphismComplex(th.psi)
    for k in range(1, th.order + 1):
        theta = th.theta(k, complex_)
        if theta.is_zero():
            continue
        residual = complex_.coboundary(theta)
        if residual.is_zero():
            return CocycleReport(True, leading_order=k)
        return CocycleReport(False, leading_order=k,
                             residual_location=_locate(complex_, residual))
    return CocycleReport(True, leading_order=None)  # vacuous: all zero


def _locate(complex_, mc):
    """Human-readable position of the first nonzero coordinate."""
    z = complex_.field.zero
    for tag, c in (("xi", mc.xi), ("pi", mc.pi), ("phi", mc.phi)):
        d = c.dialgebra
        for tree in enumerate_trees(c.degree):
            for multi in itertools.product(range(d.dim), repeat=c.degree):
                v = c.value(tree.index, multi)
                if any(x != z for x in v):
                    return "%s block, tree %s, indices %r" % (
                        tag, tree.name, multi)
    return "zero"


# -- obstruction -------------------------------------------------------


def _sum_prime_triples(n_plus_1):
    """The four index families of the primed sum at total N + 1."""
    t = n_plus_1
    for i in range(1, t):
        yield (i, t - i, 0)
    for i in range(1, t):
        yield (i, 0, t - i)
    for j in range(1, t):
        yield (0, j, t - j)
    for i in range(1, t - 1):
        for j in range(1, t - i):
            k = t - i - j
            if k > 0:
                yield (i, j, k)


def _pre_lie_square(d, fs, n_plus_1):
    """The per-tree composition sum of two deformation coefficients.

    For each 3-tree y:  sum over i + j = N + 1, i, j > 0, of

        F_i(d_1 y (x) (F_j(d_3 y (x) (a, b)), c))
      - F_i(d_2 y (x) (a, F_j(d_0 y (x) (b, c))))

    which realizes the composition product driving the first two blocks
    of the obstruction.
    """
    rep = fs[0].rep
    z = d.field.zero
    mdim = rep.module_dim
    coeffs = []
    for y in enumerate_trees(3):
        d0, d1, d2, d3 = (face(y, i).index for i in range(4))
        for a, b, c in itertools.product(range(d.dim), repeat=3):
            va = d.basis_vector(a)
            vb = d.basis_vector(b)
            vc = d.basis_vector(c)
            out = [z] * mdim
            for i in range(1, n_plus_1):
                j = n_plus_1 - i
                fi, fj = fs[i], fs[j]
                inner1 = fj.evaluate(d3, [va, vb])
                t1 = fi.evaluate(d1, [inner1, vc])
                inner2 = fj.evaluate(d0, [vb, vc])
                t2 = fi.evaluate(d2, [va, inner2])
                for w in range(mdim):
                    out[w] = out[w] + t1[w] - t2[w]
            coeffs.extend(out)
    return Cochain(3, d, rep, coeffs)


def obstruction(th, complex_=None, check_valid=True):
    """The obstruction class blocking extension from order N to N + 1."""
    n = th.order
    if n < 1:
        raise OrderTooLow("obstruction needs order >= 1")
    if check_valid:
        report = verify_deformation(th)
        if not report:
            raise InvalidDeformation(report.failing_identity)
    if complex_ is None:
        complex_ = MorphismComplex(th.psi)
    d, e = th.psi.source, th.psi.target
    ob_d = _pre_lie_square(d, th.fd, n + 1)
    ob_e = _pre_lie_square(e, th.fe, n + 1)

    z = th.field.zero
    edim = e.dim
    coeffs = []
    for label in (LEFT, RIGHT):
        for a in range(d.dim):
            va = d.basis_vector(a)
            for b in range(d.dim):
                vb = d.basis_vector(b)
                out = [z] * edim
                for i, j, k in _sum_prime_triples(n + 1):
                    term = _bilinear_of(th.fe[i], label)(
                        th.psis[j].apply(va), th.psis[k].apply(vb))
                    for w in range(edim):
                        out[w] = out[w] + term[w]
                for i in range(1, n + 1):
                    v = _bilinear_of(th.fd[n + 1 - i], label)(va, vb)
                    term = th.psis[i].apply(v)
                    for w in range(edim):
                        out[w] = out[w] - term[w]
                coeffs.extend(out)
    ob_psi = Cochain(2, d, complex_.rep_de, coeffs)
    return ObstructionClass(MorphismCochain(ob_d, ob_e, ob_psi), n)


def obstruction_cocycle_check(ob, complex_):
    """delta Ob must vanish exactly; localize the residual otherwise."""
    residual = complex_.coboundary(ob.cochain)
    if residual.is_zero():
        return CocycleReport(True, leading_order=ob.order)
    return CocycleReport(False, leading_order=ob.order,
                         residual_location=_locate(complex_, residual))


# -- extension ---------------------------------------------------------


def extend_step(th, complex_=None, check_valid=True):
    """One order of extension: solve delta theta = Ob, or return None.

    On success the returned deformation is re-verified; an inconsistent
    system means the obstruction class is nonzero and extension is
    impossible at this order.
    """
    if complex_ is None:
        complex_ = MorphismComplex(th.psi)
    ob = obstruction(th, complex_, check_valid=check_valid)
    mat = complex_.matrix(2)
    x = mat.solve(complex_.vec(ob.cochain))
    if x is None:
        return None
    theta = complex_.unvec(2, x)
    extended = th.extended_with(theta)
    report = verify_deformation(extended)
    if not report:
        raise InvalidDeformation(
            "solved extension failed re-verification: %s"
            % report.failing_identity)
    return extended


def obstruction_certificate(th, ob, complex_):
    """Rank witness plus per-tree obstruction values for a blocked step."""
    mat = complex_.matrix(2)
    rank = mat.rank()
    aug = mat.hstack(Matrix.column(complex_.field,
                                   complex_.vec(ob.cochain)))
    lines = ["obstruction at order %d is not a coboundary:" % ob.order,
             "rank delta^2 = %d, rank [delta^2 | Ob] = %d" % (rank,
                                                              aug.rank())]
    fmt = complex_.field.format
    for tag, c in (("Ob_D", ob.cochain.xi), ("Ob_E", ob.cochain.pi),
                   ("Ob_psi", ob.cochain.phi)):
        d = c.dialgebra
        for tree in enumerate_trees(c.degree):
            for multi in itertools.product(range(d.dim), repeat=c.degree):
                v = c.value(tree.index, multi)
                if any(x != complex_.field.zero for x in v):
                    lines.append("  %s %s %r = (%s)" % (
                        tag, tree.name, multi,
                        ", ".join(fmt(x) for x in v)))
    return "\n".join(lines)


def extend_to_order(th, target, complex_=None, order_cap=DEFAULT_ORDER_CAP):
    """Iterate extend_step up to the target order."""
    if target > order_cap:
        raise CapExceeded("target order %d exceeds cap %d"
                          % (target, order_cap))
    if complex_ is None:
        complex_ = MorphismComplex(th.psi)
    report = verify_deformation(th)
    if not report:
        raise InvalidDeformation(report.failing_identity)
    hy3 = complex_.cohomology_dim(3)
    current = th
    certificate = None
    while current.order < target:
        if current.order < 1:
            # order-0 deformations extend freely by a zero coefficient
            current = current.extended_with(complex_.zero(2))
            continue
        nxt = extend_step(current, complex_, check_valid=False)
        if nxt is None:
            ob = obstruction(current, complex_, check_valid=False)
            certificate = obstruction_certificate(current, ob, complex_)
            break
        current = nxt
    return ExtensionReport(current.order, target, current, hy3,
                           guaranteed=(hy3 == 0), certificate=certificate)


# -- equivalence -------------------------------------------------------


def apply_formal_iso(th, iso):
    """Transport a deformation along a pair of formal isomorphism series."""
    if iso.order != th.order:
        raise OrderMismatch("deformation order %d vs iso order %d"
                            % (th.order, iso.order))
    d, e = th.psi.source, th.psi.target
    inv_d = series_inverse(iso.phi_d)
    inv_e = series_inverse(iso.phi_e)
    n_max = th.order

    def conjugate_products(dialg, fs, phis, invs):
        rep = fs[0].rep
        out = []
        for n in range(n_max + 1):
            coeffs = []
            for tree in enumerate_trees(2):
                label = LEFT if tree.index == TREE_L else RIGHT
                for i, j in itertools.product(range(dialg.dim), repeat=2):
                    ei = dialg.basis_vector(i)
                    ej = dialg.basis_vector(j)
                    acc = (dialg.field.zero,) * dialg.dim
                    for p in range(n + 1):
                        for q in range(n + 1 - p):
                            for r in range(n + 1 - p - q):
                                s = n - p - q - r
                                v = _bilinear_of(fs[q], label)(
                                    invs[r].apply(ei), invs[s].apply(ej))
                                term = phis[p].apply(v)
                                acc = tuple(x + y
                                            for x, y in zip(acc, term))
                    coeffs.extend(acc)
            out.append(Cochain(2, dialg, rep, coeffs))
        return out

    new_fd = conjugate_products(d, th.fd, iso.phi_d, inv_d)
    new_fe = conjugate_products(e, th.fe, iso.phi_e, inv_e)
    new_psis = []
    for n in range(n_max + 1):
        acc = Matrix.zero(th.field, e.dim, d.dim)
        for p in range(n + 1):
            for q in range(n + 1 - p):
                r = n - p - q
                acc = acc + iso.phi_e[p] * th.psis[q] * inv_d[r]
        new_psis.append(acc)
    return TruncatedDeformation(th.psi, new_fd, new_fe, new_psis)


def trivialize_step(th, complex_=None):
    """Kill the leading nonzero coefficient by a formal isomorphism.

    Requires the leading coefficient to be a 2-coboundary; returns the
    pair (iso, transported deformation) with one more vanishing order.
    """
    if complex_ is None:
        complex_ = MorphismComplex(th.psi)
    lead = None
    for k in range(1, th.order + 1):
        if not th.theta(k, complex_).is_zero():
            lead = k
            break
    if lead is None:
        return FormalIso.identity(th.psi, th.order), th
    theta = th.theta(lead, complex_)
    mat = complex_.matrix(1)
    x = mat.solve(complex_.vec(theta))
    if x is None:
        aug = mat.hstack(Matrix.column(complex_.field, complex_.vec(theta)))
        raise NotACoboundary(
            "leading coefficient at order %d is not a coboundary" % lead,
            certificate="rank delta^1 = %d, rank [delta^1 | theta] = %d"
            % (mat.rank(), aug.rank()))
    beta = complex_.normalize_1cochain(complex_.unvec(1, x))
    xi_mat = cochain1_to_matrix(beta.xi)
    pi_mat = cochain1_to_matrix(beta.pi)
    f = complex_.field
    phi_d = [Matrix.identity(f, th.psi.source.dim)]
    phi_e = [Matrix.identity(f, th.psi.target.dim)]
    zd = Matrix.zero(f, th.psi.source.dim, th.psi.source.dim)
    ze = Matrix.zero(f, th.psi.target.dim, th.psi.target.dim)
    for n in range(1, th.order + 1):
        phi_d.append(xi_mat if n == lead else zd)
        phi_e.append(pi_mat if n == lead else ze)
    iso = FormalIso(phi_d, phi_e)
    return iso, apply_formal_iso(th, iso)


def rigidity_probe(psi, complex_=None, order_cap=4, samples=5, seed=0):
    """HY^2-based rigidity verdict, exercised on sampled deformations."""
    report = check_morphism(psi)
    if not report:
        raise InvalidDeformation("psi is not a dialgebra morphism")
    if complex_ is None:
        complex_ = MorphismComplex(psi)
    hy2 = complex_.cohomology_dim(2)
    if hy2 != 0:
        return RigidityReport(hy2, "not decided by vanishing HY^2"
                                   " (HY^2 = %d)" % hy2)
    rng = random.Random(seed)
    trivialized = 0
    for _ in range(samples):
        th = random_deformation(psi, order_cap, rng, complex_=complex_)
        current = th
        while True:
            iso, current = trivialize_step(current, complex_)
            lead = next((k for k in range(1, current.order + 1)
                         if not current.theta(k, complex_).is_zero()), None)
            if lead is None:
                break
        trivialized += 1
    return RigidityReport(0, "rigid (HY^2 = 0)", trivialized)


# -- random valid deformations -----------------------------------------


def _random_scalar(field, rng):
    return field.from_int(rng.randint(-3, 3))


def random_cocycle(complex_, n, rng):
    """A random element of ker delta^n, as a morphism cochain."""
    mat = complex_.matrix(n)
    basis = mat.kernel_basis()
    f = complex_.field
    coords = [f.zero] * mat.cols
    for v in basis:
        c = _random_scalar(f, rng)
        if c == f.zero:
            continue
        coords = [x + c * y for x, y in zip(coords, v)]
    return complex_.unvec(n, tuple(coords))


def random_deformation(psi, order, rng, complex_=None):
    """A random valid deformation of the given order.

    Starts from a random 2-cocycle infinitesimal and extends order by
    order, randomizing each particular solution by a random 2-cocycle.
    Stops early (still valid) if an obstruction blocks the extension.
    """
    if complex_ is None:
        complex_ = MorphismComplex(psi)
    th = TruncatedDeformation.trivial(psi)
    if order < 1:
        return th
    th = th.extended_with(random_cocycle(complex_, 2, rng))
    while th.order < order:
        nxt = extend_step(th, complex_, check_valid=False)
        if nxt is None:
            break
        theta = nxt.theta(nxt.order, complex_)
        randomized = th.extended_with(theta + random_cocycle(complex_, 2, rng))
        th = randomized
    return th
