"""The deformation complex of a dialgebra morphism psi: D -> E.

Degree-n cochains are triples (xi; pi; phi) with xi in CY^n(D,D), pi in
CY^n(E,E), and phi in CY^{n-1}(D,E), where E is a D-representation pulled
back along psi.  The coboundary is

    delta(xi; pi; phi) = (delta xi; delta pi; psi.xi - pi.psi - delta phi)

with the two push-forwards defined coordinatewise.  Block vectors are laid
out as (xi | pi | phi); degree 0 is the zero module and cohomology starts
at degree 1.
"""


from .cochain import (Cochain, coboundary, coboundary_matrix, cy_dim,
                      multi_indices, vec)
from .dialgebra import adjoint_rep, pullback_rep
from .errors import ShapeMismatch
from .linalg import Matrix
from .trees import DEFAULT_TREE_CAP, enumerate_trees


class MorphismCochain:
    """An element (xi; pi; phi) of CY^n(psi,psi), n >= 1."""

    __slots__ = ("degree", "xi", "pi", "phi")

    def __init__(self, xi, pi, phi):
        if not (xi.degree == pi.degree == phi.degree + 1):
            raise ShapeMismatch("component degrees must be (n, n, n-1)")
        if not (xi.field == pi.field == phi.field):
            raise ShapeMismatch("component fields differ")
        object.__setattr__(self, "degree", xi.degree)
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "pi", pi)
        object.__setattr__(self, "phi", phi)

    def __setattr__(self, name, value):
        raise AttributeError("MorphismCochain is immutable")

    def __add__(self, other):
        return MorphismCochain(self.xi + other.xi, self.pi + other.pi,
                               self.phi + other.phi)

    def __sub__(self, other):
        return MorphismCochain(self.xi - other.xi, self.pi - other.pi,
                               self.phi - other.phi)

    def __neg__(self):
        return MorphismCochain(-self.xi, -self.pi, -self.phi)

    def scale(self, c):
        return MorphismCochain(self.xi.scale(c), self.pi.scale(c),
                               self.phi.scale(c))

    def is_zero(self):
        return self.xi.is_zero() and self.pi.is_zero() and self.phi.is_zero()

    def __eq__(self, other):
        return (isinstance(other, MorphismCochain)
                and self.xi == other.xi and self.pi == other.pi
                and self.phi == other.phi)

    def __hash__(self):
        return hash((self.xi, self.pi, self.phi))

    def __repr__(self):
        return "MorphismCochain(degree=%d)" % self.degree


class MorphismComplex:
    """CY*(psi,psi) for a fixed morphism, with cached representations."""

    def __init__(self, psi, cap=DEFAULT_TREE_CAP):
        self.psi = psi
        self.cap = cap
        self.D = psi.source
        self.E = psi.target
        self.rep_d = adjoint_rep(self.D)
        self.rep_e = adjoint_rep(self.E)
        self.rep_de = pullback_rep(psi)
        self._matrices = {}

    @property
    def field(self):
        return self.psi.field

    # -- cochain plumbing ----------------------------------------------

    def dim(self, n):
        if n <= 0:
            return 0
        return (cy_dim(self.D, self.rep_d, n)
                + cy_dim(self.E, self.rep_e, n)
                + cy_dim(self.D, self.rep_de, n - 1))

    def zero(self, n):
        return MorphismCochain(Cochain.zero(n, self.D, self.rep_d),
                               Cochain.zero(n, self.E, self.rep_e),
                               Cochain.zero(n - 1, self.D, self.rep_de))

    def cochain(self, xi, pi, phi):
        return MorphismCochain(xi, pi, phi)

    def vec(self, mc):
        return vec(mc.xi) + vec(mc.pi) + vec(mc.phi)

    def unvec(self, n, coords):
        d1 = cy_dim(self.D, self.rep_d, n)
        d2 = cy_dim(self.E, self.rep_e, n)
        d3 = cy_dim(self.D, self.rep_de, n - 1)
        if len(coords) != d1 + d2 + d3:
            raise ShapeMismatch("block vector has wrong length")
        return MorphismCochain(
            Cochain(n, self.D, self.rep_d, coords[:d1]),
            Cochain(n, self.E, self.rep_e, coords[d1:d1 + d2]),
            Cochain(n - 1, self.D, self.rep_de, coords[d1 + d2:]))

    # -- push-forwards --------------------------------------------------

    def push_forward(self, xi):
        """psi.xi in CY^n(D,E): apply psi to every value of xi."""
        psi = self.psi
        return Cochain.from_function(
            xi.degree, self.D, self.rep_de,
            lambda tree, multi: psi(xi.value(tree.index, multi)))

    def pull_back(self, pi):
        """pi.psi in CY^n(D,E): evaluate pi on psi-images of the basis."""
        psi = self.psi
        images = [psi(self.D.basis_vector(i)) for i in range(self.D.dim)]
        return Cochain.from_function(
            pi.degree, self.D, self.rep_de,
            lambda tree, multi: pi.evaluate(tree.index,
                                            [images[a] for a in multi]))

    def push_matrix(self, n):
        """Matrix of xi |-> psi.xi from CY^n(D,D) to CY^n(D,E)."""
        f = self.field
        z = f.zero
        ddim, edim = self.D.dim, self.E.dim
        slots = len(enumerate_trees(n)) * ddim ** n
        rows, cols = slots * edim, slots * ddim
        grid = [[z] * cols for _ in range(rows)]
        for s in range(slots):
            for w in range(edim):
                for u in range(ddim):
                    grid[s * edim + w][s * ddim + u] = self.psi.matrix[w, u]
        return Matrix(f, rows, cols, grid)

    def pull_matrix(self, n):
        """Matrix of pi |-> pi.psi from CY^n(E,E) to CY^n(D,E)."""
        f = self.field
        z = f.zero
        ddim, edim = self.D.dim, self.E.dim
        trees = len(enumerate_trees(n))
        rows = trees * ddim ** n * edim
        cols = trees * edim ** n * edim
        grid = [[z] * cols for _ in range(rows)]
        psi = self.psi.matrix
        for t in range(trees):
            for di, dmulti in enumerate(multi_indices(ddim, n)):
                base_row = (t * ddim ** n + di) * edim
                for ei, emulti in enumerate(multi_indices(edim, n)):
                    c = f.one
                    for es, ds in zip(emulti, dmulti):
                        c = c * psi[es, ds]
                        if c == z:
                            break
                    if c == z:
                        continue
                    base_col = (t * edim ** n + ei) * edim
                    for w in range(edim):
                        grid[base_row + w][base_col + w] = c
        return Matrix(f, rows, cols, grid)

    # -- the coboundary -------------------------------------------------

    def coboundary(self, mc):
        """Elementwise delta(xi; pi; phi); the matrix path is separate."""
        return mor_coboundary(self, mc)

    def matrix(self, n):
        """Block matrix of delta: CY^n(psi,psi) -> CY^{n+1}(psi,psi)."""
        if n in self._matrices:
            return self._matrices[n]
        f = self.field
        if n <= 0:
            out = Matrix.zero(f, self.dim(1), 0)
            self._matrices[n] = out
            return out
        dd = coboundary_matrix(self.D, self.rep_d, n, cap=self.cap)
        de = coboundary_matrix(self.E, self.rep_e, n, cap=self.cap)
        dde = coboundary_matrix(self.D, self.rep_de, n - 1, cap=self.cap)
        push = self.push_matrix(n)
        pull = self.pull_matrix(n)
        z = f.zero
        rows = dd.rows + de.rows + push.rows
        cols = dd.cols + de.cols + dde.cols
        grid = [[z] * cols for _ in range(rows)]

        def paste(block, r0, c0, negate=False):
            for i in range(block.rows):
                for j in range(block.cols):
                    v = block[i, j]
                    if v != z:
                        grid[r0 + i][c0 + j] = -v if negate else v

        paste(dd, 0, 0)
        paste(de, dd.rows, dd.cols)
        paste(push, dd.rows + de.rows, 0)
        paste(pull, dd.rows + de.rows, dd.cols, negate=True)
        paste(dde, dd.rows + de.rows, dd.cols + de.cols, negate=True)
        out = Matrix(f, rows, cols, grid)
        self._matrices[n] = out
        return out

    def cohomology_dim(self, n):
        """dim HY^n(psi,psi), n >= 1."""
        if n < 1:
            raise ShapeMismatch("morphism cohomology starts at degree 1")
        mat_n = self.matrix(n)
        kernel = mat_n.cols - mat_n.rank()
        image = self.matrix(n - 1).rank()
        return kernel - image

    def normalize_1cochain(self, mc):
        """Trade the phi slot of a degree-1 cochain for a shift of pi.

        Returns (xi; pi + delta phi; 0), where phi in E is reread as a
        degree-0 cochain of CY*(E,E); the coboundary of the input is
        preserved exactly.
        """
        if mc.degree != 1:
            raise ShapeMismatch("normalize_1cochain needs degree 1")
        phi_e = Cochain(0, self.E, self.rep_e, mc.phi.coeffs)
        return MorphismCochain(mc.xi, mc.pi + coboundary(phi_e, cap=self.cap),
                               Cochain.zero(0, self.D, self.rep_de))


def mor_coboundary(complex_, mc):
    """delta(xi; pi; phi), computed elementwise per block."""
    n = mc.degree
    cap = complex_.cap
    third = (complex_.push_forward(mc.xi)
             - complex_.pull_back(mc.pi)
             - coboundary(mc.phi, cap=cap))
    return MorphismCochain(coboundary(mc.xi, cap=cap),
                           coboundary(mc.pi, cap=cap),
                           third)
