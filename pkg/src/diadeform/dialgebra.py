"""Finite-dimensional dialgebras, representations, and morphisms.

All objects carry exact structure constants over a common field.  Axiom
checking iterates every basis triple; bilinearity makes this complete.
"""

from dataclasses import dataclass

from .errors import FieldMismatch, ShapeMismatch
from .fields import QQ
from .linalg import Matrix, _coerce
from .trees import ProductLabel

LEFT = ProductLabel.LEFT
RIGHT = ProductLabel.RIGHT

# The five dialgebra axioms, each an equality of two bracketed triple
# products.  "R" means x o (y o z), "L" means (x o y) o z; the pair is
# (outer product, inner product).
#   1: x -|(y -| z)  = (x -| y) -| z
#   2: (x -| y) -| z = x -|(y |- z)
#   3: (x |- y) -| z = x |-(y -| z)
#   4: (x -| y) |- z = x |-(y |- z)
#   5: x |-(y |- z)  = (x |- y) |- z
AXIOMS = (
    (("R", LEFT, LEFT), ("L", LEFT, LEFT)),
    (("L", LEFT, LEFT), ("R", LEFT, RIGHT)),
    (("L", LEFT, RIGHT), ("R", RIGHT, LEFT)),
    (("L", RIGHT, LEFT), ("R", RIGHT, RIGHT)),
    (("R", RIGHT, RIGHT), ("L", RIGHT, RIGHT)),
)


def _check_tensor(field, tensor, d1, d2, d3, what):
    if len(tensor) != d1:
        raise ShapeMismatch("%s: expected %d slices" % (what, d1))
    out = []
    for block in tensor:
        if len(block) != d2:
            raise ShapeMismatch("%s: expected %d rows" % (what, d2))
        rows = []
        for row in block:
            if len(row) != d3:
                raise ShapeMismatch("%s: expected %d entries" % (what, d3))
            rows.append(tuple(_coerce(field, x) for x in row))
        out.append(tuple(rows))
    return tuple(out)


def _bilinear(tensor, field, va, vb):
    """Apply a structure tensor T[i][j][k] to coordinate vectors."""
    z = field.zero
    dim_out = len(tensor[0][0]) if tensor else 0
    out = [z] * dim_out
    for i, a in enumerate(va):
        if a == z:
            continue
        for j, b in enumerate(vb):
            if b == z:
                continue
            coeff = a * b
            row = tensor[i][j]
            for k in range(dim_out):
                if row[k] != z:
                    out[k] = out[k] + coeff * row[k]
    return tuple(out)


@dataclass(frozen=True)
class Report:
    valid: bool
    violations: tuple = ()

    def __bool__(self):
        return self.valid


class Dialgebra:
    """A dialgebra given by left/right structure tensors on a fixed basis.

    left[i][j][k] is the coefficient of e_k in e_i -| e_j, and right the
    same for |-.
    """

    __slots__ = ("name", "dim", "field", "left", "right", "basis_names")

    def __init__(self, dim, field=QQ, left=None, right=None,
                 basis_names=None, name="D"):
        if dim < 1:
            raise ShapeMismatch("dialgebra dimension must be >= 1")
        z = field.zero
        zero_tensor = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
        left = left if left is not None else zero_tensor
        right = right if right is not None else zero_tensor
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "left",
                           _check_tensor(field, left, dim, dim, dim, "left"))
        object.__setattr__(self, "right",
                           _check_tensor(field, right, dim, dim, dim, "right"))
        if basis_names is None:
            basis_names = tuple("e%d" % i for i in range(dim))
        object.__setattr__(self, "basis_names", tuple(basis_names))

    def __setattr__(self, name, value):
        raise AttributeError("Dialgebra is immutable")

    def __eq__(self, other):
        return (isinstance(other, Dialgebra) and self.dim == other.dim
                and self.field == other.field and self.left == other.left
                and self.right == other.right)

    def __hash__(self):
        return hash((self.dim, self.field, self.left, self.right))

    def __repr__(self):
        return "Dialgebra(%s, dim=%d)" % (self.name, self.dim)

    def tensor(self, label):
        return self.left if label is LEFT else self.right

    def product(self, label, va, vb):
        """Coordinate vector of va o vb for the chosen product."""
        if len(va) != self.dim or len(vb) != self.dim:
            raise ShapeMismatch("expected coordinate vectors of length %d"
                                % self.dim)
        return _bilinear(self.tensor(label), self.field, va, vb)

    def basis_vector(self, i):
        z, o = self.field.zero, self.field.one
        return tuple(o if j == i else z for j in range(self.dim))

    def zero_vector(self):
        return (self.field.zero,) * self.dim


@dataclass(frozen=True)
class Representation:
    """A module over a dialgebra, given by four action tensors.

    act_dl[i][u][w]: coefficient of m_w in e_i -| m_u  (left action, -|)
    act_dr[i][u][w]: e_i |- m_u
    act_ld[u][i][w]: m_u -| e_i
    act_rd[u][i][w]: m_u |- e_i
    """

    dialgebra: Dialgebra
    module_dim: int
    act_dl: tuple
    act_dr: tuple
    act_ld: tuple
    act_rd: tuple

    def __post_init__(self):
        d, m, f = self.dialgebra.dim, self.module_dim, self.dialgebra.field
        object.__setattr__(self, "act_dl",
                           _check_tensor(f, self.act_dl, d, m, m, "act_dl"))
        object.__setattr__(self, "act_dr",
                           _check_tensor(f, self.act_dr, d, m, m, "act_dr"))
        object.__setattr__(self, "act_ld",
                           _check_tensor(f, self.act_ld, m, d, m, "act_ld"))
        object.__setattr__(self, "act_rd",
                           _check_tensor(f, self.act_rd, m, d, m, "act_rd"))

    @property
    def field(self):
        return self.dialgebra.field

    def act_left(self, label, va, vm):
        """a o m for a in D, m in M."""
        t = self.act_dl if label is LEFT else self.act_dr
        return _bilinear(t, self.field, va, vm)

    def act_right(self, label, vm, va):
        """m o a for m in M, a in D."""
        t = self.act_ld if label is LEFT else self.act_rd
        return _bilinear(t, self.field, vm, va)

    def basis_vector(self, u):
        z, o = self.field.zero, self.field.one
        return tuple(o if v == u else z for v in range(self.module_dim))

    def zero_vector(self):
        return (self.field.zero,) * self.module_dim


class DialgebraMorphism:
    """A linear map psi: D -> E, stored as a target_dim x source_dim matrix."""

    __slots__ = ("name", "source", "target", "matrix")

    def __init__(self, source, target, matrix, name="psi"):
        if source.field != target.field:
            raise FieldMismatch("morphism source and target fields differ")
        if not isinstance(matrix, Matrix):
            matrix = Matrix(source.field, target.dim, source.dim, matrix)
        if (matrix.rows, matrix.cols) != (target.dim, source.dim):
            raise ShapeMismatch("morphism matrix must be %dx%d"
                                % (target.dim, source.dim))
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("DialgebraMorphism is immutable")

    @property
    def field(self):
        return self.source.field

    def __call__(self, va):
        return self.matrix.apply(va)

    def __repr__(self):
        return "DialgebraMorphism(%s: %s -> %s)" % (
            self.name, self.source.name, self.target.name)

    @classmethod
    def identity(cls, d, name="id"):
        return cls(d, d, Matrix.identity(d.field, d.dim), name=name)

    def compose(self, other):
        """self after other."""
        if other.target is not self.source and other.target != self.source:
            raise ShapeMismatch("morphisms do not compose")
        return DialgebraMorphism(other.source, self.target,
                                 self.matrix * other.matrix,
                                 name="%s.%s" % (self.name, other.name))


def _triple(products, side, outer, inner, vx, vy, vz):
    """Evaluate one side of an axiom with the three given vectors.

    ``products`` maps a slot pair to a bilinear evaluator; see the callers
    for the dialgebra and representation variants.
    """
    if side == "R":
        w = products["yz"](inner, vy, vz)
        return products["x_"](outer, vx, w)
    w = products["xy"](inner, vx, vy)
    return products["_z"](outer, w, vz)


def check_dialgebra(d):
    """All five axioms on all basis triples; violations carry both sides."""
    violations = []
    for num, (lhs, rhs) in enumerate(AXIOMS, start=1):
        products = {
            "yz": d.product, "xy": d.product,
            "x_": d.product, "_z": d.product,
        }
        for i in range(d.dim):
            vx = d.basis_vector(i)
            for j in range(d.dim):
                vy = d.basis_vector(j)
                for k in range(d.dim):
                    vz = d.basis_vector(k)
                    lv = _triple(products, *lhs, vx, vy, vz)
                    rv = _triple(products, *rhs, vx, vy, vz)
                    if lv != rv:
                        violations.append((num, i, j, k, lv, rv))
    return Report(not violations, tuple(violations))


def check_representation(d, rep):
    """The fifteen module axioms: each of the five with M in one slot."""
    if rep.dialgebra != d:
        raise ShapeMismatch("representation is not over the given dialgebra")
    violations = []
    for slot in ("x", "y", "z"):
        products = _slot_products(d, rep, slot)
        dims = {
            "x": (rep.module_dim if slot == "x" else d.dim),
            "y": (rep.module_dim if slot == "y" else d.dim),
            "z": (rep.module_dim if slot == "z" else d.dim),
        }
        vec = {
            "x": rep.basis_vector if slot == "x" else d.basis_vector,
            "y": rep.basis_vector if slot == "y" else d.basis_vector,
            "z": rep.basis_vector if slot == "z" else d.basis_vector,
        }
        for num, (lhs, rhs) in enumerate(AXIOMS, start=1):
            for i in range(dims["x"]):
                vx = vec["x"](i)
                for j in range(dims["y"]):
                    vy = vec["y"](j)
                    for k in range(dims["z"]):
                        vz = vec["z"](k)
                        lv = _triple(products, *lhs, vx, vy, vz)
                        rv = _triple(products, *rhs, vx, vy, vz)
                        if lv != rv:
                            violations.append((num, slot, i, j, k, lv, rv))
    return Report(not violations, tuple(violations))


def _slot_products(d, rep, slot):
    """Bilinear evaluators for axiom checking with M in the given slot.

    Keys: "yz" (y with z), "xy" (x with y), "x_" (x with the inner
    result), "_z" (the inner result with z).
    """
    if slot == "x":
        return {
            "yz": d.product,
            "xy": lambda lab, vm, va: rep.act_right(lab, vm, va),
            "x_": lambda lab, vm, va: rep.act_right(lab, vm, va),
            "_z": lambda lab, vm, va: rep.act_right(lab, vm, va),
        }
    if slot == "y":
        return {
            "yz": lambda lab, vm, va: rep.act_right(lab, vm, va),
            "xy": lambda lab, va, vm: rep.act_left(lab, va, vm),
            "x_": lambda lab, va, vm: rep.act_left(lab, va, vm),
            "_z": lambda lab, vm, va: rep.act_right(lab, vm, va),
        }
    return {
        "yz": lambda lab, va, vm: rep.act_left(lab, va, vm),
        "xy": d.product,
        "x_": lambda lab, va, vm: rep.act_left(lab, va, vm),
        "_z": lambda lab, va, vm: rep.act_left(lab, va, vm),
    }


def check_morphism(psi):
    """Both product-preservation identities on all basis pairs."""
    d, e = psi.source, psi.target
    if d.field != e.field:
        raise FieldMismatch("source and target fields differ")
    violations = []
    for label in (LEFT, RIGHT):
        for i in range(d.dim):
            vi = psi(d.basis_vector(i))
            for j in range(d.dim):
                vj = psi(d.basis_vector(j))
                lhs = psi(d.product(label, d.basis_vector(i),
                                    d.basis_vector(j)))
                rhs = e.product(label, vi, vj)
                if lhs != rhs:
                    violations.append((label, i, j, lhs, rhs))
    return Report(not violations, tuple(violations))


def adjoint_rep(d):
    """D as a representation of itself: all four actions are the products."""
    return Representation(d, d.dim, d.left, d.right, d.left, d.right)


def pullback_rep(psi):
    """The target of a morphism as a representation of the source.

    a o m := psi(a) o m and m o a := m o psi(a), for both products.
    """
    d, e = psi.source, psi.target
    f = d.field
    z = f.zero

    def pull_left(tensor):
        # T'[i][u][w] = sum_s psi[s,i] * T[s][u][w]
        out = []
        for i in range(d.dim):
            block = [[z] * e.dim for _ in range(e.dim)]
            for s in range(e.dim):
                c = psi.matrix[s, i]
                if c == z:
                    continue
                for u in range(e.dim):
                    for w in range(e.dim):
                        block[u][w] = block[u][w] + c * tensor[s][u][w]
            out.append(block)
        return out

    def pull_right(tensor):
        # T'[u][i][w] = sum_s psi[s,i] * T[u][s][w]
        out = []
        for u in range(e.dim):
            block = [[z] * e.dim for _ in range(d.dim)]
            for i in range(d.dim):
                for s in range(e.dim):
                    c = psi.matrix[s, i]
                    if c == z:
                        continue
                    for w in range(e.dim):
                        block[i][w] = block[i][w] + c * tensor[u][s][w]
            out.append(block)
        return out

    return Representation(d, e.dim,
                          pull_left(e.left), pull_left(e.right),
                          pull_right(e.left), pull_right(e.right))
