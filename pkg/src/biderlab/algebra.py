"""Finite-dimensional unital associative algebras given by structure constants.

An algebra of dimension d is a table of d^3 rationals: table[i][j][k] is the
coefficient of basis element k in the product (basis i)(basis j), together
with the coordinates of the unity element.  On top of that this module
provides the stock constructions (full and upper-triangular matrix algebras,
block upper-triangular algebras, generalized triangular algebras built from a
bimodule), bimodules, the Peirce decomposition induced by an idempotent, the
center, commutator ideals, and the hypothesis checkers used by the
decomposition engine.

The base field is the rationals throughout, so 2-torsion-freeness and
regularity of nonzero scalars are automatic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    EchelonAccumulator,
    MatrixQ,
    Subspace,
    as_rational,
    subspace_equal,
)
from .verdicts import Verdict

HYPOTHESES = (
    "star",
    "triangular",
    "ideal11",
    "ideal22",
    "zero_morphism",
    "orthogonality",
    "faithful",
)


class Element:
    """A vector of coordinates over the owning algebra's basis."""

    __slots__ = ("alg", "coords")

    def __init__(self, alg, coords):
        coords = tuple(as_rational(x) for x in coords)
        if len(coords) != alg.dim:
            raise ValueError(f"expected {alg.dim} coordinates, got {len(coords)}")
        self.alg = alg
        self.coords = coords

    def _check_same(self, other):
        if self.alg is not other.alg:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check_same(other)
        return Element(self.alg, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check_same(other)
        return Element(self.alg, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Element(self.alg, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check_same(other)
            return Element(self.alg, self.alg.multiply_coords(self.coords, other.coords))
        if isinstance(other, (int, Fraction)):
            q = as_rational(other)
            return Element(self.alg, tuple(q * a for a in self.coords))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = as_rational(other)
            return Element(self.alg, tuple(q * a for a in self.coords))
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.alg is other.alg and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.alg), self.coords))

    def is_zero(self):
        return all(x == 0 for x in self.coords)

    def __repr__(self):
        terms = []
        for name, c in zip(self.alg.basis_names, self.coords):
            if c == 0:
                continue
            if c == 1:
                terms.append(name)
            elif c == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{c}*{name}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def bracket(x, y):
    """Lie bracket [x, y] = xy - yx."""
    return x * y - y * x


def circ(x, y):
    """Jordan product x o y = xy + yx."""
    return x * y + y * x


class Algebra:
    """Structure-constant algebra over Q with a designated unity."""

    def __init__(self, basis_names, table, unity, *, name=None, validate=True):
        self.basis_names = tuple(str(n) for n in basis_names)
        self.dim = len(self.basis_names)
        d = self.dim
        if d == 0:
            raise ValueError("algebra must have positive dimension")
        self.table = tuple(
            tuple(tuple(as_rational(x) for x in vec) for vec in row) for row in table
        )
        if len(self.table) != d or any(
            len(row) != d or any(len(vec) != d for vec in row) for row in self.table
        ):
            raise ValueError("structure table must be dim x dim x dim")
        self.unity = tuple(as_rational(x) for x in unity)
        if len(self.unity) != d:
            raise ValueError("unity vector has wrong length")
        self.name = name
        # sparse view of the table, used by every hot loop
        self._nz = {
            (i, j): tuple((k, c) for k, c in enumerate(self.table[i][j]) if c)
            for i in range(d)
            for j in range(d)
        }
        if validate:
            verdict = validate_algebra(self)
            if not verdict.ok:
                raise ValueError(f"invalid algebra: {verdict.detail}")

    # -- construction helpers ------------------------------------------------

    def element(self, coords):
        return Element(self, coords)

    def basis_element(self, i):
        return Element(self, tuple(1 if j == i else 0 for j in range(self.dim)))

    def basis_elements(self):
        return [self.basis_element(i) for i in range(self.dim)]

    def zero(self):
        return Element(self, (0,) * self.dim)

    def one(self):
        return Element(self, self.unity)

    # -- products ------------------------------------------------------------

    def multiply_coords(self, xc, yc):
        d = self.dim
        acc = [Fraction(0)] * d
        for i, xi in enumerate(xc):
            if not xi:
                continue
            for j, yj in enumerate(yc):
                if not yj:
                    continue
                s = xi * yj
                for k, c in self._nz[(i, j)]:
                    acc[k] += s * c
        return tuple(acc)

    def center(self):
        """{x : xu = ux for every basis element u}, as a Subspace."""
        d = self.dim
        acc = EchelonAccumulator(d)
        for j in range(d):
            for s in range(d):
                row = {}
                for i in range(d):
                    c = self.table[i][j][s] - self.table[j][i][s]
                    if c:
                        row[i] = c
                if row:
                    acc.add_row(row)
        return acc.kernel_subspace()

    def __repr__(self):
        label = self.name or "Algebra"
        return f"{label}(dim={self.dim})"


def multiply(alg, x, y):
    """Product of two elements under the structure-constant table."""
    if x.alg is not alg or y.alg is not alg:
        raise ValueError("elements do not belong to this algebra")
    return x * y


def validate_algebra(alg):
    """Check associativity on all basis triples and the two unity laws.

    Returns a verdict; on failure the witness names the first offending
    basis triple (associativity) or basis index (unity).
    """
    d = alg.dim
    one = alg.unity
    for i in range(d):
        ei = tuple(1 if j == i else 0 for j in range(d))
        left = alg.multiply_coords(one, ei)
        right = alg.multiply_coords(ei, one)
        if left != ei or right != ei:
            return Verdict.failed(
                "unity", witness=i, detail=f"unity law fails on basis {alg.basis_names[i]}"
            )
    for i in range(d):
        for j in range(d):
            ij = alg.table[i][j]
            for k in range(d):
                ek = tuple(1 if t == k else 0 for t in range(d))
                lhs = alg.multiply_coords(ij, ek)
                jk = alg.table[j][k]
                ei = tuple(1 if t == i else 0 for t in range(d))
                rhs = alg.multiply_coords(ei, jk)
                if lhs != rhs:
                    return Verdict.failed(
                        "associativity",
                        witness=(i, j, k),
                        detail=f"(u{i} u{j}) u{k} != u{i} (u{j} u{k})",
                    )
    return Verdict.passed("algebra_valid")


# -- presets ------------------------------------------------------------------


def _matrix_unit_algebra(positions, n, name):
    """Algebra spanned by matrix units E_ij at the given (i, j) positions."""
    idx = {p: t for t, p in enumerate(positions)}
    d = len(positions)
    table = [[[0] * d for _ in range(d)] for _ in range(d)]
    for t1, (i, j) in enumerate(positions):
        for t2, (k, l) in enumerate(positions):
            if j == k and (i, l) in idx:
                table[t1][t2][idx[(i, l)]] = 1
            elif j == k:
                raise ValueError(f"position set not closed: E{i+1}{j+1}*E{k+1}{l+1}")
    unity = [0] * d
    for i in range(n):
        unity[idx[(i, i)]] = 1
    names = [f"E{i+1}{j+1}" for (i, j) in positions]
    return Algebra(names, table, unity, name=name)


def matrix_algebra(n):
    """Full n x n matrix algebra over Q, basis E_ij in row-major order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    positions = [(i, j) for i in range(n) for j in range(n)]
    return _matrix_unit_algebra(positions, n, f"matrix({n})")


def upper_triangular(n):
    """Upper triangular n x n matrices, basis E_ij with i <= j."""
    if n < 1:
        raise ValueError("n must be >= 1")
    positions = [(i, j) for i in range(n) for j in range(i, n)]
    return _matrix_unit_algebra(positions, n, f"upper_triangular({n})")


def block_upper_triangular(sizes):
    """Block upper triangular matrices for the given diagonal block sizes."""
    sizes = tuple(int(s) for s in sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("block sizes must be positive")
    n = sum(sizes)
    block = []
    for b, s in enumerate(sizes):
        block.extend([b] * s)
    positions = [(i, j) for i in range(n) for j in range(n) if block[i] <= block[j]]
    label = ",".join(str(s) for s in sizes)
    return _matrix_unit_algebra(positions, n, f"block_upper_triangular({label})")


def one_dim():
    """The base field Q as a one-dimensional algebra."""
    return Algebra(["u"], [[[1]]], [1], name="one_dim")


def triangular_algebra(a_alg, b_alg, mdim, left_action, right_action, m_names=None):
    """Generalized triangular algebra built from algebras A, B and an
    (A, B)-bimodule M presented by action matrices.

    `left_action[i]` is the mdim x mdim matrix of the action of the i-th
    A-basis element on M; `right_action[j]` likewise for B acting on the
    right.  The 2x2 matrix picture fixes the products: basis order is
    (A basis, M basis, B basis), M*M = 0, and the unity is 1_A + 1_B.

    Returns (algebra, e) where e is the idempotent given by 1_A, for which
    the lower-left Peirce corner vanishes.
    """
    left = [MatrixQ(m) for m in left_action]
    right = [MatrixQ(m) for m in right_action]
    if len(left) != a_alg.dim or len(right) != b_alg.dim:
        raise ValueError("need one action matrix per A-basis and per B-basis element")
    for m in left + right:
        if m.rows != mdim or m.cols != mdim:
            raise ValueError("action matrices must be mdim x mdim")

    def combo(mats, coords):
        out = [[Fraction(0)] * mdim for _ in range(mdim)]
        for i, c in enumerate(coords):
            if c:
                for r in range(mdim):
                    row = mats[i].row(r)
                    for s in range(mdim):
                        if row[s]:
                            out[r][s] += c * row[s]
        return MatrixQ(out, cols=mdim)

    ident = MatrixQ.identity(mdim)
    if combo(left, a_alg.unity) != ident:
        raise ValueError("invalid bimodule actions: 1_A does not act as identity")
    if combo(right, b_alg.unity) != ident:
        raise ValueError("invalid bimodule actions: 1_B does not act as identity")
    for i in range(a_alg.dim):
        for j in range(a_alg.dim):
            if left[i] @ left[j] != combo(left, a_alg.table[i][j]):
                raise ValueError(
                    f"invalid bimodule actions: left action not multiplicative at ({i},{j})"
                )
    for i in range(b_alg.dim):
        for j in range(b_alg.dim):
            # m.(u_i u_j) = (m.u_i).u_j
            if right[j] @ right[i] != combo(right, b_alg.table[i][j]):
                raise ValueError(
                    f"invalid bimodule actions: right action not multiplicative at ({i},{j})"
                )
    for i in range(a_alg.dim):
        for j in range(b_alg.dim):
            if left[i] @ right[j] != right[j] @ left[i]:
                raise ValueError(
                    f"invalid bimodule actions: left/right actions do not commute at ({i},{j})"
                )

    da, db = a_alg.dim, b_alg.dim
    d = da + mdim + db
    if m_names is None:
        m_names = [f"m{p+1}" for p in range(mdim)]
    names = (
        [f"a:{n}" for n in a_alg.basis_names]
        + list(m_names)
        + [f"b:{n}" for n in b_alg.basis_names]
    )
    table = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for i in range(da):
        for j in range(da):
            for k, c in enumerate(a_alg.table[i][j]):
                table[i][j][k] = c
    for i in range(db):
        for j in range(db):
            for k, c in enumerate(b_alg.table[i][j]):
                table[da + mdim + i][da + mdim + j][da + mdim + k] = c
    for i in range(da):  # A acts on M from the left
        for p in range(mdim):
            for r in range(mdim):
                table[i][da + p][da + r] = left[i].entry(r, p)
    for j in range(db):  # B acts on M from the right
        for p in range(mdim):
            for r in range(mdim):
                table[da + p][da + mdim + j][da + r] = right[j].entry(r, p)
    unity = list(a_alg.unity) + [0] * mdim + list(b_alg.unity)
    alg = Algebra(names, table, unity, name="triangular")
    e = alg.element(list(a_alg.unity) + [0] * (mdim + db))
    return alg, e


_PRESET_BUILDERS = {
    "one": one_dim,
    "t2": lambda: upper_triangular(2),
    "t3": lambda: upper_triangular(3),
    "t4": lambda: upper_triangular(4),
    "m2": lambda: matrix_algebra(2),
    "m3": lambda: matrix_algebra(3),
    "block21": lambda: block_upper_triangular((2, 1)),
}


def build_algebra(descriptor):
    """Build a preset algebra from a descriptor string.

    Accepted forms: "one", "t2".."t4", "m2", "m3", "block21",
    "matrix:N", "upper:N", "block:S1,S2,...".
    """
    key = descriptor.strip().lower()
    if key in _PRESET_BUILDERS:
        return _PRESET_BUILDERS[key]()
    if ":" in key:
        head, _, arg = key.partition(":")
        if head == "matrix":
            return matrix_algebra(int(arg))
        if head == "upper":
            return upper_triangular(int(arg))
        if head == "block":
            return block_upper_triangular(tuple(int(s) for s in arg.split(",")))
    raise ValueError(f"unknown algebra preset {descriptor!r}")


# -- bimodules -----------------------------------------------------------------


class Bimodule:
    """A unital bimodule over an algebra, given by per-basis action matrices.

    left[i][r][s] is the coefficient of module basis r in (algebra basis i)
    acting on module basis s; right[j] likewise for the right action.
    """

    def __init__(self, alg, left, right, *, validate=True, _regular=False):
        self.alg = alg
        self.left = tuple(MatrixQ(m) for m in left)
        self.right = tuple(MatrixQ(m) for m in right)
        if len(self.left) != alg.dim or len(self.right) != alg.dim:
            raise ValueError("need one left and one right action matrix per basis element")
        dims = {m.rows for m in self.left + self.right} | {
            m.cols for m in self.left + self.right
        }
        if len(dims) != 1:
            raise ValueError("action matrices must share one square size")
        self.mdim = dims.pop()
        self.is_regular = _regular
        if validate:
            v = self.validate()
            if not v.ok:
                raise ValueError(f"invalid bimodule: {v.detail}")

    @classmethod
    def regular(cls, alg):
        """The algebra acting on itself by left and right multiplication.

        Cached per algebra, so repeated calls return the same object.
        """
        cached = getattr(alg, "_regular_bimodule", None)
        if cached is not None:
            return cached
        d = alg.dim
        left = [
            [[alg.table[i][t][s] for t in range(d)] for s in range(d)] for i in range(d)
        ]
        right = [
            [[alg.table[t][j][s] for t in range(d)] for s in range(d)] for j in range(d)
        ]
        module = cls(alg, left, right, validate=False, _regular=True)
        alg._regular_bimodule = module
        return module

    def __eq__(self, other):
        if not isinstance(other, Bimodule):
            return NotImplemented
        return self.alg is other.alg and self.left == other.left and self.right == other.right

    def __hash__(self):
        return hash((id(self.alg), self.left, self.right))

    def validate(self):
        d, ident = self.alg.dim, MatrixQ.identity(self.mdim)
        unit_left = _matrix_combo(self.left, self.alg.unity, self.mdim)
        unit_right = _matrix_combo(self.right, self.alg.unity, self.mdim)
        if unit_left != ident or unit_right != ident:
            return Verdict.failed("bimodule_unital", detail="unity does not act as identity")
        for i in range(d):
            for j in range(d):
                prod_left = _matrix_combo(self.left, self.alg.table[i][j], self.mdim)
                if self.left[i] @ self.left[j] != prod_left:
                    return Verdict.failed(
                        "bimodule_left", witness=(i, j), detail="left action not multiplicative"
                    )
                prod_right = _matrix_combo(self.right, self.alg.table[i][j], self.mdim)
                if self.right[j] @ self.right[i] != prod_right:
                    return Verdict.failed(
                        "bimodule_right", witness=(i, j), detail="right action not multiplicative"
                    )
                if self.left[i] @ self.right[j] != self.right[j] @ self.left[i]:
                    return Verdict.failed(
                        "bimodule_commute",
                        witness=(i, j),
                        detail="left and right actions do not commute",
                    )
        return Verdict.passed("bimodule_valid")

    def act_left(self, x_coords, v):
        """x . v for an algebra element given by coordinates."""
        out = [Fraction(0)] * self.mdim
        for i, c in enumerate(x_coords):
            if c:
                w = self.left[i].mul_vec(v)
                for r in range(self.mdim):
                    if w[r]:
                        out[r] += c * w[r]
        return tuple(out)

    def act_right(self, v, y_coords):
        """v . y for an algebra element given by coordinates."""
        out = [Fraction(0)] * self.mdim
        for j, c in enumerate(y_coords):
            if c:
                w = self.right[j].mul_vec(v)
                for r in range(self.mdim):
                    if w[r]:
                        out[r] += c * w[r]
        return tuple(out)

    def left_matrix(self, x_coords):
        return _matrix_combo(self.left, x_coords, self.mdim)

    def right_matrix(self, y_coords):
        return _matrix_combo(self.right, y_coords, self.mdim)

    def __repr__(self):
        tag = "regular " if self.is_regular else ""
        return f"Bimodule({tag}mdim={self.mdim} over {self.alg!r})"


def _matrix_combo(mats, coords, size):
    out = [[Fraction(0)] * size for _ in range(size)]
    for i, c in enumerate(coords):
        if c:
            for r in range(size):
                row = mats[i].row(r)
                for s in range(size):
                    if row[s]:
                        out[r][s] += c * row[s]
    return MatrixQ(out, cols=size)


# -- Peirce decomposition -------------------------------------------------------


@dataclass(frozen=True)
class PeirceComponents:
    a: Element
    m: Element
    n: Element
    b: Element

    def resum(self):
        return self.a + self.m + self.n + self.b


class PeirceContext:
    """A verified nontrivial idempotent with its four corner subspaces.

    Corners are kept in ambient coordinates: corner k is the span of the
    images of the basis under the matching two-sided projection, e.g.
    A12 = span{e u_i e'}.
    """

    CORNER_KEYS = ("11", "12", "21", "22")

    def __init__(self, alg, e):
        if e.alg is not alg:
            raise ValueError("idempotent does not belong to this algebra")
        if e * e != e:
            raise ValueError("not idempotent: e*e != e")
        if e.is_zero():
            raise ValueError("trivial idempotent: e = 0")
        if e.coords == alg.unity:
            raise ValueError("trivial idempotent: e = 1")
        self.alg = alg
        self.e = e
        self.e_prime = alg.one() - e
        projs = {
            "11": lambda x: self.e * x * self.e,
            "12": lambda x: self.e * x * self.e_prime,
            "21": lambda x: self.e_prime * x * self.e,
            "22": lambda x: self.e_prime * x * self.e_prime,
        }
        self.corners = {}
        self.corner_elements = {}
        for key, proj in projs.items():
            vecs = [proj(u).coords for u in alg.basis_elements()]
            space = Subspace.from_vectors(alg.dim, vecs)
            self.corners[key] = space
            self.corner_elements[key] = tuple(alg.element(v) for v in space.basis)
        if sum(s.dim for s in self.corners.values()) != alg.dim:
            raise ValueError("Peirce corners do not sum directly to the algebra")

    @property
    def corner_dims(self):
        return tuple(self.corners[k].dim for k in self.CORNER_KEYS)

    def split(self, x):
        if x.alg is not self.alg:
            raise ValueError("element does not belong to this algebra")
        return PeirceComponents(
            a=self.e * x * self.e,
            m=self.e * x * self.e_prime,
            n=self.e_prime * x * self.e,
            b=self.e_prime * x * self.e_prime,
        )

    def __repr__(self):
        return f"PeirceContext(e={self.e!r}, corner_dims={self.corner_dims})"


def peirce_context(alg, e):
    return PeirceContext(alg, e)


def peirce_split(ctx, x):
    return ctx.split(x)


# -- commutator ideal and hypothesis checks --------------------------------------


def commutator_ideal(alg, corner):
    """Ideal of the corner algebra generated by all commutators of its basis.

    The corner must be multiplicatively closed.  The span of commutators is
    closed under left and right multiplication by corner basis elements until
    the dimension stabilizes; finite dimension guarantees termination.
    """
    corner_elts = [alg.element(v) for v in corner.basis]
    for x in corner_elts:
        for y in corner_elts:
            if not corner.contains_vector((x * y).coords):
                raise ValueError("corner is not multiplicatively closed")
    gens = [bracket(x, y).coords for x in corner_elts for y in corner_elts]
    span = Subspace.from_vectors(alg.dim, gens)
    while True:
        vecs = list(span.basis)
        for v in span.basis:
            xe = alg.element(v)
            for c in corner_elts:
                vecs.append((c * xe).coords)
                vecs.append((xe * c).coords)
        grown = Subspace.from_vectors(alg.dim, vecs)
        if grown.dim == span.dim:
            return span
        span = grown


def _corner_annihilator(alg, ctx, side_key, left_mults, right_mults):
    """Kernel {x in corner : l*x = 0 for l in left_mults, x*r = 0 for r in right_mults}.

    left_mults multiply x on the left, right_mults on the right; returns the
    kernel as a list of Elements of the corner.
    """
    basis = ctx.corner_elements[side_key]
    if not basis:
        return []
    acc = EchelonAccumulator(len(basis))
    d = alg.dim
    for l in left_mults:
        prods = [(l * v).coords for v in basis]
        for s in range(d):
            row = {i: prods[i][s] for i in range(len(basis)) if prods[i][s]}
            if row:
                acc.add_row(row)
    for r in right_mults:
        prods = [(v * r).coords for v in basis]
        for s in range(d):
            row = {i: prods[i][s] for i in range(len(basis)) if prods[i][s]}
            if row:
                acc.add_row(row)
    out = []
    for vec in acc.kernel_vectors():
        coords = [Fraction(0)] * d
        for i, c in enumerate(vec):
            if c:
                for j in range(d):
                    coords[j] += c * basis[i].coords[j]
        out.append(alg.element(coords))
    return out


def _commutator_sandwich_span(alg, ctx, left, right):
    """Span of {left * [u_i, u_j] * right} over all basis pairs."""
    vecs = []
    for x in alg.basis_elements():
        for y in alg.basis_elements():
            vecs.append((left * bracket(x, y) * right).coords)
    return Subspace.from_vectors(alg.dim, vecs)


def check_hypothesis(alg, ctx, which):
    """Evaluate one of the named structural hypotheses on (alg, ctx).

    star: no nonzero corner element of A11 annihilates A12 on the left and
      A21 on the right (and the symmetric A22 condition).
    triangular: A21 = 0.
    ideal11 / ideal22: the commutator ideal of the diagonal corner is the
      whole corner.
    zero_morphism: the only (A11, A22)-bimodule endomorphism f of A12 with
      e[A,A]e . f(A12) = 0 = f(A12) . e'[A,A]e' is f = 0.
    orthogonality: A12*A21 = 0 = A21*A12.
    faithful: A12 is faithful as a left A11-module and right A22-module.
    """
    if which not in HYPOTHESES:
        raise ValueError(f"unknown hypothesis {which!r}; expected one of {HYPOTHESES}")
    a12 = ctx.corner_elements["12"]
    a21 = ctx.corner_elements["21"]

    if which == "star":
        # a*A12 = 0 and A21*a = 0: the n's multiply a from the left, the m's
        # from the right.
        bad11 = _corner_annihilator(alg, ctx, "11", list(a21), list(a12))
        if bad11:
            return Verdict.failed(
                "star", witness=("A11", bad11[0]), detail=f"annihilating corner element {bad11[0]!r}"
            )
        bad22 = _corner_annihilator(alg, ctx, "22", list(a12), list(a21))
        if bad22:
            return Verdict.failed(
                "star", witness=("A22", bad22[0]), detail=f"annihilating corner element {bad22[0]!r}"
            )
        return Verdict.passed("star")

    if which == "triangular":
        if ctx.corners["21"].dim == 0:
            return Verdict.passed("triangular")
        return Verdict.failed(
            "triangular",
            witness=a21[0],
            detail=f"A21 has dimension {ctx.corners['21'].dim}",
        )

    if which in ("ideal11", "ideal22"):
        key = "11" if which == "ideal11" else "22"
        corner = ctx.corners[key]
        ideal = commutator_ideal(alg, corner)
        if subspace_equal(ideal, corner):
            return Verdict.passed(which)
        return Verdict.failed(
            which,
            witness=(ideal.dim, corner.dim),
            detail=f"commutator ideal has dim {ideal.dim} < corner dim {corner.dim}",
        )

    if which == "zero_morphism":
        return _check_zero_morphism(alg, ctx)

    if which == "orthogonality":
        for m in a12:
            for n in a21:
                if not (m * n).is_zero():
                    return Verdict.failed(
                        "orthogonality", witness=(m, n), detail=f"({m!r})*({n!r}) != 0"
                    )
                if not (n * m).is_zero():
                    return Verdict.failed(
                        "orthogonality", witness=(n, m), detail=f"({n!r})*({m!r}) != 0"
                    )
        return Verdict.passed("orthogonality")

    # faithful, interpreted on the corner A12
    bad_left = _corner_annihilator(alg, ctx, "11", [], list(a12))
    if bad_left:
        return Verdict.failed(
            "faithful",
            witness=("A11", bad_left[0]),
            detail=f"{bad_left[0]!r} kills A12 from the left",
        )
    bad_right = _corner_annihilator(alg, ctx, "22", list(a12), [])
    if bad_right:
        return Verdict.failed(
            "faithful",
            witness=("A22", bad_right[0]),
            detail=f"{bad_right[0]!r} kills A12 from the right",
        )
    return Verdict.passed("faithful")


def _check_zero_morphism(alg, ctx):
    m_basis = ctx.corner_elements["12"]
    k = len(m_basis)
    if k == 0:
        return Verdict.passed("zero_morphism", detail="A12 = 0")
    s12 = ctx.corners["12"]
    d = alg.dim

    def corner_coords(elem):
        coords = s12.coordinates_of(elem.coords)
        if coords is None:
            raise RuntimeError("product left the A12 corner")
        return coords

    # unknown F[t][j] = coefficient of m_t in f(m_j), flattened t*k + j
    acc = EchelonAccumulator(k * k)

    def add_morphism_rows(acted):
        # acted[j] = corner coords of x acting on m_j; constraint per (j, t):
        # f(x.m_j) = x.f(m_j), i.e. sum_l acted[j][l] F[t][l] = sum_i acted[i][t] F[i][j]
        for j in range(k):
            for t in range(k):
                row = {}
                for l in range(k):
                    if acted[j][l]:
                        row[t * k + l] = row.get(t * k + l, 0) + acted[j][l]
                for i in range(k):
                    if acted[i][t]:
                        v = row.get(i * k + j, 0) - acted[i][t]
                        if v:
                            row[i * k + j] = v
                        else:
                            row.pop(i * k + j, None)
                if row:
                    acc.add_row(row)

    for a in ctx.corner_elements["11"]:
        add_morphism_rows([corner_coords(a * m) for m in m_basis])
    for b in ctx.corner_elements["22"]:
        add_morphism_rows([corner_coords(m * b) for m in m_basis])
    # annihilation against the sandwiched commutator spans
    left_span = _commutator_sandwich_span(alg, ctx, ctx.e, ctx.e)
    right_span = _commutator_sandwich_span(alg, ctx, ctx.e_prime, ctx.e_prime)
    for g in (alg.element(v) for v in left_span.basis):
        for j in range(k):
            prods = [(g * m_basis[i]).coords for i in range(k)]
            for s in range(d):
                row = {i * k + j: prods[i][s] for i in range(k) if prods[i][s]}
                if row:
                    acc.add_row(row)
    for h in (alg.element(v) for v in right_span.basis):
        for j in range(k):
            prods = [(m_basis[i] * h).coords for i in range(k)]
            for s in range(d):
                row = {i * k + j: prods[i][s] for i in range(k) if prods[i][s]}
                if row:
                    acc.add_row(row)
    kernel = acc.kernel_subspace()
    if kernel.dim == 0:
        return Verdict.passed("zero_morphism")
    flat = kernel.basis[0]
    witness = tuple(tuple(flat[t * k + j] for j in range(k)) for t in range(k))
    return Verdict.failed(
        "zero_morphism",
        witness=witness,
        detail=f"{kernel.dim}-dimensional space of admissible module morphisms",
    )
