"""Linear and bilinear maps into a bimodule, and their solution spaces.

The map kinds treated here are defined by identities: a biderivation obeys
the product rule in each slot, an antibiderivation the reversed product rule,
a Jordan biderivation the product rule for x o y = xy + yx (the polarized
form, equivalent over the rationals to the squared form), and the
f-biderivations the compatibility rule for a fixed multilinear polynomial f.
Each identity is multilinear in its arguments, so checking on basis tuples is
exact and complete, and the set of all maps satisfying it is the nullspace of
a finite linear system over Q.

`check_*` functions verify one given map exhaustively; `solve_space` builds
the constraint system row by row in a fixed order and returns the canonical
basis of its nullspace as a MapSpace.  Maps are vectorized row-major over
(first argument, second argument, target component).
"""

from __future__ import annotations

import os
from fractions import Fraction

from .algebra import Bimodule, Element, bracket
from .linalg import EchelonAccumulator, Subspace, as_rational
from .verdicts import Verdict

BILINEAR_KINDS = (
    "biderivation",
    "antibiderivation",
    "jordan_biderivation",
    "f_biderivation",
)
SOLVE_KINDS = BILINEAR_KINDS + ("f_derivation",)

DEFAULT_MAX_ROWS = 200_000
MAX_ROWS_ENV = "BIDERLAB_MAX_ROWS"


class SystemSizeError(ValueError):
    """Raised when a constraint system would exceed the configured row cap."""

    def __init__(self, rows, cols, max_rows):
        super().__init__(
            f"constraint system of {rows} rows x {cols} columns exceeds the "
            f"cap of {max_rows} rows (raise {MAX_ROWS_ENV} to override)"
        )
        self.rows = rows
        self.cols = cols
        self.max_rows = max_rows


def _effective_max_rows(max_rows):
    if max_rows is not None:
        return int(max_rows)
    return int(os.environ.get(MAX_ROWS_ENV, DEFAULT_MAX_ROWS))


class LinearMap:
    """A linear map from the algebra into a bimodule, stored by basis images."""

    __slots__ = ("alg", "module", "values")

    def __init__(self, alg, module, values):
        self.alg = alg
        self.module = module
        vals = tuple(tuple(as_rational(x) for x in v) for v in values)
        if len(vals) != alg.dim or any(len(v) != module.mdim for v in vals):
            raise ValueError("need one module vector of length mdim per basis element")
        self.values = vals

    @classmethod
    def zero(cls, alg, module):
        return cls(alg, module, [[0] * module.mdim for _ in range(alg.dim)])

    @classmethod
    def from_function(cls, alg, fn):
        """Build over the regular bimodule from an Element -> Element function."""
        module = Bimodule.regular(alg)
        return cls(alg, module, [fn(u).coords for u in alg.basis_elements()])

    def apply(self, x):
        if x.alg is not self.alg:
            raise ValueError("element from a different algebra")
        out = [Fraction(0)] * self.module.mdim
        for i, c in enumerate(x.coords):
            if c:
                for t in range(self.module.mdim):
                    if self.values[i][t]:
                        out[t] += c * self.values[i][t]
        return tuple(out)

    def vectorize(self):
        return tuple(x for v in self.values for x in v)

    @classmethod
    def devectorize(cls, alg, module, vec):
        mdim = module.mdim
        if len(vec) != alg.dim * mdim:
            raise ValueError("vector has wrong length")
        values = [vec[i * mdim : (i + 1) * mdim] for i in range(alg.dim)]
        return cls(alg, module, values)

    def is_zero(self):
        return all(x == 0 for v in self.values for x in v)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.alg is other.alg and self.module == other.module and self.values == other.values


class BilinearMap:
    """A bilinear map A x A -> M, stored as a d x d table of module vectors."""

    __slots__ = ("alg", "module", "values")

    def __init__(self, alg, module, values):
        self.alg = alg
        self.module = module
        vals = tuple(tuple(tuple(as_rational(x) for x in v) for v in row) for row in values)
        if len(vals) != alg.dim or any(
            len(row) != alg.dim or any(len(v) != module.mdim for v in row) for row in vals
        ):
            raise ValueError("values must be dim x dim vectors of length mdim")
        self.values = vals

    @classmethod
    def zero(cls, alg, module=None):
        module = module or Bimodule.regular(alg)
        z = [[[0] * module.mdim for _ in range(alg.dim)] for _ in range(alg.dim)]
        return cls(alg, module, z)

    @classmethod
    def from_function(cls, alg, fn, module=None):
        """Build from an (Element, Element) -> Element function over the
        regular bimodule."""
        module = module or Bimodule.regular(alg)
        if not module.is_regular:
            raise ValueError("from_function requires the regular bimodule")
        basis = alg.basis_elements()
        return cls(alg, module, [[fn(x, y).coords for y in basis] for x in basis])

    def eval_coords(self, xc, yc):
        out = [Fraction(0)] * self.module.mdim
        for i, a in enumerate(xc):
            if not a:
                continue
            for j, b in enumerate(yc):
                if not b:
                    continue
                s = a * b
                v = self.values[i][j]
                for t in range(self.module.mdim):
                    if v[t]:
                        out[t] += s * v[t]
        return tuple(out)

    def eval(self, x, y):
        if x.alg is not self.alg or y.alg is not self.alg:
            raise ValueError("elements from a different algebra")
        return self.eval_coords(x.coords, y.coords)

    def eval_element(self, x, y):
        """Evaluate and wrap as an algebra element (regular bimodule only)."""
        if not self.module.is_regular:
            raise ValueError("values live in a bimodule, not in the algebra")
        return Element(self.alg, self.eval(x, y))

    def vectorize(self):
        return tuple(x for row in self.values for v in row for x in v)

    @classmethod
    def devectorize(cls, alg, module, vec):
        d, mdim = alg.dim, module.mdim
        if len(vec) != d * d * mdim:
            raise ValueError("vector has wrong length")
        values = [
            [vec[(i * d + j) * mdim : (i * d + j + 1) * mdim] for j in range(d)]
            for i in range(d)
        ]
        return cls(alg, module, values)

    def is_zero(self):
        return all(x == 0 for row in self.values for v in row for x in v)

    def __add__(self, other):
        self._compat(other)
        return BilinearMap(
            self.alg,
            self.module,
            [
                [tuple(a + b for a, b in zip(v, w)) for v, w in zip(r1, r2)]
                for r1, r2 in zip(self.values, other.values)
            ],
        )

    def __sub__(self, other):
        self._compat(other)
        return BilinearMap(
            self.alg,
            self.module,
            [
                [tuple(a - b for a, b in zip(v, w)) for v, w in zip(r1, r2)]
                for r1, r2 in zip(self.values, other.values)
            ],
        )

    def __neg__(self):
        return BilinearMap(
            self.alg,
            self.module,
            [[tuple(-a for a in v) for v in row] for row in self.values],
        )

    def _compat(self, other):
        if not isinstance(other, BilinearMap):
            raise TypeError("expected a BilinearMap")
        if self.alg is not other.alg or self.module != other.module:
            raise ValueError("maps live over different algebras or bimodules")

    def __eq__(self, other):
        if not isinstance(other, BilinearMap):
            return NotImplemented
        return self.alg is other.alg and self.module == other.module and self.values == other.values


def eval_bilinear(bmap, x, y):
    """Value of the bilinear extension at (x, y), as a module vector."""
    return bmap.eval(x, y)


def commutator_map(alg):
    """(x, y) -> [x, y] over the regular bimodule."""
    return BilinearMap.from_function(alg, lambda x, y: bracket(x, y))


def extremal_map(alg, a):
    """(x, y) -> [x, [y, a]] over the regular bimodule."""
    return BilinearMap.from_function(alg, lambda x, y: bracket(x, bracket(y, a)))


# -- predicate checks ------------------------------------------------------------


def _poly_slot_sum(alg, module, poly, args, slot_value):
    """Sum over slots i of f(args with slot i replaced by the module vector
    slot_value(i)), evaluated through the bimodule actions."""
    mdim = module.mdim
    total = [Fraction(0)] * mdim
    for perm, coeff in poly.terms.items():
        for pos in range(poly.n):
            i = perm[pos]
            v = slot_value(i)
            prefix = None
            for q in range(pos):
                prefix = args[perm[q]] if prefix is None else prefix * args[perm[q]]
            suffix = None
            for q in range(pos + 1, poly.n):
                suffix = args[perm[q]] if suffix is None else suffix * args[perm[q]]
            w = v
            if prefix is not None:
                w = module.act_left(prefix.coords, w)
            if suffix is not None:
                w = module.act_right(w, suffix.coords)
            for t in range(mdim):
                if w[t]:
                    total[t] += coeff * w[t]
    return tuple(total)


def _vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def check_bilinear(alg, module, bmap, kind, poly=None):
    """Exhaustively verify the defining identity of `kind` on basis tuples.

    Returns a verdict whose witness, on failure, is the offending tuple of
    basis indices together with which slot's identity broke.
    """
    if kind not in BILINEAR_KINDS:
        raise ValueError(f"unknown bilinear kind {kind!r}")
    if bmap.alg is not alg or bmap.module != module:
        raise ValueError("map does not live over the given algebra and bimodule")
    basis = alg.basis_elements()
    d = alg.dim
    label = kind if kind != "f_biderivation" else f"f_biderivation({poly!r})"

    if kind == "f_biderivation":
        if poly is None:
            raise ValueError("f_biderivation requires a polynomial")
        n = poly.n
        for tup in _tuples(d, n):
            args = [basis[t] for t in tup]
            w = poly.evaluate(alg, args)
            for z in range(d):
                lhs1 = bmap.eval(w, basis[z])
                rhs1 = _poly_slot_sum(
                    alg, module, poly, args, lambda i: bmap.values[tup[i]][z]
                )
                if lhs1 != rhs1:
                    return Verdict.failed(label, witness=("first", tup, z))
                lhs2 = bmap.eval(basis[z], w)
                rhs2 = _poly_slot_sum(
                    alg, module, poly, args, lambda i: bmap.values[z][tup[i]]
                )
                if lhs2 != rhs2:
                    return Verdict.failed(label, witness=("second", tup, z))
        return Verdict.passed(label)

    mul = alg.multiply_coords
    act_l, act_r = module.act_left, module.act_right

    for i in range(d):
        ui = basis[i]
        for j in range(d):
            uj = basis[j]
            prod = (ui * uj).coords
            circ_prod = tuple(a + b for a, b in zip(prod, (uj * ui).coords))
            for k in range(d):
                uk = basis[k]
                b_ik, b_jk = bmap.values[i][k], bmap.values[j][k]
                b_ki, b_kj = bmap.values[k][i], bmap.values[k][j]
                if kind == "biderivation":
                    lhs1 = bmap.eval_coords(prod, uk.coords)
                    rhs1 = _vec_add(act_r(b_ik, uj.coords), act_l(ui.coords, b_jk))
                    lhs2 = bmap.eval_coords(uk.coords, prod)
                    rhs2 = _vec_add(act_r(b_ki, uj.coords), act_l(ui.coords, b_kj))
                elif kind == "antibiderivation":
                    lhs1 = bmap.eval_coords(prod, uk.coords)
                    rhs1 = _vec_add(act_r(b_jk, ui.coords), act_l(uj.coords, b_ik))
                    lhs2 = bmap.eval_coords(uk.coords, prod)
                    rhs2 = _vec_add(act_r(b_kj, ui.coords), act_l(uj.coords, b_ki))
                else:  # jordan_biderivation, polarized: B(x o y, z) = B(x,z) o y + x o B(y,z)
                    lhs1 = bmap.eval_coords(circ_prod, uk.coords)
                    rhs1 = _vec_add(
                        _vec_add(act_r(b_ik, uj.coords), act_l(uj.coords, b_ik)),
                        _vec_add(act_l(ui.coords, b_jk), act_r(b_jk, ui.coords)),
                    )
                    lhs2 = bmap.eval_coords(uk.coords, circ_prod)
                    rhs2 = _vec_add(
                        _vec_add(act_r(b_ki, uj.coords), act_l(uj.coords, b_ki)),
                        _vec_add(act_l(ui.coords, b_kj), act_r(b_kj, ui.coords)),
                    )
                if lhs1 != rhs1:
                    return Verdict.failed(label, witness=("first", (i, j, k)))
                if lhs2 != rhs2:
                    return Verdict.failed(label, witness=("second", (i, j, k)))
    return Verdict.passed(label)


def check_linear(alg, module, lmap, poly):
    """Verify the f-derivation identity for `lmap` on all basis n-tuples."""
    if lmap.alg is not alg or lmap.module != module:
        raise ValueError("map does not live over the given algebra and bimodule")
    basis = alg.basis_elements()
    d = alg.dim
    label = f"f_derivation({poly!r})"
    for tup in _tuples(d, poly.n):
        args = [basis[t] for t in tup]
        lhs = lmap.apply(poly.evaluate(alg, args))
        rhs = _poly_slot_sum(alg, module, poly, args, lambda i: lmap.values[tup[i]])
        if lhs != rhs:
            return Verdict.failed(label, witness=tup)
    return Verdict.passed(label)


def _tuples(d, n):
    if n == 0:
        yield ()
        return
    for head in range(d):
        for rest in _tuples(d, n - 1):
            yield (head,) + rest


# -- extremal witnesses ------------------------------------------------------------


class ExtremalWitness:
    """Outcome of the extremal-form solve: status in {extremal, zero,
    not_extremal}; witness holds the element a when status == 'extremal'."""

    __slots__ = ("status", "witness")

    def __init__(self, status, witness=None):
        self.status = status
        self.witness = witness

    def __repr__(self):
        if self.status == "extremal":
            return f"ExtremalWitness(extremal, a={self.witness!r})"
        return f"ExtremalWitness({self.status})"


def find_extremal_witness(alg, bmap):
    """Search for a with bmap(x, y) = [x, [y, a]], [[A,A], a] = 0, a not central.

    The defining relation and the bracket-annihilation condition together are
    an affine linear system in a; if it is solvable and the map is nonzero,
    any solution is automatically noncentral (a central a would force the map
    to vanish), which is verified explicitly anyway.
    """
    if not bmap.module.is_regular:
        raise ValueError("extremal analysis needs a map into the algebra itself")
    if bmap.is_zero():
        return ExtremalWitness("zero")
    d = alg.dim
    basis = alg.basis_elements()
    rhs_col = d
    acc = EchelonAccumulator(d + 1)
    doubles = [
        [[bracket(basis[i], bracket(basis[j], basis[t])).coords for t in range(d)] for j in range(d)]
        for i in range(d)
    ]
    for i in range(d):
        for j in range(d):
            target = bmap.values[i][j]
            for s in range(d):
                row = {}
                for t in range(d):
                    c = doubles[i][j][t][s]
                    if c:
                        row[t] = c
                if target[s]:
                    row[rhs_col] = -target[s]
                if row:
                    acc.add_row(row)
    for i in range(d):
        for j in range(d):
            bij = bracket(basis[i], basis[j])
            for s in range(d):
                row = {}
                for t in range(d):
                    c = bracket(bij, basis[t]).coords[s]
                    if c:
                        row[t] = c
                if row:
                    acc.add_row(row)
    vectors = acc.kernel_vectors()
    particular = None
    homogeneous = []
    for v in vectors:
        if v[rhs_col] == 1:
            particular = v[:d]
        elif v[rhs_col] == 0:
            homogeneous.append(v[:d])
    if particular is None:
        return ExtremalWitness("not_extremal")
    center = alg.center()
    candidates = [particular] + [
        tuple(p + h for p, h in zip(particular, hv)) for hv in homogeneous
    ]
    for cand in candidates:
        if not center.contains_vector(cand):
            return ExtremalWitness("extremal", alg.element(cand))
    return ExtremalWitness("not_extremal")


# -- solution spaces ------------------------------------------------------------


class MapSpace:
    """Canonical solution space of one map-kind identity system."""

    __slots__ = ("kind", "poly", "alg", "module", "space", "is_bilinear")

    def __init__(self, kind, poly, alg, module, space, is_bilinear):
        self.kind = kind
        self.poly = poly
        self.alg = alg
        self.module = module
        self.space = space
        self.is_bilinear = is_bilinear

    @property
    def dim(self):
        return self.space.dim

    def basis_maps(self):
        make = BilinearMap.devectorize if self.is_bilinear else LinearMap.devectorize
        return [make(self.alg, self.module, v) for v in self.space.basis]

    def contains_map(self, m):
        return self.space.contains_vector(m.vectorize())

    def __repr__(self):
        return f"MapSpace({self.kind}, dim={self.dim})"


def solve_space(alg, module, kind, poly=None, max_rows=None):
    """Compute all maps of the given kind as the nullspace of the identity
    system, one scalar row per (basis tuple, target component).

    Rows are assembled in lexicographic order over basis tuples and then
    target components (first-slot identity before second-slot identity); the
    returned basis is canonical, so equal spaces compare equal exactly.
    """
    if kind not in SOLVE_KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {SOLVE_KINDS}")
    d, mdim = alg.dim, module.mdim
    cap = _effective_max_rows(max_rows)

    if kind == "f_derivation":
        if poly is None:
            raise ValueError("f_derivation requires a polynomial")
        nominal = d**poly.n * mdim
        if nominal > cap:
            raise SystemSizeError(nominal, d * mdim, cap)
        acc = EchelonAccumulator(d * mdim)
        _assemble_f_linear(alg, module, poly, acc)
        return MapSpace(kind, poly, alg, module, acc.kernel_subspace(), False)

    if kind == "f_biderivation":
        if poly is None:
            raise ValueError("f_biderivation requires a polynomial")
        nominal = 2 * d ** (poly.n + 1) * mdim
        if nominal > cap:
            raise SystemSizeError(nominal, d * d * mdim, cap)
        acc = EchelonAccumulator(d * d * mdim)
        _assemble_f_bilinear(alg, module, poly, acc)
        return MapSpace(kind, poly, alg, module, acc.kernel_subspace(), True)

    nominal = 2 * d**3 * mdim
    if nominal > cap:
        raise SystemSizeError(nominal, d * d * mdim, cap)
    acc = EchelonAccumulator(d * d * mdim)
    _assemble_product_rule(alg, module, kind, acc)
    return MapSpace(kind, None, alg, module, acc.kernel_subspace(), True)


def _action_rows(mat):
    return [mat.row(s) for s in range(mat.rows)]


def _assemble_product_rule(alg, module, kind, acc):
    d, mdim = alg.dim, module.mdim
    left = [_action_rows(m) for m in module.left]
    right = [_action_rows(m) for m in module.right]
    if kind == "jordan_biderivation":
        op = [
            [
                tuple(left[i][s][t] + right[i][s][t] for t in range(mdim))
                for s in range(mdim)
            ]
            for i in range(d)
        ]
    else:
        op = None

    def var(i, j, t):
        return (i * d + j) * mdim + t

    def emit(lhs_coeffs, lhs_pair, term1, term2):
        # lhs_pair: (k, None) means unknowns B(l, k); (None, k) means B(k, l).
        # term = (matrix_rows, pair): matrix applied to the unknown B(pair).
        k1, k2 = lhs_pair
        for s in range(mdim):
            row = {}
            for l, c in enumerate(lhs_coeffs):
                if c:
                    key = var(l, k1, s) if k1 is not None else var(k2, l, s)
                    row[key] = row.get(key, 0) + c
            for rows_m, (p, q) in (term1, term2):
                for t in range(mdim):
                    c = rows_m[s][t]
                    if c:
                        key = var(p, q, t)
                        v = row.get(key, 0) - c
                        if v:
                            row[key] = v
                        else:
                            row.pop(key, None)
            if row:
                acc.add_row(row)

    def lhs_coeffs(i, j):
        prod = alg.table[i][j]
        if kind == "jordan_biderivation":
            return tuple(a + b for a, b in zip(prod, alg.table[j][i]))
        return prod

    for i in range(d):
        for j in range(d):
            lhs = lhs_coeffs(i, j)
            for k in range(d):
                if kind == "biderivation":
                    t1, t2 = (right[j], (i, k)), (left[i], (j, k))
                elif kind == "antibiderivation":
                    t1, t2 = (right[i], (j, k)), (left[j], (i, k))
                else:
                    t1, t2 = (op[j], (i, k)), (op[i], (j, k))
                emit(lhs, (k, None), t1, t2)
    for i in range(d):
        for j in range(d):
            lhs = lhs_coeffs(i, j)
            for k in range(d):
                if kind == "biderivation":
                    t1, t2 = (right[j], (k, i)), (left[i], (k, j))
                elif kind == "antibiderivation":
                    t1, t2 = (right[i], (k, j)), (left[j], (k, i))
                else:
                    t1, t2 = (op[j], (k, i)), (op[i], (k, j))
                emit(lhs, (None, k), t1, t2)


def _poly_term_matrices(alg, module, poly, args):
    """For one argument tuple: the matrices of 'coefficient times prefix-left,
    suffix-right action' per (term, slot), tagged by the slot's basis index."""
    out = []
    for perm, coeff in poly.terms.items():
        for pos in range(poly.n):
            prefix = None
            for q in range(pos):
                prefix = args[perm[q]] if prefix is None else prefix * args[perm[q]]
            suffix = None
            for q in range(pos + 1, poly.n):
                suffix = args[perm[q]] if suffix is None else suffix * args[perm[q]]
            mat = None
            if prefix is not None:
                mat = module.left_matrix(prefix.coords)
            if suffix is not None:
                rm = module.right_matrix(suffix.coords)
                mat = rm if mat is None else rm @ mat
            rows = _action_rows(mat) if mat is not None else None
            out.append((perm[pos], coeff, rows))
    return out


def _assemble_f_bilinear(alg, module, poly, acc):
    d, mdim = alg.dim, module.mdim
    basis = alg.basis_elements()

    def var(i, j, t):
        return (i * d + j) * mdim + t

    prepared = []
    for tup in _tuples(d, poly.n):
        args = [basis[t] for t in tup]
        w = poly.evaluate(alg, args).coords
        terms = _poly_term_matrices(alg, module, poly, args)
        prepared.append((tup, w, terms))

    for tup, w, terms in prepared:
        for z in range(d):
            for s in range(mdim):
                row = {}
                for l, c in enumerate(w):
                    if c:
                        row[var(l, z, s)] = row.get(var(l, z, s), 0) + c
                for arg_i, coeff, rows_m in terms:
                    bi = tup[arg_i]
                    if rows_m is None:
                        key = var(bi, z, s)
                        v = row.get(key, 0) - coeff
                        if v:
                            row[key] = v
                        else:
                            row.pop(key, None)
                    else:
                        for t in range(mdim):
                            c = rows_m[s][t]
                            if c:
                                key = var(bi, z, t)
                                v = row.get(key, 0) - coeff * c
                                if v:
                                    row[key] = v
                                else:
                                    row.pop(key, None)
                if row:
                    acc.add_row(row)
    for tup, w, terms in prepared:
        for z in range(d):
            for s in range(mdim):
                row = {}
                for l, c in enumerate(w):
                    if c:
                        row[var(z, l, s)] = row.get(var(z, l, s), 0) + c
                for arg_i, coeff, rows_m in terms:
                    bi = tup[arg_i]
                    if rows_m is None:
                        key = var(z, bi, s)
                        v = row.get(key, 0) - coeff
                        if v:
                            row[key] = v
                        else:
                            row.pop(key, None)
                    else:
                        for t in range(mdim):
                            c = rows_m[s][t]
                            if c:
                                key = var(z, bi, t)
                                v = row.get(key, 0) - coeff * c
                                if v:
                                    row[key] = v
                                else:
                                    row.pop(key, None)
                if row:
                    acc.add_row(row)


def _assemble_f_linear(alg, module, poly, acc):
    d, mdim = alg.dim, module.mdim
    basis = alg.basis_elements()

    def var(i, t):
        return i * mdim + t

    for tup in _tuples(d, poly.n):
        args = [basis[t] for t in tup]
        w = poly.evaluate(alg, args).coords
        terms = _poly_term_matrices(alg, module, poly, args)
        for s in range(mdim):
            row = {}
            for l, c in enumerate(w):
                if c:
                    row[var(l, s)] = row.get(var(l, s), 0) + c
            for arg_i, coeff, rows_m in terms:
                bi = tup[arg_i]
                if rows_m is None:
                    key = var(bi, s)
                    v = row.get(key, 0) - coeff
                    if v:
                        row[key] = v
                    else:
                        row.pop(key, None)
                else:
                    for t in range(mdim):
                        c = rows_m[s][t]
                        if c:
                            key = var(bi, t)
                            v = row.get(key, 0) - coeff * c
                            if v:
                                row[key] = v
                            else:
                                row.pop(key, None)
            if row:
                acc.add_row(row)


# -- identity checks for Jordan biderivations --------------------------------------


def check_value_commutes_with_bracket(alg, bmap, rng, samples=200):
    """[[x, y], J(x, y)] = 0 on `samples` pseudorandom element pairs."""
    for idx in range(samples):
        x, y = rng.element_pair(alg)
        value = bmap.eval_element(x, y)
        if not bracket(bracket(x, y), value).is_zero():
            return Verdict.failed(
                "value_commutes_with_bracket",
                witness=(idx, x, y),
                detail=f"sample {idx}: [[x,y],J(x,y)] != 0",
            )
    return Verdict.passed("value_commutes_with_bracket", detail=f"{samples} samples")


def check_sandwich_expansion(alg, bmap, rng, samples=200):
    """J(xyx, z) = J(x,z)yx + xJ(y,z)x + xyJ(x,z) on pseudorandom triples."""
    for idx in range(samples):
        x, y = rng.element_pair(alg)
        z = rng.element(alg)
        lhs = bmap.eval_element(x * y * x, z)
        rhs = bmap.eval_element(x, z) * y * x + x * bmap.eval_element(y, z) * x + x * y * bmap.eval_element(x, z)
        if lhs != rhs:
            return Verdict.failed(
                "sandwich_expansion", witness=(idx, x, y, z), detail=f"sample {idx}"
            )
    return Verdict.passed("sandwich_expansion", detail=f"{samples} samples")


def check_symmetrized_triple_expansion(alg, bmap):
    """J(xyz + zyx, t) expands through the slots; exhaustive on basis quadruples."""
    basis = alg.basis_elements()
    for xi, x in enumerate(basis):
        for yi, y in enumerate(basis):
            for zi, z in enumerate(basis):
                xyz = x * y * z + z * y * x
                for ti, t in enumerate(basis):
                    lhs = bmap.eval_element(xyz, t)
                    rhs = (
                        bmap.eval_element(x, t) * y * z
                        + x * bmap.eval_element(y, t) * z
                        + x * y * bmap.eval_element(z, t)
                        + bmap.eval_element(z, t) * y * x
                        + z * bmap.eval_element(y, t) * x
                        + z * y * bmap.eval_element(x, t)
                    )
                    if lhs != rhs:
                        return Verdict.failed(
                            "symmetrized_triple_expansion", witness=(xi, yi, zi, ti)
                        )
    return Verdict.passed("symmetrized_triple_expansion")
