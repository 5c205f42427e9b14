"""Finite-dimensional associative unital algebras over F_p.

Algebras are given by structure constants on a fixed basis.  Quiver
presentations are compiled down to structure constants by linear algebra
on the path space truncated at the nilpotency bound (no Groebner
machinery; desk inputs keep the bound at 6 or below).

Path convention, fixed globally: a path ``(a1, a2, ...)`` traverses ``a1``
first, and the algebra product ``x * y`` is "x then y" (concatenation of
tuples when the endpoints compose, zero otherwise).  A trivial path sits
at its vertex; the unit is the sum of all trivial paths.  Left modules
are then representations in which the arrow ``a: i -> j`` maps the weight
space of ``j`` into the weight space of ``i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import sympy

from ._backend import rref_inplace
from .errors import (
    ContractViolation,
    GuardError,
    InternalError,
    NonAdmissibleError,
    SplitRequiredError,
)
from .exactla import (
    DEFAULT_PRIME,
    DTYPE,
    FieldMatrix,
    check_prime,
    quotient_maps,
    subspace_contains,
)

DEFAULT_SEED = 0xD7

_X = sympy.symbols("x")


# ----------------------------------------------------------------------
# quivers and presentations


@dataclass(frozen=True)
class Quiver:
    """Directed multigraph with labeled arrows (vertices are 0-based)."""

    vertex_count: int
    arrows: tuple  # of (source, target, label)

    def __post_init__(self):
        labels = set()
        for src, tgt, label in self.arrows:
            if not (0 <= src < self.vertex_count and 0 <= tgt < self.vertex_count):
                raise ContractViolation(f"arrow {label}: endpoint out of range")
            if label in labels:
                raise ContractViolation(f"duplicate arrow label {label!r}")
            labels.add(label)

    def arrow_index(self, label: str) -> int:
        for idx, (_, _, lab) in enumerate(self.arrows):
            if lab == label:
                return idx
        raise ContractViolation(f"unknown arrow label {label!r}")

    def is_acyclic(self) -> bool:
        adj = {v: [] for v in range(self.vertex_count)}
        for src, tgt, _ in self.arrows:
            adj[src].append(tgt)
        state = {}

        def visit(v):
            state[v] = 1
            for w in adj[v]:
                if state.get(w) == 1:
                    return False
                if state.get(w) is None and not visit(w):
                    return False
            state[v] = 2
            return True

        return all(state.get(v) == 2 or visit(v) for v in range(self.vertex_count))

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return False
        adj = {v: set() for v in range(self.vertex_count)}
        for src, tgt, _ in self.arrows:
            adj[src].add(tgt)
            adj[tgt].add(src)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count


@dataclass(frozen=True)
class QuiverPresentation:
    """Quiver plus relations (linear combinations of parallel paths) and a
    nilpotency bound N: all length-N paths must die in the quotient."""

    quiver: Quiver
    relations: tuple  # of relation; relation = tuple of (coeff, arrow-id tuple)
    nilpotency_bound: int

    def __post_init__(self):
        if self.nilpotency_bound < 2:
            raise ContractViolation("nilpotency bound must be at least 2")


class _Path:
    """Internal path record: source vertex plus arrow-id tuple."""

    __slots__ = ("source", "arrows", "target")

    def __init__(self, source, arrows, target):
        self.source = source
        self.arrows = arrows
        self.target = target

    def key(self):
        return (self.source, self.arrows)


def _enumerate_paths(quiver: Quiver, max_len: int):
    by_len = [[_Path(v, (), v) for v in range(quiver.vertex_count)]]
    for length in range(1, max_len + 1):
        layer = []
        for path in by_len[length - 1]:
            for aid, (src, tgt, _) in enumerate(quiver.arrows):
                if src == path.target:
                    layer.append(_Path(path.source, path.arrows + (aid,), tgt))
        by_len.append(layer)
        if not layer:
            break
    return [p for layer in by_len for p in layer]


def _path_label(quiver: Quiver, path: _Path) -> str:
    if not path.arrows:
        return f"e{path.source + 1}"
    return "*".join(quiver.arrows[a][2] for a in path.arrows)


def build_path_algebra_quotient(
    pres: QuiverPresentation, p: int = DEFAULT_PRIME
) -> "StructureAlgebra":
    """Compile ``kQ / (relations, paths of length >= N)`` to structure
    constants.

    Raises :class:`NonAdmissibleError` when the relation closure fails to
    kill some length-N path, i.e. the bound does not certify a
    finite-dimensional quotient.
    """
    check_prime(p)
    quiver = pres.quiver
    n_bound = pres.nilpotency_bound
    paths = _enumerate_paths(quiver, n_bound)
    index = {path.key(): i for i, path in enumerate(paths)}
    # Reduction order: longest paths first, so pivots eliminate long paths
    # and normal forms are supported on short ones.
    order = sorted(range(len(paths)), key=lambda i: (-len(paths[i].arrows), paths[i].key()))
    pos = {orig: red for red, orig in enumerate(order)}
    npaths = len(paths)

    def relation_vector(rel):
        vec = np.zeros(npaths, dtype=DTYPE)
        src = tgt = None
        for coeff, arrows in rel:
            if len(arrows) < 2:
                raise ContractViolation("relation paths must have length >= 2")
            if len(arrows) > n_bound:
                raise ContractViolation("relation path exceeds the nilpotency bound")
            s = quiver.arrows[arrows[0]][0]
            walk = s
            for aid in arrows:
                asrc, atgt, lab = quiver.arrows[aid]
                if asrc != walk:
                    raise ContractViolation(f"relation path not composable at {lab!r}")
                walk = atgt
            if src is None:
                src, tgt = s, walk
            elif (src, tgt) != (s, walk):
                raise ContractViolation("relation terms must share source and target")
            vec[pos[index[(s, tuple(arrows))]]] += coeff % p
        return vec % p

    seeds = [relation_vector(rel) for rel in pres.relations]

    def closure(vectors):
        # span of p * r * q for paths p, q, truncated at total length N
        rows = []
        mat = np.zeros((0, npaths), dtype=DTYPE)
        rank = 0
        queue = list(vectors)
        while queue:
            vec = queue.pop()
            if not vec.any():
                continue
            cand = np.vstack([mat, vec[None, :]])
            work = cand.copy()
            new_rank, _ = rref_inplace(work, p)
            if new_rank == rank:
                continue
            mat = work[:new_rank]
            rank = new_rank
            rows.append(vec)
            for aid, (asrc, atgt, _) in enumerate(quiver.arrows):
                for prepend in (True, False):
                    out = np.zeros(npaths, dtype=DTYPE)
                    ok = True
                    for red_idx in np.nonzero(vec)[0]:
                        path = paths[order[red_idx]]
                        if len(path.arrows) + 1 > n_bound:
                            ok = False
                            break
                        if prepend:
                            if atgt != path.source:
                                continue
                            key = (asrc, (aid,) + path.arrows)
                        else:
                            if path.target != asrc:
                                continue
                            key = (path.source, path.arrows + (aid,))
                        out[pos[index[key]]] = vec[red_idx]
                    if ok and out.any():
                        queue.append(out)
        return mat

    ideal_rref = closure(seeds)

    def normal_form(vec):
        vec = vec % p
        for row in ideal_rref:
            lead = int(np.nonzero(row)[0][0])
            if vec[lead]:
                vec = (vec - vec[lead] * row) % p
        return vec

    for i, path in enumerate(paths):
        if len(path.arrows) == n_bound:
            probe = np.zeros(npaths, dtype=DTYPE)
            probe[pos[i]] = 1
            if normal_form(probe).any():
                raise NonAdmissibleError(
                    f"length-{n_bound} path {_path_label(quiver, path)!r} survives the "
                    "relation closure; quotient is not certified finite-dimensional"
                )

    pivots = set()
    for row in ideal_rref:
        pivots.add(int(np.nonzero(row)[0][0]))
    surviving = [i for i in range(npaths) if pos[i] not in pivots and len(paths[i].arrows) < n_bound]
    surviving.sort(key=lambda i: (len(paths[i].arrows), paths[i].key()))
    basis_pos = {pos[i]: k for k, i in enumerate(surviving)}
    dim = len(surviving)

    def to_basis(vec):
        out = np.zeros(dim, dtype=DTYPE)
        for red_idx in np.nonzero(vec)[0]:
            out[basis_pos[red_idx]] = vec[red_idx]
        return out

    # Transition table: normal form of (surviving path) * (arrow).
    append_nf = {}
    for k, i in enumerate(surviving):
        path = paths[i]
        for aid, (asrc, atgt, _) in enumerate(quiver.arrows):
            if path.target != asrc:
                append_nf[(k, aid)] = np.zeros(dim, dtype=DTYPE)
                continue
            key = (path.source, path.arrows + (aid,))
            probe = np.zeros(npaths, dtype=DTYPE)
            probe[pos[index[key]]] = 1
            append_nf[(k, aid)] = to_basis(normal_form(probe))

    sc = np.zeros((dim, dim, dim), dtype=DTYPE)
    for ku, iu in enumerate(surviving):
        for kv, iv in enumerate(surviving):
            pv = paths[iv]
            if not pv.arrows:
                # right multiplication by a trivial path
                sc[ku, kv] = 0
                if paths[iu].target == pv.source:
                    sc[ku, kv, ku] = 1
                continue
            if paths[iu].target != pv.source:
                continue
            acc = np.zeros(dim, dtype=DTYPE)
            acc[ku] = 1
            for aid in pv.arrows:
                nxt = np.zeros(dim, dtype=DTYPE)
                for t in np.nonzero(acc)[0]:
                    nxt = (nxt + acc[t] * append_nf[(int(t), aid)]) % p
                acc = nxt
            sc[ku, kv] = acc

    unit = np.zeros(dim, dtype=DTYPE)
    for k, i in enumerate(surviving):
        if not paths[i].arrows:
            unit[k] = 1
    labels = tuple(_path_label(quiver, paths[i]) for i in surviving)
    return StructureAlgebra(sc, unit, p=p, labels=labels)


# ----------------------------------------------------------------------
# structure-constant algebras


class StructureAlgebra:
    """Associative unital algebra on a based vector space over F_p.

    ``sc[i, j]`` is the coordinate vector of ``b_i * b_j``.  Associativity
    and the unit law are verified on construction.
    """

    def __init__(self, sc, unit, p: int = DEFAULT_PRIME, labels=None, check: bool = True):
        check_prime(p)
        sc = np.array(sc, dtype=DTYPE) % p
        unit = np.array(unit, dtype=DTYPE) % p
        dim = sc.shape[0]
        if sc.shape != (dim, dim, dim) or unit.shape != (dim,):
            raise ContractViolation("structure constants must be dim^3 with a dim unit")
        sc.flags.writeable = False
        unit.flags.writeable = False
        self.sc = sc
        self.unit = unit
        self.p = int(p)
        self.dim = dim
        self.labels = tuple(labels) if labels else tuple(f"b{i}" for i in range(dim))
        self._opposite_of = None
        if check:
            self._validate()

    def _validate(self):
        sc, p = self.sc, self.p
        lhs = np.einsum("ijm,mkl->ijkl", sc, sc) % p
        rhs = np.einsum("jkm,iml->ijkl", sc, sc) % p
        if (lhs != rhs).any():
            i, j, k = np.argwhere((lhs != rhs).any(axis=3))[0]
            raise ContractViolation(
                "associativity fails on basis triple "
                f"({self.labels[i]}, {self.labels[j]}, {self.labels[k]})"
            )
        ident = np.eye(self.dim, dtype=DTYPE)
        if (self.left_action(self.unit) != ident).any() or (
            self.right_action(self.unit) != ident
        ).any():
            raise ContractViolation("unit vector is not a two-sided identity")

    # -- elementwise operations -----------------------------------------

    @cached_property
    def left_tensor(self):
        # left_tensor[i] = matrix of x -> b_i * x
        t = np.ascontiguousarray(self.sc.transpose(0, 2, 1))
        t.flags.writeable = False
        return t

    @cached_property
    def right_tensor(self):
        # right_tensor[j] = matrix of x -> x * b_j
        t = np.ascontiguousarray(self.sc.transpose(1, 2, 0))
        t.flags.writeable = False
        return t

    def left_action(self, vec):
        return np.tensordot(vec % self.p, self.left_tensor, axes=(0, 0)) % self.p

    def right_action(self, vec):
        return np.tensordot(vec % self.p, self.right_tensor, axes=(0, 0)) % self.p

    def mul(self, x, y):
        return self.left_action(x) @ (np.asarray(y, dtype=DTYPE) % self.p) % self.p

    def basis_vector(self, i):
        vec = np.zeros(self.dim, dtype=DTYPE)
        vec[i] = 1
        return vec

    def __repr__(self):
        return f"StructureAlgebra(dim={self.dim}, p={self.p})"

    # -- radical and semisimple quotient ---------------------------------

    def _radical_guard(self):
        if self.p <= self.dim:
            raise GuardError(
                f"trace-form radical requires prime > dimension (p={self.p}, dim={self.dim})"
            )

    @cached_property
    def radical(self) -> "AlgebraIdeal":
        return radical_basis(self)

    @cached_property
    def radical_power_dims(self):
        """Dimensions of rad, rad^2, ... down to zero."""
        dims = []
        current = self.radical.basis
        while current.cols:
            dims.append(current.cols)
            cols = []
            for i in range(current.cols):
                prod = self.left_action(current.col(i)) @ self.radical.basis.arr % self.p
                cols.append(prod)
            nxt = FieldMatrix._wrap(np.hstack(cols) if cols else
                                    np.zeros((self.dim, 0), dtype=DTYPE), self.p)
            current = nxt.column_space()
            if len(dims) > self.dim:
                raise InternalError("radical fails to be nilpotent")
        return tuple(dims)

    def radical_power(self, k: int) -> FieldMatrix:
        current = self.radical.basis
        for _ in range(k - 1):
            if not current.cols:
                break
            cols = [
                self.left_action(self.radical.basis.col(i)) @ current.arr % self.p
                for i in range(self.radical.basis.cols)
            ]
            current = FieldMatrix._wrap(np.hstack(cols), self.p).column_space()
        return current

    @cached_property
    def semisimple_quotient(self):
        """``(S, proj, sect)`` with S = A/rad A presented on a complement."""
        rad = self.radical.basis
        proj, sect = quotient_maps(rad)
        q = proj.rows
        sc = np.zeros((q, q, q), dtype=DTYPE)
        for i in range(q):
            for j in range(q):
                prod = self.mul(sect.col(i), sect.col(j))
                sc[i, j] = proj.arr @ prod % self.p
        unit = proj.arr @ self.unit % self.p
        s_alg = StructureAlgebra(sc, unit, p=self.p, check=False)
        return s_alg, proj, sect

    @cached_property
    def center_basis(self) -> FieldMatrix:
        cols = [
            ((self.left_tensor[i] - self.right_tensor[i]) % self.p).reshape(-1)
            for i in range(self.dim)
        ]
        mat = FieldMatrix._wrap(np.ascontiguousarray(np.array(cols).T), self.p)
        return mat.nullspace()

    def is_commutative(self) -> bool:
        return bool((self.sc == self.sc.transpose(1, 0, 2)).all())

    @cached_property
    def split_basic(self):
        return _split_basic_flags(self)

    @cached_property
    def primitive_idempotents_cached(self):
        return primitive_idempotents(self)

    @cached_property
    def opposite(self) -> "StructureAlgebra":
        if self._opposite_of is not None:
            return self._opposite_of
        op = StructureAlgebra(
            np.ascontiguousarray(self.sc.transpose(1, 0, 2)),
            self.unit,
            p=self.p,
            labels=self.labels,
            check=False,
        )
        op._opposite_of = self
        op.__dict__["opposite"] = self
        return op

    @cached_property
    def generators(self):
        """Indices of a small generating set of basis elements (greedy)."""
        span = FieldMatrix.from_columns([self.unit], self.dim, self.p)
        gens = []

        def close(mat):
            while True:
                cols = [mat.arr]
                for i in range(mat.cols):
                    cols.append(self.left_action(mat.col(i)) @ mat.arr % self.p)
                nxt = FieldMatrix._wrap(np.hstack(cols), self.p).column_space()
                if nxt.cols == mat.cols:
                    return nxt
                mat = nxt

        for i in range(self.dim):
            vec = FieldMatrix.from_columns([self.basis_vector(i)], self.dim, self.p)
            if subspace_contains(span, vec):
                continue
            gens.append(i)
            span = close(span.hstack(vec))
            if span.cols == self.dim:
                break
        return tuple(gens)

    def corner_subspace(self, e, f) -> FieldMatrix:
        """Canonical basis of e * A * f for idempotent coordinate vectors."""
        mat = self.left_action(e) @ self.right_action(f) % self.p
        return FieldMatrix._wrap(mat, self.p).column_space()


@dataclass(frozen=True)
class AlgebraIdeal:
    """Two-sided ideal of a structure algebra, given by a column basis."""

    parent: StructureAlgebra
    basis: FieldMatrix

    def verify(self) -> bool:
        a, b = self.parent, self.basis
        for i in range(a.dim):
            left = FieldMatrix._wrap(a.left_tensor[i] @ b.arr % a.p, a.p)
            right = FieldMatrix._wrap(a.right_tensor[i] @ b.arr % a.p, a.p)
            if not subspace_contains(b, left) or not subspace_contains(b, right):
                return False
        return True


# ----------------------------------------------------------------------
# radical, idempotents, splitness


def radical_basis(a: StructureAlgebra) -> AlgebraIdeal:
    """Jacobson radical via the trace bilinear form of the left regular
    representation; valid precisely because p exceeds the dimension."""
    a._radical_guard()
    lt = a.left_tensor
    gram = np.einsum("ikl,jlk->ij", lt, lt) % a.p
    basis = FieldMatrix._wrap(np.ascontiguousarray(gram), a.p).nullspace()
    ideal = AlgebraIdeal(a, basis.column_space())
    # nilpotency certificate
    current = ideal.basis
    steps = 0
    while current.cols:
        steps += 1
        if steps > a.dim:
            raise InternalError("trace-form kernel is not nilpotent")
        cols = [a.left_action(ideal.basis.col(i)) @ current.arr % a.p
                for i in range(ideal.basis.cols)]
        current = FieldMatrix._wrap(
            np.hstack(cols) if cols else np.zeros((a.dim, 0), dtype=DTYPE), a.p
        ).column_space()
    return ideal


def _minimal_polynomial(alg: StructureAlgebra, z):
    """Monic minimal polynomial of an element, ascending coefficients."""
    cols = [alg.unit.copy()]
    power = alg.unit.copy()
    while True:
        power = alg.mul(power, z)
        mat = FieldMatrix.from_columns(cols, alg.dim, alg.p)
        rhs = FieldMatrix.from_columns([power], alg.dim, alg.p)
        sol = mat.solve(rhs)
        if sol is not None and (mat @ sol) == rhs:
            coeffs = [(-int(sol.arr[i, 0])) % alg.p for i in range(len(cols))]
            return coeffs + [1]
        cols.append(power.copy())
        if len(cols) > alg.dim + 1:
            raise InternalError("minimal polynomial search failed to terminate")


def _poly_from_coeffs(coeffs, p):
    return sympy.Poly(list(reversed(coeffs)), _X, modulus=p)


def _eval_poly(alg: StructureAlgebra, poly, z):
    coeffs = [int(c) % alg.p for c in reversed(poly.all_coeffs())]
    result = np.zeros(alg.dim, dtype=DTYPE)
    for c in reversed(coeffs):
        result = (alg.mul(result, z) + c * alg.unit) % alg.p
    return result


def _splitting_idempotent(alg: StructureAlgebra, z):
    """A proper idempotent from a coprime factor split of the minimal
    polynomial of ``z``, or ``None`` when no split is available."""
    minpoly = _poly_from_coeffs(_minimal_polynomial(alg, z), alg.p)
    factors = minpoly.factor_list()[1]
    if len(factors) < 2:
        return None
    f_part = factors[0][0] ** factors[0][1]
    rest = sympy.Poly(1, _X, modulus=alg.p)
    for fac, mult in factors[1:]:
        rest *= fac**mult
    s, t, g = f_part.gcdex(rest)
    if g.total_degree() != 0:
        return None
    g0 = int(g.all_coeffs()[-1])
    t = t * sympy.Poly(pow(g0, alg.p - 2, alg.p), _X, modulus=alg.p)
    idem = _eval_poly(alg, (t * rest) % minpoly, z)
    if not idem.any() or ((idem - alg.unit) % alg.p == 0).all():
        return None
    return idem


def _split_basic_flags(a: StructureAlgebra):
    """(split, basic): split iff the center of A/rad is totally split over
    F_p; basic iff A/rad is commutative."""
    s_alg, _, _ = a.semisimple_quotient
    basic = s_alg.is_commutative()
    split = True
    center = s_alg.center_basis
    for i in range(center.cols):
        minpoly = _poly_from_coeffs(_minimal_polynomial(s_alg, center.col(i)), a.p)
        for fac, _ in minpoly.factor_list()[1]:
            if fac.total_degree() > 1:
                split = False
                break
        if not split:
            break
    return split, basic


def is_split_basic(a: StructureAlgebra):
    """Whether the algebra is split over F_p and whether it is basic."""
    return a.split_basic


def _lift_idempotent(alg: StructureAlgebra, x):
    """Newton lift of an idempotent-mod-radical to a true idempotent."""
    for _ in range(64):
        sq = alg.mul(x, x)
        if (sq == x).all():
            return x
        x = (3 * sq - 2 * alg.mul(sq, x)) % alg.p
    raise InternalError("idempotent lifting did not converge")


def _corner_algebra(a: StructureAlgebra, e):
    """Corner algebra eAe with its embedding basis."""
    basis = a.corner_subspace(e, e)
    m = basis.cols
    sc = np.zeros((m, m, m), dtype=DTYPE)
    prods = []
    for i in range(m):
        for j in range(m):
            prods.append(a.mul(basis.col(i), basis.col(j)))
    rhs = FieldMatrix.from_columns(prods, a.dim, a.p)
    sol = basis.solve(rhs)
    if sol is None:
        raise InternalError("corner subspace is not multiplicatively closed")
    sc = sol.arr.T.reshape(m, m, m)
    unit_sol = basis.solve(FieldMatrix.from_columns([e], a.dim, a.p))
    corner = StructureAlgebra(sc, unit_sol.arr[:, 0], p=a.p, check=False)
    return corner, basis


def _proper_idempotent_semisimple(s_alg: StructureAlgebra, rng):
    """A nontrivial idempotent of a split semisimple algebra of dim >= 2."""
    center = s_alg.center_basis
    candidates = []
    if center.cols > 1:
        candidates.extend(center.col(i) for i in range(center.cols))
    for _ in range(64):
        for z in candidates:
            idem = _splitting_idempotent(s_alg, z)
            if idem is not None:
                return idem
        if center.cols > 1:
            coeffs = rng.integers(0, s_alg.p, center.cols)
            candidates = [center.arr @ coeffs % s_alg.p]
        else:
            candidates = [rng.integers(0, s_alg.p, s_alg.dim).astype(DTYPE)]
    raise InternalError("failed to split a semisimple algebra")


def primitive_idempotents(a: StructureAlgebra, seed: int = DEFAULT_SEED):
    """Complete orthogonal set of primitive idempotents summing to 1.

    Found by splitting the semisimple quotient and Newton-lifting through
    the radical, recursing into corner algebras until every corner is
    local.  Requires the algebra to be split over F_p.
    """
    split, _ = a.split_basic
    if not split:
        raise SplitRequiredError("primitive idempotents require a split algebra")
    rng = np.random.default_rng(seed)

    def split_rec(e):
        corner, basis = _corner_algebra(a, e)
        s_alg, proj, sect = corner.semisimple_quotient
        if s_alg.dim == 1:
            return [e]
        idem_bar = _proper_idempotent_semisimple(s_alg, rng)
        lifted = _lift_idempotent(corner, sect.arr @ idem_bar % a.p)
        f = basis.arr @ lifted % a.p
        g = (e - f) % a.p
        if not f.any() or not g.any():
            raise InternalError("degenerate idempotent split")
        return split_rec(f) + split_rec(g)

    idems = split_rec(a.unit.copy())
    total = np.zeros(a.dim, dtype=DTYPE)
    for e in idems:
        total = (total + e) % a.p
    if (total != a.unit).any():
        raise InternalError("idempotents do not sum to the unit")
    return idems


# ----------------------------------------------------------------------
# constructions


def opposite_algebra(a: StructureAlgebra) -> StructureAlgebra:
    """Opposite algebra (multiplication reversed); involutive via a cached
    back-reference, so opposite(opposite(a)) is ``a`` itself."""
    return a.opposite


def tensor_algebra(a: StructureAlgebra, b: StructureAlgebra) -> StructureAlgebra:
    """Tensor product algebra on the pair basis (componentwise products)."""
    if a.p != b.p:
        raise ContractViolation("tensor factors must share the modulus")
    sc = np.einsum("ikm,jln->ijklmn", a.sc, b.sc) % a.p
    dim = a.dim * b.dim
    sc = np.ascontiguousarray(sc.reshape(dim, dim, dim))
    unit = np.kron(a.unit, b.unit) % a.p
    labels = tuple(f"{la}(x){lb}" for la in a.labels for lb in b.labels)
    return StructureAlgebra(sc, unit, p=a.p, labels=labels, check=False)


def tensor_swap_matches(a: StructureAlgebra, b: StructureAlgebra) -> bool:
    """Structure constants of a(x)b and b(x)a agree after the basis swap."""
    t1 = tensor_algebra(a, b)
    t2 = tensor_algebra(b, a)
    perm = np.array(
        [j * a.dim + i for i in range(a.dim) for j in range(b.dim)], dtype=np.intp
    )
    swapped = t2.sc[np.ix_(perm, perm, perm)]
    return bool((t1.sc == swapped).all() and (t1.unit == t2.unit[perm]).all())


# ----------------------------------------------------------------------
# isomorphism search for split basic algebras


def _block_invariants(a: StructureAlgebra):
    idems = a.primitive_idempotents_cached
    n = len(idems)
    rad = a.radical.basis
    rad2 = a.radical_power(2)
    cartan = np.zeros((n, n), dtype=int)
    arrows = np.zeros((n, n), dtype=int)
    arrow_bases = {}
    for i, ei in enumerate(idems):
        li = a.left_action(ei)
        for j, ej in enumerate(idems):
            rj = a.right_action(ej)
            block = FieldMatrix._wrap(li @ rj % a.p, a.p)
            cartan[i, j] = block.column_space().cols
            rad_block = FieldMatrix._wrap(li @ rj @ rad.arr % a.p, a.p).column_space()
            rad2_block = FieldMatrix._wrap(li @ rj @ rad2.arr % a.p, a.p).column_space()
            arrows[i, j] = rad_block.cols - rad2_block.cols
            arrow_bases[(i, j)] = (rad_block, rad2_block)
    return idems, cartan, arrows, arrow_bases


def algebra_isomorphic(
    a: StructureAlgebra,
    b: StructureAlgebra,
    seed: int = DEFAULT_SEED,
    tries: int = 60,
):
    """Search for an explicit algebra isomorphism between split basic
    algebras.

    Invariant prefilters (dimension, radical filtration, Cartan data up to
    vertex matching) reject most non-isomorphic pairs outright; otherwise
    candidate isomorphisms are built from random radical-lift images of
    the arrow spaces and certified by checking multiplicativity on every
    basis pair.  Returns the matrix of a verified isomorphism or None.
    """
    if a.p != b.p or a.dim != b.dim:
        return None
    for alg in (a, b):
        split, basic = alg.split_basic
        if not (split and basic):
            raise ContractViolation("isomorphism search requires split basic algebras")
    if a.radical_power_dims != b.radical_power_dims:
        return None
    idems_a, cartan_a, arrows_a, bases_a = _block_invariants(a)
    idems_b, cartan_b, arrows_b, bases_b = _block_invariants(b)
    if len(idems_a) != len(idems_b):
        return None
    n = len(idems_a)
    rng = np.random.default_rng(seed)

    perms = [
        sigma
        for sigma in itertools.permutations(range(n))
        if all(
            cartan_a[i, j] == cartan_b[sigma[i], sigma[j]]
            and arrows_a[i, j] == arrows_b[sigma[i], sigma[j]]
            for i in range(n)
            for j in range(n)
        )
    ]
    if not perms:
        return None

    per_perm = max(1, tries // len(perms))
    for sigma in perms:
        for _ in range(per_perm):
            phi = _try_build_isomorphism(
                a, b, idems_a, idems_b, bases_a, bases_b, sigma, rng
            )
            if phi is not None:
                return phi
    return None


def _try_build_isomorphism(a, b, idems_a, idems_b, bases_a, bases_b, sigma, rng):
    pairs = []
    for i, e in enumerate(idems_a):
        pairs.append((e, idems_b[sigma[i]]))
    n = len(idems_a)
    for i in range(n):
        for j in range(n):
            rad_a, rad2_a = bases_a[(i, j)]
            k = rad_a.cols - rad2_a.cols
            if k == 0:
                continue
            rad_b, rad2_b = bases_b[(sigma[i], sigma[j])]
            # arrow-space complement on the source side
            comp = []
            span = rad2_a
            for c in range(rad_a.cols):
                cand = FieldMatrix.from_columns([rad_a.col(c)], a.dim, a.p)
                if not subspace_contains(span, cand):
                    comp.append(rad_a.col(c))
                    span = span.hstack(cand)
            coeff = rng.integers(0, a.p, (rad_b.cols, len(comp)))
            images = rad_b.arr @ coeff % a.p
            for t, vec in enumerate(comp):
                pairs.append((vec, images[:, t]))

    # close the generating pairs into a full word basis
    w_a = np.zeros((a.dim, 0), dtype=DTYPE)
    w_b = np.zeros((b.dim, 0), dtype=DTYPE)
    rank = 0
    queue = list(pairs)
    guard = 0
    while queue:
        guard += 1
        if guard > 4000:
            return None
        va, vb = queue.pop(0)
        cand = np.hstack([w_a, va[:, None]])
        work = np.ascontiguousarray(cand.T).copy()
        new_rank, _ = rref_inplace(work, a.p)
        if new_rank == rank:
            continue
        for c in range(w_a.shape[1]):
            queue.append((a.mul(w_a[:, c], va), b.mul(w_b[:, c], vb)))
            queue.append((a.mul(va, w_a[:, c]), b.mul(vb, w_b[:, c])))
        w_a = cand
        w_b = np.hstack([w_b, vb[:, None]])
        rank = new_rank
    if rank < a.dim:
        return None
    wa = FieldMatrix._wrap(w_a, a.p)
    try:
        inv = wa.inv()
    except ContractViolation:
        return None
    phi = FieldMatrix._wrap(w_b, a.p) @ inv
    # certify: unit, bijectivity, multiplicativity on all basis pairs
    if (phi.arr @ a.unit % a.p != b.unit).any():
        return None
    if phi.rank() < a.dim:
        return None
    lhs = np.einsum("ijk,lk->ijl", a.sc, phi.arr) % a.p
    rhs = np.einsum("ki,lj,kln->ijn", phi.arr, phi.arr, b.sc) % a.p
    if (lhs != rhs).any():
        return None
    return phi
