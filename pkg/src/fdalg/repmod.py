"""Finite-dimensional left modules and the functors between them.

A module is one action matrix per algebra basis element.  Arrows of a
quiver algebra therefore act "against" their direction (left modules are
representations of the opposite quiver); all homological conventions
downstream are pinned by tests against hand-computed desk examples.

Heavy operations (hom spaces, intertwiner systems) impose constraints for
a generating set of the algebra only, which is sufficient and much
cheaper than looping over the whole basis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import DEFAULT_SEED, StructureAlgebra, primitive_idempotents
from .errors import ContractViolation, InternalError
from .exactla import (
    DTYPE,
    FieldMatrix,
    quotient_maps,
    subspace_contains,
)


class Module:
    """Left module over a structure algebra."""

    __slots__ = ("algebra", "dim", "actions", "_cache")

    def __init__(self, algebra: StructureAlgebra, actions, check: bool = False):
        actions = np.array(actions, dtype=DTYPE) % algebra.p
        if actions.ndim != 3 or actions.shape[0] != algebra.dim:
            raise ContractViolation("need one square action matrix per basis element")
        if actions.shape[1] != actions.shape[2]:
            raise ContractViolation("action matrices must be square")
        actions.flags.writeable = False
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "dim", int(actions.shape[1]))
        object.__setattr__(self, "actions", actions)
        object.__setattr__(self, "_cache", {})
        if check:
            self.validate()

    def __setattr__(self, name, value):
        raise AttributeError("Module is immutable")

    @classmethod
    def zero(cls, algebra: StructureAlgebra) -> "Module":
        return cls(algebra, np.zeros((algebra.dim, 0, 0), dtype=DTYPE))

    def validate(self):
        """Assert the module axioms: unit acts as identity and the action
        respects the structure constants on every basis pair."""
        a, p = self.algebra, self.algebra.p
        ident = np.eye(self.dim, dtype=DTYPE)
        unit_act = np.tensordot(a.unit, self.actions, axes=(0, 0)) % p
        if (unit_act != ident).any():
            raise ContractViolation("unit does not act as the identity")
        lhs = np.einsum("ikl,jlm->ijkm", self.actions, self.actions) % p
        rhs = np.einsum("ijn,nkm->ijkm", a.sc, self.actions) % p
        if (lhs != rhs).any():
            i, j = np.argwhere((lhs != rhs).any(axis=(2, 3)))[0]
            raise ContractViolation(
                f"action violates structure constants at ({a.labels[i]}, {a.labels[j]})"
            )
        return True

    def act(self, vec) -> np.ndarray:
        """Action matrix of an algebra element given by coordinates."""
        return np.tensordot(np.asarray(vec, dtype=DTYPE) % self.algebra.p,
                            self.actions, axes=(0, 0)) % self.algebra.p

    def action_matrix(self, i: int) -> FieldMatrix:
        return FieldMatrix._wrap(self.actions[i].copy(), self.algebra.p)

    def weights(self):
        """Dimension of e_i * M per primitive idempotent (an iso invariant)."""
        if "weights" not in self._cache:
            idems = self.algebra.primitive_idempotents_cached
            self._cache["weights"] = tuple(
                int(FieldMatrix._wrap(self.act(e), self.algebra.p).rank()) for e in idems
            )
        return self._cache["weights"]

    def __repr__(self):
        return f"Module(dim={self.dim}, algebra_dim={self.algebra.dim})"


class ModuleMap:
    """Algebra-linear map between modules over one algebra."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: Module, target: Module, matrix: FieldMatrix,
                 check: bool = False):
        if source.algebra is not target.algebra:
            raise ContractViolation("module map endpoints live over different algebras")
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise ContractViolation("module map matrix has wrong shape")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "matrix", matrix)
        if check:
            self.validate()

    def __setattr__(self, name, value):
        raise AttributeError("ModuleMap is immutable")

    def validate(self):
        p = self.source.algebra.p
        for g in self.source.algebra.generators:
            lhs = self.matrix.arr @ self.source.actions[g] % p
            rhs = self.target.actions[g] @ self.matrix.arr % p
            if (lhs != rhs).any():
                raise ContractViolation("matrix fails the intertwining relations")
        return True

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self after other."""
        if other.target is not self.source:
            raise ContractViolation("composition endpoints do not match")
        return ModuleMap(other.source, self.target, self.matrix @ other.matrix)

    def rank(self) -> int:
        return self.matrix.rank()

    def __repr__(self):
        return f"ModuleMap({self.source.dim} -> {self.target.dim})"


# ----------------------------------------------------------------------
# basic constructions


def regular_module(a: StructureAlgebra) -> Module:
    """The algebra acting on itself by left multiplication."""
    return Module(a, a.left_tensor.copy())


def submodule(m: Module, basis: FieldMatrix):
    """Module structure on an invariant column span, with its inclusion."""
    p = m.algebra.p
    acts = []
    for i in range(m.algebra.dim):
        restricted = basis.solve(FieldMatrix._wrap(m.actions[i] @ basis.arr % p, p))
        if restricted is None:
            raise ContractViolation("span is not invariant under the action")
        acts.append(restricted.arr)
    sub = Module(m.algebra, np.array(acts) if acts else
                 np.zeros((m.algebra.dim, basis.cols, basis.cols), dtype=DTYPE))
    return sub, ModuleMap(sub, m, basis)


def quotient_module(m: Module, basis: FieldMatrix):
    """Module structure on the quotient by an invariant span, with the
    projection map."""
    p = m.algebra.p
    proj, sect = quotient_maps(basis)
    acts = [proj.arr @ m.actions[i] @ sect.arr % p for i in range(m.algebra.dim)]
    quot = Module(m.algebra, np.array(acts) if acts else
                  np.zeros((m.algebra.dim, proj.rows, proj.rows), dtype=DTYPE))
    return quot, ModuleMap(m, quot, proj)


def direct_sum(modules, algebra=None):
    """Block-diagonal direct sum with canonical injections/projections."""
    if modules:
        algebra = modules[0].algebra
    if algebra is None:
        raise ContractViolation("empty direct sum needs an explicit algebra")
    for m in modules:
        if m.algebra is not algebra:
            raise ContractViolation("direct sum requires one common algebra")
    total = sum(m.dim for m in modules)
    acts = np.zeros((algebra.dim, total, total), dtype=DTYPE)
    offsets = []
    pos = 0
    for m in modules:
        acts[:, pos:pos + m.dim, pos:pos + m.dim] = m.actions
        offsets.append(pos)
        pos += m.dim
    out = Module(algebra, acts)
    injections, projections = [], []
    for m, off in zip(modules, offsets):
        inj = np.zeros((total, m.dim), dtype=DTYPE)
        inj[off:off + m.dim] = np.eye(m.dim, dtype=DTYPE)
        injections.append(ModuleMap(m, out, FieldMatrix._wrap(inj, algebra.p)))
        proj = np.zeros((m.dim, total), dtype=DTYPE)
        proj[:, off:off + m.dim] = np.eye(m.dim, dtype=DTYPE)
        projections.append(ModuleMap(out, m, FieldMatrix._wrap(proj, algebra.p)))
    return out, injections, projections


def dual_module(m: Module) -> Module:
    """Vector-space dual as a module over the opposite algebra."""
    acts = np.ascontiguousarray(m.actions.transpose(0, 2, 1))
    return Module(m.algebra.opposite, acts)


# ----------------------------------------------------------------------
# hom spaces


def hom_space(m: Module, n: Module):
    """Basis of the space of module maps m -> n (deterministic order)."""
    if m.algebra is not n.algebra:
        raise ContractViolation("hom space requires one common algebra")
    if m.dim == 0 or n.dim == 0:
        return []
    p = m.algebra.p
    dm, dn = m.dim, n.dim
    basis = np.eye(dm * dn, dtype=DTYPE)
    for g in m.algebra.generators:
        mg, ng = m.actions[g], n.actions[g]
        # row-major vec of X (dn x dm): X @ mg - ng @ X = 0
        constraint = (np.kron(np.eye(dn, dtype=DTYPE), mg.T)
                      - np.kron(ng, np.eye(dm, dtype=DTYPE))) % p
        reduced = FieldMatrix._wrap(constraint @ basis % p, p)
        basis = basis @ reduced.nullspace().arr % p
        if basis.shape[1] == 0:
            return []
    return [
        ModuleMap(m, n, FieldMatrix._wrap(basis[:, t].reshape(dn, dm).copy(), p))
        for t in range(basis.shape[1])
    ]


def hom_dim(m: Module, n: Module) -> int:
    return len(hom_space(m, n))


@dataclass(frozen=True)
class FactorResult:
    kernel: Module
    kernel_inclusion: ModuleMap
    image: Module
    image_inclusion: ModuleMap
    cokernel: Module
    cokernel_projection: ModuleMap


def factor_maps(f: ModuleMap) -> FactorResult:
    """Kernel, image and cokernel of a module map with induced actions."""
    ker_basis = f.matrix.nullspace()
    kernel, ker_inc = submodule(f.source, ker_basis)
    im_basis = f.matrix.column_space()
    image, im_inc = submodule(f.target, im_basis)
    cokernel, coker_proj = quotient_module(f.target, im_basis)
    return FactorResult(kernel, ker_inc, image, im_inc, cokernel, coker_proj)


@dataclass(frozen=True)
class Filtration:
    radical: Module
    radical_inclusion: ModuleMap
    socle: Module
    socle_inclusion: ModuleMap
    top: Module
    top_projection: ModuleMap


def filtration(m: Module) -> Filtration:
    """rad(A)m, its annihilated socle, and the top m / rad(A)m."""
    a = m.algebra
    rad = a.radical.basis
    p = a.p
    if rad.cols and m.dim:
        cols = np.hstack([m.act(rad.col(i)) for i in range(rad.cols)])
        rad_basis = FieldMatrix._wrap(cols, p).column_space()
        soc_basis = FieldMatrix._wrap(
            np.vstack([m.act(rad.col(i)) for i in range(rad.cols)]), p
        ).nullspace()
    else:
        rad_basis = FieldMatrix.zeros(m.dim, 0, p)
        soc_basis = FieldMatrix.identity(m.dim, p)
    radical, rad_inc = submodule(m, rad_basis)
    socle, soc_inc = submodule(m, soc_basis)
    top, top_proj = quotient_module(m, rad_basis)
    return Filtration(radical, rad_inc, socle, soc_inc, top, top_proj)


# ----------------------------------------------------------------------
# endomorphism algebras and decomposition


def _end_data(m: Module):
    """Cached (End^op(m) as a StructureAlgebra, basis of endo matrices)."""
    if "end_op" not in m._cache:
        endos = hom_space(m, m)
        k = len(endos)
        p = m.algebra.p
        if k == 0:
            raise InternalError("endomorphism algebra of a nonzero module is zero")
        stacked = FieldMatrix._wrap(
            np.array([e.matrix.arr.reshape(-1) for e in endos]).T.copy(), p
        )
        sc = np.zeros((k, k, k), dtype=DTYPE)
        for i in range(k):
            for j in range(k):
                prod = endos[j].matrix @ endos[i].matrix  # opposite product
                sol = stacked.solve(
                    FieldMatrix._wrap(prod.arr.reshape(-1, 1).copy(), p)
                )
                sc[i, j] = sol.arr[:, 0]
        unit = stacked.solve(
            FieldMatrix._wrap(np.eye(m.dim, dtype=DTYPE).reshape(-1, 1), p)
        )
        alg = StructureAlgebra(sc, unit.arr[:, 0], p=p, check=False)
        m._cache["end_op"] = (alg, [e.matrix for e in endos])
    return m._cache["end_op"]


def end_algebra_op(m: Module) -> StructureAlgebra:
    """Endomorphism algebra with reversed multiplication."""
    return _end_data(m)[0]


@dataclass(frozen=True)
class Decomposition:
    module: Module
    summands: tuple  # of (Module, multiplicity)
    pieces: tuple  # of (summand index, injection, projection), one per copy

    def dims(self):
        return tuple(sorted(s.dim for s, mult in self.summands for _ in range(mult)))

    def is_basic(self) -> bool:
        return all(mult == 1 for _, mult in self.summands)


def _indecomposable_isomorphic(x: Module, y: Module) -> bool:
    """Conclusive iso test for indecomposable modules over a split algebra:
    some composite y -> x -> y ... x -> y -> x escapes rad End(x) iff x = y."""
    if x.dim != y.dim or x.weights() != y.weights():
        return False
    if x.dim == 0:
        return True
    fwd = hom_space(x, y)
    bwd = hom_space(y, x)
    if not fwd or not bwd:
        return False
    end_alg, endo_basis = _end_data(x)
    p = x.algebra.p
    stacked = FieldMatrix._wrap(
        np.array([e.arr.reshape(-1) for e in endo_basis]).T.copy(), p
    )
    rad = end_alg.radical.basis
    for f in fwd:
        for g in bwd:
            comp = g.matrix @ f.matrix
            coords = stacked.solve(FieldMatrix._wrap(comp.arr.reshape(-1, 1).copy(), p))
            if not subspace_contains(rad, coords):
                return True
    return False


def decompose(m: Module, seed: int = DEFAULT_SEED) -> Decomposition:
    """Full Krull-Schmidt decomposition via idempotent splitting of the
    endomorphism algebra; every summand is certified indecomposable."""
    if m.dim == 0:
        return Decomposition(m, (), ())
    cache_key = ("decomposition", seed)
    if cache_key in m._cache:
        return m._cache[cache_key]
    end_alg, endo_basis = _end_data(m)
    p = m.algebra.p
    idems = primitive_idempotents(end_alg, seed)
    raw = []
    for vec in idems:
        proj_matrix = np.tensordot(vec, np.array([e.arr for e in endo_basis]),
                                   axes=(0, 0)) % p
        basis = FieldMatrix._wrap(proj_matrix.copy(), p).column_space()
        piece, inclusion = submodule(m, basis)
        retraction = basis.solve(FieldMatrix._wrap(proj_matrix.copy(), p))
        raw.append((piece, inclusion, ModuleMap(m, piece, retraction)))
    groups = []
    pieces = []
    for piece, inc, proj in raw:
        for gi, (rep, _) in enumerate(groups):
            if _indecomposable_isomorphic(piece, rep):
                groups[gi] = (rep, groups[gi][1] + 1)
                pieces.append((gi, inc, proj))
                break
        else:
            groups.append((piece, 1))
            pieces.append((len(groups) - 1, inc, proj))
    total = sum(rep.dim * mult for rep, mult in groups)
    if total != m.dim:
        raise InternalError("decomposition does not account for the full dimension")
    result = Decomposition(m, tuple(groups), tuple(pieces))
    m._cache[cache_key] = result
    return result


def is_isomorphic(m: Module, n: Module, seed: int = DEFAULT_SEED) -> bool:
    """Module isomorphism test: random invertible intertwiner first, then
    the deterministic decompose-and-match fallback (conclusive for split
    algebras)."""
    if m.algebra is not n.algebra:
        raise ContractViolation("isomorphism test requires one common algebra")
    if m.dim != n.dim:
        return False
    if m.dim == 0:
        return True
    if m.weights() != n.weights():
        return False
    homs = hom_space(m, n)
    if not homs:
        return False
    rng = np.random.default_rng(seed)
    stack = np.array([h.matrix.arr for h in homs])
    for _ in range(24):
        combo = np.tensordot(rng.integers(0, m.algebra.p, len(homs)), stack,
                             axes=(0, 0)) % m.algebra.p
        if FieldMatrix._wrap(combo.copy(), m.algebra.p).rank() == m.dim:
            return True
    dm = decompose(m, seed)
    dn = decompose(n, seed)
    remaining = [[rep, mult] for rep, mult in dn.summands]
    for rep, mult in dm.summands:
        for slot in remaining:
            if slot[1] and _indecomposable_isomorphic(rep, slot[0]):
                if slot[1] != mult:
                    return False
                slot[1] = 0
                break
        else:
            return False
    return all(slot[1] == 0 for slot in remaining)


def basify(m: Module):
    """One representative per isomorphism class of indecomposable summand."""
    return [rep for rep, _ in decompose(m).summands]


# ----------------------------------------------------------------------
# hom and tensor functors


@dataclass(frozen=True)
class HomFunctorResult:
    module: Module  # over end_algebra_op(m)
    hom_basis: tuple  # of ModuleMap m -> x

    def transform(self, g: ModuleMap, other: "HomFunctorResult") -> FieldMatrix:
        """Matrix of Hom(m, g): Hom(m, x) -> Hom(m, y) in the two bases."""
        p = g.source.algebra.p
        stacked = FieldMatrix._wrap(
            np.array([h.matrix.arr.reshape(-1) for h in other.hom_basis]).T.copy(), p
        )
        cols = [
            (g.matrix @ h.matrix).arr.reshape(-1) for h in self.hom_basis
        ]
        sol = stacked.solve(FieldMatrix._wrap(np.array(cols).T.copy(), p))
        if sol is None:
            raise InternalError("hom functor transform failed to express itself")
        return sol


def hom_functor_module(m: Module, x: Module) -> HomFunctorResult:
    """Hom(m, x) as a left module over End^op(m) via precomposition."""
    end_alg, endo_basis = _end_data(m)
    homs = hom_space(m, x)
    p = m.algebra.p
    k = len(homs)
    if k == 0:
        return HomFunctorResult(Module.zero(end_alg), ())
    stacked = FieldMatrix._wrap(
        np.array([h.matrix.arr.reshape(-1) for h in homs]).T.copy(), p
    )
    acts = np.zeros((end_alg.dim, k, k), dtype=DTYPE)
    for i, f in enumerate(endo_basis):
        cols = [(h.matrix @ FieldMatrix._wrap(f.arr.copy(), p)).arr.reshape(-1)
                for h in homs]
        sol = stacked.solve(FieldMatrix._wrap(np.array(cols).T.copy(), p))
        if sol is None:
            raise InternalError("precomposition left the hom space")
        acts[i] = sol.arr
    return HomFunctorResult(Module(end_alg, acts), tuple(homs))


@dataclass(frozen=True)
class Bimodule:
    """Left module together with a commuting right action of a second
    algebra (the right action matrices are an anti-representation)."""

    left: Module
    right_algebra: StructureAlgebra
    right_actions: np.ndarray

    def validate(self):
        lam = self.right_algebra
        p = lam.p
        r = self.right_actions
        unit_act = np.tensordot(lam.unit, r, axes=(0, 0)) % p
        if (unit_act != np.eye(self.left.dim, dtype=DTYPE)).any():
            raise ContractViolation("right unit does not act as the identity")
        lhs = np.einsum("jkl,ilm->ijkm", r, r) % p  # R_j @ R_i
        rhs = np.einsum("ijn,nkm->ijkm", lam.sc, r) % p
        if (lhs != rhs).any():
            raise ContractViolation("right action is not an anti-representation")
        for i in range(self.left.algebra.dim):
            for j in range(lam.dim):
                left_then_right = r[j] @ self.left.actions[i] % p
                right_then_left = self.left.actions[i] @ r[j] % p
                if (left_then_right != right_then_left).any():
                    raise ContractViolation("left and right actions do not commute")
        return True


@dataclass(frozen=True)
class TensorResult:
    module: Module
    projection: FieldMatrix  # from the plain tensor-space coordinates
    section: FieldMatrix


def tensor_over(bimod: Bimodule, m: Module) -> TensorResult:
    """Balanced tensor product over the shared algebra: the plain tensor
    space modulo the span of (q.lam (x) v) - (q (x) lam.v), carrying the
    left action inherited from the bimodule."""
    lam = bimod.right_algebra
    if m.algebra is not lam:
        raise ContractViolation("tensor factor must be a module over the right algebra")
    p = lam.p
    dq, dm = bimod.left.dim, m.dim
    ident_q = np.eye(dq, dtype=DTYPE)
    ident_m = np.eye(dm, dtype=DTYPE)
    rel_blocks = []
    for g in lam.generators:
        op = (np.kron(bimod.right_actions[g], ident_m)
              - np.kron(ident_q, m.actions[g])) % p
        rel_blocks.append(op)
    if rel_blocks:
        span = FieldMatrix._wrap(np.hstack(rel_blocks), p).column_space()
    else:
        span = FieldMatrix.zeros(dq * dm, 0, p)
    proj, sect = quotient_maps(span)
    t_alg = bimod.left.algebra
    acts = np.array([
        proj.arr @ np.kron(bimod.left.actions[i], ident_m) @ sect.arr % p
        for i in range(t_alg.dim)
    ]) if proj.rows else np.zeros((t_alg.dim, 0, 0), dtype=DTYPE)
    return TensorResult(Module(t_alg, acts), proj, sect)


def regular_bimodule(a: StructureAlgebra) -> Bimodule:
    """The algebra as a bimodule over itself."""
    return Bimodule(regular_module(a), a, a.right_tensor.copy())


@dataclass(frozen=True)
class RejectResult:
    reject: Module
    inclusion: ModuleMap
    embeds: bool


def reject_embed(x: Module, y: Module) -> RejectResult:
    """Common kernel of all maps x -> y; x embeds into a finite sum of
    copies of y exactly when this reject vanishes."""
    homs = hom_space(x, y)
    p = x.algebra.p
    if not homs:
        basis = FieldMatrix.identity(x.dim, p)
    else:
        basis = FieldMatrix._wrap(
            np.vstack([h.matrix.arr for h in homs]), p
        ).nullspace()
    reject, inclusion = submodule(x, basis)
    return RejectResult(reject, inclusion, reject.dim == 0)


# ----------------------------------------------------------------------
# per-algebra catalog of structural modules


class _RepContext:
    def __init__(self, algebra: StructureAlgebra):
        self.algebra = algebra
        self._cache = {}

    @property
    def regular(self) -> Module:
        if "regular" not in self._cache:
            self._cache["regular"] = regular_module(self.algebra)
        return self._cache["regular"]

    @property
    def idempotents(self):
        return self.algebra.primitive_idempotents_cached

    def projective(self, i: int):
        """(Ae_i, inclusion into the regular module, generator coords)."""
        key = ("proj", i)
        if key not in self._cache:
            a = self.algebra
            e = self.idempotents[i]
            basis = FieldMatrix._wrap(a.right_action(e), a.p).column_space()
            mod, inc = submodule(self.regular, basis)
            gen = basis.solve(FieldMatrix.from_columns([e], a.dim, a.p))
            if gen is None:
                raise InternalError("idempotent escapes its own projective")
            self._cache[key] = (mod, inc, gen.arr[:, 0])
        return self._cache[key]

    def right_projective(self, i: int):
        """e_iA as a left module over the opposite algebra, plus its basis
        inside the algebra's coordinate space."""
        key = ("rproj", i)
        if key not in self._cache:
            a = self.algebra
            e = self.idempotents[i]
            basis = FieldMatrix._wrap(a.left_action(e), a.p).column_space()
            acts = []
            for j in range(a.dim):
                sol = basis.solve(
                    FieldMatrix._wrap(a.right_tensor[j] @ basis.arr % a.p, a.p)
                )
                acts.append(sol.arr)
            mod = Module(a.opposite, np.array(acts))
            self._cache[key] = (mod, basis)
        return self._cache[key]

    def right_projective_retraction(self, i: int) -> FieldMatrix:
        """Left inverse of the e_iA basis (coordinates on its span)."""
        key = ("rproj_retract", i)
        if key not in self._cache:
            basis = self.right_projective(i)[1]
            sol = basis.T.solve(FieldMatrix.identity(basis.cols, self.algebra.p))
            if sol is None:
                raise InternalError("right projective basis lost full rank")
            self._cache[key] = sol.T
        return self._cache[key]

    def injective(self, i: int) -> Module:
        key = ("inj", i)
        if key not in self._cache:
            self._cache[key] = dual_module(self.right_projective(i)[0])
        return self._cache[key]

    def simple(self, i: int) -> Module:
        key = ("simple", i)
        if key not in self._cache:
            proj, _, _ = self.projective(i)
            self._cache[key] = filtration(proj).top
        return self._cache[key]

    @property
    def injective_cogenerator(self) -> Module:
        if "cogen" not in self._cache:
            mods = [self.injective(i) for i in range(len(self.idempotents))]
            self._cache["cogen"], _, _ = direct_sum(mods, self.algebra)
        return self._cache["cogen"]


def rep_context(a: StructureAlgebra) -> _RepContext:
    ctx = getattr(a, "_repctx", None)
    if ctx is None:
        ctx = _RepContext(a)
        a._repctx = ctx
    return ctx


def random_module(a: StructureAlgebra, rng, max_blocks: int = 3) -> Module:
    """Random cokernel of a random map between sums of projectives; every
    module arises this way, so this samples honestly."""
    ctx = rep_context(a)
    count = len(ctx.idempotents)

    def random_proj_sum():
        picks = [int(rng.integers(0, count))
                 for _ in range(int(rng.integers(1, max_blocks + 1)))]
        mods = [ctx.projective(i)[0] for i in picks]
        return direct_sum(mods, a)[0]

    p1 = random_proj_sum()
    p0 = random_proj_sum()
    homs = hom_space(p1, p0)
    if not homs:
        return p0
    combo = np.tensordot(rng.integers(0, a.p, len(homs)),
                         np.array([h.matrix.arr for h in homs]), axes=(0, 0)) % a.p
    f = ModuleMap(p1, p0, FieldMatrix._wrap(combo.copy(), a.p))
    return factor_maps(f).cokernel
