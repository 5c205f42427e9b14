"""Minimal resolutions, syzygies, the transpose, Auslander-Reiten
translates and their higher versions, the Nakayama functor, and Ext.

Projective covers are computed structurally: a module is covered by one
indecomposable projective per top basis vector, and maps between
projectives are pulled back to multiplications in the algebra.  The
injective side is obtained by dualizing into the opposite algebra, which
is cached so translate round trips stay inside one pair of algebra
objects.

Stable convention: translate outputs never carry projective (resp.
injective) summands; this comes for free from minimal presentations and
is re-certified by the test suite on the desk catalogs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractViolation, InternalError
from .exactla import DTYPE, FieldMatrix, subspace_contains
from .repmod import (
    Module,
    ModuleMap,
    decompose,
    direct_sum,
    dual_module,
    factor_maps,
    filtration,
    hom_space,
    quotient_module,
    rep_context,
    submodule,
)

# translate results record their stripped input summands only below this
# size; the runaway orbit modules skip the bookkeeping (it would need a
# full decomposition).
STRIP_RECORD_LIMIT = 32


class TranslateCapExceeded(Exception):
    """Raised inside capped translates when the output dimension would
    exceed the budget; carries the would-be dimension."""

    def __init__(self, dim):
        super().__init__(f"translate output dimension {dim} exceeds the cap")
        self.dim = dim


@dataclass(frozen=True)
class CoverData:
    """Projective cover with block bookkeeping.

    ``blocks`` lists (idempotent index, generator coordinates inside the
    block, offset) per indecomposable summand of the cover.
    """

    module: Module
    map: ModuleMap  # cover -> m
    blocks: tuple


def projective_cover_data(m: Module) -> CoverData:
    """Minimal projective cover built from lifts of a top basis."""
    a = m.algebra
    ctx = rep_context(a)
    p = a.p
    if m.dim == 0:
        zero = Module.zero(a)
        return CoverData(zero, ModuleMap(zero, m, FieldMatrix.zeros(0, 0, p)), ())
    filt = filtration(m)
    top_proj = filt.top_projection.matrix
    pieces = []
    targets = []
    for i, e in enumerate(ctx.idempotents):
        weight = FieldMatrix._wrap(filt.top.act(e), p).column_space()
        if weight.cols == 0:
            continue
        lift = top_proj.solve(weight)
        if lift is None:
            raise InternalError("top projection is not surjective")
        hit = m.act(e) @ lift.arr % p
        for c in range(weight.cols):
            pieces.append(i)
            targets.append(hit[:, c])
    mods = [ctx.projective(i)[0] for i in pieces]
    cover, injections, _ = direct_sum(mods, a)
    cols = np.zeros((m.dim, cover.dim), dtype=DTYPE)
    blocks = []
    offset = 0
    for idx, i in enumerate(pieces):
        proj_mod, _, gen = ctx.projective(i)
        basis = ctx.projective(i)[1].matrix  # inclusion Ae_i -> regular
        # column k is (basis element k) . target, assembled in one product
        acted = np.einsum("tij,j->it", m.actions, targets[idx]) % p
        cols[:, offset:offset + proj_mod.dim] = acted @ basis.arr % p
        blocks.append((i, gen, offset))
        offset += proj_mod.dim
    cover_map = ModuleMap(cover, m, FieldMatrix._wrap(cols, p))
    if cover_map.rank() != m.dim:
        raise InternalError("constructed cover is not surjective")
    return CoverData(cover, cover_map, tuple(blocks))


def cover_envelope(m: Module, direction: str) -> ModuleMap:
    """Projective cover (onto ``m``) or injective envelope (out of ``m``)."""
    if direction == "projective":
        return projective_cover_data(m).map
    if direction != "injective":
        raise ContractViolation("direction must be 'projective' or 'injective'")
    cov = projective_cover_data(dual_module(m))
    envelope_target = dual_module(cov.module)
    return ModuleMap(m, envelope_target, cov.map.matrix.T)


def is_cover_minimal(cover: ModuleMap) -> bool:
    """Kernel of the cover lies inside rad(P)."""
    ker = cover.matrix.nullspace()
    rad_p = filtration(cover.source).radical_inclusion.matrix
    return subspace_contains(rad_p, ker)


def is_envelope_minimal(env: ModuleMap) -> bool:
    """Socle of the envelope target lies inside the image."""
    soc = filtration(env.target).socle_inclusion.matrix
    return subspace_contains(env.matrix.column_space(), soc)


@dataclass(frozen=True)
class ResolutionSegment:
    """Finite initial segment of a minimal resolution.

    For direction 'projective' the data is ... -> T1 -> T0 -> M; for
    'injective' it is M -> T0 -> T1 -> ...; ``modules`` is (M, T0, T1, ...)
    either way.
    """

    direction: str
    modules: tuple
    maps: tuple
    minimal: bool = True

    def terms(self):
        return self.modules[1:]

    def verify(self) -> bool:
        mods, maps = self.modules, self.maps
        if self.direction == "projective":
            # maps[k]: T_k -> T_{k-1} with T_{-1} = M
            for k in range(len(maps) - 1):
                if not (maps[k].matrix @ maps[k + 1].matrix).is_zero():
                    return False
            if maps and maps[0].rank() != mods[0].dim:
                return False
            for k in range(len(maps) - 1):
                if maps[k].rank() + maps[k + 1].rank() != mods[k + 1].dim:
                    return False
            if self.minimal:
                for k in range(len(maps)):
                    if not is_cover_minimal(maps[k]):
                        return False
        else:
            for k in range(len(maps) - 1):
                if not (maps[k + 1].matrix @ maps[k].matrix).is_zero():
                    return False
            if maps and maps[0].rank() != mods[0].dim:
                return False
            for k in range(len(maps) - 1):
                if maps[k].rank() + maps[k + 1].rank() != mods[k + 1].dim:
                    return False
            if self.minimal:
                img = self.maps[0]
                if not is_envelope_minimal(img):
                    return False
                for k in range(1, len(maps)):
                    soc = filtration(maps[k].target).socle_inclusion.matrix
                    if not subspace_contains(maps[k].matrix.column_space(), soc):
                        return False
        return True


def _proj_resolution_steps(m: Module, length: int):
    """Cached list of (cover data, kernel module) pairs for m."""
    steps = m._cache.setdefault("proj_res", [])
    current = m if not steps else steps[-1][1]
    while len(steps) < length:
        cov = projective_cover_data(current)
        kernel, _ = submodule(cov.module, cov.map.matrix.nullspace())
        steps.append((cov, kernel))
        current = kernel
    return steps


def _inj_resolution_steps(m: Module, length: int):
    steps = m._cache.setdefault("inj_res", [])
    current = m if not steps else steps[-1][1]
    while len(steps) < length:
        env = cover_envelope(current, "injective")
        coker, proj = quotient_module(env.target, env.matrix.column_space())
        steps.append(((env, proj), coker))
        current = coker
    return steps


def min_resolution(m: Module, direction: str, length: int) -> ResolutionSegment:
    """Minimal resolution segment of the requested length."""
    if direction == "projective":
        steps = _proj_resolution_steps(m, length)
        modules = [m]
        maps = []
        prev_incl = None
        for cov, kernel in steps[:length]:
            if prev_incl is None:
                maps.append(cov.map)
            else:
                maps.append(ModuleMap(cov.module, maps[-1].source,
                                      prev_incl @ cov.map.matrix))
            modules.append(cov.module)
            prev_incl = cov.map.matrix.nullspace()
        return ResolutionSegment("projective", tuple(modules), tuple(maps))
    if direction != "injective":
        raise ContractViolation("direction must be 'projective' or 'injective'")
    steps = _inj_resolution_steps(m, length)
    modules = [m]
    maps = []
    prev_proj = None
    for (env, proj), coker in steps[:length]:
        if prev_proj is None:
            maps.append(env)
        else:
            maps.append(ModuleMap(maps[-1].target, env.target,
                                  env.matrix @ prev_proj.matrix))
        modules.append(env.target)
        prev_proj = proj
    return ResolutionSegment("injective", tuple(modules), tuple(maps))


def syzygy(m: Module, k: int) -> Module:
    """k-fold syzygy (k > 0), cosyzygy (k < 0), or projective-stripped m
    (k = 0)."""
    if k == 0:
        return strip(m, "projective")
    if k > 0:
        steps = _proj_resolution_steps(m, k)
        return steps[k - 1][1]
    steps = _inj_resolution_steps(m, -k)
    return steps[-k - 1][1]


# ----------------------------------------------------------------------
# transpose and translates


def transpose(m: Module, dim_cap: int | None = None) -> Module:
    """Auslander-Bridger transpose over the opposite algebra, via the
    algebra-dual of a minimal projective presentation.

    With ``dim_cap`` set, raises :class:`TranslateCapExceeded` before
    materializing an output larger than the cap."""
    a = m.algebra
    ctx = rep_context(a)
    p = a.p
    op = a.opposite
    if m.dim == 0:
        return Module.zero(op)
    cov0 = projective_cover_data(m)
    kernel, kernel_inc = submodule(cov0.module, cov0.map.matrix.nullspace())
    if kernel.dim == 0:
        return Module.zero(op)
    cov1 = projective_cover_data(kernel)
    f = kernel_inc.matrix @ cov1.map.matrix  # P1 -> P0

    def dual_blocks(blocks):
        mods, bases = [], []
        for i, _, _ in blocks:
            mod, basis = ctx.right_projective(i)
            mods.append(mod)
            bases.append(basis)
        if not mods:
            return Module.zero(op), [], []
        total, _, _ = direct_sum(mods, op)
        return total, mods, bases

    dual0, mods0, bases0 = dual_blocks(cov0.blocks)
    dual1, mods1, bases1 = dual_blocks(cov1.blocks)
    fstar = np.zeros((dual1.dim, dual0.dim), dtype=DTYPE)
    off_s = 0
    for s, (js, gen_s, block_off_s) in enumerate(cov1.blocks):
        # image of the block generator under f, split into target blocks
        p1_block_dim = ctx.projective(js)[0].dim
        gen_vec = np.zeros(cov1.module.dim, dtype=DTYPE)
        gen_vec[block_off_s:block_off_s + p1_block_dim] = gen_s
        image = f.arr @ gen_vec % p
        off_t = 0
        for t, (it, _, block_off_t) in enumerate(cov0.blocks):
            p0_block_dim = ctx.projective(it)[0].dim
            seg = image[block_off_t:block_off_t + p0_block_dim]
            # z in e_js A e_it as an algebra element; left multiplication by
            # z maps e_it A into e_js A, read off in block coordinates
            z = ctx.projective(it)[1].matrix.arr @ seg % p
            lz = a.left_action(z)
            retract = ctx.right_projective_retraction(js)
            comp = retract.arr @ lz @ bases0[t].arr % p
            fstar[off_s:off_s + mods1[s].dim, off_t:off_t + mods0[t].dim] = comp
            off_t += mods0[t].dim
        off_s += mods1[s].dim
    fstar_map = ModuleMap(dual0, dual1, FieldMatrix._wrap(fstar, p))
    if dim_cap is not None and dual1.dim - fstar_map.rank() > dim_cap:
        raise TranslateCapExceeded(dual1.dim - fstar_map.rank())
    return factor_maps(fstar_map).cokernel


@dataclass(frozen=True)
class TranslateResult:
    input: Module
    kind: str
    output: Module
    stripped: tuple  # dims of dropped summands, or None when not recorded

    def verify_stable(self) -> bool:
        """Certify that the output carries no forbidden summands.

        The transpose produces projective-free modules, so tau = D Tr is
        injective-free and tau^{-1} = Tr D is projective-free.
        """
        kind = "projective" if self.kind in ("trd", "cohigher") else "injective"
        if self.output.dim == 0:
            return True
        return strip(self.output, kind).dim == self.output.dim


def _stripped_record(m: Module, kind: str):
    if m.dim > STRIP_RECORD_LIMIT:
        return None
    dec = decompose(m)
    dims = []
    for rep, mult in dec.summands:
        proj, inj = flags(rep)
        if (kind == "projective" and proj) or (kind == "injective" and inj):
            dims.extend([rep.dim] * mult)
    return tuple(sorted(dims))


def ar_translate(m: Module, sign: int, dim_cap: int | None = None) -> TranslateResult:
    """tau (sign=+1, dual of transpose) or tau^{-1} (sign=-1)."""
    if sign > 0:
        out = dual_module(transpose(m, dim_cap))
        return TranslateResult(m, "dtr", out, _stripped_record(m, "projective"))
    out = transpose(dual_module(m), dim_cap)
    return TranslateResult(m, "trd", out, _stripped_record(m, "injective"))


def higher_translate(m: Module, mth: int) -> TranslateResult:
    """Composite translate: tau after the (|mth|-1)-fold (co)syzygy."""
    if mth == 0:
        raise ContractViolation("higher translate power must be nonzero")
    if mth > 0:
        shifted = syzygy(m, mth - 1) if mth > 1 else m
        out = dual_module(transpose(shifted))
        return TranslateResult(m, "higher", out, _stripped_record(m, "projective"))
    k = -mth
    shifted = syzygy(m, -(k - 1)) if k > 1 else m
    out = transpose(dual_module(shifted))
    return TranslateResult(m, "cohigher", out, _stripped_record(m, "injective"))


def nakayama_on_projectives(pm: Module) -> Module:
    """D Hom(-, algebra) on a projective module (an injective module with
    the matching socle)."""
    proj, _ = flags(pm)
    if not proj:
        raise ContractViolation("Nakayama functor applied to a non-projective module")
    a = pm.algebra
    p = a.p
    if pm.dim == 0:
        return Module.zero(a)
    ctx = rep_context(a)
    homs = hom_space(pm, ctx.regular)
    stacked = FieldMatrix._wrap(
        np.array([h.matrix.arr.reshape(-1) for h in homs]).T.copy(), p
    )
    acts = np.zeros((a.dim, len(homs), len(homs)), dtype=DTYPE)
    for b in range(a.dim):
        cols = [(a.right_tensor[b] @ h.matrix.arr % p).reshape(-1) for h in homs]
        sol = stacked.solve(FieldMatrix._wrap(np.array(cols).T.copy(), p))
        if sol is None:
            raise InternalError("right action left the hom space")
        acts[b] = sol.arr
    hom_right = Module(a.opposite, acts)
    return dual_module(hom_right)


# ----------------------------------------------------------------------
# Ext and flags


def _induced_map_on_homs(d: ModuleMap, from_homs, to_homs, p):
    """Matrix of precomposition with ``d``: expands phi . d over the
    ``to_homs`` basis for every phi in ``from_homs``."""
    if not to_homs:
        return FieldMatrix.zeros(0, len(from_homs), p)
    stacked = FieldMatrix._wrap(
        np.array([h.matrix.arr.reshape(-1) for h in to_homs]).T.copy(), p
    )
    if not from_homs:
        return FieldMatrix.zeros(len(to_homs), 0, p)
    cols = [(h.matrix @ d.matrix).arr.reshape(-1) for h in from_homs]
    sol = stacked.solve(FieldMatrix._wrap(np.array(cols).T.copy(), p))
    if sol is None:
        raise InternalError("induced hom map failed to express itself")
    return sol


def ext_dim(m: Module, n: Module, i: int) -> int:
    """Dimension of Ext^i(m, n) from a minimal projective resolution."""
    if i < 0:
        raise ContractViolation("Ext degree must be nonnegative")
    if m.dim == 0 or n.dim == 0:
        return 0
    if i == 0:
        return len(hom_space(m, n))
    p = m.algebra.p
    seg = min_resolution(m, "projective", i + 2)
    terms = seg.terms()
    homs = [hom_space(t, n) for t in terms[: i + 2]]
    # delta_k = Hom(d_k, n): Hom(P_{k-1}, n) -> Hom(P_k, n)
    delta_i = _induced_map_on_homs(seg.maps[i], homs[i - 1], homs[i], p)
    delta_next = _induced_map_on_homs(seg.maps[i + 1], homs[i], homs[i + 1], p)
    return len(homs[i]) - delta_i.rank() - delta_next.rank()


def flags(m: Module):
    """(projective, injective) flags via cover splitting and duality."""
    if "flags" not in m._cache:
        cover = projective_cover_data(m)
        projective = cover.module.dim == m.dim
        dual = dual_module(m)
        dual_cover = projective_cover_data(dual)
        injective = dual_cover.module.dim == m.dim
        m._cache["flags"] = (projective, injective)
    return m._cache["flags"]


def strip(m: Module, kind: str) -> Module:
    """Remove all projective (or injective) direct summands."""
    if kind not in ("projective", "injective"):
        raise ContractViolation("strip kind must be 'projective' or 'injective'")
    if m.dim == 0:
        return m
    dec = decompose(m)
    keep = []
    for rep, mult in dec.summands:
        proj, inj = flags(rep)
        drop = proj if kind == "projective" else inj
        if not drop:
            keep.extend([rep] * mult)
    if not keep:
        return Module.zero(m.algebra)
    return direct_sum(keep, m.algebra)[0]
