"""Homological invariants: dominant dimension, self-injective dimension,
the minimal faithful module, generator-cogenerator and add-membership
tests, orthogonality, the Gorenstein-projective test, and catalog
saturation.

Both dimension reports are bounded searches sharing one cached minimal
injective resolution, so their witnesses agree on the common prefix.
Self-injectivity is detected directly (the regular module is injective),
not by exhausting the bound.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import DEFAULT_SEED, StructureAlgebra
from .errors import HypothesisError
from .exactla import FieldMatrix
from .homological import (
    ar_translate,
    ext_dim,
    flags,
    min_resolution,
    syzygy,
)
from .repmod import (
    Module,
    decompose,
    direct_sum,
    filtration,
    is_isomorphic,
    quotient_module,
    rep_context,
)


@dataclass(frozen=True)
class HomDimReport:
    """Value is ('exact', k), ('at_least', bound) or ('infinite',)."""

    value: tuple
    witness: object  # ResolutionSegment

    def is_exact(self, k: int) -> bool:
        return self.value == ("exact", k)

    def as_json(self):
        return {"value": list(self.value),
                "terms": [t.dim for t in self.witness.terms()] if self.witness else []}


def dominant_dimension(a: StructureAlgebra, bound: int = 8) -> HomDimReport:
    """Number of leading projective-injective terms in the minimal
    injective resolution of the regular module."""
    reg = rep_context(a).regular
    if flags(reg)[1]:
        return HomDimReport(("infinite",), min_resolution(reg, "injective", 1))
    seg = min_resolution(reg, "injective", bound)
    for k, term in enumerate(seg.terms()):
        proj, inj = flags(term)
        if not (proj and inj):
            return HomDimReport(("exact", k), seg)
    return HomDimReport(("at_least", bound), seg)


def injective_dimension_regular(a: StructureAlgebra, bound: int = 8) -> HomDimReport:
    """Length of the minimal injective resolution of the regular module."""
    reg = rep_context(a).regular
    if flags(reg)[1]:
        return HomDimReport(("exact", 0), min_resolution(reg, "injective", 1))
    seg = min_resolution(reg, "injective", bound + 2)
    terms = seg.terms()
    for k in range(len(terms)):
        if terms[k].dim == 0:
            return HomDimReport(("exact", k - 1), seg)
    return HomDimReport(("at_least", bound), seg)


def minimal_faithful(a: StructureAlgebra) -> Module:
    """Basic direct sum of the projective-injective indecomposables; exists
    exactly when the dominant dimension is at least 1."""
    ctx = rep_context(a)
    if "minimal_faithful" in ctx._cache:
        return ctx._cache["minimal_faithful"]
    dec = decompose(ctx.regular)
    picks = [rep for rep, _ in dec.summands if flags(rep) == (True, True)]
    env0 = min_resolution(ctx.regular, "injective", 1).terms()[0]
    if not picks or not flags(env0)[0]:
        raise HypothesisError(
            "no minimal faithful module: dominant dimension is zero"
        )
    module = direct_sum(picks, a)[0]
    # faithfulness certificate: zero annihilator
    stacked = np.array([module.actions[i].reshape(-1) for i in range(a.dim)]).T
    ann = FieldMatrix._wrap(np.ascontiguousarray(stacked), a.p).nullspace()
    if ann.cols:
        raise HypothesisError("candidate minimal faithful module is not faithful")
    ctx._cache["minimal_faithful"] = module
    return module


def add_membership(m: Module, n: Module, seed: int = DEFAULT_SEED) -> bool:
    """Every indecomposable summand of m occurs as a summand of n."""
    if m.dim == 0:
        return True
    targets = [rep for rep, _ in decompose(n, seed).summands]
    for rep, _ in decompose(m, seed).summands:
        if not any(is_isomorphic(rep, t, seed) for t in targets):
            return False
    return True


def gen_cogen(m: Module, seed: int = DEFAULT_SEED) -> bool:
    """add(m) contains the regular module and the dual of the opposite
    regular module (all projectives and all injectives)."""
    ctx = rep_context(m.algebra)
    return add_membership(ctx.regular, m, seed) and add_membership(
        ctx.injective_cogenerator, m, seed
    )


def is_orthogonal(m: Module, n: Module, k: int) -> bool:
    """Ext^i(m, n) = 0 for 1 <= i <= k (vacuously true for k = 0)."""
    return all(ext_dim(m, n, i) == 0 for i in range(1, k + 1))


def certify_dominant_class(a: StructureAlgebra, n: int, bound: int = 8):
    """(member, dom report, inj report) for dom.dim = inj.dim = n."""
    dom = dominant_dimension(a, bound)
    inj = injective_dimension_regular(a, bound)
    return dom.is_exact(n) and inj.is_exact(n), dom, inj


def _gproj_cache(a: StructureAlgebra, n: int, bound: int):
    key = ("gproj_ambient", n)
    ctx = rep_context(a)
    if key not in ctx._cache:
        member, dom, inj = certify_dominant_class(a, n, bound)
        if not member:
            raise HypothesisError(
                "Gorenstein-projective test requires dominant dimension = "
                f"self-injective dimension = {n}"
            )
        ctx._cache[key] = True
    return minimal_faithful(a)


def is_gorenstein_projective(m: Module, n: int, bound: int = 8,
                             seed: int = DEFAULT_SEED):
    """Whether the first n minimal injective-resolution terms of m lie in
    add of the minimal faithful module; returns (flag, witness segment)."""
    faithful = _gproj_cache(m.algebra, n, bound)
    seg = min_resolution(m, "injective", n)
    ok = all(add_membership(term, faithful, seed) for term in seg.terms())
    return ok, seg


def ext_vanishing_window(m: Module, window: int) -> bool:
    """Independent cross-oracle: Ext^i(m, regular) = 0 for 1 <= i <= window."""
    reg = rep_context(m.algebra).regular
    return all(ext_dim(m, reg, i) == 0 for i in range(1, window + 1))


def gorenstein_projective_dimension_at_most(m: Module, k: int, n: int,
                                            bound: int = 8) -> bool:
    """Gproj-dimension <= k via the syzygy characterization: the k-th
    syzygy is Gorenstein projective."""
    target = syzygy(m, k) if k > 0 else m
    return is_gorenstein_projective(target, n, bound)[0]


@dataclass(frozen=True)
class Catalog:
    algebra: StructureAlgebra
    modules: tuple
    complete: bool

    def __len__(self):
        return len(self.modules)


def saturate_catalog(a: StructureAlgebra, bound: int = 64,
                     seed: int = DEFAULT_SEED) -> Catalog:
    """Close the projectives, injectives and simples under translates,
    (co)syzygies, radical and socle-quotient, splitting every output into
    indecomposables; complete only if the fixpoint was reached."""
    ctx = rep_context(a)
    found = []

    def register(module):
        if module.dim == 0:
            return False
        fresh = []
        for rep, _ in decompose(module, seed).summands:
            if not any(is_isomorphic(rep, known, seed) for known in found):
                found.append(rep)
                fresh.append(rep)
        return bool(fresh)

    seeds = [ctx.regular, ctx.injective_cogenerator]
    seeds.extend(ctx.simple(i) for i in range(len(ctx.idempotents)))
    for s in seeds:
        register(s)
        if len(found) > bound:
            return Catalog(a, tuple(found[:bound]), False)

    frontier = list(found)
    while frontier:
        nxt = []
        for m in frontier:
            filt = filtration(m)
            candidates = [
                ar_translate(m, +1).output,
                ar_translate(m, -1).output,
                syzygy(m, 1),
                syzygy(m, -1),
                filt.radical,
                quotient_module(m, filt.socle_inclusion.matrix)[0],
            ]
            for c in candidates:
                before = len(found)
                register(c)
                nxt.extend(found[before:])
                if len(found) > bound:
                    return Catalog(a, tuple(found[:bound]), False)
        frontier = nxt
    return Catalog(a, tuple(found), True)
