"""Acceptance suite: one test per criterion, exact arithmetic throughout,
one PASS line printed per criterion.

Run with ``pytest tests/test_acceptance.py -v -s``.
"""

import numpy as np
import pytest

from fdalg import presets
from fdalg.algebra import algebra_isomorphic, tensor_algebra
from fdalg.correspondence import (
    certify_pair,
    forward_pair,
    roundtrip_from_algebra,
    roundtrip_from_pair,
    verify_endoring_characterization,
    verify_functor_identities,
    verify_gproj_equivalence,
    verify_pair_structure,
    verify_torsion_battery,
)
from fdalg.exactla import FieldMatrix, reduce
from fdalg.homological import ar_translate, flags, strip, transpose
from fdalg.invariants import (
    dominant_dimension,
    ext_vanishing_window,
    injective_dimension_regular,
    is_gorenstein_projective,
    saturate_catalog,
)
from fdalg.repmod import (
    direct_sum,
    dual_module,
    is_isomorphic,
    random_module,
    rep_context,
)
from fdalg.tensorlab import (
    verify_tensor_duality,
    verify_tensor_dynkin,
    verify_translate_tensor_formula,
)


@pytest.fixture(scope="module")
def nak2():
    return presets.nak2()


@pytest.fixture(scope="module")
def aus2():
    return presets.aus2()


@pytest.fixture(scope="module")
def aus2_catalog(aus2):
    return saturate_catalog(aus2)


@pytest.fixture(scope="module")
def nak2_catalog(nak2):
    return saturate_catalog(nak2)


@pytest.fixture(scope="module")
def nak2_pair(nak2):
    ctx = rep_context(nak2)
    q, _, _ = direct_sum([ctx.regular, ctx.simple(0)])
    return certify_pair(nak2, q, 2)


def _report(number, text):
    print(f"criterion {number}: PASS - {text}")


def test_criterion_1_dimensions_of_aus2(aus2):
    dom = dominant_dimension(aus2)
    inj = injective_dimension_regular(aus2)
    assert dom.value == ("exact", 2)
    assert inj.value == ("exact", 2)
    # witness resolutions are genuine minimal resolutions
    assert dom.witness.verify()
    assert inj.witness.verify()
    assert [t.dim for t in inj.witness.terms()][:3] == [6, 3, 2]
    _report(1, "dominant and self-injective dimension of the dim-5 "
               "Auslander algebra are both exactly 2, with verified "
               "witness resolutions")


def test_criterion_2_forward_map(aus2, nak2):
    fwd = forward_pair(aus2, 2)
    assert fwd.pair.base.dim == 2
    assert algebra_isomorphic(fwd.pair.base, nak2) is not None
    assert fwd.pair.q.dim == 3
    assert len(fwd.pair.summands) == 2
    assert fwd.pair.certificates == {
        "gen_cogen": True, "orthogonal": True, "translate_closed": True}
    _report(2, "forward map lands on the dim-2 local base with a dim-3 "
               "module carrying two summands and all three pair conditions")


def test_criterion_3_roundtrips(aus2, nak2_pair):
    u_report = roundtrip_from_algebra(aus2, 2)
    assert u_report.passed
    assert u_report.witnesses["algebra_dim"] == 5
    assert u_report.witnesses["end_dim"] == 5
    b_report = roundtrip_from_pair(nak2_pair)
    assert b_report.passed
    assert b_report.witnesses["base_dim"] == 2
    assert b_report.witnesses["hom_module_dim"] == 3
    _report(3, "both canonical round trips are verified ring/module "
               "isomorphisms (bijective in dimension 5, recovering T and Q)")


def test_criterion_4_pair_structure(aus2):
    report = verify_pair_structure(aus2, 2)
    assert report.passed
    assert report.witnesses["non_injective_projectives"] == [2]
    assert report.witnesses["non_projective_injectives"] == [2]
    _report(4, "the cosyzygy pairing matches the unique non-injective "
               "projective with the unique non-projective injective, and "
               "both translate decompositions of Q hold as isomorphisms")


def test_criterion_5_gproj_suite(aus2, aus2_catalog, nak2_pair, nak2_catalog):
    assert aus2_catalog.complete
    # the catalog of the Kupisch-(2,3) Nakayama algebra has five members
    assert len(aus2_catalog.modules) == 5
    positives = [m for m in aus2_catalog.modules
                 if is_gorenstein_projective(m, 2)[0]]
    assert sorted(m.dim for m in positives) == [2, 3]
    assert all(flags(m)[0] for m in positives)
    negatives = [m for m in aus2_catalog.modules if m not in positives]
    assert all(not flags(m)[0] for m in negatives)
    window = 2 + aus2.dim
    for m in aus2_catalog.modules:
        assert is_gorenstein_projective(m, 2)[0] == ext_vanishing_window(m, window)
    equiv = verify_gproj_equivalence(nak2_pair, nak2_catalog)
    assert equiv.passed
    assert len(equiv.witnesses["orthogonal_members"]) == 2
    assert sorted(equiv.witnesses["image_dims"]) == [2, 3]
    assert sorted(equiv.witnesses["positives"]) == [2, 3]
    _report(5, "exactly the two indecomposable projectives are Gorenstein "
               "projective (cross-oracle agrees on the whole catalog) and "
               "the hom functor matches the base catalog onto them with "
               "hom dimensions preserved")


def test_criterion_6_endoring_characterization(nak2, nak2_catalog):
    assert nak2_catalog.complete
    assert len(nak2_catalog.modules) == 2
    report = verify_endoring_characterization(nak2, 2, nak2_catalog)
    assert report.passed
    w = report.witnesses
    assert w["effective_count"] == 1
    assert w["infima"] == [2, 2, 2]
    assert w["condition1"] is True
    _report(6, "exhaustive enumeration over the complete catalog leaves a "
               "single effective generator-cogenerator; all three infima "
               "equal 2 and agree with the translate condition")


def test_criterion_7_tensor_experiments(nak2):
    for quiver, name in ((presets.linear_quiver(2), "A2"),
                         (presets.linear_quiver(3), "A3")):
        report = verify_tensor_dynkin(quiver, nak2, bound=25)
        assert report.passed
        assert report.witnesses["dynkin"] is True
        assert all(length <= 25 for length in report.witnesses["orbit_lengths"])
        assert report.witnesses["certificates"] == {
            "gen_cogen": True, "orthogonal": True, "translate_closed": True}
    kron = verify_tensor_dynkin(presets.kronecker_quiver(), nak2, bound=25)
    assert kron.passed
    assert kron.witnesses["dynkin"] is False
    outcomes = [o["outcome"] for o in kron.witnesses["orbits"]]
    assert any(o == ["bound_exceeded", "step bound"] for o in outcomes)
    a2 = presets.a2()
    gamma = tensor_algebra(a2, nak2)
    ctx = rep_context(a2)
    for i in range(2):
        formula = verify_translate_tensor_formula(a2, nak2, ctx.injective(i),
                                                  0, 3, gamma)
        assert formula.passed
    _report(7, "both Dynkin tensor algebras close their injective orbits "
               "within 25 steps and certify the saturated pair; the "
               "Kronecker tensor orbit exceeds the bound; the translate "
               "transfer formula holds exactly for three steps")


def test_criterion_8_property_suites(aus2, aus2_catalog, nak2, nak2_pair,
                                     nak2_catalog):
    # rank-nullity on random exact matrices
    rng = np.random.default_rng(8)
    for _ in range(20):
        m = FieldMatrix(rng.integers(0, 101, (6, 5)))
        res = reduce(m)
        assert res.rank + res.kernel_basis.cols == m.cols
        assert (m @ res.kernel_basis).is_zero()
    # double dual and double transpose
    for mod in aus2_catalog.modules:
        assert is_isomorphic(dual_module(dual_module(mod)), mod)
        assert is_isomorphic(transpose(transpose(mod)), strip(mod, "projective"))
        fwd = ar_translate(mod, +1).output
        if fwd.dim:
            assert is_isomorphic(ar_translate(fwd, -1).output,
                                 strip(mod, "projective"))
    # hom-dimension preservation under the generator hom functor
    fidel = verify_functor_identities(nak2, nak2_pair.q, nak2_catalog, 2)
    assert fidel.passed
    # duality of tensor products on ten random small pairs
    rng = np.random.default_rng(15)
    a2 = presets.a2()
    for _ in range(10):
        m = random_module(a2, rng)
        n = random_module(nak2, rng)
        assert verify_tensor_duality(m, n).passed
    # torsion decompositions across the full catalog
    torsion = verify_torsion_battery(aus2, aus2_catalog)
    assert torsion.passed
    assert len(torsion.witnesses["torsion_decompositions"]) == 5
    _report(8, "rank-nullity, double-dual and double-transpose identities, "
               "hom-functor fidelity, tensor duality on ten random pairs, "
               "and the torsion decomposition of the whole catalog all "
               "hold exactly")


def test_criterion_9_higher_n_property_paths(nak2_catalog):
    # the n >= 3 code paths are exercised at the property level: the
    # vacuous n = 2 range, a non-vacuous n = 3 Ext symmetry over the
    # three-step local algebra, and the stable translate identities
    nak3 = presets.nak3()
    cat3 = saturate_catalog(nak3)
    assert cat3.complete and len(cat3.modules) == 3
    gen, _, _ = direct_sum(list(cat3.modules))
    report = verify_functor_identities(nak3, gen, cat3, 3)
    assert report.passed
    assert report.witnesses["ext_symmetry_checks"] > 0
    # the additive generator is not 1-self-orthogonal (the simple extends
    # itself), so the depth-3 certificate must reject it on exactly that
    # condition; the regular module alone is certified
    pair_gen = certify_pair(nak3, gen, 3)
    assert pair_gen.certificates == {
        "gen_cogen": True, "orthogonal": False, "translate_closed": True}
    pair3 = certify_pair(nak3, rep_context(nak3).regular, 3)
    assert pair3.member
    from fdalg.homological import higher_translate

    for mod in cat3.modules:
        up = higher_translate(mod, 2)
        assert up.verify_stable()
        down = higher_translate(mod, -2)
        assert down.verify_stable()
    for mod in nak2_catalog.modules:
        assert is_isomorphic(higher_translate(mod, 1).output,
                             ar_translate(mod, +1).output)
    _report(9, "higher-depth code paths verified at property level: "
               "non-vacuous Ext symmetry at n = 3, a certified depth-3 "
               "pair, and stable higher-translate identities")
