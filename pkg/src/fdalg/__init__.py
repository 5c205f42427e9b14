"""fdalg: exact computations with finite-dimensional algebras over F_p."""

from ._backend import BACKEND
from .exactla import DEFAULT_PRIME, FieldMatrix, ReduceResult, reduce, solve

DEFAULT_SEED = 0xD7

from .algebra import (  # noqa: E402
    Quiver,
    QuiverPresentation,
    StructureAlgebra,
    algebra_isomorphic,
    build_path_algebra_quotient,
    is_split_basic,
    opposite_algebra,
    primitive_idempotents,
    radical_basis,
    tensor_algebra,
)
from .repmod import (  # noqa: E402
    Module,
    ModuleMap,
    decompose,
    direct_sum,
    dual_module,
    end_algebra_op,
    factor_maps,
    filtration,
    hom_functor_module,
    hom_space,
    is_isomorphic,
    regular_module,
    reject_embed,
    tensor_over,
)
from .homological import (  # noqa: E402
    ar_translate,
    cover_envelope,
    ext_dim,
    flags,
    higher_translate,
    min_resolution,
    nakayama_on_projectives,
    strip,
    syzygy,
    transpose,
)
from .invariants import (  # noqa: E402
    Catalog,
    dominant_dimension,
    gen_cogen,
    injective_dimension_regular,
    is_gorenstein_projective,
    is_orthogonal,
    minimal_faithful,
    saturate_catalog,
)
from .correspondence import (  # noqa: E402
    VerificationReport,
    backward_algebra,
    certify_pair,
    forward_pair,
    roundtrip_from_algebra,
    roundtrip_from_pair,
)
from .tensorlab import (  # noqa: E402
    OrbitTrace,
    is_dynkin,
    translate_orbit,
    verify_tensor_dynkin,
)

__all__ = [
    "BACKEND",
    "DEFAULT_PRIME",
    "DEFAULT_SEED",
    "FieldMatrix",
    "ReduceResult",
    "reduce",
    "solve",
    "Quiver",
    "QuiverPresentation",
    "StructureAlgebra",
    "algebra_isomorphic",
    "build_path_algebra_quotient",
    "is_split_basic",
    "opposite_algebra",
    "primitive_idempotents",
    "radical_basis",
    "tensor_algebra",
    "Module",
    "ModuleMap",
    "decompose",
    "direct_sum",
    "dual_module",
    "end_algebra_op",
    "factor_maps",
    "filtration",
    "hom_functor_module",
    "hom_space",
    "is_isomorphic",
    "regular_module",
    "reject_embed",
    "tensor_over",
    "ar_translate",
    "cover_envelope",
    "ext_dim",
    "flags",
    "higher_translate",
    "min_resolution",
    "nakayama_on_projectives",
    "strip",
    "syzygy",
    "transpose",
    "Catalog",
    "dominant_dimension",
    "gen_cogen",
    "injective_dimension_regular",
    "is_gorenstein_projective",
    "is_orthogonal",
    "minimal_faithful",
    "saturate_catalog",
    "VerificationReport",
    "backward_algebra",
    "certify_pair",
    "forward_pair",
    "roundtrip_from_algebra",
    "roundtrip_from_pair",
    "OrbitTrace",
    "is_dynkin",
    "translate_orbit",
    "verify_tensor_dynkin",
]
