"""Instance rewritings: normalisation, gadgets and hardness reductions."""

from .expander import BipartiteMask, blowup_size, is_verified, monochrome_blocks, sample_verified_expander
from .gadgets import (
    add_restriction_loop,
    gadget_three_path,
    restricted_domain,
    subdivide_for_square,
    three_path_target,
)
from .normalize import (
    BlowupStats,
    eliminate_loops,
    eliminate_parallel_edges,
    fresh_ids,
    majority_witness,
    normalize,
)
from .reductions import (
    CnfFormula,
    decode_one_in_three,
    emit_formula,
    formula_from_dict,
    is_three_colourable,
    load_formula,
    one_in_three_target,
    parse_formula,
    reduce_one_in_three_sat,
    reduce_three_colouring,
    reflexive_path_target,
    three_colouring_labels,
)

__all__ = [
    "BipartiteMask",
    "BlowupStats",
    "CnfFormula",
    "add_restriction_loop",
    "blowup_size",
    "decode_one_in_three",
    "eliminate_loops",
    "eliminate_parallel_edges",
    "emit_formula",
    "formula_from_dict",
    "fresh_ids",
    "gadget_three_path",
    "is_three_colourable",
    "is_verified",
    "load_formula",
    "majority_witness",
    "monochrome_blocks",
    "normalize",
    "one_in_three_target",
    "parse_formula",
    "reduce_one_in_three_sat",
    "reduce_three_colouring",
    "reflexive_path_target",
    "restricted_domain",
    "sample_verified_expander",
    "subdivide_for_square",
    "three_colouring_labels",
    "three_path_target",
]
