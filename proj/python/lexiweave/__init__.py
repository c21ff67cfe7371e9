"""Links source-language words to an English noun taxonomy."""

from ._core import (
    BilingualLexicon,
    DataError,
    LinkSet,
    MonolingualDictionary,
    Taxonomy,
    UsageError,
    association_ratio,
    build_base_wordnet,
    conceptual_distance,
    coverage,
    draw_sample,
    merge_bilinguals,
    normalize_lemma,
    run_cd_methods,
    run_class_methods,
    run_stage,
    select_accepted_cells,
    structural_records,
)

__all__ = [
    "BilingualLexicon",
    "DataError",
    "LinkSet",
    "MonolingualDictionary",
    "Taxonomy",
    "UsageError",
    "association_ratio",
    "build_base_wordnet",
    "conceptual_distance",
    "coverage",
    "draw_sample",
    "merge_bilinguals",
    "normalize_lemma",
    "run_cd_methods",
    "run_class_methods",
    "run_stage",
    "select_accepted_cells",
    "structural_records",
]
__version__ = "0.1.0"
