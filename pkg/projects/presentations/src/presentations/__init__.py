"""Group presentations of marked Gauss diagrams and virtual braids."""

from presentations.abelian import (
    Abelianization,
    abelianization,
    invariant_factors_of,
    relation_matrix,
)
from presentations.cgroups import (
    CmReport,
    ConjugationRelation,
    as_conjugation,
    classify_cm,
    relation_graph,
)
from presentations.construction import (
    arc_labels,
    diagram_context,
    event_conjugator,
    group_of_braid,
    presentation_of_diagram,
)
from presentations.finite_groups import (
    FiniteGroup,
    GroupTableError,
    from_table,
    load_table,
    named_group,
    symmetric_group,
)
from presentations.homs import (
    SEARCH_LIMIT,
    SearchLimitError,
    SearchPlan,
    evaluate_word,
    hom_count,
    iter_homomorphisms,
    plan_search,
)
from presentations.presentation import (
    Presentation,
    PresentationError,
    conjugation_relator,
    format_presentation,
    parse_presentation,
)
from presentations.tietze import MAX_LENGTH, Simplification, simplify, simplify_with_map

__all__ = [
    "MAX_LENGTH",
    "SEARCH_LIMIT",
    "Abelianization",
    "CmReport",
    "ConjugationRelation",
    "FiniteGroup",
    "GroupTableError",
    "Presentation",
    "PresentationError",
    "SearchLimitError",
    "SearchPlan",
    "Simplification",
    "abelianization",
    "arc_labels",
    "as_conjugation",
    "classify_cm",
    "conjugation_relator",
    "diagram_context",
    "evaluate_word",
    "event_conjugator",
    "format_presentation",
    "from_table",
    "group_of_braid",
    "hom_count",
    "invariant_factors_of",
    "iter_homomorphisms",
    "load_table",
    "named_group",
    "parse_presentation",
    "plan_search",
    "presentation_of_diagram",
    "relation_graph",
    "relation_matrix",
    "simplify",
    "simplify_with_map",
    "symmetric_group",
]
