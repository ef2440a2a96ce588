"""Virtual braids and their representations by automorphisms."""

from braid_reps.braids import (
    BraidError,
    BraidLetter,
    BraidParseError,
    BraidWord,
    LetterKind,
    Relation,
    RelationError,
    braid,
    parse_braid,
    rho,
    sigma,
    vbn_relations,
)
from braid_reps.catalogue import CATALOGUE, CatalogueError, parse_representation_name
from braid_reps.representations import (
    ConjugatorError,
    RelationFailure,
    RepresentationSpec,
    VerificationReport,
    apply_braid,
    braid_image,
    catalogue_names,
    conjugate_representation,
    equivalent_by_standard_conjugator,
    get_representation,
    is_virtually_symmetric,
    standard_conjugator,
    tilde_name,
    verify_representation,
)

__all__ = [
    "CATALOGUE",
    "BraidError",
    "BraidLetter",
    "BraidParseError",
    "BraidWord",
    "CatalogueError",
    "ConjugatorError",
    "LetterKind",
    "Relation",
    "RelationError",
    "RelationFailure",
    "RepresentationSpec",
    "VerificationReport",
    "apply_braid",
    "braid",
    "braid_image",
    "catalogue_names",
    "conjugate_representation",
    "equivalent_by_standard_conjugator",
    "get_representation",
    "is_virtually_symmetric",
    "parse_braid",
    "parse_representation_name",
    "rho",
    "sigma",
    "standard_conjugator",
    "tilde_name",
    "verify_representation",
]
