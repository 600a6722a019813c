"""Brauer configuration algebras of dessins d'enfants."""

from brauer_dessins.algebra import (
    AlgebraPresentation,
    ProperPath,
    Relation,
    RelationKind,
    Socle,
    Trivial,
    basis,
    centre_basis_formula,
    centre_bruteforce,
    centre_dimension_formula,
    centres_isomorphic_by_formula,
    dimension_formula,
    multiply,
    presentation,
    relations,
    zero_product_check,
)
from brauer_dessins.census import enumerate_dessins, fingerprint, group_by_passport, verify_corpus
from brauer_dessins.dessin import (
    Dessin,
    NotTransitiveError,
    Passport,
    canonical_form,
    dual,
    example_3,
    example_fig1,
    is_isomorphic,
    mirror,
    nakayama,
    new_dessin,
    oriented_dual,
    passport,
    polygon,
    star,
    trivial,
)
from brauer_dessins.permutation import Permutation, compose, cycles
from brauer_dessins.quiver import (
    Arrow,
    Quiver,
    SpecialCycle,
    face_cycle_decomposition,
    full_quiver,
    opposite,
    polygonal_face_paths,
    quiver_equal,
    restricted_quiver,
    special_cycles,
)
from brauer_dessins.workbench import format_dessin, parse_dessin, render_report

__version__ = "0.1.0"
