from .bar_service import BarConstruction, bar_differential, bar_for, deconcatenation, delta_Q, hain_projector, shuffle
from .colie_service import ab_tables, d_cy, tcl_coalgebra
from .cycle_models_service import const_pullback, fiber_i1, model_A1, model_geom, model_point, model_X, restrict_j
from .dgcore_service import CdgaMorphism, CdgaPresentation, cdga_multiply, cobar_coLie, koszul_sign
from .freelie_service import alpha_table, expand, lie_bracket, rewrite_in_lyndon
from .ihara_service import ihara_bracket, semidirect_bracket, special_derivation, structure_tables
from .lift_service import adjunction_unit, closed_lift_oracle, lift_LB, unit_audit
from .trees_service import delta_T, enumerate_trees
from .verify_service import Verifier, verify_EDQX, verify_geom_basis
from .words_service import is_lyndon, lyndon_words, standard_factorization

__all__ = [
    "BarConstruction",
    "CdgaMorphism",
    "CdgaPresentation",
    "Verifier",
    "ab_tables",
    "adjunction_unit",
    "alpha_table",
    "bar_differential",
    "bar_for",
    "cdga_multiply",
    "closed_lift_oracle",
    "cobar_coLie",
    "const_pullback",
    "d_cy",
    "deconcatenation",
    "delta_Q",
    "delta_T",
    "enumerate_trees",
    "expand",
    "fiber_i1",
    "hain_projector",
    "ihara_bracket",
    "is_lyndon",
    "koszul_sign",
    "lie_bracket",
    "lift_LB",
    "lyndon_words",
    "model_A1",
    "model_X",
    "model_geom",
    "model_point",
    "restrict_j",
    "rewrite_in_lyndon",
    "semidirect_bracket",
    "shuffle",
    "special_derivation",
    "standard_factorization",
    "structure_tables",
    "tcl_coalgebra",
    "unit_audit",
    "verify_EDQX",
    "verify_geom_basis",
]
