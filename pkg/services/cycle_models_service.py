"""Formal cdga models of the cycle complexes over X, the affine line and the point.

Each model is the cobar construction of a piece of the dual coalgebra,
followed by a quotient that renames the suspended tags and kills the
generators that are zero on cycles:

=========  ========================  =========================================
space      coalgebra                 generators
=========  ========================  =========================================
``x``      t01 part + T@1 part       ``L0:W`` (W != 0), ``L1:W`` (W != 1), ``K:W`` (|W| >= 2)
``a1``     T@1 part                  ``M:W``
``point``  T@1 part                  ``N:W``
``geom``   Tx quotient (alpha only)  ``G:W``
=========  ========================  =========================================

Generators are ordered by (weight, family, word).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Hashable, Optional

from .colie_service import T0, T1, T_AT_ONE, TX, tcl_coalgebra
from .dgcore_service import CdgaElement, CdgaMorphism, CdgaPresentation, cobar_coLie, rename_presentation, suspended_name
from .errors import InvalidInputError
from .linear import Combination

logger = logging.getLogger(__name__)

SPACES = ("x", "a1", "point", "geom")
FAMILY_ORDER = {"L0": 0, "L1": 1, "K": 2, "M": 3, "N": 4, "G": 5}


def split_generator_name(name: str):
    family, _, word = name.partition(":")
    return family, word


def generator_order_key(name: str) -> tuple:
    family, word = split_generator_name(name)
    return len(word), FAMILY_ORDER.get(family, len(FAMILY_ORDER)), word


def _x_tag_name(tag) -> Optional[str]:
    kind, word = tag
    if kind == T0:
        return None if word == "0" else f"L0:{word}"
    if kind == T1:
        return None if word == "1" else f"L1:{word}"
    if kind == T_AT_ONE:
        return f"K:{word}" if len(word) >= 2 else None
    return None


_TAG_NAMING = {
    "x": _x_tag_name,
    "a1": lambda tag: f"M:{tag[1]}" if tag[0] == T_AT_ONE else None,
    "point": lambda tag: f"N:{tag[1]}" if tag[0] == T_AT_ONE else None,
    "geom": lambda tag: f"G:{tag[1]}" if tag[0] == TX else None,
}


@dataclass(frozen=True)
class CycleModel:
    """A model presentation together with the map from coLie tags to its generators."""

    space: str
    max_weight: int
    presentation: CdgaPresentation
    tag_to_generator: Dict[Hashable, Optional[str]]

    def generator_for(self, tag) -> Optional[str]:
        return self.tag_to_generator.get(tag)


def _coalgebra_for(space: str, max_weight: int):
    if space == "x":
        return tcl_coalgebra(max_weight, "t01").direct_sum(tcl_coalgebra(max_weight, "one"))
    if space in ("a1", "point"):
        return tcl_coalgebra(max_weight, "one")
    return tcl_coalgebra(max_weight, "geom")


@lru_cache(maxsize=None)
def build_model(space: str, max_weight: int) -> CycleModel:
    if space not in SPACES:
        raise InvalidInputError(f"unknown space {space!r}; expected one of {SPACES}")
    if max_weight < 1:
        raise InvalidInputError(f"max_weight must be >= 1, got {max_weight}")
    coalgebra = _coalgebra_for(space, max_weight)
    naming = _TAG_NAMING[space]
    by_suspension = {suspended_name(tag): naming(tag) for tag in coalgebra.tags}
    cobar = cobar_coLie(coalgebra, label=f"cobar-{space}-{max_weight}")
    presentation = rename_presentation(
        cobar, by_suspension.get, generator_order_key, label=f"{space}-model-{max_weight}"
    )
    logger.info("🔧 built %s model to weight %d (%d generators)", space, max_weight, len(presentation.generators))
    return CycleModel(
        space=space,
        max_weight=max_weight,
        presentation=presentation,
        tag_to_generator={tag: naming(tag) for tag in coalgebra.tags},
    )


def model_X(max_weight: int) -> CdgaPresentation:
    return build_model("x", max_weight).presentation


def model_A1(max_weight: int) -> CdgaPresentation:
    return build_model("a1", max_weight).presentation


def model_point(max_weight: int) -> CdgaPresentation:
    return build_model("point", max_weight).presentation


def model_geom(max_weight: int) -> CdgaPresentation:
    return build_model("geom", max_weight).presentation


def _images(source: CdgaPresentation, target: CdgaPresentation, rule) -> Dict[str, CdgaElement]:
    images = {}
    for g in source.generators:
        acc = {}
        for name, coeff in rule(g.name):
            if target.has(name):
                acc[(name,)] = acc.get((name,), 0) + coeff
        images[g.name] = Combination(acc)
    return images


@lru_cache(maxsize=None)
def restriction_j(max_weight: int) -> CdgaMorphism:
    """``M:W -> L0:W - L1:W`` from the affine-line model to the X model."""
    source, target = model_A1(max_weight), model_X(max_weight)
    rule = lambda name: [(f"L0:{name[2:]}", 1), (f"L1:{name[2:]}", -1)]
    return CdgaMorphism(source, target, _images(source, target, rule), label="j*")


@lru_cache(maxsize=None)
def constant_pullback(max_weight: int) -> CdgaMorphism:
    """``N:W -> K:W``; weight-one point generators go to zero."""
    source, target = model_point(max_weight), model_X(max_weight)
    rule = lambda name: [(f"K:{name[2:]}", 1)]
    return CdgaMorphism(source, target, _images(source, target, rule), label="p*")


@lru_cache(maxsize=None)
def fiber_at_one(max_weight: int) -> CdgaMorphism:
    """``M:W -> N:W`` from the affine-line model to the point model."""
    source, target = model_A1(max_weight), model_point(max_weight)
    rule = lambda name: [(f"N:{name[2:]}", 1)]
    return CdgaMorphism(source, target, _images(source, target, rule), label="i1*")


@lru_cache(maxsize=None)
def geometric_projection(max_weight: int) -> CdgaMorphism:
    """``L0:W, L1:W -> G:W`` and ``K:W -> 0`` from the X model to the geometric model."""
    source, target = model_X(max_weight), model_geom(max_weight)

    def rule(name):
        family, word = split_generator_name(name)
        return [(f"G:{word}", 1)] if family in ("L0", "L1") else []

    return CdgaMorphism(source, target, _images(source, target, rule), label="pi")


def restrict_j(e: CdgaElement, max_weight: int) -> CdgaElement:
    return restriction_j(max_weight).apply(e)


def const_pullback(e: CdgaElement, max_weight: int) -> CdgaElement:
    return constant_pullback(max_weight).apply(e)


def fiber_i1(e: CdgaElement, max_weight: int) -> CdgaElement:
    return fiber_at_one(max_weight).apply(e)

