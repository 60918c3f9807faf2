"""The graded dual Lie coalgebra of L[1;x].

Basis tags are pairs ``(kind, W)``:

* ``("Tx", W)`` and ``("T@1", W)``: the duals of ``[W](x)`` and ``[W](1)`` (x1 basis)
* ``("T0", W) = Tx`` and ``("T1", W) = Tx - T@1`` (t01 basis)

A wedge of two degree-0 tags is stored under the sorted pair of tags with
the sign ``u^v = -v^u`` absorbed into the coefficient.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Hashable, Iterable, Mapping, Optional, Tuple

from .errors import ConsistencyError, InvalidInputError
from .ihara_service import structure_tables
from .linear import CoefficientTable, Combination, accumulate
from .words_service import is_lyndon, lyndon_words

logger = logging.getLogger(__name__)

TX = "Tx"
T_AT_ONE = "T@1"
T0 = "T0"
T1 = "T1"

BASIS_OF_KIND = {TX: "x1", T_AT_ONE: "x1", T0: "t01", T1: "t01"}
BASES = ("x1", "t01")

Tag = Tuple[str, str]
CoLieElement = Combination
WedgeElement = Combination

HALF = Fraction(1, 2)


def parse_tag(text: str) -> Tag:
    kind, sep, word = text.strip().partition(":")
    if not sep or kind not in BASIS_OF_KIND:
        raise InvalidInputError(f"bad tag {text!r}; expected one of T0:W, T1:W, Tx:W, T@1:W")
    if not word or set(word) - {"0", "1"} or not is_lyndon(word):
        raise InvalidInputError(f"tag {text!r} does not name a Lyndon word")
    return kind, word


def format_tag(tag: Hashable) -> str:
    if isinstance(tag, tuple) and len(tag) == 2:
        return f"{tag[0]}:{tag[1]}"
    return str(tag)


def tag_weight(tag: Tag) -> int:
    return len(tag[1])


def colie_basis(tag: Tag, coeff=1) -> CoLieElement:
    return Combination.basis(tag, coeff)


def basis_flag(t: CoLieElement) -> Optional[str]:
    flags = {BASIS_OF_KIND[kind] for kind, _ in t}
    if len(flags) > 1:
        raise InvalidInputError("coLie element mixes the x1 and t01 bases")
    return flags.pop() if flags else None


def wedge_key(u: Hashable, v: Hashable) -> Optional[Tuple[Tuple[Hashable, Hashable], int]]:
    if u == v:
        return None
    if u < v:
        return (u, v), 1
    return (v, u), -1


def wedge(pairs: Iterable[Tuple[Hashable, Hashable, object]]) -> WedgeElement:
    acc: Dict[Hashable, Fraction] = {}
    for u, v, c in pairs:
        key = wedge_key(u, v)
        if key is not None:
            accumulate(acc, key[0], c * key[1])
    return Combination.from_accumulator(acc)


def wedge_coefficient(w: WedgeElement, u: Hashable, v: Hashable) -> Fraction:
    key = wedge_key(u, v)
    if key is None:
        return Fraction(0)
    return w[key[0]] * key[1]


def wedge_to_tensor(w: WedgeElement) -> Combination:
    """Embed ``u^v`` as ``(u(x)v - v(x)u)/2``."""
    acc: Dict[Hashable, Fraction] = {}
    for (u, v), c in w.items():
        accumulate(acc, (u, v), c * HALF)
        accumulate(acc, (v, u), -c * HALF)
    return Combination.from_accumulator(acc)


def _tag_to_x1(tag: Tag) -> CoLieElement:
    kind, word = tag
    if kind == T0:
        return colie_basis((TX, word))
    if kind == T1:
        return Combination({(TX, word): 1, (T_AT_ONE, word): -1})
    return colie_basis(tag)


def _tag_to_t01(tag: Tag) -> CoLieElement:
    kind, word = tag
    if kind == TX:
        return colie_basis((T0, word))
    if kind == T_AT_ONE:
        return Combination({(T0, word): 1, (T1, word): -1})
    return colie_basis(tag)


_CONVERTERS = {"x1": _tag_to_x1, "t01": _tag_to_t01}


def change_basis(t: CoLieElement, target: str) -> CoLieElement:
    if target not in _CONVERTERS:
        raise InvalidInputError(f"unknown basis {target!r}; expected one of {BASES}")
    return t.linear_map(_CONVERTERS[target])


def wedge_change_basis(w: WedgeElement, target: str) -> WedgeElement:
    convert = _CONVERTERS[target]
    acc: Dict[Hashable, Fraction] = {}
    for (u, v), c in w.items():
        for u2, cu in convert(u).items():
            for v2, cv in convert(v).items():
                key = wedge_key(u2, v2)
                if key is not None:
                    accumulate(acc, key[0], c * cu * cv * key[1])
    return Combination.from_accumulator(acc)


@lru_cache(maxsize=None)
def _d_cy_x1_tag(tag: Tag) -> WedgeElement:
    kind, w = tag
    tables = structure_tables(len(w))
    if kind == TX:
        pairs = [((TX, u), (TX, v), c) for u, v, c in tables.alpha.terms_for(w)]
        pairs += [((TX, u), (T_AT_ONE, v), c) for u, v, c in tables.beta.terms_for(w)]
    else:
        pairs = [((T_AT_ONE, u), (T_AT_ONE, v), c) for u, v, c in tables.gamma.terms_for(w)]
    return wedge(pairs)


def d_cy(t: CoLieElement, basis: Optional[str] = None) -> WedgeElement:
    """Cobracket dual to the semidirect bracket, returned in ``basis`` (default: the input's)."""
    source = basis_flag(t) or "x1"
    target = basis or source
    if target not in _CONVERTERS:
        raise InvalidInputError(f"unknown basis {target!r}; expected one of {BASES}")
    acc: Dict[Hashable, Fraction] = {}
    for tag, c in change_basis(t, "x1").items():
        for key, c2 in _d_cy_x1_tag(tag).items():
            accumulate(acc, key, c * c2)
    result = Combination.from_accumulator(acc)
    if target == "t01":
        result = wedge_change_basis(result, "t01")
    return result


@lru_cache(maxsize=None)
def _cobracket_tensor_tag(tag: Tag) -> Combination:
    return wedge_to_tensor(d_cy(colie_basis(tag)))


def cobracket_tensor(t: CoLieElement) -> Combination:
    """The cobracket as an antisymmetric tensor in the input's own basis."""
    return t.linear_map(_cobracket_tensor_tag)


def co_jacobi_defect(t: CoLieElement) -> Combination:
    """``(id + xi + xi^2)(delta (x) id) delta`` with ``xi(a,b,c) = (b,c,a)``."""
    acc: Dict[Hashable, Fraction] = {}
    for (x, y), c in cobracket_tensor(t).items():
        for (p, q), c2 in _cobracket_tensor_tag(x).items():
            coeff = c * c2
            accumulate(acc, (p, q, y), coeff)
            accumulate(acc, (q, y, p), coeff)
            accumulate(acc, (y, p, q), coeff)
    return Combination.from_accumulator(acc)


def antisymmetry_defect(t: CoLieElement) -> Combination:
    """``tau(delta t) + delta t`` on the un-normalized tensor."""
    tensor = cobracket_tensor(t)
    return tensor + tensor.map_keys(lambda pair: ((pair[1], pair[0]), 1))


@dataclass(frozen=True)
class ABTables:
    a: CoefficientTable
    b: CoefficientTable
    ap: CoefficientTable
    bp: CoefficientTable

    def family(self, name: str) -> CoefficientTable:
        return {"a": self.a, "b": self.b, "ap": self.ap, "bp": self.bp}[name]


def _ab_from_formulas(max_weight: int) -> ABTables:
    tables = structure_tables(max_weight)
    alpha, beta = tables.alpha, tables.beta
    a = CoefficientTable("a", max_weight)
    b = CoefficientTable("b", max_weight)
    ap = CoefficientTable("ap", max_weight)
    bp = CoefficientTable("bp", max_weight)
    words = lyndon_words(max_weight)
    for w in words:
        for u in words:
            for v in words:
                if len(u) + len(v) != len(w):
                    continue
                b.set(w, u, v, beta.value(w, v, u))
                if u < v:
                    a_uv = alpha.value(w, u, v) + beta.value(w, u, v) - beta.value(w, v, u)
                    a.set(w, u, v, a_uv)
                    ap.set(w, u, v, -a_uv)
                    bp.set(w, u, v, a_uv + beta.value(w, v, u))
                    bp.set(w, v, u, -a_uv + beta.value(w, u, v))
                elif u == v:
                    bp.set(w, u, u, beta.value(w, u, u))
    return ABTables(a=a, b=b, ap=ap, bp=bp)


def _ab_from_cobracket(max_weight: int) -> ABTables:
    a = CoefficientTable("a", max_weight)
    b = CoefficientTable("b", max_weight)
    ap = CoefficientTable("ap", max_weight)
    bp = CoefficientTable("bp", max_weight)
    for w in lyndon_words(max_weight):
        for kind, same_kind, mixed in ((T0, a, b), (T1, ap, bp)):
            for ((k1, u), (k2, v)), c in d_cy(colie_basis((kind, w)), basis="t01").items():
                if k1 == k2 == kind:
                    same_kind.set(w, u, v, c)
                elif (k1, k2) == (T0, T1):
                    # c T0_u ^ T1_v = -c T1_v ^ T0_u
                    mixed.set(w, v, u, -c)
                else:
                    raise ConsistencyError(f"d_cy({kind}:{w}) has an unexpected {k1}^{k2} term")
    return ABTables(a=a, b=b, ap=ap, bp=bp)


@lru_cache(maxsize=None)
def ab_tables(max_weight: int) -> ABTables:
    """Coefficients of d_cy in the t01 basis, computed by formula and by basis change."""
    if max_weight < 1:
        raise InvalidInputError(f"max_weight must be >= 1, got {max_weight}")
    closed_form = _ab_from_formulas(max_weight)
    extracted = _ab_from_cobracket(max_weight)
    for name in ("a", "b", "ap", "bp"):
        lhs, rhs = closed_form.family(name), extracted.family(name)
        if lhs != rhs:
            diff = sorted(set(lhs.entries()) ^ set(rhs.entries()))[:5]
            raise ConsistencyError(f"❌ table {name} disagrees between formula and basis change: {diff}")
    logger.debug("✅ a/b/a'/b' tables to weight %d agree on both computations", max_weight)
    return closed_form


@dataclass(frozen=True)
class CoLieCoalgebra:
    """A finite coLie coalgebra given on a basis, input to the cobar construction."""

    tags: Tuple[Hashable, ...]
    degree: Mapping[Hashable, int]
    weight: Mapping[Hashable, int]
    cobracket: Mapping[Hashable, WedgeElement]
    differential: Mapping[Hashable, CoLieElement] = field(default_factory=dict)

    def direct_sum(self, other: "CoLieCoalgebra") -> "CoLieCoalgebra":
        overlap = set(self.tags) & set(other.tags)
        if overlap:
            raise InvalidInputError(f"direct sum of coalgebras sharing tags {sorted(overlap)[:3]}")
        return CoLieCoalgebra(
            tags=self.tags + other.tags,
            degree={**self.degree, **other.degree},
            weight={**self.weight, **other.weight},
            cobracket={**self.cobracket, **other.cobracket},
            differential={**self.differential, **other.differential},
        )


@lru_cache(maxsize=None)
def tcl_coalgebra(max_weight: int, part: str) -> CoLieCoalgebra:
    """Weight-truncated pieces of the dual coalgebra.

    ``t01``: the whole coalgebra on the T0/T1 basis; ``one``: the
    subcoalgebra spanned by the T@1 tags; ``geom``: the quotient by that
    subcoalgebra, on the Tx tags, whose cobracket keeps only the alpha terms.
    """
    words = lyndon_words(max_weight)
    if part == "t01":
        tags = tuple((kind, w) for w in words for kind in (T0, T1))
        cobracket = {tag: d_cy(colie_basis(tag), basis="t01") for tag in tags}
    elif part == "one":
        tags = tuple((T_AT_ONE, w) for w in words)
        cobracket = {tag: d_cy(colie_basis(tag)) for tag in tags}
    elif part == "geom":
        tags = tuple((TX, w) for w in words)
        cobracket = {
            tag: d_cy(colie_basis(tag)).filter(lambda pair: pair[0][0] == TX and pair[1][0] == TX)
            for tag in tags
        }
    else:
        raise InvalidInputError(f"unknown coalgebra part {part!r}")
    return CoLieCoalgebra(
        tags=tags,
        degree={tag: 0 for tag in tags},
        weight={tag: tag_weight(tag) for tag in tags},
        cobracket=cobracket,
    )
