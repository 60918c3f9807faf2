"""Closed degree-0 bar elements lifting the cycle generators.

For a Lyndon word ``W`` and a variant, the lift is the unique bar element of
degree 0 with tensor-degree-1 part ``[g]`` (``g`` the variant's generator),
``d_B = 0`` and fixed by the Hain projector. Two routes produce it:

* the oracle: an exact linear solve for closedness over the words in the
  generators reachable from ``g``, followed by the projector;
* the tree formula: the projector applied to per-tensor-degree sums of
  iterated cobrackets over planar trees, with the Catalan-weighted constants
  ``1/(n C(n-1) 2^n)``, or constants solved for closedness when those fail.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Hashable, List, Optional, Tuple, Union

from models import BarTerm, CheckResult, CheckStatus, LiftReport, UnitAuditEntry, UnitStatus

from .bar_service import BarConstruction, BarElement, BarTensor, BarWord, bar_for
from .colie_service import T0, T1, T_AT_ONE, CoLieElement, cobracket_tensor, colie_basis, d_cy, format_tag, wedge_to_tensor
from .cycle_models_service import CycleModel, build_model
from .dgcore_service import CdgaPresentation
from .errors import InfeasibleError, InvalidInputError, InvalidMorphismError
from .linear import Combination, accumulate, format_fraction
from .linsolve import solve_sparse
from .trees_service import catalan, delta_T, enumerate_trees
from .words_service import validate_lyndon

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Variant:
    name: str
    space: str
    tag_kind: str
    family: str


VARIANTS: Dict[str, Variant] = {
    "plain": Variant("plain", "x", T0, "L0"),
    "one": Variant("one", "x", T1, "L1"),
    "diff": Variant("diff", "a1", T_AT_ONE, "M"),
    "const": Variant("const", "x", T_AT_ONE, "K"),
    "point": Variant("point", "point", T_AT_ONE, "N"),
}
METHODS = ("oracle", "claim")


def get_variant(name: str) -> Variant:
    try:
        return VARIANTS[name]
    except KeyError:
        raise InvalidInputError(f"unknown variant {name!r}; expected one of {sorted(VARIANTS)}") from None


def _check_word(w: str) -> str:
    validate_lyndon(w)
    if len(w) < 2:
        raise InvalidInputError(f"lifts are defined for words of length >= 2, got {w!r}")
    return w


def generator_word(name: str) -> BarWord:
    return ((name,),)


@dataclass
class OracleResult:
    element: BarElement
    generator: str
    unknowns: int
    equations: int
    solution_dimension: int


def _words_of_weight(alphabet: List[Tuple[str, int]], weight: int) -> List[BarWord]:
    """All words of single-generator slots with total weight ``weight``."""
    out: List[BarWord] = []

    def extend(prefix: Tuple, remaining: int) -> None:
        if remaining == 0:
            if len(prefix) >= 2:
                out.append(prefix)
            return
        for name, w in alphabet:
            if w <= remaining:
                extend(prefix + ((name,),), remaining - w)

    extend((), weight)
    return out


def closed_lift_oracle(
    w: str,
    variant: str = "plain",
    model: Optional[Union[CycleModel, CdgaPresentation]] = None,
) -> OracleResult:
    """Solve ``d_B b = 0`` with ``pi_1(b) = [g]`` exactly, then project with the Hain projector.

    The unknowns are the coefficients of every word of tensor degree >= 2 in
    the generators reachable from ``g`` through the differential. The
    returned dimension is that of the affine space of closed solutions
    before projection.
    """
    _check_word(w)
    spec = get_variant(variant)
    if model is None:
        model = build_model(spec.space, len(w))
    presentation = model.presentation if isinstance(model, CycleModel) else model
    g = f"{spec.family}:{w}"
    if not presentation.has(g):
        raise InvalidInputError(f"generator {g} is not in presentation {presentation.label!r}")
    bar = bar_for(presentation)
    alphabet = sorted(
        (presentation.generator(n).name, presentation.generator(n).weight)
        for n in presentation.closure([g])
        if n != g
    )
    unknowns = _words_of_weight(alphabet, len(w))
    rows: Dict[BarWord, Dict[BarWord, Fraction]] = {}
    for word in unknowns:
        for target, c in bar.differential(Combination.basis(word)).items():
            rows.setdefault(target, {})[word] = c
    base = bar.differential(Combination.basis(generator_word(g)))
    targets = sorted(set(rows) | set(base.keys()))
    equations = [rows.get(t, {}) for t in targets]
    rhs = [-base[t] for t in targets]
    try:
        solution = solve_sparse(unknowns, equations, rhs)
    except InfeasibleError as exc:
        raise InfeasibleError(f"no closed lift of {g} in weight {len(w)}: {exc}") from None
    acc: Dict[BarWord, Fraction] = {generator_word(g): Fraction(1)}
    for word, c in solution.values.items():
        accumulate(acc, word, c)
    element = bar.hain_projector(Combination.from_accumulator(acc))
    logger.debug("✅ oracle lift of %s: %d unknowns, %d equations, dimension %d",
                 g, len(unknowns), len(targets), solution.nullity)
    return OracleResult(
        element=element,
        generator=g,
        unknowns=len(unknowns),
        equations=len(targets),
        solution_dimension=solution.nullity,
    )


# -- adjunction unit -----------------------------------------------------------


def claim_constant(n: int) -> Fraction:
    return Fraction(1, n * catalan(n - 1) * 2 ** n)


GeneratorMap = Callable[[Hashable], Optional[str]]


def _tags_below(t: CoLieElement) -> List[Hashable]:
    """Every tag reachable from ``t`` by iterated cobrackets, ``t``'s own tags included."""
    seen = []
    todo = list(t.keys())
    while todo:
        tag = todo.pop()
        if tag in seen:
            continue
        seen.append(tag)
        for (u, v) in cobracket_tensor(colie_basis(tag)).keys():
            todo.extend(x for x in (u, v) if x not in seen)
    return sorted(seen)


def check_generator_map(t: CoLieElement, presentation: CdgaPresentation, gen_map: GeneratorMap) -> None:
    """``gen_map`` must intertwine the cobracket with the model differential.

    For a tag sent to ``g``: ``d g = -sum c gen_map(u) gen_map(v)`` over the
    wedge terms ``c u^v`` of its cobracket.
    """
    for tag in _tags_below(t):
        name = gen_map(tag)
        if name is None:
            continue
        if not presentation.has(name):
            raise InvalidMorphismError(f"{format_tag(tag)} is mapped to unknown generator {name}")
        acc: Dict[Tuple[str, ...], Fraction] = {}
        for (u, v), c in d_cy(colie_basis(tag)).items():
            gu, gv = gen_map(u), gen_map(v)
            if gu is None or gv is None:
                continue
            accumulate(acc, (gu, gv), -c)
        expected = presentation._normalize_element(Combination.from_accumulator(acc))
        if expected != presentation.generator_differential(name):
            raise InvalidMorphismError(
                f"{format_tag(tag)} -> {name} does not commute with the differential"
            )


def slotify(tensor: Combination, gen_map: GeneratorMap) -> BarElement:
    """Send a tensor of tags to the bar word of their generators; zero tags drop the term."""
    acc: Dict[BarWord, Fraction] = {}
    for factors, c in tensor.items():
        names = [gen_map(tag) for tag in factors]
        if any(n is None for n in names):
            continue
        accumulate(acc, tuple((n,) for n in names), c)
    return Combination.from_accumulator(acc)


def tree_sums(t: CoLieElement, gen_map: GeneratorMap, max_leaves: int) -> Dict[int, BarElement]:
    """``E_n = sum over trees with n leaves of slotify(delta_T(t))``."""
    sums = {}
    for n in range(1, max_leaves + 1):
        total = Combination()
        for tree in enumerate_trees(n):
            total = total + slotify(delta_T(tree, t, _tag_cobracket), gen_map)
        sums[n] = total
    return sums


def _tag_cobracket(tag: Hashable) -> Combination:
    return wedge_to_tensor(d_cy(colie_basis(tag)))


def _element_weight(t: CoLieElement) -> int:
    if t.is_zero():
        raise InvalidInputError("adjunction unit of the zero element")
    return max(len(tag[1]) for tag in t)


def adjunction_unit(
    t: CoLieElement,
    model: CycleModel,
    gen_map: Optional[GeneratorMap] = None,
    constants: Optional[Dict[int, Fraction]] = None,
) -> BarElement:
    """Projector applied to ``sum_n c_n E_n``, with ``c_n = 1/(n C(n-1) 2^n)`` by default."""
    gen_map = gen_map or model.generator_for
    presentation = model.presentation
    check_generator_map(t, presentation, gen_map)
    n_max = _element_weight(t)
    if constants is None:
        constants = {n: claim_constant(n) for n in range(1, n_max + 1)}
    sums = tree_sums(t, gen_map, n_max)
    total = Combination()
    for n, e_n in sums.items():
        total = total + e_n * constants.get(n, 0)
    if total.is_zero():
        return total
    return bar_for(presentation).hain_projector(total)


def half_wedge_constant(n: int) -> Fraction:
    """``2^(n-1)/(n C(n-1))``: the closed constants when ``u^v`` embeds as ``(u(x)v - v(x)u)/2``."""
    return Fraction(2 ** (n - 1), n * catalan(n - 1))


def solve_unit_constants(sums: Dict[int, BarElement], bar: BarConstruction) -> Optional[Dict[int, Fraction]]:
    """Constants ``k_n`` with ``k_1 = 1`` making ``p(sum k_n E_n)`` closed, or ``None``."""
    projected = {n: bar.hain_projector(e) if e else e for n, e in sums.items()}
    images = {n: bar.differential(e) for n, e in projected.items()}
    columns = [n for n in sorted(images) if n >= 2]
    targets = sorted({word for image in images.values() for word in image.keys()})
    equations = [{n: images[n][word] for n in columns if images[n][word] != 0} for word in targets]
    rhs = [-images[1][word] for word in targets]
    try:
        solution = solve_sparse(columns, equations, rhs)
    except InfeasibleError:
        return None
    constants = {1: Fraction(1)}
    for n in columns:
        constants[n] = solution.values.get(n, Fraction(0))
    return constants


WEDGE_CONVENTION = "u^v = (u(x)v - v(x)u)/2"


def unit_audit(w: str, variant: str = "plain") -> UnitAuditEntry:
    """Compare the tree formula with the oracle for one word."""
    _check_word(w)
    spec = get_variant(variant)
    model = build_model(spec.space, len(w))
    bar = bar_for(model.presentation)
    t = colie_basis((spec.tag_kind, w))
    n_max = len(w)
    raw = {n: claim_constant(n) for n in range(1, n_max + 1)}
    claim_closed = bar.differential(adjunction_unit(t, model, constants=raw)).is_zero()
    solved = solve_unit_constants(tree_sums(t, model.generator_for, n_max), bar)
    solved_element = None
    solved_closed = False
    if solved is not None:
        solved_element = adjunction_unit(t, model, constants=solved)
        solved_closed = bar.differential(solved_element).is_zero()
    oracle = closed_lift_oracle(w, variant, model).element
    entry = UnitAuditEntry(
        word=w,
        variant=variant,
        weight=len(w),
        claim_constants=[format_fraction(raw[n]) for n in sorted(raw)],
        claim_closed=claim_closed,
        claim_status=UnitStatus.CLOSED if claim_closed else UnitStatus.NON_CLOSED,
        convention=WEDGE_CONVENTION,
        solved_constants=[format_fraction(solved[n]) for n in sorted(solved)] if solved else None,
        solved_closed=solved_closed,
        solved_match_half_wedge=solved is not None
        and all(solved[n] == half_wedge_constant(n) for n in sorted(solved)),
        agrees_with_oracle=solved_element is not None and solved_element == oracle,
    )
    if not claim_closed:
        logger.warning("⚠️ tree formula with constants 1/(n C(n-1) 2^n) is NON-CLOSED for %s (%s)", w, variant)
    return entry


# -- lifts ---------------------------------------------------------------------


@dataclass
class LiftResult:
    element: BarElement
    generator: str
    path: str
    model: CycleModel
    solution_dimension: Optional[int] = None
    checks: List[CheckResult] = field(default_factory=list)


def expected_cobracket_11(tag: Hashable, model: CycleModel) -> BarTensor:
    """The (1,1) part the cobracket of a lift must have: the slotified cobracket of its tag."""
    acc: Dict[Tuple[BarWord, BarWord], Fraction] = {}
    for (u, v), c in _tag_cobracket(tag).items():
        gu, gv = model.generator_for(u), model.generator_for(v)
        if gu is None or gv is None:
            continue
        accumulate(acc, (generator_word(gu), generator_word(gv)), c)
    return Combination.from_accumulator(acc)


def part_11(t: BarTensor) -> BarTensor:
    return t.filter(lambda pair: len(pair[0]) == 1 and len(pair[1]) == 1)


def lift_properties(element: BarElement, w: str, spec: Variant, model: CycleModel) -> List[CheckResult]:
    bar = bar_for(model.presentation)
    g = f"{spec.family}:{w}"
    weight = len(w)
    facts = [
        ("lift tensor-degree-1 part is the generator", bar.pi_1(element) == Combination.basis(generator_word(g))),
        ("lift has bar degree 0", all(bar.bar_degree(word) == 0 for word in element)),
        ("lift is closed under the bar differential", bar.differential(element).is_zero()),
        ("lift is fixed by the Hain projector", bar.hain_projector(element) == element),
        (
            "lift cobracket (1,1) part is the model cobracket",
            part_11(bar.delta_Q(element)) == expected_cobracket_11((spec.tag_kind, w), model),
        ),
    ]
    return [
        CheckResult(
            check=f"{name} [{spec.name} {w}]",
            weight=weight,
            status=CheckStatus.PASS if ok else CheckStatus.FAIL,
            witness=None if ok else g,
            statement=name,
        )
        for name, ok in facts
    ]


@lru_cache(maxsize=None)
def _lift_cached(w: str, variant: str, method: str) -> LiftResult:
    spec = get_variant(variant)
    model = build_model(spec.space, len(w))
    g = f"{spec.family}:{w}"
    bar = bar_for(model.presentation)
    if method == "claim":
        t = colie_basis((spec.tag_kind, w))
        element = adjunction_unit(t, model)
        if bar.differential(element).is_zero() and bar.pi_1(element) == Combination.basis(generator_word(g)):
            return LiftResult(element, g, "claim", model)
        constants = solve_unit_constants(tree_sums(t, model.generator_for, len(w)), bar)
        if constants is not None:
            element = adjunction_unit(t, model, constants=constants)
            if bar.differential(element).is_zero():
                return LiftResult(element, g, "solved-constants", model)
        logger.warning("⚠️ tree formula gave no closed lift of %s; falling back to the oracle", g)
    oracle = closed_lift_oracle(w, variant, model)
    path = "oracle" if method == "oracle" else "oracle-fallback"
    return LiftResult(oracle.element, g, path, model, solution_dimension=oracle.solution_dimension)


def lift_LB(w: str, variant: str = "plain", method: str = "oracle", check: bool = False) -> LiftResult:
    _check_word(w)
    spec = get_variant(variant)
    if method not in METHODS:
        raise InvalidInputError(f"unknown method {method!r}; expected one of {METHODS}")
    result = _lift_cached(w, variant, method)
    if check:
        result.checks = lift_properties(result.element, w, spec, result.model)
    return result


def lift_of_tag(tag: Hashable, space: str = "x") -> BarElement:
    """Lift of an arbitrary tag: ``[g]`` in weight one, the variant lift above it."""
    kind, w = tag
    model = build_model(space, len(w))
    g = model.generator_for(tag)
    if g is None:
        return Combination()
    if len(w) == 1:
        return Combination.basis(generator_word(g))
    variant = next(v.name for v in VARIANTS.values() if v.space == space and v.tag_kind == kind)
    return lift_LB(w, variant).element


def bar_terms(b: BarElement) -> List[BarTerm]:
    return [
        BarTerm(slots=[list(slot) for slot in word], coeff=format_fraction(c))
        for word, c in sorted(b.items(), key=lambda kv: (len(kv[0]), kv[0]))
    ]


def lift_report(result: LiftResult, w: str, variant: str, method: str) -> LiftReport:
    return LiftReport(
        word=w,
        variant=variant,
        method=method,
        path=result.path,
        generator=result.generator,
        solution_dimension=result.solution_dimension,
        terms=bar_terms(result.element),
        checks=result.checks,
    )
