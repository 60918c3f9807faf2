"""Graded-commutative dg algebras given by generators and a differential table.

A ``CdgaElement`` is a ``Combination`` keyed by monomials: tuples of
generator names sorted by the presentation's generator order, with the
Koszul sign of the sorting permutation absorbed into the coefficient. The
empty tuple is the unit.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple, Type

from .colie_service import CoLieCoalgebra, format_tag
from .errors import ConsistencyError, InvalidInputError, InvalidMorphismError, NotACoLieError, TableInconsistencyError
from .linear import Combination, accumulate

logger = logging.getLogger(__name__)

Monomial = Tuple[str, ...]
CdgaElement = Combination
UNIT: Monomial = ()


def koszul_sign(sigma: Sequence[int], degrees: Sequence[int]) -> int:
    """Graded signature of the permutation moving slot ``i`` to position ``sigma[i]``."""
    n = len(sigma)
    if len(degrees) != n:
        raise InvalidInputError(f"permutation of size {n} with {len(degrees)} degrees")
    if sorted(sigma) != list(range(n)):
        raise InvalidInputError(f"{list(sigma)} is not a permutation of 0..{n - 1}")
    parity = 0
    for i in range(n):
        for j in range(i + 1, n):
            if sigma[i] > sigma[j]:
                parity += degrees[i] * degrees[j]
    return -1 if parity % 2 else 1


@dataclass(frozen=True)
class GradedGenerator:
    name: str
    degree: int
    weight: int


class CdgaPresentation:
    """Free graded-commutative algebra on ``generators`` with differential ``differential``.

    The generator sequence fixes the monomial order. With ``validate`` the
    constructor checks degree and weight of every differential and that
    ``d^2 = 0`` on each generator, raising ``error_cls`` otherwise.
    """

    def __init__(
        self,
        generators: Sequence[GradedGenerator],
        differential: Mapping[str, CdgaElement],
        label: str = "",
        validate: bool = True,
        error_cls: Type[ConsistencyError] = TableInconsistencyError,
    ):
        self.label = label
        self.generators: Tuple[GradedGenerator, ...] = tuple(generators)
        self._by_name: Dict[str, GradedGenerator] = {g.name: g for g in self.generators}
        if len(self._by_name) != len(self.generators):
            raise InvalidInputError(f"duplicate generator names in presentation {label!r}")
        self._index: Dict[str, int] = {g.name: i for i, g in enumerate(self.generators)}
        self._differential: Dict[str, CdgaElement] = {}
        for name, value in differential.items():
            if name not in self._by_name:
                raise InvalidInputError(f"differential given for unknown generator {name!r}")
            self._differential[name] = self._normalize_element(value)
        if validate:
            self._validate(error_cls)

    def __repr__(self) -> str:
        return f"CdgaPresentation({self.label!r}, {len(self.generators)} generators)"

    def has(self, name: str) -> bool:
        return name in self._by_name

    def generator(self, name: str) -> GradedGenerator:
        try:
            return self._by_name[name]
        except KeyError:
            raise InvalidInputError(f"unknown generator {name!r} in presentation {self.label!r}") from None

    def names(self) -> List[str]:
        return [g.name for g in self.generators]

    def element(self, name: str, coeff=1) -> CdgaElement:
        self.generator(name)
        return Combination.basis((name,), coeff)

    def monomial_degree(self, mono: Monomial) -> int:
        return sum(self._by_name[n].degree for n in mono)

    def monomial_weight(self, mono: Monomial) -> int:
        return sum(self._by_name[n].weight for n in mono)

    def normalize(self, names: Sequence[str]) -> Optional[Tuple[int, Monomial]]:
        """Sort a word of generators; ``None`` when an odd generator repeats."""
        degrees = [self.generator(n).degree for n in names]
        seen: Set[str] = set()
        for name, deg in zip(names, degrees):
            if deg % 2 and name in seen:
                return None
            seen.add(name)
        order = sorted(range(len(names)), key=lambda i: (self._index[names[i]], i))
        sigma = [0] * len(names)
        for position, i in enumerate(order):
            sigma[i] = position
        return koszul_sign(sigma, degrees), tuple(names[i] for i in order)

    def _normalize_element(self, e: CdgaElement) -> CdgaElement:
        acc: Dict[Monomial, Fraction] = {}
        for mono, c in e.items():
            normal = self.normalize(mono)
            if normal is not None:
                accumulate(acc, normal[1], c * normal[0])
        return Combination.from_accumulator(acc)

    def multiply(self, a: CdgaElement, b: CdgaElement) -> CdgaElement:
        acc: Dict[Monomial, Fraction] = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                normal = self.normalize(m1 + m2)
                if normal is not None:
                    accumulate(acc, normal[1], c1 * c2 * normal[0])
        return Combination.from_accumulator(acc)

    def generator_differential(self, name: str) -> CdgaElement:
        self.generator(name)
        return self._differential.get(name, Combination())

    def differential(self, e: CdgaElement) -> CdgaElement:
        """Leibniz extension with sign ``(-1)^{degree of the prefix}``."""
        acc: Dict[Monomial, Fraction] = {}
        for mono, c in e.items():
            prefix_degree = 0
            for i, name in enumerate(mono):
                sign = -1 if prefix_degree % 2 else 1
                for inner, c2 in self._differential.get(name, Combination()).items():
                    normal = self.normalize(mono[:i] + inner + mono[i + 1:])
                    if normal is not None:
                        accumulate(acc, normal[1], c * c2 * sign * normal[0])
                prefix_degree += self._by_name[name].degree
        return Combination.from_accumulator(acc)

    def d_squared_defects(self) -> Dict[str, CdgaElement]:
        defects = {}
        for g in self.generators:
            dd = self.differential(self.generator_differential(g.name))
            if not dd.is_zero():
                defects[g.name] = dd
        return defects

    def closure(self, names: Iterable[str]) -> Set[str]:
        """Generators reachable from ``names`` through the differential."""
        todo = list(names)
        seen: Set[str] = set()
        while todo:
            name = todo.pop()
            if name in seen:
                continue
            seen.add(name)
            for mono in self.generator_differential(name):
                todo.extend(n for n in mono if n not in seen)
        return seen

    def _validate(self, error_cls: Type[ConsistencyError]) -> None:
        for name, value in self._differential.items():
            g = self._by_name[name]
            for mono in value:
                if self.monomial_degree(mono) != g.degree + 1 or self.monomial_weight(mono) != g.weight:
                    raise error_cls(f"d({name}) has a term {mono} of the wrong degree or weight")
        defects = self.d_squared_defects()
        if defects:
            name = next(iter(defects))
            raise error_cls(f"❌ d^2 != 0 on {name} in {self.label!r}: {defects[name]!r}")
        logger.debug("✅ d^2 = 0 on all %d generators of %r", len(self.generators), self.label)


def cdga_multiply(a: CdgaElement, b: CdgaElement, p: CdgaPresentation) -> CdgaElement:
    return p.multiply(a, b)


def suspended_name(tag) -> str:
    return "s" + format_tag(tag)


def cobar_coLie(coalgebra: CoLieCoalgebra, label: str = "cobar") -> CdgaPresentation:
    """Free graded-commutative algebra on the suspension of a coLie coalgebra.

    ``d(s t) = -s(d t) - sum c (-1)^{|u|} (s u)(s v)`` over the wedge terms
    ``c u^v`` of the cobracket of ``t``.
    """
    position = {tag: i for i, tag in enumerate(coalgebra.tags)}
    ordered = sorted(coalgebra.tags, key=lambda tag: (coalgebra.weight[tag], position[tag]))
    generators = [
        GradedGenerator(suspended_name(tag), coalgebra.degree[tag] + 1, coalgebra.weight[tag]) for tag in ordered
    ]
    differential: Dict[str, CdgaElement] = {}
    for tag in ordered:
        acc: Dict[Monomial, Fraction] = {}
        for target, c in coalgebra.differential.get(tag, Combination()).items():
            accumulate(acc, (suspended_name(target),), -c)
        for (u, v), c in coalgebra.cobracket.get(tag, Combination()).items():
            sign = -1 if coalgebra.degree[u] % 2 else 1
            accumulate(acc, (suspended_name(u), suspended_name(v)), -c * sign)
        differential[suspended_name(tag)] = Combination.from_accumulator(acc)
    presentation = CdgaPresentation(generators, differential, label=label, error_cls=NotACoLieError)
    logger.debug("🔧 cobar construction %r with %d generators", label, len(generators))
    return presentation


def rename_presentation(
    source: CdgaPresentation,
    rename: Callable[[str], Optional[str]],
    order_key: Callable[[str], tuple],
    label: str,
) -> CdgaPresentation:
    """Quotient by the generators sent to ``None`` and rename the others.

    The killed generators must span a dg ideal: their differentials have to
    vanish in the quotient.
    """

    def image(e: CdgaElement) -> CdgaElement:
        acc: Dict[Monomial, Fraction] = {}
        for mono, c in e.items():
            renamed = [rename(n) for n in mono]
            if any(n is None for n in renamed):
                continue
            acc[tuple(renamed)] = acc.get(tuple(renamed), Fraction(0)) + c
        return Combination.from_accumulator(acc)

    survivors = []
    differential: Dict[str, CdgaElement] = {}
    for g in source.generators:
        new_name = rename(g.name)
        d_image = image(source.generator_differential(g.name))
        if new_name is None:
            if not d_image.is_zero():
                raise InvalidMorphismError(f"killing {g.name} does not give a dg ideal: d = {d_image!r}")
            continue
        survivors.append(GradedGenerator(new_name, g.degree, g.weight))
        differential[new_name] = d_image
    survivors.sort(key=lambda g: order_key(g.name))
    return CdgaPresentation(survivors, differential, label=label)


class CdgaMorphism:
    """Algebra map defined on generators; ``images`` omits generators sent to zero."""

    def __init__(self, source: CdgaPresentation, target: CdgaPresentation, images: Mapping[str, CdgaElement], label: str = ""):
        self.source = source
        self.target = target
        self.label = label
        self._images = {}
        for name, value in images.items():
            g = source.generator(name)
            value = target._normalize_element(value)
            for mono in value:
                if target.monomial_degree(mono) != g.degree or target.monomial_weight(mono) != g.weight:
                    raise InvalidMorphismError(f"{label}: image of {name} has a term {mono} of the wrong degree or weight")
            self._images[name] = value

    def image_of(self, name: str) -> CdgaElement:
        self.source.generator(name)
        return self._images.get(name, Combination())

    def apply(self, e: CdgaElement) -> CdgaElement:
        acc: Dict[Monomial, Fraction] = {}
        for mono, c in e.items():
            product = Combination.basis(UNIT)
            for name in mono:
                product = self.target.multiply(product, self.image_of(name))
                if product.is_zero():
                    break
            for m2, c2 in product.items():
                accumulate(acc, m2, c * c2)
        return Combination.from_accumulator(acc)

    def chain_map_defects(self) -> Dict[str, CdgaElement]:
        defects = {}
        for g in self.source.generators:
            lhs = self.target.differential(self.image_of(g.name))
            rhs = self.apply(self.source.generator_differential(g.name))
            if lhs != rhs:
                defects[g.name] = lhs - rhs
        return defects

    def is_chain_map(self) -> bool:
        return not self.chain_map_defects()
