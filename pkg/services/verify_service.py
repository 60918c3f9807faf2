"""Verification suites: every identity of the package checked at a weight bound.

Each check produces a ``CheckResult`` naming the identity in words. A suite
never raises on a failed identity; ``Verifier.run`` collects everything into
a ``VerificationReport`` and the command line turns failures into exit
status 1.
"""

import logging
import random
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from models import SUITES, CheckResult, CheckStatus, VerificationReport

from .bar_service import BarTensor, apply_slotwise, bar_for, tensor_of_words
from .colie_service import (
    T0,
    T1,
    T_AT_ONE,
    TX,
    CoLieCoalgebra,
    ab_tables,
    antisymmetry_defect,
    change_basis,
    cobracket_tensor,
    co_jacobi_defect,
    colie_basis,
    d_cy,
    tcl_coalgebra,
    wedge,
    wedge_change_basis,
    wedge_coefficient,
)
from .cycle_models_service import (
    build_model,
    constant_pullback,
    fiber_at_one,
    geometric_projection,
    model_A1,
    model_geom,
    model_point,
    model_X,
    restriction_j,
)
from .dgcore_service import CdgaPresentation, cobar_coLie, koszul_sign, suspended_name
from .errors import IdentityViolationError, InfeasibleError, LieBarError, NotACoLieError
from .freelie_service import expand, expand_lie, lie_bracket, rewrite_in_lyndon
from .ihara_service import (
    SemidirectElement,
    ihara_bracket,
    semidirect_bracket,
    special_derivation,
    structure_tables,
)
from .lift_service import (
    VARIANTS,
    closed_lift_oracle,
    generator_word,
    lift_LB,
    lift_of_tag,
    lift_properties,
    unit_audit,
)
from .linear import Combination, format_fraction
from .linsolve import matrix_rank
from .trees_service import catalan, delta_T, delta_T_top_down, enumerate_trees
from .words_service import is_lyndon, lyndon_words, lyndon_words_of_length, standard_factorization

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def _result(check: str, weight: int, ok: bool, witness: Optional[str] = None, statement: str = "") -> CheckResult:
    return CheckResult(
        check=check,
        weight=weight,
        status=CheckStatus.PASS if ok else CheckStatus.FAIL,
        witness=None if ok else witness,
        statement=statement or check,
    )


def _info(check: str, weight: int, witness: str, statement: str = "") -> CheckResult:
    return CheckResult(check=check, weight=weight, status=CheckStatus.INFO, witness=witness, statement=statement or check)


def _first_failure(items: Iterable[Tuple[str, bool]]) -> Optional[str]:
    for label, ok in items:
        if not ok:
            return label
    return None


def _words_between(lo: int, hi: int) -> List[str]:
    return [w for w in lyndon_words(hi) if len(w) >= lo]


def raise_on_failure(checks: List[CheckResult], what: str) -> None:
    failed = [c for c in checks if c.status == CheckStatus.FAIL]
    if failed:
        raise IdentityViolationError(f"{what}: {len(failed)} of {len(checks)} checks failed", checks=failed)


def random_lie_element(rng: random.Random, max_weight: int, terms: int = 3) -> Combination:
    words = lyndon_words(max_weight)
    return Combination([(rng.choice(words), rng.randint(-3, 3)) for _ in range(terms)])


def _tensor_cobracket(tag) -> Combination:
    return cobracket_tensor(colie_basis(tag))


def antisymmetric_tensor(pairs: Iterable[Tuple[Combination, Combination, Fraction]]) -> BarTensor:
    """``sum c (x (x) y - y (x) x)/2`` for bar elements."""
    pairs = list(pairs)
    forward = tensor_of_words([(x, y, c * HALF) for x, y, c in pairs])
    backward = tensor_of_words([(y, x, -c * HALF) for x, y, c in pairs])
    return forward + backward


# -- cobracket identities for the lifted family ----------------------------------


def verify_EDQX(w: str, strict: bool = False) -> List[CheckResult]:
    """Cobracket of the lift of ``L0:W`` in both the a/b and the alpha/beta forms.

    With ``strict`` a failed identity raises ``IdentityViolationError``.
    """
    n = len(w)
    tables = structure_tables(n)
    ab = ab_tables(n)
    words = lyndon_words(n)
    checks: List[CheckResult] = []

    bad = []
    for u, v in product(words, words):
        if len(u) + len(v) != n:
            continue
        if u < v:
            lhs = ab.a.value(w, u, v)
            rhs = tables.alpha.value(w, u, v) + tables.beta.value(w, u, v) - tables.beta.value(w, v, u)
            if lhs != rhs:
                bad.append(f"a^{w}_{u},{v}")
        if ab.b.value(w, u, v) != tables.beta.value(w, v, u):
            bad.append(f"b^{w}_{u},{v}")
    checks.append(_result(f"a = alpha + beta - beta^T and b = beta^T [{w}]", n, not bad, ", ".join(bad[:5]),
                          "coefficients of the t01 cobracket in terms of alpha and beta"))

    plain = lift_LB(w, "plain")
    model = plain.model
    bar = bar_for(model.presentation)
    cobracket = bar.delta_Q(plain.element)

    def gen(family: str, word: str) -> Combination:
        name = f"{family}:{word}"
        return Combination.basis(generator_word(name)) if model.presentation.has(name) else Combination()

    expected_11 = antisymmetric_tensor(
        [(gen("L0", u), gen("L0", v), c) for u, v, c in ab.a.terms_for(w)]
        + [(gen("L1", u), gen("L0", v), c) for u, v, c in ab.b.terms_for(w)]
    )
    actual_11 = cobracket.filter(lambda pair: len(pair[0]) == 1 and len(pair[1]) == 1)
    checks.append(_result(f"cobracket (1,1) part of the L0 lift is the a/b form [{w}]", n,
                          actual_11 == expected_11, repr(actual_11 - expected_11)))

    # formal substitution L1_U -> L0_U - K_U
    def substitute(symbol):
        family, word = symbol
        if family == "L1":
            return [(("L0", word), 1), (("K", word), -1)]
        return [(symbol, 1)]

    ab_form = []
    for u, v, c in ab.a.terms_for(w):
        ab_form.append((("L0", u), ("L0", v), c))
    for u, v, c in ab.b.terms_for(w):
        for (s, cs) in substitute(("L1", u)):
            ab_form.append((s, ("L0", v), c * cs))
    alpha_beta_form = [(("L0", u), ("L0", v), c) for u, v, c in tables.alpha.terms_for(w)]
    alpha_beta_form += [(("L0", u), ("K", v), c) for u, v, c in tables.beta.terms_for(w)]
    lhs, rhs = wedge(ab_form), wedge(alpha_beta_form)
    checks.append(_result(f"substituting L1 = L0 - K gives the alpha/beta form [{w}]", n, lhs == rhs,
                          repr(lhs - rhs)))

    full = antisymmetric_tensor(
        [(lift_of_tag((T0, u)), lift_of_tag((T0, v)), c) for u, v, c in ab.a.terms_for(w)]
        + [(lift_of_tag((T1, u)), lift_of_tag((T0, v)), c) for u, v, c in ab.b.terms_for(w)]
    )
    checks.append(_result(f"cobracket of the L0 lift is the a/b combination of lifts [{w}]", n,
                          cobracket == full, repr(cobracket - full)))

    diagonal = [f"beta^{w}_{u},{u}={format_fraction(tables.beta.value(w, u, u))}"
                for u in words if tables.beta.value(w, u, u) != 0]
    checks.append(_info(f"diagonal beta terms [{w}]", n, ", ".join(diagonal) or "none",
                        "nonzero beta^W_{U,U} contributing to the diagonal of the alpha/beta form"))
    if strict:
        raise_on_failure(checks, f"cobracket identities of {w}")
    return checks


def verify_geom_basis(max_weight: int, strict: bool = False) -> List[CheckResult]:
    """Project lifts to the geometric model: pure alpha cobracket and unitriangular pi_1."""
    projection = geometric_projection(max_weight)
    geom = model_geom(max_weight)
    bar = bar_for(geom)
    checks: List[CheckResult] = []
    alpha = structure_tables(max_weight).alpha

    projected: Dict[str, Combination] = {w: Combination.basis(generator_word(f"G:{w}")) for w in ("0", "1")}
    for w in _words_between(2, max_weight):
        projected[w] = apply_slotwise(lift_LB(w, "plain").element, projection)

    for w in _words_between(2, max_weight):
        n = len(w)
        actual = bar.delta_Q(projected[w])
        expected = antisymmetric_tensor([(projected[u], projected[v], c) for u, v, c in alpha.terms_for(w)])
        checks.append(_result(f"projected cobracket is the alpha form [{w}]", n, actual == expected,
                              repr(actual - expected)))
        pairing = []
        for u, v, c in alpha.terms_for(w):
            key = (generator_word(f"G:{u}"), generator_word(f"G:{v}"))
            paired = actual[key] - actual[(key[1], key[0])]
            pairing.append((f"{u},{v}", paired == c))
        failed = _first_failure(pairing)
        checks.append(_result(f"pairing with [U]^[V] returns alpha [{w}]", n, failed is None, failed))

    for n in range(2, max_weight + 1):
        words = list(lyndon_words_of_length(n))
        columns = [generator_word(f"G:{v}") for v in words]
        rows = [{word: c for word, c in projected[w].items() if len(word) == 1} for w in words]
        rank = matrix_rank(rows, columns)
        unitriangular = all(
            rows[i].get(columns[i]) == 1 and all(rows[i].get(columns[j], 0) == 0 for j in range(i + 1, len(words)))
            for i in range(len(words))
        )
        checks.append(_result(f"projected lifts have full rank in weight {n}", n, rank == len(words),
                              f"rank {rank} of {len(words)}"))
        checks.append(_result(f"projected lifts are unitriangular in weight {n}", n, unitriangular))
    if strict:
        raise_on_failure(checks, f"geometric basis to weight {max_weight}")
    return checks


# -- suites --------------------------------------------------------------------


class Verifier:
    def __init__(self, max_weight: int, seed: int = 42, samples: int = 100):
        self.max_weight = max_weight
        self.seed = seed
        self.samples = samples

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")

    def run(self, suites: Iterable[str]) -> VerificationReport:
        selected = [s for s in SUITES if s in set(suites)]
        checks: List[CheckResult] = []
        for suite in selected:
            logger.info("🔧 running suite %s to weight %d", suite, self.max_weight)
            try:
                found = getattr(self, f"suite_{suite}")()
            except LieBarError as exc:
                found = [_result(f"suite {suite} completed", self.max_weight, False, str(exc))]
            failed = [c for c in found if c.status == CheckStatus.FAIL]
            if failed:
                logger.error("❌ suite %s: %d of %d checks failed", suite, len(failed), len(found))
            else:
                logger.info("✅ suite %s: %d checks", suite, len(found))
            checks.extend(found)
        return VerificationReport(
            suites=selected,
            max_weight=self.max_weight,
            seed=self.seed,
            passed=all(c.status != CheckStatus.FAIL for c in checks),
            checks=checks,
        )

    # words, free Lie algebra and Ihara bracket
    def suite_lie(self) -> List[CheckResult]:
        m = self.max_weight
        out = [
            _result("Lyndon words to length 4 in lexicographic order", 4,
                    list(lyndon_words(4)) == ["0", "0001", "001", "0011", "01", "011", "0111", "1"]),
            _result("six Lyndon words of length 5", 5, len(lyndon_words_of_length(5)) == 6),
        ]
        brute = []
        for n in range(1, 9):
            for letters in product("01", repeat=n):
                word = "".join(letters)
                scan = all(word < word[i:] for i in range(1, n))
                brute.append((word, is_lyndon(word) == scan))
        out.append(_result("Lyndon test agrees with a right-factor scan to length 8", 8, _first_failure(brute) is None,
                           _first_failure(brute)))

        words = lyndon_words(m)
        ordered = all(a < b for a, b in zip(words, words[1:]))
        factors = []
        for w in words:
            if len(w) >= 2:
                u, v = standard_factorization(w)
                factors.append((w, u + v == w and u in words and v in words and u < v))
        out.append(_result("Lyndon enumeration strictly increasing", m, ordered))
        out.append(_result("standard factors are Lyndon and recombine", m, _first_failure(factors) is None,
                           _first_failure(factors)))

        triangular = []
        for w in words:
            expansion = expand(w)
            triangular.append((w, min(expansion) == w and expansion[w] == 1))
        out.append(_result("smallest word of [W] is W with coefficient 1", m, _first_failure(triangular) is None,
                           _first_failure(triangular)))

        rng = self.rng("rewrite")
        round_trip = []
        for i in range(self.samples):
            e = random_lie_element(rng, m)
            round_trip.append((repr(e), rewrite_in_lyndon(expand_lie(e)) == e))
        out.append(_result("rewriting the expansion of a Lie element returns it", m,
                           _first_failure(round_trip) is None, _first_failure(round_trip)))

        jacobi, ihara_jacobi = [], []
        for a, b, c in product(words, repeat=3):
            if not (a < b < c) or len(a) + len(b) + len(c) > m:
                continue
            x, y, z = (Combination.basis(t) for t in (a, b, c))
            total = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) + lie_bracket(z, lie_bracket(x, y))
            jacobi.append((f"{a},{b},{c}", total.is_zero()))
            if len(a) + len(b) + len(c) <= min(m, 5):
                total = (ihara_bracket(x, ihara_bracket(y, z)) + ihara_bracket(y, ihara_bracket(z, x))
                         + ihara_bracket(z, ihara_bracket(x, y)))
                ihara_jacobi.append((f"{a},{b},{c}", total.is_zero()))
        out.append(_result("Jacobi identity for the free bracket", m, _first_failure(jacobi) is None, _first_failure(jacobi)))
        out.append(_result("Jacobi identity for the Ihara bracket", min(m, 5), _first_failure(ihara_jacobi) is None,
                           _first_failure(ihara_jacobi)))

        x1 = Combination.basis("1")
        rng = self.rng("derivations")
        commutators = []
        for i in range(self.samples):
            f, g = random_lie_element(rng, min(m, 3), 2), random_lie_element(rng, min(m, 3), 2)
            lhs = special_derivation(f, special_derivation(g, x1)) - special_derivation(g, special_derivation(f, x1))
            commutators.append((f"{f!r} / {g!r}", lhs == special_derivation(ihara_bracket(f, g), x1)))
        out.append(_result("[D_f, D_g] = D_{f,g} on X1", min(m, 3) * 2, _first_failure(commutators) is None,
                           _first_failure(commutators)))

        restriction = []
        for u, v in product(words, words):
            if len(u) + len(v) <= m:
                x, y = Combination.basis(u), Combination.basis(v)
                bracket = semidirect_bracket(SemidirectElement(x_part=x), SemidirectElement(x_part=y))
                restriction.append((f"{u},{v}", bracket.x_part == lie_bracket(x, y) and bracket.one_part.is_zero()))
        out.append(_result("semidirect bracket on x-parts is the free bracket", m, _first_failure(restriction) is None,
                           _first_failure(restriction)))
        out.extend(self._structure_constant_identities())
        return out

    def _structure_constant_identities(self) -> List[CheckResult]:
        m = self.max_weight
        tables = structure_tables(m)
        alpha, beta, gamma = tables.alpha, tables.beta, tables.gamma
        words = lyndon_words(m)
        out = []
        identities: Dict[str, List[Tuple[str, bool]]] = {
            "beta_{0,V} = 0": [],
            "beta_{V,0} = alpha_{0,V}": [],
            "beta_{U,1} = 0": [],
            "beta_{1,U} = alpha_{U,1}": [],
            "gamma_{U,V} = alpha_{U,V} + beta_{U,V} - beta_{V,U}": [],
        }
        for w in words:
            for v in words:
                if len(v) + 1 != len(w):
                    continue
                identities["beta_{0,V} = 0"].append((f"{w};{v}", beta.value(w, "0", v) == 0))
                identities["beta_{V,0} = alpha_{0,V}"].append((f"{w};{v}", beta.value(w, v, "0") == alpha.value(w, "0", v)))
                identities["beta_{U,1} = 0"].append((f"{w};{v}", beta.value(w, v, "1") == 0))
                identities["beta_{1,U} = alpha_{U,1}"].append((f"{w};{v}", beta.value(w, "1", v) == alpha.value(w, v, "1")))
            for u, v in product(words, words):
                if u < v and len(u) + len(v) == len(w):
                    ok = gamma.value(w, u, v) == alpha.value(w, u, v) + beta.value(w, u, v) - beta.value(w, v, u)
                    identities["gamma_{U,V} = alpha_{U,V} + beta_{U,V} - beta_{V,U}"].append((f"{w};{u},{v}", ok))
        for name, items in identities.items():
            out.append(_result(name, m, _first_failure(items) is None, _first_failure(items),
                               "structure constants of the semidirect sum"))
        integral = all(c.denominator == 1 for t in (alpha, beta, gamma) for *_, c in t.entries())
        out.append(_result("alpha, beta, gamma are integers", m, integral))
        weight_one = all(len(w) >= 2 for t in (alpha, beta, gamma) for w, *_ in t.entries())
        out.append(_result("alpha, beta, gamma vanish on letters", 1, weight_one))
        graded = all(len(u) + len(v) == len(w) for t in (alpha, beta, gamma) for w, u, v, _ in t.entries())
        out.append(_result("structure constants respect the weight grading", m, graded))
        return out

    def suite_signs(self) -> List[CheckResult]:
        out = [
            _result("identity permutation has sign +1", 0, koszul_sign([0, 1, 2], [1, 1, 1]) == 1),
            _result("swapping two odd slots gives -1", 0, koszul_sign([1, 0], [1, 1]) == -1),
            _result("swapping odd and even slots gives +1", 0, koszul_sign([1, 0], [1, 2]) == 1),
        ]
        rng = self.rng("koszul")
        composed = []
        for _ in range(self.samples):
            n = rng.randint(1, 6)
            degrees = [rng.randint(0, 3) for _ in range(n)]
            sigma, tau = list(range(n)), list(range(n))
            rng.shuffle(sigma)
            rng.shuffle(tau)
            moved = [0] * n
            for i in range(n):
                moved[sigma[i]] = degrees[i]
            both = [tau[sigma[i]] for i in range(n)]
            ok = koszul_sign(both, degrees) == koszul_sign(sigma, degrees) * koszul_sign(tau, moved)
            composed.append((f"{sigma}/{tau}/{degrees}", ok))
        out.append(_result("graded signature is multiplicative", 0, _first_failure(composed) is None,
                           _first_failure(composed)))

        p = model_X(min(self.max_weight, 3))
        names = p.names()
        squares = [(n, p.multiply(p.element(n), p.element(n)).is_zero()) for n in names]
        out.append(_result("odd generators square to zero", 0, _first_failure(squares) is None, _first_failure(squares)))
        commute = []
        for a, b in product(names, names):
            if a != b:
                commute.append((f"{a},{b}", p.multiply(p.element(a), p.element(b)) == -p.multiply(p.element(b), p.element(a))))
        out.append(_result("distinct odd generators anticommute", 0, _first_failure(commute) is None,
                           _first_failure(commute)))
        rng = self.rng("associativity")
        assoc = []
        for _ in range(self.samples):
            x, y, z = (self._random_cdga(p, rng) for _ in range(3))
            assoc.append((f"{x!r}", p.multiply(p.multiply(x, y), z) == p.multiply(x, p.multiply(y, z))))
        out.append(_result("cdga product is associative", 0, _first_failure(assoc) is None, _first_failure(assoc)))
        leibniz = []
        for _ in range(self.samples):
            x, y = self._random_cdga(p, rng), self._random_cdga(p, rng)
            lhs = p.differential(p.multiply(x, y))
            rhs = p.multiply(p.differential(x), y) + self._signed_by_degree(p, x, lambda m: p.multiply(m, p.differential(y)))
            leibniz.append((f"{x!r}", lhs == rhs))
        out.append(_result("differential satisfies the graded Leibniz rule", 0, _first_failure(leibniz) is None,
                           _first_failure(leibniz)))
        return out

    @staticmethod
    def _random_cdga(p: CdgaPresentation, rng: random.Random) -> Combination:
        names = p.names()
        terms = []
        for _ in range(rng.randint(1, 3)):
            size = rng.randint(1, 2)
            terms.append((tuple(rng.choice(names) for _ in range(size)), rng.randint(-2, 2)))
        return p._normalize_element(Combination(terms))

    @staticmethod
    def _signed_by_degree(p: CdgaPresentation, x: Combination, op: Callable) -> Combination:
        total = Combination()
        for mono, c in x.items():
            sign = -1 if p.monomial_degree(mono) % 2 else 1
            total = total + op(Combination.basis(mono, c * sign))
        return total

    def suite_colie(self) -> List[CheckResult]:
        m = self.max_weight
        out = []
        weight_two = d_cy(colie_basis((TX, "01")))
        expected = wedge([((TX, "0"), (TX, "1"), 1), ((TX, "1"), (T_AT_ONE, "0"), 1)])
        out.append(_result("d_cy(T_01(x)) = T_0(x)^T_1(x) + T_1(x)^T_0(1)", 2, weight_two == expected, repr(weight_two)))
        letters = [d_cy(colie_basis((k, e))).is_zero() for k in (TX, T_AT_ONE, T0, T1) for e in "01"]
        out.append(_result("cobracket vanishes on letters", 1, all(letters)))

        tables = structure_tables(m)
        words = lyndon_words(m)
        duality = []
        for w in words:
            dx, d1 = d_cy(colie_basis((TX, w))), d_cy(colie_basis((T_AT_ONE, w)))
            for u, v in product(words, words):
                if len(u) + len(v) != len(w):
                    continue
                duality.append((f"beta {w};{u},{v}", wedge_coefficient(dx, (TX, u), (T_AT_ONE, v)) == tables.beta.value(w, u, v)))
                if u < v:
                    duality.append((f"alpha {w};{u},{v}", wedge_coefficient(dx, (TX, u), (TX, v)) == tables.alpha.value(w, u, v)))
                    duality.append((f"gamma {w};{u},{v}", wedge_coefficient(d1, (T_AT_ONE, u), (T_AT_ONE, v)) == tables.gamma.value(w, u, v)))
        out.append(_result("cobracket pairs with the semidirect bracket", m, _first_failure(duality) is None,
                           _first_failure(duality)))

        ab = ab_tables(m)  # raises on disagreement between the two computations
        out.append(_result("a, b, a', b' agree between formula and basis change", m, True))
        a_is_gamma = ab.a == tables.gamma
        out.append(_result("a = gamma", m, a_is_gamma))
        ap_ok = all(ab.ap.value(w, u, v) == -c for w, u, v, c in ab.a.entries()) and len(ab.ap) == len(ab.a)
        out.append(_result("a' = -a", m, ap_ok))
        vanishing = []
        for w in words:
            if len(w) < 2:
                continue
            for v in words:
                vanishing.append((f"a_0,V {w};{v}", ab.a.value(w, "0", v) == 0 and ab.ap.value(w, "0", v) == 0))
                vanishing.append((f"a_U,1 {w};{v}", ab.a.value(w, v, "1") == 0 and ab.ap.value(w, v, "1") == 0))
                vanishing.append((f"b_1,V {w};{v}", ab.b.value(w, "1", v) == 0 and ab.bp.value(w, "1", v) == 0))
                vanishing.append((f"b_U,0 {w};{v}", ab.b.value(w, v, "0") == 0 and ab.bp.value(w, v, "0") == 0))
        out.append(_result("a, a', b, b' vanish on the letters 0 and 1 as stated", m, _first_failure(vanishing) is None,
                           _first_failure(vanishing)))
        graded = all(len(u) + len(v) == len(w) for name in ("a", "b", "ap", "bp") for w, u, v, _ in ab.family(name).entries())
        letters_zero = all(len(w) >= 2 for name in ("a", "b", "ap", "bp") for w, *_ in ab.family(name).entries())
        out.append(_result("a, b, a', b' vanish unless |U| + |V| = |W|", m, graded))
        out.append(_result("a, b, a', b' vanish for W a letter", 1, letters_zero))

        difference = []
        for w in words:
            lhs = d_cy(colie_basis((T_AT_ONE, w)), basis="t01")
            rhs = Combination()
            for u, v, c in ab.a.terms_for(w):
                rhs = rhs + wedge_change_basis(wedge([((T_AT_ONE, u), (T_AT_ONE, v), c)]), "t01")
            difference.append((w, lhs == rhs))
        out.append(_result("d_cy(T0 - T1) = sum a (T0 - T1)^(T0 - T1)", m, _first_failure(difference) is None,
                           _first_failure(difference)))

        jacobi, antisym = [], []
        for w in words:
            for kind in (TX, T_AT_ONE, T0, T1):
                t = colie_basis((kind, w))
                jacobi.append((f"{kind}:{w}", co_jacobi_defect(t).is_zero()))
                antisym.append((f"{kind}:{w}", antisymmetry_defect(t).is_zero()))
        out.append(_result("co-Jacobi identity on every basis tag", m, _first_failure(jacobi) is None, _first_failure(jacobi)))
        out.append(_result("cobracket tensor is antisymmetric", m, _first_failure(antisym) is None, _first_failure(antisym)))

        rng = self.rng("basis-change")
        trips = []
        for _ in range(self.samples):
            t = Combination([((rng.choice((TX, T_AT_ONE)), rng.choice(words)), rng.randint(-3, 3)) for _ in range(3)])
            trips.append((repr(t), change_basis(change_basis(t, "t01"), "x1") == t))
        out.append(_result("basis change round trip", m, _first_failure(trips) is None, _first_failure(trips)))
        return out

    def suite_models(self) -> List[CheckResult]:
        m = self.max_weight
        out = []
        for space in ("x", "a1", "point", "geom"):
            p = build_model(space, m).presentation
            out.append(_result(f"d^2 = 0 on the {space} model", m, not p.d_squared_defects()))
        px = model_X(m)
        out.append(_result("X model has no L0:0 and no L1:1", 1, not px.has("L0:0") and not px.has("L1:1")))
        if m >= 2:
            expected = px._normalize_element(Combination({("L1:0", "L0:1"): -1}))
            out.append(_result("d L0:01 = -L1:0 L0:1", 2, px.generator_differential("L0:01") == expected,
                               repr(px.generator_differential("L0:01"))))
        pa, pp = model_A1(m), model_point(m)
        same = [
            (g.name, pp.generator_differential("N" + g.name[1:]) ==
             pa.generator_differential(g.name).map_keys(lambda mono: (tuple("N" + n[1:] for n in mono), 1)))
            for g in pa.generators
        ]
        out.append(_result("point model equals the affine-line model generator for generator", m,
                           _first_failure(same) is None, _first_failure(same)))
        for morphism in (restriction_j(m), constant_pullback(m), fiber_at_one(m), geometric_projection(m)):
            defects = morphism.chain_map_defects()
            out.append(_result(f"{morphism.label} commutes with the differentials", m, not defects,
                               ", ".join(sorted(defects)[:3])))
        rng = self.rng("multiplicative")
        j = restriction_j(m)
        mult = []
        for _ in range(self.samples):
            x, y = self._random_cdga(pa, rng), self._random_cdga(pa, rng)
            mult.append((repr(x), j.apply(pa.multiply(x, y)) == px.multiply(j.apply(x), j.apply(y))))
        out.append(_result("j* is multiplicative", m, _first_failure(mult) is None, _first_failure(mult)))

        abelian = CoLieCoalgebra(tags=("a", "b"), degree={"a": 0, "b": 0}, weight={"a": 1, "b": 1}, cobracket={})
        zero_d = all(cobar_coLie(abelian).generator_differential(n).is_zero() for n in ("sa", "sb"))
        out.append(_result("abelian coalgebra gives zero differential", 0, zero_d))
        suspended = CoLieCoalgebra(
            tags=("a", "b"), degree={"a": 0, "b": 1}, weight={"a": 1, "b": 1}, cobracket={},
            differential={"a": Combination.basis("b")},
        )
        d_sa = cobar_coLie(suspended).generator_differential("sa")
        out.append(_result("suspension negates the differential", 0, d_sa == Combination({("sb",): -1}), repr(d_sa)))
        out.append(self._flipped_coefficient_detected(min(m, 4)))
        return out

    @staticmethod
    def _flipped_coefficient_detected(weight: int) -> CheckResult:
        honest = tcl_coalgebra(weight, "t01")
        cobar = cobar_coLie(honest)
        for tag in honest.tags:
            for (u, v), c in honest.cobracket[tag].items():
                product = cobar._normalize_element(Combination.basis((suspended_name(u), suspended_name(v))))
                product_d = cobar.differential(product)
                if product_d.is_zero():
                    continue
                broken = dict(honest.cobracket)
                broken[tag] = honest.cobracket[tag] - Combination({(u, v): 2 * c})
                corrupted = CoLieCoalgebra(honest.tags, honest.degree, honest.weight, broken)
                try:
                    cobar_coLie(corrupted)
                except NotACoLieError:
                    return _result("a flipped cobracket coefficient is rejected", weight, True)
                return _result("a flipped cobracket coefficient is rejected", weight, False, f"{tag} {u}^{v}")
        return _info("a flipped cobracket coefficient is rejected", weight, "no coefficient to flip at this weight")

    def suite_bar(self) -> List[CheckResult]:
        m = min(self.max_weight, 4)
        p = model_X(max(m, 2))
        bar = bar_for(p)
        rng = self.rng("bar")
        samples = [bar.random_element(rng, m) for _ in range(self.samples)]
        pairs = [(bar.random_element(rng, m, max_length=2), bar.random_element(rng, m, max_length=2))
                 for _ in range(self.samples)]
        out = []

        out.append(_result("d_B^2 = 0", m, all(bar.differential(bar.differential(b)).is_zero() for b in samples)))
        coassoc = []
        for b in samples:
            lhs, rhs = {}, {}
            for (x, y), c in bar.deconcatenation(b).items():
                for (x1, x2), c1 in bar.deconcatenation(Combination.basis(x)).items():
                    lhs[(x1, x2, y)] = lhs.get((x1, x2, y), 0) + c * c1
                for (y1, y2), c1 in bar.deconcatenation(Combination.basis(y)).items():
                    rhs[(x, y1, y2)] = rhs.get((x, y1, y2), 0) + c * c1
            coassoc.append((repr(b), Combination(lhs) == Combination(rhs)))
        out.append(_result("deconcatenation is coassociative", m, _first_failure(coassoc) is None))

        commutes, assoc, hopf, kills = [], [], [], []
        for (x, y), z in zip(pairs, samples):
            xy, yx = bar.shuffle(x, y), bar.shuffle(y, x)
            signed = Combination()
            for u, cu in x.items():
                for v, cv in y.items():
                    sign = -1 if (bar.bar_degree(u) * bar.bar_degree(v)) % 2 else 1
                    signed = signed + bar.shuffle(Combination.basis(v), Combination.basis(u)) * (cu * cv * sign)
            commutes.append((repr(x), xy == signed))
            z_small = bar.random_element(rng, m, max_length=1)
            assoc.append((repr(x), bar.shuffle(xy, z_small) == bar.shuffle(x, bar.shuffle(y, z_small))))
            hopf.append((repr(x), bar.deconcatenation(xy) == bar.tensor_shuffle(bar.deconcatenation(x), bar.deconcatenation(y))))
            if not x.is_zero() and not y.is_zero():
                kills.append((repr(x), bar.hain_projector(xy).is_zero()))
        out.append(_result("shuffle is graded commutative", m, _first_failure(commutes) is None, _first_failure(commutes)))
        out.append(_result("shuffle is associative", m, _first_failure(assoc) is None, _first_failure(assoc)))
        out.append(_result("deconcatenation is multiplicative for the shuffle", m, _first_failure(hopf) is None,
                           _first_failure(hopf)))
        out.append(_result("projector kills shuffle products", m, _first_failure(kills) is None, _first_failure(kills)))

        idem = [(repr(b), bar.hain_projector(bar.hain_projector(b)) == bar.hain_projector(b)) for b in samples]
        chain = [(repr(b), bar.hain_projector(bar.differential(b)) == bar.differential(bar.hain_projector(b)))
                 for b in samples]
        out.append(_result("projector is idempotent", m, _first_failure(idem) is None, _first_failure(idem)))
        out.append(_result("projector commutes with d_B", m, _first_failure(chain) is None, _first_failure(chain)))
        singles = [(g, bar.hain_projector(bar.gens(g)) == bar.gens(g)) for g in p.names()]
        out.append(_result("projector fixes single slots", m, _first_failure(singles) is None))

        two = bar.differential(bar.gens("L1:0", "L0:1"))
        expected = -bar.word(p.multiply(p.element("L1:0"), p.element("L0:1")))
        out.append(_result("d_B[L1:0|L0:1] = -[L1:0 L0:1]", 2, two == expected, repr(two)))
        g, h = "L1:0", "L0:1"
        sh = bar.shuffle(bar.gens(g), bar.gens(h))
        out.append(_result("[g] sh [h] = [g|h] + [h|g]", 2, sh == bar.gens(g, h) + bar.gens(h, g)))
        out.append(_result("delta_Q of a closed single slot is zero", 1, bar.delta_Q(bar.gens(g)).is_zero()))

        counts = [(str(n), len(enumerate_trees(n)) == catalan(n - 1)) for n in range(1, 7)]
        out.append(_result("planar trees are counted by Catalan numbers", 6, _first_failure(counts) is None))
        cherry = []
        top = min(self.max_weight, 5)
        for w in lyndon_words(top):
            for kind in (T0, T1, TX, T_AT_ONE):
                t = colie_basis((kind, w))
                for n in range(3, len(w) + 1):
                    for tree in enumerate_trees(n):
                        first = delta_T(tree, t, _tensor_cobracket)
                        last = delta_T(tree, t, _tensor_cobracket, cherry="last")
                        cherry.append((f"{kind}:{w}", first == last == delta_T_top_down(tree, t, _tensor_cobracket)))
        out.append(_result("iterated cobracket does not depend on the cherry order", top,
                           _first_failure(cherry) is None, _first_failure(cherry)))
        return out

    def suite_lifts(self) -> List[CheckResult]:
        out = []
        for w in _words_between(2, self.max_weight):
            n = len(w)
            for name, spec in VARIANTS.items():
                model = build_model(spec.space, n)
                if not model.presentation.has(f"{spec.family}:{w}"):
                    continue
                try:
                    result = lift_LB(w, name)
                except InfeasibleError as exc:
                    out.append(_result(f"closed lift exists [{name} {w}]", n, False, str(exc)))
                    continue
                out.append(_result(f"closed lift exists [{name} {w}]", n, True))
                out.extend(lift_properties(result.element, w, spec, model))

            diff, point = lift_LB(w, "diff").element, lift_LB(w, "point").element
            restricted = apply_slotwise(diff, fiber_at_one(n))
            out.append(_result(f"fiber at 1 of the affine-line lift is the point lift [{w}]", n, restricted == point))

            bar = bar_for(model_X(n))
            relation = (apply_slotwise(diff, restriction_j(n)) - lift_LB(w, "plain").element
                        + lift_LB(w, "one").element)
            out.append(_result(f"j*(diff lift) - plain + one is closed [{w}]", n, bar.differential(relation).is_zero()))
            out.append(_result(f"j*(diff lift) - plain + one has no tensor-degree-1 part [{w}]", n,
                               bar.pi_1(relation).is_zero()))
            out.append(_info(f"j*(diff lift) - plain + one vanishes exactly [{w}]", n,
                             "zero" if relation.is_zero() else f"{len(relation)} terms"))
            const = lift_LB(w, "const").element
            gap = apply_slotwise(diff, restriction_j(n)) - const
            out.append(_info(f"j*(diff lift) - const lift [{w}]", n,
                             f"closed={bar.differential(gap).is_zero()} terms={len(gap)}",
                             "equal only up to boundaries and shuffles"))
            only_k = all(name.startswith("K:") for word in const for slot in word for name in slot)
            out.append(_result(f"const lift uses only K generators [{w}]", n, only_k))
            a = ab_tables(n).a
            expected = antisymmetric_tensor(
                [(lift_of_tag((T_AT_ONE, u)), lift_of_tag((T_AT_ONE, v)), c) for u, v, c in a.terms_for(w)]
            )
            out.append(_result(f"const lift cobracket has only a-coefficients [{w}]", n, bar.delta_Q(const) == expected))

        if self.max_weight >= 4:
            out.append(self._corrupted_oracle())
        return out

    @staticmethod
    def _corrupted_oracle() -> CheckResult:
        honest = model_X(4)
        broken = {g.name: honest.generator_differential(g.name) for g in honest.generators}
        broken["L0:0011"] = honest._normalize_element(Combination({("L0:01", "L1:01"): 1}))
        corrupted = CdgaPresentation(honest.generators, broken, label="corrupted", validate=False)
        try:
            closed_lift_oracle("0011", "plain", corrupted)
        except InfeasibleError:
            return _result("oracle reports a corrupted differential as infeasible", 4, True)
        return _result("oracle reports a corrupted differential as infeasible", 4, False, "a lift was found")

    def suite_edqx(self) -> List[CheckResult]:
        out = []
        for w in _words_between(2, self.max_weight):
            out.extend(verify_EDQX(w))
        return out

    def suite_basis(self) -> List[CheckResult]:
        if self.max_weight < 2:
            return []
        return verify_geom_basis(self.max_weight)

    def suite_unit(self) -> List[CheckResult]:
        out = []
        for w in _words_between(2, min(self.max_weight, 4)):
            entry = unit_audit(w, "plain")
            n = len(w)
            out.append(CheckResult(
                check=f"tree formula with constants 1/(n C(n-1) 2^n) is closed [{w}]",
                weight=n,
                status=CheckStatus.PASS if entry.claim_closed else CheckStatus.NON_CLOSED,
                witness=None if entry.claim_closed else f"constants {', '.join(entry.claim_constants)}",
                statement="Catalan-weighted tree sums under the projector",
            ))
            if entry.solved_constants is None:
                out.append(_info(f"closed tree-sum constants [{w}]", n, "none", entry.convention))
            else:
                out.append(_info(f"closed tree-sum constants [{w}]", n, ", ".join(entry.solved_constants),
                                 entry.convention))
                out.append(_info(f"closed constants are 2^(n-1)/(n C(n-1)) [{w}]", n,
                                 str(entry.solved_match_half_wedge).lower(), entry.convention))
            consistent = not entry.solved_closed or entry.agrees_with_oracle
            out.append(_result(f"closed tree-sum lift agrees with the oracle [{w}]", n, consistent))
        return out
