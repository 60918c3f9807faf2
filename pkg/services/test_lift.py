from fractions import Fraction

import pytest

from models import UnitStatus
from services.bar_service import apply_slotwise, bar_for
from services.colie_service import T0, colie_basis
from services.cycle_models_service import build_model, fiber_at_one, model_X
from services.dgcore_service import CdgaPresentation
from services.errors import InfeasibleError, InvalidInputError, InvalidMorphismError
from services.lift_service import (
    VARIANTS,
    adjunction_unit,
    claim_constant,
    closed_lift_oracle,
    half_wedge_constant,
    lift_LB,
    lift_properties,
    unit_audit,
)
from services.linear import Combination
from services.words_service import lyndon_words

HALF = Fraction(1, 2)


def test_oracle_lift_in_weight_two():
    oracle = closed_lift_oracle("01")
    expected = Combination(
        {
            (("L0:01",),): 1,
            (("L0:1",), ("L1:0",)): -HALF,
            (("L1:0",), ("L0:1",)): HALF,
        }
    )
    assert oracle.element == expected
    assert oracle.generator == "L0:01"


@pytest.mark.parametrize("variant", sorted(VARIANTS))
@pytest.mark.parametrize("word", ["01", "001", "011"])
def test_lift_properties_hold(variant, word):
    spec = VARIANTS[variant]
    model = build_model(spec.space, len(word))
    if not model.presentation.has(f"{spec.family}:{word}"):
        pytest.skip("generator removed in this model")
    result = lift_LB(word, variant)
    checks = lift_properties(result.element, word, spec, model)
    assert all(c.status.value == "pass" for c in checks), [c.check for c in checks if c.status.value != "pass"]


def test_lift_check_flag_attaches_results():
    result = lift_LB("001", "plain", check=True)
    assert len(result.checks) == 5
    assert result.path == "oracle"
    assert result.solution_dimension is not None


def test_fiber_at_one_of_the_affine_line_lift_is_the_point_lift():
    for w in ("01", "001", "011"):
        diff = lift_LB(w, "diff").element
        assert apply_slotwise(diff, fiber_at_one(len(w))) == lift_LB(w, "point").element


def test_claim_constants():
    assert claim_constant(1) == Fraction(1, 2)
    assert claim_constant(2) == Fraction(1, 8)
    assert claim_constant(3) == Fraction(1, 48)


def test_claim_method_falls_back_to_solved_constants():
    result = lift_LB("01", "plain", method="claim")
    assert result.path == "solved-constants"
    assert result.element == lift_LB("01", "plain").element


def test_unit_audit_in_weight_two():
    entry = unit_audit("01")
    assert entry.claim_constants == ["1/2", "1/8"]
    assert entry.claim_closed is False
    assert entry.claim_status == UnitStatus.NON_CLOSED
    assert entry.solved_constants == ["1", "1"]
    assert entry.solved_closed is True
    assert entry.solved_match_half_wedge is True
    assert entry.agrees_with_oracle is True


def test_unit_audit_flags_the_catalan_constants_in_weight_three():
    entry = unit_audit("001")
    assert entry.claim_constants == ["1/2", "1/8", "1/48"]
    assert entry.claim_status == UnitStatus.NON_CLOSED
    assert entry.convention == "u^v = (u(x)v - v(x)u)/2"


@pytest.mark.parametrize("n, value", [(1, 1), (2, 1), (3, Fraction(2, 3)), (4, Fraction(2, 5))])
def test_half_wedge_constants(n, value):
    assert half_wedge_constant(n) == value


def test_default_constants_are_not_rescaled():
    model = build_model("x", 2)
    t = colie_basis((T0, "01"))
    element = adjunction_unit(t, model)
    assert bar_for(model.presentation).pi_1(element) == Combination({(("L0:01",),): HALF})


def test_adjunction_unit_rejects_a_bad_generator_map():
    model = build_model("x", 2)
    t = colie_basis((T0, "01"))

    def bad_map(tag):
        return "K:01" if tag == (T0, "01") else model.generator_for(tag)

    with pytest.raises(InvalidMorphismError):
        adjunction_unit(t, model, gen_map=bad_map)


@pytest.mark.parametrize("word", ["0", "10", "", "012"])
def test_lift_rejects_bad_words(word):
    with pytest.raises(InvalidInputError):
        lift_LB(word)


def test_lift_rejects_unknown_variant_and_method():
    with pytest.raises(InvalidInputError):
        lift_LB("01", "other")
    with pytest.raises(InvalidInputError):
        lift_LB("01", "plain", method="guess")


def test_removed_generator_has_no_lift():
    with pytest.raises(InvalidInputError):
        closed_lift_oracle("01", "const", build_model("x", 1))


def test_oracle_reports_a_corrupted_differential():
    honest = model_X(4)
    broken = {g.name: honest.generator_differential(g.name) for g in honest.generators}
    broken["L0:0011"] = Combination({("L0:01", "L1:01"): 1})
    corrupted = CdgaPresentation(honest.generators, broken, label="corrupted", validate=False)
    with pytest.raises(InfeasibleError):
        closed_lift_oracle("0011", "plain", corrupted)


@pytest.mark.slow
def test_lifts_to_weight_five():
    for w in lyndon_words(5):
        if len(w) < 2:
            continue
        for name, spec in VARIANTS.items():
            model = build_model(spec.space, len(w))
            if not model.presentation.has(f"{spec.family}:{w}"):
                continue
            element = lift_LB(w, name).element
            bar = bar_for(model.presentation)
            assert bar.differential(element).is_zero()
            assert bar.hain_projector(element) == element
