"""Smoke test: every package imports and exposes its public names."""


def test_models_import():
    from models import SUITES, CheckResult, RunConfig, VerificationReport

    assert "lifts" in SUITES
    assert RunConfig(max_weight=3).seed == 42
    assert CheckResult and VerificationReport


def test_services_import():
    import services

    for name in services.__all__:
        assert hasattr(services, name), name


def test_routes_import():
    from routes import ROUTES

    assert [r.__name__.rsplit(".", 1)[-1] for r in ROUTES] == [
        "lyndon", "coeffs", "cobracket", "model", "trees", "lift", "verify",
    ]
