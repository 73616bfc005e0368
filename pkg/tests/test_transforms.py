import math

import numpy as np
import pytest

from melaplace import (
    FunctionSpec,
    NoClosedForm,
    NoStrip,
    OutOfDomain,
    PoleHit,
    Strip,
    TransformExpr,
    TransformForm,
    TransformKind,
    analytic_transform,
    eval_transform,
    holomorphy_strip,
    integrate_finite,
    integrate_halfline,
    integrate_unit_singular,
    laplace_transform,
    mellin_moment,
    mellin_transform,
    transform_estimate,
)

EXP1 = FunctionSpec.exp(1.0)
POW_HALF = FunctionSpec.power(0.5)
MIXED = FunctionSpec.mixed_exp(1.0, 2.0)
EGAMMA = FunctionSpec.exp_minus_x()

# partial-fraction value of the mixedexp transform, cross-checked against
# direct quadrature before freezing the residue table
def mixed_closed_form(z, g1=1.0, g2=2.0):
    return 0.5 * (1.0 / (z + g1) - (z + g1) / ((z + g1) ** 2 + 4.0)) + 0.5 * (
        1.0 / (z + g2) + (z + g2) / ((z + g2) ** 2 + 4.0)
    )


def factorial_oracle(n):
    out = 1
    for k in range(2, n):
        out *= k
    return float(out)


# ---------------------------------------------------------------------------
# direct transforms
# ---------------------------------------------------------------------------

def test_laplace_of_exponential():
    assert laplace_transform(EXP1, 1.0) == pytest.approx(0.5, rel=1e-9)
    assert laplace_transform(EXP1, 0.0) == pytest.approx(1.0, rel=1e-9)


def test_laplace_of_mixed_exponential():
    assert laplace_transform(MIXED, 0.0) == pytest.approx(0.775, rel=1e-9)


def test_laplace_domain_guard():
    with pytest.raises(OutOfDomain):
        laplace_transform(EXP1, -1.0)
    with pytest.raises(OutOfDomain):
        laplace_transform(EXP1, complex(-1.5, 3.0))


def test_moment_of_power():
    assert mellin_moment(POW_HALF, 1.5) == pytest.approx(0.5, rel=1e-9)
    assert mellin_moment(FunctionSpec.power(0.0), 1.0) == pytest.approx(1.0, rel=1e-9)


def test_moment_of_mixed_power():
    # frozen from scipy.integrate.quad at epsrel 1e-14
    expected = 0.3759861337450637
    got = mellin_moment(FunctionSpec.mixed_power(1.0, 2.0), 1.0)
    assert got == pytest.approx(expected, rel=1e-10)


def test_moment_domain_guard():
    with pytest.raises(OutOfDomain):
        mellin_moment(POW_HALF, -0.5)


@pytest.mark.parametrize(
    "z,expected",
    [(3.0, 2.0), (1.0, 1.0), (2.0, 1.0), (4.0, 6.0)],
)
def test_mellin_transform_matches_factorials(z, expected):
    assert factorial_oracle(int(z)) == expected
    assert mellin_transform(EGAMMA, z) == pytest.approx(expected, rel=1e-9)


def test_mellin_transform_at_half():
    # Gaussian-integral oracle: the value at 1/2 is sqrt(pi)
    assert mellin_transform(EGAMMA, 0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-9)


def test_mellin_transform_strip_guard():
    with pytest.raises(OutOfDomain):
        mellin_transform(EGAMMA, -0.5)
    with pytest.raises(NoStrip):
        mellin_transform(POW_HALF, 1.0)


def test_split_identity_parts_match_direct_quadrature():
    # unit-interval part and half-line part each against a plain finite
    # integral computed without the exp substitution
    z = 2.5
    f = lambda x: x ** (z - 1.0) * np.exp(-x)
    unit = integrate_unit_singular(f, z)
    tail = integrate_halfline(f, 1.0)
    direct_unit = integrate_finite(f, 1e-12, 1.0)
    direct_tail = integrate_finite(f, 1.0, 60.0)
    assert abs(unit.value - direct_unit.value) <= 10 * 1e-10
    assert abs(tail.value - direct_tail.value) <= 10 * 1e-10
    assert mellin_transform(EGAMMA, z) == pytest.approx(
        complex(unit.value + tail.value), rel=1e-12
    )


# ---------------------------------------------------------------------------
# holomorphy strips
# ---------------------------------------------------------------------------

def test_strips():
    assert holomorphy_strip(EGAMMA) == Strip(0.0, math.inf)
    assert holomorphy_strip(FunctionSpec.exp(2.0)) == Strip(0.0, math.inf)
    assert holomorphy_strip(MIXED) == Strip(0.0, math.inf)
    for bad in (POW_HALF, FunctionSpec.mixed_power(1.0, 2.0), FunctionSpec.exp(0.0)):
        with pytest.raises(NoStrip):
            holomorphy_strip(bad)


@pytest.mark.parametrize("c", [0.1, 10.0])
def test_strip_borders_verified_by_quadrature(c):
    # both defining integrals converge for interior abscissas
    spec = FunctionSpec.exp(2.0)
    f = lambda x: x ** (c - 1.0) * np.exp(-2.0 * x)
    assert integrate_unit_singular(f, c).converged
    assert integrate_halfline(f, 1.0).converged


# ---------------------------------------------------------------------------
# closed-form catalog
# ---------------------------------------------------------------------------

def test_catalog_single_pole_forms():
    t = analytic_transform(EXP1, TransformKind.LAPLACE)
    assert t.form is TransformForm.RATIONAL
    assert t.poles == ((complex(-1.0), complex(1.0)),)
    t = analytic_transform(POW_HALF, TransformKind.MOMENT)
    assert t.poles == ((complex(-0.5), complex(1.0)),)
    t = analytic_transform(EGAMMA, TransformKind.LAPLACE)
    assert t.poles == ((complex(-1.0), complex(1.0)),)


def test_catalog_mixed_residues_golden():
    t = analytic_transform(MIXED, TransformKind.LAPLACE)
    table = {p: r for p, r in t.poles}
    assert table == {
        complex(-1, 0): complex(0.5),
        complex(-1, 2): complex(-0.25),
        complex(-1, -2): complex(-0.25),
        complex(-2, 0): complex(0.5),
        complex(-2, 2): complex(0.25),
        complex(-2, -2): complex(0.25),
    }
    assert eval_transform(t, 0.0) == pytest.approx(0.775)


def test_catalog_mixed_equal_rates_collapses():
    # coincident poles merge and the cosine pairs cancel exactly
    t = analytic_transform(FunctionSpec.mixed_exp(1.5, 1.5), TransformKind.LAPLACE)
    assert t.poles == ((complex(-1.5), complex(1.0)),)


def test_catalog_gamma_form():
    t = analytic_transform(EGAMMA, TransformKind.MELLIN)
    assert t.form is TransformForm.GAMMA


@pytest.mark.parametrize(
    "spec,kind",
    [
        (FunctionSpec.mixed_power(1.0, 2.0), TransformKind.MOMENT),
        (POW_HALF, TransformKind.LAPLACE),
        (EGAMMA, TransformKind.MOMENT),
        (EXP1, TransformKind.MELLIN),
    ],
)
def test_no_closed_form(spec, kind):
    with pytest.raises(NoClosedForm):
        analytic_transform(spec, kind)


def test_catalog_consistency_against_quadrature():
    rng = np.random.default_rng(42)
    pairs = [
        (EXP1, TransformKind.LAPLACE),
        (POW_HALF, TransformKind.MOMENT),
        (MIXED, TransformKind.LAPLACE),
        (EGAMMA, TransformKind.LAPLACE),
    ]
    for spec, kind in pairs:
        t = analytic_transform(spec, kind)
        a = t.validity.c1
        for _ in range(20):
            z = complex(a + 0.2 + rng.uniform(0.0, 3.0), rng.uniform(-4.0, 4.0))
            exact = eval_transform(t, z)
            numeric = transform_estimate(spec, kind, z).value
            assert abs(exact - numeric) <= 10 * 1e-10 * abs(exact)


def test_gamma_consistency_against_stdlib():
    rng = np.random.default_rng(3)
    for _ in range(8):
        z = rng.uniform(0.3, 5.0)
        assert mellin_transform(EGAMMA, z) == pytest.approx(math.gamma(z), rel=1e-9)


# ---------------------------------------------------------------------------
# uniform evaluation
# ---------------------------------------------------------------------------

def test_eval_rational():
    t = TransformExpr.rational([(-1.0, 1.0)])
    assert eval_transform(t, 1.0) == pytest.approx(0.5)
    with pytest.raises(PoleHit):
        eval_transform(t, -1.0)
    with pytest.raises(PoleHit):
        eval_transform(t, -1.0 + 1e-13)


def test_eval_gamma():
    t = TransformExpr.gamma()
    assert eval_transform(t, 4.0) == pytest.approx(6.0, rel=1e-9)
    with pytest.raises(OutOfDomain):
        eval_transform(t, -0.5)


def test_eval_numeric_checks_validity():
    t = TransformExpr.numeric(EXP1, TransformKind.LAPLACE)
    assert t.validity == Strip(-1.0, math.inf)
    assert eval_transform(t, 1.0) == pytest.approx(0.5, rel=1e-9)
    with pytest.raises(OutOfDomain):
        eval_transform(t, -1.0)


def test_duality_between_laplace_and_moment():
    rng = np.random.default_rng(11)
    for _ in range(6):
        g = rng.uniform(0.1, 3.0)
        z = complex(-g + 0.15 + rng.uniform(0.0, 3.0), rng.uniform(-3.0, 3.0))
        lhs = laplace_transform(FunctionSpec.exp(g), z)
        rhs = mellin_moment(FunctionSpec.power(g), z)
        assert abs(lhs - rhs) <= 1e-9


def test_moment_agrees_with_unit_interval_quadrature():
    # the production moment path integrates in t after y = exp(-t); check it
    # against a direct y-space integration of the same kernel, which shares
    # no panels with it
    g = 0.7
    for z in (complex(0.4, 1.3), complex(-0.3, 0.0), complex(1.0, -2.0)):
        fused = mellin_moment(FunctionSpec.power(g), z)
        direct = integrate_unit_singular(
            lambda y: np.exp((z + g - 1.0) * np.log(y)), z.real + g
        )
        assert abs(fused - direct.value) <= 1e-10


def test_conjugate_symmetry_of_direct_transforms():
    z = complex(0.8, 2.3)
    for spec, kind in (
        (EXP1, TransformKind.LAPLACE),
        (POW_HALF, TransformKind.MOMENT),
        (EGAMMA, TransformKind.MELLIN),
    ):
        v = transform_estimate(spec, kind, z).value
        w = transform_estimate(spec, kind, z.conjugate()).value
        assert w == pytest.approx(v.conjugate(), rel=1e-9)


def test_pointwise_linearity_of_laplace():
    a, b = 1.5, -0.75
    z = complex(0.6, 1.1)
    f, g = EXP1, FunctionSpec.exp(2.0)
    combined = integrate_halfline(
        lambda t: np.exp(-t * z) * (a * np.exp(-t) + b * np.exp(-2.0 * t)), 0.0
    ).value
    separate = a * laplace_transform(f, z) + b * laplace_transform(g, z)
    assert abs(combined - separate) <= 1e-10


# ---------------------------------------------------------------------------
# TransformExpr invariants and serialization
# ---------------------------------------------------------------------------

def test_rational_invariants():
    with pytest.raises(ValueError):
        TransformExpr.rational([])
    with pytest.raises(ValueError):
        TransformExpr.rational([(-1.0, 1.0), (-1.0 + 1e-13, 2.0)])


def test_conjugate_symmetry_detection():
    sym = analytic_transform(MIXED, TransformKind.LAPLACE)
    assert sym.is_conjugate_symmetric()
    lop = TransformExpr.rational([(complex(-1, 2), 1.0)])
    assert not lop.is_conjugate_symmetric()


def test_json_roundtrip_all_forms():
    rational = analytic_transform(MIXED, TransformKind.LAPLACE)
    doc = rational.to_json()
    assert doc["form"] == "rational" and len(doc["poles"]) == 6
    assert TransformExpr.from_json(doc).poles == rational.poles

    numeric = TransformExpr.numeric(POW_HALF, TransformKind.MOMENT)
    doc = numeric.to_json()
    assert doc == {
        "form": "numeric",
        "source": {"kind": "power", "params": [0.5]},
        "kind": "moment",
    }
    back = TransformExpr.from_json(doc)
    assert back.source == POW_HALF and back.kind is TransformKind.MOMENT

    assert TransformExpr.from_json({"form": "gamma"}).form is TransformForm.GAMMA
    with pytest.raises(ValueError):
        TransformExpr.from_json({"form": "nope"})


def test_mixed_closed_form_matches_residue_table():
    # the helper used to derive the residues agrees with the frozen table
    t = analytic_transform(MIXED, TransformKind.LAPLACE)
    rng = np.random.default_rng(5)
    for _ in range(5):
        z = complex(rng.uniform(-0.9, 3.0), rng.uniform(-4.0, 4.0))
        assert eval_transform(t, z) == pytest.approx(
            mixed_closed_form(z), rel=1e-13
        )
