"""The full machinery on other quadratic irrationalities.

The golden ratio has c_1 = 1, so its grade +-1 sectors are single-sector
and cannot expose indexing mistakes; sqrt(2) has c_1 = 2 (and c_2 = 12),
which drives every sector-shift branch.  1 + sqrt(3) covers an even
discriminant with b != 0.
"""

import math
import warnings

import numpy as np
import pytest

from ncgauge.quadfield import ONE_PLUS_SQRT3, SQRT2, ThetaContext
from ncgauge.torus import TorusElement
from ncgauge.heisenberg import (
    GradedElement,
    GridSpec,
    TruncationWarning,
    gaussian,
    left_act,
    mul_P,
    partial,
    random_packet,
    right_act,
    sector_count,
    sigma,
    star_P,
    star_heis,
)
from ncgauge.gauge import (
    GaugePotential,
    adaptedness_test,
    field_strength,
    field_strength_eigenvalue,
    relative_adaptedness_test,
)

GRID = GridSpec()


def ctxs():
    return [ThetaContext(SQRT2), ThetaContext(ONE_PLUS_SQRT3)]


def rel(a, b, *inputs):
    sc = max(
        [a.norm(), b.norm()] + [float(np.prod([p.norm() for p in inputs]))]
    )
    return (a - b).norm() / sc


def probe_width(ctx, m):
    # resolved by the grid and decayed well inside the window, per grade
    from ncgauge.heisenberg import natural_width

    return min(max(natural_width(ctx, m), 0.5), 1.5)


@pytest.mark.parametrize("ctx", ctxs(), ids=["sqrt2", "one_plus_sqrt3"])
class TestCrossTheta:
    def test_sector_counts(self, ctx):
        assert sector_count(ctx, 1) == abs(ctx.c(1))
        assert sector_count(ctx, -1) == abs(ctx.c(1))

    def test_commutator_eigenvalues(self, ctx):
        for m in (-2, -1, 1, 2):
            S = sector_count(ctx, m)
            f = gaussian(
                ctx, GRID, m, width=probe_width(ctx, m),
                sector_weights=np.arange(1, S + 1),
            )
            g = GradedElement.from_heis(f)
            comm = (
                partial(1, partial(2, g)).parts[m]
                - partial(2, partial(1, g)).parts[m]
            )
            lam = f.inner(comm) / f.inner(f)
            expected = -2j * math.pi * float(ctx.eps_pow(-m) * ctx.c(m))
            assert abs(lam - expected) / abs(expected) < 1e-5, m

    def test_module_laws_multisector(self, ctx):
        rng = np.random.default_rng(0xA17E)
        f = random_packet(ctx, GRID, 1, rng)
        lam = np.exp(2j * np.pi * ctx.theta_float)
        lhs = right_act("U", right_act("V", f))
        rhs = right_act("V", right_act("U", f)).scale(lam)
        assert rel(lhs, rhs, f) < 2e-5
        assert rel(
            right_act("V", left_act("U", f)), left_act("U", right_act("V", f)), f
        ) < 1e-5

    def test_star(self, ctx):
        rng = np.random.default_rng(0xA17E)
        f = random_packet(ctx, GRID, 1, rng)
        sf = star_heis(f)
        assert sf.norm() / f.norm() == pytest.approx(
            ctx.eps_float**-0.5, rel=1e-6
        )
        assert rel(star_heis(sf), f, f) < 5e-5

    def test_graded_product_laws(self, ctx):
        rng = np.random.default_rng(0xA17E)
        p = GradedElement.from_heis(random_packet(ctx, GRID, 1, rng))
        q = GradedElement.from_heis(random_packet(ctx, GRID, 1, rng))
        h = GradedElement.from_heis(random_packet(ctx, GRID, -1, rng))
        b = GradedElement.from_torus(
            TorusElement(ctx.theta_float, {(1, 0): 0.7, (0, 1): -0.4j}), ctx, GRID
        )
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", TruncationWarning)
            pq = mul_P(p, q)
            assert pq.grades() == [2]
            assert mul_P(p, h).grades() == [0]
            assert rel(mul_P(pq, h), mul_P(p, mul_P(q, h)), p, q, h) < 1e-4
            assert rel(mul_P(mul_P(p, h), q), mul_P(p, mul_P(h, q)), p, q, h) < 1e-4
            assert rel(mul_P(mul_P(b, p), q), mul_P(b, pq), p, q, b) < 1e-4
            assert rel(star_P(pq), mul_P(star_P(q), star_P(p)), p, q) < 1e-4
            for j in (1, 2):
                lhs = partial(j, pq)
                rhs = mul_P(partial(j, p), sigma(q)) + mul_P(p, partial(j, q))
                assert rel(lhs, rhs, p, q) < 1e-4, j

    def test_field_strength_eigenvalue(self, ctx):
        for m in (-1, 1, 2):
            f = GradedElement.from_heis(
                gaussian(ctx, GRID, m, width=probe_width(ctx, m))
            )
            F = field_strength(GaugePotential(), f)
            lam = field_strength_eigenvalue(ctx, m)
            measured = f.parts[m].inner(F.parts[0].parts[m]) / f.parts[m].inner(
                f.parts[m]
            )
            assert measured.real == pytest.approx(lam, rel=1e-5)

    def test_adaptedness_unique(self, ctx):
        eps = ctx.eps
        assert adaptedness_test(ctx, eps**2, M=4)["adapted"]
        assert not adaptedness_test(ctx, eps, M=4)["adapted"]
        assert relative_adaptedness_test(ctx, eps, M=4)["adapted"]
        assert not relative_adaptedness_test(ctx, eps**2, M=4)["adapted"]
        a = adaptedness_test(ctx, eps**2, M=4)
        assert a["curvature_constant"] == pytest.approx(
            complex(0, -ctx.eps_float * ctx.c(1))
        )
