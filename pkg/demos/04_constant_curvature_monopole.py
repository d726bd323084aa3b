"""The constant-curvature potential and the unique deformation parameter.

The canonical potential nabla_0 = i d_1 (.) dtau^1 + i d_2 (.) dtau^2 has
field strength acting on grade m as 2 pi eps^{-m} c_m, independent of the
translation part (s_1, s_2), and the gauge circle acts trivially.  Whether
the field strength factors through the q-deformed vertical calculus is a
grade-wise proportionality question solved exactly in Q[sqrt(Delta)]: it
holds precisely at q = eps^2, with curvature constant -i eps c_1, while
relative potentials factor precisely at q = eps.
"""

import cmath

import numpy as np

from ncgauge import GOLDEN, GradedElement, GridSpec, ThetaContext
from ncgauge.gauge import (
    GaugePotential,
    adaptedness_test,
    apply_potential,
    curvature_coefficient,
    field_strength,
    field_strength_eigenvalue,
    relative_adaptedness_test,
    transformed_potential,
)
from ncgauge.heisenberg import gaussian, sigma

ctx = ThetaContext(GOLDEN)
grid = GridSpec()
eps = ctx.eps

print("== field strength on the grades ==")
print(" m    measured/2pi        exact eps^{-m} c_m")
for m in (-2, -1, 1, 2):
    f = GradedElement.from_heis(gaussian(ctx, grid, m, width=1.2))
    F = field_strength(GaugePotential(), f)
    lam = f.parts[m].inner(F.parts[0].parts[m]) / f.parts[m].inner(f.parts[m])
    print(f"{m:>2}   {lam.real/(2*np.pi):>14.8f}     {field_strength_eigenvalue(ctx, m)/(2*np.pi):>14.8f}")

print("\ncommutator form: F[nabla_0](p) = [p, C vol_B] with C = 2 pi eps c_1/(eps^2-1)")
C = curvature_coefficient(ctx)
p = GradedElement.from_heis(gaussian(ctx, grid, 1, momentum=0.2))
F = field_strength(GaugePotential(), p)
comm = (p - sigma(sigma(p))).scale(C)
print("residual:", (F.parts[0] - comm).norm() / F.norm())

print("\n== potential independence and gauge triviality ==")
F0 = field_strength(GaugePotential(), p)
print("F[nabla_0 + (3,-2)] vs F[nabla_0]:",
      (field_strength(GaugePotential(3, -2), p) - F0).norm() / F0.norm())
zeta = cmath.exp(2j * cmath.pi / 7)
w0 = apply_potential(GaugePotential(0.3, -0.8), p)
wz = transformed_potential(GaugePotential(0.3, -0.8), zeta, p)
print("zeta |> nabla vs nabla (zeta = e^{2 pi i/7}):", (w0 - wz).norm() / w0.norm())

print("\n== the q sweep: only q = eps^2 admits adapted potentials ==")
from fractions import Fraction
from ncgauge.quadfield import FieldElement

sweep = {
    "1": FieldElement.of(1, 0, 5), "eps^-1": eps**-1, "eps": eps,
    "eps^2": eps**2, "eps^3": eps**3,
    "2": FieldElement.of(2, 0, 5), "1/2": FieldElement.of(Fraction(1, 2), 0, 5),
}
print(f"{'q':>8}  adapted  relative  constant")
for name, q in sweep.items():
    a = adaptedness_test(ctx, q, M=4)
    r = relative_adaptedness_test(ctx, q, M=4)
    const = a["curvature_constant"]
    print(f"{name:>8}  {a['adapted']!s:>7}  {r['adapted']!s:>8}  {const if const else ''}")
print("\nexpected curvature constant -i eps c_1 =", complex(0, -ctx.eps_float * ctx.c(1)))
