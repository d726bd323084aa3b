"""The noncommutative torus and its canonical differential calculus.

Elements are finite sums of normal-ordered monomials U^m V^n subject to
V U = e^{2 pi i theta} U V.  The calculus has two central skew-adjoint
generators dtau^1, dtau^2 with dtau^1 ^ dtau^2 = vol_B = 1, and the
derivations delta_1, delta_2 read off the monomial degrees.
"""

import cmath
import math

import numpy as np

from ncgauge import GOLDEN, ThetaContext, TorusElement, d_B, d_B1, wedge
from ncgauge.torus import dtau1, dtau2, random_sparse, star

theta = ThetaContext(GOLDEN).theta_float
U, V = TorusElement.U(theta), TorusElement.V(theta)

print("theta =", theta)
print("V*U coefficient at (1,1):", (V * U).coefficient(1, 1))
print("e^{2 pi i theta}       :", cmath.exp(2j * math.pi * theta))

print("\nstar of UV (phase forced by unitarity):", star(U * V))
print("star(UV) * UV == 1:", (star(U * V) * (U * V)).close_to(TorusElement.one(theta)))

print("\nderivations on monomials:")
x = TorusElement.monomial(theta, 3, -2)
print("delta_1(U^3 V^-2) = 6 pi * same monomial :", x.delta(1).coefficient(3, -2) / (2 * math.pi))
print("delta_2(U^3 V^-2) = -4 pi * same monomial:", x.delta(2).coefficient(3, -2) / (2 * math.pi))

print("\nd^2 = 0 and the volume form:")
print("d_B1(d_B(U^2 V)) norm:", d_B1(d_B(TorusElement.monomial(theta, 2, 1))).norm())
print("dtau^1 ^ dtau^2 =", wedge(dtau1(theta), dtau2(theta)).b)

rng = np.random.default_rng(0xA17E)
worst = 0.0
for _ in range(200):
    a, b = random_sparse(theta, rng), random_sparse(theta, rng)
    worst = max(worst, (star(a * b) - star(b) * star(a)).norm()
                / max(a.norm() * b.norm(), 1.0))
print("\nantimultiplicativity of star over 200 random pairs, worst:", worst)
