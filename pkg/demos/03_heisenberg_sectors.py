"""Heisenberg sectors: module actions, the graded product, twisted derivations.

Grade m != 0 lives on a grid over [-L, L] x Z_{|c_m|}.  The right/left
torus actions, the star (which flips the grade), the graded product, and
the twisted derivations d_1 = -i d/dx, d_2 = 2 pi eps^{-m} c_m x are all
realized numerically; the identities the construction must satisfy are
printed with their measured residuals.
"""

import math
import warnings

import numpy as np

from ncgauge import GOLDEN, GradedElement, GridSpec, ThetaContext, TorusElement
from ncgauge.heisenberg import (
    TruncationWarning,
    gaussian,
    mul_P,
    natural_width,
    partial,
    random_packet,
    right_act,
    sector_count,
    sigma,
    star_P,
)

warnings.simplefilter("ignore", TruncationWarning)
ctx = ThetaContext(GOLDEN)
grid = GridSpec()  # L=12, N=1024
rng = np.random.default_rng(0xA17E)

print("sector counts |c_m| per grade:", {m: sector_count(ctx, m) for m in (-3, -2, -1, 1, 2, 3)})
print("natural widths sqrt(eps^m/|c_m|):",
      {m: round(natural_width(ctx, m), 3) for m in (-2, -1, 1, 2)})

print("\n== module actions on P_1 (golden ratio: one sector) ==")
f = gaussian(ctx, grid, 1, width=1.0)
fv = right_act("V", f)
shift = np.argmax(np.abs(fv.samples[0])) - np.argmax(np.abs(f.samples[0]))
print(f"f.V translates by eps = {ctx.eps_float:.4f}  (measured {shift * grid.h:.4f})")
print("||f.U|| / ||f|| =", right_act("U", f).norm() / f.norm())

print("\n== the star flips the grade and rescales ==")
sf = star_P(GradedElement.from_heis(f)).parts[-1]
print("grade:", sf.m, " norm ratio vs eps^{-1/2}:",
      sf.norm() / f.norm(), "vs", ctx.eps_float ** -0.5)

print("\n== commutator eigenvalue (the constant curvature) ==")
print(" m    [d1,d2]/(-2 pi i)      eps^{-m} c_m      rel err")
for m in range(-3, 4):
    if m == 0:
        continue
    g = GradedElement.from_heis(gaussian(ctx, grid, m, width=1.2))
    comm = partial(1, partial(2, g)).parts[m] - partial(2, partial(1, g)).parts[m]
    measured = g.parts[m].inner(comm) / g.parts[m].inner(g.parts[m]) / (-2j * math.pi)
    exact = float(ctx.eps_pow(-m) * ctx.c(m))
    print(f"{m:>2}   {measured.real:>16.8f}   {exact:>16.8f}   {abs(measured - exact)/abs(exact):.1e}")

print("\n== the graded product and its laws ==")
p = GradedElement.from_heis(random_packet(ctx, grid, 1, rng))
q = GradedElement.from_heis(random_packet(ctx, grid, 1, rng))
h = GradedElement.from_heis(random_packet(ctx, grid, -1, rng))
b = GradedElement.from_torus(
    TorusElement(ctx.theta_float, {(1, 0): 0.7, (0, 1): -0.4j}), ctx, grid
)

def rel(x, y, *inp):
    sc = max([x.norm(), y.norm()] + [float(np.prod([z.norm() for z in inp]))])
    return (x - y).norm() / sc

pq = mul_P(p, q)
print("grades of P_1 * P_1:", pq.grades())
print("grades of P_1 * P_-1 (a torus element):", mul_P(p, h).grades())
print("associativity (p q) h vs p (q h):", rel(mul_P(pq, h), mul_P(p, mul_P(q, h)), p, q, h))
print("star reverses products, (pq)* = q* p*:",
      rel(star_P(pq), mul_P(star_P(q), star_P(p)), p, q))

print("\n== the twisted Leibniz rule d_j(pq) = d_j(p) sigma(q) + p d_j(q) ==")
for j in (1, 2):
    lhs = partial(j, mul_P(b, p))
    rhs = mul_P(partial(j, b), sigma(p)) + mul_P(b, partial(j, p))
    print(f"j={j} on (grade 0, grade 1):", rel(lhs, rhs, b, p))
