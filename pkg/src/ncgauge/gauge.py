"""Gauge layer over the graded algebra: twisted horizontal calculus,
canonical potential, field strength, gauge action, q-deformed vertical
calculus, and the adaptedness tests that single out q = eps^2.

Horizontal forms carry the sigma-twist: the degree-1 right action is
(p . dtau^j) . q = p sigma(q) . dtau^j and degree 2 twists by sigma^2,
so commutators against scalar forms act grade-wise:

    [i s dtau^j, p] = i s (eps^{-m} - 1) p . dtau^j     on P_m,
    [c vol_B, p]    = c (eps^{-2m} - 1) p . vol_B       on P_m.

Adaptedness of a potential with respect to the q-deformed calculus on the
structure group reduces, for these free rank-one sectors, to grade-wise
proportionality between the field-strength eigenvalue and the vertical
coefficient 2 pi i [m]_q q^{-m}; that ratio is evaluated exactly in
Q[sqrt(Delta)] whenever q lives there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .heisenberg import GradedElement, mul_P, partial, sigma, star_P
from .quadfield import FieldElement, ThetaContext

TWO_PI = 2.0 * math.pi


# -- horizontal forms --------------------------------------------------------


class HorizontalForm:
    """Degree 0, 1 or 2 element of the twisted horizontal calculus.

    degree 0: a GradedElement; degree 1: (p1, p2) for p1.dtau^1 + p2.dtau^2;
    degree 2: p.vol_B.
    """

    __slots__ = ("degree", "parts")

    def __init__(self, degree: int, parts):
        if degree == 0 or degree == 2:
            parts = (parts,) if isinstance(parts, GradedElement) else tuple(parts)
            if len(parts) != 1:
                raise ValueError("degree 0/2 forms have one component")
        elif degree == 1:
            parts = tuple(parts)
            if len(parts) != 2:
                raise ValueError("degree 1 forms have two components")
        else:
            raise ValueError("degree must be 0, 1 or 2")
        self.degree = degree
        self.parts = parts

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        return HorizontalForm(
            self.degree, tuple(a + b for a, b in zip(self.parts, other.parts))
        )

    def __sub__(self, other):
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        return HorizontalForm(
            self.degree, tuple(a - b for a, b in zip(self.parts, other.parts))
        )

    def scale(self, c):
        return HorizontalForm(self.degree, tuple(p.scale(c) for p in self.parts))

    def norm(self):
        return math.sqrt(sum(p.norm() ** 2 for p in self.parts))

    def right_mul(self, q: GradedElement) -> "HorizontalForm":
        """Twisted right action: degree d picks up sigma^d(q)."""
        tw = q
        for _ in range(self.degree):
            tw = sigma(tw)
        return HorizontalForm(self.degree, tuple(mul_P(p, tw) for p in self.parts))

    def left_mul(self, q: GradedElement) -> "HorizontalForm":
        return HorizontalForm(self.degree, tuple(mul_P(q, p) for p in self.parts))

    def star(self) -> "HorizontalForm":
        """Graded star; dtau^j and vol_B are skew/self-adjoint resp."""
        if self.degree == 0:
            return HorizontalForm(0, star_P(self.parts[0]))
        if self.degree == 1:
            # (p.dtau^j)^* = -sigma(p^*).dtau^j
            return HorizontalForm(
                1, tuple(sigma(star_P(p)).scale(-1.0) for p in self.parts)
            )
        # (p.vol_B)^* = sigma^2(p^*).vol_B
        return HorizontalForm(2, sigma(sigma(star_P(self.parts[0]))))


def wedge_horizontal(w1: HorizontalForm, w2: HorizontalForm) -> HorizontalForm:
    """(p1 dt1 + p2 dt2) ^ (q1 dt1 + q2 dt2) = (p1 sigma(q2) - p2 sigma(q1)) vol."""
    if w1.degree != 1 or w2.degree != 1:
        raise ValueError("wedge is defined on degree-1 forms")
    p1, p2 = w1.parts
    q1, q2 = w2.parts
    return HorizontalForm(2, mul_P(p1, sigma(q2)) - mul_P(p2, sigma(q1)))


# -- potentials --------------------------------------------------------------


@dataclass(frozen=True)
class GaugePotential:
    """nabla_0 + ad_{i(s1 dtau^1 + s2 dtau^2)}; every potential has this form."""

    s1: float = 0.0
    s2: float = 0.0


def nabla0(p: GradedElement) -> HorizontalForm:
    """Canonical potential i d_1(p) dtau^1 + i d_2(p) dtau^2; restricts to d_B."""
    return HorizontalForm(
        1, (partial(1, p).scale(1j), partial(2, p).scale(1j))
    )


def _scalar_commutator_term(s: float, p: GradedElement) -> GradedElement:
    """i s (sigma(p) - p): the dtau-component of [i s dtau^j, p]."""
    return (sigma(p) - p).scale(1j * s)


def apply_potential(pot: GaugePotential, p: GradedElement) -> HorizontalForm:
    """nabla(p) = nabla_0(p) + [i(s1 dtau^1 + s2 dtau^2), p]."""
    base = nabla0(p)
    c1 = _scalar_commutator_term(pot.s1, p)
    c2 = _scalar_commutator_term(pot.s2, p)
    return HorizontalForm(1, (base.parts[0] + c1, base.parts[1] + c2))


def prolong(pot: GaugePotential, w: HorizontalForm) -> HorizontalForm:
    """Canonical prolongation on degree 1:

    nabla'(p1 dt1 + p2 dt2) = -i (d_2 p1 - d_1 p2) vol + eta ^ w + w ^ eta
    with eta = i(s1 dt1 + s2 dt2); the wedge terms use the sigma twist.
    """
    if w.degree != 1:
        raise ValueError("prolongation acts on degree-1 forms")
    p1, p2 = w.parts
    core = (partial(2, p1) - partial(1, p2)).scale(-1j)
    # eta ^ w + w ^ eta with scalar coefficients i s_j in grade 0
    s1, s2 = pot.s1, pot.s2
    extra = (
        (sigma(p2) - p2).scale(1j * s1) - (sigma(p1) - p1).scale(1j * s2)
    )
    return HorizontalForm(2, core + extra)


def field_strength(pot: GaugePotential, p: GradedElement) -> HorizontalForm:
    """F[nabla](p) = -i nabla'(nabla(p)); independent of (s1, s2)."""
    return prolong(pot, apply_potential(pot, p)).scale(-1j)


def volume_commutator(coef: complex, p: GradedElement) -> HorizontalForm:
    """[coef . vol_B, p] computed in the sigma^2-twisted bimodule."""
    ss = sigma(sigma(p))
    return HorizontalForm(2, (ss - p).scale(coef))


def field_strength_eigenvalue(ctx: ThetaContext, m: int) -> float:
    """Exact 2 pi eps^{-m} c_m, the F[nabla_0] eigenvalue on P_m."""
    return TWO_PI * float(ctx.eps_pow(-m) * ctx.c(m))


def curvature_coefficient(ctx: ThetaContext) -> float:
    """2 pi eps c_1/(eps^2 - 1): F[nabla_0](p) = [p, this . vol_B]."""
    eps = ctx.eps
    return TWO_PI * float(eps * ctx.c(1) / (eps * eps - 1))


# -- gauge group --------------------------------------------------------------


def gauge_transform(zeta: complex, p: GradedElement) -> GradedElement:
    """psi_G(zeta): grade-wise scaling by zeta^m; fixes grade 0."""
    if abs(abs(zeta) - 1.0) > 1e-12:
        raise ValueError("zeta must have modulus one")
    out = {}
    for m, part in p.parts.items():
        out[m] = part if m == 0 else part.scale(zeta**m)
    return GradedElement(out, p.ctx, p.grid)


def transformed_potential(
    pot: GaugePotential, zeta: complex, p: GradedElement
) -> HorizontalForm:
    """(psi_G(zeta) |> nabla)(p) = f_* nabla(f^{-1} p) componentwise."""
    pre = gauge_transform(zeta.conjugate(), p)
    w = apply_potential(pot, pre)
    return HorizontalForm(
        1, tuple(gauge_transform(zeta, comp) for comp in w.parts)
    )


# -- q-calculus ----------------------------------------------------------------


@dataclass(frozen=True)
class QCalculus:
    """1-dimensional bicovariant calculus on the structure group, deformation q.

    d_qt = (2 pi i)^{-1} varpi_q(z -> z) = -i generates the covariant
    1-forms; the structure group acts on them by q^m in degree m and the
    vertical derivative acts on grade m with left coefficient 2 pi i [m]_q.
    """

    q: float
    d_qt: complex = -1j  # the skew-adjoint bicoinvariant generator

    def __post_init__(self):
        if self.q == 0:
            raise ValueError("q must be non-zero")

    def number(self, n: int):
        return q_number(n, self.q)

    def group_weight(self, m: int) -> float:
        """Action of z -> z^m on the covariant 1-forms."""
        return self.q**m


def q_number(n: int, q):
    """[n]_q = (1 - q^n)/(1 - q) for q != 1, and n at q = 1.

    Works for float, Fraction, and FieldElement arguments alike.
    """
    if isinstance(q, FieldElement):
        if q == 1:
            return FieldElement.of(n, 0, q.delta)
        return (1 - q**n) / (1 - q)
    if q == 1:
        return type(q)(n) if isinstance(q, Fraction) else float(n)
    return (1 - q**n) / (1 - q)


def vertical_coefficients(q, grades) -> dict:
    """Per-grade coefficients of the q-vertical derivative.

    d_v(p) = 2 pi i [m]_q d_qt . p = 2 pi i [m]_q q^{-m} p . d_qt; returns
    {m: (left, right)} where left = 2 pi i [m]_q and right divides out d_qt
    on the other side.  The identity [m]_q q^{-m} = q^{-1} [m]_{q^{-1}}
    holds (not the variant with [m]_{-q}); the direct form is used.
    """
    out = {}
    for m in grades:
        left = q_number(m, q)
        out[m] = (left, left * q ** (-m))
    return out


def vertical_derivative(q, p: GradedElement) -> dict:
    """Left-form coefficients {m: 2 pi i [m]_q} on the grades of p."""
    return {
        m: 2j * math.pi * complex(float(q_number(m, q)))
        for m in p.parts
    }


# -- adaptedness ----------------------------------------------------------------


def _as_field(ctx: ThetaContext, q) -> FieldElement | None:
    if isinstance(q, FieldElement):
        return q
    if isinstance(q, (int, Fraction)):
        return FieldElement.of(q, 0, ctx.t.delta)
    return None


def adaptedness_test(ctx: ThetaContext, q, M: int = 4, tol: float = 1e-8) -> dict:
    """Does F[nabla] factor through the q-vertical derivative?

    For each grade m in [-M, M] \\ {0} the factorization requires a single
    constant c with  2 pi eps^{-m} c_m = 2 pi i [m]_q q^{-m} c;  the ratios
    eps^{-m} c_m / ([m]_q q^{-m}) must therefore agree across m.  Exact
    field arithmetic is used when q lies in Q[sqrt(Delta)]; floats fall
    back to relative comparison at tol.  The report carries the curvature
    constant c = F(d_qt)-coefficient, equal to -i eps c_1 at q = eps^2.
    """
    if M < 2:
        raise ValueError("M must be at least 2")
    qf = _as_field(ctx, q)
    exact = qf is not None
    ratios = {}
    for m in range(-M, M + 1):
        if m == 0:
            continue
        if exact:
            qn = q_number(m, qf)
            if qn == 0:
                return {"q": float(qf), "adapted": False, "curvature_constant": None,
                        "reason": f"[{m}]_q = 0", "exact": True}
            ratios[m] = (ctx.eps_pow(-m) * ctx.c(m)) / (qn * qf ** (-m))
        else:
            qn = q_number(m, float(q))
            if qn == 0:
                return {"q": float(q), "adapted": False, "curvature_constant": None,
                        "reason": f"[{m}]_q = 0", "exact": False}
            ratios[m] = float(ctx.eps_pow(-m) * ctx.c(m)) / (qn * float(q) ** (-m))
    vals = list(ratios.values())
    if exact:
        adapted = all(v == vals[0] for v in vals)
    else:
        base = vals[0]
        adapted = all(abs(v - base) <= tol * max(abs(base), 1.0) for v in vals)
    constant = None
    if adapted:
        # F(d_qt) = c vol_B with c = -i * ratio
        constant = complex(0.0, -float(vals[0]))
    return {
        "q": float(qf) if exact else float(q),
        "adapted": bool(adapted),
        "curvature_constant": constant,
        "ratios": {m: float(v) for m, v in ratios.items()},
        "exact": exact,
    }


def relative_adaptedness_test(ctx: ThetaContext, q, M: int = 4, tol: float = 1e-8) -> dict:
    """Does psi_at(s1,s2) factor through the q-vertical derivative?

    The relative potential acts on P_m as i(eps^{-m} - 1) per dtau^j, so
    factorization needs (eps^{-m} - 1)/([m]_q q^{-m}) constant across m;
    true precisely at q = eps, where the connection one-form coefficient is
    -(eps - 1)/(2 pi) per unit s_j.
    """
    if M < 2:
        raise ValueError("M must be at least 2")
    qf = _as_field(ctx, q)
    exact = qf is not None
    ratios = {}
    for m in range(-M, M + 1):
        if m == 0:
            continue
        if exact:
            qn = q_number(m, qf)
            if qn == 0:
                return {"q": float(qf), "adapted": False, "form_coefficient": None,
                        "reason": f"[{m}]_q = 0", "exact": True}
            ratios[m] = (ctx.eps_pow(-m) - 1) / (qn * qf ** (-m))
        else:
            qn = q_number(m, float(q))
            if qn == 0:
                return {"q": float(q), "adapted": False, "form_coefficient": None,
                        "reason": f"[{m}]_q = 0", "exact": False}
            ratios[m] = (float(ctx.eps_pow(-m)) - 1.0) / (qn * float(q) ** (-m))
    vals = list(ratios.values())
    if exact:
        adapted = all(v == vals[0] for v in vals)
    else:
        base = vals[0]
        adapted = all(abs(v - base) <= tol * max(abs(base), 1.0) for v in vals)
    coeff = float(vals[0]) / TWO_PI if adapted else None
    return {
        "q": float(qf) if exact else float(q),
        "adapted": bool(adapted),
        "form_coefficient": coeff,
        "ratios": {m: float(v) for m, v in ratios.items()},
        "exact": exact,
    }


def q_sweep(ctx: ThetaContext, qs, M: int = 4, tol: float = 1e-8) -> list:
    """Run both adaptedness tests over a list of q values."""
    out = []
    for q in qs:
        a = adaptedness_test(ctx, q, M, tol)
        r = relative_adaptedness_test(ctx, q, M, tol)
        out.append(
            {
                "q": a["q"],
                "adapted": a["adapted"],
                "relative_adapted": r["adapted"],
                "constant": a["curvature_constant"],
            }
        )
    return out
