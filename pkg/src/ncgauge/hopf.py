"""Lazy Sweedler/Hochschild cohomology for finite-dimensional Hopf *-algebras.

Everything is dense structure tensors over a fixed basis: a Hopf *-algebra
H, a right H-module *-algebra B, an H-equivariant B-*-bimodule M (playing
the role of the one-forms), optionally a derivation d_B : B -> M and a
degree-2 block (Omega^2, wedge, d_1) for curvature.

Convolution elements are (dim H, dim target) arrays of values on the H
basis.  Cocycle conditions, the Maurer-Cartan map, the conjugation action,
the curvature map, and the crossed-product realizations Op are all finite
tensor contractions; the Hochschild cocycle space is solved as a real
linear system.

Shipped instances are group algebras C[Z_n] acting on the function algebra
C(Z_n) by shift: the symmetric cycle calculus (e+, e- with e+* = e-, the
sign convention matching d(b*) = -d(b)*), the trivial bimodule M = B, and
a non-semisimple "jet" coefficient algebra C(Z_n) (x) C[x,y]/(x^2, y^2)
whose two-nilpotent-direction calculus makes the Maurer-Cartan and
curvature identities genuinely non-zero (over semisimple B every
derivation is inner and MC vanishes on all lazy Sweedler cocycles).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

TOL = 1e-10


# -- Hopf algebra -------------------------------------------------------------


@dataclass
class FiniteHopf:
    """Structure tensors of a finite-dimensional Hopf *-algebra.

    mul[i,j,k]: e_i e_j = sum_k mul[i,j,k] e_k
    comul[i,j,k]: Delta(e_i) = sum comul[i,j,k] e_j (x) e_k
    counit[i], antipode[i,j] (S(e_i) = sum_j A[i,j] e_j),
    star[i,j] ((sum c_i e_i)^* = sum conj(c_i) star[i,j] e_j),
    unit[i]: coordinates of 1_H.
    """

    mul: np.ndarray
    comul: np.ndarray
    counit: np.ndarray
    antipode: np.ndarray
    star: np.ndarray
    unit: np.ndarray
    labels: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.counit.shape[0]

    def product(self, x, y):
        return np.einsum("i,j,ijk->k", x, y, self.mul)

    def star_vec(self, x):
        return np.conj(x) @ self.star

    def comul_nz(self, i: int):
        """Cached nonzero coproduct triples (j, k, coeff) of e_i."""
        cache = getattr(self, "_comul_nz", None)
        if cache is None:
            cache = []
            for a in range(self.dim):
                js, ks = np.nonzero(self.comul[a])
                cache.append(
                    [(int(j), int(k), self.comul[a, j, k]) for j, k in zip(js, ks)]
                )
            object.__setattr__(self, "_comul_nz", cache)
        return cache[i]

    def axiom_report(self) -> dict:
        """Max violation of each Hopf *-algebra axiom; gate before use."""
        m, c, eps, S, st, u = (
            self.mul,
            self.comul,
            self.counit,
            self.antipode,
            self.star,
            self.unit,
        )
        d = self.dim
        eye = np.eye(d)
        rep = {}
        rep["assoc"] = np.abs(
            np.einsum("ijx,xkl->ijkl", m, m) - np.einsum("jkx,ixl->ijkl", m, m)
        ).max()
        rep["unit"] = max(
            np.abs(np.einsum("i,ijk->jk", u, m) - eye).max(),
            np.abs(np.einsum("j,ijk->ik", u, m) - eye).max(),
        )
        rep["coassoc"] = np.abs(
            np.einsum("iab,bcd->iacd", c, c) - np.einsum("ibd,bac->iacd", c, c)
        ).max()
        rep["counit"] = max(
            np.abs(np.einsum("ijk,j->ik", c, eps) - eye).max(),
            np.abs(np.einsum("ijk,k->ij", c, eps) - eye).max(),
        )
        rep["bialgebra"] = np.abs(
            np.einsum("ijx,xab->ijab", m, c)
            - np.einsum("iac,jbd,abu,cdv->ijuv", c, c, m, m)
        ).max()
        rep["counit_hom"] = np.abs(
            np.einsum("ijk,k->ij", m, eps) - np.outer(eps, eps)
        ).max()
        santi = np.einsum("ijk,jl,lkx->ix", c, S, m)
        rep["antipode_left"] = np.abs(santi - np.outer(eps, u)).max()
        santi_r = np.einsum("ijk,kl,jlx->ix", c, S, m)
        rep["antipode_right"] = np.abs(santi_r - np.outer(eps, u)).max()
        rep["star_involutive"] = np.abs(np.conj(st) @ st - eye).max()
        # (e_i e_j)^* = e_j^* e_i^* on the basis
        lhs = np.einsum("ijk,kl->ijl", np.conj(m), st)
        rhs = np.einsum("ja,ib,abl->ijl", st, st, m)
        rep["star_antimult"] = np.abs(lhs - rhs).max()
        # Delta(x^*) = (* x *) Delta(x)
        lhs = np.einsum("il,lab->iab", st, c)
        rhs = np.einsum("ijk,ja,kb->iab", np.conj(c), st, st)
        rep["star_coalgebra"] = np.abs(lhs - rhs).max()
        rep["s_star_involutive"] = np.abs(
            np.conj(st @ S) @ (st @ S) - eye
        ).max()
        rep["max"] = max(v for v in rep.values())
        return rep


def cyclic_group_hopf(n: int) -> FiniteHopf:
    """C[Z_n] with group-like basis g^0 .. g^{n-1}."""
    mul = np.zeros((n, n, n))
    comul = np.zeros((n, n, n))
    antipode = np.zeros((n, n))
    star = np.zeros((n, n))
    for i in range(n):
        comul[i, i, i] = 1.0
        antipode[i, (-i) % n] = 1.0
        star[i, (-i) % n] = 1.0
        for j in range(n):
            mul[i, j, (i + j) % n] = 1.0
    counit = np.ones(n)
    unit = np.zeros(n)
    unit[0] = 1.0
    return FiniteHopf(
        mul + 0j, comul + 0j, counit + 0j, antipode + 0j, star + 0j, unit + 0j,
        labels=[f"g^{i}" for i in range(n)],
    )


# -- module-algebra data -------------------------------------------------------


@dataclass
class ModuleAlgebra:
    """Right H-module *-algebra B with an equivariant B-*-bimodule M.

    Optional pieces: dB (derivation tensor B -> M), a degree-2 block
    (Omega^2 with its bimodule structure, the wedge M (x) M -> Omega^2 and
    the degree-1 derivation d1 : M -> Omega^2) used by the curvature map.
    """

    H: FiniteHopf
    mulB: np.ndarray        # (b, b, b)
    unitB: np.ndarray       # (b,)
    starB: np.ndarray       # (b, b), antilinear matrix
    actB: np.ndarray        # (b, h, b): b <| e_h
    leftM: np.ndarray       # (b, m, m)
    rightM: np.ndarray      # (m, b, m)
    starM: np.ndarray       # (m, m)
    actM: np.ndarray        # (m, h, m)
    dB: np.ndarray | None = None        # (b, m)
    leftO2: np.ndarray | None = None    # (b, o, o)
    rightO2: np.ndarray | None = None   # (o, b, o)
    starO2: np.ndarray | None = None    # (o, o)
    actO2: np.ndarray | None = None     # (o, h, o)
    wedge: np.ndarray | None = None     # (m, m, o)
    d1: np.ndarray | None = None        # (m, o)
    name: str = ""

    @property
    def dimB(self):
        return self.unitB.shape[0]

    @property
    def dimM(self):
        return self.starM.shape[0]

    @property
    def dimO2(self):
        return 0 if self.starO2 is None else self.starO2.shape[0]

    # elementwise helpers ----------------------------------------------------
    def mul_b(self, x, y):
        return np.einsum("i,j,ijk->k", x, y, self.mulB)

    def star_b(self, x):
        return np.conj(x) @ self.starB

    def act_b(self, x, h: int):
        return np.einsum("i,ik->k", x, self.actB[:, h, :])

    def left_m(self, b, m):
        return np.einsum("i,j,ijk->k", b, m, self.leftM)

    def right_m(self, m, b):
        return np.einsum("i,j,ijk->k", m, b, self.rightM)

    def star_m(self, m):
        return np.conj(m) @ self.starM

    def act_m(self, m, h: int):
        return np.einsum("i,ik->k", m, self.actM[:, h, :])

    def left_o(self, b, o):
        return np.einsum("i,j,ijk->k", b, o, self.leftO2)

    def right_o(self, o, b):
        return np.einsum("i,j,ijk->k", o, b, self.rightO2)

    def star_o(self, o):
        return np.conj(o) @ self.starO2

    def act_o(self, o, h: int):
        return np.einsum("i,ik->k", o, self.actO2[:, h, :])

    def wedge_mm(self, m1, m2):
        return np.einsum("i,j,ijk->k", m1, m2, self.wedge)

    def d_b(self, b):
        return b @ self.dB

    def d_m(self, m):
        return m @ self.d1

    # consistency ------------------------------------------------------------
    def data_report(self) -> dict:
        """Module-algebra axioms: action multiplicativity, equivariance of
        the bimodule and derivation, *-derivation sign convention."""
        rep = {}
        H = self.H
        dB_, dM_ = self.dimB, self.dimM
        # (b b') <| h = (b <| h_1)(b' <| h_2)
        lhs = np.einsum("ijx,xhk->ijhk", self.mulB, self.actB)
        rhs = np.einsum("hab,iau,jbv,uvk->ijhk", H.comul, self.actB, self.actB, self.mulB)
        rep["module_algebra"] = np.abs(lhs - rhs).max()
        # action is a representation on B and on M
        lhs = np.einsum("iau,ubv->iabv", self.actB, self.actB)
        rhs = np.einsum("abx,ixv->iabv", H.mul, self.actB)
        rep["actB_rep"] = np.abs(lhs - rhs).max()
        lhs = np.einsum("iau,ubv->iabv", self.actM, self.actM)
        rhs = np.einsum("abx,ixv->iabv", H.mul, self.actM)
        rep["actM_rep"] = np.abs(lhs - rhs).max()
        # equivariance: (b m b') <| h = (b<|h_1)(m<|h_2)(b'<|h_3)
        lhs = np.einsum("bmx,xhk->bmhk", self.leftM, self.actM)
        rhs = np.einsum("hax,bau,mxv,uvk->bmhk", H.comul, self.actB, self.actM, self.leftM)
        rep["equivariance_left"] = np.abs(lhs - rhs).max()
        # bimodule star: (b m)^* = m^* b^*
        lhs = np.einsum("bmx,xk->bmk", self.leftM, self.starM)
        rhs = np.einsum("mu,bv,uvk->bmk", np.conj(self.starM), np.conj(self.starB), self.rightM)
        rep["star_bimodule"] = np.abs(np.conj(lhs) - np.conj(rhs)).max()
        if self.dB is not None:
            # derivation: d(bb') = d(b) b' + b d(b')
            lhs = np.einsum("ijx,xm->ijm", self.mulB, self.dB)
            rhs = np.einsum("im,mjx->ijx", self.dB, self.rightM) + np.einsum(
                "jm,imx->ijx", self.dB, self.leftM
            )
            rep["derivation"] = np.abs(lhs - rhs).max()
            # sign convention in force here: d(b^*) = -d(b)^*
            lhs = np.einsum("ij,jm->im", self.starB, np.conj(self.dB))
            rhs = -np.einsum("im,mk->ik", np.conj(self.dB), self.starM)
            rep["star_derivation"] = np.abs(np.conj(lhs) - np.conj(rhs)).max()
            # H-equivariance of dB
            lhs = np.einsum("ihk,km->ihm", self.actB, self.dB)
            rhs = np.einsum("im,mhk->ihk", self.dB, self.actM)
            rep["dB_equivariant"] = np.abs(lhs - rhs).max()
        if self.wedge is not None:
            # d^2 = 0 and graded Leibniz d1(b m) = dB(b) ^ m + b d1(m)
            rep["d_squared"] = np.abs(
                np.einsum("bm,mo->bo", self.dB, self.d1)
            ).max()
            lhs = np.einsum("bmx,xo->bmo", self.leftM, self.d1)
            rhs = np.einsum("bu,umo->bmo", self.dB, self.wedge) + np.einsum(
                "mo,boy->bmy", self.d1, self.leftO2
            )
            rep["graded_leibniz_left"] = np.abs(lhs - rhs).max()
            # d1(m b) = d1(m) b - m ^ dB(b)
            lhs = np.einsum("mbx,xo->mbo", self.rightM, self.d1)
            rhs = np.einsum("mo,oby->mby", self.d1, self.rightO2) - np.einsum(
                "bu,muo->mbo", self.dB, self.wedge
            )
            rep["graded_leibniz_right"] = np.abs(lhs - rhs).max()
        rep["max"] = max(v for v in rep.values())
        return rep


# -- convolution elements --------------------------------------------------------


class TargetMismatch(ValueError):
    """Convolution between incompatible targets."""


class NotAdmissible(ValueError):
    """Coboundary input failed its centrality/unitarity validation."""


@dataclass
class ConvolutionElement:
    """Linear map from the H basis into B, M, or Omega^2."""

    inst: ModuleAlgebra
    target: str  # "B" | "M" | "O2"
    values: np.ndarray  # (dim H, dim target)

    def copy(self):
        return ConvolutionElement(self.inst, self.target, self.values.copy())

    def __add__(self, other):
        if self.target != other.target:
            raise TargetMismatch(f"{self.target} + {other.target}")
        return ConvolutionElement(self.inst, self.target, self.values + other.values)

    def __sub__(self, other):
        if self.target != other.target:
            raise TargetMismatch(f"{self.target} - {other.target}")
        return ConvolutionElement(self.inst, self.target, self.values - other.values)

    def scale(self, c):
        return ConvolutionElement(self.inst, self.target, c * self.values)

    def norm(self):
        return float(np.max(np.abs(self.values))) if self.values.size else 0.0

    def value_at_unit(self):
        return np.einsum("i,ik->k", self.inst.H.unit, self.values)


def unit_cocycle(inst: ModuleAlgebra) -> ConvolutionElement:
    vals = np.outer(inst.H.counit, inst.unitB)
    return ConvolutionElement(inst, "B", vals)


def zero_cochain(inst: ModuleAlgebra, target: str = "M") -> ConvolutionElement:
    dim = {"B": inst.dimB, "M": inst.dimM, "O2": inst.dimO2}[target]
    return ConvolutionElement(inst, target, np.zeros((inst.H.dim, dim), dtype=complex))


def _combine(inst: ModuleAlgebra, ta: str, tb: str):
    """Pointwise product used inside the convolution, typed by targets."""
    if ta == "B" and tb == "B":
        return "B", inst.mul_b
    if ta == "B" and tb == "M":
        return "M", inst.left_m
    if ta == "M" and tb == "B":
        return "M", inst.right_m
    if ta == "B" and tb == "O2":
        return "O2", inst.left_o
    if ta == "O2" and tb == "B":
        return "O2", inst.right_o
    if ta == "M" and tb == "M":
        if inst.wedge is None:
            raise TargetMismatch("no wedge data for M * M")
        return "O2", inst.wedge_mm
    raise TargetMismatch(f"{ta} * {tb}")


def convolve(f: ConvolutionElement, g: ConvolutionElement) -> ConvolutionElement:
    """(f * g)(h) = f(h_1) g(h_2) with the typed pointwise product."""
    inst = f.inst
    target, op = _combine(inst, f.target, g.target)
    H = inst.H
    out = np.zeros((H.dim, {"B": inst.dimB, "M": inst.dimM, "O2": inst.dimO2}[target]),
                   dtype=complex)
    for i in range(H.dim):
        for j, k, c in H.comul_nz(i):
            out[i] += c * op(f.values[j], g.values[k])
    return ConvolutionElement(inst, target, out)


def conv_star(f: ConvolutionElement) -> ConvolutionElement:
    """f^*(h) = f(S(h)^*)^*."""
    inst = f.inst
    H = inst.H
    T = np.conj(H.antipode) @ H.star  # S(e_i)^* = sum_k T[i,k] e_k
    pre = np.einsum("ik,kv->iv", T, f.values)
    star_t = {"B": inst.star_b, "M": inst.star_m, "O2": inst.star_o}[f.target]
    out = np.array([star_t(row) for row in pre])
    return ConvolutionElement(inst, f.target, out)


def conv_inverse(sigma: ConvolutionElement) -> ConvolutionElement:
    """Inverse of a unitary convolution element: sigma^{-1} = sigma^*."""
    return conv_star(sigma)


# -- cocycle checks ----------------------------------------------------------------


def centrality_vs_B(f: ConvolutionElement) -> float:
    """Max violation of f(h_1)(b <| h_2) = (b <| h_1) f(h_2) over basis b."""
    inst = f.inst
    H = inst.H
    if f.target == "B":
        left = lambda v, b: inst.mul_b(v, b)
        right = lambda b, v: inst.mul_b(b, v)
    elif f.target == "M":
        left = lambda v, b: inst.right_m(v, b)
        right = lambda b, v: inst.left_m(b, v)
    elif f.target == "O2":
        left = lambda v, b: inst.right_o(v, b)
        right = lambda b, v: inst.left_o(b, v)
    else:
        raise TargetMismatch(f.target)
    worst = 0.0
    for i in range(H.dim):
        for b in np.eye(inst.dimB, dtype=complex):
            lhs = None
            rhs = None
            for j, k, c in H.comul_nz(i):
                term_l = c * left(f.values[j], inst.act_b(b, k))
                term_r = c * right(inst.act_b(b, j), f.values[k])
                lhs = term_l if lhs is None else lhs + term_l
                rhs = term_r if rhs is None else rhs + term_r
            worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst


def centrality_vs_M(f: ConvolutionElement) -> float:
    """For B-valued f: max violation of f(h_1)(m <| h_2) = (m <| h_1) f(h_2)."""
    inst = f.inst
    H = inst.H
    if f.target != "B":
        raise TargetMismatch("centrality against M applies to B-valued elements")
    worst = 0.0
    for i in range(H.dim):
        for m in np.eye(inst.dimM, dtype=complex):
            lhs = None
            rhs = None
            for j, k, c in H.comul_nz(i):
                term_l = c * inst.left_m(f.values[j], inst.act_m(m, k))
                term_r = c * inst.right_m(inst.act_m(m, j), f.values[k])
                lhs = term_l if lhs is None else lhs + term_l
                rhs = term_r if rhs is None else rhs + term_r
            worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst


def graded_centrality_vs_M(mu: ConvolutionElement) -> float:
    """For M-valued mu: graded commutator with rho_M of one-forms.

    [mu, rho_M(m)](h) = mu(h_1) ^ (m <| h_2) + (m <| h_1) ^ mu(h_2); its
    vanishing is the prolongability refinement of the cocycle space.
    """
    inst = mu.inst
    if inst.wedge is None:
        raise TargetMismatch("graded centrality needs wedge data")
    H = inst.H
    worst = 0.0
    for i in range(H.dim):
        for m in np.eye(inst.dimM, dtype=complex):
            acc = None
            for j, k, c in H.comul_nz(i):
                term = c * (
                    inst.wedge_mm(mu.values[j], inst.act_m(m, k))
                    + inst.wedge_mm(inst.act_m(m, j), mu.values[k])
                )
                acc = term if acc is None else acc + term
            worst = max(worst, float(np.max(np.abs(acc))))
    return worst


def check_sweedler_cocycle(sigma: ConvolutionElement) -> dict:
    """Report on the lazy Sweedler 1-cocycle conditions for B-valued sigma."""
    inst = sigma.inst
    H = inst.H
    if sigma.target != "B":
        raise TargetMismatch("Sweedler cocycles are B-valued")
    one = unit_cocycle(inst)
    rep = {}
    rep["unitary"] = max(
        (convolve(sigma, conv_star(sigma)) - one).norm(),
        (convolve(conv_star(sigma), sigma) - one).norm(),
    )
    rep["unit_value"] = float(
        np.max(np.abs(sigma.value_at_unit() - inst.unitB))
    )
    # sigma(h k) = (sigma(h) <| k_1) sigma(k_2) on all basis pairs
    worst = 0.0
    worst_at = None
    for i in range(H.dim):
        for j in range(H.dim):
            lhs = np.einsum("k,kv->v", H.mul[i, j], sigma.values)
            rhs = None
            for a, b, c in H.comul_nz(j):
                term = c * inst.mul_b(
                    inst.act_b(sigma.values[i], a), sigma.values[b]
                )
                rhs = term if rhs is None else rhs + term
            v = float(np.max(np.abs(lhs - rhs)))
            if v > worst:
                worst, worst_at = v, (i, j)
    rep["cocycle"] = worst
    rep["cocycle_worst_pair"] = worst_at
    rep["centrality_B"] = centrality_vs_B(sigma)
    rep["centrality_M"] = centrality_vs_M(sigma)
    rep["max"] = max(
        rep["unitary"], rep["unit_value"], rep["cocycle"],
        rep["centrality_B"], rep["centrality_M"],
    )
    rep["passes"] = rep["max"] <= TOL
    return rep


def check_hochschild_cocycle(mu: ConvolutionElement, prolongable: bool = False) -> dict:
    """Report on the lazy Hochschild 1-cocycle conditions for M-valued mu."""
    inst = mu.inst
    H = inst.H
    if mu.target not in ("M", "O2"):
        raise TargetMismatch("Hochschild cocycles are M- or Omega^2-valued")
    rep = {}
    rep["unit_value"] = float(np.max(np.abs(mu.value_at_unit())))
    rep["self_adjoint"] = (conv_star(mu) - mu).norm()
    rep["centrality"] = centrality_vs_B(mu)
    # mu(hk) = mu(h) <| k + eps(h) mu(k)
    act = inst.act_m if mu.target == "M" else inst.act_o
    worst = 0.0
    worst_at = None
    for i in range(H.dim):
        for j in range(H.dim):
            lhs = np.einsum("k,kv->v", H.mul[i, j], mu.values)
            rhs = act(mu.values[i], j) + H.counit[i] * mu.values[j]
            v = float(np.max(np.abs(lhs - rhs)))
            if v > worst:
                worst, worst_at = v, (i, j)
    rep["cocycle"] = worst
    rep["cocycle_worst_pair"] = worst_at
    vals = [rep["unit_value"], rep["self_adjoint"], rep["centrality"], rep["cocycle"]]
    if prolongable and mu.target == "M" and inst.wedge is not None:
        rep["graded_centrality"] = graded_centrality_vs_M(mu)
        vals.append(rep["graded_centrality"])
    rep["max"] = max(vals)
    rep["passes"] = rep["max"] <= TOL
    return rep


# -- coboundaries --------------------------------------------------------------


def _check_cent_element(inst: ModuleAlgebra, v) -> float:
    """Max violation of v in Cent_B(B + M): commutes with B and with M."""
    worst = 0.0
    for b in np.eye(inst.dimB, dtype=complex):
        worst = max(
            worst,
            float(np.max(np.abs(inst.mul_b(v, b) - inst.mul_b(b, v)))),
        )
    for m in np.eye(inst.dimM, dtype=complex):
        worst = max(
            worst,
            float(np.max(np.abs(inst.left_m(v, m) - inst.right_m(m, v)))),
        )
    return worst


def coboundary_S(inst: ModuleAlgebra, upsilon) -> ConvolutionElement:
    """D(upsilon)(h) = (upsilon <| h) upsilon^*, for unitary central upsilon."""
    upsilon = np.asarray(upsilon, dtype=complex)
    us = inst.star_b(upsilon)
    if float(np.max(np.abs(inst.mul_b(upsilon, us) - inst.unitB))) > TOL:
        raise NotAdmissible("upsilon is not unitary")
    if _check_cent_element(inst, upsilon) > TOL:
        raise NotAdmissible("upsilon is not in Cent_B(B + M)")
    vals = np.array(
        [inst.mul_b(inst.act_b(upsilon, h), us) for h in range(inst.H.dim)]
    )
    return ConvolutionElement(inst, "B", vals)


def coboundary_H(inst: ModuleAlgebra, m, target: str = "M") -> ConvolutionElement:
    """D(m)(h) = m <| h - eps(h) m, for self-adjoint central m."""
    m = np.asarray(m, dtype=complex)
    if target == "M":
        star_t, act, left, right = inst.star_m, inst.act_m, inst.left_m, inst.right_m
    else:
        star_t, act, left, right = inst.star_o, inst.act_o, inst.left_o, inst.right_o
    if float(np.max(np.abs(star_t(m) - m))) > TOL:
        raise NotAdmissible("m is not self-adjoint")
    for b in np.eye(inst.dimB, dtype=complex):
        if float(np.max(np.abs(left(b, m) - right(m, b)))) > TOL:
            raise NotAdmissible("m is not B-central")
    vals = np.array(
        [act(m, h) - inst.H.counit[h] * m for h in range(inst.H.dim)]
    )
    return ConvolutionElement(inst, target, vals)


# -- actions and Maurer-Cartan ---------------------------------------------------


def conj_action(sigma: ConvolutionElement, mu: ConvolutionElement) -> ConvolutionElement:
    """sigma |> mu = sigma * mu * sigma^{-1}."""
    return convolve(convolve(sigma, mu), conv_inverse(sigma))


def mc_cocycle(sigma: ConvolutionElement) -> ConvolutionElement:
    """MC[dB](sigma)(h) = -dB(sigma(h_1)) . sigma^*(h_2)."""
    inst = sigma.inst
    if inst.dB is None:
        raise TargetMismatch("instance carries no derivation dB")
    H = inst.H
    ss = conv_star(sigma)
    out = np.zeros((H.dim, inst.dimM), dtype=complex)
    for i in range(H.dim):
        for j, k, c in H.comul_nz(i):
            out[i] -= c * inst.right_m(inst.d_b(sigma.values[j]), ss.values[k])
    return ConvolutionElement(inst, "M", out)


def curvature_map(mu: ConvolutionElement) -> ConvolutionElement:
    """F[mu](h) = -i (dB(mu(h)) + mu(h_1) ^ mu(h_2)); Omega^2-valued."""
    inst = mu.inst
    if inst.wedge is None or inst.d1 is None:
        raise TargetMismatch("instance carries no degree-2 data")
    H = inst.H
    out = np.zeros((H.dim, inst.dimO2), dtype=complex)
    for i in range(H.dim):
        out[i] = inst.d_m(mu.values[i])
        for j, k, c in H.comul_nz(i):
            out[i] += c * inst.wedge_mm(mu.values[j], mu.values[k])
    return ConvolutionElement(inst, "O2", -1j * out)


def graded_bracket(mu: ConvolutionElement, nu: ConvolutionElement) -> ConvolutionElement:
    """[mu, nu](h) = mu(h_1) ^ nu(h_2) + nu(h_1) ^ mu(h_2)."""
    return convolve(mu, nu) + convolve(nu, mu)


# -- crossed product realization ---------------------------------------------------


class CrossedProduct:
    """Dense realization of B x| H on the basis e_i (x) beta_b.

    Elements are flattened vectors over (dim H) x (dim B); one-forms live
    over (dim H) x (dim M) and two-forms over (dim H) x (dim O2).  All
    products and stars are precomputed dense tensors so entrywise checks
    over the full basis are plain tensor algebra.
    """

    def __init__(self, inst: ModuleAlgebra):
        self.inst = inst
        self.H = inst.H
        H, dH = inst.H, inst.H.dim
        # (h x b)(h' x b') = h h'_1 x (b <| h'_2) b'
        self.T = np.einsum(
            "pjk,ijt,bku,uce->ibpcte", H.comul, H.mul, inst.actB, inst.mulB,
            optimize=True,
        ).reshape(dH * inst.dimB, dH * inst.dimB, dH * inst.dimB)
        # (h x b) . (h' x m) and (h x m) . (h' x b)
        self.TL = np.einsum(
            "pjk,ijt,bku,ume->ibpmte", H.comul, H.mul, inst.actB, inst.leftM,
            optimize=True,
        ).reshape(dH * inst.dimB, dH * inst.dimM, dH * inst.dimM)
        self.TR = np.einsum(
            "pjk,ijt,mku,ube->impbte", H.comul, H.mul, inst.actM, inst.rightM,
            optimize=True,
        ).reshape(dH * inst.dimM, dH * inst.dimB, dH * inst.dimM)
        # star matrices (antilinear): star(u) = conj(u) @ S
        self.SP = np.einsum(
            "ijk,jt,ks,bu,use->ibte",
            np.conj(H.comul), H.star, H.star, inst.starB, inst.actB,
            optimize=True,
        ).reshape(dH * inst.dimB, dH * inst.dimB)
        self.SW = np.einsum(
            "ijk,jt,ks,mu,use->imte",
            np.conj(H.comul), H.star, H.star, inst.starM, inst.actM,
            optimize=True,
        ).reshape(dH * inst.dimM, dH * inst.dimM)
        if inst.wedge is not None:
            self.WT = np.einsum(
                "pjk,ijt,mku,une->impnte",
                H.comul, H.mul, inst.actM, inst.wedge, optimize=True,
            ).reshape(dH * inst.dimM, dH * inst.dimM, dH * inst.dimO2)
        else:
            self.WT = None

    @property
    def dim(self):
        return self.H.dim * self.inst.dimB

    def mul(self, u, v):
        return np.einsum("x,y,xyz->z", u, v, self.T, optimize=True)

    def star(self, u):
        return np.conj(u) @ self.SP

    def unit(self):
        return np.outer(self.H.unit, self.inst.unitB).ravel()

    def embed_B(self, b):
        return np.outer(self.H.unit, b).ravel()


def op_gauge_matrix(sigma: ConvolutionElement) -> np.ndarray:
    """Matrix of Op(sigma)(h (x) b) = h_1 sigma(h_2) b on flattened vectors."""
    inst = sigma.inst
    H = inst.H
    return np.einsum(
        "ijk,kv,vbe->ibje", H.comul, sigma.values, inst.mulB, optimize=True
    ).reshape(H.dim * inst.dimB, H.dim * inst.dimB)


def op_gauge_forms_matrix(sigma: ConvolutionElement) -> np.ndarray:
    """Induced map on Omega^1 x| H: h (x) m -> h_1 (x) sigma(h_2) m."""
    inst = sigma.inst
    H = inst.H
    return np.einsum(
        "ijk,kv,vme->imje", H.comul, sigma.values, inst.leftM, optimize=True
    ).reshape(H.dim * inst.dimM, H.dim * inst.dimM)


def op_gauge_two_forms_matrix(sigma: ConvolutionElement) -> np.ndarray:
    inst = sigma.inst
    H = inst.H
    return np.einsum(
        "ijk,kv,voe->ioje", H.comul, sigma.values, inst.leftO2, optimize=True
    ).reshape(H.dim * inst.dimO2, H.dim * inst.dimO2)


def op_potential_matrix(mu: ConvolutionElement) -> np.ndarray:
    """Matrix of Op(mu)(h (x) b) = h . dB(b) + h_1 . mu(h_2) . b."""
    inst = mu.inst
    H = inst.H
    if inst.dB is None:
        raise TargetMismatch("instance carries no derivation dB")
    term1 = np.einsum("ij,bm->ibjm", np.eye(H.dim), inst.dB)
    term2 = np.einsum(
        "ijk,km,mbe->ibje", H.comul, mu.values, inst.rightM, optimize=True
    )
    return (term1 + term2).reshape(H.dim * inst.dimB, H.dim * inst.dimM)


def op_gauge(sigma: ConvolutionElement):
    """Op(sigma) as a callable on (dimH, dimB) arrays."""
    mat = op_gauge_matrix(sigma)
    inst = sigma.inst

    def apply(u):
        return (u.ravel() @ mat).reshape(inst.H.dim, inst.dimB)

    return apply


def op_potential(mu: ConvolutionElement):
    """Op(mu) as a callable from (dimH, dimB) into (dimH, dimM) arrays."""
    mat = op_potential_matrix(mu)
    inst = mu.inst

    def apply(u):
        return (u.ravel() @ mat).reshape(inst.H.dim, inst.dimM)

    return apply


def op_report(inst: ModuleAlgebra, sigma: ConvolutionElement,
              mu: ConvolutionElement | None = None,
              upsilon=None) -> dict:
    """Entrywise checks of the crossed-product realizations.

    Verifies that Op(sigma) is a unital *-automorphism of B x| H fixing B
    and acting multiplicatively on the reconstructed one- and two-forms,
    that Op(mu) is an H-covariant *-derivation restricting to d_B, and the
    gauge compatibility Op(sigma) |> Op(mu) = Op(sigma |> mu + MC(sigma)).
    When upsilon is given, also checks Op(D upsilon) = Ad_upsilon.
    """
    cp = CrossedProduct(inst)
    dP = cp.dim
    F = op_gauge_matrix(sigma)
    rep = {}
    # homomorphism: T . F = (F (x) F) . T entrywise
    lhs = np.einsum("xyz,zw->xyw", cp.T, F, optimize=True)
    rhs = np.einsum("xa,yb,abw->xyw", F, F, cp.T, optimize=True)
    rep["op_sigma_hom"] = float(np.abs(lhs - rhs).max())
    # star-automorphism: SP . F = conj(F) . SP
    rep["op_sigma_star"] = float(np.abs(cp.SP @ F - np.conj(F) @ cp.SP).max())
    # fixes B and the unit
    EB = np.einsum("i,bc->bic", inst.H.unit, np.eye(inst.dimB)).reshape(
        inst.dimB, dP
    )
    rep["op_sigma_fixes_B"] = float(np.abs(EB @ F - EB).max())
    rep["op_sigma_unit"] = float(np.abs(cp.unit() @ F - cp.unit()).max())
    # induced bijection on one-forms intertwines the bimodule structure
    Fm = op_gauge_forms_matrix(sigma)
    lhs = np.einsum("xyz,zw->xyw", cp.TL, Fm, optimize=True)
    rhs = np.einsum("xa,yb,abw->xyw", F, Fm, cp.TL, optimize=True)
    rep["op_sigma_forms_left"] = float(np.abs(lhs - rhs).max())
    lhs = np.einsum("xyz,zw->xyw", cp.TR, Fm, optimize=True)
    rhs = np.einsum("xa,yb,abw->xyw", Fm, F, cp.TR, optimize=True)
    rep["op_sigma_forms_right"] = float(np.abs(lhs - rhs).max())
    if cp.WT is not None:
        F2 = op_gauge_two_forms_matrix(sigma)
        lhs = np.einsum("xyz,zw->xyw", cp.WT, F2, optimize=True)
        rhs = np.einsum("xa,yb,abw->xyw", Fm, Fm, cp.WT, optimize=True)
        rep["op_sigma_prolongable"] = float(np.abs(lhs - rhs).max())
    if upsilon is not None:
        FD = op_gauge_matrix(coboundary_S(inst, upsilon))
        eu = cp.embed_B(np.asarray(upsilon, dtype=complex))
        eus = cp.embed_B(inst.star_b(np.asarray(upsilon, dtype=complex)))
        ad = np.array([cp.mul(cp.mul(eu, e), eus) for e in np.eye(dP)])
        rep["op_coboundary_is_ad"] = float(np.abs(FD - ad).max())
    if mu is not None:
        D = op_potential_matrix(mu)
        # derivation: D(xy) = D(x).y + x.D(y)
        lhs = np.einsum("xyz,zw->xyw", cp.T, D, optimize=True)
        rhs = np.einsum("xa,ayw->xyw", D, cp.TR, optimize=True) + np.einsum(
            "yb,xbw->xyw", D, cp.TL, optimize=True
        )
        rep["op_mu_derivation"] = float(np.abs(lhs - rhs).max())
        # star-derivation: D(x^*) = -(D x)^*
        rep["op_mu_star"] = float(np.abs(cp.SP @ D + np.conj(D) @ cp.SW).max())
        # restriction to B is d_B
        dB_flat = np.einsum("i,bm->bim", inst.H.unit, inst.dB).reshape(
            inst.dimB, inst.H.dim * inst.dimM
        )
        rep["op_mu_restricts"] = float(np.abs(EB @ D - dB_flat).max())
        # gauge compatibility
        Finv = op_gauge_matrix(conv_inverse(sigma))
        target = op_potential_matrix(conj_action(sigma, mu) + mc_cocycle(sigma))
        rep["op_gauge_compat"] = float(np.abs(Finv @ D @ Fm - target).max())
    rep["max"] = max(v for v in rep.values())
    return rep


# -- linear-algebra solvers -----------------------------------------------------


def _real_nullspace(A: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Orthonormal basis of the nullspace of a real matrix via SVD."""
    if A.shape[0] == 0:
        return np.eye(A.shape[1])
    if A.shape[0] < A.shape[1]:
        A = np.vstack([A, np.zeros((A.shape[1] - A.shape[0], A.shape[1]))])
    _, s, vh = np.linalg.svd(A, full_matrices=False)
    rank = int(np.sum(s > tol * max(A.shape)))
    return vh[rank:].T


def _central_sa_basis(inst: ModuleAlgebra) -> np.ndarray:
    """Real basis of Z_B(M)_sa as real vectors (re, im stacked)."""
    dM, dB = inst.dimM, inst.dimB
    # build real system: unknown x = (re m, im m)
    blocks = []
    for b in np.eye(dB, dtype=complex):
        L = (
            np.einsum("j,jmk->km", b, inst.leftM)
            - np.einsum("mjk,j->km", inst.rightM, b)
        )
        blocks.append(np.block([[np.real(L), -np.imag(L)], [np.imag(L), np.real(L)]]))
    A = np.vstack(blocks) if blocks else np.zeros((0, 2 * dM))
    # self-adjointness: conj(m) @ starM - m = 0 -> real-linear
    S = inst.starM
    sa_top = np.hstack([np.real(S).T - np.eye(dM), np.imag(S).T])
    sa_bot = np.hstack([np.imag(S).T, -np.real(S).T - np.eye(dM)])
    A = np.vstack([A, sa_top, sa_bot])
    return _real_nullspace(A)


def _complex_nullspace(A: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    if A.shape[0] == 0:
        return np.eye(A.shape[1], dtype=complex)
    if A.shape[0] < A.shape[1]:
        A = np.vstack(
            [A, np.zeros((A.shape[1] - A.shape[0], A.shape[1]), dtype=A.dtype)]
        )
    _, s, vh = np.linalg.svd(A, full_matrices=False)
    rank = int(np.sum(s > tol * max(A.shape)))
    return np.conj(vh[rank:]).T


def _conv_star_flat(inst: ModuleAlgebra, flat: np.ndarray) -> np.ndarray:
    """conv_star on a flattened (dH * dM,) coefficient vector."""
    H = inst.H
    vals = flat.reshape(H.dim, inst.dimM)
    pre = np.einsum("ik,kv->iv", np.conj(H.antipode) @ H.star, vals)
    return (np.conj(pre) @ inst.starM).ravel()


def solve_hochschild_space(inst: ModuleAlgebra, prolongable: bool = False) -> dict:
    """Bases and dimensions of ZH^1, BH^1, HH^1 as real vector spaces.

    The cocycle equation and convolution-centrality (plus graded centrality
    when prolongable=True) are complex-linear, so the solver first takes
    the complex nullspace and then cuts out the fixed points of the
    antilinear involution mu -> mu^* inside it; the complex solution space
    is star-invariant, which is asserted numerically.
    """
    H = inst.H
    dH, dM, dB = H.dim, inst.dimM, inst.dimB
    n_c = dH * dM  # complex unknowns

    rows = []
    # (a) cocycle: sum_k mul[i,j,k] mu_k - act_j(mu_i) - eps_i mu_j = 0
    for i in range(dH):
        for j in range(dH):
            L = np.zeros((dM, n_c), dtype=complex)
            for k in range(dH):
                if H.mul[i, j, k] != 0:
                    L[:, k * dM : (k + 1) * dM] += H.mul[i, j, k] * np.eye(dM)
            L[:, i * dM : (i + 1) * dM] -= inst.actM[:, j, :].T
            L[:, j * dM : (j + 1) * dM] -= H.counit[i] * np.eye(dM)
            rows.append(L)
    # (b) convolution centrality against rho_B
    for i in range(dH):
        for bidx in range(dB):
            b = np.zeros(dB, dtype=complex)
            b[bidx] = 1.0
            L = np.zeros((dM, n_c), dtype=complex)
            for j, k, c in H.comul_nz(i):
                bk = inst.act_b(b, k)
                bj = inst.act_b(b, j)
                L[:, j * dM : (j + 1) * dM] += c * np.einsum(
                    "mxk,x->km", inst.rightM, bk
                )
                L[:, k * dM : (k + 1) * dM] -= c * np.einsum(
                    "xmk,x->km", inst.leftM, bj
                )
            rows.append(L)
    # (c) graded centrality for the prolongable refinement
    if prolongable and inst.wedge is not None:
        dO = inst.dimO2
        for i in range(dH):
            for midx in range(dM):
                m = np.zeros(dM, dtype=complex)
                m[midx] = 1.0
                L = np.zeros((dO, n_c), dtype=complex)
                for j, k, c in H.comul_nz(i):
                    mk = inst.act_m(m, k)
                    mj = inst.act_m(m, j)
                    L[:, j * dM : (j + 1) * dM] += c * np.einsum(
                        "xyk,y->kx", inst.wedge, mk
                    )
                    L[:, k * dM : (k + 1) * dM] += c * np.einsum(
                        "yxk,y->kx", inst.wedge, mj
                    )
                rows.append(L)
    Q = _complex_nullspace(np.vstack(rows))
    k = Q.shape[1]
    if k == 0:
        null = np.zeros((2 * n_c, 0))
        z_dim = 0
    else:
        # antilinear star inside the solution space: star(Q c) = S conj(c)
        starred = np.column_stack([_conv_star_flat(inst, Q[:, j]) for j in range(k)])
        resid = np.abs(starred - Q @ (np.conj(Q).T @ starred)).max()
        if resid > 1e-8:
            raise RuntimeError(
                f"cocycle space is not star-invariant (residual {resid:.1e})"
            )
        S = np.conj(Q).T @ starred
        # fixed points c = S conj(c): real-linear in (re c, im c)
        fix = np.vstack(
            [
                np.hstack([np.real(S) - np.eye(k), np.imag(S)]),
                np.hstack([np.imag(S), -np.real(S) - np.eye(k)]),
            ]
        )
        coords = _real_nullspace(fix)
        cs = coords[:k] + 1j * coords[k:]
        sols = Q @ cs  # (n_c, z_dim) complex
        null = np.vstack([np.real(sols), np.imag(sols)])
        z_dim = null.shape[1]
    # coboundaries: D on Z_B(M)_sa
    cent = _central_sa_basis(inst)
    imgs = []
    for col in cent.T:
        m = col[:dM] + 1j * col[dM:]
        d = np.array([inst.act_m(m, h) - H.counit[h] * m for h in range(dH)])
        if prolongable and inst.wedge is not None:
            # restrict to coboundaries central in the graded algebra
            ok = True
            for mm in np.eye(dM, dtype=complex):
                v = np.abs(
                    inst.wedge_mm(m, mm) + inst.wedge_mm(mm, m)
                ).max()
                if v > 1e-9:
                    ok = False
                    break
            if not ok:
                continue
        imgs.append(np.concatenate([np.real(d).ravel(), np.imag(d).ravel()]))
    if imgs:
        B = np.vstack(imgs).T
        b_dim = int(np.linalg.matrix_rank(B, tol=1e-9))
    else:
        B = np.zeros((2 * n_c, 0))
        b_dim = 0

    def to_elements(real_cols):
        out = []
        for col in real_cols.T:
            vals = (col[:n_c] + 1j * col[n_c:]).reshape(dH, dM)
            out.append(ConvolutionElement(inst, "M", vals))
        return out

    # independent spanning set of the coboundary space
    if b_dim:
        qmat, rmat = np.linalg.qr(B)
        keep = np.abs(np.diag(rmat)) > 1e-9 * max(1.0, np.abs(rmat).max())
        b_basis = to_elements(qmat[:, : rmat.shape[0]][:, keep])
    else:
        b_basis = []
    return {
        "dim_Z": z_dim,
        "dim_B": b_dim,
        "dim_H": z_dim - b_dim,
        "basis": to_elements(null),
        "coboundary_basis": b_basis,
    }


def brute_force_group_z1(inst: ModuleAlgebra, n: int) -> dict:
    """Independent oracle: degree-1 group cohomology of Z_n in Z_B(M)_sa.

    Works directly from the group multiplication table and the action on
    the real subspace Z_B(M)_sa; never touches the Hopf tensors.
    """
    cent = _central_sa_basis(inst)  # real basis, columns
    dM = inst.dimM
    k = cent.shape[1]
    if k == 0:
        return {"dim_Z": 0, "dim_B": 0, "dim_H": 0}
    # action of the generator on the subspace, in subspace coordinates
    gen = inst.actM[:, 1 % inst.H.dim, :]

    def act_real(col):
        m = col[:dM] + 1j * col[dM:]
        out = m @ gen
        return np.concatenate([np.real(out), np.imag(out)])

    Amat = np.column_stack([act_real(c) for c in cent.T])
    # coordinates of the action in the cent basis (cent is orthonormal)
    R = cent.T @ Amat
    # cocycle: c(g^j) = sum_{i<j} R^i(v); constraint sum_{i<n} R^i v = 0
    total = np.zeros((k, k))
    P = np.eye(k)
    for _ in range(n):
        total += P
        P = R @ P
    z_dim = k - int(np.linalg.matrix_rank(total, tol=1e-9))
    b_dim = int(np.linalg.matrix_rank(R - np.eye(k), tol=1e-9))
    return {"dim_Z": z_dim, "dim_B": b_dim, "dim_H": z_dim - b_dim}


def group_cocycle(inst: ModuleAlgebra, w) -> ConvolutionElement:
    """sigma(g^j) = w (w <| g) ... (w <| g^{j-1}) for H = C[Z_n].

    A lazy Sweedler cocycle whenever w is unitary, centralizes B + M, and
    the telescoping norm condition holds (automatic consequence of the
    construction when the full product over the cycle is 1).
    """
    H = inst.H
    n = H.dim
    w = np.asarray(w, dtype=complex)
    vals = np.zeros((n, inst.dimB), dtype=complex)
    vals[0] = inst.unitB
    acc = inst.unitB
    for j in range(1, n):
        acc = inst.mul_b(acc, inst.act_b(w, j - 1))
        vals[j] = acc
    return ConvolutionElement(inst, "B", vals)


# -- shipped instances -----------------------------------------------------------


def _shift_action(n: int, blocks: int = 1) -> np.ndarray:
    """Right shift action of C[Z_n]: (delta_x <| g^j) = delta_{x-j}, block-wise."""
    act = np.zeros((n * blocks, n, n * blocks))
    for x in range(n):
        for j in range(n):
            for e in range(blocks):
                act[x * blocks + e, j, ((x - j) % n) * blocks + e] = 1.0
    return act + 0j


def function_instance(n: int, shift: bool = True) -> ModuleAlgebra:
    """B = C(Z_n) with the shift action; M = B as the trivial bimodule.

    dB = 0 (a finite-dimensional commutative algebra has no derivation
    into the trivial bimodule).  With shift=False the H-action on M is
    trivial while B keeps the shift.
    """
    H = cyclic_group_hopf(n)
    mul = np.zeros((n, n, n))
    for x in range(n):
        mul[x, x, x] = 1.0
    unit = np.ones(n)
    star = np.eye(n)
    act = _shift_action(n)
    actM = act if shift else np.stack([np.eye(n)] * n, axis=1) + 0j
    left = mul.copy()
    right = mul.copy()
    return ModuleAlgebra(
        H=H,
        mulB=mul + 0j,
        unitB=unit + 0j,
        starB=star + 0j,
        actB=act,
        leftM=left + 0j,
        rightM=right + 0j,
        starM=star + 0j,
        actM=actM,
        dB=np.zeros((n, n), dtype=complex),
        name=f"function(Z_{n}, shift={shift})",
    )


def cycle_instance(n: int) -> ModuleAlgebra:
    """B = C(Z_n), symmetric two-generator cycle calculus.

    Omega^1 = B e+ + B e- with e+- b = R^{+-1}(b) e+-, e+-^* = e-+,
    d(b) = (Rb - b) e+ + (R^{-1}b - b) e-; Omega^2 = B v with
    v = e+ ^ e- = -e- ^ e+ central and v^* = -v.  The one-generator
    calculus of the half-open cycle admits no *-structure for n >= 3.
    """
    H = cyclic_group_hopf(n)
    dB_, dM, dO = n, 2 * n, n
    mul = np.zeros((n, n, n))
    for x in range(n):
        mul[x, x, x] = 1.0
    unit = np.ones(n)
    starB = np.eye(n)
    actB = _shift_action(n)

    def idx(x, s):  # s = 0 for e+, 1 for e-
        return 2 * x + s

    leftM = np.zeros((n, dM, dM))
    rightM = np.zeros((dM, n, dM))
    starM = np.zeros((dM, dM))
    for x in range(n):
        for s, sh in ((0, 1), (1, -1)):
            leftM[x, idx(x, s), idx(x, s)] = 1.0
            # (delta_x e_s) . delta_y = delta_x R^{sh}(delta_y) e_s
            y = (x + sh) % n
            rightM[idx(x, s), y, idx(x, s)] = 1.0
        starM[idx(x, 0), idx((x + 1) % n, 1)] = 1.0
        starM[idx(x, 1), idx((x - 1) % n, 0)] = 1.0
    actM = np.zeros((dM, n, dM))
    for x in range(n):
        for s in (0, 1):
            for j in range(n):
                actM[idx(x, s), j, idx((x - j) % n, s)] = 1.0
    dB = np.zeros((n, dM))
    for y in range(n):
        dB[y, idx((y - 1) % n, 0)] += 1.0
        dB[y, idx(y, 0)] -= 1.0
        dB[y, idx((y + 1) % n, 1)] += 1.0
        dB[y, idx(y, 1)] -= 1.0
    # degree 2: B.v, central, v^* = -v
    leftO2 = np.zeros((n, dO, dO))
    rightO2 = np.zeros((dO, n, dO))
    for x in range(n):
        leftO2[x, x, x] = 1.0
        rightO2[x, x, x] = 1.0
    starO2 = -np.eye(dO)
    actO2 = _shift_action(n)
    wedge = np.zeros((dM, dM, dO))
    for x in range(n):
        for y in range(n):
            # (delta_x e+) ^ (delta_y e-) = delta_x R(delta_y) v
            if (y - 1) % n == x:
                wedge[idx(x, 0), idx(y, 1), x] += 1.0
            # (delta_x e-) ^ (delta_y e+) = -delta_x R^{-1}(delta_y) v
            if (y + 1) % n == x:
                wedge[idx(x, 1), idx(y, 0), x] -= 1.0
    d1 = np.zeros((dM, dO))
    for x in range(n):
        # d1(delta_x e+) = (delta_x - delta_{x+1}) v
        d1[idx(x, 0), x] += 1.0
        d1[idx(x, 0), (x + 1) % n] -= 1.0
        # d1(delta_x e-) = (delta_{x-1} - delta_x) v
        d1[idx(x, 1), (x - 1) % n] += 1.0
        d1[idx(x, 1), x] -= 1.0
    return ModuleAlgebra(
        H=H,
        mulB=mul + 0j,
        unitB=unit + 0j,
        starB=starB + 0j,
        actB=actB,
        leftM=leftM + 0j,
        rightM=rightM + 0j,
        starM=starM + 0j,
        actM=actM,
        dB=dB + 0j,
        leftO2=leftO2 + 0j,
        rightO2=rightO2 + 0j,
        starO2=starO2 + 0j,
        actO2=actO2,
        wedge=wedge + 0j,
        d1=d1 + 0j,
        name=f"cycle(Z_{n})",
    )


def jet_instance(n: int) -> ModuleAlgebra:
    """B = C(Z_n) (x) C[x,y]/(x^2, y^2): the two-nilpotent-direction calculus.

    Omega^1 = (B/xB) dx + (B/yB) dy with the quotient bimodule structure,
    d(f + gx + hy + k xy) = (g + ky) dx + (h + kx) dy, dx^* = -dx,
    dy^* = -dy; Omega^2 = (B/(x,y)B) dx^dy with dx^dy self-adjoint,
    d1((u + vy) dx + (w + zx) dy) = (z - v) dx^dy.  B is non-semisimple,
    which is what makes MC and the curvature coboundary non-trivial.
    """
    H = cyclic_group_hopf(n)
    # B basis: (z, e) with e in {1, x, y, xy}
    E1, EX, EY, EXY = 0, 1, 2, 3
    dB_ = 4 * n

    def bi(z, e):
        return 4 * z + e

    dtable = {  # D2 multiplication on {1,x,y,xy}
        (E1, E1): [(E1, 1.0)], (E1, EX): [(EX, 1.0)], (E1, EY): [(EY, 1.0)],
        (E1, EXY): [(EXY, 1.0)], (EX, E1): [(EX, 1.0)], (EY, E1): [(EY, 1.0)],
        (EXY, E1): [(EXY, 1.0)], (EX, EY): [(EXY, 1.0)], (EY, EX): [(EXY, 1.0)],
        (EX, EX): [], (EY, EY): [], (EX, EXY): [], (EXY, EX): [],
        (EY, EXY): [], (EXY, EY): [], (EXY, EXY): [],
    }
    mulB = np.zeros((dB_, dB_, dB_))
    for z in range(n):
        for (e, f), terms in dtable.items():
            for g, c in terms:
                mulB[bi(z, e), bi(z, f), bi(z, g)] += c
    unitB = np.zeros(dB_)
    for z in range(n):
        unitB[bi(z, E1)] = 1.0
    starB = np.eye(dB_)  # x, y self-adjoint
    actB = _shift_action(n, blocks=4)

    # Omega^1: (z, w, slot): slot dx with w in {1, y}; slot dy with w in {1, x}
    dM = 4 * n

    def mi(z, w, slot):  # slot 0 = dx, 1 = dy; w in {0,1}: 1 or the nilpotent
        return 4 * z + 2 * slot + w

    # quotient action of B on Omega^1 (left = right, central)
    leftM = np.zeros((dB_, dM, dM))
    for z in range(n):
        # dx slot: coefficients in C[y]/(y^2): b = f + gx + hy + kxy acts as f + hy
        # (f + hy)(u + vy) = fu + (fv + hu) y
        for (e, w_in, w_out, c) in [
            (E1, 0, 0, 1.0), (E1, 1, 1, 1.0), (EY, 0, 1, 1.0),
        ]:
            leftM[bi(z, e), mi(z, w_in, 0), mi(z, w_out, 0)] += c
        # dy slot: coefficients in C[x]/(x^2): acts as f + gx
        for (e, w_in, w_out, c) in [
            (E1, 0, 0, 1.0), (E1, 1, 1, 1.0), (EX, 0, 1, 1.0),
        ]:
            leftM[bi(z, e), mi(z, w_in, 1), mi(z, w_out, 1)] += c
    rightM = np.einsum("bmk->mbk", leftM).copy()
    starM = -np.eye(dM)
    actM = _shift_action(n, blocks=4)
    dB = np.zeros((dB_, dM))
    for z in range(n):
        dB[bi(z, EX), mi(z, 0, 0)] = 1.0   # d(x) = dx
        dB[bi(z, EY), mi(z, 0, 1)] = 1.0   # d(y) = dy
        dB[bi(z, EXY), mi(z, 1, 0)] = 1.0  # d(xy) = y dx + x dy
        dB[bi(z, EXY), mi(z, 1, 1)] = 1.0

    # Omega^2 = C(Z_n) dx^dy
    dO = n
    leftO2 = np.zeros((dB_, dO, dO))
    rightO2 = np.zeros((dO, dB_, dO))
    for z in range(n):
        leftO2[bi(z, E1), z, z] = 1.0
        rightO2[z, bi(z, E1), z] = 1.0
    starO2 = np.eye(dO)
    actO2 = _shift_action(n)
    wedge = np.zeros((dM, dM, dO))
    for z in range(n):
        # only the scalar parts survive the quotient
        wedge[mi(z, 0, 0), mi(z, 0, 1), z] += 1.0   # dx ^ dy = +v
        wedge[mi(z, 0, 1), mi(z, 0, 0), z] -= 1.0   # dy ^ dx = -v
    d1 = np.zeros((dM, dO))
    for z in range(n):
        d1[mi(z, 1, 0), z] -= 1.0  # d1(y dx) = -v
        d1[mi(z, 1, 1), z] += 1.0  # d1(x dy) = +v
    return ModuleAlgebra(
        H=H,
        mulB=mulB + 0j,
        unitB=unitB + 0j,
        starB=starB + 0j,
        actB=actB,
        leftM=leftM + 0j,
        rightM=rightM + 0j,
        starM=starM + 0j,
        actM=actM,
        dB=dB + 0j,
        leftO2=leftO2 + 0j,
        rightO2=rightO2 + 0j,
        starO2=starO2 + 0j,
        actO2=actO2,
        wedge=wedge + 0j,
        d1=d1 + 0j,
        name=f"jet(Z_{n})",
    )


def jet_unitary(inst: ModuleAlgebra, f=None, a=None, b=None, c=None, rng=None):
    """Unitary f (1 + i a x + i b y + (i c - a b) xy) of the jet algebra."""
    n = inst.H.dim
    if rng is not None:
        f = np.exp(2j * np.pi * rng.random(n))
        a = rng.standard_normal(n)
        b = rng.standard_normal(n)
        c = rng.standard_normal(n)
    out = np.zeros(inst.dimB, dtype=complex)
    for z in range(n):
        out[4 * z + 0] = f[z]
        out[4 * z + 1] = 1j * a[z] * f[z]
        out[4 * z + 2] = 1j * b[z] * f[z]
        out[4 * z + 3] = (1j * c[z] - a[z] * b[z]) * f[z]
    return out


# -- JSON round trip --------------------------------------------------------------


def _arr_to_json(a):
    if a is None:
        return None
    return {"shape": list(a.shape), "re": np.real(a).ravel().tolist(),
            "im": np.imag(a).ravel().tolist()}


def _arr_from_json(d):
    if d is None:
        return None
    re = np.array(d["re"]).reshape(d["shape"])
    im = np.array(d["im"]).reshape(d["shape"])
    return re + 1j * im


def dump_instance(inst: ModuleAlgebra) -> str:
    H = inst.H
    return json.dumps(
        {
            "name": inst.name,
            "hopf": {
                "mul": _arr_to_json(H.mul),
                "comul": _arr_to_json(H.comul),
                "counit": _arr_to_json(H.counit),
                "antipode": _arr_to_json(H.antipode),
                "star": _arr_to_json(H.star),
                "unit": _arr_to_json(H.unit),
                "labels": H.labels,
            },
            "coefficients": {
                k: _arr_to_json(getattr(inst, k))
                for k in (
                    "mulB", "unitB", "starB", "actB", "leftM", "rightM",
                    "starM", "actM", "dB", "leftO2", "rightO2", "starO2",
                    "actO2", "wedge", "d1",
                )
            },
        }
    )


def load_instance(text: str) -> ModuleAlgebra:
    data = json.loads(text)
    h = data["hopf"]
    H = FiniteHopf(
        mul=_arr_from_json(h["mul"]),
        comul=_arr_from_json(h["comul"]),
        counit=_arr_from_json(h["counit"]),
        antipode=_arr_from_json(h["antipode"]),
        star=_arr_from_json(h["star"]),
        unit=_arr_from_json(h["unit"]),
        labels=h.get("labels", []),
    )
    co = {k: _arr_from_json(v) for k, v in data["coefficients"].items()}
    return ModuleAlgebra(H=H, name=data.get("name", ""), **co)
