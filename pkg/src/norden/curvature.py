"""Curvature of the Levi-Civita connection and section geometry.

For left-invariant data the curvature operator reduces to

    R(x_i, x_j) x_k = nabla_{x_i} nabla_{x_j} x_k
                    - nabla_{x_j} nabla_{x_i} x_k - nabla_{[x_i, x_j]} x_k,

a pure Gamma/structure-constant expression.  The covariant tensor is
``R(x, y, z, u) = g(R(x, y) z, u)``, and three scalar curvatures are
taken: ``tau`` (full g-trace), ``tau_star`` (one argument twisted by
``phi``) and ``tau_2star`` (two arguments twisted by ``phi``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .connection import Connection
from .errors import DegenerateSection, LinearlyDependent
from .structures import AcnModel
from .tensors import (
    Tensor,
    einsum_scalar,
    invert_symmetric,
    matrix_rank,
    vector_components,
)


@dataclass(frozen=True)
class CurvaturePack:
    """Curvature tensors and scalar curvatures of a model.

    ``r13[l, i, j, k]`` is the ``x_l`` component of ``R(x_i, x_j) x_k``;
    ``r04`` is the fully covariant tensor with slot order
    ``(x, y, z, u)``.
    """

    r13: Tensor
    r04: Tensor
    ricci: Tensor
    tau: Fraction
    tau_star: Fraction
    tau_2star: Fraction


def _scalars_from_r04(model: AcnModel, r04: Tensor):
    ginv = invert_symmetric(model.g).components
    phi = model.phi.components
    R = r04.components
    # ricci(y, z) = g^{is} R(x_i, y, z, x_s)
    ricci = np.einsum("is,iyzs->yz", ginv, R, optimize=True)
    tau = einsum_scalar("jk,jk->", ginv, ricci)
    # tau_star: twist the third argument by phi before tracing.
    tau_star = einsum_scalar("is,jk,mk,ijms->", ginv, ginv, phi, R)
    # tau_2star: twist the third and fourth arguments by phi.
    tau_2star = einsum_scalar("is,jk,mk,ns,ijmn->", ginv, ginv, phi, phi, R)
    return Tensor(ricci, "dd"), tau, tau_star, tau_2star


def riemann(model: AcnModel, conn: Connection) -> CurvaturePack:
    """Compute the full curvature package of a model."""
    gamma = conn.gamma.components
    c = model.algebra.c.components
    g = model.g.components
    r13 = (
        np.einsum("mjk,lim->lijk", gamma, gamma, optimize=True)
        - np.einsum("mik,ljm->lijk", gamma, gamma, optimize=True)
        - np.einsum("mij,lmk->lijk", c, gamma, optimize=True)
    )
    r04 = np.einsum("lijk,lu->ijku", r13, g, optimize=True)
    ricci, tau, tau_star, tau_2star = _scalars_from_r04(model, Tensor(r04, "dddd"))
    return CurvaturePack(
        r13=Tensor(r13, "uddd"),
        r04=Tensor(r04, "dddd"),
        ricci=ricci,
        tau=tau,
        tau_star=tau_star,
        tau_2star=tau_2star,
    )


def ricci_and_scalars(model: AcnModel, pack: CurvaturePack):
    """``(ricci, tau, tau_star, tau_2star)`` recomputed from ``pack.r04``."""
    return _scalars_from_r04(model, pack.r04)


def _pi1(g: np.ndarray, x: np.ndarray, y: np.ndarray) -> Fraction:
    """``pi1(x, y, y, x) = g(y, y) g(x, x) - g(x, y)^2``, the curvature
    denominator of the plane spanned by x, y."""
    gxx = einsum_scalar("i,ij,j->", x, g, x)
    gyy = einsum_scalar("i,ij,j->", y, g, y)
    gxy = einsum_scalar("i,ij,j->", x, g, y)
    return gyy * gxx - gxy * gxy


def sectional_curvature(model: AcnModel, pack: CurvaturePack, x, y) -> Fraction:
    """``k(x, y) = R(x, y, y, x) / pi1(x, y, y, x)``.

    Raises :class:`LinearlyDependent` when x, y do not span a plane and
    :class:`DegenerateSection` when the restricted metric is degenerate
    (``pi1 = 0``), in which case no sectional curvature exists.
    """
    d = model.dim
    xv = vector_components(x, d, name="x")
    yv = vector_components(y, d, name="y")
    if matrix_rank([xv, yv]) != 2:
        raise LinearlyDependent("section vectors do not span a 2-plane")
    denom = _pi1(model.g.components, xv, yv)
    if denom == 0:
        raise DegenerateSection("restricted metric is degenerate on this plane")
    num = einsum_scalar("ijku,i,j,k,u->", pack.r04.components, xv, yv, yv, xv)
    return num / denom


@dataclass(frozen=True)
class SectionType:
    """Classification flags of a 2-plane section.

    ``kind`` is ``"xi"`` when the plane contains the structure vector,
    else ``"phi_holomorphic"`` when it is phi-invariant, else
    ``"totally_real"`` when it is g-orthogonal to its phi-image, else
    ``"generic"``.
    """

    kind: str
    contains_xi: bool
    phi_invariant: bool
    totally_real: bool


def classify_section(model: AcnModel, x, y) -> SectionType:
    """Classify the plane spanned by x, y with exact rank arithmetic."""
    d = model.dim
    xv = vector_components(x, d, name="x")
    yv = vector_components(y, d, name="y")
    if matrix_rank([xv, yv]) != 2:
        raise LinearlyDependent("section vectors do not span a 2-plane")
    phi = model.phi.components
    g = model.g.components
    xiv = model.xi.components
    phix = np.einsum("ij,j->i", phi, xv)
    phiy = np.einsum("ij,j->i", phi, yv)
    contains_xi = matrix_rank([xv, yv, xiv]) == 2
    phi_invariant = (
        matrix_rank([xv, yv, phix]) == 2 and matrix_rank([xv, yv, phiy]) == 2
    )
    totally_real = all(
        einsum_scalar("i,ij,j->", pu, g, v) == 0
        for pu in (phix, phiy)
        for v in (xv, yv)
    )
    if contains_xi:
        kind = "xi"
    elif phi_invariant:
        kind = "phi_holomorphic"
    elif totally_real:
        kind = "totally_real"
    else:
        kind = "generic"
    return SectionType(
        kind=kind,
        contains_xi=contains_xi,
        phi_invariant=phi_invariant,
        totally_real=totally_real,
    )
