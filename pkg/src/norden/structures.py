"""Almost contact structures with a compatible Norden-type metric.

A model bundles a Lie algebra of dimension ``2n + 1`` with a structure
endomorphism ``phi``, a distinguished vector ``xi``, its dual 1-form
``eta`` and a pseudo-Riemannian metric ``g``, subject to the axioms

    phi^2 = -Id + eta (x) xi,          eta(xi) = 1,
    g(phi x, phi y) = -g(x, y) + eta(x) eta(y),

with ``g`` of signature ``(n+1, n)``.  All tensors are left-invariant,
i.e. constant on the chosen basis.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, ValidationReport, VarianceMismatch
from .lie import LieAlgebra, validate as validate_algebra
from .tensors import Tensor, signature


@dataclass(frozen=True)
class AcnModel:
    """A left-invariant almost contact structure with metric on a Lie
    algebra basis.

    ``phi`` has variance ``"ud"`` (``phi[i, j]`` is the ``x_i``
    coefficient of ``phi(x_j)``), ``xi`` is ``"u"``, ``eta`` is ``"d"``
    and ``g`` is ``"dd"``.  Construction checks shapes and variances
    only; :func:`validate_structure` checks the axioms, so deliberately
    broken models can be built for testing.
    """

    algebra: LieAlgebra
    phi: Tensor
    xi: Tensor
    eta: Tensor
    g: Tensor
    name: str = ""

    def __post_init__(self):
        d = self.algebra.dim
        expected = {
            "phi": ("ud", (d, d)),
            "xi": ("u", (d,)),
            "eta": ("d", (d,)),
            "g": ("dd", (d, d)),
        }
        for attr, (var, shape) in expected.items():
            t: Tensor = getattr(self, attr)
            if t.variance != var:
                raise VarianceMismatch(f"{attr} needs variance {var!r}, got {t.variance!r}")
            if t.shape != shape:
                raise DimensionMismatch(f"{attr} has shape {t.shape}, expected {shape}")
        if d % 2 != 1 or d < 3:
            raise DimensionMismatch(f"dimension must be odd and >= 3, got {d}")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def n(self) -> int:
        """The half-dimension ``n`` with ``dim = 2n + 1``."""
        return self.algebra.dim // 2


def validate_structure(model: AcnModel) -> ValidationReport:
    """Check every structure axiom, itemizing violations with indices.

    Includes the underlying algebra's antisymmetry/Jacobi checks, the
    almost contact identities, compatibility of ``g`` with ``phi`` and
    ``eta``, and the signature requirement ``(n+1, n)``.
    """
    report = ValidationReport(subject=model.name or "model")
    report.extend(validate_algebra(model.algebra))

    d = model.dim
    n = model.n
    phi = model.phi.components
    xi = model.xi.components
    eta = model.eta.components
    g = model.g.components

    # phi^2 = -Id + eta (x) xi, column by column.
    phi2 = np.einsum("ia,aj->ij", phi, phi, optimize=True)
    for i in range(d):
        for j in range(d):
            expected = -(1 if i == j else 0) + xi[i] * eta[j]
            if phi2[i, j] != expected:
                report.add("phi_square", where=(i, j),
                           detail=f"(phi^2)[{i},{j}] = {phi2[i, j]}, expected {expected}")

    if np.einsum("i,i->", eta, xi) != 1:
        report.add("eta_xi", detail=f"eta(xi) = {np.einsum('i,i->', eta, xi)}, expected 1")

    phixi = np.einsum("ij,j->i", phi, xi)
    for i in range(d):
        if phixi[i] != 0:
            report.add("phi_xi", where=(i,), detail=f"(phi xi)[{i}] = {phixi[i]}")

    etaphi = np.einsum("i,ij->j", eta, phi)
    for j in range(d):
        if etaphi[j] != 0:
            report.add("eta_phi", where=(j,), detail=f"(eta o phi)[{j}] = {etaphi[j]}")

    for i in range(d):
        for j in range(i, d):
            if g[i, j] != g[j, i]:
                report.add("metric_symmetric", where=(i, j),
                           detail=f"g[{i},{j}] != g[{j},{i}]")

    # g(phi x, phi y) = -g(x, y) + eta(x) eta(y) on basis pairs.
    gphiphi = np.einsum("ai,ab,bj->ij", phi, g, phi, optimize=True)
    for i in range(d):
        for j in range(d):
            expected = -g[i, j] + eta[i] * eta[j]
            if gphiphi[i, j] != expected:
                report.add("norden_compatibility", where=(i, j),
                           detail=f"g(phi x{i}, phi x{j}) = {gphiphi[i, j]}, "
                                  f"expected {expected}")

    # phi is g-symmetric: g(phi x, y) = g(x, phi y).
    gphi = np.einsum("ai,aj->ij", phi, g)
    for i in range(d):
        for j in range(d):
            if gphi[i, j] != gphi[j, i]:
                report.add("phi_g_symmetric", where=(i, j),
                           detail=f"g(phi x{i}, x{j}) != g(x{i}, phi x{j})")

    # eta is the g-dual of xi.
    gxi = np.einsum("ij,j->i", g, xi)
    for i in range(d):
        if gxi[i] != eta[i]:
            report.add("eta_g_dual", where=(i,),
                       detail=f"g(x{i}, xi) = {gxi[i]}, eta(x{i}) = {eta[i]}")

    plus, minus, null = signature(model.g)
    if null != 0:
        report.add("metric_nondegenerate", detail=f"{null} null direction(s)")
    if (plus, minus) != (n + 1, n):
        report.add("metric_signature",
                   detail=f"signature ({plus},{minus},{null}), expected ({n + 1},{n},0)")
    return report


def associated_metric(model: AcnModel) -> Tensor:
    """The twin metric ``g~(x, y) = g(x, phi y) + eta(x) eta(y)``.

    On a valid model it is again symmetric of signature ``(n+1, n)``.
    """
    g = model.g.components
    phi = model.phi.components
    eta = model.eta.components
    comps = np.einsum("ia,aj->ij", g, phi, optimize=True) + np.multiply.outer(eta, eta)
    return Tensor(comps, "dd")
