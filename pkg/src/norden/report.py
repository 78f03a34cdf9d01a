"""One-stop geometry report for a model.

:func:`run_report` runs the whole pipeline once — connection,
structure tensors, curvature, classification, identity verification —
and returns a :class:`GeometryReport` that serializes deterministically
to JSON or readable text.  Identical models produce identical output.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .classify import (
    IdentityVerdict,
    curvature_phi_kahler,
    forms_closed,
    is_f0,
    is_f11,
    is_isotropic_kahler,
    verify_identities,
)
from .connection import levi_civita
from .curvature import riemann
from .fundamental import divergence, psi4, s_trace, square_norms, structure_pack
from .structures import AcnModel, associated_metric
from .tensors import Tensor, einsum_scalar, format_scalar, signature

#: Class labels the classifier cannot decide; reported as "unknown".
UNDECIDED_CLASSES = tuple(f"f{i}" for i in range(1, 11) if i != 11)


@dataclass(frozen=True)
class GeometryReport:
    """Everything the pipeline computes for one model."""

    name: str
    dim: int
    n: int
    metric_signature: tuple[int, int, int]
    associated_signature: tuple[int, int, int]
    is_f0: bool
    is_f11: bool
    normal: bool
    omega_closed: bool
    omega_star_closed: bool
    isotropic_kahler: bool
    curvature_phi_kahler: bool
    identities: dict[str, IdentityVerdict]
    invariants: dict[str, Fraction]
    tensors: dict[str, Tensor]


def all_identities_ok(report: GeometryReport) -> bool:
    """True when no applicable identity failed."""
    return all(v.ok for v in report.identities.values())


def run_report(model: AcnModel) -> GeometryReport:
    """Compute the full report.  The model must already be valid (see
    :func:`norden.structures.validate_structure`); computations on an
    invalid model are not meaningful."""
    conn = levi_civita(model)
    pack = structure_pack(model, conn)
    curv = riemann(model, conn)
    identities = verify_identities(model, conn=conn, pack=pack, curv=curv)
    norms = square_norms(model, conn, pack=pack)
    oo = einsum_scalar("k,k->", pack.omega.components, pack.omega_vec.components)
    phi_omega = np.einsum(
        "ij,j->i", model.phi.components, pack.omega_vec.components
    )
    ricci_xi_xi = einsum_scalar(
        "ij,i,j->", curv.ricci.components, model.xi.components, model.xi.components
    )
    omega_closed, omega_star_closed = forms_closed(model, conn, pack=pack)
    invariants: dict[str, Fraction] = {
        "tau": curv.tau,
        "tau_star": curv.tau_star,
        "tau_double_star": curv.tau_2star,
        "nabla_phi_square_norm": norms.nabla_phi,
        "nabla_eta_square_norm": norms.nabla_eta,
        "nijenhuis_square_norm": norms.nijenhuis,
        "omega_square_norm": oo,
        "div_phi_omega_vec": divergence(model, conn, phi_omega),
        "ricci_xi_xi": ricci_xi_xi,
        "s_trace": s_trace(model, pack.s),
    }
    tensors: dict[str, Tensor] = {
        "gamma": conn.gamma,
        "fundamental": pack.f,
        "theta": pack.theta,
        "theta_star": pack.theta_star,
        "omega": pack.omega,
        "omega_star": pack.omega_star,
        "omega_vec": pack.omega_vec,
        "nabla_eta": pack.nabla_eta,
        "nijenhuis": pack.n,
        "s": pack.s,
        "psi4_s": psi4(pack.s, model.eta),
        "riemann": curv.r04,
        "ricci": curv.ricci,
        "associated_metric": associated_metric(model),
    }
    return GeometryReport(
        name=model.name,
        dim=model.dim,
        n=model.n,
        metric_signature=signature(model.g),
        associated_signature=signature(associated_metric(model)),
        is_f0=is_f0(model, pack.f),
        is_f11=is_f11(model, pack.f),
        normal=pack.n.is_zero(),
        omega_closed=omega_closed,
        omega_star_closed=omega_star_closed,
        isotropic_kahler=is_isotropic_kahler(model, conn, norms=norms),
        curvature_phi_kahler=curvature_phi_kahler(model, curv),
        identities=identities,
        invariants=invariants,
        tensors=tensors,
    )


def _witness_json(witness):
    if witness is None:
        return None
    out = []
    for item in witness:
        if isinstance(item, (bool, int, str)):
            out.append(item)
        else:
            out.append(format_scalar(item))
    return out


def _tensor_json(t: Tensor):
    def rec(arr):
        if not isinstance(arr, np.ndarray) or arr.ndim == 0:
            return format_scalar(arr if not isinstance(arr, np.ndarray) else arr.item())
        return [rec(arr[i]) for i in range(arr.shape[0])]

    return {"variance": t.variance, "components": rec(t.components)}


def report_to_json_dict(report: GeometryReport) -> dict:
    """A plain-data rendering of the report; all rationals become
    ``"p/q"`` strings."""
    classes = {"f0": report.is_f0, "f11": report.is_f11}
    classes.update({label: "unknown" for label in UNDECIDED_CLASSES})
    return {
        "name": report.name,
        "dim": report.dim,
        "n": report.n,
        "signature": {
            "metric": list(report.metric_signature),
            "associated_metric": list(report.associated_signature),
        },
        "classes": classes,
        "flags": {
            "normal": report.normal,
            "omega_closed": report.omega_closed,
            "omega_star_closed": report.omega_star_closed,
            "isotropic_kahler": report.isotropic_kahler,
            "curvature_phi_kahler": report.curvature_phi_kahler,
        },
        "invariants": {k: format_scalar(v) for k, v in report.invariants.items()},
        "identities": {
            name: {
                "applicable": v.applicable,
                "passed": v.passed,
                "witness": _witness_json(v.witness),
                "detail": v.detail,
            }
            for name, v in report.identities.items()
        },
        "tensors": {k: _tensor_json(t) for k, t in report.tensors.items()},
    }


def report_to_json(report: GeometryReport) -> str:
    import json

    return json.dumps(report_to_json_dict(report), sort_keys=True, indent=1)


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def report_to_text(report: GeometryReport) -> str:
    """A human-readable rendering; tensors list nonzero components."""
    lines = [
        f"model: {report.name or '(unnamed)'}",
        f"dim = {report.dim} (n = {report.n})",
        f"signature: g = {report.metric_signature}, "
        f"associated = {report.associated_signature}",
        "",
        f"classes: F0 = {_yesno(report.is_f0)}, F11 = {_yesno(report.is_f11)} "
        "(F1..F10 undecided by this classifier)",
        "flags:",
        f"  normal (N = 0):          {_yesno(report.normal)}",
        f"  omega closed:            {_yesno(report.omega_closed)}",
        f"  omega_star closed:       {_yesno(report.omega_star_closed)}",
        f"  isotropic Kahler:        {_yesno(report.isotropic_kahler)}",
        f"  curvature phi-Kahler:    {_yesno(report.curvature_phi_kahler)}",
        "",
        "invariants:",
    ]
    for key, value in report.invariants.items():
        lines.append(f"  {key} = {format_scalar(value)}")
    lines.append("")
    lines.append("identities:")
    for name, v in report.identities.items():
        if not v.applicable:
            status = " n/a"
        elif v.passed:
            status = "pass"
        else:
            status = "FAIL"
        extra = ""
        if v.witness is not None and not v.passed:
            extra = f"  witness: {v.witness}"
        lines.append(f"  [{status}] {name}{extra}")
    lines.append("")
    lines.append("tensors (nonzero components):")
    for key, t in report.tensors.items():
        items = t.nonzero_items()
        if not items:
            lines.append(f"  {key} = 0")
            continue
        for idx, value in items:
            pos = ",".join(str(i) for i in idx)
            lines.append(f"  {key}[{pos}] = {format_scalar(value)}")
    return "\n".join(lines) + "\n"
