"""Class membership decisions and exact identity verification.

The two decidable classes here are the integrable Kahler-type class
(``F = 0``) and the pure class in which ``F`` is carried entirely by
``eta`` and ``omega``:

    F(x, y, z) = eta(x) (eta(y) omega(z) + eta(z) omega(y)).

On that pure class a family of exact identities ties the structure
tensors to the curvature; :func:`verify_identities` evaluates every one
of them with literal rational equality and reports a verdict per
identity, flagging those whose preconditions fail as inapplicable
rather than passed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .connection import Connection, covariant_derivative, levi_civita
from .curvature import CurvaturePack, riemann
from .errors import NotApplicable
from .fundamental import (
    SquareNorms,
    StructurePack,
    divergence,
    fundamental_tensor,
    matches_class_f11,
    psi4,
    s_trace,
    square_norms,
    structure_pack,
)
from .structures import AcnModel
from .tensors import Tensor, einsum_scalar, invert_symmetric


def is_f0(model: AcnModel, f: Tensor) -> bool:
    """Whether the structure is of Kahler type: ``F`` vanishes
    identically (equivalently ``nabla phi = 0``)."""
    return f.is_zero()


def is_f11(model: AcnModel, f: Tensor) -> bool:
    """Whether ``F`` has the pure eta-omega form (see module docstring).

    The zero tensor qualifies: the Kahler-type class is contained in
    the closure of every pure class.
    """
    return matches_class_f11(model, f)


def forms_closed(
    model: AcnModel, conn: Connection, pack: StructurePack | None = None
) -> tuple[bool, bool]:
    """Exact closedness of ``omega`` and ``omega_star``.

    For constant forms ``d omega(x, y) = (nabla_x omega) y
    - (nabla_y omega) x``, so closedness is symmetry of the covariant
    derivative.
    """
    if pack is None:
        from .fundamental import one_forms

        f = fundamental_tensor(model, conn)
        forms = one_forms(model, f)
        omega, omega_star = forms.omega, forms.omega_star
    else:
        omega, omega_star = pack.omega, pack.omega_star
    nomega = covariant_derivative(conn, omega).components
    nostar = covariant_derivative(conn, omega_star).components
    return (
        bool(np.all(nomega == nomega.T)),
        bool(np.all(nostar == nostar.T)),
    )


def is_isotropic_kahler(
    model: AcnModel, conn: Connection, norms: SquareNorms | None = None
) -> bool:
    """Whether both square norms ``||nabla phi||^2`` and
    ``||nabla eta||^2`` vanish (possible with ``nabla phi != 0`` only
    because the metric is indefinite)."""
    if norms is None:
        norms = square_norms(model, conn)
    return norms.nabla_phi == 0 and norms.nabla_eta == 0


def curvature_phi_kahler(model: AcnModel, pack: CurvaturePack) -> bool:
    """Whether the curvature has the Kahler-type phi-property
    ``R(x, y, phi z, phi u) = -R(x, y, z, u)`` on all basis tuples."""
    R = pack.r04.components
    phi = model.phi.components
    twisted = np.einsum("ijmn,mk,nu->ijku", R, phi, phi, optimize=True)
    return bool(np.all(twisted == -R))


@dataclass(frozen=True)
class IdentityVerdict:
    """Outcome of one exact identity check.

    ``applicable`` is False when the identity's precondition (usually
    membership in the pure class) is unmet, in which case ``passed`` is
    None.  ``witness`` carries the first failing index tuple, if any.
    """

    name: str
    applicable: bool
    passed: bool | None
    witness: tuple | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        """True unless the identity applies and fails."""
        return (not self.applicable) or bool(self.passed)


def _first_mismatch(a: np.ndarray, b: np.ndarray) -> tuple | None:
    for idx in np.ndindex(a.shape):
        if a[idx] != b[idx]:
            return idx
    return None


def _verdict(name: str, lhs: np.ndarray, rhs: np.ndarray, detail: str = "") -> IdentityVerdict:
    witness = _first_mismatch(lhs, rhs)
    return IdentityVerdict(
        name=name, applicable=True, passed=witness is None, witness=witness,
        detail=detail,
    )


def _not_applicable(name: str, detail: str) -> IdentityVerdict:
    return IdentityVerdict(
        name=name, applicable=False, passed=None, witness=None, detail=detail
    )


def verify_identities(
    model: AcnModel,
    conn: Connection | None = None,
    pack: StructurePack | None = None,
    curv: CurvaturePack | None = None,
) -> dict[str, IdentityVerdict]:
    """Evaluate every supported exact identity on a model.

    Returns a dict keyed by identity name.  Identities restricted to
    the pure eta-omega class are reported as inapplicable on models
    outside it; everything else is checked unconditionally.  The
    optional arguments allow reuse of already-computed packages.
    """
    if conn is None:
        conn = levi_civita(model)
    if pack is None:
        pack = structure_pack(model, conn)
    if curv is None:
        curv = riemann(model, conn)
    f11 = matches_class_f11(model, pack.f)
    verdicts: dict[str, IdentityVerdict] = {}

    def put(v: IdentityVerdict) -> None:
        verdicts[v.name] = v

    g = model.g.components
    ginv = invert_symmetric(model.g).components
    phi = model.phi.components
    eta = model.eta.components
    xi = model.xi.components
    d = model.dim

    # --- Ricci identities: second-derivative antisymmetrization equals
    # the curvature action.  Holds for every metric connection, so it is
    # checked unconditionally, for both phi and eta.
    nnphi = covariant_derivative(conn, covariant_derivative(conn, model.phi)).components
    asym_phi = nnphi - np.einsum("jiak->ijak", nnphi)
    r13 = curv.r13.components
    rhs_phi = np.einsum("aijm,mk->ijak", r13, phi, optimize=True) - np.einsum(
        "mijk,am->ijak", r13, phi, optimize=True
    )
    put(_verdict("ricci_identity_phi", asym_phi, rhs_phi,
                 detail="nabla^2 phi antisymmetrized = curvature acting on phi"))

    nneta = covariant_derivative(conn, covariant_derivative(conn, model.eta)).components
    asym_eta = nneta - np.einsum("jik->ijk", nneta)
    rhs_eta = -np.einsum("mijk,m->ijk", r13, eta, optimize=True)
    put(_verdict("ricci_identity_eta", asym_eta, rhs_eta,
                 detail="nabla^2 eta antisymmetrized = -eta(R(.,.) .)"))

    if not f11:
        for name in (
            "norm_chain",
            "omega_star_derivative",
            "curvature_phi_twist",
            "r_equals_psi4_s",
            "ricci_from_s",
            "s_trace_divergence",
            "scalar_curvature_chain",
            "phi_kahler_criterion",
            "phi_kahler_criterion_closedness",
            "isotropy_equivalence",
        ):
            put(_not_applicable(name, "model is not in the pure eta-omega class"))
        return verdicts

    # --- Norm chain: ||nabla phi||^2 = -||N||^2 = -2 ||nabla eta||^2
    #     = 2 omega(omega_vec).
    norms = square_norms(model, conn, pack=pack)
    oo = einsum_scalar("k,k->", pack.omega.components, pack.omega_vec.components)
    chain = [norms.nabla_phi, -norms.nijenhuis, -2 * norms.nabla_eta, 2 * oo]
    passed = all(v == chain[0] for v in chain)
    put(IdentityVerdict(
        name="norm_chain", applicable=True, passed=passed,
        witness=None if passed else tuple(str(v) for v in chain),
        detail="||nabla phi||^2 = -||N||^2 = -2||nabla eta||^2 = 2 omega(Omega)",
    ))

    # --- First-derivative identity for omega_star.
    nomega = covariant_derivative(conn, pack.omega).components
    nostar = covariant_derivative(conn, pack.omega_star).components
    rhs = np.einsum("im,mj->ij", nomega, phi, optimize=True) + np.multiply.outer(
        eta, eta
    ) * oo
    put(_verdict("omega_star_derivative", nostar, rhs,
                 detail="(nabla_x omega_star) y = (nabla_x omega) phi y "
                        "+ eta(x) eta(y) omega(Omega)"))

    # --- Curvature phi-twist: R(x, y, phi z, phi u) = -R(x, y, z, u)
    #     + psi4(S)(x, y, z, u).
    R = curv.r04.components
    p4 = psi4(pack.s, model.eta).components
    twisted = np.einsum("ijmn,mk,nu->ijku", R, phi, phi, optimize=True)
    put(_verdict("curvature_phi_twist", twisted, -R + p4,
                 detail="R twisted by phi in the last two slots differs "
                        "from -R by psi4(S)"))

    # --- When the twisted curvature vanishes identically the curvature
    # collapses onto psi4(S) and the Ricci tensor onto S; these hold
    # under that extra hypothesis, not on the whole pure class.
    twist_vanishes = bool(np.all(twisted == 0))
    if twist_vanishes:
        put(_verdict("r_equals_psi4_s", R, p4, detail="R = psi4(S)"))
        trs = s_trace(model, pack.s)
        rhs_ricci = np.multiply.outer(eta, eta) * trs + pack.s.components
        put(_verdict("ricci_from_s", curv.ricci.components, rhs_ricci,
                     detail="ricci = tr(S) eta (x) eta + S"))
        phi_omega_v = np.einsum("ij,j->i", phi, pack.omega_vec.components)
        div_po = divergence(model, conn, phi_omega_v)
        put(IdentityVerdict(
            name="s_trace_divergence", applicable=True, passed=trs == div_po,
            witness=None if trs == div_po else (str(trs), str(div_po)),
            detail="tr S = div(phi Omega)",
        ))
    else:
        reason = "R(x, y, phi z, phi u) does not vanish identically"
        put(_not_applicable("r_equals_psi4_s", reason))
        put(_not_applicable("ricci_from_s", reason))
        put(_not_applicable("s_trace_divergence", reason))

    # --- Scalar curvature chain: tau + tau_2star = 2 div(phi Omega)
    #     = 2 ricci(xi, xi).
    phi_omega = np.einsum("ij,j->i", phi, pack.omega_vec.components)
    div_phi_omega = divergence(model, conn, phi_omega)
    ricci_xixi = einsum_scalar("ij,i,j->", curv.ricci.components, xi, xi)
    chain = [curv.tau + curv.tau_2star, 2 * div_phi_omega, 2 * ricci_xixi]
    passed = all(v == chain[0] for v in chain)
    put(IdentityVerdict(
        name="scalar_curvature_chain", applicable=True, passed=passed,
        witness=None if passed else tuple(str(v) for v in chain),
        detail="tau + tau_2star = 2 div(phi Omega) = 2 ricci(xi, xi)",
    ))

    # --- Kahler-type curvature criterion: the twisted curvature
    # property holds iff (nabla_x omega_star) y
    # = eta(x) eta(y) omega(Omega) + omega_star(x) omega_star(y).
    lhs_flag = curvature_phi_kahler(model, curv)
    ostar = pack.omega_star.components
    crit_rhs = np.multiply.outer(eta, eta) * oo + np.multiply.outer(ostar, ostar)
    rhs_flag = bool(np.all(nostar == crit_rhs))
    put(IdentityVerdict(
        name="phi_kahler_criterion", applicable=True, passed=lhs_flag == rhs_flag,
        witness=None if lhs_flag == rhs_flag else (lhs_flag, rhs_flag),
        detail="curvature phi-twist property holds iff nabla omega_star "
               "has the pure rank-one form",
    ))

    # --- Addendum: when the pure rank-one form of nabla omega_star
    # holds, omega_star must be closed.  Only applicable then.
    if rhs_flag:
        put(_verdict("phi_kahler_criterion_closedness", nostar, nostar.T,
                     detail="the pure rank-one form forces d omega_star = 0"))
    else:
        put(_not_applicable(
            "phi_kahler_criterion_closedness",
            "nabla omega_star does not have the pure rank-one form",
        ))

    # --- Isotropy equivalence: isotropic Kahler <=> omega(Omega) = 0
    #     <=> ||N||^2 = 0.
    flags = (
        is_isotropic_kahler(model, conn, norms=norms),
        oo == 0,
        norms.nijenhuis == 0,
    )
    passed = len(set(flags)) == 1
    put(IdentityVerdict(
        name="isotropy_equivalence", applicable=True, passed=passed,
        witness=None if passed else flags,
        detail="isotropic Kahler <=> omega(Omega) = 0 <=> ||N||^2 = 0",
    ))
    return verdicts
