"""The fundamental tensor, derived 1-forms, Nijenhuis tensor, square
norms, and the auxiliary tensor S — against frozen exact values and
cross-route comparisons."""
from fractions import Fraction as Fr

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from norden import (
    FamilyParams,
    NotApplicable,
    Tensor,
    covariant_derivative,
    divergence,
    fundamental_tensor,
    generate_family,
    levi_civita,
    matches_class_f11,
    nabla_eta,
    nabla_eta_from_fundamental,
    nabla_omega_star_check,
    nijenhuis,
    nijenhuis_from_brackets,
    nijenhuis_from_derivatives,
    one_forms,
    psi4,
    s_trace,
    square_norms,
    structure_pack,
    tensor_s,
)

lam_values = st.fractions(min_value=-4, max_value=4, max_denominator=5)


def test_frozen_fundamental_tensor(fam23):
    got = {idx: v for idx, v in np.ndenumerate(fam23.pack.f.components) if v != 0}
    assert got == {
        (0, 0, 1): -3, (0, 0, 2): 2,   # F(xi, xi, x_i) = omega(x_i)
        (0, 1, 0): -3, (0, 2, 0): 2,   # symmetric in the last two slots
    }


def test_fundamental_symmetry_last_two_slots(fam5, heis):
    for geo in (fam5, heis):
        F = geo.pack.f.components
        assert np.all(F == np.einsum("ijk->ikj", F))


def test_fundamental_phi_twist_symmetry(fam23, fam5, heis):
    """F(x, phi y, phi z) = F(x, y, z) - eta(y) F(x, xi, z)
    - eta(z) F(x, y, xi) on every model, pure class or not."""
    for geo in (fam23, fam5, heis):
        m = geo.model
        F = geo.pack.f.components
        phi, eta, xi = m.phi.components, m.eta.components, m.xi.components
        lhs = np.einsum("imn,mj,nk->ijk", F, phi, phi, optimize=True)
        f_xi_z = np.einsum("imk,m->ik", F, xi)
        f_y_xi = np.einsum("ijm,m->ij", F, xi)
        rhs = (
            F
            - np.einsum("j,ik->ijk", eta, f_xi_z)
            - np.einsum("k,ij->ijk", eta, f_y_xi)
        )
        assert np.all(lhs == rhs)


def test_fundamental_vanishes_on_double_xi(fam23, heis):
    for geo in (fam23, heis):
        F = geo.pack.f.components
        xi = geo.model.xi.components
        assert np.all(np.einsum("imn,m,n->i", F, xi, xi) == 0)


def test_frozen_one_forms(fam23):
    forms = one_forms(fam23.model, fam23.pack.f)
    assert list(forms.theta.components) == [0, -3, 2]
    assert list(forms.theta_star.components) == [0, 0, 0]
    assert list(forms.omega.components) == [0, -3, 2]
    assert list(forms.omega_star.components) == [0, 2, 3]
    assert forms.omega_vec.variance == "u"
    assert list(forms.omega_vec.components) == [0, -3, -2]


def test_heisenberg_one_forms_vanish(heis):
    for form in (heis.pack.theta, heis.pack.theta_star, heis.pack.omega):
        assert form.is_zero()


@settings(max_examples=8, deadline=None)
@given(st.lists(lam_values, min_size=2, max_size=2))
def test_family_theta_equals_omega_and_theta_star_zero(lam):
    m = generate_family(FamilyParams(1, tuple(lam)))
    conn = levi_civita(m)
    forms = one_forms(m, fundamental_tensor(m, conn))
    assert np.all(forms.theta.components == forms.omega.components)
    assert forms.theta_star.is_zero()
    # omega picks out the lambdas: omega(x_i) = -lambda_{i+n}, lambda_i pattern
    assert list(forms.omega.components)[1:] == [-lam[1], lam[0]]


def test_nabla_eta_two_routes(fam23, fam5, heis):
    for geo in (fam23, fam5, heis):
        direct = nabla_eta(geo.model, geo.conn)
        via_f = nabla_eta_from_fundamental(geo.model, geo.pack.f)
        assert direct == via_f


def test_nijenhuis_routes_agree(fam23, fam5, heis, fam_zero):
    for geo in (fam23, fam5, heis, fam_zero):
        via_b = nijenhuis_from_brackets(geo.model, geo.conn)
        via_d = nijenhuis_from_derivatives(geo.model, geo.conn)
        assert via_b == via_d
        assert nijenhuis(geo.model, geo.conn) == via_b


def test_nijenhuis_antisymmetry(fam23, heis):
    for geo in (fam23, heis):
        N = geo.pack.n.components
        assert np.all(N == -np.einsum("aij->aji", N))


def test_heisenberg_is_normal(heis):
    assert heis.pack.n.is_zero()


def test_family_not_normal(fam23):
    assert not fam23.pack.n.is_zero()


def test_frozen_square_norms(fam23):
    norms = square_norms(fam23.model, fam23.conn)
    assert norms == (Fr(10), Fr(-5), Fr(-10))
    # precomputed-pack path returns the identical values
    assert square_norms(fam23.model, fam23.conn, pack=fam23.pack) == norms


def test_heisenberg_square_norms(heis):
    norms = square_norms(heis.model, heis.conn, pack=heis.pack)
    assert norms == (Fr(3), Fr(-1, 2), Fr(0))


def test_frozen_tensor_s(fam23):
    s = tensor_s(fam23.model, fam23.conn)
    got = {idx: v for idx, v in np.ndenumerate(s.components) if v != 0}
    assert got == {(1, 1): -4, (1, 2): -6, (2, 1): -6, (2, 2): -9}
    assert s == fam23.pack.s
    assert s_trace(fam23.model, s) == 5


@settings(max_examples=8, deadline=None)
@given(st.lists(lam_values, min_size=2, max_size=2))
def test_family_s_is_minus_lambda_outer(lam):
    """S(x_i, x_j) = -lambda_i lambda_j on the nonzero block."""
    m = generate_family(FamilyParams(1, tuple(lam)))
    conn = levi_civita(m)
    s = tensor_s(m, conn).components
    for i in (1, 2):
        for j in (1, 2):
            assert s[i, j] == -lam[i - 1] * lam[j - 1]
    assert all(s[0, j] == 0 for j in range(3))


def test_psi4_has_curvature_symmetries():
    s = Tensor([[2, 1, 0], [1, -1, Fr(1, 2)], [0, Fr(1, 2), 3]], "dd")
    eta = Tensor([1, Fr(1, 3), 0], "d")
    p = psi4(s, eta).components
    assert np.all(p == -np.einsum("yxzu->xyzu", p))     # antisymmetry (1,2)
    assert np.all(p == -np.einsum("xyuz->xyzu", p))     # antisymmetry (3,4)
    assert np.all(p == np.einsum("zuxy->xyzu", p))      # pair symmetry
    bianchi = p + np.einsum("yzxu->xyzu", p) + np.einsum("zxyu->xyzu", p)
    assert np.all(bianchi == 0)                         # first Bianchi


def test_divergence_of_phi_omega_vec(fam23):
    phi_omega = np.einsum(
        "ij,j->i", fam23.model.phi.components, fam23.pack.omega_vec.components
    )
    assert divergence(fam23.model, fam23.conn, phi_omega) == 5


def test_divergence_of_zero_vector(fam23):
    assert divergence(fam23.model, fam23.conn, [0, 0, 0]) == 0


def test_matches_class_f11(fam23, heis, fam_zero):
    assert matches_class_f11(fam23.model, fam23.pack.f)
    assert not matches_class_f11(heis.model, heis.pack.f)
    # the zero tensor satisfies the pure-class equation
    assert matches_class_f11(fam_zero.model, fam_zero.pack.f)


def test_nabla_omega_star_check(fam23, heis):
    assert nabla_omega_star_check(fam23.model, fam23.conn)
    with pytest.raises(NotApplicable):
        nabla_omega_star_check(heis.model, heis.conn)


def test_structure_pack_is_consistent(fam5):
    geo = fam5
    assert geo.pack.f == fundamental_tensor(geo.model, geo.conn)
    assert geo.pack.s == tensor_s(geo.model, geo.conn)
    assert geo.pack.nabla_phi == covariant_derivative(geo.conn, geo.model.phi)
    assert geo.pack.nabla_eta == nabla_eta(geo.model, geo.conn)
    assert geo.pack.n == nijenhuis(geo.model, geo.conn)
    forms = one_forms(geo.model, geo.pack.f)
    assert geo.pack.theta == forms.theta
    assert geo.pack.omega == forms.omega
    assert geo.pack.omega_star == forms.omega_star
    assert geo.pack.omega_vec == forms.omega_vec
