"""The Levi-Civita connection of a left-invariant metric.

For left-invariant data all directional derivatives of components
vanish, so the Koszul formula collapses to bracket terms:

    2 g(nabla_{x_i} x_j, x_k)
        = g([x_i, x_j], x_k) + g([x_k, x_i], x_j) + g([x_k, x_j], x_i).

Connection coefficients are stored as ``gamma[k, i, j]``: the ``x_k``
coefficient of ``nabla_{x_i} x_j``.  Covariant derivatives of constant
tensors then consist purely of Gamma correction terms, one per slot.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, VarianceMismatch
from .structures import AcnModel
from .tensors import DOWN, UP, Tensor, exact_div, invert_symmetric, zeros_array


@dataclass(frozen=True)
class Connection:
    """Connection coefficients ``gamma[k, i, j]`` on a fixed basis
    (derivative direction ``i``, argument ``j``, output component ``k``)."""

    gamma: Tensor

    def __post_init__(self):
        if self.gamma.variance != "udd":
            raise VarianceMismatch(
                f"connection coefficients need variance 'udd', got "
                f"{self.gamma.variance!r}"
            )
        s = self.gamma.shape
        if len(s) != 3 or len(set(s)) != 1:
            raise DimensionMismatch(f"connection coefficients must be cubic, got {s}")

    @property
    def dim(self) -> int:
        return self.gamma.shape[0]


def levi_civita(model: AcnModel) -> Connection:
    """The unique torsion-free, metric connection of ``model.g``.

    Raises :class:`SingularMetric` if the metric is degenerate.
    """
    g = model.g.components
    c = model.algebra.c.components
    ginv = invert_symmetric(model.g).components
    # b[i, j, k] = g([x_i, x_j], x_k)
    b = np.einsum("mij,mk->ijk", c, g, optimize=True)
    two_k = b + np.einsum("kij->ijk", b) + np.einsum("kji->ijk", b)
    # gamma[m, i, j] = (1/2) * two_k[i, j, k] g^{k m}
    gamma = exact_div(np.einsum("ijk,km->mij", two_k, ginv, optimize=True), 2)
    return Connection(Tensor(gamma, "udd"))


def covariant_derivative(conn: Connection, t: Tensor) -> Tensor:
    """``nabla t`` of a constant tensor: a new covariant direction slot
    is prepended, and each original slot receives its Gamma correction
    (``+`` for contravariant slots, ``-`` for covariant ones)."""
    d = conn.dim
    if any(s != d for s in t.shape):
        raise DimensionMismatch(
            f"tensor slots {t.shape} do not match connection dimension {d}"
        )
    gamma = conn.gamma.components
    result = zeros_array((d,) + t.shape)
    for slot, var in enumerate(t.variance):
        moved = np.moveaxis(t.components, slot, -1)
        if var == UP:
            term = np.einsum("kim,...m->i...k", gamma, moved, optimize=True)
        else:
            term = -np.einsum("mik,...m->i...k", gamma, moved, optimize=True)
        result = result + np.moveaxis(term, -1, slot + 1)
    return Tensor(result, DOWN + t.variance)


def second_covariant_derivative(conn: Connection, t: Tensor) -> Tensor:
    """``nabla nabla t``, two new direction slots in front.

    Because all tensors are constant, iterating
    :func:`covariant_derivative` already produces the tensorial second
    derivative: the recursion's correction on the first direction slot
    is exactly the ``- nabla_{nabla_x y}`` term.
    """
    return covariant_derivative(conn, covariant_derivative(conn, t))


def is_torsion_free(conn: Connection, model: AcnModel) -> bool:
    """Exact check of ``nabla_x y - nabla_y x = [x, y]`` on basis pairs."""
    gamma = conn.gamma.components
    c = model.algebra.c.components
    torsion = gamma - np.einsum("kij->kji", gamma) - c
    return bool(np.all(torsion == 0))


def is_metric_compatible(conn: Connection, model: AcnModel) -> bool:
    """Exact check of ``nabla g = 0``."""
    return covariant_derivative(conn, model.g).is_zero()
