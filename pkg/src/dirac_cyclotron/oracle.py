"""Independent mode-sum evolution and quadrature engine.

Everything here deliberately avoids the grouped closed forms of the fields
module: each eigenmode is assembled from its own (d_n, b_n) spinor structure
and its own kernel factor, then summed term by term with exact phases.  The
quadrature routines integrate arbitrary one-body observables on polar grids.
Agreement between this route and the closed forms is the package's central
correctness property.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import KahanAccumulator, ModeSet, q_kernel_stack
from .fields import PolarGrid, polar_to_xy
from .spectrum import ModelParams, branch_coefficients, phi, phi_taylor2

SPECTRUM_VARIANTS = ("exact", "taylor2", "taylor2_integer")


def _mode_energies(n_max: int, params: ModelParams, variant: str) -> np.ndarray:
    if variant == "exact":
        return np.asarray(phi(np.arange(n_max + 1), params))
    if variant == "taylor2":
        return np.asarray(phi_taylor2(np.arange(n_max + 1), params))
    if variant == "taylor2_integer":
        # integer-centred quadratic spectrum: the structural-revival variant
        return np.asarray(phi_taylor2(np.arange(n_max + 1), params, params.n0))
    raise ValueError(f"unknown spectrum variant {variant!r}")


def mode_sum_field(
    rho,
    theta,
    tau: float,
    mode_set: ModeSet,
    params: ModelParams,
    spectrum_variant: str = "exact",
) -> np.ndarray:
    """Brute-force field: sum amplitude * spinor(n) * exp(-i s phi_n tau).

    The spinor of mode (n, s, lambda_k) places d_n/b_n-weighted kernels
    Q_{n-1}, Q_n in the two components selected by lambda_k.
    """
    rho = np.asarray(rho, dtype=float)
    theta = np.asarray(theta, dtype=float)
    rho, theta = np.broadcast_arrays(rho, theta)
    x, y = polar_to_xy(rho, theta, params)
    n_max = mode_set.n_max
    q = q_kernel_stack(n_max, x, y, params)
    energies = _mode_energies(n_max, params, spectrum_variant)

    acc = [KahanAccumulator(np.zeros(rho.shape, dtype=complex)) for _ in range(4)]
    for idx, amp in mode_set.entries:
        n, s, lam = idx.n, idx.s, idx.lambda_k
        d, b = branch_coefficients(n, params)
        d, b = float(d), float(b)
        ph = amp * np.exp(-1j * s * energies[n] * tau)
        q_lo = q[n - 1] if n >= 1 else None  # Q_{n-1}; absent only when b_n = 0
        if lam == +1:
            if s == +1:
                if q_lo is not None:
                    acc[0].add(d * ph * q_lo)
                acc[3].add(-b * ph * q[n])
            else:
                if q_lo is not None:
                    acc[0].add(b * ph * q_lo)
                acc[3].add(d * ph * q[n])
        else:
            if s == +1:
                acc[1].add(d * ph * q[n])
                if q_lo is not None:
                    acc[2].add(-b * ph * q_lo)
            else:
                acc[1].add(b * ph * q[n])
                if q_lo is not None:
                    acc[2].add(d * ph * q_lo)
    return np.stack([a.total for a in acc])


@dataclass(frozen=True)
class OracleField:
    """A mode-sum field sampled on a polar grid at one time."""

    grid: PolarGrid
    samples: np.ndarray  # shape (4, n_rho, n_theta)
    tau: float
    spectrum_variant: str = "exact"

    def norm(self) -> float:
        return float(self.grid.integrate(np.abs(self.samples) ** 2).sum())


def sample_mode_sum(
    grid: PolarGrid,
    tau: float,
    mode_set: ModeSet,
    params: ModelParams,
    spectrum_variant: str = "exact",
) -> OracleField:
    rr, tt = grid.mesh()
    samples = mode_sum_field(rr, tt, tau, mode_set, params, spectrum_variant)
    return OracleField(grid=grid, samples=samples, tau=tau, spectrum_variant=spectrum_variant)


# 4x4 matrices of the one-body operators, basis (psi_1 .. psi_4).
_SIGMA_X = np.kron(np.eye(2), np.array([[0, 1], [1, 0]])).astype(complex)
_SIGMA_Y = np.kron(np.eye(2), np.array([[0, -1j], [1j, 0]]))
_SIGMA_Z = np.kron(np.eye(2), np.diag([1.0, -1.0])).astype(complex)
_SWAP = np.array([[0, 1], [1, 0]])
_ALPHA_X = np.kron(_SWAP, np.array([[0, 1], [1, 0]])).astype(complex)
_ALPHA_Y = np.kron(_SWAP, np.array([[0, -1j], [1j, 0]]))

OPERATOR_KINDS = (
    "velocity_x",
    "velocity_y",
    "sigma_x",
    "sigma_y",
    "sigma_z",
    "position_x",
    "position_y",
    "norm",
)


def quadrature_expectation(kind: str, field: OracleField, params: ModelParams) -> float:
    """Grid quadrature of psi^dagger O psi for a one-body operator O.

    Velocities come out in c (O = alpha_i), spins in hbar/2 (O = Sigma_i),
    positions in a.  Refuses if the grid has visibly leaked norm.
    """
    psi = field.samples
    norm = field.norm()
    if abs(norm - 1.0) > 1e-3:
        raise ValueError(f"field norm {norm:.6f} deviates too far from 1 (grid too small?)")
    if kind == "norm":
        return norm
    if kind in ("position_x", "position_y"):
        rr, tt = field.grid.mesh()
        x, y = polar_to_xy(rr, tt, params)
        weight = x if kind == "position_x" else y
        dens = np.sum(np.abs(psi) ** 2, axis=0)
        return float(field.grid.integrate(weight * dens))
    matrices = {
        "velocity_x": _ALPHA_X,
        "velocity_y": _ALPHA_Y,
        "sigma_x": _SIGMA_X,
        "sigma_y": _SIGMA_Y,
        "sigma_z": _SIGMA_Z,
    }
    try:
        op = matrices[kind]
    except KeyError:
        raise ValueError(f"unknown operator kind {kind!r}") from None
    dens = np.einsum("i...,ij,j...->...", psi.conj(), op, psi)
    return float(np.real(field.grid.integrate(dens)))


def fidelity(field_a: np.ndarray, field_b: np.ndarray, grid: PolarGrid) -> float:
    """|integral psi_a^dagger psi_b dA| for two fields on the same grid."""
    overlap = grid.integrate(np.sum(field_a.conj() * field_b, axis=0))
    return float(abs(overlap))


def normalized_fidelity(field_a: np.ndarray, field_b: np.ndarray, grid: PolarGrid) -> float:
    """Fidelity with both fields normalized on the grid first."""
    na = math.sqrt(float(grid.integrate(np.sum(np.abs(field_a) ** 2, axis=0))))
    nb = math.sqrt(float(grid.integrate(np.sum(np.abs(field_b) ** 2, axis=0))))
    return fidelity(field_a, field_b, grid) / (na * nb)


def hermite_functions(k_max: int, xi) -> np.ndarray:
    """Orthonormal oscillator functions h_0..h_kmax(xi), stable recurrence.

    h_k(xi) = H_k(xi) exp(-xi^2/2) / sqrt(2^k k! sqrt(pi)); the normalized
    three-term recurrence keeps values O(1) for k in the hundreds.
    """
    xi = np.asarray(xi, dtype=float)
    out = np.empty((k_max + 1,) + xi.shape)
    out[0] = math.pi**-0.25 * np.exp(-0.5 * xi**2)
    if k_max >= 1:
        out[1] = math.sqrt(2.0) * xi * out[0]
    for k in range(2, k_max + 1):
        out[k] = math.sqrt(2.0 / k) * xi * out[k - 1] - math.sqrt(
            (k - 1) / k
        ) * out[k - 2]
    return out


_GH_NODES = 200


def b1_quadrature(k: int, x: float, y: float, params: ModelParams) -> complex:
    """Numeric p-integral definition of the kernel Q_k (oracle for q_kernel).

    Gauss-Hermite quadrature with 200 nodes centred at the momentum-profile
    peak p = qa (p in hbar/a units); the oscillator factor is evaluated by
    the stable normalized recurrence.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    nodes, weights = np.polynomial.hermite.hermgauss(_GH_NODES)
    # total weights w_i * exp(t_i^2) stay O(node spacing)
    total_w = weights * np.exp(nodes**2)
    p = params.qa + nodes
    # integrand: (2 pi)^{-1/2} pi^{-1/4} e^{i p x} e^{-(p-qa)^2/2} h_k(y - p)
    h = hermite_functions(k, y - p)[k]
    integrand = (
        np.exp(1j * p * x) * np.exp(-0.5 * nodes**2) * h
        / (math.sqrt(2.0 * math.pi) * math.pi**0.25)
    )
    return complex(np.sum(total_w * integrand))
