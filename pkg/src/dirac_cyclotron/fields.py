"""Closed-form spinor fields on polar grids for both packet families.

The polar frame is attached to the guiding centre of the orbit:
x/a = rho sin(theta), (y - qa^2)/a = rho cos(theta).  All fields are
returned as complex arrays of shape (4,) + grid_shape, in units 1/a
(two-dimensional normalization), and all series run over the coherent-index
truncation window in ascending order with compensated accumulation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .basis import KahanAccumulator, TruncationWindow, truncation_window
from .spectrum import ModelParams, branch_coefficients, phi, taylor_at


@dataclass(frozen=True)
class PolarPoint:
    """A point of the guiding-centre polar frame (rho in a, theta in rad)."""

    rho: float
    theta: float

    def __post_init__(self):
        if self.rho < 0:
            raise ValueError("rho must be non-negative")


@dataclass(frozen=True)
class SpinorSample:
    """Four complex bispinor components at one space-time point (units 1/a)."""

    c1: complex
    c2: complex
    c3: complex
    c4: complex

    @classmethod
    def from_array(cls, a) -> "SpinorSample":
        return cls(complex(a[0]), complex(a[1]), complex(a[2]), complex(a[3]))

    def as_array(self) -> np.ndarray:
        return np.array([self.c1, self.c2, self.c3, self.c4])

    @property
    def density(self) -> float:
        return float(sum(abs(c) ** 2 for c in self.as_array()))


@dataclass(frozen=True)
class PolarGrid:
    """Product grid: trapezoidal nodes in rho, uniform periodic nodes in theta.

    The induced quadrature weight is rho * drho * dtheta; ``integrate``
    contracts the trailing (n_rho, n_theta) axes of its argument against it.
    """

    rho_max: float
    n_rho: int = 120
    n_theta: int = 256

    @property
    def rho(self) -> np.ndarray:
        return np.linspace(0.0, self.rho_max, self.n_rho)

    @property
    def theta(self) -> np.ndarray:
        return np.linspace(0.0, 2.0 * math.pi, self.n_theta, endpoint=False)

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.rho, self.theta, indexing="ij")

    def weights(self) -> np.ndarray:
        d_rho = self.rho_max / (self.n_rho - 1)
        w_rho = np.full(self.n_rho, d_rho)
        w_rho[0] = w_rho[-1] = 0.5 * d_rho
        d_theta = 2.0 * math.pi / self.n_theta
        return np.outer(self.rho * w_rho, np.full(self.n_theta, d_theta))

    def integrate(self, values) -> np.ndarray | float | complex:
        out = np.einsum("...ij,ij->...", np.asarray(values), self.weights())
        return out if np.ndim(out) else out.item()


def default_grid(params: ModelParams, n_rho: int = 120, n_theta: int = 256) -> PolarGrid:
    """Grid sized so grid norms of the packet families hold to ~1e-6."""
    return PolarGrid(rho_max=params.qa + 6.0, n_rho=n_rho, n_theta=n_theta)


def polar_to_xy(rho, theta, params: ModelParams):
    """Laboratory coordinates (in a) of a guiding-centre polar point."""
    rho = np.asarray(rho, dtype=float)
    theta = np.asarray(theta, dtype=float)
    return rho * np.sin(theta), params.qa + rho * np.cos(theta)


def envelope_prefactor(rho, theta, params: ModelParams):
    """The common Gaussian-with-phase prefactor M(rho, theta), units 1/a."""
    rho = np.asarray(rho, dtype=float)
    theta = np.asarray(theta, dtype=float)
    qa = params.qa
    expo = -(rho**2 + qa**2) / 4.0 + 0.5j * rho * np.sin(theta) * (
        rho * np.cos(theta) + 2.0 * qa
    )
    return np.exp(expo) / math.sqrt(2.0 * math.pi)


def coherent_ground_state(rho, theta, params: ModelParams):
    """The t=0 coherent orbital wave function psi_c (scalar, units 1/a)."""
    w = -0.5 * params.qa * np.asarray(rho, dtype=float) * np.exp(
        -1j * np.asarray(theta, dtype=float)
    )
    return envelope_prefactor(rho, theta, params) * np.exp(w)


def _window(params: ModelParams, window: TruncationWindow | None) -> TruncationWindow:
    return window if window is not None else truncation_window(params)


def _scaled_power(w: np.ndarray, j: int) -> np.ndarray:
    """w^j / j! elementwise, via log magnitudes (j may be large)."""
    if j <= 0:
        return np.ones_like(w)
    mag = np.abs(w)
    with np.errstate(divide="ignore"):
        log_mag = np.where(mag > 0, np.log(np.where(mag > 0, mag, 1.0)), -np.inf)
    out = np.exp(j * log_mag - math.lgamma(j + 1)) * np.exp(1j * j * np.angle(w))
    return np.where(mag > 0, out, 0.0)


def positive_energy_field(
    rho, theta, tau: float, params: ModelParams, window: TruncationWindow | None = None
) -> np.ndarray:
    """Positive-band packet: closed-form series over the truncation window.

    Per coherent index k the lambda_k=+1 branch populates components 1 and 4
    (Landau index n = k) and the lambda_k=-1 branch components 2 and 3
    (Landau index n = k - 1); each carries the exact phase
    exp(-i n theta - i phi_n tau).
    """
    win = _window(params, window)
    rho = np.asarray(rho, dtype=float)
    theta = np.asarray(theta, dtype=float)
    rho, theta = np.broadcast_arrays(rho, theta)
    qa, al, be = params.qa, params.alpha, params.beta
    w = -0.5 * qa * rho * np.exp(-1j * theta)  # gamma * e^{-i theta}
    e_mth = np.exp(-1j * theta)

    shape = rho.shape
    acc = [KahanAccumulator(np.zeros(shape, dtype=complex)) for _ in range(4)]
    W = _scaled_power(w, win.n_min - 1)  # w^(k-1)/(k-1)! at k = n_min
    W_prev = _scaled_power(w, win.n_min - 2) if win.n_min >= 2 else None
    for k in range(win.n_min, win.n_max + 1):
        # lambda_k=+1 branch: Landau index n = k, components 1 and 4
        d, b = branch_coefficients(k, params)
        ph = np.exp(-1j * float(phi(k, params)) * tau)
        if al != 0.0:
            acc[0].add(al * float(d) * W * ph)
            acc[3].add(-al * float(b) * rho / math.sqrt(2.0 * k) * W * e_mth * ph)
        # lambda_k=-1 branch: Landau index n = k - 1, components 2 and 3
        if be != 0.0:
            n = k - 1
            d, b = branch_coefficients(n, params)
            ph = np.exp(-1j * float(phi(n, params)) * tau)
            acc[1].add(be * float(d) * W * ph)
            if n >= 1:
                acc[2].add(be * float(b) * qa / math.sqrt(2.0 * n) * W_prev * ph)
        W_prev = W
        W = W * w / k

    pref = envelope_prefactor(rho, theta, params) / params.weight_norm
    return np.stack([pref * a.total for a in acc])


def classical_field(rho, theta, tau: float, params: ModelParams) -> np.ndarray:
    """Coherent weakly-relativistic packet (linearized spectrum around n0).

    Rigid rotation along the orbit: the density centre sits at
    theta_c = pi - 2*pi*tau/T_cl.  The linearization is centred on the
    *integer* n0, so that the residual phases are exact quadratics in the
    integer offset n - n0 and the revival/Gauss-sum identities hold exactly.
    """
    rho = np.asarray(rho, dtype=float)
    theta = np.asarray(theta, dtype=float)
    rho, theta = np.broadcast_arrays(rho, theta)
    qa, la = params.qa, params.lambda_over_a
    al, be = params.alpha, params.beta
    phi0, dp, _ = taylor_at(params.n0, params)
    rot = np.exp(-0.5 * qa * rho * np.exp(-1j * (theta + dp * tau)))
    global_phase = np.exp(-1j * (phi0 + (1.0 - params.n0) * dp) * tau)
    pref = (
        envelope_prefactor(rho, theta, params)
        * rot
        * global_phase
        / params.weight_norm
    )
    return np.stack(
        [
            al * pref,
            be * np.exp(1j * dp * tau) * pref,
            be * 0.5 * qa * la * pref,
            -al * 0.5 * la * rho * np.exp(-1j * theta) * pref,
        ]
    )


def classical_density(rho, theta, tau: float, params: ModelParams) -> np.ndarray:
    """|psi_cl|^2 in closed Gaussian form (requires alpha = beta)."""
    if params.alpha != params.beta:
        raise ValueError("closed-form classical density assumes alpha = beta")
    rho = np.asarray(rho, dtype=float)
    theta = np.asarray(theta, dtype=float)
    qa, la = params.qa, params.lambda_over_a
    _, dp, _ = taylor_at(params.n0, params)
    gauss = np.exp(
        -0.5 * (rho**2 + qa**2 + 2.0 * rho * qa * np.cos(theta + dp * tau))
    )
    return (1.0 + la**2 / 8.0 * (rho**2 + qa**2)) / (2.0 * math.pi) * gauss


def gauss_sum_coefficients(m: int, n: int) -> tuple[int, np.ndarray]:
    """Fractional-revival weights at t = m T_R / n.

    The per-mode phase factor f_k = exp(2*pi*i*m*k^2/n) is periodic in k
    with some period l <= 2n; returns (l, p) with p_j defined by
    f_k = sum_j p_j exp(-2*pi*i*j*k/l), so the packet is
    sum_j p_j psi_cl(tau + j*T_cl/l).  Unitary: sum |p_j|^2 = 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if math.gcd(m, n) != 1:
        raise ValueError(f"{m}/{n} is not an irreducible fraction")
    period = None
    for l in range(1, 2 * n + 1):
        if (2 * m * l) % n == 0 and (m * l * l) % n == 0:
            period = l
            break
    assert period is not None
    k = np.arange(period)
    f = np.exp(2j * math.pi * m * k**2 / n)
    j = np.arange(period)
    # inverse transform with the sign matching the +j*T_cl/l time shifts
    p = f @ np.exp(2j * math.pi * np.outer(k, j) / period) / period
    return period, p


def fractional_revival_field(
    rho, theta, tau: float, m: int, n: int, params: ModelParams
) -> np.ndarray:
    """Sub-packet superposition valid for tau near m*T_R/n.

    Equal to sum_j p_j psi_cl(tau + j T_cl / l) with the Gauss-sum weights
    from ``gauss_sum_coefficients``; n=2 collapses to the single shifted
    classical packet of the first reconstruction.
    """
    if n > 8:
        raise ValueError("fractional revivals supported for n <= 8")
    _, dp, _ = taylor_at(params.n0, params)
    t_cl = 2.0 * math.pi / dp
    period, p = gauss_sum_coefficients(m, n)
    acc = None
    for j in range(period):
        term = p[j] * classical_field(
            rho, theta, tau + j * t_cl / period, params
        )
        if acc is None:
            acc = KahanAccumulator(np.zeros_like(term))
        acc.add(term)
    return acc.total


def jc_field(
    rho, theta, tau: float, params: ModelParams, window: TruncationWindow | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Two-band (Jaynes-Cummings subspace) packet: the pair (Psi1, Psi2).

    Written against the common prefactor M rather than psi_c * exp(-w) (the
    two forms are identical; this one avoids cancellation for large w).
    """
    win = _window(params, window)
    rho = np.asarray(rho, dtype=float)
    theta = np.asarray(theta, dtype=float)
    rho, theta = np.broadcast_arrays(rho, theta)
    qa, la = params.qa, params.lambda_over_a
    w = -0.5 * qa * rho * np.exp(-1j * theta)

    shape = rho.shape
    acc1 = KahanAccumulator(np.zeros(shape, dtype=complex))
    acc2 = KahanAccumulator(np.zeros(shape, dtype=complex))
    n_start = max(1, win.n_min)
    W = _scaled_power(w, n_start - 1)
    for n in range(n_start, win.n_max + 1):
        p = float(phi(n, params))
        c_t, s_t = math.cos(p * tau), math.sin(p * tau)
        acc1.add(W * (c_t - 1j * s_t / p))
        acc2.add(W * (s_t / p))
        W = W * w / n

    pref = envelope_prefactor(rho, theta, params)
    psi1 = pref * acc1.total
    psi2 = pref * 1j * la * rho * np.exp(-1j * theta) * acc2.total
    return psi1, psi2


def jc_spinor(
    rho, theta, tau: float, params: ModelParams, window: TruncationWindow | None = None
) -> np.ndarray:
    """Two-band packet assembled as a 4-spinor: (Psi1, 0, 0, Psi2)."""
    psi1, psi2 = jc_field(rho, theta, tau, params, window)
    zero = np.zeros_like(psi1)
    return np.stack([psi1, zero, zero, psi2])


def cat_decomposition(
    tau: float, params: ModelParams
) -> tuple[np.ndarray, np.ndarray, float]:
    """Time-evolved spin factors of the two counter-rotating components.

    Returns (spin_plus, spin_minus, |overlap|), each spin factor a
    4-component vector.  At tau0 = T_cl/4 the overlap takes the closed form
    sqrt(2 n0 (lambda/a)^2 / (1 + 2 n0 (lambda/a)^2)).
    """
    d0, b0 = branch_coefficients(params.n0, params)
    d0, b0 = float(d0), float(b0)
    _, dp, _ = taylor_at(params.n0, params)
    up = np.array([1.0, 0.0, 0.0, 0.0], dtype=complex)
    down = np.array([0.0, 0.0, 0.0, 1.0], dtype=complex)
    spin_plus = np.exp(-1j * dp * tau) * d0 * up + b0 * down
    spin_minus = np.exp(1j * dp * tau) * b0 * up - d0 * down
    overlap = abs(np.vdot(spin_plus, spin_minus))
    return spin_plus, spin_minus, float(overlap)


def cat_overlap_closed_form(params: ModelParams) -> float:
    """Overlap of the two spin factors at tau0 = T_cl/4, closed form."""
    x = 2.0 * params.n0 * params.lambda_over_a**2
    return math.sqrt(x / (1.0 + x))
