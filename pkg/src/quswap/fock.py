"""Truncated two-mode Fock-space simulator.

A single oscillator mode is truncated to the number basis
|0>, ..., |n_max>; two modes live on the (n_max+1)^2 Kronecker product
with |n1> (x) |n2> at index n1*(n_max+1) + n2. The annihilation operator
keeps its exact matrix elements sqrt(n) and the creation operator is its
exact transpose, so a^dag |n_max> = 0 under truncation. Consequences of
the cutoff (commutators failing on the boundary row, coherent states
losing tail weight) are quantified rather than hidden: identities are
checked on documented interior subspaces and truncated coherent states
are renormalized with the removed weight reported.

The naive label shift |n> -> |n+1> on this basis is not unitary (its
matrix has a zero column), so there is no direct analog of the qudit
controlled-shift construction here. Instead the exchange of two modes is
realized with quantum-optics elements: the number-conserving beamsplitter

    U_J(t) = exp(t a1^dag a2 - conj(t) a2^dag a1),  t = |t| e^(i theta),

which at |t| = pi/2 maps |z1> (x) |z2> to |e^(i theta) z2> (x)
|e^(-i(theta+pi)) z1>, followed by the phase rotations V1(-theta) and
V2(theta+pi) that strip the leftover phases. The resulting fixed unitary
exchanges arbitrary coherent-state pairs, hence by linearity arbitrary
states. A partially open beamsplitter instead splits |z> (x) |0> into
|cos|t| z> (x) |sin|t| z> ("imperfect clone"); its action on a general
first-mode state has the closed form implemented in
``imperfect_clone_closed_form``, which serves as an independent oracle
for the matrix route.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.stats import poisson

from .core import mat_exp, tensor_op, tensor_state

__all__ = [
    "BeamsplitterParam",
    "FockCutoff",
    "ModeOperator",
    "TruncationWarning",
    "annihilation",
    "beamsplitter",
    "beamsplitter_blockwise",
    "coherent_state",
    "coherent_truncation_weight",
    "creation",
    "displacement",
    "exchange_protocol",
    "imperfect_clone_closed_form",
    "imperfect_clone_numeric",
    "level_projector",
    "mode2_marginal",
    "number",
    "phase_op",
    "schwinger_su2",
    "squeeze",
    "su11_generators",
    "total_number_projector",
]


class TruncationWarning(UserWarning):
    """Emitted when an input is too large for the requested cutoff."""


@dataclass(frozen=True)
class FockCutoff:
    """Truncation level: single-mode basis |0>..|n_max>, two-mode dim (n_max+1)^2."""

    n_max: int

    def __post_init__(self) -> None:
        if self.n_max < 1:
            raise ValueError(f"cutoff must be >= 1, got {self.n_max}")

    @property
    def dim(self) -> int:
        return self.n_max + 1

    @property
    def dim2(self) -> int:
        return (self.n_max + 1) ** 2


def _cutoff(c) -> FockCutoff:
    return c if isinstance(c, FockCutoff) else FockCutoff(int(c))


@dataclass(frozen=True)
class ModeOperator:
    """A labeled operator on the truncated one- or two-mode space."""

    cutoff: FockCutoff
    matrix: np.ndarray
    label: str

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape not in ((self.cutoff.dim, self.cutoff.dim),
                           (self.cutoff.dim2, self.cutoff.dim2)):
            raise ValueError(
                f"operator shape {m.shape} fits neither one nor two modes "
                f"at n_max={self.cutoff.n_max}"
            )
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def apply(self, state) -> np.ndarray:
        return self.matrix @ np.asarray(state, dtype=complex)


@dataclass(frozen=True)
class BeamsplitterParam:
    """Complex beamsplitter strength t = |t| e^(i theta); |t| is in radians."""

    t: complex

    def __post_init__(self) -> None:
        t = complex(self.t)
        if not (math.isfinite(t.real) and math.isfinite(t.imag)):
            raise ValueError("beamsplitter parameter must be finite")
        object.__setattr__(self, "t", t)

    @property
    def modulus(self) -> float:
        return abs(self.t)

    @property
    def phase(self) -> float:
        return float(np.angle(self.t)) if self.t != 0 else 0.0


def _param(t) -> BeamsplitterParam:
    return t if isinstance(t, BeamsplitterParam) else BeamsplitterParam(complex(t))


def annihilation(cutoff) -> ModeOperator:
    """a|n> = sqrt(n)|n-1>; superdiagonal sqrt(1..n_max)."""
    c = _cutoff(cutoff)
    return ModeOperator(c, np.diag(np.sqrt(np.arange(1, c.dim)), k=1), "a")


def creation(cutoff) -> ModeOperator:
    """a^dag|n> = sqrt(n+1)|n+1>, truncated so a^dag|n_max> = 0.

    The exact transpose of ``annihilation``; not unitary, and not a
    substitute for the qudit shift gate.
    """
    c = _cutoff(cutoff)
    return ModeOperator(c, np.diag(np.sqrt(np.arange(1, c.dim)), k=-1), "adag")


def number(cutoff) -> ModeOperator:
    """N = a^dag a = diag(0, 1, ..., n_max), exactly."""
    c = _cutoff(cutoff)
    return ModeOperator(c, np.diag(np.arange(c.dim)).astype(complex), "n")


def coherent_truncation_weight(z: complex, cutoff) -> float:
    """Probability weight of |z> above the cutoff: 1 - sum_{n<=n_max} e^-|z|^2 |z|^2n / n!.

    Computed as a Poisson tail so that tiny weights are not lost to
    cancellation.
    """
    c = _cutoff(cutoff)
    return float(poisson.sf(c.n_max, abs(z) ** 2))


def coherent_state(z: complex, cutoff) -> np.ndarray:
    """Truncated coherent state with amplitudes e^(-|z|^2/2) z^n / sqrt(n!).

    Renormalized to unit norm after truncation. Warns (TruncationWarning)
    when |z|^2 exceeds n_max/4 or when the discarded tail weight exceeds
    1e-8; use ``coherent_truncation_weight`` to inspect the tail.
    """
    c = _cutoff(cutoff)
    z = complex(z)
    weight = coherent_truncation_weight(z, c)
    if abs(z) ** 2 > c.n_max / 4 or weight > 1e-8:
        warnings.warn(
            f"coherent state z={z} at n_max={c.n_max} loses weight "
            f"{weight:.3e} to truncation",
            TruncationWarning,
            stacklevel=2,
        )
    amp = np.zeros(c.dim, dtype=complex)
    amp[0] = math.exp(-abs(z) ** 2 / 2)
    for n in range(1, c.dim):
        amp[n] = amp[n - 1] * z / math.sqrt(n)
    norm = np.linalg.norm(amp)
    if norm == 0.0:
        # entire state above the cutoff; the vacuum coefficient underflowed
        raise ValueError(f"coherent amplitude underflow for z={z}")
    return amp / norm


def displacement(z: complex, cutoff) -> ModeOperator:
    """D(z) = exp(z a^dag - conj(z) a); D(z)|0> is the coherent state |z>.

    The truncated generator is exactly antihermitian, so D(z) is unitary on
    the whole truncated space.
    """
    c = _cutoff(cutoff)
    a = annihilation(c).matrix
    gen = z * a.conj().T - np.conj(z) * a
    return ModeOperator(c, mat_exp(gen), "displacement")


def su11_generators(cutoff) -> tuple[ModeOperator, ModeOperator, ModeOperator]:
    """Single-mode su(1,1) triple K+ = (a^dag)^2/2, K- = a^2/2, K3 = (a^dag a + 1/2)/2.

    The relations [K3, K+-] = +-K+- and [K+, K-] = -2 K3 hold exactly on
    the interior levels n <= n_max - 2.
    """
    c = _cutoff(cutoff)
    a = annihilation(c).matrix
    adag = a.conj().T
    kp = adag @ adag / 2
    km = a @ a / 2
    k3 = (adag @ a + np.eye(c.dim) / 2) / 2
    return (
        ModeOperator(c, kp, "K+"),
        ModeOperator(c, km, "K-"),
        ModeOperator(c, k3, "K3"),
    )


def squeeze(w: complex, cutoff) -> ModeOperator:
    """Squeeze operator S(w) = exp(w K+ - conj(w) K-).

    Acting on the vacuum it populates even levels only. Warns when |w| > 1,
    where the truncated matrix no longer approximates the untruncated one
    well.
    """
    c = _cutoff(cutoff)
    if abs(w) > 1:
        warnings.warn(
            f"squeeze parameter |w|={abs(w):.3f} > 1 is poorly represented "
            f"at finite cutoff",
            TruncationWarning,
            stacklevel=2,
        )
    kp, km, _ = su11_generators(c)
    return ModeOperator(c, mat_exp(w * kp.matrix - np.conj(w) * km.matrix), "squeeze")


def _mode_ops(c: FockCutoff) -> tuple[np.ndarray, np.ndarray]:
    """Two-mode annihilation pair a1 = a (x) 1, a2 = 1 (x) a."""
    a = annihilation(c).matrix
    eye = np.eye(c.dim)
    return tensor_op(a, eye), tensor_op(eye, a)


def schwinger_su2(cutoff) -> tuple[ModeOperator, ModeOperator, ModeOperator]:
    """Two-mode su(2) triple J+ = a1^dag a2, J- = a2^dag a1, J3 = (N1 - N2)/2.

    The su(2) relations hold exactly on the subspace of total photon
    number <= n_max.
    """
    c = _cutoff(cutoff)
    a1, a2 = _mode_ops(c)
    jp = a1.conj().T @ a2
    jm = a2.conj().T @ a1
    j3 = (a1.conj().T @ a1 - a2.conj().T @ a2) / 2
    return (
        ModeOperator(c, jp, "J+"),
        ModeOperator(c, jm, "J-"),
        ModeOperator(c, j3, "J3"),
    )


def beamsplitter(t, cutoff) -> ModeOperator:
    """Two-mode beamsplitter U_J(t) = exp(t a1^dag a2 - conj(t) a2^dag a1).

    Conserves total photon number (exactly block-diagonal over it), keeps
    the two-mode vacuum invariant, and rotates the mode operators as

        U a1 U^-1 = cos|t| a1 - (t/|t|) sin|t| a2
        U a2 U^-1 = cos|t| a2 + (conj(t)/|t|) sin|t| a1.

    On blocks of total number <= n_max the truncated matrix agrees with the
    untruncated operator; higher blocks are distorted but still unitary.
    """
    c = _cutoff(cutoff)
    p = _param(t)
    a1, a2 = _mode_ops(c)
    gen = p.t * a1.conj().T @ a2 - np.conj(p.t) * a2.conj().T @ a1
    return ModeOperator(c, mat_exp(gen), "beamsplitter")


def beamsplitter_blockwise(t, cutoff) -> ModeOperator:
    """The same beamsplitter assembled one total-photon-number block at a time.

    Block n carries the spin-(n/2) representation of su(2): with
    m = n1 - n/2, the raising element a1^dag a2 has matrix elements
    sqrt((j - m)(j + m + 1)) = sqrt((n1 + 1) n2). Each block generator is
    exponentiated on its own, making this an independent cross-check for
    the dense-exponential construction. Blocks with n > n_max keep only
    occupations within the cutoff.
    """
    c = _cutoff(cutoff)
    p = _param(t)
    u = np.zeros((c.dim2, c.dim2), dtype=complex)
    for n in range(2 * c.n_max + 1):
        n1s = range(max(0, n - c.n_max), min(n, c.n_max) + 1)
        idx = np.array([n1 * c.dim + (n - n1) for n1 in n1s])
        size = len(idx)
        gen = np.zeros((size, size), dtype=complex)
        for i, n1 in enumerate(list(n1s)[:-1]):
            elem = math.sqrt((n1 + 1) * (n - n1))
            gen[i + 1, i] = p.t * elem
            gen[i, i + 1] = -np.conj(p.t) * elem
        u[np.ix_(idx, idx)] = mat_exp(gen) if size > 1 else np.eye(1)
    return ModeOperator(c, u, "beamsplitter-blockwise")


def phase_op(theta: float, mode: int, cutoff) -> ModeOperator:
    """Two-mode phase rotation V_mode(theta) = exp(i theta N_mode).

    Diagonal with entries e^(i theta n) on the selected mode; sends a
    coherent parameter z to e^(i theta) z.
    """
    c = _cutoff(cutoff)
    if mode not in (1, 2):
        raise ValueError(f"mode must be 1 or 2, got {mode}")
    phases = np.diag(np.exp(1j * theta * np.arange(c.dim)))
    eye = np.eye(c.dim)
    m = tensor_op(phases, eye) if mode == 1 else tensor_op(eye, phases)
    return ModeOperator(c, m, f"phase-mode{mode}")


def exchange_protocol(theta: float, cutoff) -> ModeOperator:
    """Fixed two-mode unitary that swaps the modes, built from optics elements.

    E = [V1(-theta) (x) V2(theta + pi)] . U_J(t) with t = (pi/2) e^(i theta):
    the half-wave beamsplitter maps |z1> (x) |z2> to
    |e^(i theta) z2> (x) |e^(-i(theta+pi)) z1> and the phase rotations strip
    the leftover phases, giving |z2> (x) |z1> for every coherent pair -
    and hence, by linearity, swapping arbitrary two-mode states. E does not
    depend on the states being swapped; theta only selects which
    beamsplitter realizes it.

    At finite cutoff the swap is exact on blocks of total photon number
    <= n_max; inputs with weight above that leak infidelity of the order of
    their truncation weight.
    """
    c = _cutoff(cutoff)
    t = (math.pi / 2) * complex(math.cos(theta), math.sin(theta))
    u = beamsplitter(t, c).matrix
    corrector = phase_op(-theta, 1, c).matrix @ phase_op(theta + math.pi, 2, c).matrix
    return ModeOperator(c, corrector @ u, "exchange")


def _clone_unitary(p: BeamsplitterParam, c: FockCutoff) -> np.ndarray:
    # beamsplitter leaves the second-mode coefficient as -e^(-i theta) sin|t|;
    # V2(theta + pi) turns it into +sin|t|
    u = beamsplitter(p, c).matrix
    return phase_op(p.phase + math.pi, 2, c).matrix @ u


def imperfect_clone_numeric(x, t, cutoff) -> np.ndarray:
    """Split a one-mode state across two modes with a phase-corrected beamsplitter.

    Applies [1 (x) V2(theta + pi)] . U_J(t) to x (x) |0>, which maps the
    coherent state |z> (x) |0> to |cos|t| z> (x) |sin|t| z>. Warns when x
    carries more than 1e-8 weight above n_max/2, where the headroom for the
    split output becomes questionable; the warning reports that weight.
    """
    c = _cutoff(cutoff)
    p = _param(t)
    x = np.asarray(x, dtype=complex)
    if x.ndim != 1 or len(x) > c.dim:
        raise ValueError(f"input state must be a vector of length <= {c.dim}")
    if len(x) < c.dim:
        x = np.pad(x, (0, c.dim - len(x)))
    high = float(np.sum(np.abs(x[c.n_max // 2 + 1 :]) ** 2))
    if high > 1e-8:
        warnings.warn(
            f"clone input carries weight {high:.3e} above n_max/2="
            f"{c.n_max // 2}; output may be truncation-limited",
            TruncationWarning,
            stacklevel=2,
        )
    vacuum = np.zeros(c.dim, dtype=complex)
    vacuum[0] = 1.0
    return _clone_unitary(p, c) @ tensor_state(x, vacuum)


def imperfect_clone_closed_form(x_coeffs, t, cutoff) -> np.ndarray:
    """Closed-form amplitudes of the two-mode split of a one-mode state.

    For input sum_n x_n |n>, the output amplitude on |n> (x) |m> is

        sqrt((n+m)! / (n! m!)) cos^n(|t|) sin^m(|t|) x_{n+m}

    for n + m <= n_max. The binomial identity
    sum_m C(n+m, m) cos^2n sin^2m = 1 per level keeps the output normalized
    whenever the input is. Serves as the independent oracle for
    ``imperfect_clone_numeric``.
    """
    c = _cutoff(cutoff)
    p = _param(t)
    x = np.asarray(x_coeffs, dtype=complex)
    if x.ndim != 1 or len(x) > c.dim:
        raise ValueError(f"coefficients must be a vector of length <= {c.dim}")
    cos_t, sin_t = math.cos(p.modulus), math.sin(p.modulus)
    out = np.zeros(c.dim2, dtype=complex)
    for total in range(min(len(x), c.dim)):
        if x[total] == 0:
            continue
        for n in range(total + 1):
            m = total - n
            coeff = math.sqrt(math.comb(total, n)) * cos_t**n * sin_t**m
            out[n * c.dim + m] = coeff * x[total]
    return out


def level_projector(cutoff, max_level: int) -> np.ndarray:
    """Single-mode diagonal projector onto levels n <= max_level."""
    c = _cutoff(cutoff)
    return np.diag((np.arange(c.dim) <= max_level).astype(complex))


def total_number_projector(cutoff, max_total: int) -> np.ndarray:
    """Two-mode diagonal projector onto total photon number n1 + n2 <= max_total."""
    c = _cutoff(cutoff)
    totals = np.add.outer(np.arange(c.dim), np.arange(c.dim)).ravel()
    return np.diag((totals <= max_total).astype(complex))


def mode2_marginal(state, cutoff) -> np.ndarray:
    """Reduced density matrix of the second mode of a two-mode pure state."""
    c = _cutoff(cutoff)
    v = np.asarray(state, dtype=complex).reshape(c.dim, c.dim)
    return v.T @ v.conj()
