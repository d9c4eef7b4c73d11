"""Qudit clock/shift gates and the exchange-gate decomposition.

A qudit is a d-level system with computational basis |0>, ..., |d-1>.
The two elementary single-qudit operations are the cyclic shift
``sigma1`` (|a> -> |a+1 mod d|) and the clock ``sigma3``
(|a> -> zeta^a |a>, zeta = exp(2*pi*i/d)); together with the reverse gate
K (|a> -> |d-a mod d>) and the two controlled shifts they generate the
two-qudit exchange (swap) gate:

    S = C_Sigma (K x 1) C~_Sigma (K x 1) C_Sigma (1 x K)

with the rightmost factor applied first. ``swap_composed`` builds that
product from the elementary gates and ``swap_direct`` builds S from its
definition; the two agree entrywise, which the verification suite checks
exactly for d up to 16. At d = 2 the reverse gate is the identity and the
product degenerates to the familiar three-controlled-NOT construction.

Two related questions are, to our knowledge, open and out of scope here:
whether single-qudit universality plus controlled shifts suffices to build
every controlled-unitary gate, and whether it generates all of U(d^2).
``controlled_unitary`` is provided only as a building block for exploring
them.

All permutation-valued gates are built with exact 0/1 entries, so identity
checks on them hold with zero tolerance in float arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import _levels, is_unitary, tensor_op

__all__ = [
    "QuditGate",
    "controlled_shift",
    "controlled_shift_reversed",
    "controlled_unitary",
    "conjugated_controlled_unitary",
    "reverse_gate",
    "sigma1",
    "sigma3",
    "swap_composed",
    "swap_direct",
]


@dataclass(frozen=True)
class QuditGate:
    """A named gate on one or two qudits: level count, dense matrix, label."""

    d: int
    matrix: np.ndarray
    label: str

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"gate matrix must be square, got {m.shape}")
        if m.shape[0] not in (self.d, self.d * self.d):
            raise ValueError(
                f"gate matrix dim {m.shape[0]} is neither d={self.d} nor d^2"
            )
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def apply(self, state) -> np.ndarray:
        return self.matrix @ np.asarray(state, dtype=complex)


def sigma1(d) -> QuditGate:
    """Cyclic shift: |a> -> |a+1 mod d>. Reduces to Pauli X at d=2."""
    n = _levels(d)
    m = np.zeros((n, n))
    for a in range(n):
        m[(a + 1) % n, a] = 1.0
    return QuditGate(n, m, "sigma1")


def sigma3(d) -> QuditGate:
    """Clock gate diag(1, zeta, ..., zeta^(d-1)). Reduces to Pauli Z at d=2."""
    n = _levels(d)
    return QuditGate(n, np.diag(np.exp(2j * np.pi * np.arange(n) / n)), "sigma3")


def reverse_gate(d) -> QuditGate:
    """Reverse gate K: fixes |0> and maps |a> -> |d-a> otherwise.

    An involution; the identity at d=2.
    """
    n = _levels(d)
    m = np.zeros((n, n))
    for a in range(n):
        m[(n - a) % n, a] = 1.0
    return QuditGate(n, m, "k")


def controlled_shift(d) -> QuditGate:
    """Controlled shift C_Sigma: |a> (x) |b> -> |a> (x) |a+b mod d>.

    The first qudit controls, the second is the target; setting b=0 clones
    the computational basis. The d=2 case is controlled-NOT.
    """
    n = _levels(d)
    m = np.zeros((n * n, n * n))
    for a in range(n):
        for b in range(n):
            m[a * n + (a + b) % n, a * n + b] = 1.0
    return QuditGate(n, m, "cshift")


def controlled_shift_reversed(d) -> QuditGate:
    """Controlled shift with the roles swapped: |a> (x) |b> -> |a+b> (x) |b>."""
    n = _levels(d)
    m = np.zeros((n * n, n * n))
    for a in range(n):
        for b in range(n):
            m[((a + b) % n) * n + b, a * n + b] = 1.0
    return QuditGate(n, m, "cshift-rev")


def swap_direct(d) -> QuditGate:
    """Exchange gate from its definition: index a*d+b -> b*d+a."""
    n = _levels(d)
    m = np.zeros((n * n, n * n))
    for a in range(n):
        for b in range(n):
            m[b * n + a, a * n + b] = 1.0
    return QuditGate(n, m, "swap")


def swap_composed(d) -> QuditGate:
    """Exchange gate assembled from controlled shifts and reverse gates.

    Computes C_Sigma (K x 1) C~_Sigma (K x 1) C_Sigma (1 x K) as a matrix
    product, rightmost factor acting first. Agrees entrywise with
    swap_direct; products of 0/1 permutation matrices are exact in floats.
    """
    n = _levels(d)
    cs = controlled_shift(n).matrix
    csr = controlled_shift_reversed(n).matrix
    k = reverse_gate(n).matrix
    eye = np.eye(n)
    k1 = tensor_op(k, eye)
    m = cs @ k1 @ csr @ k1 @ cs @ tensor_op(eye, k)
    return QuditGate(n, m, "swap-composed")


def controlled_unitary(u, d=None) -> QuditGate:
    """Controlled-U gate: |a> (x) |b> -> |a> (x) U^a |b> for U in U(d).

    Block-diagonal with blocks U^0, U^1, ..., U^(d-1); powers are built by
    repeated multiplication. Rejects non-unitary U.
    """
    u = np.asarray(u, dtype=complex)
    n = _levels(d) if d is not None else u.shape[0]
    if u.shape != (n, n):
        raise ValueError(f"control matrix must be {n}x{n}, got {u.shape}")
    if not is_unitary(u, 1e-12):
        raise ValueError("controlled_unitary requires a unitary control matrix")
    m = np.zeros((n * n, n * n), dtype=complex)
    power = np.eye(n, dtype=complex)
    for a in range(n):
        m[a * n : (a + 1) * n, a * n : (a + 1) * n] = power
        power = u @ power
    return QuditGate(n, m, "controlled-unitary")


def conjugated_controlled_unitary(u, d=None) -> QuditGate:
    """S C_U S, which retargets the control: |a> (x) |b> -> U^b |a> (x) |b>.

    The returned matrix is the conjugation product; it is cross-checked
    against the directly assembled action before being handed back.
    """
    u = np.asarray(u, dtype=complex)
    n = _levels(d) if d is not None else u.shape[0]
    cu = controlled_unitary(u, n)
    s = swap_direct(n).matrix
    m = s @ cu.matrix @ s

    direct = np.zeros((n * n, n * n), dtype=complex)
    power = np.eye(n, dtype=complex)
    for b in range(n):
        direct[b::n, b::n] = power
        power = u @ power
    if np.max(np.abs(m - direct)) > 1e-12:
        raise AssertionError(
            "S C_U S does not act as |a>(x)|b> -> U^b|a>(x)|b>"
        )
    return QuditGate(n, m, "conjugated-controlled-unitary")
