#!/usr/bin/env python3
"""Split one mode across two with a beamsplitter: the "imperfect clone".

A beamsplitter of strength |t| maps |z> (x) |0> to
|cos|t| z> (x) |sin|t| z> after a phase correction on the second mode:
both outputs inherit the shape of the input with scaled amplitude. For a
general input sum_n x_n |n> the output amplitudes have the closed form

    c_{n,m} = sqrt((n+m)! / (n! m!)) cos^n(|t|) sin^m(|t|) x_{n+m},

which this script compares against the matrix route on a coherent state, a
Fock state, and a random state.
"""

import math

import numpy as np

from quswap import (
    basis_state,
    coherent_state,
    fidelity,
    imperfect_clone_closed_form,
    imperfect_clone_numeric,
    mode2_marginal,
)


def main():
    n_max = 20
    dim = n_max + 1
    t_abs = math.pi / 4  # balanced: cos = sin = 1/sqrt(2)

    print("Coherent input z = 0.8, balanced beamsplitter")
    z = 0.8
    out = imperfect_clone_numeric(coherent_state(z, n_max), t_abs, n_max)
    half = coherent_state(z / math.sqrt(2), n_max)
    rho2 = mode2_marginal(out, n_max)
    rho1 = mode2_marginal(out.reshape(dim, dim).T.ravel(), n_max)
    print(f"  mode-1 marginal vs |z/sqrt2>: {np.real(np.vdot(half, rho1 @ half)):.12f}")
    print(f"  mode-2 marginal vs |z/sqrt2>: {np.real(np.vdot(half, rho2 @ half)):.12f}")

    print("\nSingle photon |1> splits into (|1,0> + |0,1>)/sqrt(2):")
    out = imperfect_clone_numeric(basis_state(1, dim), t_abs, n_max)
    print(f"  amplitude on |1,0>: {out[1 * dim + 0].real:+.6f}")
    print(f"  amplitude on |0,1>: {out[0 * dim + 1].real:+.6f}")

    print("\nRandom input, matrix route vs closed form:")
    rng = np.random.default_rng(4)
    x = np.zeros(dim, dtype=complex)
    x[:8] = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    x /= np.linalg.norm(x)
    for strength in (0.3, t_abs, 1.2):
        numeric = imperfect_clone_numeric(x, strength, n_max)
        closed = imperfect_clone_closed_form(x, strength, n_max)
        print(
            f"  |t| = {strength:.4f}: fidelity {fidelity(closed, numeric):.15f}, "
            f"closed-form norm {np.linalg.norm(closed):.15f}"
        )

    print("\nNeither output is a true copy: each mode only carries the input")
    print("shape with amplitude scaled by cos or sin of the strength.")


if __name__ == "__main__":
    main()
