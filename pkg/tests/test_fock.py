import math

import numpy as np
import pytest

from quswap import core, fock


N_MAX = 16
CUT = fock.FockCutoff(N_MAX)


def rand_t(seed):
    rng = np.random.default_rng(seed)
    return rng.uniform(0.1, math.pi) * np.exp(1j * rng.uniform(-math.pi, math.pi))


# ---------------------------------------------------------------------------
# ladder operators
# ---------------------------------------------------------------------------

def test_annihilation_kills_vacuum():
    out = fock.annihilation(CUT).apply(core.basis_state(0, CUT.dim))
    assert np.array_equal(out, np.zeros(CUT.dim))


def test_creation_matrix_elements():
    # adag|3> = 2|4>
    out = fock.creation(CUT).apply(core.basis_state(3, CUT.dim))
    assert np.array_equal(out, 2.0 * core.basis_state(4, CUT.dim))


def test_creation_truncates_top_level():
    out = fock.creation(CUT).apply(core.basis_state(N_MAX, CUT.dim))
    assert np.array_equal(out, np.zeros(CUT.dim))


def test_ladder_operators_are_exact_transposes():
    a = fock.annihilation(CUT).matrix
    adag = fock.creation(CUT).matrix
    assert np.array_equal(a.T, adag)
    assert np.array_equal(a.imag, np.zeros_like(a.imag))


def test_number_operator_is_exact_diagonal():
    n = fock.number(CUT).matrix
    assert np.array_equal(n, np.diag(np.arange(CUT.dim)))


def test_number_ladder_commutators():
    a = fock.annihilation(CUT).matrix
    adag = fock.creation(CUT).matrix
    n = fock.number(CUT).matrix
    assert core.max_abs(core.commutator(n, adag) - adag) <= 1e-13
    assert core.max_abs(core.commutator(n, a) + a) <= 1e-13


def test_canonical_commutator_interior_and_boundary():
    a = fock.annihilation(CUT).matrix
    adag = fock.creation(CUT).matrix
    comm = core.commutator(a, adag)
    interior = fock.level_projector(CUT, N_MAX - 1)
    assert core.max_abs((comm - np.eye(CUT.dim)) @ interior) <= 1e-13
    # the boundary level feels the cutoff: [a, adag]|n_max> = -n_max |n_max>
    top = comm @ core.basis_state(N_MAX, CUT.dim)
    assert top[N_MAX] == pytest.approx(-N_MAX, abs=1e-12)


def test_number_basis_is_orthonormal_and_complete():
    basis = [core.basis_state(j, CUT.dim) for j in range(CUT.dim)]
    gram = np.array([[np.vdot(u, v) for v in basis] for u in basis])
    assert np.array_equal(gram, np.eye(CUT.dim))
    assert np.array_equal(
        sum(np.outer(v, v.conj()) for v in basis), np.eye(CUT.dim)
    )


# ---------------------------------------------------------------------------
# coherent states and displacement
# ---------------------------------------------------------------------------

def test_coherent_vacuum():
    assert np.array_equal(fock.coherent_state(0, CUT), core.basis_state(0, CUT.dim))


def test_coherent_ground_amplitude():
    # before renormalization the n=0 amplitude is e^(-1/2); at this cutoff the
    # discarded tail is far below double precision, so it survives unchanged
    state = fock.coherent_state(1.0, 32)
    assert state[0] == pytest.approx(math.exp(-0.5), abs=1e-12)


def test_coherent_amplitude_series():
    z = 0.6 - 0.4j
    state = fock.coherent_state(z, 32)
    expected = np.array(
        [math.exp(-abs(z) ** 2 / 2) * z**n / math.sqrt(math.factorial(n))
         for n in range(33)]
    )
    assert core.max_abs(state - expected / np.linalg.norm(expected)) <= 1e-12


@pytest.mark.parametrize("z", [0.5, 1.5, -0.8 + 0.9j])
def test_coherent_matches_displaced_vacuum(z):
    via_series = fock.coherent_state(z, 32)
    via_exp = fock.displacement(z, 32).apply(core.basis_state(0, 33))
    assert core.max_abs(via_series - via_exp) <= 1e-10


def test_coherent_state_is_annihilation_eigenvector():
    z = 0.7 + 0.2j
    state = fock.coherent_state(z, 40)
    out = fock.annihilation(40).apply(state)
    assert core.max_abs(out - z * state) <= 1e-10


def test_coherent_warns_beyond_adequacy():
    with pytest.warns(fock.TruncationWarning):
        fock.coherent_state(2.0, 4)


def test_truncation_weight_matches_poisson_tail():
    z, n_max = 1.3, 6
    lam = abs(z) ** 2
    tail = sum(
        math.exp(-lam) * lam**n / math.factorial(n) for n in range(n_max + 1)
    )
    assert fock.coherent_truncation_weight(z, n_max) == pytest.approx(
        1 - tail, abs=1e-12
    )


def test_displacement_identity_and_inverse():
    assert core.max_abs(fock.displacement(0, CUT).matrix - np.eye(CUT.dim)) <= 1e-14
    z = 0.8 - 0.3j
    prod = fock.displacement(z, CUT).matrix @ fock.displacement(-z, CUT).matrix
    assert core.max_abs(prod - np.eye(CUT.dim)) <= 1e-9


def test_displacement_unitary():
    z = math.sqrt(N_MAX) / 4
    assert core.is_unitary(fock.displacement(z, CUT).matrix, 1e-10)


# ---------------------------------------------------------------------------
# squeeze and su(1,1)
# ---------------------------------------------------------------------------

def test_squeeze_identity():
    assert core.max_abs(fock.squeeze(0, CUT).matrix - np.eye(CUT.dim)) <= 1e-14


def test_squeezed_vacuum_has_even_support():
    state = fock.squeeze(0.4, 32).apply(core.basis_state(0, 33))
    assert core.max_abs(state[1::2]) <= 1e-12
    assert np.linalg.norm(state) == pytest.approx(1.0, abs=1e-10)


def test_squeezed_coherent_state_normalized():
    state = fock.squeeze(0.3, 32).apply(
        fock.displacement(0.5, 32).apply(core.basis_state(0, 33))
    )
    assert np.linalg.norm(state) == pytest.approx(1.0, abs=1e-8)


def test_squeeze_warns_beyond_adequacy():
    with pytest.warns(fock.TruncationWarning):
        fock.squeeze(1.5, CUT)


def test_su11_commutators_on_interior():
    kp, km, k3 = (g.matrix for g in fock.su11_generators(CUT))
    interior = fock.level_projector(CUT, N_MAX - 2)
    assert core.max_abs((core.commutator(k3, kp) - kp) @ interior) <= 1e-12
    assert core.max_abs((core.commutator(k3, km) + km) @ interior) <= 1e-12
    assert core.max_abs((core.commutator(kp, km) + 2 * k3) @ interior) <= 1e-12


def test_su11_k3_vacuum_eigenvalue():
    _, _, k3 = fock.su11_generators(CUT)
    out = k3.apply(core.basis_state(0, CUT.dim))
    assert np.array_equal(out, 0.25 * core.basis_state(0, CUT.dim))


# ---------------------------------------------------------------------------
# two modes: Schwinger su(2) and the beamsplitter
# ---------------------------------------------------------------------------

def test_schwinger_su2_commutators_on_bounded_totals():
    jp, jm, j3 = (g.matrix for g in fock.schwinger_su2(CUT))
    bounded = fock.total_number_projector(CUT, N_MAX)
    assert core.max_abs((core.commutator(j3, jp) - jp) @ bounded) <= 1e-12
    assert core.max_abs((core.commutator(j3, jm) + jm) @ bounded) <= 1e-12
    assert core.max_abs((core.commutator(jp, jm) - 2 * j3) @ bounded) <= 1e-12


def test_schwinger_raising_moves_photon():
    jp, _, _ = fock.schwinger_su2(CUT)
    inp = core.tensor_state(core.basis_state(0, CUT.dim), core.basis_state(1, CUT.dim))
    want = core.tensor_state(core.basis_state(1, CUT.dim), core.basis_state(0, CUT.dim))
    assert core.max_abs(jp.apply(inp) - want) <= 1e-15


@pytest.mark.parametrize("seed", range(5))
def test_beamsplitter_keeps_vacuum(seed):
    t = rand_t(seed)
    vac = core.basis_state(0, CUT.dim2)
    assert np.linalg.norm(fock.beamsplitter(t, CUT).apply(vac) - vac) <= 1e-12


def test_beamsplitter_conserves_total_number():
    u = fock.beamsplitter(0.6 * np.exp(0.9j), CUT).matrix
    a1, a2 = fock._mode_ops(CUT)
    n_tot = a1.conj().T @ a1 + a2.conj().T @ a2
    assert core.max_abs(core.commutator(u, n_tot)) <= 1e-12


def test_beamsplitter_is_unitary():
    assert core.is_unitary(fock.beamsplitter(rand_t(3), CUT).matrix, 1e-12)


@pytest.mark.parametrize("seed", range(4))
def test_heisenberg_rotation_of_modes(seed):
    t = rand_t(30 + seed)
    abs_t, phase = abs(t), t / abs(t)
    u = fock.beamsplitter(t, CUT).matrix
    a1, a2 = fock._mode_ops(CUT)
    bounded = fock.total_number_projector(CUT, N_MAX - 1)
    lhs1 = u @ a1 @ u.conj().T
    rhs1 = math.cos(abs_t) * a1 - phase * math.sin(abs_t) * a2
    assert core.max_abs((lhs1 - rhs1) @ bounded) <= 1e-10
    lhs2 = u @ a2 @ u.conj().T
    rhs2 = math.cos(abs_t) * a2 + np.conj(phase) * math.sin(abs_t) * a1
    assert core.max_abs((lhs2 - rhs2) @ bounded) <= 1e-10


def test_beamsplitter_splits_coherent_state():
    # U_J sends |z> (x) |0> to |c z> (x) |-e^(-i theta) s z>
    z, t = 0.9, 0.7 * np.exp(0.5j)
    c, s, theta = math.cos(abs(t)), math.sin(abs(t)), np.angle(t)
    out = fock.beamsplitter(t, 32).apply(
        core.tensor_state(fock.coherent_state(z, 32), core.basis_state(0, 33))
    )
    want = core.tensor_state(
        fock.coherent_state(c * z, 32),
        fock.coherent_state(-np.exp(-1j * theta) * s * z, 32),
    )
    assert core.fidelity(want, out) >= 1 - 1e-10


# ---------------------------------------------------------------------------
# blockwise beamsplitter oracle
# ---------------------------------------------------------------------------

def test_blockwise_vacuum_block_is_trivial():
    u = fock.beamsplitter_blockwise(rand_t(8), CUT).matrix
    assert u[0, 0] == 1.0


def test_blockwise_single_photon_block_is_rotation():
    # basis within the block ordered by rising first-mode occupation:
    # [(0,1), (1,0)]; columns follow from the mode rotation identities
    t = 0.8
    u = fock.beamsplitter_blockwise(t, CUT).matrix
    i01, i10 = 1, CUT.dim
    block = np.array([[u[i01, i01], u[i01, i10]], [u[i10, i01], u[i10, i10]]])
    want = np.array(
        [[math.cos(t), -math.sin(t)], [math.sin(t), math.cos(t)]]
    )
    assert core.max_abs(block - want) <= 1e-12


@pytest.mark.parametrize("seed", range(4))
def test_blockwise_matches_dense_exponential(seed):
    t = rand_t(50 + seed)
    dense = fock.beamsplitter(t, CUT).matrix
    blocks = fock.beamsplitter_blockwise(t, CUT).matrix
    assert core.max_abs(dense - blocks) <= 1e-10


def test_blockwise_blocks_are_unitary():
    assert core.is_unitary(fock.beamsplitter_blockwise(rand_t(9), CUT).matrix, 1e-12)


# ---------------------------------------------------------------------------
# phase operators
# ---------------------------------------------------------------------------

def test_phase_op_identity_and_period():
    assert np.array_equal(fock.phase_op(0.0, 1, CUT).matrix, np.eye(CUT.dim2))
    full_turn = fock.phase_op(2 * math.pi, 2, CUT).matrix
    assert core.max_abs(full_turn - np.eye(CUT.dim2)) <= 1e-12


def test_phase_op_equals_exponential_of_number():
    theta = 0.37
    a1, a2 = fock._mode_ops(CUT)
    for mode, aj in ((1, a1), (2, a2)):
        direct = fock.phase_op(theta, mode, CUT).matrix
        via_exp = core.mat_exp(1j * theta * aj.conj().T @ aj)
        assert core.max_abs(direct - via_exp) <= 1e-12


def test_phase_op_rotates_coherent_parameter():
    theta, alpha = 1.1, 0.8 - 0.2j
    spectator = fock.coherent_state(0.3, 32)
    inp = core.tensor_state(fock.coherent_state(alpha, 32), spectator)
    out = fock.phase_op(theta, 1, 32).apply(inp)
    want = core.tensor_state(
        fock.coherent_state(np.exp(1j * theta) * alpha, 32), spectator
    )
    assert core.max_abs(out - want) <= 1e-10


def test_phase_op_rejects_bad_mode():
    with pytest.raises(ValueError):
        fock.phase_op(0.1, 3, CUT)


# ---------------------------------------------------------------------------
# unitarity of every unitary constructor
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "build",
    [
        lambda: fock.displacement(0.9 - 0.4j, CUT),
        lambda: fock.squeeze(0.45j, CUT),
        lambda: fock.beamsplitter(1.2 * np.exp(0.8j), CUT),
        lambda: fock.beamsplitter_blockwise(1.2 * np.exp(0.8j), CUT),
        lambda: fock.phase_op(2.3, 1, CUT),
        lambda: fock.phase_op(-0.7, 2, CUT),
        lambda: fock.exchange_protocol(0.9, CUT),
    ],
)
def test_unitary_constructors_are_unitary(build):
    op = build()
    assert core.is_unitary(op.matrix, 1e-12), op.label


# ---------------------------------------------------------------------------
# type guards
# ---------------------------------------------------------------------------

def test_cutoff_validation():
    with pytest.raises(ValueError):
        fock.FockCutoff(0)
    assert fock.FockCutoff(4).dim == 5
    assert fock.FockCutoff(4).dim2 == 25


def test_beamsplitter_param():
    p = fock.BeamsplitterParam(0.5 * np.exp(1j * 0.25))
    assert p.modulus == pytest.approx(0.5)
    assert p.phase == pytest.approx(0.25)
    assert fock.BeamsplitterParam(-2.0).phase == pytest.approx(math.pi)
    with pytest.raises(ValueError):
        fock.BeamsplitterParam(complex("inf"))


def test_mode_operator_validates_shape():
    with pytest.raises(ValueError):
        fock.ModeOperator(fock.FockCutoff(3), np.eye(5), "bad")
