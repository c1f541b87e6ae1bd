import numpy as np
import pytest

from twoqubit import DEFAULT_TOL, Tolerance, ValidationError, eig4_unitary, kron, svd4
from twoqubit.gates import IDENTITY2, SIGMA_X, SIGMA_Z, Q_MAGIC, catalog, su4_normalize
from twoqubit.sampling import haar_unitary


def test_tolerance_defaults():
    assert DEFAULT_TOL.unitarity_tol == 1e-10
    assert DEFAULT_TOL.zero_tol == 1e-8
    assert DEFAULT_TOL.eig_tol == 1e-9


@pytest.mark.parametrize("field", ["unitarity_tol", "zero_tol", "eig_tol"])
def test_tolerance_must_be_positive(field):
    with pytest.raises(ValidationError):
        Tolerance(**{field: 0.0})


def test_kron_identity():
    assert np.array_equal(kron(IDENTITY2, IDENTITY2), np.eye(4))


def test_kron_pauli_products():
    xx = kron(SIGMA_X, SIGMA_X)
    assert np.array_equal(xx, np.fliplr(np.eye(4)))
    zz = kron(SIGMA_Z, SIGMA_Z)
    assert np.array_equal(zz, np.diag([1, -1, -1, 1]))


def test_kron_mixed_product_rule(rng):
    a, b = haar_unitary(rng, 2), haar_unitary(rng, 2)
    c, d = haar_unitary(rng, 2), haar_unitary(rng, 2)
    assert np.allclose(kron(a, b) @ kron(c, d), kron(a @ c, b @ d), atol=1e-14)


def test_kron_bilinear(rng):
    a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    b = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    c = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    assert np.allclose(kron(a, 2 * b + c), 2 * kron(a, b) + kron(a, c), atol=1e-14)


def test_svd4_identity():
    s, left, right = svd4(np.eye(4))
    assert np.allclose(s, 1.0, atol=1e-15)


def test_svd4_diagonal():
    s, left, right = svd4(np.diag([3.0, 2.0, 1.0, 0.0]))
    assert np.allclose(s, [3, 2, 1, 0], atol=1e-15)


def test_svd4_unitary_singular_values(rng):
    # unitarity forces unit singular values; check the precondition first
    for _ in range(50):
        u = haar_unitary(rng, 4)
        assert np.linalg.norm(u.conj().T @ u - np.eye(4)) < 1e-13
        s, _, _ = svd4(u)
        assert np.max(np.abs(s - 1.0)) <= 1e-12


def test_svd4_reconstruction(rng):
    for _ in range(50):
        m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        s, left, right = svd4(m)
        rebuilt = left @ np.diag(s) @ right.conj().T
        bound = 1e-12 * max(1.0, np.linalg.norm(m))
        assert np.linalg.norm(rebuilt - m) <= bound
        assert np.all(np.diff(s) <= 0)


def test_svd4_rejects_nonfinite():
    m = np.eye(4, dtype=complex)
    m[0, 0] = np.nan
    with pytest.raises(ValidationError):
        svd4(m)


def test_eig4_unitary_identity():
    phases, _ = eig4_unitary(np.eye(4))
    assert np.allclose(phases, 0.0, atol=1e-15)


def test_eig4_unitary_diagonal_phases_sorted():
    phases, vecs = eig4_unitary(np.diag([1j, -1j, 1, -1]))
    # principal value in (-pi, pi], descending: -1 sits at +pi
    assert np.allclose(phases, [np.pi, np.pi / 2, 0.0, -np.pi / 2], atol=1e-15)
    m = np.diag([1j, -1j, 1, -1])
    assert np.allclose(m @ vecs, vecs * np.exp(1j * phases), atol=1e-12)


def test_eig4_unitary_cnot_bell_matrix():
    # spectrum of M(U) for the det-normalized CNOT; the independent oracle
    # is the characteristic polynomial, solved via np.roots
    u = su4_normalize(catalog("cnot")).matrix
    ub = Q_MAGIC.T @ u @ Q_MAGIC
    m = ub.T @ ub
    phases, _ = eig4_unitary(m)
    assert np.allclose(np.sort(phases), [-np.pi / 2, -np.pi / 2, np.pi / 2, np.pi / 2], atol=1e-12)
    root_phases = np.sort(np.angle(np.roots(np.poly(m))))
    assert np.allclose(root_phases, np.sort(phases), atol=1e-9)


def test_eig4_unitary_residual(rng):
    for _ in range(50):
        m = haar_unitary(rng, 4)
        phases, vecs = eig4_unitary(m)
        residual = np.linalg.norm(m @ vecs - vecs * np.exp(1j * phases), axis=0)
        assert np.max(residual) <= DEFAULT_TOL.eig_tol


def test_eig4_unitary_rejects_nonunitary():
    with pytest.raises(ValidationError):
        eig4_unitary(np.diag([1.0, 1.0, 1.0, 2.0]))
