"""Dense linear algebra for Pauli transfer matrices (PTMs).

Conventions used throughout the package:

* Basis elements are the n-fold Pauli tensor products divided by sqrt(2^n),
  so they are orthonormal under the Hilbert-Schmidt inner product and the
  identity-proportional element comes first.
* A channel's PTM is the real matrix ``R[a, b] = Tr(B_a channel(B_b))``.
  Circuit action is plain matrix multiplication; trace-preserving channels
  have first row ``(1, 0, ..., 0)``.
* States are column vectors ``rho[a] = Tr(B_a rho)`` and measurement effects
  are row vectors of the same components, so probabilities are dot products.

All functions here are pure and operate on plain numpy arrays.
"""

from __future__ import annotations

import functools
import itertools

import numpy as np
import scipy.linalg

from .errors import IndefiniteMatrixError, InvalidArgumentError

PAULI_1Q = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def pauli_strings(n_qubits: int) -> list[str]:
    """All length-n Pauli strings in lexicographic (I, X, Y, Z) order."""
    return ["".join(p) for p in itertools.product("IXYZ", repeat=n_qubits)]


def pauli_matrix(label: str) -> np.ndarray:
    """Unnormalized tensor product of single-qubit Paulis, e.g. ``"ZX"``."""
    out = np.array([[1.0 + 0j]])
    for ch in label:
        out = np.kron(out, PAULI_1Q[ch])
    return out


class PauliBasis:
    """Orthonormal Hermitian basis sigma_a / sqrt(2^n) for n-qubit operators.

    Attributes
    ----------
    n_qubits : int
    labels : list of Pauli strings, ``labels[0] == "I" * n_qubits``
    elements : complex array of shape (4^n, 2^n, 2^n)
    """

    def __init__(self, n_qubits: int):
        if n_qubits < 1:
            raise InvalidArgumentError(f"n_qubits must be >= 1, got {n_qubits}")
        self.n_qubits = n_qubits
        self.dim = 4**n_qubits
        self.hilbert_dim = 2**n_qubits
        self.labels = pauli_strings(n_qubits)
        norm = 1.0 / np.sqrt(self.hilbert_dim)
        self.elements = np.stack([pauli_matrix(s) * norm for s in self.labels])
        # Flattened conjugates, used to expand operators in one matmul.
        self._flat_conj = self.elements.conj().reshape(self.dim, -1)

    def expand(self, op: np.ndarray) -> np.ndarray:
        """Components ``Tr(B_a op)``; real for Hermitian ``op``."""
        return self._flat_conj @ np.asarray(op, dtype=complex).reshape(-1)

    def expand_real(self, op: np.ndarray) -> np.ndarray:
        return np.real(self.expand(op))

    def reconstruct(self, components: np.ndarray) -> np.ndarray:
        """Inverse of :meth:`expand`."""
        return np.tensordot(components, self.elements, axes=(0, 0))


@functools.lru_cache(maxsize=8)
def pauli_basis(n_qubits: int) -> PauliBasis:
    return PauliBasis(n_qubits)


def _check_square(A: np.ndarray, name: str = "matrix") -> np.ndarray:
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise InvalidArgumentError(f"{name} must be square, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise InvalidArgumentError(f"{name} contains non-finite entries")
    return A


def matrix_exp(A: np.ndarray) -> np.ndarray:
    """Matrix exponential of a real square matrix (scaling-and-squaring)."""
    A = _check_square(A, "matrix_exp argument")
    return scipy.linalg.expm(A)


def frechet_derivative_exp(A: np.ndarray, E: np.ndarray) -> np.ndarray:
    """Directional derivative ``d/dt exp(A + t E)`` at ``t = 0``.

    Computed from the block identity: the upper-right block of
    ``exp([[A, E], [0, A]])`` is the derivative.
    """
    A = _check_square(A, "frechet base point")
    E = _check_square(E, "frechet direction")
    if A.shape != E.shape:
        raise InvalidArgumentError(
            f"dimension mismatch: {A.shape} vs {E.shape}"
        )
    n = A.shape[0]
    block = np.zeros((2 * n, 2 * n))
    block[:n, :n] = A
    block[:n, n:] = E
    block[n:, n:] = A
    return scipy.linalg.expm(block)[:n, n:]


def exp_and_frechet_stack(A: np.ndarray, directions: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """``exp(A)`` together with its Fréchet derivatives along many directions.

    Builds the block matrices for all directions and exponentiates them in a
    single batched call; returns ``(exp(A), stack)`` with ``stack[j]`` the
    derivative along ``directions[j]``.
    """
    A = np.asarray(A, dtype=float)
    directions = np.asarray(directions, dtype=float)
    n = A.shape[0]
    k = directions.shape[0]
    blocks = np.zeros((k, 2 * n, 2 * n))
    blocks[:, :n, :n] = A
    blocks[:, n:, n:] = A
    blocks[:, :n, n:] = directions
    if k == 0:
        return scipy.linalg.expm(A), np.zeros((0, n, n))
    big = scipy.linalg.expm(blocks)
    return big[0, :n, :n].copy(), big[:, :n, n:].copy()


def _check_symmetric(S: np.ndarray, tol: float, name: str) -> np.ndarray:
    S = _check_square(S, name)
    if np.max(np.abs(S - S.T)) > tol:
        raise InvalidArgumentError(f"{name} is not symmetric to {tol:g}")
    return S


def pseudo_inverse(S: np.ndarray, rel_tol: float = 1e-12) -> np.ndarray:
    """Moore-Penrose pseudo-inverse of a symmetric matrix.

    Eigenvalues with magnitude below ``rel_tol`` times the largest magnitude
    are treated as exact zeros.
    """
    S = _check_symmetric(S, 1e-10, "pseudo_inverse argument")
    w, V = np.linalg.eigh((S + S.T) / 2.0)
    cutoff = rel_tol * np.max(np.abs(w)) if w.size else 0.0
    inv_w = np.where(np.abs(w) > cutoff, 1.0 / np.where(w == 0, 1.0, w), 0.0)
    return (V * inv_w) @ V.T


def matrix_sqrt_psd(P: np.ndarray) -> np.ndarray:
    """Symmetric PSD square root; eigenvalues in [-1e-10, 0) are clipped."""
    P = _check_symmetric(P, 1e-10, "matrix_sqrt_psd argument")
    w, V = np.linalg.eigh((P + P.T) / 2.0)
    if w.size and w.min() < -1e-6:
        raise IndefiniteMatrixError(
            f"matrix has eigenvalue {w.min():.3e}; not PSD"
        )
    w = np.clip(w, 0.0, None)
    return (V * np.sqrt(w)) @ V.T


def trace_sqrt_psd(P: np.ndarray) -> float:
    """Trace of the PSD square root (sum of sqrt of clipped eigenvalues)."""
    w = np.linalg.eigvalsh((P + P.T) / 2.0)
    return float(np.sum(np.sqrt(np.clip(w, 0.0, None))))


def choi_matrix(G: np.ndarray) -> np.ndarray:
    """Choi matrix of a PTM, normalized to unit trace for a TP channel.

    ``J = sum_ab R[a,b] B_a (x) B_b^T / 2^n``; complete positivity of the
    channel is equivalent to ``J >= 0``.
    """
    G = np.asarray(G, dtype=float)
    dim = G.shape[0]
    n = int(round(np.log(dim) / np.log(4)))
    if 4**n != dim or G.shape != (dim, dim):
        raise InvalidArgumentError(f"PTM must be 4^n x 4^n, got {G.shape}")
    basis = pauli_basis(n)
    d = basis.hilbert_dim
    J = np.zeros((d * d, d * d), dtype=complex)
    for a in range(dim):
        row = G[a]
        nz = np.nonzero(row)[0]
        for b in nz:
            J += row[b] * np.kron(basis.elements[a], basis.elements[b].T)
    return J / d


def check_cptp(G: np.ndarray, tol: float = 1e-9) -> tuple[bool, float]:
    """Whether a PTM is completely positive and trace preserving.

    Returns ``(ok, min_choi_eigenvalue)``. TP is checked on the first row,
    CP on the spectrum of the Choi matrix.
    """
    G = np.asarray(G, dtype=float)
    J = choi_matrix(G)
    min_eig = float(np.linalg.eigvalsh((J + J.conj().T) / 2.0)[0])
    first_row = np.zeros(G.shape[0])
    first_row[0] = 1.0
    tp_ok = bool(np.max(np.abs(G[0] - first_row)) <= tol)
    return (min_eig >= -tol) and tp_ok, min_eig


def ptm_of_unitary(U: np.ndarray, n_qubits: int) -> np.ndarray:
    """PTM of the channel ``rho -> U rho U^dag``; a real orthogonal matrix."""
    basis = pauli_basis(n_qubits)
    U = np.asarray(U, dtype=complex)
    # column b: expansion of U B_b U^dag
    cols = np.stack(
        [basis.expand_real(U @ B @ U.conj().T) for B in basis.elements], axis=1
    )
    return cols


def state_to_vec(rho: np.ndarray, n_qubits: int) -> np.ndarray:
    """Column-vector PTM representation of a density matrix."""
    return pauli_basis(n_qubits).expand_real(rho)


def effect_to_vec(E: np.ndarray, n_qubits: int) -> np.ndarray:
    """Row-vector PTM representation of a POVM effect."""
    return pauli_basis(n_qubits).expand_real(E)
