"""Bloch embedding and positivity certificates for qudit states.

A unit-trace Hermitian matrix is written rho = I/N + sqrt((N-1)/(2N))
sum_i xi_i lam_i over the generalized Gell-Mann basis; the state space is
carved out of the Bloch ball |xi| <= 1 by the polynomial conditions
S_k(xi) >= 0 on the characteristic coefficients.  Verdicts can be reached
along three routes that must agree:

* the S_k signs computed from the Bloch vector (check_state_bloch),
* the S_k signs plus the Bezoutian discriminant computed from a bare
  trace tuple (check_state_traces), and
* an in-repo cyclic Jacobi eigensolver (eig_oracle) that never calls an
  external diagonalization routine, kept independent on purpose.

Also provides two state samplers (rejection in the Bloch ball, and
uniform simplex spectra conjugated by Haar unitaries), deterministic
under a fixed seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .invariants import TraceInvariants, char_coefficients, discriminant, trace_invariants
from .su_algebra import gell_mann_basis

# Default slack on the positivity conditions S_k >= 0.
POSITIVITY_TOL = 1e-9

# Unit-trace defect tolerated by to_bloch / check_state_traces.
TRACE_TOL = 1e-10

# Off-diagonal Frobenius norm at which the Jacobi sweep stops.
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100

# Bloch-rejection sampling gives up after this many proposals per state.
REJECTION_MAX_TRIES = 1_000_000


@dataclass(frozen=True)
class StateClassification:
    """Verdict of a positivity test.

    stratum is "pure", "interior" or "boundary-rank-k" for valid states
    and None otherwise; margin is the smallest characteristic coefficient.
    """

    is_state: bool
    rank: int
    stratum: str | None
    margin: float


def bloch_scale(N: int) -> float:
    """Embedding prefactor sqrt((N-1)/(2N))."""
    return math.sqrt((N - 1) / (2.0 * N))


def dim_from_bloch(xi) -> int:
    """Recover N from a Bloch vector of length N^2 - 1 (or the length itself)."""
    n = xi if isinstance(xi, (int, np.integer)) else len(xi)
    N = math.isqrt(n + 1)
    if N < 2 or N * N - 1 != n:
        raise ValueError(f"Bloch vector length {n} is not N^2 - 1 for any N >= 2")
    return N


def from_bloch(xi: np.ndarray) -> np.ndarray:
    """Assemble rho = I/N + sqrt((N-1)/(2N)) sum_i xi_i lam_i.

    The result is Hermitian with unit trace for any real xi; positivity is
    a separate question answered by the check functions.
    """
    xi = np.asarray(xi, dtype=float)
    if xi.ndim != 1:
        raise ValueError(f"Bloch vector must be one-dimensional, got shape {xi.shape}")
    N = dim_from_bloch(xi)
    lam = gell_mann_basis(N).elements
    return np.eye(N, dtype=complex) / N + bloch_scale(N) * np.einsum("i,ijk->jk", xi, lam)


def to_bloch(rho: np.ndarray) -> np.ndarray:
    """Project a unit-trace Hermitian matrix onto its Bloch components.

    xi_i = tr(rho lam_i) / (2 sqrt((N-1)/(2N))), the inverse of from_bloch.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {rho.shape}")
    N = rho.shape[0]
    if N < 2:
        raise ValueError("need N >= 2")
    tr = np.trace(rho)
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"matrix trace {tr} is not 1 within {TRACE_TOL}")
    defect = np.max(np.abs(rho - rho.conj().T))
    if defect > 1e-10:
        raise ValueError(f"matrix is not Hermitian: defect {defect:.3e}")
    lam = gell_mann_basis(N).elements
    overlaps = np.einsum("ijk,kj->i", lam, rho)
    return overlaps.real / (2.0 * bloch_scale(N))


def jacobi_eigh(a: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Diagonalize a Hermitian matrix with cyclic complex Jacobi rotations.

    Each sweep annihilates every off-diagonal pair (p, q) in turn with a
    unitary plane rotation; sweeps repeat until the off-diagonal Frobenius
    norm drops below `tol`.

    Returns
    -------
    (w, V) : ndarray pairs
        Unsorted real eigenvalues and the unitary with eigenvectors as
        columns, a V diag(w) V^dag reconstruction of the input.

    Raises
    ------
    RuntimeError
        If the norm target is not met after `max_sweeps` sweeps.
    """
    A = np.asarray(a, dtype=complex).copy()
    n = A.shape[0]
    if A.ndim != 2 or A.shape[1] != n:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    defect = np.max(np.abs(A - A.conj().T))
    if defect > 1e-10:
        raise ValueError(f"matrix is not Hermitian: defect {defect:.3e}")
    V = np.eye(n, dtype=complex)

    def off_norm(M):
        off = M - np.diag(np.diag(M))
        return np.linalg.norm(off)

    for _ in range(max_sweeps):
        if off_norm(A) < tol:
            return np.real(np.diag(A)), V
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                m = abs(apq)
                if m == 0.0:
                    continue
                phase = apq / m
                tau = (A[q, q].real - A[p, p].real) / (2.0 * m)
                if tau >= 0.0:
                    tpar = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    tpar = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + tpar * tpar)
                s = tpar * c
                # R acts on the (p, q) plane; A <- R^dag A R, V <- V R.
                R = np.array([[c, s * phase], [-s * np.conj(phase), c]])
                A[:, [p, q]] = A[:, [p, q]] @ R
                A[[p, q], :] = R.conj().T @ A[[p, q], :]
                V[:, [p, q]] = V[:, [p, q]] @ R
                A[p, q] = 0.0
                A[q, p] = 0.0
    if off_norm(A) < tol:
        return np.real(np.diag(A)), V
    raise RuntimeError(
        f"Jacobi iteration failed to reach off-norm {tol:.1e} in {max_sweeps} sweeps"
    )


def eig_oracle(rho: np.ndarray) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, sorted descending.

    The independent verification oracle behind every positivity check: an
    in-repo Jacobi iteration, no external solver.
    """
    w, _ = jacobi_eigh(rho)
    return np.sort(w)[::-1]


def _rank_from_tail(S: np.ndarray, tol: float) -> int:
    """N minus the number of trailing S_k vanishing within tol."""
    rank = len(S)
    for k in range(len(S) - 1, -1, -1):
        if abs(S[k]) <= tol:
            rank -= 1
        else:
            break
    return max(rank, 1)


def _stratum(is_state: bool, rank: int, N: int, margin: float, tol: float) -> str | None:
    if not is_state:
        return None
    if rank == 1:
        return "pure"
    if rank == N and margin > tol:
        return "interior"
    return f"boundary-rank-{rank}"


def check_state_bloch(xi: np.ndarray, tol: float = POSITIVITY_TOL) -> StateClassification:
    """Positivity test in Bloch coordinates: all S_k(xi) >= 0.

    The rank is read off the trailing zeros of (S_1, ..., S_N) and
    cross-checked against the Jacobi oracle's count of nonzero
    eigenvalues; on disagreement the oracle wins.
    """
    rho = from_bloch(xi)
    N = rho.shape[0]
    t = trace_invariants(rho, N)
    S = char_coefficients(t)
    margin = float(np.min(S))
    is_state = bool(margin >= -tol)

    rank = _rank_from_tail(S, tol)
    w = eig_oracle(rho)
    rank_oracle = int(np.sum(w > tol))
    if rank_oracle != rank:
        rank = max(rank_oracle, 1)
    return StateClassification(
        is_state=is_state,
        rank=rank,
        stratum=_stratum(is_state, rank, N, margin, tol),
        margin=margin,
    )


def check_state_traces(t: TraceInvariants, tol: float = POSITIVITY_TOL) -> StateClassification:
    """Positivity test from a trace tuple alone.

    Requires t_1 = 1 within 1e-10 (raises otherwise), then demands
    disc >= 0 and S_k >= 0 for k = 1..N.  No matrix and no eigensolver
    are touched; the rank comes from the trailing S_k alone.
    """
    if abs(t.t(1) - 1.0) > TRACE_TOL:
        raise ValueError(f"t_1 = {t.t(1)} is not 1 within {TRACE_TOL}")
    S = char_coefficients(t)
    disc = discriminant(t)
    margin = float(np.min(S))
    is_state = bool(margin >= -tol and disc >= -tol)
    rank = _rank_from_tail(S, tol)
    return StateClassification(
        is_state=is_state,
        rank=rank,
        stratum=_stratum(is_state, rank, t.dim, margin, tol),
        margin=margin,
    )


def uniform_simplex(N: int, rng: np.random.Generator) -> np.ndarray:
    """A point of the probability simplex, uniform w.r.t. Lebesgue measure."""
    return rng.dirichlet(np.ones(N))


def haar_unitary(N: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Gaussian matrix.

    The R factor's diagonal phases are normalized away, which is what
    makes the distribution left- and right-invariant.
    """
    z = (rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))) / math.sqrt(2.0)
    q, r = np.linalg.qr(z)
    phases = np.diag(r).copy()
    phases /= np.abs(phases)
    return q * phases


def random_hermitian_unit_trace(N: int, rng: np.random.Generator) -> np.ndarray:
    """Random Hermitian matrix with trace 1, generically not a state.

    GUE-like bulk plus a trace correction; used as the agreement corpus
    for the positivity routes.
    """
    z = rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))
    h = (z + z.conj().T) / 2.0
    h += (1.0 - np.trace(h).real) / N * np.eye(N)
    return h


def sample_states(N: int, count: int, mode: str = "spectrum-haar", seed: int | None = None):
    """Draw `count` random density matrices of dimension N.

    mode="spectrum-haar": spectrum uniform on the simplex, conjugated by a
    Haar unitary.  mode="bloch-rejection": Bloch vectors uniform in the
    unit ball, kept only when the positivity test passes (practical for
    small N only; the acceptance fraction collapses as N grows).

    Fixed seed gives bit-identical output across runs.
    """
    if N < 2:
        raise ValueError("need N >= 2")
    if count < 0:
        raise ValueError("count must be nonnegative")
    rng = np.random.default_rng(seed)
    out = np.empty((count, N, N), dtype=complex)

    if mode == "spectrum-haar":
        for i in range(count):
            spec = uniform_simplex(N, rng)
            u = haar_unitary(N, rng)
            out[i] = (u * spec) @ u.conj().T
        return out

    if mode == "bloch-rejection":
        n = N * N - 1
        for i in range(count):
            for _ in range(REJECTION_MAX_TRIES):
                direction = rng.standard_normal(n)
                direction /= np.linalg.norm(direction)
                xi = direction * rng.random() ** (1.0 / n)
                if check_state_bloch(xi).is_state:
                    out[i] = from_bloch(xi)
                    break
            else:
                raise RuntimeError(
                    f"rejection sampler found no state in {REJECTION_MAX_TRIES} tries at N={N}"
                )
        return out

    raise ValueError(f"unknown sampling mode {mode!r}")
