"""Generalized Gell-Mann basis of su(N) and its structure data.

This module builds the N^2 - 1 traceless Hermitian generators of su(N)
normalized to tr(lam_i lam_j) = 2 delta_ij, together with everything the
rest of the library hangs off of them:

* the totally symmetric (d) and antisymmetric (f) structure constants of
  the multiplication rule
      lam_i lam_j = (2/N) delta_ij I + sum_k (d_ijk + i f_ijk) lam_k,
* the weight vectors of the defining representation (the halved diagonals
  of the Cartan generators),
* the symmetric "vee" product (xi v eta)_k ~ d_ijk xi_i eta_j on adjoint
  vectors, and
* the orthonormal Darboux frame spanning the traceless diagonal subspace
  of the eigenvalue simplex.

Ordering convention: for each m = 2..N the off-diagonal pairs
(E_jm + E_mj) and -i(E_jm - E_mj) are emitted for j = 1..m-1, followed by
the diagonal generator H_{m-1}.  The diagonal generators therefore sit at
1-based positions m^2 - 1 (3, 8, 15, ...), and for N = 3 the numbering
coincides with the conventional lambda_1..lambda_8.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# Entries of d and f smaller than this are treated as exact zeros when the
# sparse tables are built.
SPARSITY_THRESHOLD = 1e-12

# Orthonormality defect tolerated before structure-constant extraction
# refuses the input basis.
ORTHONORMALITY_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class BasisSet:
    """Stacked su(N) generators.

    Attributes
    ----------
    dim : int
        Hilbert-space dimension N.
    elements : ndarray, shape (N**2 - 1, N, N), complex
        Generators stacked along the first axis, read-only.
    cartan_indices : tuple of int
        1-based positions of the diagonal (Cartan) generators,
        (3, 8, 15, ..., N**2 - 1).
    """

    dim: int
    elements: np.ndarray
    cartan_indices: tuple

    @property
    def size(self) -> int:
        return self.dim * self.dim - 1

    def element(self, i: int) -> np.ndarray:
        """Return generator lambda_i (1-based index)."""
        if not 1 <= i <= self.size:
            raise ValueError(f"generator index {i} outside 1..{self.size}")
        return self.elements[i - 1]

    def cartan(self, k: int) -> np.ndarray:
        """Return the k-th diagonal generator H_k, k = 1..N-1 (1-based)."""
        if not 1 <= k <= self.dim - 1:
            raise ValueError(f"Cartan index {k} outside 1..{self.dim - 1}")
        return self.elements[self.cartan_indices[k - 1] - 1]


@dataclass(frozen=True, eq=False)
class StructureTensors:
    """Structure constants of su(N) in sparse and dense form.

    The sparse maps hold one representative per symmetry class:
    d is stored for i <= j <= k (totally symmetric), f for i < j < k
    (totally antisymmetric).  Keys are 1-based index triples.
    """

    dim: int
    d: dict
    f: dict
    d_dense: np.ndarray
    f_dense: np.ndarray

    @property
    def size(self) -> int:
        return self.dim * self.dim - 1

    def d_value(self, i: int, j: int, k: int) -> float:
        """Symmetric constant d_ijk for an arbitrary index permutation."""
        return self.d.get(tuple(sorted((i, j, k))), 0.0)

    def f_value(self, i: int, j: int, k: int) -> float:
        """Antisymmetric constant f_ijk for an arbitrary index permutation."""
        key = tuple(sorted((i, j, k)))
        value = self.f.get(key, 0.0)
        if value == 0.0:
            return 0.0
        return value * _permutation_sign((i, j, k))


@dataclass(frozen=True, eq=False)
class WeightSystem:
    """Weights of the defining representation of su(N).

    weights[i, a] is the a-th component of the weight vector mu^(i+1)
    attached to the i-th basis state; each weight has N - 1 components.
    They satisfy sum_i mu_i = 0 and sum_i mu_i^a mu_i^b = delta_ab / 2.
    """

    dim: int
    weights: np.ndarray

    def weight(self, i: int) -> np.ndarray:
        """Weight vector of the i-th basis state (1-based)."""
        if not 1 <= i <= self.dim:
            raise ValueError(f"state index {i} outside 1..{self.dim}")
        return self.weights[i - 1]


def _permutation_sign(triple) -> float:
    """Parity of the permutation sorting a 3-tuple with distinct entries."""
    i, j, k = triple
    sign = 1.0
    if i > j:
        i, j, sign = j, i, -sign
    if j > k:
        j, k, sign = k, j, -sign
    if i > j:
        i, j, sign = j, i, -sign
    return sign


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@lru_cache(maxsize=None)
def gell_mann_basis(N: int) -> BasisSet:
    """Construct the generalized Gell-Mann basis of su(N).

    Parameters
    ----------
    N : int
        Hilbert-space dimension, N >= 2.

    Returns
    -------
    BasisSet
        N^2 - 1 traceless Hermitian matrices with tr(lam_i lam_j) =
        2 delta_ij.  Diagonal generators H_k = sqrt(2/(k(k+1))) *
        diag(1, ..., 1, -k, 0, ..., 0) occupy positions m^2 - 1.
    """
    if not isinstance(N, (int, np.integer)) or N < 2:
        raise ValueError(f"su(N) requires an integer dimension N >= 2, got {N!r}")
    N = int(N)

    elements = []
    for m in range(2, N + 1):
        for j in range(1, m):
            sym = np.zeros((N, N), dtype=complex)
            sym[j - 1, m - 1] = 1.0
            sym[m - 1, j - 1] = 1.0
            elements.append(sym)
            asym = np.zeros((N, N), dtype=complex)
            asym[j - 1, m - 1] = -1.0j
            asym[m - 1, j - 1] = 1.0j
            elements.append(asym)
        k = m - 1
        diag = np.zeros(N)
        diag[:k] = 1.0
        diag[k] = -k
        elements.append(np.sqrt(2.0 / (k * (k + 1))) * np.diag(diag).astype(complex))

    stacked = _readonly(np.array(elements))
    cartan = tuple(m * m - 1 for m in range(2, N + 1))
    return BasisSet(dim=N, elements=stacked, cartan_indices=cartan)


def structure_constants(basis: BasisSet) -> StructureTensors:
    """Extract d_ijk and f_ijk from a basis via trace contractions.

    d_ijk = tr({lam_i, lam_j} lam_k) / 4 and
    f_ijk = -i tr([lam_i, lam_j] lam_k) / 4, which for an orthonormal
    Hermitian basis reduce to the real and imaginary halves of
    T_ijk = tr(lam_i lam_j lam_k).

    Raises
    ------
    ValueError
        If the basis fails tr(lam_i lam_j) = 2 delta_ij beyond 1e-10.
    """
    lam = basis.elements
    n = basis.size
    gram = np.einsum("aij,bji->ab", lam, lam)
    defect = np.max(np.abs(gram - 2.0 * np.eye(n)))
    if defect > ORTHONORMALITY_TOL:
        raise ValueError(
            f"basis is not orthonormal: max |tr(l_i l_j) - 2 delta_ij| = {defect:.3e}"
        )

    t3 = np.einsum("aij,bjk,cki->abc", lam, lam, lam, optimize=True)
    d_dense = t3.real / 2.0
    f_dense = t3.imag / 2.0
    d_dense[np.abs(d_dense) < SPARSITY_THRESHOLD] = 0.0
    f_dense[np.abs(f_dense) < SPARSITY_THRESHOLD] = 0.0

    d_map = {}
    f_map = {}
    for i, j, k in zip(*np.nonzero(d_dense)):
        if i <= j <= k:
            d_map[(int(i) + 1, int(j) + 1, int(k) + 1)] = float(d_dense[i, j, k])
    for i, j, k in zip(*np.nonzero(f_dense)):
        if i < j < k:
            f_map[(int(i) + 1, int(j) + 1, int(k) + 1)] = float(f_dense[i, j, k])

    return StructureTensors(
        dim=basis.dim,
        d=d_map,
        f=f_map,
        d_dense=_readonly(d_dense),
        f_dense=_readonly(f_dense),
    )


@lru_cache(maxsize=None)
def algebra_tensors(N: int) -> StructureTensors:
    """Cached structure constants for the standard basis of su(N)."""
    return structure_constants(gell_mann_basis(N))


@lru_cache(maxsize=None)
def weight_vectors(N: int) -> WeightSystem:
    """Weights of the defining representation, mu^(i)_a = (H_a)_ii / 2."""
    basis = gell_mann_basis(N)
    weights = np.empty((N, N - 1))
    for a in range(N - 1):
        weights[:, a] = np.real(np.diag(basis.cartan(a + 1))) / 2.0
    return WeightSystem(dim=N, weights=_readonly(weights))


def vee_product(xi: np.ndarray, eta: np.ndarray, tensors: StructureTensors) -> np.ndarray:
    """Symmetric bilinear product (xi v eta)_k = sqrt(N(N-1)/2) d_ijk xi_i eta_j.

    For N = 2 the d tensor vanishes identically and so does the product.
    """
    xi = np.asarray(xi, dtype=float)
    eta = np.asarray(eta, dtype=float)
    n = tensors.size
    if xi.shape != (n,) or eta.shape != (n,):
        raise ValueError(
            f"vee product for su({tensors.dim}) needs vectors of length {n}, "
            f"got {xi.shape} and {eta.shape}"
        )
    N = tensors.dim
    scale = np.sqrt(N * (N - 1) / 2.0)
    return scale * np.einsum("ijk,i,j->k", tensors.d_dense, xi, eta)


@lru_cache(maxsize=None)
def darboux_frame(N: int) -> np.ndarray:
    """Orthonormal frame e^(a) = sqrt(2) mu^(a) on the eigenvalue simplex.

    Returns an (N-1, N) array whose rows span the traceless diagonal
    directions: e^(a) . e^(b) = delta_ab and each row is orthogonal to the
    barycenter direction (1, ..., 1)/N.
    """
    mu = weight_vectors(N).weights
    return _readonly(np.sqrt(2.0) * mu.T.copy())


def basis_to_json(basis: BasisSet) -> dict:
    """JSON-ready dump: each matrix as a row-major list of [re, im] pairs."""
    mats = []
    for lam in basis.elements:
        flat = lam.reshape(-1)
        mats.append([[float(z.real), float(z.imag)] for z in flat])
    return {
        "N": basis.dim,
        "elements": mats,
        "cartan_indices": list(basis.cartan_indices),
    }


def tensors_to_json(tensors: StructureTensors) -> dict:
    """JSON-ready dump of the sparse tables with 1-based index triples."""
    d_items = [
        {"i": i, "j": j, "k": k, "value": v}
        for (i, j, k), v in sorted(tensors.d.items())
    ]
    f_items = [
        {"i": i, "j": j, "k": k, "value": v}
        for (i, j, k), v in sorted(tensors.f.items())
    ]
    return {"N": tensors.dim, "d": d_items, "f": f_items}
