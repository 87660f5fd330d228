"""
Tour of the su(N) generator basis and its structure tensors
===========================================================

Builds the generalized Gell-Mann basis for a few dimensions, checks the
trace normalization, and prints the symmetric and antisymmetric structure
constants together with the weight vectors of the defining representation.
"""

import numpy as np

from quditorbits import (
    algebra_tensors,
    casimirs,
    gell_mann_basis,
    structure_constants,
    to_bloch,
    vee_product,
    weight_vectors,
)

np.set_printoptions(precision=6, suppress=True)


# ---------------------------------------------------------------------------
# The basis: N^2 - 1 traceless Hermitian matrices with tr(l_i l_j) = 2 d_ij
# ---------------------------------------------------------------------------

for N in (2, 3, 4):
    basis = gell_mann_basis(N)
    gram = np.einsum("aij,bji->ab", basis.elements, basis.elements).real
    off = np.max(np.abs(gram - 2.0 * np.eye(N * N - 1)))
    print(f"N={N}: {N * N - 1} generators, Cartan slots {basis.cartan_indices}, "
          f"max |tr(l_i l_j) - 2 d_ij| = {off:.2e}")

# For N=2 the basis is exactly the Pauli triple.
pauli = gell_mann_basis(2).elements
print("\nsigma_x:\n", pauli[0].real)
print("sigma_z:\n", pauli[2].real)


# ---------------------------------------------------------------------------
# Structure constants: l_i l_j = (2/N) d_ij + (d_ijk + i f_ijk) l_k
# ---------------------------------------------------------------------------

st = structure_constants(gell_mann_basis(3))
print("\nsu(3) nonzero symmetric constants d_ijk (i <= j <= k):")
for (i, j, k), value in sorted(st.d.items()):
    print(f"  d_{i}{j}{k} = {value:+.10f}")

print("\nsu(3) nonzero antisymmetric constants f_ijk (i < j < k):")
for (i, j, k), value in sorted(st.f.items()):
    print(f"  f_{i}{j}{k} = {value:+.10f}")

# Dimension-dependent entries pick up the last Cartan label as N grows.
st4 = algebra_tensors(4)
print("\nsu(4) entries involving the last Cartan generator (index 15):")
for key in ((3, 3, 15), (8, 8, 15), (15, 15, 15)):
    print(f"  d_{key[0]},{key[1]},{key[2]} = {st4.d[key]:+.10f}")


# ---------------------------------------------------------------------------
# Weight vectors: diagonal entries of the Cartan generators, halved
# ---------------------------------------------------------------------------

for N in (3, 4):
    w = weight_vectors(N)
    print(f"\nweights of the defining representation, N={N}:")
    print(w.weights)
    print("  sum over states:", np.sum(w.weights, axis=0))
    print("  second moment (should be I/2):")
    print(w.weights.T @ w.weights)


# ---------------------------------------------------------------------------
# The vee product and the Casimir tower
# ---------------------------------------------------------------------------

# The symmetric tensor turns pairs of adjoint vectors into a third one.
# Iterating it on a state's Bloch vector produces every Casimir invariant.
rho = np.diag([0.5, 0.3, 0.2])
xi = to_bloch(rho)
tensors = algebra_tensors(3)
vee = vee_product(xi, xi, tensors)
print("\nqutrit Bloch vector for diag(0.5, 0.3, 0.2):")
print(xi)
print("xi vee xi:")
print(vee)

c = casimirs(xi, tensors)
print(f"\nCasimir chain: c2 = {c.c2:.6f}, c3 = {c.c3:.6f}, c4 = {c.c4:.6f}")
print(f"cross-check: (N-1)|xi|^2 = {2 * float(xi @ xi):.6f} (equals c2)")
