"""
The qutrit orbit space: a disk swept by conjugation orbits
==========================================================

Up to unitary conjugation a qutrit state is just its ordered spectrum,
which lives in a two-dimensional region parameterized by a radius r and
one angle phi.  This script walks the region: the ordered-domain wedge,
the rank-2 boundary curve r = 1 / (2 sin(phi/3)), the trisectrix identity
behind it, and the arc cut out of a fixed-radius circle by positivity.
"""

import numpy as np

from quditorbits import (
    OrbitCoordinates,
    cartan_moduli,
    darboux_point,
    intersection_polyhedron,
    orbit_from_spectrum,
    ordered_domain_check,
    rank2_curve_radius,
    rank_strata,
    spectrum_from_orbit,
    trisectrix_residual,
)

np.set_printoptions(precision=6, suppress=True)


# ---------------------------------------------------------------------------
# From spectrum to (r, phi) and back
# ---------------------------------------------------------------------------

for spec in ([1.0, 0.0, 0.0], [0.5, 0.3, 0.2], [1 / 3, 1 / 3, 1 / 3]):
    coords = orbit_from_spectrum(spec)
    back = spectrum_from_orbit(coords)
    phi = coords.angles[0] if not coords.degenerate_angles else float("nan")
    print(f"spectrum {np.array(spec)} -> r = {coords.radius:.6f}, "
          f"phi = {phi:.6f}, round trip max error "
          f"{np.max(np.abs(back.raw - np.array(spec))):.1e}")

# The ordered domain p_1 >= p_2 >= p_3 corresponds to phi in [pi/2, 3pi/2].
print("\nordered-domain check along the unit circle:")
for phi in (0.2, np.pi / 2, np.pi, 4.5, 1.9 * np.pi):
    coords = OrbitCoordinates(dim=3, radius=0.4, angles=np.array([phi]))
    ok = ordered_domain_check(coords)
    print(f"  phi = {phi:.4f}: ordered = {ok}")


# ---------------------------------------------------------------------------
# Strata: how eigenvalue degeneracies shrink the orbit
# ---------------------------------------------------------------------------

for spec in ([0.5, 0.3, 0.2], [0.4, 0.4, 0.2], [2 / 3, 1 / 3, 0.0], [1.0, 0.0, 0.0]):
    coords = orbit_from_spectrum(spec)
    s = rank_strata(3, coords)
    print(f"\nspectrum {np.array(spec)}:")
    print(f"  label {s.label}, multiplicities {s.multiplicities}, rank {s.rank}, "
          f"orbit dimension {s.orbit_dimension}")
    if s.effective_radius is not None:
        print(f"  effective qubit radius on the rank-2 face: "
              f"{s.effective_radius:.6f}")


# ---------------------------------------------------------------------------
# The rank-2 curve and the trisectrix
# ---------------------------------------------------------------------------

# A qutrit loses rank exactly on the curve r = 1 / (2 sin(phi/3)).  In the
# Cartan plane this is one branch of a classical angle-trisection curve.
print("\nrank-2 boundary curve r(phi):")
for phi in (np.pi / 2, 2.0, np.pi, 4.0, 3 * np.pi / 2):
    r = rank2_curve_radius(phi)
    coords = OrbitCoordinates(dim=3, radius=r, angles=np.array([phi]))
    spec = spectrum_from_orbit(coords)
    print(f"  phi = {phi:.4f}: r = {r:.6f}, smallest eigenvalue "
          f"{spec.ordered[-1]:+.1e}, trisectrix residual "
          f"{trisectrix_residual(r, phi):+.1e}")

# Pure states sit at the curve's minimum radius r = 1, double eigenvalues
# at its endpoints r = 1/2.
print(f"\n  r(pi/2) = {rank2_curve_radius(np.pi / 2):.6f} (pure state)")
print(f"  r(3pi/2) = {rank2_curve_radius(3 * np.pi / 2):.6f} (double eigenvalue)")


# ---------------------------------------------------------------------------
# Fixed-radius arcs: how much of the circle stays positive
# ---------------------------------------------------------------------------

# Below r = 1/2 the whole circle is inside the state set.  Above it the
# rank-2 curve truncates the arc; at r = 1 only the pure point survives.
for r in (0.4, 0.7, 1.0):
    arc = intersection_polyhedron(3, r)
    lo, hi = arc["phi_range"]
    print(f"\nr = {r}: {arc['kind']}, phi range [{lo:.6f}, {hi:.6f}], "
          f"arc angle {arc['arc_angle']:.6f}")

# The Cartan moduli are the (I3, I8) coordinates of the spectrum, and the
# Darboux frame inverts them back to the diagonal entries.
coords = orbit_from_spectrum([0.6, 0.3, 0.1])
moduli = cartan_moduli(spectrum_from_orbit(coords).raw)
print(f"\nCartan moduli of diag(0.6, 0.3, 0.1): {moduli}")
print(f"darboux_point rebuilds the spectrum from (r, phi): "
      f"{darboux_point(coords)}")
