"""Orbit-space parameterization of qudit spectra.

A unitary orbit of density matrices is labeled by its ordered spectrum,
or equivalently by a radial coordinate r = |I| and a unit vector on the
sphere S^{N-2} of traceless diagonal (Cartan) directions:

    r_i = 1/N + sqrt(2(N-1)/N) r mu_i . n(angles),

with mu_i the weights of the defining representation.  The angle
convention is nested-polar with the innermost pair tripled,
n = (cos(phi/3), sin(phi/3)) for N = 3, extended outward by one polar
angle per extra dimension with the last Cartan axis as the pole
(n = (sin(theta) cos(phi/3), sin(theta) sin(phi/3), cos(theta)) for
N = 4).  The division by three makes the positivity boundary algebraic:
for a qutrit the rank-2 stratum is the polar curve r = 1/(2 sin(phi/3)),
a branch of the Maclaurin trisectrix.

Boundary machinery: rank strata with orbit dimensions, effective Bloch
radii of the embedded lower qudits (a rank-2 qutrit is a qubit of radius
(2/sqrt(3)) sqrt(r^2 - 1/4), and so on down the matryoshka), and the
intersection of the ordered eigenvalue simplex with the sphere of states
at fixed r (an arc for N = 3, a spherical triangle or quadrilateral for
N = 4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .su_algebra import WeightSystem, darboux_frame, weight_vectors

ANGLE_CONVENTION = "nested-polar-phi3-last-cartan-axis"

# Eigenvalues closer than this are treated as degenerate when strata are
# labeled.
DEGENERACY_TOL = 1e-7

# Eigenvalues below this count as zeros for rank purposes.
ZERO_TOL = 1e-9

# Slack on ordering / nonnegativity predicates.
ORDER_TOL = 1e-12

# Vertices of the simplex-sphere polyhedron closer than this merge.
VERTEX_DEDUP_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class OrbitCoordinates:
    """Radial-angular coordinates of a unitary orbit.

    angles has N - 2 entries (phi first, then one polar angle per level
    moving outward); radius lies in [0, 1] for spectra on the simplex.
    """

    dim: int
    radius: float
    angles: np.ndarray
    convention: str = ANGLE_CONVENTION
    degenerate_angles: bool = False


@dataclass(frozen=True)
class StratumReport:
    """Degeneracy pattern of an orbit and its geometric consequences."""

    label: str
    multiplicities: tuple
    rank: int
    orbit_dimension: int
    stratum: str
    effective_radius: float | None = None


class OrbitSpectrum(NamedTuple):
    """Raw and ordered eigenvalue tuples produced by spectrum_from_orbit."""

    raw: np.ndarray
    ordered: np.ndarray
    valid: bool


def unit_vector(N: int, angles) -> np.ndarray:
    """Unit vector on S^{N-2} in the nested-polar convention.

    angles = (phi,) for N = 3, (phi, theta) for N = 4, one more polar
    angle per further level; empty for N = 2 where the sphere S^0
    degenerates to the point n = (1).
    """
    angles = np.atleast_1d(np.asarray(angles, dtype=float)) if angles is not None else np.array([])
    if N < 2:
        raise ValueError("need N >= 2")
    if len(angles) != N - 2:
        raise ValueError(f"su({N}) orbit needs {N - 2} angles, got {len(angles)}")
    if N == 2:
        return np.array([1.0])
    phi = angles[0]
    n = np.array([np.cos(phi / 3.0), np.sin(phi / 3.0)])
    for t in angles[1:]:
        n = np.concatenate([np.sin(t) * n, [np.cos(t)]])
    return n


def spectrum_from_orbit(coords: OrbitCoordinates, weights: WeightSystem | None = None) -> OrbitSpectrum:
    """Eigenvalue tuple of the orbit, r_i = 1/N + sqrt(2(N-1)/N) r mu_i.n.

    The raw tuple keeps the weight ordering (descending exactly when the
    coordinates lie in the ordered domain); `ordered` is sorted, and
    `valid` flags nonnegativity of the smallest eigenvalue.
    """
    N = coords.dim
    if weights is None:
        weights = weight_vectors(N)
    if weights.dim != N:
        raise ValueError(f"weight system is for N={weights.dim}, coordinates for N={N}")
    n = unit_vector(N, coords.angles)
    raw = 1.0 / N + math.sqrt(2.0 * (N - 1) / N) * coords.radius * (weights.weights @ n)
    ordered = np.sort(raw)[::-1]
    return OrbitSpectrum(raw=raw, ordered=ordered, valid=bool(ordered[-1] >= -ORDER_TOL))


def cartan_moduli(spectrum: np.ndarray) -> np.ndarray:
    """Cartan components I_a = sqrt(N/(2(N-1))) sum_i r_i (H_a)_ii.

    These are the Bloch components of the diagonal representative; their
    Euclidean length is the orbit radius r.
    """
    spectrum = np.asarray(spectrum, dtype=float)
    N = len(spectrum)
    mu = weight_vectors(N).weights
    return math.sqrt(2.0 * N / (N - 1)) * (spectrum @ mu)


def orbit_from_spectrum(spectrum, weights: WeightSystem | None = None) -> OrbitCoordinates:
    """Invert the parameterization: spectrum -> (radius, angles).

    Expects a descending spectrum summing to 1.  The maximally mixed point
    has r = 0 and no well-defined angles; it is returned with zero angles
    and the degenerate_angles flag set.
    """
    spectrum = np.asarray(spectrum, dtype=float)
    N = len(spectrum)
    if N < 2:
        raise ValueError("need N >= 2")
    if weights is not None and weights.dim != N:
        raise ValueError(f"weight system is for N={weights.dim}, spectrum for N={N}")
    if abs(spectrum.sum() - 1.0) > 1e-10:
        raise ValueError(f"spectrum sums to {spectrum.sum()}, expected 1")
    if np.any(np.diff(spectrum) > 1e-10):
        raise ValueError("spectrum must be sorted in descending order")

    moduli = cartan_moduli(spectrum)
    r = float(np.linalg.norm(moduli))
    if r < 1e-13:
        return OrbitCoordinates(
            dim=N, radius=0.0, angles=np.zeros(N - 2), degenerate_angles=True
        )
    n = moduli / r
    angles = np.zeros(N - 2)
    v = n
    # Peel polar angles from the outermost axis inward, then untriple phi.
    for level in range(N - 2, 1, -1):
        angles[level - 1] = math.atan2(np.linalg.norm(v[:-1]), v[-1])
        v = v[:-1]
    if N >= 3:
        angles[0] = 3.0 * math.atan2(v[1], v[0])
    return OrbitCoordinates(dim=N, radius=r, angles=angles)


def ordered_domain_check(coords: OrbitCoordinates, weights: WeightSystem | None = None) -> bool:
    """True when the raw eigenvalue tuple is descending and nonnegative.

    This predicate, not a hardcoded angle interval, defines the ordered
    domain; for a qutrit it carves out phi in [pi/2, 3pi/2] with
    r sin(phi/3) <= 1/2, and for a quatrit additionally
    cot(theta) >= sin(phi/3)/sqrt(2).
    """
    spec = spectrum_from_orbit(coords, weights)
    raw = spec.raw
    descending = bool(np.all(np.diff(raw) <= ORDER_TOL))
    return descending and bool(raw[-1] >= -ORDER_TOL)


def _degeneracy_blocks(ordered: np.ndarray, tol: float = DEGENERACY_TOL) -> list:
    blocks = [[1]]
    for i in range(1, len(ordered)):
        if abs(ordered[i - 1] - ordered[i]) <= tol:
            blocks[-1].append(i + 1)
        else:
            blocks.append([i + 1])
    return blocks


def rank_strata(N: int, coords: OrbitCoordinates) -> StratumReport:
    """Classify the orbit through a point of the ordered domain.

    The label lists equal-eigenvalue groups separated by bars (all-distinct
    spectra get the compact regular label, e.g. O_123); the orbit dimension
    is N^2 - sum of squared multiplicities.  For boundary strata of a
    qutrit or quatrit the Bloch radius of the embedded lower-dimensional
    qudit is attached.
    """
    if coords.dim != N:
        raise ValueError(f"coordinates are for N={coords.dim}, requested N={N}")
    spec = spectrum_from_orbit(coords)
    ordered = spec.ordered
    blocks = _degeneracy_blocks(ordered)
    mults = tuple(len(b) for b in blocks)
    if all(m == 1 for m in mults):
        label = "O_" + "".join(str(i) for i in range(1, N + 1))
    else:
        label = "O_" + "|".join("".join(str(i) for i in b) for b in blocks)
    orbit_dim = N * N - int(sum(m * m for m in mults))
    rank = int(np.sum(ordered > ZERO_TOL))
    rank = max(rank, 1)

    if not spec.valid:
        stratum = "not-a-state"
    elif rank == 1:
        stratum = "pure"
    elif rank == N:
        stratum = "interior"
    else:
        stratum = f"boundary-rank-{rank}"

    eff = None
    zeros = N - rank
    if spec.valid and zeros > 0:
        r = coords.radius
        if N == 3:
            eff = effective_radius("qubit-in-qutrit", r)
        elif N == 4 and zeros == 1:
            eff = effective_radius("qutrit-in-quatrit", r)
        elif N == 4 and zeros >= 2:
            eff = effective_radius("qubit-in-qutrit-in-quatrit", r)
    return StratumReport(
        label=label,
        multiplicities=mults,
        rank=rank,
        orbit_dimension=orbit_dim,
        stratum=stratum,
        effective_radius=eff,
    )


_EFFECTIVE_RADIUS = {
    # kind: (minimum radius of the stratum, map r -> embedded radius)
    "qubit-in-qutrit": (0.5, lambda r: (2.0 / math.sqrt(3.0)) * math.sqrt(r * r - 0.25)),
    "qutrit-in-quatrit": (1.0 / 3.0, lambda r: (3.0 / (2.0 * math.sqrt(2.0))) * math.sqrt(r * r - 1.0 / 9.0)),
    "qubit-in-qutrit-in-quatrit": (
        1.0 / math.sqrt(3.0),
        lambda r: (3.0 / math.sqrt(6.0)) * math.sqrt(r * r - 1.0 / 3.0),
    ),
}


def effective_radius(kind: str, r: float) -> float:
    """Bloch radius of the qudit embedded in a rank-deficient boundary state.

    kind is one of "qubit-in-qutrit" (rank-2 qutrit, r in [1/2, 1]),
    "qutrit-in-quatrit" (rank-3 quatrit, r in [1/3, 1]) or
    "qubit-in-qutrit-in-quatrit" (rank-2 quatrit, r in [1/sqrt(3), 1]).
    The two-step chain composes: the matryoshka radius equals the
    qubit-in-qutrit radius evaluated at the qutrit-in-quatrit one.
    """
    try:
        lo, formula = _EFFECTIVE_RADIUS[kind]
    except KeyError:
        raise ValueError(
            f"unknown embedding {kind!r}; expected one of {sorted(_EFFECTIVE_RADIUS)}"
        ) from None
    if r < lo - 1e-12 or r > 1.0 + 1e-12:
        raise ValueError(f"{kind} stratum exists for r in [{lo:.6f}, 1], got r={r}")
    return float(formula(min(max(r, lo), 1.0)))


def rank2_curve_radius(phi: float) -> float:
    """Radial coordinate of the rank-2 qutrit stratum, r = 1/(2 sin(phi/3)).

    Stays within the Bloch ball for phi in [pi/2, 3pi/2].
    """
    s = math.sin(phi / 3.0)
    if s <= 0.0:
        raise ValueError(f"rank-2 curve undefined at phi={phi} (sin(phi/3) <= 0)")
    return 1.0 / (2.0 * s)


def quatrit_rank3_cos_theta(r: float) -> float:
    """Polar angle of the rank-3 quatrit surface: cos(theta) = 1/(3r), r in [1/3, 1]."""
    if r < 1.0 / 3.0 - 1e-12 or r > 1.0 + 1e-12:
        raise ValueError(f"rank-3 surface exists for r in [1/3, 1], got r={r}")
    return float(min(1.0, 1.0 / (3.0 * r)))


def trisectrix_residual(r: float, phi: float) -> float:
    """Implicit Maclaurin-trisectrix equation evaluated at a polar point.

    With x = r cos(phi), y = r sin(phi) and node parameter a = 1/2 the
    curve is (x^2 + y^2)(y - 3a) + 4a^3 = 0; the rank-2 qutrit stratum
    r = 1/(2 sin(phi/3)) makes the residual vanish identically.
    """
    y = r * np.sin(phi)
    return float(r * r * (y - 1.5) + 0.5)


def _ordered_simplex_constraints(N: int):
    """Rows a with a . x >= 0 cutting the ordered simplex out of sum(x)=1."""
    rows = []
    for i in range(N - 1):
        a = np.zeros(N)
        a[i] = 1.0
        a[i + 1] = -1.0
        rows.append(a)
    last = np.zeros(N)
    last[N - 1] = 1.0
    rows.append(last)
    return np.array(rows)


def _sphere_radius(N: int, r: float) -> float:
    """Radius sqrt((N-1)/N) r of the fixed-t2 sphere inside the simplex plane."""
    return math.sqrt((N - 1) / N) * r


def _polyhedron_vertices(N: int, r: float) -> np.ndarray:
    """Vertices of (ordered simplex) ∩ (sphere at radius r), as spectra.

    Each vertex lies on two facets; candidates come from intersecting the
    sphere with every facet pair and keeping the points satisfying all
    remaining inequalities, deduplicated at 1e-9.
    """
    center = np.full(N, 1.0 / N)
    R = _sphere_radius(N, r)
    constraints = _ordered_simplex_constraints(N)
    ones = np.ones(N)
    candidates = []
    m = len(constraints)
    for i in range(m):
        for j in range(i + 1, m):
            A = np.vstack([ones, constraints[i], constraints[j]])
            b = np.array([1.0, 0.0, 0.0])
            p, *_ = np.linalg.lstsq(A, b, rcond=None)
            _, sv, vt = np.linalg.svd(A)
            if sv[-1] < 1e-12:
                continue
            v = vt[-1]
            # line p + s v meets the sphere |x - center| = R where
            # s^2 + 2 s v.(p - center) + |p - center|^2 - R^2 = 0
            half_b = float(v @ (p - center))
            c0 = float((p - center) @ (p - center)) - R * R
            disc = half_b * half_b - c0
            if disc < 0.0:
                continue
            for s in (-half_b + math.sqrt(disc), -half_b - math.sqrt(disc)):
                x = p + s * v
                if np.all(constraints @ x >= -VERTEX_DEDUP_TOL):
                    candidates.append(x)
    vertices = []
    for x in candidates:
        if not any(np.linalg.norm(x - y) < VERTEX_DEDUP_TOL for y in vertices):
            vertices.append(x)
    vertices.sort(key=lambda x: tuple(np.round(x, 12)))
    return np.array(vertices) if vertices else np.empty((0, N))


@lru_cache(maxsize=None)
def polyhedron_transition_radii(N: int = 4) -> tuple:
    """Radii where the vertex count of the quatrit polyhedron changes.

    Found by bisection on the exact facet tests: the count goes 3 -> 4
    when the triple-degeneracy vertex crosses r_4 = 0, and 4 -> 3 when the
    doubly-paired vertex leaves the simplex (the onset of the rank-2
    stratum).  Nothing is assumed about the values; they are computed.
    """
    if N != 4:
        raise ValueError("transition radii are only classified for N = 4")

    def count(r: float) -> int:
        return len(_polyhedron_vertices(4, r))

    radii = []
    for lo, hi, pred in ((0.05, 0.5, lambda c: c >= 4), (0.5, 0.999, lambda c: c <= 3)):
        a, b = lo, hi
        if pred(count(a)) or not pred(count(b)):
            raise RuntimeError("bisection bracket does not straddle a transition")
        while b - a > 1e-12:
            mid = 0.5 * (a + b)
            if pred(count(mid)):
                b = mid
            else:
                a = mid
        radii.append(0.5 * (a + b))
    return tuple(radii)


def intersection_polyhedron(N: int, r: float) -> dict:
    """Geometry of (ordered simplex) ∩ (sphere of Bloch radius r).

    For N = 3 the intersection is a circular arc: the report carries the
    circle radius sqrt(2/3) r, the phi range of the ordered domain, the
    geometric opening angle (phi range divided by three) and the endpoint
    spectra.  For N = 4 it is a spherical polygon on the sphere of radius
    (sqrt(3)/2) r: the report lists the vertices, classifies triangle
    versus quadrilateral, and attaches the two bisection-computed
    transition radii.
    """
    if not 0.0 <= r <= 1.0 + 1e-12:
        raise ValueError(f"Bloch radius must lie in [0, 1], got {r}")
    if N == 3:
        if r == 0.0:
            return {
                "N": 3,
                "r": 0.0,
                "circle_radius": 0.0,
                "center": [1 / 3, 1 / 3, 1 / 3],
                "kind": "point",
                "phi_range": None,
                "arc_angle": 0.0,
                "endpoints": [[1 / 3, 1 / 3, 1 / 3]],
            }
        phi_lo = math.pi / 2.0
        if r <= 0.5:
            phi_hi = 3.0 * math.pi / 2.0
            kind = "full-chamber arc"
        else:
            phi_hi = 3.0 * math.asin(1.0 / (2.0 * r))
            kind = "arc truncated by r_3 = 0"
        ends = []
        for phi in (phi_lo, phi_hi):
            coords = OrbitCoordinates(dim=3, radius=r, angles=np.array([phi]))
            ends.append([float(x) for x in spectrum_from_orbit(coords).raw])
        return {
            "N": 3,
            "r": float(r),
            "circle_radius": _sphere_radius(3, r),
            "center": [1 / 3, 1 / 3, 1 / 3],
            "kind": kind,
            "phi_range": [phi_lo, phi_hi],
            "arc_angle": (phi_hi - phi_lo) / 3.0,
            "endpoints": ends,
        }
    if N == 4:
        vertices = _polyhedron_vertices(4, r)
        nv = len(vertices)
        kind = {3: "spherical triangle", 4: "spherical quadrilateral"}.get(
            nv, "point" if nv <= 1 else f"{nv}-vertex polygon"
        )
        return {
            "N": 4,
            "r": float(r),
            "sphere_radius": _sphere_radius(4, r),
            "center": [0.25, 0.25, 0.25, 0.25],
            "kind": kind,
            "n_vertices": nv,
            "vertices": [[float(x) for x in v] for v in vertices],
            "transition_radii": list(polyhedron_transition_radii(4)),
        }
    raise ValueError(f"intersection geometry is implemented for N = 3 and 4, got N={N}")


def darboux_point(coords: OrbitCoordinates) -> np.ndarray:
    """Spectrum reassembled from the Darboux frame, d + sum_a s_a e^(a).

    The frame coefficients are s_a = sqrt((N-1)/N) r n_a, i.e. the point
    on the intersection sphere in frame coordinates; agrees with
    spectrum_from_orbit identically.
    """
    N = coords.dim
    n = unit_vector(N, coords.angles)
    frame = darboux_frame(N)
    s = _sphere_radius(N, coords.radius) * n
    return np.full(N, 1.0 / N) + s @ frame
