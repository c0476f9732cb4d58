"""Grid verification of the explicit plateau constructions on the standard
triangle: bump reparametrizations, the straightening map on the lower half,
the retraction onto the inner horn, the vertex-collapse homeomorphisms, and
the extension of a modified map from the triangle to the ambient plane.

Points are barycentric triples; all functions accept arrays of shape
(..., 3) and are exact on the plateau regions (the cutoff factors are
exactly 0.0 or 1.0 there, not merely small), which is what the tolerance
1e-12 claims in the tests lean on.
"""

import numpy as np

EPS0_DEFAULT = 0.2
MU_WINDOW = (0.25, 0.75)
PHI_WINDOW = (0.2, 0.45)
COLLAPSE_EPS = 0.2
GRID_DEFAULT = 200

# Width of the steep joining zones of the edge collapse.  Off the joins the
# collapse is exactly idempotent; a sample landing on a plateau breakpoint
# with rounding noise of a few ulp is amplified by the join slope
# (eps + T)/T ~ 2e3, i.e. to ~1e-12, well under the 1e-10 grid tolerance.
# Grids with spacing >= 1e-3 never place a point strictly inside a join.
_COLLAPSE_JOIN = 1e-4


def _h(s):
    """exp(-1/s) extended by 0: smooth, exactly 0 for s <= 0."""
    s = np.asarray(s, dtype=float)
    out = np.zeros_like(s)
    pos = s > 0
    out[pos] = np.exp(-1.0 / s[pos])
    return out


def smoothstep(t, a, b):
    """Monotone smooth step: exactly 0 for t <= a, exactly 1 for t >= b."""
    if not a < b:
        raise ValueError("window must satisfy a < b")
    s = (np.asarray(t, dtype=float) - a) / (b - a)
    up = _h(s)
    down = _h(1.0 - s)
    return up / (up + down)


def bump_mu(t, window=MU_WINDOW):
    """Non-decreasing, exactly 0 near 0 and exactly 1 near 1."""
    return smoothstep(t, *window)


def bump_phi(t, window=PHI_WINDOW):
    """Non-increasing on [0, 1/2], exactly 1 near 0 and 0 near 1/2."""
    return 1.0 - smoothstep(t, *window)


def check_in_triangle(x, tol=1e-9):
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != 3:
        raise ValueError("barycentric points have three coordinates")
    good = (np.abs(x.sum(axis=-1) - 1.0) <= tol) & (x >= -tol).all(axis=-1)
    if not np.all(good):
        raise ValueError("point outside the triangle")
    return x


def barycentric_grid(n):
    """All points (i, j, k)/n with i+j+k = n, row-major in (i, j)."""
    pts = []
    for i in range(n + 1):
        for j in range(n + 1 - i):
            pts.append((i / n, j / n, (n - i - j) / n))
    return np.array(pts, dtype=float)


def map_F(x, mu_window=MU_WINDOW, phi_window=PHI_WINDOW):
    """Straightening map: in the half {x_1 < 1/2}, the second chart
    coordinate u = x_2/(1-x_1) is pushed toward the bump profile,
    interpolated by a cutoff in x_1; identity on {x_1 >= 1/2}."""
    x = check_in_triangle(x)
    x1 = x[..., 1]
    denom = np.where(x1 < 0.5, 1.0 - x1, 1.0)
    u = np.where(x1 < 0.5, x[..., 2] / denom, 0.0)
    phi = bump_phi(np.clip(x1, 0.0, 0.5), phi_window)
    u_new = phi * bump_mu(u, mu_window) + (1.0 - phi) * u
    x2_new = u_new * denom
    out = np.stack([1.0 - x1 - x2_new, x1, x2_new], axis=-1)
    # where the cutoff already vanished the map is the identity; return x
    # verbatim so the plateau is exact, not a chart round trip
    return np.where(((x1 < 0.5) & (phi > 0.0))[..., None], out, x)


def coface(i, t):
    """The affine inclusion of the edge opposite vertex i, barycentric."""
    t = np.asarray(t, dtype=float)
    zero = np.zeros_like(t)
    if i == 0:
        cols = [zero, 1.0 - t, t]
    elif i == 1:
        cols = [1.0 - t, zero, t]
    elif i == 2:
        cols = [1.0 - t, t, zero]
    else:
        raise ValueError("triangle cofaces are 0, 1, 2")
    return np.stack(cols, axis=-1)


def edge_parameter(x):
    """Parameter t of a point on the 1-skeleton path (0) -> (1) -> (2): the
    second barycentric coordinate on the left edge, etc."""
    return 1.0 - np.asarray(x, dtype=float)[..., 0]


def collapse_to_segment(x):
    """(x_0, x_1, x_2) -> (x_0, x_1 + x_2) as points of the interval, taken
    by the coordinate 1 - x_0."""
    x = check_in_triangle(x)
    return 1.0 - x[..., 0]


def fold_to_first_coordinate(x):
    """(x_0, x_1, x_2) -> (x_0 + x_2, x_1): interval coordinate x_1."""
    x = check_in_triangle(x)
    return x[..., 1]


def taming_composite(sigma, mu_window=MU_WINDOW, phi_window=PHI_WINDOW):
    """sigma composed with the straightening then the collapse onto the
    interval; its three edges are constant / tame / the original path."""
    def composite(x):
        return sigma(collapse_to_segment(map_F(x, mu_window, phi_window)))
    return composite


def reversing_composite(sigma):
    """sigma composed with the fold; edge 2 is sigma, edge 0 its reverse."""
    def composite(x):
        return sigma(fold_to_first_coordinate(check_in_triangle(x)))
    return composite


# -- retraction onto the inner horn ------------------------------------------


def fold_to_horn(x):
    """Fold the triangle over its median onto the two edges at vertex 1:
    (x_0 - x_2, x_1 + 2 x_2, 0) where x_0 >= x_2, mirrored otherwise."""
    x = check_in_triangle(x)
    x0, x1, x2 = x[..., 0], x[..., 1], x[..., 2]
    left = np.stack([x0 - x2, x1 + 2.0 * x2, np.zeros_like(x0)], axis=-1)
    right = np.stack([np.zeros_like(x0), x1 + 2.0 * x0, x2 - x0], axis=-1)
    return np.where((x0 >= x2)[..., None], left, right)


def _collapse_param(u, eps):
    """Edge collapse: plateaus at the ends, identity in the middle, with
    steep joins of width _COLLAPSE_JOIN; idempotent off the joins."""
    u = np.asarray(u, dtype=float)
    T = _COLLAPSE_JOIN
    lo_rise = (u - eps) * ((eps + T) / T)
    hi_rise = (1.0 - eps - T) + (u - (1.0 - eps - T)) * ((eps + T) / T)
    return np.select(
        [u <= eps, u < eps + T, u <= 1.0 - eps - T, u < 1.0 - eps],
        [np.zeros_like(u), lo_rise, u, hi_rise],
        default=np.ones_like(u),
    )


def retraction_r(x, eps=COLLAPSE_EPS):
    """Continuous retraction of the triangle onto the horn at vertex 1:
    fold over the median, then collapse an eps-zone at each end of both
    horn edges onto the adjacent vertex.  Fixes the horn outside the
    collapse zones and maps everything into the horn."""
    if not 0 < eps < 0.5:
        raise ValueError("collapse width must lie in (0, 1/2)")
    y = fold_to_horn(x)
    on_left = y[..., 2] <= 0.0  # x_2 == 0 after folding
    u = np.where(on_left, y[..., 1], y[..., 2])
    c = _collapse_param(u, eps)
    zeros = np.zeros_like(c)
    left = np.stack([1.0 - c, c, zeros], axis=-1)
    right = np.stack([zeros, 1.0 - c, c], axis=-1)
    return np.where(on_left[..., None], left, right)


def horn_membership_error(y):
    """Violation of 'lies on the union of the two edges at vertex 1'."""
    y = np.asarray(y, dtype=float)
    return np.minimum(np.abs(y[..., 2]), np.abs(y[..., 0]))


# -- vertex collapse and boundary push ----------------------------------------


def vertex_zone(x, i, eps):
    """Membership in V_i(eps) = {x_i > 1 - eps}."""
    return np.asarray(x, dtype=float)[..., i] > 1.0 - eps


def psi2_stage0(x, eps0=EPS0_DEFAULT):
    """Collapse each V_i(eps0/2) exactly onto the vertex (i); identity
    outside the union of the V_i(eps0)."""
    if not 0 < eps0 < 0.5:
        raise ValueError("eps0 must lie in (0, 1/2)")
    x = check_in_triangle(x)
    out = np.array(x, dtype=float, copy=True)
    for i in range(3):
        lam = smoothstep(1.0 - x[..., i], eps0 / 2.0, eps0)
        vertex = np.zeros(3)
        vertex[i] = 1.0
        moved = vertex + lam[..., None] * (x - vertex)
        inside = (x[..., i] > 1.0 - eps0)[..., None]
        out = np.where(inside, moved, out)
    return out


def _stage1_blend(x, i, eps0):
    j, k = [m for m in range(3) if m != i]
    lam = (
        (1.0 - smoothstep(x[..., i], eps0 / 4.0, eps0 / 2.0))
        * smoothstep(x[..., j], eps0 / 2.0, 3.0 * eps0 / 4.0)
        * smoothstep(x[..., k], eps0 / 2.0, 3.0 * eps0 / 4.0)
    )
    return lam


def psi2_stage1(x, eps0=EPS0_DEFAULT):
    """Push the three strips facing each edge onto the edge, radially from
    the opposite vertex; supports are disjoint, each V_i(eps0/2) is
    preserved, and the 1-skeleton is fixed pointwise."""
    if not 0 < eps0 < 0.5:
        raise ValueError("eps0 must lie in (0, 1/2)")
    x = check_in_triangle(x)
    out = np.array(x, dtype=float, copy=True)
    for i in range(3):
        lam = _stage1_blend(x, i, eps0)
        denom = np.where(x[..., i] < 1.0, 1.0 - x[..., i], 1.0)
        proj = np.array(x, dtype=float, copy=True)
        for m in range(3):
            if m == i:
                proj[..., m] = 0.0
            else:
                proj[..., m] = x[..., m] / denom
        moved = x + lam[..., None] * (proj - x)
        out = np.where((lam > 0.0)[..., None], moved, out)
    return out


def psi2(x, eps0=EPS0_DEFAULT):
    """Boundary push followed by exact vertex collapse."""
    return psi2_stage0(psi2_stage1(x, eps0), eps0)


def stage1_support(x, eps0=EPS0_DEFAULT):
    """Largest blend factor of the boundary push at x (0 = untouched)."""
    x = np.asarray(x, dtype=float)
    return np.max(np.stack([_stage1_blend(x, i, eps0) for i in range(3)], axis=-1), axis=-1)


def outside_all_supports(x, eps0=EPS0_DEFAULT):
    """True where both stages are provably the identity."""
    x = np.asarray(x, dtype=float)
    in_vertex = np.stack([vertex_zone(x, i, eps0) for i in range(3)], axis=-1).any(axis=-1)
    return (~in_vertex) & (stage1_support(x, eps0) == 0.0)


# -- tameness and the planar extension ----------------------------------------


def tameness_check(params, values, delta, tol=1e-12):
    """True iff the sampled path is constant (within tol) on [0, delta] and
    on [1 - delta, 1]; parameters outside [0, 1] join the nearer end zone.

    The sample grid must resolve the end zones: spacing below delta / 4.
    """
    params = np.asarray(params, dtype=float)
    values = np.asarray(values, dtype=float)
    if values.ndim == 1:
        values = values[:, None]
    order = np.argsort(params)
    params, values = params[order], values[order]
    inside = (params >= 0.0) & (params <= 1.0)
    if inside.sum() >= 2:
        spacing = np.max(np.diff(params[inside]))
        if spacing > delta / 4.0:
            raise ValueError(
                f"sample grid too coarse: spacing {spacing:.3g} exceeds delta/4 = {delta / 4.0:.3g}"
            )
    low = params <= delta
    high = params >= 1.0 - delta
    for zone in (low, high):
        if zone.sum() < 2:
            continue
        v = values[zone]
        if np.max(np.abs(v - v[0])) > tol:
            return False
    return True


def plane_region(z, tol=1e-12):
    """Classify a point of the affine plane {sum = 1}: the triangle itself,
    the strip beyond face i, or the wedge beyond vertex i."""
    z = np.asarray(z, dtype=float)
    if abs(z.sum() - 1.0) > 1e-9:
        raise ValueError("extension points must satisfy sum = 1")
    negative = [i for i in range(3) if z[i] < -tol]
    if not negative:
        return ("triangle", None)
    if len(negative) == 1:
        return ("strip", negative[0])
    if len(negative) == 2:
        apex = next(i for i in range(3) if i not in negative)
        return ("wedge", apex)
    raise ValueError("a plane point with sum 1 cannot have three negative coordinates")


def sigma_extension(sigma, eps0=EPS0_DEFAULT, check=True, samples=40):
    """Extend a map of the triangle over the plane {sum = 1}.

    Beyond face i the value is taken at the point where the ray from
    vertex (i) through z re-enters face i; beyond vertex i the value is
    frozen at that vertex.  For this to be continuous, ``sigma`` must be
    constant on each vertex zone V_i(eps0/2); this precondition is sampled
    when ``check`` is set, and violations raise with the offending point.
    """
    if check:
        for i in range(3):
            vertex = np.zeros(3)
            vertex[i] = 1.0
            ref = np.asarray(sigma(vertex), dtype=float)
            for a in np.linspace(0.0, eps0 / 2.0 - 1e-6, samples):
                for frac in np.linspace(0.0, 1.0, 8):
                    point = np.array(vertex)
                    point[i] = 1.0 - a
                    others = [m for m in range(3) if m != i]
                    point[others[0]] = a * frac
                    point[others[1]] = a * (1.0 - frac)
                    val = np.asarray(sigma(point), dtype=float)
                    if np.max(np.abs(val - ref)) > 1e-9:
                        raise ValueError(
                            f"extension precondition fails: not constant near vertex {i} "
                            f"at {point.tolist()}"
                        )

    def extended(z):
        z = np.asarray(z, dtype=float)
        kind, i = plane_region(z)
        if kind == "triangle":
            # clip only the sub-tolerance negatives; no renormalization, so
            # genuine triangle points evaluate to sigma(z) exactly
            return sigma(np.clip(z, 0.0, None))
        if kind == "wedge":
            vertex = np.zeros(3)
            vertex[i] = 1.0
            return sigma(vertex)
        vertex = np.zeros(3)
        vertex[i] = 1.0
        q = vertex + (z - vertex) / (1.0 - z[i])
        q[i] = 0.0
        return sigma(q)

    return extended
