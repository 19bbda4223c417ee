"""Node families on the square and their generating polynomials.

Each family is produced directly from its cosine-lattice description:

* ``gauss_u``:        interior checkerboard (cos(a pi/(n+2)), cos(b pi/(n+1))),
                      1 <= a <= n+1, 1 <= b <= n, a + b even.
* ``min_t_even``:     closed checkerboard (cos(a pi/n), cos(b pi/n)),
                      0 <= a, b <= n, a + b odd  (n = 2m).
* ``near_min_t_odd``: two full grids of even and odd cosine multiples of
                      pi/n  (n = 2m-1).
* ``padua``:          (-cos(j pi/n), -cos(l pi/(n+1))), j + l even.
* ``gencheb``:        fourfold symmetrization of the half-angle sums and
                      differences of Jacobi-zero angles.

The published index ranges for the first three lattices contain
typographical inconsistencies; the forms above are the unique variants
that satisfy the cardinality formulas, make the stated generating
polynomials vanish, and pass the moment-oracle exactness checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .univariate import eval_chebyshev_t, eval_chebyshev_u, jacobi_angle_grid

__all__ = [
    "NodeSet",
    "gauss_u_nodes",
    "min_t_nodes_even",
    "near_min_t_nodes_odd",
    "padua_points",
    "gencheb_nodes",
    "lissajous_curve_point",
    "vanishing_polynomials",
    "vanishing_residual",
    "moeller_count",
]

_DEDUP_TOL = 1e-12


def moeller_count(n: int) -> int:
    """Lower bound n(n+1)/2 + floor(n/2) for centrally symmetric weights."""
    return n * (n + 1) // 2 + n // 2


@dataclass(frozen=True)
class NodeSet:
    """A finite point set in the closed square with its family metadata."""

    points: np.ndarray
    family: str
    n: int
    expected_count: int
    alpha: float | None = None
    beta: float | None = None
    provenance: str = ""

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float).reshape(-1, 2)
        object.__setattr__(self, "points", pts)
        if len(pts) != self.expected_count:
            raise ValueError(
                f"{self.family}(n={self.n}): got {len(pts)} points, expected {self.expected_count}"
            )

    def __len__(self) -> int:
        return len(self.points)

    def to_dict(self) -> dict:
        d = {
            "family": self.family,
            "n": self.n,
            "count": len(self.points),
            "points": [[format(x, ".17g"), format(y, ".17g")] for x, y in self.points],
            "provenance": self.provenance,
        }
        if self.alpha is not None:
            d["alpha"] = self.alpha
            d["beta"] = self.beta
        return d


def _finish(points: list[tuple[float, float]], **kw) -> NodeSet:
    """Dedupe (max-norm tolerance), sort lexicographically, build the set."""
    pts = sorted(points)
    out = []
    for p in pts:
        if out and abs(p[0] - out[-1][0]) <= _DEDUP_TOL and abs(p[1] - out[-1][1]) <= _DEDUP_TOL:
            continue
        out.append(p)
    return NodeSet(points=np.array(out), **kw)


def gauss_u_nodes(n: int) -> NodeSet:
    """Gaussian nodes of the degree-(2n-2) rule for the Chebyshev-2 weight."""
    if n < 1:
        raise ValueError("n must be >= 1")
    pts = [
        (np.cos(a * np.pi / (n + 2)), np.cos(b * np.pi / (n + 1)))
        for a in range(1, n + 2)
        for b in range(1, n + 1)
        if (a + b) % 2 == 0
    ]
    return _finish(
        pts,
        family="gauss_u",
        n=n,
        expected_count=n * (n + 1) // 2,
        provenance="interior checkerboard a+b even on pi/(n+2) x pi/(n+1) lattice",
    )


def min_t_nodes_even(n: int) -> NodeSet:
    """Minimal-rule nodes of degree 2n-1 for the Chebyshev-1 weight, n even."""
    if n < 2 or n % 2:
        raise ValueError("n must be even and >= 2")
    pts = [
        (np.cos(a * np.pi / n), np.cos(b * np.pi / n))
        for a in range(n + 1)
        for b in range(n + 1)
        if (a + b) % 2 == 1
    ]
    return _finish(
        pts,
        family="min_t_even",
        n=n,
        expected_count=moeller_count(n),
        provenance="closed checkerboard a+b odd on pi/n lattice",
    )


def near_min_t_nodes_odd(n: int) -> NodeSet:
    """Near-minimal nodes of degree 2n-1 for the Chebyshev-1 weight, n odd."""
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and >= 3")
    m = (n + 1) // 2
    ev = [np.cos(2 * i * np.pi / n) for i in range(m)]
    od = [np.cos((2 * i + 1) * np.pi / n) for i in range(m)]
    pts = [(x, y) for x in ev for y in ev] + [(x, y) for x in od for y in od]
    return _finish(
        pts,
        family="near_min_t_odd",
        n=n,
        expected_count=moeller_count(n) + 1,
        provenance="even-even and odd-odd full grids of cosine multiples of pi/n",
    )


def padua_points(n: int) -> NodeSet:
    """Padua points: dim Pi_n^2 points on the generating Lissajous curve."""
    if n < 1:
        raise ValueError("n must be >= 1")
    pts = [
        (-np.cos(j * np.pi / n), -np.cos(l * np.pi / (n + 1)))
        for j in range(n + 1)
        for l in range(n + 2)
        if (j + l) % 2 == 0
    ]
    return _finish(
        pts,
        family="padua",
        n=n,
        expected_count=(n + 1) * (n + 2) // 2,
        provenance="parity lattice j+l even on pi/n x pi/(n+1) grid, both axes negated",
    )


def gencheb_nodes(alpha: float, beta: float, n: int) -> NodeSet:
    """Minimal (n even) or near-minimal (n odd) nodes for the gencheb weight.

    Even n = 2m uses the degree-m Jacobi angles with parameters
    (alpha, beta) over 1 <= j <= k <= m; odd n = 2m+1 uses parameters
    (alpha+1, beta) over 0 <= j <= k <= m, which places 2(m+1) points on
    the main diagonal.
    """
    if alpha <= -1 or beta <= -1:
        raise ValueError("alpha, beta must exceed -1")
    if n < 2:
        raise ValueError("n must be >= 2")
    if n % 2 == 0:
        m = n // 2
        grid = jacobi_angle_grid(alpha, beta, m)
        lo, expected = 1, moeller_count(n)
        family = "gencheb_even"
    else:
        m = (n - 1) // 2
        grid = jacobi_angle_grid(alpha + 1, beta, m)
        lo, expected = 0, moeller_count(n) + 1
        family = "gencheb_odd"
    th = grid.thetas
    pts = []
    for j in range(lo, m + 1):
        for k in range(j, m + 1):
            s = np.cos((th[j] - th[k]) / 2.0)
            t = np.cos((th[j] + th[k]) / 2.0)
            pts.extend([(s, t), (t, s), (-s, -t), (-t, -s)])
    try:
        return _finish(
            pts,
            family=family,
            n=n,
            expected_count=expected,
            alpha=alpha,
            beta=beta,
            provenance=f"fourfold symmetrized half-angle lattice, jacobi degree {m}",
        )
    except ValueError as exc:
        raise ValueError(f"gencheb node count degenerated for ({alpha}, {beta}, {n}): {exc}") from None


def lissajous_curve_point(n: int, t):
    """Point (-cos((n+1)t), -cos(nt)) on the Padua generating curve."""
    t = np.asarray(t, dtype=float)
    return np.stack([-np.cos((n + 1) * t), -np.cos(n * t)], axis=-1)


def vanishing_polynomials(ns: NodeSet):
    """Generating polynomials that vanish on every node of the family."""
    n = ns.n
    if ns.family == "gauss_u":
        def make(k):
            return lambda x, y: (
                eval_chebyshev_u(n - k, x) * eval_chebyshev_u(k, y)
                - eval_chebyshev_u(k, x) * eval_chebyshev_u(n - 1 - k, y)
            )
        return [make(k) for k in range(n + 1)]
    if ns.family == "min_t_even":
        def make(k):
            return lambda x, y: (
                eval_chebyshev_t(n - k, x) * eval_chebyshev_t(k, y)
                + eval_chebyshev_t(k, x) * eval_chebyshev_t(n - k, y)
            )
        return [make(k) for k in range(n // 2 + 1)]
    if ns.family == "near_min_t_odd":
        m = (n + 1) // 2
        def make(k):
            return lambda x, y: (
                eval_chebyshev_t(2 * m - k, x) * eval_chebyshev_t(k - 1, y)
                - eval_chebyshev_t(k - 1, x) * eval_chebyshev_t(2 * m - k, y)
            )
        return [make(k) for k in range(1, m + 1)]
    if ns.family == "padua":
        def q0(x, y):
            return eval_chebyshev_t(n + 1, x) - eval_chebyshev_t(n - 1, x)
        def make(k):
            return lambda x, y: (
                eval_chebyshev_t(n - k + 1, x) * eval_chebyshev_t(k, y)
                + eval_chebyshev_t(n - k + 1, y) * eval_chebyshev_t(k - 1, x)
            )
        return [q0] + [make(k) for k in range(1, n + 2)]
    if ns.family in ("gencheb_even", "gencheb_odd"):
        from .basis2d import p_general

        a, b = ns.alpha, ns.beta
        if ns.family == "gencheb_even":
            m = n // 2
            def make(k):
                return lambda x, y: p_general(a, b, -0.5, k, m, x, y)
            return [make(k) for k in range(m + 1)]
        m = (n - 1) // 2
        def make(k):
            return lambda x, y: (
                (np.asarray(x, float) - np.asarray(y, float))
                * p_general(a + 1, b, -0.5, k, m, x, y)
            )
        return [make(k) for k in range(m + 1)]
    raise ValueError(f"unknown family {ns.family!r}")


def vanishing_residual(ns: NodeSet) -> float:
    """Max absolute value of the generating polynomials over the node set."""
    x, y = ns.points[:, 0], ns.points[:, 1]
    return max(float(np.abs(p(x, y)).max()) for p in vanishing_polynomials(ns))
