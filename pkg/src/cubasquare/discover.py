"""Numerical discovery of low-degree rules for the constant weight.

Two quadratic matrix systems over free Hankel entries are solved by
multistart Levenberg-Marquardt:

* even mode (degree 2n-2, Gaussian): Gamma = G_n H G_{n-1}^T must satisfy
  Gamma^T (A1^T A2 - A2^T A1) Gamma = A1 A2^T - A2 A1^T; the nodes are
  the common zeros of P_n + Gamma P_{n-1}.
* odd mode (degree 2n-1, smallest node count): W = I - G_n H G_n^T must
  satisfy W (A1^T A2 - A2^T A1) W = 0 with W positive semidefinite of
  rank floor(n/2); the nodes are the common zeros of U^T P_n where the
  columns of U span the null space of W.

The verified odd search appends the trailing eigenvalues of W to the
residual vector, which steers the iteration onto the semidefinite
rank-deficient branch; plain algebraic solutions failing that condition
are reported separately.  Known solution matrices for small n are kept
in ``KNOWN_EVEN_HANKEL`` / ``KNOWN_ODD_HANKEL`` as reference fixtures.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, sqrt

import numpy as np
from scipy.optimize import least_squares

from .univariate import jacobi_normalized_table_with_derivative

__all__ = [
    "gamma_coefficient",
    "scaling_matrix",
    "legendre_A_matrices",
    "HankelParam",
    "hankel_matrix",
    "even_system_residual",
    "odd_system_residual",
    "solve_even_system",
    "OddSystemSolution",
    "OddSearchReport",
    "odd_system_solve",
    "odd_system_search",
    "PolySystem",
    "orthogonal_polys_from_U",
    "even_system_polys",
    "common_zeros",
    "CommonZeroError",
    "canonical_complement_combos",
    "align_to_reference",
    "KNOWN_EVEN_HANKEL",
    "KNOWN_ODD_HANKEL",
    "KNOWN_ODD5_COMBOS",
]


def gamma_coefficient(k: int) -> float:
    """Leading coefficient of sqrt(2k+1) P_k: (2k)! sqrt(2k+1) / (2^k k!^2)."""
    return comb(2 * k, k) * sqrt(2 * k + 1) / 2.0**k


def scaling_matrix(n: int) -> np.ndarray:
    """Diagonal G_n with entries gamma_{n-k} gamma_k, k = 0..n."""
    return np.diag([gamma_coefficient(n - k) * gamma_coefficient(k) for k in range(n + 1)])


def _a_coeff(k: int) -> float:
    return (k + 1) / sqrt((2 * k + 1) * (2 * k + 3))


def legendre_A_matrices(n: int):
    """Banded three-term matrices A_{n,1}, A_{n,2} for the constant weight."""
    if n < 0:
        raise ValueError("n must be >= 0")
    A1 = np.zeros((n + 1, n + 2))
    A2 = np.zeros((n + 1, n + 2))
    for k in range(n + 1):
        A1[k, k] = _a_coeff(n - k)
        A2[k, k + 1] = _a_coeff(k)
    return A1, A2


@dataclass(frozen=True)
class HankelParam:
    """Free Hankel entries h_0, h_1, ... of the even or odd system."""

    mode: str
    n: int
    h: np.ndarray

    def __post_init__(self):
        if self.mode not in ("even", "odd"):
            raise ValueError("mode must be 'even' or 'odd'")
        h = np.asarray(self.h, dtype=float)
        object.__setattr__(self, "h", h)
        want = 2 * self.n if self.mode == "even" else 2 * self.n + 1
        if h.shape != (want,):
            raise ValueError(f"{self.mode} system at n={self.n} needs {want} entries, got {h.shape}")

    @property
    def matrix(self) -> np.ndarray:
        cols = self.n if self.mode == "even" else self.n + 1
        return hankel_matrix(self.h, self.n + 1, cols)


def hankel_matrix(h: np.ndarray, rows: int, cols: int) -> np.ndarray:
    h = np.asarray(h, dtype=float)
    return np.array([[h[i + j] for j in range(cols)] for i in range(rows)])


def _coerce_h(n: int, H, mode: str) -> np.ndarray:
    if isinstance(H, HankelParam):
        if H.mode != mode or H.n != n:
            raise ValueError(f"HankelParam is for {H.mode} n={H.n}, expected {mode} n={n}")
        return H.h
    h = np.asarray(H, dtype=float)
    if h.ndim == 2:  # accept a materialized Hankel matrix
        rows, cols = (n + 1, n) if mode == "even" else (n + 1, n + 1)
        if h.shape != (rows, cols):
            raise ValueError(f"expected shape {(rows, cols)}, got {h.shape}")
        flat = np.concatenate([h[0, :], h[1:, -1]])
        if np.abs(hankel_matrix(flat, rows, cols) - h).max() > 1e-12 * max(1.0, np.abs(h).max()):
            raise ValueError("matrix does not have constant anti-diagonals")
        return flat
    return _coerce_h(n, HankelParam(mode, n, h), mode)


def _skew_parts(n: int):
    A1, A2 = legendre_A_matrices(n - 1)
    M = A1.T @ A2 - A2.T @ A1
    C = A1 @ A2.T - A2 @ A1.T
    return M, C


def even_system_residual(n: int, H) -> np.ndarray:
    """Independent entries of Gamma^T M Gamma - C; zero iff H solves the system."""
    h = _coerce_h(n, H, "even")
    G1, G0 = scaling_matrix(n), scaling_matrix(n - 1)
    Gam = G1 @ hankel_matrix(h, n + 1, n) @ G0.T
    M, C = _skew_parts(n)
    R = Gam.T @ M @ Gam - C
    iu = np.triu_indices(n, 1)
    return R[iu]


def odd_system_residual(n: int, H) -> np.ndarray:
    """Independent entries of W M W with W = I - G H G^T."""
    h = _coerce_h(n, H, "odd")
    G = scaling_matrix(n)
    W = np.eye(n + 1) - G @ hankel_matrix(h, n + 1, n + 1) @ G.T
    M, _ = _skew_parts(n)
    R = W @ M @ W
    iu = np.triu_indices(n + 1, 1)
    return R[iu]


def _odd_W(n: int, h: np.ndarray) -> np.ndarray:
    G = scaling_matrix(n)
    return np.eye(n + 1) - G @ hankel_matrix(h, n + 1, n + 1) @ G.T


# ---------------------------------------------------------------------------
# symmetry orbits and deduplication

def _alt(h: np.ndarray) -> np.ndarray:
    out = h.copy()
    out[1::2] *= -1.0
    return out


def _orbit(h: np.ndarray, mode: str):
    base = [h, _alt(h)]
    if mode == "even":  # global sign is a symmetry only for the even system
        base += [-h, -_alt(h)]
    return [v for b in base for v in (b, b[::-1].copy())]


def _canonical(h: np.ndarray, mode: str, decimals: int = 7):
    keys = [tuple(np.round(v, decimals)) for v in _orbit(h, mode)]
    i = max(range(len(keys)), key=lambda j: keys[j])
    return keys[i], _orbit(h, mode)[i]


def align_to_reference(h: np.ndarray, ref: np.ndarray, mode: str):
    """Orbit element of h closest to ref and the entrywise distance."""
    best, dist = None, np.inf
    for v in _orbit(np.asarray(h, float), mode):
        d = float(np.abs(v - np.asarray(ref, float)).max())
        if d < dist:
            best, dist = v, d
    return best, dist


# ---------------------------------------------------------------------------
# multistart solvers

_RESID_TOL = 1e-10


def _even_jacobian_factory(n: int):
    G1, G0 = scaling_matrix(n), scaling_matrix(n - 1)
    M, _ = _skew_parts(n)
    iu = np.triu_indices(n, 1)
    basis = []
    for l in range(2 * n):
        E = np.zeros((n + 1, n))
        for i in range(n + 1):
            j = l - i
            if 0 <= j < n:
                E[i, j] = 1.0
        basis.append(G1 @ E @ G0.T)

    def resid(h):
        Gam = G1 @ hankel_matrix(h, n + 1, n) @ G0.T
        _, C = _skew_parts(n)
        return (Gam.T @ M @ Gam - C)[iu]

    def jac(h):
        Gam = G1 @ hankel_matrix(h, n + 1, n) @ G0.T
        cols = []
        for Gl in basis:
            dR = Gl.T @ M @ Gam + Gam.T @ M @ Gl
            cols.append(dR[iu])
        return np.array(cols).T

    return resid, jac


def solve_even_system(n: int, seeds: int = 80, rng_seed: int = 0):
    """Distinct Hankel solutions of the even system from ``seeds`` random starts.

    When the algebraic system has fewer equations than unknowns the search
    additionally restricts to the reflection-invariant subspace (odd-index
    entries zero), which isolates the symmetric solutions.  Results are
    deduplicated under the sign/reflection orbit and sorted canonically;
    an empty list means no solution was found (not a nonexistence proof).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    resid, jac = _even_jacobian_factory(n)
    neq, nvar = n * (n - 1) // 2, 2 * n
    rng = np.random.default_rng(rng_seed)
    scale = 1.0 / np.exp(np.mean(np.log(np.diag(scaling_matrix(n)))) +
                         np.mean(np.log(np.diag(scaling_matrix(n - 1)))))
    found: dict[tuple, np.ndarray] = {}

    def register(h):
        if np.abs(resid(h)).max() <= _RESID_TOL:
            key, canon = _canonical(h, "even")
            found.setdefault(key, canon)

    even_idx = np.arange(0, nvar, 2)
    for trial in range(seeds):
        mag = scale * 3.0 ** rng.integers(-1, 2)
        h0 = rng.uniform(-1.0, 1.0, nvar) * mag
        if neq < nvar:
            # symmetric restriction: odd entries pinned at zero
            x0 = h0[even_idx]

            def rsub(x):
                h = np.zeros(nvar)
                h[even_idx] = x
                return resid(h)

            def jsub(x):
                h = np.zeros(nvar)
                h[even_idx] = x
                return jac(h)[:, even_idx]

            method = "lm" if neq >= len(even_idx) else "trf"
            r = least_squares(rsub, x0, jac=jsub, method=method,
                              xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=400)
            h = np.zeros(nvar)
            h[even_idx] = r.x
            register(h)
            # also probe the full space from the same start
            r = least_squares(resid, h0, jac=jac, method="trf",
                              xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=400)
            register(r.x)
        else:
            r = least_squares(resid, h0, jac=jac, method="lm",
                              xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=400)
            register(r.x)
    sols = [HankelParam("even", n, found[k]) for k in sorted(found)]
    return sols


@dataclass
class OddSystemSolution:
    """Verified odd-system solution: W = V V^T is PSD of rank floor(n/2)."""

    n: int
    hankel: HankelParam
    Wmat: np.ndarray
    V: np.ndarray
    U: np.ndarray
    eigenvalues: np.ndarray


@dataclass
class OddSearchReport:
    n: int
    seeds: int
    rng_seed: int
    verified: list
    algebraic_only: list

    @property
    def status(self) -> str:
        return "found" if self.verified else "not-found"


def _odd_jacobian_factory(n: int, rank_penalty: bool):
    G = scaling_matrix(n)
    M, _ = _skew_parts(n)
    iu = np.triu_indices(n + 1, 1)
    r = n // 2
    tail = (n + 1) - r
    basis = []
    for l in range(2 * n + 1):
        E = np.zeros((n + 1, n + 1))
        for i in range(n + 1):
            j = l - i
            if 0 <= j <= n:
                E[i, j] = 1.0
        basis.append(G @ E @ G.T)

    def resid(h):
        W = _odd_W(n, h)
        parts = [(W @ M @ W)[iu]]
        if rank_penalty:
            parts.append(np.linalg.eigvalsh(W)[:tail])
        return np.concatenate(parts)

    def jac(h):
        W = _odd_W(n, h)
        cols = []
        if rank_penalty:
            ev, Q = np.linalg.eigh(W)
            Qt = Q[:, :tail]
        for Gl in basis:
            dW = -Gl
            dR = dW @ M @ W + W @ M @ dW
            col = dR[iu]
            if rank_penalty:
                col = np.concatenate([col, np.einsum("ik,ij,jk->k", Qt, dW, Qt)])
            cols.append(col)
        return np.array(cols).T

    return resid, jac


def odd_system_search(n: int, seeds: int = 80, rng_seed: int = 0) -> OddSearchReport:
    """Multistart search for the odd system; splits verified vs algebraic-only."""
    if n < 2:
        raise ValueError("n must be >= 2")
    nvar = 2 * n + 1
    r = n // 2
    resid_pen, jac_pen = _odd_jacobian_factory(n, rank_penalty=True)
    resid_alg, jac_alg = _odd_jacobian_factory(n, rank_penalty=False)
    rng = np.random.default_rng(rng_seed)
    g = np.diag(scaling_matrix(n))
    scale = 1.0 / np.exp(2.0 * np.mean(np.log(g)))
    verified: dict[tuple, OddSystemSolution] = {}
    algebraic: dict[tuple, np.ndarray] = {}
    neq_alg = n * (n + 1) // 2
    even_idx = np.arange(0, nvar, 2)

    def classify(h):
        if np.abs(odd_system_residual(n, h)).max() > _RESID_TOL:
            return
        W = _odd_W(n, h)
        ev = np.linalg.eigvalsh(W)
        tail = ev[: (n + 1) - r]
        lead = ev[(n + 1) - r:]
        ok = (
            np.abs(tail).max() <= 1e-9
            and (lead.min() if lead.size else 1.0) > 1e-8
            and (lead.min() if lead.size else 1.0) > 100.0 * np.abs(tail).max()
        )
        key, canon = _canonical(h, "odd")
        if ok:
            if key not in verified:
                Wc = _odd_W(n, canon)
                evc, Qc = np.linalg.eigh(Wc)
                V = Qc[:, (n + 1) - r:] * np.sqrt(np.maximum(evc[(n + 1) - r:], 0.0))
                U = Qc[:, : (n + 1) - r]
                verified[key] = OddSystemSolution(
                    n=n, hankel=HankelParam("odd", n, canon), Wmat=Wc, V=V, U=U, eigenvalues=evc
                )
        else:
            algebraic.setdefault(key, canon)

    starts = []
    for trial in range(seeds):
        mag = scale * 3.0 ** rng.integers(-1, 2)
        starts.append(rng.uniform(-1.0, 1.0, nvar) * mag)
    for h0 in starts:
        rr = least_squares(resid_pen, h0, jac=jac_pen, method="lm",
                           xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=600)
        classify(rr.x)
        if neq_alg + ((n + 1) - r) < nvar or n == 3:
            # reflection-symmetric restriction isolates manifold solutions
            x0 = h0[even_idx]

            def rsub(x):
                h = np.zeros(nvar)
                h[even_idx] = x
                return resid_pen(h)

            def jsub(x):
                h = np.zeros(nvar)
                h[even_idx] = x
                return jac_pen(h)[:, even_idx]

            rr = least_squares(rsub, x0, jac=jsub, method="lm",
                               xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=600)
            h = np.zeros(nvar)
            h[even_idx] = rr.x
            classify(h)
        # plain algebraic run records solutions that fail the PSD/rank filter
        method = "lm" if neq_alg >= nvar else "trf"
        rr = least_squares(resid_alg, h0, jac=jac_alg, method=method,
                           xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=600)
        classify(rr.x)
    ver = [verified[k] for k in sorted(verified)]
    alg = [HankelParam("odd", n, algebraic[k]) for k in sorted(algebraic) if k not in verified]
    return OddSearchReport(n=n, seeds=seeds, rng_seed=rng_seed, verified=ver, algebraic_only=alg)


def odd_system_solve(n: int, seeds: int = 80, rng_seed: int = 0):
    """Verified solutions only (PSD W of rank floor(n/2))."""
    return odd_system_search(n, seeds, rng_seed).verified


# ---------------------------------------------------------------------------
# polynomial systems and common zeros

class PolySystem:
    """Linear combinations of degree-n (and optionally degree-(n-1))
    product-Legendre members, with analytic gradients."""

    def __init__(self, n: int, coeff_n: np.ndarray, coeff_nm1: np.ndarray | None = None):
        self.n = n
        self.coeff_n = np.asarray(coeff_n, dtype=float)
        self.coeff_nm1 = None if coeff_nm1 is None else np.asarray(coeff_nm1, dtype=float)

    def __len__(self) -> int:
        return self.coeff_n.shape[0]

    def __getitem__(self, i):
        def f(x, y):
            return self.values(x, y)[i]
        return f

    def _tables(self, x, y):
        tx, dtx = jacobi_normalized_table_with_derivative(0.0, 0.0, self.n, np.asarray(x, float))
        ty, dty = jacobi_normalized_table_with_derivative(0.0, 0.0, self.n, np.asarray(y, float))
        return tx, dtx, ty, dty

    def _stack(self, tx, ty, d):
        return np.array([tx[d - k] * ty[k] for k in range(d + 1)])

    def values(self, x, y) -> np.ndarray:
        tx, _, ty, _ = self._tables(x, y)
        F = self.coeff_n @ self._stack(tx, ty, self.n)
        if self.coeff_nm1 is not None:
            F = F + self.coeff_nm1 @ self._stack(tx, ty, self.n - 1)
        return F

    def values_and_jacobian(self, x, y):
        n = self.n
        tx, dtx, ty, dty = self._tables(x, y)
        Pn = self._stack(tx, ty, n)
        Pnx = np.array([dtx[n - k] * ty[k] for k in range(n + 1)])
        Pny = np.array([tx[n - k] * dty[k] for k in range(n + 1)])
        F = self.coeff_n @ Pn
        Jx = self.coeff_n @ Pnx
        Jy = self.coeff_n @ Pny
        if self.coeff_nm1 is not None:
            Pm = self._stack(tx, ty, n - 1)
            Pmx = np.array([dtx[n - 1 - k] * ty[k] for k in range(n)])
            Pmy = np.array([tx[n - 1 - k] * dty[k] for k in range(n)])
            F = F + self.coeff_nm1 @ Pm
            Jx = Jx + self.coeff_nm1 @ Pmx
            Jy = Jy + self.coeff_nm1 @ Pmy
        return F, Jx, Jy


def orthogonal_polys_from_U(n: int, U: np.ndarray) -> PolySystem:
    """The degree-n orthogonal polynomials U^T P_n as an evaluator system."""
    U = np.asarray(U, dtype=float)
    if U.shape[0] != n + 1:
        raise ValueError(f"U must have {n + 1} rows")
    return PolySystem(n, U.T)


def even_system_polys(n: int, H) -> PolySystem:
    """Quasi-orthogonal family P_n + Gamma P_{n-1} for an even-system solution."""
    h = _coerce_h(n, H, "even")
    Gam = scaling_matrix(n) @ hankel_matrix(h, n + 1, n) @ scaling_matrix(n - 1).T
    return PolySystem(n, np.eye(n + 1), Gam)


class CommonZeroError(RuntimeError):
    def __init__(self, message, found):
        super().__init__(message)
        self.found = found


def common_zeros(
    polys,
    expected_count: int,
    region: float = 1.3,
    grid: int = 60,
    tol: float = 1e-10,
    dedupe_tol: float = 1e-9,
) -> np.ndarray:
    """All common real zeros in [-region, region]^2 by dense multistart
    Gauss-Newton; hard error when the count disagrees with expected_count."""
    g = np.linspace(-region, region, grid)
    X, Y = np.meshgrid(g, g, indexing="ij")
    x = X.ravel().copy()
    y = Y.ravel().copy()
    if hasattr(polys, "values_and_jacobian"):
        fj = polys.values_and_jacobian
    else:
        plist = list(polys)

        def fj(x, y, _h=1e-7):
            F = np.array([p(x, y) for p in plist])
            Jx = np.array([(p(x + _h, y) - p(x - _h, y)) / (2 * _h) for p in plist])
            Jy = np.array([(p(x, y + _h) - p(x, y - _h)) / (2 * _h) for p in plist])
            return F, Jx, Jy

    for _ in range(80):
        F, Jx, Jy = fj(x, y)
        a = (Jx * Jx).sum(axis=0)
        b = (Jx * Jy).sum(axis=0)
        c = (Jy * Jy).sum(axis=0)
        g1 = (Jx * F).sum(axis=0)
        g2 = (Jy * F).sum(axis=0)
        det = a * c - b * b
        det = np.where(np.abs(det) < 1e-300, 1.0, det)
        x = x - (c * g1 - b * g2) / det
        y = y - (a * g2 - b * g1) / det
        bad = ~np.isfinite(x) | ~np.isfinite(y) | (np.abs(x) > 10) | (np.abs(y) > 10)
        x[bad] = 0.0
        y[bad] = 0.0
    F, _, _ = fj(x, y)
    ok = (np.abs(F).max(axis=0) <= tol) & (np.abs(x) <= region + 1e-8) & (np.abs(y) <= region + 1e-8)
    pts = sorted(zip(x[ok], y[ok]))
    out: list[tuple[float, float]] = []
    for p in pts:
        if any(abs(p[0] - q[0]) <= dedupe_tol and abs(p[1] - q[1]) <= dedupe_tol for q in out[-200:]):
            continue
        out.append(p)
    found = np.array(out) if out else np.zeros((0, 2))
    if len(found) != expected_count:
        raise CommonZeroError(
            f"found {len(found)} common zeros, expected {expected_count}", found
        )
    return found


def canonical_complement_combos(U: np.ndarray) -> np.ndarray:
    """Row-reduce span(U^T) so each row has a unit coefficient on one of the
    trailing member slots (descending), zeros on the others."""
    B = np.asarray(U, dtype=float).T
    q = B.shape[0]
    sub = B[:, -q:]
    C = np.linalg.solve(sub, B)
    return C[::-1]


# ---------------------------------------------------------------------------
# reference fixtures (known solution matrices, flattened Hankel entries)

KNOWN_EVEN_HANKEL = {
    3: HankelParam(
        "even", 3, 4.0 / (27.0 * sqrt(7.0)) * np.array([-11.0 / 25.0, 0.0, 1.0, 0.0, 2.0 / 5.0, 0.0])
    ),
}

KNOWN_ODD_HANKEL = {
    3: HankelParam(
        "odd", 3, 4.0 / 135.0 * np.array([-8.0 / 35.0, 0.0, 1.0, 0.0, 0.0, 0.0, 27.0 / 35.0])
    ),
    4: HankelParam(
        "odd", 4, 44.0 / 14385.0 * np.array(
            [94.0 / 231.0, 1.0, 1.0, 1.0, -82.0 / 55.0, 1.0, 1.0, 1.0, 94.0 / 231.0]
        )
    ),
    5: HankelParam(
        "odd", 5, 96.0 / 77875.0 * np.array(
            [
                1151.0 / 2079.0,
                10.0 * sqrt(86.0) / 189.0,
                -31.0 / 81.0,
                -sqrt(43.0 / 2.0) / 9.0,
                1.0,
                0.0,
                1.0,
                sqrt(43.0 / 2.0) / 9.0,
                -31.0 / 81.0,
                -10.0 * sqrt(86.0) / 189.0,
                1151.0 / 2079.0,
            ]
        )
    ),
}

# degree-5 complement combinations in the product-Legendre basis, rows with a
# unit coefficient on members 5, 4, 3, 2 respectively
KNOWN_ODD5_COMBOS = np.array(
    [
        [10.0 * sqrt(86.0) / 189.0, 1081.0 * sqrt(11.0) / (2835.0 * sqrt(3.0)), 0.0, 0.0, 0.0, 1.0],
        [205.0 / (21.0 * sqrt(33.0)), 10.0 * sqrt(86.0) / 189.0, 0.0, 0.0, 1.0, 0.0],
        [-5.0 * sqrt(430.0) / (27.0 * sqrt(77.0)), 62.0 * sqrt(5.0) / (81.0 * sqrt(21.0)), 0.0, 1.0, 0.0, 0.0],
        [-10.0 * sqrt(5.0) / (3.0 * sqrt(77.0)), -sqrt(430.0) / (9.0 * sqrt(21.0)), 1.0, 0.0, 0.0, 0.0],
    ]
)
