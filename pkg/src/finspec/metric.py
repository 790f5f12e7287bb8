"""Spectral distance on states.

The distance d(w1, w2) = sup{ |w1(x) - w2(x)| : ||[D, pi(x)]|| <= 1 } is
computed through its dual form

    d = 1 / min{ ||[D, pi(x)]|| : c . x = 1 },   c = w1 - w2,

a convex problem over real-valued functions x.  The minimizer doubles as the
certificate: x / ||[D, pi(x)]|| attains the sup.  Infinite distances are
detected combinatorially from the character-coupling graph before any
optimization runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import null_space
from scipy.optimize import linprog, minimize
from scipy.special import logsumexp

from .algebra import AlgebraElement, State, same_algebra
from .errors import AlgebraMismatch, TooManyCharacters
from .numerics import operator_norm
from .triple import SpectralTriple, coupling_components

DISTANCE_TOL = 1e-6
INFINITE_THRESHOLD = 1e-10


@dataclass(frozen=True)
class DistanceValue:
    value: float                      # math.inf for decoupled states
    certificate: AlgebraElement | None
    solver_residual: float

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.value)

    def to_json(self) -> dict:
        return {
            "value": "inf" if self.is_infinite else float(self.value),
            "solver_residual": float(self.solver_residual),
        }


@dataclass(frozen=True)
class DistanceMatrix:
    labels: tuple
    values: np.ndarray               # k x k floats, inf across components

    @property
    def k(self) -> int:
        return len(self.labels)

    def to_json(self) -> dict:
        return {
            "labels": list(self.labels),
            "matrix": [
                ["inf" if math.isinf(v) else float(v) for v in row]
                for row in self.values
            ],
        }


def _commutator_generators(t: SpectralTriple) -> np.ndarray:
    d = np.asarray(t.dirac)
    return np.stack([d @ p - p @ d for p in t.algebra.projections])


def _component_masks(t: SpectralTriple):
    comps = coupling_components(t)
    masks = np.zeros((len(comps), t.algebra.k))
    for row, comp in enumerate(comps):
        masks[row, comp] = 1.0
    return masks


def detect_infinite(t: SpectralTriple, i: int, j: int) -> bool:
    """True iff characters i and j lie in different coupling components."""
    comps = coupling_components(t)
    for comp in comps:
        if i in comp:
            return j not in comp
    raise AlgebraMismatch("character index out of range")


def _check_states(t: SpectralTriple, *states: State):
    for s in states:
        if not same_algebra(s.algebra, t.algebra):
            raise AlgebraMismatch("state does not live on the triple's algebra")


def _embedded(k_mats: np.ndarray, x: np.ndarray) -> np.ndarray:
    return np.tensordot(x, k_mats, axes=1)


def _spectral_value_subgrad(k_mats: np.ndarray, x: np.ndarray):
    m = _embedded(k_mats, x)
    u, s, vh = np.linalg.svd(m)
    top_u = u[:, 0]
    top_v = vh[0]
    grad = np.real(np.einsum("i,kij,j->k", np.conj(top_u), k_mats, top_v))
    return float(s[0]), grad


def _smoothed_value_grad(k_mats: np.ndarray, x: np.ndarray, mu: float):
    """Softmax smoothing of the spectral norm via the Hermitian dilation
    H = [[0, M], [M*, 0]], whose eigenvalues are +-singular values."""
    m = _embedded(k_mats, x)
    n = m.shape[0]
    h = np.zeros((2 * n, 2 * n), dtype=complex)
    h[:n, n:] = m
    h[n:, :n] = m.conj().T
    lam, vec = np.linalg.eigh(h)
    val = mu * logsumexp(lam / mu)
    w = np.exp(lam / mu - logsumexp(lam / mu))
    p = vec[:n, :]
    q = vec[n:, :]
    # d lam_a / d x_k = 2 Re(p_a* K_k q_a); weight by the softmax.
    grad = 2 * np.real(np.einsum("ia,kij,ja,a->k", np.conj(p), k_mats, q, w))
    return float(val), grad


def _minimize_slice(k_mats: np.ndarray, c: np.ndarray, masks: np.ndarray,
                    seed: int, restarts: int, subgrad_iters: int):
    """min ||sum_i x_i K_i|| over the affine slice {c.x = 1}.

    Per-component constant shifts leave both objective and constraint value
    unchanged, so the search is restricted to per-component zero-sum vectors.
    Projected subgradient passes (seeded restarts, 1/sqrt(t) steps) are
    followed by a softmax-smoothing polish minimized with L-BFGS.
    """
    k = len(c)
    a_rows = np.vstack([c[None, :], masks])
    rhs = np.zeros(a_rows.shape[0])
    rhs[0] = 1.0
    x0, *_ = np.linalg.lstsq(a_rows, rhs, rcond=None)
    basis = null_space(a_rows)

    def as_x(z):
        return x0 + basis @ z if basis.size else x0

    rng = np.random.default_rng(seed)
    best_x = x0
    best_f, _ = _spectral_value_subgrad(k_mats, x0)

    if basis.size:
        dim = basis.shape[1]
        for r in range(restarts):
            z = np.zeros(dim) if r == 0 else rng.normal(size=dim)
            x = as_x(z)
            f, g = _spectral_value_subgrad(k_mats, x)
            gz = basis.T @ g
            step0 = max(f, 1e-12) / max(np.linalg.norm(gz), 1e-12)
            local_best = f
            for it in range(1, subgrad_iters + 1):
                gn = np.linalg.norm(gz)
                if gn <= 1e-14:
                    break
                z = z - (step0 / math.sqrt(it)) * gz / gn
                f, g = _spectral_value_subgrad(k_mats, as_x(z))
                gz = basis.T @ g
                if f < local_best:
                    local_best = f
                    if f < best_f:
                        best_f, best_x = f, as_x(z)

        # Smoothing polish from the incumbent.
        z = np.linalg.lstsq(basis, best_x - x0, rcond=None)[0]
        mu = max(best_f, 1e-9) / 10.0
        mu_floor = max(best_f, 1e-9) * 1e-8
        while True:
            res = minimize(
                lambda zz: _reduce_grad(k_mats, x0, basis, zz, mu),
                z, jac=True, method="L-BFGS-B",
                options={"maxiter": 200, "ftol": 1e-14, "gtol": 1e-12},
            )
            z = res.x
            f, _ = _spectral_value_subgrad(k_mats, as_x(z))
            if f < best_f:
                best_f, best_x = f, as_x(z)
            if mu <= mu_floor:
                break
            mu = max(mu / 20.0, mu_floor)

        best_x, best_f, gap = _cutting_plane_refine(
            k_mats, x0, basis, best_x, best_f
        )
        return best_x, best_f, gap

    return best_x, best_f, 0.0


def _cutting_plane_refine(k_mats, x0, basis, best_x, best_f,
                          max_cuts: int = 200, rel_gap: float = 1e-10):
    """Kelley refinement of min ||M(x)|| over the slice x = x0 + basis z.

    Every visited point contributes the cut Re(u* M(x) v) <= s through its
    top singular pair, which underestimates the spectral norm everywhere.
    The LP value is a certified lower bound, so the returned gap is a true
    optimality gap rather than a heuristic estimate.
    """
    dim = basis.shape[1]
    z = np.linalg.lstsq(basis, best_x - x0, rcond=None)[0]
    radius = 10.0 * (np.max(np.abs(z)) + np.max(np.abs(x0)) + 1.0)
    bounds = [(-radius, radius)] * dim + [(0.0, None)]
    cost = np.zeros(dim + 1)
    cost[-1] = 1.0
    rows, rhs = [], []
    lower = 0.0

    def add_cuts(point):
        m = _embedded(k_mats, point)
        u, s, vh = np.linalg.svd(m)
        for a in range(len(s)):
            if s[a] < s[0] - 1e-8 * max(s[0], 1.0):
                break
            w = np.einsum("i,kij,j->k", np.conj(u[:, a]), k_mats, vh[a])
            row = np.empty(dim + 1)
            row[:dim] = np.real(w) @ basis
            row[-1] = -1.0
            rows.append(row)
            rhs.append(-float(np.real(w) @ x0))

    add_cuts(best_x)
    for _ in range(max_cuts):
        res = linprog(cost, A_ub=np.asarray(rows), b_ub=np.asarray(rhs),
                      bounds=bounds, method="highs")
        if not res.success:
            break
        lower = max(lower, float(res.x[-1]))
        x = x0 + basis @ res.x[:dim]
        f, _ = _spectral_value_subgrad(k_mats, x)
        if f < best_f:
            best_f, best_x = f, x
        if best_f - lower <= rel_gap * max(best_f, 1e-12):
            break
        add_cuts(x)
    return best_x, best_f, max(best_f - lower, 0.0)


def _reduce_grad(k_mats, x0, basis, z, mu):
    val, grad = _smoothed_value_grad(k_mats, x0 + basis @ z, mu)
    return val, basis.T @ grad


def connes_distance(t: SpectralTriple, w1: State, w2: State, seed: int = 0,
                    restarts: int = 2, subgrad_iters: int = 120) -> DistanceValue:
    """Spectral distance between two states, with optimality certificate."""
    _check_states(t, w1, w2)
    c = np.asarray(w1.weights) - np.asarray(w2.weights)
    if np.max(np.abs(c)) <= 1e-14:
        return DistanceValue(0.0, None, 0.0)

    masks = _component_masks(t)
    if np.max(np.abs(masks @ c)) > INFINITE_THRESHOLD:
        # Some coupling component carries unequal total weight: a function
        # constant per component has vanishing commutator and unbounded gap.
        return DistanceValue(math.inf, None, 0.0)

    k_mats = _commutator_generators(t)
    x, f, gap = _minimize_slice(k_mats, c, masks, seed, restarts, subgrad_iters)
    if f <= 1e-9:
        return DistanceValue(math.inf, None, 0.0)
    cert = AlgebraElement(t.algebra, (x / f).astype(complex))
    return DistanceValue(1.0 / f, cert, gap)


def distance_matrix(t: SpectralTriple, seed: int = 0, **solver_kwargs) -> DistanceMatrix:
    """Pairwise spectral distances between all pure states."""
    k = t.algebra.k
    values = np.zeros((k, k))
    for i in range(k):
        for j in range(i + 1, k):
            d = connes_distance(
                t, t.algebra.pure_state(i), t.algebra.pure_state(j),
                seed=seed, **solver_kwargs,
            )
            values[i, j] = values[j, i] = d.value
    return DistanceMatrix(t.algebra.labels, values)


def brute_force_distance(t: SpectralTriple, w1: State, w2: State,
                         box: float, grid: int,
                         complex_phases: int = 0,
                         chunk: int = 65536) -> float:
    """Grid-search lower bound for the distance.

    Maximizes |c . x| over x on a uniform grid in [-box, box]^k intersected
    with the feasible set ||[D, pi(x)]|| <= 1.  Always a lower bound on the
    true sup; converges as the grid refines.

    With complex_phases = p > 0, each coordinate additionally ranges over the
    p-th roots of unity times the real grid values (tiny instances only),
    cross-checking the restriction to real-valued functions.
    """
    _check_states(t, w1, w2)
    k = t.algebra.k
    if k > 4:
        raise TooManyCharacters("brute force is limited to k <= 4")
    c = np.asarray(w1.weights) - np.asarray(w2.weights)
    if np.max(np.abs(c)) <= 1e-14:
        return 0.0

    k_mats = _commutator_generators(t)
    axis = np.linspace(-box, box, grid)
    if complex_phases > 0:
        phases = np.exp(2j * np.pi * np.arange(complex_phases) / complex_phases)
        axis = np.unique(np.concatenate([axis[None, :] * ph for ph in phases]))

    total = len(axis) ** k
    best = 0.0

    # Coarse pre-pass (a strided subgrid) seeds the incumbent so that the full
    # sweep can skip points whose objective cannot improve on it.
    stride = max(1, len(axis) // 24)
    coarse = axis[::stride]
    best = max(best, _grid_scan(k_mats, c, coarse, k, best, chunk))
    best = max(best, _grid_scan(k_mats, c, axis, k, best, chunk))
    return best


def _grid_scan(k_mats, c, axis, k, best, chunk):
    n_axis = len(axis)
    total = n_axis ** k
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total))
        coords = np.empty((len(idx), k), dtype=axis.dtype)
        rem = idx
        for d in range(k - 1, -1, -1):
            coords[:, d] = axis[rem % n_axis]
            rem = rem // n_axis
        obj = np.abs(coords @ c)
        cand = np.nonzero(obj > best + 1e-15)[0]
        if cand.size == 0:
            continue
        order = cand[np.argsort(-obj[cand])]
        for block in np.array_split(order, max(1, len(order) // 4096)):
            mats = np.tensordot(coords[block], k_mats, axes=1)
            # Row norms lower-bound the spectral norm: a cheap screen.
            row = np.sqrt(np.max(np.sum(np.abs(mats) ** 2, axis=2), axis=1))
            col = np.sqrt(np.max(np.sum(np.abs(mats) ** 2, axis=1), axis=1))
            ok = (row <= 1.0 + 1e-9) & (col <= 1.0 + 1e-9)
            if not np.any(ok):
                continue
            sel = block[ok]
            smax = np.linalg.svd(mats[ok], compute_uv=False)[:, 0]
            feas = sel[smax <= 1.0 + 1e-9]
            if feas.size:
                best = max(best, float(np.max(obj[feas])))
    return best


def grid_resolution_bound(t: SpectralTriple, box: float, grid: int) -> float:
    """Crude accuracy bound for brute_force_distance: Lipschitz constant of
    the objective times the grid diagonal."""
    k = t.algebra.k
    spacing = 2.0 * box / (grid - 1)
    return spacing * k
