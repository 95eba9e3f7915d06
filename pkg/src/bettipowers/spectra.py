"""Root behavior of the Betti polynomial P(I)(k,t) across powers k.

The polynomial for each k is exact; root extraction is the only floating
point step.  The finder is a simultaneous (Aberth-Ehrlich style) iteration
with initial points on Newton-polygon circles, run under an exact conjugate
pairing so that root sets of real polynomials stay symmetric; realness and
root counts over intervals are certified separately by exact Sturm chains.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .asymptotics import KodiyalamProfile
from .polynomials import RationalPolynomial

DEFAULT_MAX_ITER = 1000
DEFAULT_STEP_TOL = 1e-12
DEFAULT_RESIDUAL_TOL = 1e-10


class RootFindingError(RuntimeError):
    """Root iteration failed to meet the residual tolerance; carries the best iterate."""

    def __init__(self, message: str, roots: Sequence[complex], residuals: Sequence[float]):
        super().__init__(message)
        self.roots = list(roots)
        self.residuals = list(residuals)


def betti_polynomial_at(
    profile: KodiyalamProfile, k: int, allow_unstabilized: bool = False
) -> RationalPolynomial:
    """The degree-apd polynomial sum_i P_i(k) t^(apd-i), exact and monic.

    Below the stabilization threshold the fitted values differ from the true
    Betti numbers; pass allow_unstabilized to evaluate there anyway.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k < profile.k0 and not allow_unstabilized:
        raise ValueError(
            f"k={k} is below the stabilization threshold {profile.k0}; "
            "pass allow_unstabilized to evaluate anyway"
        )
    apd = profile.apd
    coeffs = [Fraction(0)] * (apd + 1)
    for i in range(apd + 1):
        coeffs[apd - i] = profile.polynomials[i](k)
    poly = RationalPolynomial.from_coefficients(coeffs)
    if poly.degree != apd or poly.leading_coefficient != 1:
        raise RuntimeError("Betti polynomial is not monic of degree apd")
    return poly


@dataclass(frozen=True)
class LimitPolynomial:
    """The limit polynomial sum_i k_i t^(apd-i) governing root convergence."""

    polynomial: RationalPolynomial
    multiplicities: tuple[int, ...]
    apd: int
    bigK: int


def limit_polynomial(profile: KodiyalamProfile) -> LimitPolynomial:
    """Limit polynomial of a profile with ell >= 2; has -1 as an exact root."""
    if profile.ell < 2:
        raise ValueError("limit polynomial requires ell >= 2 (non-principal ideal)")
    apd, bigK = profile.apd, profile.bigK
    coeffs = [Fraction(0)] * apd
    for i, m in enumerate(profile.multiplicities, start=1):
        coeffs[apd - i] = Fraction(m)
    poly = RationalPolynomial.from_coefficients(coeffs)
    if poly(-1) != 0:
        raise RuntimeError("limit polynomial does not vanish at -1")
    return LimitPolynomial(poly, profile.multiplicities, apd, bigK)


def limit_root_multiset(profile: KodiyalamProfile) -> list[complex]:
    """The apd-1 roots of the limit polynomial (exact when it is k_1 t^z (t+1)^r)."""
    lp = limit_polynomial(profile)
    zeros = lp.apd - lp.bigK
    reduced = RationalPolynomial.from_coefficients(lp.polynomial.coefficients[zeros:])
    binomial = RationalPolynomial.from_coefficients([1, 1])
    power_form = RationalPolynomial.constant(lp.multiplicities[0])
    for _ in range(lp.bigK - 1):
        power_form = power_form * binomial
    if reduced == power_form:
        rest = [complex(-1.0)] * (lp.bigK - 1)
    else:
        rest = find_roots(reduced)
    return [complex(0.0)] * zeros + rest


# ---------------------------------------------------------------------------
# numeric root finding


def _newton_polygon_radii(coeffs: Sequence[float]) -> list[float]:
    # Initial moduli from the upper convex hull of (i, log|c_i|): each hull
    # segment of width d contributes d starting radii.
    pts = [(i, math.log(abs(c))) for i, c in enumerate(coeffs) if c != 0]
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) <= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    radii = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        r = math.exp((y1 - y2) / (x2 - x1))
        radii.extend([r] * (x2 - x1))
    return radii


def _scaled_residuals(coeffs: np.ndarray, roots: np.ndarray) -> np.ndarray:
    # Backward-error residual |p(z)| / sum_i |c_i| |z|^i, evaluated through
    # the reversed polynomial for |z| > 1 so that nothing overflows.
    high = coeffs[::-1]
    absz = np.abs(roots)
    out = np.empty(len(roots))
    with np.errstate(all="ignore"):
        small = absz <= 1.0
        if small.any():
            z = roots[small]
            out[small] = np.abs(np.polyval(high, z)) / np.polyval(np.abs(high), np.abs(z))
        if (~small).any():
            w = 1.0 / roots[~small]
            out[~small] = np.abs(np.polyval(coeffs, w)) / np.polyval(
                np.abs(coeffs), np.abs(w)
            )
    return out


def _cluster_consistent(coeffs: np.ndarray, roots: np.ndarray, tol: float = 1e-6) -> bool:
    # A pile of c coincident iterates passes the residual gate whenever the
    # common point is any root at all, so a multiplicity-c claim is accepted
    # only when the derivatives through order c-1 are small there too.
    m = len(roots)
    assigned = [False] * m
    for i in range(m):
        if assigned[i]:
            continue
        cluster = [i]
        assigned[i] = True
        for j in range(i + 1, m):
            if not assigned[j] and abs(roots[i] - roots[j]) <= tol * (1.0 + abs(roots[i])):
                assigned[j] = True
                cluster.append(j)
        if len(cluster) == 1:
            continue
        center = roots[cluster].mean()
        deriv = coeffs.copy()
        for _ in range(1, len(cluster)):
            deriv = deriv[1:] * np.arange(1, len(deriv))
            with np.errstate(all="ignore"):
                value = abs(np.polyval(deriv[::-1], center))
                scale = float(np.polyval(np.abs(deriv[::-1]), abs(center)))
            if scale > 0 and value > tol * scale:
                return False
    return True


def _quadratic_roots(c0: float, c1: float, c2: float) -> list[complex]:
    disc = c1 * c1 - 4.0 * c2 * c0
    if disc >= 0:
        q = -(c1 + math.copysign(math.sqrt(disc), c1)) / 2.0
        r1 = q / c2
        r2 = (c0 / q) if q != 0 else r1
        return [complex(r1), complex(r2)]
    im = math.sqrt(-disc) / (2.0 * c2)
    re = -c1 / (2.0 * c2)
    return [complex(re, -abs(im)), complex(re, abs(im))]


def _initial_points(
    radii: Sequence[float], symmetric: bool
) -> tuple[np.ndarray, list[int], list[tuple[int, int]]]:
    # Symmetric layout: real slots on the axis (largest radius on the
    # negative side for the escaping root), remaining radii in conjugate
    # pairs.  Asymmetric layout: one point per radius, angles offset so no
    # symmetry can lock the iteration.
    m = len(radii)
    radii = sorted(radii)
    if not symmetric:
        angles = [2.0 * math.pi * j / m + 0.7 / m for j in range(m)]
        pts = [radii[j] * complex(math.cos(a), math.sin(a)) for j, a in enumerate(angles)]
        return np.array(pts, dtype=complex), [], []
    n_real = 1 if m == 1 else (2 if m % 2 == 0 else 3)
    points: list[complex] = [complex(-radii[-1])]
    if n_real >= 2:
        points.append(complex(radii[0]))
    if n_real == 3:
        # Factor 0.5 keeps this slot distinct from the escape slot when all
        # radii coincide; identical starting points share identical dynamics
        # forever and collapse onto one root.
        points.append(complex(-0.5 * math.sqrt(radii[0] * radii[-1])))
    real_slots = list(range(len(points)))
    middle = radii[1:-1] if n_real == 2 else radii[1:-2]
    pairs: list[tuple[int, int]] = []
    npairs = (m - n_real) // 2
    for t in range(npairs):
        r1 = middle[2 * t]
        r2 = middle[2 * t + 1]
        r = math.sqrt(r1 * r2)
        angle = math.pi * (t + 1) / (npairs + 1)
        z = r * complex(math.cos(angle), math.sin(angle))
        pairs.append((len(points), len(points) + 1))
        points.extend([z, z.conjugate()])
    return np.array(points, dtype=complex), real_slots, pairs


def _aberth_sweeps(
    coeffs: np.ndarray,
    z: np.ndarray,
    real_slots: list[int],
    pairs: list[tuple[int, int]],
    max_iter: int,
    step_tol: float,
    residual_tol: float,
) -> tuple[np.ndarray, bool]:
    m = len(z)
    high = coeffs[::-1]
    dhigh = (high[:-1] * np.arange(m, 0, -1)).astype(float)
    low = coeffs
    dlow = (low[:-1] * np.arange(m, 0, -1)).astype(float)  # derivative of reversed
    for _ in range(max_iter):
        with np.errstate(all="ignore"):
            absz = np.abs(z)
            big = absz > 1.0
            p = np.polyval(high, z)
            dp = np.polyval(dhigh, z)
            newton = p / dp
            if big.any():
                w = 1.0 / z[big]
                q = np.polyval(low, w)
                dq = np.polyval(dlow, w)
                newton_big = z[big] * q / (m * q - w * dq)
                newton[big] = newton_big
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            repulse = (1.0 / diff).sum(axis=1)
            step = newton / (1.0 - newton * repulse)
            bad = ~np.isfinite(step)
            if bad.any():
                fallback = np.where(np.isfinite(newton), newton, 0.0)
                step = np.where(bad, fallback, step)
            limit = 1.0 + absz
            mag = np.abs(step)
            with np.errstate(invalid="ignore"):
                scale = np.where(mag > limit, limit / mag, 1.0)
            step = step * scale
        z = z - step
        for i in real_slots:
            z[i] = complex(z[i].real, 0.0)
        for i, j in pairs:
            avg = (z[i] + z[j].conjugate()) / 2.0
            z[i] = avg
            z[j] = avg.conjugate()
        max_step = float(np.max(np.abs(step) / (1.0 + np.abs(z))))
        # Tiny steps alone are not convergence: collided points freeze the
        # iteration through the repulsion term, so acceptance always goes
        # through the residual gate.
        if max_step < step_tol:
            return z, bool((_scaled_residuals(coeffs, z) <= residual_tol).all())
        if max_step < 1e-8 and (_scaled_residuals(coeffs, z) <= residual_tol).all():
            return z, True
    return z, bool((_scaled_residuals(coeffs, z) <= residual_tol).all())


def _newton_polish(coeffs: np.ndarray, z: np.ndarray, iters: int = 4) -> np.ndarray:
    # Per-point Newton after the simultaneous phase.  Near-coincident
    # partners freeze the collective steps through the repulsion term while
    # clustered roots are still far from evaluation-noise accuracy; plain
    # Newton closes that gap.  A point only moves when its residual improves,
    # so the residual gate stays satisfied.
    m = len(z)
    high = coeffs[::-1]
    dhigh = (high[:-1] * np.arange(m, 0, -1)).astype(float)
    low = coeffs
    dlow = (low[:-1] * np.arange(m, 0, -1)).astype(float)
    best = z.copy()
    best_res = _scaled_residuals(coeffs, best)
    cur = z.copy()
    for _ in range(iters):
        with np.errstate(all="ignore"):
            absz = np.abs(cur)
            big = absz > 1.0
            p = np.polyval(high, cur)
            dp = np.polyval(dhigh, cur)
            newton = p / dp
            if big.any():
                w = 1.0 / cur[big]
                q = np.polyval(low, w)
                dq = np.polyval(dlow, w)
                newton[big] = cur[big] * q / (m * q - w * dq)
            nxt = cur - newton
        moved = np.where(np.isfinite(nxt), nxt, cur)
        res = _scaled_residuals(coeffs, moved)
        improve = res < best_res
        best[improve] = moved[improve]
        best_res[improve] = res[improve]
        cur = moved
    return best


def _pair_output(roots: Iterable[complex]) -> list[complex]:
    # Enforce exact conjugate symmetry on a near-symmetric root list: match
    # upper and lower half-plane roots greedily, average each pair, and
    # declare whatever remains unpaired real.
    reals, upper, lower = [], [], []
    for z in roots:
        tol = 1e-6 * (1.0 + abs(z))
        if abs(z.imag) <= tol:
            reals.append(complex(z.real, 0.0))
        elif z.imag > 0:
            upper.append(z)
        else:
            lower.append(z)
    candidates = sorted(
        (
            (abs(u - l.conjugate()), iu, il)
            for iu, u in enumerate(upper)
            for il, l in enumerate(lower)
        ),
    )
    used_u, used_l = set(), set()
    out = list(reals)
    for dist, iu, il in candidates:
        if iu in used_u or il in used_l:
            continue
        if dist > 1e-3 * (1.0 + abs(upper[iu])):
            continue
        used_u.add(iu)
        used_l.add(il)
        avg = (upper[iu] + lower[il].conjugate()) / 2.0
        out.extend([avg, avg.conjugate()])
    for iu, u in enumerate(upper):
        if iu not in used_u:
            out.append(complex(u.real, 0.0))
    for il, l in enumerate(lower):
        if il not in used_l:
            out.append(complex(l.real, 0.0))
    return out


def find_roots(
    p: Union[RationalPolynomial, Sequence[float]],
    max_iter: int = DEFAULT_MAX_ITER,
    step_tol: float = DEFAULT_STEP_TOL,
    residual_tol: float = DEFAULT_RESIDUAL_TOL,
) -> list[complex]:
    """All complex roots of p with multiplicity, in double precision.

    Runs the simultaneous iteration first with a conjugate-symmetric start
    (exactly two or three points on the real axis, matching the generic real
    root count of a real polynomial of that parity), falling back to an
    asymmetric start with conjugate post-pairing.  A root list is accepted
    when every scaled residual |p(z)| / sum |c_i||z|^i is at most the
    tolerance; otherwise RootFindingError carries the best iterate.
    """
    if isinstance(p, RationalPolynomial):
        exact = p.coefficients
    else:
        exact = tuple(p)
        while exact and exact[-1] == 0:
            exact = exact[:-1]
    if len(exact) < 2:
        raise ValueError("root finding requires degree >= 1")
    valuation = 0
    while exact[valuation] == 0:
        valuation += 1
    zeros = [complex(0.0)] * valuation
    coeffs = np.array([float(c) for c in exact[valuation:]], dtype=float)
    coeffs /= coeffs[-1]
    m = len(coeffs) - 1
    if m == 0:
        return sorted(zeros, key=lambda z: (z.real, z.imag))
    if m == 1:
        roots = zeros + [complex(-coeffs[0])]
        return sorted(roots, key=lambda z: (z.real, z.imag))
    if m == 2:
        roots = zeros + _quadratic_roots(coeffs[0], coeffs[1], coeffs[2])
        return sorted(roots, key=lambda z: (z.real, z.imag))
    radii = _newton_polygon_radii(coeffs)
    z0, real_slots, pairs = _initial_points(radii, symmetric=True)
    z, ok = _aberth_sweeps(
        coeffs, z0, real_slots, pairs, max_iter, step_tol, residual_tol
    )
    if ok:
        z = _newton_polish(coeffs, z)
    if not ok or not _cluster_consistent(coeffs, z):
        z0, _, _ = _initial_points(radii, symmetric=False)
        z, _ = _aberth_sweeps(coeffs, z0, [], [], max_iter, step_tol, residual_tol)
        z = np.array(_pair_output(_newton_polish(coeffs, z)), dtype=complex)
        residuals = _scaled_residuals(coeffs, z)
        if not (residuals <= residual_tol).all() or not _cluster_consistent(coeffs, z):
            raise RootFindingError(
                f"no convergence after {max_iter} iterations "
                f"(worst residual {float(residuals.max()):.3e})",
                list(z),
                [float(r) for r in residuals],
            )
    roots = zeros + [complex(v.real + 0.0, v.imag + 0.0) for v in z]
    return sorted(roots, key=lambda c: (c.real, c.imag))


# ---------------------------------------------------------------------------
# exact real-root counting


def _sturm_chain(p: RationalPolynomial) -> list[RationalPolynomial]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero and chain[-1].degree >= 1:
        rem = chain[-2].divmod(chain[-1])[1]
        if rem.is_zero:
            break
        chain.append(-rem)
    return [q for q in chain if not q.is_zero]


def _sign_at(q: RationalPolynomial, x) -> int:
    if x == "-inf":
        lead = q.leading_coefficient
        s = 1 if lead > 0 else -1
        return s if q.degree % 2 == 0 else -s
    if x == "+inf":
        lead = q.leading_coefficient
        return 1 if lead > 0 else -1
    v = q(Fraction(x))
    return 0 if v == 0 else (1 if v > 0 else -1)


def _variations(chain: Sequence[RationalPolynomial], x) -> int:
    signs = [s for s in (_sign_at(q, x) for q in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


Endpoint = Optional[Union[int, Fraction]]


def sturm_real_root_count(
    p: RationalPolynomial, interval: tuple[Endpoint, Endpoint] = (None, None)
) -> int:
    """Number of distinct real roots of p in the half-open interval (a, b].

    None endpoints mean -infinity / +infinity.  The count is exact: the
    Sturm chain is built on the square-free part with Fraction arithmetic.
    Root multiplicities are available separately from real_root_multiplicities.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no root count")
    sf = p.squarefree_part()
    if sf.degree < 1:
        return 0
    a, b = interval
    lo = "-inf" if a is None else Fraction(a)
    hi = "+inf" if b is None else Fraction(b)
    if lo != "-inf" and hi != "+inf" and lo > hi:
        raise ValueError("empty interval")
    chain = _sturm_chain(sf)
    return _variations(chain, lo) - _variations(chain, hi)


def real_root_multiplicities(p: RationalPolynomial) -> dict[int, int]:
    """Map multiplicity -> number of distinct real roots with that multiplicity.

    Square-free (Yun) decomposition over the rationals, then one Sturm count
    per multiplicity layer.
    """
    if p.degree < 1:
        return {}
    d = p.gcd(p.derivative())
    b = p.divmod(d)[0]
    c = p.derivative().divmod(d)[0]
    out: dict[int, int] = {}
    i = 1
    while b.degree >= 1:
        d1 = c - b.derivative()
        a = b.gcd(d1)
        if a.degree >= 1:
            count = sturm_real_root_count(a)
            if count:
                out[i] = count
        b = b.divmod(a)[0]
        c = d1.divmod(a)[0]
        i += 1
    return out


# ---------------------------------------------------------------------------
# loci and convergence reports


@dataclass(frozen=True)
class RootLocus:
    """Per-k roots of P(I)(k,t), matched into trajectories across k.

    roots[k] is ordered by trajectory, so trajectory t is the sequence
    roots[k][t] over the krange.  escape_index[k] is the designated
    unbounded root position once a real root dominates (plotting heuristic).
    """

    krange: tuple[int, ...]
    roots: dict[int, tuple[complex, ...]]
    residuals: dict[int, tuple[float, ...]]
    escape_index: dict[int, Optional[int]]
    escape_trajectory: Optional[int]

    @property
    def degree(self) -> int:
        return len(self.roots[self.krange[0]])

    def real_count(self, k: int) -> int:
        return sum(1 for z in self.roots[k] if z.imag == 0.0)

    def to_csv(self) -> str:
        lines = ["k,root_index,re,im,trajectory_id,is_escape"]
        for k in self.krange:
            esc = self.escape_index[k]
            for t, z in enumerate(self.roots[k]):
                flag = 1 if esc == t else 0
                lines.append(f"{k},{t},{z.real!r},{z.imag!r},{t},{flag}")
        return "\n".join(lines) + "\n"


def _match_order(prev: Sequence[complex], cur: Sequence[complex]) -> list[complex]:
    # Greedy nearest-neighbor continuation, ties broken by smaller indices.
    ranked = sorted(
        (abs(p - c), i, j) for i, p in enumerate(prev) for j, c in enumerate(cur)
    )
    assignment: dict[int, complex] = {}
    used_prev, used_cur = set(), set()
    for _, i, j in ranked:
        if i in used_prev or j in used_cur:
            continue
        used_prev.add(i)
        used_cur.add(j)
        assignment[i] = cur[j]
    return [assignment[i] for i in range(len(prev))]


def root_locus(
    profile: KodiyalamProfile,
    krange: Iterable[int],
    max_iter: int = DEFAULT_MAX_ITER,
    residual_tol: float = DEFAULT_RESIDUAL_TOL,
) -> RootLocus:
    """Roots of the Betti polynomial for each k, with trajectory matching.

    The escape root at a given k is the real root of largest modulus once
    its modulus exceeds twice that of every other root.
    """
    ks = sorted(set(krange))
    if not ks or ks[0] < 1:
        raise ValueError("krange must contain positive integers")
    roots: dict[int, tuple[complex, ...]] = {}
    residuals: dict[int, tuple[float, ...]] = {}
    escape: dict[int, Optional[int]] = {}
    prev: Optional[list[complex]] = None
    for k in ks:
        poly = betti_polynomial_at(profile, k, allow_unstabilized=True)
        found = find_roots(poly, max_iter=max_iter, residual_tol=residual_tol)
        ordered = found if prev is None else _match_order(prev, found)
        prev = ordered
        coeffs = np.array([float(c) for c in poly.coefficients])
        res = _scaled_residuals(coeffs / coeffs[-1], np.array(ordered, dtype=complex))
        roots[k] = tuple(ordered)
        residuals[k] = tuple(float(r) for r in res)
        esc = None
        real_idx = [t for t, z in enumerate(ordered) if z.imag == 0.0]
        if real_idx:
            t_big = max(real_idx, key=lambda t: abs(ordered[t]))
            others = [abs(z) for t, z in enumerate(ordered) if t != t_big]
            if not others or abs(ordered[t_big]) > 2.0 * max(others):
                esc = t_big
        escape[k] = esc
    return RootLocus(
        krange=tuple(ks),
        roots=roots,
        residuals=residuals,
        escape_index=escape,
        escape_trajectory=escape[ks[-1]],
    )


@dataclass(frozen=True)
class ConvergenceReport:
    """Numeric convergence picture of the root trajectories toward the limit roots."""

    krange: tuple[int, ...]
    locus: RootLocus
    limit_roots: tuple[complex, ...]
    bounded_trajectories: tuple[int, ...]
    bounded_final_distances: tuple[float, ...]
    max_bounded_distance: dict[int, float]
    sampled_ks: tuple[int, ...]
    distances_nonincreasing: Optional[bool]
    escape_real: Optional[bool]
    escape_divergent: Optional[bool]
    minus_one_exact: dict[int, bool]


def verify_limit_theorem(
    profile: KodiyalamProfile,
    krange: Iterable[int],
    sample_ks: Optional[Sequence[int]] = None,
) -> ConvergenceReport:
    """Check the limiting root picture over an increasing range of powers.

    Reports, per bounded trajectory, the final distance to the nearest limit
    root; whether the maximum such distance is non-increasing over the
    sampled ks; whether the escape root is real and divergent; and the exact
    vanishing of the Betti polynomial at -1 for every k.  Short ranges
    yield None (inconclusive) for the trend fields.
    """
    if profile.ell < 2:
        raise ValueError("convergence checks require ell >= 2")
    locus = root_locus(profile, krange)
    ks = locus.krange
    limit_roots = limit_root_multiset(profile)
    esc = locus.escape_trajectory
    bounded = tuple(t for t in range(locus.degree) if t != esc)
    dist_by_k = {
        k: max(
            min(abs(locus.roots[k][t] - a) for a in limit_roots) for t in bounded
        )
        for k in ks
    }
    final = tuple(
        min(abs(locus.roots[ks[-1]][t] - a) for a in limit_roots) for t in bounded
    )
    if sample_ks is None:
        tail = [k for k in ks if k >= ks[-1] // 2]
        sample_ks = tail[:: max(1, len(tail) // 5)][-5:]
    sample_ks = tuple(k for k in sample_ks if k in dist_by_k)
    trend: Optional[bool] = None
    if len(sample_ks) >= 2:
        trend = all(
            dist_by_k[b] <= dist_by_k[a] + 1e-12
            for a, b in zip(sample_ks, sample_ks[1:])
        )
    escape_real: Optional[bool] = None
    escape_divergent: Optional[bool] = None
    if esc is not None:
        tail_ks = [k for k in ks if k >= ks[-1] // 2]
        escape_real = all(locus.roots[k][esc].imag == 0.0 for k in tail_ks)
        moduli = [abs(locus.roots[k][esc]) for k in tail_ks]
        escape_divergent = all(b > a for a, b in zip(moduli, moduli[1:]))
    minus_one = {
        k: betti_polynomial_at(profile, k, allow_unstabilized=True)(Fraction(-1)) == 0
        for k in ks
    }
    return ConvergenceReport(
        krange=ks,
        locus=locus,
        limit_roots=tuple(limit_roots),
        bounded_trajectories=bounded,
        bounded_final_distances=final,
        max_bounded_distance=dist_by_k,
        sampled_ks=tuple(sample_ks),
        distances_nonincreasing=trend,
        escape_real=escape_real,
        escape_divergent=escape_divergent,
        minus_one_exact=minus_one,
    )
