"""Arbitrary-precision numeric kernel built on mpmath.

Provides simultaneous root finding (Aberth-Ehrlich iteration), single-linkage
root clustering with an explicit unsafe-regime guard, brute-force multiset
matchers used as the independent oracle for the exact engine, and bivariate
evaluation with a propagated error bound. Nothing here mutates mpmath's
global precision; every entry point scopes its own working precision.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpc, mpf

from .errors import AmbiguousClusteringError, NonConvergenceError
from .exact import GaussianRational, UniPoly
from .polyio import BivarPoly


@dataclass(frozen=True)
class ComplexApprox:
    """A complex value known to the stated precision, with an error bound."""

    value: mpc
    err: mpf
    precision: int


@dataclass(frozen=True)
class RootCluster:
    """A group of nearby numeric roots standing for one true root."""

    center: mpc
    multiplicity: int
    radius: mpf


@dataclass(frozen=True)
class NumericMatch:
    """A scale (and optional shift) mapping one root multiset onto another."""

    scale: mpc
    shift: mpc | None
    pairing: tuple
    tol: float


def to_mpc(value) -> mpc:
    """Convert a GaussianRational (or number) to mpc at the current precision."""
    if isinstance(value, GaussianRational):
        re = mpf(value.re.numerator) / mpf(value.re.denominator)
        im = mpf(value.im.numerator) / mpf(value.im.denominator)
        return mpc(re, im)
    return mpc(value)


def nth_root(value, index: int, branch: int = 0) -> mpc:
    """The branch-th of the index-th roots, principal first.

    Branch k has argument (Arg(value) + 2*pi*k)/index with the principal
    argument in (-pi, pi].
    """
    if index < 1:
        raise ValueError("root index must be positive")
    z = to_mpc(value)
    if z == 0:
        return mpc(0)
    return mp.root(z, index, branch % index)


def _horner(coeffs, z):
    acc = mpc(0)
    for c in coeffs:
        acc = acc * z + c
    return acc


def _horner_abs(coeffs, az):
    acc = mpf(0)
    for c in coeffs:
        acc = acc * az + abs(c)
    return acc


def _as_mpc_coeffs(poly) -> list:
    if isinstance(poly, UniPoly):
        return [to_mpc(c) for c in poly.coeffs]
    return [mpc(c) for c in poly]


def find_roots(poly, precision: int = 128) -> list:
    """All complex roots of a univariate polynomial, with error bounds.

    Accepts a UniPoly or a degree-descending coefficient sequence. Uses the
    Aberth-Ehrlich simultaneous iteration from perturbed-circle initial
    guesses, stopping on a backward-error criterion so that multiple roots
    terminate as tight clusters instead of stalling.
    """
    work = precision + 40
    with mp.workprec(work):
        coeffs = _as_mpc_coeffs(poly)
        while coeffs and abs(coeffs[0]) == 0:
            coeffs.pop(0)
        n = len(coeffs) - 1
        if n <= 0:
            return []
        zeros_out = []
        while abs(coeffs[-1]) == 0:
            zeros_out.append(ComplexApprox(mpc(0), mpf(0), precision))
            coeffs.pop()
        n = len(coeffs) - 1
        if n == 0:
            return zeros_out
        lead = coeffs[0]
        radius = mpf(1) + max(abs(c / lead) for c in coeffs[1:])
        points = []
        for k in range(n):
            theta = mpf(2) * mp.pi * k / n + mpf(2) / 5
            r = radius * (mpf(1) / 2 + mpf(2) * k / (5 * max(n, 1)))
            points.append(r * mp.expj(theta) + mpc(mpf(1) / 7, mpf(1) / 11))
        deriv = [c * (n - i) for i, c in enumerate(coeffs[:-1])]
        eps_stop = mpf(2) ** (-(precision + 20))
        settled = [False] * n
        for _ in range(600):
            moved = False
            for k in range(n):
                z = points[k]
                val = _horner(coeffs, z)
                if abs(val) <= eps_stop * _horner_abs(coeffs, abs(z)):
                    settled[k] = True
                    continue
                settled[k] = False
                dval = _horner(deriv, z)
                if dval == 0:
                    points[k] = z + mpf(1) / 1000
                    moved = True
                    continue
                newton = val / dval
                acc = mpc(0)
                for j in range(n):
                    if j != k:
                        diff = z - points[j]
                        if diff == 0:
                            diff = mpf(1) / mpf(10) ** 30
                        acc += 1 / diff
                denom = 1 - newton * acc
                if denom == 0:
                    step = newton
                else:
                    step = newton / denom
                points[k] = z - step
                moved = True
            if all(settled):
                break
            if not moved:
                break
        if not all(settled):
            raise NonConvergenceError(
                "root iteration did not reach the backward-error target",
                best=list(points),
                residuals=[abs(_horner(coeffs, z)) for z in points],
            )
        out = list(zeros_out)
        for z in points:
            val = abs(_horner(coeffs, z))
            dval = abs(_horner(deriv, z))
            floor = val / (1 + abs(lead) * n)
            if dval > 0:
                bound = max(n * val / dval, floor)
            else:
                bound = max((val / abs(lead)) ** (mpf(1) / n), floor)
            out.append(ComplexApprox(mpc(z), mpf(bound), precision))
        out.sort(key=lambda r: (r.value.real, r.value.imag))
        return out


def cluster_roots(roots, tol: float, weights=None) -> list:
    """Single-linkage clustering of numeric roots at distance tol.

    Approximations also merge when their error disks overlap: a root of
    multiplicity k is only located to about the k-th root of the backward
    error, so its copies can scatter wider than tol while still being one
    true root, and the per-root bounds carry exactly that information.
    When weights are given, each approximation counts for that many roots
    and cluster multiplicity is the sum over members; centers are then the
    weighted mean. Raises AmbiguousClusteringError when the configuration
    sits in the unsafe band: an inter-cluster gap below 2*tol, or a cluster
    whose diameter exceeds tol/2, either of which means the tolerance cannot
    be trusted to separate true roots from approximation scatter.
    """
    values = [r.value if isinstance(r, ComplexApprox) else mpc(r) for r in roots]
    errs = [r.err if isinstance(r, ComplexApprox) else mpf(0) for r in roots]
    if not values:
        return []
    if weights is None:
        weights = [1] * len(values)
    elif len(weights) != len(values):
        raise ValueError("weights must match roots one for one")
    t = mpf(tol)
    if t <= 0:
        raise ValueError("tol must be positive")
    n = len(values)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(n):
        for b in range(a + 1, n):
            if abs(values[a] - values[b]) <= max(t, errs[a] + errs[b]):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
    groups = {}
    for a in range(n):
        groups.setdefault(find(a), []).append(a)
    clusters = []
    for idxs in groups.values():
        members = [values[a] for a in idxs]
        total = sum(weights[a] for a in idxs)
        center = sum(values[a] * weights[a] for a in idxs) / total
        radius = max((abs(v - center) for v in members), default=mpf(0))
        diameter = mpf(0)
        for x in range(len(members)):
            for y in range(x + 1, len(members)):
                diameter = max(diameter, abs(members[x] - members[y]))
        clusters.append((center, members, total, radius, diameter))
    for _, members, _, _, diameter in clusters:
        if diameter > t / 2:
            raise AmbiguousClusteringError(
                f"cluster diameter {diameter} exceeds half the tolerance {t}"
            )
    for a in range(len(clusters)):
        for b in range(a + 1, len(clusters)):
            gap = min(abs(x - y) for x in clusters[a][1] for y in clusters[b][1])
            if gap < 2 * t:
                raise AmbiguousClusteringError(
                    f"inter-cluster gap {gap} is below twice the tolerance {t}"
                )
    out = [RootCluster(c, total, r) for (c, _, total, r, _) in clusters]
    out.sort(key=lambda cl: (cl.center.real, cl.center.imag))
    return out


def _greedy_pairing(mapped, targets, tol):
    """Pair each mapped cluster with an unused equal-multiplicity target."""
    used = [False] * len(targets)
    pairing = []
    for idx, (z, mult) in enumerate(mapped):
        best = None
        best_d = None
        for tdx, tcl in enumerate(targets):
            if used[tdx] or tcl.multiplicity != mult:
                continue
            d = abs(z - tcl.center)
            if best is None or d < best_d:
                best, best_d = tdx, d
        if best is None or best_d > tol * (1 + abs(targets[best].center)):
            return None
        used[best] = True
        pairing.append((idx, best))
    return tuple(pairing)


def numeric_match(mode: str, side_a, side_b, tol: float = 1e-9):
    """Brute-force multiset matcher over root clusters.

    mode "linear" searches a with a*A = B; mode "affine" reduces to the
    linear problem after centering both multisets on their multiplicity
    weighted centroids. Returns a NumericMatch or None. This is the
    independent oracle for the exact coefficient-level matcher, so it shares
    no code with it.
    """
    if mode not in ("linear", "affine"):
        raise ValueError(f"unknown mode {mode!r}")
    a_cl = sorted(side_a, key=lambda c: (c.center.real, c.center.imag))
    b_cl = sorted(side_b, key=lambda c: (c.center.real, c.center.imag))
    if sorted(c.multiplicity for c in a_cl) != sorted(c.multiplicity for c in b_cl):
        return None
    if len(a_cl) != len(b_cl):
        return None
    t = mpf(tol)
    if mode == "affine":
        total = sum(c.multiplicity for c in a_cl)
        cen_a = sum((c.center * c.multiplicity for c in a_cl), mpc(0)) / total
        cen_b = sum((c.center * c.multiplicity for c in b_cl), mpc(0)) / total
        shifted_a = [RootCluster(c.center - cen_a, c.multiplicity, c.radius) for c in a_cl]
        shifted_b = [RootCluster(c.center - cen_b, c.multiplicity, c.radius) for c in b_cl]
        inner = numeric_match("linear", shifted_a, shifted_b, tol)
        if inner is None:
            return None
        a = inner.scale
        b = cen_b - a * cen_a
        mapped = [(a * c.center + b, c.multiplicity) for c in a_cl]
        pairing = _greedy_pairing(mapped, b_cl, t)
        if pairing is None:
            return None
        return NumericMatch(a, b, pairing, tol)
    nonzero_a = [c for c in a_cl if abs(c.center) > t]
    nonzero_b = [c for c in b_cl if abs(c.center) > t]
    if len(nonzero_a) != len(nonzero_b):
        return None
    if not nonzero_a:
        pairing = _greedy_pairing([(c.center, c.multiplicity) for c in a_cl], b_cl, t)
        if pairing is None:
            return None
        return NumericMatch(mpc(1), None, pairing, tol)
    candidates = []
    for ca in nonzero_a:
        for cb in nonzero_b:
            if ca.multiplicity == cb.multiplicity:
                candidates.append(cb.center / ca.center)
    for a in candidates:
        mapped = [(a * c.center, c.multiplicity) for c in a_cl]
        pairing = _greedy_pairing(mapped, b_cl, t)
        if pairing is not None:
            return NumericMatch(a, None, pairing, tol)
    return None


def eval_bivar(poly: BivarPoly, x, y, precision: int = 128) -> ComplexApprox:
    """Evaluate a bivariate polynomial numerically with an error bound.

    Works column by column: an inner Horner pass in x for each Y-degree,
    then an outer Horner pass in y. The bound is the usual coefficient-sum
    estimate for Horner evaluation, conservative for sparse inputs.
    """
    with mp.workprec(precision + 20):
        zx, zy = mpc(x), mpc(y)
        if poly.is_zero:
            return ComplexApprox(mpc(0), mpf(0), precision)
        columns = {}
        for (i, j), c in poly.terms.items():
            columns.setdefault(j, {})[i] = to_mpc(c)
        acc = mpc(0)
        cond = mpf(0)
        ax, ay = abs(zx), abs(zy)
        prev_j = None
        op_count = 0
        for j in sorted(columns, reverse=True):
            if prev_j is not None:
                acc = acc * zy ** (prev_j - j)
                op_count += prev_j - j
            col = columns[j]
            top = max(col)
            col_val = mpc(0)
            col_abs = mpf(0)
            for i in range(top, -1, -1):
                col_val = col_val * zx
                col_abs = col_abs * ax
                if i in col:
                    col_val += col[i]
                    col_abs += abs(col[i])
                op_count += 1
            acc += col_val
            cond += col_abs * ay**j
            prev_j = j
        if prev_j:
            acc = acc * zy**prev_j
            op_count += prev_j
        unit = mpf(2) ** (1 - precision)
        err = cond * unit * 2 * (op_count + 2)
        return ComplexApprox(acc, err, precision)
