"""Closed-form solvers for degrees 2-4 built on difference-of-squares (and
difference-of-cubes) identities, plus the numeric square-difference splitter
for monic even degrees 6, 8, 10 and the recursive solve-by-split driver.

The splitter writes a monic even-degree F as (Q-P)(Q+P) with monic
half-degree factors. Writing m_j for half the coefficient sum at slot j and
O_j for the coefficient product (factor coefficients w±_j = m_j ± R_j with
R_j = sqrt(m_j^2 - O_j)), the unknowns are the interior O_1..O_{h-1} and the
h-2 free cross-sum corrections; the closing equations are the coefficient
matches of the reconstructed product.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from .poly import (
    ConvergenceError,
    DegreeError,
    Polynomial,
    RootEntry,
    RootReport,
    newton_polish,
    scaled_residual,
)


def _roots_report(p: Polynomial, roots: list[tuple[complex, int]], method: str,
                  warnings: list[str] | None = None) -> RootReport:
    entries = [
        RootEntry(r, scaled_residual(p, r), branch=b) for r, b in roots
    ]
    return RootReport(entries, method=method, warnings=warnings or []).sort()


def solve_quadratic(p: Polynomial) -> RootReport:
    """Roots of a degree-2 polynomial from the w± split of x^2 + c1 x + c0.

    After monic normalization the two linear factors are x + w± with
    w± = c1/2 ± sqrt(c1^2/4 - c0); the roots are -w±.
    """
    if p.degree != 2:
        raise DegreeError("solve_quadratic expects degree 2")
    q = p.monic()
    c0, c1 = q.coeffs[0], q.coeffs[1]
    r = cmath.sqrt(c1 * c1 / 4.0 - c0)
    w_plus = c1 / 2.0 + r
    w_minus = c1 / 2.0 - r
    # w+ w- = c0 exactly: recover the cancellation-prone branch from the
    # product so a tiny root keeps its digits
    if abs(w_plus) >= abs(w_minus):
        if w_plus != 0:
            w_minus = c0 / w_plus
    elif w_minus != 0:
        w_plus = c0 / w_minus
    return _roots_report(p, [(-w_plus, 0), (-w_minus, 1)], "closed-quadratic")


def _depress_cubic(p: Polynomial) -> tuple[complex, complex, complex, complex]:
    """Reduce a3 x^3 + a2 x^2 + a1 x + a0 to t^3 + alpha t + beta.

    Uses the substitution t = a3 x + a2/3, so each root maps back through
    x = (t - a2/3)/a3.
    """
    a0, a1, a2, a3 = p.coeffs
    alpha = a1 * a3 - a2 * a2 / 3.0
    beta = a0 * a3 * a3 + 2.0 * a2**3 / 27.0 - a1 * a2 * a3 / 3.0
    return alpha, beta, a2, a3


def _cbrt(z: complex) -> complex:
    """Principal complex cube root (polar form; stable for all arguments)."""
    if z == 0:
        return 0j
    r = abs(z) ** (1.0 / 3.0)
    theta = cmath.phase(z) / 3.0
    return complex(r * math.cos(theta), r * math.sin(theta))


def solve_cubic(p: Polynomial) -> RootReport:
    """Roots of a degree-3 polynomial via the cube-difference reduction.

    Depresses to t^3 + alpha t + beta, solves z^2 + beta z - alpha^3/27 = 0,
    takes k1 = cbrt(z) with k2 chosen so k1 k2 = -alpha/3, and deflates for
    the remaining quadratic cofactor. Real coefficients with
    (beta/2)^2 + (alpha/3)^3 < 0 go through the trigonometric branch, which
    yields the three real roots directly.
    """
    if p.degree != 3:
        raise DegreeError("solve_cubic expects degree 3")
    alpha, beta, a2, a3 = _depress_cubic(p)
    disc = (beta / 2.0) ** 2 + (alpha / 3.0) ** 3

    is_real = all(abs(c.imag) == 0 for c in p.coeffs)
    ts: list[complex]
    if is_real and disc.real < 0 and disc.imag == 0:
        tau = math.sqrt(-((alpha.real / 3.0) ** 3))
        theta = math.acos(max(-1.0, min(1.0, -beta.real / 2.0 / tau)))
        amp = 2.0 * math.sqrt(-alpha.real / 3.0)
        ts = [complex(amp * math.cos((theta + 2.0 * math.pi * k) / 3.0)) for k in range(3)]
    else:
        sq = cmath.sqrt(disc)
        # the two z-branches multiply to -(alpha/3)^3: cube-root the larger
        # one and recover the partner from the pairing k1 k2 = -alpha/3
        z_plus = -beta / 2.0 + sq
        z_minus = -beta / 2.0 - sq
        k1 = _cbrt(z_plus if abs(z_plus) >= abs(z_minus) else z_minus)
        k2 = 0j if k1 == 0 else -alpha / (3.0 * k1)
        t0 = k1 + k2
        # quadratic cofactor of (t - t0) in t^3 + alpha t + beta
        b1 = t0
        b0 = t0 * t0 + alpha
        rr = cmath.sqrt(b1 * b1 / 4.0 - b0)
        ts = [t0, -b1 / 2.0 + rr, -b1 / 2.0 - rr]

    roots = [((t - a2 / 3.0) / a3, k) for k, t in enumerate(ts)]
    return _roots_report(p, roots, "closed-cubic")


def _quartic_w_pairs(
    c: tuple[complex, ...], omega1: complex, sigma: float
) -> tuple[complex, complex, complex, complex]:
    """w±_{2,1}, w±_{2,0} for a monic quartic at resolvent value omega1."""
    _, c1, c2, c3, _ = c
    a = c3 / 2.0
    b = cmath.sqrt(a * a - omega1)
    cc = (c2 - omega1) / 2.0
    d = sigma * cmath.sqrt(cc * cc - c[0])
    return a + b, a - b, cc + d, cc - d


def _resolvent_cubic(c: tuple[complex, ...]) -> Polynomial:
    """Cubic in Omega_1 obtained by squaring the cross-term identity
    w+_{2,0} w-_{2,1} + w-_{2,0} w+_{2,1} = c1 of a monic quartic."""
    _, c1, c2, c3, _ = c
    c0 = c[0]
    return Polynomial(
        [
            c1 * c1 + c0 * c3 * c3 - c1 * c2 * c3,
            c2 * c2 + c1 * c3 - 4.0 * c0,
            -2.0 * c2,
            1.0,
        ]
    )


def solve_quartic(p: Polynomial) -> RootReport:
    """Roots of a degree-4 polynomial by splitting into two quadratics.

    Solves the Omega_1 resolvent cubic, then assembles the factor pair
    (x^2 + w+_{2,1} x + w+_{2,0})(x^2 + w-_{2,1} x + w-_{2,0}). Both the
    resolvent root and the sign of the inner radical are picked by the
    reconstruction residual, squaring having introduced both ambiguities.
    """
    if p.degree != 4:
        raise DegreeError("solve_quartic expects degree 4")
    q = p.monic()
    c = q.coeffs
    best: tuple[float, tuple[complex, complex, complex, complex]] | None = None
    for entry in solve_cubic(_resolvent_cubic(c)).roots:
        for sigma in (1.0, -1.0):
            w1p, w1m, w0p, w0m = _quartic_w_pairs(c, entry.root, sigma)
            prod = Polynomial([w0p, w1p, 1.0]) * Polynomial([w0m, w1m, 1.0])
            err = max(abs(a - b) for a, b in zip(prod.coeffs, c))
            if best is None or err < best[0]:
                best = (err, (w1p, w1m, w0p, w0m))
    w1p, w1m, w0p, w0m = best[1]
    roots: list[tuple[complex, int]] = []
    for idx, (w1, w0) in enumerate(((w1p, w0p), (w1m, w0m))):
        rr = cmath.sqrt(w1 * w1 / 4.0 - w0)
        roots.append((-w1 / 2.0 + rr, 2 * idx))
        roots.append((-w1 / 2.0 - rr, 2 * idx + 1))
    # near-degenerate resolvents lose half the digits to radicand
    # cancellation; a short Newton cleanup restores them
    cleaned: list[tuple[complex, int]] = []
    for root, branch in roots:
        try:
            root = newton_polish(p, root, tol=1e-13, max_iter=8)[0]
        except ConvergenceError as exc:
            root = exc.best[0]
        cleaned.append((root, branch))
    return _roots_report(p, cleaned, "closed-quartic")


@dataclass
class SquareDifferenceSplit:
    """Monic factor pair (Q-P, Q+P) of an even-degree polynomial.

    omega[j] is the coefficient product of slot j (omega[0] = c0 and the
    leading omega[n/2] = 1 are fixed); l_vars are the free cross-sum
    corrections feeding the coefficient-sum chain; w_minus/w_plus are the
    full monic coefficient lists of the two factors.
    """

    omega: list[complex]
    l_vars: list[complex]
    w_plus: list[complex]
    w_minus: list[complex]
    residual: float

    def factors(self) -> tuple[Polynomial, Polynomial]:
        return Polynomial(self.w_minus), Polynomial(self.w_plus)


def _assemble_halves(
    c: tuple[complex, ...],
    omega_in: list[complex],
    l_vars: list[complex],
    signs: tuple[int, ...],
) -> tuple[list[complex], list[complex]]:
    """Factor coefficients from the unknowns, highest slot first chain.

    tops[j] (the coefficient sum at slot j) is read off c with the already
    determined diagonal products subtracted; slots below h-2 additionally
    absorb a free cross-sum variable.
    """
    n = len(c) - 1
    h = n // 2
    omega = [c[0]] + list(omega_in) + [1.0 + 0j]
    wp = [0j] * (h + 1)
    wm = [0j] * (h + 1)
    wp[h] = wm[h] = 1.0 + 0j
    for j in range(h - 1, -1, -1):
        top = c[h + j]
        if (h + j) % 2 == 0:
            top = top - omega[(h + j) // 2]
        if j <= h - 3:
            top = top - l_vars[j]
        m = top / 2.0
        r = cmath.sqrt(m * m - omega[j])
        if signs[j] < 0:
            r = -r
        wp[j] = m + r
        wm[j] = m - r
    return wp, wm


def _product_coeffs(wp: list[complex], wm: list[complex]) -> list[complex]:
    h = len(wp) - 1
    out = [0j] * (2 * h + 1)
    for i, a in enumerate(wp):
        for j, b in enumerate(wm):
            out[i + j] += a * b
    return out


def _reconstruction_residual(c: tuple[complex, ...], wp, wm) -> float:
    prod = _product_coeffs(wp, wm)
    return max(abs(a - b) for a, b in zip(prod, c))


def _split_equations(
    c: tuple[complex, ...], z: list[complex], signs: tuple[int, ...]
) -> list[complex]:
    """Residual vector (length n-3) of the coefficient-matching system."""
    n = len(c) - 1
    h = n // 2
    omega = z[: h - 1]
    l_vars = z[h - 1 :]
    wp, wm = _assemble_halves(c, omega, l_vars, signs)
    prod = _product_coeffs(wp, wm)
    # slots 0, n-2, n-1, n match by construction
    return [prod[i] - c[i] for i in range(1, n - 2)]


def _solve_lin(a: list[list[complex]], b: list[complex]) -> list[complex] | None:
    """Gaussian elimination with partial pivoting; None when singular."""
    n = len(b)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(m[r][col]))
        if abs(m[piv][col]) < 1e-300:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = 1.0 / m[col][col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] * inv
                for cc in range(col, n + 1):
                    m[r][cc] -= f * m[col][cc]
    return [m[i][n] / m[i][i] for i in range(n)]


def _newton_on_split(
    c: tuple[complex, ...],
    z0: list[complex],
    signs: tuple[int, ...],
    max_iter: int = 60,
) -> tuple[list[complex], float]:
    """Damped Newton on the coefficient-matching system, one sign pattern.

    The system is holomorphic away from radicand zeros, so a complex
    Jacobian from central differences is valid; steps halve (up to 20
    times) whenever the residual norm would grow.
    """
    dim = len(z0)
    z = z0[:]
    fz = _split_equations(c, z, signs)
    fnorm = max(abs(v) for v in fz)
    for _ in range(max_iter):
        if fnorm < 1e-12:
            break
        jac: list[list[complex]] = [[0j] * dim for _ in range(dim)]
        for j in range(dim):
            step = 1e-6 * (1.0 + abs(z[j]))
            zp = z[:]
            zp[j] = z[j] + step
            zm = z[:]
            zm[j] = z[j] - step
            fp = _split_equations(c, zp, signs)
            fm = _split_equations(c, zm, signs)
            for i in range(dim):
                jac[i][j] = (fp[i] - fm[i]) / (2.0 * step)
        delta = _solve_lin(jac, [-v for v in fz])
        if delta is None:
            break
        scale = 1.0
        improved = False
        for _ in range(20):
            cand = [z[i] + scale * delta[i] for i in range(dim)]
            fc = _split_equations(c, cand, signs)
            fn = max(abs(v) for v in fc)
            if fn < fnorm:
                z, fz, fnorm = cand, fc, fn
                improved = True
                break
            scale *= 0.5
        if not improved:
            break
    return z, fnorm


def _factor_newton(
    c: tuple[complex, ...], wp0: list[complex], wm0: list[complex], max_iter: int = 80
) -> tuple[list[complex], list[complex], float]:
    """Newton directly on the factor coefficients (no radical branches).

    Fallback engine when the omega/L iteration stalls: unknowns are the 2h
    non-leading coefficients of both monic halves, equations the full
    coefficient match. The analytic Jacobian is the pair of convolution
    operators.
    """
    n = len(c) - 1
    h = n // 2
    u = wp0[:h]
    v = wm0[:h]

    def f(uv: list[complex]) -> list[complex]:
        prod = _product_coeffs(uv[:h] + [1.0 + 0j], uv[h:] + [1.0 + 0j])
        return [prod[i] - c[i] for i in range(n)]

    z = u + v
    fz = f(z)
    fnorm = max(abs(x) for x in fz)
    for _ in range(max_iter):
        if fnorm < 1e-13:
            break
        jac = [[0j] * n for _ in range(n)]
        uu = z[:h] + [1.0 + 0j]
        vv = z[h:] + [1.0 + 0j]
        for i in range(n):
            for j in range(h):
                # d prod[i] / d u_j = v_{i-j}; / d v_j = u_{i-j}
                if 0 <= i - j <= h:
                    jac[i][j] = vv[i - j]
                    jac[i][h + j] = uu[i - j]
        delta = _solve_lin(jac, [-x for x in fz])
        if delta is None:
            break
        scale = 1.0
        improved = False
        for _ in range(20):
            cand = [z[i] + scale * delta[i] for i in range(n)]
            fc = f(cand)
            fn = max(abs(x) for x in fc)
            if fn < fnorm:
                z, fz, fnorm = cand, fc, fn
                improved = True
                break
            scale *= 0.5
        if not improved:
            break
    return z[:h] + [1.0 + 0j], z[h:] + [1.0 + 0j], fnorm


def _split_from_halves(
    c: tuple[complex, ...], wp: list[complex], wm: list[complex]
) -> SquareDifferenceSplit:
    """Express a factor pair in the omega / l_vars / w± parameterization."""
    n = len(c) - 1
    h = n // 2
    omega = [wp[j] * wm[j] for j in range(h + 1)]
    omega[0] = c[0]  # the designated constant slot; product matches to roundoff
    l_vars = [0j] * max(0, h - 2)
    for j in range(h - 3, -1, -1):
        top = wp[j] + wm[j]
        correction = c[h + j] - top
        if (h + j) % 2 == 0:
            correction = correction - omega[(h + j) // 2]
        l_vars[j] = correction
    return SquareDifferenceSplit(
        omega=omega,
        l_vars=l_vars,
        w_plus=wp,
        w_minus=wm,
        residual=_reconstruction_residual(c, wp, wm),
    )


def square_difference_split(
    F: Polynomial, residual_target: float = 1e-9, max_starts: int = 64
) -> SquareDifferenceSplit:
    """Split a monic polynomial of even degree 4..10 as (Q-P)(Q+P).

    Degree 4 goes through the closed-form resolvent cubic. Degrees 6-10 run
    damped Newton on the omega/L coefficient-matching system over seeded
    starts and the 2^(h-1) radical sign patterns; a factor-coefficient
    Newton pass refines or rescues the best candidate. The split always
    exists over C; failure to reach the target indicates iteration limits
    and raises ConvergenceError with the best split attached.
    """
    n = F.degree
    if n not in (4, 6, 8, 10):
        raise DegreeError("square_difference_split expects even degree 4..10")
    if F.lead != 1:
        raise ValueError("square_difference_split expects a monic polynomial")
    c = F.coeffs
    h = n // 2

    if n == 4:
        best = None
        for entry in solve_cubic(_resolvent_cubic(c)).roots:
            for sigma in (1.0, -1.0):
                w1p, w1m, w0p, w0m = _quartic_w_pairs(c, entry.root, sigma)
                wp = [w0p, w1p, 1.0 + 0j]
                wm = [w0m, w1m, 1.0 + 0j]
                err = _reconstruction_residual(c, wp, wm)
                if best is None or err < best[0]:
                    best = (err, wp, wm)
        wp, wm = best[1], best[2]
        if best[0] > residual_target:
            # degenerate resolvents halve the attainable digits; refine
            wp, wm, _ = _factor_newton(c, wp, wm)
        return _split_from_halves(c, wp, wm)

    dim = n - 3
    rng = random.Random(0xD1FF ^ n)
    sign_patterns = []
    for bits in range(2 ** (h - 1)):
        pat = tuple(1 if (bits >> j) & 1 == 0 else -1 for j in range(h - 1)) + (1,)
        sign_patterns.append(pat)

    best_split: SquareDifferenceSplit | None = None
    starts_used = 0
    start_pool: list[list[complex]] = [[0.05 + 0.05j] * dim]
    while len(start_pool) < max_starts:
        start_pool.append(
            [complex(rng.gauss(0.0, 0.6), rng.gauss(0.0, 0.6)) for _ in range(dim)]
        )
    for z0 in start_pool:
        for signs in sign_patterns:
            if starts_used >= max_starts:
                break
            starts_used += 1
            z, _ = _newton_on_split(c, z0, signs, max_iter=40)
            wp, wm = _assemble_halves(c, z[: h - 1], z[h - 1 :], signs)
            split = _split_from_halves(c, wp, wm)
            if best_split is None or split.residual < best_split.residual:
                best_split = split
            if best_split.residual <= residual_target:
                return best_split
        if best_split is not None and best_split.residual <= residual_target:
            return best_split

    # refine the best candidate (and a few fresh random starts) in factor space
    candidates = [(best_split.w_plus, best_split.w_minus)]
    for _ in range(8):
        candidates.append(
            (
                [complex(rng.gauss(0, 0.8), rng.gauss(0, 0.8)) for _ in range(h)] + [1.0 + 0j],
                [complex(rng.gauss(0, 0.8), rng.gauss(0, 0.8)) for _ in range(h)] + [1.0 + 0j],
            )
        )
    for wp0, wm0 in candidates:
        wp, wm, _ = _factor_newton(c, wp0, wm0)
        split = _split_from_halves(c, wp, wm)
        if split.residual < best_split.residual:
            best_split = split
        if best_split.residual <= residual_target:
            return best_split

    raise ConvergenceError(
        f"square-difference split stalled at residual {best_split.residual:.3e}",
        best_split,
    )


def _synthetic_deflate(p: Polynomial, root: complex) -> Polynomial:
    """Quotient of p by (x - root); the remainder is discarded."""
    coeffs = p.coeffs
    out = [0j] * (len(coeffs) - 1)
    acc = coeffs[-1]
    for i in range(len(coeffs) - 2, -1, -1):
        out[i] = acc
        acc = coeffs[i] + acc * root
    return Polynomial(out)


def _closed_form_roots(p: Polynomial) -> list[complex]:
    deg = p.degree
    if deg == 0:
        return []
    if deg == 1:
        return [-p.coeffs[0] / p.coeffs[1]]
    if deg == 2:
        return solve_quadratic(p).values()
    if deg == 3:
        return solve_cubic(p).values()
    if deg == 4:
        return solve_quartic(p).values()
    raise DegreeError(f"no closed form for degree {deg}")


def solve_by_split(F: Polynomial, polish_tol: float = 1e-11) -> RootReport:
    """Roots of a monic even-degree polynomial (n <= 10) via splitting.

    Each monic half is solved by the closed-form solver of its degree;
    degree-5 halves go through the dominant-term iteration, with any roots
    it leaves behind recovered by deflation to a closed-form residue. All
    roots are polished against F before reporting.
    """
    from .grim import GrimConfig, grim_solve

    split = square_difference_split(F)
    warnings: list[str] = []
    raw: list[tuple[complex, int]] = []
    for which, factor in enumerate(split.factors()):
        deg = factor.degree
        if deg <= 4:
            roots = _closed_form_roots(factor)
        elif deg == 5:
            rep = grim_solve(factor, GrimConfig())
            warnings.extend(f"factor {which}: {w}" for w in rep.warnings)
            roots = sorted(rep.roots, key=lambda e: e.residual)[:deg]
            roots = [e.root for e in roots]
            if len(roots) < deg:
                residue = factor
                for r in roots:
                    residue = _synthetic_deflate(residue, r)
                roots.extend(_closed_form_roots(residue))
                warnings.append(
                    f"factor {which}: {deg - len(roots) + residue.degree} "
                    "root(s) recovered by deflation"
                )
        else:
            raise DegreeError(f"unexpected factor degree {deg}")
        raw.extend((root, which) for root in roots)

    entries: list[RootEntry] = []
    for root, which in raw:
        try:
            x, res, its = newton_polish(F, root, tol=polish_tol, max_iter=80)
        except ConvergenceError as exc:
            x, res, its = exc.best
            warnings.append(f"polish stalled at residual {res:.3e}")
        entries.append(RootEntry(x, res, branch=which, iterations=its))
    report = RootReport(entries, method=f"split-{F.degree}", warnings=warnings)
    return report.sort()
