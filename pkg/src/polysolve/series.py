"""Series root engines: inverse-power trinomial and quadrinomial expansions,
their regrouping into generalized hypergeometric form, the Bring-Jerrard
quintic, the general-polynomial multinomial series and the cubic-seeded
correction series for the four-term septic.

All term construction runs in log space (lgamma plus complex logs) so that
Gamma-ratio terms far past the pole line neither overflow nor lose the
exact zeros contributed by reciprocal-Gamma factors.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .numerics import (
    DivergenceError,
    PFQParams,
    SeriesConfig,
    gamma_sign,
    log_abs_gamma,
    pfq_eval,
)
from .poly import (
    ConvergenceError,
    Polynomial,
    RootEntry,
    RootReport,
    newton_polish,
    scaled_residual,
)

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Trinomial:
    """z**s - alpha * z**b - q = 0 with integer exponents s > b >= 1."""

    s: int
    b: int
    alpha: complex
    q: complex

    def __post_init__(self):
        if self.s < 2:
            raise ValueError("trinomial needs s >= 2")
        if not 1 <= self.b <= self.s - 1:
            raise ValueError("trinomial needs 1 <= b <= s-1")
        if self.q == 0:
            raise ValueError("trinomial needs q != 0")
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "q", complex(self.q))

    def polynomial(self) -> Polynomial:
        coeffs = [0j] * (self.s + 1)
        coeffs[0] = -self.q
        coeffs[self.b] = -self.alpha
        coeffs[self.s] = 1.0
        return Polynomial(coeffs)


@dataclass(frozen=True)
class Quadrinomial:
    """x**s + c * x**r + alpha * x - b = 0 with s >= 4 and 2 <= r <= s-2."""

    s: int
    r: int
    c: complex
    alpha: complex
    b: complex

    def __post_init__(self):
        if self.s < 4:
            raise ValueError("quadrinomial needs s >= 4")
        if not 2 <= self.r <= self.s - 2:
            raise ValueError("quadrinomial needs 2 <= r <= s-2")
        if self.alpha == 0:
            raise ValueError("quadrinomial needs alpha != 0")
        for name in ("c", "alpha", "b"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    def polynomial(self) -> Polynomial:
        coeffs = [0j] * (self.s + 1)
        coeffs[0] = -self.b
        coeffs[1] = self.alpha
        coeffs[self.r] = self.c
        coeffs[self.s] = 1.0
        return Polynomial(coeffs)


@dataclass
class SeriesDiagnostics:
    status: str  # converged | diverged | truncated
    terms_used: int
    series_value: complex
    pre_polish_residual: float
    residual: float
    iterations: int = 0
    warnings: list[str] = field(default_factory=list)
    notes: dict = field(default_factory=dict)


def reciprocal_series_root(
    alpha: complex, s: complex, cfg: SeriesConfig = SeriesConfig()
) -> complex:
    """Root of z = alpha + s/z (the larger root of z^2 - alpha z - s).

    Sums alpha + sum_m (-1)^(m-1) C_{m-1} s^m / alpha^(2m-1) with C the
    Catalan numbers; term decay is the convergence authority.
    """
    alpha = complex(alpha)
    s = complex(s)
    if s == 0:
        return alpha
    if alpha == 0:
        raise DivergenceError("expansion point alpha = 0", None)
    total = alpha
    term = s / alpha
    ratio_base = s / (alpha * alpha)
    prev = abs(term)
    growth = 0
    for m in range(1, cfg.max_terms + 1):
        total += term
        mag = abs(term)
        if mag <= cfg.rel_tol * abs(total):
            return total
        if m > 1 and mag > prev:
            growth += 1
            if growth >= cfg.divergence_window:
                raise DivergenceError("series terms grow", total)
        else:
            growth = 0
        prev = mag
        term = term * (-ratio_base) * (2.0 * (2 * m - 1) / (m + 1))
    return total


def _trinomial_log_term(t: Trinomial, k: int, n: int) -> complex:
    """Term n >= 1 of the inverse-power series for branch k; exact 0 at the
    reciprocal-Gamma poles."""
    s, b = t.s, t.b
    num2 = 1 + b * n + s - n * s  # s * (denominator Gamma argument)
    if num2 % s == 0 and num2 <= 0:
        return 0j
    if t.alpha == 0:
        return 0j
    x2 = num2 / s
    log_mag = (
        log_abs_gamma((1 + b * n) / s)
        - log_abs_gamma(x2)
        - math.lgamma(n + 1)
        - math.log(s)
    )
    z = (
        n * cmath.log(t.alpha)
        + ((1 + b * n - n * s) / s) * cmath.log(t.q)
        + complex(log_mag, _TWO_PI * k * (1 + b * n) / s)
    )
    return gamma_sign(x2) * cmath.exp(z)


def trinomial_series_root(
    t: Trinomial, k: int, cfg: SeriesConfig = SeriesConfig()
) -> tuple[complex, SeriesDiagnostics]:
    """Branch-k root of z^s - alpha z^b - q = 0 by Lagrange inversion.

    The series sits on top of the principal s-th root of q rotated by
    e^(2*pi*i*k/s); every term carries the phase e^(2*pi*i*k*(1+b*n)/s).
    Converged values are Newton-polished against the trinomial. Divergence
    (terms growing for a full window) raises DivergenceError carrying the
    partial sum.
    """
    s = t.s
    lead = cmath.exp(cmath.log(t.q) / s + 2j * math.pi * k / s)
    total = lead
    # term magnitudes zigzag across residue classes mod s; geometric decay
    # or growth is only visible at stride s, so track each class separately
    prev_by_class: list[float | None] = [None] * s
    growth_by_class = [0] * s
    recent: list[float] = []
    terms_used = 0
    status = "truncated"
    for n in range(1, cfg.max_terms + 1):
        term = _trinomial_log_term(t, k, n)
        total += term
        terms_used = n
        mag = abs(term)
        cls = n % s
        if mag == 0.0:
            if t.alpha == 0:
                status = "converged"
                break
            continue
        if mag > 1e100:
            status = "diverged"
            break
        prev = prev_by_class[cls]
        if prev is not None:
            if mag > prev and n >= 16:
                growth_by_class[cls] += 1
                if growth_by_class[cls] >= cfg.divergence_window:
                    status = "diverged"
                    break
            else:
                growth_by_class[cls] = 0
        prev_by_class[cls] = mag
        recent.append(mag)
        if len(recent) > s:
            recent.pop(0)
        if n >= s and max(recent) <= cfg.rel_tol * abs(total):
            status = "converged"
            break
    else:
        status = "truncated"

    if status == "truncated" and prev_by_class:
        trailing = max(m for m in prev_by_class if m is not None) if any(
            m is not None for m in prev_by_class
        ) else 0.0
        if trailing > abs(total):
            status = "diverged"

    p = t.polynomial()
    pre = scaled_residual(p, total)
    if status == "diverged":
        raise DivergenceError(
            f"series branch k={k} diverged after {terms_used} terms", total
        )
    try:
        root, res, its = newton_polish(p, total, tol=1e-12, max_iter=80)
    except ConvergenceError as exc:
        root, res, its = exc.best
    diag = SeriesDiagnostics(status, terms_used, total, pre, res, its)
    return root, diag


def argument_modulus_constant(s: int, b: int) -> Fraction:
    """Exact modulus coefficient b^b (s-b)^(s-b) / s^s of the regrouped
    hypergeometric argument."""
    if not 1 <= b < s:
        raise ValueError("need 1 <= b < s")
    return Fraction(b**b * (s - b) ** (s - b), s**s)


@dataclass
class PFQRootGroup:
    prefactor: complex  # q-power excluded
    power_of_q: Fraction
    params: PFQParams
    argument: complex


@dataclass
class PFQRootForm:
    """One trinomial root branch as a finite sum of pFq values.

    Evaluates to sum over residue classes of
    prefactor * q^power_of_q * pFq(params; argument).
    """

    trinomial: Trinomial
    k: int
    groups: list[PFQRootGroup]

    def evaluate(self, cfg: SeriesConfig = SeriesConfig()) -> tuple[complex, str]:
        total = 0j
        status = "converged"
        for g in self.groups:
            if g.prefactor == 0:
                continue
            res = pfq_eval(g.params, g.argument, cfg)
            if res.status != "converged":
                status = res.status
            total += g.prefactor * cmath.exp(
                float(g.power_of_q) * cmath.log(self.trinomial.q)
            ) * res.value
        return total, status


def trinomial_pfq_root(t: Trinomial, k: int) -> PFQRootForm:
    """Regroup the trinomial inverse-power series by residue class of the
    term index modulo s.

    Within one class the successive-term ratio is rational in the class
    counter, so each class is a single pFq; the shared argument is
    (-1)^(s-b) * b^b (s-b)^(s-b) / s^s * alpha^s / q^(s-b) (unit phase
    e^(2*pi*i*k*b) folded in). Parameters follow from the Gamma shift
    algebra in exact rational arithmetic, with upper/lower cancellation.
    """
    s, b = t.s, t.b
    const = argument_modulus_constant(s, b)
    sign = -1.0 if (s - b) % 2 else 1.0
    # e^(2*pi*i*k*b) is an integer turn: exactly one
    argument = (
        sign
        * float(const)
        * t.alpha**s
        * cmath.exp((b - s) * cmath.log(t.q))
    )
    groups: list[PFQRootGroup] = []
    for r0 in range(s):
        n0 = r0
        power = Fraction(1 + b * n0 - n0 * s, s)
        num2 = 1 + b * n0 + s - n0 * s
        if num2 % s == 0 and num2 <= 0:
            groups.append(
                PFQRootGroup(0j, power, PFQParams((), ()), argument)
            )
            continue
        # prefactor = first class term without its q power
        if n0 == 0:
            pref = cmath.exp(2j * math.pi * k / s)
        elif t.alpha == 0:
            pref = 0j  # pure binomial: every later class vanishes
        else:
            x2 = num2 / s
            log_mag = (
                log_abs_gamma((1 + b * n0) / s)
                - log_abs_gamma(x2)
                - math.lgamma(n0 + 1)
                - math.log(s)
            )
            z = n0 * cmath.log(t.alpha) + complex(
                log_mag, _TWO_PI * k * (1 + b * n0) / s
            )
            pref = gamma_sign(x2) * cmath.exp(z)
        a0 = Fraction(1 + b * n0, s) + 1 - n0  # class-start denominator argument
        upper = [ (Fraction(1 + b * n0, s) + i) / b for i in range(b) ]
        upper += [ (Fraction(tt) - a0) / (s - b) for tt in range(1, s - b + 1) ]
        lower = [Fraction(r0 + j, s) for j in range(1, s + 1) if j != s - r0]
        upper_red, lower_red = _cancel_params(upper, lower)
        groups.append(
            PFQRootGroup(
                pref,
                power,
                PFQParams(
                    tuple(complex(float(u)) for u in upper_red),
                    tuple(complex(float(l)) for l in lower_red),
                ),
                argument,
            )
        )
    return PFQRootForm(t, k, groups)


def _cancel_params(
    upper: list[Fraction], lower: list[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    up = list(upper)
    low = list(lower)
    for u in list(up):
        if u in low:
            up.remove(u)
            low.remove(u)
    return up, low


def bring_jerrard_quintic(alpha: complex, q: complex) -> RootReport:
    """All five roots of z^5 + alpha z - q = 0.

    Runs the trinomial series over the five branches (alpha sign-flipped
    into the standard trinomial shape), polishes and deduplicates; branches
    whose series diverge are filled in from the all-roots oracle and
    flagged in the warnings.
    """
    from .poly import all_roots_oracle

    p = Polynomial([-q, alpha, 0, 0, 0, 1])
    warnings: list[str] = []
    found: list[tuple[complex, float, int, int]] = []
    fallback_branches: list[int] = []
    if q == 0:
        fallback_branches = list(range(5))
        warnings.append("q = 0 is outside the series form; oracle fallback")
    else:
        t = Trinomial(5, 1, -alpha, q)
        for k in range(5):
            try:
                root, diag = trinomial_series_root(t, k)
                found.append((root, diag.residual, k, diag.iterations))
            except DivergenceError:
                fallback_branches.append(k)
        if fallback_branches:
            warnings.append(
                "series diverged for branches "
                f"{fallback_branches}; oracle fallback"
            )

    dedup: list[tuple[complex, float, int, int]] = []
    for cand in sorted(found, key=lambda c: c[1]):
        if all(abs(cand[0] - kept[0]) > 1e-6 * (1.0 + abs(cand[0])) for kept in dedup):
            dedup.append(cand)

    if len(dedup) < 5:
        oracle = all_roots_oracle(p)
        for entry in oracle.roots:
            if len(dedup) == 5:
                break
            if all(
                abs(entry.root - kept[0]) > 1e-6 * (1.0 + abs(entry.root))
                for kept in dedup
            ):
                try:
                    x, res, its = newton_polish(p, entry.root, tol=1e-12)
                except ConvergenceError as exc:
                    x, res, its = exc.best
                dedup.append((x, res, -1, its))
                if not fallback_branches and q != 0:
                    warnings.append("series branches collided; oracle fill-in")

    entries = [
        RootEntry(root, res, branch=k, iterations=its)
        for root, res, k, its in dedup[:5]
    ]
    return RootReport(entries, method="bring-jerrard", warnings=warnings).sort()


def quadrinomial_series_root(
    w: Quadrinomial, cfg: SeriesConfig = SeriesConfig()
) -> tuple[complex, SeriesDiagnostics]:
    """Series root of x^s + c x^r + alpha x - b = 0 near x = b/alpha.

    Term n is the binomial-Gamma closed form of the n-th inversion
    derivative: ((-1)^n) sum_j c^(n-j) / (j! (n-j)!) * alpha^(-n)
    * Gamma(mu+1)/Gamma(mu+2-n) * z^(mu+1-n) with mu = r n + (s-r) j,
    all evaluated at z = b/alpha. The stated convergence prechecks are
    advisory; term decay governs.
    """
    s, r = w.s, w.r
    p = w.polynomial()
    notes = {}
    if w.c != 0:
        notes["precheck_cb_over_alpha2"] = abs(w.c * w.b / (w.alpha * w.alpha))
        notes["precheck_tail"] = abs(
            w.b ** (s - 2) / (w.c * w.alpha ** (s - 2))
        )
    if w.b == 0:
        diag = SeriesDiagnostics("converged", 0, 0j, 0.0, 0.0, 0, notes=notes)
        return 0j, diag

    z = w.b / w.alpha
    log_z = cmath.log(z)
    log_alpha = cmath.log(w.alpha)
    log_c = cmath.log(w.c) if w.c != 0 else None

    def term_at(n: int) -> complex:
        acc = 0j
        for j in range(n + 1):
            if log_c is None and j < n:
                continue
            mu = r * n + (s - r) * j
            logv = (
                math.lgamma(mu + 1)
                - math.lgamma(mu + 2 - n)
                - math.lgamma(j + 1)
                - math.lgamma(n - j + 1)
                - n * log_alpha
                + (mu + 1 - n) * log_z
            )
            if log_c is not None:
                logv += (n - j) * log_c
            acc += cmath.exp(logv)
        return acc if n % 2 == 0 else -acc

    total = z
    prev = abs(z)
    growth = 0
    status = "truncated"
    terms_used = 0
    for n in range(1, cfg.max_terms + 1):
        term = term_at(n)
        total += term
        terms_used = n
        mag = abs(term)
        if mag <= cfg.rel_tol * abs(total):
            status = "converged"
            break
        if mag > 1e100:
            status = "diverged"
            break
        if n >= 4 and mag > prev:
            growth += 1
            if growth >= cfg.divergence_window:
                status = "diverged"
                break
        else:
            growth = 0
        prev = mag
    if status == "diverged":
        raise DivergenceError(
            f"quadrinomial series diverged after {terms_used} terms", total
        )
    pre = scaled_residual(p, total)
    try:
        root, res, its = newton_polish(p, total, tol=1e-12, max_iter=80)
    except ConvergenceError as exc:
        root, res, its = exc.best
    return root, SeriesDiagnostics(status, terms_used, total, pre, res, its, notes=notes)


def _cubic_seed(c: complex, a: complex, b: complex, q: complex) -> complex:
    """Principal-branch closed form for the root of c z^3 + a z^2 + b z - q."""
    d0 = -a * a + 3.0 * b * c
    d1 = -2.0 * a**3 + 9.0 * a * b * c + 27.0 * c * c * q
    inner = cmath.sqrt(4.0 * d0**3 + d1 * d1)
    radicand = d1 + inner
    if radicand == 0:
        radicand = d1 - inner
    if radicand == 0:
        return -a / (3.0 * c)
    tcr = _principal_cbrt(radicand)
    two_cr = 2.0 ** (1.0 / 3.0)
    return (
        -a / (3.0 * c)
        - two_cr * d0 / (3.0 * c * tcr)
        + tcr / (3.0 * two_cr * c)
    )


def _principal_cbrt(zv: complex) -> complex:
    if zv == 0:
        return 0j
    return cmath.exp(cmath.log(zv) / 3.0)


def _series_mul(a: list[complex], b: list[complex], order: int) -> list[complex]:
    out = [0j] * (order + 1)
    for i, av in enumerate(a):
        if av == 0:
            continue
        for j, bv in enumerate(b):
            if i + j > order:
                break
            out[i + j] += av * bv
    return out


def adjacent_septic_root(
    c: complex, a: complex, b: complex, q: complex, cfg: SeriesConfig = SeriesConfig()
) -> tuple[complex, SeriesDiagnostics]:
    """Root of x^7 + c x^3 + a x^2 + b x - q = 0 from the cubic-seeded series.

    The seed z_in is the principal-branch root of the adjacent cubic
    c z^3 + a z^2 + b z - q. The correction series is the expansion of the
    full root in powers of the degree-7 perturbation around that cubic,
    built by implicit series inversion and summed at weight one; the first
    term is -z_in^7 / g'(z_in). Experimental contract: the series improves
    the seed's residual, Newton polish supplies the final root. If the
    series terms grow immediately the seed is returned with a warning.
    """
    if c == 0:
        raise ValueError("adjacent method needs a nonzero x^3 coefficient")
    p = Polynomial([-q, b, a, c, 0, 0, 0, 1.0])
    g = Polynomial([-q, b, a, c])
    z_in = _cubic_seed(c, a, b, q)
    try:
        z_in = newton_polish(g, z_in, tol=1e-15, max_iter=30)[0]
    except ConvergenceError as exc:
        z_in = exc.best[0]
    res_seed = scaled_residual(p, z_in)

    g1 = 3.0 * c * z_in * z_in + 2.0 * a * z_in + b
    g2 = 3.0 * c * z_in + a
    g3 = c
    warnings: list[str] = []
    if g1 == 0:
        warnings.append("vanishing cubic derivative at the seed; series skipped")
        value, terms_used, status = z_in, 0, "diverged"
    else:
        order = min(cfg.max_terms, 40)
        y = [0j] * (order + 1)
        for m in range(1, order + 1):
            y2 = _series_mul(y, y, m)
            y3 = _series_mul(y2, y, m)
            zy = y[:]
            zy[0] = zy[0] + z_in
            pw = [1.0 + 0j]
            for _ in range(7):
                pw = _series_mul(pw, zy, m)
            rhs = g2 * y2[m] + g3 * y3[m] + (pw[m - 1] if m - 1 <= len(pw) - 1 else 0j)
            y[m] = -rhs / g1
        value = z_in
        prev = math.inf
        status = "truncated"
        terms_used = 0
        for m in range(1, order + 1):
            mag = abs(y[m])
            if mag > prev:
                status = "converged" if prev <= cfg.rel_tol * abs(value) else "diverged"
                break
            value += y[m]
            terms_used = m
            prev = mag
            if mag <= cfg.rel_tol * abs(value):
                status = "converged"
                break
        if terms_used == 0:
            value = z_in
            warnings.append("first series term already grows; seed returned")

    pre = scaled_residual(p, value)
    if pre > res_seed:
        value = z_in
        pre = res_seed
        if status != "diverged":
            warnings.append("series did not improve the seed; seed returned")
        status = "diverged"
    try:
        root, res, its = newton_polish(p, value, tol=1e-12, max_iter=100)
    except ConvergenceError as exc:
        root, res, its = exc.best
        warnings.append(f"polish stalled at residual {res:.3e}")
    diag = SeriesDiagnostics(
        status,
        terms_used,
        value,
        pre,
        res,
        its,
        warnings=warnings,
        notes={"seed": z_in, "seed_residual": res_seed},
    )
    return root, diag


def _taylor_shift(p: Polynomial, c: complex) -> list[complex]:
    """Coefficients of p around c: p(z) = sum alpha_j (z - c)^j.

    Repeated synthetic division by (x - c); each remainder is the next
    Taylor coefficient.
    """
    work = list(p.coeffs)
    out: list[complex] = []
    while work:
        quotient = [0j] * (len(work) - 1)
        acc = 0j
        for i in range(len(work) - 1, 0, -1):
            acc = acc * c + work[i]
            quotient[i - 1] = acc
        out.append(acc * c + work[0])
        work = quotient
    return out


def general_poly_series_root(
    p: Polynomial, c: complex, order: int = 24, cfg: SeriesConfig = SeriesConfig()
) -> tuple[complex, SeriesDiagnostics]:
    """Multinomial Lagrange series for one root of p near the center c.

    With alpha_j the Taylor coefficients of p at c, sums over multi-indices
    (n_2..n_k) of weight W = sum j n_j <= order:

        z = c - (alpha_0/alpha_1) * sum (n-1)!/(n_1! n_2! ... n_k!)
            * prod_j (alpha_0^(j-1) alpha_j / (-alpha_1)^j)^(n_j)

    where n = W + 1 and n_1 = sum (j-1) n_j + 1. Weight-group growth is the
    divergence signal; the returned value is Newton-polished.
    """
    alphas = _taylor_shift(p, c)
    if len(alphas) < 2 or alphas[1] == 0:
        raise ValueError("series center needs p'(c) != 0")
    a0, a1 = alphas[0], alphas[1]
    if a0 == 0:
        diag = SeriesDiagnostics("converged", 0, c, scaled_residual(p, c), scaled_residual(p, c))
        return c, diag
    k = len(alphas) - 1
    ratios = [0j, 0j] + [
        a0 ** (j - 1) * alphas[j] / (-a1) ** j for j in range(2, k + 1)
    ]
    dominance = abs(a0 / a1)
    advisory_ok = all(abs(rt) * dominance < 1.0 for rt in ratios[2:]) if k >= 2 else True

    groups = [0j] * (order + 1)
    index: list[int] = [0] * (k + 1)

    def walk(j: int, weight: int):
        if j > k:
            n = weight + 1
            n1 = sum((jj - 1) * index[jj] for jj in range(2, k + 1)) + 1
            denom = math.factorial(n1)
            for jj in range(2, k + 1):
                denom *= math.factorial(index[jj])
            coeff = math.factorial(n - 1) / denom
            val = complex(coeff)
            for jj in range(2, k + 1):
                if index[jj]:
                    val *= ratios[jj] ** index[jj]
            groups[weight] += val
            return
        max_count = (order - weight) // j
        for count in range(max_count + 1):
            index[j] = count
            walk(j + 1, weight + j * count)
        index[j] = 0

    walk(2, 0)

    total = 0j
    prev = math.inf
    growth = 0
    small = 0
    status = "truncated"
    terms_used = 0
    best_total = 0j
    best_mag = math.inf
    best_terms = 0
    warnings: list[str] = []
    for wgt in range(order + 1):
        total += groups[wgt]
        terms_used = wgt + 1
        mag = abs(groups[wgt])
        if mag > 0.0 and mag < best_mag:
            best_mag = mag
            best_total = total
            best_terms = terms_used
        # weight classes with no admissible multi-index are identically zero;
        # convergence needs two consecutive small groups
        if wgt >= 1 and mag <= cfg.rel_tol * max(abs(total), 1e-300):
            small += 1
            if small >= 2:
                status = "converged"
                break
            continue
        small = 0
        if wgt >= 4 and mag > prev:
            growth += 1
            if growth >= min(cfg.divergence_window, 4):
                status = "diverged"
                break
        else:
            growth = 0
        prev = mag

    if status == "diverged":
        # asymptotic rescue: truncate at the smallest group and let the
        # polish decide whether that prefix was close enough
        total = best_total
        terms_used = best_terms
        warnings.append("series groups grow; truncated at the smallest group")
        status = "truncated"

    value = c - (a0 / a1) * total
    pre = scaled_residual(p, value)
    try:
        root, res, its = newton_polish(p, value, tol=1e-12, max_iter=80)
    except ConvergenceError as exc:
        root, res, its = exc.best
    if warnings and res > 1e-8:
        raise DivergenceError("multinomial series diverged", value)
    diag = SeriesDiagnostics(
        status, terms_used, value, pre, res, its,
        warnings=warnings,
        notes={"advisory_dominance_ok": advisory_ok},
    )
    return root, diag
