"""Shared independent oracles and corpus builders.

Everything here deliberately avoids the library's own solver paths: roots
come from bisection or the Durand-Kerner oracle, reference sums from direct
term-by-term evaluation.
"""

from __future__ import annotations

import cmath
import math
import random

import pytest

from polysolve import Polynomial, poly_from_roots


def bisect_root(f, lo: float, hi: float, tol: float = 1e-14) -> float:
    """Plain bisection; the bracketing endpoints must straddle the root."""
    flo, fhi = f(lo), f(hi)
    assert flo * fhi <= 0, "bisection oracle needs a sign change"
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0 or hi - lo < tol:
            return mid
        if flo * fm <= 0:
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def direct_pfq_sum(upper, lower, z, terms: int = 200) -> complex:
    """Reference pFq partial sum built from explicit Pochhammer products.

    Each term is assembled from scratch, with z^n/n! folded in factor by
    factor so that large n stays inside double range.
    """
    total = 0j
    for n in range(terms):
        term = 1.0 + 0j
        for i in range(n):
            term *= z / (i + 1.0)
        for a in upper:
            for i in range(n):
                term *= a + i
        for b in lower:
            for i in range(n):
                term /= b + i
        total += term
    return total


def unit_disk_poly(rng: random.Random, degree: int, monic: bool = True) -> Polynomial:
    coeffs = [
        complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(degree)
    ]
    coeffs.append(1.0 if monic else complex(rng.uniform(0.5, 1.5), rng.uniform(-1, 1)))
    return Polynomial(coeffs)


def separated_roots_poly(
    rng: random.Random, degree: int, radius: float = 1.2, min_sep: float = 0.1
):
    while True:
        roots = [
            complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
            for _ in range(degree)
        ]
        if all(
            abs(roots[i] - roots[j]) > min_sep
            for i in range(degree)
            for j in range(i + 1, degree)
        ):
            return poly_from_roots(roots), roots


def seeded_trinomial(rng: random.Random, s_max: int = 7, arg_cap: float = 0.8):
    """Trinomial with the regrouped argument modulus pushed below arg_cap."""
    from polysolve import Trinomial, argument_modulus_constant

    s = rng.randint(2, s_max)
    b = rng.randint(1, s - 1)
    q = cmath.rect(rng.uniform(0.5, 1.5), rng.uniform(-math.pi, math.pi))
    target = rng.uniform(0.05, arg_cap)
    const = float(argument_modulus_constant(s, b))
    mod_alpha = (target * abs(q) ** (s - b) / const) ** (1.0 / s)
    alpha = cmath.rect(mod_alpha, rng.uniform(-math.pi, math.pi))
    return Trinomial(s, b, alpha, q)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
