"""Stirling numbers of both kinds, Lah numbers, Bell numbers, partial Bell
polynomials, and the alternating Lah/Stirling expression for Bell numbers.

Every family here is computed by at least two independent routes; the test
suite pins them against each other and against brute-force partition counts.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import basis
from .exactmath import (
    Poly,
    Series,
    as_integer,
    binomial,
    falling_factorial,
    rising_factorial,
)
from .triangles import Triangle, recurrence_triangle


def stirling2_triangle(nmax: int) -> Triangle:
    """S(n,k) via S(n,k) = S(n-1,k-1) + k*S(n-1,k), S(0,0) = 1."""
    return recurrence_triangle("stirling2", {}, nmax, lambda n, k: 1, lambda n, k: k)


def stirling1_triangle(nmax: int) -> Triangle:
    """Signed s(n,k): the coefficient of x^k in x(x-1)...(x-n+1)."""
    mat = basis.expand_in_monomials(basis.factorial_basis(1, 0, 1, nmax))
    return mat.to_triangle("stirling1", {})


def lah_signed_triangle(nmax: int) -> Triangle:
    """Signed Lah triangle from L(n,k) = -L(n-1,k-1) - (n-1+k)*L(n-1,k)."""
    return recurrence_triangle("lah", {}, nmax, lambda n, k: -1, lambda n, k: -(n - 1 + k))


def lah_explicit(n: int, k: int) -> int:
    """Signed Lah number in closed form: (-1)^n C(n-1,k-1) n!/k!."""
    if n == 0 and k == 0:
        return 1
    if k <= 0 or k > n:
        return 0
    value = binomial(n - 1, k - 1) * (math.factorial(n) // math.factorial(k))
    return -value if n % 2 else value


def lah_signless(n: int, k: int) -> int:
    """Signless Lah number (-1)^n L(n,k): counts partitions of an n-set
    into k nonempty linearly ordered blocks."""
    value = lah_explicit(n, k)
    return -value if n % 2 else value


def lah_vertical(n: int, k: int) -> int:
    """Signed Lah number assembled column-wise from lower rows:
    L(n,k) = sum_i (-1)^(i+1) (n-1+k)_i L(n-1-i, k-1)."""
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or k > n:
        return 0
    top = n - 1
    tri = lah_signed_triangle(top)
    total = 0
    for i in range(top - k + 2):
        term = falling_factorial(k + top, i) * tri.value(top - i, k - 1)
        total += term if i % 2 else -term
    return total


def lah_horizontal(n: int, k: int) -> int:
    """Signed Lah number recovered row-wise from row n+1:
    L(n,k) = sum_i (-1)^(i+1) <n+k+1>_i L(n+1, k+i+1), where <x>_i is the
    ascending product x(x+1)...(x+i-1).  (The descending reading fails the
    cross-checks; see the verification suite.)"""
    if k < 0 or k > n:
        return 0
    tri = lah_signed_triangle(n + 1)
    total = 0
    for i in range(n - k + 1):
        term = rising_factorial(n + k + 1, i) * tri.value(n + 1, k + i + 1)
        total += term if i % 2 else -term
    return total


def lah_egf_check(k: int, order: int) -> bool:
    """True iff n! [t^n] (1/k!)((-t)/(1+t))^k equals L(n,k) for n <= order."""
    if order < k:
        raise ValueError("order must be at least k")
    one_plus_t = Series.from_poly(Poly((1, 1)), order)
    base = Series.from_poly(Poly((0, -1)), order) * one_plus_t.inverse()
    series = (base ** k) * Fraction(1, math.factorial(k))
    tri = lah_signed_triangle(order)
    return all(
        series.coefficient(n) * math.factorial(n) == tri.value(n, k) for n in range(order + 1)
    )


def lah_from_stirlings(n: int, k: int) -> int:
    """Signed Lah from both Stirling kinds: L(n,k) = sum_j (-1)^j s(n,j) S(j,k)."""
    s1 = stirling1_triangle(n)
    s2 = stirling2_triangle(n)
    total = 0
    for j in range(k, n + 1):
        term = s1.value(n, j) * s2.value(j, k)
        total += -term if j % 2 else term
    return total


def bell(n: int) -> int:
    """Bell number: row sum of the Stirling-second-kind triangle."""
    return stirling2_triangle(n).row_sum(n)


def qi_bell(n: int) -> int:
    """Bell number through the alternating double sum
    B_n = sum_k (-1)^(n-k) [sum_j L(k,j)] S(n,k) over signless Lah numbers."""
    s2 = stirling2_triangle(n)
    total = 0
    for k in range(n + 1):
        inner = sum(lah_signless(k, j) for j in range(k + 1))
        term = inner * s2.value(n, k)
        total += term if (n - k) % 2 == 0 else -term
    return total


def partial_bell(n: int, k: int, xs) -> int:
    """Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}) by direct
    enumeration of multiplicity vectors (l_i) with sum l_i = k and
    sum i*l_i = n."""
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if k > n:
        return 0
    if n == 0:
        return 1
    width = n - k + 1
    xs = list(xs)
    if len(xs) < width:
        raise ValueError(f"need at least {width} arguments, got {len(xs)}")
    factors = [Fraction(xs[i - 1], math.factorial(i)) for i in range(1, width + 1)]
    total = Fraction(0)

    def assign(i, blocks_left, weight_left, acc):
        nonlocal total
        if i == width:
            if blocks_left == 0 and weight_left == 0:
                total += acc
            return
        step = i + 1
        limit = min(blocks_left, weight_left // step)
        for l in range(limit + 1):
            assign(
                i + 1,
                blocks_left - l,
                weight_left - l * step,
                acc * factors[i] ** l / math.factorial(l),
            )

    assign(0, k, n, Fraction(1))
    return as_integer(total * math.factorial(n))
