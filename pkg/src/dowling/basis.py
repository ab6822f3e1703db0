"""Graded polynomial bases and exact connection coefficients between them.

A graded basis is a sequence of polynomials whose n-th element has degree
exactly n.  Any two graded bases over the rationals are related by an
invertible lower-triangular change-of-basis matrix, and every number family
in this package is such a matrix for a suitable pair of bases.  The solver
works on monomial coefficient vectors by back-substitution, so a single
code path serves Stirling, Whitney, Lah and all their relatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactmath import DegenerateBasisError, Poly, as_integer
from .triangles import Triangle


@dataclass(frozen=True)
class PolyBasis:
    """A tuple of polynomials, validated so element n has degree exactly n."""

    elements: tuple

    def __post_init__(self):
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        if not elems:
            raise DegenerateBasisError("a basis needs at least one element")
        for n, p in enumerate(elems):
            if p.degree != n:
                raise DegenerateBasisError(
                    f"element {n} has degree {p.degree}; a graded basis needs degree exactly {n}"
                )

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def nmax(self) -> int:
        return len(self.elements) - 1

    @classmethod
    def from_function(cls, build, nmax: int) -> "PolyBasis":
        return cls(tuple(build(n) for n in range(nmax + 1)))


def monomial_basis(nmax: int) -> PolyBasis:
    """1, x, x^2, ..., x^nmax."""
    return PolyBasis(tuple(Poly([0] * n + [1]) for n in range(nmax + 1)))


def factorial_basis(a, b, m, nmax: int) -> PolyBasis:
    """Elements prod_{i<n} (a*x + b - i*m), built incrementally."""
    if a == 0 and nmax >= 1:
        raise DegenerateBasisError("zero leading scale gives a degenerate basis")
    elems = [Poly((1,))]
    for n in range(1, nmax + 1):
        elems.append(elems[-1] * Poly((b - (n - 1) * m, a)))
    return PolyBasis(tuple(elems))


def power_basis(base: Poly, nmax: int) -> PolyBasis:
    """Powers base^n of a degree-one polynomial."""
    if base.degree != 1:
        raise DegenerateBasisError("power basis needs a polynomial of degree exactly 1")
    elems = [Poly((1,))]
    for n in range(1, nmax + 1):
        elems.append(elems[-1] * base)
    return PolyBasis(tuple(elems))


@dataclass(frozen=True)
class CoeffMatrix:
    """Lower-triangular matrix of exact rationals; row n holds entries (n, 0..n)."""

    rows: tuple
    family: str = ""
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        rows = tuple(
            tuple(v if isinstance(v, Fraction) else Fraction(v) for v in row) for row in self.rows
        )
        object.__setattr__(self, "rows", rows)
        for n, row in enumerate(rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")

    @property
    def nmax(self) -> int:
        return len(self.rows) - 1

    @property
    def size(self) -> int:
        return len(self.rows)

    @classmethod
    def from_triangle(cls, tri: Triangle) -> "CoeffMatrix":
        return cls(tri.rows, tri.family, dict(tri.params))

    def entry(self, n: int, k: int) -> Fraction:
        if n < 0 or k < 0 or k > n:
            return Fraction(0)
        return self.rows[n][k]

    def mul(self, other: "CoeffMatrix") -> "CoeffMatrix":
        """Triangular matrix product: out(n,m) = sum_j self(n,j) * other(j,m)."""
        if self.size != other.size:
            raise ValueError("matrix sizes differ")
        rows = []
        for n in range(self.size):
            row = []
            for m in range(n + 1):
                row.append(sum(self.rows[n][j] * other.rows[j][m] for j in range(m, n + 1)))
            rows.append(tuple(row))
        return CoeffMatrix(tuple(rows))

    def is_identity(self) -> bool:
        for n, row in enumerate(self.rows):
            for k, v in enumerate(row):
                if v != (1 if n == k else 0):
                    return False
        return True

    def transform(self, seq) -> list:
        """Apply as a lower-triangular matrix to a (short enough) sequence."""
        seq = list(seq)
        if len(seq) > self.size:
            raise ValueError("sequence longer than the matrix")
        return [
            sum(self.rows[n][k] * seq[k] for k in range(n + 1)) for n in range(len(seq))
        ]

    def int_rows(self) -> tuple:
        """Rows as plain ints; raises IntegralityError on any denominator."""
        return tuple(tuple(as_integer(v) for v in row) for row in self.rows)

    def to_triangle(self, family: str, params: dict | None = None) -> Triangle:
        """Convert to an integer Triangle, asserting every entry is integral."""
        return Triangle(family, dict(params or {}), self.nmax, self.int_rows())


def identity_matrix(nmax: int) -> CoeffMatrix:
    return CoeffMatrix(tuple(tuple(1 if k == n else 0 for k in range(n + 1)) for n in range(nmax + 1)))


def expand_in_monomials(basis: PolyBasis) -> CoeffMatrix:
    """Row n = monomial coefficients of basis element n (constant term first)."""
    rows = []
    for n, p in enumerate(basis.elements):
        rows.append(tuple(p.coefficient(i) for i in range(n + 1)))
    return CoeffMatrix(tuple(rows))


def connection_matrix(source: PolyBasis, target: PolyBasis) -> CoeffMatrix:
    """Matrix M with source[n] = sum_{j<=n} M(n,j) * target[j].

    Solved by back-substitution on monomial coefficients: the leading
    coefficient of target[j] pins M(n,j) from degree j downwards.
    """
    if source.size != target.size:
        raise ValueError("bases have different sizes")
    size = source.size
    tcoeffs = [list(p.coeffs) for p in target.elements]
    leads = [p.leading for p in target.elements]
    rows = []
    for n in range(size):
        residual = [source.elements[n].coefficient(i) for i in range(n + 1)]
        row = [Fraction(0)] * (n + 1)
        for j in range(n, -1, -1):
            c = residual[j] / leads[j]
            row[j] = c
            if c:
                tj = tcoeffs[j]
                for i in range(j + 1):
                    residual[i] -= c * tj[i]
        rows.append(tuple(row))
    return CoeffMatrix(tuple(rows))


def verify_tauber_product(ck: CoeffMatrix, dh: CoeffMatrix, l: CoeffMatrix) -> bool:
    """True iff l equals the triangular product ck * dh."""
    if not (ck.size == dh.size == l.size):
        raise ValueError("matrix sizes differ")
    return ck.mul(dh).rows == l.rows


def verify_orthogonality(c: CoeffMatrix, d: CoeffMatrix) -> bool:
    """True iff c and d are mutually inverse (both products are the identity)."""
    if c.size != d.size:
        raise ValueError("matrix sizes differ")
    return c.mul(d).is_identity() and d.mul(c).is_identity()
