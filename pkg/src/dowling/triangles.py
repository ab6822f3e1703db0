"""Lower-triangular integer tables shared by every number family."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Triangle:
    """Immutable table of integers indexed (n, k) with 0 <= k <= n <= nmax.

    Entries outside that range read as zero; rows beyond nmax are an error
    because the table simply does not know them.
    """

    family: str
    params: dict = field(default_factory=dict)
    nmax: int = 0
    rows: tuple = ((1,),)

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.nmax + 1:
            raise ValueError(f"expected {self.nmax + 1} rows, got {len(rows)}")
        for n, row in enumerate(rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")

    def value(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        if n > self.nmax:
            raise IndexError(f"row {n} beyond nmax={self.nmax}")
        return self.rows[n][k]

    def row(self, n: int) -> tuple:
        return self.rows[n]

    def row_sum(self, n: int) -> int:
        return sum(self.rows[n])


def recurrence_triangle(family: str, params: dict, nmax: int, diag, same) -> Triangle:
    """Build T with T(0,0) = 1 and
    T(n,k) = diag(n,k) * T(n-1,k-1) + same(n,k) * T(n-1,k),
    where terms falling outside the triangle contribute nothing.
    """
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    rows = [(1,)]
    for n in range(1, nmax + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            v = 0
            if k >= 1:
                v += diag(n, k) * prev[k - 1]
            if k <= n - 1:
                v += same(n, k) * prev[k]
            row.append(v)
        rows.append(tuple(row))
    return Triangle(family, params, nmax, tuple(rows))


def transform(triangle: Triangle, seq) -> list:
    """Apply the triangle as a lower-triangular matrix to a sequence."""
    seq = list(seq)
    if len(seq) > triangle.nmax + 1:
        raise ValueError("sequence longer than the triangle")
    return [sum(triangle.value(n, k) * seq[k] for k in range(n + 1)) for n in range(len(seq))]
