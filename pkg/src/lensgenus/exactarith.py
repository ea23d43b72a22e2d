"""Exact integer matrices, Smith normal form, and abelian-group invariants.

Everything in this module works over arbitrary-precision Python integers;
there is no floating point anywhere.  Smith normal form is the single
workhorse: cokernels of presentation matrices give first homology, and
left kernels give the peripheral classes that bound.

The reduction is elementary row/column operations with the pivot chosen as
the minimal nonzero absolute value, ties broken by smallest row index then
smallest column index, so transforms are reproducible across platforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries stored row-major.

    ``rows == 0`` is allowed (an empty relation set); ``cols`` must be
    positive so generators are always well defined.
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 1:
            raise ValueError(f"bad shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"entry count {len(self.entries)} != {self.rows}x{self.cols}"
            )
        if not all(isinstance(e, int) for e in self.entries):
            raise ValueError("entries must be integers")

    @classmethod
    def from_rows(cls, rows: list[list[int]] | tuple) -> "IntMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 1
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(nrows, ncols, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zero_rows(cls, cols: int) -> "IntMatrix":
        """Empty relation set on ``cols`` generators."""
        return cls(0, cols, ())

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.at(k, j) for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    __matmul__ = mul

    def is_diagonal(self) -> bool:
        return all(
            self.at(i, j) == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )


@dataclass(frozen=True)
class SNFResult:
    """Smith normal form ``U @ A @ V == D`` with unimodular U, V.

    ``invariant_factors`` are the nonzero diagonal entries of D; each is
    positive and divides the next.
    """

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group Z^free_rank + Z/t1 + ... + Z/tk.

    Torsion coefficients satisfy ``t_i >= 2`` and ``t_i | t_{i+1}``.
    """

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for t in self.torsion:
            if t < 2:
                raise ValueError(f"torsion coefficient {t} < 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"torsion {a} does not divide {b}")

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank > 0:
            return None
        n = 1
        for t in self.torsion:
            n *= t
        return n

    def is_cyclic(self) -> bool:
        return self.free_rank + len(self.torsion) <= 1

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def _find_pivot(d: list[list[int]], t: int, m: int, n: int) -> tuple[int, int] | None:
    """Minimal |entry| != 0 in the trailing block, smallest (row, col) wins ties."""
    best = None
    best_abs = None
    for i in range(t, m):
        di = d[i]
        for j in range(t, n):
            e = di[j]
            if e:
                a = -e if e < 0 else e
                if best_abs is None or a < best_abs:
                    best, best_abs = (i, j), a
    return best


def smith_normal_form(a: IntMatrix) -> SNFResult:
    """Diagonalize ``a`` over Z by unimodular row and column operations.

    Returns D, U, V with ``U @ a @ V == D``, D diagonal with nonnegative
    entries whose nonzero part forms a divisibility chain.  Total on any
    nonempty matrix; the pivot rule makes the output deterministic.
    """
    m, n = a.rows, a.cols
    if m == 0:
        raise ValueError("smith_normal_form requires a nonempty matrix")
    d = a.to_lists()
    u = IntMatrix.identity(m).to_lists()
    v = IntMatrix.identity(n).to_lists()

    t = 0
    while t < min(m, n):
        piv = _find_pivot(d, t, m, n)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            d[t], d[pi] = d[pi], d[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for r in d:
                r[t], r[pj] = r[pj], r[t]
            for r in v:
                r[t], r[pj] = r[pj], r[t]
        if d[t][t] < 0:
            d[t] = [-e for e in d[t]]
            u[t] = [-e for e in u[t]]

        pivot = d[t][t]
        clean = True
        for i in range(t + 1, m):
            if d[i][t]:
                q = d[i][t] // pivot
                if q:
                    d[i] = [x - q * y for x, y in zip(d[i], d[t])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                if d[i][t]:
                    clean = False
        for j in range(t + 1, n):
            if d[t][j]:
                q = d[t][j] // pivot
                if q:
                    for r in d:
                        r[j] -= q * r[t]
                    for r in v:
                        r[j] -= q * r[t]
                if d[t][j]:
                    clean = False
        if not clean:
            continue

        # Pivot now owns its row and column.  Before moving on it must also
        # divide the rest of the block, or the divisibility chain can break.
        bad_row = None
        for i in range(t + 1, m):
            if any(d[i][j] % pivot for j in range(t + 1, n)):
                bad_row = i
                break
        if bad_row is None:
            t += 1
        else:
            d[t] = [x + y for x, y in zip(d[t], d[bad_row])]
            u[t] = [x + y for x, y in zip(u[t], u[bad_row])]

    dm = IntMatrix.from_rows(d)
    factors = tuple(dm.at(i, i) for i in range(min(m, n)) if dm.at(i, i) != 0)
    return SNFResult(
        D=dm,
        U=IntMatrix.from_rows(u),
        V=IntMatrix.from_rows(v),
        invariant_factors=factors,
    )


def cokernel_invariants(a: IntMatrix) -> AbelianGroup:
    """Abelian group presented by ``a`` (relations in rows, generators in columns)."""
    if a.rows == 0:
        return AbelianGroup(free_rank=a.cols, torsion=())
    snf = smith_normal_form(a)
    torsion = tuple(f for f in snf.invariant_factors if f > 1)
    return AbelianGroup(free_rank=a.cols - snf.rank, torsion=torsion)


def cokernel_coordinates(snf: SNFResult, vec: tuple[int, ...]) -> tuple[int, ...]:
    """Coordinates of ``vec`` in the cokernel's diagonal basis.

    Coordinate j lives in Z/d_j (reduced to [0, d_j)) when d_j > 0 and in Z
    when d_j = 0.  The zero tuple means ``vec`` lies in the row space.
    """
    n = snf.D.cols
    if len(vec) != n:
        raise ValueError("vector length does not match generator count")
    coords = []
    for j in range(n):
        c = sum(vec[k] * snf.V.at(k, j) for k in range(n))
        dj = snf.D.at(j, j) if j < snf.D.rows else 0
        coords.append(c % dj if dj else c)
    return tuple(coords)


def _lattice_generator(pairs: list[tuple[int, int]]) -> tuple[int, int] | None:
    """Generator of the rank-1 lattice spanned by ``pairs`` in Z^2.

    Returns None when every pair is zero; raises when the span has rank 2.
    """
    nonzero = [p for p in pairs if p != (0, 0)]
    if not nonzero:
        return None
    x0, y0 = nonzero[0]
    for x, y in nonzero[1:]:
        if x0 * y - y0 * x != 0:
            raise ValueError("lattice has rank 2")
    g = gcd(x0, y0)
    dx, dy = x0 // g, y0 // g
    mults = [x // dx if dx else y // dy for x, y in nonzero]
    c = 0
    for mlt in mults:
        c = gcd(c, mlt)
    return c * dx, c * dy


def peripheral_kernel(a: IntMatrix, mu_col: int, lambda_col: int) -> tuple[int, int]:
    """Generator of the kernel of Z^2 -> coker(a), (1,0) -> [mu], (0,1) -> [lambda].

    Works purely through Smith normal form, independent of any closed-form
    answer, so it can serve as an oracle.  The generator is normalized to
    have y >= 0, and x >= 0 when y = 0.

    Raises ValueError when the kernel is not infinite cyclic, which signals
    a malformed presentation.
    """
    if not (0 <= mu_col < a.cols and 0 <= lambda_col < a.cols):
        raise ValueError("mu/lambda column out of range")
    if mu_col == lambda_col:
        raise ValueError("mu and lambda columns must differ")

    # (x, y, c) with x*e_mu + y*e_lambda + c*A = 0 is exactly the left kernel
    # of A with e_mu, e_lambda stacked on top; project it to (x, y).
    e_mu = [0] * a.cols
    e_mu[mu_col] = 1
    e_lam = [0] * a.cols
    e_lam[lambda_col] = 1
    b = IntMatrix.from_rows([e_mu, e_lam] + a.to_lists())
    snf = smith_normal_form(b)
    pairs = [(snf.U.at(i, 0), snf.U.at(i, 1)) for i in range(snf.rank, b.rows)]
    try:
        generator = _lattice_generator(pairs)
    except ValueError:
        raise ValueError("peripheral kernel is not cyclic of rank 1 (rank 2)")
    if generator is None:
        raise ValueError("peripheral kernel is not cyclic of rank 1 (trivial)")
    x, y = generator
    if y < 0 or (y == 0 and x < 0):
        x, y = -x, -y
    return x, y
