"""Smith normal form and exact linear solving over Z and Z/m.

This is the decision kernel: every splitting, homotopy, contraction and
lifting question downstream is flattened into one call to ``solve`` (or
``kernel_matrix``), which reduces to one Smith normal form.

Determinism contract: the pivot is always the entry of smallest nonzero
absolute value in the remaining block, ties broken in row-major order,
so witnesses are reproducible byte for byte.  For Z/m the algorithm runs
on the canonical integer lift and reduces at the end; diagonal entries
are then normalized to divisors of m by unit row scalings.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .matrix import Matrix
from .rings import RingSpec


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


@dataclass(frozen=True)
class SNFResult:
    """Invertible U, V and diagonal D with U @ M @ V == D."""

    U: Matrix
    D: Matrix
    V: Matrix

    @property
    def diagonal(self) -> list[int]:
        n = min(self.D.rows, self.D.cols)
        return [self.D[i, i] for i in range(n)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    def invariant_factors(self) -> list[int]:
        return [d for d in self.diagonal if d != 0]


def _pivot(A: list[list[int]], t: int, rows: int, cols: int) -> tuple[int, int] | None:
    # a unit entry always wins, and the first one in row-major order is the
    # deterministic choice, so scan for +-1 at C speed before anything else
    for i in range(t, rows):
        row = A[i]
        j = None
        try:
            j = row.index(1, t)
        except ValueError:
            pass
        try:
            j2 = row.index(-1, t)
            if j is None or j2 < j:
                j = j2
        except ValueError:
            pass
        if j is not None:
            return (i, j)
    best = None
    best_abs = None
    for i in range(t, rows):
        row = A[i]
        for j in range(t, cols):
            a = row[j]
            if a != 0:
                aa = -a if a < 0 else a
                if best_abs is None or aa < best_abs:
                    best, best_abs = (i, j), aa
    return best


def _row_combine(A: list[list[int]], U: list[list[int]], i1: int, i2: int,
                 x: int, y: int, z: int, w: int) -> None:
    # rows (i1, i2) <- (x*r1 + y*r2, z*r1 + w*r2); same op applied to U
    for M in (A, U):
        r1, r2 = M[i1], M[i2]
        if x == 1 and y == 0 and w == 1:
            # the common shear r2 += z*r1
            M[i2] = [b + z * a for a, b in zip(r1, r2)]
        elif x == 0 and y == 1 and z == 1 and w == 0:
            M[i1], M[i2] = r2, r1
        else:
            M[i1] = [x * a + y * b for a, b in zip(r1, r2)]
            M[i2] = [z * a + w * b for a, b in zip(r1, r2)]


def _col_combine(A: list[list[int]], V: list[list[int]], j1: int, j2: int,
                 x: int, y: int, z: int, w: int) -> None:
    # cols (j1, j2) <- (x*c1 + y*c2, z*c1 + w*c2); same op applied to V
    for M in (A, V):
        if x == 1 and y == 0 and w == 1:
            for row in M:
                row[j2] += z * row[j1]
        elif x == 0 and y == 1 and z == 1 and w == 0:
            for row in M:
                row[j1], row[j2] = row[j2], row[j1]
        else:
            for row in M:
                a, b = row[j1], row[j2]
                row[j1] = x * a + y * b
                row[j2] = z * a + w * b


def _snf_lists(M: list[list[int]], rows: int, cols: int
               ) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    A = [row[:] for row in M]
    U = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    V = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        piv = _pivot(A, t, rows, cols)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            _row_combine(A, U, t, pi, 0, 1, 1, 0)
        if pj != t:
            _col_combine(A, V, t, pj, 0, 1, 1, 0)

        while True:
            # clear the pivot column with row operations
            for i in range(t + 1, rows):
                b = A[i][t]
                if b == 0:
                    continue
                a = A[t][t]
                if b % a == 0:
                    q = b // a
                    _row_combine(A, U, t, i, 1, 0, -q, 1)
                else:
                    g, x, y = _xgcd(a, b)
                    _row_combine(A, U, t, i, x, y, -(b // g), a // g)
            # clear the pivot row with column operations
            row_clear = True
            for j in range(t + 1, cols):
                b = A[t][j]
                if b == 0:
                    continue
                row_clear = False
                a = A[t][t]
                if b % a == 0:
                    q = b // a
                    _col_combine(A, V, t, j, 1, 0, -q, 1)
                else:
                    g, x, y = _xgcd(a, b)
                    _col_combine(A, V, t, j, x, y, -(b // g), a // g)
            if row_clear and all(A[i][t] == 0 for i in range(t + 1, rows)):
                break
        t += 1

    r = t
    # normalize signs
    for i in range(r):
        if A[i][i] < 0:
            for M in (A, U):
                M[i] = [-x for x in M[i]]
    # enforce the divisibility chain d_i | d_j for i < j
    for i in range(r):
        for j in range(i + 1, r):
            a, b = A[i][i], A[j][j]
            if b % a == 0:
                continue
            # diag(a, b) -> diag(gcd, lcm) with three elementary operations
            _col_combine(A, V, i, j, 1, 1, 0, 1)          # col_i += col_j
            g, x, y = _xgcd(a, b)
            _row_combine(A, U, i, j, x, y, -(b // g), a // g)
            q = (y * b) // g
            _col_combine(A, V, j, i, 1, -q, 0, 1)         # col_j -= q*col_i
    return A, U, V


def snf(M: Matrix) -> SNFResult:
    """Smith normal form with transforms: U @ M @ V == D exactly."""
    ring = M.ring
    A, U, V = _snf_lists([list(r) for r in M.data], M.rows, M.cols)
    if ring.is_modular:
        m = ring.modulus
        # normalize each diagonal entry to its canonical divisor gcd(d, m)
        for i in range(min(M.rows, M.cols)):
            d = A[i][i] % m
            if d == 0:
                A[i][i] = 0
                continue
            u, g = ring.unit_multiplier_to_divisor(d)
            if g != d:
                uinv = ring.inverse(u)
                U[i] = [uinv * x for x in U[i]]
                A[i] = [uinv * x for x in A[i]]
            A[i][i] = g
    Um = Matrix(ring, M.rows, M.rows, U)
    Dm = Matrix(ring, M.rows, M.cols, A)
    Vm = Matrix(ring, M.cols, M.cols, V)
    return SNFResult(Um, Dm, Vm)


def _solve_diag(ring: RingSpec, d: int, c: int) -> int | None:
    """Smallest solution y of d*y = c in the ring, or None."""
    if not ring.is_modular:
        if d == 0:
            return 0 if c == 0 else None
        if c % d:
            return None
        return c // d
    m = ring.modulus
    d, c = d % m, c % m
    g = gcd(d, m)  # gcd(0, m) == m
    if c % g:
        return None
    if d == 0:
        return 0
    mm = m // g
    return (c // g) * pow(d // g, -1, mm) % mm if mm > 1 else 0


def solve(A: Matrix, B: Matrix, *, decomposition: SNFResult | None = None
          ) -> Matrix | None:
    """One solution X of A @ X = B, or None when none exists.

    B may have several columns; each is solved against a single Smith
    decomposition of A.
    """
    if A.ring != B.ring:
        raise ValueError("ring mismatch")
    if A.rows != B.rows:
        raise ValueError(f"incompatible shapes {A.rows}x{A.cols} and "
                         f"{B.rows}x{B.cols}")
    ring = A.ring
    dec = decomposition if decomposition is not None else snf(A)
    C = dec.U @ B
    r = min(A.rows, A.cols)
    X_cols: list[list[int]] = []
    for j in range(B.cols):
        y = [0] * A.cols
        ok = True
        for i in range(A.rows):
            c = C[i, j]
            if i < r:
                sol = _solve_diag(ring, dec.D[i, i], c)
                if sol is None:
                    ok = False
                    break
                y[i] = sol
            elif not ring.is_zero(c):
                ok = False
                break
        if not ok:
            return None
        X_cols.append(y)
    Y = Matrix(ring, A.cols, B.cols,
               [[X_cols[j][i] for j in range(B.cols)] for i in range(A.cols)])
    return dec.V @ Y


def kernel_matrix(A: Matrix, *, decomposition: SNFResult | None = None) -> Matrix:
    """Matrix whose columns generate {x : A @ x = 0}."""
    ring = A.ring
    dec = decomposition if decomposition is not None else snf(A)
    r = min(A.rows, A.cols)
    gens: list[Matrix] = []
    for i in range(A.cols):
        d = dec.D[i, i] if i < r else 0
        if not ring.is_modular:
            if d == 0:
                gens.append(dec.V.column_at(i))
        else:
            m = ring.modulus
            g = gcd(d, m)
            scale = m // g
            if scale % m != 0:
                gens.append(dec.V.column_at(i).scale(scale))
    out = Matrix(ring, A.cols, 0)
    for gcol in gens:
        out = out.hstack(gcol)
    return out


def det(M: Matrix) -> int:
    """Exact determinant (Bareiss on the integer lift, reduced at the end)."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return M.ring.canon(1)
    A = [list(r) for r in M.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return M.ring.canon(sign * A[n - 1][n - 1])


def is_invertible(M: Matrix) -> bool:
    return M.rows == M.cols and M.ring.is_unit(det(M))
