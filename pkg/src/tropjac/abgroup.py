"""Exact integer matrices and finitely generated abelian groups.

Everything here is computed over Python's arbitrary-precision integers;
no floating point is used anywhere in the package.  The two central
objects are

* :class:`IntMatrix`, a small immutable dense integer matrix, and
* :class:`FgAbelianGroup`, a finitely generated abelian group kept in
  invariant-factor normal form ``Z^r x Z/d1 x ... x Z/dk`` with
  ``2 <= d1 | d2 | ... | dk``.

The workhorse is :func:`smith_normal_form`, from which cokernels,
integer kernels and integer linear solving are derived.

>>> D, = [smith_normal_form(IntMatrix([[2, 0], [0, 3]]))[1]]
>>> D.diagonal()
(1, 6)
>>> str(cokernel(IntMatrix([[5]])))
'Z/5'
"""

from __future__ import annotations

from dataclasses import dataclass


class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers.

    >>> m = IntMatrix([[1, 2], [3, 4]])
    >>> m.rows, m.cols, m.entry(1, 0)
    (2, 2, 3)
    >>> m.matvec((1, 0))
    (1, 3)
    """

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries):
        rows = [tuple(int(x) for x in row) for row in entries]
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != self.cols:
                raise ValueError("ragged rows in matrix input")
        self._e = tuple(rows)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns, nrows: int) -> "IntMatrix":
        """Assemble a matrix with the given columns (each of length ``nrows``)."""
        cols = [tuple(int(x) for x in c) for c in columns]
        for c in cols:
            if len(c) != nrows:
                raise ValueError("column length does not match row count")
        return cls([[c[i] for c in cols] for i in range(nrows)])

    def entry(self, i: int, j: int) -> int:
        return self._e[i][j]

    def row(self, i: int) -> tuple:
        return self._e[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._e)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def to_rows(self) -> list:
        return [list(r) for r in self._e]

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self._e[i][j] for i in range(self.rows)]
                          for j in range(self.cols)])

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        ot = other.transpose()
        return IntMatrix([[sum(a * b for a, b in zip(row, col)) for col in ot._e]
                          for row in self._e])

    def __matmul__(self, other):
        return self.mul(other)

    def matvec(self, v) -> tuple:
        v = tuple(v)
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self._e)

    def diagonal(self) -> tuple:
        return tuple(self._e[i][i] for i in range(min(self.rows, self.cols)))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self._e == other._e \
            and self.cols == other.cols

    def __hash__(self):
        return hash((self._e, self.cols))

    def __repr__(self):
        return f"IntMatrix({self.to_rows()!r})"


def _min_nonzero(a, t, rows, cols):
    """Position of a smallest-|value| nonzero entry of a[t:][t:], or None."""
    best = None
    best_val = None
    for i in range(t, rows):
        ai = a[i]
        for j in range(t, cols):
            x = ai[j]
            if x:
                if best_val is None or abs(x) < best_val:
                    best, best_val = (i, j), abs(x)
                    if best_val == 1:
                        return best
    return best


def smith_normal_form(m: IntMatrix):
    """Smith normal form with transforms: returns ``(U, D, V)``.

    ``U`` and ``V`` are unimodular, ``U @ m @ V == D``, ``D`` is diagonal
    with nonnegative entries satisfying ``d1 | d2 | ...`` (zeros last).
    Pivoting picks a smallest-|value| nonzero entry and swaps it into
    place, which keeps intermediate growth modest at the scales handled
    here.

    >>> U, D, V = smith_normal_form(IntMatrix([[2, 0], [0, 3]]))
    >>> D.diagonal()
    (1, 6)
    >>> U @ IntMatrix([[2, 0], [0, 3]]) @ V == D
    True
    """
    rows, cols = m.rows, m.cols
    a = m.to_rows()
    u = IntMatrix.identity(rows).to_rows()
    v = IntMatrix.identity(cols).to_rows()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def row_op(i, j, q):
        # row_i += q * row_j
        a[i] = [x + q * y for x, y in zip(a[i], a[j])]
        u[i] = [x + q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):
        # col_i += q * col_j
        for r in a:
            r[i] += q * r[j]
        for r in v:
            r[i] += q * r[j]

    t = 0
    while t < min(rows, cols):
        if _min_nonzero(a, t, rows, cols) is None:
            break
        while True:
            # Clear row t and column t against the current best pivot.
            while True:
                i0, j0 = _min_nonzero(a, t, rows, cols)
                if i0 != t:
                    swap_rows(t, i0)
                if j0 != t:
                    swap_cols(t, j0)
                p = a[t][t]
                clean = True
                for i in range(t + 1, rows):
                    if a[i][t]:
                        row_op(i, t, -(a[i][t] // p))
                        if a[i][t]:
                            clean = False
                for j in range(t + 1, cols):
                    if a[t][j]:
                        col_op(j, t, -(a[t][j] // p))
                        if a[t][j]:
                            clean = False
                if clean:
                    break
            # Divisibility fix-up: the pivot must divide the rest of the block.
            p = a[t][t]
            bad = None
            for i in range(t + 1, rows):
                ai = a[i]
                for j in range(t + 1, cols):
                    if ai[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_op(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    return IntMatrix(u), IntMatrix(a), IntMatrix(v)


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    >>> determinant(IntMatrix([[2, 3], [1, 4]]))
    5
    """
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_unimodular(m: IntMatrix) -> bool:
    return m.is_square() and determinant(m) in (1, -1)


def matrix_rank(m: IntMatrix) -> int:
    """Rank over Q (equivalently over Z), via the Smith normal form."""
    _, d, _ = smith_normal_form(m)
    return sum(1 for x in d.diagonal() if x)


def integer_kernel(m: IntMatrix) -> IntMatrix:
    """A lattice basis of ``{x in Z^cols : m @ x = 0}``, as matrix columns.

    The basis is saturated: columns of the unimodular right transform of
    the Smith form, so the quotient of the kernel lattice by their span
    is torsion-free.

    >>> integer_kernel(IntMatrix([[2, 4]])).columns()
    [(-2, 1)]
    """
    _, d, v = smith_normal_form(m)
    r = sum(1 for x in d.diagonal() if x)
    return IntMatrix.from_columns([v.column(j) for j in range(r, m.cols)], m.cols)


def solve_integer(m: IntMatrix, b):
    """One integer solution ``x`` of ``m @ x = b``, or ``None`` if unsolvable.

    >>> solve_integer(IntMatrix([[2, 0], [0, 3]]), (4, -3))
    (2, -1)
    >>> solve_integer(IntMatrix([[2]]), (1,)) is None
    True
    """
    b = tuple(int(x) for x in b)
    if len(b) != m.rows:
        raise ValueError("right-hand side length does not match row count")
    u, d, v = smith_normal_form(m)
    ub = u.matvec(b)
    diag = d.diagonal()
    r = sum(1 for x in diag if x)
    y = [0] * m.cols
    for i in range(m.rows):
        if i < r:
            q, rem = divmod(ub[i], diag[i])
            if rem:
                return None
            y[i] = q
        elif ub[i]:
            return None
    return v.matvec(y)


@dataclass(frozen=True)
class FgAbelianGroup:
    """A finitely generated abelian group in invariant-factor normal form.

    ``free_rank`` copies of Z plus ``Z/d`` for each invariant factor, the
    factors forming a divisibility chain with every factor at least 2.
    The normal form is canonical, so equality of groups is structural
    equality of these two fields.

    >>> FgAbelianGroup.from_factors([4, 6])
    FgAbelianGroup(free_rank=0, invariant_factors=(2, 12))
    >>> str(FgAbelianGroup.from_factors([4, 6], free_rank=1))
    'Z x Z/2 x Z/12'
    >>> str(FgAbelianGroup.trivial())
    '0'
    """

    free_rank: int
    invariant_factors: tuple

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        prev = None
        for d in self.invariant_factors:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
            if prev is not None and d % prev:
                raise ValueError("invariant factors must form a divisibility chain")
            prev = d

    @classmethod
    def trivial(cls) -> "FgAbelianGroup":
        return cls(0, ())

    @classmethod
    def cyclic(cls, n: int) -> "FgAbelianGroup":
        """Z for ``n == 0``, Z/n otherwise."""
        return cls.from_factors([n])

    @classmethod
    def from_factors(cls, factors, free_rank: int = 0) -> "FgAbelianGroup":
        """Normalize an arbitrary list of cyclic orders.

        Zero entries count as copies of Z, entries of absolute value 1
        vanish, everything else is renormalized into a divisibility
        chain (via the Smith form of the diagonal matrix).

        >>> FgAbelianGroup.from_factors([2, 3]) == FgAbelianGroup.from_factors([6])
        True
        """
        torsion = []
        rank = free_rank
        for d in factors:
            d = abs(int(d))
            if d == 0:
                rank += 1
            elif d > 1:
                torsion.append(d)
        if not torsion:
            return cls(rank, ())
        n = len(torsion)
        diag = IntMatrix([[torsion[i] if i == j else 0 for j in range(n)]
                          for i in range(n)])
        _, d, _ = smith_normal_form(diag)
        invs = tuple(x for x in d.diagonal() if x > 1)
        return cls(rank, invs)

    def direct_sum(self, *others) -> "FgAbelianGroup":
        factors = list(self.invariant_factors)
        rank = self.free_rank
        for g in others:
            factors.extend(g.invariant_factors)
            rank += g.free_rank
        return FgAbelianGroup.from_factors(factors, free_rank=rank)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self):
        """Group order, or ``None`` when infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def exponent(self) -> int:
        """The largest invariant factor (1 for torsion-free groups)."""
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " x ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"freeRank": self.free_rank,
                "invariantFactors": list(self.invariant_factors)}

    @classmethod
    def from_json(cls, obj: dict) -> "FgAbelianGroup":
        return cls.from_factors(obj.get("invariantFactors", []),
                                free_rank=int(obj.get("freeRank", 0)))


def cokernel(m: IntMatrix) -> FgAbelianGroup:
    """The quotient ``Z^rows / column-span(m)`` in normal form.

    >>> str(cokernel(IntMatrix([[1], [1]])))
    'Z'
    >>> str(cokernel(IntMatrix.zero(2, 2)))
    'Z^2'
    """
    _, d, _ = smith_normal_form(m)
    diag = d.diagonal()
    nonzero = [x for x in diag if x]
    free = m.rows - len(nonzero)
    return FgAbelianGroup.from_factors(nonzero, free_rank=free)


def torsion_part(g: FgAbelianGroup, n: int) -> FgAbelianGroup:
    """The n-torsion subgroup: ``Z/gcd(n, d)`` per factor, free part dropped.

    >>> from math import gcd
    >>> str(torsion_part(FgAbelianGroup.from_factors([6]), 4))
    'Z/2'
    >>> torsion_part(FgAbelianGroup.from_factors([5], free_rank=1), 5)
    FgAbelianGroup(free_rank=0, invariant_factors=(5,))
    """
    if n < 1:
        raise ValueError("torsion order must be >= 1")
    from math import gcd
    return FgAbelianGroup.from_factors(
        [gcd(n, d) for d in g.invariant_factors])


def hom_group(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    """The group ``Hom(a, b)`` of homomorphisms under pointwise addition.

    Assembled factorwise from ``Hom(Z/m, Z/n) = Z/gcd(m, n)``,
    ``Hom(Z, B) = B`` and ``Hom(Z/m, Z) = 0``; correct for all finitely
    generated inputs (no finiteness restriction is enforced).

    >>> str(hom_group(FgAbelianGroup.from_factors([4]), FgAbelianGroup.from_factors([6])))
    'Z/2'
    """
    from math import gcd
    torsion = []
    rank = a.free_rank * b.free_rank
    for m in a.invariant_factors:
        for n in b.invariant_factors:
            torsion.append(gcd(m, n))
        # Hom(Z/m, Z^s) = 0
    torsion.extend(list(b.invariant_factors) * a.free_rank)
    return FgAbelianGroup.from_factors(torsion, free_rank=rank)
