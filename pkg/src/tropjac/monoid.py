"""Sharp fine-saturated monoids presented as dual pairs in a lattice.

A monoid M inside M^gp = Z^k is given by an inequality matrix A (rows
are supporting functionals, M = {m : A.m >= 0 entrywise}) together with
generators of the extreme rays of its cone.  Both sides are supplied by
the caller; construction verifies their mutual consistency but does not
recompute one from the other.  Sharpness (the only unit is 0) is
equivalent to A having full column rank and is enforced.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abgroup import IntMatrix, matrix_rank
from .errors import PreconditionError, ValidationError


def _as_vector(x, rank: int, what: str = "vector"):
    v = tuple(int(c) for c in x)
    if len(v) != rank:
        raise ValidationError(
            f"{what} has length {len(v)}, expected ambient rank {rank}")
    return v


@dataclass(frozen=True)
class SharpFsMonoid:
    """A sharp fs monoid as lattice points of a strongly convex cone.

    >>> n2 = SharpFsMonoid.free(2)
    >>> n2.contains((1, 2)), n2.contains((-1, 0))
    (True, False)
    """

    rank: int
    inequalities: IntMatrix
    rays: tuple

    def __post_init__(self):
        if self.rank < 0:
            raise ValidationError("ambient rank must be nonnegative")
        a = self.inequalities
        if a.cols != self.rank:
            raise ValidationError(
                f"inequality matrix has {a.cols} columns, expected {self.rank}")
        if matrix_rank(a) < self.rank:
            raise ValidationError("monoid not sharp: rank(A) < k")
        object.__setattr__(self, "rays",
                           tuple(_as_vector(r, self.rank, "ray") for r in self.rays))
        for ray in self.rays:
            if not any(ray):
                raise ValidationError("zero vector listed as an extreme ray")
            img = a.matvec(ray)
            if any(x < 0 for x in img):
                raise ValidationError(
                    f"ray {list(ray)} violates an inequality of its own monoid")
            # Sanity cross-check of the dual pair: a ray on which every
            # functional vanishes would be a unit direction.
            if not any(x > 0 for x in img):
                raise ValidationError(
                    f"ray {list(ray)} is annihilated by all inequalities")

    @classmethod
    def free(cls, k: int) -> "SharpFsMonoid":
        """The free monoid N^k: identity inequalities, standard-basis rays."""
        ident = IntMatrix.identity(k)
        rays = tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))
        return cls(k, ident, rays)

    def contains(self, x) -> bool:
        """Whether the lattice vector x lies in the monoid."""
        v = _as_vector(x, self.rank)
        return all(c >= 0 for c in self.inequalities.matvec(v))

    def leq(self, a, b) -> bool:
        """The monoidal partial order: a <= b iff b - a is in the monoid."""
        va = _as_vector(a, self.rank)
        vb = _as_vector(b, self.rank)
        return self.contains(tuple(y - x for x, y in zip(va, vb)))

    def is_bounded_by(self, x, ell) -> bool:
        """Whether some N >= 0 satisfies -N*ell <= x <= N*ell.

        Decided by the face criterion: every inequality row vanishing on
        ell must vanish on x.  Rows positive on ell are dominated by a
        large enough N, so the two formulations agree on fs cones.
        """
        vx = _as_vector(x, self.rank)
        vell = _as_vector(ell, self.rank)
        if not self.contains(vell):
            raise PreconditionError(
                f"bound {list(vell)} does not lie in the monoid")
        for i in range(self.inequalities.rows):
            row = self.inequalities.row(i)
            if _dot(row, vell) == 0 and _dot(row, vx) != 0:
                return False
        return True

    def bound_witness(self, x, ell) -> int:
        """The least worst-case N certifying :meth:`is_bounded_by`.

        Only meaningful when the predicate holds; derived from the rows
        positive on ell.
        """
        vx = _as_vector(x, self.rank)
        vell = _as_vector(ell, self.rank)
        best = 0
        for i in range(self.inequalities.rows):
            row = self.inequalities.row(i)
            p = _dot(row, vell)
            if p > 0:
                best = max(best, -(-abs(_dot(row, vx)) // p))  # ceil
        return best

    def is_standard_line(self) -> bool:
        """Whether this monoid is N inside Z (up to presentation)."""
        return self.rank == 1 and self.contains((1,)) and not self.contains((-1,))

    def to_json(self) -> dict:
        return {"rank": self.rank,
                "inequalities": self.inequalities.to_rows(),
                "rays": [list(r) for r in self.rays]}

    @classmethod
    def from_json(cls, obj) -> "SharpFsMonoid":
        if not isinstance(obj, dict):
            raise ValidationError("monoid schema must be a JSON object")
        if "free" in obj:
            k = int(obj["free"])
            if k < 0:
                raise ValidationError("free rank must be nonnegative")
            return cls.free(k)
        try:
            rank = int(obj["rank"])
            ineq = IntMatrix(obj["inequalities"])
            rays = tuple(tuple(int(c) for c in r) for r in obj["rays"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"bad monoid schema: {exc}") from exc
        return cls(rank, ineq, rays)


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class MonoidHom:
    """A monoid map presented by a linear map of the ambient lattices.

    Validity means each extreme ray of the source lands in the target
    cone; by saturation this is equivalent to the monoid mapping into
    the target monoid.
    """

    source: SharpFsMonoid
    target: SharpFsMonoid
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.cols != self.source.rank or \
                self.matrix.rows != self.target.rank:
            raise ValidationError(
                f"hom matrix is {self.matrix.rows}x{self.matrix.cols}, expected "
                f"{self.target.rank}x{self.source.rank}")

    def is_valid(self) -> bool:
        return all(self.target.contains(self.matrix.matvec(ray))
                   for ray in self.source.rays)

    def require_valid(self):
        if not self.is_valid():
            raise PreconditionError(
                "monoid hom does not map the source cone into the target cone")

    def apply(self, vec) -> tuple:
        return self.matrix.matvec(_as_vector(vec, self.source.rank))

    def compose(self, first: "MonoidHom") -> "MonoidHom":
        """The composite self o first."""
        if first.target is not self.source and first.target != self.source:
            raise ValidationError("composition mismatch: target != source")
        return MonoidHom(first.source, self.target, self.matrix @ first.matrix)

    @classmethod
    def identity(cls, m: SharpFsMonoid) -> "MonoidHom":
        return cls(m, m, IntMatrix.identity(m.rank))

    def to_json(self) -> dict:
        return {"source": self.source.to_json(),
                "target": self.target.to_json(),
                "matrix": self.matrix.to_rows()}

    @classmethod
    def from_json(cls, obj) -> "MonoidHom":
        if not isinstance(obj, dict):
            raise ValidationError("hom schema must be a JSON object")
        try:
            source = SharpFsMonoid.from_json(obj["source"])
            target = SharpFsMonoid.from_json(obj["target"])
            matrix = IntMatrix(obj["matrix"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"bad hom schema: {exc}") from exc
        return cls(source, target, matrix)


def validate_hom(h: MonoidHom) -> bool:
    """Whether every source ray maps into the target cone."""
    return h.is_valid()
