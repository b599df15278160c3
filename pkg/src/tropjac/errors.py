"""Exception hierarchy shared across the package.

Three tiers, matching the CLI exit codes:

* ``ValidationError`` (exit 1): malformed input or a broken structural
  invariant (non-sharp monoid, disconnected graph, schema violations).
* ``PreconditionError`` (exit 2): well-formed input that violates a
  mathematical precondition of the requested operation.
* ``InternalError`` (exit 3): a guarantee the library itself relies on
  failed; always a bug or an inconsistent internal state.
"""


class TropjacError(Exception):
    """Base class for all package errors."""


class ValidationError(TropjacError):
    """Input fails a structural invariant or does not parse."""


class PreconditionError(TropjacError):
    """Input is structurally fine but violates an operation precondition."""


class NotPLError(PreconditionError):
    """Vertex values are not piecewise linear along some edge."""

    def __init__(self, edge_id, difference, length):
        self.edge_id = edge_id
        self.difference = difference
        self.length = length
        super().__init__(
            f"values across edge {edge_id!r} differ by {list(difference)}, "
            f"not an integer multiple of the length {list(length)}"
        )


class NotACycleError(PreconditionError):
    """Edge coefficients have a nonzero boundary at some vertex."""

    def __init__(self, vertex, boundary):
        self.vertex = vertex
        self.boundary = boundary
        super().__init__(
            f"not a cycle: boundary at vertex {vertex!r} is {boundary}, expected 0"
        )


class NotBoundedMonodromyError(PreconditionError):
    """A cocycle escapes the bounded-monodromy sublattice.

    Carries a witness: a cycle whose length is annihilated by an
    inequality row of the monoid while the cocycle value is not.
    """

    def __init__(self, cycle_coeffs, row_index, row, value):
        self.cycle_coeffs = dict(cycle_coeffs)
        self.row_index = row_index
        self.row = tuple(row)
        self.value = value
        super().__init__(
            f"not bounded monodromy: inequality row {row_index} = {list(row)} "
            f"vanishes on the length of the witness cycle {self.cycle_coeffs} "
            f"but pairs to {value} != 0 with the cocycle value"
        )


class InternalError(TropjacError):
    """An internal consistency guarantee failed."""
