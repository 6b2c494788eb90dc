"""Exception types shared across the package.

Everything user-facing derives from FinsemiError; the CLI maps these to
exit codes (bad input -> 2, resource bounds -> 3).
"""

from __future__ import annotations


class FinsemiError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInput(FinsemiError, ValueError):
    """Input text or structure does not match the documented format."""


class NotAssociative(FinsemiError, ValueError):
    """Table fails associativity; carries the least failing triple."""

    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        a, b, c = witness
        super().__init__(f"not associative: ({a}*{b})*{c} != {a}*({b}*{c})")


class NotClosed(FinsemiError, ValueError):
    """Subset is not closed under the product; carries a witness pair."""

    def __init__(self, witness: tuple[int, int]):
        self.witness = witness
        a, b = witness
        super().__init__(f"subset not closed: {a}*{b} falls outside it")


class NotExtendable(FinsemiError, ValueError):
    """Transversal automorphism moves a class onto one of a different size.

    The witness is the transversal position (T-id) where the sizes differ.
    """

    def __init__(self, witness: int):
        self.witness = witness
        super().__init__(f"not extendable: class size changes at transversal id {witness}")


class NotAnAutomorphism(FinsemiError, ValueError):
    """Permutation fails the automorphism condition; carries a witness pair."""

    def __init__(self, witness: tuple[int, int]):
        self.witness = witness
        x, y = witness
        super().__init__(f"not an automorphism: image of {x}*{y} is wrong")


class OrderTooLarge(FinsemiError):
    """A size cap was exceeded; carries what was requested and the cap."""

    def __init__(self, what: str, requested: int, limit: int):
        self.what = what
        self.requested = requested
        self.limit = limit
        super().__init__(f"{what} {requested} exceeds the configured limit {limit}")
