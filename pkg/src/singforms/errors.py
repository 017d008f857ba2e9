"""Exception types shared across the package."""


class SingFormsError(Exception):
    """Base class for all library errors."""


class ParseError(SingFormsError):
    """Polynomial syntax error, with a 0-based character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(ParseError):
    def __init__(self, name: str, position: int):
        super().__init__(f"unknown variable name {name!r}", position)
        self.name = name


class BudgetExceededError(SingFormsError):
    """A Groebner/syzygy loop ran past its reduction-step budget."""


class HomogeneityError(SingFormsError):
    """Raised by graded operations on non-homogeneous input."""


class NonReducedError(SingFormsError):
    """Hypersurface equation has a repeated factor."""


class QuasiReflectionError(SingFormsError):
    """A cyclic quotient type is not small.

    Carries the group element k and the single coordinate index i
    (0-based) on which k acts nontrivially.
    """

    def __init__(self, k: int, index: int):
        super().__init__(
            f"not a small group: k={k} acts as a quasi-reflection "
            f"(only weight a_{index + 1} is moved)"
        )
        self.k = k
        self.index = index
