"""Exception types shared across the package.

The CLI maps these onto its exit-code contract, so raising the right one
matters: ParameterError -> 2, CosetOverlapError -> 3, PrimitivityError -> 4,
LimitError -> 5.
"""


class ParameterError(ValueError):
    """A parameter is outside its documented domain."""


class CosetOverlapError(ParameterError):
    """The cyclotomic cosets C_1, C_e, C_s are not pairwise disjoint."""


class PrimitivityError(ValueError):
    """A supplied defining polynomial is not irreducible or not primitive."""


class LimitError(RuntimeError):
    """A size guard (table limit, scan limit, enumeration bound) was hit."""
