"""Exception taxonomy shared by all modules.

The CLI maps these onto its exit-code contract: DomainError/ParseError -> 1,
usage errors -> 2 (argparse), SizeError/BudgetError -> 3.
"""


class HdecompError(Exception):
    pass


class DomainError(HdecompError):
    """Input outside the mathematical domain of an operation."""


class ParseError(HdecompError):
    """Malformed serialized input (graph6, decomposition files)."""


class SizeError(HdecompError):
    """Instance exceeds a configured exact-search cap."""


class BudgetError(HdecompError):
    """Search-node budget exhausted."""
