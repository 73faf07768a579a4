"""Hodge ideals, order filtration and generating level for strongly Koszul
free divisors.

The heavy lifting happens in the `_skhodge` extension; this package re-exports
its surface.
"""

try:
    from ._skhodge import (  # noqa: F401  (installed layout)
        BudgetExceeded,
        DivFileError,
        Divisor,
        InvariantError,
    )
except ImportError:  # build-tree layout: extension next to the build dir
    from _skhodge import (  # noqa: F401
        BudgetExceeded,
        DivFileError,
        Divisor,
        InvariantError,
    )

__all__ = ["Divisor", "InvariantError", "BudgetExceeded", "DivFileError"]
