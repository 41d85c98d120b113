"""Complete Hall sigma-sets, sigma-bases and supersolubility checks for small finite groups."""
from .core import (
    DEFAULT_LIMITS,
    Group,
    Limits,
    Permutation,
    Subgroup,
    compose,
    generate,
)

__version__ = "0.1.0"

__all__ = ["DEFAULT_LIMITS", "Group", "Limits", "Permutation", "Subgroup", "compose",
           "generate", "__version__"]
