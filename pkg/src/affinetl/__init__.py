"""Exact diagram calculus for affine Temperley-Lieb algebras and their q-Jones quotients."""

__version__ = "0.1.0"

from .algebra import AlgebraElement, Flavor, check_central, check_presentation  # noqa: E402
from .annular import enumerate_annular, standard_base  # noqa: E402
from .diagram import Diagram, compose, normalize, realize  # noqa: E402
from .expr import evaluate, parse, to_text  # noqa: E402
from .kernel import BACKEND  # noqa: E402
from .scalars import LaurentPoly, Ring  # noqa: E402

__all__ = [
    "__version__", "AlgebraElement", "Flavor", "check_central", "check_presentation",
    "enumerate_annular", "standard_base", "Diagram", "compose", "normalize", "realize",
    "evaluate", "parse", "to_text", "BACKEND", "LaurentPoly", "Ring",
]
