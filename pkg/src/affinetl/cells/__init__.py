from .classify import NotCoveredError, classify_simples
from .datum import CellularityReport, base_winding, cell_datum, verify_cellularity
from .gram import CellularityViolation, GramMatrix, gram_matrix
from .jones import JonesContext, NotInONError, jones_basis, jones_reduce, strata, window
from .modules import CellModule, cell_module_matrices, check_module_relations, trivial_matrices

__all__ = [
    "NotCoveredError", "classify_simples", "CellularityReport", "base_winding",
    "cell_datum", "verify_cellularity", "CellularityViolation", "GramMatrix",
    "gram_matrix", "JonesContext", "NotInONError", "jones_basis", "jones_reduce",
    "strata", "window", "CellModule", "cell_module_matrices", "check_module_relations",
    "trivial_matrices",
]
