"""Deciding d-representation-finiteness of self-injective Nakayama algebras.

Three independent routes are provided and cross-checked:

* :mod:`.cluster` searches mod Lambda(n, l) for d-cluster-tilting modules,
  using Ext dimensions from :mod:`.nakayama` (themselves verified against the
  generic bound-quiver engine in :mod:`.bqa`);
* :mod:`.polygon` looks for rotation-invariant (d+1)-angulations;
* :mod:`.classifier` evaluates the closed-form divisibility criterion.

:mod:`.constructions` computes the arithmetic attached to trivial extensions,
fractionally Calabi-Yau algebras and higher preprojective algebras.
"""
from .classifier import ClassRecord, is_dRF_formula, rf_table
from .cluster import all_dCT, is_dRF_bruteforce
from .nakayama import NakAlgebra, NakModule
from .polygon import PolygonCtx, enumerate_angulations, invariant_angulation_exists

__version__ = "0.1.0"

__all__ = [
    "ClassRecord",
    "NakAlgebra",
    "NakModule",
    "PolygonCtx",
    "all_dCT",
    "enumerate_angulations",
    "invariant_angulation_exists",
    "is_dRF_bruteforce",
    "is_dRF_formula",
    "rf_table",
]
