"""Fusing triples from Coxeter orbits, fundamental q-characters, and the bridge between them."""
from .correspondence import TheoremReport, fusing_to_monomial, monomial_identity, strip_solve, verify_theorem
from .dorey import FusingSolution, canonicalize, enumerate_fusings, prv_admissible
from .qchar import FMFailure, Monomial, QCharacter, fm_qcharacter, product_contains_one
from .root_system import RootSystem, UnsupportedAlgebra, build_root_system, coxeter_apply, fundamental_weight

__version__ = "0.1.0"
