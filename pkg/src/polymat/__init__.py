"""Monomial ideals, polymatroidal ideals and their Cohen-Macaulay properties."""

from .errors import (BudgetExceeded, HypothesisError, ImproperIdealError, NotPolymatroidalError,
                     PolymatError, PresentationError, VariableMismatchError)
from .ideal import (MonomialIdeal, VariableSet, ideal_sum, intersection, membership, minimalize,
                    power, product, radical, support)
from .parse import ImplicitVariablesWarning, ParseError, parse_ideal
from .decompose import (Decomposition, IrreducibleComponent, MonomialPrime, PrimePower,
                        associated_primes, height, hv_presentation, irreducible_decomposition,
                        is_equidimensional, is_unmixed, minimal_primes, pairwise_sums_maximal,
                        primary_decomposition, prime_power_presentation)
from .localize import localization_via_components, localize_kill, monomial_localization
from .verdict import Verdict
from .polymatroid import (CMShape, is_matroidal, is_polymatroidal, is_polymatroidal_generator_form,
                          recognize_cm_shape, squarefree_veronese, veronese, veronese_type)
from .codim1 import MinPrimeGraph, is_connected_codim_one, lemma_loc_equivalence
from .cm import (canonical_split, cap_prod, failing_localizations, is_cm_polymatroidal,
                 is_generalized_cm, lemma_akhar_check, theorem_th_classify)
from .simplicial import SimplicialComplex, reduced_homology_ranks, strongly_connected
from .reisner import is_cm_reisner, polarize, stanley_reisner_complex, stanley_reisner_ideal
from .report import report

__version__ = "0.1.0"
