"""Exact SL2 character rings and t = -1 skein normal forms of two-bridge links."""

from .charvariety import CharacterRingReport, chebyshev_S, delta, eta, eta_ab, eta_nab, run_checks
from .linkparam import TwoBridgeParam, canonical, epsilon_sequence, is_equivalent, presentation, relator_word
from .polyparse import PolySyntaxError, UnknownVariable, parse
from .polyring import BARRED, TRACE, Polynomial, VariableSet, is_squarefree_univariate
from .skeinreduce import BasisDescriptor, basis_monomials, is_zero_in_character_ring, normal_form
from .traceengine import AlgebraElement, evaluate_word, to_barred, trace_of_word
from .words import Letter, Word

__version__ = "0.1.0"
