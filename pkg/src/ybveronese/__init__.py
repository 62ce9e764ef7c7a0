"""Finite involutive set-theoretic Yang-Baxter solutions, normal forms in their
Yang-Baxter algebras, and presentations of Veronese subalgebras."""

__version__ = "0.1.0"

from .errors import BoundExceeded, GuardExceeded, NonBijectiveError, NotApplicable, YBXError
from .kernels import BACKEND
from .solution import (
    Solution,
    ValidationReport,
    check_condition_O,
    detect_permutation_solution,
    fixed_points,
    is_square_free,
    is_trivial,
    make_permutation,
    make_trivial,
    relabel,
    validate,
)
from .words import (
    OrbitReport,
    apply_r_at,
    check_M3,
    left_action_word,
    normal_form,
    normal_monomials,
    orbit,
    right_action_word,
)
from .rewrite import (
    BinomialRelation,
    RewriteSystem,
    complete,
    is_binomial_skew_polynomial,
    is_pbw,
    normal_basis_gate,
    pbw_enumeration_search,
    reduce,
    relations_from_solution,
)
from .veronese import (
    VeroneseData,
    VeronesePresentation,
    abstract_veronese_solution,
    build_veronese,
    dveronese_square_free_check,
    hilbert_check,
    permutation_veronese_check,
    presentation,
    verify_veronese_map,
)
from .catalog import ParseError, enumerate_solutions, parse, serialize

__all__ = [name for name in dir() if not name.startswith("_")]
