"""Geometric orthogonal codes: polynomial constructions, correlation checks,
size bounds and random-code experiments."""

from .bounds import (
    BoundSet,
    bound_set,
    flipping_closed_form,
    l_con,
    l_ooc,
    u_det,
    u_n_eq_w,
    u_ran,
    u_simplified,
)
from .codefile import CodeFormatError, parse_code, serialize_code
from .construction import (
    PolynomialCodeword,
    build_code,
    build_flipping_code,
    codeword_to_macrobond,
    complement,
    eval_poly,
    is_prime,
    is_self_complementary,
)
from .correlation import (
    CorrelationReport,
    Witness,
    correlation_at,
    max_auto_correlation,
    max_cross_correlation,
    max_flip_correlation,
    verify_code,
)
from .grid import Code, CodeParams, Macrobond, Point, Translation, canonicalize, flip, translate
from .random_codes import TrialConfig, TrialStats, random_macrobond, run_experiment, run_trial

__version__ = "0.1.0"
