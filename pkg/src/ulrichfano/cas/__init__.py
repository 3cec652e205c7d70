"""Graded polynomial kernel over F_p: Groebner bases, resolutions, sheaf cohomology."""

from importlib.resources import files

from .cohomology import DIM_CAP_ENV, ResourceError, ext_dim, rank_mod_p, sheaf_cohomology_dim
from .curves import CurveGenerationError, random_acm_curve
from .groebner import buchberger, reduce_poly, spoly_residues
from .ideal import Ideal, ideal_power, ideal_product
from .parse import ParseError, format_ideal, parse_ideal, parse_poly
from .resolution import (
    FreeResolution,
    NotACurveError,
    curve_invariants,
    free_resolution,
    hilbert_function,
    hilbert_poly_from_resolution,
    minimize,
    schreyer_resolution,
)
from .ring import DEFAULT_PRIME, Poly, Ring


def paper_ideal() -> Ideal:
    """The four cubics shipped as ``data/paper_J.txt``."""
    return parse_ideal(files("ulrichfano").joinpath("data/paper_J.txt").read_text())


def fixture_path() -> str:
    return str(files("ulrichfano").joinpath("data/paper_J.txt"))


__all__ = [
    "DEFAULT_PRIME", "DIM_CAP_ENV", "CurveGenerationError", "FreeResolution", "Ideal",
    "NotACurveError", "ParseError", "Poly", "ResourceError", "Ring", "buchberger",
    "curve_invariants", "ext_dim", "fixture_path", "format_ideal", "free_resolution",
    "hilbert_function", "hilbert_poly_from_resolution", "ideal_power", "ideal_product",
    "minimize", "paper_ideal", "parse_ideal", "parse_poly", "random_acm_curve", "rank_mod_p",
    "reduce_poly", "schreyer_resolution", "sheaf_cohomology_dim", "spoly_residues",
]
