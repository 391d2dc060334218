"""Maximal Thurston-Bennequin numbers of two-bridge knots and links."""

__version__ = "0.1.0"

from .laurent import LaurentPoly2
from .rational import Frac, eval_cf, isotopic_sufficient, legendrian_form, mirror_fraction, parse_fraction
from .diagram import build_diagram, orient, writhe
from .kauffman import F_of, L_matrix, f_lemma, kauffman_bound
from .skein import skein_kauffman_L
from .legendrian import TbResult, front_of, max_tb, render_front, tb_from_front
from .catalog import default_catalog, emit_table, load_catalog, reproduce_table

__all__ = [
    "LaurentPoly2",
    "Frac",
    "eval_cf",
    "isotopic_sufficient",
    "legendrian_form",
    "mirror_fraction",
    "parse_fraction",
    "build_diagram",
    "orient",
    "writhe",
    "F_of",
    "L_matrix",
    "f_lemma",
    "kauffman_bound",
    "skein_kauffman_L",
    "TbResult",
    "front_of",
    "max_tb",
    "render_front",
    "tb_from_front",
    "default_catalog",
    "emit_table",
    "load_catalog",
    "reproduce_table",
]
