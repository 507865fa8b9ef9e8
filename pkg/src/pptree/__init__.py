"""Exact arithmetic on the Berggren tree of primitive Pythagorean triples."""

from .berggren import (
    LETTERS,
    MATRICES,
    InvalidPath,
    descend,
    descend_path,
    enumerate_tree,
    lemma_f1n_check,
    matrix_power,
    parent,
    path_of,
)
from .descendant_geometry import descendant_triangle_metrics
from .inradius_enum import count_with_inradius, enumerate_with_inradius, factorize
from .ppt_core import (
    PPT,
    ROOT,
    EuclidPair,
    InvariantViolation,
    TripleError,
    circumradius,
    f_param,
    from_euclid,
    inradius,
    to_euclid,
    validate_triple,
)
from .quad_ring import QuadInt, silver_power
from .radius_sequences import chain_circumradius, chain_inradius, chain_point, child_circumradius, child_inradius

__version__ = "0.1.0"
