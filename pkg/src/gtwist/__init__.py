"""Exact tools for generalized twisted drawings of complete graphs.

Drawings are polylines with rational coordinates, either in the plane or on
a cylinder (angle, radius). The package validates simplicity, computes
crossing sets and arrangements, decides which triangles are empty, and runs
a suite of executable lemma checks; sweep words give a combinatorial model
of gt drawings used to generate and enumerate them.
"""

from .construct import (CanonicalKey, EnumResult, SearchExhausted, canonical_key,
                        enumerate_gt, random_gt, random_gt_word, sweep_words, twisted,
                        weakly_isomorphic)
from .cylinder import (Cross, SweepError, SweepWord, Vert, extract_sweep_word, realize,
                       validate_gt, validate_sweep_word)
from .drawing import (CrossingSet, Drawing, DrawingError, Mode, crossing_set, planarize,
                      rotation_system, validate_simple)
from .formats import parse_drawing, parse_word, render_svg, serialize_drawing, serialize_word
from .triangles import Level, analyze_triangles, count_empty, verify_suite

__version__ = "0.1.0"

__all__ = [
    "CanonicalKey", "Cross", "CrossingSet", "Drawing", "DrawingError", "EnumResult",
    "Level", "Mode", "SearchExhausted", "SweepError", "SweepWord", "Vert",
    "analyze_triangles", "canonical_key", "count_empty", "crossing_set", "enumerate_gt",
    "extract_sweep_word", "parse_drawing", "parse_word", "planarize", "random_gt",
    "random_gt_word", "realize", "render_svg", "rotation_system", "serialize_drawing",
    "serialize_word", "sweep_words", "twisted", "validate_gt", "validate_simple",
    "validate_sweep_word",
    "verify_suite", "weakly_isomorphic",
]
