"""Theta-ring graph recognition and toric ideal checks."""

from ._core import (
    Graph,
    ThetaRingError,
    UnsupportedOrientation,
    all_graphs,
    canonical_key,
    chordless_cycles,
    cio_search,
    forbidden,
    is_chordal,
    is_ring_graph,
    is_theta_ring,
    make_prism,
    make_pyramid,
    make_theta,
    make_theta_partial_wheel,
    parse_edge_list,
    parse_graph6,
    recognize,
    to_edge_list,
    to_graph6,
    toric,
    witness,
)

__all__ = [
    "Graph",
    "ThetaRingError",
    "UnsupportedOrientation",
    "all_graphs",
    "canonical_key",
    "chordless_cycles",
    "cio_search",
    "forbidden",
    "is_chordal",
    "is_ring_graph",
    "is_theta_ring",
    "make_prism",
    "make_pyramid",
    "make_theta",
    "make_theta_partial_wheel",
    "parse_edge_list",
    "parse_graph6",
    "recognize",
    "to_edge_list",
    "to_graph6",
    "toric",
    "witness",
]
