"""3-uniform hypergraph toolkit: degree analytics, random models, absorber
construction, and loose Hamilton cycle search at desk scale."""

from loosehc._core import (
    Hypergraph3,
    count_loose_hc,
    deg_set,
    e_triple,
    extremal_codegree,
    extremal_degree,
    find_loose_hc_pipeline,
    gadget,
    greedy_path_cover,
    has_loose_hc,
    m3_density,
    min_d_degree,
    pipeline_min_host,
    sample_h3np,
    validate_loose_cycle,
    validate_loose_path,
)

__all__ = [
    "Hypergraph3",
    "count_loose_hc",
    "deg_set",
    "e_triple",
    "extremal_codegree",
    "extremal_degree",
    "find_loose_hc_pipeline",
    "gadget",
    "greedy_path_cover",
    "has_loose_hc",
    "m3_density",
    "min_d_degree",
    "pipeline_min_host",
    "sample_h3np",
    "validate_loose_cycle",
    "validate_loose_path",
]

__version__ = "0.1.0"
