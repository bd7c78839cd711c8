"""Circular-arc recognition toolkit for chordal graphs."""

import json as _json

from _cag import (  # noqa: F401
    ArcModel,
    Graph,
    add_isolated_vertex,
    base_model_otimes,
    ca_oracle,
    canonical_form,
    classify_region,
    complement,
    dag_graph,
    ddag_graph,
    enumerate_chordal,
    family_by_name,
    fig1b_model,
    fig1c_model,
    fig7_graphs,
    find_hole,
    find_induced_copy,
    flip,
    flip_arcs,
    forbidden_family_upto,
    from_graph6,
    gadget,
    has_forbidden_configuration,
    hca_oracle,
    induced_subgraph,
    intersection_graph,
    interval_oracle,
    is_ca_via_families,
    is_ca_via_flip,
    is_chordal,
    is_helly,
    is_hca_chordal,
    is_interval,
    is_isomorphic,
    is_minimal_forbidden_ca,
    is_split,
    long_claw,
    maximal_cliques,
    model_otimes_minus,
    net,
    net_star,
    otimes,
    otimes_normalize,
    otimes_order,
    otimes_proper,
    realizes,
    remove_vertex,
    simplicial_vertices,
    strip_universal,
    sun,
    sun_complement,
    sun_complement_plus,
    verify_certificate_json,
    whipping_top,
)

__version__ = "0.1.0"


def certificate(verdict):
    """Parsed certificate dict of a decider verdict, or None."""
    raw = verdict.get("certificate")
    return _json.loads(raw) if raw else None
