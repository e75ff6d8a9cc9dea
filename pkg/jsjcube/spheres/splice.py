"""Splicing graphs along removed open stars of equal-valence vertices."""

from __future__ import annotations

import typing as t
from collections import Counter

import networkx as nx
from networkx.utils import UnionFind

from jsjcube.errors import GluingError


def _neighbour_counts(graph: nx.MultiGraph, v) -> Counter:
    return Counter(u for _, u in graph.edges(v) if u != v)


def _check_labeling(graph: nx.MultiGraph, v, phi: t.Sequence) -> None:
    if v not in graph:
        raise GluingError(f"splice vertex {v!r} is not in the graph")
    if Counter(phi) != _neighbour_counts(graph, v):
        raise GluingError(
            f"labelling at {v!r} is not a bijection onto its {graph.degree(v)} incident edges"
        )


def identify_nodes(graph: nx.MultiGraph, pairs: t.Iterable[t.Tuple], prefer: t.Container = ()) -> nx.MultiGraph:
    """quotient of ``graph`` by the equivalence generated by ``pairs``"""
    uf = UnionFind()
    for a, b in pairs:
        uf.union(a, b)

    rename = {}
    merged_prov = {}
    for group in uf.to_sets():
        if len(group) < 2:
            continue
        preferred = [n for n in group if n in prefer]
        rep = min(preferred) if preferred else min(group)
        prov = frozenset().union(
            *(graph.nodes[n].get("prov", frozenset({n})) for n in group)
        )
        merged_prov[rep] = prov
        for n in group:
            rename[n] = rep

    out = nx.MultiGraph()
    for n, data in graph.nodes(data=True):
        rep = rename.get(n, n)
        if rep in out:
            continue
        attrs = dict(data)
        if rep in merged_prov:
            attrs["prov"] = merged_prov[rep]
        out.add_node(rep, **attrs)
    for a, b in graph.edges():
        out.add_edge(rename.get(a, a), rename.get(b, b))
    return out


def splice(
    g1: nx.MultiGraph,
    v1,
    phi1: t.Sequence,
    g2: nx.MultiGraph,
    v2,
    phi2: t.Sequence,
) -> nx.MultiGraph:
    """
    Remove the open stars of ``v1`` and ``v2`` and glue ``phi1[j]`` to ``phi2[j]``.

    ``phi`` lists the neighbours of the splice vertex once per incident edge, so a
    neighbour joined by two edges appears twice. Glued nodes keep the id from ``g1``.
    """
    _check_labeling(g1, v1, phi1)
    _check_labeling(g2, v2, phi2)
    if len(phi1) != len(phi2):
        raise GluingError(f"valence mismatch: {len(phi1)} != {len(phi2)}")
    shared = (set(g1) - {v1}) & (set(g2) - {v2})
    if shared:
        raise GluingError(f"spliced graphs share nodes {sorted(shared)[:3]}")

    union = nx.MultiGraph()
    for g, v in ((g1, v1), (g2, v2)):
        union.add_nodes_from((n, d) for n, d in g.nodes(data=True) if n != v)
        union.add_edges_from((a, b) for a, b in g.edges() if v not in (a, b))
    return identify_nodes(union, zip(phi1, phi2), prefer=set(g1) - {v1})


def self_splice(graph: nx.MultiGraph, v1, phi1: t.Sequence, v2, phi2: t.Sequence) -> nx.MultiGraph:
    if v1 == v2:
        raise GluingError("self-splice needs two distinct vertices")
    if graph.has_edge(v1, v2):
        raise GluingError(f"self-splice vertices {v1!r} and {v2!r} are adjacent")
    _check_labeling(graph, v1, phi1)
    _check_labeling(graph, v2, phi2)
    if len(phi1) != len(phi2):
        raise GluingError(f"valence mismatch: {len(phi1)} != {len(phi2)}")
    rest = graph.copy()
    rest.remove_nodes_from([v1, v2])
    return identify_nodes(rest, zip(phi1, phi2))
