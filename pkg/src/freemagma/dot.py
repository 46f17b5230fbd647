"""Graphviz DOT text for spectra, Hasse levels, decomposition digraphs and the pentagon."""
from .elements import format_element, format_set


def _q(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _graph(name, nodes, edges, rankdir="BT"):
    lines = [f"digraph {_q(name)} {{", f"  rankdir={rankdir};", "  node [shape=box];"]
    for nid, label in nodes:
        lines.append(f"  {_q(nid)} [label={_q(label)}];")
    for a, b in edges:
        lines.append(f"  {_q(a)} -> {_q(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def spectrum_dot(spec, name="spectrum"):
    nodes = [(f"n{i}", format_set(s)) for i, s in enumerate(spec.node_sets())]
    edges = [(f"n{lo}", f"n{hi}") for lo, hi in spec.covers]
    return _graph(name, nodes, edges)


def hasse_dot(levels, name="hasse"):
    """``levels`` is a list of ``[(prime set, parents), ...]`` per level, top first.

    Nodes are the complements of the prime sets, so the magma itself sits at
    the top and k-maximal submagmas sit k steps below it.
    """
    nodes, edges = [], []
    for level in levels:
        for p, parents in level:
            pid = format_set(p)
            nodes.append((pid, "M" if not len(p) else pid + "^c"))
            edges.extend((pid, format_set(q)) for q in parents)
    return _graph(name, nodes, edges, rankdir="TB")


def digraph_dot(edges, name="digraph"):
    names = set()
    for z, c in edges:
        names.add(z)
        names.add(c)
    nodes = [(format_element(e, "canonical"), format_element(e, "pretty"))
             for e in sorted(names, key=lambda e: e.key)]
    arcs = [(format_element(z, "canonical"), format_element(c, "canonical")) for z, c in edges]
    return _graph(name, nodes, arcs, rankdir="TB")


def pentagon_dot(name="pentagon"):
    nodes = [("top", "2M ∨ 3_+M"), ("mid", "3_+M ∨ (2+3_+)M"), ("two", "2M"),
             ("three", "3_+M"), ("bot", "∅")]
    edges = [("bot", "two"), ("bot", "three"), ("three", "mid"), ("mid", "top"), ("two", "top")]
    return _graph(name, nodes, edges)
