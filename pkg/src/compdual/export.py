"""DOT / TikZ / JSON serialization of ranked graphs, and fixture comparison.

Fixture files live in ``compdual/fixtures/<name>.json`` with the schema::

    {"name": "Rc4", "source": "...", "edges": [{"from": [..], "to": [..]}, ...]}

Each entry is one edge drawn in the companion figure; there are no multiplicities.
"""

import json
from dataclasses import dataclass
from importlib import resources

from .compositions import canonical_key, display, size
from .graphs import GRADED, STRONG_FILTERED, RankedGraph

FORMATS = ("json", "dot", "tikz")
FIXTURES = {"Rc4": "rc", "Lc4": "lc", "Qc4": "qc"}


def _edge_list(G, simple_edges):
    return [(lo, hi, 1 if simple_edges else m) for (lo, hi), m in G.sorted_edges()]


def to_json(G: RankedGraph, simple_edges=False) -> str:
    data = {
        "flavor": G.flavor,
        "max_rank": G.max_rank,
        "vertices": [list(v) for v in G.vertices],
        "edges": [{"from": list(lo), "to": list(hi), "mult": m}
                  for lo, hi, m in _edge_list(G, simple_edges)],
    }
    return json.dumps(data, separators=(",", ":"))


def from_json(text: str, name="graph") -> RankedGraph:
    data = json.loads(text)
    if data["flavor"] not in (GRADED, STRONG_FILTERED):
        raise ValueError(f"unknown flavor {data['flavor']!r}")
    verts = tuple(sorted((tuple(v) for v in data["vertices"]), key=canonical_key))
    edges = {}
    for e in data["edges"]:
        key = (tuple(e["from"]), tuple(e["to"]))
        edges[key] = edges.get(key, 0) + int(e["mult"])
    return RankedGraph(name, data["flavor"], int(data["max_rank"]), verts, edges)


def _node_ids(G):
    return {v: f"n{k}" for k, v in enumerate(G.vertices)}


def to_dot(G: RankedGraph, simple_edges=False, label_mult=False) -> str:
    """Directed graph, one line per edge copy (or one labelled line with ``label_mult``)."""
    ids = _node_ids(G)
    lines = [f'digraph {G.name} {{', "  rankdir=BT;"]
    for v in G.vertices:
        lines.append(f'  {ids[v]} [label="{display(v)}"];')
    for lo, hi, m in _edge_list(G, simple_edges):
        if label_mult:
            lines.append(f'  {ids[lo]} -> {ids[hi]} [label="{m}"];')
        else:
            lines.extend(f"  {ids[lo]} -> {ids[hi]};" for _ in range(m))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _layered_layout(G, dx=64.0, dy=51.0):
    pos = {}
    for n in range(G.max_rank + 1):
        layer = G.vertices_of_rank(n)
        width = (len(layer) - 1) * dx
        for k, v in enumerate(layer):
            pos[v] = (k * dx - width / 2, n * dy)
    return pos


def to_tikz(G: RankedGraph, simple_edges=False) -> str:
    """A tikzpicture in the style of the companion figure; rank is the layer."""
    ids = _node_ids(G)
    pos = _layered_layout(G)
    lines = [r"\begin{tikzpicture}[>=latex,line join=bevel, scale=0.75, every node/.style={font=\small}]"]
    for v in G.vertices:
        x, y = pos[v]
        lines.append(f"  \\node ({ids[v]}) at ({x:.1f}bp,{y:.1f}bp) [draw,draw=none] {{${{{display(v)}}}$}};")
    for lo, hi, m in _edge_list(G, simple_edges):
        for _ in range(m):
            lines.append(f"  \\draw [black] ({ids[lo]}) to ({ids[hi]});")
    lines.append(r"\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def export_graph(G: RankedGraph, fmt: str, simple_edges=False) -> str:
    fmt = fmt.lower()
    if fmt == "json":
        return to_json(G, simple_edges)
    if fmt == "dot":
        return to_dot(G, simple_edges)
    if fmt == "tikz":
        return to_tikz(G, simple_edges)
    raise ValueError(f"unsupported format {fmt!r}; choose from {FORMATS}")


@dataclass(frozen=True)
class EdgeFixture:
    name: str
    edges: tuple

    @property
    def graph(self):
        return FIXTURES[self.name]


def load_fixture(name: str) -> EdgeFixture:
    if name not in FIXTURES:
        raise ValueError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}")
    text = resources.files("compdual.fixtures").joinpath(f"{name}.json").read_text()
    data = json.loads(text)
    edges = tuple((tuple(e["from"]), tuple(e["to"])) for e in data["edges"])
    return EdgeFixture(data["name"], edges)


def compare_fixture(G: RankedGraph, f: EdgeFixture) -> dict:
    """Symmetric difference of edge sets, multiplicities collapsed."""
    built = set(G.edges)
    ref = set(f.edges)
    if any(size(hi) > G.max_rank for _, hi in ref):
        raise ValueError(f"fixture {f.name} needs max rank >= 4, graph has {G.max_rank}")
    key = lambda e: (canonical_key(e[0]), canonical_key(e[1]))
    return {
        "fixture": f.name,
        "built_edges": len(built),
        "fixture_edges": len(ref),
        "missing": sorted(ref - built, key=key),
        "extra": sorted(built - ref, key=key),
        "passed": built == ref,
    }
