"""The graded graphs R_c, L_c, Q_c and the strong filtered graph Q~_c.

Vertices are compositions ranked by size.  Edges point from lower rank to
higher rank and carry an integer multiplicity.
"""

from collections import defaultdict
from dataclasses import dataclass, field

from .compositions import ZERO, canonical_key, compositions_up_to, flatten, size
from .formal import (
    FormalSum,
    down_filtered_terms,
    down_Q_terms,
    nonempty_subsets,
    up_L_terms,
    up_R_terms,
)
from .operators import box_remove_set

GRADED = "graded"
STRONG_FILTERED = "strong-filtered"
MAX_RANK_CAP = 12


@dataclass(frozen=True)
class RankedGraph:
    name: str
    flavor: str
    max_rank: int
    vertices: tuple
    edges: dict = field(hash=False)

    def __post_init__(self):
        ups, downs = defaultdict(list), defaultdict(list)
        for (lo, hi), m in sorted(self.edges.items(), key=_edge_key):
            ups[lo].append((hi, m))
            downs[hi].append((lo, m))
        object.__setattr__(self, "_ups", dict(ups))
        object.__setattr__(self, "_downs", dict(downs))

    def vertices_of_rank(self, n):
        return [v for v in self.vertices if size(v) == n]

    def sorted_edges(self):
        return sorted(self.edges.items(), key=_edge_key)

    def num_edges(self):
        """Edge count with multiplicity."""
        return sum(self.edges.values())

    def up_neighbors(self, x):
        return self._ups.get(x, [])

    def down_neighbors(self, y):
        return self._downs.get(y, [])

    def __eq__(self, other):
        if not isinstance(other, RankedGraph):
            return NotImplemented
        return (self.flavor, self.max_rank, self.vertices, self.edges) == (
            other.flavor, other.max_rank, other.vertices, other.edges)

    def __hash__(self):
        return hash((self.flavor, self.max_rank, self.vertices))


def _edge_key(item):
    (lo, hi), _ = item
    return canonical_key(lo), canonical_key(hi)


def _check_rank(N):
    if not 0 <= N <= MAX_RANK_CAP:
        raise ValueError(f"max rank must be in [0, {MAX_RANK_CAP}], got {N}")


def _build_up(name, N, term_fn):
    _check_rank(N)
    verts = tuple(compositions_up_to(N))
    edges = defaultdict(int)
    for beta in verts:
        if size(beta) == N:
            continue
        for r in term_fn(beta):
            edges[(beta, flatten(r))] += 1
    return RankedGraph(name, GRADED, N, verts, dict(edges))


def _build_down(name, flavor, N, term_fn):
    _check_rank(N)
    verts = tuple(compositions_up_to(N))
    edges = defaultdict(int)
    for alpha in verts:
        for r in term_fn(alpha):
            edges[(flatten(r), alpha)] += 1
    return RankedGraph(name, flavor, N, verts, dict(edges))


def build_Rc(N: int) -> RankedGraph:
    """Right composition poset: ``beta -> u_i(beta)``."""
    return _build_up("Rc", N, up_R_terms)


def build_Lc(N: int) -> RankedGraph:
    """Left composition poset: ``beta -> t_i(beta)``."""
    return _build_up("Lc", N, up_L_terms)


def build_Qc(N: int) -> RankedGraph:
    """Quasisymmetric composition poset: ``d_i(alpha) -> alpha``."""
    return _build_down("Qc", GRADED, N, down_Q_terms)


def build_Qct(N: int) -> RankedGraph:
    """Strong filtered graph with an edge ``d_I(alpha) -> alpha`` per witness set ``I``."""
    return _build_down("Qct", STRONG_FILTERED, N, down_filtered_terms)


BUILDERS = {"rc": build_Rc, "lc": build_Lc, "qc": build_Qc, "qct": build_Qct}


def build(name: str, N: int) -> RankedGraph:
    try:
        return BUILDERS[name.lower()](N)
    except KeyError:
        raise ValueError(f"unknown graph {name!r}; choose from {sorted(BUILDERS)}") from None


def graph_up(G: RankedGraph, s) -> FormalSum:
    """``U(x) = sum_y m(x, y) y`` read off the edge list."""
    s = s if isinstance(s, FormalSum) else FormalSum(s)
    acc = defaultdict(int)
    for x, c in s.items():
        if size(x) >= G.max_rank:
            raise ValueError(f"{x} is out of bounds for an up move in a graph of max rank {G.max_rank}")
        for y, m in G.up_neighbors(x):
            acc[y] += c * m
    return FormalSum(acc)


def graph_down(G: RankedGraph, s) -> FormalSum:
    """``D(y) = sum_x m(x, y) x`` read off the edge list."""
    s = s if isinstance(s, FormalSum) else FormalSum(s)
    acc = defaultdict(int)
    for y, c in s.items():
        if size(y) > G.max_rank:
            raise ValueError(f"{y} is out of bounds for a graph of max rank {G.max_rank}")
        for x, m in G.down_neighbors(y):
            acc[x] += c * m
    return FormalSum(acc)


def structural_violations(G: RankedGraph) -> list:
    """Edges that break the rank law for the graph's flavor."""
    bad = []
    for (lo, hi), m in G.sorted_edges():
        step = size(hi) - size(lo)
        ok = step == 1 if G.flavor == GRADED else step >= 1
        if not ok or m < 1:
            bad.append((lo, hi, m))
    return bad


def unreachable_vertices(G: RankedGraph) -> list:
    """Vertices of positive rank without an incoming edge."""
    return [v for v in G.vertices if v and not G.down_neighbors(v)]


def check_nontransitivity():
    """Witness that the relation ``beta = d_I(alpha)`` is not transitive.

    Returns a report dict; ``direct_witness`` lists every ``I`` with
    ``d_I((4,1,4,1))`` flattening to ``(3,3)`` (expected empty).
    """
    start, target = (4, 1, 4, 1), (3, 3)
    step1 = box_remove_set({1, 4}, start)
    step1 = step1 if step1 is ZERO else flatten(step1)
    step2 = box_remove_set({1, 4}, step1)
    step2 = step2 if step2 is ZERO else flatten(step2)
    direct = []
    # indices above the largest part annihilate; search a little beyond anyway
    for I in nonempty_subsets(6):
        r = box_remove_set(I, start)
        if r is not ZERO and flatten(r) == target:
            direct.append(I)
    qc = build_Qc(size(start))
    path = _find_path(qc, target, start)
    return {
        "start": start,
        "step1": step1,
        "step2": step2,
        "target": target,
        "direct_witness": direct,
        "qc_path": path,
    }


def _find_path(G, lo, hi):
    """A chain of upward edges from ``lo`` to ``hi`` in ``G``, or None."""
    frontier = {lo: None}
    queue = [lo]
    while queue:
        x = queue.pop(0)
        if x == hi:
            path = [x]
            while frontier[path[-1]] is not None:
                path.append(frontier[path[-1]])
            return path[::-1]
        for y, _ in G.up_neighbors(x):
            if y not in frontier and size(y) <= size(hi):
                frontier[y] = x
                queue.append(y)
    return None


def multiplicity_survey(N: int) -> dict:
    """Count Q~_c edges by multiplicity, for every target of size at most ``N``."""
    G = build_Qct(N)
    counts = defaultdict(int)
    examples = []
    for (lo, hi), m in G.sorted_edges():
        counts[m] += 1
        if m > 1 and len(examples) < 10:
            examples.append({"from": lo, "to": hi, "mult": m})
    return {
        "max_rank": N,
        "edges": len(G.edges),
        "by_multiplicity": dict(sorted(counts.items())),
        "max_multiplicity": max(counts, default=0),
        "examples": examples,
    }
