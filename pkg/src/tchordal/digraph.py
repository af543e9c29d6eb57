"""Simple digraphs and the structural primitives built on them.

Vertices are the integers ``1..n``. A digraph is *simple*: no loops and
never both ``(u, v)`` and ``(v, u)``. Every value here is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DigonError, SelfLoopError, VertexOutOfRangeError

Arc = tuple[int, int]


class Digraph:
    """Immutable simple digraph on vertices ``1..vertex_count``.

    Out- and in-neighbour tuples are precomputed (sorted ascending), as is
    the undirected neighbourhood; ``has_arc`` is a set lookup.
    """

    __slots__ = ("vertex_count", "arcs", "_out", "_in", "_und")

    def __init__(self, vertex_count: int, arcs: Iterable[Arc] = ()):
        if vertex_count < 0:
            raise VertexOutOfRangeError(f"negative vertex count {vertex_count}")
        arc_set = set()
        for u, v in arcs:
            u, v = int(u), int(v)
            for x in (u, v):
                if x < 1 or x > vertex_count:
                    raise VertexOutOfRangeError(
                        f"vertex {x} outside 1..{vertex_count} in arc ({u}, {v})"
                    )
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if (v, u) in arc_set:
                raise DigonError(f"both ({u}, {v}) and ({v}, {u}) present")
            arc_set.add((u, v))
        out = [[] for _ in range(vertex_count + 1)]
        inn = [[] for _ in range(vertex_count + 1)]
        for u, v in arc_set:
            out[u].append(v)
            inn[v].append(u)
        self.vertex_count = vertex_count
        self.arcs = frozenset(arc_set)
        self._out = tuple(tuple(sorted(a)) for a in out)
        self._in = tuple(tuple(sorted(a)) for a in inn)
        self._und = tuple(frozenset(o) | frozenset(i) for o, i in zip(self._out, self._in))

    # -- queries ---------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def neighbors(self, v: int) -> frozenset[int]:
        """Vertices joined to ``v`` by an arc in either direction."""
        return self._und[v]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs or (v, u) in self.arcs

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def __len__(self) -> int:
        return self.vertex_count

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.vertex_count, self.arcs))

    def __repr__(self):
        return f"Digraph({self.vertex_count}, {self.sorted_arcs()!r})"


def new_digraph(vertex_count: int, arcs: Iterable[Arc] = ()) -> Digraph:
    return Digraph(vertex_count, arcs)


def directed_cycle(k: int) -> Digraph:
    """The directed cycle ``1 -> 2 -> ... -> k -> 1``."""
    return Digraph(k, [(i, i % k + 1) for i in range(1, k + 1)])


def directed_path(k: int) -> Digraph:
    return Digraph(k, [(i, i + 1) for i in range(1, k)])


@dataclass(frozen=True)
class UndirectedGraph:
    vertex_count: int
    edges: frozenset[frozenset[int]]

    @classmethod
    def from_pairs(cls, vertex_count: int, pairs: Iterable[tuple[int, int]]) -> UndirectedGraph:
        edges = set()
        for u, v in pairs:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            for x in (u, v):
                if x < 1 or x > vertex_count:
                    raise VertexOutOfRangeError(f"vertex {x} outside 1..{vertex_count}")
            edges.add(frozenset((u, v)))
        return cls(vertex_count, frozenset(edges))

    def adjacency(self) -> list[set[int]]:
        """Neighbour sets indexed by vertex (index 0 unused)."""
        adj = [set() for _ in range(self.vertex_count + 1)]
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return adj


def underlying_graph(d: Digraph) -> UndirectedGraph:
    return UndirectedGraph.from_pairs(d.vertex_count, d.arcs)


# -- clique number ---------------------------------------------------------


def _max_clique_size(n: int, nbr_masks: Sequence[int]) -> int:
    # Bron-Kerbosch with Tomita pivoting over bitmasks, bounded by the best
    # size found so far. Bit i stands for vertex i + 1.
    best = 0

    def expand(size: int, cand: int, excl: int) -> None:
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        if size + cand.bit_count() <= best:
            return
        pivot_src = cand | excl
        pivot, pivot_cover = -1, -1
        while pivot_src:
            low = pivot_src & -pivot_src
            i = low.bit_length() - 1
            cover = (cand & nbr_masks[i]).bit_count()
            if cover > pivot_cover:
                pivot, pivot_cover = i, cover
            pivot_src ^= low
        todo = cand & ~nbr_masks[pivot]
        while todo:
            low = todo & -todo
            i = low.bit_length() - 1
            expand(size + 1, cand & nbr_masks[i], excl & nbr_masks[i])
            cand &= ~low
            excl |= low
            todo ^= low
            if size + cand.bit_count() <= best:
                return

    expand(0, (1 << n) - 1, 0)
    return best


def underlying_clique_number(d: Digraph) -> int:
    """Exact clique number of the underlying undirected graph."""
    n = d.vertex_count
    if n == 0:
        return 0
    masks = []
    for v in d.vertices:
        m = 0
        for u in d.neighbors(v):
            m |= 1 << (u - 1)
        masks.append(m)
    return _max_clique_size(n, masks)


# -- strongly connected components ----------------------------------------


def strongly_connected_components(d: Digraph) -> list[list[int]]:
    """SCCs via iterative Tarjan, each sorted, ordered by smallest member."""
    n = d.vertex_count
    index = [0] * (n + 1)  # 0 = unvisited, otherwise dfs number
    low = [0] * (n + 1)
    on_stack = [False] * (n + 1)
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 1

    for root in d.vertices:
        if index[root]:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            succ = d.out_neighbors(v)
            if i < len(succ):
                work[-1] = (v, i + 1)
                w = succ[i]
                if not index[w]:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(sorted(comp))
    components.sort(key=lambda c: c[0])
    return components


def is_acyclic(d: Digraph) -> bool:
    """Kahn's algorithm."""
    indeg = [len(d.in_neighbors(v)) for v in range(d.vertex_count + 1)]
    ready = [v for v in d.vertices if indeg[v] == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for w in d.out_neighbors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return seen == d.vertex_count


# -- subgraphs, unions, embeddings -----------------------------------------


def induced_subdigraph(d: Digraph, vertices: Iterable[int]) -> tuple[Digraph, dict[int, int]]:
    """Subdigraph induced on ``vertices``; returns it with the old->new map.

    New labels follow the ascending order of the old ones.
    """
    chosen = sorted(set(vertices))
    for v in chosen:
        if v < 1 or v > d.vertex_count:
            raise VertexOutOfRangeError(f"vertex {v} outside 1..{d.vertex_count}")
    relabel = {v: i for i, v in enumerate(chosen, start=1)}
    arcs = [
        (relabel[u], relabel[w])
        for u in chosen
        for w in d.out_neighbors(u)
        if w in relabel
    ]
    return Digraph(len(chosen), arcs), relabel


def disjoint_union(ds: Sequence[Digraph]) -> tuple[Digraph, list[int]]:
    """Disjoint union; vertex ``v`` of part ``i`` becomes ``offsets[i] + v``."""
    offsets = []
    arcs = []
    total = 0
    for part in ds:
        offsets.append(total)
        arcs.extend((u + total, v + total) for u, v in part.arcs)
        total += part.vertex_count
    return Digraph(total, arcs), offsets


@dataclass(frozen=True)
class Embedding:
    """An induced copy of ``source`` inside some host digraph.

    ``images[v - 1]`` is the host vertex playing the role of source vertex ``v``.
    """

    source: Digraph
    images: tuple[int, ...]

    def image(self, v: int) -> int:
        return self.images[v - 1]

    def image_of(self, vertices: Iterable[int]) -> frozenset[int]:
        return frozenset(self.images[v - 1] for v in vertices)

    def is_valid_in(self, host: Digraph) -> bool:
        """Injectivity plus arc-exactness against ``host``."""
        src = self.source
        if len(self.images) != src.vertex_count or len(set(self.images)) != len(self.images):
            return False
        if any(x < 1 or x > host.vertex_count for x in self.images):
            return False
        for a in src.vertices:
            ia = self.images[a - 1]
            for b in src.vertices:
                if a != b and src.has_arc(a, b) != host.has_arc(ia, self.images[b - 1]):
                    return False
        return True


def identity_embedding(d: Digraph) -> Embedding:
    return Embedding(d, tuple(d.vertices))
