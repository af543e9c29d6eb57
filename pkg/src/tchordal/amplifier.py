"""The cyclic-wiring amplifier and the hard sequence built from it.

Given a t-chordal digraph D and a family of independent sets, ``amplify``
returns a larger t-chordal digraph D' together with many tracked induced
copies of D such that every k-dicoloring of D' (k = chi_A(D)) leaves some
copy in which each set of the family misses a color.

The construction handles one color class of the family's intersection graph
at a time. For each set I in the class it takes t copies of the current
digraph and adds every arc from the images of I in copy j to those in copy
j + 1 (cyclically). The remaining sets, one per tracked copy of D, form the
family for the next level; they keep the color of the set they came from.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Sequence

from .digraph import (
    Digraph,
    Embedding,
    UndirectedGraph,
    disjoint_union,
    identity_embedding,
)
from .dicoloring import dichromatic_number, enumerate_k_dicolorings
from .errors import (
    InvalidParameterError,
    NotIndependentError,
    SizeCapExceededError,
)

log = logging.getLogger(__name__)

DEFAULT_SIZE_CAP = 10**5
DEFAULT_FAMILY_CAP = 10**6


def _independence_violation(host: Digraph, vertices) -> tuple[int, int] | None:
    members = set(vertices)
    for v in sorted(members):
        for w in host.out_neighbors(v):
            if w in members:
                return (v, w)
    return None


@dataclass(frozen=True)
class IndependentSetFamily:
    host: Digraph
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))
        for j, s in enumerate(self.sets, start=1):
            for v in s:
                if not 1 <= v <= self.host.vertex_count:
                    raise InvalidParameterError(f"set {j}: vertex {v} not in host")
            arc = _independence_violation(self.host, s)
            if arc is not None:
                raise NotIndependentError(
                    f"set {j} is not independent: arc {arc[0]} -> {arc[1]}", arc
                )

    def __len__(self):
        return len(self.sets)


def intersection_graph(family: IndependentSetFamily | Sequence[frozenset[int]]) -> UndirectedGraph:
    """Vertex j per set (1-based); j ~ i iff the sets meet."""
    sets = family.sets if isinstance(family, IndependentSetFamily) else tuple(family)
    by_vertex: dict[int, list[int]] = {}
    for j, s in enumerate(sets, start=1):
        for v in s:
            by_vertex.setdefault(v, []).append(j)
    pairs = set()
    for owners in by_vertex.values():
        pairs.update(itertools.combinations(owners, 2))
    return UndirectedGraph.from_pairs(len(sets), pairs)


def degeneracy_order(g: UndirectedGraph) -> list[int]:
    """Smallest-last order: each vertex has few neighbours later in the list."""
    adj = g.adjacency()
    degree = {v: len(adj[v]) for v in range(1, g.vertex_count + 1)}
    removed = set()
    order = []
    for _ in range(g.vertex_count):
        v = min((u for u in degree if u not in removed), key=lambda u: (degree[u], u))
        removed.add(v)
        order.append(v)
        for w in adj[v]:
            if w not in removed:
                degree[w] -= 1
    order.reverse()
    return order


def proper_coloring(g: UndirectedGraph) -> dict[int, int]:
    """Greedy coloring along a degeneracy order; colors start at 1."""
    adj = g.adjacency()
    colors: dict[int, int] = {}
    for v in degeneracy_order(g):
        taken = {colors[w] for w in adj[v] if w in colors}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return colors


@dataclass(frozen=True)
class AmplifierOutput:
    result: Digraph
    original: Digraph
    sets: tuple[frozenset[int], ...]
    copies: tuple[Embedding, ...]
    set_images: tuple[tuple[frozenset[int], ...], ...] = field(repr=False)

    def format_map(self) -> str:
        lines = []
        for c, emb in enumerate(self.copies, start=1):
            lines.append(f"copy {c}: " + " ".join(map(str, emb.images)))
        for c, images in enumerate(self.set_images, start=1):
            for j, img in enumerate(images, start=1):
                lines.append(f"set {c} {j}: " + " ".join(map(str, sorted(img))))
        return "\n".join(lines) + "\n"


def _wire_round(
    host: Digraph, copies: list[tuple[int, ...]], members: frozenset[int], t: int, size_cap: int
) -> tuple[Digraph, list[tuple[int, ...]]]:
    # members: the vertices of one base-level set; its images across every
    # tracked copy form the independent set that gets wired cyclically.
    n = host.vertex_count
    if t * n > size_cap:
        raise SizeCapExceededError(
            f"wiring round would create {t * n} vertices (cap {size_cap})"
        )
    union = sorted({copy[v - 1] for copy in copies for v in members})
    arc = _independence_violation(host, union)
    if arc is not None:  # pragma: no cover - guaranteed by the class choice
        raise AssertionError(f"wired union is not independent: arc {arc}")
    big, offsets = disjoint_union([host] * t)
    extra = []
    for j in range(t):
        src, dst = offsets[j], offsets[(j + 1) % t]
        extra.extend((src + a, dst + b) for a in union for b in union)
    big = Digraph(big.vertex_count, itertools.chain(big.arcs, extra))
    new_copies = [
        tuple(offsets[j] + x for x in copy) for copy in copies for j in range(t)
    ]
    return big, new_copies


def _check_final_size(n: int, colors: list[int], t: int, size_cap: int) -> None:
    # replays the level recursion on counts only; class order is scale-invariant
    sizes: dict[int, int] = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    while sizes:
        chosen = min(sizes, key=lambda c: (-sizes[c], c))
        copies = 1
        for _ in range(sizes.pop(chosen)):
            n *= t
            copies *= t
            if n > size_cap:
                raise SizeCapExceededError(f"wiring round would create {n} vertices (cap {size_cap})")
        sizes = {c: k * copies for c, k in sizes.items()}


def _amplify_level(
    d: Digraph,
    sets: list[frozenset[int]],
    colors: list[int],
    t: int,
    size_cap: int,
) -> tuple[Digraph, list[tuple[int, ...]]]:
    """Returns the amplified digraph and the tracked copies of ``d`` in it."""
    if not sets:
        return d, [tuple(d.vertices)]
    sizes: dict[int, int] = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    chosen = min(sizes, key=lambda c: (-sizes[c], c))
    wired = [s for s, c in zip(sets, colors) if c == chosen]
    rest = [(s, c) for s, c in zip(sets, colors) if c != chosen]
    log.debug("level |V|=%d: wiring %d sets of color %d", d.vertex_count, len(wired), chosen)

    host, copies = d, [tuple(d.vertices)]
    for members in wired:
        host, copies = _wire_round(host, copies, members, t, size_cap)

    next_sets = []
    next_colors = []
    for copy in copies:
        for s, c in rest:
            next_sets.append(frozenset(copy[v - 1] for v in s))
            next_colors.append(c)
    final, outer = _amplify_level(host, next_sets, next_colors, t, size_cap)
    return final, [tuple(o[x - 1] for x in inner) for o in outer for inner in copies]


def amplify(
    d: Digraph,
    family: IndependentSetFamily | Sequence[Sequence[int]],
    t: int,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> AmplifierOutput:
    """Build D' from ``d`` and the independent-set family.

    Raises SizeCapExceededError before any level would exceed ``size_cap``
    vertices.
    """
    if t < 3:
        raise InvalidParameterError(f"t must be at least 3, got {t}")
    if not isinstance(family, IndependentSetFamily):
        family = IndependentSetFamily(d, tuple(frozenset(s) for s in family))
    elif family.host != d:
        raise InvalidParameterError("family host differs from d")
    sets = list(family.sets)
    coloring = proper_coloring(intersection_graph(sets))
    colors = [coloring[j] for j in range(1, len(sets) + 1)]
    _check_final_size(d.vertex_count, colors, t, size_cap)
    result, copies = _amplify_level(d, sets, colors, t, size_cap)
    embeddings = tuple(Embedding(d, c) for c in copies)
    set_images = tuple(
        tuple(emb.image_of(s) for s in family.sets) for emb in embeddings
    )
    return AmplifierOutput(result, d, family.sets, embeddings, set_images)


def verify_amplifier_postcondition(out: AmplifierOutput, k: int, budget: int = 10**7) -> bool:
    """Every k-dicoloring of the result leaves a copy whose sets each miss a color.

    Checked by enumerating all labeled k-dicolorings of ``out.result``.
    Vacuously true when there are none.
    """
    if k < 1:
        raise InvalidParameterError(f"k must be at least 1, got {k}")
    images = out.set_images
    holds = True

    def check(coloring):
        nonlocal holds
        for per_copy in images:
            if all(len({coloring[v] for v in img}) <= k - 1 for img in per_copy):
                return True
        holds = False
        return False

    enumerate_k_dicolorings(out.result, k, check, budget=budget)
    return holds


def drop_wraparound_wiring(out: AmplifierOutput, t: int) -> AmplifierOutput:
    """Copy of ``out`` with the closing link of the last wiring round removed.

    The arcs deleted are those from the last block of ``t`` to the first,
    i.e. the ones making the final cyclic wiring cyclic. Used to show the
    post-condition depends on the wrap-around arcs.
    """
    n = out.result.vertex_count
    block = n // t
    wrap = {
        (u, v)
        for u, v in out.result.arcs
        if u > (t - 1) * block and v <= block
    }
    return AmplifierOutput(
        Digraph(n, out.result.arcs - wrap), out.original, out.sets, out.copies, out.set_images
    )


def transversal_family(parts: int, part_size: int, cap: int = DEFAULT_FAMILY_CAP) -> list[frozenset[int]]:
    """All sets holding one vertex from each of ``parts`` consecutive blocks."""
    total = part_size ** parts
    if total > cap:
        raise SizeCapExceededError(f"transversal family of {total} sets exceeds cap {cap}")
    blocks = [range(p * part_size + 1, (p + 1) * part_size + 1) for p in range(parts)]
    return [frozenset(choice) for choice in itertools.product(*blocks)]


def build_hard_sequence(
    t: int,
    n: int,
    size_cap: int = DEFAULT_SIZE_CAP,
    family_cap: int = DEFAULT_FAMILY_CAP,
) -> Digraph:
    """The n-th member of a t-chordal sequence with dichromatic number >= n."""
    if t < 3:
        raise InvalidParameterError(f"t must be at least 3, got {t}")
    if n < 1:
        raise InvalidParameterError(f"n must be at least 1, got {n}")
    current = Digraph(1)
    for _ in range(n - 1):
        chi, _coloring = dichromatic_number(current)
        if chi * current.vertex_count > size_cap:
            raise SizeCapExceededError(
                f"{chi} copies of a {current.vertex_count}-vertex digraph exceed cap {size_cap}"
            )
        union, _ = disjoint_union([current] * chi)
        family = transversal_family(chi, current.vertex_count, family_cap)
        current = amplify(union, family, t, size_cap).result
    return current
