"""Induced directed cycles and paths, t-chordality, and the class C_l.

An induced cycle/path is one whose vertex set carries no arcs other than the
consecutive forward arcs (and the closing arc, for cycles). Both searches
extend induced paths one vertex at a time, keeping for every vertex a count
of how many path vertices it touches; a candidate may extend the path only
if it touches the current endpoint and nothing else.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Sequence

from .digraph import Digraph, is_acyclic
from .errors import InvalidParameterError
from .formats import format_cycle, format_path


def _arcs_inside(d: Digraph, vertices: Sequence[int]) -> int:
    members = set(vertices)
    return sum(1 for v in vertices for w in d.out_neighbors(v) if w in members)


@dataclass(frozen=True)
class InducedCycle:
    vertices: tuple[int, ...]

    def __len__(self):
        return len(self.vertices)

    def __str__(self):
        return format_cycle(self.vertices)

    def canonical(self) -> InducedCycle:
        i = self.vertices.index(min(self.vertices))
        return InducedCycle(self.vertices[i:] + self.vertices[:i])

    def is_valid_in(self, d: Digraph) -> bool:
        vs = self.vertices
        k = len(vs)
        if k < 3 or len(set(vs)) != k:
            return False
        if any(not 1 <= v <= d.vertex_count for v in vs):
            return False
        if not all(d.has_arc(vs[i], vs[(i + 1) % k]) for i in range(k)):
            return False
        return _arcs_inside(d, vs) == k


@dataclass(frozen=True)
class InducedPath:
    vertices: tuple[int, ...]

    def __len__(self):
        return len(self.vertices)

    def __str__(self):
        return format_path(self.vertices)

    def is_valid_in(self, d: Digraph) -> bool:
        vs = self.vertices
        k = len(vs)
        if k < 1 or len(set(vs)) != k:
            return False
        if any(not 1 <= v <= d.vertex_count for v in vs):
            return False
        if not all(d.has_arc(vs[i], vs[i + 1]) for i in range(k - 1)):
            return False
        return _arcs_inside(d, vs) == k - 1


class _PathState:
    """Current induced path plus per-vertex touch counts."""

    def __init__(self, d: Digraph):
        self.d = d
        self.path: list[int] = []
        self.on_path = [False] * (d.vertex_count + 1)
        self.hits = [0] * (d.vertex_count + 1)

    def push(self, v: int) -> None:
        self.path.append(v)
        self.on_path[v] = True
        for w in self.d.neighbors(v):
            self.hits[w] += 1

    def pop(self) -> None:
        v = self.path.pop()
        self.on_path[v] = False
        for w in self.d.neighbors(v):
            self.hits[w] -= 1


def iter_induced_dicycles(d: Digraph, max_length: int | None = None) -> Iterator[InducedCycle]:
    """Yield every induced directed cycle once, minimum vertex first.

    Cycles are produced grouped by their minimum vertex, in ascending order.
    """
    cap = d.vertex_count if max_length is None else min(max_length, d.vertex_count)
    if cap < 3:
        return
    st = _PathState(d)
    hits, on_path = st.hits, st.on_path
    for s in d.vertices:
        st.push(s)
        stack = [iter(d.out_neighbors(s))]
        while stack:
            y = next(stack[-1], None)
            if y is None:
                stack.pop()
                st.pop()
                continue
            if y < s or on_path[y]:
                continue
            length = len(st.path)
            h = hits[y]
            if h == 1:
                if length + 2 <= cap:
                    st.push(y)
                    stack.append(iter(d.out_neighbors(y)))
            elif h == 2 and length >= 2 and length + 1 <= cap and d.has_arc(y, s):
                yield InducedCycle(tuple(st.path) + (y,))


def enumerate_induced_dicycles(
    d: Digraph, max_length: int | None = None, limit: int | None = None
) -> list[InducedCycle]:
    return list(islice(iter_induced_dicycles(d, max_length), limit))


def iter_induced_dipaths(d: Digraph, length: int) -> Iterator[InducedPath]:
    """Yield every induced directed path on exactly ``length`` vertices."""
    if length < 1:
        raise InvalidParameterError("path length must be at least 1")
    st = _PathState(d)
    hits, on_path = st.hits, st.on_path
    for s in d.vertices:
        if length == 1:
            yield InducedPath((s,))
            continue
        st.push(s)
        stack = [iter(d.out_neighbors(s))]
        while stack:
            y = next(stack[-1], None)
            if y is None:
                stack.pop()
                st.pop()
                continue
            if on_path[y] or hits[y] != 1:
                continue
            if len(st.path) + 1 == length:
                yield InducedPath(tuple(st.path) + (y,))
            else:
                st.push(y)
                stack.append(iter(d.out_neighbors(y)))


def find_induced_dipath(d: Digraph, length: int) -> InducedPath | None:
    return next(iter_induced_dipaths(d, length), None)


def t_chordality_witness(d: Digraph, t: int) -> InducedCycle | None:
    """An induced directed cycle of length other than ``t``, or None if t-chordal.

    Shorter cycles are searched first. For ``t == 2`` acyclicity decides it.
    """
    if t < 2:
        raise InvalidParameterError(f"t must be at least 2, got {t}")
    if t == 2:
        if is_acyclic(d):
            return None
        return next(iter_induced_dicycles(d))
    short = next(iter_induced_dicycles(d, max_length=t - 1), None)
    if short is not None:
        return short
    return next((c for c in iter_induced_dicycles(d) if len(c) != t), None)


def is_t_chordal(d: Digraph, t: int) -> bool:
    return t_chordality_witness(d, t) is None


def class_cl_violation(d: Digraph, l: int) -> InducedCycle | InducedPath | None:
    """Witness that ``d`` is outside C_l, or None when it belongs.

    C_l: no induced directed cycle shorter than ``l`` and no induced directed
    path on exactly ``l`` vertices.
    """
    if l < 2:
        raise InvalidParameterError(f"l must be at least 2, got {l}")
    cycle = next(iter_induced_dicycles(d, max_length=l - 1), None)
    if cycle is not None:
        return cycle
    return find_induced_dipath(d, l)


def in_class_cl(d: Digraph, l: int) -> bool:
    return class_cl_violation(d, l) is None
