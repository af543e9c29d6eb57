"""Exact dicoloring: verification, k-dicolorability, dichromatic number, enumeration.

A k-dicoloring maps every vertex to a color in ``1..k`` so that no color
class contains a directed cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .digraph import Digraph, induced_subdigraph, strongly_connected_components
from .errors import BudgetExceededError, InvalidParameterError, UncoloredVertexError
from .formats import format_dicoloring


@dataclass(frozen=True)
class Dicoloring:
    colors: Mapping[int, int]
    k: int

    def __str__(self):
        return format_dicoloring(dict(self.colors), self.k)

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v in sorted(self.colors):
            out.setdefault(self.colors[v], []).append(v)
        return out


def find_directed_cycle(d: Digraph, allowed=None) -> list[int] | None:
    """Some directed cycle inside ``allowed`` (default: all vertices), or None."""
    members = set(d.vertices) if allowed is None else set(allowed)
    state = dict.fromkeys(members, 0)  # 0 new, 1 on stack, 2 done
    for root in sorted(members):
        if state[root]:
            continue
        state[root] = 1
        path = [root]
        iters = [iter(d.out_neighbors(root))]
        while iters:
            w = next(iters[-1], None)
            if w is None:
                state[path.pop()] = 2
                iters.pop()
                continue
            if w not in state:
                continue
            if state[w] == 1:
                return path[path.index(w):]
            if state[w] == 0:
                state[w] = 1
                path.append(w)
                iters.append(iter(d.out_neighbors(w)))
    return None


def verify_dicoloring(d: Digraph, coloring: Dicoloring | Mapping[int, int]) -> tuple[bool, list[int] | None]:
    """Check every color class is acyclic; return ``(ok, monochromatic_cycle)``."""
    colors = coloring.colors if isinstance(coloring, Dicoloring) else coloring
    missing = [v for v in d.vertices if v not in colors]
    if missing:
        raise UncoloredVertexError(f"vertices without a color: {missing}")
    classes: dict[int, list[int]] = {}
    for v in d.vertices:
        classes.setdefault(colors[v], []).append(v)
    for c in sorted(classes):
        cycle = find_directed_cycle(d, classes[c])
        if cycle is not None:
            return False, cycle
    return True, None


class _ClassForest:
    """Per-color membership with a cycle test for tentative insertions."""

    def __init__(self, d: Digraph, k: int):
        self.d = d
        self.color = [0] * (d.vertex_count + 1)
        self.k = k

    def closes_cycle(self, v: int, c: int) -> bool:
        # Would adding v to class c create a cycle? Only if some out-neighbour
        # of v in class c reaches an in-neighbour of v inside class c.
        d, color = self.d, self.color
        targets = {u for u in d.in_neighbors(v) if color[u] == c}
        if not targets:
            return False
        stack = [w for w in d.out_neighbors(v) if color[w] == c]
        seen = set(stack)
        while stack:
            x = stack.pop()
            if x in targets:
                return True
            for y in d.out_neighbors(x):
                if color[y] == c and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False


def _branch_order(d: Digraph) -> list[int]:
    return sorted(d.vertices, key=lambda v: (-len(d.neighbors(v)), v))


def is_k_dicolorable(d: Digraph, k: int) -> Dicoloring | None:
    """A k-dicoloring of ``d`` if one exists, else None (exact backtracking)."""
    if k < 0:
        raise InvalidParameterError(f"k must be non-negative, got {k}")
    n = d.vertex_count
    if n == 0:
        return Dicoloring({}, k)
    if k == 0:
        return None
    order = _branch_order(d)
    forest = _ClassForest(d, k)
    color = forest.color
    # choice[i] is the last color tried at order[i]; used[i] the number of
    # distinct colors among order[:i] (new colors open in index order only)
    choice = [0] * n
    used = [0] * (n + 1)
    i = 0
    while 0 <= i < n:
        v = order[i]
        if color[v]:
            color[v] = 0
        c = choice[i] + 1
        limit = min(k, used[i] + 1)
        while c <= limit and forest.closes_cycle(v, c):
            c += 1
        if c > limit:
            choice[i] = 0
            i -= 1
            continue
        choice[i] = c
        color[v] = c
        used[i + 1] = max(used[i], c)
        i += 1
    if i < 0:
        return None
    return Dicoloring({v: color[v] for v in d.vertices}, k)


def dichromatic_number(d: Digraph) -> tuple[int, Dicoloring]:
    """Exact dichromatic number with a witness, solved per strong component."""
    if d.vertex_count == 0:
        return 0, Dicoloring({}, 0)
    best = 1
    colors: dict[int, int] = {}
    for comp in strongly_connected_components(d):
        if len(comp) == 1:
            colors[comp[0]] = 1
            continue
        sub, relabel = induced_subdigraph(d, comp)
        back = {new: old for old, new in relabel.items()}
        k = 2
        while True:
            found = is_k_dicolorable(sub, k)
            if found is not None:
                break
            k += 1
        best = max(best, k)
        for new, c in found.colors.items():
            colors[back[new]] = c
    return best, Dicoloring(colors, best)


def enumerate_k_dicolorings(
    d: Digraph,
    k: int,
    visitor: Callable[[dict[int, int]], object] | None = None,
    budget: int = 10**7,
) -> int:
    """Visit every labeled k-dicoloring of ``d``; return how many were visited.

    No symmetry breaking: colorings that differ only by a permutation of
    color names are all visited. If ``visitor`` returns ``False`` the
    enumeration stops early (the count so far is returned). The visitor
    receives a fresh dict per call.
    """
    if k < 0:
        raise InvalidParameterError(f"k must be non-negative, got {k}")
    n = d.vertex_count
    if k ** n > budget:
        raise BudgetExceededError(f"{k}^{n} assignments exceed budget {budget}")
    if n == 0:
        if visitor is not None:
            visitor({})
        return 1
    forest = _ClassForest(d, k)
    color = forest.color
    count = 0
    i = 1
    choice = [0] * (n + 2)
    while i >= 1:
        if i > n:
            count += 1
            if visitor is not None and visitor({v: color[v] for v in d.vertices}) is False:
                return count
            i -= 1
            continue
        color[i] = 0
        c = choice[i] + 1
        while c <= k and forest.closes_cycle(i, c):
            c += 1
        if c > k:
            choice[i] = 0
            i -= 1
            continue
        choice[i] = c
        color[i] = c
        i += 1
    return count
