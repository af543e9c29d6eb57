"""Text formats: dgf digraphs, sets files, and certificate/coloring lines.

dgf::

    c optional comment
    p dgf <n> <m>
    a <u> <v>        (m lines, arc u -> v, 1-based)
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .digraph import Digraph
from .errors import NotIndependentError, ParseError, TChordalError


def _ints(tokens, lineno):
    try:
        return [int(x) for x in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_dgf(text: str) -> Digraph:
    header = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] != "dgf":
                raise ParseError("problem line must be 'p dgf <n> <m>'", lineno)
            n, m = _ints(tokens[2:], lineno)
            if n < 0 or m < 0:
                raise ParseError("negative count in problem line", lineno)
            header = (n, m)
        elif tokens[0] == "a":
            if header is None:
                raise ParseError("arc line before problem line", lineno)
            if len(tokens) != 3:
                raise ParseError("arc line must be 'a <u> <v>'", lineno)
            u, v = _ints(tokens[1:], lineno)
            n = header[0]
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"arc ({u}, {v}) outside 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            arcs.append((u, v, lineno))
        else:
            raise ParseError(f"unknown line type {tokens[0]!r}", lineno)
    if header is None:
        raise ParseError("missing problem line 'p dgf <n> <m>'")
    n, m = header
    if len(arcs) != m:
        raise ParseError(f"header declares {m} arcs, found {len(arcs)}")
    seen = set()
    for u, v, lineno in arcs:
        if (v, u) in seen:
            raise ParseError(f"digon: both ({u}, {v}) and ({v}, {u})", lineno)
        if (u, v) in seen:
            raise ParseError(f"duplicate arc ({u}, {v})", lineno)
        seen.add((u, v))
    return Digraph(n, seen)


def format_dgf(d: Digraph, comments: Sequence[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p dgf {d.vertex_count} {len(d.arcs)}")
    lines.extend(f"a {u} {v}" for u, v in d.sorted_arcs())
    return "\n".join(lines) + "\n"


def parse_sets_file(text: str, host: Digraph):
    """Parse ``s <v1> <v2> ...`` lines into an independent-set family of ``host``."""
    from .amplifier import IndependentSetFamily

    sets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] != "s":
            raise ParseError(f"expected 's <vertices>', got {tokens[0]!r}", lineno)
        members = _ints(tokens[1:], lineno)
        for v in members:
            if not 1 <= v <= host.vertex_count:
                raise ParseError(f"vertex {v} outside 1..{host.vertex_count}", lineno)
        sets.append(frozenset(members))
    try:
        return IndependentSetFamily(host, tuple(sets))
    except NotIndependentError:
        raise
    except TChordalError as exc:  # pragma: no cover - defensive
        raise ParseError(str(exc)) from exc


def format_sets(sets: Iterable[Iterable[int]]) -> str:
    return "".join("s " + " ".join(map(str, sorted(s))) + "\n" for s in sets)


def format_cycle(vertices: Sequence[int]) -> str:
    return f"cycle {len(vertices)}: " + " ".join(map(str, vertices))


def format_path(vertices: Sequence[int]) -> str:
    return f"path {len(vertices)}: " + " ".join(map(str, vertices))


def format_dicoloring(colors: dict[int, int], k: int) -> str:
    pairs = " ".join(f"{v}:{colors[v]}" for v in sorted(colors))
    return f"k={k}; {pairs}".rstrip()
