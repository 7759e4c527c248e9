"""Wiener index and subtree number, for the cross-comparison sweeps."""

from __future__ import annotations

from dataclasses import dataclass

from .counting import BudgetExceededError, cactus_path_count, count_paths, work_budget
from .graphs import (
    DisconnectedError,
    Graph,
    NotCactusError,
    is_connected,
    validate_cactus,
)


def wiener(g: Graph) -> int:
    """Sum of shortest-path distances over unordered vertex pairs."""
    if not is_connected(g):
        raise DisconnectedError("wiener index requires a connected graph")
    masks = g.adjacency_masks
    total = 0
    for s in range(g.n):
        seen = 1 << s
        frontier = seen
        dist = 0
        while frontier:
            dist += 1
            nxt = 0
            f = frontier
            while f:
                bit = f & -f
                f ^= bit
                nxt |= masks[bit.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
            total += dist * bin(frontier).count("1")
    return total // 2


def subtree_count(g: Graph, budget: int | None = None) -> int:
    """Number of non-empty subtrees: connected acyclic subgraphs, identified
    by their (vertex set, edge set) pair; single vertices count.

    Brute force: grow every tree edge by edge, each step attaching an edge
    that brings in a new vertex, deduplicating grown states.
    """
    limit = work_budget(budget)
    edges = g.sorted_edges
    m = len(edges)
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    steps = 0
    seen: set[tuple[int, int]] = set()
    stack: list[tuple[int, int]] = []
    for i, (u, v) in enumerate(edges):
        state = ((1 << u) | (1 << v), 1 << i)
        seen.add(state)
        stack.append(state)
    while stack:
        vmask, emask = stack.pop()
        grow = vmask
        while grow:
            bit = grow & -grow
            grow ^= bit
            for i in incident[bit.bit_length() - 1]:
                if emask >> i & 1:
                    continue
                u, v = edges[i]
                vbits = (1 << u) | (1 << v)
                newbits = vbits & ~vmask
                if newbits == 0 or newbits == vbits:
                    continue  # both endpoints in (cycle) or unrelated half-check
                steps += 1
                if steps > limit:
                    raise BudgetExceededError(
                        f"subtree enumeration exceeded {limit} growth steps"
                    )
                state = (vmask | vbits, emask | (1 << i))
                if state not in seen:
                    seen.add(state)
                    stack.append(state)
    return g.n + len(seen)


@dataclass(frozen=True)
class InvariantTriple:
    """Subpath number, Wiener index, and subtree number of one graph."""

    pn: int
    wiener: int
    subtrees: int

    def to_json(self) -> dict:
        return {
            "pn": str(self.pn),
            "wiener": str(self.wiener),
            "subtrees": str(self.subtrees),
        }


def invariant_triple(g: Graph, budget: int | None = None) -> InvariantTriple:
    """All three invariants of a connected graph; the subpath number uses
    the fast cactus counter whenever the input is a cactus."""
    if not is_connected(g):
        raise DisconnectedError("invariant_triple requires a connected graph")
    try:
        pn = cactus_path_count(validate_cactus(g))
    except NotCactusError:
        pn = count_paths(g, budget=budget)
    return InvariantTriple(pn, wiener(g), subtree_count(g, budget=budget))
