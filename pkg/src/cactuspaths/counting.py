"""Exact subpath counting.

The subpath number of a graph is the number of its simple paths, counting
the n trivial single-vertex paths and counting every nontrivial path once
per unordered endpoint pair.  count_paths / count_paths_between enumerate
paths directly and serve as the oracle for everything else; the cactus
counters use the block-cut tree and the 2^c pair rule instead.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .graphs import CYCLE, CactusProfile, Graph

DEFAULT_BUDGET = 10**9
_BUDGET_ENV = "CACTUSPATHS_BUDGET"


class BudgetExceededError(Exception):
    """The exhaustive search exceeded its extension-step budget."""


def work_budget(budget: int | None = None) -> int:
    """Explicit budget, else the CACTUSPATHS_BUDGET env var, else the default."""
    if budget is not None:
        if budget <= 0:
            raise ValueError("work budget must be positive")
        return budget
    env = os.environ.get(_BUDGET_ENV)
    if env is not None:
        value = int(env)
        if value <= 0:
            raise ValueError("work budget must be positive")
        return value
    return DEFAULT_BUDGET


def count_paths(g: Graph, budget: int | None = None) -> int:
    """Total number of simple paths in g, by exhaustive extension.

    Works per connected component, so disconnected inputs are fine.  Each
    nontrivial path is counted once by requiring start < end.
    """
    limit = work_budget(budget)
    masks = g.adjacency_masks
    total = g.n  # trivial length-0 paths
    steps = 0
    for s in range(g.n):
        stack = [(s, 1 << s)]
        while stack:
            v, visited = stack.pop()
            ext = masks[v] & ~visited
            while ext:
                bit = ext & -ext
                ext ^= bit
                steps += 1
                if steps > limit:
                    raise BudgetExceededError(
                        f"path enumeration exceeded {limit} extension steps"
                    )
                u = bit.bit_length() - 1
                if u > s:
                    total += 1
                stack.append((u, visited | bit))
    return total


def count_paths_between(g: Graph, x: int, y: int, budget: int | None = None) -> int:
    """Number of simple x-y paths in g, by exhaustive extension."""
    if x == y:
        raise ValueError("endpoints must be distinct")
    limit = work_budget(budget)
    masks = g.adjacency_masks
    target = 1 << y
    steps = 0
    total = 0
    stack = [(x, 1 << x)]
    while stack:
        v, visited = stack.pop()
        ext = masks[v] & ~visited
        while ext:
            bit = ext & -ext
            ext ^= bit
            steps += 1
            if steps > limit:
                raise BudgetExceededError(
                    f"path enumeration exceeded {limit} extension steps"
                )
            if bit == target:
                total += 1
                continue  # a simple path cannot revisit y later
            stack.append((bit.bit_length() - 1, visited | bit))
    return total


@dataclass(frozen=True)
class PairCycleCount:
    """Number of cycle blocks on the block-tree route between two vertices."""

    x: int
    y: int
    c: int


# Block-cut tree nodes, for routing purposes: ("cut", vertex) or ("block", i).
_BctNode = tuple[str, int]


def _bct_adjacency(profile: CactusProfile) -> dict[_BctNode, list[_BctNode]]:
    adj: dict[_BctNode, list[_BctNode]] = {}
    for i in range(len(profile.tree.blocks)):
        adj[("block", i)] = []
    for v in profile.tree.cut_vertices:
        adj[("cut", v)] = []
    for i, cuts in enumerate(profile.tree.incidence):
        for v in cuts:
            adj[("block", i)].append(("cut", v))
            adj[("cut", v)].append(("block", i))
    return adj


def _locate(profile: CactusProfile, v: int) -> _BctNode:
    if v in profile.tree.cut_vertices:
        return ("cut", v)
    return ("block", profile.tree.block_of_vertex[v])


def _is_cycle_node(profile: CactusProfile, node: _BctNode) -> bool:
    return node[0] == "block" and profile.tree.blocks[node[1]].kind == CYCLE


def cycles_on_route(profile: CactusProfile, x: int, y: int) -> PairCycleCount:
    """Count the cycle blocks on the block-tree path between x and y.

    A cut-vertex endpoint contributes no block of its own, so only cycles
    strictly between the endpoints (plus a shared cycle block) are counted.
    """
    if x == y:
        raise ValueError("endpoints must be distinct")
    g = profile.graph
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValueError("vertex out of range")
    src = _locate(profile, x)
    dst = _locate(profile, y)
    if src == dst:
        return PairCycleCount(x, y, 1 if _is_cycle_node(profile, src) else 0)
    adj = _bct_adjacency(profile)
    # BFS from src, tracking the cycle-block count along the unique path.
    count = {src: 1 if _is_cycle_node(profile, src) else 0}
    queue = [src]
    while queue:
        nxt = []
        for node in queue:
            for other in adj[node]:
                if other not in count:
                    count[other] = count[node] + (
                        1 if _is_cycle_node(profile, other) else 0
                    )
                    nxt.append(other)
        queue = nxt
    return PairCycleCount(x, y, count[dst])


def cactus_count_between(profile: CactusProfile, x: int, y: int) -> int:
    """Number of simple x-y paths in a cactus: 2^c with c cycles en route."""
    return 1 << cycles_on_route(profile, x, y).c


def cactus_path_count(profile: CactusProfile) -> int:
    """Subpath number of a cactus: n + sum over unordered pairs of 2^c.

    Vertices are grouped by their block-cut-tree location and one BFS per
    location aggregates all pairs, so the whole sum is O(n^2).
    """
    g = profile.graph
    if g.n <= 1:
        return g.n
    adj = _bct_adjacency(profile)
    occupants: dict[_BctNode, int] = {}
    for v in range(g.n):
        node = _locate(profile, v)
        occupants[node] = occupants.get(node, 0) + 1
    nodes = sorted(occupants)
    index = {node: i for i, node in enumerate(nodes)}
    total = g.n
    for node in nodes:
        cnt = occupants[node]
        here_cyc = 1 if _is_cycle_node(profile, node) else 0
        if cnt >= 2:
            total += (cnt * (cnt - 1) // 2) << here_cyc
        # pairs with occupants of strictly later locations
        count = {node: here_cyc}
        queue = [node]
        while queue:
            nxt = []
            for cur in queue:
                for other in adj[cur]:
                    if other not in count:
                        count[other] = count[cur] + (
                            1 if _is_cycle_node(profile, other) else 0
                        )
                        nxt.append(other)
            queue = nxt
        for other, c in count.items():
            if other in occupants and index[other] > index[node]:
                total += (cnt * occupants[other]) << c
    return total
