"""Graph rewrites that move a cactus toward the extremal shapes.

Each rewrite validates its own structural preconditions, keeps the input in
the same (n, k) cactus class, and changes the subpath number with a strict,
fixed sign:

  bridge_slide            pn up    absorbs a bridge into an adjacent cycle
  chain_straighten        pn up    lowers branching of the cycle-incidence tree
  shrink_interior_cycle   pn up    moves a vertex from an interior cycle to an end cycle
  balance_end_cycles      pn up    moves a vertex from the big end cycle to the small one
  cycle_to_triangle       pn down  expels a vertex from a long cycle onto a bridge
  split_interior_triangle pn down  strips one branch vertex of an interior triangle

Free choices (which bridge, which neighbor, ...) default to the smallest
valid labels so results are reproducible; the monotonicity holds for every
valid choice, so callers may also pass choices explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counting import cactus_path_count
from .graphs import (
    CactusProfile,
    CigNode,
    Graph,
    cycle_incidence_graph,
    is_cactus_chain,
    validate_cactus,
)


class TransformError(Exception):
    """The rewrite's structural precondition does not hold."""


class FixpointError(Exception):
    """A fixpoint driver exceeded its iteration cap."""


@dataclass(frozen=True)
class TransformResult:
    rule: str
    before: Graph
    after: Graph
    pn_before: int
    pn_after: int
    removed: tuple[tuple[int, int], ...]
    added: tuple[tuple[int, int], ...]

    @property
    def delta(self) -> int:
        return self.pn_after - self.pn_before

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "before": self.before.to_json(),
            "after": self.after.to_json(),
            "pn_before": str(self.pn_before),
            "pn_after": str(self.pn_after),
            "removed": [list(e) for e in self.removed],
            "added": [list(e) for e in self.added],
        }


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _apply(rule: str, profile: CactusProfile, removed, added) -> TransformResult:
    g = profile.graph
    after = g
    for u, v in removed:
        after = after.remove_edge(u, v)
    for u, v in added:
        after = after.add_edge(u, v)
    return TransformResult(
        rule=rule,
        before=g,
        after=after,
        pn_before=cactus_path_count(profile),
        pn_after=cactus_path_count(validate_cactus(after)),
        removed=tuple(_norm(u, v) for u, v in removed),
        added=tuple(_norm(u, v) for u, v in added),
    )


def _ring_neighbors(block, u: int) -> tuple[int, int]:
    ring = block.vertices
    i = ring.index(u)
    return ring[i - 1], ring[(i + 1) % len(ring)]


def bridge_slide(
    g: Graph, bridge: tuple[int, int] | None = None, w: int | None = None
) -> TransformResult:
    """Reroute a cycle through a bridge endpoint: for a bridge uv with v on
    cycle C and w a neighbor of v on C, replace vw by uw.  The bridge joins
    the enlarged cycle, pn strictly increases, and one bridge disappears."""
    profile = validate_cactus(g)
    if not profile.bridges:
        raise TransformError("bridge_slide needs a bridge")
    candidates: list[tuple[int, int, int]] = []  # (u, v, w)
    cycle_blocks = [profile.tree.blocks[i] for i in profile.cycle_blocks]
    for a, b in profile.bridges:
        for u, v in ((a, b), (b, a)):
            for blk in cycle_blocks:
                if v in blk.vertex_set:
                    candidates.extend((u, v, x) for x in _ring_neighbors(blk, v))
    if bridge is not None:
        e = _norm(*bridge)
        candidates = [c for c in candidates if _norm(c[0], c[1]) == e]
        if not candidates:
            raise TransformError(f"edge {e} is not a bridge with an endpoint on a cycle")
    if w is not None:
        candidates = [c for c in candidates if c[2] == w]
        if not candidates:
            raise TransformError(f"vertex {w} is not a valid cycle neighbor here")
    if not candidates:
        raise TransformError("no bridge has an endpoint on a cycle")
    u, v, x = min(candidates)
    return _apply("bridge-slide", profile, removed=[(v, x)], added=[(u, x)])


def _cig_node_order(node: CigNode) -> tuple[int, int]:
    kind, payload = node
    return (0 if kind == "vertex" else 1, payload)


def _component_nodes(
    adj: dict[CigNode, tuple[CigNode, ...]], banned: CigNode
) -> list[list[CigNode]]:
    seen: set[CigNode] = {banned}
    comps: list[list[CigNode]] = []
    for start in sorted(adj, key=_cig_node_order):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            node = stack.pop()
            for other in adj[node]:
                if other not in seen:
                    seen.add(other)
                    comp.append(other)
                    stack.append(other)
        comps.append(sorted(comp, key=_cig_node_order))
    return comps


def chain_straighten(g: Graph) -> TransformResult:
    """Detach a cycle from a branch point of the cycle-incidence tree and
    hang it on the far end of a smallest thread, strictly increasing pn."""
    profile = validate_cactus(g)
    if profile.bridges:
        raise TransformError("chain_straighten needs a bridgeless cactus")
    cig = cycle_incidence_graph(profile)
    if cig.is_path:
        raise TransformError("graph is already a cactus chain")
    adj = cig.adjacency
    branch_nodes = sorted(
        (node for node in cig.nodes if cig.degree(node) >= 3), key=_cig_node_order
    )

    def is_thread(comp: list[CigNode]) -> bool:
        return all(cig.degree(x) < 3 for x in comp)

    chosen = None
    for t in branch_nodes:
        comps = _component_nodes(adj, t)
        if sum(1 for c in comps if not is_thread(c)) <= 1:
            chosen = (t, comps)
            break
    assert chosen is not None  # a deepest branch node always qualifies
    t, comps = chosen

    def g_vertices(comp: list[CigNode]) -> frozenset[int]:
        verts: set[int] = set()
        for kind, payload in comp:
            if kind == "cycle":
                verts.update(profile.tree.blocks[payload].vertex_set)
        return frozenset(verts)

    def comp_key(comp: list[CigNode]) -> tuple[int, tuple[int, int]]:
        return (len(g_vertices(comp)), _cig_node_order(comp[0]))

    threads = sorted((c for c in comps if is_thread(c)), key=comp_key)
    others = [c for c in comps if not is_thread(c)]
    t1 = threads[0]
    if others:
        tk = others[0]
    else:
        rest = [c for c in comps if c is not t1 and c is not threads[1]]
        tk = max(rest, key=comp_key)

    tk_set = set(map(tuple, tk))
    if t[0] == "vertex":
        u = t[1]
        cycle_node = next(
            other for other in adj[t] if tuple(other) in tk_set
        )
        c_idx = cycle_node[1]
    else:
        u_node = next(other for other in adj[t] if tuple(other) in tk_set)
        u = u_node[1]
        c_idx = min(
            other[1]
            for other in adj[u_node]
            if other != t and tuple(other) in tk_set
        )
    v, w = _ring_neighbors(profile.tree.blocks[c_idx], u)

    leaf_cycle = next(node for node in t1 if cig.degree(node) == 1)
    leaf_block = profile.tree.blocks[leaf_cycle[1]]
    z = min(x for x in leaf_block.vertex_set if g.degree(x) == 2)
    return _apply(
        "chain-straighten", profile, removed=[(u, v), (u, w)], added=[(z, v), (z, w)]
    )


def _chain_profile(g: Graph) -> CactusProfile:
    profile = validate_cactus(g)
    if not is_cactus_chain(profile):
        raise TransformError("this rewrite needs a bridgeless cactus chain")
    return profile


def shrink_interior_cycle(g: Graph) -> TransformResult:
    """On a cactus chain, pull a non-intersection vertex u out of an interior
    cycle of length >= 4 and splice it into the end cycle on the smaller
    side, strictly increasing pn."""
    profile = _chain_profile(g)
    targets = [
        i for i in profile.interior_cycles if len(profile.tree.blocks[i]) >= 4
    ]
    if not targets:
        raise TransformError("every interior cycle is already a triangle")
    c_idx = targets[0]
    blk = profile.tree.blocks[c_idx]
    u = min(v for v in blk.vertex_set if v not in profile.intersection_vertices)
    v, w = _ring_neighbors(blk, u)

    removed_c = blk.vertex_set
    comps: list[set[int]] = []
    seen: set[int] = set(removed_c)
    for start in range(g.n):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(comp)
    assert len(comps) == 2, "an interior cycle splits a chain into two sides"
    comps.sort(key=lambda c: (len(c), min(c)))
    side = comps[0]
    end_block = next(
        profile.tree.blocks[i]
        for i in profile.end_cycles
        if profile.tree.blocks[i].vertex_set & side
    )
    a = min(
        x
        for x in end_block.vertex_set
        if x in side and x not in profile.intersection_vertices
    )
    b = min(g.adjacency[a])
    return _apply(
        "shrink",
        profile,
        removed=[(u, v), (u, w), (a, b)],
        added=[(u, a), (u, b), (v, w)],
    )


def balance_end_cycles(g: Graph) -> TransformResult:
    """On a cactus chain whose interior cycles are all triangles, move one
    vertex from the larger end cycle to the smaller, strictly increasing
    pn."""
    profile = _chain_profile(g)
    if any(len(profile.tree.blocks[i]) >= 4 for i in profile.interior_cycles):
        raise TransformError("shrink interior cycles to triangles first")
    if len(profile.end_cycles) != 2:
        raise TransformError("needs a chain with two end cycles")
    e1, e2 = (profile.tree.blocks[i] for i in profile.end_cycles)
    big, small = sorted((e1, e2), key=lambda b: (-len(b), b.vertices))
    if len(big) - len(small) <= 1:
        raise TransformError("end cycles already differ by at most one")
    u = min(x for x in big.vertex_set if x not in profile.intersection_vertices)
    v, w = _ring_neighbors(big, u)
    a = min(x for x in small.vertex_set if x not in profile.intersection_vertices)
    b = min(_ring_neighbors(small, a))
    return _apply(
        "balance",
        profile,
        removed=[(u, v), (u, w), (a, b)],
        added=[(v, w), (u, a), (u, b)],
    )


def cycle_to_triangle(
    g: Graph, u: int | None = None, v: int | None = None
) -> TransformResult:
    """Shrink a cycle of length >= 4: remove a cycle edge uv and connect v to
    u's other cycle neighbor w, leaving u hanging on the new bridge uw.
    pn strictly decreases (this inverts bridge_slide)."""
    profile = validate_cactus(g)
    candidates: list[tuple[int, int, int]] = []
    for i in profile.cycle_blocks:
        blk = profile.tree.blocks[i]
        if len(blk) < 4:
            continue
        for x in blk.vertices:
            p, q = _ring_neighbors(blk, x)
            candidates.append((x, p, q))
            candidates.append((x, q, p))
    if not candidates:
        raise TransformError("every cycle is already a triangle")
    if u is not None:
        candidates = [c for c in candidates if c[0] == u]
    if v is not None:
        candidates = [c for c in candidates if c[1] == v]
    if not candidates:
        raise TransformError("no cycle of length >= 4 through the given vertices")
    x, p, q = min(candidates)
    return _apply("to-triangle", profile, removed=[(x, p)], added=[(p, q)])


def split_interior_triangle(g: Graph, triangle: int | None = None) -> TransformResult:
    """In an all-triangle cactus, take an interior triangle with branch
    vertices u1, u2 and reattach every outside edge of u2 to u1, strictly
    decreasing pn and making the triangle an end triangle."""
    profile = validate_cactus(g)
    if any(len(profile.tree.blocks[i]) >= 4 for i in profile.cycle_blocks):
        raise TransformError("every cycle must be a triangle first")
    if not profile.interior_cycles:
        raise TransformError("no interior triangle")
    c_idx = profile.interior_cycles[0] if triangle is None else triangle
    if c_idx not in profile.interior_cycles:
        raise TransformError(f"block {c_idx} is not an interior triangle")
    blk = profile.tree.blocks[c_idx]
    busy = sorted(x for x in blk.vertex_set if g.degree(x) > 2)
    u1, u2 = busy[0], busy[1]
    outside = [x for x in g.adjacency[u2] if x not in blk.vertex_set]
    return _apply(
        "split",
        profile,
        removed=[(u2, x) for x in outside],
        added=[(u1, x) for x in outside],
    )


MAX_RULES = ("bridge-slide", "chain-straighten", "shrink", "balance")
MIN_RULES = ("to-triangle", "split")

RULES = {
    "bridge-slide": bridge_slide,
    "chain-straighten": chain_straighten,
    "shrink": shrink_interior_cycle,
    "balance": balance_end_cycles,
    "to-triangle": cycle_to_triangle,
    "split": split_interior_triangle,
}


def _step_cap(g: Graph, cap: int | None) -> int:
    profile = validate_cactus(g)
    return cap if cap is not None else g.n + profile.k + g.m


def maximize_to_fixpoint(
    g: Graph, cap: int | None = None
) -> tuple[Graph, list[TransformResult]]:
    """Apply the pn-increasing rewrites until none fires.  For k >= 2 the
    fixpoint is the balanced pseudo triangle chain; for k = 1 it is the
    cycle; trees admit no rewrite at all."""
    limit = _step_cap(g, cap)
    history: list[TransformResult] = []
    cur = g
    while True:
        profile = validate_cactus(cur)
        if profile.bridges and profile.k >= 1:
            step = bridge_slide(cur)
        elif profile.k >= 2 and not is_cactus_chain(profile):
            step = chain_straighten(cur)
        elif profile.k >= 2 and any(
            len(profile.tree.blocks[i]) >= 4 for i in profile.interior_cycles
        ):
            step = shrink_interior_cycle(cur)
        else:
            if profile.k >= 2:
                e1, e2 = (profile.tree.blocks[i] for i in profile.end_cycles)
                if abs(len(e1) - len(e2)) >= 2:
                    step = balance_end_cycles(cur)
                else:
                    break
            else:
                break
        history.append(step)
        cur = step.after
        if len(history) > limit:
            raise FixpointError(f"no fixpoint within {limit} rewrites")
    return cur, history


def minimize_to_fixpoint(
    g: Graph, cap: int | None = None
) -> tuple[Graph, list[TransformResult]]:
    """Apply the pn-decreasing rewrites until every cycle is an end
    triangle."""
    limit = _step_cap(g, cap)
    history: list[TransformResult] = []
    cur = g
    while True:
        profile = validate_cactus(cur)
        if any(len(profile.tree.blocks[i]) >= 4 for i in profile.cycle_blocks):
            step = cycle_to_triangle(cur)
        elif profile.interior_cycles:
            step = split_interior_triangle(cur)
        else:
            break
        history.append(step)
        cur = step.after
        if len(history) > limit:
            raise FixpointError(f"no fixpoint within {limit} rewrites")
    return cur, history
