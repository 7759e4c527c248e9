"""Immutable simple graphs, edge-list I/O, and block/bridge structure.

Vertices are dense integers 0..n-1 and edges are stored as sorted pairs so
that every iteration order in the package is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


class GraphError(Exception):
    """Base class for structural errors raised by this package."""


class ParseError(GraphError):
    """Malformed edge-list text."""


class MalformedLineError(ParseError):
    pass


class VertexRangeError(ParseError):
    pass


class SelfLoopError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class DisconnectedError(GraphError):
    """Operation requires a connected graph."""


class NotCactusError(GraphError):
    """Some block of the graph is neither an edge nor a cycle."""


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) not sorted or out of range for n={self.n}")

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        """Build a graph, normalizing each edge to a sorted pair."""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = _normalize_edge(u, v)
            if e in normalized:
                raise ValueError(f"duplicate edge {e}")
            normalized.add(e)
        return Graph(n, frozenset(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.sorted_edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = _normalize_edge(u, v)
        if e not in self.edges:
            raise ValueError(f"no edge {e} to remove")
        return Graph(self.n, self.edges - {e})

    def add_edge(self, u: int, v: int) -> "Graph":
        e = _normalize_edge(u, v)
        if e in self.edges:
            raise ValueError(f"edge {e} already present")
        return Graph(self.n, self.edges | {e})

    def relabel(self, perm) -> "Graph":
        """Apply the vertex relabeling v -> perm[v]."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges]}


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" header plus m lines of "u v" into a Graph.

    Raises a distinct ParseError subclass for malformed lines, out-of-range
    vertices, self-loops, and duplicate edges.
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise MalformedLineError("empty input, expected header line 'n m'")
    header = lines[0].split()
    if len(header) != 2:
        raise MalformedLineError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise MalformedLineError(f"header must be two integers, got {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise MalformedLineError(f"counts must be non-negative, got n={n} m={m}")
    if len(lines) - 1 != m:
        raise MalformedLineError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges: set[tuple[int, int]] = set()
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLineError(f"edge line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLineError(f"edge line must be two integers, got {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        e = _normalize_edge(u, v)
        if e in edges:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        edges.add(e)
    return Graph(n, frozenset(edges))


def to_edge_list_text(g: Graph) -> str:
    """Inverse of parse_edge_list, with edges in sorted order."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges)
    return "\n".join(lines) + "\n"


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (K_1 is connected)."""
    if g.n <= 1:
        return True
    seen = 1
    stack = [0]
    masks = g.adjacency_masks
    count = 1
    while stack:
        v = stack.pop()
        fresh = masks[v] & ~seen
        while fresh:
            bit = fresh & -fresh
            fresh ^= bit
            seen |= bit
            count += 1
            stack.append(bit.bit_length() - 1)
    return count == g.n


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        comps.append(tuple(sorted(comp)))
    return comps


def find_bridges(g: Graph) -> list[tuple[int, int]]:
    """All edges whose removal disconnects g, in lexicographic order.

    Single depth-first traversal with low-link values.
    """
    if not is_connected(g):
        raise DisconnectedError("find_bridges requires a connected graph")
    n = g.n
    disc = [-1] * n
    low = [0] * n
    bridges: list[tuple[int, int]] = []
    if n == 0:
        return bridges
    timer = 0
    # Iterative DFS; parent edge tracked to skip the tree edge back-step.
    stack: list[tuple[int, int, int]] = [(0, -1, 0)]  # (vertex, parent, next-neighbor index)
    adj = g.adjacency
    while stack:
        v, parent, idx = stack.pop()
        if idx == 0:
            disc[v] = low[v] = timer
            timer += 1
        if idx < len(adj[v]):
            stack.append((v, parent, idx + 1))
            u = adj[v][idx]
            if u == parent:
                continue
            if disc[u] == -1:
                stack.append((u, v, 0))
            else:
                low[v] = min(low[v], disc[u])
        else:
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridges.append(_normalize_edge(parent, v))
    return sorted(bridges)


BRIDGE = "bridge"
CYCLE = "cycle"
OTHER = "other"


@dataclass(frozen=True)
class Block:
    """A block of the block-cut tree.

    kind is "bridge" (a single bridge edge), "cycle" (a chordless cycle,
    vertices given in cyclic order), or "other" (a 2-connected block that is
    not a cycle; only possible outside the cactus class).
    """

    kind: str
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


def _cycle_order(vertices: set[int], edges: list[tuple[int, int]]) -> tuple[int, ...]:
    """Canonical traversal of a cycle block: start at the minimum vertex and
    step first to its smaller neighbor."""
    nbrs: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    start = min(vertices)
    order = [start]
    prev = start
    cur = min(nbrs[start])
    while cur != start:
        order.append(cur)
        a, b = nbrs[cur]
        nxt = b if a == prev else a
        prev, cur = cur, nxt
    return tuple(order)


@dataclass(frozen=True)
class BlockCutTree:
    """Blocks and cut vertices of a connected graph.

    incidence[i] lists the cut vertices lying on blocks[i]; the bipartite
    graph on blocks and cut vertices defined this way is a tree.
    """

    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    incidence: tuple[tuple[int, ...], ...]

    @cached_property
    def blocks_of_cut_vertex(self) -> dict[int, tuple[int, ...]]:
        at: dict[int, list[int]] = {v: [] for v in self.cut_vertices}
        for i, cuts in enumerate(self.incidence):
            for v in cuts:
                at[v].append(i)
        return {v: tuple(ids) for v, ids in at.items()}

    @cached_property
    def block_of_vertex(self) -> dict[int, int]:
        """For each non-cut vertex, the index of its unique block."""
        home: dict[int, int] = {}
        for i, blk in enumerate(self.blocks):
            for v in blk.vertices:
                if v not in self.cut_vertices:
                    home[v] = i
        return home


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Decompose a connected graph into blocks and cut vertices.

    Hopcroft-Tarjan style single DFS with an edge stack; blocks are reported
    in a deterministic (sorted) order.
    """
    if not is_connected(g):
        raise DisconnectedError("block_cut_tree requires a connected graph")
    n = g.n
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    raw_blocks: list[list[tuple[int, int]]] = []
    cut: set[bool] = set()
    if n == 0:
        return BlockCutTree((), frozenset(), ())

    root_children = 0
    stack: list[tuple[int, int, int]] = [(0, -1, 0)]
    while stack:
        v, parent, idx = stack.pop()
        if idx == 0:
            disc[v] = low[v] = timer
            timer += 1
        if idx < len(adj[v]):
            stack.append((v, parent, idx + 1))
            u = adj[v][idx]
            if u == parent:
                continue
            if disc[u] == -1:
                edge_stack.append((v, u))
                stack.append((u, v, 0))
            elif disc[u] < disc[v]:
                edge_stack.append((v, u))
                low[v] = min(low[v], disc[u])
        else:
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    # (parent, v) closes a block.
                    blk: list[tuple[int, int]] = []
                    while True:
                        e = edge_stack.pop()
                        blk.append(e)
                        if e == (parent, v):
                            break
                    raw_blocks.append(blk)
                    if parent == 0:
                        root_children += 1
                    else:
                        cut.add(parent)
    if root_children >= 2:
        cut.add(0)

    blocks: list[Block] = []
    for raw in raw_blocks:
        vertices = set()
        for u, v in raw:
            vertices.add(u)
            vertices.add(v)
        edges = sorted(_normalize_edge(u, v) for u, v in raw)
        if len(edges) == 1:
            blocks.append(Block(BRIDGE, tuple(edges[0]), tuple(edges)))
        elif len(edges) == len(vertices):
            blocks.append(Block(CYCLE, _cycle_order(vertices, edges), tuple(edges)))
        else:
            blocks.append(Block(OTHER, tuple(sorted(vertices)), tuple(edges)))
    blocks.sort(key=lambda b: b.edges)
    incidence = tuple(
        tuple(v for v in sorted(b.vertex_set) if v in cut) for b in blocks
    )
    return BlockCutTree(tuple(blocks), frozenset(cut), incidence)


@dataclass(frozen=True)
class CactusProfile:
    """Validated cactus metadata on top of the block-cut tree."""

    graph: Graph
    tree: BlockCutTree
    k: int
    bridges: tuple[tuple[int, int], ...]
    end_cycles: tuple[int, ...]
    interior_cycles: tuple[int, ...]
    intersection_vertices: frozenset[int]

    @cached_property
    def cycle_blocks(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.tree.blocks) if b.kind == CYCLE)

    @property
    def is_bridgeless(self) -> bool:
        return not self.bridges

    def to_json(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "tree": {
                "blocks": [
                    {"kind": b.kind, "vertices": list(b.vertices)}
                    for b in self.tree.blocks
                ],
                "cut_vertices": sorted(self.tree.cut_vertices),
            },
            "k": self.k,
            "bridges": [list(e) for e in self.bridges],
            "cycles": [list(self.tree.blocks[i].vertices) for i in self.cycle_blocks],
            "end_cycles": list(self.end_cycles),
            "interior_cycles": list(self.interior_cycles),
            "intersection_vertices": sorted(self.intersection_vertices),
        }


def validate_cactus(g: Graph) -> CactusProfile:
    """Check the cactus condition (every block an edge or a cycle) and build
    the profile: cycle rank, bridges, end/interior cycle classification and
    intersection vertices."""
    tree = block_cut_tree(g)
    for b in tree.blocks:
        if b.kind == OTHER:
            raise NotCactusError(
                f"block on vertices {b.vertices} is neither an edge nor a cycle"
            )
    cycle_ids = [i for i, b in enumerate(tree.blocks) if b.kind == CYCLE]
    k = len(cycle_ids)
    if k != g.m - g.n + 1:
        raise AssertionError("cycle rank mismatch in cactus decomposition")
    bridges = tuple(b.edges[0] for b in tree.blocks if b.kind == BRIDGE)
    end_cycles = []
    interior_cycles = []
    for i in cycle_ids:
        busy = sum(1 for v in tree.blocks[i].vertices if g.degree(v) > 2)
        (end_cycles if busy <= 1 else interior_cycles).append(i)
    in_cycles: dict[int, int] = {}
    for i in cycle_ids:
        for v in tree.blocks[i].vertices:
            in_cycles[v] = in_cycles.get(v, 0) + 1
    intersection = frozenset(v for v, c in in_cycles.items() if c >= 2)
    return CactusProfile(
        graph=g,
        tree=tree,
        k=k,
        bridges=tuple(sorted(bridges)),
        end_cycles=tuple(end_cycles),
        interior_cycles=tuple(interior_cycles),
        intersection_vertices=intersection,
    )


def is_cactus(g: Graph) -> bool:
    try:
        validate_cactus(g)
        return True
    except (NotCactusError, DisconnectedError):
        return False


# Nodes of the cycle-incidence graph: ("cycle", block index) or ("vertex", v).
CigNode = tuple[str, int]


@dataclass(frozen=True)
class CycleIncidenceGraph:
    """Bipartite tree on the cycles and intersection vertices of a bridgeless
    cactus; a cactus chain is exactly a profile whose tree here is a path."""

    cycles: tuple[int, ...]
    vertices: tuple[int, ...]
    links: tuple[tuple[int, int], ...]  # (vertex, cycle block index) pairs

    @cached_property
    def nodes(self) -> tuple[CigNode, ...]:
        return tuple(("vertex", v) for v in self.vertices) + tuple(
            ("cycle", c) for c in self.cycles
        )

    @cached_property
    def adjacency(self) -> dict[CigNode, tuple[CigNode, ...]]:
        nbrs: dict[CigNode, list[CigNode]] = {node: [] for node in self.nodes}
        for v, c in self.links:
            nbrs[("vertex", v)].append(("cycle", c))
            nbrs[("cycle", c)].append(("vertex", v))
        return {node: tuple(sorted(ns)) for node, ns in nbrs.items()}

    def degree(self, node: CigNode) -> int:
        return len(self.adjacency[node])

    @cached_property
    def leaves(self) -> tuple[CigNode, ...]:
        if len(self.nodes) <= 1:
            return ()
        return tuple(n for n in self.nodes if self.degree(n) == 1)

    @property
    def is_path(self) -> bool:
        return all(self.degree(n) <= 2 for n in self.nodes)


def cycle_incidence_graph(profile: CactusProfile) -> CycleIncidenceGraph:
    """Restricted view of the block-cut tree for a bridgeless cactus."""
    if profile.bridges:
        raise GraphError("cycle_incidence_graph requires a bridgeless cactus")
    cycles = profile.cycle_blocks
    vertices = tuple(sorted(profile.intersection_vertices))
    links = []
    for c in cycles:
        for v in profile.tree.blocks[c].vertices:
            if v in profile.intersection_vertices:
                links.append((v, c))
    return CycleIncidenceGraph(cycles, vertices, tuple(sorted(links)))


def is_cactus_chain(profile: CactusProfile) -> bool:
    """True iff the cactus is bridgeless and its cycle-incidence graph is a
    path (single cycles and the one-vertex graph count as chains)."""
    if profile.bridges:
        return False
    return cycle_incidence_graph(profile).is_path
