"""Graph substrate: directed-edge graphs, L-hop neighborhoods, coalition masks.

Players of the edge game are directed edges. An undirected dataset is stored
as two directed edges per pair; edge ids index the canonical edge list sorted
by (src, dst), and every tie-break elsewhere falls back to this order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InputError


@dataclass(frozen=True)
class Graph:
    """A directed graph with dense node features.

    Edges are normalized on construction: deduplicated and sorted by
    (src, dst). All objects are immutable after construction and safe to
    share across workers.
    """

    num_nodes: int
    edges: tuple[tuple[int, int], ...]
    features: np.ndarray
    labels: np.ndarray | None = None
    num_classes: int = 0

    def __post_init__(self) -> None:
        pairs = sorted({(int(s), int(d)) for s, d in self.edges})
        for s, d in pairs:
            if not (0 <= s < self.num_nodes and 0 <= d < self.num_nodes):
                raise InputError(f"edge ({s},{d}) references a node outside 0..{self.num_nodes - 1}")
        feats = np.asarray(self.features, dtype=np.float64)
        if feats.ndim != 2 or feats.shape[0] != self.num_nodes:
            raise InputError(f"features must be (num_nodes, dim), got {feats.shape} for {self.num_nodes} nodes")
        labels = self.labels
        if labels is not None:
            labels = np.asarray(labels, dtype=np.int64)
            if labels.shape != (self.num_nodes,):
                raise InputError(f"labels must have shape ({self.num_nodes},), got {labels.shape}")
        object.__setattr__(self, "edges", tuple(pairs))
        object.__setattr__(self, "features", feats)
        object.__setattr__(self, "labels", labels)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def srcs(self) -> np.ndarray:
        return np.array([s for s, _ in self.edges], dtype=np.int64)

    @cached_property
    def dsts(self) -> np.ndarray:
        return np.array([d for _, d in self.edges], dtype=np.int64)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """(src, dst) -> edge id."""
        return {pair: i for i, pair in enumerate(self.edges)}

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Per node, the sorted ids reachable by one edge in either direction."""
        adj: list[set[int]] = [set() for _ in range(self.num_nodes)]
        for s, d in self.edges:
            adj[s].add(d)
            adj[d].add(s)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def incident_edges(self) -> tuple[tuple[int, ...], ...]:
        """Per node, the sorted edge ids touching it as source or destination."""
        inc: list[list[int]] = [[] for _ in range(self.num_nodes)]
        for i, (s, d) in enumerate(self.edges):
            inc[s].append(i)
            if d != s:
                inc[d].append(i)
        return tuple(tuple(sorted(e)) for e in inc)


@dataclass(frozen=True)
class Subgraph:
    """The L-hop neighborhood of a target node: the universe of the edge game."""

    parent: Graph
    nodes: frozenset[int]
    edges: frozenset[int]
    target: int
    hops: int

    @cached_property
    def node_order(self) -> tuple[int, ...]:
        return tuple(sorted(self.nodes))

    @cached_property
    def local_index(self) -> dict[int, int]:
        """Parent node id -> row index in any masked graph built from here."""
        return {n: i for i, n in enumerate(self.node_order)}

    @cached_property
    def edge_order(self) -> tuple[int, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def local_endpoints(self) -> tuple[np.ndarray, np.ndarray]:
        """Local (src, dst) arrays aligned with `edge_order`."""
        srcs = np.array([self.local_index[self.parent.edges[e][0]] for e in self.edge_order], dtype=np.int64)
        dsts = np.array([self.local_index[self.parent.edges[e][1]] for e in self.edge_order], dtype=np.int64)
        return srcs, dsts

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def endpoints(self, edge_id: int) -> tuple[int, int]:
        return self.parent.edges[edge_id]


@dataclass(frozen=True)
class Coalition:
    """An insertion-ordered set of edge ids inside one subgraph universe."""

    edge_ids: tuple[int, ...]
    universe: Subgraph

    def __post_init__(self) -> None:
        seen: dict[int, None] = {}
        for e in self.edge_ids:
            seen.setdefault(int(e), None)
        ids = tuple(seen)
        outside = [e for e in ids if e not in self.universe.edges]
        if outside:
            raise InputError(f"coalition edges {outside} are not in the subgraph universe")
        object.__setattr__(self, "edge_ids", ids)

    @classmethod
    def empty(cls, universe: Subgraph) -> "Coalition":
        return cls((), universe)

    @classmethod
    def full(cls, universe: Subgraph) -> "Coalition":
        return cls(universe.edge_order, universe)

    def with_edges(self, edge_ids) -> "Coalition":
        return Coalition(self.edge_ids + tuple(edge_ids), self.universe)

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.edge_ids)

    def __len__(self) -> int:
        return len(self.edge_ids)

    def __iter__(self):
        return iter(self.edge_ids)

    def __contains__(self, edge_id: int) -> bool:
        return edge_id in self.member_set


def l_hop_subgraph(graph: Graph, target: int, hops: int) -> Subgraph:
    """Induced subgraph of all nodes within `hops` traversals (either edge
    direction) of `target`, with every parent edge between them."""
    if not 0 <= target < graph.num_nodes:
        raise InputError(f"target {target} outside 0..{graph.num_nodes - 1}")
    if hops < 1:
        raise InputError(f"hops must be >= 1, got {hops}")
    reached = {target}
    frontier_nodes = [target]
    for _ in range(hops):
        nxt = []
        for n in frontier_nodes:
            for m in graph.neighbors[n]:
                if m not in reached:
                    reached.add(m)
                    nxt.append(m)
        if not nxt:
            break
        frontier_nodes = nxt
    edge_ids = set()
    for n in reached:
        for e in graph.incident_edges[n]:
            s, d = graph.edges[e]
            if s in reached and d in reached:
                edge_ids.add(e)
    return Subgraph(parent=graph, nodes=frozenset(reached), edges=frozenset(edge_ids), target=target, hops=hops)


def mask_to_coalition(subgraph: Subgraph, coalition: Coalition) -> Graph:
    """Materialize the graph a coalition plays on: all subgraph nodes keep
    their features, and the edge list is exactly the coalition.

    Nodes are relabeled to `subgraph.node_order` positions; use
    `subgraph.local_index` to locate the target.
    """
    if coalition.universe is not subgraph:
        raise InputError("coalition belongs to a different subgraph universe")
    order = subgraph.node_order
    local = subgraph.local_index
    parent = subgraph.parent
    pairs = []
    for e in coalition:
        s, d = parent.edges[e]
        pairs.append((local[s], local[d]))
    rows = np.array(order, dtype=np.int64)
    labels = parent.labels[rows] if parent.labels is not None else None
    return Graph(
        num_nodes=len(order),
        edges=tuple(pairs),
        features=parent.features[rows],
        labels=labels,
        num_classes=parent.num_classes,
    )


def frontier(subgraph: Subgraph, selected: Coalition, target: int, anchors=None) -> tuple[int, ...]:
    """Candidate edges for growing `selected`.

    Empty selection: all subgraph edges incident to `target` (either
    direction). Otherwise: all unselected subgraph edges sharing an endpoint
    with an anchor edge (anchors default to the whole selection; pass the
    last chosen edges for last-edge growth).
    """
    parent = subgraph.parent
    if len(selected) == 0:
        return tuple(
            e for e in subgraph.edge_order if target in parent.edges[e]
        )
    anchor_ids = tuple(anchors) if anchors is not None else selected.edge_ids
    touched: set[int] = set()
    for e in anchor_ids:
        s, d = parent.edges[e]
        touched.add(s)
        touched.add(d)
    out = []
    for e in subgraph.edge_order:
        if e in selected:
            continue
        s, d = parent.edges[e]
        if s in touched or d in touched:
            out.append(e)
    return tuple(out)
