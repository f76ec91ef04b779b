"""Immutable rooted weighted tree with edges named by their head node.

Every non-root node has exactly one in-edge, so the head node's id doubles
as the edge id; there is no separate edge table. Node ids are dense ints
assigned by first appearance in the input edge list, and children lists are
kept sorted by id so every traversal downstream is deterministic.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (
    DuplicateParentError,
    NegativeWeightError,
    NotATreeError,
    TreeError,
    ZeroWeightWarning,
)
from .rational import parse_weight

NodeId = int
EdgeId = int  # the id of the edge's head node


@dataclass(frozen=True)
class RootedTree:
    """A validated rooted tree with non-negative exact rational edge weights.

    Attributes:
        node_count: number of nodes; ids are 0..node_count-1.
        root: id of the unique node with no parent.
        parent: per-node parent id, None for the root.
        children: per-node tuple of child ids, sorted ascending.
        weights: per-edge weight indexed by head id; the root slot is unused.
        labels: per-node text label, unique across the tree.
    """

    node_count: int
    root: NodeId
    parent: tuple[NodeId | None, ...]
    children: tuple[tuple[NodeId, ...], ...]
    weights: tuple[Fraction, ...]
    labels: tuple[str, ...]
    label_index: dict[str, NodeId] = field(repr=False, compare=False, default_factory=dict)

    # --- elementary queries ------------------------------------------- #

    def is_leaf(self, v: NodeId) -> bool:
        return not self.children[v]

    def leaves(self) -> frozenset[NodeId]:
        """All nodes with no out-edges."""
        return frozenset(v for v in range(self.node_count) if not self.children[v])

    def edges(self) -> Iterator[EdgeId]:
        """Every edge id, ascending (= every non-root node id)."""
        return (v for v in range(self.node_count) if v != self.root)

    def out_edges(self, v: NodeId) -> tuple[EdgeId, ...]:
        """Edge ids leaving ``v``, in canonical (ascending head id) order."""
        return self.children[v]

    def internal_edges(self) -> list[EdgeId]:
        """Edges whose head is not a leaf; the only contraction candidates."""
        return [v for v in self.edges() if self.children[v]]

    def edge_weight(self, e: EdgeId) -> Fraction:
        if e == self.root:
            raise TreeError("the root has no in-edge")
        return self.weights[e]

    def tail(self, e: EdgeId) -> NodeId:
        """The parent endpoint of edge ``e`` (its head is ``e`` itself)."""
        p = self.parent[e]
        if p is None:
            raise TreeError("the root has no in-edge")
        return p

    def subtree_leaves(self, e: EdgeId) -> frozenset[NodeId]:
        """Leaf descendants of head(e), including the head if it is a leaf."""
        found = []
        stack = [e]
        while stack:
            v = stack.pop()
            if self.children[v]:
                stack.extend(self.children[v])
            else:
                found.append(v)
        return frozenset(found)

    def node_id(self, label: str) -> NodeId:
        return self.label_index[label]

    def edge_by_child(self, child_label: str) -> EdgeId:
        """The edge whose head carries ``child_label``."""
        v = self.label_index[child_label]
        if v == self.root:
            raise TreeError(f"{child_label!r} is the root; it has no in-edge")
        return v

    def edge_triple(self, e: EdgeId) -> tuple[str, str, Fraction]:
        """(parent label, child label, weight) for edge ``e``."""
        return self.labels[self.tail(e)], self.labels[e], self.weights[e]


def from_edges(edges: Iterable[tuple[str, str, Fraction]]) -> RootedTree:
    """Build a validated RootedTree from (parent, child, weight) label triples.

    Node ids follow first appearance; the root is the unique label that never
    appears as a child. Raises DuplicateParentError when a child label repeats,
    NotATreeError when the parent relation is not a single rooted tree, and
    NegativeWeightError for weights below zero.
    """
    edge_list = list(edges)
    if not edge_list:
        raise NotATreeError("no edges given")

    ids: dict[str, NodeId] = {}
    labels: list[str] = []

    def intern(label: str) -> NodeId:
        v = ids.get(label)
        if v is None:
            v = len(labels)
            ids[label] = v
            labels.append(label)
        return v

    parent: list[NodeId | None] = []
    weight: list[Fraction] = []
    saw_zero = False
    for parent_label, child_label, w in edge_list:
        w = Fraction(w)
        u = intern(parent_label)
        c = intern(child_label)
        while len(parent) < len(labels):
            parent.append(None)
            weight.append(Fraction(0))
        if parent[c] is not None:
            raise DuplicateParentError(f"child label {child_label!r} has two in-edges")
        if c == u:
            raise NotATreeError(f"self-loop at {child_label!r}")
        if w < 0:
            raise NegativeWeightError(f"negative weight on edge to {child_label!r}: {w}")
        if w == 0:
            saw_zero = True
        parent[c] = u
        weight[c] = w

    roots = [v for v in range(len(labels)) if parent[v] is None]
    if len(roots) != 1:
        if not roots:
            raise NotATreeError("no root: every label has a parent (cycle)")
        names = ", ".join(repr(labels[v]) for v in roots)
        raise NotATreeError(f"not connected: multiple parentless labels ({names})")
    root = roots[0]

    n = len(labels)
    children: list[list[NodeId]] = [[] for _ in range(n)]
    for v in range(n):
        if v != root:
            children[parent[v]].append(v)  # type: ignore[index]

    # Reachability from the root catches cycles hanging off a valid-looking root.
    seen = 1
    stack = [root]
    visited = bytearray(n)
    visited[root] = 1
    while stack:
        v = stack.pop()
        for c in children[v]:
            if not visited[c]:
                visited[c] = 1
                seen += 1
                stack.append(c)
    if seen != n:
        raise NotATreeError("parent relation contains a cycle or unreachable nodes")

    if saw_zero:
        warnings.warn("tree contains zero-weight edges", ZeroWeightWarning, stacklevel=2)

    return RootedTree(
        node_count=n,
        root=root,
        parent=tuple(parent),
        children=tuple(tuple(sorted(cs)) for cs in children),
        weights=tuple(weight),
        labels=tuple(labels),
        label_index=ids,
    )


def build_tree(edges: Iterable[tuple[str, str, str]]) -> RootedTree:
    """Like :func:`from_edges` but with weights as exact decimal/rational text."""
    return from_edges((p, c, parse_weight(w)) for p, c, w in edges)


def contract_edge(t: RootedTree, e: EdgeId) -> RootedTree:
    """The tree with edge ``e`` contracted: head(e) merges into its parent.

    The head's out-edges are reattached to the parent with their weights and
    labels unchanged. Used by the exhaustive checks; the production algorithm
    contracts in-place via ContractionState instead of rebuilding.
    """
    if e == t.root:
        raise TreeError("cannot contract: the root has no in-edge")
    gone = e
    new_parent_label = t.labels[t.tail(e)]
    triples = []
    for f in t.edges():
        if f == gone:
            continue
        tail = t.tail(f)
        tail_label = new_parent_label if tail == gone else t.labels[tail]
        triples.append((tail_label, t.labels[f], t.weights[f]))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ZeroWeightWarning)
        return from_edges(triples)
