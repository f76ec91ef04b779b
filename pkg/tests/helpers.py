"""Shared tree builders for the test suite."""

from __future__ import annotations

import random
import warnings
from fractions import Fraction

from avgcut import RootedTree, from_edges
from avgcut.errors import ZeroWeightWarning

# The 40-node golden tree: three branches under the root (edge weights 1, 2,
# 3), each with three mid nodes (weights 2,2,2 / 3,3,3 / 1,1,1), each mid
# node with three leaves (weights 3 / 1 / 2 by branch).
_BRANCHES = {1: ("1", "2", "3"), 2: ("2", "3", "1"), 3: ("3", "1", "2")}


def figure_edge_rows() -> list[tuple[str, str, str]]:
    rows = []
    for i in (1, 2, 3):
        root_w, mid_w, leaf_w = _BRANCHES[i]
        rows.append(("v0", f"a{i}", root_w))
        for j in (1, 2, 3):
            rows.append((f"a{i}", f"b{i}{j}", mid_w))
            for k in (1, 2, 3):
                rows.append((f"b{i}{j}", f"c{i}{j}{k}", leaf_w))
    return rows


def figure_edgelist_text() -> str:
    return "# golden 40-node tree\n" + "".join(
        f"{p}\t{c}\t{w}\n" for p, c, w in figure_edge_rows()
    )


def figure_max_cut_children() -> set[str]:
    """Child labels of the known optimal max cut: all weight-3 edges that
    survive contraction (nine leaves of branch 1, branch 2's mid edges, and
    the root edge into branch 3)."""
    labels = {f"c1{j}{k}" for j in (1, 2, 3) for k in (1, 2, 3)}
    labels.update({"b21", "b22", "b23", "a3"})
    return labels


def quiet_tree(triples) -> RootedTree:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ZeroWeightWarning)
        return from_edges(list(triples))


def path_tree(*weights) -> RootedTree:
    """Chain n0 -> n1 -> ... with the given weights."""
    return quiet_tree(
        (f"n{i}", f"n{i + 1}", Fraction(w)) for i, w in enumerate(weights)
    )


def star_tree(*weights) -> RootedTree:
    """Root r with one leaf per weight."""
    return quiet_tree(("r", f"l{i}", Fraction(w)) for i, w in enumerate(weights))


_WEIGHT_POOLS = (
    lambda rng: Fraction(rng.randint(0, 6)),
    lambda rng: Fraction(rng.randint(1, 8), rng.randint(1, 5)),
    lambda rng: Fraction(rng.choice((1, 2, 3))),
    lambda rng: rng.choice(
        (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(0))
    ),
)


def random_tree(rng: random.Random, min_nodes: int = 4, max_nodes: int = 25) -> RootedTree:
    """A random rooted tree with duplicate-prone rational weights.

    A per-tree chain bias produces long out-degree-1 runs (exercising the
    infinite-contractibility convention) alongside bushy regions, and the
    small weight pools force contractibility ties.
    """
    n = rng.randint(min_nodes, max_nodes)
    chain_bias = rng.random() * 0.8
    pool = rng.choice(_WEIGHT_POOLS)
    edges = []
    for i in range(1, n):
        parent = i - 1 if rng.random() < chain_bias else rng.randrange(i)
        edges.append((f"n{parent}", f"n{i}", pool(rng)))
    rng.shuffle(edges)
    return quiet_tree(edges)


def edge_set_by_children(t: RootedTree, labels) -> frozenset[int]:
    return frozenset(t.edge_by_child(lb) for lb in labels)
