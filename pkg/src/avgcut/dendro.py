"""Cutting hierarchical-clustering dendrograms into communities.

A linkage merge table is synthesized into a rooted weighted tree whose
leaves are the clustered items, the optimal average cut is computed on it,
and each cut edge becomes one community. The default edge weight is the
height gap between a merge and its child: a large gap above a cluster means
the cluster stayed intact over a long height range, so maximizing the
average gap selects stable communities even when they are many and small.
The alternative "height" scheme weights every edge by its parent's merge
height, for comparison experiments.
"""

from __future__ import annotations

import csv
import io
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .contraction import CutResult, Objective, optimal_average_cut
from .errors import (
    InvalidCutError,
    LinkageError,
    LinkageIndexError,
    NegativeGapError,
    ParseError,
    ZeroWeightWarning,
)
from .oracle import is_valid_cut
from .tree import RootedTree, from_edges


class Merge(NamedTuple):
    """One agglomeration row: clusters ``left`` and ``right`` join at
    ``height`` into a cluster of ``size`` items."""

    left: int
    right: int
    height: Fraction
    size: int


@dataclass(frozen=True)
class LinkageTable:
    """A hierarchical-clustering merge sequence over ``n_items`` items.

    Cluster indices below n_items are original items; index n_items + k is
    the cluster formed by merge k. Structural validation happens here;
    height monotonicity is checked when a tree is synthesized, so that
    non-monotone tables can still be constructed and rejected late with a
    precise error.
    """

    n_items: int
    merges: tuple[Merge, ...]

    def __post_init__(self):
        n = self.n_items
        if n < 2:
            raise LinkageError(f"need at least 2 items, got {n}")
        if len(self.merges) != n - 1:
            raise LinkageError(
                f"expected {n - 1} merges for {n} items, got {len(self.merges)}"
            )
        used: set[int] = set()
        for k, merge in enumerate(self.merges):
            if merge.left == merge.right:
                raise LinkageIndexError(f"merge {k} joins cluster {merge.left} with itself")
            for side in (merge.left, merge.right):
                if not (0 <= side < n + k):
                    raise LinkageIndexError(
                        f"merge {k} references cluster {side}, valid range is 0..{n + k - 1}"
                    )
                if side in used:
                    raise LinkageIndexError(
                        f"cluster {side} is merged twice (second time in merge {k})"
                    )
                used.add(side)
            expected = self.cluster_size(merge.left) + self.cluster_size(merge.right)
            if merge.size != expected:
                raise LinkageError(
                    f"merge {k} claims size {merge.size}, children sum to {expected}"
                )

    def cluster_size(self, index: int) -> int:
        return 1 if index < self.n_items else self.merges[index - self.n_items].size

    def cluster_height(self, index: int) -> Fraction:
        return Fraction(0) if index < self.n_items else self.merges[index - self.n_items].height

    def cluster_label(self, index: int) -> str:
        """Items keep their index as label; merged clusters get a c-prefix."""
        return str(index) if index < self.n_items else f"c{index}"


@dataclass(frozen=True)
class Partition:
    """Disjoint communities of item labels covering all items."""

    communities: tuple[frozenset[str], ...]

    def __iter__(self):
        return iter(self.communities)

    def __len__(self):
        return len(self.communities)

    def as_sets(self) -> list[set[str]]:
        return [set(c) for c in self.communities]


def _label_key(label: str):
    # Numeric labels sort numerically, everything else lexically after them.
    return (0, int(label), "") if label.isdigit() else (1, 0, label)


def linkage_to_tree(table: LinkageTable, scheme: str = "gap") -> RootedTree:
    """Synthesize the binary dendrogram tree for a linkage table.

    Edge weights: ``gap`` is parent merge height minus child height (items
    sit at height 0); ``height`` is the parent merge height itself. Raises
    NegativeGapError when heights decrease along the table.
    """
    if scheme not in ("gap", "height"):
        raise ValueError(f"unknown weight scheme: {scheme!r}")
    n = table.n_items
    triples = []
    for k, merge in enumerate(table.merges):
        parent_label = table.cluster_label(n + k)
        for side in (merge.left, merge.right):
            gap = merge.height - table.cluster_height(side)
            if gap < 0:
                raise NegativeGapError(
                    f"merge {k} at height {merge.height} is below cluster "
                    f"{side} at height {table.cluster_height(side)}"
                )
            weight = gap if scheme == "gap" else merge.height
            triples.append((parent_label, table.cluster_label(side), weight))
    with warnings.catch_warnings():
        # Equal merge heights legitimately produce zero gaps.
        warnings.simplefilter("ignore", ZeroWeightWarning)
        return from_edges(triples)


def communities_from_cut(t: RootedTree, cut) -> Partition:
    """One community per cut edge: the leaf labels below it.

    Communities are ordered by their smallest member (numeric labels sort
    numerically) so output is deterministic.
    """
    edges = set(cut)
    if not is_valid_cut(t, edges):
        raise InvalidCutError("not a root-separating boundary cut")
    groups = [
        frozenset(t.labels[v] for v in t.subtree_leaves(e)) for e in sorted(edges)
    ]
    groups.sort(key=lambda group: min(_label_key(member) for member in group))
    return Partition(tuple(groups))


def cluster(
    table: LinkageTable,
    objective: Objective = Objective.MAXIMIZE,
    scheme: str = "gap",
) -> tuple[Partition, CutResult]:
    """Full pipeline: synthesize the tree, cut it, report the communities."""
    tree = linkage_to_tree(table, scheme)
    result = optimal_average_cut(tree, objective)
    return communities_from_cut(tree, result.cut), result


def parse_linkage_csv(text: str) -> LinkageTable:
    """Parse ``left,right,height,size`` CSV rows into a LinkageTable.

    Heights are parsed exactly as decimal text. The item count is implied:
    m merge rows describe m + 1 items.
    """
    reader = csv.reader(io.StringIO(text))
    rows = [
        (lineno, row)
        for lineno, row in enumerate(reader, start=1)
        if row and any(cell.strip() for cell in row)
    ]
    if not rows:
        raise ParseError("empty linkage CSV")
    header_line, header_row = rows[0]
    header = [cell.strip() for cell in header_row]
    if header != ["left", "right", "height", "size"]:
        raise ParseError(
            f"expected header left,right,height,size, got {','.join(header)}",
            line=header_line,
        )
    merges = []
    for lineno, row in rows[1:]:
        if len(row) != 4:
            raise ParseError(f"expected 4 fields, got {len(row)}", line=lineno)
        left_text, right_text, height_text, size_text = (cell.strip() for cell in row)
        try:
            left, right, size = int(left_text), int(right_text), int(size_text)
        except ValueError:
            raise ParseError("left, right, and size must be integers", line=lineno) from None
        try:
            height = Fraction(height_text)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a decimal height: {height_text!r}", line=lineno) from None
        merges.append(Merge(left, right, height, size))
    return LinkageTable(n_items=len(merges) + 1, merges=tuple(merges))


def read_linkage_csv(path) -> LinkageTable:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_linkage_csv(fh.read())
