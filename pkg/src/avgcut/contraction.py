"""Greedy contraction search for the root cut of optimal average weight.

The answer returned is the out-edge boundary of the root's supernode after
repeatedly contracting the live internal edge whose contractibility most
exceeds (Maximize) or most undercuts (Minimize) the current root average,
stopping as soon as no live edge strictly beats it. An edge's
contractibility is the average weight its head's out-edges would add to a
cut that swapped the edge for them: (out_sum - weight) / (out_degree - 1).

Every comparison is exact. Weights are scaled once by their least common
denominator so the hot path runs on plain integers, and the priority queue
keys each candidate by a float approximation first with an exact
cross-multiplied ratio as tiebreak; float rounding is monotone, so the
composite key orders exactly while most comparisons stay on machine floats.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from typing import NamedTuple

from .errors import DeadEdgeError, EmptyCutError, LeafHeadError
from .tree import EdgeId, NodeId, RootedTree


class Objective(Enum):
    """Optimization direction; MINIMIZE reverses every comparison."""

    MAXIMIZE = "max"
    MINIMIZE = "min"

    def better(self, a, b) -> bool:
        """True when average ``a`` strictly improves on average ``b``."""
        return a > b if self is Objective.MAXIMIZE else a < b


class Contractibility:
    """A contractibility value: an exact rational or one of two infinities.

    Out-degree-1 heads make the defining denominator zero; the swap they
    describe changes a cut's total but not its size, so it is infinitely
    good or bad depending on the numerator's sign. A zero numerator is a
    neutral swap that is never taken (mapped to the never-contract side of
    the active objective), which also guarantees termination.
    """

    __slots__ = ("_rank", "_value")

    def __init__(self, rank: int, value: Fraction | None = None):
        # rank -1/+1 are the infinities; rank 0 carries a finite value.
        self._rank = rank
        self._value = value

    @classmethod
    def finite(cls, value) -> "Contractibility":
        return cls(0, Fraction(value))

    @property
    def is_finite(self) -> bool:
        return self._rank == 0

    @property
    def value(self) -> Fraction:
        if self._rank != 0:
            raise ValueError("infinite contractibility has no finite value")
        return self._value  # type: ignore[return-value]

    def _key(self) -> tuple[int, Fraction]:
        return (self._rank, self._value if self._rank == 0 else Fraction(0))

    @staticmethod
    def _coerce(other) -> "tuple[int, Fraction] | None":
        if isinstance(other, Contractibility):
            return other._key()
        if isinstance(other, (int, Fraction)):
            return (0, Fraction(other))
        return None

    def __eq__(self, other) -> bool:
        key = self._coerce(other)
        return NotImplemented if key is None else self._key() == key

    def __lt__(self, other) -> bool:
        key = self._coerce(other)
        return NotImplemented if key is None else self._key() < key

    def __le__(self, other) -> bool:
        key = self._coerce(other)
        return NotImplemented if key is None else self._key() <= key

    def __gt__(self, other) -> bool:
        key = self._coerce(other)
        return NotImplemented if key is None else self._key() > key

    def __ge__(self, other) -> bool:
        key = self._coerce(other)
        return NotImplemented if key is None else self._key() >= key

    def __hash__(self):
        return hash(self._key())

    def __str__(self) -> str:
        if self._rank > 0:
            return "+inf"
        if self._rank < 0:
            return "-inf"
        return str(self._value)

    def __repr__(self) -> str:
        return f"Contractibility({self})"


POSITIVE_INFINITY = Contractibility(1)
NEGATIVE_INFINITY = Contractibility(-1)


def edge_contractibility(
    t: RootedTree, e: EdgeId, objective: Objective = Objective.MAXIMIZE
) -> Contractibility:
    """Contractibility of ``e`` in the uncontracted tree ``t``."""
    kids = t.children[e]
    if not kids:
        raise LeafHeadError(f"edge {e} ends in a leaf and has no contractibility")
    numerator = sum((t.weights[c] for c in kids), start=Fraction(0)) - t.weights[e]
    if len(kids) >= 2:
        return Contractibility.finite(numerator / (len(kids) - 1))
    if numerator > 0:
        return POSITIVE_INFINITY
    if numerator < 0:
        return NEGATIVE_INFINITY
    return NEGATIVE_INFINITY if objective is Objective.MAXIMIZE else POSITIVE_INFINITY


class ContractionStep(NamedTuple):
    """One contraction, for traces: the edge, its contractibility when taken,
    the root average right after, and whether the merge touched the root."""

    edge: EdgeId
    contractibility: Contractibility
    root_average_after: Fraction
    merged_into_root: bool


@dataclass(frozen=True)
class CutResult:
    """An optimal cut reported in original edge ids, with exact statistics."""

    cut: frozenset[EdgeId]
    total: Fraction
    size: int
    average: Fraction
    contractions: tuple[EdgeId, ...]


class _ExactRatio:
    """Exact heap-key tiebreak: num/den by cross multiplication.

    den >= 0; den == 0 with num = +-1 encodes the infinities, which the
    same cross multiplication orders correctly against finite values.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int):
        self.num = num
        self.den = den

    def __lt__(self, other: "_ExactRatio") -> bool:
        return self.num * other.den < other.num * self.den

    def __eq__(self, other) -> bool:
        return self.num * other.den == other.num * self.den

    __hash__ = None  # type: ignore[assignment]


def _approx(num: int, den: int) -> float:
    # Correctly rounded, so float order never contradicts exact order.
    if den == 0:
        return math.inf if num > 0 else -math.inf
    try:
        return num / den
    except OverflowError:
        return math.inf if num > 0 else -math.inf


def _pair(weight: int, out_sum: int, out_count: int, maximize: bool) -> tuple[int, int]:
    """Contractibility of an edge as a (num, den) pair of scaled integers.

    (out_sum, out_count) aggregate the head supernode's live out-edges;
    out_count must be >= 1. den == 0 encodes the infinities.
    """
    num = out_sum - weight
    if out_count >= 2:
        return num, out_count - 1
    if num > 0:
        return 1, 0
    if num < 0:
        return -1, 0
    return (-1, 0) if maximize else (1, 0)


class ContractionState:
    """Mutable state of one contraction run over one tree.

    Holds the supernode partition (union-find over original node ids), the
    per-supernode live out-edge aggregates, and a lazy priority queue over
    live internal edges. Confine an instance to a single thread; separate
    runs on separate trees are independent.
    """

    def __init__(self, tree: RootedTree, objective: Objective = Objective.MAXIMIZE):
        self.tree = tree
        self.objective = objective
        self._maximize = objective is Objective.MAXIMIZE
        n = tree.node_count
        root = tree.root

        self._scale = reduce(math.lcm, (w.denominator for w in tree.weights), 1)
        scale = self._scale
        self._w = [
            w.numerator * (scale // w.denominator) for w in tree.weights
        ]  # root slot unused

        self._uf = list(range(n))
        self._uf_size = [1] * n
        # Per-representative aggregates over live out-edges, and the topmost
        # original node of each supernode (whose in-edge is the supernode's).
        self._sum = [0] * n
        self._cnt = [0] * n
        self._top = list(range(n))
        w = self._w
        for v in range(n):
            kids = tree.children[v]
            self._cnt[v] = len(kids)
            self._sum[v] = sum(w[c] for c in kids)

        self._alive = bytearray(1 for _ in range(n))
        self._alive[root] = 0  # the root has no in-edge

        self._gen = [0] * n
        self._heap = [self._entry(e) for e in tree.internal_edges()]
        heapq.heapify(self._heap)

        self.contractions: list[EdgeId] = []
        # Raw step log: (edge, lam_num, lam_den, alpha_num, alpha_den, merged_root).
        self._steps: list[tuple[int, int, int, int, int, bool]] = []
        self._initial_alpha = (self._sum[root], self._cnt[root])

    # --- union-find ---------------------------------------------------- #

    def _find(self, x: int) -> int:
        uf = self._uf
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    def _union(self, a: int, b: int) -> int:
        if self._uf_size[a] < self._uf_size[b]:
            a, b = b, a
        self._uf[b] = a
        self._uf_size[a] += self._uf_size[b]
        return a

    # --- priority queue -------------------------------------------------- #

    def _entry(self, e: EdgeId):
        r = self._find(e)
        num, den = _pair(self._w[e], self._sum[r], self._cnt[r], self._maximize)
        if self._maximize:
            num_o, den_o = -num, den  # min-heap on the negated value
        else:
            num_o, den_o = num, den
        return (_approx(num_o, den_o), _ExactRatio(num_o, den_o), e, self._gen[e], num, den)

    def _push(self, e: EdgeId) -> None:
        self._gen[e] += 1  # invalidates every queued entry for e
        heapq.heappush(self._heap, self._entry(e))

    def _pop_live_best(self):
        heap = self._heap
        while heap:
            entry = heapq.heappop(heap)
            e = entry[2]
            if self._alive[e] and entry[3] == self._gen[e]:
                return entry
        return None

    def _beats_root_average(self, num: int, den: int) -> bool:
        rr = self._find(self.tree.root)
        asum, acnt = self._sum[rr], self._cnt[rr]
        if self._maximize:
            if den == 0:
                return num > 0
            return num * acnt > asum * den
        if den == 0:
            return num < 0
        return num * acnt < asum * den

    # --- queries ---------------------------------------------------------- #

    def _check_edge(self, e: EdgeId) -> None:
        if not isinstance(e, int) or not (0 <= e < self.tree.node_count) or e == self.tree.root:
            raise ValueError(f"not an edge id: {e!r}")

    def representative(self, v: NodeId) -> NodeId:
        """Current supernode representative of original node ``v``."""
        return self._find(v)

    def is_alive(self, e: EdgeId) -> bool:
        self._check_edge(e)
        return bool(self._alive[e])

    def live_out_sum(self, v: NodeId) -> Fraction:
        """Total weight of live out-edges of ``v``'s supernode."""
        return Fraction(self._sum[self._find(v)], self._scale)

    def live_out_count(self, v: NodeId) -> int:
        """Number of live out-edges of ``v``'s supernode."""
        return self._cnt[self._find(v)]

    @property
    def root_average(self) -> Fraction:
        rr = self._find(self.tree.root)
        return Fraction(self._sum[rr], self._cnt[rr] * self._scale)

    @property
    def initial_root_average(self) -> Fraction:
        num, den = self._initial_alpha
        return Fraction(num, den * self._scale)

    def contractibility(self, e: EdgeId) -> Contractibility:
        """Contractibility of live edge ``e`` under the current partition."""
        self._check_edge(e)
        if not self._alive[e]:
            raise DeadEdgeError(f"edge {e} was already contracted")
        r = self._find(e)
        if self._cnt[r] == 0:
            raise LeafHeadError(f"edge {e} ends in a leaf and has no contractibility")
        num, den = _pair(self._w[e], self._sum[r], self._cnt[r], self._maximize)
        return self._to_contractibility(num, den)

    def _to_contractibility(self, num: int, den: int) -> Contractibility:
        if den == 0:
            return POSITIVE_INFINITY if num > 0 else NEGATIVE_INFINITY
        return Contractibility.finite(Fraction(num, den * self._scale))

    def pending_edges(self) -> set[EdgeId]:
        """Edges with a fresh queue entry (live internal edges, exactly)."""
        return {
            entry[2]
            for entry in self._heap
            if self._alive[entry[2]] and entry[3] == self._gen[entry[2]]
        }

    def cut_edges(self) -> frozenset[EdgeId]:
        """Live out-edge boundary of the root supernode, as original edges."""
        t = self.tree
        alive = self._alive
        find = self._find
        rr = find(t.root)
        return frozenset(e for e in t.edges() if alive[e] and find(t.parent[e]) == rr)

    def steps(self) -> list[ContractionStep]:
        scale = self._scale
        out = []
        for edge, num, den, asum, acnt, merged in self._steps:
            out.append(
                ContractionStep(
                    edge,
                    self._to_contractibility(num, den),
                    Fraction(asum, acnt * scale),
                    merged,
                )
            )
        return out

    def root_average_history(self) -> list[Fraction]:
        """Root average before any contraction and after each one."""
        scale = self._scale
        history = [self.initial_root_average]
        history.extend(Fraction(s[3], s[4] * scale) for s in self._steps)
        return history

    # --- mutation ----------------------------------------------------------- #

    def contract(self, e: EdgeId) -> None:
        """Merge head(e) into its tail's supernode and update aggregates.

        The tail supernode keeps its identity; its in-edge (if it is not the
        root supernode) is the only edge whose contractibility changes, and
        gets requeued. Raises DeadEdgeError / LeafHeadError as appropriate.
        """
        self._check_edge(e)
        if not self._alive[e]:
            raise DeadEdgeError(f"edge {e} was already contracted")
        if not self.tree.children[e]:
            raise LeafHeadError(f"edge {e} ends in a leaf and cannot be contracted")

        tree = self.tree
        ru = self._find(tree.parent[e])  # type: ignore[arg-type]
        rv = self._find(e)
        lam_num, lam_den = _pair(self._w[e], self._sum[rv], self._cnt[rv], self._maximize)

        new_sum = self._sum[ru] + self._sum[rv] - self._w[e]
        new_cnt = self._cnt[ru] + self._cnt[rv] - 1
        top = self._top[ru]
        self._alive[e] = 0
        rm = self._union(ru, rv)
        self._sum[rm] = new_sum
        self._cnt[rm] = new_cnt
        self._top[rm] = top

        merged_root = top == tree.root
        if not merged_root:
            # The merged supernode's in-edge is named by its topmost node.
            self._push(top)
        self.contractions.append(e)
        rr = self._find(tree.root)
        self._steps.append((e, lam_num, lam_den, self._sum[rr], self._cnt[rr], merged_root))

    def run(self) -> None:
        """Contract best-first until no live edge strictly beats the root average."""
        while True:
            entry = self._pop_live_best()
            if entry is None:
                return
            _, _, edge, _, num, den = entry
            if not self._beats_root_average(num, den):
                heapq.heappush(self._heap, entry)  # keep the queue complete
                return
            self.contract(edge)

    def result(self) -> CutResult:
        rr = self._find(self.tree.root)
        total_num = self._sum[rr]
        size = self._cnt[rr]
        return CutResult(
            cut=self.cut_edges(),
            total=Fraction(total_num, self._scale),
            size=size,
            average=Fraction(total_num, size * self._scale),
            contractions=tuple(self.contractions),
        )


def run_contraction(t: RootedTree, objective: Objective = Objective.MAXIMIZE) -> ContractionState:
    """Run the full contraction loop and return the final state (for traces)."""
    state = ContractionState(t, objective)
    state.run()
    return state


def optimal_average_cut(t: RootedTree, objective: Objective = Objective.MAXIMIZE) -> CutResult:
    """The root-separating cut of optimal average weight, in original edge ids."""
    return run_contraction(t, objective).result()


def evaluate_cut(t: RootedTree, cut) -> tuple[Fraction, int, Fraction]:
    """Exact (total, size, average) of an edge set."""
    edges = set(cut)
    if not edges:
        raise EmptyCutError("cut has no edges")
    for e in edges:
        if not isinstance(e, int) or not (0 <= e < t.node_count) or e == t.root:
            raise ValueError(f"not an edge id: {e!r}")
    total = sum((t.weights[e] for e in edges), start=Fraction(0))
    return total, len(edges), total / len(edges)
