"""Exact branch-and-bound search for the maximum edge-weight clique.

Each node carries the current clique C and the candidate set S of
vertices adjacent to all of C. A coloring pass over S (see
:mod:`mewclique.bounds`) yields a branch order and a per-branch upper
bound; a branch is explored only if clique weight plus bound strictly
beats the incumbent. Candidates already branched on at this node are
excluded from child candidate sets, so every clique is visited at most
once. Clique weight and per-candidate join weights are maintained
incrementally on the way down and rolled back on the way up.

The search is deterministic: ties in the coloring are broken by vertex
index and nothing is randomized, so a given instance and configuration
always reproduce the same incumbent sequence and node count.
"""

import sys
import time
from dataclasses import dataclass

from .bounds import ColoringWorkspace
from .graph import VertexSet, WeightedGraph, is_clique, set_weight


@dataclass
class SolverConfig:
    """Knobs for one solve run.

    Limits are wall-clock seconds and node counts; None means
    unlimited. assertion_level "invariants" re-derives all node state
    from scratch at every node; it is meant for tests and is orders of
    magnitude slower. use_coloring_bound False replaces the bound by
    plus infinity, turning the search into a plain enumeration of all
    cliques (a baseline for measuring pruning, not a useful solver).
    """

    time_limit: float | None = None
    node_limit: int | None = None
    use_initial_solution: bool = True
    assertion_level: str = "off"  # "off" | "invariants"
    use_coloring_bound: bool = True

    def validate(self):
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive when set")
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive when set")
        if self.assertion_level not in ("off", "invariants"):
            raise ValueError(f"unknown assertion_level {self.assertion_level!r}")


@dataclass
class SolveResult:
    """Outcome of one solve run.

    iterations counts invocations of the recursive expansion, root and
    base cases included. proven_optimal is False only when a time or
    node limit fired; the incumbent is still the best clique seen.
    """

    best_clique: VertexSet
    best_weight: int
    proven_optimal: bool
    iterations: int
    elapsed: float
    initial_weight: int


def solve(g: WeightedGraph, c_initial: VertexSet | None = None,
          config: SolverConfig | None = None) -> SolveResult:
    """Find a maximum edge-weight clique of g.

    g must be a plain edge-weight instance (all vertex weights zero).
    c_initial, when given, must be a clique; it seeds the incumbent so
    pruning bites from the first node. Incumbent updates use strict
    inequality, so with a warm start the returned clique may be the
    initial one even when other optima of equal weight exist.
    """
    cfg = config or SolverConfig()
    cfg.validate()
    if any(g.vertex_weights):
        raise ValueError("edge-weight solve requires all-zero vertex weights")
    if c_initial is None:
        c_initial = VertexSet()
    if not is_clique(g, c_initial):
        raise ValueError("initial solution is not a clique")

    n = g.n
    adj = g.adj_bits
    rows = g.weight_rows

    if cfg.use_initial_solution:
        best_mask = c_initial.mask
        best_w = set_weight(g, c_initial)
    else:
        best_mask = 0
        best_w = 0
    initial_w = best_w

    # recursion depth is at most one level per clique vertex
    if sys.getrecursionlimit() < n + 512:
        sys.setrecursionlimit(n + 512)

    plan = ColoringWorkspace(g).run
    join_w = [0] * n
    members = []
    iterations = 0
    aborted = False
    node_limit = cfg.node_limit
    bounding = cfg.use_coloring_bound
    checking = cfg.assertion_level == "invariants"
    heaviest_seen = 0  # checking only: largest clique weight constructed
    start = time.perf_counter()
    deadline = start + cfg.time_limit if cfg.time_limit is not None else None

    def verify_node(s_mask, weight_c):
        cmask = 0
        for u in members:
            cmask |= 1 << u
        cset = VertexSet.from_mask(cmask)
        assert is_clique(g, cset), "current members are not a clique"
        assert weight_c == set_weight(g, cset), "incremental weight drifted"
        m = s_mask
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            assert adj[v] & cmask == cmask, "candidate misses a clique member"
            assert join_w[v] == sum(rows[v][u] for u in members), "stale join weight"

    def expand(s_mask, weight_c):
        nonlocal iterations, aborted, best_mask, best_w, heaviest_seen
        if node_limit is not None and iterations >= node_limit:
            aborted = True
            return
        if deadline is not None and time.perf_counter() > deadline:
            aborted = True
            return
        iterations += 1
        if checking:
            verify_node(s_mask, weight_c)
            if weight_c > heaviest_seen:
                heaviest_seen = weight_c
        if not s_mask:
            if weight_c > best_w:
                best_w = weight_c
                mask = 0
                for u in members:
                    mask |= 1 << u
                best_mask = mask
            return
        if bounding:
            order, ubs, _ = plan(s_mask, join_w)
            remaining = s_mask
            for p, ub in zip(order, ubs):
                if weight_c + ub <= best_w:
                    break  # bounds are non-increasing along the order
                child = remaining & adj[p]
                row = rows[p]
                m = child
                while m:
                    b = m & -m
                    v = b.bit_length() - 1
                    join_w[v] += row[v]
                    m ^= b
                members.append(p)
                expand(child, weight_c + join_w[p])
                members.pop()
                m = child
                while m:
                    b = m & -m
                    v = b.bit_length() - 1
                    join_w[v] -= row[v]
                    m ^= b
                if aborted:
                    return
                remaining ^= 1 << p
        else:
            remaining = s_mask  # no bound: branch in plain index order
            while remaining:
                b = remaining & -remaining
                p = b.bit_length() - 1
                remaining ^= b
                child = remaining & adj[p]
                row = rows[p]
                m = child
                while m:
                    bb = m & -m
                    v = bb.bit_length() - 1
                    join_w[v] += row[v]
                    m ^= bb
                members.append(p)
                expand(child, weight_c + join_w[p])
                members.pop()
                m = child
                while m:
                    bb = m & -m
                    v = bb.bit_length() - 1
                    join_w[v] -= row[v]
                    m ^= bb
                if aborted:
                    return

    expand((1 << n) - 1 if n else 0, 0)
    elapsed = time.perf_counter() - start

    result = VertexSet.from_mask(best_mask)
    assert is_clique(g, result) and set_weight(g, result) == best_w
    if checking and not aborted:
        assert best_w >= heaviest_seen, "an incumbent update was missed"
    return SolveResult(
        best_clique=result,
        best_weight=best_w,
        proven_optimal=not aborted,
        iterations=iterations,
        elapsed=elapsed,
        initial_weight=initial_w,
    )
