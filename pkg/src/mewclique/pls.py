"""Phased local search used to warm-start the exact solver.

One clique is kept current at all times. Each search step either adds a
vertex adjacent to the whole clique, performs a strictly improving
one-for-one swap (bring in a vertex that misses exactly one member,
drop that member), or, when stuck, restarts from a random vertex. The
three phases differ only in how the entering vertex is picked among the
candidates: uniformly at random, by lowest penalty counter, or by
heaviest total edge weight into the other candidates. Penalty counters
record how often a vertex sat in a stuck clique and decay every ten
restarts, steering later restarts away from over-visited regions.

The best clique seen anywhere is returned; it is always feasible, and
for a fixed seed the run is deterministic. Solution quality is
heuristic, which is fine for a warm start: the exact search only uses
its weight as the initial pruning threshold.
"""

import random
from dataclasses import dataclass

from .graph import VertexSet, WeightedGraph, is_clique, set_weight


@dataclass
class PlsConfig:
    """Phase schedule: each iteration runs the three phases in order,
    for the given number of search steps each."""

    iterations: int = 10
    random_phase_len: int = 50
    penalty_phase_len: int = 50
    degree_phase_len: int = 100
    seed: int = 0

    def validate(self):
        for name in ("iterations", "random_phase_len", "penalty_phase_len",
                     "degree_phase_len"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


def _bits(mask):
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def pls(g: WeightedGraph, config: PlsConfig | None = None) -> VertexSet:
    """Run the phased local search and return the best clique found."""
    cfg = config or PlsConfig()
    cfg.validate()
    n = g.n
    if n == 0:
        return VertexSet()
    rng = random.Random(cfg.seed)
    adj = g.adj_bits
    rows = g.weight_rows
    full = (1 << n) - 1
    penalties = [0] * n
    restarts = 0

    cmask = 1 << rng.randrange(n)
    cweight = 0
    cand = adj[cmask.bit_length() - 1]
    best_mask, best_w = cmask, 0

    def pick(cands, mode):
        # cands is ascending; every policy is deterministic given the rng state
        if mode == "random":
            return cands[rng.randrange(len(cands))]
        if mode == "penalty":
            return min(cands, key=lambda v: (penalties[v], v))
        best_v, best_s = cands[0], -1
        for v in cands:
            row = rows[v]
            s = sum(row[u] for u in cands if u != v)
            if s > best_s:
                best_v, best_s = v, s
        return best_v

    for _ in range(cfg.iterations):
        for mode, steps in (("random", cfg.random_phase_len),
                            ("penalty", cfg.penalty_phase_len),
                            ("degree", cfg.degree_phase_len)):
            for _ in range(steps):
                if cand:
                    v = pick(_bits(cand), mode)
                    row = rows[v]
                    cweight += sum(row[u] for u in _bits(cmask))
                    cmask |= 1 << v
                    cand &= adj[v]
                    if cweight > best_w:
                        best_w, best_mask = cweight, cmask
                    continue
                # clique is maximal: look for a strictly improving swap
                cm = _bits(cmask)
                swaps = {}
                for v in range(n):
                    if (cmask >> v) & 1:
                        continue
                    missing = cmask & ~adj[v]
                    if missing.bit_count() != 1:
                        continue
                    u = missing.bit_length() - 1
                    row_v = rows[v]
                    row_u = rows[u]
                    gain = sum(row_v[x] - row_u[x] for x in cm if x != u)
                    if gain > 0:
                        swaps[v] = (gain, u)
                if swaps:
                    v = pick(sorted(swaps), mode)
                    gain, u = swaps[v]
                    cweight += gain
                    cmask = (cmask & ~(1 << u)) | (1 << v)
                    cand = full
                    for x in _bits(cmask):
                        cand &= adj[x]
                    if cweight > best_w:
                        best_w, best_mask = cweight, cmask
                else:
                    # stuck: penalize the members and restart elsewhere
                    for x in cm:
                        penalties[x] += 1
                    restarts += 1
                    if restarts % 10 == 0:
                        penalties = [p - 1 if p > 0 else 0 for p in penalties]
                    v0 = rng.randrange(n)
                    cmask = 1 << v0
                    cweight = 0
                    cand = adj[v0]

    out = VertexSet.from_mask(best_mask)
    assert is_clique(g, out) and set_weight(g, out) == best_w
    return out
