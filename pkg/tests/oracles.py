"""Independent brute-force oracles used by the test suite.

Everything here is deliberately naive and kept independent of the code
paths it checks: betweenness by exhaustive shortest-path enumeration,
BM25 by direct formula evaluation, association counts by a raw re-scan
of the corpus records.
"""

from __future__ import annotations

import math
from collections import deque


def brute_betweenness(n: int, edges: set[tuple[int, int]]) -> list[float]:
    """Unnormalized betweenness by enumerating every shortest path of
    every unordered node pair."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)

    def all_shortest_paths(s: int, t: int) -> list[list[int]]:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        if t not in dist:
            return []
        paths: list[list[int]] = []

        def back(v: int, suffix: list[int]):
            if v == s:
                paths.append([s] + suffix)
                return
            for w in adj[v]:
                if w in dist and dist[w] == dist[v] - 1:
                    back(w, [v] + suffix)

        back(t, [])
        return paths

    bc = [0.0] * n
    for s in range(n):
        for t in range(s + 1, n):
            paths = all_shortest_paths(s, t)
            if not paths:
                continue
            for v in range(n):
                if v == s or v == t:
                    continue
                through = sum(1 for p in paths if v in p)
                bc[v] += through / len(paths)
    return bc


def bm25_oracle(tf: int, doc_len: int, df: int, n_docs: int, avg_len: float,
                k1: float = 1.2, b: float = 0.75) -> float:
    idf = math.log((n_docs - df + 0.5) / (df + 0.5) + 1.0)
    return idf * tf * (k1 + 1.0) / (tf + k1 * (1.0 - b + b * doc_len / avg_len))


def g2_oracle(k11: int, k12: int, k21: int, k22: int) -> float:
    """G2 from raw cell log-likelihoods (different algebraic form than the
    implementation's row/column expansion)."""
    n = k11 + k12 + k21 + k22
    total = 0.0
    rows = (k11 + k12, k21 + k22)
    cols = (k11 + k21, k12 + k22)
    for k, r, c in (
        (k11, rows[0], cols[0]),
        (k12, rows[0], cols[1]),
        (k21, rows[1], cols[0]),
        (k22, rows[1], cols[1]),
    ):
        if k > 0:
            total += k * math.log(k * n / (r * c))
    return 2.0 * total


def recount_associations(records, tokenize_fn):
    """Brute-force document-presence recount of every term/descriptor pair."""
    term_df: dict[str, int] = {}
    desc_df: dict[str, int] = {}
    joint: dict[tuple[str, str], int] = {}
    for rec in records:
        tokens = set(tokenize_fn(rec.title + " " + rec.abstract))
        descs = set(rec.descriptors)
        for t in tokens:
            term_df[t] = term_df.get(t, 0) + 1
        for d in descs:
            desc_df[d] = desc_df.get(d, 0) + 1
        for t in tokens:
            for d in descs:
                joint[(t, d)] = joint.get((t, d), 0) + 1
    return term_df, desc_df, joint
