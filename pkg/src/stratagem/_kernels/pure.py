"""Pure Python kernels; reference implementation for the Cython module.

Both backends must produce bit-identical results: summation order is fixed
(ascending neighbor/posting order) and no reassociation is allowed.
"""

from __future__ import annotations

from collections import deque


def bm25_add(ords, tfs, idf, k1, b, doc_len, avg_len, scores):
    """Add one query term's BM25 contribution into ``scores``.

    ords/tfs are the term's posting arrays (doc ordinal, term frequency);
    doc_len maps ordinal -> indexed token count; scores is a float64 array
    over all doc ordinals, mutated in place.
    """
    for i in range(len(ords)):
        o = int(ords[i])
        tf = float(tfs[i])
        norm = tf + k1 * (1.0 - b + b * (doc_len[o] / avg_len))
        scores[o] += idf * tf * (k1 + 1.0) / norm


def brandes(n, indptr, indices):
    """Unnormalized betweenness on an unweighted undirected graph (CSR).

    Per-source BFS with dependency accumulation; the directed pair sum is
    halved at the end, so each unordered {s, t} pair counts once.
    """
    bc = [0.0] * n
    for s in range(n):
        dist = [-1] * n
        sigma = [0] * n
        preds: list[list[int]] = [[] for _ in range(n)]
        dist[s] = 0
        sigma[s] = 1
        order: list[int] = []
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for j in range(int(indptr[v]), int(indptr[v + 1])):
                w = int(indices[j])
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [0.0] * n
        for w in reversed(order):
            for v in preds[w]:
                delta[v] += (sigma[v] / sigma[w]) * (1.0 + delta[w])
            if w != s:
                bc[w] += delta[w]
    return [x / 2.0 for x in bc]
