"""Compare the compiled and pure Python kernel backends.

Run:  python3 benchmarks/bench_kernels.py
"""

import random
import statistics
import time

import numpy as np

from stratagem._kernels import pure

try:
    from stratagem._kernels import _fast as fast
except ImportError:
    fast = None

from stratagem.corpus import generate_synthetic
from stratagem.index import build_index


def timeit(fn, repeat=5):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def random_graph(n, avg_degree, seed):
    rng = random.Random(seed)
    edges = set()
    target = n * avg_degree // 2
    while len(edges) < target:
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            edges.add((min(i, j), max(i, j)))
    adj = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    indptr = np.zeros(n + 1, dtype=np.int32)
    for i in range(n):
        adj[i].sort()
        indptr[i + 1] = indptr[i] + len(adj[i])
    indices = np.array([w for nb in adj for w in nb], dtype=np.int32)
    return indptr, indices


def bench_brandes():
    print("\nbrandes betweenness (random graph, avg degree 6)")
    print(f"{'nodes':>8} {'pure (s)':>12} {'cython (s)':>12} {'speedup':>9}")
    for n in (100, 300, 600):
        indptr, indices = random_graph(n, 6, seed=n)
        t_pure, _ = timeit(lambda: pure.brandes(n, indptr, indices), repeat=3)
        if fast is None:
            print(f"{n:>8} {t_pure:>12.4f} {'n/a':>12} {'n/a':>9}")
            continue
        t_fast, _ = timeit(lambda: fast.brandes(n, indptr, indices), repeat=3)
        assert fast.brandes(n, indptr, indices) == pure.brandes(n, indptr, indices)
        print(f"{n:>8} {t_pure:>12.4f} {t_fast:>12.4f} {t_pure / t_fast:>8.1f}x")


def bench_bm25():
    print("\nbm25 accumulation (synthetic corpus, query 'war media school')")
    print(f"{'docs':>8} {'pure (s)':>12} {'cython (s)':>12} {'speedup':>9}")
    for n_docs in (2000, 10000, 50000):
        corpus = generate_synthetic(n_docs, 30, 1.2, 9)
        index = build_index(corpus)
        terms = [t for t in ("war", "media", "school") if t in index.postings]

        def run(impl):
            scores = np.zeros(index.n_docs)
            for t in terms:
                ords, tfs = index.postings[t]
                impl.bm25_add(ords, tfs, index.idf(t), index.k1, index.b,
                              index._doc_len, index.avg_doc_len, scores)
            return scores

        t_pure, _ = timeit(lambda: run(pure), repeat=5)
        if fast is None:
            print(f"{n_docs:>8} {t_pure:>12.5f} {'n/a':>12} {'n/a':>9}")
            continue
        t_fast, _ = timeit(lambda: run(fast), repeat=5)
        assert run(fast).tolist() == run(pure).tolist()
        print(f"{n_docs:>8} {t_pure:>12.5f} {t_fast:>12.5f} {t_pure / t_fast:>8.1f}x")


if __name__ == "__main__":
    print(f"compiled backend available: {fast is not None}")
    bench_brandes()
    bench_bm25()
