# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cython kernels; must stay bit-identical to the pure Python backend."""

from libc.stdlib cimport malloc, free


def bm25_add(int[:] ords, int[:] tfs, double idf, double k1, double b,
             int[:] doc_len, double avg_len, double[:] scores):
    cdef Py_ssize_t i, n = ords.shape[0]
    cdef int o
    cdef double tf, norm
    for i in range(n):
        o = ords[i]
        tf = tfs[i]
        norm = tf + k1 * (1.0 - b + b * (doc_len[o] / avg_len))
        scores[o] += idf * tf * (k1 + 1.0) / norm


def brandes(int n, int[:] indptr, int[:] indices):
    cdef list bc = [0.0] * n
    if n == 0:
        return bc
    cdef double *bc_c = <double *> malloc(n * sizeof(double))
    cdef int *dist = <int *> malloc(n * sizeof(int))
    cdef long *sigma = <long *> malloc(n * sizeof(long))
    cdef double *delta = <double *> malloc(n * sizeof(double))
    cdef int *queue = <int *> malloc(n * sizeof(int))
    cdef int *order = <int *> malloc(n * sizeof(int))
    # predecessor lists stored flat: each edge appears at most once per source
    cdef Py_ssize_t m = indices.shape[0]
    cdef int *pred = <int *> malloc((m if m > 0 else 1) * sizeof(int))
    cdef int *pred_ptr = <int *> malloc((n + 1) * sizeof(int))
    cdef int *pred_cnt = <int *> malloc(n * sizeof(int))
    if (bc_c == NULL or dist == NULL or sigma == NULL or delta == NULL or
            queue == NULL or order == NULL or pred == NULL or
            pred_ptr == NULL or pred_cnt == NULL):
        free(bc_c); free(dist); free(sigma); free(delta)
        free(queue); free(order); free(pred); free(pred_ptr); free(pred_cnt)
        raise MemoryError()

    cdef int s, v, w, j, qh, qt, no, i, k
    try:
        for v in range(n):
            bc_c[v] = 0.0
        # each node's predecessor slots mirror its CSR adjacency slots
        for v in range(n + 1):
            pred_ptr[v] = indptr[v]
        for s in range(n):
            for v in range(n):
                dist[v] = -1
                sigma[v] = 0
                delta[v] = 0.0
                pred_cnt[v] = 0
            dist[s] = 0
            sigma[s] = 1
            qh = 0
            qt = 0
            no = 0
            queue[qt] = s
            qt += 1
            while qh < qt:
                v = queue[qh]
                qh += 1
                order[no] = v
                no += 1
                for j in range(indptr[v], indptr[v + 1]):
                    w = indices[j]
                    if dist[w] < 0:
                        dist[w] = dist[v] + 1
                        queue[qt] = w
                        qt += 1
                    if dist[w] == dist[v] + 1:
                        sigma[w] += sigma[v]
                        pred[pred_ptr[w] + pred_cnt[w]] = v
                        pred_cnt[w] += 1
            for i in range(no - 1, -1, -1):
                w = order[i]
                for k in range(pred_cnt[w]):
                    v = pred[pred_ptr[w] + k]
                    delta[v] += (<double> sigma[v] / <double> sigma[w]) * (1.0 + delta[w])
                if w != s:
                    bc_c[w] += delta[w]
        for v in range(n):
            bc[v] = bc_c[v] / 2.0
        return bc
    finally:
        free(bc_c); free(dist); free(sigma); free(delta)
        free(queue); free(order); free(pred); free(pred_ptr); free(pred_cnt)
