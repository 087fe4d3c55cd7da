# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, calloc, free

cdef enum:
    IASI = 1
    TOPO = 2
    SEQ = 4
    GRACEFUL = 8
    FSTAR = 16
    ANCHOR = 32

cdef enum:
    UNSAT = 0
    SAT = 1
    BUDGET = 2


def sumset_table(elements):
    cdef int k = len(elements)
    cdef int n = 1 << k
    cdef int a, b, i, s, v
    cdef unsigned long long ground_bits = 0, acc, bb
    cdef int *elems = <int *>malloc(k * sizeof(int))
    cdef int *index = NULL
    cdef unsigned long long *value_bits = <unsigned long long *>malloc(n * sizeof(unsigned long long))
    cdef int top
    if elements[k - 1] > 31:
        free(elems)
        free(value_bits)
        # values beyond 63 bits after doubling; defer to the Python kernel
        from ._pykernels import sumset_table as slow
        return slow(elements)
    for i in range(k):
        elems[i] = elements[i]
        ground_bits |= 1ULL << elems[i]
    top = elems[k - 1]
    index = <int *>malloc((2 * top + 1) * sizeof(int))
    for v in range(2 * top + 1):
        index[v] = -1
    for i in range(k):
        index[elems[i]] = i
    for a in range(n):
        acc = 0
        for i in range(k):
            if (a >> i) & 1:
                acc |= 1ULL << elems[i]
        value_bits[a] = acc
    table = [-1] * (n * n)
    cdef int m
    for a in range(1, n):
        for b in range(1, n):
            bb = value_bits[b]
            acc = 0
            for i in range(k):
                if (a >> i) & 1:
                    acc |= bb << elems[i]
            if acc & ~ground_bits:
                continue
            m = 0
            v = 0
            while acc:
                if acc & 1:
                    m |= 1 << index[v]
                acc >>= 1
                v += 1
            table[a * n + b] = m
    free(elems)
    free(index)
    free(value_bits)
    return table


cdef struct State:
    int n
    int n_masks
    int n_edges
    int iasi, topo, seq, graceful, fstar
    int *label
    int *vused
    int *ecount
    int *cover
    int *stamp
    int *table
    int *allowed
    int *adj_start
    int *adj
    int *order
    int *twin_prev
    int order_len
    int *assigned_buf
    int *sums_buf
    int ncov, necov, labeled, assigned
    long long nodes
    long long budget
    int tag


cdef int place(State *st, int v, int m, int *sums) nogil:
    """Apply ``v := m``; returns number of new edges, or -1 if infeasible."""
    cdef int nsums = 0, i, j, u, lu, s
    cdef int row = m * st.n_masks
    if not st.allowed[m] or st.vused[m]:
        return -1
    if st.fstar and st.ecount[m]:
        return -1
    for i in range(st.adj_start[v], st.adj_start[v + 1]):
        u = st.adj[i]
        lu = st.label[u]
        if lu < 0:
            continue
        s = st.table[row + lu]
        if s < 0:
            return -1
        if st.iasi:
            if st.ecount[s]:
                return -1
            for j in range(nsums):
                if sums[j] == s:
                    return -1
            if st.fstar and (s == m or st.vused[s]):
                return -1
        sums[nsums] = s
        nsums += 1
    st.label[v] = m
    st.vused[m] = 1
    if st.cover[m] == 0:
        st.ncov += 1
    st.cover[m] += 1
    for j in range(nsums):
        s = sums[j]
        if st.graceful and st.ecount[s] == 0 and s != 1:
            st.necov += 1
        st.ecount[s] += 1
        if st.cover[s] == 0:
            st.ncov += 1
        st.cover[s] += 1
    st.labeled += nsums
    st.assigned += 1
    return nsums


cdef void unplace(State *st, int v, int m, int *sums, int nsums) nogil:
    cdef int j, s
    for j in range(nsums):
        s = sums[j]
        st.cover[s] -= 1
        if st.cover[s] == 0:
            st.ncov -= 1
        st.ecount[s] -= 1
        if st.graceful and st.ecount[s] == 0 and s != 1:
            st.necov -= 1
    st.cover[m] -= 1
    if st.cover[m] == 0:
        st.ncov -= 1
    st.vused[m] = 0
    st.label[v] = -1
    st.labeled -= nsums
    st.assigned -= 1


cdef int check_cand(State *st, int c) nogil:
    # 0 = already present or counted, 1 = newly missing, -1 = impossible
    if st.vused[c] or st.stamp[c] == st.tag:
        return 0
    if not st.allowed[c] or (st.fstar and st.ecount[c]):
        return -1
    st.stamp[c] = st.tag
    return 1


cdef int topo_missing(State *st) nogil:
    cdef int k = 0, i, j, a, b, r, missing = 0
    cdef int full = st.n_masks - 1
    st.tag += 1
    for i in range(st.n):
        if st.label[i] >= 0:
            st.assigned_buf[k] = st.label[i]
            k += 1
    if not st.vused[full]:
        r = check_cand(st, full)
        if r < 0:
            return st.n + 1
        missing += r
    for i in range(k):
        a = st.assigned_buf[i]
        for j in range(i + 1, k):
            b = st.assigned_buf[j]
            r = check_cand(st, a | b)
            if r < 0:
                return st.n + 1
            missing += r
            if a & b:
                r = check_cand(st, a & b)
                if r < 0:
                    return st.n + 1
                missing += r
    return missing


cdef int feasible(State *st) nogil:
    cdef int free_v = st.n - st.assigned
    cdef int free_e = st.n_edges - st.labeled
    if st.seq and (st.n_masks - 1) - st.ncov > free_v + free_e:
        return 0
    if st.graceful and (st.n_masks - 2) - st.necov > free_e:
        return 0
    if st.topo and topo_missing(st) > free_v:
        return 0
    return 1


cdef int leaf(State *st) nogil:
    if st.seq and st.ncov != st.n_masks - 1:
        return UNSAT
    if st.graceful and st.necov != st.n_masks - 2:
        return UNSAT
    if st.topo and topo_missing(st) != 0:
        return UNSAT
    return SAT


cdef int dfs(State *st, int k) nogil:
    if k == st.order_len:
        return leaf(st)
    cdef int v = st.order[k]
    cdef int m, nsums, r
    cdef int lo = 1
    cdef int t = st.twin_prev[v]
    cdef int *sums = st.sums_buf + k * st.n
    if t >= 0 and st.label[t] >= 0:
        lo = st.label[t] + 1
    for m in range(lo, st.n_masks):
        nsums = place(st, v, m, sums)
        if nsums < 0:
            continue
        st.nodes += 1
        if st.budget >= 0 and st.nodes > st.budget:
            unplace(st, v, m, sums, nsums)
            return BUDGET
        if feasible(st):
            r = dfs(st, k + 1)
            if r != UNSAT:
                if r == BUDGET:
                    unplace(st, v, m, sums, nsums)
                return r
        unplace(st, v, m, sums, nsums)
    return UNSAT


def search(int n, neighbors, order, table, int n_masks, int flags, allowed,
           anchors, long long budget, twin_prev=None):
    cdef State st
    cdef int i, j, pos, a, r, nsums
    cdef int total_adj = 0
    cdef int *anchor_sums
    for nb in neighbors:
        total_adj += len(nb)
    st.n = n
    st.n_masks = n_masks
    st.n_edges = total_adj // 2
    st.iasi = 1 if flags & (IASI | FSTAR) else 0
    st.topo = 1 if flags & TOPO else 0
    st.seq = 1 if flags & SEQ else 0
    st.graceful = 1 if flags & GRACEFUL else 0
    st.fstar = 1 if flags & FSTAR else 0
    st.label = <int *>malloc((n + 1) * sizeof(int))
    st.vused = <int *>calloc(n_masks, sizeof(int))
    st.ecount = <int *>calloc(n_masks, sizeof(int))
    st.cover = <int *>calloc(n_masks, sizeof(int))
    st.stamp = <int *>calloc(n_masks, sizeof(int))
    st.table = <int *>malloc(n_masks * n_masks * sizeof(int))
    st.allowed = <int *>malloc(n_masks * sizeof(int))
    st.adj_start = <int *>malloc((n + 1) * sizeof(int))
    st.adj = <int *>malloc((total_adj + 1) * sizeof(int))
    st.order = <int *>malloc((n + 1) * sizeof(int))
    st.twin_prev = <int *>malloc((n + 1) * sizeof(int))
    st.assigned_buf = <int *>malloc((n + 1) * sizeof(int))
    st.sums_buf = <int *>malloc(((n + 1) * (n + 1)) * sizeof(int))
    st.ncov = st.necov = st.labeled = st.assigned = 0
    st.nodes = 0
    st.budget = budget
    st.tag = 0
    try:
        for i in range(n):
            st.label[i] = -1
            st.twin_prev[i] = -1 if twin_prev is None else twin_prev[i]
        for i in range(n_masks * n_masks):
            st.table[i] = table[i]
        for i in range(n_masks):
            st.allowed[i] = 1 if allowed[i] else 0
        pos = 0
        for i in range(n):
            st.adj_start[i] = pos
            for j in neighbors[i]:
                st.adj[pos] = j
                pos += 1
        st.adj_start[n] = pos

        if flags & ANCHOR:
            anchor_sums = st.sums_buf + n * n
            for a in anchors:
                nsums = place(&st, a, 1, anchor_sums)
                if nsums < 0:
                    continue
                st.nodes += 1
                st.order_len = 0
                for v in order:
                    if v != a:
                        st.order[st.order_len] = v
                        st.order_len += 1
                if feasible(&st):
                    with nogil:
                        r = dfs(&st, 0)
                else:
                    r = UNSAT
                if r == SAT:
                    return SAT, [st.label[i] for i in range(n)], st.nodes
                unplace(&st, a, 1, anchor_sums, nsums)
                if r == BUDGET:
                    return BUDGET, None, st.nodes
            return UNSAT, None, st.nodes

        st.order_len = 0
        for v in order:
            st.order[st.order_len] = v
            st.order_len += 1
        with nogil:
            r = dfs(&st, 0)
        if r == SAT:
            return SAT, [st.label[i] for i in range(n)], st.nodes
        return r, None, st.nodes
    finally:
        free(st.label)
        free(st.vused)
        free(st.ecount)
        free(st.cover)
        free(st.stamp)
        free(st.table)
        free(st.allowed)
        free(st.adj_start)
        free(st.adj)
        free(st.order)
        free(st.twin_prev)
        free(st.assigned_buf)
        free(st.sums_buf)
