"""Pure-Python kernels; ``_ckernels.pyx`` implements the same contract."""

IASI = 1
TOPO = 2
SEQ = 4
GRACEFUL = 8
FSTAR = 16
ANCHOR = 32

UNSAT = 0
SAT = 1
BUDGET = 2


def sumset_table(elements):
    """Flat mask sumset table for the sorted ground set ``elements``.

    Entry ``a * 2**k + b`` is the mask of ``A + B`` or -1 if it leaves the set.
    """
    k = len(elements)
    n = 1 << k
    index = {v: i for i, v in enumerate(elements)}
    ground_bits = 0
    for v in elements:
        ground_bits |= 1 << v
    value_bits = [0] * n
    for m in range(n):
        bits = 0
        for i in range(k):
            if m >> i & 1:
                bits |= 1 << elements[i]
        value_bits[m] = bits
    table = [-1] * (n * n)
    for a in range(1, n):
        shifts = [elements[i] for i in range(k) if a >> i & 1]
        for b in range(1, n):
            bb = value_bits[b]
            acc = 0
            for s in shifts:
                acc |= bb << s
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
    return table


def search(n, neighbors, order, table, n_masks, flags, allowed, anchors, budget, twin_prev=None):
    """Backtracking search for an injective mask labeling of ``n`` vertices.

    Returns ``(status, labels, nodes)``; ``labels`` is a list of masks when SAT.
    ``budget < 0`` means unlimited nodes. ``twin_prev[v]`` names an earlier
    interchangeable vertex whose label ``v`` must exceed, or -1.
    """
    if twin_prev is None:
        twin_prev = [-1] * n
    iasi = bool(flags & (IASI | FSTAR))
    topo = bool(flags & TOPO)
    seq = bool(flags & SEQ)
    graceful = bool(flags & GRACEFUL)
    fstar = bool(flags & FSTAR)
    zero = 1
    full = n_masks - 1

    n_edges = sum(len(nb) for nb in neighbors) // 2
    label = [-1] * n
    vused = [0] * n_masks
    ecount = [0] * n_masks
    cover = [0] * n_masks
    stamp = [0] * n_masks
    # ncov, necov, labeled_edges, assigned, nodes, stamp_counter
    st = [0, 0, 0, 0, 0, 0]

    def place(v, m):
        if not allowed[m] or vused[m]:
            return None
        if fstar and ecount[m]:
            return None
        sums = []
        row = m * n_masks
        for u in neighbors[v]:
            lu = label[u]
            if lu < 0:
                continue
            s = table[row + lu]
            if s < 0:
                return None
            if iasi:
                if ecount[s] or s in sums:
                    return None
                if fstar and (s == m or vused[s]):
                    return None
            sums.append(s)
        label[v] = m
        vused[m] = 1
        if cover[m] == 0:
            st[0] += 1
        cover[m] += 1
        for s in sums:
            if graceful and ecount[s] == 0 and s != zero:
                st[1] += 1
            ecount[s] += 1
            if cover[s] == 0:
                st[0] += 1
            cover[s] += 1
        st[2] += len(sums)
        st[3] += 1
        return sums

    def unplace(v, m, sums):
        for s in sums:
            cover[s] -= 1
            if cover[s] == 0:
                st[0] -= 1
            ecount[s] -= 1
            if graceful and ecount[s] == 0 and s != zero:
                st[1] -= 1
        cover[m] -= 1
        if cover[m] == 0:
            st[0] -= 1
        vused[m] = 0
        label[v] = -1
        st[2] -= len(sums)
        st[3] -= 1

    def topo_missing():
        st[5] += 1
        tag = st[5]
        missing = 0
        assigned = [lv for lv in label if lv >= 0]
        cands = []
        if not vused[full]:
            cands.append(full)
        for i in range(len(assigned)):
            a = assigned[i]
            for j in range(i + 1, len(assigned)):
                b = assigned[j]
                cands.append(a | b)
                if a & b:
                    cands.append(a & b)
        for c in cands:
            if vused[c] or stamp[c] == tag:
                continue
            if not allowed[c] or (fstar and ecount[c]):
                return n + 1
            stamp[c] = tag
            missing += 1
        return missing

    def feasible():
        free_v = n - st[3]
        free_e = n_edges - st[2]
        if seq and (n_masks - 1) - st[0] > free_v + free_e:
            return False
        if graceful and (n_masks - 2) - st[1] > free_e:
            return False
        if topo and topo_missing() > free_v:
            return False
        return True

    def dfs(k, seq_order):
        if k == len(seq_order):
            return feasible_leaf()
        v = seq_order[k]
        lo = 1
        t = twin_prev[v]
        if t >= 0 and label[t] >= 0:
            lo = label[t] + 1
        for m in range(lo, n_masks):
            sums = place(v, m)
            if sums is None:
                continue
            st[4] += 1
            if budget >= 0 and st[4] > budget:
                unplace(v, m, sums)
                return BUDGET
            if feasible():
                r = dfs(k + 1, seq_order)
                if r != UNSAT:
                    if r == BUDGET:
                        unplace(v, m, sums)
                    return r
            unplace(v, m, sums)
        return UNSAT

    def feasible_leaf():
        if seq and st[0] != n_masks - 1:
            return UNSAT
        if graceful and st[1] != n_masks - 2:
            return UNSAT
        if topo and topo_missing() != 0:
            return UNSAT
        return SAT

    if flags & ANCHOR:
        for a in anchors:
            sums = place(a, zero)
            if sums is None:
                continue
            st[4] += 1
            rest = [v for v in order if v != a]
            r = dfs(0, rest) if feasible() else UNSAT
            if r == SAT:
                return SAT, list(label), st[4]
            unplace(a, zero, sums)
            if r == BUDGET:
                return BUDGET, None, st[4]
        return UNSAT, None, st[4]

    r = dfs(0, list(order))
    if r == SAT:
        return SAT, list(label), st[4]
    return r, None, st[4]
