"""Independent brute-force oracles. Nothing here imports the code under test
beyond plain data types; sums are recomputed with Python sets."""

import itertools


def ssum(a, b):
    return frozenset(x + y for x in a for y in b)


def nonempty_subsets(xs):
    xs = sorted(xs)
    return [frozenset(c) for k in range(1, len(xs) + 1) for c in itertools.combinations(xs, k)]


def structural_sets(xs):
    """A, B, D, A' by testing all (2^|X|-1)^2 ordered subset pairs."""
    X = frozenset(xs)
    subs = nonempty_subsets(X)
    zero = frozenset({0})
    sums, summands = set(), set()
    for a in subs:
        for b in subs:
            if a == zero or b == zero:
                continue
            c = ssum(a, b)
            if c <= X:
                sums.add(c)
                summands.update((a, b))
    A = {s for s in subs if s not in sums}
    B = {s for s in subs if s not in summands and s != zero}
    return A, B, A & B, {s for s in subs if s in sums}


def representations(c, xs):
    subs = nonempty_subsets(xs)
    zero = frozenset({0})
    out = set()
    for a in subs:
        for b in subs:
            if a != zero and b != zero and ssum(a, b) == frozenset(c):
                out.add(frozenset((a, b)))
    return out


def is_topology(family, xs):
    fam = {frozenset(s) for s in family}
    if frozenset() not in fam or frozenset(xs) not in fam:
        return False
    return all(a | b in fam and a & b in fam for a in fam for b in fam)


def naive_topologies(xs):
    """Filter every family of subsets containing {} and X."""
    X = frozenset(xs)
    middle = [s for s in nonempty_subsets(X) if s != X]
    out = []
    for bits in range(1 << len(middle)):
        fam = {frozenset(), X} | {middle[i] for i in range(len(middle)) if bits >> i & 1}
        if is_topology(fam, X):
            out.append(frozenset(fam))
    return out


def labeled_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield [pairs[i] for i in range(len(pairs)) if bits >> i & 1]


def full_canonical(n, edges):
    """Lexicographically largest adjacency code over all n! vertex orders."""
    adj = {(a, b) for a, b in edges} | {(b, a) for a, b in edges}
    best = None
    for perm in itertools.permutations(range(n)):
        code = tuple(1 if (perm[i], perm[j]) in adj else 0 for i in range(n) for j in range(i + 1, n))
        if best is None or code > best:
            best = code
    return best


def connected(n, edges):
    if n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for a, b in edges:
            for p, q in ((a, b), (b, a)):
                if p == u and q not in seen:
                    seen.add(q)
                    stack.append(q)
    return len(seen) == n


def iso_classes(n, connected_only=False):
    codes = set()
    for edges in labeled_graphs(n):
        if connected_only and not connected(n, edges):
            continue
        codes.add(full_canonical(n, edges))
    return codes


def classify_direct(vertices, edges, labels, xs, strict=True):
    """Every class verdict straight from the definitions, with frozensets."""
    X = frozenset(xs)
    subs = set(nonempty_subsets(X))
    f = {v: frozenset(labels[v]) for v in vertices}
    injective = len(set(f.values())) == len(vertices)
    fe = [ssum(f[u], f[v]) for u, v in edges]
    iasl = injective and all(e <= X for e in fe)
    iasi = iasl and len(set(fe)) == len(fe)
    topo = is_topology(set(f.values()) | {frozenset()}, X)
    seq = set(f.values()) | set(fe) == subs
    grace = set(fe) == subs - {frozenset({0})}
    allf = list(f.values()) + fe
    out = {
        "IASL": iasl,
        "IASI": iasi,
        "TIASL": iasl and topo,
        "IASSL": iasl and seq,
        "IASGL": iasl and grace,
        "TIASGL": iasl and grace and topo,
        "TIASSL": iasl and topo and seq and (iasi or not strict),
    }
    out["TIASSI"] = iasl and topo and seq and iasi and len(set(allf)) == len(allf)
    return out
