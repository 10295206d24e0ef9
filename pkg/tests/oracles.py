"""Brute-force reference computations, independent of the library's solver paths."""

from itertools import combinations, product

import numpy as np


def box_solutions(rows, b, box):
    """All x in [0, box]^c with M x = b, by exhaustive numpy enumeration."""
    M = np.array(rows, dtype=np.int64).reshape(len(rows), -1)
    r, c = M.shape
    if c == 0:
        return [()] if all(v == 0 for v in b) else []
    grid = np.indices((box + 1,) * c).reshape(c, -1).T
    hits = grid[(grid @ M.T == np.array(b, dtype=np.int64)).all(axis=1)]
    return [tuple(int(v) for v in x) for x in hits]


def minimal_of(vectors):
    """Componentwise-minimal members of a finite vector collection."""
    vs = sorted(set(vectors), key=lambda v: (sum(v), v))
    out = []
    for v in vs:
        if not any(all(m[i] <= v[i] for i in range(len(v))) for m in out):
            out.append(v)
    return sorted(out)


def brute_min_solutions(rows, b, box):
    """Minimal elements of the box-restricted solution set of M x = b."""
    return minimal_of(box_solutions(rows, b, box))


def brute_hilbert(rows, box):
    """Minimal nonzero solutions of M x = 0 within the box."""
    zero = (0,) * (len(rows[0]) if rows else 0)
    sols = [x for x in box_solutions(rows, (0,) * len(rows), box) if x != zero]
    return minimal_of(sols)


def monoid_box(A_cols, box):
    """All monoid elements A x with x in [0, box]^n, as a set of tuples."""
    n = len(A_cols)
    d = len(A_cols[0]) if n else 0
    out = set()
    if n == 0:
        return {(0,) * d}
    for x in product(range(box + 1), repeat=n):
        out.add(tuple(sum(c[i] * k for c, k in zip(A_cols, x)) for i in range(d)))
    return out


def reachable_set(cols, caps):
    """All monoid elements componentwise below ``caps``: exact BFS from zero.

    Requires nonnegative generator columns, which the random test monoids
    use; membership within the capped region is then decided exactly.
    """
    d = len(caps)
    start = (0,) * d
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for c in cols:
                w = tuple(a + b for a, b in zip(v, c))
                if w in seen or any(x > m for x, m in zip(w, caps)):
                    continue
                seen.add(w)
                nxt.append(w)
        frontier = nxt
    return seen


def ideal_members(gens, cols, caps):
    """Capped-region members of the ideal generated by ``gens`` in the monoid."""
    reach = reachable_set(cols, caps)
    out = set()
    for g in gens:
        for m in reach:
            v = tuple(a + b for a, b in zip(g, m))
            if all(x <= c for x, c in zip(v, caps)):
                out.add(v)
    return out


def brute_poly_standard_pairs(exponents, nvars, box):
    """Maximal proper pairs of a polynomial monomial ideal, by definition.

    Candidates (u, V) are enumerated over the full exponent box; properness
    is the literal universal statement over the generators, and maximality
    is the literal pair-containment test.
    """
    gens = [tuple(e) for e in exponents]
    proper = []
    for k in range(nvars + 1):
        for free in combinations(range(nvars), k):
            fset = set(free)
            ranges = [range(1) if i in fset else range(box + 1) for i in range(nvars)]
            for u in product(*ranges):
                ok = all(any(g[i] > u[i] for i in range(nvars) if i not in fset) for g in gens)
                if ok:
                    proper.append((u, free))

    def contains(p, q):
        (u, v), (w, x) = p, q
        if not set(x) <= set(v):
            return False
        if any(w[i] != u[i] for i in range(nvars) if i not in v):
            return False
        return all(w[i] >= u[i] for i in range(nvars))

    return sorted(
        (u, v) for u, v in proper
        if not any((u, v) != q and contains(q, (u, v)) for q in proper)
    )
