# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: border-strip character recursion and transposition-tuple
counting.  Mirrors `hurwitz._kernels.pure` exactly; values are identical."""

from libc.stdlib cimport free, malloc

# Character values are bounded by the representation dimension, which stays
# inside 64-bit signed range (with summation headroom) up to this weight.
MAX_WEIGHT = 30

DEF MAX_PARTS = 32
DEF MAX_PAIRS = 496  # MAX_PARTS * (MAX_PARTS - 1) / 2

_memo = {}


def clear_memo():
    _memo.clear()


def memo_size():
    return len(_memo)


def character_value(shape, class_parts):
    """Symmetric-group character by iterated border-strip removal.

    Same contract as the pure kernel; weights must not exceed MAX_WEIGHT.
    """
    cdef unsigned char lam[MAX_PARTS]
    cdef unsigned char mu[MAX_PARTS]
    cdef int nl = len(shape)
    cdef int nm = len(class_parts)
    cdef int i
    if sum(shape) != sum(class_parts):
        raise ValueError("shape and class must have equal weight")
    if sum(shape) > MAX_WEIGHT:
        raise OverflowError(f"compiled kernel handles weight <= {MAX_WEIGHT}")
    for i in range(nl):
        lam[i] = shape[i]
    for i in range(nm):
        mu[i] = class_parts[i]
    return _chi(lam, nl, mu, nm)


cdef long long _chi(unsigned char* shape, int rows, unsigned char* parts, int nparts):
    if nparts == 0:
        return 1
    key = shape[:rows] + b"\x00" + parts[:nparts]
    val = _memo.get(key)
    if val is not None:
        return val

    cdef int strip = parts[0]
    cdef long long total = 0, term
    cdef unsigned char child[MAX_PARTS]
    cdef int i, j, r, n, nu_j, lower
    # A removable border strip is determined by the consecutive rows i..j it
    # occupies on the rim: rows i..j-1 drop to shape[r+1]-1 and row j keeps
    # nu_j = shape[i] + (j-i) - strip cells.  Sign is (-1)**(rows spanned - 1).
    for i in range(rows):
        for j in range(i, rows):
            nu_j = shape[i] + (j - i) - strip
            if nu_j > <int> shape[j] - 1:
                break  # grows with j while the bound shrinks: no later j fits
            lower = shape[j + 1] if j + 1 < rows else 0
            if nu_j < lower:
                continue
            n = 0
            for r in range(i):
                child[n] = shape[r]
                n += 1
            for r in range(i, j):
                if shape[r + 1] > 1:
                    child[n] = shape[r + 1] - 1
                    n += 1
            if nu_j > 0:
                child[n] = nu_j
                n += 1
            for r in range(j + 1, rows):
                child[n] = shape[r]
                n += 1
            term = _chi(child, n, parts + 1, nparts - 1)
            if (j - i) & 1:
                total -= term
            else:
                total += term

    _memo[key] = total
    return total


def count_transposition_factorizations(int d, tuple alphas, int k, bint transitive):
    """Number of ordered k-tuples of transpositions tau_1..tau_k in S(d) with
    alpha_1 ... alpha_s tau_1 ... tau_k = identity (products applied left to
    right), optionally restricted to tuples where the alphas and taus together
    generate a transitive subgroup.  Same contract as the pure kernel.
    """
    if d < 1 or d > MAX_PARTS:
        raise ValueError(f"degree must be in 1..{MAX_PARTS}")
    if k < 0:
        raise ValueError("transposition count must be nonnegative")

    cdef int npairs = d * (d - 1) // 2
    cdef signed char pair_a[MAX_PAIRS]
    cdef signed char pair_b[MAX_PAIRS]
    cdef signed char base_parent[MAX_PARTS]
    cdef signed char* prods = NULL
    cdef int* chosen = NULL
    cdef int i, a, b, x, need
    cdef long long result

    i = 0
    for a in range(d):
        for b in range(a + 1, d):
            pair_a[i] = a
            pair_b[i] = b
            i += 1

    prods = <signed char*> malloc((k + 1) * d * sizeof(signed char))
    chosen = <int*> malloc((k if k > 0 else 1) * sizeof(int))
    if prods == NULL or chosen == NULL:
        free(prods)
        free(chosen)
        raise MemoryError()
    try:
        for x in range(d):
            prods[x] = x
        for alpha in alphas:
            if len(alpha) != d:
                raise ValueError("permutation has wrong degree")
            for x in range(d):
                prods[x] = alpha[prods[x]]

        for x in range(d):
            base_parent[x] = x
        for alpha in alphas:
            for x in range(d):
                _union(base_parent, x, alpha[x])

        need = d - _cycle_count(prods, d)
        if need > k or (k - need) & 1:
            return 0
        result = _dfs(prods, chosen, pair_a, pair_b, npairs, d, 0, k,
                      transitive, base_parent)
        return result
    finally:
        free(prods)
        free(chosen)


cdef long long _dfs(signed char* prods, int* chosen, signed char* pair_a,
                    signed char* pair_b, int npairs, int d, int depth, int k,
                    bint transitive, signed char* base_parent):
    cdef signed char parent[MAX_PARTS]
    cdef signed char* row
    cdef signed char* child
    cdef long long total = 0
    cdef int idx, x, a, b, need, remaining, roots
    cdef signed char v

    if depth == k:
        # the prune guarantees the partial product is the identity here
        if not transitive:
            return 1
        for x in range(d):
            parent[x] = base_parent[x]
        for idx in range(k):
            _union(parent, pair_a[chosen[idx]], pair_b[chosen[idx]])
        roots = 0
        for x in range(d):
            if _find(parent, x) == x:
                roots += 1
        return 1 if roots == 1 else 0

    row = prods + depth * d
    child = prods + (depth + 1) * d
    remaining = k - depth - 1
    for idx in range(npairs):
        a = pair_a[idx]
        b = pair_b[idx]
        for x in range(d):
            v = row[x]
            child[x] = b if v == a else (a if v == b else v)
        need = d - _cycle_count(child, d)
        if need <= remaining and not (remaining - need) & 1:
            chosen[depth] = idx
            total += _dfs(prods, chosen, pair_a, pair_b, npairs, d, depth + 1,
                          k, transitive, base_parent)
    return total


cdef inline int _cycle_count(signed char* perm, int d):
    cdef unsigned int seen = 0
    cdef int count = 0, x, y
    for x in range(d):
        if not (seen >> x) & 1:
            count += 1
            y = x
            while not (seen >> y) & 1:
                seen |= 1u << y
                y = perm[y]
    return count


cdef inline int _find(signed char* parent, int x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef inline void _union(signed char* parent, int x, int y):
    cdef int rx = _find(parent, x)
    cdef int ry = _find(parent, y)
    if rx != ry:
        parent[rx] = ry
