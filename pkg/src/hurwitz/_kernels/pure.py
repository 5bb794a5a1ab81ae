"""Pure-Python kernels: border-strip character recursion and transposition-tuple
counting.

These are the reference implementations.  The compiled extension module
mirrors them exactly; `hurwitz._kernels` picks whichever is available.
"""

from __future__ import annotations

import threading

_memo: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
_memo_lock = threading.Lock()


def clear_memo() -> None:
    _memo.clear()


def memo_size() -> int:
    return len(_memo)


def character_value(shape: tuple[int, ...], class_parts: tuple[int, ...]) -> int:
    """Symmetric-group character by iterated border-strip removal.

    Strips are removed for the class parts in the given (descending) order.
    Both arguments must be weakly decreasing positive tuples of equal weight;
    the caller is responsible for canonical form.
    """
    if sum(shape) != sum(class_parts):
        raise ValueError("shape and class must have equal weight")
    return _chi(tuple(shape), tuple(class_parts))


def _chi(shape: tuple[int, ...], parts: tuple[int, ...]) -> int:
    if not parts:
        return 1
    key = (shape, parts)
    cached = _memo.get(key)
    if cached is not None:
        return cached

    strip = parts[0]
    rest = parts[1:]
    rows = len(shape)
    total = 0
    # A removable border strip is determined by the consecutive rows i..j it
    # occupies on the rim: rows i..j-1 drop to shape[r+1]-1 and row j keeps
    # nu_j = shape[i] + (j-i) - strip cells.  Sign is (-1)**(rows spanned - 1).
    for i in range(rows):
        for j in range(i, rows):
            nu_j = shape[i] + (j - i) - strip
            if nu_j > shape[j] - 1:
                break  # grows with j while the bound shrinks: no later j fits
            lower = shape[j + 1] if j + 1 < rows else 0
            if nu_j < lower:
                continue
            mid = tuple(shape[r + 1] - 1 for r in range(i, j) if shape[r + 1] > 1)
            tail = (nu_j,) if nu_j else ()
            child = shape[:i] + mid + tail + shape[j + 1 :]
            term = _chi(child, rest)
            total += -term if (j - i) & 1 else term

    with _memo_lock:
        _memo[key] = total
    return total


def count_transposition_factorizations(
    d: int, alphas: tuple[tuple[int, ...], ...], k: int, transitive: bool
) -> int:
    """Number of ordered k-tuples of transpositions tau_1..tau_k in S(d) with
    alpha_1 ... alpha_s tau_1 ... tau_k = identity (products applied left to
    right), optionally restricted to tuples where the alphas and taus together
    generate a transitive subgroup.

    Branches are pruned when the remaining slots cannot rewrite the partial
    product to the identity (cycle-distance bound plus parity); the prune is
    exact, so every surviving leaf has identity product.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    if k < 0:
        raise ValueError("transposition count must be nonnegative")

    product = tuple(range(d))
    for alpha in alphas:
        if len(alpha) != d:
            raise ValueError("permutation has wrong degree")
        product = tuple(alpha[v] for v in product)

    pairs = [(a, b) for a in range(d) for b in range(a + 1, d)]

    base_parent = list(range(d))
    for alpha in alphas:
        for x in range(d):
            _union(base_parent, x, alpha[x])

    chosen: list[tuple[int, int]] = []

    def leaf() -> int:
        if not transitive:
            return 1
        parent = base_parent[:]
        for a, b in chosen:
            _union(parent, a, b)
        roots = sum(1 for x in range(d) if _find(parent, x) == x)
        return 1 if roots == 1 else 0

    def descend(pi: tuple[int, ...], remaining: int) -> int:
        if remaining == 0:
            return leaf()
        total = 0
        for a, b in pairs:
            child = tuple(b if v == a else a if v == b else v for v in pi)
            need = d - _cycle_count(child)
            if need <= remaining - 1 and not (remaining - 1 - need) & 1:
                chosen.append((a, b))
                total += descend(child, remaining - 1)
                chosen.pop()
        return total

    need = d - _cycle_count(product)
    if need > k or (k - need) & 1:
        return 0
    return descend(product, k)


def _cycle_count(perm: tuple[int, ...]) -> int:
    seen = 0
    count = 0
    for x in range(len(perm)):
        if not (seen >> x) & 1:
            count += 1
            y = x
            while not (seen >> y) & 1:
                seen |= 1 << y
                y = perm[y]
    return count


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _union(parent: list[int], x: int, y: int) -> None:
    rx, ry = _find(parent, x), _find(parent, y)
    if rx != ry:
        parent[rx] = ry
