"""The surjection operad in chains over GF(2), with table reduction.

An arity-r generator is a tuple s = (s(1), ..., s(k)) of values in
{1, ..., r}; it is a basis element only if it is onto {1, ..., r} and no
two neighbouring values agree, and it counts as zero otherwise.  The
internal degree is the excess k - r.  Only normalized tuples flow
between functions, so the arity of a basis element is always max(s).

`table_reduction` maps Barratt-Eccles basis elements onto surjections.
The element (sigma_0, ..., sigma_n) is read as a table with one row per
permutation.  For every composition a = (a_0, ..., a_n) of n + r with
positive parts, a sequence of n + r values is produced by taking, a_i
times in row i, the first value of sigma_i not yet used -- where the
last value produced by each non-final row stays available to later rows.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement

from .f2 import F2Sum, singleton, toggle


def is_basis_surjection(seq: tuple[int, ...], r: int) -> bool:
    """Onto {1..r} with no equal neighbours."""
    if any(a == b for a, b in zip(seq, seq[1:])):
        return False
    return len(set(seq)) == r


def surj_normalize(seq, r: int) -> F2Sum:
    """The class of a value tuple: itself if a basis element, zero otherwise."""
    seq = tuple(seq)
    for v in seq:
        if not 1 <= v <= r:
            raise ValueError(f"value {v} outside 1..{r}")
    if is_basis_surjection(seq, r):
        return singleton(seq)
    return F2Sum()


def surj_degree(seq: tuple[int, ...]) -> int:
    """Excess of a basis element: length minus arity."""
    return len(seq) - max(seq)


def surj_boundary(c: F2Sum) -> F2Sum:
    """Delete one value at a time, dropping non-basis results."""
    acc: set = set()
    for s in c:
        r = max(s)
        for k in range(len(s)):
            t = s[:k] + s[k + 1:]
            if is_basis_surjection(t, r):
                toggle(acc, t)
    return F2Sum(frozenset(acc))


def surj_act(sigma: tuple[int, ...], s: tuple[int, ...]) -> tuple[int, ...]:
    """Relabel the values of a basis element by a permutation of its arity."""
    if len(sigma) != max(s):
        raise ValueError("arity mismatch between permutation and surjection")
    return tuple(sigma[v - 1] for v in s)


def surj_compose(s2: tuple[int, ...], p: int, s1: tuple[int, ...]) -> F2Sum:
    """Substitute s1 into the p-th input of s2.

    If p occurs k times in s2, sum over the nondecreasing index tuples
    1 = j_0 <= j_1 <= ... <= j_k = len(s1): the t-th occurrence of p is
    replaced by the stretch s1(j_{t-1}) .. s1(j_t).  Values coming from
    s1 are shifted up by p - 1 and values of s2 above p by max(s1) - 1,
    so the result is an arity max(s1) + max(s2) - 1 tuple; each flattened
    tuple is normalized.  Degrees add.
    """
    r2, r1, n1 = max(s2), max(s1), len(s1)
    if not 1 <= p <= r2:
        raise ValueError(f"input position {p} outside 1..{r2}")
    k = s2.count(p)
    acc: set = set()
    for mids in combinations_with_replacement(range(1, n1 + 1), k - 1):
        js = (1,) + mids + (n1,)
        if any(a > b for a, b in zip(js, js[1:])):
            continue
        out: list[int] = []
        t = 0
        for v in s2:
            if v < p:
                out.append(v)
            elif v > p:
                out.append(v + r1 - 1)
            else:
                lo, hi = js[t], js[t + 1]
                t += 1
                out.extend(w + p - 1 for w in s1[lo - 1:hi])
        seq = tuple(out)
        if is_basis_surjection(seq, r1 + r2 - 1):
            toggle(acc, seq)
    return F2Sum(frozenset(acc))


def compositions(total: int, parts: int):
    """Ordered compositions of `total` into `parts` positive summands, lexicographic."""
    for cuts in combinations(range(1, total), parts - 1):
        prev = 0
        out = []
        for c in cuts:
            out.append(c - prev)
            prev = c
        out.append(total - prev)
        yield tuple(out)


def reduce_table(perms: tuple, a: tuple[int, ...]) -> tuple[int, ...]:
    """Read one value sequence off the table `perms` with row lengths `a`.

    Row i contributes a_i values, each time the first entry of perms[i]
    not currently used; closing a non-final row releases its last value
    for reuse by later rows.
    """
    used: set[int] = set()
    out: list[int] = []
    last = len(a) - 1
    for i, cnt in enumerate(a):
        row = perms[i]
        for _ in range(cnt):
            v = next(x for x in row if x not in used)
            out.append(v)
            used.add(v)
        if i != last:
            used.discard(out[-1])
    return tuple(out)


def table_reduction(c: F2Sum) -> F2Sum:
    """Degree-preserving operad map from Barratt-Eccles elements to surjections."""
    acc: set = set()
    for e in c:
        r = len(e[0])
        n = len(e) - 1
        for a in compositions(n + r, n + 1):
            seq = reduce_table(e, a)
            if is_basis_surjection(seq, r):
                toggle(acc, seq)
    return F2Sum(frozenset(acc))
