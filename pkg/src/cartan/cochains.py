"""Cochains on a standard simplex, and the surjection-operad action on them.

A cochain is supported in a single dimension: it is the set of faces
(strictly increasing vertex tuples) on which it evaluates to 1.  A
surjection s with values in {1..r} acts on r cochains by cutting a
target face into len(s) consecutive blocks that overlap in one vertex,
joining the blocks under each value, and evaluating; overlapping joins
and dimension mismatches contribute zero.  On top of the action sit the
cup-i products, the chain-level Steenrod squares, and the Cartan
coboundary witness together with its defect.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement

from .barratt_eccles import cartan_homotopy, cup_generator
from .f2 import F2Sum, singleton, toggle
from .simplicial import faces_of_dim
from .surjection import table_reduction


class Cochain:
    """GF(2) cochain on the standard `ambient`-simplex, homogeneous of dimension `dim`."""

    __slots__ = ("ambient", "dim", "support")

    def __init__(self, ambient: int, dim: int, support=()):
        if ambient < 0:
            raise ValueError("ambient dimension must be nonnegative")
        faces = frozenset(tuple(f) for f in support)
        for f in faces:
            if len(f) != dim + 1:
                raise ValueError(f"face {f} does not have dimension {dim}")
            if any(not isinstance(v, int) for v in f):
                raise ValueError(f"face {f} has non-integer vertices")
            if any(a >= b for a, b in zip(f, f[1:])):
                raise ValueError(f"face {f} is not strictly increasing")
            if f[0] < 0 or f[-1] > ambient:
                raise ValueError(f"face {f} leaves the ambient simplex")
        self.ambient = ambient
        self.dim = dim
        self.support = faces

    @property
    def is_zero(self) -> bool:
        return not self.support

    def value(self, face: tuple[int, ...]) -> int:
        return 1 if tuple(face) in self.support else 0

    def __add__(self, other: "Cochain") -> "Cochain":
        if not isinstance(other, Cochain):
            return NotImplemented
        if (self.ambient, self.dim) != (other.ambient, other.dim):
            raise ValueError("cochain shapes differ")
        return Cochain(self.ambient, self.dim, self.support ^ other.support)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Cochain)
                and self.ambient == other.ambient
                and self.dim == other.dim
                and self.support == other.support)

    def __hash__(self) -> int:
        return hash((self.ambient, self.dim, self.support))

    def __repr__(self) -> str:
        return f"Cochain({self.ambient}, {self.dim}, {sorted(self.support)!r})"

    def to_dict(self) -> dict:
        return {
            "ambient": self.ambient,
            "dim": self.dim,
            "support": sorted(list(f) for f in self.support),
        }

    @classmethod
    def from_dict(cls, data) -> "Cochain":
        if not isinstance(data, dict):
            raise ValueError("cochain document must be an object")
        extra = set(data) - {"ambient", "dim", "support"}
        if extra:
            raise ValueError(f"unknown cochain fields: {sorted(extra)}")
        try:
            ambient = data["ambient"]
            dim = data["dim"]
            support = data["support"]
        except KeyError as exc:
            raise ValueError(f"missing cochain field: {exc.args[0]}") from None
        if not isinstance(ambient, int) or not isinstance(dim, int):
            raise ValueError("ambient and dim must be integers")
        if not isinstance(support, list) or any(not isinstance(f, list) for f in support):
            raise ValueError("support must be a list of faces")
        faces = [tuple(f) for f in support]
        if len(set(faces)) != len(faces):
            raise ValueError("support contains a repeated face")
        return cls(ambient, dim, faces)


def ones(n: int) -> Cochain:
    """The constant degree-0 cocycle: every vertex."""
    return Cochain(n, 0, faces_of_dim(n, 0))


def delta(a: Cochain) -> Cochain:
    """Simplicial coboundary: parity of codimension-one subfaces in the support."""
    out = []
    for f in faces_of_dim(a.ambient, a.dim + 1):
        cnt = sum(1 for i in range(len(f)) if f[:i] + f[i + 1:] in a.support)
        if cnt % 2:
            out.append(f)
    return Cochain(a.ambient, a.dim + 1, out)


def diagonal_iter(k: int, face: tuple[int, ...]) -> F2Sum:
    """All ways to cut a vertex tuple into k+1 consecutive blocks sharing endpoints."""
    if k < 0:
        raise ValueError("need a nonnegative number of cuts")
    m = len(face) - 1
    terms = []
    for cuts in combinations_with_replacement(range(m + 1), k):
        cs = (0,) + cuts + (m,)
        terms.append(tuple(face[cs[t]:cs[t + 1] + 1] for t in range(k + 1)))
    return F2Sum(terms)


def join(faces) -> tuple[int, ...] | None:
    """Union of pairwise disjoint faces, None when any two overlap."""
    seen: set[int] = set()
    total = 0
    for f in faces:
        total += len(f)
        seen.update(f)
    if len(seen) != total:
        return None
    return tuple(sorted(seen))


@lru_cache(maxsize=None)
def _cut_plans(seq: tuple[int, ...], dims: tuple[int, ...], m: int):
    """Positions, per value, of every cut of an m-face that can evaluate nonzero.

    A plan lists for each value v the target positions joined under v.
    Cuts whose block lengths cannot match the cochain dimensions, or
    whose same-value blocks overlap, are pruned during the recursion.
    The result only depends on the surjection, the dimensions and m, so
    it is cached and shared by every target face.
    """
    r = len(dims)
    counts = [0] * r
    for v in seq:
        counts[v - 1] += 1
    budgets = [d + 1 for d in dims]
    if any(budgets[v] < counts[v] for v in range(r)):
        return ()
    if sum(budgets) != m + len(seq):
        return ()
    plans = []
    pos_acc: list[list[int]] = [[] for _ in range(r)]
    rem = budgets[:]
    cnt = counts[:]
    end = [-1] * r
    n_blocks = len(seq)

    def rec(j: int, pos: int) -> None:
        if j == n_blocks:
            plans.append(tuple(tuple(p) for p in pos_acc))
            return
        v = seq[j] - 1
        if end[v] == pos:
            return
        hi = rem[v] - (cnt[v] - 1)
        lo = hi if cnt[v] == 1 else 1
        saved = end[v]
        for length in range(lo, hi + 1):
            if pos + length - 1 > m:
                break
            pos_acc[v].extend(range(pos, pos + length))
            rem[v] -= length
            cnt[v] -= 1
            end[v] = pos + length - 1
            rec(j + 1, pos + length - 1)
            end[v] = saved
            cnt[v] += 1
            rem[v] += length
            del pos_acc[v][-length:]

    rec(0, 0)
    return tuple(plans)


def apply_surjection(seq: tuple[int, ...], cochains, target: tuple[int, ...]) -> int:
    """Value on `target` of the surjection acting on the given cochains."""
    r = len(cochains)
    if set(seq) != set(range(1, r + 1)):
        raise ValueError("surjection arity does not match the number of cochains")
    ambient = cochains[0].ambient
    if any(c.ambient != ambient for c in cochains):
        raise ValueError("cochains live on different simplices")
    dims = tuple(c.dim for c in cochains)
    m = len(target) - 1
    total = 0
    for plan in _cut_plans(seq, dims, m):
        for c, positions in zip(cochains, plan):
            if tuple(target[p] for p in positions) not in c.support:
                break
        else:
            total ^= 1
    return total


def surjection_monomials(seq: tuple[int, ...], target: tuple[int, ...]) -> frozenset:
    """Parity-reduced set of per-value face assignments realized by cuts of `target`.

    A member (F_1, ..., F_r) stands for the summand prod_v alpha_v(F_v);
    no dimension constraint is imposed, so this is the expansion for
    formal cochain inputs.  Enumerates every cut directly (no pruning),
    which keeps it an independent cross-check of `apply_surjection`.
    """
    r = max(seq)
    acc: set = set()
    for blocks in diagonal_iter(len(seq) - 1, target):
        joins = []
        for v in range(1, r + 1):
            g = join([blocks[t] for t, val in enumerate(seq) if val == v])
            if g is None:
                break
            joins.append(g)
        else:
            toggle(acc, tuple(joins))
    return frozenset(acc)


@lru_cache(maxsize=None)
def cup_surjections(i: int) -> tuple:
    """Surjections acting as the cup-i product, reduced from the cup generator."""
    return tuple(sorted(table_reduction(singleton(cup_generator(i)))))


@lru_cache(maxsize=None)
def witness_surjections(i: int) -> tuple:
    """Arity-4 surjections acting as the degree-i Cartan coboundary witness."""
    return tuple(sorted(table_reduction(cartan_homotopy(singleton(cup_generator(i))))))


def _act_cochain(surjs, cochains, n: int, dim: int) -> Cochain:
    out = []
    for f in faces_of_dim(n, dim):
        val = 0
        for s in surjs:
            val ^= apply_surjection(s, cochains, f)
        if val:
            out.append(f)
    return Cochain(n, dim, out)


def cup(i: int, a: Cochain, b: Cochain) -> Cochain:
    """Cup-i product of two cochains on the same simplex."""
    if i < 0:
        raise ValueError("cup index must be nonnegative")
    if a.ambient != b.ambient:
        raise ValueError("cochains live on different simplices")
    return _act_cochain(cup_surjections(i), (a, b), a.ambient, a.dim + b.dim - i)


def steenrod_square(k: int, a: Cochain) -> Cochain:
    """Chain-level k-th Steenrod square: cup-(dim - k) of a cochain with itself."""
    m = a.dim
    if k > m:
        return Cochain(a.ambient, m + k, ())
    return cup(m - k, a, a)


def cartan_coboundary(i: int, a: Cochain, b: Cochain) -> Cochain:
    """Cochain whose coboundary realizes the degree-i Cartan relation for cocycles.

    The inputs are fed in doubled order (a, a, b, b) to the reduced
    witness surjections; the result has dimension 2 dim a + 2 dim b - i - 1.
    """
    if i < 0:
        raise ValueError("witness index must be nonnegative")
    if a.ambient != b.ambient:
        raise ValueError("cochains live on different simplices")
    dim = 2 * a.dim + 2 * b.dim - i - 1
    return _act_cochain(witness_surjections(i), (a, a, b, b), a.ambient, dim)


def cartan_defect(i: int, a: Cochain, b: Cochain) -> Cochain:
    """delta(witness) + (a cup_0 b) cup_i (a cup_0 b) + sum of (a cup_j a) cup_0 (b cup_k b).

    Zero for cocycle inputs; non-cocycles are rejected.
    """
    if not delta(a).is_zero or not delta(b).is_zero:
        raise ValueError("inputs must be cocycles")
    ab = cup(0, a, b)
    out = delta(cartan_coboundary(i, a, b)) + cup(i, ab, ab)
    for j in range(i + 1):
        out = out + cup(0, cup(j, a, a), cup(i - j, b, b))
    return out
