"""Verification sweeps: homotopy lemma suites, structural identities, Cartan defects.

Each suite walks an exhaustive basis range (plus seeded random samples
where the basis is unbounded or large) and records counterexample
payloads; an empty failure list means the identity held everywhere.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .barratt_eccles import (MID_SWAP4, SWAP2, be_boundary, compose_perm,
                             cup_generator, diag_embed, diagonal_homotopy,
                             cartan_homotopy, embedding_homotopy, nerve_map,
                             outer_embed, product_of_squares, sigma_act,
                             squared_product)
from .cochains import Cochain, cartan_defect, delta, ones
from .f2 import F2Sum, hom_boundary, singleton
from .simplicial import (aw, boundary, degree_simplices, ez, faces_of_dim,
                         is_degenerate, product, shih)
from .surjection import surj_act, surj_boundary, table_reduction


@dataclass
class VerifyReport:
    suite: str
    failures: list
    elapsed: float
    i: int | None = None
    n: int | None = None
    trials: int = 0
    seed: int | None = None
    params: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "i": self.i,
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "failures": self.failures,
            "elapsed": round(self.elapsed, 3),
            "params": self.params,
        }


def sum_to_lists(c: F2Sum) -> list:
    return [[list(part) for part in term] for term in c.sorted_terms()]


# --- basis enumeration and sampling ---

def swap_classes(degree: int) -> list[tuple]:
    """Both arity-2 basis elements of the given degree (entries alternate)."""
    base = cup_generator(degree)
    return [base, tuple(compose_perm(SWAP2, s) for s in base)]


def arity_basis(r: int, degree: int) -> list[tuple]:
    """Every arity-r basis element of the given degree."""
    from itertools import permutations

    perms = [tuple(p) for p in permutations(range(1, r + 1))]
    out = [(p,) for p in perms]
    for _ in range(degree):
        out = [e + (p,) for e in out for p in perms if p != e[-1]]
    return out


def lemma_inputs(max_degree: int, samples: int, seed: int) -> list[tuple]:
    """Exhaustive arity-2 elements through max_degree, then seeded samples one degree up."""
    inputs = [e for d in range(max_degree + 1) for e in swap_classes(d)]
    rng = random.Random(seed)
    above = swap_classes(max_degree + 1)
    inputs.extend(rng.choice(above) for _ in range(samples))
    return inputs


def random_cochain(rng: random.Random, n: int, dim: int) -> Cochain:
    return Cochain(n, dim, [f for f in faces_of_dim(n, dim) if rng.getrandbits(1)])


# --- homotopy lemma suites ---

def _lemma_report(name, max_degree, samples, seed, check) -> VerifyReport:
    t0 = time.perf_counter()
    failures = []
    inputs = lemma_inputs(max_degree, samples, seed)
    for e in inputs:
        failure = check(e)
        if failure is not None:
            failures.append(failure)
    return VerifyReport(name, failures, time.perf_counter() - t0,
                        trials=len(inputs), seed=seed,
                        params={"max_degree": max_degree, "samples": samples})


def run_boundary_h1(max_degree: int = 4, samples: int = 500, seed: int = 0) -> VerifyReport:
    """boundary(h1) equals the twisted outer nerve map plus the diagonal nerve map."""
    d_h1 = hom_boundary(embedding_homotopy, be_boundary, be_boundary)

    def check(e):
        c = singleton(e)
        lhs = d_h1(c)
        rhs = sigma_act(MID_SWAP4, nerve_map(outer_embed, c)) + nerve_map(diag_embed, c)
        if lhs != rhs:
            return {"element": [list(p) for p in e],
                    "lhs": sum_to_lists(lhs), "rhs": sum_to_lists(rhs)}
        return None

    return _lemma_report("boundary-h1", max_degree, samples, seed, check)


def run_equiv_h1(max_degree: int = 4, samples: int = 500, seed: int = 0) -> VerifyReport:
    """h1 intertwines the swap action with its diagonal arity-4 image."""

    def check(e):
        c = singleton(e)
        lhs = embedding_homotopy(sigma_act(SWAP2, c))
        rhs = sigma_act(diag_embed(SWAP2), embedding_homotopy(c))
        if lhs != rhs:
            return {"element": [list(p) for p in e],
                    "lhs": sum_to_lists(lhs), "rhs": sum_to_lists(rhs)}
        return None

    return _lemma_report("equiv-h1", max_degree, samples, seed, check)


def run_boundary_h2(max_degree: int = 4, samples: int = 500, seed: int = 0) -> VerifyReport:
    """boundary(h2) compares the diagonal nerve map with product_of_squares.

    Also checks that the outer nerve map agrees with squared_product and
    that the combined homotopy has the advertised total boundary.
    """
    d_h2 = hom_boundary(diagonal_homotopy, be_boundary, be_boundary)
    d_h = hom_boundary(cartan_homotopy, be_boundary, be_boundary)

    def check(e):
        c = singleton(e)
        sq_prod = squared_product(c)
        if nerve_map(outer_embed, c) != sq_prod:
            return {"element": [list(p) for p in e], "identity": "outer-vs-squared-product"}
        if d_h2(c) != nerve_map(diag_embed, c) + product_of_squares(c):
            return {"element": [list(p) for p in e], "identity": "boundary-h2"}
        if d_h(c) != sigma_act(MID_SWAP4, sq_prod) + product_of_squares(c):
            return {"element": [list(p) for p in e], "identity": "total-boundary"}
        return None

    return _lemma_report("boundary-h2", max_degree, samples, seed, check)


def run_equiv_h2(max_degree: int = 4, samples: int = 500, seed: int = 0) -> VerifyReport:
    """h2 intertwines the swap action with its diagonal arity-4 image."""

    def check(e):
        c = singleton(e)
        lhs = diagonal_homotopy(sigma_act(SWAP2, c))
        rhs = sigma_act(diag_embed(SWAP2), diagonal_homotopy(c))
        if lhs != rhs:
            return {"element": [list(p) for p in e],
                    "lhs": sum_to_lists(lhs), "rhs": sum_to_lists(rhs)}
        return None

    return _lemma_report("equiv-h2", max_degree, samples, seed, check)


# --- structural identity suites ---

def product_basis(n_left: int, n_right: int, degree: int) -> list[tuple]:
    """Nondegenerate product simplices of two standard simplices."""
    out = []
    for x in degree_simplices(n_left, degree):
        for y in degree_simplices(n_right, degree):
            z = product(x, y)
            if not is_degenerate(z):
                out.append(z)
    return out


def run_shih_homotopy(max_degree: int = 4, max_ambient: int = 4) -> VerifyReport:
    """boundary(shih) + shih(boundary) equals ez o aw + identity on products."""
    t0 = time.perf_counter()
    failures = []
    trials = 0
    d_shih = hom_boundary(shih, boundary, boundary)
    for a in range(max_ambient + 1):
        for b in range(max_ambient + 1 - a):
            for degree in range(max_degree + 1):
                for z in product_basis(a, b, degree):
                    trials += 1
                    c = singleton(z)
                    if d_shih(c) != ez(aw(c)) + c:
                        failures.append({"ambient": [a, b],
                                         "element": [list(lab) for lab in z]})
    return VerifyReport("shih-homotopy", failures, time.perf_counter() - t0,
                        trials=trials,
                        params={"max_degree": max_degree, "max_ambient": max_ambient})


def run_aw_ez_identity(max_bidegree: int = 4, max_ambient: int = 4) -> VerifyReport:
    """aw o ez is the identity on tensor terms."""
    t0 = time.perf_counter()
    failures = []
    trials = 0
    for a in range(max_ambient + 1):
        faces_a = [f for m in range(a + 1) for f in faces_of_dim(a, m)]
        for b in range(max_ambient + 1):
            faces_b = [f for m in range(b + 1) for f in faces_of_dim(b, m)]
            for x in faces_a:
                for y in faces_b:
                    if len(x) + len(y) - 2 > max_bidegree:
                        continue
                    trials += 1
                    t = singleton((x, y))
                    if aw(ez(t)) != t:
                        failures.append({"ambient": [a, b],
                                         "x": list(x), "y": list(y)})
    return VerifyReport("aw-ez-identity", failures, time.perf_counter() - t0,
                        trials=trials,
                        params={"max_bidegree": max_bidegree, "max_ambient": max_ambient})


def run_tr_chain_map(max_degree: int = 4, arities=(2, 3)) -> VerifyReport:
    """table_reduction commutes with boundaries and with the symmetric action."""
    from itertools import permutations

    t0 = time.perf_counter()
    failures = []
    trials = 0
    for r in arities:
        sigmas = [tuple(p) for p in permutations(range(1, r + 1))]
        for degree in range(max_degree + 1):
            for e in arity_basis(r, degree):
                trials += 1
                c = singleton(e)
                tr = table_reduction(c)
                if surj_boundary(tr) != table_reduction(be_boundary(c)):
                    failures.append({"element": [list(p) for p in e],
                                     "identity": "chain-map"})
                    continue
                for sigma in sigmas:
                    acted = F2Sum(surj_act(sigma, s) for s in tr)
                    if acted != table_reduction(sigma_act(sigma, c)):
                        failures.append({"element": [list(p) for p in e],
                                         "sigma": list(sigma),
                                         "identity": "equivariance"})
                        break
    return VerifyReport("tr-chain-map", failures, time.perf_counter() - t0,
                        trials=trials,
                        params={"max_degree": max_degree, "arities": list(arities)})


# --- the Cartan defect sweep ---

def cocycle_dim_pool(n: int, i: int) -> list[tuple[int, int]]:
    """Coboundary dimension pairs, preferring ones whose defect has faces to live on."""
    top = max(n, 1)
    every = [(d1, d2) for d1 in range(top) for d2 in range(top)]
    feasible = [p for p in every if 2 * (p[0] + 1) + 2 * (p[1] + 1) - i <= n]
    return feasible or every


def run_cartan(i: int, n: int, trials: int = 100, seed: int = 0,
               dims: tuple[int, int] | None = None) -> VerifyReport:
    """Defect of the witness on seeded random coboundary pairs plus constant cocycles."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    failures = []
    const = ones(n)
    defect = cartan_defect(i, const, const)
    if not defect.is_zero:
        failures.append({"trial": "constant", "defect": defect.to_dict()})
    pool = cocycle_dim_pool(n, i)
    for t in range(trials):
        d1, d2 = dims if dims is not None else rng.choice(pool)
        g1 = random_cochain(rng, n, d1)
        g2 = random_cochain(rng, n, d2)
        a, b = delta(g1), delta(g2)
        defect = cartan_defect(i, a, b)
        if not defect.is_zero:
            failures.append({"trial": t,
                             "gamma1": g1.to_dict(), "gamma2": g2.to_dict(),
                             "alpha": a.to_dict(), "beta": b.to_dict(),
                             "defect": defect.to_dict()})
    return VerifyReport("cartan", failures, time.perf_counter() - t0,
                        i=i, n=n, trials=trials, seed=seed,
                        params={} if dims is None else {"dims": list(dims)})


LEMMA_SUITES = {
    "boundary-h1": run_boundary_h1,
    "equiv-h1": run_equiv_h1,
    "boundary-h2": run_boundary_h2,
    "equiv-h2": run_equiv_h2,
}

STRUCTURAL_SUITES = {
    "shih-homotopy": run_shih_homotopy,
    "aw-ez-identity": run_aw_ez_identity,
    "tr-chain-map": run_tr_chain_map,
}
