"""Brute-force reference implementations used to cross-check the engine.

Everything here works by exhaustive enumeration over bounded monomial or
assignment spaces, deliberately avoiding the package's own algorithms.
"""

from __future__ import annotations

import itertools
from random import Random

from steinerideals import Hypergraph, Monomial


def iter_monomials(nvars: int, max_degree: int):
    """All exponent tuples with total degree <= max_degree."""

    def rec(idx, left):
        if idx == nvars - 1:
            for e in range(left + 1):
                yield (e,)
            return
        for e in range(left + 1):
            for rest in rec(idx + 1, left - e):
                yield (e,) + rest

    yield from rec(0, max_degree)


def divides(g: tuple, w: tuple) -> bool:
    return all(a <= b for a, b in zip(g, w))


def members_up_to(gens: list[tuple], nvars: int, max_degree: int) -> frozenset:
    """All monomials of degree <= max_degree divisible by some generator."""
    return frozenset(
        w for w in iter_monomials(nvars, max_degree) if any(divides(g, w) for g in gens)
    )


def product_members_up_to(gA: list[tuple], gB: list[tuple], nvars: int, D: int) -> frozenset:
    """Membership of the product ideal: divisibility by some g+h."""
    sums = [tuple(a + b for a, b in zip(g, h)) for g in gA for h in gB]
    return members_up_to(sums, nvars, D)


def brute_member_of_power(w: tuple, gens: list[tuple], r: int, slack: int) -> bool:
    """Exhaustive multiset search for a dividing product of r generators."""
    if r == 0:
        return sum(w) >= slack
    for combo in itertools.combinations_with_replacement(gens, r):
        prod = [0] * len(w)
        for g in combo:
            prod = [a + b for a, b in zip(prod, g)]
        if divides(tuple(prod), w) and sum(w) - sum(prod) >= slack:
            return True
    return False


def brute_symbolic_members(supports, nvars: int, m: int, max_degree: int) -> frozenset:
    """Monomials of degree <= max_degree with every support-degree >= m."""
    out = []
    for w in iter_monomials(nvars, max_degree):
        if all(sum(w[i - 1] for i in s) >= m for s in supports):
            out.append(w)
    return frozenset(out)


def brute_coverable(vertex_count: int, edges, c: int) -> bool:
    """Exhaustive scan of all label assignments for a c-cover partition."""
    for labels in itertools.product(range(1, c + 1), repeat=vertex_count):
        if set(labels) != set(range(1, c + 1)):
            continue
        if all(
            set(labels[x - 1] for x in e) == set(range(1, c + 1)) for e in edges
        ):
            return True
    return False


def brute_colourable(vertex_count: int, edges, m: int) -> bool:
    """Exhaustive scan for a weak m-colouring (no monochromatic edge)."""
    for labels in itertools.product(range(1, m + 1), repeat=vertex_count):
        if all(len(set(labels[x - 1] for x in e)) > 1 for e in edges):
            return True
    return False


def random_generators(rng: Random, max_vars=5, max_gens=6, max_degree=4):
    """A random generating set (not necessarily minimal), plus its ring size."""
    nv = rng.randint(2, max_vars)
    k = rng.randint(1, max_gens)
    gens = []
    for _ in range(k):
        total = rng.randint(1, max_degree)
        exps = [0] * nv
        for _ in range(total):
            exps[rng.randrange(nv)] += 1
        gens.append(tuple(exps))
    return nv, gens


def as_monomials(gens):
    return [Monomial(g) for g in gens]


def random_hypergraph(rng: Random, max_vertices=8) -> Hypergraph:
    """Random small hypergraph; vertex set is the union of its edges."""
    pool = rng.randint(3, max_vertices)
    edge_count = rng.randint(2, 6)
    edges = []
    for _ in range(edge_count):
        size = rng.randint(2, min(4, pool))
        edges.append(tuple(rng.sample(range(1, pool + 1), size)))
    used = sorted(set(itertools.chain.from_iterable(edges)))
    relabel = {old: new for new, old in enumerate(used, start=1)}
    edges = [tuple(relabel[x] for x in e) for e in edges]
    return Hypergraph(len(used), tuple(edges))


def random_supports(rng: Random, max_vars=6, max_supports=5):
    """Random support family for symbolic-power cross-checks."""
    nv = rng.randint(2, max_vars)
    k = rng.randint(1, max_supports)
    sups = []
    for _ in range(k):
        size = rng.randint(1, min(3, nv))
        sups.append(tuple(sorted(rng.sample(range(1, nv + 1), size))))
    return nv, sups
