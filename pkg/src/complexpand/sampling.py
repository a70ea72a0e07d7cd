"""Seeded random generators for complexes, graphs, and copy vectors.

Every generator takes an explicit ``random.Random`` so reports quoting a
seed reproduce byte for byte.
"""

from __future__ import annotations

import random
from itertools import combinations

from .bitsets import canonical_sort, mask_of, maximal_masks
from .complexes import SimplicialComplex
from .errors import BudgetExceeded
from .hypergraphs import Graph
from .structure import find_shelling

DEFAULT_MAX_VERTICES = 6
DEFAULT_MAX_COPY = 3
DEFAULT_TOTAL_COPY_CAP = 12


def child_seed(seed: int, trial: int) -> int:
    """Per-trial seed: trials stay independent of each other while the whole
    run reproduces from the one top-level seed."""
    return seed * 1_000_003 + trial


def _names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def random_complex(
    rng: random.Random,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    *,
    max_facets: int | None = None,
) -> SimplicialComplex:
    """A nonvoid complex on 1..max_vertices named vertices: random nonempty
    subsets, maximalized."""
    n = rng.randint(1, max_vertices)
    cap = max_facets if max_facets is not None else n + 2
    universe = (1 << n) - 1
    masks = [rng.randint(1, universe) for _ in range(rng.randint(1, cap))]
    return SimplicialComplex.from_masks(_names(n), maximal_masks(masks))


def random_pure_complex(
    rng: random.Random, max_vertices: int = DEFAULT_MAX_VERTICES
) -> SimplicialComplex:
    """A pure complex: a random set of k-subsets for one random k."""
    n = rng.randint(1, max_vertices)
    k = rng.randint(1, n)
    pool = [mask_of(c) for c in combinations(range(n), k)]
    count = rng.randint(1, len(pool))
    return SimplicialComplex.from_masks(_names(n), rng.sample(pool, count))


def random_graph(
    rng: random.Random,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    *,
    edge_probability: float = 0.5,
) -> Graph:
    n = rng.randint(2, max_vertices)
    masks = [
        (1 << i) | (1 << j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < edge_probability
    ]
    return Graph(_names(n), canonical_sort(masks))


def random_copies(
    rng: random.Random,
    n: int,
    *,
    max_copy: int = DEFAULT_MAX_COPY,
    total_cap: int | None = DEFAULT_TOTAL_COPY_CAP,
    all_above_one: bool = False,
) -> tuple[int, ...]:
    """A copy vector with entries in 1..max_copy; if total_cap is given,
    entries are decremented (at random positions) until the sum fits, so the
    expanded vertex count stays tractable."""
    low = 2 if all_above_one else 1
    if total_cap is not None and n * low > total_cap:
        raise ValueError(f"cannot fit {n} entries >= {low} under cap {total_cap}")
    cs = [rng.randint(low, max(low, max_copy)) for _ in range(n)]
    if total_cap is not None:
        while sum(cs) > total_cap:
            idx = [i for i, s in enumerate(cs) if s > low]
            cs[rng.choice(idx)] -= 1
    return tuple(cs)


def random_shellable_complex(
    rng: random.Random,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    *,
    pure: bool = False,
    max_facets: int = 6,
    attempts: int = 200,
) -> tuple[SimplicialComplex, tuple]:
    """Rejection-sample until a shellable complex turns up; returns the
    complex together with a shelling of it."""
    for _ in range(attempts):
        sc = (
            random_pure_complex(rng, max_vertices)
            if pure
            else random_complex(rng, max_vertices, max_facets=max_facets)
        )
        if sc.facet_count > max_facets:
            continue
        try:
            order = find_shelling(sc)
        except BudgetExceeded:
            continue
        if order is not None:
            return sc, order
    raise RuntimeError(f"no shellable complex found in {attempts} attempts")
