"""Shared helpers: seeded samplers and independent brute-force oracles."""

from __future__ import annotations

import itertools
import random

import pytest

from genfermat.arrangement import (
    Arrangement,
    LambdaParams,
    ProjectivePoint,
    ProjectiveMap,
    membership_Xnd,
)
from genfermat.errors import SingularMap


def rng_for(name: str) -> random.Random:
    return random.Random(f"genfermat::{name}")


def random_gp_lambda(field, d, n, rng, tries=20000) -> LambdaParams:
    """Rejection-sample a parameter in the general-position locus."""
    for _ in range(tries):
        rows = [[field.random_element(rng) for _ in range(d)]
                for _ in range(n - d - 1)]
        lam = LambdaParams(field, d, n, rows)
        if membership_Xnd(lam):
            return lam
    raise AssertionError("no general-position parameter found")


def random_gp_arrangement(field, d, n, rng, tries=20000) -> Arrangement:
    from genfermat.arrangement import is_general_position

    for _ in range(tries):
        hps = []
        seen = set()
        while len(hps) < n + 1:
            coords = tuple(field.random_element(rng) for _ in range(d + 1))
            if all(c.code == 0 for c in coords):
                continue
            pp = ProjectivePoint(coords)
            if pp not in seen:
                seen.add(pp)
                hps.append(pp)
        arr = Arrangement(d, hps, field)
        if is_general_position(arr):
            return arr
    raise AssertionError("no general-position arrangement found")


def random_projective_map(field, d, rng) -> ProjectiveMap:
    while True:
        rows = [[field.random_element(rng) for _ in range(d + 1)]
                for _ in range(d + 1)]
        try:
            return ProjectiveMap(rows)
        except SingularMap:
            continue


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------

def det_by_permutation_expansion(rows):
    """Determinant as a signed sum over permutations; independent of the
    Gaussian-elimination implementation."""
    n = len(rows)
    field = rows[0][0].owner
    total = field.zero()
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = field.one()
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + term if sign == 1 else total - term
    return total


def naive_point_count(mdl, field=None):
    """Count projective solutions by looping over every coordinate tuple."""
    from genfermat.ff import embed

    f = field if field is not None else mdl.field
    rows = [[embed(c, f) for c in row] for row in mdl.forms]
    n1 = mdl.n + 1
    count = 0
    for codes in itertools.product(range(f.q), repeat=n1):
        lead = next((i for i, c in enumerate(codes) if c != 0), None)
        if lead is None or codes[lead] != 1:
            continue  # not the canonical representative
        coords = [f.from_code(c) for c in codes]
        if all(_eval_form(row, coords, mdl.k, f) for row in rows):
            count += 1
    return count


def _eval_form(row, coords, k, f):
    acc = f.zero()
    for c, x in zip(row, coords):
        if c.code:
            acc = acc + c * (x ** k)
    return acc.code == 0


def brute_eigen_profile(g, search_field):
    """Projective fixed-space dimensions by scanning every eigenvalue of a
    dense matrix over an explicitly provided splitting field."""
    from genfermat import linalg
    from genfermat.ff import embed

    rows = [[embed(x, search_field) for x in r] for r in g.matrix()]
    n = len(rows)
    dims = []
    for code in range(1, search_field.q):
        lam = search_field.from_code(code)
        shifted = [list(r) for r in rows]
        for i in range(n):
            shifted[i][i] = shifted[i][i] - lam
        null = linalg.null_space(shifted)
        if null:
            dims.append(len(null) - 1)
    return sorted(dims, reverse=True)


@pytest.fixture
def gf7():
    from genfermat.ff import make_field

    return make_field(7)
