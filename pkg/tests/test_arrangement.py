"""General position, normalization to Lambda-form, and PGL equivalence."""

import itertools

import pytest

from genfermat import ff
from genfermat.arrangement import (
    Arrangement,
    LambdaParams,
    ProjectiveMap,
    ProjectivePoint,
    is_general_position,
    lambda_to_arrangement,
    membership_Xnd,
    normalize,
    pgl_equivalent,
    point,
    standard_frame,
)
from genfermat.errors import DuplicateHyperplane, NotGeneralPosition

from conftest import (
    det_by_permutation_expansion,
    random_gp_arrangement,
    random_gp_lambda,
    random_projective_map,
    rng_for,
)


def gp_oracle(arr):
    """Exhaustive minor check with an independent determinant."""
    cols = [list(h.coords) for h in arr.hyperplanes]
    for subset in itertools.combinations(range(arr.n + 1), arr.d + 1):
        sub = [[cols[j][i] for j in subset] for i in range(arr.d + 1)]
        if det_by_permutation_expansion(sub).code == 0:
            return False
    return True


def test_projective_point_canonical_form(gf7):
    p = point(gf7, [0, 3, 6])
    assert p.codes() == (0, 1, 2)  # scaled so the first nonzero entry is 1
    assert p == point(gf7, [0, 2, 4])
    with pytest.raises(ValueError):
        point(gf7, [0, 0, 0])


def test_general_position_examples(gf7):
    frame = Arrangement(2, standard_frame(gf7, 2))
    assert is_general_position(frame)
    with pytest.raises(DuplicateHyperplane):
        Arrangement(2, standard_frame(gf7, 2) + [point(gf7, [1, 1, 1])])
    bad = Arrangement(2, standard_frame(gf7, 2) + [point(gf7, [1, 1, 0])])
    assert not is_general_position(bad)
    assert not gp_oracle(bad)


def test_general_position_matches_minor_oracle():
    f31 = ff.make_field(31)
    rng = rng_for("gp-oracle")
    # random (possibly degenerate) arrangements must agree with the oracle
    for _ in range(40):
        hps = []
        seen = set()
        while len(hps) < 6:
            coords = tuple(f31.random_element(rng) for _ in range(3))
            if all(c.code == 0 for c in coords):
                continue
            pp = ProjectivePoint(coords)
            if pp not in seen:
                seen.add(pp)
                hps.append(pp)
        arr = Arrangement(2, hps, f31)
        assert is_general_position(arr) == gp_oracle(arr)


def test_normalize_standard_arrangement(gf7):
    arr = lambda_to_arrangement(LambdaParams(gf7, 2, 4, [(gf7.element(2), gf7.element(3))]))
    tmap, lam = normalize(arr)
    assert tmap.is_identity()
    assert [[x.code for x in r] for r in lam.rows] == [[2, 3]]


def test_normalize_minimal_case_empty_lambda(gf7):
    rng = rng_for("minimal")
    arr = random_gp_arrangement(gf7, 2, 3, rng)
    tmap, lam = normalize(arr)
    assert lam.rows == ()
    assert tmap.apply(arr) == Arrangement(2, standard_frame(gf7, 2))


def test_normalize_round_trip_over_gf31():
    f31 = ff.make_field(31)
    rng = rng_for("round-trip")
    for _ in range(20):
        arr = random_gp_arrangement(f31, 2, 5, rng)
        tmap, lam = normalize(arr)
        rebuilt = lambda_to_arrangement(lam)
        assert tmap.apply(arr) == rebuilt
        tmap2, lam2 = normalize(rebuilt)
        assert tmap2.is_identity()
        assert lam2 == lam


def test_normalize_requires_general_position(gf7):
    bad = Arrangement(2, standard_frame(gf7, 2) + [point(gf7, [1, 1, 0])])
    with pytest.raises(NotGeneralPosition):
        normalize(bad)


def test_lambda_to_arrangement_examples(gf7):
    arr = lambda_to_arrangement(LambdaParams(gf7, 2, 3, []))
    assert arr.hyperplanes == tuple(standard_frame(gf7, 2))
    lam = LambdaParams(gf7, 2, 4, [(gf7.element(2), gf7.element(5))])
    arr5 = lambda_to_arrangement(lam)
    assert arr5.n == 4
    assert arr5.hyperplanes[4] == point(gf7, [2, 5, 1])


def test_membership_examples(gf7):
    assert membership_Xnd(LambdaParams(gf7, 2, 3, []))
    dup = LambdaParams(gf7, 2, 4, [(gf7.one(), gf7.one())])
    assert not membership_Xnd(dup)
    lam = LambdaParams(gf7, 2, 5, [(gf7.element(2), gf7.element(3)),
                                   (gf7.element(4), gf7.element(5))])
    assert membership_Xnd(lam) == gp_oracle(lambda_to_arrangement(lam))


def test_pgl_equivalent_reflexive(gf7):
    rng = rng_for("reflexive")
    arr = random_gp_arrangement(gf7, 2, 4, rng)
    witness = pgl_equivalent(arr, arr, "labeled")
    assert witness is not None
    tmap, perm = witness
    assert tmap.is_identity()
    assert perm == tuple(range(5))


def test_pgl_equivalent_recovers_random_map():
    f31 = ff.make_field(31)
    rng = rng_for("recover")
    for _ in range(15):
        arr = random_gp_arrangement(f31, 2, 5, rng)
        tmap = random_projective_map(f31, 2, rng)
        image = tmap.apply(arr)
        witness = pgl_equivalent(arr, image, "labeled")
        assert witness is not None
        assert witness[0] == tmap  # equality is modulo global scalar


def exhaustive_unlabeled_oracle(a, b):
    """Try every full relabeling; a witness exists iff some labeled match does."""
    for perm in itertools.permutations(range(a.n + 1)):
        reordered = Arrangement(b.d, [b.hyperplanes[j] for j in perm], b.field)
        if pgl_equivalent(a, reordered, "labeled") is not None:
            return True
    return False


def test_unlabeled_absent_for_unrelated_parameters():
    f31 = ff.make_field(31)
    rng = rng_for("unrelated")
    a = lambda_to_arrangement(random_gp_lambda(f31, 2, 4, rng))
    found_inequivalent = False
    for _ in range(10):
        b = lambda_to_arrangement(random_gp_lambda(f31, 2, 4, rng))
        expected = exhaustive_unlabeled_oracle(a, b)
        assert (pgl_equivalent(a, b, "unlabeled") is not None) == expected
        found_inequivalent = found_inequivalent or not expected
    assert found_inequivalent  # random pairs are generically inequivalent


def test_unlabeled_finds_permuted_image():
    f31 = ff.make_field(31)
    rng = rng_for("permuted")
    arr = random_gp_arrangement(f31, 2, 5, rng)
    tmap = random_projective_map(f31, 2, rng)
    shuffled = list(range(6))
    rng.shuffle(shuffled)
    image = Arrangement(2, [tmap.apply_covector(arr.hyperplanes[j]) for j in shuffled],
                        f31)
    witness = pgl_equivalent(arr, image, "unlabeled")
    assert witness is not None
    wmap, perm = witness
    for j in range(6):
        assert wmap.apply_covector(arr.hyperplanes[j]) == image.hyperplanes[perm[j]]


def test_equivalence_relation_on_sampled_arrangements():
    f31 = ff.make_field(31)
    rng = rng_for("relation")
    a = random_gp_arrangement(f31, 2, 4, rng)
    t1 = random_projective_map(f31, 2, rng)
    t2 = random_projective_map(f31, 2, rng)
    b, c = t1.apply(a), t2.apply(t1.apply(a))
    w_ab = pgl_equivalent(a, b, "labeled")[0]
    w_bc = pgl_equivalent(b, c, "labeled")[0]
    # symmetry: the inverse witnesses b -> a
    assert pgl_equivalent(b, a, "labeled")[0] == w_ab.inverse()
    # transitivity: composition witnesses a -> c
    assert pgl_equivalent(a, c, "labeled")[0] == w_bc.compose(w_ab)


def test_gp_is_pgl_invariant():
    f31 = ff.make_field(31)
    rng = rng_for("invariance")
    arr = random_gp_arrangement(f31, 2, 5, rng)
    bad = Arrangement(2, standard_frame(f31, 2) + [point(f31, [1, 1, 0]),
                                                   point(f31, [1, 2, 3])])
    for _ in range(100):
        tmap = random_projective_map(f31, 2, rng)
        assert is_general_position(tmap.apply(arr))
        assert not is_general_position(tmap.apply(bad))


def test_minimal_arrangements_all_equivalent(gf7):
    rng = rng_for("all-equivalent")
    a = random_gp_arrangement(gf7, 2, 3, rng)
    for _ in range(10):
        b = random_gp_arrangement(gf7, 2, 3, rng)
        assert pgl_equivalent(a, b, "labeled") is not None


def test_arrangement_serialization_round_trip(gf7):
    rng = rng_for("arr-serialize")
    arr = random_gp_arrangement(gf7, 2, 4, rng)
    assert Arrangement.from_dict(arr.to_dict()) == arr
    lam = random_gp_lambda(gf7, 2, 5, rng)
    assert LambdaParams.from_dict(lam.to_dict()) == lam
