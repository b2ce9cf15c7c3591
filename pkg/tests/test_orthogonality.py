import numpy as np
import pytest

from pasf import (
    ContractViolated,
    InterpolationOperators,
    LinearMap,
    NotOrthogonal,
    NotParseval,
    SpaceMismatch,
    canonical_dual,
    frame_operator,
    interpolate,
    is_dual,
    is_orthogonal,
    mixed_pair_degeneracy_check,
    random_frame,
    random_orthogonal_parseval_pair,
    rank,
    scalar_interpolate,
    validate,
    analysis_operator,
)
from pasf.generators import PortableRng

from helpers import block_orthogonal_pair, make_frame, maxdiff, standard_frame


def ops_from(frame, a, b, c, d):
    space = frame.x_space

    def lm(m):
        return LinearMap(space, space, m)

    return InterpolationOperators(a_op=lm(a), b_op=lm(b), c_op=lm(c), d_op=lm(d))


def random_invertible(dim, rng, attempts=50):
    for _ in range(attempts):
        a = rng.matrix(dim, dim)
        if 1.0 / np.linalg.cond(a) >= 1e-2:
            return a
    raise AssertionError("no invertible draw")


# ---------------------------------------------------------------------------
# criterion


def test_block_pair_is_orthogonal():
    frame1, frame2 = block_orthogonal_pair()
    assert is_orthogonal(frame1, frame2)
    assert validate(frame1).parseval and validate(frame2).parseval


def test_orthogonality_never_reflexive():
    for seed in range(20):
        frame = random_frame(2, 5, seed=seed)
        assert not is_orthogonal(frame, frame)


def test_frame_not_orthogonal_to_its_dual():
    frame = random_frame(2, 5, seed=1)
    assert not is_orthogonal(frame, canonical_dual(frame))


def test_orthogonality_is_symmetric():
    frame1, frame2 = block_orthogonal_pair()
    assert is_orthogonal(frame1, frame2) == is_orthogonal(frame2, frame1)
    for seed in range(20):
        a, b = random_orthogonal_parseval_pair(2, 6, seed=seed)
        assert is_orthogonal(a, b) and is_orthogonal(b, a)


def test_orthogonality_requires_same_spaces():
    with pytest.raises(SpaceMismatch):
        is_orthogonal(standard_frame(2), standard_frame(3))


def test_orthogonal_pairs_respect_rank_budget():
    # the coefficient space must host both ranges disjointly
    for seed in range(30):
        a, b = random_orthogonal_parseval_pair(2, 5 + seed % 4, seed=seed)
        r1 = rank(analysis_operator(a), 1e-9)
        r2 = rank(analysis_operator(b), 1e-9)
        assert r1 + r2 <= a.count


# ---------------------------------------------------------------------------
# interpolation


def test_degenerate_stitch_returns_first_frame():
    frame1, frame2 = block_orthogonal_pair()
    eye = np.eye(2)
    zero = np.zeros((2, 2))
    out = interpolate(frame1, frame2, ops_from(frame1, eye, zero, eye, zero))
    assert maxdiff(out.functionals, frame1.functionals) == 0.0
    assert maxdiff(out.vectors, frame1.vectors) == 0.0


def test_block_pair_scalar_stitch_frozen_example():
    frame1, frame2 = block_orthogonal_pair()
    out = scalar_interpolate(frame1, frame2, 1.0, 1.0, 0.5, 0.5)
    assert maxdiff(out.functionals, [[1, 0], [0, 1], [1, 0], [0, 1]]) == 0.0
    assert maxdiff(out.vectors, [[0.5, 0, 0.5, 0], [0, 0.5, 0, 0.5]]) == 0.0
    assert maxdiff(frame_operator(out).entries, np.eye(2)) <= 1e-15
    assert validate(out).parseval


def test_scalar_stitch_identity_coefficients():
    frame1, frame2 = block_orthogonal_pair()
    out = scalar_interpolate(frame1, frame2, 1.0, 0.0, 1.0, 0.0)
    assert maxdiff(out.functionals, frame1.functionals) == 0.0


def test_scalar_contract_violation():
    frame1, frame2 = block_orthogonal_pair()
    with pytest.raises(ContractViolated) as info:
        scalar_interpolate(frame1, frame2, 1.0, 1.0, 1.0, 1.0)
    assert info.value.residual == pytest.approx(1.0)


def test_operator_contract_violation_reports_residual():
    frame1, frame2 = block_orthogonal_pair()
    eye = np.eye(2)
    with pytest.raises(ContractViolated) as info:
        interpolate(frame1, frame2, ops_from(frame1, eye, eye, eye, eye))
    assert info.value.residual == pytest.approx(1.0)


def test_interpolate_requires_parseval_inputs():
    frame1, frame2 = block_orthogonal_pair()
    bad = make_frame(frame1.functionals, 2.0 * frame1.vectors)
    eye = np.eye(2)
    zero = np.zeros((2, 2))
    with pytest.raises(NotParseval):
        interpolate(bad, frame2, ops_from(bad, eye, zero, eye, zero))


def test_interpolate_requires_orthogonality():
    frame = standard_frame(2)
    eye = np.eye(2)
    zero = np.zeros((2, 2))
    with pytest.raises(NotOrthogonal):
        interpolate(frame, frame, ops_from(frame, eye, zero, eye, zero))


def test_random_contract_satisfying_quadruples_stitch_to_parseval():
    rng = PortableRng(55)
    for seed in range(100):
        d = 2 + seed % 2
        n = 2 * d + seed % 4
        frame1, frame2 = random_orthogonal_parseval_pair(d, n, seed=seed)
        a = random_invertible(d, rng)
        b = rng.matrix(d, d)
        dd = rng.matrix(d, d)
        c = (np.eye(d) - dd @ b) @ np.linalg.inv(a)
        out = interpolate(frame1, frame2, ops_from(frame1, a, b, c, dd))
        s = frame_operator(out).entries
        assert maxdiff(s, np.eye(d)) <= 1e-9
        assert validate(out).parseval


# ---------------------------------------------------------------------------
# exclusions and degeneracy


def test_mixed_pairs_always_fail_validation():
    frame1, frame2 = block_orthogonal_pair()
    assert mixed_pair_degeneracy_check(frame1, frame2) == (True, True)
    for seed in range(20):
        a, b = random_orthogonal_parseval_pair(2, 6, seed=seed)
        assert mixed_pair_degeneracy_check(a, b) == (True, True)


def test_mixed_pair_check_rejects_non_orthogonal_input():
    frame = standard_frame(2)
    with pytest.raises(NotOrthogonal):
        mixed_pair_degeneracy_check(frame, frame)


def test_orthogonal_pairs_are_never_dual():
    for seed in range(30):
        a, b = random_orthogonal_parseval_pair(2, 6, seed=seed)
        assert not is_dual(a, b)


def test_dual_pairs_are_never_orthogonal():
    for seed in range(30):
        frame = random_frame(2, 5, seed=seed)
        assert not is_orthogonal(frame, canonical_dual(frame))
