import random

from mu2sod.groups import make_spec
from mu2sod.presets import p2_example, pn_full, quadric
from mu2sod.sod import assemble
from mu2sod.verify import (
    FAIL,
    PASS,
    SKIPPED,
    burnside_double_sum,
    check_burnside_total,
    check_etale,
    check_etale_sweep,
    check_gram_presets,
    check_projective_rank,
    check_quadric,
    check_random_rank_sweep,
    random_effective_projective_spec,
    run_battery,
)


def test_check_etale_examples():
    result = check_etale(3, 2)
    assert result.status == PASS
    assert result.actual["pieces"] == 4
    assert result.actual["dims"] == {3: 1, 2: 2, 1: 1}

    assert check_etale(5, 0).actual["pieces"] == 1
    result = check_etale(4, 4)
    assert result.status == PASS
    assert result.actual["dims"] == {4: 1, 3: 4, 2: 6, 1: 4, 0: 1}


def test_check_etale_sweep():
    assert check_etale_sweep().status == PASS


def test_check_projective_rank_presets():
    assert check_projective_rank(p2_example()).status == PASS
    assert check_projective_rank(p2_example()).expected == 12
    assert check_projective_rank(pn_full(1)).expected == 4
    assert check_projective_rank(pn_full(3)).expected == 32
    assert check_projective_rank(pn_full(3)).status == PASS


def test_check_projective_rank_skips():
    ineffective = make_spec("projective", 1, [[1, 1]])
    assert check_projective_rank(ineffective).status == SKIPPED
    assert check_projective_rank(quadric(2)).status == SKIPPED


def test_check_burnside_total_p2():
    result = check_burnside_total(p2_example())
    assert result.status == PASS
    assert result.expected == result.actual == 12
    assert result.context["double_sum"] == 48


def test_check_burnside_trivial_group():
    # chi of the whole space, e.g. chi(P^3) = 4
    result = check_burnside_total(make_spec("projective", 3, []))
    assert result.status == PASS
    assert result.actual == 4
    result = check_burnside_total(make_spec("affine", 5, []))
    assert result.actual == 1


def test_quadric_fixture_17_confirmed_by_oracle():
    spec = quadric(2)
    double = burnside_double_sum(spec)
    assert double % 8 == 0
    oracle_value = double // 8
    # hand computation: 3 (quadric surface) + 3*2 (conics) + 6*1 (merged
    # pairs) + 2 (twisted conic) = 17, admitted only because the oracle
    # reproduces it
    assert oracle_value == 17
    assert assemble(spec).total_rank == oracle_value


def test_check_quadric_presets():
    for q_dim in range(1, 6):
        result = check_quadric(q_dim)
        assert result.status == PASS, result
        assert result.actual["unclassified"] == []
    assert check_quadric(1).actual["count"] == 5
    assert check_quadric(2).actual["count"] == 17


def test_check_quadric_counts_match_burnside():
    for q_dim in range(1, 4):
        spec = quadric(q_dim)
        order = len(spec.group)
        assert assemble(spec).total_rank == burnside_double_sum(spec) // order


def test_check_gram_presets():
    result = check_gram_presets()
    assert result.status == PASS, result.actual
    # no preset needed a character normalization
    assert result.context["normalized"] == {}
    # equal-dimension blocks pairwise K-vanish on every preset (recorded
    # for the open question on equal-dimension interleaving)
    assert all(result.context["equal_dim_blocks_orthogonal"].values())
    assert result.context["line_point_one_way"]


def test_random_spec_generator_is_effective():
    rng = random.Random(1)
    for _ in range(30):
        spec = random_effective_projective_spec(rng)
        assert spec.kind == "projective"
        assert spec.dim <= 4 and spec.rank <= 4


def test_random_rank_sweep_small():
    assert check_random_rank_sweep(count=25, seed=5).status == PASS


def test_run_battery_all_pass():
    results = run_battery()
    assert results, "battery must not be empty"
    failures = [r.name for r in results if r.status == FAIL]
    assert failures == []
    lines = [r.line() for r in results]
    assert all(l.startswith(("PASS", "SKIP")) for l in lines)
