import pytest

from k3count.counting import dual_counting_series, expand_G
from k3count.partitions import partition_p
from k3count.schain import (
    InvalidConfig,
    LambdaConfig,
    MuConfig,
    NotAdmissible,
    delta_lower_bound,
    enumerate_lambda_configs,
    enumerate_mu_configs,
    is_admissible_mu,
    is_valid_mu,
    lambda_to_mu,
    mu_to_lambda,
    plateau_decomposition,
    weight,
)

from oracles import lambda_configs_brute, mu_configs_brute

# frozen from oracles.mu_configs_brute(m, admissible=False)
VALID_MU_COUNTS = [1, 1, 2, 3, 5, 9, 14, 22, 34]


class TestWeight:
    def test_forced_weight_one(self):
        assert weight(LambdaConfig(1, (0,), (0,))) == 1

    def test_mu_config(self):
        assert weight(MuConfig(2, (1,), (2,))) == 5

    def test_empty(self):
        assert weight(LambdaConfig(0, (), ())) == 0


class TestLambdaStructure:
    @pytest.mark.parametrize(
        "mu,pos,neg",
        [(2, (1, 1), (1, 0)), (1, (0, 0), (0,)), (1, (-1,), (0,)), (2, (0, 1), (2, 0))],
    )
    def test_rejected(self, mu, pos, neg):
        with pytest.raises(InvalidConfig):
            LambdaConfig(mu, pos, neg)

    def test_both_sides_may_end_in_zero(self):
        assert LambdaConfig(2, (3, 0), (1, 0)).weight == 6


class TestValidity:
    def test_valid(self):
        assert is_valid_mu(MuConfig(2, (1,), (2,)))

    def test_empty_negative_side_caps_mu(self):
        assert not is_valid_mu(MuConfig(2, (), (2,)))

    def test_empty(self):
        assert is_valid_mu(MuConfig(0, (), ()))

    @pytest.mark.parametrize(
        "c",
        [MuConfig(2, (1, 2), (2,)), MuConfig(1, (), (0,)), MuConfig(3, (1,), (3,)), MuConfig(-1)],
    )
    def test_invalid(self, c):
        assert not is_valid_mu(c)


class TestAdmissible:
    def test_jump_to_zero(self):
        assert not is_admissible_mu(MuConfig(2, (1,), (2,)))

    def test_staircase(self):
        assert is_admissible_mu(MuConfig(1, (), (1, 1, 1)))

    def test_weight_five(self):
        assert is_admissible_mu(MuConfig(2, (1,), (1, 1)))

    def test_invalid_is_not_admissible(self):
        assert not is_admissible_mu(MuConfig(2, (), (2,)))


class TestEnumerateLambda:
    def test_zero(self):
        assert enumerate_lambda_configs(0) == [LambdaConfig(0, (), ())]

    def test_two(self):
        assert enumerate_lambda_configs(2) == [
            LambdaConfig(1, (1,), (0,)),
            LambdaConfig(1, (0,), (1,)),
        ]

    def test_three(self):
        assert len(enumerate_lambda_configs(3)) == 3

    @pytest.mark.parametrize("m", range(10))
    def test_matches_brute_force(self, m):
        got = enumerate_lambda_configs(m)
        keys = [(c.mu, c.lambda_pos, c.lambda_neg) for c in got]
        assert len(set(keys)) == len(keys)
        assert set(keys) == lambda_configs_brute(m)

    @pytest.mark.parametrize("m", range(15))
    def test_count_is_partition_number(self, m):
        configs = enumerate_lambda_configs(m)
        assert len(configs) == partition_p(m)
        assert all(c.weight == m for c in configs)

    def test_canonical_order(self):
        configs = enumerate_lambda_configs(9)
        keys = [(c.mu, tuple(-x for x in c.lambda_pos), tuple(-x for x in c.lambda_neg)) for c in configs]
        assert keys == sorted(keys)

    @pytest.mark.parametrize("m", range(13))
    def test_count_matches_G_constant_term(self, m):
        for n in (m, m + 2):
            assert expand_G(n, m)[0][m] == len(enumerate_lambda_configs(m))


class TestEnumerateMu:
    def test_two(self):
        assert enumerate_mu_configs(2, admissible_only=True) == [
            MuConfig(1, (), (1,)),
            MuConfig(1, (1,), ()),
        ]

    def test_zero(self):
        assert enumerate_mu_configs(0, admissible_only=True) == [MuConfig(0, (), ())]

    def test_three(self):
        assert len(enumerate_mu_configs(3, admissible_only=True)) == 3

    @pytest.mark.parametrize("m", range(9))
    @pytest.mark.parametrize("admissible", [False, True])
    def test_matches_brute_force(self, m, admissible):
        got = enumerate_mu_configs(m, admissible_only=admissible)
        keys = [(c.mu, c.mu_neg, c.mu_pos) for c in got]
        assert len(set(keys)) == len(keys)
        assert set(keys) == mu_configs_brute(m, admissible)

    def test_valid_counts(self):
        assert [len(enumerate_mu_configs(m)) for m in range(9)] == VALID_MU_COUNTS

    @pytest.mark.parametrize("m", range(15))
    def test_dual_count(self, m):
        dual = dual_counting_series(14)
        assert len(enumerate_mu_configs(m, admissible_only=True)) == partition_p(m) == dual[m]


class TestDuality:
    def test_right_only(self):
        assert mu_to_lambda(MuConfig(1, (), (1,))) == LambdaConfig(1, (0,), (1,))

    def test_left_only(self):
        assert mu_to_lambda(MuConfig(1, (1,), ())) == LambdaConfig(1, (1,), (0,))

    def test_figure_diagram(self):
        # the left-hand diagram of the duality figure, with mu = 5 and a
        # staircase on the other side
        c = MuConfig(5, (5, 4, 4, 3, 2, 1), (5, 4, 3, 2, 1))
        assert is_admissible_mu(c)
        assert mu_to_lambda(c).lambda_pos == (6, 5, 4, 3, 1)

    def test_lambda_to_mu_examples(self):
        assert lambda_to_mu(LambdaConfig(1, (0,), (0,))) == MuConfig(1, (), ())
        assert lambda_to_mu(LambdaConfig(1, (1,), (0,))) == MuConfig(1, (1,), ())

    def test_not_admissible(self):
        with pytest.raises(NotAdmissible):
            mu_to_lambda(MuConfig(2, (1,), (2,)))

    @pytest.mark.parametrize("m", range(13))
    def test_bijection(self, m):
        lams = enumerate_lambda_configs(m)
        mus = enumerate_mu_configs(m, admissible_only=True)
        images = [mu_to_lambda(c) for c in mus]
        assert sorted(images, key=repr) == sorted(lams, key=repr)
        for c in mus:
            back = lambda_to_mu(mu_to_lambda(c))
            assert back == c
        for c in lams:
            d = lambda_to_mu(c)
            assert is_admissible_mu(d)
            assert d.mu == c.mu and d.weight == c.weight
            assert mu_to_lambda(d) == c


class TestPlateau:
    def test_two_runs(self):
        assert plateau_decomposition([2, 2, 1]) == [(1, 2), (2, 1)]

    def test_single_run(self):
        assert plateau_decomposition([1, 1, 1]) == [(2, 1)]

    def test_empty(self):
        assert plateau_decomposition([]) == []

    def test_rejects_increase(self):
        with pytest.raises(ValueError):
            plateau_decomposition([1, 2])

    @pytest.mark.parametrize("m", range(1, 11))
    def test_admissible_plateau_values_form_a_staircase(self, m):
        for c in enumerate_mu_configs(m, admissible_only=True):
            for seq in (c.mu_pos, c.mu_neg):
                values = [v for _, v in plateau_decomposition(seq)]
                top = seq[0] if seq else 0
                assert values == list(range(top, 0, -1))


class TestDeltaBound:
    def test_empty(self):
        assert delta_lower_bound(MuConfig(0, (), ())) == 0

    def test_inadmissible_excess(self):
        # 4 + (2+1-2)*2 + (1+1-2)*1 + 0 + 0
        assert delta_lower_bound(MuConfig(2, (1,), (2,))) == 6

    def test_staircase_equality(self):
        # 1 + (1+1-1)*1 + 0 + 2*1
        assert delta_lower_bound(MuConfig(1, (), (1, 1, 1))) == 4

    def test_invalid(self):
        with pytest.raises(InvalidConfig):
            delta_lower_bound(MuConfig(2, (), (2,)))

    @pytest.mark.parametrize("m", range(13))
    def test_bound_and_equality_law(self, m):
        for c in enumerate_mu_configs(m):
            b = delta_lower_bound(c)
            assert b >= m
            assert (b == m) == is_admissible_mu(c)


def test_json_round_trip():
    c = MuConfig(2, (1,), (2,))
    assert MuConfig.from_json(c.to_json()) == c
    lam = LambdaConfig(2, (3, 1), (2, 0))
    assert lam.to_json() == {"mu": 2, "lambda_pos": [3, 1], "lambda_neg": [2, 0]}
    assert LambdaConfig.from_json(lam.to_json()) == lam


@pytest.mark.parametrize("bad", [[], {"mu": 1}, {"mu": "1", "mu_neg": [], "mu_pos": []}, {"mu": 1, "mu_neg": [1.5], "mu_pos": []}])
def test_json_rejects_malformed(bad):
    with pytest.raises(InvalidConfig):
        MuConfig.from_json(bad)
