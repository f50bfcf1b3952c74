import random
from fractions import Fraction

import pytest

from harmful_rum import (
    DataError,
    GeneralLottery,
    LinearOrder,
    SizeGuardExceeded,
    all_justifications,
    correlation_bound,
    correlation_index,
    enumerate_orders,
    is_harmful,
    is_rum,
    is_single_peaked,
    simulate,
    simulate_rum,
    single_peaked_support,
    validate,
)

from oracles import (
    block_marschak_ok,
    correlation_by_sum,
    ground,
    perturb,
    random_dataset,
    random_order,
    random_weights,
)


def random_lottery(rng, n, k):
    pool = list(enumerate_orders(ground(n)))
    orders = rng.sample(pool, min(k, len(pool)))
    raw = [rng.randint(1, 9) for _ in orders]
    return GeneralLottery({o: Fraction(r, sum(raw)) for o, r in zip(orders, raw)})


@pytest.mark.parametrize("k", [2, 6])
def test_examples_are_rum(example, k):
    result = is_rum(example(k))
    assert result.feasible
    assert simulate_rum(result.witness) == example(k)


def test_regularity_violation_is_not_rum():
    rho = validate({
        "items": ["x", "y", "z"],
        "menus": {
            "x,y,z": {"x": "0.5", "y": "0.25", "z": "0.25"},
            "x,y": {"x": "0.3", "y": "0.7"},
            "x,z": {"x": "0.5", "z": "0.5"},
            "y,z": {"y": "0.5", "z": "0.5"},
        },
    })
    result = is_rum(rho)
    assert not result.feasible and result.witness is None


def test_size_guard():
    rng = random.Random(0)
    rho = simulate(random_order(rng, 6), random_weights(rng, 6))
    with pytest.raises(SizeGuardExceeded):
        is_rum(rho)
    assert is_rum(rho, max_n=6).feasible
    with pytest.raises(SizeGuardExceeded):
        is_rum(simulate(random_order(rng, 4), random_weights(rng, 4)), max_n=3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_agrees_with_block_marschak(n):
    rng = random.Random(n)
    feasible_seen = infeasible_seen = 0
    for trial in range(24):
        kind = trial % 3
        if kind == 0:
            rho = simulate_rum(random_lottery(rng, n, rng.randint(1, 4)))
        elif kind == 1:
            rho = perturb(rng, simulate_rum(random_lottery(rng, n, rng.randint(1, 4))))
        else:
            rho = random_dataset(rng, n)
        result = is_rum(rho)
        assert result.feasible == block_marschak_ok(rho)
        if result.feasible:
            feasible_seen += 1
            assert simulate_rum(result.witness) == rho
        else:
            infeasible_seen += 1
    assert feasible_seen
    # with two items every valid dataset is a RUM
    assert infeasible_seen or n == 2


def test_block_marschak_on_five_items():
    rng = random.Random(55)
    for trial in range(4):
        rho = simulate_rum(random_lottery(rng, 5, 5))
        if trial % 2:
            rho = perturb(rng, rho)
        assert is_rum(rho).feasible == block_marschak_ok(rho)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_harmful_data_is_rum(n):
    rng = random.Random(20 + n)
    for _ in range(8 if n < 5 else 3):
        rho = simulate(random_order(rng, n), random_weights(rng, n))
        assert is_harmful(rho)
        result = is_rum(rho)
        assert result.feasible and simulate_rum(result.witness) == rho


def test_correlation_examples(example):
    rho8 = example(8)
    assert correlation_bound(rho8, LinearOrder.from_labels("x,y,z", rho8.ground)) == Fraction(29, 20)
    assert correlation_index(rho8).maximum > 1
    o = LinearOrder.from_labels("x,y,z")
    assert correlation_bound(simulate(o, (1, 0, 0)), o) == Fraction(3, 2)


def test_correlation_needs_three_items():
    o = LinearOrder.from_labels("a,b")
    with pytest.raises(DataError):
        correlation_bound(simulate(o, (1, 0)), o)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_correlation_matches_resummation(n):
    rng = random.Random(n)
    for _ in range(5):
        rho = simulate(random_order(rng, n), (Fraction(1, n),) * n)
        for o in rng.sample(list(enumerate_orders(rho.ground)), 5):
            value = correlation_bound(rho, o)
            assert value == correlation_by_sum(rho, o.ranking) and value >= 0


def test_correlation_argmax_is_a_maximiser(example):
    idx = correlation_index(example(2))
    assert idx.values[idx.argmax] == idx.maximum
    assert len(idx.values) == 6


def test_single_peaked_support(example):
    (j,) = all_justifications(example(2))
    assert single_peaked_support(j)
    ref = LinearOrder.from_labels("x,y,z")
    assert not is_single_peaked(LinearOrder.from_labels("x,z,y", ref.ground), ref)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_single_peaked_support_on_random_justifications(n):
    rng = random.Random(n)
    for _ in range(10):
        rho = simulate(random_order(rng, n), random_weights(rng, n))
        assert all(single_peaked_support(j) for j in all_justifications(rho))
