import json
import random
from fractions import Fraction

import pytest

from harmful_rum import (
    DataError,
    ForeignItem,
    LinearOrder,
    MissingMenu,
    NegativeProbability,
    RowSumViolation,
    StochasticChoice,
    format_probability,
    is_regular,
    loads_csv,
    parse_probability,
    simulate,
    support_set,
    validate,
)

from oracles import random_dataset, random_order, random_weights

EX2 = {
    "items": ["p", "f", "s"],
    "menus": {
        "f,p,s": {"p": "0.3", "f": "0.1", "s": "0.6"},
        "f,p": {"p": "0.3", "f": "0.7"},
        "p,s": {"p": "0.3", "s": "0.7"},
        "f,s": {"f": "0.4", "s": "0.6"},
    },
}


def _with(menus):
    return {"items": EX2["items"], "menus": {**EX2["menus"], **menus}}


@pytest.mark.parametrize("text, value", [
    ("0.3", Fraction(3, 10)),
    ("3/10", Fraction(3, 10)),
    (" 1 ", Fraction(1)),
    ("0.333", Fraction(333, 1000)),
    (0.1, Fraction(1, 10)),
])
def test_parse_probability_is_exact(text, value):
    assert parse_probability(text) == value


@pytest.mark.parametrize("bad", ["x", "1/0", None, True])
def test_parse_probability_rejects(bad):
    with pytest.raises(DataError):
        parse_probability(bad)


def test_format_probability():
    assert format_probability(Fraction(3, 5)) == "3/5"
    assert format_probability(Fraction(1, 3), 4) == "0.3333"
    assert format_probability(Fraction(29, 20), 2) == "1.45"
    assert format_probability(Fraction(1), 0) == "1"


def test_example2_validates_with_singletons_completed():
    rho = validate(EX2)
    assert len(rho.masks()) == 7
    assert rho.prob("p", "p") == 1
    assert rho.prob("f", "f,s") == Fraction(2, 5)
    assert rho.prob("p", "f,s") == 0


def test_row_sum_violation_reports_deficit():
    with pytest.raises(RowSumViolation) as err:
        validate(_with({"f,p": {"p": "0.3", "f": "0.6"}}))
    assert err.value.menu == "f,p"
    assert err.value.total == Fraction(9, 10)
    assert err.value.deficit == Fraction(1, 10)


def test_missing_menu():
    menus = dict(EX2["menus"])
    del menus["f,s"]
    with pytest.raises(MissingMenu) as err:
        validate({"items": EX2["items"], "menus": menus})
    assert err.value.menu == "f,s"


def test_foreign_item_outside_menu():
    with pytest.raises(ForeignItem):
        validate(_with({"f,p": {"p": "0.3", "f": "0.7", "s": "0"}}))


def test_foreign_item_outside_ground_set():
    with pytest.raises(DataError):
        validate(_with({"f,q": {"f": "1"}}))


def test_negative_probability():
    with pytest.raises(NegativeProbability):
        validate(_with({"f,p": {"p": "-0.3", "f": "1.3"}}))


def test_menu_keys_are_canonicalised():
    rho = validate(_with({"f,p": {"p": "0.3", "f": "0.7"}}))
    menus = {" s , f ": {"f": "0.4", "s": "0.6"}}
    other = dict(EX2["menus"])
    del other["f,s"]
    assert validate({"items": EX2["items"], "menus": {**other, **menus}}) == rho


def test_duplicate_menu_after_canonicalisation():
    with pytest.raises(DataError):
        validate(_with({"p,f": {"p": "0.3", "f": "0.7"}}))


def test_singleton_rows_must_be_one_when_given():
    with pytest.raises(RowSumViolation):
        validate(_with({"p": {"p": "0.5"}}))


def test_tolerance_relaxes_row_sums():
    raw = _with({"f,p": {"p": "0.3", "f": "0.7000001"}})
    with pytest.raises(RowSumViolation):
        validate(raw)
    assert validate(raw, tolerance="1e-6").prob("f", "f,p") == Fraction(7000001, 10000000)


def test_support_set():
    assert support_set(validate(EX2)) == {"p", "f", "s"}
    o = LinearOrder.from_labels("a,b,c")
    assert support_set(simulate(o, [1, 0, 0])) == {"a"}


def test_support_set_example5(example):
    assert support_set(example(5)) == {"x", "z"}


def test_is_regular(example):
    assert is_regular(example(1))
    assert is_regular(validate(EX2))
    broken = {
        "items": ["x", "y", "z"],
        "menus": {
            "x,y,z": {"x": "0.5", "y": "0.25", "z": "0.25"},
            "x,y": {"x": "0.3", "y": "0.7"},
            "x,z": {"x": "0.5", "z": "0.5"},
            "y,z": {"y": "0.5", "z": "0.5"},
        },
    }
    assert not is_regular(validate(broken))


def test_simulated_harmful_data_is_regular():
    rng = random.Random(7)
    for n in range(1, 6):
        for _ in range(20):
            rho = simulate(random_order(rng, n), random_weights(rng, n))
            assert is_regular(rho)


def test_json_round_trip_is_byte_stable():
    rng = random.Random(1)
    for n in range(1, 5):
        for _ in range(10):
            rho = random_dataset(rng, n)
            text = rho.to_json()
            again = validate(json.loads(text))
            assert again == rho
            assert again.to_json() == text


def test_csv_round_trip():
    rho = validate(EX2)
    text = rho.to_csv()
    assert text.splitlines()[0] == "menu,item,probability"
    assert '"f,p,s",f,1/10' in text
    again = loads_csv(text)
    # CSV carries no item list, so only the probabilities must survive
    assert sorted(again.ground.items) == sorted(rho.ground.items)
    for mask in rho.masks():
        menu = rho.ground.labels(mask)
        for x in menu:
            assert again.prob(x, menu) == rho.prob(x, menu)
    assert loads_csv(again.to_csv()) == again


def test_csv_errors_carry_line_numbers():
    with pytest.raises(DataError, match="line 2"):
        loads_csv("menu,item,probability\nbad-row\n")


def test_decimal_view_does_not_change_data():
    rho = validate(EX2)
    view = json.loads(rho.to_json(decimals=2))
    assert view["menus"]["f,s"] == {"f": "0.40", "s": "0.60"}


def test_from_table_accepts_label_iterables():
    rho = StochasticChoice.from_table(
        ["a", "b"], {("a", "b"): {"a": Fraction(1, 4), "b": Fraction(3, 4)}}
    )
    assert rho.prob("b", ["b", "a"]) == Fraction(3, 4)
    assert rho.grand("a") == Fraction(1, 4)
