from fractions import Fraction

import pytest

from vpgmis.generator import GenConfig, SplitMix64, generate
from vpgmis.geometry import Instance, ShapeClass, arm_lengths, validate_instance


def test_splitmix_reference_values():
    # published reference outputs for seed 0
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_bounded_draws_in_range():
    rng = SplitMix64(42)
    draws = [rng.between(-3, 3) for _ in range(2000)]
    assert set(draws) == set(range(-3, 4))
    with pytest.raises(ValueError):
        rng.below(0)


def test_empty_and_determinism():
    assert generate(GenConfig(n=0, seed=3)) == []
    a = generate(GenConfig(n=50, seed=123, mode="general"))
    assert a == generate(GenConfig(n=50, seed=123, mode="general"))
    assert a != generate(GenConfig(n=50, seed=124, mode="general"))


def test_equilateral_fixed_length():
    shapes = generate(GenConfig(n=40, seed=1, length_range=(2, 2)))
    assert all(arm_lengths(l) == (2, 2) for l in shapes)


@pytest.mark.parametrize("mode", ["equilateral", "general", "uniform"])
def test_modes_grain_and_validity(mode):
    cfg = GenConfig(n=300, seed=7, mode=mode, length_range=(Fraction(1, 2), 6), coordinate_range=(-5, 5))
    shapes = generate(cfg)
    assert len(shapes) == 300
    inst = Instance(shapes)
    for l in shapes:
        assert all((v / cfg.grain).denominator == 1 for v in l.as_tuple())
        assert -5 <= l.x_c <= 5 and -5 <= l.y_c <= 5
        lx, ly = arm_lengths(l)
        assert Fraction(1, 2) <= lx <= 6 and Fraction(1, 2) <= ly <= 6
    assert not [d for d in validate_instance(shapes) if d.kind == "degenerate"]
    if mode == "equilateral":
        assert inst.is_equilateral
    if mode == "uniform":
        assert inst.is_uniform
    assert set(inst.shape_classes) == set(ShapeClass)


def test_uniform_equal_arms():
    inst = Instance(generate(GenConfig(n=30, seed=2, mode="uniform", equal_arms=True)))
    assert inst.is_uniform and inst.is_equilateral


def test_shape_mix():
    shapes = generate(GenConfig(n=100, seed=5, shape_mix=(0, 0, 1, 0)))
    assert {l.shape_class for l in shapes} == {ShapeClass.L3}


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n": -1},
        {"n": 1, "mode": "diagonal"},
        {"n": 1, "length_range": (0, 4)},
        {"n": 1, "length_range": (5, 4)},
        {"n": 1, "length_range": (Fraction(1, 8), Fraction(1, 5))},
        {"n": 1, "coordinate_range": (3, 1)},
        {"n": 1, "shape_mix": (1, 1, 0, 0)},
        {"n": 1, "shape_mix": (Fraction(1, 2), Fraction(1, 2))},
        {"n": 1, "grain": 0},
    ],
)
def test_invalid_configs(kwargs):
    with pytest.raises(ValueError):
        GenConfig(**kwargs)
