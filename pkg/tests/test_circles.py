import random
from fractions import Fraction as F

import pytest

from colorplex import (
    CircleLayers,
    LayerState,
    Permutation,
    brute_force_circle_colorable,
    circle_colorable,
    circle_holonomy,
    circle_layers_to_text,
    parse_circle_layers,
    sweep,
    verify_circle_coloring,
)
from colorplex.errors import FormatError
from colorplex.oracles import random_circle_layers


def _single(m):
    return CircleLayers(F(m), (tuple(F(i) for i in range(m)),))


INTERLEAVED = CircleLayers(F(4), ((F(0), F(2)), (F(1), F(3))))
NESTED = CircleLayers(F(4), ((F(0), F(2)), (F(1, 2), F(3, 2))))


def test_parse_single_layer():
    cl = parse_circle_layers("circle 1\nC=12\nlayer: 0 3 6 9\n")
    assert cl.j == 1
    assert cl.arc_count() == 4


def test_parse_two_layers():
    cl = parse_circle_layers("circle 2\nC=4\nlayer: 0 2\nlayer: 1 3\n")
    assert cl == INTERLEAVED


def test_parse_duplicate_position():
    with pytest.raises(ValueError, match="duplicate position 0"):
        parse_circle_layers("circle 2\nC=4\nlayer: 0 2\nlayer: 0 3\n")


def test_parse_short_layer():
    with pytest.raises(ValueError, match="need >= 2"):
        parse_circle_layers("circle 1\nC=4\nlayer: 1\n")


def test_parse_malformed_number():
    with pytest.raises(FormatError) as err:
        parse_circle_layers("circle 1\nC=4\nlayer: 0 x\n")
    assert err.value.line == 3


def test_parse_rationals_and_round_trip():
    text = "circle 2\nC=9/2\nlayer: 0 2\nlayer: 1/2 3/2\n"
    cl = parse_circle_layers(text)
    assert cl.circumference == F(9, 2)
    assert parse_circle_layers(circle_layers_to_text(cl)) == cl


def test_position_outside_circumference():
    with pytest.raises(ValueError, match="outside"):
        CircleLayers(F(4), ((F(0), F(5)),))


def test_state_cross_is_an_involution():
    state = LayerState.initial(3)
    rng = random.Random(0)
    for _ in range(20):
        layer = rng.randint(1, 3)
        assert state.cross(layer).cross(layer) == state
        state = state.cross(layer)


def test_single_layer_parity_law():
    swap = Permutation.transposition(2, 1, 2)
    for m in range(3, 13):
        cl = _single(m)
        assert circle_holonomy(cl) == swap.power(m)
        witness = circle_colorable(cl)
        assert (witness is not None) == (m % 2 == 0)
        if witness is not None:
            assert verify_circle_coloring(cl, witness)


def test_interleaved_two_layers_is_a_3_cycle():
    rho = circle_holonomy(INTERLEAVED)
    # hand sweep: crossings at 1,2,3,0 move (1,2|3) to (3,1|2)
    assert rho == Permutation((3, 1, 2))
    assert rho.cycle_type() == (3,)
    assert circle_colorable(INTERLEAVED) is None
    assert brute_force_circle_colorable(INTERLEAVED) is None


def test_nested_two_layers_is_colorable():
    assert circle_holonomy(NESTED).is_identity
    witness = circle_colorable(NESTED)
    assert witness is not None
    assert verify_circle_coloring(NESTED, witness)
    assert brute_force_circle_colorable(NESTED) is not None


def test_reverse_sweep_gives_the_inverse():
    rng = random.Random(7)
    for _ in range(15):
        cl = random_circle_layers(rng)
        assert circle_holonomy(cl, reverse=True) == circle_holonomy(cl).inverse()


def test_double_sweep_squares_the_permutation():
    rng = random.Random(8)
    for _ in range(15):
        cl = random_circle_layers(rng)
        rho = circle_holonomy(cl)
        state = sweep(cl)
        for _pos, layer, _k in cl.sweep_order():
            state = state.cross(layer)
        double = Permutation(tuple(list(state.colors) + [state.free]))
        assert double == rho.compose(rho)


def test_sweep_matches_brute_force_on_seeded_instances():
    rng = random.Random(42)
    checked = 0
    while checked < 25:
        cl = random_circle_layers(rng)
        if cl.arc_count() > 12:
            continue
        checked += 1
        fast = circle_colorable(cl)
        brute = brute_force_circle_colorable(cl)
        assert (fast is None) == (brute is None)
        if fast is not None:
            assert verify_circle_coloring(cl, fast)
            assert verify_circle_coloring(cl, brute)


def test_colorable_iff_identity_holonomy():
    rng = random.Random(9)
    for _ in range(30):
        cl = random_circle_layers(rng)
        assert (circle_colorable(cl) is not None) == circle_holonomy(cl).is_identity
