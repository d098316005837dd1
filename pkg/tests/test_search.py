import random
from itertools import product

import pytest

from prlab.core import Coloring, FiniteSet, parse_matrix, parse_poly
from prlab.rado import smod
from prlab.search import (
    SearchBudgetExceeded,
    ap_system,
    contains_ap,
    enumerate_solutions,
    forcing_number,
    good_coloring,
    is_mono_3ap,
    matrix_system,
    mono_witness,
    poly_system,
    solutions_by_max,
    vdw325_extract,
)

SCHUR = poly_system(parse_poly("x+y-z"))


# -- enumeration ------------------------------------------------------------

def test_enumerate_schur_injective():
    s = poly_system(parse_poly("x+y-z"), injective=True)
    assert enumerate_solutions(s, 4) == [(1, 2, 3), (1, 3, 4), (2, 1, 3), (3, 1, 4)]


def test_enumerate_tiny_bounds():
    assert enumerate_solutions(SCHUR, 2) == [(1, 1, 2)]
    inj = poly_system(parse_poly("x+y-z"), injective=True)
    assert enumerate_solutions(inj, 2) == []


def test_enumerate_increasing_three_term_progressions():
    assert enumerate_solutions(ap_system(3), 5) == [
        (1, 2, 3),
        (1, 3, 5),
        (2, 3, 4),
        (3, 4, 5),
    ]


def test_enumerate_matches_brute_force():
    poly = parse_poly("x+2*y-3*z")
    got = enumerate_solutions(poly_system(poly), 7)
    want = [
        (x, y, z)
        for x in range(1, 8)
        for y in range(1, 8)
        for z in range(1, 8)
        if x + 2 * y - 3 * z == 0
    ]
    assert got == sorted(want)


def test_enumerate_quadratic_equation():
    poly = parse_poly("x^2+y^2-z^2")
    got = enumerate_solutions(poly_system(poly), 15)
    want = sorted(
        (x, y, z)
        for x in range(1, 16)
        for y in range(1, 16)
        for z in range(1, 16)
        if x * x + y * y == z * z
    )
    assert got == want
    assert (3, 4, 5) in got


def test_enumeration_caps():
    seven = "+".join(f"x{i}" for i in range(7))
    with pytest.raises(ValueError):
        enumerate_solutions(poly_system(parse_poly(seven)), 3)
    with pytest.raises(ValueError):
        enumerate_solutions(poly_system(parse_poly("x^3-y")), 3)
    with pytest.raises(ValueError):
        enumerate_solutions(SCHUR, 0)


def test_system_constructors_validate():
    with pytest.raises(ValueError):
        poly_system(parse_poly("x^2"))
    with pytest.raises(ValueError):
        ap_system(1)


def test_matrix_enumeration_agrees_with_poly():
    M = parse_matrix("1 1 -1")
    assert enumerate_solutions(matrix_system(M), 5) == enumerate_solutions(SCHUR, 5)


def test_two_row_system_enumeration():
    M = parse_matrix("1 1 -1 0\n0 1 1 -1")
    got = enumerate_solutions(matrix_system(M), 8)
    want = sorted(
        (a, b, a + b, b + a + b)
        for a in range(1, 9)
        for b in range(1, 9)
        if a + b <= 8 and a + 2 * b <= 8
    )
    assert got == want


def test_solutions_indexed_by_maximum():
    idx = solutions_by_max(SCHUR, 4)
    assert idx[2] == [(1, 2)]
    # (1,2,3) and (2,1,3) collapse to one value set
    assert idx[3] == [(1, 2, 3)]
    assert idx[4] == [(1, 3, 4), (2, 4)]


# -- coloring search --------------------------------------------------------

def test_sum_equation_good_coloring_at_four():
    out = good_coloring(SCHUR, 4, 2)
    assert not out.forced
    assert out.coloring.values() == (1, 2, 2, 1)


def test_sum_equation_forced_at_five():
    assert good_coloring(SCHUR, 5, 2).forced


def test_single_color_forces_immediately():
    assert good_coloring(SCHUR, 2, 1).forced
    assert not good_coloring(SCHUR, 1, 1).forced


def test_forcing_numbers_two_and_three_colors():
    assert forcing_number(SCHUR, 2, 10) == 5
    assert forcing_number(ap_system(3), 2, 12) == 9
    assert forcing_number(SCHUR, 3, 20) == 14


def test_forcing_number_exhaustion_returns_none():
    assert forcing_number(SCHUR, 3, 10) is None


def test_node_budget_raises():
    with pytest.raises(SearchBudgetExceeded):
        good_coloring(SCHUR, 13, 3, max_nodes=10)


def naive_good_coloring_exists(system, n, r):
    index = solutions_by_max(system, n)
    value_sets = [vals for by_max in index.values() for vals in by_max]
    for assignment in product(range(1, r + 1), repeat=n):
        colors = (0,) + assignment
        if not any(
            len({colors[u] for u in vals}) == 1 for vals in value_sets
        ):
            return True
    return False


CORPUS = [
    (SCHUR, 2),
    (poly_system(parse_poly("x+y-z"), injective=True), 2),
    (ap_system(3), 2),
    (poly_system(parse_poly("x+y-2*z")), 2),
    (matrix_system(parse_matrix("1 1 -1 0\n0 1 1 -1")), 2),
    (SCHUR, 3),
    (ap_system(3), 3),
]


def test_backtracking_agrees_with_naive_enumeration():
    for system, r in CORPUS:
        for n in range(1, 9 if r == 2 else 7):
            got = good_coloring(system, n, r)
            assert got.forced == (not naive_good_coloring_exists(system, n, r)), (
                system.kind,
                n,
                r,
            )


def test_forced_is_monotone_in_the_bound():
    for system, r in CORPUS:
        prev = False
        for n in range(1, 12):
            forced = good_coloring(system, n, r).forced
            assert not (prev and not forced), (system.kind, n, r)
            prev = forced


# -- witnesses --------------------------------------------------------------

def test_witness_on_all_one_coloring():
    assert mono_witness(Coloring(1, (1, 1, 1)), SCHUR) == (1, 1, 2)


def test_witness_none_on_good_coloring():
    assert mono_witness(Coloring(1, (1, 2, 2, 1)), SCHUR) is None


def test_witness_respects_injectivity():
    inj = poly_system(parse_poly("x+y-z"), injective=True)
    assert mono_witness(Coloring(1, (1, 1)), inj) is None
    assert mono_witness(Coloring(1, (1, 1, 1)), inj) == (1, 2, 3)


def test_witness_is_lexicographically_least_monochromatic_solution():
    rng = random.Random(20260823)
    systems = [
        SCHUR,
        poly_system(parse_poly("x+y-z"), injective=True),
        poly_system(parse_poly("x+2*y-3*z")),
        ap_system(3),
        matrix_system(parse_matrix("1 1 -1 0\n0 1 1 -1")),
        poly_system(parse_poly("x^2+y^2-z^2")),
    ]
    for system in systems:
        for _ in range(25):
            n = rng.randint(3, 14)
            r = rng.randint(1, 3)
            coloring = Coloring(
                1, tuple(rng.randint(1, r) for _ in range(n)), num_colors=r
            )
            classes = {c: set(v) for c, v in coloring.color_classes().items()}
            mono = [
                sol
                for sol in enumerate_solutions(system, n)
                if any(set(sol) <= cls for cls in classes.values())
            ]
            got = mono_witness(coloring, system)
            assert got == (min(mono) if mono else None), (system.kind, coloring)


def test_blocking_coloring_admits_no_witness_on_long_interval():
    coloring = Coloring.from_function(1, 2000, lambda n: smod(5, n), num_colors=4)
    assert mono_witness(coloring, poly_system(parse_poly("x+y-3*z"))) is None


# -- the 325 extractor ------------------------------------------------------

def test_extractor_on_constant_coloring():
    coloring = Coloring(0, tuple([1] * 325))
    assert vdw325_extract(coloring) == (0, 1, 2)


def test_extractor_on_parity_coloring():
    coloring = Coloring.from_function(0, 324, lambda n: n % 2 + 1)
    triple = vdw325_extract(coloring)
    assert triple == (0, 2, 4)
    assert is_mono_3ap(coloring, triple)


def test_extractor_on_random_colorings():
    rng = random.Random(9)
    for _ in range(1500):
        coloring = Coloring(0, tuple(rng.randint(1, 2) for _ in range(325)))
        triple = vdw325_extract(coloring)
        assert is_mono_3ap(coloring, triple)


def test_extractor_domain_validation():
    with pytest.raises(ValueError):
        vdw325_extract(Coloring(1, tuple([1] * 325)))
    with pytest.raises(ValueError):
        vdw325_extract(Coloring(0, tuple([3] * 325)))


def test_mono_3ap_predicate():
    coloring = Coloring(0, (1, 1, 1, 2, 2))
    assert is_mono_3ap(coloring, (0, 1, 2))
    assert not is_mono_3ap(coloring, (0, 1, 3))  # not a progression
    assert not is_mono_3ap(coloring, (1, 2, 3))  # bichromatic


# -- progressions inside finite sets ----------------------------------------

def test_contains_ap_fixtures():
    assert contains_ap(FiniteSet((1, 2, 3)), 3) == (1, 1)
    assert contains_ap(FiniteSet((1, 2, 4, 8)), 3) is None
    assert contains_ap(FiniteSet((5, 9)), 1) == (5, 1)
    assert contains_ap(FiniteSet(()), 2) is None
    assert contains_ap(FiniteSet((2, 5, 8, 11)), 4) == (2, 3)


def test_contains_ap_prefers_small_start_then_small_step():
    assert contains_ap(FiniteSet((1, 3, 5, 2, 4)), 3) == (1, 1)
    assert contains_ap(FiniteSet((1, 4, 7, 2)), 3) == (1, 3)
