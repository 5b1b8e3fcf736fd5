import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from services import catalog
from services.bfs_oracle import (
    SymbolicBFS,
    SymbolicPoint,
    compare,
    cross_check,
    find_cycles,
    fuzz,
    oracle_outputs,
    random_instances,
    random_permutation,
)
from services.permutation import canonical_shift, identity
from services.words import format_word, is_nonperiodic
from tests.conftest import w
from utils.errors import AlphabetMismatchError, PeriodicWordError


def points_up_to(system: SymbolicBFS, max_prefix: int) -> set[SymbolicPoint]:
    """Every normal-form point whose prefix has at most max_prefix letters"""
    found = set()
    letters = range(1, system.alphabet_size + 1)
    for length in range(max_prefix + 1):
        for prefix in itertools.product(letters, repeat=length):
            for t in range(system.period):
                found.add(system.normalize(prefix, t))
    return found


SIGMAS = {
    "nakanishi": catalog.nakanishi,
    "random-3-2": lambda: random_permutation(random.Random(11), 3, 2),
    "random-2-3": lambda: random_permutation(random.Random(12), 2, 3),
}


class TestNormalForm:
    def test_fixed_point_of_p1(self):
        system = SymbolicBFS(w("1", 2))
        base = system.base_point(0)
        assert system.apply_f(1, base) == base
        assert system.apply_f(2, base) == SymbolicPoint((2,), 0)

    def test_cycle_letter_moves_along_the_cycle(self):
        system = SymbolicBFS(w("12", 2))
        assert system.apply_f(1, system.base_point(0)) == SymbolicPoint((), 1)
        assert system.apply_f(2, system.base_point(1)) == SymbolicPoint((), 0)
        # f_{j_1 j_2} fixes n_1 and its rotation f_{j_2 j_1} fixes n_0
        assert system.apply_word((1, 2), system.base_point(1)) == system.base_point(1)
        assert system.apply_word((2, 1), system.base_point(0)) == system.base_point(0)
        assert system.apply_word((1, 2), system.base_point(0)) == SymbolicPoint((1, 2), 0)

    def test_expand_round_trips(self):
        system = SymbolicBFS(w("1", 2))
        assert system.expand(system.base_point(0), 2) == ((1, 1), 0)
        system = SymbolicBFS(w("12", 2))
        prefix, t = system.expand(system.base_point(0), 1)
        assert system.normalize(prefix, t) == system.base_point(0)
        point = SymbolicPoint((2, 2), 1)
        assert system.expand(point, 1) == ((2, 2), 1)

    def test_periodic_word_rejected(self):
        with pytest.raises(PeriodicWordError):
            SymbolicBFS(w("1212", 2))

    @pytest.mark.parametrize("text, n", [("1", 2), ("12", 2), ("123", 3)])
    def test_images_partition_points(self, text, n):
        system = SymbolicBFS(w(text, n))
        images = [system.apply_f(i, y) for i in range(1, n + 1) for y in points_up_to(system, 4)]
        assert len(images) == len(set(images))
        assert points_up_to(system, 3) <= set(images)


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.integers(min_value=1, max_value=3), max_size=6),
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=0, max_value=3),
)
def test_normalize_is_idempotent(prefix, t, extra):
    system = SymbolicBFS(w("123", 3))
    point = system.normalize(tuple(prefix), t)
    assert system.normalize(point.prefix, point.position) == point
    expanded, position = system.expand(point, len(point.prefix) + extra)
    assert system.normalize(expanded, position) == point


class TestSigmaSystem:
    @pytest.mark.parametrize("sigma_name, text", [
        ("nakanishi", "12"),
        ("random-3-2", "123"),
        ("random-2-3", "12"),
    ])
    def test_sigma_images_partition_points(self, sigma_name, text):
        sigma = SIGMAS[sigma_name]()
        n = sigma.alphabet_size
        system = SymbolicBFS(w(text, n))
        images = [
            system.apply_f_sigma(sigma, i, y) for i in range(1, n + 1) for y in points_up_to(system, 4)
        ]
        assert len(images) == len(set(images))
        assert points_up_to(system, 3) <= set(images)

    def test_parent_inverts_apply_f_sigma(self, sigma0):
        system = SymbolicBFS(w("12", 3))
        for point in points_up_to(system, 3):
            for letter in (1, 2, 3):
                image = system.apply_f_sigma(sigma0, letter, point)
                assert system.parent(sigma0, image) == (letter, point)

    def test_identity_sigma_is_f(self):
        system = SymbolicBFS(w("1", 2))
        sigma = identity(2, 2)
        for point in points_up_to(system, 3):
            for letter in (1, 2):
                assert system.apply_f_sigma(sigma, letter, point) == system.apply_f(letter, point)
        assert system.parent(sigma, SymbolicPoint((2,), 0)) == (2, system.base_point(0))

    def test_canonical_shift_commutes_letters(self):
        system = SymbolicBFS(w("1", 2))
        sigma = canonical_shift(2)
        for point in points_up_to(system, 3):
            for i, j in itertools.product((1, 2), repeat=2):
                inner = system.apply_f(j, point)
                assert system.apply_f_sigma(sigma, i, inner) == system.apply_f(j, system.apply_f(i, point))

    def test_nakanishi_fixed_point(self, sigma0):
        system = SymbolicBFS(w("1", 3))
        assert system.parent(sigma0, system.base_point(0)) == (3, system.base_point(0))

    def test_candidate_bound(self, sigma0):
        system = SymbolicBFS(w("123", 3))
        assert len(system.candidates(2)) <= 3 * 3 + 3

    def test_sigma_alphabet_checked(self, psi12):
        system = SymbolicBFS(w("1", 3))
        with pytest.raises(AlphabetMismatchError):
            system.find_cycles(psi12)


class TestFindCycles:
    def test_nakanishi(self, sigma0):
        cycles = find_cycles(sigma0, w("1", 3))
        assert len(cycles) == 2
        assert sorted(len(c.points) for c in cycles) == [1, 2]
        assert [format_word(o) for o in oracle_outputs(sigma0, w("1", 3))] == ["3", "12"]

    def test_canonical_shift(self):
        assert [format_word(o) for o in oracle_outputs(canonical_shift(2), w("1", 2))] == ["1", "1"]

    def test_e42(self, e42):
        assert [format_word(o) for o in oracle_outputs(e42, w("4", 4))] == ["4", "444"]

    def test_base_cycle_is_the_only_cycle_of_f(self):
        word = w("1123", 3)
        system = SymbolicBFS(word)
        cycles = system.find_cycles(identity(3, 1))
        assert len(cycles) == 1
        assert set(cycles[0].points) == {system.base_point(t) for t in range(4)}
        assert is_nonperiodic(cycles[0].output)

    def test_output_word_fixes_the_cycle_start(self, sigma0):
        system = SymbolicBFS(w("12", 3))
        for cycle in system.find_cycles(sigma0):
            point = cycle.points[0]
            for letter in reversed(cycle.output.letters):
                point = system.apply_f_sigma(sigma0, letter, point)
            assert point == cycle.points[0]

    def test_periodic_word_rejected(self, sigma0):
        with pytest.raises(PeriodicWordError):
            find_cycles(sigma0, w("11", 3))


class TestCompare:
    def test_published_examples(self, sigma0):
        assert compare(sigma0, w("12", 3))
        assert compare(identity(2, 2), w("112", 2))
        assert compare(catalog.e23_composite(), w("1122", 2))

    def test_cross_check_reports_both_sides(self, sigma0):
        comparison = cross_check(sigma0, w("123", 3))
        assert comparison.agrees
        assert comparison.machine_outputs == comparison.oracle_outputs == (w("222", 3), w("131313", 3))

    def test_random_instances_agree(self):
        instances = random_instances(500, seed=2024)
        assert len(instances) == 500
        for sigma, word in instances:
            assert compare(sigma, word), (sigma.table, format_word(word))

    def test_random_instances_are_deterministic(self):
        assert random_instances(20, seed=3) == random_instances(20, seed=3)

    def test_fuzz_with_fixed_sigma(self, psi12):
        assert fuzz(50, seed=1, sigma=psi12) == []
