"""
The semi-Mealy machine M_σ: construction, word runs, periodic states Q_J
and their orbit decomposition, plus DOT / TSV renderings of the machine
"""
from dataclasses import dataclass
from typing import Iterator

import networkx as nx

from services.permutation import MultiIndexPermutation, inverse, rank, unrank
from services.words import Word, format_word


@dataclass(frozen=True)
class SemiMealyMachine:
    """
    M_σ = (Q, Σ, Δ, δ, λ)

    States are ranks 0..N^{l−1}−1 of the state words K ∈ {1,…,N}^{l−1}
    (a single state q_0 when l = 1). delta[q][i−1] is the next state and
    lambda_out[q][i−1] the 1-based output letter for input letter i.
    """

    alphabet_size: int
    block_length: int
    delta: tuple[tuple[int, ...], ...]
    lambda_out: tuple[tuple[int, ...], ...]

    @property
    def state_count(self) -> int:
        return len(self.delta)

    def states(self) -> range:
        return range(self.state_count)

    def step(self, state: int, letter: int) -> tuple[int, int]:
        """(δ(q,a_i), λ(q,a_i))"""
        return self.delta[state][letter - 1], self.lambda_out[state][letter - 1]


@dataclass(frozen=True)
class Orbit:
    """One cycle [p] of q ↦ δ(q, a_J)"""

    representative: int
    size: int
    states: tuple[int, ...]  # starting at the representative, in δ(·, a_J) order


@dataclass(frozen=True)
class OrbitDecomposition:
    """Q_J = [p_1] ⊔ ⋯ ⊔ [p_M]"""

    word: Word
    orbits: tuple[Orbit, ...]

    @property
    def periodic_state_count(self) -> int:
        return sum(orbit.size for orbit in self.orbits)

    @property
    def periodic_states(self) -> frozenset[int]:
        return frozenset(q for orbit in self.orbits for q in orbit.states)


# ==================== Construction ====================
def build(sigma: MultiIndexPermutation) -> SemiMealyMachine:
    """
    δ(q_K, a_i) = q_{(σ^{-1})_{2,l}(K,i)} and λ(q_K, a_i) = b_{(σ^{-1})_1(K,i)}

    For l = 1 every transition loops on q_0 and λ(q_0, a_i) = b_{σ^{-1}(i)}.
    """
    n = sigma.alphabet_size
    tail_size = n ** (sigma.block_length - 1)
    sigma_inv = inverse(sigma)

    delta = []
    lambda_out = []
    for state in range(tail_size):
        next_states = []
        outputs = []
        for letter in range(1, n + 1):
            # rank of (K, i) is rank(K)·N + (i − 1)
            image = sigma_inv.table[state * n + letter - 1]
            first, rest = divmod(image, tail_size)
            next_states.append(rest)
            outputs.append(first + 1)
        delta.append(tuple(next_states))
        lambda_out.append(tuple(outputs))

    return SemiMealyMachine(n, sigma.block_length, tuple(delta), tuple(lambda_out))


# ==================== State Names ====================
def state_word(machine: SemiMealyMachine, state: int) -> Word | None:
    """K for q_K, or None for the single l = 1 state"""
    if machine.block_length == 1:
        return None
    return unrank(machine.alphabet_size, machine.block_length - 1, state)


def state_name(machine: SemiMealyMachine, state: int) -> str:
    """q_<K>, or q_0 when l = 1"""
    word = state_word(machine, state)
    return "q_0" if word is None else f"q_{format_word(word)}"


def state_of(machine: SemiMealyMachine, word: Word) -> int:
    """State rank of q_K"""
    if machine.block_length == 1:
        return 0
    return rank(word)


# ==================== Runs ====================
def run(machine: SemiMealyMachine, start: int, word: Word) -> tuple[int, Word]:
    """
    Extended transition δ(q, w) and output λ(q, w)

    Returns:
        (final state, output word of length |w|)
    """
    state = start
    outputs = []
    for letter in word:
        state, out = machine.step(state, letter)
        outputs.append(out)
    return state, Word(machine.alphabet_size, tuple(outputs))


def trace(machine: SemiMealyMachine, start: int, word: Word) -> list[int]:
    """The state occupied before each letter of the run"""
    visited = []
    state = start
    for letter in word:
        visited.append(state)
        state = machine.delta[state][letter - 1]
    return visited


def _word_action(machine: SemiMealyMachine, word: Word) -> list[int]:
    """q ↦ δ(q, a_J) for every state"""
    return [run(machine, state, word)[0] for state in machine.states()]


def periodic_states(machine: SemiMealyMachine, word: Word) -> OrbitDecomposition:
    """
    Cycles of the functional graph q ↦ δ(q, a_J)

    Each state is colored once (unvisited / on current walk / done), so the
    cost is O(N^{l−1}·|J|). Orbits are listed by their least-rank state.
    """
    successor = _word_action(machine, word)
    color = [0] * machine.state_count  # 0 new, 1 on the current walk, 2 done
    cycles = []

    for start in machine.states():
        if color[start]:
            continue
        walk = []
        state = start
        while color[state] == 0:
            color[state] = 1
            walk.append(state)
            state = successor[state]
        if color[state] == 1:
            cycles.append(walk[walk.index(state):])
        for visited in walk:
            color[visited] = 2

    orbits = []
    for cycle in cycles:
        representative = min(cycle)
        offset = cycle.index(representative)
        ordered = tuple(cycle[offset:] + cycle[:offset])
        orbits.append(Orbit(representative, len(ordered), ordered))
    orbits.sort(key=lambda orbit: orbit.representative)

    return OrbitDecomposition(word, tuple(orbits))


# ==================== Diagram ====================
def transition_graph(machine: SemiMealyMachine) -> nx.MultiDiGraph:
    """The Mealy diagram D(M) with one labeled edge per (state, letter)"""
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(machine.states())
    for state in machine.states():
        for letter in range(1, machine.alphabet_size + 1):
            target, out = machine.step(state, letter)
            graph.add_edge(state, target, key=letter, label=f"a{letter}/b{out}")
    return graph


def connected_components(machine: SemiMealyMachine) -> int:
    """Weakly connected components of the Mealy diagram"""
    return nx.number_weakly_connected_components(transition_graph(machine))


def _gvquote(text: str) -> str:
    return '"{}"'.format(text.replace('"', r'\"'))


def _dot_lines(machine: SemiMealyMachine) -> Iterator[str]:
    yield "digraph M {"
    yield "  rankdir=LR;"
    for state in machine.states():
        yield f"  {_gvquote(state_name(machine, state))} [shape=circle];"
    for state in machine.states():
        for letter in range(1, machine.alphabet_size + 1):
            target, out = machine.step(state, letter)
            yield "  {} -> {} [label={}];".format(
                _gvquote(state_name(machine, state)),
                _gvquote(state_name(machine, target)),
                _gvquote(f"a{letter}/b{out}"),
            )
    yield "}"


def to_dot(machine: SemiMealyMachine) -> str:
    """DOT digraph; states by rank, letters ascending, LF line endings"""
    return "\n".join(_dot_lines(machine)) + "\n"


def to_table(machine: SemiMealyMachine) -> str:
    """TSV: p, δ(p,a_1..a_N), λ(p,a_1..a_N), one row per state"""
    n = machine.alphabet_size
    header = ["p"]
    header += [f"δ(p,a_{i})" for i in range(1, n + 1)]
    header += [f"λ(p,a_{i})" for i in range(1, n + 1)]

    rows = ["\t".join(header)]
    for state in machine.states():
        cells = [state_name(machine, state)]
        cells += [state_name(machine, target) for target in machine.delta[state]]
        cells += [f"b_{out}" for out in machine.lambda_out[state]]
        rows.append("\t".join(cells))
    return "\n".join(rows) + "\n"
