"""Structural predicates on tournaments.

Dominance, king chickens, royal flocks, Hamiltonian cycles, degree screens
and the Eulerian test. A vertex i dominates j when i beats j and j has no
two-step path back to i; a royal flock is a tournament with no dominated
vertex, equivalently one where every vertex is a king chicken (reaches
every other vertex in at most two steps).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Tournament, degrees


@dataclass(frozen=True)
class DominancePair:
    winner: int
    loser: int


@dataclass(frozen=True)
class DecompositionWitness:
    """The forced shape around a near-extreme-degree vertex.

    ``a`` beats ``c``, ``c`` beats every block vertex, and in a royal flock
    every block vertex beats ``a``: a three-strategy cycle with the block
    substituted into it.
    """

    a: int
    c: int
    block: frozenset[int]


@dataclass(frozen=True)
class DegreeScreen:
    out_full: tuple[int, ...]
    in_full: tuple[int, ...]
    out_near: tuple[int, ...]
    in_near: tuple[int, ...]
    witnesses: tuple[DecompositionWitness, ...]


@dataclass(frozen=True)
class StructuralClassification:
    is_royal_flock: bool
    is_eulerian: bool
    hamiltonian_cycle: tuple[int, ...] | None
    degree_flags: DegreeScreen


def dominates(t: Tournament, i: int, j: int) -> bool:
    """True when i beats j and no k gives j a two-step path back to i."""
    if not (0 <= i < t.n and 0 <= j < t.n):
        raise ValueError(f"vertex index out of range: ({i}, {j})")
    if i == j:
        raise ValueError("dominance is defined for distinct vertices")
    if not t.beats(i, j):
        return False
    return not any(t.beats(j, k) and t.beats(k, i) for k in range(t.n))


def dominance_pairs(t: Tournament) -> tuple[DominancePair, ...]:
    return tuple(
        DominancePair(i, j)
        for i in range(t.n)
        for j in range(t.n)
        if i != j and dominates(t, i, j)
    )


def king_chickens(t: Tournament) -> frozenset[int]:
    """Vertices that reach every other vertex in at most two steps."""
    everyone = (1 << t.n) - 1
    kings = []
    for v in range(t.n):
        reach = t.wins[v]
        for u in t.out_neighbors(v):
            reach |= t.wins[u]
        if reach == everyone ^ (1 << v):
            kings.append(v)
    return frozenset(kings)


def is_royal_flock(t: Tournament) -> bool:
    """True when no vertex dominates another.

    Both definitions are computed and cross-checked: an empty dominance list
    must coincide with every vertex being a king chicken.
    """
    no_dominated = not dominance_pairs(t)
    all_kings = king_chickens(t) == frozenset(range(t.n))
    if no_dominated != all_kings:
        raise RuntimeError("royal flock definitions disagree; analysis is inconsistent")
    return no_dominated


def hamiltonian_cycle(t: Tournament) -> tuple[int, ...] | None:
    """A directed cycle through all vertices, or None.

    Backtracking search starting at vertex 0, always trying the smallest
    next vertex first, so the returned cycle is the lexicographically least
    one and output is deterministic. Tournaments with fewer than 3 vertices
    have no cycle.
    """
    if t.n < 3:
        return None
    path = [0]
    used = {0}

    def extend() -> bool:
        if len(path) == t.n:
            return t.beats(path[-1], 0)
        last = path[-1]
        for nxt in range(t.n):
            if nxt not in used and t.beats(last, nxt):
                path.append(nxt)
                used.add(nxt)
                if extend():
                    return True
                path.pop()
                used.remove(nxt)
        return False

    return tuple(path) if extend() else None


def degree_screen(t: Tournament) -> DegreeScreen:
    """Flag vertices with extreme or near-extreme degrees.

    Degree n-1 in either direction rules out a royal flock outright. Degree
    n-2 forces, inside a royal flock, a three-cycle shape with an n-2 block
    substituted for one strategy; the witness reports the two special
    vertices and the block. All flagged vertices are reported since the two
    roles can fire at distinct vertices.
    """
    out, inn = degrees(t)
    n = t.n
    out_full = tuple(v for v in range(n) if out[v] == n - 1)
    in_full = tuple(v for v in range(n) if inn[v] == n - 1)
    out_near = tuple(v for v in range(n) if n >= 2 and out[v] == n - 2)
    in_near = tuple(v for v in range(n) if n >= 2 and inn[v] == n - 2)
    witnesses: list[DecompositionWitness] = []
    for c in out_near:
        beaters = [v for v in range(n) if v != c and t.beats(v, c)]
        if len(beaters) == 1:
            a = beaters[0]
            block = frozenset(range(n)) - {a, c}
            witnesses.append(DecompositionWitness(a, c, block))
    for a in in_near:
        beaten = t.out_neighbors(a)
        if len(beaten) == 1:
            c = beaten[0]
            block = frozenset(range(n)) - {a, c}
            witnesses.append(DecompositionWitness(a, c, block))
    unique = tuple(dict.fromkeys(witnesses))
    return DegreeScreen(out_full, in_full, out_near, in_near, unique)


def is_eulerian(t: Tournament) -> bool:
    """True when n is odd and every vertex beats exactly half of the others."""
    if t.n % 2 == 0:
        return False
    out, _ = degrees(t)
    return all(d == (t.n - 1) // 2 for d in out)


def classify_structure(t: Tournament) -> StructuralClassification:
    return StructuralClassification(
        is_royal_flock=is_royal_flock(t),
        is_eulerian=is_eulerian(t),
        hamiltonian_cycle=hamiltonian_cycle(t),
        degree_flags=degree_screen(t),
    )


def to_dot(t: Tournament, annotate_dominated: bool = True) -> str:
    """DOT digraph with one edge per beat relation.

    Dominated vertices (losers of some dominance pair) are drawn filled in
    gray; the annotation is informational only.
    """
    dominated = (
        {p.loser for p in dominance_pairs(t)} if annotate_dominated else set()
    )
    lines = ["digraph tournament {", "  node [shape=circle];"]
    for v in range(t.n):
        attr = ' [style=filled, fillcolor="gray80"]' if v in dominated else ""
        lines.append(f"  {v}{attr};")
    for i, j in t.edges():
        lines.append(f"  {i} -> {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
