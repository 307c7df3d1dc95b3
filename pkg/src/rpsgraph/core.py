"""Tournaments (complete oriented graphs) and their encodings.

Vertices are 0-indexed throughout. A tournament on n vertices orients every
one of the n(n-1)/2 vertex pairs; ``wins[i]`` holds the bitmask of vertices
beaten by vertex i. All types are immutable and validated on construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Sequence

# Canonicalization enumerates all n! relabelings, which is fine up to 8
# vertices (40320 permutations of a 28-bit code) and not beyond.
MAX_CANONICAL_N = 8


def pair_order(n: int) -> list[tuple[int, int]]:
    """All vertex pairs (i, j) with i < j, in lexicographic order."""
    return list(combinations(range(n), 2))


@dataclass(frozen=True)
class Tournament:
    """A complete oriented graph: exactly one directed edge per vertex pair."""

    n: int
    wins: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        if len(self.wins) != self.n:
            raise ValueError("wins must hold one bitmask per vertex")
        for i, mask in enumerate(self.wins):
            if mask < 0 or mask >> self.n:
                raise ValueError(f"vertex {i} beats a vertex out of range")
            if mask & (1 << i):
                raise ValueError(f"vertex {i} beats itself")
        for i, j in combinations(range(self.n), 2):
            forward = bool(self.wins[i] & (1 << j))
            backward = bool(self.wins[j] & (1 << i))
            if forward and backward:
                raise ValueError(f"pair {{{i}, {j}}} is oriented both ways")
            if not forward and not backward:
                raise ValueError(f"pair {{{i}, {j}}} has no orientation")

    def beats(self, i: int, j: int) -> bool:
        return bool(self.wins[i] >> j & 1)

    def out_neighbors(self, i: int) -> list[int]:
        return [j for j in range(self.n) if self.wins[i] >> j & 1]

    def edges(self) -> list[tuple[int, int]]:
        """All (winner, loser) pairs, sorted."""
        return [(i, j) for i in range(self.n) for j in self.out_neighbors(i)]


@dataclass(frozen=True)
class PairCode:
    """Bit string over pairs (i, j) with i < j in lexicographic order.

    Character k is '1' when the smaller vertex of pair k beats the larger.
    The leftmost pair is the most significant position for comparisons, so
    lexicographic order on the string agrees with numeric order on
    ``as_int()``.
    """

    n: int
    bits: str

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        expected = self.n * (self.n - 1) // 2
        if len(self.bits) != expected:
            raise ValueError(
                f"code length {len(self.bits)} does not match n={self.n} "
                f"(need exactly {expected} bits)"
            )
        if set(self.bits) - {"0", "1"}:
            raise ValueError("code must contain only '0' and '1'")

    def as_int(self) -> int:
        return int(self.bits, 2) if self.bits else 0


@dataclass(frozen=True)
class OutcomeMatrix:
    """n x n matrix: 2 where the row strategy wins, 1 on the diagonal, else 0."""

    n: int
    g: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.g) != self.n or any(len(r) != self.n for r in self.g):
            raise ValueError("matrix must be square with positive size")
        for i in range(self.n):
            if self.g[i][i] != 1:
                raise ValueError(f"diagonal entry ({i}, {i}) must be 1")
            for j in range(i + 1, self.n):
                if {self.g[i][j], self.g[j][i]} != {0, 2}:
                    raise ValueError(
                        f"entries ({i}, {j}) and ({j}, {i}) must be 0 and 2"
                    )


@dataclass(frozen=True)
class CanonicalForm:
    """Minimal pair code over all relabelings, with the permutation achieving it."""

    code: PairCode
    witness: tuple[int, ...]


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Tournament:
    """Build a tournament from (winner, loser) pairs covering every vertex pair once."""
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    wins = [0] * n
    seen: set[tuple[int, int]] = set()
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"vertex out of range in edge ({i}, {j})")
        if i == j:
            raise ValueError(f"self-loop at vertex {i}")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise ValueError(f"duplicate pair {{{key[0]}, {key[1]}}}")
        seen.add(key)
        wins[i] |= 1 << j
    for pair in combinations(range(n), 2):
        if pair not in seen:
            raise ValueError(f"missing pair {{{pair[0]}, {pair[1]}}}")
    return Tournament(n, tuple(wins))


def encode(t: Tournament) -> PairCode:
    bits = "".join(
        "1" if t.beats(i, j) else "0" for i, j in combinations(range(t.n), 2)
    )
    return PairCode(t.n, bits)


def decode(code: PairCode) -> Tournament:
    wins = [0] * code.n
    for bit, (i, j) in zip(code.bits, combinations(range(code.n), 2)):
        if bit == "1":
            wins[i] |= 1 << j
        else:
            wins[j] |= 1 << i
    return Tournament(code.n, tuple(wins))


def outcome_matrix(t: Tournament) -> OutcomeMatrix:
    g = tuple(
        tuple(1 if i == j else (2 if t.beats(i, j) else 0) for j in range(t.n))
        for i in range(t.n)
    )
    return OutcomeMatrix(t.n, g)


def from_outcome_matrix(m: OutcomeMatrix) -> Tournament:
    wins = [0] * m.n
    for i in range(m.n):
        for j in range(m.n):
            if i != j and m.g[i][j] == 2:
                wins[i] |= 1 << j
    return Tournament(m.n, tuple(wins))


def degrees(t: Tournament) -> tuple[list[int], list[int]]:
    """(out_degree, in_degree) per vertex; they sum to n - 1 everywhere."""
    out = [bin(mask).count("1") for mask in t.wins]
    inn = [t.n - 1 - d for d in out]
    return out, inn


def apply_permutation(t: Tournament, perm: Sequence[int]) -> Tournament:
    """Relabel vertices; ``perm[old]`` is the new index of vertex ``old``."""
    if sorted(perm) != list(range(t.n)):
        raise ValueError("perm must be a permutation of the vertex range")
    wins = [0] * t.n
    for i in range(t.n):
        for j in t.out_neighbors(i):
            wins[perm[i]] |= 1 << perm[j]
    return Tournament(t.n, tuple(wins))


def subtournament(t: Tournament, vertices: Sequence[int]) -> Tournament:
    """Induced tournament on ``vertices``, relabeled by position in the sequence."""
    verts = list(vertices)
    if len(set(verts)) != len(verts):
        raise ValueError("duplicate vertices")
    if any(not 0 <= v < t.n for v in verts):
        raise ValueError("vertex out of range")
    k = len(verts)
    wins = [0] * k
    for a in range(k):
        for b in range(k):
            if a != b and t.beats(verts[a], verts[b]):
                wins[a] |= 1 << b
    return Tournament(k, tuple(wins))


def canonical_form(t: Tournament) -> CanonicalForm:
    """Lexicographically smallest pair code over all vertex relabelings.

    Two tournaments are isomorphic exactly when their canonical codes are
    equal. The witness permutation maps source labels to canonical labels:
    ``encode(apply_permutation(t, witness)) == code``.
    """
    if t.n > MAX_CANONICAL_N:
        raise ValueError(
            f"canonicalization supports at most {MAX_CANONICAL_N} vertices, got {t.n}"
        )
    pairs = pair_order(t.n)
    best: int | None = None
    best_placement: tuple[int, ...] = tuple(range(t.n))
    for placement in permutations(range(t.n)):
        # placement[a] is the source vertex that gets relabeled to a
        value = 0
        for a, b in pairs:
            value = value << 1 | t.beats(placement[a], placement[b])
        if best is None or value < best:
            best, best_placement = value, placement
    witness = [0] * t.n
    for new, old in enumerate(best_placement):
        witness[old] = new
    bits = format(best or 0, f"0{len(pairs)}b") if pairs else ""
    return CanonicalForm(PairCode(t.n, bits), tuple(witness))


def to_json_dict(t: Tournament) -> dict:
    return {"n": t.n, "edges": [[i, j] for i, j in t.edges()]}


def from_json_dict(data: object) -> Tournament:
    """Parse ``{"n": ..., "edges": [[i, j], ...]}`` or ``{"n": ..., "code": "..."}``."""
    if not isinstance(data, dict):
        raise ValueError("tournament JSON must be an object")
    if "n" not in data or not isinstance(data["n"], int):
        raise ValueError("tournament JSON needs an integer field 'n'")
    has_edges = "edges" in data
    has_code = "code" in data
    if has_edges == has_code:
        raise ValueError("tournament JSON needs exactly one of 'edges' or 'code'")
    n = data["n"]
    if has_code:
        if not isinstance(data["code"], str):
            raise ValueError("'code' must be a string of bits")
        return decode(PairCode(n, data["code"]))
    edges = data["edges"]
    if not isinstance(edges, list) or any(
        not isinstance(e, (list, tuple)) or len(e) != 2 for e in edges
    ):
        raise ValueError("'edges' must be a list of [winner, loser] pairs")
    return from_edges(n, [(int(i), int(j)) for i, j in edges])
