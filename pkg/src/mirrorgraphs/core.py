"""Value types for bipartite graphs, loop graphs, and degree data.

Matrices are stored as tuples of Python ints used as bit rows: bit j of
``rows[i]`` is set iff vertex i is adjacent to vertex j of the other side
(or of the same vertex set, for ``LGraph``).  Vertex identity is positional
and every type is immutable; operations return new values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "DegreeSequence",
    "DegreeSet",
    "BipartiteGraph",
    "LGraph",
    "MirrorPairing",
    "left_degrees",
    "right_degrees",
    "lgraph_degrees",
    "verify_pairing",
    "bipartite_isomorphic",
]


@dataclass(frozen=True)
class DegreeSequence:
    """A finite non-increasing sequence of non-negative ints."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        for i, v in enumerate(self.values):
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"degree at position {i} is not a non-negative int: {v!r}")
            if i > 0 and self.values[i - 1] < v:
                raise ValueError(
                    f"sequence is not non-increasing at position {i}: "
                    f"{self.values[i - 1]} < {v}"
                )

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "DegreeSequence":
        """Sort arbitrary values into non-increasing order and wrap them."""
        return cls(tuple(sorted(values, reverse=True)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def total(self) -> int:
        return sum(self.values)


@dataclass(frozen=True)
class DegreeSet:
    """A set of distinct positive ints, stored strictly decreasing."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        for i, v in enumerate(self.values):
            if not isinstance(v, int) or v <= 0:
                raise ValueError(f"degree-set entry at position {i} must be a positive int: {v!r}")
            if i > 0 and self.values[i - 1] <= v:
                raise ValueError(
                    f"degree set is not strictly decreasing at position {i}: "
                    f"{self.values[i - 1]} then {v}"
                )

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "DegreeSet":
        vals = sorted(values, reverse=True)
        for a, b in zip(vals, vals[1:]):
            if a == b:
                raise ValueError(f"duplicate degree-set entry: {a}")
        return cls(tuple(vals))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]


def _check_rows(n_rows: int, width: int, rows: Sequence[int]) -> None:
    if len(rows) != n_rows:
        raise ValueError(f"expected {n_rows} rows, got {len(rows)}")
    limit = 1 << width
    for i, r in enumerate(rows):
        if not isinstance(r, int) or r < 0 or r >= limit:
            raise ValueError(f"row {i} is not a {width}-bit row: {r!r}")


@dataclass(frozen=True)
class BipartiteGraph:
    """A bipartite graph on vertex sets of sizes n1 (rows) and n2 (columns)."""

    n1: int
    n2: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.n1 < 0 or self.n2 < 0:
            raise ValueError("vertex counts must be non-negative")
        _check_rows(self.n1, self.n2, self.rows)

    @classmethod
    def from_edges(cls, n1: int, n2: int, edges: Iterable[tuple[int, int]]) -> "BipartiteGraph":
        rows = [0] * n1
        for i, j in edges:
            if not (0 <= i < n1 and 0 <= j < n2):
                raise ValueError(f"edge ({i},{j}) out of range for {n1}x{n2}")
            rows[i] |= 1 << j
        return cls(n1, n2, tuple(rows))

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i, r in enumerate(self.rows):
            while r:
                j = (r & -r).bit_length() - 1
                out.append((i, j))
                r &= r - 1
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def row_degree_list(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def column_list(self) -> list[int]:
        """Column vectors as bit rows over the row side."""
        cols = [0] * self.n2
        for i, r in enumerate(self.rows):
            while r:
                j = (r & -r).bit_length() - 1
                cols[j] |= 1 << i
                r &= r - 1
        return cols

    def column_degree_list(self) -> list[int]:
        return [c.bit_count() for c in self.column_list()]

    def transpose(self) -> "BipartiteGraph":
        return BipartiteGraph(self.n2, self.n1, tuple(self.column_list()))


@dataclass(frozen=True)
class LGraph:
    """A simple graph where each vertex may carry at most one loop.

    The adjacency matrix is symmetric; a set diagonal bit is the loop and
    contributes exactly one to the vertex degree.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        _check_rows(self.n, self.n, self.rows)
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.rows[i] >> j) & 1 != (self.rows[j] >> i) & 1:
                    raise ValueError(f"adjacency is not symmetric at ({i},{j})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "LGraph":
        rows = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i},{j}) out of range for order {n}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows))

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def has_loop(self, v: int) -> bool:
        return self.has_edge(v, v)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (i, j) with i <= j; a loop appears as (v, v)."""
        out = []
        for i in range(self.n):
            r = self.rows[i] >> i
            j = i
            while r:
                if r & 1:
                    out.append((i, j))
                r >>= 1
                j += 1
        return out

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degree_list(self) -> list[int]:
        return [r.bit_count() for r in self.rows]


@dataclass(frozen=True)
class MirrorPairing:
    """A bijection between the two sides, stored as a permutation.

    ``pairing[i] = j`` pairs row vertex i with column vertex j.
    """

    pairing: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairing", tuple(self.pairing))
        n = len(self.pairing)
        if sorted(self.pairing) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {self.pairing!r}")

    @classmethod
    def identity(cls, n: int) -> "MirrorPairing":
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.pairing)

    def __getitem__(self, i: int) -> int:
        return self.pairing[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.pairing)

    def inverse(self) -> "MirrorPairing":
        inv = [0] * len(self.pairing)
        for i, j in enumerate(self.pairing):
            inv[j] = i
        return MirrorPairing(tuple(inv))


def left_degrees(g: BipartiteGraph) -> DegreeSequence:
    return DegreeSequence.from_values(g.row_degree_list())


def right_degrees(g: BipartiteGraph) -> DegreeSequence:
    return DegreeSequence.from_values(g.column_degree_list())


def lgraph_degrees(h: LGraph) -> DegreeSequence:
    return DegreeSequence.from_values(h.degree_list())


def verify_pairing(g: BipartiteGraph, p: MirrorPairing) -> bool:
    """True iff the column permutation by p makes the biadjacency symmetric.

    That is, B[i][p[j]] == B[j][p[i]] for all i, j.
    """
    if g.n1 != g.n2 or len(p) != g.n1:
        raise ValueError(
            f"pairing of length {len(p)} does not fit a {g.n1}x{g.n2} graph"
        )
    rows = g.rows
    pi = p.pairing
    for i in range(g.n1):
        for j in range(i + 1, g.n1):
            if (rows[i] >> pi[j]) & 1 != (rows[j] >> pi[i]) & 1:
                return False
    return True


def _classes_by_degree(vectors: list[int]) -> dict[int, int]:
    """Bit mask of positions per degree value."""
    out: dict[int, int] = {}
    for idx, v in enumerate(vectors):
        d = v.bit_count()
        out[d] = out.get(d, 0) | (1 << idx)
    return out


def _side_preserving_isomorphic(g1: BipartiteGraph, g2: BipartiteGraph) -> bool:
    if (g1.n1, g1.n2) != (g2.n1, g2.n2):
        return False
    if g1.edge_count() != g2.edge_count():
        return False
    deg1 = g1.row_degree_list()
    deg2 = g2.row_degree_list()
    if sorted(deg1) != sorted(deg2):
        return False
    cols1 = _classes_by_degree(g1.column_list())
    cols2 = _classes_by_degree(g2.column_list())
    if cols1.keys() != cols2.keys():
        return False
    classes = []
    for d in cols1:
        m1, m2 = cols1[d], cols2[d]
        if m1.bit_count() != m2.bit_count():
            return False
        classes.append((m1, m2))

    n1 = g1.n1
    rows1, rows2 = g1.rows, g2.rows
    # Row i of g1 is assigned to an unused row of g2 with the same degree.
    # Column classes are refined by each assignment: the columns a row hits
    # inside a class must match in number on both sides.  When every row is
    # placed the surviving classes are twin classes and any block bijection
    # completes the isomorphism.
    used = [False] * n1

    def extend(i: int, classes: list[tuple[int, int]]) -> bool:
        if i == n1:
            return True
        r1 = rows1[i]
        d = deg1[i]
        for j in range(n1):
            if used[j] or deg2[j] != d:
                continue
            r2 = rows2[j]
            refined = []
            ok = True
            for m1, m2 in classes:
                a1, a2 = m1 & r1, m2 & r2
                if a1.bit_count() != a2.bit_count():
                    ok = False
                    break
                if a1:
                    refined.append((a1, a2))
                b1, b2 = m1 & ~r1, m2 & ~r2
                if b1:
                    refined.append((b1, b2))
            if not ok:
                continue
            used[j] = True
            if extend(i + 1, refined):
                return True
            used[j] = False
        return False

    return extend(0, classes)


def bipartite_isomorphic(
    g1: BipartiteGraph,
    g2: BipartiteGraph,
    allow_side_swap: bool | None = None,
) -> bool:
    """Exact isomorphism test, intended for sides up to about 8 vertices.

    With ``allow_side_swap`` the two vertex sets may be exchanged; the
    default allows it exactly when g1 is balanced with coinciding degree
    sequences on both sides.
    """
    if allow_side_swap is None:
        allow_side_swap = g1.n1 == g1.n2 and left_degrees(g1) == right_degrees(g1)
    if _side_preserving_isomorphic(g1, g2):
        return True
    if allow_side_swap and _side_preserving_isomorphic(g1, g2.transpose()):
        return True
    return False
