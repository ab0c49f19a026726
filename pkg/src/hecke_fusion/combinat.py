"""
Partitions, multipartitions, nodes, hooks, standard tableaux and residues.

Partitions are plain tuples of positive parts; a multipartition is a tuple
of m partitions.  Nodes are ``Node(comp, row, col)`` (all 1-based) so that
the natural tuple order is the (comp, row, col) order used everywhere.

>>> conjugate((3, 1))
(2, 1, 1)
>>> [t.rows() for t in enumerate_standard_tableaux(((2, 1),))]
[[[[1, 3], [2]]], [[[1, 2], [3]]]]
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Sequence

from .errors import EntryOutOfRange, NodeOutsideDiagram
from .exact import Parameters

__all__ = [
    "Partition", "MultiPartition", "Node", "StandardTableau",
    "conjugate", "hook", "generalized_hook", "partitions",
    "addable_nodes", "removable_nodes", "addable_removable",
    "enumerate_multipartitions", "enumerate_standard_tableaux",
    "residue", "node_residue", "residues_separate", "size",
    "add_node", "remove_node", "count_standard_tableaux",
]

Partition = tuple  # weakly decreasing positive ints
MultiPartition = tuple  # m partitions


class Node(NamedTuple):
    comp: int
    row: int
    col: int


def size(la: Sequence) -> int:
    if la and isinstance(la[0], tuple):
        return sum(sum(p) for p in la)
    return sum(la)


def conjugate(la: Partition) -> Partition:
    if not la:
        return ()
    return tuple(sum(1 for part in la if part > j) for j in range(la[0]))


def _part(la: Partition, i: int) -> int:
    return la[i - 1] if 1 <= i <= len(la) else 0


def hook(la: Partition, i: int, j: int) -> int:
    """h_{i,j} = la_i - i + la^_j - j + 1 for a node (i, j) of la."""
    if not (1 <= j <= _part(la, i)):
        raise NodeOutsideDiagram(f"({i},{j}) is not a node of {la}")
    return _part(la, i) - i + _part(conjugate(la), j) - j + 1


def _ghook(la: Partition, mu_conj: Partition, i: int, j: int) -> int:
    return _part(la, i) - i + _part(mu_conj, j) - j + 1


def generalized_hook(la: Partition, mu: Partition, i: int, j: int) -> int:
    """la_i - i + mu^_j - j + 1 for a node (i, j) of la."""
    if not (1 <= j <= _part(la, i)):
        raise NodeOutsideDiagram(f"({i},{j}) is not a node of {la}")
    return _ghook(la, conjugate(mu), i, j)


def nodes(la: Partition):
    for i, part in enumerate(la, 1):
        for j in range(1, part + 1):
            yield i, j


def addable_nodes(la: Partition) -> list[tuple[int, int]]:
    out = []
    for i in range(1, len(la) + 2):
        j = _part(la, i) + 1
        if i == 1 or _part(la, i - 1) >= j:
            out.append((i, j))
    return out


def removable_nodes(la: Partition) -> list[tuple[int, int]]:
    return [(i, la[i - 1]) for i in range(1, len(la) + 1) if _part(la, i + 1) < la[i - 1]]


def addable_removable(la: MultiPartition) -> tuple[list[Node], list[Node]]:
    """Sorted addable and removable nodes of a multipartition."""
    add, rem = [], []
    for c, part in enumerate(la, 1):
        add.extend(Node(c, i, j) for i, j in addable_nodes(part))
        rem.extend(Node(c, i, j) for i, j in removable_nodes(part))
    return sorted(add), sorted(rem)


def add_node(la: MultiPartition, node: Node) -> MultiPartition:
    part = list(la[node.comp - 1])
    if node.row == len(part) + 1:
        part.append(1)
    else:
        part[node.row - 1] += 1
    return la[:node.comp - 1] + (tuple(part),) + la[node.comp:]


def remove_node(la: MultiPartition, node: Node) -> MultiPartition:
    part = list(la[node.comp - 1])
    part[node.row - 1] -= 1
    if not part[node.row - 1]:
        part.pop()
    return la[:node.comp - 1] + (tuple(part),) + la[node.comp:]


def partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """Partitions of n in decreasing lexicographic order: (n), (n-1, 1), ..."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        out.extend((first,) + rest for rest in partitions(n - first, first))
    return out


def _compositions(n: int, m: int):
    if m == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, m - 1):
            yield (first,) + rest


def enumerate_multipartitions(m: int, n: int) -> list[MultiPartition]:
    """
    All m-multipartitions of n.

    Ordered by component sizes (decreasing lexicographic, so ((n); ∅; ...)
    comes first), then by each component in decreasing lexicographic order.
    """
    out = []
    for sizes in _compositions(n, m):
        out.extend(product(*(partitions(k) for k in sizes)))
    return out


@dataclass(frozen=True)
class StandardTableau:
    """
    A standard tableau, stored as the node holding each entry.

    ``positions[k - 1]`` is the node containing k.  Tableaux sort by the
    nodes of n, n-1, ..., 1 in (comp, row, col) order.
    """
    shape: MultiPartition
    positions: tuple[Node, ...]

    @property
    def n(self) -> int:
        return len(self.positions)

    @property
    def m(self) -> int:
        return len(self.shape)

    def sort_key(self) -> tuple:
        return tuple(reversed(self.positions))

    def __lt__(self, other: "StandardTableau") -> bool:
        return self.sort_key() < other.sort_key()

    def node_of(self, k: int) -> Node:
        if not 1 <= k <= self.n:
            raise EntryOutOfRange(f"entry {k} not in 1..{self.n}")
        return self.positions[k - 1]

    def restrict(self, k: int) -> "StandardTableau":
        """Subtableau holding the entries 1..k."""
        shape = self.shape
        for node in reversed(self.positions[k:]):
            shape = remove_node(shape, node)
        return StandardTableau(shape, self.positions[:k])

    def extend(self, node: Node) -> "StandardTableau":
        return StandardTableau(add_node(self.shape, node), self.positions + (node,))

    def swap(self, i: int) -> "StandardTableau | None":
        """The tableau with i and i+1 exchanged, or None if it is not standard."""
        a, b = self.positions[i - 1], self.positions[i]
        if a.comp == b.comp and (a.row == b.row or a.col == b.col):
            return None
        pos = list(self.positions)
        pos[i - 1], pos[i] = b, a
        return StandardTableau(self.shape, tuple(pos))

    def rows(self) -> list[list[list[int]]]:
        """Per-component row arrays of entries (the JSON encoding)."""
        out = [[[0] * part for part in la] for la in self.shape]
        for k, (c, r, col) in enumerate(self.positions, 1):
            out[c - 1][r - 1][col - 1] = k
        return out

    @classmethod
    def from_rows(cls, rows: Sequence) -> "StandardTableau":
        shape = tuple(tuple(len(r) for r in comp) for comp in rows)
        where = {}
        for c, comp in enumerate(rows, 1):
            for r, row in enumerate(comp, 1):
                for col, k in enumerate(row, 1):
                    where[int(k)] = Node(c, r, col)
        n = size(shape)
        if sorted(where) != list(range(1, n + 1)):
            raise ValueError(f"entries of {rows} are not 1..{n}")
        if any(tuple(sorted(part, reverse=True)) != part or 0 in part for part in shape):
            raise ValueError(f"{rows} does not have a partition shape")
        t = cls(shape, tuple(where[k] for k in range(1, n + 1)))
        for c, comp in enumerate(rows):
            for r, row in enumerate(comp):
                for col, k in enumerate(row):
                    if col and row[col - 1] > k or r and comp[r - 1][col] > k:
                        raise ValueError(f"{rows} is not standard")
        return t

    def __str__(self) -> str:
        return " | ".join(
            "/".join(",".join(str(k) for k in row) for row in comp) or "-" for comp in self.rows()
        )


def enumerate_standard_tableaux(la: MultiPartition) -> list[StandardTableau]:
    """Std(la), generated by removing the node of the largest entry, in sort order."""
    if size(la) == 0:
        return [StandardTableau(la, ())]
    out = []
    for node in addable_removable(la)[1]:
        for u in enumerate_standard_tableaux(remove_node(la, node)):
            out.append(StandardTableau(la, u.positions + (node,)))
    return out


def count_standard_tableaux(la: MultiPartition) -> int:
    if size(la) == 0:
        return 1
    return sum(count_standard_tableaux(remove_node(la, node)) for node in addable_removable(la)[1])


def node_residue(node: Node, P: Parameters):
    return P.node_residue(node.row, node.col, node.comp)


def residue(t: StandardTableau, i: int, P: Parameters):
    """res_t(i) = b - a + q_c for the node (a, b, c) holding i."""
    return node_residue(t.node_of(i), P)


def residue_sequence(t: StandardTableau, P: Parameters) -> tuple:
    return tuple(node_residue(node, P) for node in t.positions)


def residues_separate(m: int, n: int, P: Parameters) -> bool:
    """
    Exhaustively check that residue sequences tell standard tableaux apart.

    Distinct tableaux of any shapes must have distinct sequences, and two
    tableaux of one shape whose sequences agree outside {i, i+1} must be
    equal or differ by swapping i and i+1.
    """
    seqs = {}
    by_shape: dict = {}
    for la in enumerate_multipartitions(m, n):
        for t in enumerate_standard_tableaux(la):
            s = residue_sequence(t, P)
            if s in seqs:
                return False
            seqs[s] = t
            by_shape.setdefault(la, []).append((t, s))
    for tabs in by_shape.values():
        for a, (s, rs) in enumerate(tabs):
            for t, rt in tabs[a + 1:]:
                diff = [k for k in range(n) if rs[k] != rt[k]]
                if len(diff) == 2 and diff[1] == diff[0] + 1:
                    if s.swap(diff[0] + 1) != t:
                        return False
    return True
