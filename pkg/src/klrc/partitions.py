"""Partitions with charged type-C residues, standard tableaux and degrees.

Partitions are weakly decreasing tuples of positive integers and nodes are
1-based ``(row, column)`` pairs, English convention.  A standard tableau is a
tuple of rows, each a tuple of entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .cartan import RootVector, cartan

Partition = tuple[int, ...]
Node = tuple[int, int]
Tableau = tuple[tuple[int, ...], ...]


def fold(x: int, ell: int) -> int:
    """The folding map ``Z -> {0..l}``: reduce mod ``2l`` then reflect about ``l``."""
    m = x % (2 * ell)
    return m if m <= ell else 2 * ell - m


@dataclass(frozen=True)
class Charge:
    """A charge ``kappa`` for rank ``ell``; only ``kappa mod 2l`` matters."""

    kappa: int
    ell: int

    def __post_init__(self) -> None:
        if self.ell < 2:
            raise ValueError(f"rank must be at least 2, got {self.ell}")
        object.__setattr__(self, "kappa", self.kappa % (2 * self.ell))

    @property
    def k(self) -> int:
        """Index of the fundamental weight ``Lambda_kappa``."""
        return fold(self.kappa, self.ell)

    def residue(self, node: Node) -> int:
        r, c = node
        return fold(self.kappa + c - r, self.ell)


def make_partition(parts: Sequence[int]) -> Partition:
    """Normalise to a tuple without trailing zeros, checking monotonicity."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{parts!r} is not a partition")
    return p


def nodes(la: Partition) -> Iterator[Node]:
    for r, row in enumerate(la, 1):
        for c in range(1, row + 1):
            yield (r, c)


def addable_nodes(la: Partition) -> list[Node]:
    out = []
    for r in range(1, len(la) + 2):
        row = la[r - 1] if r <= len(la) else 0
        above = la[r - 2] if r >= 2 else None
        if above is None or above > row:
            out.append((r, row + 1))
    return out


def removable_nodes(la: Partition) -> list[Node]:
    return [
        (r, la[r - 1])
        for r in range(1, len(la) + 1)
        if r == len(la) or la[r] < la[r - 1]
    ]


def add_node(la: Partition, node: Node) -> Partition:
    r, c = node
    row = la[r - 1] if 1 <= r <= len(la) else 0
    if not (1 <= r <= len(la) + 1 and c == row + 1 and (r == 1 or la[r - 2] > row)):
        raise ValueError(f"node {node} is not addable to {la}")
    if r == len(la) + 1:
        return la + (1,)
    return la[: r - 1] + (la[r - 1] + 1,) + la[r:]


def remove_node(la: Partition, node: Node) -> Partition:
    r, c = node
    if not (1 <= r <= len(la) and c == la[r - 1] and (r == len(la) or la[r] < c)):
        raise ValueError(f"node {node} is not removable from {la}")
    if la[r - 1] == 1:
        return la[: r - 1]
    return la[: r - 1] + (la[r - 1] - 1,) + la[r:]


def content(charge: Charge, la: Partition) -> RootVector:
    """Sum of ``alpha_{res A}`` over the nodes of ``la``."""
    coeffs = [0] * (charge.ell + 1)
    for node in nodes(la):
        coeffs[charge.residue(node)] += 1
    return tuple(coeffs)


def partition_defect(charge: Charge, la: Partition) -> int:
    return cartan(charge.ell).defect(charge.k, content(charge, la))


def n_zero(la: Partition, charge: Charge) -> int:
    """Number of 0-coloured boxes."""
    return sum(1 for node in nodes(la) if charge.residue(node) == 0)


def stat_di(charge: Charge, la: Partition, i: int) -> int:
    """#addable i-nodes minus #removable i-nodes (no symmetrizer factor)."""
    res = charge.residue
    return sum(1 for A in addable_nodes(la) if res(A) == i) - sum(
        1 for A in removable_nodes(la) if res(A) == i
    )


def _signed_count(charge: Charge, la: Partition, i: int, rows) -> int:
    res = charge.residue
    add = sum(1 for A in addable_nodes(la) if res(A) == i and rows(A[0]))
    rem = sum(1 for A in removable_nodes(la) if res(A) == i and rows(A[0]))
    return cartan(charge.ell).d(i) * (add - rem)


def stat_below(charge: Charge, la: Partition, A: Node) -> int:
    """``d_A(la)``: symmetrizer times the signed count of i-nodes in later rows."""
    _require_node(la, A)
    return _signed_count(charge, la, charge.residue(A), lambda r: r > A[0])


def stat_above(charge: Charge, la: Partition, A: Node) -> int:
    """``d^A(la)``: as :func:`stat_below` but for strictly earlier rows.

    ``A`` may be an addable node of ``la`` as well as a node of ``la``; the
    Fock action of ``f_i`` needs the former.
    """
    if A not in addable_nodes(la):
        _require_node(la, A)
    return _signed_count(charge, la, charge.residue(A), lambda r: r < A[0])


def _require_node(la: Partition, A: Node) -> None:
    r, c = A
    if not (1 <= r <= len(la) and 1 <= c <= la[r - 1]):
        raise ValueError(f"node {A} is not in the diagram of {la}")


# -- tableaux ---------------------------------------------------------------


def hook_length_count(la: Partition) -> int:
    """Number of standard tableaux via the hook-length formula."""
    conj = conjugate(la)
    hooks = 1
    for r, c in nodes(la):
        hooks *= (la[r - 1] - c) + (conj[c - 1] - r) + 1
    return factorial(sum(la)) // hooks


def conjugate(la: Partition) -> Partition:
    if not la:
        return ()
    return tuple(sum(1 for x in la if x >= c) for c in range(1, la[0] + 1))


def standard_tableaux(la: Partition) -> Iterator[Tableau]:
    """Every standard tableau of shape ``la``, in a fixed order.

    The largest entry sits in a removable corner; we recurse on the shape with
    that corner removed, taking corners top to bottom.
    """
    n = sum(la)
    if n == 0:
        yield ()
        return
    for A in removable_nodes(la):
        for t in standard_tableaux(remove_node(la, A)):
            yield _place(t, A, n)


def _place(t: Tableau, node: Node, entry: int) -> Tableau:
    r, _ = node
    if r == len(t) + 1:
        return t + ((entry,),)
    return t[: r - 1] + (t[r - 1] + (entry,),) + t[r:]


def shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def is_standard(t: Tableau) -> bool:
    la = shape(t)
    if any(la[i] < la[i + 1] for i in range(len(la) - 1)):
        return False
    entries = sorted(x for row in t for x in row)
    if entries != list(range(1, len(entries) + 1)):
        return False
    for r, row in enumerate(t):
        for c, x in enumerate(row):
            if c and row[c - 1] >= x:
                return False
            if r and t[r - 1][c] >= x:
                return False
    return True


def initial_tableau(la: Partition) -> Tableau:
    rows, start = [], 1
    for part in la:
        rows.append(tuple(range(start, start + part)))
        start += part
    return tuple(rows)


def _positions(t: Tableau) -> list[Node]:
    """Node holding each entry, indexed by ``entry - 1``."""
    pos: list[Node] = [(0, 0)] * sum(len(row) for row in t)
    for r, row in enumerate(t, 1):
        for c, x in enumerate(row, 1):
            pos[x - 1] = (r, c)
    return pos


def residue_sequence(charge: Charge, t: Tableau) -> tuple[int, ...]:
    return tuple(charge.residue(A) for A in _positions(t))


def degree(charge: Charge, t: Tableau) -> int:
    """Degree of a standard tableau, summed over its insertion history."""
    la: Partition = ()
    total = 0
    for A in _positions(t):
        la = add_node(la, A)
        total += stat_below(charge, la, A)
    return total


# -- searches ---------------------------------------------------------------


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_of_content(charge: Charge, beta: Sequence[int]) -> list[Partition]:
    """All partitions whose content is ``beta``.

    Depth-first over rows, pruning as soon as a partial content exceeds
    ``beta`` in some coordinate.
    """
    beta = tuple(beta)
    if len(beta) != charge.ell + 1:
        raise ValueError(f"beta needs {charge.ell + 1} coefficients, got {len(beta)}")
    if any(b < 0 for b in beta):
        return []
    found: list[Partition] = []

    def grow(la: Partition, used: list[int], remaining: int) -> None:
        if remaining == 0:
            if list(used) == list(beta):
                found.append(la)
            return
        r = len(la) + 1
        cap = min(remaining, la[-1] if la else remaining)
        row_used = list(used)
        for c in range(1, cap + 1):
            row_used[charge.residue((r, c))] += 1
            if row_used[charge.residue((r, c))] > beta[charge.residue((r, c))]:
                break
            grow(la + (c,), row_used, remaining - c)

    grow((), [0] * len(beta), sum(beta))
    return found


def realizable(charge: Charge, nu: Sequence[int]) -> bool:
    """Is ``nu`` the residue sequence of some standard tableau?"""
    shapes: set[Partition] = {()}
    for i in nu:
        shapes = {
            add_node(la, A)
            for la in shapes
            for A in addable_nodes(la)
            if charge.residue(A) == i
        }
        if not shapes:
            return False
    return True


@lru_cache(maxsize=4096)
def partitions_by_content(charge: Charge, n: int) -> dict[RootVector, tuple[Partition, ...]]:
    """Group all partitions of ``n`` by content."""
    groups: dict[RootVector, list[Partition]] = {}
    for la in partitions_of(n):
        groups.setdefault(content(charge, la), []).append(la)
    return {beta: tuple(las) for beta, las in groups.items()}
