"""Fock-space crystal of V(Lambda_k) and the q-deformed Fock module action."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Optional

from .partitions import (
    Charge,
    Node,
    Partition,
    add_node,
    addable_nodes,
    n_zero,
    remove_node,
    removable_nodes,
    stat_above,
    stat_below,
    stat_di,
)
from .qdim import LaurentPoly

Signature = list[tuple[str, Node]]


def signature(charge: Charge, la: Partition, i: int) -> Signature:
    """Addable (+) and removable (-) i-nodes, top to bottom."""
    marked = [("+", A) for A in addable_nodes(la) if charge.residue(A) == i]
    marked += [("-", A) for A in removable_nodes(la) if charge.residue(A) == i]
    # adjacent columns never fold to the same residue, so rows are distinct
    marked.sort(key=lambda s: s[1][0])
    return marked


def reduce_signature(sig: Signature) -> Signature:
    """Cancel adjacent (-, +) pairs until every + precedes every -."""
    stack: Signature = []
    for s in sig:
        if s[0] == "+" and stack and stack[-1][0] == "-":
            stack.pop()
        else:
            stack.append(s)
    return stack


def reduced_signature(charge: Charge, la: Partition, i: int) -> Signature:
    return reduce_signature(signature(charge, la, i))


def good_node(charge: Charge, la: Partition, i: int) -> Optional[Node]:
    minus = [A for s, A in reduced_signature(charge, la, i) if s == "-"]
    return minus[0] if minus else None


def cogood_node(charge: Charge, la: Partition, i: int) -> Optional[Node]:
    plus = [A for s, A in reduced_signature(charge, la, i) if s == "+"]
    return plus[-1] if plus else None


def e_tilde(charge: Charge, la: Partition, i: int) -> Optional[Partition]:
    A = good_node(charge, la, i)
    return None if A is None else remove_node(la, A)


def f_tilde(charge: Charge, la: Partition, i: int) -> Optional[Partition]:
    A = cogood_node(charge, la, i)
    return None if A is None else add_node(la, A)


@lru_cache(maxsize=1 << 16)
def is_kleshchev(charge: Charge, la: Partition) -> bool:
    """Whether ``la`` lies in the crystal component of the empty partition.

    Crystal operators never leave a connected component, so following any
    defined ``e_tilde`` decides membership.
    """
    if not la:
        return True
    for i in range(charge.ell + 1):
        up = e_tilde(charge, la, i)
        if up is not None:
            return is_kleshchev(charge, up)
    return False


@dataclass
class CrystalGraph:
    ell: int
    kappa: int
    n_max: int
    vertices: list[Partition] = field(default_factory=list)
    edges: list[tuple[Partition, int, Partition]] = field(default_factory=list)

    def rank(self, n: int) -> list[Partition]:
        return [v for v in self.vertices if sum(v) == n]

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        ids = {v: f"v{n}" for n, v in enumerate(self.vertices)}
        for v in self.vertices:
            lines.append(f'  {ids[v]} [label="{partition_label(v)}"];')
        for src, i, dst in self.edges:
            lines.append(f'  {ids[src]} -> {ids[dst]} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "ell": self.ell,
                "kappa": self.kappa,
                "n_max": self.n_max,
                "vertices": [list(v) for v in self.vertices],
                "edges": [
                    {"source": list(s), "colour": i, "target": list(t)}
                    for s, i, t in self.edges
                ],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "CrystalGraph":
        data = json.loads(text)
        return cls(
            ell=data["ell"],
            kappa=data["kappa"],
            n_max=data["n_max"],
            vertices=[tuple(v) for v in data["vertices"]],
            edges=[(tuple(e["source"]), e["colour"], tuple(e["target"])) for e in data["edges"]],
        )


def partition_label(la: Partition) -> str:
    return "(" + ",".join(map(str, la)) + ")"


def crystal(charge: Charge, n_max: int) -> CrystalGraph:
    """Breadth-first generation of the crystal of V(Lambda_k) up to size ``n_max``."""
    graph = CrystalGraph(charge.ell, charge.kappa, n_max, vertices=[()])
    seen = {()}
    queue = deque([()])
    while queue:
        la = queue.popleft()
        if sum(la) >= n_max:
            continue
        for i in range(charge.ell + 1):
            mu = f_tilde(charge, la, i)
            if mu is None:
                continue
            graph.edges.append((la, i, mu))
            if mu not in seen:
                seen.add(mu)
                graph.vertices.append(mu)
                queue.append(mu)
    return graph


# -- Fock module action -----------------------------------------------------

FockVector = dict[Partition, LaurentPoly]


def _accumulate(out: FockVector, la: Partition, poly: LaurentPoly) -> None:
    total = out.get(la, LaurentPoly.zero()) + poly
    if total:
        out[la] = total
    else:
        out.pop(la, None)


def f_act(charge: Charge, v: Mapping[Partition, LaurentPoly], i: int) -> FockVector:
    """``f_i la = sum over addable i-nodes A of q^(-d^A(la)) (la + A)``."""
    out: FockVector = {}
    for la, coeff in v.items():
        for A in addable_nodes(la):
            if charge.residue(A) == i:
                shift = -stat_above(charge, la, A)
                _accumulate(out, add_node(la, A), coeff * LaurentPoly.monomial(shift))
    return out


def e_act(charge: Charge, v: Mapping[Partition, LaurentPoly], i: int) -> FockVector:
    """``e_i la = sum over removable i-nodes A of q^(d_A(la)) (la - A)``."""
    out: FockVector = {}
    for la, coeff in v.items():
        for A in removable_nodes(la):
            if charge.residue(A) == i:
                shift = stat_below(charge, la, A)
                _accumulate(out, remove_node(la, A), coeff * LaurentPoly.monomial(shift))
    return out


def q_d_act(charge: Charge, v: Mapping[Partition, LaurentPoly]) -> FockVector:
    out: FockVector = {}
    for la, coeff in v.items():
        _accumulate(out, la, coeff * LaurentPoly.monomial(-n_zero(la, charge)))
    return out


def q_alpha_act(charge: Charge, v: Mapping[Partition, LaurentPoly], i: int) -> FockVector:
    out: FockVector = {}
    for la, coeff in v.items():
        _accumulate(out, la, coeff * LaurentPoly.monomial(stat_di(charge, la, i)))
    return out
