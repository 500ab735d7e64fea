"""Laurent polynomials and graded dimensions of cyclotomic KLR algebras.

Graded dimensions come from the tableau formula: the idempotent truncation
``e(nu) R(beta) e(nu')`` has graded dimension
``sum_la K_q(la, nu) K_q(la, nu')`` over partitions ``la`` of content beta,
where ``K_q(la, nu)`` counts standard ``la``-tableaux with residue sequence
``nu`` weighted by ``q^deg``.
"""

from __future__ import annotations

import re
from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .partitions import (
    Charge,
    Partition,
    add_node,
    addable_nodes,
    partitions_by_content,
    partitions_of_content,
    remove_node,
    removable_nodes,
    stat_below,
)

ResidueSeq = tuple[int, ...]


class LaurentPoly:
    """Sparse integer Laurent polynomial in ``q``.

    Stored as ``{exponent: coefficient}`` with zero coefficients dropped.
    Instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = {int(e): int(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def min_degree(self) -> int | None:
        return min(self._terms) if self._terms else None

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        terms = defaultdict(int, self._terms)
        for e, c in other._terms.items():
            terms[e] += c
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "LaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        terms: dict[int, int] = defaultdict(int)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                terms[e1 + e2] += c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q^k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def __call__(self, q):
        return sum(c * q**e for e, c in self._terms.items())

    def at_one(self) -> int:
        return sum(self._terms.values())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for e in sorted(self._terms):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            out += (sign if out or sign == "-" else "") + body
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    _TERM = re.compile(r"([+-]?)(\d*)(q(?:\^(-?\d+))?)?")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``: ``"1+2q^2+q^4"``, ``"q^-1"``, ``"0"``."""
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls()
        terms: dict[int, int] = defaultdict(int)
        pos = 0
        while pos < len(text):
            m = cls._TERM.match(text, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            mag = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                exp = int(m.group(4)) if m.group(4) is not None else 1
            else:
                exp = 0
            terms[exp] += sign * mag
            pos = m.end()
        return cls(terms)


def _coerce(x: "LaurentPoly | int") -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")


def poly_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    terms: dict[int, int] = defaultdict(int)
    for p in polys:
        for e, c in p._terms.items():
            terms[e] += c
    return LaurentPoly(terms)


# -- K_q statistics ---------------------------------------------------------


@lru_cache(maxsize=1 << 14)
def kq_table(charge: Charge, la: Partition) -> dict[ResidueSeq, LaurentPoly]:
    """``{nu: K_q(la, nu)}`` over all residue sequences occurring in ``la``.

    Built recursively on the position of the largest entry, adding
    ``d_A(la)`` for the corner ``A`` that holds it; every standard tableau
    is counted once.  The returned dict is shared by the cache; don't mutate.
    """
    if not la:
        return {(): LaurentPoly.one()}
    acc: dict[ResidueSeq, dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for A in removable_nodes(la):
        i = charge.residue(A)
        d = stat_below(charge, la, A)
        for nu, poly in kq_table(charge, remove_node(la, A)).items():
            bucket = acc[nu + (i,)]
            for e, c in poly._terms.items():
                bucket[e + d] += c
    return {nu: LaurentPoly(t) for nu, t in acc.items()}


def kq(charge: Charge, la: Partition, nu: Sequence[int]) -> LaurentPoly:
    """``K_q(la, nu)``, following ``nu`` through the diagram of ``la``."""
    return kq_along(charge, nu).get(tuple(la), LaurentPoly.zero())


def kq_total(charge: Charge, la: Partition) -> LaurentPoly:
    return poly_sum(kq_table(charge, la).values())


def kq_along(charge: Charge, nu: Sequence[int]) -> dict[Partition, LaurentPoly]:
    """``{la: K_q(la, nu)}`` for every shape reachable along ``nu``.

    Adds one node of the prescribed residue at each step, carrying the
    degree generating function of the partial tableaux.  This touches only
    the tableaux with residue sequence ``nu``, so it scales to long
    sequences where enumerating whole blocks would not.
    """
    states: dict[Partition, dict[int, int]] = {(): {0: 1}}
    for i in nu:
        nxt: dict[Partition, dict[int, int]] = defaultdict(lambda: defaultdict(int))
        for la, poly in states.items():
            for A in addable_nodes(la):
                if charge.residue(A) != i:
                    continue
                mu = add_node(la, A)
                d = stat_below(charge, mu, A)
                bucket = nxt[mu]
                for e, c in poly.items():
                    bucket[e + d] += c
        states = nxt
        if not states:
            break
    return {la: LaurentPoly(t) for la, t in states.items() if t}


def residue_content(ell: int, nu: Sequence[int]) -> tuple[int, ...]:
    coeffs = [0] * (ell + 1)
    for i in nu:
        if not 0 <= i <= ell:
            raise ValueError(f"residue {i} out of range 0..{ell}")
        coeffs[i] += 1
    return tuple(coeffs)


def graded_dim(charge: Charge, beta: Sequence[int], nu: Sequence[int], nu2: Sequence[int]) -> LaurentPoly:
    """Graded dimension of ``e(nu) R^{Lambda_k}(beta) e(nu2)``."""
    beta = tuple(beta)
    for seq in (nu, nu2):
        if residue_content(charge.ell, seq) != beta:
            raise ValueError(f"sequence {tuple(seq)} is not in I^beta for beta={beta}")
    left = kq_along(charge, nu)
    right = left if tuple(nu) == tuple(nu2) else kq_along(charge, nu2)
    return poly_sum(p * right[la] for la, p in left.items() if la in right)


def block_sequences(charge: Charge, beta: Sequence[int]) -> list[ResidueSeq]:
    """Residue sequences ``nu`` in I^beta with ``e(nu) != 0``, sorted."""
    seqs: set[ResidueSeq] = set()
    for la in partitions_of_content(charge, beta):
        seqs.update(kq_table(charge, la))
    return sorted(seqs)


def dims_table(charge: Charge, beta: Sequence[int]) -> tuple[list[ResidueSeq], list[list[LaurentPoly]]]:
    """All pairwise graded dimensions over the nonzero idempotents of the block."""
    las = partitions_of_content(charge, beta)
    tables = [kq_table(charge, la) for la in las]
    seqs = sorted({nu for t in tables for nu in t})
    matrix = [
        [poly_sum(t[a] * t[b] for t in tables if a in t and b in t) for b in seqs]
        for a in seqs
    ]
    return seqs, matrix


def graded_dim_block(charge: Charge, beta: Sequence[int]) -> LaurentPoly:
    """``dim_q R^{Lambda_k}(beta) = sum of K_q(la)^2`` over the block."""
    return poly_sum(kq_total(charge, la) * kq_total(charge, la) for la in partitions_of_content(charge, beta))


def is_nonzero_block(charge: Charge, beta: Sequence[int]) -> bool:
    return bool(partitions_of_content(charge, beta))


def level_dims(charge: Charge, n: int) -> dict[tuple[int, ...], LaurentPoly]:
    """Graded dimension of every nonzero block of ``R^{Lambda_k}_n``."""
    return {
        beta: poly_sum(kq_total(charge, la) * kq_total(charge, la) for la in las)
        for beta, las in partitions_by_content(charge, n).items()
    }
