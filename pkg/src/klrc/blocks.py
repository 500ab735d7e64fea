"""Block decomposition, representation type, and defect-one block data.

A block ``R^{Lambda_k}(beta)`` is nonzero exactly when ``Lambda_k - beta`` is
a weight of V(Lambda_k).  Every such weight is a Weyl translate of
``Lambda_k + xi_k^{+-i} - m delta`` for a unique even ``i`` and ``m >= i/2``;
the representation type depends only on ``(i, m, l)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .cartan import (
    CartanDatum,
    NotAWeightError,
    RootVector,
    Weight,
    WeylWord,
    add,
    is_positive,
    scale,
    sub,
)
from .fock import is_kleshchev
from .partitions import Charge, Partition, initial_tableau, partitions_of_content, residue_sequence
from .qdim import LaurentPoly, graded_dim, kq_along

ZERO, SIMPLE, FINITE, TAME, WILD = "zero", "simple", "finite", "tame", "wild"


@dataclass(frozen=True)
class Decomposition:
    """``Lambda_k - beta = act(word, Lambda_k + xi_k^{sign i} - m delta)``."""

    word: WeylWord
    sign: str
    i: int
    m: int

    @property
    def defect(self) -> int:
        return 2 * self.m - self.i // 2

    def as_dict(self) -> dict:
        return {"sign": self.sign, "i": self.i, "m": self.m, "word": list(self.word)}


@dataclass(frozen=True)
class RepType:
    kind: str
    num_simples: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == FINITE:
            return f"finite({self.num_simples} simples)"
        return self.kind


def maximal_beta(datum: CartanDatum, k: int, sign: str, i: int, m: int) -> RootVector:
    """``m delta - xi_k^{sign i}``, the root attached to a dominant representative."""
    return sub(scale(m, datum.delta()), datum.xi(k, sign, i))


def decompose(datum: CartanDatum, k: int, beta: Sequence[int]) -> Optional[Decomposition]:
    """Locate ``Lambda_k - beta`` in its Weyl orbit of maximal weights.

    Dominantizes, reads ``k +- i`` off the single nonzero pairing of the
    dominant weight, and recovers ``m`` from the remaining multiple of
    delta.  Returns ``None`` when ``Lambda_k - beta`` is not a weight.
    """
    beta = tuple(beta)
    if len(beta) != datum.ell + 1:
        raise ValueError(f"beta needs {datum.ell + 1} coefficients, got {len(beta)}")
    if not is_positive(beta):
        return None
    try:
        dom, walk = datum.dominantize(Weight(k, beta))
    except NotAWeightError:
        return None
    # dominant level-one weights pair to 1 with exactly one coroot
    top = [j for j, p in enumerate(datum.pairings(dom)) if p]
    assert len(top) == 1 and datum.pairing(top[0], dom) == 1, dom
    target = top[0]
    i = abs(target - k)
    if i % 2:
        return None
    sign = "+" if target >= k else "-"
    shifted = add(dom.beta, datum.xi(k, sign, i))
    m = shifted[0]
    if shifted != scale(m, datum.delta()) or 2 * m < i:
        return None
    return Decomposition(tuple(reversed(walk)), sign, i, m)


def reconstruct(datum: CartanDatum, k: int, dec: Decomposition) -> RootVector:
    """Inverse of :func:`decompose`."""
    eta = Weight(k, maximal_beta(datum, k, dec.sign, dec.i, dec.m))
    return datum.act(dec.word, eta).beta


def classify(datum: CartanDatum, k: int, beta: Sequence[int]) -> RepType:
    dec = decompose(datum, k, beta)
    if dec is None:
        return RepType(ZERO)
    return rep_type_of(datum, k, dec)


def rep_type_of(datum: CartanDatum, k: int, dec: Decomposition) -> RepType:
    i, m = dec.i, dec.m
    if i == 0 and m == 0:
        return RepType(SIMPLE)
    if i == 2 and m == 1:
        simples = k + 1 if dec.sign == "+" else datum.ell - k + 1
        return RepType(FINITE, simples)
    if i == 0 and m == 1 and datum.ell == 2:
        return RepType(TAME)
    return RepType(WILD)


def classify_record(datum: CartanDatum, k: int, beta: Sequence[int]) -> dict:
    """JSON-ready classification record."""
    beta = tuple(beta)
    dec = decompose(datum, k, beta)
    rt = RepType(ZERO) if dec is None else rep_type_of(datum, k, dec)
    record = {
        "ell": datum.ell,
        "k": k,
        "beta": list(beta),
        "nonzero": dec is not None,
        "defect": datum.defect(k, beta),
        "decomposition": None if dec is None else dec.as_dict(),
        "rep_type": rt.kind,
    }
    if rt.num_simples is not None:
        record["num_simples"] = rt.num_simples
    return record


def weyl_twist(datum: CartanDatum, k: int, word: Sequence[int], beta: Sequence[int]) -> RootVector:
    """The root ``beta'`` with ``Lambda_k - beta' = w(Lambda_k - beta)``."""
    return datum.act(word, Weight(k, tuple(beta))).beta


def dynkin_flip(datum: CartanDatum, beta: Sequence[int]) -> RootVector:
    return datum.flip(beta)


def flip_k(datum: CartanDatum, k: int) -> int:
    return datum.flip_k(k)


# -- defect one ---------------------------------------------------------------


def defect1_sequences(datum: CartanDatum, k: int, sign: str) -> list[tuple[int, ...]]:
    """Residue sequences of the primitive idempotents of ``R(delta - xi_k^{+-2})``.

    For ``+`` these are ``nu(0..k)``: a pair ``(k-j, k-j+1)`` for each of the
    first ``i`` rows, then a column descending to 0 and climbing back.  For
    ``-`` they are ``upsilon(0..l-k)``: a first row climbing to ``l`` and
    folding back ``i`` steps, then a second row from ``k-1``.
    """
    ell = datum.ell
    datum.xi(k, sign, 2)
    seqs = []
    if sign == "+":
        for i in range(k + 1):
            s: list[int] = []
            for j in range(i):
                s += [k - j, k - j + 1]
            s += list(range(k - i, -1, -1)) + list(range(1, k - i + 2))
            seqs.append(tuple(s))
    else:
        for i in range(ell - k + 1):
            s = list(range(k, ell + 1)) + list(range(ell - 1, ell - i - 1, -1))
            s += list(range(k - 1, ell - i))
            seqs.append(tuple(s))
    return seqs


def defect1_partitions(datum: CartanDatum, k: int, sign: str) -> list[Partition]:
    """Partitions of the block, ordered so the decomposition matrix is lower bidiagonal.

    ``+``: ``(2^{k-i+1}, 1^{2i})`` for ``i = k+1, ..., 0``.
    ``-``: ``(l-k+i+1, l-k-i+1)`` for ``i = 0, ..., l-k+1``.
    The last partition is the non-Kleshchev one.
    """
    ell = datum.ell
    if sign == "+":
        return [(2,) * (k - i + 1) + (1,) * (2 * i) for i in range(k + 1, -1, -1)]
    out = []
    for i in range(ell - k + 2):
        parts = (ell - k + i + 1, ell - k - i + 1)
        out.append(tuple(p for p in parts if p))
    return out


@dataclass
class BrauerLineData:
    ell: int
    k: int
    sign: str
    num_simples: int
    beta: RootVector
    partitions: list[Partition]
    kleshchev: list[bool]
    sequences: list[tuple[int, ...]]
    dims: list[list[LaurentPoly]]
    radical_series: list[tuple[int, tuple[int, ...], int]]
    decomposition_matrix: list[list[LaurentPoly]]
    defect: int
    notes: list[str] = field(default_factory=list)

    def radical_series_text(self) -> list[str]:
        out = []
        for top, middle, socle in self.radical_series:
            mid = " + ".join(f"S{j}" for j in middle) or "0"
            out.append(f"P{top} = S{top} / {mid} / S{socle}")
        return out


def defect1_profile(datum: CartanDatum, k: int, sign: str) -> BrauerLineData:
    """Numerical profile of ``R^{Lambda_k}(delta - xi_k^{+-2})``.

    Radical layers are read from the degree-one part of the Cartan matrix,
    and the graded decomposition matrix from ``K_q(la, nu(j))``, with the
    idempotent ``e(nu(j))`` standing for the projective cover of the
    ``j``-th simple.
    """
    beta = maximal_beta(datum, k, sign, 2, 1)
    charge = Charge(k, datum.ell)
    seqs = defect1_sequences(datum, k, sign)
    parts = defect1_partitions(datum, k, sign)
    if sorted(parts) != sorted(partitions_of_content(charge, beta)):
        raise AssertionError(f"block partitions differ from content search for {beta}")
    dims = [[graded_dim(charge, beta, a, b) for b in seqs] for a in seqs]
    radical = []
    for j, row in enumerate(dims):
        middle = tuple(x for x, p in enumerate(row) if x != j and p.coeff(1) > 0)
        radical.append((j, middle, j))
    columns = [kq_along(charge, s) for s in seqs]
    zero = LaurentPoly.zero()
    decomp = [[col.get(la, zero) for col in columns] for la in parts]
    notes = []
    for j, s in enumerate(seqs):
        if residue_sequence(charge, initial_tableau(parts[j])) != s:
            notes.append(f"sequence {j} is not the initial-tableau sequence of {parts[j]}")
    return BrauerLineData(
        ell=datum.ell,
        k=k,
        sign=sign,
        num_simples=len(seqs),
        beta=beta,
        partitions=parts,
        kleshchev=[is_kleshchev(charge, la) for la in parts],
        sequences=seqs,
        dims=dims,
        radical_series=radical,
        decomposition_matrix=decomp,
        defect=datum.defect(k, beta),
        notes=notes,
    )


# -- two-idempotent wildness test ---------------------------------------------


@dataclass
class WitnessReport:
    c: list[list[int]]
    dims: list[list[LaurentPoly]]
    remainders: list[list[LaurentPoly]]
    hypothesis_ok: bool
    criteria: dict[str, bool]

    @property
    def wild_certificate(self) -> bool:
        return all(self.criteria.values())

    def as_dict(self) -> dict:
        return {
            "c": self.c,
            "dims": [[str(p) for p in row] for row in self.dims],
            "remainders": [[str(p) for p in row] for row in self.remainders],
            "hypothesis_ok": self.hypothesis_ok,
            "criteria": self.criteria,
            "wild_certificate": self.wild_certificate,
        }


def wildness_witness(
    datum: CartanDatum, k: int, beta: Sequence[int], nu1: Sequence[int], nu2: Sequence[int]
) -> WitnessReport:
    """Check the two-idempotent hypothesis for ``e(nu1) + e(nu2)``.

    The hypothesis asks that ``dim_q e_a R e_b - [a == b] - c_ab q^2`` lie in
    ``q^3 Z>=0[q]``.  When it holds, the quiver of ``eRe`` has two vertices
    with ``c_aa`` loops and at least ``c_ab`` arrows ``a -> b``.  Wildness
    is certified when, in addition, both vertices carry a loop and arrows
    run both ways.
    """
    nu1, nu2 = tuple(nu1), tuple(nu2)
    if nu1 == nu2:
        raise ValueError("the two idempotents must differ")
    charge = Charge(k, datum.ell)
    seqs = (nu1, nu2)
    dims = [[graded_dim(charge, beta, a, b) for b in seqs] for a in seqs]
    c = [[p.coeff(2) for p in row] for row in dims]
    rems = [
        [dims[a][b] - (1 if a == b else 0) - LaurentPoly.monomial(2, c[a][b]) for b in range(2)]
        for a in range(2)
    ]
    ok = all(e >= 3 and coef > 0 for row in rems for p in row for e, coef in p.terms.items())
    criteria = {
        "hypothesis": ok,
        "loops_at_both_vertices": c[0][0] >= 1 and c[1][1] >= 1,
        "arrows_both_ways": c[0][1] >= 1 and c[1][0] >= 1,
    }
    return WitnessReport(c=c, dims=dims, remainders=rems, hypothesis_ok=ok, criteria=criteria)
