"""Idempotent families and reference graded dimensions for regression runs.

Each selector recomputes a reference dimension table from the tableau
formula and compares it with the hard-coded reference values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .blocks import defect1_sequences, maximal_beta, wildness_witness
from .cartan import CartanDatum, cartan, scale
from .partitions import Charge
from .qdim import LaurentPoly, graded_dim

P = LaurentPoly.parse


@dataclass(frozen=True)
class Check:
    selector: str
    label: str
    expected: str
    actual: str

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        detail = self.actual if self.ok else f"expected {self.expected}, got {self.actual}"
        return f"{status} {self.selector} {self.label}: {detail}"


def seq_str(nu) -> str:
    return "".join(map(str, nu)) if max(nu, default=0) < 10 else ",".join(map(str, nu))


def _down_up(top: int, end: int) -> tuple[int, ...]:
    """``top, top-1, ..., 0, 1, ..., end``."""
    return tuple(range(top, -1, -1)) + tuple(range(1, end + 1))


def _block4(i: int) -> tuple[int, ...]:
    return (i, i - 1, i - 2, i - 3)


TAME_SEQUENCES = [(1, 2, 1, 0), (1, 2, 0, 1), (1, 0, 2, 1), (1, 0, 1, 2)]
TAME_TABLE = [
    ["1+q^4", "q^2", "q^2", "0"],
    ["q^2", "1+q^2+q^4", "1+q^2+q^4", "q^2"],
    ["q^2", "1+q^2+q^4", "1+q^2+q^4", "q^2"],
    ["0", "q^2", "q^2", "1+q^4"],
]

TWODELTA_PAIR = ((1, 0, 1, 2, 1, 0, 1, 2), (1, 2, 0, 1, 2, 1, 0, 1))
TWODELTA_TABLE = [
    ["1+2q^2+2q^4+2q^6+q^8", "q^2+2q^4+q^6"],
    ["q^2+2q^4+q^6", "1+2q^2+3q^4+2q^6+q^8"],
]


def onedelta_pair(ell: int, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two idempotents used for ``R^{Lambda_k}(delta)``, ``1 <= k <= l/2``."""
    if ell == 3 and k == 1:
        return (1, 2, 3, 2, 0, 1), (1, 0, 1, 2, 3, 2)
    climb = tuple(range(k, ell + 1))
    e1 = climb + tuple(range(ell - 1, k, -1)) + (k - 1, k) + _tail(k - 2, k - 1)
    e2 = climb + tuple(range(ell - 1, k + 1, -1)) + _down_up(k - 1, k + 1)
    return e1, e2


def _tail(top: int, end: int) -> tuple[int, ...]:
    return _down_up(top, end) if top >= 0 else ()


def onedelta_c(ell: int, i: int) -> int:
    return 1 if (ell == 3 and i == 1) else 2


def xik4_pair(ell: int, k: int, sign: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two idempotents used for ``R^{Lambda_k}(2 delta - xi_k^{+-4})``."""
    if sign == "+":
        e1 = _down_up(k, k + 3) + (k + 1, k + 2) + _down_up(k, k + 1)
        e2 = (k, k + 1, k + 2, k + 3) + _down_up(k - 1, k + 2) + (k, k + 1) + _down_up(k - 1, k)
        return e1, e2
    e1 = sum((_block4(j) for j in range(k, ell + 1)), ()) + (ell - 1, ell - 2, ell, ell - 1)
    span = ell - k
    e2 = sum((_block4(j) for j in range(k, k + span - 1)), ()) + (
        ell - 1, ell, ell - 1, ell - 2, ell - 3, ell - 4,
        ell - 2, ell - 3, ell - 1, ell, ell - 1, ell - 2,
    )
    return e1, e2


def _matrix_checks(selector, label, charge, beta, seqs, expected) -> list[Check]:
    out = []
    for a, nu in enumerate(seqs):
        for b, nu2 in enumerate(seqs):
            actual = str(graded_dim(charge, beta, nu, nu2))
            out.append(
                Check(selector, f"{label} e({seq_str(nu)}),e({seq_str(nu2)})", str(P(expected[a][b])), actual)
            )
    return out


def tame_table() -> list[Check]:
    datum = cartan(2)
    return _matrix_checks(
        "tame-table", "l=2 k=1 delta", Charge(1, 2), datum.delta(), TAME_SEQUENCES, TAME_TABLE
    )


ONEDELTA_CASES = [(ell, k) for ell in range(3, 9) for k in range(1, ell // 2 + 1)]


def onedelta() -> list[Check]:
    out = []
    for ell, k in ONEDELTA_CASES:
        e1, e2 = onedelta_pair(ell, k)
        expected = [
            [f"1+{onedelta_c(ell, 1)}q^2+q^4", "q^2"],
            ["q^2", f"1+{onedelta_c(ell, 2)}q^2+q^4"],
        ]
        out += _matrix_checks(
            "onedelta", f"l={ell} k={k}", Charge(k, ell), cartan(ell).delta(), (e1, e2), expected
        )
    return out


XIK2_CASES = [(3, 1), (4, 1), (4, 2), (5, 2)]


def xik2() -> list[Check]:
    out = []
    for ell, k in XIK2_CASES:
        datum = cartan(ell)
        for sign in "+-":
            if not 0 <= (k + 2 if sign == "+" else k - 2) <= ell:
                continue
            seqs = defect1_sequences(datum, k, sign)
            n = len(seqs)
            expected = [
                ["1+q^2" if a == b else "q" if abs(a - b) == 1 else "0" for b in range(n)]
                for a in range(n)
            ]
            beta = maximal_beta(datum, k, sign, 2, 1)
            out += _matrix_checks("xik2", f"l={ell} k={k} {sign}", Charge(k, ell), beta, seqs, expected)
    return out


XIK4_CASES = [
    (ell, k, sign)
    for ell in range(5, 10)
    for k in range(1, ell // 2 + 1)
    for sign in "+-"
    if 0 <= (k + 4 if sign == "+" else k - 4) <= ell
]


def xik4() -> list[Check]:
    out = []
    expected = [["1+2q^2+q^4", "q^2"], ["q^2", "1+2q^2+q^4"]]
    for ell, k, sign in XIK4_CASES:
        datum = cartan(ell)
        beta = maximal_beta(datum, k, sign, 4, 2)
        out += _matrix_checks(
            "xik4", f"l={ell} k={k} {sign}", Charge(k, ell), beta, xik4_pair(ell, k, sign), expected
        )
    return out


def twodelta() -> list[Check]:
    datum = cartan(2)
    return _matrix_checks(
        "twodelta", "l=2 k=1 2delta", Charge(1, 2), scale(2, datum.delta()), TWODELTA_PAIR, TWODELTA_TABLE
    )


def witnesses() -> list[Check]:
    """Two-idempotent hypothesis on each reference wild pair."""
    cases: list[tuple[str, CartanDatum, int, tuple, tuple]] = []
    for ell, k in ONEDELTA_CASES:
        datum = cartan(ell)
        cases.append((f"onedelta l={ell} k={k}", datum, k, datum.delta(), onedelta_pair(ell, k)))
    for ell, k, sign in XIK4_CASES:
        datum = cartan(ell)
        cases.append(
            (f"xik4 l={ell} k={k} {sign}", datum, k, maximal_beta(datum, k, sign, 4, 2), xik4_pair(ell, k, sign))
        )
    datum = cartan(2)
    cases.append(("twodelta l=2 k=1", datum, 1, scale(2, datum.delta()), TWODELTA_PAIR))
    out = []
    for label, datum, k, beta, (e1, e2) in cases:
        report = wildness_witness(datum, k, beta, e1, e2)
        actual = "certified" if report.wild_certificate else f"not certified c={report.c}"
        out.append(Check("witness", label, "certified", actual))
    return out


SELECTORS: dict[str, Callable[[], list[Check]]] = {
    "tame-table": tame_table,
    "onedelta": onedelta,
    "xik2": xik2,
    "xik4": xik4,
    "twodelta": twodelta,
    "witness": witnesses,
}


def run(selector: str) -> list[Check]:
    if selector not in SELECTORS:
        raise KeyError(selector)
    return SELECTORS[selector]()
