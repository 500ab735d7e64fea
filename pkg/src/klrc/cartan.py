"""Affine Cartan datum of type C_l^(1) and level-one weight arithmetic.

Root-lattice elements are plain tuples of ``l + 1`` integers, the entry at
index ``i`` being the coefficient of the simple root ``alpha_i``.  A level-one
weight ``Lambda_k - beta`` is a :class:`Weight`.  Words in the simple
reflections are tuples of node indices and act right-to-left, so
``act((a, b), w) == reflect(a, reflect(b, w))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

RootVector = tuple[int, ...]
WeylWord = tuple[int, ...]


class NotAWeightError(ValueError):
    """Raised when a dominance walk does not terminate inside Q^+."""


@dataclass(frozen=True)
class Weight:
    """The weight ``Lambda_k - beta``."""

    k: int
    beta: RootVector

    def __str__(self) -> str:
        return f"Lambda_{self.k} - {format_root(self.beta)}"


def format_root(beta: Sequence[int]) -> str:
    terms = [f"{c}*a{i}" if c != 1 else f"a{i}" for i, c in enumerate(beta) if c]
    return " + ".join(terms).replace("+ -", "- ") or "0"


def add(x: Sequence[int], y: Sequence[int]) -> RootVector:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence[int], y: Sequence[int]) -> RootVector:
    return tuple(a - b for a, b in zip(x, y))


def scale(m: int, x: Sequence[int]) -> RootVector:
    return tuple(m * a for a in x)


def height(beta: Sequence[int]) -> int:
    return sum(beta)


def is_positive(beta: Sequence[int]) -> bool:
    """True when ``beta`` lies in the positive cone Q^+."""
    return all(c >= 0 for c in beta)


@dataclass(frozen=True)
class CartanDatum:
    """Cartan matrix, symmetrizer and lattice operations for C_l^(1)."""

    ell: int

    def __post_init__(self) -> None:
        if self.ell < 2:
            raise ValueError(f"rank must be at least 2, got {self.ell}")

    @property
    def nodes(self) -> range:
        return range(self.ell + 1)

    @property
    def symmetrizer(self) -> RootVector:
        return (2,) + (1,) * (self.ell - 1) + (2,)

    def d(self, i: int) -> int:
        return 2 if i in (0, self.ell) else 1

    def a(self, i: int, j: int) -> int:
        """Cartan matrix entry ``a_ij``."""
        ell = self.ell
        if i == j:
            return 2
        if abs(i - j) != 1:
            return 0
        # the double bonds sit at 1 -> 0 and l-1 -> l
        if (i, j) == (1, 0) or (i, j) == (ell - 1, ell):
            return -2
        return -1

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.a(i, j) for j in self.nodes) for i in self.nodes)

    def zero(self) -> RootVector:
        return (0,) * (self.ell + 1)

    def simple_root(self, i: int) -> RootVector:
        self._check_node(i)
        return tuple(1 if j == i else 0 for j in self.nodes)

    def delta(self) -> RootVector:
        """The null root ``alpha_0 + 2 alpha_1 + ... + 2 alpha_{l-1} + alpha_l``."""
        return (1,) + (2,) * (self.ell - 1) + (1,)

    def xi(self, k: int, sign: str, i: int) -> RootVector:
        """The root-lattice element ``xi_k^{+i}`` or ``xi_k^{-i}``.

        Coefficients rise by one per step away from ``k`` until they reach
        ``i``, plateau, and end with ``i/2`` on the far extremal node.  Only
        even ``i`` are accepted, which keeps every coefficient integral.
        """
        self._check_node(k)
        if sign not in ("+", "-"):
            raise ValueError(f"sign must be '+' or '-', got {sign!r}")
        if i < 0 or i % 2:
            raise ValueError(f"i must be an even non-negative integer, got {i}")
        target = k + i if sign == "+" else k - i
        if target not in self.nodes:
            raise ValueError(f"k{sign}i = {target} is not a node of C_{self.ell}^(1)")
        coeffs = [0] * (self.ell + 1)
        if i == 0:
            return tuple(coeffs)
        if sign == "+":
            for j in range(k + 1, self.ell):
                coeffs[j] = min(j - k, i)
            coeffs[self.ell] = i // 2
        else:
            for j in range(1, k):
                coeffs[j] = min(k - j, i)
            coeffs[0] = i // 2
        return tuple(coeffs)

    def root_pairing(self, j: int, beta: Sequence[int]) -> int:
        """``<alpha_j^vee, beta>`` for a root-lattice element."""
        return sum(self.a(j, i) * b for i, b in enumerate(beta) if b)

    def pairing(self, j: int, w: Weight) -> int:
        """``<alpha_j^vee, Lambda_k - beta>``."""
        return (1 if j == w.k else 0) - self.root_pairing(j, w.beta)

    def pairings(self, w: Weight) -> RootVector:
        return tuple(self.pairing(j, w) for j in self.nodes)

    def bilinear(self, x: Sequence[int] | int, y: Sequence[int] | int) -> int:
        """The invariant form ``(x, y)``.

        An ``int`` argument stands for the fundamental weight ``Lambda_x``;
        sequences are root-lattice elements.  Pairing two fundamental weights
        is outside the level-one model and raises ``TypeError``.
        """
        if isinstance(x, int) and isinstance(y, int):
            raise TypeError("(Lambda_i, Lambda_j) is not modelled")
        if isinstance(x, int):
            x, y = y, x
        if isinstance(y, int):
            self._check_node(y)
            return self.d(y) * x[y]
        return sum(
            xi * self.d(i) * self.a(i, j) * yj
            for i, xi in enumerate(x)
            if xi
            for j, yj in enumerate(y)
            if yj
        )

    def defect(self, k: int, beta: Sequence[int]) -> int:
        """``(Lambda_k, beta) - (beta, beta)/2``; the quadratic term is always even."""
        quad = self.bilinear(beta, beta)
        assert quad % 2 == 0
        return self.bilinear(beta, k) - quad // 2

    def reflect(self, j: int, w: Weight) -> Weight:
        p = self.pairing(j, w)
        if p == 0:
            return w
        beta = list(w.beta)
        beta[j] += p
        return Weight(w.k, tuple(beta))

    def act(self, word: Iterable[int], w: Weight) -> Weight:
        for j in reversed(tuple(word)):
            w = self.reflect(j, w)
        return w

    def is_dominant(self, w: Weight) -> bool:
        return all(self.pairing(j, w) >= 0 for j in self.nodes)

    def dominantize(self, w: Weight) -> tuple[Weight, WeylWord]:
        """Walk ``w`` into the dominant chamber.

        Repeatedly reflects in the smallest node with negative pairing.
        Returns ``(mu, word)`` with ``mu == act(word, w)``.  For a weight of
        V(Lambda_k) every step strictly lowers the height of ``beta`` while
        keeping it in Q^+; leaving Q^+ or exceeding the step cap raises
        :class:`NotAWeightError`.
        """
        cap = 10 * self.ell * (height(w.beta) + 1)
        applied: list[int] = []
        cur = w
        while True:
            neg = next((j for j in self.nodes if self.pairing(j, cur) < 0), None)
            if neg is None:
                return cur, tuple(reversed(applied))
            if len(applied) >= cap:
                raise NotAWeightError(f"{w} did not dominantize within {cap} steps")
            cur = self.reflect(neg, cur)
            applied.append(neg)
            if not is_positive(cur.beta):
                raise NotAWeightError(f"{w} is not a weight of V(Lambda_{w.k})")

    def flip(self, beta: Sequence[int]) -> RootVector:
        """Dynkin automorphism ``i -> l - i`` on root-lattice coefficients."""
        return tuple(reversed(tuple(beta)))

    def flip_k(self, k: int) -> int:
        return self.ell - k

    def _check_node(self, i: int) -> None:
        if not 0 <= i <= self.ell:
            raise ValueError(f"node {i} out of range 0..{self.ell}")


@lru_cache(maxsize=None)
def cartan(ell: int) -> CartanDatum:
    return CartanDatum(ell)
