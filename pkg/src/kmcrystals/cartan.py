"""Symmetrizable Cartan matrices with exact root and weight arithmetic.

Conventions, used consistently across the package:

* the generalized Cartan matrix entry ``a[i][j]`` is the pairing of the
  i-th simple coroot with the j-th simple root;
* indices are 1-based everywhere in the public API;
* a word ``(i_1, ..., i_l)`` denotes the product of simple reflections
  ``s_{i_1} ... s_{i_l}``, so when a word acts on a vector the LAST letter
  is applied first;
* all arithmetic is exact; Python integers never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

from .errors import NotReducedError

Word = tuple[int, ...]

PRESETS: dict[str, tuple[tuple[int, ...], ...]] = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "G2": ((2, -3), (-1, 2)),
    "A1~": ((2, -2), (-2, 2)),
}


@dataclass(frozen=True)
class RootVector:
    """Element of the root lattice, coordinates in the simple-root basis."""

    coords: tuple[int, ...]

    @staticmethod
    def zero(rank: int) -> "RootVector":
        return RootVector((0,) * rank)

    @staticmethod
    def simple(rank: int, i: int) -> "RootVector":
        if not 1 <= i <= rank:
            raise ValueError(f"index {i} out of range 1..{rank}")
        return RootVector(tuple(1 if j == i - 1 else 0 for j in range(rank)))

    def __add__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-a for a in self.coords))

    def scale(self, m: int) -> "RootVector":
        return RootVector(tuple(m * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.coords)

    @property
    def height(self) -> int:
        return sum(self.coords)


@dataclass(frozen=True)
class Weight:
    """A weight written as (fixed dominant reference) + (root-lattice part).

    ``dominant`` lists the coroot pairings of the reference weight; ``root``
    is kept exactly in simple-root coordinates because in affine types the
    root lattice is not determined by coroot pairings alone.
    """

    dominant: tuple[int, ...]
    root: RootVector

    @staticmethod
    def from_dominant(coeffs) -> "Weight":
        coeffs = tuple(int(c) for c in coeffs)
        return Weight(coeffs, RootVector.zero(len(coeffs)))

    def add_root(self, beta: RootVector) -> "Weight":
        return Weight(self.dominant, self.root + beta)

    def is_dominant(self) -> bool:
        """True when this is a pure reference weight with nonnegative pairings."""
        return self.root.is_zero() and all(c >= 0 for c in self.dominant)


def _validate_gcm(gcm: tuple[tuple[int, ...], ...]) -> None:
    n = len(gcm)
    if n == 0:
        raise ValueError("empty Cartan matrix")
    for row in gcm:
        if len(row) != n:
            raise ValueError("Cartan matrix must be square")
        if any(not isinstance(a, int) for a in row):
            raise ValueError("Cartan matrix entries must be integers")
    for i in range(n):
        if gcm[i][i] != 2:
            raise ValueError(f"diagonal entry a[{i + 1}][{i + 1}] must be 2")
        for j in range(n):
            if i != j and gcm[i][j] > 0:
                raise ValueError(f"off-diagonal entry a[{i + 1}][{j + 1}] must be <= 0")
            if (gcm[i][j] == 0) != (gcm[j][i] == 0):
                raise ValueError(f"zero pattern not symmetric at ({i + 1},{j + 1})")


def _solve_symmetrizers(gcm: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Positive integers d with d_i a_ij = d_j a_ji, or ValueError.

    Propagates the ratio constraints over each connected component of the
    Dynkin graph and checks consistency, then clears denominators.
    """
    n = len(gcm)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or gcm[i][j] == 0:
                    continue
                forced = d[i] * Fraction(gcm[i][j], gcm[j][i])
                if d[j] is None:
                    d[j] = forced
                    stack.append(j)
                elif d[j] != forced:
                    raise ValueError("Cartan matrix is not symmetrizable")
    scale = lcm(*(f.denominator for f in d))
    ints = [int(f * scale) for f in d]
    g = gcd(*ints)
    return tuple(v // g for v in ints)


@dataclass(frozen=True)
class CartanData:
    """A symmetrizable generalized Cartan matrix and its derived machinery."""

    gcm: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        _validate_gcm(self.gcm)
        self.symmetrizers  # force the symmetrizability check at construction

    @staticmethod
    def from_gcm(rows) -> "CartanData":
        return CartanData(tuple(tuple(int(a) for a in row) for row in rows))

    @staticmethod
    def preset(name: str) -> "CartanData":
        if name not in PRESETS:
            raise ValueError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
        return CartanData(PRESETS[name])

    @property
    def rank(self) -> int:
        return len(self.gcm)

    def a(self, i: int, j: int) -> int:
        """Cartan matrix entry, 1-based."""
        return self.gcm[i - 1][j - 1]

    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise ValueError(f"index {i} out of range 1..{self.rank}")

    @cached_property
    def symmetrizers(self) -> tuple[int, ...]:
        return _solve_symmetrizers(self.gcm)

    # ------------------------------------------------------------------
    # pairings and reflections

    def pair_root(self, i: int, beta: RootVector) -> int:
        """Pairing of the i-th simple coroot with a root-lattice vector."""
        self.check_index(i)
        return sum(self.gcm[i - 1][j] * c for j, c in enumerate(beta.coords))

    def pairing(self, i: int, mu: Weight) -> int:
        """Pairing of the i-th simple coroot with a weight."""
        self.check_index(i)
        return mu.dominant[i - 1] + self.pair_root(i, mu.root)

    def reflect_root(self, i: int, beta: RootVector) -> RootVector:
        return beta - RootVector.simple(self.rank, i).scale(self.pair_root(i, beta))

    def reflect_weight(self, i: int, mu: Weight) -> Weight:
        return mu.add_root(RootVector.simple(self.rank, i).scale(-self.pairing(i, mu)))

    def act_on_root(self, word: Word, beta: RootVector) -> RootVector:
        """Apply the reflection product named by ``word`` (last letter first)."""
        for i in reversed(word):
            beta = self.reflect_root(i, beta)
        return beta

    def act_on_weight(self, word: Word, mu: Weight) -> Weight:
        for i in reversed(word):
            mu = self.reflect_weight(i, mu)
        return mu

    # ------------------------------------------------------------------
    # reduced words

    def _inversion_roots(self, word: Word) -> list[RootVector]:
        out = []
        for k in range(len(word)):
            beta = RootVector.simple(self.rank, word[k])
            out.append(self.act_on_root(word[:k], beta))
        return out

    def is_reduced(self, word) -> bool:
        """Reducedness via positivity of all inversion roots.

        Works uniformly for infinite Weyl groups; no length computation.
        """
        word = tuple(word)
        for i in word:
            self.check_index(i)
        return all(beta.is_nonnegative() for beta in self._inversion_roots(word))

    def inversion_roots(self, word) -> list[RootVector]:
        """The roots sent negative by the word; requires a reduced word."""
        word = tuple(word)
        for i in word:
            self.check_index(i)
        roots = self._inversion_roots(word)
        if not all(beta.is_nonnegative() for beta in roots):
            raise NotReducedError(f"word {word} is not reduced")
        return roots

    def d_sequence(self, word, lam: Weight) -> list[int]:
        """Coroot pairings of the reflected reference weight along the word.

        Entry k pairs the k-th letter's coroot with the image of ``lam``
        under the first k-1 reflections (applied in word order).
        """
        word = tuple(word)
        if not lam.is_dominant():
            raise ValueError("reference weight must be dominant")
        if not self.is_reduced(word):
            raise NotReducedError(f"word {word} is not reduced")
        out = []
        mu = lam
        for k, i in enumerate(word):
            if k > 0:
                mu = self.reflect_weight(word[k - 1], mu)
            out.append(self.pairing(i, mu))
        return out

    def reduced_words(self, max_len: int) -> list[Word]:
        """All reduced words up to the given length, in (length, lex) order.

        Includes the empty word. Enumerates by depth-one extension with a
        reducedness check, so it never materializes non-reduced prefixes.
        """
        words: list[Word] = [()]
        frontier: list[Word] = [()]
        for _ in range(max_len):
            nxt = []
            for w in frontier:
                for i in range(1, self.rank + 1):
                    cand = w + (i,)
                    if self.is_reduced(cand):
                        nxt.append(cand)
            frontier = nxt
            words.extend(nxt)
        return words

    # ------------------------------------------------------------------
    # finite-type machinery

    @cached_property
    def is_finite_type(self) -> bool:
        """Positive definiteness of the symmetrized matrix (Sylvester, exact)."""
        n = self.rank
        d = self.symmetrizers
        m = [[Fraction(d[i] * self.gcm[i][j]) for j in range(n)] for i in range(n)]
        for k in range(n):
            if m[k][k] <= 0:
                return False
            for r in range(k + 1, n):
                f = m[r][k] / m[k][k]
                for c in range(k, n):
                    m[r][c] -= f * m[k][c]
        return True

    @cached_property
    def positive_roots(self) -> tuple[RootVector, ...]:
        """All positive roots, by orbit closure of the simple roots (finite type)."""
        if not self.is_finite_type:
            raise ValueError("positive-root enumeration requires finite type")
        seen = {RootVector.simple(self.rank, i) for i in range(1, self.rank + 1)}
        frontier = set(seen)
        while frontier:
            nxt = set()
            for beta in frontier:
                for i in range(1, self.rank + 1):
                    img = self.reflect_root(i, beta)
                    if img not in seen:
                        seen.add(img)
                        nxt.add(img)
            frontier = nxt
        return tuple(sorted((b for b in seen if b.is_nonnegative()), key=lambda b: b.coords))

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def is_longest_word(self, word) -> bool:
        """True when the word is a reduced word for the longest element.

        Only meaningful in finite type: a reduced word whose length equals
        the number of positive roots.
        """
        word = tuple(word)
        if not self.is_finite_type:
            return False
        return len(word) == self.num_positive_roots and self.is_reduced(word)
