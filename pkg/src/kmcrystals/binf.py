"""Elements of the crystal of the lower half, with canonical identity.

An element is stored as string data in the reference model (empty head)
together with a lowering word that reproduces it from the highest element.
The word is always normalized to the greedy one (raise by the smallest
applicable color first), so equal elements carry equal words.

Starred operators are read off through a one-letter head: re-embedding an
element into the model with head i puts eps*_i at position 1, and the
starred raising/lowering operators become a decrement/increment there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import CartanData, RootVector, Word
from .errors import CrystalError, SaitoDomainError, StarShortfallError, StuckElementError
from .strings import ModelSequence, StringData


def _replay(model: ModelSequence, word) -> StringData:
    x = StringData.highest(model)
    for i in word:
        x = x.apply_f(i)
    return x


def _greedy_raise(x: StringData) -> list[tuple[int, int]]:
    """Greedy raising schedule (color, count) ending at the highest element."""
    steps = []
    while not x.is_highest():
        for j in range(1, x.model.cartan.rank + 1):
            m = x.eps(j)
            if m > 0:
                for _ in range(m):
                    x = x.apply_e(j)
                steps.append((j, m))
                break
        else:
            raise StuckElementError(f"nonzero element with all eps zero: {x.entries}")
    return steps


def _word_from_steps(steps) -> Word:
    return tuple(j for j, m in reversed(steps) for _ in range(m))


@dataclass(frozen=True, eq=False)
class BInfElement:
    """Canonical string data plus its greedy lowering word.

    The word lists lowering operators in application order: the first
    letter is applied to the highest element first.
    """

    data: StringData
    word: Word

    def __eq__(self, other) -> bool:
        if not isinstance(other, BInfElement):
            return NotImplemented
        return self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        return f"BInfElement(word={list(self.word)})"

    # ------------------------------------------------------------------
    # construction

    @staticmethod
    def _from_data(data: StringData) -> "BInfElement":
        return BInfElement(data, _word_from_steps(_greedy_raise(data)))

    @staticmethod
    def highest(cartan: CartanData) -> "BInfElement":
        return BInfElement(StringData.highest(ModelSequence(cartan)), ())

    @staticmethod
    def from_word(cartan: CartanData, word) -> "BInfElement":
        """Element obtained by applying lowering operators in word order."""
        word = tuple(word)
        for i in word:
            cartan.check_index(i)
        return BInfElement._from_data(_replay(ModelSequence(cartan), word))

    # ------------------------------------------------------------------

    @property
    def cartan(self) -> CartanData:
        return self.data.model.cartan

    def is_highest(self) -> bool:
        return self.data.is_highest()

    def weight(self) -> RootVector:
        return self.data.weight()

    def eps(self, i: int) -> int:
        return self.data.eps(i)

    def phi(self, i: int) -> int:
        return self.data.phi(i)

    def f(self, i: int) -> "BInfElement":
        return BInfElement._from_data(self.data.apply_f(i))

    def e(self, i: int) -> "BInfElement | None":
        nxt = self.data.apply_e(i)
        return None if nxt is None else BInfElement._from_data(nxt)

    def e_max(self, i: int) -> "BInfElement":
        out = self
        for _ in range(self.eps(i)):
            out = out.e(i)
        return out

    def raise_to_highest(self) -> list[tuple[int, int]]:
        """Greedy raising schedule; empty exactly on the highest element."""
        return _greedy_raise(self.data)

    # ------------------------------------------------------------------
    # starred operators through re-embedding

    def reembed(self, head) -> StringData:
        """The same abstract element written in the model with the given head."""
        head = tuple(head)
        return _replay(ModelSequence(self.cartan, head), self.word)

    def _from_head_data(self, x: StringData) -> "BInfElement":
        word = _word_from_steps(_greedy_raise(x))
        return BInfElement._from_data(_replay(ModelSequence(self.cartan), word))

    def eps_star(self, i: int) -> int:
        """Starred eps: the first entry in the model headed by i."""
        return self.reembed((i,)).entry(1)

    def e_star(self, i: int, m: int = 1) -> "BInfElement":
        """Starred raising applied m times; requires m <= eps_star(i)."""
        if m < 0:
            raise ValueError("count must be nonnegative")
        x = self.reembed((i,))
        if m > x.entry(1):
            raise StarShortfallError(i, m, x.entry(1))
        return self._from_head_data(x._with_entry(1, -m))

    def f_star(self, i: int, m: int = 1) -> "BInfElement":
        """Starred lowering applied m times."""
        if m < 0:
            raise ValueError("count must be nonnegative")
        x = self.reembed((i,))
        return self._from_head_data(x._with_entry(1, +m))

    # ------------------------------------------------------------------
    # Saito reflections

    def saito(self, i: int) -> "BInfElement":
        """Saito reflection, defined on elements with eps_i = 0.

        Applies the starred raising operator to exhaustion, then the plain
        lowering operator eps_star + <coroot_i, weight> times; the image
        satisfies eps_star_i = 0 and the weight reflects by s_i.
        """
        if self.eps(i) != 0:
            raise SaitoDomainError(f"saito_{i} needs eps_{i} = 0, got {self.eps(i)}")
        estar = self.eps_star(i)
        count = estar + self.cartan.pair_root(i, self.weight())
        if count < 0:
            raise CrystalError(f"negative lowering count {count} in saito_{i}")
        out = self.e_star(i, estar)
        for _ in range(count):
            out = out.f(i)
        return out

    def saito_hat(self, i: int) -> "BInfElement":
        """Precondition-free extension: raise by color i to exhaustion first."""
        return self.e_max(i).saito(i)

    def to_json(self) -> dict:
        return {"word": list(self.word)}


def enumerate_binf(cartan: CartanData, depth: int) -> list[BInfElement]:
    """All elements reachable by at most ``depth`` lowering steps, level order."""
    top = BInfElement.highest(cartan)
    seen = {top}
    out = [top]
    frontier = [top]
    for _ in range(depth):
        nxt = []
        for b in frontier:
            for i in range(1, cartan.rank + 1):
                c = b.f(i)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        nxt.sort(key=lambda b: b.data.entries)
        out.extend(nxt)
        frontier = nxt
    return out
