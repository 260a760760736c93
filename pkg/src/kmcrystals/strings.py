"""String-data realization of the crystal of the lower half quantum group.

An element is a finitely supported sequence of nonnegative integers, entry k
sitting in an elementary rank-one crystal colored by the k-th letter of a
model sequence.  Position 1 is the rightmost tensor factor; the model is a
finite head followed by the cyclic repetition 1, 2, ..., n.

The crystal operators follow Kashiwara's tensor-product convention: the
lowering operator acts on the left factor exactly when phi(left) exceeds
eps(right) strictly, the raising operator when it is at least eps(right).
On string data this reduces to a scan of the per-position scores

    score(k) = x_k + sum_{j > k} a[i][color(j)] * x_j

over the i-colored positions k: eps_i is the maximum score, the raising
operator decrements the topmost position attaining it, the lowering operator
increments the bottommost.  Computations are truncated to a window that
always contains one i-colored position beyond the support, which makes every
statistic independent of the window size (and the all-zero tail harmless).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import CartanData, RootVector
from .errors import StuckElementError


@dataclass(frozen=True)
class ModelSequence:
    """Coloring of positions: a finite head, then the cyclic tail 1..n."""

    cartan: CartanData
    head: tuple[int, ...] = ()

    def __post_init__(self):
        for i in self.head:
            self.cartan.check_index(i)

    def color(self, k: int) -> int:
        """Color of position k (1-based)."""
        if k <= 0:
            raise ValueError("positions are 1-based")
        if k <= len(self.head):
            return self.head[k - 1]
        return (k - len(self.head) - 1) % self.cartan.rank + 1


def _trim(entries) -> tuple[int, ...]:
    entries = list(entries)
    while entries and entries[-1] == 0:
        entries.pop()
    return tuple(entries)


@dataclass(frozen=True)
class StringData:
    """Finitely supported nonnegative entries in a fixed model sequence."""

    model: ModelSequence
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        trimmed = _trim(self.entries)
        if any(x < 0 for x in trimmed):
            raise ValueError(f"negative string entry in {self.entries}")
        object.__setattr__(self, "entries", trimmed)

    @staticmethod
    def highest(model: ModelSequence) -> "StringData":
        return StringData(model, ())

    @property
    def support(self) -> int:
        return len(self.entries)

    def is_highest(self) -> bool:
        return not self.entries

    def default_window(self) -> int:
        """Smallest safe truncation: support (or head) plus one cyclic period."""
        return max(self.support, len(self.model.head)) + self.model.cartan.rank

    def entry(self, k: int) -> int:
        return self.entries[k - 1] if k <= len(self.entries) else 0

    def weight(self) -> RootVector:
        """Negative of the entry-weighted sum of simple roots."""
        coords = [0] * self.model.cartan.rank
        for k, x in enumerate(self.entries, start=1):
            coords[self.model.color(k) - 1] -= x
        return RootVector(tuple(coords))

    # ------------------------------------------------------------------

    def _scores(self, i: int, window: int | None) -> list[tuple[int, int]]:
        """(position, score) over i-colored positions, ascending position."""
        cartan = self.model.cartan
        cartan.check_index(i)
        k_max = self.default_window()
        if window is None:
            window = k_max
        elif window < k_max:
            raise ValueError(f"window {window} below safe minimum {k_max}")
        row = cartan.gcm[i - 1]
        out = []
        acc = 0  # weighted sum of entries strictly above the current position
        for k in range(window, 0, -1):
            c = self.model.color(k)
            x = self.entry(k)
            if c == i:
                out.append((k, x + acc))
            acc += row[c - 1] * x
        out.reverse()
        return out

    def eps(self, i: int, window: int | None = None) -> int:
        """Number of times the raising operator of color i applies."""
        value = max(score for _, score in self._scores(i, window))
        if value < 0:
            raise StuckElementError(f"eps_{i} < 0 on {self.entries}: corrupted data")
        return value

    def phi(self, i: int, window: int | None = None) -> int:
        """eps plus the coroot pairing of the weight; may be negative."""
        return self.eps(i, window) + self.model.cartan.pair_root(i, self.weight())

    def _with_entry(self, k: int, delta: int) -> "StringData":
        entries = list(self.entries) + [0] * max(0, k - len(self.entries))
        entries[k - 1] += delta
        return StringData(self.model, tuple(entries))

    def apply_f(self, i: int, window: int | None = None) -> "StringData":
        """Lowering operator: increments the bottommost maximal-score position."""
        scores = self._scores(i, window)
        best = max(score for _, score in scores)
        pos = min(k for k, score in scores if score == best)
        return self._with_entry(pos, +1)

    def apply_e(self, i: int, window: int | None = None) -> "StringData | None":
        """Raising operator; None when eps_i is zero."""
        scores = self._scores(i, window)
        best = max(score for _, score in scores)
        if best == 0:
            return None
        if best < 0:
            raise StuckElementError(f"eps_{i} < 0 on {self.entries}: corrupted data")
        pos = max(k for k, score in scores if score == best)
        if self.entry(pos) == 0:
            raise StuckElementError(
                f"raising would drive entry {pos} negative on {self.entries}"
            )
        return self._with_entry(pos, -1)

    def to_json(self) -> dict:
        return {"model_head": list(self.model.head), "entries": list(self.entries)}
