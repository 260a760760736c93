"""The highest-weight crystal realized inside B(infinity) tensored with t_lambda.

There is no standalone container for the crystal: an element is a pair
(b, lambda) passing the membership test eps*_i(b) <= <coroot_i, lambda>,
and the crystal operators are those of b with membership re-checked.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binf import BInfElement
from .cartan import CartanData, Weight
from .errors import MembershipError, PhiMismatchError


def membership_violations(b: BInfElement, lam: Weight) -> list[tuple[int, int, int]]:
    """(index, eps_star, bound) for every violated membership inequality."""
    if not lam.is_dominant():
        raise ValueError("lambda must be dominant")
    out = []
    for i in range(1, b.cartan.rank + 1):
        estar = b.eps_star(i)
        bound = b.cartan.pairing(i, lam)
        if estar > bound:
            out.append((i, estar, bound))
    return out


def in_hw_crystal(b: BInfElement, lam: Weight) -> bool:
    """Membership test: every starred eps within the coroot pairing of lambda."""
    return not membership_violations(b, lam)


@dataclass(frozen=True)
class LambdaElement:
    """A member b (x) t_lambda of the highest-weight crystal."""

    b: BInfElement
    lam: Weight

    def __post_init__(self):
        bad = membership_violations(self.b, self.lam)
        if bad:
            raise MembershipError(*bad[0])

    @staticmethod
    def highest(cartan: CartanData, lam: Weight) -> "LambdaElement":
        return LambdaElement(BInfElement.highest(cartan), lam)

    @property
    def cartan(self) -> CartanData:
        return self.b.cartan

    def weight(self) -> Weight:
        return self.lam.add_root(self.b.weight())

    def f(self, i: int) -> "LambdaElement | None":
        """Lowering operator; None when the image leaves the crystal."""
        fb = self.b.f(i)
        if not in_hw_crystal(fb, self.lam):
            return None
        return LambdaElement(fb, self.lam)

    def e(self, i: int) -> "LambdaElement | None":
        """Raising operator; membership is automatic but re-checked."""
        eb = self.b.e(i)
        if eb is None:
            return None
        return LambdaElement(eb, self.lam)

    def phi(self, i: int) -> int:
        """Applicability count of the lowering operator, checked both ways.

        Counts actual applications and compares with phi_i(b) plus the coroot
        pairing of lambda; normality of the crystal makes these equal, so a
        disagreement is a convention bug and raises.
        """
        counted = 0
        cur = self
        while True:
            nxt = cur.f(i)
            if nxt is None:
                break
            counted += 1
            cur = nxt
        formula = self.b.phi(i) + self.cartan.pairing(i, self.lam)
        if counted != formula:
            raise PhiMismatchError(i, counted, formula)
        return counted


@dataclass(frozen=True)
class Enumeration:
    """Breadth-first closure of the crystal under lowering operators."""

    elements: tuple[LambdaElement, ...]
    complete: bool
    depth: int


def enumerate_crystal(cartan: CartanData, lam: Weight, max_depth: int) -> Enumeration:
    """Everything reachable within ``max_depth`` lowering steps of the top.

    The ``complete`` flag is set when the closure provably stabilized: either
    some level was empty, or no element of the final level admits a lowering.
    The depth cap is mandatory; affine crystals are infinite.
    """
    if not lam.is_dominant():
        raise ValueError("lambda must be dominant")
    if max_depth < 0:
        raise ValueError("depth must be nonnegative")
    top = LambdaElement.highest(cartan, lam)
    elements = [top]
    frontier = [top]
    depth = 0
    while frontier and depth < max_depth:
        nxt = []
        seen = set()
        for x in frontier:
            for i in range(1, cartan.rank + 1):
                y = x.f(i)
                if y is not None and y.b not in seen:
                    seen.add(y.b)
                    nxt.append(y)
        nxt.sort(key=lambda y: y.b.data.entries)
        elements.extend(nxt)
        frontier = nxt
        depth += 1
    complete = not frontier or not any(
        x.f(i) is not None for x in frontier for i in range(1, cartan.rank + 1)
    )
    return Enumeration(tuple(elements), complete, depth)
