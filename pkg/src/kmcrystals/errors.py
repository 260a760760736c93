"""Exception types shared across the package.

Plain argument mistakes (bad index, malformed matrix, non-dominant weight)
raise ValueError; CrystalError subclasses signal violations of crystal-level
contracts that callers may want to catch individually.
"""


class CrystalError(Exception):
    """Base class for crystal-structure contract violations."""


class NotReducedError(CrystalError):
    """A word required to be reduced has a non-positive inversion root."""


class MembershipError(CrystalError):
    """An element fails the highest-weight membership criterion.

    Carries the violating index and its starred-epsilon value.
    """

    def __init__(self, index: int, eps_star: int, bound: int):
        super().__init__(
            f"not a member: eps*_{index} = {eps_star} exceeds <coroot_{index}, lambda> = {bound}"
        )
        self.index = index
        self.eps_star = eps_star
        self.bound = bound


class StarShortfallError(CrystalError):
    """A starred raising operator was asked for more steps than eps* allows."""

    def __init__(self, index: int, requested: int, available: int, step: int | None = None):
        where = f" at recursion step {step}" if step is not None else ""
        super().__init__(
            f"e*_{index}^{requested} not applicable{where}: eps*_{index} = {available}"
        )
        self.index = index
        self.requested = requested
        self.available = available
        self.step = step


class SaitoDomainError(CrystalError):
    """Saito reflection applied outside its domain {eps_i = 0}."""


class StuckElementError(CrystalError):
    """A nonzero element reported eps_j = 0 for every color.

    Cannot happen for valid string data (the topmost nonzero entry always
    contributes a positive eps for its color); raised only to fail loudly
    on corrupted data.
    """


class PhiMismatchError(CrystalError):
    """Counting-based and formula-based phi disagree on a member of B(lambda)."""

    def __init__(self, index: int, counted: int, formula: int):
        super().__init__(
            f"phi_{index} inconsistency: counted {counted}, formula gives {formula}"
        )
        self.index = index
        self.counted = counted
        self.formula = formula


class VertexMismatchError(CrystalError):
    """The two vertex expressions disagree at some step of a trace."""

    def __init__(self, k: int, lhs, rhs):
        super().__init__(f"vertex mismatch at k={k}: {lhs} != {rhs}")
        self.k = k
        self.lhs = lhs
        self.rhs = rhs


class LusztigMismatchError(CrystalError):
    """The closed-form parameter and the linear-system solution disagree."""

    def __init__(self, k: int, detail: str):
        super().__init__(f"Lusztig parameter mismatch at k={k}: {detail}")
        self.k = k
        self.detail = detail
