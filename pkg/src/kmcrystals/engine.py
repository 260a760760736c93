"""The reflection recursion and its three verifiable identities.

Given a member b (x) t_lambda and a reduced word, the recursion lowers by
each color to exhaustion, producing elements b_k and counts c_k, while the
d_k sequence tracks coroot pairings of the reflected reference weight.  The
main identity equates the iterated extended Saito reflection of b with the
starred raising chain applied to b_l; its weight-level shadow gives a vertex
chain, and consecutive vertex differences solve for integer parameters that
must match a closed form in c_k and the weight of b_k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binf import BInfElement
from .cartan import RootVector, Weight, Word
from .errors import (
    LusztigMismatchError,
    NotReducedError,
    PhiMismatchError,
    StarShortfallError,
    VertexMismatchError,
)
from .hw import LambdaElement


@dataclass(frozen=True)
class TheoremTrace:
    """Full record of one run of the recursion.

    ``b_seq`` and ``cascade`` have length l+1 (index 0 holds the input);
    ``lhs`` is the final cascade element, ``rhs`` the starred raising chain
    applied to the final lowered element, innermost factor first.
    """

    word: Word
    lam: Weight
    b_seq: tuple[BInfElement, ...]
    c_seq: tuple[int, ...]
    d_seq: tuple[int, ...]
    cascade: tuple[BInfElement, ...]
    lhs: BInfElement
    rhs: BInfElement

    @property
    def length(self) -> int:
        return len(self.word)

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "lambda": list(self.lam.dominant),
            "word": list(self.word),
            "b": list(self.b_seq[0].word),
            "c": list(self.c_seq),
            "d": list(self.d_seq),
            "b_seq": [list(b.word) for b in self.b_seq],
            "cascade": [list(b.word) for b in self.cascade],
            "lhs": list(self.lhs.word),
            "rhs": list(self.rhs.word),
        }


def run_recursion(b: BInfElement, lam: Weight, word) -> TheoremTrace:
    """Run the full recursion for one (member, weight, reduced word) case.

    Raises NotReducedError or MembershipError on bad input, PhiMismatchError
    if the two phi computations disagree, and StarShortfallError if the
    starred raising chain runs out of applicability (a theorem violation).
    """
    cartan = b.cartan
    word = tuple(word)
    if not cartan.is_reduced(word):
        raise NotReducedError(f"word {word} is not reduced")
    x = LambdaElement(b, lam)  # validates membership

    b_seq = [b]
    c_seq = []
    for i in word:
        c = x.phi(i)
        for step in range(c):
            nxt = x.f(i)
            if nxt is None:  # phi just counted c applications; cannot happen
                raise PhiMismatchError(i, step, c)
            x = nxt
        c_seq.append(c)
        b_seq.append(x.b)

    d_seq = cartan.d_sequence(word, lam)

    cascade = [b]
    for i in word:
        cascade.append(cascade[-1].saito_hat(i))

    rhs = b_seq[-1]
    for k, i in enumerate(word, start=1):
        d = d_seq[k - 1]
        try:
            rhs = rhs.e_star(i, d)
        except StarShortfallError as err:
            raise StarShortfallError(i, d, err.available, step=k) from None

    return TheoremTrace(
        word=word,
        lam=lam,
        b_seq=tuple(b_seq),
        c_seq=tuple(c_seq),
        d_seq=tuple(d_seq),
        cascade=tuple(cascade),
        lhs=cascade[-1],
        rhs=rhs,
    )


def verify_identity(trace: TheoremTrace) -> bool:
    """True when both sides of the main identity have equal canonical form."""
    return trace.lhs == trace.rhs


def vertices(trace: TheoremTrace) -> list[Weight]:
    """Vertex chain: the k-prefix reflections applied to the weight of b_k.

    Also evaluates the cascade-side expression (reflected cascade weight
    plus lambda) at every k and raises VertexMismatchError on disagreement.
    """
    cartan = trace.b_seq[0].cartan
    out = []
    for k in range(trace.length + 1):
        prefix = trace.word[:k]
        mu = cartan.act_on_weight(prefix, trace.lam.add_root(trace.b_seq[k].weight()))
        nu = trace.lam.add_root(cartan.act_on_root(prefix, trace.cascade[k].weight()))
        if mu != nu:
            raise VertexMismatchError(k, nu, mu)
        out.append(mu)
    return out


def _cascade_path(trace: TheoremTrace) -> list[RootVector]:
    """Reflected cascade weights: prefix word acting on cascade[k]'s weight."""
    cartan = trace.b_seq[0].cartan
    return [
        cartan.act_on_root(trace.word[:k], trace.cascade[k].weight())
        for k in range(trace.length + 1)
    ]


def lusztig_params(trace: TheoremTrace) -> list[int]:
    """Exponents along the word, computed two independent ways.

    Closed form: n_k = -c_k - <coroot_{i_k}, weight of b_k (x) t_lambda>.
    System: consecutive differences of the reflected cascade weights must be
    integer multiples of the inversion roots; the multiplier is matched on
    the first nonzero coordinate and re-verified on the whole vector.
    Disagreement raises LusztigMismatchError.
    """
    cartan = trace.b_seq[0].cartan
    betas = cartan.inversion_roots(trace.word)
    path = _cascade_path(trace)
    out = []
    for k in range(1, trace.length + 1):
        i = trace.word[k - 1]
        closed = -trace.c_seq[k - 1] - cartan.pairing(
            i, trace.lam.add_root(trace.b_seq[k].weight())
        )
        diff = path[k] - path[k - 1]
        beta = betas[k - 1]
        pivot = next(j for j, c in enumerate(beta.coords) if c != 0)
        q, r = divmod(diff.coords[pivot], beta.coords[pivot])
        if r != 0:
            raise LusztigMismatchError(k, f"non-integral system solution {diff} / {beta}")
        if beta.scale(q) != diff:
            raise LusztigMismatchError(k, f"difference {diff} not a multiple of {beta}")
        if q != closed:
            raise LusztigMismatchError(k, f"system gives {q}, closed form gives {closed}")
        out.append(closed)
    return out
