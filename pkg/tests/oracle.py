"""Independent brute-force oracles used to freeze expected values.

Nothing here imports from the package: the tensor rule is the literal
recursive two-factor definition on explicit factor lists, and the dimension
formula rebuilds positive roots and symmetrizers from scratch.  Agreement
between these and the package is a genuine dual-route check.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

NEG_INF = float("-inf")


# ----------------------------------------------------------------------
# tensor rule on explicit factor lists


def colors_for(rank: int, head: tuple[int, ...], window: int) -> list[int]:
    """Colors of positions 1..window: head letters, then 1..rank cyclically."""
    out = []
    for k in range(1, window + 1):
        if k <= len(head):
            out.append(head[k - 1])
        else:
            out.append((k - len(head) - 1) % rank + 1)
    return out


def _factor_stats(gcm, color: int, entry: int, i: int):
    """(eps, phi, weight) of one elementary-crystal factor for color i."""
    wt = [0] * len(gcm)
    wt[color - 1] -= entry
    if color == i:
        return entry, -entry, wt
    return NEG_INF, NEG_INF, wt


def _pair(gcm, i: int, wt) -> int:
    return sum(gcm[i - 1][j] * c for j, c in enumerate(wt))


def tensor_stats(gcm, colors, entries, i):
    """(eps, phi) of the product, aggregating factors right to left."""
    eps, phi = NEG_INF, NEG_INF
    wt_right = [0] * len(gcm)
    # factors are listed bottom-up (position 1 first); the aggregate under
    # construction is always the right-hand side of the next combination
    for k in range(len(colors)):
        e_l, p_l, wt_l = _factor_stats(gcm, colors[k], entries[k], i)
        new_eps = max(e_l, eps - _pair(gcm, i, wt_l))
        new_phi = max(phi, p_l + _pair(gcm, i, wt_right))
        eps, phi = new_eps, new_phi
        wt_right = [a + b for a, b in zip(wt_l, wt_right)]
    return eps, phi


def tensor_apply(gcm, colors, entries, i, op):
    """Apply a crystal operator by the literal recursive two-factor rule.

    ``op`` is "f" or "e"; returns the new entries or None when the operator
    annihilates (acts on a factor of the wrong color, or raises past zero
    with no factor left).  Factors are listed bottom-up; the recursion walks
    the list from the top (leftmost tensor factor).
    """

    def rec(k: int):
        # factors k..1 remain; factor k is the current leftmost
        color, entry = colors[k - 1], entries[k - 1]
        _, phi_l, _ = _factor_stats(gcm, color, entry, i)
        if k == 1:
            eps_rest = NEG_INF
        else:
            eps_rest, _ = tensor_stats(gcm, colors[: k - 1], entries[: k - 1], i)
        act_here = phi_l > eps_rest if op == "f" else phi_l >= eps_rest
        if act_here:
            if color != i:
                return None
            out = list(entries)
            out[k - 1] += 1 if op == "f" else -1
            return out
        if k == 1:
            return None
        return rec(k - 1)

    return rec(len(colors))


def tensor_weight(gcm, colors, entries):
    wt = [0] * len(gcm)
    for c, x in zip(colors, entries):
        wt[c - 1] -= x
    return wt


# ----------------------------------------------------------------------
# Weyl dimension formula


def _own_symmetrizers(gcm) -> list[int]:
    n = len(gcm)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and gcm[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(gcm[i][j], gcm[j][i])
                    stack.append(j)
    scale = lcm(*(f.denominator for f in d))
    ints = [int(f * scale) for f in d]
    g = gcd(*ints)
    return [v // g for v in ints]


def _own_positive_roots(gcm) -> list[tuple[int, ...]]:
    n = len(gcm)

    def reflect(i, beta):
        pairing = sum(gcm[i][j] * beta[j] for j in range(n))
        out = list(beta)
        out[i] -= pairing
        return tuple(out)

    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simples)
    frontier = set(simples)
    while frontier:
        nxt = set()
        for beta in frontier:
            for i in range(n):
                img = reflect(i, beta)
                if img not in seen:
                    seen.add(img)
                    nxt.add(img)
        frontier = nxt
        if len(seen) > 10_000:
            raise ValueError("root closure does not stabilize; not finite type")
    return sorted(b for b in seen if all(c >= 0 for c in b))


def weyl_dim(gcm, lam) -> int:
    """Dimension of the irreducible with highest weight lam (finite type)."""
    d = _own_symmetrizers(gcm)
    total = Fraction(1)
    for beta in _own_positive_roots(gcm):
        num = sum(c * dj * (lj + 1) for c, dj, lj in zip(beta, d, lam))
        den = sum(c * dj for c, dj in zip(beta, d))
        total *= Fraction(num, den)
    assert total.denominator == 1
    return int(total)
