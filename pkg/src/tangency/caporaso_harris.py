"""Caporaso-Harris recursion for Severi degrees relative to a line.

N(d, delta, alpha, beta) counts degree-d plane curves with delta nodes,
contact with a fixed line described by two multiplicity sequences (indexed
by contact order k >= 1): alpha counts contacts at *fixed* points of the
line, beta counts contacts at *moving* points, and the curve passes through
the appropriate number of generic points.  The recursion either moves one
contact point to a fixed position (first sum) or degenerates the curve to
the line plus a degree d-1 curve (second sum):

    N(d, delta, alpha, beta)
        = sum_k k * N(d, delta, alpha + e_k, beta - e_k)
        + sum I^(beta'-beta) * C(alpha, alpha') * C(beta', beta)
              * N(d-1, delta', alpha', beta'),

the second sum over alpha' <= alpha, beta' >= beta and delta' <= delta with
delta - delta' + |beta' - beta| = d - 1, where I(s) = sum k*s_k,
|s| = sum s_k, I^s = prod k^(s_k) and C is the componentwise product of
binomial coefficients.  Base case: a line (d=1, delta=0) counts once.

This module is independent of the intersection-theoretic evaluators and
serves as their ground-truth oracle.
"""

from __future__ import annotations

import warnings as _warnings
from dataclasses import dataclass
from math import comb


def trim(seq) -> tuple:
    """Drop trailing zeros; the canonical form of a multiplicity sequence."""
    seq = tuple(seq)
    while seq and seq[-1] == 0:
        seq = seq[:-1]
    return seq


def weight(seq) -> int:
    """I(seq) = sum of k * seq_k (total contact order)."""
    return sum((k + 1) * v for k, v in enumerate(seq))


def size(seq) -> int:
    """|seq| = number of contact points."""
    return sum(seq)


def _bump(seq, k: int, by: int) -> tuple:
    """seq +/- by at contact order k (1-indexed)."""
    out = list(seq) + [0] * max(0, k - len(seq))
    out[k - 1] += by
    return trim(out)


def _binom_seq(upper, lower) -> int:
    out = 1
    for k in range(max(len(upper), len(lower))):
        u = upper[k] if k < len(upper) else 0
        v = lower[k] if k < len(lower) else 0
        if v > u:
            return 0
        out *= comb(u, v)
    return out


def _sub_sequences(seq):
    """All sequences componentwise <= seq."""
    if not seq:
        yield ()
        return
    for rest in _sub_sequences(seq[1:]):
        for v in range(seq[0] + 1):
            yield trim((v,) + rest + (0,) * (len(seq) - 1 - len(rest)))


def _seqs_with(count: int, total: int, max_order: int):
    """All sequences gamma with |gamma| = count and I(gamma) = total,
    supported on orders 1..max_order."""
    if count == 0:
        if total == 0:
            yield ()
        return
    if total < count or max_order < 1:
        return
    # choose the multiplicity at the largest order first
    for v in range(count + 1):
        rest_total = total - max_order * v
        rest_count = count - v
        if rest_total < rest_count:
            continue
        for head in _seqs_with(rest_count, rest_total, min(max_order - 1, rest_total)):
            if v:
                yield head + (0,) * (max_order - 1 - len(head)) + (v,)
            else:
                yield head


def _I_power(seq) -> int:
    out = 1
    for k, v in enumerate(seq):
        out *= (k + 1) ** v
    return out


@dataclass(frozen=True)
class CHKey:
    d: int
    delta: int
    alpha: tuple
    beta: tuple

    def __post_init__(self):
        object.__setattr__(self, "alpha", trim(self.alpha))
        object.__setattr__(self, "beta", trim(self.beta))


_memo: dict = {}


def clear_cache() -> None:
    _memo.clear()


def _N(d: int, delta: int, alpha: tuple, beta: tuple, memo) -> int:
    if d == 1:
        return 1 if delta == 0 else 0
    key = (d, delta, alpha, beta)
    if memo is not None:
        cached = memo.get(key)
        if cached is not None:
            return cached

    total = 0
    for k0, bk in enumerate(beta):
        if bk > 0:
            k = k0 + 1
            total += k * _N(d, delta, _bump(alpha, k, 1), _bump(beta, k, -1), memo)

    dp = d - 1
    for alpha_p in _sub_sequences(alpha):
        gamma_weight_base = dp - weight(alpha_p) - weight(beta)
        if gamma_weight_base < 0:
            continue
        binom_a = _binom_seq(alpha, alpha_p)
        for delta_p in range(delta + 1):
            gamma_count = dp - (delta - delta_p)
            if gamma_count < 0 or gamma_weight_base < gamma_count:
                continue
            max_order = gamma_weight_base - gamma_count + 1 if gamma_count else 1
            for gamma in _seqs_with(gamma_count, gamma_weight_base, max_order):
                beta_p = trim(tuple(
                    (beta[k] if k < len(beta) else 0) + (gamma[k] if k < len(gamma) else 0)
                    for k in range(max(len(beta), len(gamma)))
                ))
                total += (
                    _I_power(gamma)
                    * binom_a
                    * _binom_seq(beta_p, beta)
                    * _N(dp, delta_p, alpha_p, beta_p, memo)
                )

    if memo is not None:
        memo[key] = total
    return total


def ch_invariant(key: CHKey, memoized: bool = True) -> int:
    """Exact Severi degree N(d, delta, alpha, beta)."""
    if key.d < 1 or key.delta < 0:
        raise ValueError(f"invalid key {key}")
    if weight(key.alpha) + weight(key.beta) != key.d:
        _warnings.warn(f"contact orders do not sum to d for {key}; invariant is 0")
        return 0
    return _N(key.d, key.delta, key.alpha, key.beta, _memo if memoized else None)


def ch_from_profile(d: int, profile, eps, delta: int) -> CHKey:
    """Translate a tangency profile with point flags to a recursion key.

    A tangency of order k is a contact of order k+1.  A slot with eps=1 is
    a contact at a fixed point of the line (alpha); eps=0 is a moving
    contact (beta).  Leftover intersections with the line are transverse
    moving contacts (beta_1).
    """
    profile = tuple(profile)
    eps = tuple(eps)
    if len(eps) != len(profile):
        raise ValueError("eps must assign one flag per tangency point")
    alpha: tuple = ()
    beta: tuple = ()
    for k, e in zip(profile, eps):
        if e == 1:
            alpha = _bump(alpha, k + 1, 1)
        elif e == 0:
            beta = _bump(beta, k + 1, 1)
        else:
            raise ValueError(
                f"eps={e} fixes a tangency point off the line; the relative count is 0"
            )
    leftover = d - weight(alpha) - weight(beta)
    if leftover < 0:
        raise ValueError(f"contact orders exceed the degree: profile {profile} at d={d}")
    return CHKey(d, delta, alpha, _bump(beta, 1, leftover))
