"""Closed-form code-size bounds.

Exact formulas use Python integers and :class:`fractions.Fraction`; only the
simplified upper bounds and the randomized bound are floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .construction import is_prime


def binom(m: int, k: int) -> int:
    """``C(m, k)``, zero when ``k < 0`` or ``m < k``."""
    if k < 0 or m < k:
        return 0
    return math.comb(m, k)


def l_con(n: int, lam: int) -> int:
    """Size of the polynomial construction, ``n^(lam-1) - n^(lam-2)``."""
    if not is_prime(n):
        raise ValueError(f"n must be prime, got {n}")
    if not 2 <= lam <= n - 1:
        raise ValueError(f"lambda must lie in 2..{n - 1}, got {lam}")
    return n ** (lam - 1) - n ** (lam - 2)


def _check_nwl(n: int, w: int, lam: int):
    if n < 1 or not 2 <= w <= n * n:
        raise ValueError(f"need 2 <= w <= n^2, got n={n}, w={w}")
    if not 1 <= lam < w:
        raise ValueError(f"need 1 <= lambda < w, got lambda={lam}, w={w}")


def canonical_subset_count(n: int, lam: int) -> int:
    """Number of ``(lam+1)``-subsets of the grid flush against both axes."""
    n2 = n * n
    total = binom(n2 - 1, lam)
    for x0 in range(1, n):
        for y0 in range(1, n):
            total += binom(n2 - x0 - y0 - 1, lam - 1)
    return total


def u_det(n: int, w: int, lam: int) -> int:
    """Pigeonhole upper bound on any ``(n, w, lam)`` code, floored."""
    _check_nwl(n, w, lam)
    return canonical_subset_count(n, lam) // binom(w, lam + 1)


def u_simplified(n: int, w: int, lam: int) -> float:
    """``(lam+1)^2 e^(lam+1) n^(2 lam) / w^(lam+1)``."""
    _check_nwl(n, w, lam)
    log_v = 2 * math.log(lam + 1) + (lam + 1) + 2 * lam * math.log(n) - (lam + 1) * math.log(w)
    try:
        return math.exp(log_v)
    except OverflowError:
        raise OverflowError(f"u_simplified({n}, {w}, {lam}) overflows double precision") from None


def u_n_eq_w(n: int, lam: int) -> float:
    """``(lam+1)^2 e^(lam+1) n^(lam-1)``, the ``w = n`` case of :func:`u_simplified`."""
    _check_nwl(n, n, lam)
    log_v = 2 * math.log(lam + 1) + (lam + 1) + (lam - 1) * math.log(n)
    try:
        return math.exp(log_v)
    except OverflowError:
        raise OverflowError(f"u_n_eq_w({n}, {lam}) overflows double precision") from None


class ZeroDenominatorError(ArithmeticError):
    pass


def l_ooc_exact(n: int, lam: int) -> Fraction:
    """Unfloored optical-orthogonal-code lower bound for length ``n^2``, weight ``n``."""
    if n < 2 or not 1 <= lam < n:
        raise ValueError(f"need n >= 2 and 1 <= lambda < n, got n={n}, lambda={lam}")
    v = n * n
    num = binom(v, n) - Fraction(v - 1, 2) * binom(n, lam + 1) * binom(v, n - lam - 1)
    den = v * sum(binom(v - n, n - i) * binom(n, i) for i in range(lam + 1, min(v - n, n) + 1))
    if den == 0:
        raise ZeroDenominatorError(f"l_ooc({n}, {lam}) has a zero denominator")
    return num / den


def l_ooc(n: int, lam: int) -> int:
    return max(0, math.floor(l_ooc_exact(n, lam)))


def u_ran_raw(n: int, lam: int, epsilon: float = 0.5) -> float:
    if n < 2 or not 1 <= lam < n:
        raise ValueError(f"need n >= 2 and 1 <= lambda < n, got n={n}, lambda={lam}")
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    return (lam + 1) / n * (1 + math.sqrt(2 * n ** (lam + 1) * math.log(1 / epsilon)))


def u_ran(n: int, lam: int, epsilon: float = 0.5) -> int:
    """Random one-per-column codes of this size fail with probability >= 1 - epsilon."""
    return math.floor(u_ran_raw(n, lam, epsilon))


class FlippingClosedForm(NamedTuple):
    odd_branch: Fraction
    even_branch: Fraction


def flipping_closed_form(n: int, lam: int) -> FlippingClosedForm:
    """The flipping-code size as stated for odd and even ``n``, unreduced."""
    up = -(-lam // 2)
    base = n ** (lam - 1) - n ** (lam - 2)
    return FlippingClosedForm(
        Fraction(base - n**up, 2),
        Fraction(base - 2 ** (lam // 2 + 1) * n**up, 2),
    )


def flipping_closed_form_alt(n: int, lam: int) -> FlippingClosedForm:
    """The variant ``(n^(lam-1) - 1 - ...)/2`` that ends the construction's argument."""
    up = -(-lam // 2)
    base = n ** (lam - 1) - 1
    return FlippingClosedForm(
        Fraction(base - n**up, 2),
        Fraction(base - 2 ** (lam // 2 + 1) * n**up, 2),
    )


def closed_form_warnings(n: int, lam: int, constructive: int) -> list[str]:
    """Describe every way the closed forms for ``n``'s parity disagree with ``constructive``."""
    out = []
    for label, forms in (("stated", flipping_closed_form(n, lam)), ("alternate", flipping_closed_form_alt(n, lam))):
        value = forms.odd_branch if n % 2 else forms.even_branch
        flags = []
        if value < 0:
            flags.append("negative")
        if value.denominator != 1:
            flags.append("non-integer")
        if value != constructive:
            flags.append(f"differs from constructive count {constructive}")
        if flags:
            out.append(f"{label} closed form gives {_fmt(value)}: " + ", ".join(flags))
    return out


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{float(q):g}"


@dataclass(frozen=True)
class BoundSet:
    n: int
    w: int
    lam: int
    l_con: int | None
    u_det: int
    u_simplified: float
    u_n_eq_w: float | None
    l_ooc: int | None
    u_ran: int | None


def bound_set(n: int, lam: int, w: int | None = None, epsilon: float = 0.5) -> BoundSet:
    """Every bound for one parameter triple; entries that do not apply are ``None``.

    ``l_ooc`` and ``u_ran`` are defined for weight ``n`` only.
    """
    w = n if w is None else w
    lc = l_con(n, lam) if is_prime(n) and 2 <= lam <= n - 1 else None
    same = w == n
    return BoundSet(
        n=n,
        w=w,
        lam=lam,
        l_con=lc if same else None,
        u_det=u_det(n, w, lam),
        u_simplified=u_simplified(n, w, lam),
        u_n_eq_w=u_n_eq_w(n, lam) if same else None,
        l_ooc=l_ooc(n, lam) if same and lam < n else None,
        u_ran=u_ran(n, lam, epsilon) if same and lam < n else None,
    )
