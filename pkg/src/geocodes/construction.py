"""Polynomial codes over prime fields.

Each codeword is a degree-``lam`` polynomial ``p`` over ``F_n`` with
``a_0 = a_{lam-1} = 0`` and ``a_lam != 0``; its macrobond is the graph
``{(x, p(x))}``. Two such graphs can share more than ``lam`` points under a
translation only when the translation is zero and the polynomials agree, which
gives an ``(n, n, lam)`` code of size ``(n-1) n^(lam-2)``.

Dropping self-complementary polynomials and one polynomial of every
complementary pair ``q(x) = -p(-x)`` gives a flipping code.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from .grid import CodeParams, Macrobond


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def _check_params(n: int, lam: int):
    if not is_prime(n):
        raise ValueError(f"n must be prime, got {n}")
    if not 2 <= lam <= n - 1:
        raise ValueError(f"lambda must lie in 2..{n - 1} for n={n}, got {lam}")


@dataclass(frozen=True)
class PolynomialCodeword:
    """Coefficients ``(a_0, ..., a_lam)`` of a codeword polynomial mod ``n``."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = self.coeffs
        if len(c) < 3:
            raise ValueError("a codeword polynomial has degree at least 2")
        if any(not 0 <= a < self.n for a in c):
            raise ValueError(f"coefficients must lie in [0, {self.n})")
        if c[0] != 0 or c[-2] != 0 or c[-1] == 0:
            raise ValueError("need a_0 = 0, a_(lam-1) = 0 and a_lam != 0")

    @property
    def lam(self) -> int:
        return len(self.coeffs) - 1


def eval_poly(p: PolynomialCodeword, x: int) -> int:
    # Horner, reducing at every step
    acc = 0
    for a in reversed(p.coeffs):
        acc = (acc * x + a) % p.n
    return acc


def codeword_to_macrobond(p: PolynomialCodeword) -> Macrobond:
    return Macrobond(p.n, ((x, eval_poly(p, x)) for x in range(p.n)))


def complement(p: PolynomialCodeword) -> PolynomialCodeword:
    """The polynomial ``q`` with ``q(x) = -p(-x)``, i.e. ``b_i = (-1)^(i+1) a_i``."""
    n = p.n
    return PolynomialCodeword(n, tuple(a if i % 2 else (-a) % n for i, a in enumerate(p.coeffs)))


def is_self_complementary(p: PolynomialCodeword) -> bool:
    return complement(p) == p


def codewords(n: int, lam: int) -> Iterator[PolynomialCodeword]:
    """All valid codewords: ``a_lam`` outermost, then ``a_(lam-2)`` down to ``a_1``."""
    _check_params(n, lam)
    free = lam - 2  # a_(lam-2) ... a_1
    for lead in range(1, n):
        for rest in itertools.product(range(n), repeat=free):
            # rest[0] is a_(lam-2), rest[-1] is a_1
            coeffs = (0,) + tuple(reversed(rest)) + (0, lead)
            yield PolynomialCodeword(n, coeffs)


def code_size(n: int, lam: int) -> int:
    return (n - 1) * n ** (lam - 2)


def self_complementary_count(n: int, lam: int) -> int:
    """Number of valid codewords equal to their complement, for odd prime ``n``.

    Every even-index coefficient must vanish, so none exist for even ``lam``;
    for odd ``lam`` the odd indices ``1..lam-2`` are free.
    """
    _check_params(n, lam)
    if lam % 2 == 0:
        return 0
    return (n - 1) * n ** ((lam - 1) // 2)


def flipping_code_size(n: int, lam: int) -> int:
    """Constructive size ``(N - S) / 2`` of :func:`build_flipping_code`."""
    if n % 2 == 0:
        raise ValueError("flipping construction needs an odd prime n")
    return (code_size(n, lam) - self_complementary_count(n, lam)) // 2


class CodeStream:
    """A lazily generated code with its size known in advance.

    Iterating yields macrobonds; ``count`` is the total, ``limit`` truncates
    to a prefix (a prefix of a valid code is valid).
    """

    def __init__(self, params: CodeParams, count: int, source, limit: int | None = None):
        self.params = params
        self.declared = count
        self.count = count if limit is None else min(count, limit)
        self._source = source

    def __len__(self) -> int:
        return self.count

    def __iter__(self) -> Iterator[Macrobond]:
        return (codeword_to_macrobond(p) for p in itertools.islice(self._source(), self.count))

    def polynomials(self) -> Iterator[PolynomialCodeword]:
        return itertools.islice(self._source(), self.count)


def build_code(n: int, lam: int, limit: int | None = None) -> CodeStream:
    """The ``(n, n, lam)`` polynomial code, in enumeration order."""
    _check_params(n, lam)
    return CodeStream(CodeParams(n, n, lam, False), code_size(n, lam), lambda: codewords(n, lam), limit)


def _flipping_codewords(n: int, lam: int) -> Iterator[PolynomialCodeword]:
    for p in codewords(n, lam):
        q = complement(p)
        # keeps the lexicographically smaller (a_0, ..., a_lam) of each pair
        if p.coeffs < q.coeffs:
            yield p


def build_flipping_code(n: int, lam: int, limit: int | None = None) -> CodeStream:
    """Flipping ``(n, n, lam)`` code: the polynomial code with self-complementary
    members removed and one member of each complementary pair kept."""
    _check_params(n, lam)
    if n % 2 == 0:
        raise ValueError("flipping construction needs an odd prime n")
    return CodeStream(
        CodeParams(n, n, lam, True),
        flipping_code_size(n, lam),
        lambda: _flipping_codewords(n, lam),
        limit,
    )
