"""Truncated Kummer polynomials.

The confluent hypergeometric function of the first kind,

    F(a, b; u) = sum_{k >= 0} (a)_k / (b)_k * u^k / k!,

terminates when a = -m for a non-negative integer m: every term past k = m
carries the factor (-m)_k = 0, so F(-m, b; u) is a polynomial of degree
exactly m. The solution families in this package only ever evaluate F at
such terminating first arguments, so this module implements the polynomial
case and nothing else; non-integer orders are rejected rather than
approximated by a series.

Evaluation goes through cached power-series coefficients and a Horner
sweep. The coefficients are built with the term-ratio recurrence

    c_0 = 1,    c_{k+1} = c_k * (k - m) / ((b + k) (k + 1)),

so no factorial-sized intermediates appear and the scheme stays accurate
up to the largest order the package uses (m around 50).
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InvalidParameter

__all__ = [
    "pochhammer",
    "kummer_truncated",
    "kummer_truncated_du",
    "kummer_truncated_d2u",
]


def pochhammer(w: float, k: int) -> float:
    """Rising factorial (w)_k = w (w+1) ... (w+k-1); the empty product (k=0) is 1."""
    if isinstance(k, bool) or k != int(k) or k < 0:
        raise InvalidParameter(f"pochhammer index must be a non-negative integer, got {k!r}")
    out = 1.0
    for j in range(int(k)):
        out *= w + j
    return out


def _checked_order(m) -> int:
    if isinstance(m, bool) or m != int(m):
        raise InvalidParameter(f"truncation order must be an integer, got {m!r}")
    if m < 0:
        raise InvalidParameter(f"truncation order must be non-negative, got {m}")
    return int(m)


@lru_cache(maxsize=None)
def _series_coefficients(m: int, b: float) -> tuple[float, ...]:
    coeffs = [1.0]
    for k in range(m):
        if b + k == 0.0:
            raise InvalidParameter(
                f"(b)_{k + 1} vanishes for b = {b}; degree-{m} polynomial undefined")
        coeffs.append(coeffs[-1] * (k - m) / ((b + k) * (k + 1)))
    return tuple(coeffs)


@lru_cache(maxsize=None)
def _derivative_coefficients(m: int, b: float, order: int) -> tuple[float, ...]:
    coeffs = _series_coefficients(m, b)
    for _ in range(order):
        coeffs = tuple((k + 1) * c for k, c in enumerate(coeffs[1:]))
    return coeffs


def _horner(coeffs: tuple[float, ...], u: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * u + c
    return acc


def kummer_truncated(m: int, b: float, u: float) -> float:
    """Evaluate F(-m, b; u) as the exact degree-m polynomial (no series tail).

    Raises InvalidParameter when m is not a non-negative integer, or when a
    denominator factor (b)_k vanishes for some k <= m.
    """
    return _horner(_series_coefficients(_checked_order(m), b), u)


def kummer_truncated_du(m: int, b: float, u: float) -> float:
    """First u-derivative of ``kummer_truncated``, differentiated term by term."""
    return _horner(_derivative_coefficients(_checked_order(m), b, 1), u)


def kummer_truncated_d2u(m: int, b: float, u: float) -> float:
    """Second u-derivative of ``kummer_truncated``; needed for price curvature."""
    return _horner(_derivative_coefficients(_checked_order(m), b, 2), u)
