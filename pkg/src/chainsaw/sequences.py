"""Exact integer engines for Lucas sequences and Dickson polynomials.

Everything here is a second-order linear recurrence W_k = p*W_{k-1} - q*W_{k-2}
distinguished only by its seeds:

    U (first kind):   U_0 = 0, U_1 = 1     (U at (1, -1) is Fibonacci)
    V (second kind):  V_0 = 2, V_1 = p     (V at (1, -1) is Lucas)
    D (Dickson 1st):  D_0 = 2, D_1 = x
    E (Dickson 2nd):  E_0 = 1, E_1 = x

D and E additionally have explicit binomial summations, evaluated here in
pure integer arithmetic, and every kind can be computed in O(log n) matrix
multiplications by binary powering of the 2x2 companion matrix. All values
are arbitrary-precision Python ints; parameters may be negative or zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

KINDS = ("U", "V", "D", "E")
METHODS = ("recurrence", "summation", "matrix")


def binom(n: int, k: int) -> int:
    """Binomial coefficient, exact, with the convention 0 outside 0 <= k <= n."""
    if k < 0 or n < k:
        return 0
    return math.comb(n, k)


def lucas_U(n: int, p: int, q: int) -> int:
    """Lucas sequence of the first kind: U_0 = 0, U_1 = 1."""
    w0, w1 = 0, 1
    for _ in range(n):
        w0, w1 = w1, p * w1 - q * w0
    return w0


def lucas_V(n: int, p: int, q: int) -> int:
    """Lucas sequence of the second kind: V_0 = 2, V_1 = p."""
    w0, w1 = 2, p
    for _ in range(n):
        w0, w1 = w1, p * w1 - q * w0
    return w0


def dickson_D_sum(n: int, x: int, y: int) -> int:
    """First-kind Dickson value by its defining summation.

    The t-th term carries the weight n/(n-t) * C(n-t, t), a non-obvious
    integer; it is computed as C(n-t, t) + C(n-t-1, t-1) so no rational
    intermediate appears. At n = 0 the weight is 0/0-shaped, so the value
    is pinned to 2, matching the recurrence seed D_0 = 2.
    """
    if n == 0:
        return 2
    return sum(
        (binom(n - t, t) + binom(n - t - 1, t - 1)) * (-y) ** t * x ** (n - 2 * t)
        for t in range(n // 2 + 1)
    )


def dickson_E_sum(n: int, x: int, y: int) -> int:
    """Second-kind Dickson value by its defining summation."""
    return sum(
        binom(n - t, t) * (-y) ** t * x ** (n - 2 * t) for t in range(n // 2 + 1)
    )


@dataclass(frozen=True)
class SequenceSpec:
    """A sequence evaluation request: kind in KINDS, method in METHODS."""

    kind: str
    n: int
    p: int
    q: int
    method: str = "recurrence"


def _seeds(kind: str, p: int) -> tuple[int, int]:
    return {"U": (0, 1), "V": (2, p), "D": (2, p), "E": (1, p)}[kind]


def _by_recurrence(n: int, p: int, q: int, w0: int, w1: int) -> int:
    for _ in range(n):
        w0, w1 = w1, p * w1 - q * w0
    return w0


def _mat_mul(m1, m2):
    a, b, c, d = m1
    e, f, g, h = m2
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _mat_pow(m, e: int):
    result = (1, 0, 0, 1)
    while e:
        if e & 1:
            result = _mat_mul(result, m)
        m = _mat_mul(m, m)
        e >>= 1
    return result


def _by_matrix(n: int, p: int, q: int, w0: int, w1: int) -> int:
    """W_n via binary powering of the companion matrix [[p, -q], [1, 0]].

    The matrix maps the state (W_k, W_{k-1}) to (W_{k+1}, W_k), so applying
    its (n-1)-th power to (W_1, W_0) lands on (W_n, W_{n-1}).
    """
    if n == 0:
        return w0
    a, b, c, d = _mat_pow((p, -q, 1, 0), n - 1)
    return a * w1 + b * w0


def evaluate(spec: SequenceSpec) -> int:
    """Evaluate a SequenceSpec, dispatching on kind and method."""
    if spec.kind not in KINDS:
        raise ValueError(f"unknown sequence kind {spec.kind!r}; expected one of {KINDS}")
    if spec.method not in METHODS:
        raise ValueError(f"unknown method {spec.method!r}; expected one of {METHODS}")
    if spec.n < 0:
        raise ValueError(f"sequence index must be nonnegative, got {spec.n}")
    if spec.method == "summation":
        if spec.kind == "D":
            return dickson_D_sum(spec.n, spec.p, spec.q)
        if spec.kind == "E":
            return dickson_E_sum(spec.n, spec.p, spec.q)
        raise ValueError("summation applies only to Dickson kinds D and E")
    w0, w1 = _seeds(spec.kind, spec.p)
    if spec.method == "recurrence":
        return _by_recurrence(spec.n, spec.p, spec.q, w0, w1)
    return _by_matrix(spec.n, spec.p, spec.q, w0, w1)
