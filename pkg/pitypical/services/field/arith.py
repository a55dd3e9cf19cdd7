"""
Integer-tuple kernels for o_L = W(k_L)[π]/E(π).

Elements are flat tuples of length e·f, index i·f + j holding the coefficient
of π^i ω^j. Nothing here tracks precision; callers pass the modulus.
"""
from __future__ import annotations

from typing import List, Sequence, Tuple

Flat = Tuple[int, ...]


def w_mul(g: Sequence[int], x: Sequence[int], y: Sequence[int]) -> List[int]:
    """Multiply two W(k_L) elements (length f) modulo the monic polynomial g."""
    f = len(g) - 1
    if f == 1:
        return [x[0] * y[0]]
    prod = [0] * (2 * f - 1)
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if yj:
                prod[i + j] += xi * yj
    for k in range(2 * f - 2, f - 1, -1):
        c = prod[k]
        if c:
            base = k - f
            for i in range(f):
                prod[base + i] -= c * g[i]
    return prod[:f]


def mul_raw(
    e: int,
    f: int,
    g: Sequence[int],
    eisenstein: Sequence[Sequence[int]],
    a: Sequence[int],
    b: Sequence[int],
    modulus: int,
) -> Flat:
    if e == 1 and f == 1:
        return ((a[0] * b[0]) % modulus,)

    rows_a = [a[i * f:(i + 1) * f] for i in range(e)]
    rows_b = [b[i * f:(i + 1) * f] for i in range(e)]
    prod = [[0] * f for _ in range(2 * e - 1)]
    for i, ra in enumerate(rows_a):
        if not any(ra):
            continue
        for j, rb in enumerate(rows_b):
            if not any(rb):
                continue
            w = w_mul(g, ra, rb)
            row = prod[i + j]
            for t in range(f):
                row[t] += w[t]

    # π^e = -(E_0 + E_1 π + ... + E_{e-1} π^{e-1})
    for k in range(2 * e - 2, e - 1, -1):
        c = [value % modulus for value in prod[k]]
        if not any(c):
            continue
        base = k - e
        for i in range(e):
            t_row = w_mul(g, c, eisenstein[i])
            row = prod[base + i]
            for t in range(f):
                row[t] -= t_row[t]

    return tuple(value % modulus for row in prod[:e] for value in row)


def add_raw(a: Sequence[int], b: Sequence[int], modulus: int) -> Flat:
    return tuple((x + y) % modulus for x, y in zip(a, b))


def sub_raw(a: Sequence[int], b: Sequence[int], modulus: int) -> Flat:
    return tuple((x - y) % modulus for x, y in zip(a, b))


def int_valuation(value: int, p: int, cap: int) -> int:
    """p-adic valuation of an integer, capped; zero maps to the cap."""
    if value == 0:
        return cap
    v = 0
    while v < cap and value % p == 0:
        value //= p
        v += 1
    return v
