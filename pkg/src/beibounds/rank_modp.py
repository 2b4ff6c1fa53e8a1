"""Exact matrix rank over prime fields.

GF(2) uses Python-int bit rows (XOR elimination), which is very fast at
the few-hundred-column scale of induced-subcomplex boundary matrices.
Odd primes go through numpy integer elimination mod p.  No floating
point anywhere.
"""

from __future__ import annotations

import numpy as np


def rank_gf2(rows: list[int]) -> int:
    """Rank over GF(2) of a matrix given as bitmask rows."""
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = row
                break
            row ^= piv
    return len(pivots)


def rank_modp(matrix: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p) by Gaussian elimination."""
    if p == 2:
        rows = [int("".join("1" if x else "0" for x in r), 2) if r.any() else 0
                for r in (np.asarray(matrix) % 2).astype(np.uint8)]
        return rank_gf2(rows)
    a = np.asarray(matrix, dtype=np.int64) % p
    m, n = a.shape
    r = 0
    for c in range(n):
        pivot = None
        for i in range(r, m):
            if a[i, c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        col = a[r + 1 :, c]
        nz = np.nonzero(col)[0]
        if nz.size:
            a[r + 1 + nz] = (a[r + 1 + nz] - np.outer(col[nz], a[r])) % p
        r += 1
        if r == m:
            break
    return r
