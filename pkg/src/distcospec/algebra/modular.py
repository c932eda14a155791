"""Characteristic polynomials modulo a prime, for fingerprinting."""

from __future__ import annotations

from typing import Sequence

# 2^61 - 1, a Mersenne prime
DEFAULT_PRIME = (1 << 61) - 1


def modular_charpoly(rows: Sequence[Sequence[int]], p: int = DEFAULT_PRIME) -> list[int]:
    """Coefficients (ascending in x) of ``det(xI - M) mod p``.

    Reduces ``M`` to upper Hessenberg form by similarity transforms and then
    runs the Hessenberg determinant recurrence.  O(n^3) field operations.
    """
    n = len(rows)
    H = [[x % p for x in r] for r in rows]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if H[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            H[piv], H[j + 1] = H[j + 1], H[piv]
            for r in H:
                r[piv], r[j + 1] = r[j + 1], r[piv]
        inv = pow(H[j + 1][j], p - 2, p)
        pivrow = H[j + 1]
        for k in range(j + 2, n):
            u = H[k][j] * inv % p
            if not u:
                continue
            rk = H[k]
            for c in range(n):
                if pivrow[c]:
                    rk[c] = (rk[c] - u * pivrow[c]) % p
            for r in H:
                if r[k]:
                    r[j + 1] = (r[j + 1] + u * r[k]) % p

    # polys[m] = charpoly of the leading m x m block, ascending coefficients
    polys: list[list[int]] = [[1]]
    for m in range(n):
        prev = polys[m]
        cur = [0] + prev  # x * prev
        h = H[m][m]
        for i, c in enumerate(prev):
            cur[i] = (cur[i] - h * c) % p
        t = 1
        for i in range(m - 1, -1, -1):
            t = t * H[i + 1][i] % p
            if not t:
                break
            f = H[i][m] * t % p
            if f:
                for k, c in enumerate(polys[i]):
                    cur[k] = (cur[k] - f * c) % p
        polys.append(cur)
    return polys[n]
