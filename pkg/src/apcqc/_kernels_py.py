"""Pure numpy fallback for the exponent-histogram kernels.

Every kernel counts, for tables t1, t2 over F_p^n and an error (a, b),

    counts[r] = #{y : t2[y] + b.y - t1[y + a] == r (mod p)}

which is the coefficient vector in Z[zeta_p] of sum_x zeta^(t2(x-a) + b.(x-a) - t1(x)).
"""

import numpy as np

from .logicfn import digit_matrix, place_values


def _shift(p, n, a, b):
    Y = digit_matrix(p, n)
    xidx = ((Y + a) % p) @ place_values(p, n)
    lin = (Y @ b) % p
    return xidx, lin


def char_counts(t1, t2, a, b, p, n):
    xidx, lin = _shift(p, n, np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
    e = (t2 + lin - t1[xidx]) % p
    return np.bincount(e, minlength=p).astype(np.int64)


def first_nonvanishing(t1, t2, A, B, p, n):
    for row in range(A.shape[0]):
        c = char_counts(t1, t2, A[row], B[row], p, n)
        if (c != c[0]).any():
            return row
    return -1


def first_kl_failure(E, A, B, p, n):
    K = E.shape[0]
    slots = (np.arange(K * K, dtype=np.int64) * p).reshape(K, K, 1)
    for row in range(A.shape[0]):
        xidx, lin = _shift(p, n, A[row], B[row])
        shifted = (E + lin) % p
        expo = (shifted[None, :, :] - E[:, xidx][:, None, :]) % p
        counts = np.bincount((expo + slots).ravel(), minlength=K * K * p).reshape(K, K, p)
        for i in range(K):
            for j in range(K):
                c = counts[i, j]
                if i != j:
                    if (c != c[0]).any():
                        return row, i, j
                elif i:
                    diff = c - counts[0, 0]
                    if (diff != diff[0]).any():
                        return row, i, j
    return -1, -1, -1
