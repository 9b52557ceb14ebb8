"""Pure-Python Gray-code scan kernel for the minimum-distance search.

Same contract as the compiled kernel in ``_distcore``: enumerate the
combination indices [start, stop) of the generator list, maintaining the
running codeword by flipping one generator per step (reflected Gray
code), and track the minimum symplectic weight over codewords outside
the stabilizer span.  Works on arbitrary-width Python ints, so it has no
2n <= 64 restriction.
"""

from __future__ import annotations

KERNEL_NAME = "pure"


def _gray_start(gens, start: int) -> int:
    """Codeword for combination index ``start`` (XOR per Gray bits)."""
    g = start ^ (start >> 1)
    x = 0
    i = 0
    while g:
        if g & 1:
            x ^= gens[i]
        g >>= 1
        i += 1
    return x


def gray_scan(gens, n: int, s_rows, start: int, stop: int):
    """Scan combination indices [start, stop); returns (w, idx, word).

    ``gens`` are packed 2n-bit generator rows; ``s_rows`` is the RREF of
    the span to exclude (each row reduced by its lowest set bit).  The
    zero combination (index 0) is never a candidate.  Returns the best
    (weight, index, codeword) with ties broken by the smallest index, or
    (-1, -1, 0) if no candidate outside the excluded span was seen.
    """
    mask = (1 << n) - 1
    piv = [((r & -r).bit_length() - 1, r) for r in s_rows]

    best_w = -1
    best_idx = -1
    best_x = 0

    x = _gray_start(gens, start)

    idx = start
    while idx < stop:
        if idx != start:
            x ^= gens[(idx & -idx).bit_length() - 1]
        if idx != 0:
            w = ((x | (x >> n)) & mask).bit_count()
            if best_w < 0 or w < best_w:
                y = x
                for p, r in piv:
                    if (y >> p) & 1:
                        y ^= r
                if y:
                    best_w = w
                    best_idx = idx
                    best_x = x
        idx += 1
    return best_w, best_idx, best_x
