"""Pure-Python hot kernels; used when the compiled extension is unavailable."""


def gf2_rank(rows):
    """Rank over GF(2) of a matrix given as integer bit-rows."""
    pivots = []  # reduced rows, each with a distinct leading bit
    rank = 0
    for row in rows:
        for p in pivots:
            row = min(row, row ^ p)
        if row:
            pivots.append(row)
            rank += 1
    return rank


def count_cycles(succ):
    """Number of cycles of the permutation ``i -> succ[i]``."""
    n = len(succ)
    seen = bytearray(n)
    cycles = 0
    for start in range(n):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = 1
            i = succ[i]
    return cycles
