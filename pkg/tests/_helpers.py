"""Shared test utilities: deterministic invertible-matrix samples."""
import random

from jpaut import Matrix


def some_gl(ring, n, count, seed=7):
    """Deterministic sample of invertible n x n matrices over ring."""
    rng = random.Random(seed)
    out, tries = [], 0
    size = ring.size if ring.is_finite else None
    while len(out) < count and tries < 5000:
        tries += 1
        ent = [[ring.from_int(rng.randrange(0, size or 7)).payload
                for _ in range(n)] for _ in range(n)]
        m = Matrix(ring, n, n, tuple(tuple(r) for r in ent))
        if m.is_invertible():
            out.append(m)
    assert len(out) == count, (ring.name, n)
    return out


def unit_basis(ring, n):
    """The n*n matrix units E_ij in row-major order."""
    out = []
    for i in range(n):
        for j in range(n):
            rows = [[ring.zero_p] * n for _ in range(n)]
            rows[i][j] = ring.one_p
            out.append(Matrix(ring, n, n, tuple(tuple(r) for r in rows)))
    return out
