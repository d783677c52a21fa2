"""Dense exact linear algebra on short coordinate vectors (lists of field scalars)."""

from __future__ import annotations


def rref(vectors, field):
    """Reduced row echelon basis of ``span(vectors)``.

    The pivot of each row is its earliest nonzero coordinate, so earlier
    basis vectors are preferred as pivots.  Returns ``(rows, pivots)``.
    """
    rows = [[field(c) for c in v] for v in vectors]
    rows = [r for r in rows if any(r)]
    out: list[list] = []
    pivots: list[int] = []
    for r in rows:
        r = list(r)
        for piv, br in zip(pivots, out):
            if r[piv]:
                f = r[piv]
                r = [a - f * b for a, b in zip(r, br)]
        lead = next((k for k, c in enumerate(r) if c), None)
        if lead is None:
            continue
        inv = field.one() / r[lead]
        r = [c * inv for c in r]
        for m, br in enumerate(out):
            if br[lead]:
                f = br[lead]
                out[m] = [a - f * b for a, b in zip(br, r)]
        out.append(r)
        pivots.append(lead)
    order = sorted(range(len(out)), key=lambda k: pivots[k])
    return [out[k] for k in order], [pivots[k] for k in order]


def rank(vectors, field) -> int:
    return len(rref(vectors, field)[0])


def in_span(v, basis_rows, pivots, field) -> bool:
    """Membership test against an :func:`rref` basis."""
    r = [field(c) for c in v]
    for piv, br in zip(pivots, basis_rows):
        if r[piv]:
            f = r[piv]
            r = [a - f * b for a, b in zip(r, br)]
    return not any(r)


def unit(n: int, k: int, field) -> list:
    v = [field.zero()] * n
    v[k] = field.one()
    return v


def add(u, v):
    return [a + b for a, b in zip(u, v)]


def sub(u, v):
    return [a - b for a, b in zip(u, v)]


def scale(c, v):
    return [c * a for a in v]
