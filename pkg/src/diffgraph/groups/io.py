"""Cayley table files.

Format: UTF-8 text; lines starting with ``#`` are comments. The first
content line is ``n``; then n lines of n space-separated 0-based indices,
row r column c holding the index of (element r)*(element c).
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from diffgraph.groups.base import FiniteGroup, GroupCapError
from diffgraph.groups.cayley import DEFAULT_CAYLEY_CAP, CayleyGroup, to_cayley

FULL_ASSOCIATIVITY_LIMIT = 512


class CayleyTableError(ValueError):
    """Malformed or non-group table. ``witness`` holds the offending data."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def read_table(path: str | Path) -> np.ndarray:
    lines = [ln.strip() for ln in Path(path).read_text(encoding="utf-8").splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise CayleyTableError(f"{path}: empty table file")
    try:
        n = int(lines[0])
        rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise CayleyTableError(f"{path}: non-integer entry ({exc})") from None
    if n < 1 or len(rows) != n or any(len(r) != n for r in rows):
        raise CayleyTableError(f"{path}: expected {n} rows of {n} entries")
    return np.array(rows, dtype=np.int64)


def validate_table(table: np.ndarray, seed: int = 0) -> int:
    """Check the group axioms; returns the identity index."""
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        raise CayleyTableError("entry out of range")
    ar = np.arange(n)
    for axis, what in ((1, "row"), (0, "column")):
        ok = (np.sort(table, axis=axis) == (ar if axis == 1 else ar[:, None])).all(axis=axis)
        if not ok.all():
            bad = int(np.nonzero(~ok)[0][0])
            raise CayleyTableError(f"not a Latin square: {what} {bad} repeats an entry", witness=(what, bad))
    hits = np.nonzero((table == ar).all(axis=1) & (table.T == ar).all(axis=1))[0]
    if len(hits) == 0:
        raise CayleyTableError("no identity element")
    if n <= FULL_ASSOCIATIVITY_LIMIT:
        for a in range(n):
            lhs = table[table[a]]  # (a*b)*c over all b, c
            rhs = table[a][table]  # a*(b*c)
            if not np.array_equal(lhs, rhs):
                b, c = (int(x) for x in np.argwhere(lhs != rhs)[0])
                raise CayleyTableError(f"associativity fails at ({a},{b},{c})", witness=(a, b, c))
    else:
        rng = np.random.default_rng(seed)
        remaining = 10 * n * n
        while remaining:
            k = min(remaining, 1_000_000)
            a, b, c = rng.integers(0, n, size=(3, k))
            bad = table[table[a, b], c] != table[a, table[b, c]]
            if bad.any():
                j = int(np.nonzero(bad)[0][0])
                w = (int(a[j]), int(b[j]), int(c[j]))
                raise CayleyTableError(f"associativity fails at {w}", witness=w)
            remaining -= k
    return int(hits[0])


def import_cayley(path: str | Path, cap: int = DEFAULT_CAYLEY_CAP, seed: int = 0) -> CayleyGroup:
    table = read_table(path)
    if table.shape[0] > cap:
        raise GroupCapError(f"table of order {table.shape[0]} exceeds cayley cap {cap}")
    ident = validate_table(table, seed=seed)
    return CayleyGroup(table, identity=ident, spec=f"cayley({path})")


def export_cayley(G: FiniteGroup, path: str | Path) -> None:
    C = to_cayley(G)
    n = C.order
    out = [f"# cayley table of {G.spec}" if G.spec else "# cayley table", str(n)]
    out.extend(" ".join(map(str, row)) for row in C.table.tolist())
    Path(path).write_text("\n".join(out) + "\n", encoding="utf-8")
