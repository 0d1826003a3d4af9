"""Exact rank of sparse integer matrices over Q and over F_p.

Rows are dicts {column: nonzero int}.  Over Q the elimination is
fraction-free: a row is reduced by ``pivot * row - coeff * pivot_row`` and
then divided by the gcd of its entries, so every intermediate value is an
integer and the computed rank is exact.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable

Row = dict[int, int]


def _primitive(row: Row) -> Row:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}


def rank_rational(rows: Iterable[Row]) -> int:
    pivots: dict[int, Row] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                pivots[c] = _primitive(row)
                break
            a, p = row[c], prow[c]
            new = {k: v * p for k, v in row.items()}
            for k, v in prow.items():
                x = new.get(k, 0) - a * v
                if x:
                    new[k] = x
                else:
                    new.pop(k, None)
            row = _primitive(new) if new else new
    return len(pivots)


def rank_mod2(rows: Iterable[Row]) -> int:
    pivots: dict[int, int] = {}
    for row in rows:
        bits = 0
        for c, v in row.items():
            if v & 1:
                bits ^= 1 << c
        while bits:
            low = bits & -bits
            p = pivots.get(low)
            if p is None:
                pivots[low] = bits
                break
            bits ^= p
    return len(pivots)


def rank_mod_p(rows: Iterable[Row], p: int) -> int:
    if p == 2:
        return rank_mod2(rows)
    pivots: dict[int, Row] = {}
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                inv = pow(row[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                break
            a = row[c]
            for k, v in prow.items():
                x = (row.get(k, 0) - a * v) % p
                if x:
                    row[k] = x
                else:
                    row.pop(k, None)
    return len(pivots)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def rank(rows: Iterable[Row], field: int | str = "Q") -> int:
    """Rank over ``field``: ``"Q"`` for the rationals or a prime p for F_p."""
    if field in ("Q", "q", 0):
        return rank_rational(rows)
    if not isinstance(field, int) or not is_prime(field):
        raise ValueError(f"field must be 'Q' or a prime, got {field!r}")
    return rank_mod_p(rows, field)


def parse_field(text: str) -> int | str:
    """'q' -> 'Q', 'f2' -> 2, 'f<p>' -> p."""
    t = text.strip().lower()
    if t in ("q", "qq", "rationals"):
        return "Q"
    if t.startswith("f") and t[1:].isdigit() and is_prime(int(t[1:])):
        return int(t[1:])
    raise ValueError(f"unknown field {text!r}; use q, f2 or f<prime>")
