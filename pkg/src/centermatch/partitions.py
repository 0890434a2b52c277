"""Partitions, multipartitions, standard tableaux, Frobenius hooks.

Conventions used throughout the package:
  * partitions are tuples of weakly decreasing positive ints;
  * an r-multipartition is an r-tuple of partitions, components 0-based;
  * a box (l, i, j) sits in component l, row i, column j (all 0-based) and
    has content j - i; its component label beta is l + 1 (1-based);
  * multipartitions of n are enumerated by descending lex on the size
    composition (n_0, ..., n_{r-1}), then descending lex per component;
  * a standard multitableau is a tuple of components, each a tuple of row
    tuples, holding 1..n with rows and columns increasing within components.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial


# -- plain partitions -----------------------------------------------------


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(lam: tuple) -> tuple:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contents(lam: tuple) -> list:
    """Contents j - i of the boxes, row by row."""
    return [j - i for i, row in enumerate(lam) for j in range(row)]


def hook_lengths(lam: tuple) -> list:
    conj = conjugate(lam)
    return [
        lam[i] - j + conj[j] - i - 1
        for i in range(len(lam))
        for j in range(lam[i])
    ]


def num_standard_tableaux(lam: tuple) -> int:
    """Hook length formula; the counting oracle for tableau generation."""
    n = sum(lam)
    prod = 1
    for h in hook_lengths(lam):
        prod *= h
    return factorial(n) // prod


def frobenius_hooks(lam: tuple) -> list:
    """Decompose lam into principal hooks; returns [(n_i, k_i)], 1-based.

    n_i is the number of boxes of the i-th principal hook and k_i the number
    of those boxes lying in its row (arm plus corner).
    """
    conj = conjugate(lam)
    out = []
    i = 1
    while i <= len(lam) and lam[i - 1] >= i:
        n_i = lam[i - 1] + conj[i - 1] - 2 * i + 1
        k_i = lam[i - 1] - i + 1
        out.append((n_i, k_i))
        i += 1
    return out


# -- multipartitions ------------------------------------------------------


def _compositions(n: int, r: int):
    # weak compositions of n into r parts, descending lex order
    if r == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, r - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_multipartitions(r: int, n: int) -> tuple:
    """All r-multipartitions of n, in the package's canonical order."""
    if r < 1:
        raise ValueError("r must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for comp in _compositions(n, r):
        pools = [partitions_of(k) for k in comp]
        idx = [0] * r
        while True:
            out.append(tuple(pools[i][idx[i]] for i in range(r)))
            for pos in range(r - 1, -1, -1):
                idx[pos] += 1
                if idx[pos] < len(pools[pos]):
                    break
                idx[pos] = 0
            else:
                break
    return tuple(out)


def mp_size(mp: tuple) -> int:
    return sum(sum(comp) for comp in mp)


def mp_boxes(mp: tuple) -> list:
    """Boxes (l, i, j) of a multipartition, component by component."""
    return [
        (l, i, j)
        for l, comp in enumerate(mp)
        for i, row in enumerate(comp)
        for j in range(row)
    ]


def box_content(box: tuple) -> int:
    _, i, j = box
    return j - i


def mp_num_standard_tableaux(mp: tuple) -> int:
    n = mp_size(mp)
    count = factorial(n)
    for comp in mp:
        count //= factorial(sum(comp))
        count *= num_standard_tableaux(comp)
    return count


# -- standard tableaux ----------------------------------------------------


def _removable_cells(lam: tuple):
    for i, part in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < part:
            yield i, part - 1


def _remove_cell(lam: tuple, i: int) -> tuple:
    out = list(lam)
    out[i] -= 1
    if out[i] == 0:
        out.pop(i)
    return tuple(out)


@lru_cache(maxsize=None)
def standard_multitableaux(mp: tuple) -> tuple:
    """All standard multitableaux of the given multipartition shape.

    Entries depend only on the shape, so results memoize across shapes that
    reappear as intermediate steps of the removal recursion.
    """
    n = mp_size(mp)
    if n == 0:
        return (tuple(() for _ in mp),)
    out = []
    for l, comp in enumerate(mp):
        for i, j in _removable_cells(comp):
            sub = mp[:l] + (_remove_cell(comp, i),) + mp[l + 1:]
            for t in standard_multitableaux(sub):
                tcomp = list(t[l])
                if i < len(tcomp):
                    tcomp[i] = tcomp[i] + (n,)
                else:
                    tcomp.append((n,))
                out.append(t[:l] + (tuple(tcomp),) + t[l + 1:])
    return tuple(out)


def standard_tableaux(lam: tuple) -> tuple:
    """Standard Young tableaux of a single partition shape."""
    return tuple(t[0] for t in standard_multitableaux((lam,)))


def tableau_positions(t: tuple) -> dict:
    """entry -> (component, row, column), 0-based."""
    pos = {}
    for l, comp in enumerate(t):
        for i, row in enumerate(comp):
            for j, v in enumerate(row):
                pos[v] = (l, i, j)
    return pos


def apply_transposition(t: tuple, i: int) -> tuple:
    """The tableau with entries i and i+1 swapped (not always standard)."""
    def sw(v):
        if v == i:
            return i + 1
        if v == i + 1:
            return i
        return v

    return tuple(
        tuple(tuple(sw(v) for v in row) for row in comp) for comp in t
    )


# -- canonical text encoding ---------------------------------------------------


def render_partition(lam: tuple) -> str:
    """"2,1" for (2, 1); the empty partition prints as a single glyph."""
    return ",".join(str(p) for p in lam) if lam else "∅"


def render_multipartition(mp: tuple) -> str:
    """Components joined by "|": ((2,1),(),(1,)) -> "2,1|∅|1"."""
    return "|".join(render_partition(c) for c in mp)


def parse_partition(text: str) -> tuple:
    text = text.strip()
    if text in ("", "∅"):
        return ()
    parts = tuple(int(b) for b in text.split(","))
    if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise ValueError(f"not a partition: {text!r}")
    return parts


def parse_multipartition(text: str) -> tuple:
    return tuple(parse_partition(b) for b in text.split("|"))
