"""Exactness of polyominoes: boundary factorizations X Y Z hat(X) hat(Y) hat(Z).

A polyomino tiles the plane by translations iff its boundary word admits
such a factorization with at most one empty block; one empty block makes
it a square, none a hexagon.  Cut positions are reported on the canonical
(least) rotation of the input, and two factorizations count as the same
exactly when their cut sets coincide.
"""

from dataclasses import dataclass
from enum import Enum

from .chain import canonical_rotation, hat, is_closed, is_simple, rotate


class TileClass(Enum):
    NOT_EXACT = "not-exact"
    SQUARE = "square"
    HEXAGON = "hexagon"


@dataclass(frozen=True)
class BNFactorization:
    cuts: tuple  # 4 or 6 sorted positions, antipodally paired mod n
    blocks: tuple  # (X, Y, Z) read from the least cut; Z == "" for squares

    @property
    def is_square(self):
        return len(self.cuts) == 4


def _blocks_from_cuts(word, cuts):
    h = len(word) // 2
    m = cuts[0]
    r = word[m:] + word[:m]
    starts = [c - m for c in cuts if c - m < h] + [h]
    parts = [r[p:q] for p, q in zip(starts, starts[1:])]
    while len(parts) < 3:
        parts.append("")
    return BNFactorization(cuts, tuple(parts))


def bn_factorizations(word):
    """All factorizations X Y Z hat(X) hat(Y) hat(Z) of a boundary word.

    Exhaustive over cut positions on the canonical rotation, deduplicated
    by cut set and returned sorted.  Non-boundary or odd-length input
    yields no factorizations (such words never tile).  Block validity is
    memoized so the search costs O(n^3) letter comparisons.
    """
    if len(word) % 2 or not word:
        return []
    if not (is_closed(word) and is_simple(word)):
        return []
    w = canonical_rotation(word)
    n = len(w)
    h = n // 2
    d = w + w
    hd = rotate(d, 2)
    block_ok = {}

    def ok(p, q):
        v = block_ok.get((p, q))
        if v is None:
            # the block's antipodal arc must be its own reversal in the
            # half-turned frame, i.e. equal hat(block)
            v = d[p + h : q + h] == hd[p:q][::-1]
            block_ok[(p, q)] = v
        return v

    found = {}
    for s in range(h):
        for a in range(h + 1):
            if not ok(s, s + a):
                continue
            for b in range(h - a + 1):
                z = h - a - b
                if (a == 0) + (b == 0) + (z == 0) >= 2:
                    continue
                if not ok(s + a, s + a + b) or not ok(s + a + b, s + h):
                    continue
                cuts = tuple(
                    sorted(
                        {s, s + a, s + a + b, s + h, (s + h + a) % n, (s + h + a + b) % n}
                    )
                )
                if cuts not in found:
                    found[cuts] = _blocks_from_cuts(w, cuts)
    return [found[c] for c in sorted(found)]


def classify(word):
    """not-exact / square / hexagon, preferring square when both exist."""
    facts = bn_factorizations(word)
    if not facts:
        return TileClass.NOT_EXACT
    if any(f.is_square for f in facts):
        return TileClass.SQUARE
    return TileClass.HEXAGON


def square_count(word):
    """Number of distinct square factorizations (cut sets with 4 cuts)."""
    return sum(f.is_square for f in bn_factorizations(word))


def reconstruct(fact, word):
    """Rebuild the boundary from a factorization of word; for validation."""
    x, y, z = fact.blocks
    rebuilt = x + y + z + hat(x) + hat(y) + hat(z)
    w = canonical_rotation(word)
    m = fact.cuts[0]
    return rebuilt == w[m:] + w[:m]
