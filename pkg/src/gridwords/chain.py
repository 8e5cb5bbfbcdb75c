"""Chain-code words over the alphabet {0,1,2,3} = right, up, left, down.

Letters form the additive group of integers mod 4.  Words are plain
strings; functions that treat a word cyclically say so.  `CircularWord`
wraps a closed word with equality up to rotation of its letters.
"""

from dataclasses import dataclass
from fractions import Fraction

from .quadgraph import detect_first_intersection

ALPHABET = "0123"
STEPS = ((1, 0), (0, 1), (-1, 0), (0, -1))

_ROT = tuple(
    str.maketrans(ALPHABET, "".join(ALPHABET[(d + i) % 4] for d in range(4)))
    for i in range(4)
)
_REF = tuple(
    str.maketrans(ALPHABET, "".join(ALPHABET[(i - d) % 4] for d in range(4)))
    for i in range(4)
)


def _validate(word):
    bad = word.strip(ALPHABET)
    if bad:
        raise ValueError(f"invalid chain letter {bad[0]!r}")
    return word


def rotate(word, quarter_turns=1):
    """Rotate every letter by quarter_turns (the morphism x -> x + i mod 4)."""
    return _validate(word).translate(_ROT[quarter_turns % 4])


def reflect(word, axis):
    """Reflect every letter across axis (the morphism x -> i - x mod 4)."""
    return _validate(word).translate(_REF[axis % 4])


def hat(word):
    """The same path traversed backwards: rotate the reversal by 2."""
    return _validate(word)[::-1].translate(_ROT[2])


def delta(word):
    """Word of successive letter differences mod 4; length drops by one."""
    if not word:
        raise ValueError("delta undefined on empty word")
    b = _validate(word).encode()
    return "".join(ALPHABET[(b[i + 1] - b[i]) % 4] for i in range(len(b) - 1))


def delta_circular(word):
    """First differences of the word read cyclically (closing term appended).

    Same length as the input.  The result is itself a cyclic word but in
    general not closed as a path, so it is returned as a plain string.
    """
    if not word:
        raise ValueError("delta undefined on empty circular word")
    b = word.encode()
    return delta(word) + ALPHABET[(b[0] - b[-1]) % 4]


def reduce(word, circular=False):
    """Normal form after deleting cancelling step pairs {02, 20, 13, 31}.

    With circular=True the seam (last letter against first) is cancelled
    too, modelling reduction of the conjugacy class.
    """
    out = []
    for ch in _validate(word):
        if out and (ord(ch) - ord(out[-1])) % 4 == 2:
            out.pop()
        else:
            out.append(ch)
    if circular:
        lo, hi = 0, len(out)
        while hi - lo >= 2 and (ord(out[lo]) - ord(out[hi - 1])) % 4 == 2:
            lo += 1
            hi -= 1
        out = out[lo:hi]
    return "".join(out)


def is_closed(word):
    """True iff the path returns to its start (letter counts balance)."""
    _validate(word)
    return word.count("0") == word.count("2") and word.count("1") == word.count("3")


def is_simple(word):
    """True iff no grid point is visited twice, except a closed word's final
    return to its start."""
    hit = detect_first_intersection(word)
    if hit is None:
        return True
    return hit[0] == len(word) and is_closed(word)


@dataclass(frozen=True)
class PathTrace:
    start: tuple
    vertices: tuple  # length |word| + 1, vertices[0] == start

    @property
    def end(self):
        return self.vertices[-1]


def trace(word, start=(0, 0)):
    """Geometric realization: the vertex sequence of the path from start."""
    _validate(word)
    x, y = start
    vertices = [(x, y)]
    append = vertices.append
    for ch in word:
        dx, dy = STEPS[ord(ch) - 48]
        x += dx
        y += dy
        append((x, y))
    return PathTrace((start[0], start[1]), tuple(vertices))


@dataclass(frozen=True)
class TurningNumber:
    quarter_turns: int

    @property
    def as_rational(self):
        return Fraction(self.quarter_turns, 4)

    def __str__(self):
        return str(self.as_rational)


def turning_number(word, circular=False):
    """Left turns minus right turns of the reduced word, in quarter turns.

    Counts 1s minus 3s of the differences of reduce(word, circular); the
    reduced word has no cancelling pair, so no difference is a half turn.
    The circular flag requires a closed word.
    """
    if circular and not is_closed(word):
        raise ValueError("not closed")
    w = reduce(word, circular)
    if not w:
        return TurningNumber(0)
    d = delta_circular(w) if circular else delta(w)
    return TurningNumber(d.count("1") - d.count("3"))


def orient_ccw(word):
    """The word or its hat, whichever traverses the boundary counterclockwise.

    Raises ValueError unless the input is a boundary word (closed, simple,
    turning number +-1).
    """
    if word and is_closed(word) and is_simple(word):
        qt = turning_number(word, circular=True).quarter_turns
        if qt == 4:
            return word
        if qt == -4:
            return hat(word)
    raise ValueError("not a boundary word")


def salient_reentrant(word):
    """Counts (S, R) of salient and reentrant corners of a boundary word.

    Orientation is normalized to counterclockwise first; then S and R are
    the numbers of left and right turns read cyclically.  S - R = 4.
    """
    d = delta_circular(orient_ccw(word))
    return d.count("1"), d.count("3")


def least_rotation(word):
    """Index at which the lexicographically least rotation starts (Booth)."""
    n = len(word)
    if n == 0:
        return 0
    d = word + word
    f = [-1] * len(d)
    k = 0
    for j in range(1, len(d)):
        sj = d[j]
        i = f[j - k - 1]
        while i != -1 and sj != d[k + i + 1]:
            if sj < d[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != d[k + i + 1]:
            if sj < d[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


def canonical_rotation(word):
    """Lexicographically least rotation of the word."""
    k = least_rotation(word)
    return word[k:] + word[:k]


class CircularWord:
    """A closed chain-code word up to rotation of its letters.

    Equality and hashing use the lexicographically least rotation, so two
    conjugate representatives compare equal.
    """

    __slots__ = ("word", "_canonical")

    def __init__(self, word):
        if not is_closed(word):
            raise ValueError("circular word must be closed")
        self.word = word
        self._canonical = None

    @property
    def canonical(self):
        if self._canonical is None:
            self._canonical = canonical_rotation(self.word)
        return self._canonical

    def conjugates(self):
        """All rotations of the representative, in offset order."""
        w = self.word
        return (w[i:] + w[:i] for i in range(max(len(w), 1)))

    def __eq__(self, other):
        if isinstance(other, CircularWord):
            return self.canonical == other.canonical
        return NotImplemented

    def __hash__(self):
        return hash(self.canonical)

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return self.word

    def __repr__(self):
        return f"CircularWord({self.word!r})"
