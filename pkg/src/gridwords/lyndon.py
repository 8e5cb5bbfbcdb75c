"""Lyndon factorization (Duval) and Christoffel word construction/recognition.

Lyndon machinery works over any ordered alphabet (plain string comparison);
the Christoffel side is specific to {0,1}.
"""

from math import gcd

from .chain import canonical_rotation


def is_lyndon(word):
    """True iff word is primitive and least among its rotations."""
    if not word:
        raise ValueError("empty word")
    n = len(word)
    # standard primitivity test: w occurs in ww only at the ends
    if (word + word).find(word, 1) != n:
        return False
    return canonical_rotation(word) == word


def lyndon_factorize(word):
    """Unique nonincreasing Lyndon factorization as (factor, exponent) pairs.

    Duval's three-index scan; linear time.  Consecutive factors are
    strictly decreasing, equal neighbors having been grouped into the
    exponent.  The empty word is the empty product.
    """
    factors = []
    k, n = 0, len(word)
    while k < n:
        i, j = k, k + 1
        while j < n and word[i] <= word[j]:
            i = k if word[i] < word[j] else i + 1
            j += 1
        length = j - i
        count = (i - k) // length + 1
        factors.append((word[k:k + length], count))
        k += length * count
    return factors


def format_factorization(factors):
    """Render factor pairs as '(f1)^n1 (f2)^n2 ...'."""
    return " ".join(f"({f})^{n}" for f, n in factors)


def christoffel(a, b):
    """Lower Christoffel word with a letters 0 and b letters 1.

    Discretizes the segment of slope b/a from below; requires gcd(a,b)=1.
    """
    if a < 0 or b < 0 or a + b < 1:
        raise ValueError("need nonnegative counts with a+b >= 1")
    if gcd(a, b) != 1:
        raise ValueError("not primitive")
    n = a + b
    if n == 1:
        # the residue comparison below degenerates at length one
        return "0" if a else "1"
    return "".join(
        "0" if (i * b) % n > ((i - 1) * b) % n else "1" for i in range(1, n + 1)
    )


def is_christoffel(word):
    """True iff word is the lower Christoffel word of its letter counts."""
    if not word:
        raise ValueError("empty word")
    bad = word.strip("01")
    if bad:
        raise ValueError(f"letter outside {{0,1}}: {bad[0]!r}")
    a, b = word.count("0"), word.count("1")
    if gcd(a, b) != 1:
        return False
    return word == christoffel(a, b)
