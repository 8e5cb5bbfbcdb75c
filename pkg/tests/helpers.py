"""Brute-force oracles the tests check the fast implementations against.

Everything here is written the slow, obvious way on purpose; none of it
imports the package under test.
"""

STEP = {"0": (1, 0), "1": (0, 1), "2": (-1, 0), "3": (0, -1)}


def first_intersection_oracle(word):
    """First revisited vertex of the path, via a plain hash set.

    Returns (letters consumed, point) for the first repeat, else None.
    """
    seen = {(0, 0)}
    x = y = 0
    for i, ch in enumerate(word):
        dx, dy = STEP[ch]
        x += dx
        y += dy
        if (x, y) in seen:
            return i + 1, (x, y)
        seen.add((x, y))
    return None


def min_rotation_brute(word):
    return min(range(len(word)), key=lambda k: word[k:] + word[:k])


def is_lyndon_brute(word):
    n = len(word)
    return n > 0 and all(word < word[k:] + word[:k] for k in range(1, n))


def lyndon_factorize_brute(word):
    """Greedy longest-Lyndon-prefix factorization, grouped by repetition."""
    factors = []
    rest = word
    while rest:
        for ln in range(len(rest), 0, -1):
            if is_lyndon_brute(rest[:ln]):
                factors.append(rest[:ln])
                rest = rest[ln:]
                break
    grouped = []
    for f in factors:
        if grouped and grouped[-1][0] == f:
            grouped[-1][1] += 1
        else:
            grouped.append([f, 1])
    return [(f, c) for f, c in grouped]


def christoffel_staircase(a, b):
    """Lower Christoffel word by walking the staircase under the segment.

    From (0,0) toward (a,b): step up as soon as the point above is still on
    or below the line a*y = b*x, otherwise step right.
    """
    x = y = 0
    out = []
    while (x, y) != (a, b):
        if y < b and a * (y + 1) <= b * x:
            y += 1
            out.append("1")
        else:
            x += 1
            out.append("0")
    return "".join(out)


def corner_counts(cells):
    """(salient, reentrant) corner counts of a cell set, by local inspection.

    A lattice vertex incident to exactly one occupied cell is salient, to
    exactly three is reentrant.
    """
    cells = set(cells)
    vertices = set()
    for x, y in cells:
        vertices.update(((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)))
    salient = reentrant = 0
    for vx, vy in vertices:
        around = sum(
            (vx + dx, vy + dy) in cells
            for dx in (-1, 0)
            for dy in (-1, 0)
        )
        if around == 1:
            salient += 1
        elif around == 3:
            reentrant += 1
    return salient, reentrant


def area_shoelace(word, start=(0, 0)):
    """Signed area enclosed by a closed word, positive when counterclockwise."""
    x, y = start
    twice = 0
    for ch in word:
        dx, dy = STEP[ch]
        nx, ny = x + dx, y + dy
        twice += x * ny - nx * y
        x, y = nx, ny
    if (x, y) != start:
        raise ValueError("open path has no area")
    return twice // 2


def _turn(a, b):
    d = (int(b) - int(a)) % 4
    if d == 1:
        return 1
    if d == 3:
        return -1
    return 0


def boundary_words(perimeter):
    """Yield every boundary word of the given length, one per fixed polyomino.

    Canonical form: counterclockwise, first edge along the bottom of the
    lowest-then-leftmost cell, so each word starts with 0, no vertex dips
    below the start row and none sits left of the start on that row.
    Backtracking search over simple closed paths with total turning +4.
    """
    n = perimeter
    if n < 4 or n % 2:
        return
    word = ["0"]
    seen = {(0, 0), (1, 0)}

    def rec(x, y, turns):
        depth = len(word)
        last = word[-1]
        for b in "0123":
            if (int(b) - int(last)) % 4 == 2:
                continue
            dx, dy = STEP[b]
            nx, ny = x + dx, y + dy
            if ny < 0 or (ny == 0 and nx < 0):
                continue
            t = turns + _turn(last, b)
            if depth == n - 1:
                if (nx, ny) == (0, 0) and t + _turn(b, "0") == 4:
                    yield "".join(word) + b
                continue
            if (nx, ny) in seen:
                continue
            # +4 total turning is out of reach if too few letters remain
            if t + (n - depth) < 4:
                continue
            word.append(b)
            seen.add((nx, ny))
            yield from rec(nx, ny, t)
            seen.remove((nx, ny))
            word.pop()

    yield from rec(1, 0, 0)
