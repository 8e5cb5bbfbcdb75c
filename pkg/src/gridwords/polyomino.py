"""Conversion between boundary words and the cell sets they enclose.

Cells are unit grid squares named by their lower-left corners.
"""

from collections import defaultdict

from .chain import STEPS, is_closed


def enclosed_cells(word, start=(0, 0)):
    """Set of cells enclosed by a closed path (even-odd rule).

    Scanline over the path's vertical edges: within each cell row, cells
    between an odd and the following even crossing are inside.
    """
    if not is_closed(word):
        raise ValueError("closed word required")
    x, y = start
    rows = defaultdict(list)
    for ch in word:
        if ch == "1":
            rows[y].append(x)
            y += 1
        elif ch == "3":
            y -= 1
            rows[y].append(x)
        elif ch == "0":
            x += 1
        else:
            x -= 1
    cells = set()
    for row, xs in rows.items():
        xs.sort()
        it = iter(xs)
        for a, b in zip(it, it):
            for cx in range(a, b):
                cells.add((cx, row))
    return cells


# Cells on either side of the unit edge leaving (x,y) in direction d.
def _side_cells(x, y, d):
    if d == 0:
        return (x, y), (x, y - 1)
    if d == 1:
        return (x - 1, y), (x, y)
    if d == 2:
        return (x - 1, y - 1), (x - 1, y)
    return (x, y - 1), (x - 1, y - 1)


def boundary_word(cells):
    """Counterclockwise contour of a polyomino, as (word, start corner).

    The start is the lower-left corner of the bottommost, then leftmost
    cell.  Cells must form a single 4-connected piece without holes; this
    is verified by refilling the traced contour.
    """
    if not cells:
        raise ValueError("empty cell set")
    cells = set(cells)
    sx, sy = min(cells, key=lambda c: (c[1], c[0]))
    x, y, d = sx, sy, 0
    out = []
    while True:
        left, right = _side_cells(x, y, d)
        if left not in cells:  # interior must stay on the left: overturned
            d = (d + 1) & 3
            continue
        if right in cells:  # interior on both sides: reentrant corner
            d = (d - 1) & 3
            continue
        out.append("0123"[d])
        dx, dy = STEPS[d]
        x += dx
        y += dy
        if x == sx and y == sy:
            break
    word = "".join(out)
    if enclosed_cells(word, (sx, sy)) != cells:
        raise ValueError("cells are not a simply connected polyomino")
    return word, (sx, sy)
