"""Standalone SVG drawings of chain-code paths: grid dots, the path
polyline, a start marker, and optional per-edge labels and cut markers.
Meant for figure-sized words, not million-step paths.
"""

from xml.sax.saxutils import escape


def render_svg(path_trace, labels=None, cuts=(), scale=24, margin=1):
    """SVG text for a traced path.

    labels: optional sequence of per-edge strings (None entries skipped),
    aligned with the trace's edges.  cuts: vertex indices to ring, e.g.
    factorization cut positions.
    """
    vertices = path_trace.vertices
    xs = [v[0] for v in vertices]
    ys = [v[1] for v in vertices]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)

    def px(x):
        return (x - minx + margin) * scale

    def py(y):
        return (maxy - y + margin) * scale

    width = (maxx - minx + 2 * margin) * scale
    height = (maxy - miny + 2 * margin) * scale
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g fill="#bbbbbb">',
    ]
    for gx in range(minx, maxx + 1):
        for gy in range(miny, maxy + 1):
            parts.append(f'<circle cx="{px(gx)}" cy="{py(gy)}" r="1.5"/>')
    parts.append("</g>")
    if len(vertices) > 1:
        points = " ".join(f"{px(x)},{py(y)}" for x, y in vertices)
        parts.append(
            f'<polyline points="{points}" fill="none" stroke="#202020" stroke-width="2"/>'
        )
    for c in cuts:
        x, y = vertices[c % (len(vertices) - 1 or 1)]
        parts.append(
            f'<circle cx="{px(x)}" cy="{py(y)}" r="6" fill="none" '
            'stroke="#2060c0" stroke-width="2"/>'
        )
    sx, sy = vertices[0]
    parts.append(f'<circle cx="{px(sx)}" cy="{py(sy)}" r="4" fill="#c03030"/>')
    if labels:
        for k, text in enumerate(labels):
            if text is None or k + 1 >= len(vertices):
                continue
            ax, ay = vertices[k]
            bx, by = vertices[k + 1]
            lx = (px(ax) + px(bx)) / 2 + 4
            ly = (py(ay) + py(by)) / 2 - 4
            parts.append(
                f'<text x="{lx}" y="{ly}" font-size="{scale // 2}" '
                f'font-family="monospace">{escape(str(text))}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts)
