"""Node-and-chain rendering of motive decompositions.

One node per Tate class, positioned by twist (multiplicities stacked
vertically); one chain per summand through its nodes in twist order, with
the summand's label attached.  Layout is fully deterministic: fixed
spacing constants, node slots assigned in declaration order, chain arcs
alternating below/above the baseline by summand index.
"""

from .motives import MotiveExpr

# layout constants (pinned for golden-file tests)
PITCH = 40       # x distance between twist columns
X0 = 30          # x of twist 0
BASE_Y = 90      # y of the node baseline
STACK = 14       # vertical distance between stacked nodes
NODE_R = 4
ARC_MIN = 14
ARC_CAP = 60


def _layout(expr):
    """Assign a (degree, slot) position to every node and group nodes by
    summand, in declaration order."""
    if not isinstance(expr, MotiveExpr):
        raise TypeError("expected a MotiveExpr")
    prof = expr.profile()
    if prof.total() == 0:
        raise ValueError("empty expression: nothing to draw")
    top = prof.max_degree()
    for d in range(top + 1):
        if prof.counts.get(d, 0) == 0:
            raise ValueError(f"profile has a gap at degree {d}")
    used = {}
    chains = []
    for s in expr.summands:
        nodes = []
        for d in s.profile().as_multiset():
            slot = used.get(d, 0)
            used[d] = slot + 1
            nodes.append((d, slot))
        if nodes:
            chains.append((s.label(), nodes))
    return prof, chains


def render_ascii(expr):
    prof, chains = _layout(expr)
    top = prof.max_degree()
    width = max(3, len(str(top)) + 1)
    header = "twist:" + "".join(str(d).rjust(width) for d in range(top + 1))
    lines = [header]
    max_slot = max(prof.counts.values())
    for s in range(max_slot):
        row = "      "
        for d in range(top + 1):
            row += ("o" if prof.counts.get(d, 0) > s else " ").rjust(width)
        lines.append(row.rstrip())
    lines.append("chains:")
    label_w = max(len(label) for label, _ in chains)
    for label, nodes in chains:
        degs = "-".join(str(d) for d, _ in nodes)
        lines.append(f"  {label.ljust(label_w)}  {degs}")
    return "\n".join(lines) + "\n"


def _node_xy(d, slot):
    return X0 + d * PITCH, BASE_Y + slot * STACK


def render_svg(expr):
    prof, chains = _layout(expr)
    top = prof.max_degree()
    max_slot = max(prof.counts.values())
    width = 2 * X0 + top * PITCH
    height = BASE_Y + max_slot * STACK + ARC_CAP + 40
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
           f'height="{height}" viewBox="0 0 {width} {height}">']
    out.append('<g fill="none" stroke="black" stroke-width="1">')
    for idx, (label, nodes) in enumerate(chains):
        direction = 1 if idx % 2 == 0 else -1  # even chains below the baseline
        label_pos = None
        for (d1, s1), (d2, s2) in zip(nodes, nodes[1:]):
            x1, y1 = _node_xy(d1, s1)
            x2, y2 = _node_xy(d2, s2)
            if d1 == d2:
                out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
                label_pos = label_pos or (x1 + 6, (y1 + y2) // 2)
                continue
            mx = (x1 + x2) // 2
            h = ARC_MIN + min((x2 - x1) // 4, ARC_CAP)
            my = BASE_Y + direction * h
            out.append(f'<path d="M {x1} {y1} Q {mx} {my} {x2} {y2}"/>')
            if label_pos is None:
                label_pos = (mx, my + (10 if direction > 0 else -4))
        if label_pos is None:  # single-node chain
            x, y = _node_xy(*nodes[0])
            label_pos = (x + 6, y - 8)
        lx, ly = label_pos
        out.append(f'<text x="{lx}" y="{ly}" font-size="10" fill="black" '
                   f'stroke="none" text-anchor="middle">{label}</text>')
    out.append('</g>')
    out.append('<g fill="black">')
    for d in range(top + 1):
        for slot in range(prof.counts.get(d, 0)):
            x, y = _node_xy(d, slot)
            out.append(f'<circle cx="{x}" cy="{y}" r="{NODE_R}"/>')
    out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"


def render_diagram(expr, fmt="ascii"):
    """Render a decomposition; fmt is "ascii" or "svg"."""
    if fmt == "ascii":
        return render_ascii(expr)
    if fmt == "svg":
        return render_svg(expr)
    raise ValueError(f"unknown format {fmt!r}")
