"""Static DOT and SVG pictures of networks, strand diagrams and tilings.

Layout is cosmetic: labels sit clockwise on the unit circle starting at the
top, boundary vertices at the mean of their label points, interior vertices at
the barycentre of their neighbours.
"""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

SCALE = 200


def label_point(lab, n, radius=1.0):
    t = math.pi / 2 - 2 * math.pi * (lab - 1) / max(n, 1)
    return (radius * math.cos(t), radius * math.sin(t))


def layout(net, rounds=200):
    pos = {}
    for b in net.boundary:
        pts = [label_point(lab, net.n) for lab in b.labels]
        pos[b.id] = (sum(p[0] for p in pts) / len(pts), sum(p[1] for p in pts) / len(pts))
    for v in net.interior:
        pos[v] = (0.0, 0.0)
    nbrs = {v: [] for v in net.interior}
    for e in net.edges:
        if e.u in nbrs and e.u != e.v:
            nbrs[e.u].append(e.v)
        if e.v in nbrs and e.u != e.v:
            nbrs[e.v].append(e.u)
    for _ in range(rounds):
        for v, ns in nbrs.items():
            if ns:
                pos[v] = (sum(pos[w][0] for w in ns) / len(ns), sum(pos[w][1] for w in ns) / len(ns))
    return pos


def _xy(p):
    return f"{p[0] * SCALE:.2f}", f"{-p[1] * SCALE:.2f}"


def _svg(body, title):
    size = 1.3 * SCALE
    return (f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{-size} {-size} {2 * size} {2 * size}">\n'
            f"<title>{escape(title)}</title>\n"
            f'<circle cx="0" cy="0" r="{SCALE}" fill="none" stroke="#999" stroke-dasharray="4 4"/>\n'
            + "\n".join(body) + "\n</svg>\n")


def _quote(s):
    return '"' + str(s).replace('"', '\\"') + '"'


def network_dot(net, name="network"):
    pos = layout(net)
    lines = [f"graph {_quote(name)} {{", "  layout=neato;", "  node [shape=circle, fontsize=10];"]
    for v in net.vertex_ids:
        x, y = pos[v]
        labels = ",".join(map(str, net.labels_of(v)))
        shape = "doublecircle" if labels else "point"
        lines.append(f"  {_quote(v)} [label={_quote(labels)}, shape={shape}, pos=\"{x * 3:.3f},{y * 3:.3f}!\"];")
    for k, e in enumerate(net.edges):
        lines.append(f"  {_quote(e.u)} -- {_quote(e.v)} [label={_quote(e.c)}, tooltip=\"edge {k}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def network_svg(net, title="network"):
    pos = layout(net)
    body = []
    for e in net.edges:
        (x1, y1), (x2, y2) = _xy(pos[e.u]), _xy(pos[e.v])
        body.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black"/>')
    for v in net.vertex_ids:
        x, y = _xy(pos[v])
        body.append(f'<circle cx="{x}" cy="{y}" r="4" fill="black"/>')
    for lab in range(1, net.n + 1):
        x, y = _xy(label_point(lab, net.n, 1.12))
        body.append(f'<text x="{x}" y="{y}" text-anchor="middle" font-size="14">{lab}</text>')
    return _svg(body, title)


def _stub_point(stub, n):
    lab = (stub + 1) // 2
    shift = -0.35 if stub % 2 else 0.35
    return label_point(lab + shift, n)


def _midpoints(net):
    pos = layout(net)
    return [((pos[e.u][0] + pos[e.v][0]) / 2, (pos[e.u][1] + pos[e.v][1]) / 2) for e in net.edges]


def strands_dot(diagram, net, name="medial"):
    """Medial graph: one node per edge midpoint and per stub, joined along the strands."""
    lines = [f"graph {_quote(name)} {{", "  node [shape=point];"]
    for s in range(1, 2 * diagram.n + 1):
        lines.append(f"  s{s} [shape=plaintext, label=\"{s}\"];")
    for k in range(len(net.edges)):
        lines.append(f"  m{k} [xlabel=\"e{k}\"];")
    for strand in diagram.strands:
        nodes = [f"m{k}" for k in strand.edges]
        if strand.stubs:
            nodes = [f"s{strand.stubs[0]}"] + nodes + [f"s{strand.stubs[1]}"]
        else:
            nodes.append(nodes[0])
        for a, b in zip(nodes, nodes[1:]):
            lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def strands_svg(diagram, net, title="strands"):
    mids = _midpoints(net)
    body = []
    pos = layout(net)
    for e in net.edges:
        (x1, y1), (x2, y2) = _xy(pos[e.u]), _xy(pos[e.v])
        body.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#ccc"/>')
    for strand in diagram.strands:
        pts = [mids[k] for k in strand.edges]
        if strand.stubs:
            pts = [_stub_point(strand.stubs[0], diagram.n)] + pts + [_stub_point(strand.stubs[1], diagram.n)]
        else:
            pts.append(pts[0])
        path = " ".join(",".join(_xy(p)) for p in pts)
        body.append(f'<polyline points="{path}" fill="none" stroke="crimson" stroke-width="2"/>')
    for s in range(1, 2 * diagram.n + 1):
        x, y = _xy(_stub_point(s, diagram.n))
        body.append(f'<text x="{x}" y="{y}" font-size="10" fill="crimson">{s}</text>')
    return _svg(body, title)


def tiling_svg(tiling, n, title="tiling"):
    body = []
    for part in tiling.parts:
        def poly(region, fill):
            pts = " ".join(",".join(_xy(label_point(x, n))) for x in region)
            return f'<polygon points="{pts}" fill="{fill}" stroke="black"/>'
        body += [poly(r, "#bbb") for r in part.shaded]
        body += [poly(r, "white") for r in part.unshaded]
        for a, b in part.polygon.chords:
            (x1, y1), (x2, y2) = _xy(label_point(a, n)), _xy(label_point(b, n))
            width = 3 if (a, b) in part.bridges else 1
            body.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="{width}"/>')
    for lab in range(1, n + 1):
        x, y = _xy(label_point(lab, n, 1.12))
        body.append(f'<text x="{x}" y="{y}" text-anchor="middle" font-size="14">{lab}</text>')
    return _svg(body, title)
