#!/usr/bin/env python3
"""Writes the balanced-graph fixtures that were drawn by hand as coordinates.

Each drawing lists black and white vertex positions and straight edges. The
rotation at every vertex is read off by angle, and the unbounded face is the
one whose boundary walk has negative signed area.
"""

import argparse
import json
import math
import pathlib


def grid(xs, ys):
    return [(x, y) for x in xs for y in ys]


K11N157_BLACK = [(0, 0), (2, 0), (4, 0), (1, 1), (3, 1), (0, 2), (2, 2), (4, 2), (1, 3), (3, 3), (2, 5)]
K11N157_VERTICES = grid(range(5), range(4)) + [(2, 4), (2, 5)]
K11N157_EDGES = (
    [((x, y), (x + 1, y)) for y in range(4) for x in range(4)]
    + [((x, y), (x, y + 1)) for x in range(5) for y in range(3)]
    + [((0, 3), (2, 5)), ((2, 5), (4, 3)), ((2, 4), (2, 5)), ((1, 3), (2, 4)), ((2, 4), (3, 3))]
)

ABE6_BLACK = [(-1, 0), (1, 0), (0.33, 0.66), (-0.33, 1.33), (-1, 2), (1, 2)]
ABE6_WHITE = [(0.33, 0), (-1, 0.66), (1, 0.66), (0.33, 1.33), (-0.66, 1.66), (0.33, 2)]
ABE6_EDGES = [
    ((-1, 0), (0.33, 0)), ((0.33, 0), (1, 0)),
    ((1, 0), (1, 0.66)), ((1, 0.66), (1, 2)),
    ((1, 2), (0.33, 1.33)), ((0.33, 1.33), (-0.33, 1.33)),
    ((-0.33, 1.33), (-0.66, 1.66)), ((-0.66, 1.66), (-1, 2)),
    ((-1, 2), (-1, 0.66)), ((-1, 0.66), (-1, 0)),
    ((0.33, 0), (0.33, 0.66)), ((0.33, 0.66), (0.33, 1.33)),
    ((1, 0.66), (0.33, 0.66)), ((0.33, 0.66), (-1, 0.66)),
    ((-1, 0.66), (-0.33, 1.33)), ((-0.33, 1.33), (0.33, 2)),
    ((-1, 2), (0.33, 2)), ((0.33, 2), (1, 2)),
]


def build(label, vertices, black, edges):
    index = {p: i for i, p in enumerate(vertices)}
    black = set(black)
    edge_list = []
    for a, b in edges:
        u, v = index[a], index[b]
        if (a in black) == (b in black):
            raise SystemExit(f"{label}: edge {a}-{b} is not bichromatic")
        edge_list.append((u, v) if a in black else (v, u))

    rotation = [[] for _ in vertices]
    for e, (u, v) in enumerate(edge_list):
        rotation[u].append((e, v))
        rotation[v].append((e, u))
    for w, darts in enumerate(rotation):
        x0, y0 = vertices[w]
        darts.sort(key=lambda item: math.atan2(vertices[item[1]][1] - y0, vertices[item[1]][0] - x0))

    # Face tracing: the face on the left of dart u->v continues with the
    # clockwise neighbour of v->u around v.
    def next_cw(vertex, edge):
        ring = rotation[vertex]
        k = next(i for i, (e, _) in enumerate(ring) if e == edge)
        return ring[(k - 1) % len(ring)]

    seen = set()
    outer = None
    faces = 0
    for e, (u, v) in enumerate(edge_list):
        for start in ((e, u), (e, v)):
            if start in seen:
                continue
            faces += 1
            area = 0.0
            dart = start
            length = 0
            while dart not in seen:
                seen.add(dart)
                edge, tail = dart
                head = edge_list[edge][1] if edge_list[edge][0] == tail else edge_list[edge][0]
                (x1, y1), (x2, y2) = vertices[tail], vertices[head]
                area += x1 * y2 - x2 * y1
                length += 1
                nxt_edge, _ = next_cw(head, edge)
                dart = (nxt_edge, head)
            if area < 0:
                outer = start
            elif length != 4:
                raise SystemExit(f"{label}: bounded face of length {length}")
    if len(vertices) - len(edge_list) + faces != 2:
        raise SystemExit(f"{label}: drawing is not plane")

    return {
        "label": label,
        "black": [i for i, p in enumerate(vertices) if p in black],
        "white": [i for i, p in enumerate(vertices) if p not in black],
        "edges": [list(e) for e in edge_list],
        "embedding": [[e for e, _ in darts] for darts in rotation],
        "outer": [outer[0], outer[1]],
        "positions": [[float(x), float(y)] for x, y in vertices],
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "fixtures"))
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    docs = {
        "k11n157": build("k11n157", K11N157_VERTICES, K11N157_BLACK, K11N157_EDGES),
        "abe6": build("abe6", ABE6_BLACK + ABE6_WHITE, ABE6_BLACK, ABE6_EDGES),
    }
    for name, doc in docs.items():
        path = out / f"{name}.gamma.json"
        body = ",\n".join(f" {json.dumps(k)}: {json.dumps(v)}" for k, v in doc.items())
        path.write_text("{\n" + body + "\n}\n")
        print(f"wrote {path}: {len(doc['black'])} black, {len(doc['white'])} white, {len(doc['edges'])} edges")


if __name__ == "__main__":
    main()
