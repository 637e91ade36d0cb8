#!/usr/bin/env python3
"""Regenerates the curated complexes under data/complexes.

Run from the repository root: python3 tools/gen_data.py
The output is deterministic; the files are committed and read by the library.
"""
import itertools
import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "complexes"


def closure(tops):
    faces = set()
    for t in tops:
        for r in range(1, len(t) + 1):
            faces.update(itertools.combinations(t, r))
    return faces


def maximal(simplices):
    simplices = set(tuple(s) for s in simplices)
    covered = set()
    for s in simplices:
        for r in range(1, len(s)):
            covered.update(itertools.combinations(s, r))
    return sorted(sorted(s) for s in simplices - covered)


def boundary_faces(tops):
    """Codimension-one faces lying in exactly one top simplex."""
    count = {}
    for t in tops:
        for f in itertools.combinations(t, len(t) - 1):
            count[f] = count.get(f, 0) + 1
    return sorted(list(f) for f, c in count.items() if c == 1)


def staircase(sa, sb, nb):
    tops = []
    for s in sa:
        for t in sb:
            p, q = len(s) - 1, len(t) - 1
            for ups in itertools.combinations(range(p + q), q):
                i = j = 0
                simplex = [s[0] * nb + t[0]]
                for step in range(p + q):
                    if step in ups:
                        j += 1
                    else:
                        i += 1
                    simplex.append(s[i] * nb + t[j])
                tops.append(simplex)
    return sorted(tops)


def subdivide(nverts, tops, subs):
    """Barycentric subdivision with vertex ids ordered by (dimension, lexicographic)."""
    faces = sorted(closure(tops), key=lambda s: (len(s), s))
    ident = {s: k for k, s in enumerate(faces)}

    def flags(simplex):
        out = []
        for order in itertools.permutations(simplex):
            out.append(sorted(ident[tuple(sorted(order[: k + 1]))] for k in range(len(order))))
        return out

    new_tops = [f for t in maximal(tops) for f in flags(tuple(t))]
    new_subs = {name: [f for t in maximal(closure(st)) for f in flags(tuple(t))] for name, st in subs.items()}
    return len(faces), sorted(new_tops), new_subs


def write(name, nverts, tops, subs=None, boundary=None, filtration=None, notes=None):
    doc = {"vertices": nverts, "top_simplices": maximal(closure(tops))}
    if notes:
        doc = {"notes": notes, **doc}
    if subs:
        doc["subcomplexes"] = {k: maximal(closure(v)) if v else [] for k, v in sorted(subs.items())}
    if boundary:
        doc["boundary"] = boundary
    if filtration:
        doc["filtration"] = {"indices": {str(k): v for k, v in sorted(filtration.items())}}
    OUT.mkdir(parents=True, exist_ok=True)
    with open(OUT / f"{name}.json", "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=False)
        fh.write("\n")


def main():
    simplex = lambda n: [list(range(n + 1))]
    sphere = lambda n: [list(c) for c in itertools.combinations(range(n + 2), n + 1)]

    write("point", 1, [[0]])
    write("circle", 3, sphere(1))
    write("sphere2", 4, sphere(2), notes="boundary of the 3-simplex")
    torus = sorted({tuple(sorted(((i) % 7, (i + a) % 7, (i + 3) % 7))) for i in range(7) for a in (1, 2)})
    torus = [list(t) for t in torus]
    write("torus", 7, torus,
          notes="minimal 7-vertex torus; triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7")
    write("torus_alt", 7, torus, subs={"extra": [[0]]}, filtration={0: "extra"},
          notes="7-vertex torus with a smooth vertex declared as X_0")
    write("sphere3", 5, sphere(3), notes="boundary of the 4-simplex")
    s1 = sphere(1)
    s2 = sphere(2)
    write("s1xs2", 3 * 4, staircase(s1, s2, 4), notes="staircase product of a 3-cycle and the boundary of a 3-simplex")

    # 4-balls: cone over the boundary of the 4-simplex (apex 5) and the subdivided 4-simplex.
    cone_tops = [t + [5] for t in sphere(3)]
    write("ball4", 6, cone_tops, subs={"boundary": sphere(3), "jk": []}, boundary="boundary",
          notes="cone over the boundary of a 4-simplex")
    nv, sd_tops, sd_subs = subdivide(5, simplex(4), {"boundary": boundary_faces(simplex(4))})
    sd_subs["jk"] = []
    write("ball4_sd", nv, sd_tops, subs=sd_subs, boundary="boundary",
          notes="barycentric subdivision of the 4-simplex")

    # Pinched sphere Y: rings a0..a2 (1..3) and b0..b2 (4..6) joined by a strip, both coned to P = 0.
    a = [1, 2, 3]
    b = [4, 5, 6]
    y_tops = []
    for i in range(3):
        j = (i + 1) % 3
        y_tops.append(sorted([0, a[i], a[j]]))
        y_tops.append(sorted([0, b[i], b[j]]))
        y_tops.append(sorted([a[i], a[j], b[i]]))
        y_tops.append(sorted([a[j], b[i], b[j]]))
    write("pinched_torus", 7, y_tops, subs={"pinch": [[0]], "jk": [[0]]}, filtration={0: "pinch"},
          notes="sphere with two points identified; vertex 0 is the pinch")
    # Once subdivided, vertex 1 is no longer adjacent to the pinch, so {0, 1} spans a 0-dimensional stratum.
    nv, ys_tops, _ = subdivide(7, y_tops, {})
    write("pinched_torus_sd", nv, ys_tops, subs={"pinch": [[0]]}, filtration={0: "pinch"},
          notes="subdivided pinched torus")
    write("pinched_torus_sd_alt", nv, ys_tops, subs={"pinch": [[0], [1]]}, filtration={0: "pinch"},
          notes="subdivided pinched torus with the smooth vertex 1 added to X_0")

    # Disk D: cone with apex 0 over the 3-cycle 1,2,3.
    d_tops = [[0, 1, 2], [0, 1, 3], [0, 2, 3]]
    d_bd = [[1, 2], [1, 3], [2, 3]]

    # D x Y with singular stratum D x {P}.
    prod = staircase(d_tops, y_tops, 7)
    sing = staircase(d_tops, [[0]], 7)
    bd = staircase(d_bd, y_tops, 7)
    write("disk_x_pinched", 4 * 7, prod, subs={"singular": sing, "jk": sing, "boundary": bd}, boundary="boundary",
          filtration={2: "singular"},
          notes="disk times the pinched torus; the stratum disk x {pinch} models the locus over J_F")
    # Same complex with the singular stratum thickened to D x star(P): invalid as a 2-stratum.
    star = [t for t in y_tops if 0 in t]
    write("disk_x_pinched_thick", 4 * 7, prod, subs={"singular": staircase(d_tops, star, 7), "boundary": bd},
          boundary="boundary", notes="mutated control: singular set thickened to disk x star(pinch)")

    # D x D with the unknotted stratum D x {0}: a 4-ball with a fake 2-stratum.
    dd = staircase(d_tops, d_tops, 4)
    fake = staircase(d_tops, [[0]], 4)
    dd_bd = staircase(d_bd, d_tops, 4) + staircase(d_tops, d_bd, 4)
    write("disk_x_disk", 16, dd, subs={"stratum": fake, "jk": fake, "boundary": dd_bd}, boundary="boundary",
          filtration={2: "stratum"}, notes="4-ball as disk x disk with the fake stratum disk x {centre}")

    # Suspension of the torus with both cone points as X_0 (apexes 7 and 8).
    st = [t + [7] for t in torus] + [t + [8] for t in torus]
    write("suspension_torus", 9, st, subs={"cones": [[7], [8]]}, filtration={0: "cones"},
          notes="suspension of the 7-vertex torus; X_0 is the pair of suspension points")
    nv, sst, _ = subdivide(9, st, {})
    write("suspension_torus_sd", nv, sst, subs={"cones": [[7], [8]]}, filtration={0: "cones"},
          notes="subdivided suspension of the torus")
    write("suspension_torus_sd_alt", nv, sst, subs={"cones": [[0], [7], [8]]}, filtration={0: "cones"},
          notes="subdivided suspension of the torus with the smooth vertex 0 added to X_0")

    # Cone over the boundary of a square with the apex as X_0.
    sq = [[0, 1], [1, 2], [2, 3], [0, 3]]
    write("cone_square", 5, [e + [4] for e in sq], subs={"apex": [[4]]}, filtration={0: "apex"},
          notes="cone over a 4-cycle; apex 4")

    # Non-pseudomanifold: three triangles on the edge [0,1].
    write("three_pages", 5, [[0, 1, 2], [0, 1, 3], [0, 1, 4]])


if __name__ == "__main__":
    main()
