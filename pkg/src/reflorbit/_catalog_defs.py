"""Primitive-group generator matrices for the catalog data files.

Each group is given by explicit reflection tuples known to generate it, over
the smallest cyclotomic field whose ring of integers contains the entries.
``python -m reflorbit._catalog_defs <outdir>`` rewrites the ``data/*.grp``
files; load-time validation (order, degrees, reflection classes, center)
guards these literals against transcription errors.
"""

from __future__ import annotations

import sys
from pathlib import Path

from reflorbit.cyclo import make_field
from reflorbit.linalg import Mat
from reflorbit.refgroup import GroupCatalogEntry, entry_to_text


def _mats(field, rows_list, subs):
    out = []
    for rows in rows_list:
        out.append(
            Mat.from_rows(
                field,
                [[subs[e] if isinstance(e, str) else e for e in row] for row in rows],
            )
        )
    return out


def build_entries():
    entries = []

    # G23 = W(H3): q = zeta_5, t = q^3 + q^2
    f5 = make_field(5)
    q = f5.root(1)
    t = q**3 + q**2
    g23 = _mats(
        f5,
        [
            [[1, 0, 0], [0, 1, 1], [0, 0, -1]],
            [[0, -1, 0], [-1, 0, 0], ["1-t", "1-t", 1]],
            [[1, 0, 0], ["t", -1, -1], [0, 0, 1]],
        ],
        {"t": t, "1-t": 1 - t},
    )
    entries.append(
        GroupCatalogEntry(
            id="G23", rank=3, order=120, degrees=[2, 6, 10], generators=g23,
            base_field=f5, reflection_classes=1, center_order=2,
        )
    )

    # G24 = W(J3(4)): z = zeta_7, s = z^4 + z^2 + z
    f7 = make_field(7)
    z7 = f7.root(1)
    s = z7**4 + z7**2 + z7
    g24 = _mats(
        f7,
        [
            [[1, "-s", "-s"], [0, 0, -1], [0, -1, 0]],
            [[1, 1, 0], [0, -1, 0], [0, 1, 1]],
            [[-1, 0, 0], [1, 1, 0], ["s", 0, 1]],
        ],
        {"s": s, "-s": -s},
    )
    entries.append(
        GroupCatalogEntry(
            id="G24", rank=3, order=336, degrees=[4, 6, 14], generators=g24,
            base_field=f7, reflection_classes=1, center_order=2,
        )
    )

    # G25 = W(L3): w = zeta_3
    f3 = make_field(3)
    w = f3.root(1)
    w2 = w * w
    g25 = _mats(
        f3,
        [
            [[1, 0, 0], [0, 1, "w2"], [0, 0, "w"]],
            [["w", 0, 0], ["w2", 1, 0], [0, 0, 1]],
            [[1, "w", 0], [0, "w2", 0], [0, "w", 1]],
        ],
        {"w": w, "w2": w2},
    )
    entries.append(
        GroupCatalogEntry(
            id="G25", rank=3, order=648, degrees=[6, 9, 12], generators=g25,
            base_field=f3, reflection_classes=2, center_order=3,
            generation_strategy="irreducible",
        )
    )

    # G26 = W(M3): h = zeta_6 = 1 + zeta_3
    h = 1 + w
    g26 = _mats(
        f3,
        [
            [[1, 0, 0], [-1, "2h", "h"], ["2-h", "-3h", "-h"]],
            [[0, "h", 0], [1, "1-h", 0], ["h-2", "h+1", 1]],
            [[1, 0, 0], [0, 1, 1], [0, 0, -1]],
        ],
        {
            "h": h, "2h": 2 * h, "-h": -h, "-3h": -3 * h,
            "2-h": 2 - h, "1-h": 1 - h, "h-2": h - 2, "h+1": h + 1,
        },
    )
    entries.append(
        GroupCatalogEntry(
            id="G26", rank=3, order=1296, degrees=[6, 12, 18], generators=g26,
            base_field=f3, reflection_classes=3, center_order=6,
        )
    )

    # G27 = W(J3(5)): y = zeta_30; v = y^8 + y^2, u = -y^5 - y^4 + y,
    # a = y^2 + y^3 - y^7
    f30 = make_field(30)
    y = f30.root(1)
    v = y**8 + y**2
    u = -(y**5) - y**4 + y
    a = y**2 + y**3 - y**7
    g27 = _mats(
        f30,
        [
            [[-1, "u", "u"], ["v+1", "-u", "-u-1"], ["-v-1", "u+1", "u+2"]],
            [["a", 0, "y10"], ["1-v", 1, "v+1"], ["v", 0, "-a"]],
            [[1, 1, 0], [0, -1, 0], [0, 1, 1]],
        ],
        {
            "a": a, "-a": -a, "v": v, "1-v": 1 - v, "v+1": v + 1,
            "-v-1": -v - 1, "y10": y**10, "u": u, "-u": -u,
            "-u-1": -u - 1, "u+1": u + 1, "u+2": u + 2,
        },
    )
    entries.append(
        GroupCatalogEntry(
            id="G27", rank=3, order=2160, degrees=[6, 12, 30], generators=g27,
            base_field=f30, reflection_classes=1, center_order=6,
        )
    )

    # G28 = W(F4): rational entries
    f1 = make_field(1)
    g28 = _mats(
        f1,
        [
            [[2, 3, 4, 2], [-1, -2, -4, -2], [0, 0, 1, 0], [0, 0, 0, 1]],
            [[1, 2, 2, 0], [0, -1, -2, 0], [0, 0, 1, 0], [0, 1, 1, 1]],
            [[-1, -2, -4, -2], [2, 3, 4, 2], [-1, -1, -1, -1], [0, 0, 0, 1]],
            [[-1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        ],
        {},
    )
    entries.append(
        GroupCatalogEntry(
            id="G28", rank=4, order=1152, degrees=[2, 6, 8, 12], generators=g28,
            base_field=f1, reflection_classes=2, center_order=2,
        )
    )

    # G30 = W(H4): u = zeta_5^2 + zeta_5^3 (= -(1+sqrt5)/2)
    uu = f5.root(2) + f5.root(3)
    sub30 = {
        "u": uu, "u-1": uu - 1, "1-u": 1 - uu, "-u": -uu,
        "2u-1": 2 * uu - 1, "1-2u": 1 - 2 * uu, "2u-2": 2 * uu - 2,
        "2-2u": 2 - 2 * uu, "2u": 2 * uu, "-2u": -2 * uu, "2-u": 2 - uu,
    }
    g30 = _mats(
        f5,
        [
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, -1]],
            [
                [1, 0, 0, 0],
                ["2u-1", "2u-1", "u-1", -1],
                ["1-2u", "2-2u", "2-u", 1],
                ["1-u", "-2u", "-u", "-u"],
            ],
            [
                ["u", "u-1", "u-1", -1],
                ["1-2u", "2-2u", "1-2u", "-u"],
                ["2u-1", "2u-1", "2u", "u"],
                ["-u", "-u", "-u", "-u"],
            ],
            [
                ["1-u", "1-u", "1-u", "-u"],
                [0, 1, 0, 0],
                ["u", "u-1", "u", "u"],
                [-1, "u", "u", 0],
            ],
        ],
        sub30,
    )
    entries.append(
        GroupCatalogEntry(
            id="G30", rank=4, order=14400, degrees=[2, 12, 20, 30], generators=g30,
            base_field=f5, reflection_classes=1, center_order=2,
        )
    )

    # G32 = W(L4): w = zeta_3
    sub32 = {
        "w": w, "w2": w2, "-w": -w, "-w2": -w2, "w2-w": w2 - w,
        "1-w": 1 - w, "w-1": w - 1, "2w2": 2 * w2, "w2+w": w2 + w,
    }
    g32 = _mats(
        f3,
        [
            [
                [1, 0, 0, 0],
                [0, 1, 0, 0],
                [-1, "w2-w", -1, "w2"],
                ["w2", "1-w", "2w2", "1-w"],
            ],
            [
                [0, "w2", "w-1", "w2"],
                ["-w", 2, "w2-w", 1],
                ["w2", "-w", "w2", "-w"],
                [0, 0, 0, 1],
            ],
            [
                [1, "w", 1, "-w2"],
                [0, 0, "-w2", "w"],
                [0, 0, 1, 0],
                [0, "-w", -1, "-w"],
            ],
            [[1, "w", 0, 0], [0, "w2", 0, 0], [0, "w", 1, 0], [0, 0, 0, 1]],
        ],
        sub32,
    )
    entries.append(
        GroupCatalogEntry(
            id="G32", rank=4, order=155520, degrees=[12, 18, 24, 30],
            generators=g32, base_field=f3, reflection_classes=2, center_order=6,
            generation_strategy="irreducible",
        )
    )
    return entries


def write_files(outdir):
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for entry in build_entries():
        (outdir / f"{entry.id}.grp").write_text(entry_to_text(entry))
        print(f"wrote {entry.id}.grp")


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent / "data"
    write_files(target)
