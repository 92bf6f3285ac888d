#!/usr/bin/env python3
"""Regenerates corpus/*.json from fan data.

Smooth toric Fano threefolds are given by the rays of their fans; the
anticanonical polytope is {x : <v, x> >= -1 for every ray v}. The orbifold
entry is given by the vertices of its canonical Fano polytope and stored as
twice its dual (the smallest lattice dilate).

Usage: tools/regen_corpus.py [output-dir]     (default: corpus/ next to tools/)
"""
import itertools
import json
import sys
from fractions import Fraction as F
from pathlib import Path

DB_CITATION = ("Graded Ring Database, smooth toric Fano 3-folds; fan regenerated from the "
               "classification of the 18 smooth toric Fano threefolds and fixed to the "
               "coordinates in which the published extremal affine functions are stated")

# name -> (rays, provenance)
FANS = {
    "CP3": ([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)], "explicit"),
    "B1": ([(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, -1), (-1, -1, -2)], "explicit"),
    "B2": ([(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, -1), (-1, -1, -1)], "explicit"),
    "B3": ([(1, 0, -1), (0, 1, 1), (0, -1, 0), (-1, 0, 0), (-1, -1, 0)], "database-derived"),
    "B4": ([(1, -1, 0), (0, 1, 0), (0, 0, 1), (0, 0, -1), (-1, 0, 0)], "database-derived"),
    "C1": ([(1, 0, -1), (0, 1, -1), (0, 0, 1), (0, 0, -1), (0, -1, 0), (-1, 0, 0)], "database-derived"),
    "C2": ([(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, -1), (-1, 0, -1), (-1, -1, -1)], "database-derived"),
    "C3": ([(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, -1), (0, -1, 0), (-1, 0, 0)], "database-derived"),
    "C4": ([(1, -1, 0), (0, 1, 0), (0, 0, 1), (0, 0, -1), (0, -1, 0), (-1, 0, 0)], "database-derived"),
    "C5": ([(1, -1, 0), (0, 1, 0), (0, 1, -1), (0, 0, 1), (0, -1, 0), (-1, 0, 0)], "database-derived"),
    "D1": ([(1, 0, 0), (1, -1, 0), (0, 1, 0), (0, 0, 1), (0, -1, 0), (-1, -1, -1)], "database-derived"),
    "D2": ([(1, 0, 0), (1, -1, 0), (0, 1, 0), (0, 0, 1), (0, -1, 0), (-1, 0, -1)], "database-derived"),
    "E1": ([(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, -1, 0), (-1, 0, 0), (-1, -1, 0), (-1, -1, -1)], "database-derived"),
    "E2": ([(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, -1, 0), (-1, 0, 0), (-1, 0, -1), (-1, -1, 0)], "database-derived"),
    "E3": ([(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, -1), (0, -1, 0), (-1, 0, 0), (-1, -1, 0)], "database-derived"),
    "E4": ([(1, 0, 0), (0, 1, 0), (0, 1, -1), (0, 0, 1), (0, -1, 0), (-1, 0, 0), (-1, -1, 0)], "database-derived"),
    "F1": ([(1, 0, 0), (0, 1, 0), (0, 1, -1), (0, 0, 1), (0, 0, -1), (0, -1, 1), (0, -1, 0), (-1, 0, 0)],
           "database-derived"),
    "F2": ([(1, 0, 0), (0, 1, 0), (0, 1, -1), (0, 0, 1), (0, 0, -1), (0, -1, 1), (0, -1, 0), (-1, 1, 0)],
           "database-derived"),
}

ORB_NAME = "ORB-530571"
ORB_DUAL = [(1, -1, -2), (0, 1, 3), (1, 1, 3), (1, 2, 4), (0, 1, 0), (-2, -2, -3)]
ORB_DUAL_OF_DUAL = [("-1/2", "5/2", "-1"), ("1", "-1", "0"), ("0", "2", "-1"), ("0", "1/2", "-1/2"),
                    ("-1", "0", "0"), ("-1", "-1", "1/2"), ("3/2", "-1", "0"), ("0", "-1", "1")]

# Published extremal affine functions: (a1, a2, a3, c)
THETA = {
    "CP3": (0, 0, 0, 0),
    "B1": (0, 0, "-620/349", "-240/349"),
    "B2": (0, 0, "-70/97", "-15/97"),
    "B3": ("-20/43", "-20/43", 0, "-5/43"),
    "B4": (0, 0, 0, 0),
    "C1": (0, 0, "-260/219", "-80/219"),
    "C2": ("-7600/17787", 0, "-17750/17787", "-4868/17787"),
    "C3": (0, 0, 0, 0),
    "C4": (0, "-6/11", 0, "-1/11"),
    "C5": (0, 0, 0, 0),
    "D1": ("99600/467581", "-627000/467581", 0, "-213939/467581"),
    "D2": ("219420/650251", "-318320/650251", 0, "-62565/650251"),
    "E1": ("-17020/19651", "-17020/19651", 0, "-6845/19651"),
    "E2": ("-2646160/2735927", "-982960/2735927", 0, "-692905/2735927"),
    "E3": ("-168/409", "-168/409", 0, "-32/409"),
    "E4": ("-34208/78995", "7936/78995", 0, "-24929/394975"),
    "F1": (0, 0, 0, 0),
    "F2": (0, "36/67", 0, "-5/67"),
}

# Published vertex sets of {theta >= 1}; absent means empty. The E1/E2 rows
# carry a sign correction on one x3 coordinate (see README, corpus notes).
NEGATIVE_PART = {
    "B1": [(4, -1, -1), ("39/10", -1, "-19/20"), (-1, -1, "-19/20"), (-1, "39/10", "-19/20"), (-1, -1, -1),
           (-1, 4, -1)],
    "C2": [("-981/1520", -1, -1), ("-981/1520", "4021/1520", -1), (-1, "10111/3550", "-3011/3550"), (-1, 3, -1),
           (-1, -1, "-3011/3550"), (-1, -1, -1)],
    "D1": [("48388/18165", "-12058/18165", -1), ("1363/2490", -1, "3617/2490"), (3, -1, -1), ("1363/2490", -1, -1)],
    "D2": [(2, "-1489/1730", -1), ("4288/2385", -1, "-1903/2385"), (2, -1, -1), ("4288/2385", -1, -1)],
    "E1": [("-103/185", -1, -1), ("-103/185", -1, "473/185"), (-1, "-103/185", -1), (-1, "-103/185", "473/185"),
           (-1, -1, 3), (-1, -1, -1)],
    "E2": [("-13897/15035", -1, -1), ("-13897/15035", -1, "28932/15035"), (-1, "-4447/5585", -1),
           (-1, "-4447/5585", 2), (-1, -1, 2), (-1, -1, -1)],
}
SIGN_CORRECTED = {"E1": ["-473/185"], "E2": ["-28932/15035"]}

# Published verdicts: K-stability and asymptotic Chow stability ("" = not determined)
VERDICTS = {
    "CP3": ("stable", "stable"), "B1": ("unstable", "unstable"), "B2": ("stable", ""), "B3": ("stable", ""),
    "B4": ("stable", "stable"), "C1": ("stable", ""), "C2": ("unstable", "unstable"), "C3": ("stable", "stable"),
    "C4": ("stable", ""), "C5": ("stable", "stable"), "D1": ("unstable", "unstable"),
    "D2": ("unstable", "unstable"), "E1": ("unstable", "unstable"), "E2": ("unstable", "unstable"),
    "E3": ("stable", ""), "E4": ("stable", "unstable"), "F1": ("stable", "stable"), "F2": ("stable", ""),
}

EXTRA_EXPECTED = {
    "B1": {
        "volume": "31/3", "moment_x3": "-4", "negative_volume": "7351/12000",
        "published_intermediates": {
            "negative_moment_x3": "-96197/4",
            "negative_moment_x3_squared": "1828273/5",
            "negative_integral": "1475918766336271/1461612000",
        },
    },
    "B2": {"volume": "28/3", "moment_x3": "-2"},
    "E4": {
        "ehrhart": ["1", "16/3", "10", "20/3"],
        "moments": ["-7/8", "5/12", "5/24"],
        "lattice_sum": ["-4", "2", "1"],
        "chow_coeffs_i1": ["-11134272/1816885", "1079424/363377", "539712/363377"],
        "chow_status_i1": "fails",
    },
}


def s(x):
    x = F(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def solve3(rows, rhs):
    m = [list(map(F, r)) + [F(b)] for r, b in zip(rows, rhs)]
    for c in range(3):
        p = next((r for r in range(c, 3) if m[r][c] != 0), None)
        if p is None:
            return None
        m[c], m[p] = m[p], m[c]
        for r in range(3):
            if r != c and m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return tuple(m[r][3] / m[r][r] for r in range(3))


def vertices(halfspaces):
    out = set()
    for trip in itertools.combinations(halfspaces, 3):
        x = solve3([h[0] for h in trip], [h[1] for h in trip])
        if x is None:
            continue
        if all(sum(F(a) * b for a, b in zip(n, x)) <= F(r) for n, r in halfspaces):
            out.add(x)
    return sorted(out)


def entry(name, halfspaces, provenance, citation, expected, extra):
    return {
        "name": name,
        "dim": 3,
        "provenance": provenance,
        "citation": citation,
        "halfspaces": [{"normal": list(n), "rhs": s(r)} for n, r in halfspaces],
        "vertices": [[s(c) for c in v] for v in vertices(halfspaces)],
        "expected": expected,
        "extra": extra,
    }


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "corpus"
    out_dir.mkdir(parents=True, exist_ok=True)
    names = []
    for name, (rays, prov) in FANS.items():
        hs = [(tuple(-c for c in r), 1) for r in rays]
        a1, a2, a3, c = THETA[name]
        k, chow = VERDICTS[name]
        expected = {
            "theta": {"a": [s(a1), s(a2), s(a3)], "c": s(c)},
            "negative_part": [[s(x) for x in v] for v in NEGATIVE_PART[name]] if name in NEGATIVE_PART else "empty",
            "k_published": k,
            "chow_published": chow,
        }
        if name in SIGN_CORRECTED:
            expected["negative_part_sign_corrected"] = SIGN_CORRECTED[name]
        expected.update(EXTRA_EXPECTED.get(name, {}))
        citation = ("fan printed explicitly in the reference computation" if prov == "explicit" else DB_CITATION)
        extra = {"fan_rays": [list(r) for r in rays]}
        (out_dir / f"{name}.json").write_text(json.dumps(entry(name, hs, prov, citation, expected, extra), indent=2) + "\n")
        names.append(name)

    hs = [(tuple(-c for c in a), 2) for a in ORB_DUAL]
    expected = {
        "ehrhart": ["1", "3", "9", "12"],
        "volume": "12",
        "moments": ["0", "0", "0"],
        "boundary_moments": ["0", "0", "0"],
        "lattice_sums": {"1": ["0", "1", "-1"], "2": ["0", "3", "-3"], "3": ["0", "6", "-6"]},
        "futaki_vanishes": True,
        "chow_status_i1": "fails",
        "chow_published": "unstable",
    }
    extra = {
        "canonical_fano_vertices": [list(a) for a in ORB_DUAL],
        "dual_vertices": [list(v) for v in ORB_DUAL_OF_DUAL],
        "dilation": 2,
    }
    citation = ("Graded Ring Database, toric canonical Fano 3-folds, ID 530571; stored as twice the "
                "dual of the listed canonical Fano polytope")
    (out_dir / f"{ORB_NAME}.json").write_text(
        json.dumps(entry(ORB_NAME, hs, "explicit", citation, expected, extra), indent=2) + "\n")
    names.append(ORB_NAME)
    (out_dir / "index.json").write_text(json.dumps({"entries": names}, indent=2) + "\n")


if __name__ == "__main__":
    main()
