"""Published convolution tables transcribed as fixtures.

Each row records the 2x2 tuple after middle convolution, the character used
to pass into SL2, and the published orbit size / pre-character group order /
SL2 subgroup label.  Expressions are evaluated over the stated conductor
(F is Fraction, z/q/w/i are roots of unity, named abbreviations as listed).

orbit = None means the source prints "-" (too large to enumerate); orbit
given as ("lb", n) asserts a lower bound under a cap.
"""

from dataclasses import dataclass
from fractions import Fraction as F

from reflorbit.cyclo import make_field
from reflorbit.linalg import Mat
from reflorbit.midconv import MatTuple


@dataclass
class FixtureRow:
    group: str
    T: int
    tlabel: str
    type_key: tuple  # residues of the inverse product, sorted
    xi: F
    mats: list  # empty when pipeline_mats: matrices supplied by the caller
    char: list
    orbit: object
    s_size: int
    sl2: str  # "<order,index>", "0" (infinite), or "" (unchecked)
    pipeline_mats: bool = False

    def induced(self, mats=None):
        """[a_i M_i ..., a_{T+1} (M_1...M_T)^-1] over the compositum.

        For rows whose printed matrices carry extraction damage the caller
        passes a convolution output of the same class (``mats``); the printed
        character transfers verbatim (constant determinant pattern) and the
        final scalar is re-derived from the product condition.
        """
        source = list(mats) if mats is not None else list(self.mats)
        tup = MatTuple(source)
        full = list(tup.entries) + [tup.inverse_product()]
        char = list(self.char)
        if mats is not None:
            out = [M.scale(a) for M, a in zip(full[:-1], char[:-1])]
            partial = MatTuple(out)
            last = partial.inverse_product()
            f = last.field
            assert last.det() == f.one()
            ind = MatTuple(out + [last])
        else:
            out = [M.scale(a) for M, a in zip(full, char)]
            ind = MatTuple(out)
        f = ind.field
        for M in ind:
            assert M.det() == f.one(), f"{self.group} {self.tlabel} xi={self.xi}"
        assert ind.product().is_identity()
        return ind


def _env(conductor):
    f = make_field(conductor)
    env = {
        "F": F,
        "half": F(1, 2),
        "third": F(1, 3),
        "quarter": F(1, 4),
        "__r": f.root,
    }
    return f, env


def _rows(group, T, tlabel, type_key, conductor, defs, rows):
    f, env = _env(conductor)
    for name, expr in defs:
        env[name] = eval(expr, {}, env)  # noqa: S307 - fixture literals
    out = []
    for xi, mats_src, char_src, orbit, s_size, sl2 in rows:
        pipeline = mats_src == "PIPELINE"
        mats = (
            []
            if pipeline
            else [
                Mat.from_rows(f, [[eval(e, {}, env) for e in row] for row in m])
                for m in mats_src
            ]
        )
        char = [eval(e, {}, env) for e in char_src]
        out.append(
            FixtureRow(
                group, T, tlabel, tuple(sorted(type_key)), F(xi), mats, char,
                orbit, s_size, sl2, pipeline_mats=pipeline,
            )
        )
    return out


def build_rows():
    rows = []

    # ---------------- G23 nice 3-tuples (q = zeta_5; z = zeta_30) ----------------
    g23 = _rows(
        "G23", 3, "A", (F(1, 2), F(1, 10), F(9, 10)), 10,
        [("q", "__r(2)")],
        [
            ("1/2",
             [[["1", "0"], ["-q**3-q**2+1", "1"]],
              [["1", "-1"], ["0", "1"]],
              [["1", "0"], ["1", "1"]]],
             ["1", "1", "1", "1"], 40, 0, "0"),
            ("1/10",
             [[["q**3", "0"], ["-q**3", "1"]],
              [["q**3", "-1"], ["0", "1"]],
              [["1", "0"], ["q**3", "q**3"]]],
             ["q", "q", "q", "q**2"], 10, 600, "<120,5>"),
            ("9/10",
             [[["q**2", "0"], ["-q**2", "1"]],
              [["q**2", "-1"], ["0", "1"]],
              [["1", "0"], ["q**2", "q**2"]]],
             ["q**4", "q**4", "q**4", "q**3"], 10, 600, "<120,5>"),
        ],
    )
    rows += g23
    rows += _rows(
        "G23", 3, "B", (F(1, 2), F(3, 10), F(7, 10)), 10,
        [("q", "__r(2)")],
        [
            ("1/2",
             [[["1", "0"], ["1", "1"]],
              [["1", "-1"], ["0", "1"]],
              [["1", "0"], ["q**3+q**2+2", "1"]]],
             ["1", "1", "1", "1"], 40, 0, "0"),
            ("3/10",
             [[["q**4", "0"], ["-q**4+q**3+1", "1"]],
              [["q**4", "-1"], ["0", "1"]],
              [["1", "0"], ["q**4-q**3-1", "q**4"]]],
             ["q**3", "q**3", "q**3", "q"], 10, 600, "<120,5>"),
            ("7/10",
             [[["q", "0"], ["q**2-q+1", "1"]],
              [["q", "-1"], ["0", "1"]],
              [["1", "0"], ["-q**2+q-1", "q"]]],
             ["q**2", "q**2", "q**2", "q**4"], 10, 600, "<120,5>"),
        ],
    )
    rows += _rows(
        "G23", 3, "C", (F(1, 2), F(1, 6), F(5, 6)), 30,
        [("z", "__r(1)"), ("u", "z**7-z**3-z**2+1"), ("v", "-z**4+z")],
        [
            ("1/2",
             [[["u-1", "3*u-5"], ["1", "-u+3"]],
              [["1", "-1"], ["0", "1"]],
              [["1", "0"], ["u+1", "1"]]],
             ["1", "1", "1", "1"], 72, 0, "0"),
            ("1/6",
             [[["-u-v-z**10", "-z**5"], ["u+2*v+z**10", "u+v"]],
              [["-z**5", "-1"], ["0", "1"]],
              [["1", "0"], ["-u-v-z**5", "-z**5"]]],
             ["-z**5", "-z**5", "-z**5", "1"], 18, 360, "<120,5>"),
            ("5/6", "PIPELINE",
             ["z**10", "z**10", "z**10", "1"], 18, 360, "<120,5>"),
        ],
    )

    # ---------------- G24 nice 3-tuples (z = zeta_7) ----------------
    rows += _rows(
        "G24", 3, "A", (F(1, 14), F(9, 14), F(11, 14)), 14,
        [("z", "__r(2)")],
        [
            ("1/14",
             [[["z**5+z**4+z+1", "-z**5+z**4+z**3+1"], ["-z**2", "-z**5-z"]],
              [["z**4", "1"], ["0", "1"]],
              [["1", "0"], ["-z**4", "z**4"]]],
             ["z**5", "z**5", "z**5", "z**6"], 28, 0, "0"),
            ("9/14", "PIPELINE",
             ["z**3", "z**3", "z**3", "z**5"], 28, 0, "0"),
            ("11/14",
             [[["-z**5-z**3-z", "-z**6+z**5+z**2+1"], ["-z", "-z**6-z**4"]],
              [["z**2", "1"], ["0", "1"]],
              [["1", "0"], ["-z**2", "z**2"]]],
             ["-z**6", "-z**6", "-z**6", "-z**3"], 28, 0, "0"),
        ],
    )

    # ---------------- G25 nice 3-tuples (w = zeta_3, z = zeta_36, q = zeta_72) ---
    rows += _rows(
        "G25", 3, "A", (F(5, 6), F(1, 6), F(2, 3)), 12,
        [("w", "__r(4)"), ("i", "__r(3)")],
        [
            ("5/6",
             [[["1", "-w"], ["0", "-w**2"]],
              [["-w**2", "w"], ["0", "1"]],
              [["1", "0"], ["-1", "-1"]]],
             ["i*w**2", "i*w**2", "i", "i*w**2"], 12, 72, "<24,4>"),
            ("1/6",
             [[["1", "-w"], ["0", "-1"]],
              [["-1", "w"], ["0", "1"]],
              [["1", "0"], ["-w", "-w"]]],
             ["i", "i", "i*w", "i*w**2"], 12, 72, "<24,4>"),
            ("2/3",
             [[["1", "w"], ["0", "1"]],
              [["1", "w"], ["0", "1"]],
              [["1", "0"], ["w", "w"]]],
             ["1", "1", "w", "w**2"], 24, 0, "0"),
        ],
    )
    rows += _rows(
        "G25", 3, "B", (F(1, 9), F(7, 9), F(4, 9)), 36,
        [("z", "__r(1)"), ("u", "z**10-z**4")],
        [
            ("1/9",
             [[["-z**8", "z**14+z**6"], ["-z**10-z**2", "z**16+z**8+1"]],
              [["-z**10", "z**6"], ["0", "1"]],
              [["1", "0"], ["z**4", "-z**10"]]],
             ["-z**10", "z**4", "z**4", "1"], 36, 0, "0"),
            ("7/9",
             [[["z**2", "-z**8+z**6"], ["z**16-z**14", "z**4-z**2+1"]],
              [["u", "z**6"], ["0", "1"]],
              [["1", "0"], ["-z**10", "u"]]],
             ["u", "-z**10", "-z**10", "1"], 36, 0, "0"),
            ("4/9",
             [[["z**14", "z**6+z**2"], ["z**8+z**4", "-z**10-z**14+1"]],
              [["z**4", "z**6"], ["0", "1"]],
              [["1", "0"], ["u", "z**4"]]],
             ["z**4", "u", "u", "1"], 36, 0, "0"),
        ],
    )
    rows += _rows(
        "G25", 3, "C", (F(11, 12), F(5, 12), F(2, 3)), 72,
        [("q", "__r(1)"), ("z", "q**2")],
        [
            ("11/12",
             [[["half*(z**9+1)", "half*(-z**9+1)"],
               ["half*(-z**9+1)", "half*(z**9+1)"]],
              [["z**9", "0"], ["0", "1"]],
              [["1", "0"], ["0", "z**9"]]],
             ["q**63", "q**63", "q**63", "q**27"], 4, 96, "<48,28>"),
            ("5/12",
             [[["half*(-z**9+1)", "half*(z**9+1)"],
               ["half*(z**9+1)", "half*(-z**9+1)"]],
              [["-z**9", "0"], ["0", "1"]],
              [["1", "0"], ["0", "-z**9"]]],
             ["q**9", "q**9", "q**9", "q**45"], 4, 96, "<48,28>"),
            ("2/3",
             [[["1", "z**6"], ["0", "1"]],
              [["1", "0"], ["z**6-1", "1"]],
              [["1", "0"], ["z**6-1", "1"]]],
             ["1", "1", "1", "1"], 16, 0, "0"),
        ],
    )
    rows += _rows(
        "G25", 3, "D", (F(1, 3), F(5, 6), F(5, 6)), 3,
        [("w", "__r(1)")],
        [
            ("1/3",
             [[["-w", "1"], ["-w**2", "0"]],
              [["w**2", "w**2"], ["0", "1"]],
              [["1", "0"], ["-1", "w**2"]]],
             ["w**2", "w**2", "w**2", "1"], 4, 24, "<24,3>"),
        ],
    )

    # ---------------- G26 nice 3-tuples (z = zeta_36, q = zeta_72) ----------------
    rows += _rows(
        "G26", 3, "A", (F(1, 12), F(7, 12), F(5, 6)), 72,
        [("q", "__r(1)"), ("z", "q**2"), ("u", "2*z**9-z**3")],
        [
            ("1/12",
             [[["-z**9", "z**9+1"], ["-u", "u+1"]],
              [["-z**9", "1"], ["0", "1"]],
              [["1", "0"], ["z**9+z**3", "-z**3"]]],
             ["q**21", "q**9", "q**15", "-q**63"], 24, 0, "0"),
            ("7/12",
             [[["z**9", "-z**9+1"], ["u", "-u+1"]],
              [["z**9", "1"], ["0", "1"]],
              [["1", "0"], ["-z**9-z**3", "z**3"]]],
             ["q**3", "q**27", "q**33", "q**9"], 24, 0, "0"),
            ("5/6",
             [[["1", "0"], ["-z**6+1", "z**6"]],
              [["-1", "1"], ["0", "1"]],
              [["1", "0"], ["-z**6+2", "z**6-1"]]],
             ["z**15", "z**9", "z**6-1", "1"], 24, 72, "<24,4>"),
        ],
    )
    rows += _rows(
        "G26", 3, "B", (F(5, 18), F(11, 18), F(17, 18)), 36,
        [("z", "__r(1)")],
        [
            ("5/18",
             [[["-z**4", "0"], ["z**8+z**4+1", "1"]],
              [["-z**4", "-1"], ["0", "1"]],
              [["1", "0"], ["-z**10-z**4", "-z**10"]]],
             ["z**7", "z**7", "z**4", "-1"], 36, 0, "0"),
            ("11/18",
             [[["-z**16", "0"], ["z**16-z**14+1", "1"]],
              [["-z**16", "-1"], ["0", "1"]],
              [["1", "0"], ["-z**16+z**4", "z**4"]]],
             ["z", "z", "z**16", "-1"], 36, 0, "0"),
            ("17/18",
             [[["z**10", "0"], ["-z**10-z**2+1", "1"]],
              [["z**10", "-1"], ["0", "1"]],
              [["1", "0"], ["z**16+z**10", "z**16"]]],
             ["z**13", "z**13", "z**10", "1"], 36, 0, "0"),
        ],
    )
    rows += _rows(
        "G26", 3, "C", (F(1, 6), F(1, 6), F(5, 6)), 36,
        [("z", "__r(1)"), ("w", "z**12"), ("i", "z**9")],
        [
            ("5/6",
             [[["z**6", "z**6"], ["-2*z**6+1", "-z**6"]],
              [["-1", "-1"], ["0", "1"]],
              [["1", "0"], ["z**6-2", "z**6-1"]]],
             ["i", "i", "w", "w+1"], 12, 18, "<12,1>"),
        ],
    )

    # ---------------- G27 nice 3-tuples (z = zeta_60, q = zeta_120) ----------------
    g27_defs = [
        ("q", "__r(1)"), ("z", "q**2"),
        ("u", "-z**10-z**8+z**2"), ("v", "z**16+z**4"),
        ("f1", "-z**14-2*z**10-z**8+z**6+z**4+z**2"),
        ("g1", "4*z**15+3*z**13-3*z**11-3*z**9-3*z**7-5*z**5+3*z"),
        ("f2", "-4*z**14-z**12+z**10+2*z**6+3*z**4-2*z**2"),
    ]
    rows += _rows(
        "G27", 3, "A", (F(1, 30), F(19, 30), F(5, 6)), 120, g27_defs,
        [
            ("1/30",
             [[["z**6*u-z**2", "2*(z**50+z**4)+z**22+z**18-z**6"],
               ["(u+1)*(z**12+1)", "-z**6*u+1"]],
              [["-z**2", "z**50"], ["0", "1"]],
              [["1", "0"], ["z**24+2*z**12+1", "-z**2"]]],
             ["z**14", "z**14", "z**14", "z**18"], 60, 0, "0"),
            ("19/30", "PIPELINE",
             ["z**26", "z**26", "z**26", "z**42"], 60, 0, "0"),
            ("5/6", "PIPELINE",
             ["z**20", "z**20", "z**20", "1"], 60, 360, "<120,5>"),
        ],
    )
    rows += _rows(
        "G27", 3, "B", (F(1, 12), F(7, 12), F(5, 6)), 120, g27_defs,
        [
            ("1/12",
             [[["third*(z**5*f1-2*z**10+1)", "third*(f1+2*z**15+3*z**10-z**5)"],
               ["third*(f1-g1)", "third*(-z**5*f1+2*z**10-3*z**5+2)"]],
              [["-z**5", "-z**20*f1-u+2"], ["0", "1"]],
              [["1", "0"], ["z**25*u+z**15", "-z**5"]]],
             ["q**25", "q**25", "q**25", "q**45"], 96, 0, "0"),
            ("7/12",
             [[["third*(-z**5*f1-2*z**10+1)", "third*(f1-2*z**15+3*z**10+z**5)"],
               ["third*(f1+g1)", "third*(z**5*f1+2*z**10+3*z**5+2)"]],
              [["z**5", "-z**20*f1-u+2"], ["0", "1"]],
              [["1", "0"], ["z**25*u-z**15", "z**5"]]],
             ["q**55", "q**55", "q**55", "q**75"], 96, 0, "0"),
            ("5/6",
             [[["f1-u-1+2*z**10", "-f1+2*u+1"],
               ["f1-u+2*z**10", "-f1+u-z**20"]],
              [["z**20", "-f1+2*u+2"], ["0", "1"]],
              [["1", "0"], ["f1-u+1", "z**20"]]],
             ["z**20", "z**20", "z**20", "1"], 96, 360, "<120,5>"),
        ],
    )
    rows += _rows(
        "G27", 3, "C", (F(1, 6), F(17, 30), F(23, 30)), 120, g27_defs,
        [
            ("1/6",
             [[["z**50*v-z**10-1", "z**50*v-u+z**10"],
               ["2*z**50*v-3", "-z**50*v+2"]],
              [["-z**10", "u+2"], ["0", "1"]],
              [["1", "0"], ["half*(3*z**20*v+u+2*z**10+4)", "-z**10"]]],
             ["z**10", "z**10", "z**10", "-1"], 60, 360, "<120,5>"),
            ("17/30", "PIPELINE",
             ["z**28", "z**28", "z**28", "z**36"], 60, 0, "0"),
            ("23/30", "PIPELINE",
             ["z**22", "z**22", "z**22", "z**54"], 60, 0, "0"),
        ],
    )

    # ---------------- nice 4-tuples ----------------
    rows += _rows(
        "G23", 4, "A", (F(1, 2), F(1, 2), F(0)), 5,
        [("q", "__r(1)"), ("u", "q**3+q**2")],
        [
            ("1/2",
             [[["u", "-u+1"], ["u-1", "-u+2"]],
              [["0", "1"], ["-1", "2"]],
              [["1", "u+2"], ["0", "1"]],
              [["1", "0"], ["-1", "1"]]],
             ["1", "1", "1", "1", "1"], None, 0, "0"),
        ],
    )
    rows += _rows(
        "G25", 4, "A", (F(1, 3), F(1, 3), F(0)), 12,
        [("z", "__r(4)"), ("u", "__r(1)")],
        [
            ("1/3",
             [[["0", "-z"], ["z", "-z"]],
              [["1", "1"], ["0", "1"]],
              [["1", "1"], ["0", "1"]],
              [["1", "0"], ["-1", "1"]]],
             ["z**2", "1", "1", "1", "z"], 45, 0, "0"),
        ],
    )
    rows += _rows(
        "G25", 4, "B", (F(1, 3), F(1, 3), F(2, 3)), 3,
        [("z", "__r(1)")],
        [
            ("1/3",
             [[["1", "z**2"], ["0", "1"]],
              [["1", "0"], ["-z", "1"]],
              [["1", "0"], ["-z", "1"]],
              [["1", "0"], ["-z", "1"]]],
             ["1", "1", "1", "1", "1"], 45, 0, "0"),
        ],
    )
    rows += _rows(
        "G25", 4, "C", (F(2, 3), F(1, 6), F(1, 6)), 12,
        [("z", "__r(4)"), ("u", "__r(1)")],
        [
            ("1/6",
             [[["-z", "0"], ["-1", "1"]],
              [["-z", "-1"], ["z**2-1", "z"]],
              [["-1", "z+1"], ["0", "1"]],
              [["1", "0"], ["1", "-z"]]],
             ["u**7", "u**3", "u**3", "u**7", "u**4"], 120, 72, "<24,4>"),
        ],
    )
    rows += _rows(
        "G26", 4, "A", (F(1, 6), F(1, 6), F(1, 2)), 12,
        [("z", "__r(4)"), ("u", "__r(1)")],
        [
            ("1/6",
             [[["z**2", "0"], ["z+2", "1"]],
              [["-1", "-1"], ["0", "1"]],
              [["1", "0"], ["z**2", "-z"]],
              [["1", "0"], ["z**2", "-z"]]],
             ["u**8", "-u**3", "u**7", "u**7", "u**5"], 120, 72, "<24,4>"),
        ],
    )
    rows += _rows(
        "G26", 4, "B", (F(1, 6), F(1, 6), F(5, 6)), 12,
        [("z", "__r(4)"), ("u", "__r(1)")],
        [
            ("1/6",
             [[["-z", "z+1"], ["-z+1", "z"]],
              [["1", "0"], ["z", "-z"]],
              [["-1", "-z"], ["0", "1"]],
              [["1", "0"], ["2*z+1", "z**2"]]],
             ["u**3", "u**7", "u**3", "u**8", "u**3"], 240, 72, "<24,4>"),
        ],
    )
    rows += _rows(
        "G27", 4, "A", (F(5, 6), F(5, 6), F(1, 3)), 15,
        [("z", "__r(1)"), ("f1", "z**7-z**3+z**2-1"), ("f2", "z**5-z**4-z+2"),
         ("g1", "2*z**7-3*z**5+3*z**4-2*z**3+2*z**2+3*z-2"),
         ("g2", "2*z**7-z**4-2*z**3+2*z**2-z+1"),
         ("g3", "-3*z**7+3*z**5-2*z**4+3*z**3-5*z**2-2*z+3"),
         ("g4", "-z**7+z**5+z**3-z**2"),
         ("g5", "-z**7-z**5+z**3-z**2-2"),
         ("g6", "-z**7+3*z**5-z**4+z**3-z**2-z+2")],
        [
            ("5/6", "PIPELINE",
             ["z**5", "z**5", "z**5", "z**5", "z**10"], None, 360, "<120,5>"),
        ],
    )
    rows += _rows(
        "G28", 4, "A", (F(1, 6), F(1, 6), F(5, 6), F(5, 6)), 24,
        [("z", "__r(1)")],
        [
            ("1/6",
             [[["1", "1"], ["0", "-z**4"]],
              [["-z**4+2", "-z**4+1"], ["-2", "-1"]],
              [["-z**4", "-1"], ["0", "1"]],
              [["1", "0"], ["-2*z**4", "-z**4"]]],
             ["-z**4", "-z**4", "-z**4", "-z**4", "z**8"], 45, 72, "<24,3>"),
            ("5/6",
             [[["1", "1"], ["0", "z**8"]],
              [["z**4+1", "z**4"], ["-2", "-1"]],
              [["z**8", "-1"], ["0", "1"]],
              [["1", "0"], ["2*z**8", "z**8"]]],
             ["z**8", "z**8", "z**8", "z**8", "-z**4"], 45, 72, "<24,3>"),
        ],
    )
    g30_defs = [("z", "__r(1)"), ("u", "z**14-z**6-z**4"), ("v", "z**6-1"),
                ("y", "z**10+z**8-z**2")]
    rows += _rows(
        "G30", 4, "A", (F(3, 10), F(3, 10), F(7, 10), F(7, 10)), 60, g30_defs,
        [
            ("3/10",
             [[["-z**6*v", "z**6"], ["-z**24+z**12-1", "-z**24"]],
              [["-z**18+z**6", "-z**18"], ["v**2", "-v"]],
              [["-z**18", "-1"], ["0", "1"]],
              [["1", "0"], ["-z**18+v", "-z**18"]]],
             ["z**6", "z**6", "z**6", "z**6", "z**36"], 50, 600, "<120,5>"),
            ("7/10",
             [[["z**12-v", "-z**24"], ["-z**18+v", "z**6"]],
              [["-z**24+z**12", "z**12"], ["z**24-z**6*v", "z**24+1"]],
              [["z**12", "-1"], ["0", "1"]],
              [["1", "0"], ["-z**24+z**12-1", "z**12"]]],
             ["z**24", "z**24", "z**24", "z**24", "z**24"], 50, 600, "<120,5>"),
        ],
    )
    rows += _rows(
        "G30", 4, "B", (F(1, 6), F(1, 6), F(5, 6), F(5, 6)), 60, g30_defs,
        [
            ("1/6",
             [[["-z**20-z**16", "-z**16-z**10"], ["z**16-1", "z**16"]],
              [["-z**10", "0"], ["z**10", "1"]],
              [["-z**10", "u-1"], ["0", "1"]],
              [["1", "0"], ["-z**10", "-z**10"]]],
             ["-z**10", "-z**10", "-z**10", "-z**10", "z**20"], 90, 360, "<120,5>"),
            ("5/6",
             [[["y+z**20", "y+z**10-2"], ["-y", "-y+1"]],
              [["z**20", "0"], ["-z**20", "1"]],
              [["z**20", "u-1"], ["0", "1"]],
              [["1", "0"], ["z**20", "z**20"]]],
             ["z**20", "z**20", "z**20", "z**20", "-z**10"], 90, 360, "<120,5>"),
        ],
    )
    rows += _rows(
        "G30", 4, "C", (F(1, 10), F(1, 10), F(9, 10), F(9, 10)), 60, g30_defs,
        [
            ("1/10",
             [[["1", "-u-1"], ["0", "-z**6"]],
              [["-v", "-z**12+v"], ["u", "0"]],
              [["-z**6", "u+1"], ["0", "1"]],
              [["1", "0"], ["-z**12-1", "-z**6"]]],
             ["z**12", "z**12", "z**12", "z**12", "z**12"], 50, 600, "<120,5>"),
            ("9/10",
             [[["1", "-u-1"], ["0", "z**24"]],
              [["z**24+1", "z**6*v"], ["u", "0"]],
              [["z**24", "u+1"], ["0", "1"]],
              [["1", "0"], ["u+z**12", "z**24"]]],
             ["z**18", "z**18", "z**18", "z**18", "z**48"], 50, 600, "<120,5>"),
        ],
    )
    g32_defs = [("q", "__r(1)"), ("z", "q**2"), ("w", "q**8")]
    rows += _rows(
        "G32", 4, "A", (F(5, 6), F(5, 6), F(1, 12), F(7, 12)), 24, g32_defs,
        [
            ("5/6",
             [[["0", "-1"], ["-1", "0"]],
              [["1", "0"], ["0", "z**2"]],
              [["z**2", "0"], ["0", "1"]],
              [["1", "0"], ["0", "z**2"]]],
             ["-z**3", "z**5", "z**5", "z**5", "1"], 40, 72, "<24,4>"),
        ],
    )
    rows += _rows(
        "G32", 4, "B", (F(1, 6), F(1, 6), F(5, 6), F(5, 6)), 24, g32_defs,
        [
            ("1/6",
             [[["1", "-w"], ["0", "-w"]],
              [["w**2", "w-1"], ["-1", "-w**2"]],
              [["-w", "w"], ["0", "1"]],
              [["1", "0"], ["-w", "-1"]]],
             ["z", "z**3", "z", "z**3", "z**2-1"], 60, 72, "<24,4>"),
            ("5/6",
             [[["1", "-w"], ["0", "-1"]],
              [["1", "0"], ["-1", "-w**2"]],
              [["-1", "w"], ["0", "1"]],
              [["1", "0"], ["-1", "-w"]]],
             ["z**3", "z**5", "z**3", "z", "1"], ("lb", 350), 0, "0"),
        ],
    )
    rows += _rows(
        "G32", 4, "C", (F(1, 12), F(1, 12), F(7, 12), F(7, 12)), 24, g32_defs,
        [
            ("1/12",
             [[["-z**3", "0"], ["z**11", "1"]],
              [["1", "z**4"], ["0", "-z**3"]],
              [["-z**3", "-z**4"], ["0", "1"]],
              [["1", "0"], ["-z**11", "-z**3"]]],
             ["q**3", "q**3", "q**3", "q**3", "-1"], 20, 96, "<48,28>"),
            ("7/12",
             [[["z**3", "0"], ["-z**11", "1"]],
              [["1", "z**4"], ["0", "z**3"]],
              [["z**3", "-z**4"], ["0", "1"]],
              [["1", "0"], ["z**11", "z**3"]]],
             ["q**9", "q**9", "q**9", "q**9", "-1"], 20, 96, "<48,28>"),
        ],
    )

    # ---------------- nice 5-tuples (G32) ----------------
    g32_5 = [("z", "__r(1)"), ("w", "z**4")]
    rows += _rows(
        "G32", 5, "A", (F(1, 2), F(5, 6), F(5, 6), F(5, 6)), 12, g32_5,
        [
            ("5/6",
             [[["1", "0"], ["0", "w+1"]],
              [["1", "0"], ["0", "w+1"]],
              [["0", "w+1"], ["-w", "0"]],
              [["w+1", "0"], ["0", "1"]],
              [["1", "0"], ["0", "w+1"]]],
             ["z**11", "z**11", "-z**3", "z**11", "z**11", "z**7"],
             None, 72, "<24,4>"),
        ],
    )
    rows += _rows(
        "G32", 5, "B", (F(1, 6), F(5, 6), F(5, 6), F(5, 6)), 12, g32_5,
        [
            ("5/6",
             [[["0", "1"], ["1", "0"]],
              [["1", "0"], ["0", "w+1"]],
              [["0", "-w-1"], ["w", "0"]],
              [["w+1", "0"], ["0", "1"]],
              [["1", "0"], ["0", "w+1"]]],
             ["z**3", "z**11", "z**3", "z**11", "z**11", "-z**3"],
             None, 72, "<24,4>"),
        ],
    )
    return rows


_ALL = None


def all_rows():
    global _ALL
    if _ALL is None:
        _ALL = build_rows()
    return _ALL


def rows_for(group, T):
    return [r for r in all_rows() if r.group == group and r.T == T]
