#!/usr/bin/env python3
"""Independent consistency oracle for the bundled data tables.

Re-derives everything checkable about the fixtures with plain integer
arithmetic: fingerprint tuples from component labels, eigenvalues from
standard parameters, the unknown Satake traces at p=2, restriction sets
from the branching pattern rule, and the cross-section graph. Exits
nonzero on the first inconsistency. Run from anywhere; locates data/
relative to this file. With --emit-dtable, writes data/dtable_p2.tsv.
"""

import sys
import re
from pathlib import Path
from fractions import Fraction
from itertools import product

DATA = Path(__file__).resolve().parent.parent / "data"

fail_count = 0


def check(cond, msg):
    global fail_count
    if not cond:
        fail_count += 1
        print("FAIL: " + msg)


def read_tsv(name):
    rows = []
    header = None
    for line in (DATA / name).read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if header is None:
            header = parts
            continue
        rows.append(dict(zip(header, parts)))
    return rows


# ---------------------------------------------------------------- fingerprints

# per-component data: rank -> (roots, det, (n2, n1, n0, nm1))
def component_profile(kind, n):
    if kind == "A":
        if n == 1:
            return 2, 2, (1, 0, 0, 0)
        return n * (n + 1), n + 1, (0, 2, n - 2, 0)
    if kind == "D":
        assert n >= 4
        profile = (0, 3, n - 4, 1)
        return 2 * n * (n - 1), 4, profile
    if kind == "E":
        return {6: (72, 3, (0, 3, 2, 1)),
                7: (126, 2, (0, 3, 3, 1)),
                8: (240, 1, (0, 3, 4, 1))}[n]
    raise ValueError(kind)


COMP_RE = re.compile(r"^(\d*)([ADE])(\d+)$")


def parse_label(label):
    """'2A9+D6' -> [('A',9),('A',9),('D',6)]; '-' -> []."""
    if label == "-":
        return []
    comps = []
    for tok in label.split("+"):
        m = COMP_RE.match(tok)
        if not m:
            raise ValueError("bad component token: " + tok)
        mult = int(m.group(1)) if m.group(1) else 1
        comps.extend([(m.group(2), int(m.group(3)))] * mult)
    return comps


def fingerprint_of(comps):
    roots, det = 0, 1
    prof = [0, 0, 0, 0]
    for kind, n in comps:
        r, d, p = component_profile(kind, n)
        roots += r
        det *= d
        for i in range(4):
            prof[i] += p[i]
    return (roots, prof[0], prof[1], prof[2], prof[3], det)


def load_fingerprints(n, count):
    rows = read_tsv(f"fingerprints_{n}.tsv")
    check(len(rows) == count, f"fingerprints_{n}: expected {count} rows")
    seen = {}
    ranks_ok = True
    for row in rows:
        idx = int(row["index"])
        comps = parse_label(row["rootSystemLabel"])
        tup = tuple(int(row[c]) for c in
                    ("rootCount", "n2", "n1", "n0", "nm1", "cartanDet"))
        calc = fingerprint_of(comps) if comps else (0, 0, 0, 0, 0, 1)
        check(calc == tup,
              f"fingerprints_{n} row {idx}: label {row['rootSystemLabel']} "
              f"gives {calc}, table says {tup}")
        rank = sum(c[1] for c in comps)
        if comps and rank > n:
            ranks_ok = False
        check(tup not in seen,
              f"fingerprints_{n}: rows {seen.get(tup)} and {idx} collide")
        seen[tup] = idx
    check(ranks_ok, f"fingerprints_{n}: component rank exceeds {n}")
    return {int(r["index"]): r["rootSystemLabel"] for r in rows}


labels23 = load_fingerprints(23, 32)
labels24 = load_fingerprints(24, 24)
labels25 = load_fingerprints(25, 121)

# rank-24 root systems fill the full rank; rank sums elsewhere stay <= n
for idx, lab in labels24.items():
    if lab != "-":
        check(sum(c[1] for c in parse_label(lab)) == 24,
              f"fingerprints_24 row {idx}: rank != 24")

# ------------------------------------------------------------------ parameters

SYMBOL_W1 = {"D11": 11, "D15": 15, "D17": 17, "D19": 19, "D21": 21,
             "D19_7": 19, "D21_5": 21, "D21_9": 21, "D21_13": 21,
             "D23_7": 23, "D23_9": 23, "D23_13": 23,
             "D23_13_5": 23, "D23_15_3": 23, "D23_15_7": 23,
             "D23_17_5": 23, "D23_17_9": 23, "D23_19_3": 23,
             "D23_19_11": 23,
             "D23p": 23, "D23m": 23, "Sym2D11": 22}

# standard dimension of one copy of each symbol
SYMBOL_DIM = {"Triv": 1, "Sym2D11": 3, "D23p": 2, "D23m": 2}


def symbol_dim(sym):
    if sym in SYMBOL_DIM:
        return SYMBOL_DIM[sym]
    return 2 * (1 + sym.count("_"))


PSI_COMP_RE = re.compile(r"^(?:([A-Za-z0-9_]+))?\[(\d+)\]$")


def parse_psi(text):
    comps = []
    for tok in text.split("+"):
        m = PSI_COMP_RE.match(tok)
        if not m:
            raise ValueError("bad psi token: " + tok)
        comps.append((m.group(1) or "Triv", int(m.group(2))))
    return comps


class Quad:
    """a + b*sqrt(144169) with Fraction parts."""

    __slots__ = ("a", "b")
    D = 144169

    def __init__(self, a, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __add__(self, o):
        o = o if isinstance(o, Quad) else Quad(o)
        return Quad(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __mul__(self, o):
        o = o if isinstance(o, Quad) else Quad(o)
        return Quad(self.a * o.a + self.D * self.b * o.b,
                    self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __eq__(self, o):
        o = o if isinstance(o, Quad) else Quad(o)
        return self.a == o.a and self.b == o.b

    def __repr__(self):
        return f"{self.a}+{self.b}*r"


def parse_value(text):
    m = re.match(r"^(-?\d+)([+-]\d+)\*r$", text)
    if m:
        return Quad(int(m.group(1)), int(m.group(2)))
    return Quad(int(text))


def sigma(d, p):
    return (p ** d - 1) // (p - 1)


def eval_psi(comps, n, p, dtable):
    """Exact eigenvalue of the p-neighbor operator for a standard parameter.

    Each block contributes coeff * p^k * sigma_d(p) with
    2k = (n-2) - w1 - d + 1; the p^{w1/2} of the Satake trace is already
    absorbed into the stored coeff, so k is a nonnegative integer on every
    valid parameter."""
    e2 = n - 2
    total = Quad(0)
    for sym, d in comps:
        if sym == "Triv":
            w1, coeff = 0, Quad(1)
        else:
            w1, coeff = SYMBOL_W1[sym], dtable[sym]
        k2 = e2 - w1 - d + 1
        check(k2 % 2 == 0 and k2 >= 0,
              f"bad exponent for {sym}[{d}] at n={n}")
        total += coeff * Quad(p ** (k2 // 2)) * Quad(sigma(d, p))
    return total


def load_params(n, count, dim_total):
    rows = read_tsv(f"params_{n}.tsv")
    check(len(rows) == count, f"params_{n}: expected {count} rows")
    out = {}
    for row in rows:
        idx = int(row["index"])
        psi = parse_psi(row["psi"])
        dim = sum(symbol_dim(s) * d for s, d in psi)
        check(dim == dim_total,
              f"params_{n} row {idx}: standard dimension {dim}")
        out[idx] = (parse_value(row["eigenvalue"]), psi)
    return out


params23 = load_params(23, 32, 22)
params24 = load_params(24, 24, 24)
params25 = load_params(25, 121, 24)

# integer rows strictly decreasing; pair rows strictly decreasing in the
# rational part with conjugates adjacent
for params, ints in ((params23, 32), (params24, 24)):
    vals = [params[i][0].a for i in range(1, ints + 1)]
    check(all(x > y for x, y in zip(vals, vals[1:])),
          "eigenvalues not strictly decreasing")
vals = [params25[i][0].a for i in range(1, 58)]
check(all(x > y for x, y in zip(vals, vals[1:])),
      "params_25 integer eigenvalues not strictly decreasing")
avals = [params25[i][0].a for i in range(58, 122, 2)]
check(all(x > y for x, y in zip(avals, avals[1:])),
      "params_25 pair eigenvalues not strictly decreasing")
for i in range(58, 122, 2):
    vp, pp = params25[i]
    vm, pm = params25[i + 1]
    check(vp.a == vm.a and vp.b == -vm.b == 12,
          f"params_25 rows {i},{i + 1}: not a conjugate pair")
    check(pp[0][0] == "D23p" and pm[0][0] == "D23m" and pp[1:] == pm[1:],
          f"params_25 rows {i},{i + 1}: parameters not conjugate")

# ------------------------------------------------- solve unknown traces at p=2

# classical weight-12..22 cusp form traces at p=2, recomputed from scratch
# below via q-expansions; the weight-24 pair from its quadratic eigensystem
def elliptic_traces_p2():
    N = 6
    def mul(f, g):
        h = [0] * N
        for i, fi in enumerate(f):
            if fi:
                for j in range(N - i):
                    h[i + j] += fi * g[j]
        return h
    def sigma_k(m, k):
        return sum(d ** k for d in range(1, m + 1) if m % d == 0)
    E4 = [1] + [240 * sigma_k(m, 3) for m in range(1, N)]
    E6 = [1] + [-504 * sigma_k(m, 5) for m in range(1, N)]
    E4_3 = mul(mul(E4, E4), E4)
    E6_2 = mul(E6, E6)
    Delta = [(a - b) // 1728 for a, b in zip(E4_3, E6_2)]
    assert Delta[0] == 0 and Delta[1] == 1
    out = {"D11": Delta[2]}
    out["D15"] = mul(Delta, E4)[2]
    out["D17"] = mul(Delta, E6)[2]
    out["D19"] = mul(Delta, mul(E4, E4))[2]
    out["D21"] = mul(Delta, mul(E4, E6))[2]
    # weight 24: two-dimensional space; trace form basis Delta*E4^3, Delta*E6^2
    t1 = mul(Delta, E4_3)[2]   # 696
    t2 = mul(Delta, E6_2)[2]   # -1032
    # eigenvalues are roots of x^2 - (t1+t2+2^11... ) handled via known split:
    # a2(f) + a2(f') = t1 + t2 - 3*... use power sums on the Hecke matrix of
    # the pair instead: T2 acts on the 2-dim space; trace = t1' + t2' where
    # the basis is not eigen. Compute T2 matrix on basis (Delta*E4^3, Delta*E6^2)
    # from q-expansions: T2 f = sum (a_{2m}(f) + 2^{23} a_{m/2}(f)) q^m.
    f1 = mul(Delta, E4_3)
    f2 = mul(Delta, E6_2)
    def hecke2(f):
        g = [0] * 3
        for m in range(1, 3):
            g[m] = f[2 * m] + (2 ** 23 * f[m // 2] if m % 2 == 0 else 0)
        return g
    g1, g2 = hecke2(f1), hecke2(f2)
    # solve g = x*f1 + y*f2 using coefficients q^1, q^2
    det = f1[1] * f2[2] - f1[2] * f2[1]
    m11 = Fraction(g1[1] * f2[2] - g1[2] * f2[1], det)
    m21 = Fraction(f1[1] * g1[2] - f1[2] * g1[1], det)
    m12 = Fraction(g2[1] * f2[2] - g2[2] * f2[1], det)
    m22 = Fraction(f1[1] * g2[2] - f1[2] * g2[1], det)
    tr = m11 + m22
    dt = m11 * m22 - m12 * m21
    disc = tr * tr - 4 * dt
    # eigenvalues (tr +- sqrt(disc))/2 with disc = 4*144*144169
    assert disc == 4 * 144 * 144169
    out["D23+"] = Quad(tr / 2, 12)
    out["D23-"] = Quad(tr / 2, -12)
    return out


dtable = {k: (v if isinstance(v, Quad) else Quad(v))
          for k, v in elliptic_traces_p2().items()}
check(dtable["D11"] == Quad(-24), "D11(2)")
check(dtable["D15"] == Quad(216), "D15(2)")
check(dtable["D17"] == Quad(-528), "D17(2)")
check(dtable["D19"] == Quad(456), "D19(2)")
check(dtable["D21"] == Quad(-288), "D21(2)")
check(dtable["D23+"] == Quad(540, 12), "D23+(2)")
dtable["Sym2D11"] = Quad((-24) ** 2 - 2 ** 11)
dtable["D23p"] = dtable["D23+"]
dtable["D23m"] = dtable["D23-"]

UNKNOWNS = ["D19_7", "D21_5", "D21_9", "D21_13",
            "D23_7", "D23_9", "D23_13",
            "D23_13_5", "D23_15_3", "D23_15_7",
            "D23_17_5", "D23_17_9", "D23_19_3", "D23_19_11"]


def linear_form(comps, n, p):
    """Split eval into (known Quad part, {unknown: coefficient})."""
    known = Quad(0)
    coeffs = {}
    e2 = n - 2
    for sym, d in comps:
        w1 = 0 if sym == "Triv" else SYMBOL_W1[sym]
        k2 = e2 - w1 - d + 1
        factor = p ** (k2 // 2) * sigma(d, p)
        if sym == "Triv":
            known += Quad(factor)
        elif sym in UNKNOWNS and sym not in dtable:
            coeffs[sym] = coeffs.get(sym, 0) + factor
        else:
            known += dtable[sym] * Quad(factor)
    return known, coeffs


equations = []
for n, params in ((23, params23), (24, params24), (25, params25)):
    for idx in sorted(params):
        val, psi = params[idx]
        equations.append((n, idx, val, psi))

solved_order = []
progress = True
while progress:
    progress = False
    for n, idx, val, psi in equations:
        known, coeffs = linear_form(psi, n, 2)
        live = {s: c for s, c in coeffs.items() if s not in dtable}
        if len(live) == 1:
            sym, c = next(iter(live.items()))
            rest = Quad(0)
            for s2, c2 in coeffs.items():
                if s2 != sym:
                    rest += dtable[s2] * Quad(c2)
            resid = val + Quad(-1) * (known + rest)
            check(resid.b == 0, f"quadratic part solving {sym}")
            dtable[sym] = Quad(Fraction(resid.a, c))
            solved_order.append((sym, dtable[sym]))
            progress = True

for sym in UNKNOWNS:
    check(sym in dtable, f"unsolved symbol {sym}")
    v = dtable[sym]
    check(v.a.denominator == 1 and v.b == 0, f"{sym} not an integer: {v}")

# every parameter row must now evaluate exactly (over-determined system)
for n, idx, val, psi in equations:
    got = eval_psi(psi, n, 2, dtable)
    check(got == val, f"params_{n} row {idx}: evaluator gives {got}, "
                      f"table says {val}")

# archimedean bound per symbol at p=2: |value| <= 2g * p^(w1/2)
import math
for sym, v in dtable.items():
    if sym == "Sym2D11":
        continue
    w1 = SYMBOL_W1.get("D23p" if sym in ("D23+", "D23-") else sym)
    if w1 is None:
        continue
    genus = 1 + sym.rstrip("+-").count("_")
    mag = abs(float(v.a) + float(v.b) * math.sqrt(144169))
    check(mag <= 2 * genus * 2 ** (w1 / 2) + 1e-9,
          f"{sym}: |{mag}| violates the 2g*p^(w1/2) bound")

# ---------------------------------------------------------------- restrictions


def ggp_restricts(up, down):
    """Branching pattern: each upstairs block shifts d by +1 or -1 (vanishing
    allowed only from d=1); leftovers downstairs must be bare d=1 blocks."""
    up = list(up)
    down_ms = {}
    for sym, d in down:
        down_ms[(sym, d)] = down_ms.get((sym, d), 0) + 1
    for choice in product((1, -1), repeat=len(up)):
        trial = dict(down_ms)
        ok = True
        for (sym, d), delta in zip(up, choice):
            nd = d + delta
            if nd == 0:
                continue
            key = (sym, nd)
            if trial.get(key, 0) == 0:
                ok = False
                break
            trial[key] -= 1
        if ok and all(d == 1 for (sym, d), c in trial.items() if c):
            return True
    return False


res23 = {int(r["index24"]): sorted(int(x) for x in r["targets23"].split(","))
         for r in read_tsv("res_23.tsv")}
res24 = {int(r["index25"]): int(r["target24"])
         for r in read_tsv("res_24.tsv")}
res242 = {int(r["pair"]): sorted(int(x) for x in r["targets24"].split(","))
          for r in read_tsv("res_242.tsv")}
check(len(res23) == 24 and len(res24) == 57 and len(res242) == 32,
      "restriction tables: row counts")

for j in range(1, 25):
    expect = set(res23[j])
    got = {i for i in range(1, 33)
           if ggp_restricts(params24[j][1], params23[i][1])}
    check(got == expect, f"res_23 row {j}: pattern rule gives {sorted(got)}")

for j in range(1, 58):
    expect = {res24[j]}
    got = {i for i in range(1, 25)
           if ggp_restricts(params25[j][1], params24[i][1])}
    check(got == expect, f"res_24 row {j}: pattern rule gives {sorted(got)}")

for k in range(1, 33):
    expect = set(res242[k])
    got = {i for i in range(1, 25)
           if ggp_restricts(params25[56 + 2 * k][1], params24[i][1])}
    check(got == expect, f"res_242 pair {k}: pattern rule gives {sorted(got)}")
    dual = {j for j in range(1, 25) if k in res23[j]}
    check(dual == expect, f"res_242 pair {k}: duality with res_23")

# every downstairs class is hit (nonempty fibers both ways)
check(set().union(*res23.values()) == set(range(1, 33)), "res_23 not onto")
check(set(res24.values()) | set().union(*res242.values())
      == set(range(1, 25)), "res_24/res_242 not onto")

# --------------------------------------------------------------- cross-section

CROSS = {"A": lambda n: [("A", n - 2)] if n >= 3 else [],
         "D": lambda n: [("D", n - 2), ("A", 1)],
         "E": lambda n: {6: [("A", 5)], 7: [("D", 6)], 8: [("E", 7)]}[n]}


def normalize(comps):
    out = []
    for kind, n in comps:
        if kind == "A" and n < 1:
            continue
        if kind == "D":
            if n == 1:
                out.append(("A", 1))
                continue
            if n == 2:
                out.extend([("A", 1), ("A", 1)])
                continue
            if n == 3:
                out.append(("A", 3))
                continue
        out.append((kind, n))
    return sorted(out)


cs_rows = read_tsv("cross_section_23.tsv")
check(len(cs_rows) == 32, "cross_section_23: expected 32 rows")
seen23 = set()
label_by_index24 = {v: k for k, v in
                    ((int(r["index"]), r["rootSystemLabel"])
                     for r in read_tsv("fingerprints_24.tsv"))}
for row in cs_rows:
    i24, lab24 = int(row["index24"]), row["label24"]
    orbit, i23 = row["orbit"], int(row["index23"])
    check(labels24[i24] == lab24,
          f"cross_section: label mismatch for class {i24}")
    comps = parse_label(lab24)
    okind, on = parse_label(orbit)[0]
    check((okind, on) in comps, f"cross_section: orbit {orbit} not in {lab24}")
    comps.remove((okind, on))
    comps.extend(CROSS[okind](on))
    check(normalize(comps) == normalize(parse_label(labels23[i23])),
          f"cross_section: row {lab24}|{orbit} does not give class {i23}")
    seen23.add(i23)
check(seen23 == set(range(1, 33)), "cross_section: not a bijection onto 1..32")

# degree-raising map: label + A1 identifies a unique 25-class; rootless -> A1
fp25_index = {fingerprint_of(parse_label(lab)): idx
              for idx, lab in labels25.items()}
for idx, lab in labels24.items():
    comps = parse_label(lab) + [("A", 1)]
    target = fp25_index.get(fingerprint_of(comps))
    check(target is not None, f"phi24: no 25-class for {lab}+A1")

if "--emit-dtable" in sys.argv:
    order = ["D11", "D15", "D17", "D19", "D21", "D23+", "D23-", "Sym2D11",
             "D19_7", "D21_5", "D21_9", "D21_13", "D23_7", "D23_9", "D23_13",
             "D23_13_5", "D23_15_3", "D23_15_7", "D23_17_5", "D23_17_9",
             "D23_19_3", "D23_19_11"]
    lines = ["# schema: dtable v1", "# columns: p symbol value",
             "p\tsymbol\tvalue"]
    for sym in order:
        v = dtable[sym]
        if v.b:
            txt = f"{v.a}{'+' if v.b > 0 else '-'}{abs(v.b)}*r"
        else:
            txt = str(v.a)
        lines.append(f"2\t{sym}\t{txt}")
    (DATA / "dtable_p2.tsv").write_text("\n".join(lines) + "\n")
    print("wrote dtable_p2.tsv")

print("solved at p=2: " +
      ", ".join(f"{s}={v.a}" for s, v in solved_order))
if fail_count:
    print(f"{fail_count} failure(s)")
    sys.exit(1)
print("all fixture checks passed")
