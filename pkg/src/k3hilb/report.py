"""Per-t reports, oracle verification, and their text/JSON/CSV renderings.

In JSON every integer is written as a decimal string so that consumers
with fixed-width numbers do not silently truncate large Pell solutions.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from math import isqrt

from .ample_cone import compute_cone, cone_inequality, is_ample
from .classifier import AutTag, classify, euler_characteristic
from .ns_lattice import Isometry, LatticeContext, NSClass, group_structure, invariant_generator
from .oracle import brute_minimal, brute_square2_ample, stern_brocot_pell
from .pell import (
    is_square,
    minimal_solution_general,
    minimal_solution_p1,
    minimal_solution_pm1,
    solution_power,
)

__all__ = [
    "Report",
    "build_report",
    "verify",
    "verify_pell",
    "to_dict",
    "from_dict",
    "render",
    "render_text",
    "csv_row",
    "CSV_FIELDS",
]

Pair = tuple[int, int]
Matrix = tuple[Pair, Pair]


@dataclass(frozen=True)
class ConeReport:
    ray1: Pair
    ray2: Pair
    case: str
    inequality: str


@dataclass(frozen=True)
class GroupReport:
    finite: bool
    generator: Pair | None


@dataclass(frozen=True)
class AutReport:
    tag: str
    reason: str
    action: str | None = None
    matrix: Matrix | None = None
    D: Pair | None = None
    pell_m1: Pair | None = None
    pell_p1: Pair | None = None


@dataclass(frozen=True)
class Report:
    t: int
    cone: ConeReport
    group: GroupReport
    aut: AutReport
    chi: tuple[int, ...] = field(default=())
    verified: bool | None = None


def build_report(t: int, do_verify: bool = False) -> Report:
    cone, case = compute_cone(t)
    grp = group_structure(LatticeContext(t))
    cl = classify(t)
    aut = AutReport(
        tag=cl.tag.value,
        reason=cl.reason,
        action=cl.action,
        matrix=cl.matrix.matrix if cl.matrix else None,
        D=tuple(cl.D) if cl.D else None,
        pell_m1=tuple(cl.pell_m1) if cl.pell_m1 else None,
        pell_p1=tuple(cl.pell_p1) if cl.pell_p1 else None,
    )
    return Report(
        t=t,
        cone=ConeReport(tuple(cone.ray1), tuple(cone.ray2), case.tag.value, cone_inequality(cone)),
        group=GroupReport(grp.is_square_t, grp.generator),
        aut=aut,
        chi=tuple(euler_characteristic(n).chi for n in range(1, 5)),
        verified=(not verify(t)) if do_verify else None,
    )


def _first(sols) -> Pair | None:
    return (sols[0].x, sols[0].y) if sols else None


def verify_pell(D: int, N: int) -> list[str]:
    """Compare the fast minimal solution of x^2 - D y^2 = N with an oracle.

    The smallest positive solution of any class has y below
    (isqrt|N| + 1) * (y_unit + 1), so searching that far is exhaustive.
    """
    problems = []
    unit = minimal_solution_p1(D)
    if _first(stern_brocot_pell(D, 1, unit.y)) != (unit.x, unit.y):
        problems.append(f"minimal unit of D={D} disagrees with the Stern-Brocot oracle")
    fast = minimal_solution_general(D, N)
    fast_pair = (fast.x, fast.y) if fast else None
    cap = (isqrt(abs(N)) + 1) * (unit.y + 1)
    if D > N * N if N > 0 else D >= N * N - N:
        oracle = _first(stern_brocot_pell(D, N, cap))
    else:
        hit = brute_minimal(D, N, cap)
        oracle = (hit.x, hit.y) if hit else None
    if oracle != fast_pair:
        problems.append(f"x^2-{D}y^2={N}: fast {fast_pair} vs oracle {oracle}")
    return problems


def verify(t: int) -> list[str]:
    """Run every oracle cross-check for t; returns the list of failures."""
    problems: list[str] = []
    cl = classify(t)
    if not is_square(t):
        problems += verify_pell(t, 1)
        problems += verify_pell(t, -1)
        problems += verify_pell(4 * t, 5)
    if t >= 2 and not is_square(t):
        # every ample square-2 class comes from a positive solution of x^2 - t y^2 = -1
        z = minimal_solution_pm1(t)
        cap = solution_power(z, 5).y if z else minimal_solution_p1(t).y
        found = [
            NSClass(s.y, s.x) for s in stern_brocot_pell(t, -1, cap) if is_ample(t, NSClass(s.y, s.x))
        ]
        expected = [cl.D] if cl.D else []
        if found != expected:
            problems.append(f"ample square-2 classes {found} vs classification {expected}")
        small = brute_square2_ample(t, 1000)
        if small != [c for c in expected if max(c.x, c.y) <= 1000]:
            problems.append(f"brute scan up to 1000 found {small}")
    if cl.tag is AutTag.NON_NATURAL_INVOLUTION:
        m = cl.matrix
        ident = Isometry.identity(m.ctx)
        if m @ m != ident or m.det != -1 or m(cl.D) != cl.D or invariant_generator(m) != cl.D:
            problems.append("involution matrix fails the reflection checks")
        cone = compute_cone(t)[0]
        for c in (NSClass(1, 1), NSClass(cone.ray2.x + 1, cone.ray2.y), NSClass(3, 1)):
            if cone.contains(c) and not cone.contains(m(c)):
                problems.append(f"involution maps ample {tuple(c)} outside the cone")
    return problems


def _pair_out(p):
    return None if p is None else [str(p[0]), str(p[1])]


def _pair_in(p):
    return None if p is None else (int(p[0]), int(p[1]))


def to_dict(r: Report) -> dict:
    a = r.aut
    return {
        "t": str(r.t),
        "cone": {
            "ray1": _pair_out(r.cone.ray1),
            "ray2": _pair_out(r.cone.ray2),
            "case": r.cone.case,
            "inequality": r.cone.inequality,
        },
        "group": {"finite": r.group.finite, "generator": _pair_out(r.group.generator)},
        "aut": {
            "tag": a.tag,
            "reason": a.reason,
            "action": a.action,
            "matrix": None if a.matrix is None else [_pair_out(row) for row in a.matrix],
            "D": _pair_out(a.D),
            "pell_m1": _pair_out(a.pell_m1),
            "pell_p1": _pair_out(a.pell_p1),
        },
        "chi": [str(c) for c in r.chi],
        "verified": r.verified,
    }


def from_dict(d: dict) -> Report:
    a = d["aut"]
    return Report(
        t=int(d["t"]),
        cone=ConeReport(
            _pair_in(d["cone"]["ray1"]),
            _pair_in(d["cone"]["ray2"]),
            d["cone"]["case"],
            d["cone"]["inequality"],
        ),
        group=GroupReport(d["group"]["finite"], _pair_in(d["group"]["generator"])),
        aut=AutReport(
            tag=a["tag"],
            reason=a["reason"],
            action=a["action"],
            matrix=None if a["matrix"] is None else tuple(_pair_in(row) for row in a["matrix"]),
            D=_pair_in(a["D"]),
            pell_m1=_pair_in(a["pell_m1"]),
            pell_p1=_pair_in(a["pell_p1"]),
        ),
        chi=tuple(int(c) for c in d["chi"]),
        verified=d["verified"],
    )


CSV_FIELDS = [
    "t", "aut_tag", "cone_case", "ray2", "inequality", "finite_group", "generator",
    "matrix", "D", "pell_m1", "pell_p1", "chi", "verified",
]


def _join(p) -> str:
    if p is None:
        return ""
    flat = [v for row in p for v in row] if isinstance(p[0], tuple) else list(p)
    return ",".join(str(v) for v in flat)


def csv_row(r: Report) -> dict:
    return {
        "t": r.t,
        "aut_tag": r.aut.tag,
        "cone_case": r.cone.case,
        "ray2": _join(r.cone.ray2),
        "inequality": r.cone.inequality,
        "finite_group": str(r.group.finite).lower(),
        "generator": _join(r.group.generator),
        "matrix": _join(r.aut.matrix),
        "D": _join(r.aut.D),
        "pell_m1": _join(r.aut.pell_m1),
        "pell_p1": _join(r.aut.pell_p1),
        "chi": _join(r.chi),
        "verified": "" if r.verified is None else str(r.verified).lower(),
    }


def _class_str(p: Pair) -> str:
    x, y = p
    xs = "" if x == 1 else f"{x}"
    ys = "" if y == 1 else f"{y}"
    return f"{xs}h-{ys}delta" if y else f"{xs or 1}h"


def render_text(r: Report) -> str:
    lines = [f"t = {r.t}  (H^2 = {2 * r.t})"]
    lines.append(f"ample cone: rays {r.cone.ray1} and {r.cone.ray2}  [{r.cone.case}]  {r.cone.inequality}")
    if r.group.finite:
        lines.append("O(NS): dihedral of order 4 {+-id, +-s}")
    else:
        lines.append(f"O(NS): generalized dihedral, rotation generator (A,B) = {r.group.generator}")
    lines.append(f"Aut(S^[2]): {r.aut.tag}  ({r.aut.reason})")
    if r.aut.matrix:
        (a, b), (c, d) = r.aut.matrix
        lines.append(f"  involution on NS: [[{a}, {b}], [{c}, {d}]]  ({r.aut.action})")
        lines.append(f"  invariant class D = {_class_str(r.aut.D)}, D^2 = 2")
        lines.append(f"  x^2-{r.t}y^2=-1 minimal {r.aut.pell_m1}; x^2-{r.t}y^2=1 minimal {r.aut.pell_p1}")
    elif r.aut.action:
        lines.append(f"  generated by the natural involution ({r.aut.action})")
    lines.append("chi(nD), n=1..4: " + ", ".join(str(c) for c in r.chi))
    if r.verified is not None:
        lines.append(f"verified: {'yes' if r.verified else 'NO'}")
    return "\n".join(lines)


def render(reports: list[Report], fmt: str) -> str:
    if fmt == "json":
        return "\n".join(json.dumps(to_dict(r), sort_keys=True) for r in reports) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in reports:
            w.writerow(csv_row(r))
        return buf.getvalue()
    return "\n\n".join(render_text(r) for r in reports) + "\n"

