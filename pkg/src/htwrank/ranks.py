"""Keating's rank R(G) against the rank P(G) predicted by the HTW decomposition.

    R(G) = sum_rho (r_rho + v_rho) - eps
    P(G) = sum_rho (r_rho + w_rho)

r_rho is the unit rank of the integers of the character field E_rho, v_rho and
w_rho count the primes of that ring over |G| and over omega_rho, and eps
counts simple F_pG-modules over all p dividing |G|.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field

from .chartab import character_table
from .errors import NegativeMargin
from .modular import berman_counts
from .permgroup import DEFAULT_CAP, Group, generate_group, power_maps
from .ratrep import rational_irreps

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1


@dataclass
class RankRow:
    orbit_size: int
    field_label: str
    field_degree: int
    totally_real: bool
    r: int
    k: int
    d: int
    omega: int
    v: int
    w: int
    t_by_prime: dict


@dataclass
class RankReport:
    group_name: str
    group_order: int
    rows: list
    berman: dict
    epsilon: int
    R: int
    P: int
    difference: int
    theorem_b: dict  # p -> [lhs, rhs]
    required_w_total: int

    def to_dict(self) -> dict:
        d = asdict(self)
        d["schema_version"] = SCHEMA_VERSION
        # JSON object keys must be strings
        d["berman"] = {str(p): c for p, c in self.berman.items()}
        d["theorem_b"] = {str(p): list(v) for p, v in self.theorem_b.items()}
        for row in d["rows"]:
            row["t_by_prime"] = {str(p): t for p, t in row["t_by_prime"].items()}
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "RankReport":
        d = dict(d)
        d.pop("schema_version", None)
        rows = []
        for row in d.pop("rows"):
            row = dict(row)
            row["t_by_prime"] = {int(p): t for p, t in row["t_by_prime"].items()}
            rows.append(RankRow(**row))
        d["berman"] = {int(p): c for p, c in d["berman"].items()}
        d["theorem_b"] = {int(p): tuple(v) for p, v in d["theorem_b"].items()}
        return cls(rows=rows, **d)

    @property
    def sum_v(self):
        return sum(r.v for r in self.rows)

    @property
    def sum_w(self):
        return sum(r.w for r in self.rows)


def analyze(g: Group, name: str = "") -> RankReport:
    cd = g.classes
    tab = character_table(g)
    maps = power_maps(g, cd, tab.level)
    irreps = rational_irreps(tab, maps)
    berman = berman_counts(g, cd)
    eps = sum(berman.values())

    rows = [
        RankRow(
            orbit_size=len(rho.orbit),
            field_label=rho.field.label(),
            field_degree=rho.field.degree,
            totally_real=rho.field.totally_real,
            r=rho.unit_rank,
            k=rho.kernel_order,
            d=rho.complex_degree,
            omega=rho.omega,
            v=rho.v,
            w=rho.w,
            t_by_prime=dict(rho.t_by_prime),
        )
        for rho in irreps
    ]
    R = sum(row.r + row.v for row in rows) - eps
    P = sum(row.r + row.w for row in rows)
    theorem_b = {
        p: (berman[p], sum(row.t_by_prime[p] for row in rows if row.omega % p))
        for p in sorted(berman)
    }
    report = RankReport(
        group_name=name,
        group_order=g.order,
        rows=rows,
        berman=berman,
        epsilon=eps,
        R=R,
        P=P,
        difference=P - R,
        theorem_b=theorem_b,
        required_w_total=sum(row.v for row in rows) - eps,
    )
    assert report.difference == report.sum_w - report.sum_v + eps
    assert report.difference == sum(lhs - rhs for lhs, rhs in theorem_b.values())
    return report


def theorem_b_margins(report: RankReport) -> dict:
    margins = {}
    for p, (lhs, rhs) in report.theorem_b.items():
        if lhs < rhs:
            raise NegativeMargin(f"{report.group_name}: p={p} has {lhs} < {rhs}")
        margins[p] = lhs - rhs
    return margins


@dataclass
class ScanResult:
    reports: list
    errors: list = field(default_factory=list)  # (name, message)
    skipped: list = field(default_factory=list)

    @property
    def violators(self) -> list:
        return [r for r in self.reports if r.difference > 0]

    @property
    def odd_violators(self) -> list:
        return [r for r in self.violators if r.group_order % 2]


def scan(entries, max_order: int = 200, cap: int = DEFAULT_CAP) -> ScanResult:
    """Analyze each (name, generators) entry in order.

    Entries above ``max_order`` are skipped; a failing entry is recorded
    in ``errors`` and the scan moves on.
    """
    result = ScanResult(reports=[])
    for name, gens in entries:
        try:
            g = generate_group(gens, cap=min(cap, max_order))
        except Exception as exc:  # CapExceeded included: too large counts as skipped
            if type(exc).__name__ == "CapExceeded":
                result.skipped.append(name)
            else:
                result.errors.append((name, str(exc)))
            continue
        try:
            result.reports.append(analyze(g, name))
        except Exception as exc:
            log.warning("analysis of %s failed: %s", name, exc)
            result.errors.append((name, f"{type(exc).__name__}: {exc}"))
    return result


def format_report(report: RankReport) -> str:
    """Plain-text report: one column per rational irrep, then the totals."""
    primes = sorted(report.berman)
    head = ["", *[f"rho{i + 1}" for i in range(len(report.rows))]]
    lines = [
        ("E", [r.field_label for r in report.rows]),
        ("[E:Q]", [r.field_degree for r in report.rows]),
        ("orbit", [r.orbit_size for r in report.rows]),
        ("k", [r.k for r in report.rows]),
        ("d", [r.d for r in report.rows]),
        ("omega", [r.omega for r in report.rows]),
        ("r", [r.r for r in report.rows]),
        ("v", [r.v for r in report.rows]),
        ("w", [r.w for r in report.rows]),
    ]
    lines += [(f"t_{p}", [r.t_by_prime[p] for r in report.rows]) for p in primes]
    table = [head] + [[label, *map(str, vals)] for label, vals in lines]
    widths = [max(len(row[i]) for row in table) for i in range(len(head))]
    out = [f"group: {report.group_name}  order: {report.group_order}"]
    for row in table:
        out.append("  ".join(cell.rjust(w) if i else cell.ljust(w) for i, (cell, w) in enumerate(zip(row, widths))).rstrip())
    if primes:
        out.append("berman: " + " ".join(f"p={p}:{report.berman[p]}" for p in primes) + f"  epsilon={report.epsilon}")
        out.append("theorem B: " + " ".join(f"p={p}:{lhs}>={rhs}" for p, (lhs, rhs) in report.theorem_b.items()))
    else:
        out.append(f"epsilon={report.epsilon}")
    out.append(f"sum v={report.sum_v} sum w={report.sum_w} required sum w={report.required_w_total}")
    out.append(f"R={report.R} P={report.P} diff={report.difference}")
    return "\n".join(out) + "\n"
