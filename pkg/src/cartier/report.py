"""Structured reports emitted by the CLI, with a JSON machine form that round-trips."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Optional

CARTIER_LABEL = "Cartier-Manin, tau-linear, left action"
HASSE_WITT_LABEL = "Hasse-Witt, sigma-linear, left action"
YUI_LABEL = "Yui coefficient matrix c_{ip-j}, untwisted"

Rows = list[list[str]]


@dataclass
class CurveEcho:
    p: int
    e: int
    modulus: Optional[list[int]]
    genus: int
    f: list[str]


@dataclass
class Matrices:
    Y: Rows
    B: Rows
    A: Rows
    labels: dict[str, str] = field(default_factory=lambda: {
        "Y": YUI_LABEL, "B": CARTIER_LABEL, "A": HASSE_WITT_LABEL})


@dataclass
class Iterates:
    M: Rows  # A A^sigma ... A^(sigma^(e-1))
    N: Rows  # B B^tau ... B^(tau^(e-1))


@dataclass
class Invariants:
    p_rank: int
    a_number: int
    is_superspecial: bool
    l_mod_p: list[int]
    chi_mod_p: list[int]


@dataclass
class OracleSection:
    counts: list[int]
    exact_l: list[int]
    exact_l_mod_p: list[int]
    p_rank_oracle: int
    l_mod_p_agrees: bool
    p_rank_agrees: bool
    functional_equation: Optional[bool]  # None when N_{g+1} is over the bound
    basis_change_selfcheck: bool
    seed: int


@dataclass
class Report:
    curve: CurveEcho
    matrices: Matrices
    iterates: Optional[Iterates] = None
    invariants: Optional[Invariants] = None
    oracle: Optional[OracleSection] = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        def opt(kind, value):
            return None if value is None else kind(**value)
        return cls(
            curve=CurveEcho(**d["curve"]),
            matrices=Matrices(**d["matrices"]),
            iterates=opt(Iterates, d.get("iterates")),
            invariants=opt(Invariants, d.get("invariants")),
            oracle=opt(OracleSection, d.get("oracle")),
        )


def emit(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"


def parse(text: str) -> Report:
    return Report.from_dict(json.loads(text))


def _poly_text(coeffs: list[int], var: str = "T") -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if i == 0:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms) or "0"


def _matrix_text(name: str, rows: Rows, label: str | None = None) -> list[str]:
    head = f"{name}" + (f"  ({label})" if label else "")
    width = max(len(x) for r in rows for x in r)
    return [head] + ["  [ " + "  ".join(x.rjust(width) for x in r) + " ]" for r in rows]


def render_text(report: Report) -> str:
    c = report.curve
    field_name = f"F_{c.p}" if c.e == 1 else f"F_{c.p}^{c.e}"
    lines = [f"curve: y^2 = f(x) over {field_name}, genus {c.genus}"]
    if c.modulus is not None:
        lines.append(f"  modulus: {c.modulus}")
    lines.append(f"  f (low-to-high): [{', '.join(c.f)}]")
    m = report.matrices
    for name in ("Y", "B", "A"):
        lines += _matrix_text(name, getattr(m, name), m.labels.get(name))
    if report.iterates:
        lines += _matrix_text("M", report.iterates.M, "A A^sigma ... A^(sigma^(e-1)), F^e")
        lines += _matrix_text("N", report.iterates.N, "B B^tau ... B^(tau^(e-1)), C^e")
    if report.invariants:
        inv = report.invariants
        lines += [
            f"p_rank: {inv.p_rank}",
            f"a_number: {inv.a_number}",
            f"is_superspecial: {str(inv.is_superspecial).lower()}",
            f"l_mod_p: {_poly_text(inv.l_mod_p)}",
            f"chi_mod_p: {_poly_text(inv.chi_mod_p, 't')}",
        ]
    if report.oracle:
        o = report.oracle
        lines += [
            f"oracle counts N_1..N_g: {o.counts}",
            f"oracle L: {_poly_text(o.exact_l)}",
            f"oracle L mod p: {_poly_text(o.exact_l_mod_p)}",
            f"oracle p_rank: {o.p_rank_oracle}",
            f"l_mod_p agrees: {str(o.l_mod_p_agrees).lower()}",
            f"p_rank agrees: {str(o.p_rank_agrees).lower()}",
            "functional equation: " + ("skipped (over bound)" if o.functional_equation is None
                                       else str(o.functional_equation).lower()),
            f"basis-change self-check (seed {o.seed}): {str(o.basis_change_selfcheck).lower()}",
        ]
    return "\n".join(lines) + "\n"
