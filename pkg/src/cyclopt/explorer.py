"""Exponent-space scans and open-problem probes.

A scan walks every candidate exponent class of a field once (coset leaders
only, since equivalent exponents give equivalent codes), measures the minimum
distance of each code, collects which checkers vouch for it, and decides an
optimality flag per row:

  * True   -- d = 4 verified exactly and the sphere-packing bound rules out 5,
  * False  -- a word of weight below 4 exists (witness attached),
  * None   -- the search only bounded d from below, so no claim is made.

Scan output is deliberately free of timing data: two runs with the same
parameters produce byte-identical JSON and CSV, which makes regression
diffs trivial.  Figures are rendered separately and are not diffed.

Long scans can journal finished rows to a JSON-lines file and resume after
an interruption; the journal header pins (p, m, pi) so a stale file from a
different field is rejected instead of silently merged.
"""

from __future__ import annotations

import csv
import io
import json
import os
import threading
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Optional

from .codes import construct_code, sphere_packing_optimal
from .cyclotomy import Coset, coset_leaders, coset_of, in_C1
from .distance import Witness, min_distance, _resolve_threads
from .errors import LimitError, ParameterError
from .extfield import FieldSpec, get_field
from .theorems import (
    OPEN_PROBLEM_IDS,
    check_C_sm1_p5,
    check_C_sm1_p7,
    check_OP,
    check_P_quinary_iff,
    check_T_45h3,
    check_T_5_half,
    check_T_5_minus3,
    check_T_cong,
    check_T_pm2,
    check_T_q_e3mod4,
    check_T_s_ph1,
    check_T_sm1,
    op_exponent,
)

DEFAULT_SCAN_LIMIT = 5**5

_JOURNAL_FLUSH_EVERY = 1000


@dataclass(frozen=True)
class ScanRow:
    """One exponent class: what the search found and who predicted it."""

    e_leader: int
    coset_size: int
    in_C1: bool
    d: int
    exact: bool
    optimal: Optional[bool]
    theorem_tags: tuple[str, ...] = ()
    witness: Optional[Witness] = None

    def to_json(self) -> dict:
        return {
            "e_leader": self.e_leader,
            "coset_size": self.coset_size,
            "in_C1": self.in_C1,
            "d": self.d,
            "exact": self.exact,
            "optimal": self.optimal,
            "theorem_tags": list(self.theorem_tags),
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def _row_from_json(obj: dict) -> ScanRow:
    w = obj.get("witness")
    return ScanRow(
        e_leader=obj["e_leader"],
        coset_size=obj["coset_size"],
        in_C1=obj["in_C1"],
        d=obj["d"],
        exact=obj["exact"],
        optimal=obj["optimal"],
        theorem_tags=tuple(obj.get("theorem_tags", ())),
        witness=None if w is None else Witness(c=tuple(w["c"]), x_logs=tuple(w["x_logs"])),
    )


@dataclass(frozen=True)
class ScanResult:
    p: int
    m: int
    pi: tuple[int, ...]
    n: int
    k: int
    rows: tuple[ScanRow, ...]

    def totals(self) -> dict:
        tag_counts: dict[str, int] = {}
        for row in self.rows:
            for tag in row.theorem_tags:
                tag_counts[tag] = tag_counts.get(tag, 0) + 1
        return {
            "rows": len(self.rows),
            "optimal": sum(1 for r in self.rows if r.optimal is True),
            "not_optimal": sum(1 for r in self.rows if r.optimal is False),
            "undetermined": sum(1 for r in self.rows if r.optimal is None),
            "tagged": sum(1 for r in self.rows if r.theorem_tags),
            "tag_counts": dict(sorted(tag_counts.items())),
        }

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "pi": list(self.pi),
            "n": self.n,
            "k": self.k,
            "totals": self.totals(),
            "rows": [r.to_json() for r in self.rows],
        }


def _theorem_tag_map(p: int, m: int, leaders: list[int]) -> dict[int, tuple[str, ...]]:
    """Leader -> sorted checker ids that predict optimality for that class.

    Family checkers report exponents that need not be coset leaders, so every
    vouched-for e is folded onto its leader before tagging.
    """
    if p < 5:
        return {}
    n = p**m - 1
    tags: dict[int, set[str]] = {}

    def vouch(e: int, theorem_id: str) -> None:
        leader = coset_of(e % n, p, m).leader
        tags.setdefault(leader, set()).add(theorem_id)

    singles = [check_T_pm2(p, m), check_T_sm1(p, m)]
    singles += [check_T_s_ph1(p, m, h) for h in range(m)]
    if p == 5:
        singles.append(check_C_sm1_p5(m))
        singles += [check_T_5_half(m, h) for h in range(m)]
        singles += [check_T_45h3(m, h) for h in (0, 1)]
        singles.append(check_T_5_minus3(m))
    if p == 7:
        singles.append(check_C_sm1_p7(m))
    for v in singles:
        if v.predicted_optimal is True and v.e is not None:
            vouch(v.e, v.theorem_id)

    for sign in ("+", "-"):
        for k in range(m):
            for h in range(m):
                if sign == "-" and k == 0 and h == 0:
                    continue
                v = check_T_cong(p, m, k, h, sign)
                if not v.applicable:
                    continue
                for e, member_ok in v.members:
                    if member_ok is True:
                        vouch(e, v.theorem_id)

    if p == 5:
        # Exact characterisations; sound to run per leader because the
        # defining systems are invariant under e -> p*e.
        for leader in leaders:
            v = check_P_quinary_iff(m, leader)
            if v.applicable and v.predicted_optimal is True:
                vouch(leader, v.theorem_id)
            if leader % 4 == 3:
                w = check_T_q_e3mod4(m, leader)
                if w.applicable and w.predicted_optimal is True:
                    vouch(leader, w.theorem_id)

    return {lead: tuple(sorted(ts)) for lead, ts in tags.items()}


def optimal_flag(d: int, exact: bool, n: int, k: int, p: int) -> Optional[bool]:
    """Tri-state optimality: refuted, proven best possible, or unsettled."""
    if d < 4:
        return False
    if not exact:
        return None
    return d == 4 and sphere_packing_optimal(n, k, 4, p)


def _measure_row(
    coset: Coset, field: FieldSpec, tags: tuple[str, ...]
) -> ScanRow:
    code = construct_code(coset.leader, field)
    report = min_distance(code, threads=1)
    optimal = optimal_flag(report.d, report.exact, code.n, code.k, field.p)
    return ScanRow(
        e_leader=coset.leader,
        coset_size=coset.size,
        in_C1=in_C1(coset.leader, field.p, field.m),
        d=report.d,
        exact=report.exact,
        optimal=optimal,
        theorem_tags=tags,
        witness=report.witness,
    )


class _Journal:
    """Append-only JSON-lines store of finished scan rows."""

    def __init__(self, path: str, field: FieldSpec):
        self.path = path
        self.header = {"p": field.p, "m": field.m, "pi": list(field.pi.coeffs)}
        self._fh: Optional[io.TextIOWrapper] = None
        self._since_flush = 0

    def load(self) -> dict[int, ScanRow]:
        rows: dict[int, ScanRow] = {}
        if os.path.exists(self.path) and os.path.getsize(self.path) > 0:
            with open(self.path, "r", encoding="utf-8") as fh:
                lines = fh.read().splitlines()
            try:
                header = json.loads(lines[0])
            except json.JSONDecodeError:
                raise ParameterError(f"journal {self.path!r} has a corrupt header")
            if header != self.header:
                raise ParameterError(
                    f"journal {self.path!r} was written for {header}, "
                    f"not {self.header}; refusing to resume"
                )
            for line in lines[1:]:
                try:
                    obj = json.loads(line)
                    rows[int(obj["e_leader"])] = _row_from_json(obj)
                except (json.JSONDecodeError, KeyError):
                    break  # truncated tail from an interrupted run; redo from here
            self._fh = open(self.path, "w", encoding="utf-8")
            self._fh.write(json.dumps(self.header, sort_keys=True) + "\n")
            for leader in sorted(rows):
                self._fh.write(json.dumps(rows[leader].to_json(), sort_keys=True) + "\n")
            self._fh.flush()
        else:
            self._fh = open(self.path, "w", encoding="utf-8")
            self._fh.write(json.dumps(self.header, sort_keys=True) + "\n")
            self._fh.flush()
        return rows

    def append(self, row: ScanRow) -> None:
        assert self._fh is not None
        self._fh.write(json.dumps(row.to_json(), sort_keys=True) + "\n")
        self._since_flush += 1
        if self._since_flush >= _JOURNAL_FLUSH_EVERY:
            self._fh.flush()
            self._since_flush = 0

    def close(self) -> None:
        if self._fh is not None:
            self._fh.flush()
            self._fh.close()
            self._fh = None


def scan(
    p: int,
    m: int,
    *,
    pi=None,
    threads: Optional[int] = None,
    scan_limit: int = DEFAULT_SCAN_LIMIT,
    journal_path: Optional[str] = None,
) -> ScanResult:
    """Measure every candidate exponent class of F_{p^m} once.

    Skips the classes of 0, 1 and n/2: the first two collide with factors
    every code here already carries, and n/2 is excluded by construction.
    """
    if p**m > scan_limit:
        raise LimitError(
            f"scan over p^m = {p**m} exceeds the limit {scan_limit}; "
            "raise scan_limit explicitly to confirm the cost"
        )
    field = get_field(p, m) if pi is None else get_field(p, m, pi=pi)
    n = field.n
    s = n // 2
    work = [
        c
        for c in coset_leaders(p, m)
        if c.leader >= 2 and c.leader != s and not in_C1(c.leader, p, m)
    ]

    journal = _Journal(journal_path, field) if journal_path is not None else None
    rows: dict[int, ScanRow] = journal.load() if journal is not None else {}

    tag_map = _theorem_tag_map(p, m, [c.leader for c in work])
    pending = [c for c in work if c.leader not in rows]

    nthreads = _resolve_threads(threads)
    try:
        if nthreads == 1 or len(pending) <= 1:
            for coset in pending:
                row = _measure_row(coset, field, tag_map.get(coset.leader, ()))
                rows[row.e_leader] = row
                if journal is not None:
                    journal.append(row)
        else:
            lock = threading.Lock()
            with ThreadPoolExecutor(max_workers=nthreads) as pool:
                futures = [
                    pool.submit(_measure_row, c, field, tag_map.get(c.leader, ()))
                    for c in pending
                ]
                for fut in as_completed(futures):
                    row = fut.result()
                    with lock:
                        rows[row.e_leader] = row
                        if journal is not None:
                            journal.append(row)
    finally:
        if journal is not None:
            journal.close()

    ordered = tuple(rows[c.leader] for c in work)
    return ScanResult(
        p=p,
        m=m,
        pi=field.pi.coeffs,
        n=n,
        k=n - (2 * m + 1),
        rows=ordered,
    )


@dataclass(frozen=True)
class ProbeRow:
    h: int
    e: int
    e_leader: int
    prereqs_ok: bool
    failed: tuple[str, ...]
    in_statement: bool
    d: Optional[int] = None
    exact: bool = False
    witness: Optional[Witness] = None

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "e": self.e,
            "e_leader": self.e_leader,
            "prereqs_ok": self.prereqs_ok,
            "failed": list(self.failed),
            "in_statement": self.in_statement,
            "d": self.d,
            "exact": self.exact,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


@dataclass(frozen=True)
class ProbeReport:
    """Experimental evidence for one open question at one field size."""

    problem_id: str
    m: int
    n: int
    in_statement: bool
    rows: tuple[ProbeRow, ...]

    @property
    def all_d4(self) -> Optional[bool]:
        """True when every admissible instance verified d = 4 exactly."""
        measured = [r for r in self.rows if r.prereqs_ok]
        if not measured:
            return None
        return all(r.d == 4 and r.exact for r in measured)

    def to_json(self) -> dict:
        return {
            "problem_id": self.problem_id,
            "m": self.m,
            "n": self.n,
            "in_statement": self.in_statement,
            "all_d4": self.all_d4,
            "rows": [r.to_json() for r in self.rows],
        }


def probe_open_problem(
    problem_id: str, m: int, *, threads: Optional[int] = None
) -> ProbeReport:
    """Measure the conjectured-optimal family of one open question over F_5^m.

    Even m falls outside both statements; those probes still run and are
    labelled in_statement=False so out-of-scope evidence is never mixed in.
    """
    if problem_id not in OPEN_PROBLEM_IDS:
        raise ParameterError(f"unknown open problem id {problem_id!r}")
    field = get_field(5, m)
    n = field.n
    in_statement = m % 2 == 1
    h_lo = 0 if problem_id == "OP1" else 1
    nthreads = _resolve_threads(threads)

    rows = []
    for h in range(h_lo, m):
        e = op_exponent(problem_id, m, h)
        verdict = check_OP(problem_id, m, h)
        facts = [c for c in verdict.hypothesis_report if c.name != "m odd"]
        failed = tuple(c.name for c in facts if not c.passed)
        prereqs_ok = not failed
        if prereqs_ok:
            report = min_distance(construct_code(e, field), threads=nthreads)
            rows.append(
                ProbeRow(
                    h=h,
                    e=e,
                    e_leader=coset_of(e, 5, m).leader,
                    prereqs_ok=True,
                    failed=(),
                    in_statement=in_statement,
                    d=report.d,
                    exact=report.exact,
                    witness=report.witness,
                )
            )
        else:
            rows.append(
                ProbeRow(
                    h=h,
                    e=e,
                    e_leader=coset_of(e, 5, m).leader,
                    prereqs_ok=False,
                    failed=failed,
                    in_statement=in_statement,
                )
            )
    return ProbeReport(
        problem_id=problem_id, m=m, n=n, in_statement=in_statement, rows=tuple(rows)
    )


# ---------------------------------------------------------------- output --


def scan_to_json(result: ScanResult) -> str:
    return json.dumps(result.to_json(), indent=2, sort_keys=True) + "\n"


_CSV_COLUMNS = (
    "e_leader",
    "coset_size",
    "in_C1",
    "d",
    "exact",
    "optimal",
    "theorem_tags",
    "witness",
)


def scan_to_csv(result: ScanResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for row in result.rows:
        writer.writerow(
            [
                row.e_leader,
                row.coset_size,
                row.in_C1,
                row.d,
                row.exact,
                "" if row.optimal is None else row.optimal,
                ";".join(row.theorem_tags),
                ""
                if row.witness is None
                else json.dumps(row.witness.to_json(), sort_keys=True),
            ]
        )
    return buf.getvalue()


def probe_to_json(report: ProbeReport) -> str:
    return json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n"


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_scan_figures(result: ScanResult, outdir: str) -> list[str]:
    """Distance scatter and tag histogram as PNGs; returns the paths."""
    plt = _pyplot()
    os.makedirs(outdir, exist_ok=True)
    stem = f"scan_p{result.p}_m{result.m}"
    paths = []

    fig, ax = plt.subplots(figsize=(9, 4.5))
    groups = (
        ("optimal", [r for r in result.rows if r.optimal is True], "tab:green", "o"),
        ("d < 4", [r for r in result.rows if r.optimal is False], "tab:red", "x"),
        ("unsettled", [r for r in result.rows if r.optimal is None], "tab:gray", "."),
    )
    for label, rows, color, marker in groups:
        if not rows:
            continue
        ax.scatter(
            [r.e_leader for r in rows],
            [r.d for r in rows],
            s=18,
            c=color,
            marker=marker,
            label=f"{label} ({len(rows)})",
        )
    ax.set_xlabel("coset leader e")
    ax.set_ylabel("minimum distance found")
    ax.set_yticks(sorted({r.d for r in result.rows} | {4}))
    ax.set_title(f"[{result.n}, {result.k}] codes over F_{result.p}, m = {result.m}")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    path = os.path.join(outdir, f"{stem}_distance.png")
    fig.savefig(path, dpi=140)
    plt.close(fig)
    paths.append(path)

    counts = result.totals()["tag_counts"]
    fig, ax = plt.subplots(figsize=(7, max(2.0, 0.5 * max(len(counts), 1) + 1)))
    if counts:
        names = list(counts)
        ax.barh(names, [counts[t] for t in names], color="tab:blue")
        ax.invert_yaxis()
        ax.set_xlabel("exponent classes vouched for")
    else:
        ax.text(0.5, 0.5, "no checker fired", ha="center", va="center")
        ax.set_axis_off()
    ax.set_title(f"checker coverage, p = {result.p}, m = {result.m}")
    fig.tight_layout()
    path = os.path.join(outdir, f"{stem}_tags.png")
    fig.savefig(path, dpi=140)
    plt.close(fig)
    paths.append(path)
    return paths


def render_probe_figure(report: ProbeReport, outdir: str) -> str:
    plt = _pyplot()
    os.makedirs(outdir, exist_ok=True)
    fig, ax = plt.subplots(figsize=(7, 3.5))
    measured = [r for r in report.rows if r.prereqs_ok]
    skipped = [r for r in report.rows if not r.prereqs_ok]
    if measured:
        ax.bar(
            [r.h for r in measured],
            [r.d for r in measured],
            color=["tab:green" if r.d == 4 and r.exact else "tab:red" for r in measured],
        )
    for r in skipped:
        ax.bar([r.h], [0.15], color="tab:gray")
    ax.axhline(4, color="black", linewidth=0.8, linestyle="--")
    ax.set_xlabel("h")
    ax.set_ylabel("minimum distance")
    ax.set_xticks([r.h for r in report.rows])
    scope = "" if report.in_statement else "  [outside statement: m even]"
    ax.set_title(f"{report.problem_id} over F_5^{report.m}{scope}")
    fig.tight_layout()
    path = os.path.join(outdir, f"probe_{report.problem_id}_m{report.m}.png")
    fig.savefig(path, dpi=140)
    plt.close(fig)
    return path


def write_scan_outputs(result: ScanResult, outdir: str) -> dict:
    """JSON + CSV + figures under outdir; returns the path manifest."""
    os.makedirs(outdir, exist_ok=True)
    stem = f"scan_p{result.p}_m{result.m}"
    json_path = os.path.join(outdir, f"{stem}.json")
    csv_path = os.path.join(outdir, f"{stem}.csv")
    with open(json_path, "w", encoding="utf-8") as fh:
        fh.write(scan_to_json(result))
    with open(csv_path, "w", encoding="utf-8") as fh:
        fh.write(scan_to_csv(result))
    figures = render_scan_figures(result, outdir)
    return {"json": json_path, "csv": csv_path, "figures": figures}


def write_probe_outputs(report: ProbeReport, outdir: str) -> dict:
    os.makedirs(outdir, exist_ok=True)
    stem = f"probe_{report.problem_id}_m{report.m}"
    json_path = os.path.join(outdir, f"{stem}.json")
    with open(json_path, "w", encoding="utf-8") as fh:
        fh.write(probe_to_json(report))
    figure = render_probe_figure(report, outdir)
    return {"json": json_path, "figures": [figure]}
