"""Verification harness: named inequality checks, exhaustive scans, family
suites, and extremal search.

Every check records its computed left and right sides next to the verdict, so
a report reader can re-derive each comparison.  Checks are classified
``proven`` (a failure is an implementation bug and aborts the suite by
raising ``ProvenCheckError``) or ``empirical`` (a failure is a recorded
finding: the statement's constant is not pinned down, so the suite logs the
observed ratio instead of asserting it).  All comparisons run in exact
integer arithmetic; ratios appear only inside recorded findings.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import _bulk
from ._bitops import pack, point_to_str, table_mask, table_size
from .commlb import submatrix_witness
from .core import TruthTable, tt_parse, tt_serialize
from .families import and_, gip, maj, or_compose, parity, rubinstein, rubinstein_row, tree_function
from .measures import (
    ArityLimitError,
    alternation,
    block_sensitivity,
    certificate,
    dt_depth,
    modp_degree,
    real_degree,
    sensitivity,
    shift_invariant_alternation,
    sparsity,
)
from .transforms import alt_to_s_linear, bs_to_s_affine, sherstov_linear

__all__ = [
    "Check",
    "CheckReport",
    "ExtremalRecord",
    "ProvenCheckError",
    "STATISTICS",
    "inequality_suite",
    "exhaustive_scan",
    "family_suite",
    "extremal_search",
    "revalidate_record",
]


@dataclass
class Check:
    name: str
    statement: str
    kind: str  # "proven" or "empirical"
    left: object
    right: object
    verdict: str  # "holds" | "fails" | "hypothesis-not-met" | "skipped"
    witness: dict | None = None

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "statement": self.statement,
            "kind": self.kind,
            "left": self.left,
            "right": self.right,
            "verdict": self.verdict,
            "witness": self.witness,
        }


@dataclass
class ExtremalRecord:
    """A function achieving a tracked statistic, reproducible from the record."""

    function: str
    statistic: str
    value: float
    arity: int

    def to_json_dict(self) -> dict:
        return {
            "function": self.function,
            "statistic": self.statistic,
            "value": self.value,
            "arity": self.arity,
        }


@dataclass
class CheckReport:
    suite: str
    subject: str
    checks: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    extremal: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not any(c.kind == "proven" and c.verdict == "fails" for c in self.checks)

    def counts(self) -> dict:
        out = {"holds": 0, "fails": 0, "hypothesis-not-met": 0, "skipped": 0}
        for c in self.checks:
            out[c.verdict] += 1
        return out

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "subject": self.subject,
            "ok": self.ok,
            "counts": self.counts(),
            "checks": [c.to_json_dict() for c in self.checks],
            "findings": list(self.findings),
            "extremal": [r.to_json_dict() for r in self.extremal],
        }

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}   subject: {self.subject}"]
        width = max((len(c.name) for c in self.checks), default=4)
        for c in self.checks:
            lines.append(
                f"  [{c.verdict:^18}] {c.name:<{width}}  "
                f"left={c.left!r} right={c.right!r}  ({c.statement})"
            )
        for rec in self.extremal:
            lines.append(
                f"  extremal {rec.statistic} = {rec.value} at {rec.function}"
            )
        for f in self.findings:
            lines.append(f"  finding: {f}")
        counts = self.counts()
        lines.append(
            "  summary: "
            + " ".join(f"{k}={v}" for k, v in counts.items())
            + f"  ok={self.ok}"
        )
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        rows = ["name,kind,verdict,left,right,statement"]
        for c in self.checks:
            stmt = c.statement.replace('"', "'")
            rows.append(f'{c.name},{c.kind},{c.verdict},{c.left},{c.right},"{stmt}"')
        return "\n".join(rows) + "\n"


class ProvenCheckError(RuntimeError):
    """A statement that must hold failed; the witness pinpoints the bug."""

    def __init__(self, message: str, report: CheckReport | None = None):
        super().__init__(message)
        self.report = report


def _raise_if_broken(report: CheckReport) -> CheckReport:
    for c in report.checks:
        if c.kind == "proven" and c.verdict == "fails":
            raise ProvenCheckError(
                f"proven check {c.name} failed on {report.subject}: "
                f"left={c.left!r} right={c.right!r} witness={c.witness!r}",
                report,
            )
    return report


# ---------------------------------------------------------------------------
# per-function inequality suite


def inequality_suite(f: TruthTable, primes=(2, 3), limits: dict | None = None) -> CheckReport:
    """Every per-function check, with witnesses; proven failures raise."""
    limits = limits or {}
    n = f.n
    report = CheckReport("function", tt_serialize(f))
    vals: dict = {}
    skips: dict = {}

    def compute(name, fn):
        try:
            vals[name] = fn()
        except ArityLimitError as e:
            skips[name] = str(e)

    compute("s", lambda: sensitivity(f))
    compute("bs", lambda: block_sensitivity(f, limit=limits.get("bs")))
    compute("bs0", lambda: block_sensitivity(f, at=0, limit=limits.get("bs")))
    compute("C", lambda: certificate(f, limit=limits.get("C")))
    compute("alt", lambda: alternation(f))
    compute("salt", lambda: shift_invariant_alternation(f, limit=limits.get("salt")))
    vals["deg"] = real_degree(f)
    for p in primes:
        vals[f"deg_{p}"] = modp_degree(f, p)
    vals["sparsity"] = sparsity(f)
    compute("DT", lambda: dt_depth(f, limit=limits.get("DT")))
    depends_all = len(f.relevant_variables()) == n

    def comparison(name, statement, needs, left_fn, right_fn, kind="proven", gate=True):
        missing = [k for k in needs if k not in vals]
        if missing:
            report.checks.append(
                Check(name, statement, kind, None, None, "skipped",
                      {"reason": "; ".join(skips[k] for k in missing)})
            )
            return
        if not gate:
            report.checks.append(
                Check(name, statement, kind, None, None, "hypothesis-not-met", None)
            )
            return
        left, right = left_fn(), right_fn()
        verdict = "holds" if left <= right else "fails"
        report.checks.append(Check(name, statement, kind, left, right, verdict))

    comparison("s_le_bs", "s(f) <= bs(f)", ["s", "bs"], lambda: vals["s"], lambda: vals["bs"])
    comparison("bs_le_C", "bs(f) <= C(f)", ["bs", "C"], lambda: vals["bs"], lambda: vals["C"])
    for p in primes:
        comparison(
            f"deg{p}_le_deg", f"deg_{p}(f) <= deg(f)", [f"deg_{p}"],
            lambda p=p: vals[f"deg_{p}"], lambda: vals["deg"],
        )
    comparison("deg_le_dt", "deg(f) <= DT(f)", ["DT"], lambda: vals["deg"], lambda: vals["DT"])
    comparison(
        "dt_le_bs_cubed", "DT(f) <= bs(f)**3", ["DT", "bs"],
        lambda: vals["DT"], lambda: vals["bs"] ** 3,
    )
    comparison(
        "bs_le_2deg_sq", "bs(f) <= 2*deg(f)**2", ["bs"],
        lambda: vals["bs"], lambda: 2 * vals["deg"] ** 2,
    )
    for p in primes:
        comparison(
            f"dt_le_bs0_deg{p}_sq", f"DT(f) <= bs(f,0)*deg_{p}(f)**2", ["DT", "bs0"],
            lambda: vals["DT"], lambda p=p: vals["bs0"] * vals[f"deg_{p}"] ** 2,
        )
    for p in primes:
        comparison(
            f"deg_lb_from_deg{p}", f"deg(f)*2**deg_{p}(f) >= n (f depends on all variables)",
            [f"deg_{p}"],
            lambda: n, lambda p=p: vals["deg"] * (1 << vals[f"deg_{p}"]),
            gate=depends_all and n > 0,
        )

    # block-packing transform: equality at the all-zero input and at an argmax
    def bs2s_check(name, point_fn):
        try:
            a = point_fn()
            tr = bs_to_s_affine(f, a, limit=limits.get("bs"))
        except ArityLimitError as e:
            report.checks.append(
                Check(name, "s(g,0) == bs(f,a) under the block transform", "proven",
                      None, None, "skipped", {"reason": str(e)})
            )
            return
        cert = tr.certificate
        verdict = "holds" if cert["equality_holds"] else "fails"
        report.checks.append(
            Check(name, "s(g,0) == bs(f,a) under the block transform", "proven",
                  cert["s_g_at_zero"], cert["block_sensitivity"], verdict,
                  {"point": point_to_str(cert["point"], n) if n else ""})
        )

    bs2s_check("bs2s_equality_at_zero", lambda: 0)

    def argmax_point():
        _, fam = block_sensitivity(f, witness=True, limit=limits.get("bs"))
        return fam.point

    bs2s_check("bs2s_equality_at_argmax", argmax_point)

    tr_alt = alt_to_s_linear(f)
    cert = tr_alt.certificate
    alt_ok = cert["holds"] and cert["invertible"]
    report.checks.append(
        Check("alt_le_2sg_plus_1", "alt(f) <= 2*s(g,0)+1 with invertible chain map",
              "proven", cert["alt"], cert["bound"],
              "holds" if alt_ok else "fails",
              {"invertible": cert["invertible"], "s_g_at_zero": cert["s_g_at_zero"]})
    )
    sp_f, sp_g = vals["sparsity"], sparsity(tr_alt.g)
    report.checks.append(
        Check("sparsity_linear_invariance",
              "sparsity(g) == sparsity(f) for invertible linear maps",
              "proven", sp_g, sp_f, "holds" if sp_g == sp_f else "fails")
    )

    # empirical-constant records (never hard assertions)
    if "salt" in vals and "bs" in vals:
        nonconst = not f.is_constant()
        ratio = (
            vals["bs"] / (vals["salt"] ** 2 * vals["s"])
            if nonconst and vals["s"]
            else None
        )
        report.checks.append(
            Check("bs_vs_salt2_s_ratio", "record bs/(salt**2 * s); constant unspecified",
                  "empirical", vals["bs"] if nonconst else None,
                  None, "holds", {"ratio": ratio})
        )
    try:
        tr_sh = sherstov_linear(f, limit=limits.get("bs"))
        cert = tr_sh.certificate
        verdict = "holds" if cert["factor4_holds"] else "fails"
        check = Check(
            "sherstov_factor4", "4*s(g)**2 >= bs(f) for the split-block map (empirical factor)",
            "empirical", cert["block_sensitivity"], 4 * cert["s_g"] ** 2, verdict,
            {"ratio": cert["ratio_bs_over_s_g_sq"]},
        )
        report.checks.append(check)
        if verdict == "fails":
            report.findings.append(
                {"check": "sherstov_factor4", "function": tt_serialize(f),
                 "bs": cert["block_sensitivity"], "s_g": cert["s_g"]}
            )
    except ArityLimitError as e:
        report.checks.append(
            Check("sherstov_factor4", "4*s(g)**2 >= bs(f)", "empirical",
                  None, None, "skipped", {"reason": str(e)})
        )
    return _raise_if_broken(report)


# ---------------------------------------------------------------------------
# exhaustive scans over every function of a small arity


_SCAN_VECTOR_CHECKS = (
    ("s_le_bs", "s(f) <= bs(f)", "s", "bs"),
    ("bs_le_C", "bs(f) <= C(f)", "bs", "C"),
    ("deg_le_dt", "deg(f) <= DT(f)", "deg", "DT"),
)


def _scan_chunk(args) -> dict:
    n, lo, hi, primes, stride, include_submatrix = args
    arrays = _bulk.measure_arrays(n, lo, hi, primes)
    ids = arrays["ids"]
    m = ids.size
    counts: dict = {}
    worst: dict = {}
    violations: list = []

    def record(name, statement, ok_mask, margin, hyp_mask=None):
        applicable = np.ones(m, bool) if hyp_mask is None else hyp_mask
        ok = int((ok_mask & applicable).sum())
        bad = (~ok_mask) & applicable
        fails = int(bad.sum())
        hyp = int((~applicable).sum())
        entry = counts.setdefault(name, {"statement": statement, "holds": 0, "fails": 0,
                                         "hypothesis_not_met": 0})
        entry["holds"] += ok
        entry["fails"] += fails
        entry["hypothesis_not_met"] += hyp
        if fails and len(violations) < 8:
            fid = int(ids[np.argmax(bad)])
            violations.append({"check": name, "function": tt_serialize(TruthTable(n, fid))})
        if applicable.any() and margin is not None:
            margin_vals = margin[applicable]
            pos = int(np.argmin(margin_vals))
            fid = int(ids[np.flatnonzero(applicable)[pos]])
            cand = (int(margin_vals[pos]), fid)
            if name not in worst or cand < worst[name][:2]:
                worst[name] = (cand[0], fid)

    a = arrays
    record("s_le_bs", "s(f) <= bs(f)", a["s"] <= a["bs"], a["bs"] - a["s"])
    record("bs_le_C", "bs(f) <= C(f)", a["bs"] <= a["C"], a["C"] - a["bs"])
    for p in primes:
        dp = a[f"deg_{p}"]
        record(f"deg{p}_le_deg", f"deg_{p} <= deg", dp <= a["deg"], a["deg"] - dp)
        rhs = a["bs0"] * dp * dp
        record(f"dt_le_bs0_deg{p}_sq", f"DT <= bs(f,0)*deg_{p}**2", a["DT"] <= rhs,
               rhs - a["DT"])
        lhs = a["deg"] * (1 << dp.astype(np.int64))
        record(f"deg_lb_from_deg{p}", f"deg*2**deg_{p} >= n", lhs >= n, lhs - n,
               hyp_mask=a["depends_on_all"])
    record("deg_le_dt", "deg <= DT", a["deg"] <= a["DT"], a["DT"] - a["deg"])
    record("dt_le_bs_cubed", "DT <= bs**3", a["DT"] <= a["bs"] ** 3, a["bs"] ** 3 - a["DT"])
    record("bs_le_2deg_sq", "bs <= 2*deg**2", a["bs"] <= 2 * a["deg"] ** 2,
           2 * a["deg"] ** 2 - a["bs"])

    # extremal statistics over this chunk
    extremal: dict = {}
    nonconst = a["s"] > 0

    def track(stat, values, mask):
        if not mask.any():
            return
        vals = np.where(mask, values, -np.inf)
        pos = int(np.argmax(vals))
        cand = (float(vals[pos]), int(ids[pos]))
        if stat not in extremal or (cand[0], -cand[1]) > (
            extremal[stat][0], -extremal[stat][1]
        ):
            extremal[stat] = cand

    with np.errstate(divide="ignore", invalid="ignore"):
        track("bs_over_salt2_s",
              a["bs"] / (a["salt"].astype(float) ** 2 * a["s"]), nonconst)
        track("salt_minus_s", (a["salt"] - a["s"]).astype(float), np.ones(m, bool))
        track("s_over_sqrt_sparsity", a["s"] / np.sqrt(a["sparsity"].astype(float)),
              np.ones(m, bool))

    # per-function transform constructions (the real code path, not the arrays)
    findings: list = []
    eq_names = ("bs2s_equality_at_zero", "bs2s_equality_at_argmax",
                "alt_le_2sg_plus_1", "sparsity_linear_invariance")
    for name, statement in (
        (eq_names[0], "s(g,0) == bs(f,0) under the block transform"),
        (eq_names[1], "s(g,0) == bs(f,argmax) under the block transform"),
        (eq_names[2], "alt <= 2*s(g,0)+1 with invertible chain map"),
        (eq_names[3], "sparsity invariant under the invertible chain map"),
    ):
        counts.setdefault(name, {"statement": statement, "holds": 0, "fails": 0,
                                 "hypothesis_not_met": 0})
    if include_submatrix:
        counts.setdefault("submatrix_identity",
                          {"statement": "f(u&y) == g(u&y) on W x W", "holds": 0,
                           "fails": 0, "hypothesis_not_met": 0})
    sherstov_best = None
    for row, fid in enumerate(ids):
        f = TruthTable(n, int(fid))
        tr0 = bs_to_s_affine(f, 0)
        ok0 = tr0.certificate["equality_holds"]
        if tr0.certificate["block_sensitivity"] != int(a["bs0"][row]):
            raise RuntimeError(f"bulk bs0 mismatch at function {fid}")
        amax = int(a["bs_argmax"][row])
        tr1 = bs_to_s_affine(f, amax)
        ok1 = tr1.certificate["equality_holds"]
        if tr1.certificate["block_sensitivity"] != int(a["bs"][row]):
            raise RuntimeError(f"bulk bs mismatch at function {fid}")
        tra = alt_to_s_linear(f)
        ok2 = tra.certificate["holds"] and tra.certificate["invertible"]
        if tra.certificate["alt"] != int(a["alt"][row]):
            raise RuntimeError(f"bulk alt mismatch at function {fid}")
        sp_g = sparsity(tra.g)
        ok3 = sp_g == int(a["sparsity"][row])
        for name, ok in zip(eq_names, (ok0, ok1, ok2, ok3)):
            key = "holds" if ok else "fails"
            counts[name][key] += 1
            if not ok and len(violations) < 8:
                violations.append({"check": name, "function": tt_serialize(f)})
        sh = sherstov_linear(f)
        cert = sh.certificate
        if not cert["factor4_holds"]:
            if len(findings) < 20:
                findings.append({"check": "sherstov_factor4",
                                 "function": tt_serialize(f),
                                 "bs": cert["block_sensitivity"], "s_g": cert["s_g"]})
        ratio = cert["ratio_bs_over_s_g_sq"]
        if ratio is not None:
            cand = (float(ratio), int(fid))
            if sherstov_best is None or (cand[0], -cand[1]) > (
                sherstov_best[0], -sherstov_best[1]
            ):
                sherstov_best = cand
        if include_submatrix:
            submatrix_witness(f)  # raises VerificationError on any mismatch
            counts["submatrix_identity"]["holds"] += 1
    if sherstov_best is not None:
        extremal["bs_over_sherstov_s2"] = sherstov_best

    # cross-check the vectorized arrays against the per-function API
    for row in range(0, m, max(1, stride)):
        f = TruthTable(n, int(ids[row]))
        expect = {
            "s": sensitivity(f),
            "bs": block_sensitivity(f),
            "bs0": block_sensitivity(f, at=0),
            "C": certificate(f),
            "alt": alternation(f),
            "salt": shift_invariant_alternation(f),
            "deg": real_degree(f),
            "sparsity": sparsity(f),
            "DT": dt_depth(f),
        }
        for p in primes:
            expect[f"deg_{p}"] = modp_degree(f, p)
        for key, want in expect.items():
            got = int(a[key][row])
            if got != want:
                raise RuntimeError(
                    f"bulk/{key} mismatch at function {int(ids[row])}: "
                    f"bulk={got} api={want}"
                )

    return {
        "counts": counts,
        "worst": {k: (int(v[0]), int(v[1])) for k, v in worst.items()},
        "extremal": extremal,
        "findings": findings,
        "violations": violations,
        "functions": m,
    }


def exhaustive_scan(
    n: int,
    primes=(2, 3),
    workers: int = 1,
    crosscheck: int = 24,
    include_submatrix: bool | None = None,
) -> CheckReport:
    """Run every check on every function of arity n (n <= 4).

    Measure values come from the array engine; the transform constructions
    run through the ordinary per-function code for every single function; a
    deterministic subsample is recomputed with the per-function measure API
    and compared.  ``workers`` > 1 partitions the function space; the merge
    is order-deterministic either way.
    """
    if not 0 <= n <= _bulk.MAX_BULK_ARITY:
        raise ValueError(f"exhaustive scan supports 0 <= n <= {_bulk.MAX_BULK_ARITY}")
    if include_submatrix is None:
        include_submatrix = n <= 3
    total = 1 << (1 << n)
    workers = max(1, min(workers, total))
    stride = max(1, total // max(crosscheck, 1))
    bounds = np.linspace(0, total, workers + 1, dtype=np.int64)
    args = [
        (n, int(bounds[i]), int(bounds[i + 1]), tuple(primes), stride, include_submatrix)
        for i in range(workers)
        if bounds[i] < bounds[i + 1]
    ]
    if len(args) == 1:
        chunks = [_scan_chunk(args[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(args)) as pool:
            chunks = list(pool.map(_scan_chunk, args))

    counts: dict = {}
    worst: dict = {}
    extremal: dict = {}
    findings: list = []
    violations: list = []
    functions = 0
    for chunk in chunks:
        functions += chunk["functions"]
        findings.extend(chunk["findings"])
        violations.extend(chunk["violations"])
        for name, entry in chunk["counts"].items():
            agg = counts.setdefault(
                name, {"statement": entry["statement"], "holds": 0, "fails": 0,
                       "hypothesis_not_met": 0}
            )
            for key in ("holds", "fails", "hypothesis_not_met"):
                agg[key] += entry[key]
        for name, cand in chunk["worst"].items():
            if name not in worst or cand < worst[name]:
                worst[name] = cand
        for stat, cand in chunk["extremal"].items():
            if stat not in extremal or (cand[0], -cand[1]) > (
                extremal[stat][0], -extremal[stat][1]
            ):
                extremal[stat] = cand

    report = CheckReport("exhaustive", f"exhaustive:{n}")
    for name, entry in counts.items():
        verdict = "fails" if entry["fails"] else "holds"
        witness: dict = {
            "functions": functions,
            "holds": entry["holds"],
            "fails": entry["fails"],
            "hypothesis_not_met": entry["hypothesis_not_met"],
        }
        if name in worst:
            margin, fid = worst[name]
            witness["tightest"] = {
                "function": tt_serialize(TruthTable(n, fid)),
                "margin": margin,
            }
        report.checks.append(
            Check(name, entry["statement"], "proven", entry["holds"], functions,
                  verdict, witness)
        )
    for stat, (value, fid) in sorted(extremal.items()):
        report.extremal.append(
            ExtremalRecord(tt_serialize(TruthTable(n, fid)), stat, value, n)
        )
    report.findings.extend(findings)
    if violations:
        report.findings.extend(violations)
    return _raise_if_broken(report)


# ---------------------------------------------------------------------------
# family acceptance suite


def _random_zero_ended_tuple(rng: np.random.Generator, max_total: int = 12):
    """Random functions with f(0)=f(1^n)=0, disjointly composable under OR."""
    fs = []
    budget = max_total
    k = int(rng.integers(2, 5))
    for _ in range(k):
        if budget < 2:
            break
        arity = int(rng.integers(2, min(4, budget) + 1))
        budget -= arity
        size = table_size(arity)
        bits = pack(rng.integers(0, 2, size, dtype=np.uint8))
        bits &= ~(1 | (1 << (size - 1)))
        fs.append(TruthTable(arity, bits))
    return fs


def family_suite(
    include_long: bool = False, seed: int = 1, or_tuples: int = 20
) -> CheckReport:
    """Checks specific to the named families, end to end."""
    report = CheckReport("family", "families")
    add = report.checks.append

    def holds(cond):
        return "holds" if cond else "fails"

    # depth-k tree functions: alternation survives every shift
    for k, bound in ((2, 1), (3, 2)) + (((4, 4),) if include_long else ()):
        f = tree_function(k)
        salt = shift_invariant_alternation(f)
        s = sensitivity(f)
        add(Check(f"tree{k}_salt_floor", f"salt(tree_{k}) >= 2**(k-2)", "proven",
                  bound, salt, holds(salt >= bound)))
        add(Check(f"tree{k}_s_ceiling", f"s(tree_{k}) <= k", "proven",
                  s, k, holds(s <= k)))

    # tree functions: alternation against sparsity, exactly
    for k in (2, 3, 4):
        f = tree_function(k)
        alt = alternation(f)
        sp = sparsity(f)
        add(Check(f"tree{k}_alt_vs_sparsity", "(alt+1)**2 >= sparsity", "proven",
                  sp, (alt + 1) ** 2, holds((alt + 1) ** 2 >= sp)))

    # chain transform pipeline on the tree functions
    for k in (2, 3, 4):
        f = tree_function(k)
        tr = alt_to_s_linear(f)
        g = tr.g
        sg = sensitivity(g)
        sp_f, sp_g = sparsity(f), sparsity(g)
        add(Check(f"tree{k}_pipeline_sparsity", "sparsity(g) == sparsity(f)", "proven",
                  sp_g, sp_f, holds(sp_g == sp_f and tr.certificate["invertible"]),
                  {"invertible": tr.certificate["invertible"]}))
        add(Check(f"tree{k}_pipeline_s_vs_sparsity", "4*(s(g)+1)**2 >= sparsity(g)",
                  "proven", sp_g, 4 * (sg + 1) ** 2, holds(4 * (sg + 1) ** 2 >= sp_g),
                  {"s_g": sg}))

    # grid-of-rows composition
    f44 = rubinstein(4, 4)
    alt44 = alternation(f44)
    bs0 = block_sensitivity(f44, at=0, limit=16)
    s44 = sensitivity(f44)
    add(Check("rubinstein44_alt", "alt == 2n with n = 4 rows", "proven",
              alt44, 8, holds(alt44 == 8)))
    add(Check("rubinstein44_bs0", "bs(f,0) == n**2/2", "proven",
              bs0, 8, holds(bs0 == 8)))
    add(Check("rubinstein44_s", "s(f) <= n", "proven", s44, 4, holds(s44 <= 4)))
    add(Check("rubinstein44_bs_vs_s_alt", "4*bs(f,0) >= s*alt", "proven",
              s44 * alt44, 4 * bs0, holds(4 * bs0 >= s44 * alt44)))
    f33 = rubinstein(3, 3)
    bs33 = block_sensitivity(f33)
    s33 = sensitivity(f33)
    salt33 = shift_invariant_alternation(f33)
    add(Check("rubinstein33_bs_vs_s_salt", "4*bs >= s*salt", "proven",
              s33 * salt33, 4 * bs33, holds(4 * bs33 >= s33 * salt33),
              {"bs": bs33, "s": s33, "salt": salt33}))
    h6 = rubinstein_row(6)
    add(Check("row6_alt", "alt(row detector on 6) == 2", "proven",
              alternation(h6), 2, holds(alternation(h6) == 2)))

    # OR composition: exact additivity when every piece vanishes at 0 and 1
    h3 = rubinstein_row(3)
    comp = or_compose([h3, h3])
    add(Check("or_compose_rows", "alt(OR of two row detectors) == 2+2", "proven",
              alternation(comp), 4, holds(alternation(comp) == 4)))
    rng = np.random.default_rng(seed)
    bad = 0
    for _ in range(or_tuples):
        fs = _random_zero_ended_tuple(rng)
        if not fs:
            continue
        lhs = alternation(or_compose(fs))
        rhs = sum(alternation(g) for g in fs)
        if lhs != rhs:
            bad += 1
    add(Check("or_compose_random", "alt(OR composition) == sum of alt", "proven",
              bad, 0, holds(bad == 0), {"tuples": or_tuples, "seed": seed}))
    and2 = and_(2)
    viol = or_compose([and2, and2])
    add(Check("or_compose_hypothesis_violation",
              "without the endpoint hypothesis only <= is promised", "proven",
              alternation(viol), sum(alternation(g) for g in (and2, and2)),
              holds(alternation(viol) <= 2), {"alt": alternation(viol)}))

    # inner XOR-of-ANDs and the simple families
    for nn, kk in ((2, 2), (3, 2), (2, 3)):
        g = gip(nn, kk)
        d2 = modp_degree(g, 2)
        add(Check(f"gip{nn}{kk}_deg2", "deg_2 of XOR of k-ANDs == k", "proven",
                  d2, kk, holds(d2 == kk)))
    for nn in (3, 5):
        add(Check(f"maj{nn}_alt", "alt of a monotone nonconstant function == 1",
                  "proven", alternation(maj(nn)), 1, holds(alternation(maj(nn)) == 1)))
    p4 = parity(4)
    add(Check("parity4_profile", "s == n, deg_2 == 1, sparsity == 1", "proven",
              (sensitivity(p4), modp_degree(p4, 2), sparsity(p4)), (4, 1, 1),
              holds(sensitivity(p4) == 4 and modp_degree(p4, 2) == 1 and sparsity(p4) == 1)))
    return _raise_if_broken(report)


# ---------------------------------------------------------------------------
# extremal search


def _stat_salt_minus_s(f: TruthTable):
    return float(shift_invariant_alternation(f) - sensitivity(f))


def _stat_salt_over_s(f: TruthTable):
    s = sensitivity(f)
    return float(shift_invariant_alternation(f)) / s if s else None


def _stat_bs_over_salt2_s(f: TruthTable):
    s = sensitivity(f)
    if s == 0:
        return None
    salt = shift_invariant_alternation(f)
    return block_sensitivity(f) / (salt * salt * s)


def _stat_s_over_sqrt_sparsity(f: TruthTable):
    return sensitivity(f) / math.sqrt(sparsity(f))


def _stat_bs_over_sherstov_s2(f: TruthTable):
    return sherstov_linear(f).certificate["ratio_bs_over_s_g_sq"]


STATISTICS = {
    "salt_minus_s": _stat_salt_minus_s,
    "salt_over_s": _stat_salt_over_s,
    "bs_over_salt2_s": _stat_bs_over_salt2_s,
    "s_over_sqrt_sparsity": _stat_s_over_sqrt_sparsity,
    "bs_over_sherstov_s2": _stat_bs_over_sherstov_s2,
}

_BULK_STATS = {"salt_minus_s", "salt_over_s", "bs_over_salt2_s", "s_over_sqrt_sparsity"}


@lru_cache(maxsize=None)
def _perm_index_maps(n: int) -> tuple[np.ndarray, ...]:
    size = table_size(n)
    idx = np.arange(size)
    maps = []
    for perm in itertools.permutations(range(n)):
        remap = np.zeros(size, dtype=np.int64)
        for i in range(n):
            remap |= ((idx >> i) & 1) << perm[i]
        maps.append(remap)
    return tuple(maps)


def _canonical_key(n: int, bits: int) -> int:
    """Smallest table among complements and (for n <= 5) variable relabelings.

    Every registered statistic is invariant under complementing the output
    and permuting variables, so deduplication by this key never merges
    functions with different statistic values.
    """
    full = table_mask(n)
    if n > 5:
        return min(bits, bits ^ full)
    from ._bitops import unpack

    arr = unpack(bits, n)
    best = None
    for remap in _perm_index_maps(n):
        b = pack(arr[remap])
        for cand in (b, b ^ full):
            if best is None or cand < best:
                best = cand
    return best


def extremal_search(
    n: int,
    statistic: str,
    budget: int = 10000,
    seed: int = 0,
    top: int = 10,
) -> list[ExtremalRecord]:
    """Top functions of arity n by a named statistic.

    Exhaustive over all functions when n <= 4, otherwise a seeded sample of
    ``budget`` random tables.  Results deduplicate by complement and (n <= 5)
    variable relabeling, and are deterministic for fixed inputs.
    """
    if statistic not in STATISTICS:
        raise ValueError(f"unknown statistic {statistic!r}; known: {sorted(STATISTICS)}")
    stat_fn = STATISTICS[statistic]
    candidates: list[tuple[float, int]] = []
    if n <= _bulk.MAX_BULK_ARITY and statistic in _BULK_STATS:
        a = _bulk.measure_arrays(n, 0, 1 << (1 << n))
        with np.errstate(divide="ignore", invalid="ignore"):
            if statistic == "salt_minus_s":
                vals = (a["salt"] - a["s"]).astype(float)
                mask = np.ones(vals.size, bool)
            elif statistic == "salt_over_s":
                vals = a["salt"] / a["s"].astype(float)
                mask = a["s"] > 0
            elif statistic == "bs_over_salt2_s":
                vals = a["bs"] / (a["salt"].astype(float) ** 2 * a["s"])
                mask = a["s"] > 0
            else:
                vals = a["s"] / np.sqrt(a["sparsity"].astype(float))
                mask = np.ones(vals.size, bool)
        vals = np.where(mask & np.isfinite(vals), vals, -np.inf)
        order = np.argsort(-vals, kind="stable")
        seen: set[int] = set()
        for pos in order:
            if not np.isfinite(vals[pos]):
                continue
            key = _canonical_key(n, int(pos))
            if key in seen:
                continue
            seen.add(key)
            candidates.append((float(vals[pos]), int(pos)))
            if len(candidates) >= top:
                break
    else:
        if n <= _bulk.MAX_BULK_ARITY:
            pool = range(1 << (1 << n))
        else:
            rng = np.random.default_rng(seed)
            size = table_size(n)
            pool = [
                pack(rng.integers(0, 2, size, dtype=np.uint8)) for _ in range(budget)
            ]
        seen = set()
        scored: list[tuple[float, int]] = []
        for bits in pool:
            f = TruthTable(n, bits)
            v = stat_fn(f)
            if v is None:
                continue
            scored.append((float(v), bits))
        scored.sort(key=lambda t: (-t[0], t[1]))
        for v, bits in scored:
            key = _canonical_key(n, bits)
            if key in seen:
                continue
            seen.add(key)
            candidates.append((v, bits))
            if len(candidates) >= top:
                break
    return [
        ExtremalRecord(tt_serialize(TruthTable(n, bits)), statistic, value, n)
        for value, bits in candidates
    ]


def revalidate_record(record: ExtremalRecord) -> bool:
    """Recompute the statistic on the stored function; must reproduce the value."""
    f = tt_parse(record.function)
    value = STATISTICS[record.statistic](f)
    return value is not None and float(value) == record.value
