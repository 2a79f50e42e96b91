"""Claim registry machinery: records, execution engine, reports.

A claim couples hard-coded expected values (exact rationals and integers,
stored as strings) with a runner that recomputes them from scratch.  The
engine compares expected against actual key by key; claims fail with a
concrete witness, are skipped with a reason on cap or timeout, and are
otherwise independent of each other.
"""

from __future__ import annotations

import json
import os
import signal
import time
from dataclasses import dataclass, field, replace
from multiprocessing import get_context

from .smallgroup import CapExceeded

REPORT_VERSION = 1


@dataclass(frozen=True)
class Caps:
    max_order: int = 50000
    max_subgroup_order: int = 2000
    max_aut_order: int = 1000


_active_caps = Caps()


def current_caps() -> Caps:
    return _active_caps


class SkipClaim(Exception):
    """Raised by a runner to record a skip with a mandatory reason."""


class _ClaimTimeout(Exception):
    pass


@dataclass(frozen=True)
class ClaimRecord:
    id: str
    paper_ref: str
    kind: str
    expected: dict
    fn: object = field(repr=False, compare=False)

    def corrupted(self, key: str) -> "ClaimRecord":
        """Copy with one expected constant deliberately broken."""
        bad = dict(self.expected)
        bad[key] = "CORRUPTED:" + str(bad[key])
        return replace(self, expected=bad)


@dataclass(frozen=True)
class ClaimResult:
    id: str
    paper_ref: str
    status: str  # pass | fail | skip
    expected: str
    actual: str
    witness: str | None
    runtime_ms: int

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "paper_ref": self.paper_ref,
            "status": self.status,
            "expected": self.expected,
            "actual": self.actual,
            "witness": self.witness,
            "runtime_ms": self.runtime_ms,
        }


def result_from_json(d: dict) -> ClaimResult:
    return ClaimResult(d["id"], d["paper_ref"], d["status"], d["expected"],
                       d["actual"], d["witness"], d["runtime_ms"])


def _canon(d: dict) -> str:
    return json.dumps({k: str(v) for k, v in d.items()}, sort_keys=True)


def compare(expected: dict, actual: dict):
    """(status, witness) for an expected/actual pair; exact string equality."""
    exp = {k: str(v) for k, v in expected.items()}
    act = {k: str(v) for k, v in actual.items()}
    bad = sorted(set(exp) | set(act))
    mism = [k for k in bad if exp.get(k) != act.get(k)]
    if not mism:
        return "pass", None
    parts = [f"{k}: expected {exp.get(k)!r}, actual {act.get(k)!r}" for k in mism]
    return "fail", "; ".join(parts)


def run_claim(record: ClaimRecord, timeout: float | None = None,
              caps: Caps | None = None) -> ClaimResult:
    global _active_caps
    if caps is not None:
        _active_caps = caps
    t0 = time.monotonic()

    def done(status, actual, witness):
        ms = int((time.monotonic() - t0) * 1000)
        return ClaimResult(record.id, record.paper_ref, status,
                           _canon(record.expected), _canon(actual), witness, ms)

    old_handler = None
    if timeout:
        def _on_alarm(signum, frame):
            raise _ClaimTimeout

        old_handler = signal.signal(signal.SIGALRM, _on_alarm)
        signal.setitimer(signal.ITIMER_REAL, timeout)
    try:
        actual, witness = record.fn()
    except SkipClaim as e:
        return done("skip", {}, f"skipped: {e}")
    except CapExceeded as e:
        return done("skip", {}, f"skipped (cap): {e}")
    except _ClaimTimeout:
        return done("skip", {}, f"skipped (timeout after {timeout}s)")
    except Exception as e:  # engine errors are data, not crashes
        return done("fail", {}, f"error: {type(e).__name__}: {e}")
    finally:
        if timeout:
            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, old_handler)
    status, mism = compare(record.expected, actual)
    if status == "pass":
        return done("pass", actual, witness or None)
    full = mism + (f" [{witness}]" if witness else "")
    return done("fail", actual, full)


def _worker(args):
    claim_id, timeout, caps = args
    from .claims import builtin_claims

    record = next(c for c in builtin_claims() if c.id == claim_id)
    return run_claim(record, timeout=timeout, caps=caps).to_json()


def select_claims(records, ids=None, pattern: str | None = None):
    """Filter by explicit ids and/or a glob pattern on the claim id."""
    out = []
    for r in records:
        if ids and r.id not in ids:
            continue
        if pattern is not None:
            from fnmatch import fnmatch

            if not fnmatch(r.id, pattern):
                continue
        out.append(r)
    return sorted(out, key=lambda r: r.id)


def run(records, jobs: int = 1, timeout: float | None = None,
        caps: Caps | None = None) -> list[ClaimResult]:
    """Execute claims (in parallel if jobs > 1); results in claim-id order."""
    records = sorted(records, key=lambda r: r.id)
    if jobs <= 1 or len(records) <= 1:
        return [run_claim(r, timeout=timeout, caps=caps) for r in records]
    ctx = get_context("fork")
    with ctx.Pool(min(jobs, len(records))) as pool:
        raw = pool.map(_worker, [(r.id, timeout, caps) for r in records])
    results = [result_from_json(d) for d in raw]
    return sorted(results, key=lambda r: r.id)


def summary(results) -> dict:
    out = {"pass": 0, "fail": 0, "skip": 0}
    for r in results:
        out[r.status] += 1
    return out


def report_json(results) -> dict:
    return {
        "version": REPORT_VERSION,
        "claims": [r.to_json() for r in results],
        "summary": summary(results),
    }


def report_text(results) -> str:
    widths = {
        "id": max([len("claim")] + [len(r.id) for r in results]),
        "status": 6,
    }
    lines = []
    head = (f"{'claim':<{widths['id']}}  {'status':<6}  {'ms':>8}  "
            f"expected / actual")
    lines.append(head)
    lines.append("-" * len(head))
    for r in results:
        detail = r.expected if r.status == "pass" else f"{r.expected} / {r.actual}"
        if r.status == "skip":
            detail = r.witness or "skipped"
        if len(detail) > 100:
            detail = detail[:97] + "..."
        lines.append(f"{r.id:<{widths['id']}}  {r.status:<6}  "
                     f"{r.runtime_ms:>8}  {detail}")
        if r.status == "fail" and r.witness:
            lines.append(f"{'':<{widths['id']}}  witness: {r.witness[:160]}")
    s = summary(results)
    lines.append("-" * len(head))
    lines.append(f"pass {s['pass']}  fail {s['fail']}  skip {s['skip']}")
    return "\n".join(lines)


def write_json_report(results, path: str):
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(report_json(results), fh, indent=1, sort_keys=False)
        fh.write("\n")
    os.replace(tmp, path)
