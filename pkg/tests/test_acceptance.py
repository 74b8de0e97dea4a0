"""The twelve acceptance criteria, exact (tolerance zero), one PASS/FAIL line each."""

import json
import shutil
import subprocess
import sys
import time
from functools import lru_cache

from conftest import ACCEPTANCE_RESULTS
from elchi.checks import (
    abstract_identities_report, duality_report, hopf_f_report, hopf_u_report, lemma22_report, prop23_report,
)
from elchi.envalg import prop24_crosscheck
from elchi.scalar import HM, HP
from elchi.schrodinger import (
    hypergeometric_report, lemma32_report, lemma34_report, lemma35_report, verify_angular, verify_plane_wave,
)
from elchi.workbench.suites import classical_limit_reports


def _record(num, ok, note=""):
    ACCEPTANCE_RESULTS[num] = (ok, note)
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} {note}")
    return ok


def _failing(reports):
    return [f"{r.identity} ({len(r.discrepancies)} at e.g. {r.discrepancies[0].key})"
            for r in reports if not r.passed and not r.informational]


def _timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


@lru_cache(maxsize=None)
def _lemma_reports():
    (reps, sec) = _timed(lambda: [lemma32_report(10), lemma34_report(10), lemma35_report(8)])
    return reps, sec


@lru_cache(maxsize=None)
def _hypergeometric():
    return hypergeometric_report(order=8, max_r=5, max_l=8)


def _split_hyper(prefix):
    rep = _hypergeometric()
    return [d for d in rep.discrepancies if d.key[0] == prefix]


@lru_cache(maxsize=None)
def _plane_wave():
    return verify_plane_wave(8, 8)


@lru_cache(maxsize=None)
def _angular():
    return verify_angular(max_r=5, max_l=8)


@lru_cache(maxsize=None)
def _abstract():
    return _timed(abstract_identities_report)


def _criterion7_ok():
    rep, sec = _abstract()
    return rep.passed and sec < 10, rep, sec


def _criterion8_ok():
    reps, sec = _lemma_reports()
    return all(r.passed for r in reps) and sec < 120, reps, sec


def _criterion9_ok():
    rep = _plane_wave()
    bad_1f0 = _split_hyper("1F0*1F0")
    return rep.passed and rep.eigenvalue == 4 * HP * HM and not bad_1f0, rep, bad_1f0


def _criterion10_ok():
    rep = _angular()
    bad_2f1 = _split_hyper("2F1")
    return rep.passed and not bad_2f1, rep, bad_2f1


def test_criterion_01_hopf_f():
    rep, sec = _timed(hopf_f_report, lmax=2, degree=3)
    ok = rep.passed and sec < 30
    assert _record(1, ok, f"{rep.checked} checks in {sec:.1f}s {_failing([rep])}")


def test_criterion_02_hopf_u():
    rep, sec = _timed(hopf_u_report, degree=2, bmax=2)
    ok = rep.passed and sec < 30
    assert _record(2, ok, f"{rep.checked} checks in {sec:.1f}s {_failing([rep])}")


def test_criterion_03_duality():
    rep, sec = _timed(duality_report, lmax=2, degree=2)
    assert _record(3, rep.passed, f"{rep.checked} checks in {sec:.1f}s {_failing([rep])}")


def test_criterion_04_twisted_primitive():
    rep = lemma22_report()
    assert _record(4, rep.passed, f"{rep.checked} checks {_failing([rep])}")


def test_criterion_05_homogeneous_space():
    rep = prop23_report(plane_degree=6, lmax=3)
    assert _record(5, rep.passed, f"{rep.checked} checks {_failing([rep])}")


def test_criterion_06_lambda_closed_forms():
    reps = prop24_crosscheck(lmax=2, degree=4)
    p_ok = reps["P1"].passed and reps["P2"].passed
    j_emitted = reps["J"].informational and "discrepancies_confined_to_positive_z" in reps["J"].details
    later = {7: _criterion7_ok()[0], 8: _criterion8_ok()[0], 9: _criterion9_ok()[0], 10: _criterion10_ok()[0]}
    ok = p_ok and j_emitted and all(later.values())
    note = (f"P1/P2 match={p_ok}, J report emitted={j_emitted} "
            f"(J mismatches confined to positive z: {reps['J'].details['discrepancies_confined_to_positive_z']}), "
            f"later suites passing={later}")
    assert _record(6, ok, note)


def test_criterion_07_abstract_identities():
    ok, rep, sec = _criterion7_ok()
    assert _record(7, ok, f"{rep.checked} checks in {sec:.1f}s {_failing([rep])}")


def test_criterion_08_pochhammer_lemmas():
    ok, reps, sec = _criterion8_ok()
    assert _record(8, ok, f"{sum(r.checked for r in reps)} checks in {sec:.1f}s {_failing(reps)}")


def test_criterion_09_plane_waves():
    ok, rep, bad = _criterion9_ok()
    assert _record(9, ok, f"{rep.checked} checks, eigenvalue {rep.eigenvalue}, 1F0 mismatches {len(bad)} "
                          f"{_failing([rep])}")


def test_criterion_10_angular_states():
    ok, rep, bad = _criterion10_ok()
    assert _record(10, ok, f"{rep.checked} checks, 2F1 mismatches {len(bad)} {_failing([rep])}")


def test_criterion_11_classical_limits():
    reps = classical_limit_reports(order=8, max_r=5, max_l=8)
    phase = reps[-1]
    ok = all(r.passed for r in reps) and "substitution" in phase.details
    assert _record(11, ok, f"{len(reps)} limit reports, phase delta: {phase.details.get('substitution')} "
                           f"{_failing(reps)}")


def _elchi(*args):
    exe = shutil.which("elchi")
    cmd = [exe] if exe else [sys.executable, "-m", "elchi.workbench.cli"]
    return subprocess.run(cmd + list(args), capture_output=True, text=True)


def test_criterion_12_cli_all():
    t0 = time.perf_counter()
    proc = _elchi("verify", "all", "--format", "json")
    sec = time.perf_counter() - t0
    data = json.loads(proc.stdout)
    failing = [r["identity"] for r in data["reports"] if not r["pass"] and not r["informational"]]
    neg = _elchi("verify", "prop33", "--corrupt", "3,2", "--format", "json")
    neg_key = json.loads(neg.stdout)["reports"][0]["discrepancies"][0]["key"]
    neg2 = _elchi("verify", "classical-limits", "--corrupt", "4,1", "--format", "json")
    neg2_bad = [r for r in json.loads(neg2.stdout)["reports"] if not r["pass"]]
    neg_ok = (neg.returncode == 1 and neg_key == ["coefficient", 3, 2]
              and neg2.returncode == 1 and len(neg2_bad) == 1 and neg2_bad[0]["discrepancies"][0]["key"] == [4, 1])
    ok = proc.returncode == 0 and sec < 300 and neg_ok
    note = (f"exit {proc.returncode} in {sec:.0f}s, failing suites {failing}; "
            f"negative controls exit 1 naming the key: {neg_ok}")
    assert _record(12, ok, note)
