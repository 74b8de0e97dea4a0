"""Named verification suites and the runner behind ``elchi verify``."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from ..checks import (
    abstract_identities_report,
    duality_report,
    hopf_f_report,
    hopf_u_report,
    lemma22_report,
    prop23_report,
)
from ..classical import classical_oracle, limit_compare, phase_convention_report
from ..envalg import prop24_crosscheck
from ..report import VerificationReport
from ..schrodinger import (
    AngularSpec,
    PlaneWaveSpec,
    angular_state,
    hypergeometric_report,
    lemma32_report,
    lemma34_report,
    lemma35_report,
    lemma38_report,
    plane_wave_basis,
    plane_wave_state,
    verify_angular,
    verify_plane_wave,
)
from ..scalar import Z
from .serialize import render

__all__ = ["SuiteConfig", "UnknownSuiteError", "SUITE_NAMES", "build_reports", "run_suite", "gate"]


class UnknownSuiteError(ValueError):
    pass


@dataclass
class SuiteConfig:
    """Window overrides left as None fall back to each suite's defaults."""

    suite: str
    degree: Optional[int] = None
    order: Optional[int] = None
    r_max: Optional[int] = None
    l_max: Optional[int] = None
    out: Optional[str] = None
    fmt: str = "text"
    corrupt: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        if self.suite not in SUITE_NAMES:
            raise UnknownSuiteError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITE_NAMES)}")
        for name in ("degree", "order", "r_max", "l_max"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ValueError(f"--{name.replace('_', '-')} must be positive, got {v}")
        if self.fmt not in ("json", "csv", "text"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.corrupt is not None and self.suite not in CORRUPTIBLE:
            raise ValueError(f"--corrupt applies to {', '.join(CORRUPTIBLE)} only")

    def pick(self, name: str, default: int) -> int:
        v = getattr(self, name)
        return default if v is None else v


# each builder returns a list of reports


def _hopf_f(cfg):
    return [hopf_f_report(lmax=2, degree=cfg.pick("degree", 3))]


def _hopf_u(cfg):
    return [hopf_u_report(degree=cfg.pick("degree", 2), bmax=2)]


def _duality(cfg):
    return [duality_report(lmax=2, degree=cfg.pick("degree", 2))]


def _lemma22(cfg):
    return [lemma22_report()]


def _prop23(cfg):
    return [prop23_report(plane_degree=cfg.pick("degree", 6))]


def _prop24(cfg):
    reps = prop24_crosscheck(lmax=2, degree=cfg.pick("degree", 4))
    return [reps[g] for g in ("P1", "P2", "J")]


def _abstract(cfg):
    return [abstract_identities_report()]


def _lemma32(cfg):
    return [lemma32_report(nmax=cfg.pick("order", 10))]


def _lemma34(cfg):
    return [lemma34_report(nmax=cfg.pick("order", 10))]


def _lemma35(cfg):
    return [lemma35_report(nmax=cfg.pick("order", 8))]


def _lemma38(cfg):
    return [lemma38_report(max_j=cfg.pick("l_max", 8), max_r=cfg.pick("r_max", 5), max_deg=cfg.pick("degree", 8))]


def _prop33(cfg):
    n = cfg.pick("order", 8)
    return [verify_plane_wave(max_m=n, max_n=n, corrupt=cfg.corrupt)]


def _prop39(cfg):
    return [verify_angular(max_r=cfg.pick("r_max", 5), max_l=cfg.pick("l_max", 8))]


def _hypergeometric(cfg):
    return [hypergeometric_report(order=cfg.pick("order", 8), max_r=cfg.pick("r_max", 5), max_l=cfg.pick("l_max", 8))]


def classical_limit_reports(order: int = 8, max_r: int = 5, max_l: int = 8,
                            corrupt: Optional[Tuple[int, int]] = None) -> List[VerificationReport]:
    """Limits of plane waves N <= order and angular states |r| <= max_r.

    ``corrupt=(m, n)`` shifts the x^m xbar^n coefficient of the limit of the
    order-N plane wave by one, for negative controls.
    """
    reps = []
    for n_ord in range(order + 1):
        state = plane_wave_state(PlaneWaveSpec(order=n_ord))
        if corrupt is not None and n_ord == order:
            m, n = corrupt
            # the top term of (chi)_m (1-chibar)_n is (-1)^n chi^m chibar^n -> x^m xbar^n / z^(m+n)
            state = state + plane_wave_basis(m, n).scale(Z ** (m + n))
        reps.append(limit_compare(state, classical_oracle("planewave", n_ord), n_ord,
                                  identity=f"plane-wave limit N={n_ord}"))
    for r in range(-max_r, max_r + 1):
        fam = "chi" if r <= 0 else "chibar"
        state = angular_state(AngularSpec(r, max_l))
        reps.append(limit_compare(state, classical_oracle("bessel", max_l, r=abs(r), family=fam), order,
                                  identity=f"angular limit r={r}"))
    reps.append(phase_convention_report(order))
    return reps


def _classical(cfg):
    return classical_limit_reports(cfg.pick("order", 8), cfg.pick("r_max", 5), cfg.pick("l_max", 8), cfg.corrupt)


_BUILDERS: Dict[str, Callable] = {
    "hopf-f": _hopf_f,
    "hopf-u": _hopf_u,
    "duality": _duality,
    "lemma22": _lemma22,
    "prop23": _prop23,
    "prop24-crosscheck": _prop24,
    "abstract-identities": _abstract,
    "lemma32": _lemma32,
    "prop33": _prop33,
    "lemma34": _lemma34,
    "lemma35": _lemma35,
    "lemma38": _lemma38,
    "prop39": _prop39,
    "hypergeometric": _hypergeometric,
    "classical-limits": _classical,
}
SUITE_NAMES = tuple(_BUILDERS) + ("all",)
CORRUPTIBLE = ("prop33", "classical-limits")


def build_reports(cfg: SuiteConfig, timings: Optional[Dict[str, float]] = None) -> List[VerificationReport]:
    names = list(_BUILDERS) if cfg.suite == "all" else [cfg.suite]
    reps: List[VerificationReport] = []
    for name in names:
        t0 = time.perf_counter()
        reps.extend(_BUILDERS[name](cfg))
        if timings is not None:
            timings[name] = time.perf_counter() - t0
    return reps


def gate(reports) -> bool:
    """True iff every report that is not informational passed."""
    return all(r.passed or r.informational for r in reports)


def run_suite(cfg: SuiteConfig, timings: Optional[Dict[str, float]] = None) -> Tuple[int, List[VerificationReport], str]:
    """Run, render and optionally write the report; returns (exit code, reports, rendered text)."""
    reps = build_reports(cfg, timings)
    ok = gate(reps)
    payload = {"suite": cfg.suite, "pass": ok, "reports": reps} if cfg.fmt == "json" else reps
    text = render(payload, cfg.fmt)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return (0 if ok else 1), reps, text
