"""Parameter sweeps, figure presets, and T=0 critical-point detection.

A sweep varies one of T, B, Dz, R over a uniform grid with everything
else fixed, recording (J, r, theta, Z, ground energy, negativity) per
point.  T = 0 grid points use the exact ground-level mixture, which makes
the field-sweep entanglement plateaus sharp instead of smeared by a tiny
temperature.
"""

from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from . import __version__
from .entanglement import negativity
from .model import (
    SIGN_CONVENTION_NOTE,
    DegenerateCoupling,
    ModelParams,
    analytic_spectrum,
    effective_coupling,
    hamiltonian_tensor,
)
from .matkernel import hermitian_eig
from .thermal import GROUND_DEGENERACY_TOL, gibbs, ground_state_mixture, partition_function

CSV_COLUMNS = (
    "grid_param", "grid_value", "T", "B", "Dz", "R", "gamma",
    "J", "r", "theta", "Z", "ground_energy", "negativity",
)

BISECTION_TOL = 1e-8
BRACKET_RESOLUTION = 1e-3
#: smallest negativity counted as a visible onset; finite-T negativity is
#: never exactly zero near Dz = 0, only exponentially small
ONSET_THRESHOLD = 1e-3


class SweepError(RuntimeError):
    """A grid point failed; carries the offending grid value."""

    def __init__(self, grid_value, cause):
        super().__init__(f"sweep failed at grid value {grid_value}: {cause}")
        self.grid_value = grid_value


class NoOnset(RuntimeError):
    """No DM-interaction onset: negativity already positive at Dz = 0, or
    still zero at the scan limit."""


@dataclass(frozen=True)
class SweepSpec:
    vary: str                      # one of T, B, Dz, R
    start: float
    stop: float
    steps: int
    fixed: ModelParams = ModelParams()
    T: float = 1.0                 # ignored when vary == "T"
    outputs: tuple = CSV_COLUMNS

    def __post_init__(self):
        if self.vary not in ("T", "B", "Dz", "R"):
            raise ValueError(f"vary must be one of T, B, Dz, R; got {self.vary!r}")
        if not self.start < self.stop:
            raise ValueError(f"need start < stop, got [{self.start}, {self.stop}]")
        if self.steps < 2:
            raise ValueError(f"need at least 2 steps, got {self.steps}")
        if self.vary == "T" and self.start <= 0:
            raise ValueError("temperature grid must start at T > 0")

    def grid(self) -> np.ndarray:
        # round away linspace's last-bit noise so grid values print cleanly
        return np.round(np.linspace(self.start, self.stop, self.steps), 10)


@dataclass(frozen=True)
class SweepResult:
    rows: list
    meta: dict


@dataclass(frozen=True)
class CriticalPoint:
    parameter: str
    value: float
    kind: str                      # LevelCrossing | NegativityOnset | NegativityDeath
    bracket: tuple


def _point(p: ModelParams, T: float) -> dict:
    r, theta, _ = effective_coupling(p)
    if T == 0.0:
        state = ground_state_mixture(p)
        z = state.Z
    else:
        state = gibbs(p, T)
        z = partition_function(p, T)
    try:
        eps = analytic_spectrum(p).eps
        ground_energy = float(eps.min())
    except DegenerateCoupling:
        ground_energy = float(hermitian_eig(hamiltonian_tensor(p)).eigenvalues[0])
    n = negativity(state.rho).value
    return {
        "T": T, "B": p.B, "Dz": p.Dz, "R": p.R, "gamma": p.gamma,
        "J": p.J, "r": r, "theta": theta, "Z": z,
        "ground_energy": ground_energy, "negativity": n,
    }


def _apply(spec: SweepSpec, value: float):
    """Model params and temperature for one grid point."""
    p, t = spec.fixed, spec.T
    if spec.vary == "T":
        t = float(value)
    elif spec.vary == "R":
        p = replace(p, R=float(value), j_override=None)
    else:
        p = replace(p, **{spec.vary: float(value)})
    return p, t


def run_sweep(spec: SweepSpec, label: Optional[str] = None) -> SweepResult:
    rows = []
    for value in spec.grid():
        p, t = _apply(spec, float(value))
        try:
            rec = _point(p, t)
        except Exception as exc:
            raise SweepError(float(value), exc) from exc
        rec["grid_param"] = spec.vary
        rec["grid_value"] = float(value)
        rows.append(rec)
    meta = {
        "tool": "qutritxxz",
        "version": __version__,
        "vary": spec.vary,
        "start": spec.start,
        "stop": spec.stop,
        "steps": spec.steps,
        "fixed": {
            "R": spec.fixed.R, "gamma": spec.fixed.gamma, "Dz": spec.fixed.Dz,
            "B": spec.fixed.B, "j_override": spec.fixed.j_override,
            "T": spec.T,
        },
        "gamma_default_note": "gamma defaults to 1 (isotropic XXZ point)",
        "sign_convention": SIGN_CONVENTION_NOTE,
    }
    if label is not None:
        meta["label"] = label
    return SweepResult(rows=rows, meta=meta)


def _ground_level_set(p: ModelParams) -> frozenset:
    """Labels (1..9) of closed-form levels within tolerance of the minimum.
    At r = 0 the Hamiltonian is diagonal in the product basis, so the basis
    indices of the minimal diagonal entries serve as labels instead."""
    try:
        eps = analytic_spectrum(p).eps
    except DegenerateCoupling:
        eps = np.diag(hamiltonian_tensor(p)).real
    lo = eps.min()
    return frozenset(int(i) + 1 for i in np.flatnonzero(eps - lo < GROUND_DEGENERACY_TOL))


def detect_critical_field(p: ModelParams, b_max: float = 5.0,
                          resolution: float = BRACKET_RESOLUTION) -> list:
    """T = 0 level crossings in B on [0, b_max], bisected to 1e-8.

    A crossing is any change of the ground-level identity; each one shows
    up as a jump in the zero-temperature entanglement plateaus.
    """
    points = []
    b = 0.0
    ident = _ground_level_set(replace(p, B=0.0))
    while b < b_max:
        b_next = min(b + resolution, b_max)
        ident_next = _ground_level_set(replace(p, B=b_next))
        if ident_next != ident:
            lo, hi = b, b_next
            while hi - lo > BISECTION_TOL:
                mid = 0.5 * (lo + hi)
                if _ground_level_set(replace(p, B=mid)) == ident:
                    lo = mid
                else:
                    hi = mid
            points.append(CriticalPoint(parameter="B", value=0.5 * (lo + hi),
                                        kind="LevelCrossing", bracket=(lo, hi)))
            ident = ident_next
        b = b_next
    return points


def detect_critical_dz(p: ModelParams, T: float, dz_max: float = 10.0,
                       threshold: float = ONSET_THRESHOLD,
                       resolution: float = 1e-2) -> CriticalPoint:
    """Smallest Dz >= 0 where negativity exceeds the onset threshold."""
    if T <= 0:
        raise ValueError(f"temperature must be positive, got {T}")

    def n_at(dz):
        return negativity(gibbs(replace(p, Dz=dz), T).rho).value

    if n_at(0.0) > threshold:
        raise NoOnset(f"negativity already exceeds {threshold} at Dz = 0")
    lo, dz = 0.0, resolution
    while dz <= dz_max and n_at(dz) <= threshold:
        lo, dz = dz, dz + resolution
    if dz > dz_max:
        raise NoOnset(f"negativity stays below {threshold} up to Dz = {dz_max}")
    hi = dz
    while hi - lo > BISECTION_TOL:
        mid = 0.5 * (lo + hi)
        if n_at(mid) > threshold:
            hi = mid
        else:
            lo = mid
    return CriticalPoint(parameter="Dz", value=0.5 * (lo + hi),
                         kind="NegativityOnset", bracket=(lo, hi))


# Figure presets.  Curve-family values the captions leave open are fixed
# choices; they are echoed into each SweepResult's meta.
_DEFAULT = ModelParams(R=0.5, gamma=1.0, Dz=1.0, B=0.0)


def figure_preset(name: str) -> list:
    """Sweep families reproducing the published figures; returns a list of
    labeled SweepResult curves."""
    mk = ModelParams
    if name == "fig1":
        # HF coupling J(R); grid step 0.05 puts the maximum R = 1.25 on-grid
        spec = SweepSpec(vary="R", start=0.05, stop=8.0, steps=160,
                         fixed=mk(R=1.0, Dz=0.0, B=0.0), T=1.0)
        return [run_sweep(spec, label="J(R)")]
    if name == "fig2a":
        return [
            run_sweep(SweepSpec(vary="T", start=0.04, stop=3.0, steps=150,
                                fixed=mk(R=r, Dz=1.0, B=1.0)), label=f"R={r}")
            for r in (0.3, 0.6, 0.9)
        ]
    if name == "fig2b":
        return [
            run_sweep(SweepSpec(vary="T", start=0.04, stop=3.0, steps=150,
                                fixed=mk(R=0.5, Dz=1.0, B=b)), label=f"B={b}")
            for b in (0.0, 0.3, 0.6, 0.9, 1.2)
        ]
    if name == "fig3a":
        return [
            run_sweep(SweepSpec(vary="Dz", start=-4.0, stop=4.0, steps=161,
                                fixed=mk(R=1.0, B=1.0), T=t), label=f"T={t}")
            for t in (0.08, 0.3, 0.6, 1.0)
        ]
    if name == "fig3b":
        return [
            run_sweep(SweepSpec(vary="Dz", start=-4.0, stop=4.0, steps=161,
                                fixed=mk(R=r, B=0.5), T=0.08), label=f"R={r}")
            for r in (0.3, 0.6, 0.9)
        ]
    if name == "fig3c":
        return [
            run_sweep(SweepSpec(vary="Dz", start=-4.0, stop=4.0, steps=161,
                                fixed=mk(R=0.5, B=b), T=0.08), label=f"B={b}")
            for b in (0.5, 0.8, 1.1)
        ]
    if name == "fig4a":
        return [
            run_sweep(SweepSpec(vary="R", start=0.05, stop=8.0, steps=160,
                                fixed=mk(R=1.0, Dz=1.0, B=1.0), T=t), label=f"T={t}")
            for t in (0.04, 0.08, 0.12, 0.5)
        ]
    if name == "fig4b":
        return [
            run_sweep(SweepSpec(vary="B", start=0.0, stop=2.0, steps=161,
                                fixed=mk(R=1.0, Dz=1.0), T=t), label=f"T={t}")
            for t in (0.04, 0.08, 0.12, 0.5)
        ]
    if name == "fig4c":
        return [run_sweep(SweepSpec(vary="B", start=0.0, stop=2.0, steps=161,
                                    fixed=mk(R=1.0, Dz=1.0), T=0.0), label="T=0")]
    raise ValueError(f"unknown figure preset {name!r}")


FIGURE_NAMES = ("fig1", "fig2a", "fig2b", "fig3a", "fig3b", "fig3c",
                "fig4a", "fig4b", "fig4c")
