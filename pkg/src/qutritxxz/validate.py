"""Self-validation: every closed form cross-checked against an
independent numeric route, plus the symmetry and oracle properties.

All draws use fixed seeds, so the report is reproducible.  The headline
check also records the residual against the published value 0.9616,
which the closed-form ground state does not reproduce exactly.
"""

import time
from dataclasses import asdict, dataclass, replace

import numpy as np

from .entanglement import (
    negativity,
    partial_transpose,
    pure_state_negativity_oracle,
)
from .matkernel import hermitian_eig
from .model import (
    ModelParams,
    analytic_spectrum,
    hamiltonian_closed_form,
    hamiltonian_tensor,
    hf_coupling,
)
from .sweeps import detect_critical_field
from .thermal import gibbs_analytic, gibbs_numeric, ground_state_mixture

PAPER_HEADLINE_NEGATIVITY = 0.9616


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    worst_residual: float
    tolerance: float
    detail: str = ""


def _random_params(rng) -> ModelParams:
    return ModelParams(
        R=float(rng.uniform(0.05, 6.0)),
        gamma=float(rng.uniform(-2.0, 2.0)),
        Dz=float(rng.uniform(-3.0, 3.0)),
        B=float(rng.uniform(-3.0, 3.0)),
    )


def check_spectrum(n_draws=1000, seed=20240901):
    """Closed-form eigenvalues/eigenvectors vs the Jacobi eigensolver."""
    rng = np.random.default_rng(seed)
    worst_eig = worst_vec = worst_chi = worst_sum = 0.0
    for _ in range(n_draws):
        p = _random_params(rng)
        spec = analytic_spectrum(p)
        h = hamiltonian_tensor(p)
        numeric = hermitian_eig(h).eigenvalues
        worst_eig = max(worst_eig, float(np.max(np.abs(spec.sorted_eigenvalues() - numeric))))
        res = h @ spec.vecs - spec.vecs * spec.eps
        worst_vec = max(worst_vec, float(np.max(np.linalg.norm(res, axis=0))))
        worst_chi = max(worst_chi, abs(spec.chi1 * spec.chi2 - 8.0))
        worst_sum = max(worst_sum, abs(float(spec.eps.sum())))
    return [
        Check("spectrum_analytic_vs_numeric", worst_eig < 1e-10, worst_eig, 1e-10,
              f"{n_draws} random parameter draws"),
        Check("eigenvector_residuals", worst_vec < 1e-12, worst_vec, 1e-12),
        Check("chi1_chi2_equals_8", worst_chi < 1e-12, worst_chi, 1e-12),
        Check("traceless_eigenvalue_sum", worst_sum < 1e-12, worst_sum, 1e-12),
    ]


def check_hamiltonian_routes(n_draws=100, seed=7):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_draws):
        p = _random_params(rng)
        worst = max(worst, float(np.max(np.abs(
            hamiltonian_tensor(p) - hamiltonian_closed_form(p)))))
    return [Check("hamiltonian_tensor_vs_closed_form", worst < 1e-12, worst, 1e-12)]


def check_gibbs_routes(n_draws=200, seed=20240902):
    """Closed-form density-matrix elements vs spectral exponentiation."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_draws):
        p = _random_params(rng)
        t = float(rng.uniform(0.05, 5.0))
        diff = gibbs_analytic(p, t).rho - gibbs_numeric(p, t).rho
        worst = max(worst, float(np.max(np.abs(diff))))
    return [Check("gibbs_analytic_vs_numeric", worst < 1e-10, worst, 1e-10,
                  f"{n_draws} draws, T in [0.05, 5]")]


def check_symmetries(n_draws=20, seed=11):
    """Dz-parity and B-parity of the thermal negativity."""
    rng = np.random.default_rng(seed)
    worst_dz = worst_b = 0.0
    for _ in range(n_draws):
        p = _random_params(rng)
        t = float(rng.uniform(0.05, 2.0))
        n0 = negativity(gibbs_analytic(p, t).rho).value
        n_dz = negativity(gibbs_analytic(replace(p, Dz=-p.Dz), t).rho).value
        n_b = negativity(gibbs_analytic(replace(p, B=-p.B), t).rho).value
        worst_dz = max(worst_dz, abs(n0 - n_dz))
        worst_b = max(worst_b, abs(n0 - n_b))
    return [
        Check("negativity_even_in_Dz", worst_dz < 1e-10, worst_dz, 1e-10),
        Check("negativity_even_in_B", worst_b < 1e-10, worst_b, 1e-10),
    ]


def check_oracle(seed=13):
    """Pure-state negativity oracle vs the partial-transpose pipeline on all
    nine closed-form eigenvectors, plus the PT involution."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(5):
        p = _random_params(rng)
        vecs = analytic_spectrum(p).vecs
        for i in range(9):
            c = vecs[:, i]
            full = negativity(np.outer(c, c.conj())).value
            worst = max(worst, abs(full - pure_state_negativity_oracle(c)))
    a = rng.normal(size=(9, 9)) + 1j * rng.normal(size=(9, 9))
    rho = a @ a.conj().T
    rho /= np.trace(rho).real
    inv = float(np.max(np.abs(partial_transpose(partial_transpose(rho)) - rho)))
    return [
        Check("pure_state_oracle_vs_pt_pipeline", worst < 1e-10, worst, 1e-10),
        Check("partial_transpose_involution", inv == 0.0, inv, 0.0),
    ]


def check_hf_maximum():
    grid = np.arange(0.01, 8.0, 0.001)
    vals = np.array([hf_coupling(r) for r in grid])
    r_star = float(grid[vals.argmax()])
    res_r = abs(r_star - 1.25)
    res_j = abs(hf_coupling(1.25) - 0.235460)
    tail = hf_coupling(6.0)
    return [
        Check("hf_maximum_location", res_r < 1e-3, res_r, 1e-3, f"argmax {r_star}"),
        Check("hf_maximum_value", res_j < 1e-4, res_j, 1e-4),
        Check("hf_tail_below_1e-3", tail < 1e-3, tail, 1e-3, f"J(6) = {tail:.3e}"),
    ]


def check_headline():
    """Low-T negativity at B=0, Dz=1, R=0.5 by two independent routes; the
    residual against the published 0.9616 is reported, not hidden."""
    p = ModelParams(R=0.5, gamma=1.0, Dz=1.0, B=0.0)
    full = negativity(ground_state_mixture(p).rho).value
    spec = analytic_spectrum(p)
    oracle = pure_state_negativity_oracle(spec.vecs[:, 8])
    route_gap = abs(full - oracle)
    paper_gap = abs(full - PAPER_HEADLINE_NEGATIVITY)
    return [
        Check("headline_route_agreement", route_gap < 1e-9, route_gap, 1e-9,
              f"full PT {full:.6f}, pure-state oracle {oracle:.6f}"),
        Check("headline_vs_published_0.9616", paper_gap < 0.01, paper_gap, 0.01,
              f"tool reports {full:.6f}; residual {paper_gap:.6f} vs the "
              "published 0.9616 (the closed-form ground state does not "
              "reproduce that value)"),
    ]


def check_critical_field():
    """Bisection crossings vs the closed-form crossing equations at R=Dz=1."""
    p = ModelParams(R=1.0, gamma=1.0, Dz=1.0)
    j, r = p.J, p.r
    gj = p.gamma * j
    expected = sorted([
        (gj + np.sqrt(gj * gj + 8 * r * r)) / 2 - r,  # eps7 meets eps9
        gj + r,                                        # eps4 meets eps7
    ])
    found = [cp.value for cp in detect_critical_field(p, b_max=2.0)]
    if len(found) != len(expected):
        return [Check("critical_field_bisection", False, float("inf"), 1e-6,
                      f"expected {len(expected)} crossings, found {len(found)}")]
    worst = max(abs(a - b) for a, b in zip(sorted(found), expected))
    return [Check("critical_field_bisection", worst < 1e-6, worst, 1e-6,
                  f"crossings at B = {', '.join(f'{b:.6f}' for b in sorted(found))}")]


def validate(fast: bool = False) -> dict:
    """Run every check and return a machine-readable report."""
    t0 = time.perf_counter()
    checks = []
    checks += check_spectrum(n_draws=100 if fast else 1000)
    checks += check_hamiltonian_routes(n_draws=20 if fast else 100)
    checks += check_gibbs_routes(n_draws=40 if fast else 200)
    checks += check_symmetries(n_draws=5 if fast else 20)
    checks += check_oracle()
    checks += check_hf_maximum()
    checks += check_headline()
    checks += check_critical_field()
    return {
        "passed": all(c.passed for c in checks),
        "elapsed_seconds": time.perf_counter() - t0,
        "checks": [asdict(c) for c in checks],
    }
