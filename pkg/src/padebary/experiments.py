"""Error curves for the two worked examples and the perturbation study.

Example 1 approximates ``tan(4t)/(4t)`` with ``p = q = 4`` using the first
five poles and zeros of the function as form-1 nodes. Example 2 approximates
``log(1+t)/t`` with pole nodes equidistant in ``[-10, -1]`` and zero nodes
equidistant in ``[-10, -2]``. Errors are measured on ``[-1.5, 1.5]``.
"""

from __future__ import annotations

import csv
import statistics
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import series as fps
from .barycentric import bpa_form1, bpa_form2
from .errors import InvalidInput, NumericalFailure, PadeError
from .formats import save_approximant
from .pade_core import pade
from .series import FormalPowerSeries, contact_order, perturb

DEFAULT_SEED = 42
DEFAULT_EPS = 1e-4
DEFAULT_GRID = "-1.5:1.5:601"
OMEGA = 4.0
DEGREE = 4

# Error ranges over t in [-1.5, 1.5] for the perturbed tan(4t)/(4t) series,
# as reported for one (unpublished) random draw.
REFERENCE_INTERVALS = {
    "pade": (3.5528e-5, 2.8663e4),
    "barycentric": (4.8921e-8, 1.8136e3),
}

METHODS = ("pade", "bpa1", "bpa2")


def example1_nodes(omega: float = OMEGA):
    """Form-1 pole and zero nodes: the five first poles/zeros of tan(wt)/(wt)."""
    odd = np.array([1, -1, 3, -3, 5], dtype=float)
    return odd * np.pi / (2 * omega), odd * np.pi / omega


def example2_nodes():
    return np.linspace(-10, -1, DEGREE + 1), np.linspace(-10, -2, DEGREE + 1)


def parse_grid(text: str) -> np.ndarray:
    """``"a:b:n"`` -> ``n`` equispaced points from ``a`` to ``b`` inclusive."""
    parts = text.split(":")
    if len(parts) != 3:
        raise InvalidInput(f"grid must look like a:b:n, got {text!r}")
    try:
        a, b, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise InvalidInput(f"grid must look like a:b:n, got {text!r}") from None
    if n < 2:
        raise InvalidInput("grid needs at least 2 points")
    if not (np.isfinite(a) and np.isfinite(b)) or a >= b:
        raise InvalidInput("grid needs finite a < b")
    return np.linspace(a, b, n)


def reference_function(text: str):
    """Analytic reference from a string like ``tan-over-t:4`` or ``geometric:2``."""
    name, _, arg = text.partition(":")
    try:
        if name == "tan-over-t":
            omega = float(arg) if arg else OMEGA
            return lambda t: fps.tan_over_t(t, omega)
        if name == "log1p-over-t":
            return fps.log1p_over_t
        if name == "exp":
            return fps.exp
        if name == "geometric":
            r = complex(arg)
            return lambda t: fps.geometric(t, r)
        if name == "const":
            v = complex(arg)
            return lambda t: np.full(np.shape(t), v, dtype=complex)
        if name == "none":
            return lambda t: np.full(np.shape(t), np.nan, dtype=complex)
    except ValueError:
        raise InvalidInput(f"bad parameter in reference {text!r}") from None
    raise InvalidInput(f"unknown reference {text!r}")


@dataclass
class ApproxReport:
    grid: np.ndarray
    ref: np.ndarray
    val: np.ndarray
    abs_err: np.ndarray = field(init=False)
    pole_mask: np.ndarray = field(init=False)

    def __post_init__(self):
        self.pole_mask = np.isinf(self.val)
        with np.errstate(invalid="ignore"):
            self.abs_err = np.where(self.pole_mask, np.inf, np.abs(self.val - self.ref))

    def error_range(self):
        """(min, max) of the error over finite, non-pole points."""
        e = self.abs_err[~self.pole_mask & np.isfinite(self.abs_err)]
        if e.size == 0:
            return float("nan"), float("nan")
        return float(e.min()), float(e.max())


def make_report(approx, grid, ref) -> ApproxReport:
    grid = np.asarray(grid, dtype=float)
    return ApproxReport(grid, np.asarray(ref(grid), dtype=complex), np.asarray(approx(grid), dtype=complex))


def fmt(x: float) -> str:
    return repr(float(x))


REPORT_HEADER = ["t", "ref_re", "ref_im", "val_re", "val_im", "abs_err", "is_pole"]


def report_rows(rep: ApproxReport):
    for t, r, v, e, pole in zip(rep.grid, rep.ref, rep.val, rep.abs_err, rep.pole_mask):
        yield [fmt(t), fmt(r.real), fmt(r.imag), fmt(v.real), fmt(v.imag), fmt(e), str(int(pole))]


def write_report_csv(rep: ApproxReport, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(REPORT_HEADER)
    w.writerows(report_rows(rep))


def build_methods(c: FormalPowerSeries, pnodes, znodes, degree: int = DEGREE) -> dict:
    """Classic ``[d/d]`` plus form-1 and form-2 BPA with the given form-1 nodes."""
    pnodes = np.asarray(pnodes, dtype=complex)
    znodes = np.asarray(znodes, dtype=complex)
    return {
        "pade": pade(c, degree, degree),
        "bpa1": bpa_form1(c, pnodes, znodes),
        "bpa2": bpa_form2(c, 1 / pnodes, 1 / znodes),
    }


def write_figure_csv(path, grid, ref, approximants: dict) -> dict:
    """One plot-ready CSV with a value/error/pole column group per method."""
    reports = {name: make_report(R, grid, ref) for name, R in approximants.items()}
    first = next(iter(reports.values()))
    header = ["t", "ref_re", "ref_im"]
    for name in reports:
        header += [f"{name}_re", f"{name}_im", f"{name}_abs_err", f"{name}_is_pole"]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for i, t in enumerate(grid):
            row = [fmt(t), fmt(first.ref[i].real), fmt(first.ref[i].imag)]
            for rep in reports.values():
                v = rep.val[i]
                row += [fmt(v.real), fmt(v.imag), fmt(rep.abs_err[i]), str(int(rep.pole_mask[i]))]
            w.writerow(row)
    return reports


@dataclass
class SeedResult:
    seed: int
    method: str
    status: str
    contact: int | None = None
    min_err: float = float("nan")
    max_err: float = float("nan")


def _contract(degree):
    return 2 * degree + 1


def perturbation_study(eps: float, seeds, grid=None, omega: float = OMEGA, degree: int = DEGREE):
    """Rebuild all methods on perturbed tan series, one run per seed.

    Returns a list of :class:`SeedResult`. A method whose expansion does not
    reproduce its own perturbed series through order ``2*degree`` is marked
    ``"contact-failed"``; a method that cannot be built is ``"failed"``.
    """
    grid = parse_grid(DEFAULT_GRID) if grid is None else grid
    base = fps.tan_over_t_series(omega, 2 * degree)
    ref = lambda t: fps.tan_over_t(t, omega)  # noqa: E731
    pnodes, znodes = example1_nodes(omega)
    results = []
    for seed in seeds:
        c = perturb(base, eps, seed)
        try:
            methods = build_methods(c, pnodes, znodes, degree)
        except PadeError as exc:
            results += [SeedResult(seed, m, f"failed: {exc}") for m in METHODS]
            continue
        for name, R in methods.items():
            m = contact_order(R.expand(2 * degree), c)
            status = "ok" if m >= _contract(degree) else "contact-failed"
            lo, hi = make_report(R, grid, ref).error_range()
            results.append(SeedResult(seed, name, status, m, lo, hi))
    return results


SUMMARY_HEADER = ["seed", "method", "status", "contact_order", "min_abs_err", "max_abs_err", "median_max_abs_err"]


def write_perturbation_csv(results, fh, eps: float) -> None:
    fh.write(f"# eps={fmt(eps)} grid={DEFAULT_GRID} function=tan(4t)/(4t) p=q={DEGREE}\n")
    for name, (lo, hi) in REFERENCE_INTERVALS.items():
        fh.write(f"# reference interval {name}: [{lo:.4e}, {hi:.4e}]\n")
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(SUMMARY_HEADER)
    for r in results:
        w.writerow([r.seed, r.method, r.status, "" if r.contact is None else r.contact,
                    fmt(r.min_err), fmt(r.max_err), ""])
    for name, lo, hi, med in summarize(results):
        w.writerow(["summary", name, "ok", "", fmt(lo), fmt(hi), fmt(med)])


def summarize(results):
    """Per method: (name, min of mins, max of maxes, median of maxes) over good seeds."""
    out = []
    for name in METHODS:
        good = [r for r in results if r.method == name and r.status == "ok"]
        if not good:
            out.append((name, float("nan"), float("nan"), float("nan")))
            continue
        out.append((
            name,
            min(r.min_err for r in good),
            max(r.max_err for r in good),
            statistics.median(r.max_err for r in good),
        ))
    return out


def reproduce(example: str, outdir, seed: int = DEFAULT_SEED, eps: float = DEFAULT_EPS) -> list[Path]:
    """Write the data files behind the figures of `example`.

    ``example1`` writes ``figure1.csv`` (exact coefficients) and
    ``figure2.csv`` (coefficients perturbed with `eps` and `seed`);
    ``example2`` writes ``figure3.csv``. The approximants are saved as JSON
    next to them.
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    grid = parse_grid(DEFAULT_GRID)
    written = []

    def emit(tag, c, ref, pnodes, znodes):
        methods = build_methods(c, pnodes, znodes)
        for name, R in methods.items():
            m = contact_order(R.expand(2 * DEGREE), c)
            if m < _contract(DEGREE):
                raise _ContactError(f"{tag}/{name}: contact order {m} < {_contract(DEGREE)}")
            path = outdir / f"{tag}_{name}.json"
            save_approximant(R, path)
            written.append(path)
        path = outdir / f"{tag}.csv"
        write_figure_csv(path, grid, ref, methods)
        written.append(path)

    if example == "example1":
        c = fps.tan_over_t_series(OMEGA, 2 * DEGREE)
        ref = lambda t: fps.tan_over_t(t, OMEGA)  # noqa: E731
        pnodes, znodes = example1_nodes(OMEGA)
        emit("figure1", c, ref, pnodes, znodes)
        emit("figure2", perturb(c, eps, seed), ref, pnodes, znodes)
    elif example == "example2":
        c = fps.log1p_over_t_series(2 * DEGREE)
        pnodes, znodes = example2_nodes()
        emit("figure3", c, fps.log1p_over_t, pnodes, znodes)
    else:
        raise InvalidInput(f"unknown example {example!r}")
    return written


class _ContactError(NumericalFailure):
    pass
