"""Coulson-type integral evaluation of the p-Schatten energy, 0 < p < 2.

For a bipartite graph on an even number N of vertices with spectrum
{+-lambda_j}, write psi(z) = phi(G, iz) = sum_k b_k z^(N-2k) > 0.  Then

    E_p(G) = (2 sin(p pi/2) / pi) * integral_0^inf z^(p-1) g(z) dz,
    g(z)   = N - z psi'(z)/psi(z) = sum_j 2 lambda_j^2 / (z^2 + lambda_j^2),

and for two graphs of equal (padded) order

    E_p(G1) - E_p(G2)
           = (2 p sin(p pi/2) / pi) * integral_0^inf z^(p-1) log(psi1/psi2) dz.

Numerics: the improper integral is split at z=1.  On [0,1] the substitution
z = t^(1/p) absorbs the z^(p-1) weight exactly; on [1,inf) inversion z = 1/u
followed by s = u^(2-p) absorbs the residual u^(1-p) factor exactly, leaving
bounded integrands on the unit interval for recursive-bisection Gauss-Kronrod.
A log z term appears in the difference integrand when nullities differ; it is
integrated in closed form (integral_0^1 z^(p-1) log z dz = -1/p^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels as kernels
from .charpoly import BCoeffs, QuasiOrderResult, b_coefficients, char_poly, quasi_compare
from .graphs import (
    Graph,
    NotBipartiteError,
    ahu_code,
    enumerate_trees,
    is_bipartite,
    path_graph,
    pruefer_from_tree,
    sample_trees,
    star_graph,
)
from .spectrum import DEFAULT_EIG_TOL, eigenvalues, energy_from_spectrum, energy_spectral

DEFAULT_TOL = 1e-8
DEFAULT_MAX_EVALS = 10**6
# Near the endpoints the sin(p pi/2) prefactor fights a growing integral;
# outside this window an explicit override (with a widened budget) is required.
P_GUARD_LOW = 0.05
P_GUARD_HIGH = 1.95
_EXTREME_BUDGET_FACTOR = 10

_MIN_WIDTH = 2.0**-48


class QuadratureError(RuntimeError):
    """Requested tolerance was not reached within the evaluation budget."""

    def __init__(self, message: str, value_estimate: float, error_estimate: float, evaluations: int):
        super().__init__(
            f"{message}: estimate {value_estimate!r} with error estimate "
            f"{error_estimate:.3e} after {evaluations} evaluations"
        )
        self.value_estimate = value_estimate
        self.error_estimate = error_estimate
        self.evaluations = evaluations


class OrderMismatchError(ValueError):
    """The two graphs have different vertex counts after isolated-vertex padding."""


@dataclass(frozen=True)
class QuadratureDiagnostics:
    evaluations: int
    estimated_abs_error: float
    intervals: int

    def to_dict(self) -> dict:
        return {
            "evaluations": self.evaluations,
            "estimated_abs_error": self.estimated_abs_error,
            "intervals": self.intervals,
        }


@dataclass(frozen=True)
class EnergyReport:
    """Spectral value, integral value (when computed), and their discrepancy."""

    p: float
    spectral: float
    integral: float | None
    discrepancy: float | None
    diagnostics: QuadratureDiagnostics | None

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "spectral": self.spectral,
            "integral": self.integral,
            "discrepancy": self.discrepancy,
            "diagnostics": self.diagnostics.to_dict() if self.diagnostics else None,
        }


def pad_to_even(g: Graph) -> Graph:
    """Add one isolated vertex when the order is odd.

    Both the spectral energy (a zero eigenvalue is appended) and the integral
    (the vertex-count term and the log-derivative term rise by 1 each and
    cancel) are invariant under this padding.
    """
    return g.with_isolated(1) if g.n % 2 else g


def f_alpha(alpha: float) -> float:
    """integral_0^inf t^alpha/(t^2+1) dt = pi / (2 cos(alpha pi/2)) for |alpha| < 1."""
    if not -1.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (-1, 1), got {alpha} (integral diverges)")
    return math.pi / (2.0 * math.cos(alpha * math.pi / 2.0))


class PsiPoly:
    """phi(G, iz) for a bipartite graph on an even vertex count.

    Holds the exact b-coefficients plus float coefficient arrays prepared for
    the kernel backend (each exact integer rounded to float exactly once):

      low regime  (z <= 1, w = z^2):  psi = z^nullity * den_lo(w)
      high regime (z > 1,  v = 1/z^2): psi = z^two_n  * den_hi(v)

    with den_lo(0) = b_kmax > 0 and den_hi(0) = 1, so both Horner forms stay
    positive and the log-derivative term needs no special-casing at z = 0.
    """

    def __init__(self, b: BCoeffs):
        if b.n % 2:
            raise ValueError("PsiPoly requires an even vertex count; pad the graph first")
        self.b = b
        self.two_n = b.n
        kmax = 0
        for k, val in enumerate(b.b):
            if val > 0:
                kmax = k
        self.kmax = kmax
        self.nullity = self.two_n - 2 * kmax
        rev = [b.b[kmax - j] for j in range(kmax + 1)]
        self._den_lo = kernels.as_coeffs(rev)
        self._num_lo = kernels.as_coeffs([2 * (kmax - j) * b.b[kmax - j] for j in range(kmax + 1)])
        self._den_hi = kernels.as_coeffs(b.b[: kmax + 1])
        self._num_hi2 = kernels.as_coeffs([2 * k * b.b[k] for k in range(1, kmax + 1)])
        self._tail = kernels.as_coeffs(b.b[1 : kmax + 1])

    @classmethod
    def from_graph(cls, g: Graph) -> "PsiPoly":
        witness = is_bipartite(g)
        if not witness.is_bipartite:
            raise NotBipartiteError(witness.odd_cycle)
        return cls(b_coefficients(char_poly(pad_to_even(g))))

    def logderiv_term(self, z: float) -> float:
        """two_n - z psi'(z)/psi(z), evaluated stably for any z >= 0."""
        if z < 0:
            raise ValueError("z must be nonnegative")
        if z <= 1.0:
            return kernels.poly_ratio(self._num_lo, self._den_lo, z * z)
        v = 1.0 / (z * z)
        return v * kernels.poly_ratio(self._num_hi2, self._den_hi, v)

    def log_value(self, z: float) -> float:
        """log psi(z) for z >= 0 (minus infinity at z = 0 when nullity > 0)."""
        if z < 0:
            raise ValueError("z must be nonnegative")
        if z == 0.0:
            if self.nullity > 0:
                return -math.inf
            return math.log(_horner(self._den_lo, 0.0))
        if z <= 1.0:
            return self.nullity * math.log(z) + math.log(_horner(self._den_lo, z * z))
        return self.two_n * math.log(z) + math.log(_horner(self._den_hi, 1.0 / (z * z)))


def _horner(coeffs, x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def psi_logderiv_term(psi: PsiPoly, z: float) -> float:
    """two_n - z psi'(z)/psi(z) = sum_j 2 lambda_j^2 / (z^2 + lambda_j^2)."""
    return psi.logderiv_term(z)


# ---------------------------------------------------------------------------
# adaptive Gauss-Kronrod 7/15 on the unit interval
# ---------------------------------------------------------------------------

_XGK = (
    0.9914553711208126,
    0.9491079123427585,
    0.8648644233597691,
    0.7415311855993944,
    0.5860872354676911,
    0.4058451513773972,
    0.2077849550078985,
)
_WGK = (
    0.022935322010529224,
    0.06309209262997855,
    0.10479001032225018,
    0.14065325971552592,
    0.1690047266392679,
    0.19035057806478542,
    0.2044329400752989,
    0.20948214108472782,
)
_WG = (
    0.1294849661688697,
    0.27970539148927664,
    0.3818300505051189,
    0.4179591836734694,
)


class _Budget:
    __slots__ = ("used", "limit")

    def __init__(self, limit: int):
        self.used = 0
        self.limit = limit


class _BudgetExceeded(Exception):
    def __init__(self, value: float, error: float):
        self.value = value
        self.error = error


def _gk15(f, a: float, b: float) -> tuple[float, float]:
    """15-point Kronrod value and |K15 - G7| as the local error estimate."""
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = f(center)
    resk = _WGK[7] * fc
    resg = _WG[3] * fc
    for i in range(7):
        dx = half * _XGK[i]
        s = f(center - dx) + f(center + dx)
        resk += _WGK[i] * s
        if i & 1:
            resg += _WG[i >> 1] * s
    return resk * half, abs(resk - resg) * abs(half)


def _adaptive_unit(f, tol: float, budget: _Budget) -> tuple[float, float, int]:
    """Recursive bisection of [0,1]; an interval is accepted when its local
    error estimate is at most tol times its width."""
    if budget.used + 15 > budget.limit:
        raise _BudgetExceeded(0.0, math.inf)
    v0, e0 = _gk15(f, 0.0, 1.0)
    budget.used += 15
    stack = [(0.0, 1.0, v0, e0)]
    total = 0.0
    err = 0.0
    intervals = 0
    while stack:
        a, b, v, e = stack.pop()
        width = b - a
        if e <= tol * width or width <= _MIN_WIDTH:
            total += v
            err += e
            intervals += 1
            continue
        if budget.used + 30 > budget.limit:
            for _, _, pv, pe in stack:
                total += pv
                err += pe
            raise _BudgetExceeded(total + v, err + e)
        mid = 0.5 * (a + b)
        v1, e1 = _gk15(f, a, mid)
        v2, e2 = _gk15(f, mid, b)
        budget.used += 30
        stack.append((a, mid, v1, e1))
        stack.append((mid, b, v2, e2))
    return total, err, intervals


def _improper_pair(f_lo, f_hi, quad_tol: float, budget: _Budget) -> tuple[float, float, int]:
    total = 0.0
    err = 0.0
    intervals = 0
    for f in (f_lo, f_hi):
        try:
            v, e, c = _adaptive_unit(f, quad_tol * 0.5, budget)
        except _BudgetExceeded as exc:
            raise _BudgetExceeded(total + exc.value, err + exc.error) from None
        total += v
        err += e
        intervals += c
    return total, err, intervals


def _check_p_range(p: float, allow_extreme_p: bool, max_evals: int) -> int:
    if not 0.0 < p < 2.0:
        raise ValueError(f"p must lie in (0, 2) for the integral formulas, got {p}")
    if P_GUARD_LOW <= p <= P_GUARD_HIGH:
        return max_evals
    if not allow_extreme_p:
        raise ValueError(
            f"p={p} is outside the guarded range [{P_GUARD_LOW}, {P_GUARD_HIGH}] where "
            "cancellation against the sin(p pi/2) prefactor dominates; pass "
            "allow_extreme_p=True to proceed with a widened budget"
        )
    return max_evals * _EXTREME_BUDGET_FACTOR


def integrate_power_weighted(g, p: float, tol: float = DEFAULT_TOL,
                             max_evals: int = DEFAULT_MAX_EVALS,
                             allow_extreme_p: bool = False) -> tuple[float, QuadratureDiagnostics]:
    """integral_0^inf z^(p-1) g(z) dz for bounded g with g(z) = O(z^-2).

    Generic-callable version of the machinery behind the energy integrals,
    using the same substitutions on both halves.
    """
    limit = _check_p_range(p, allow_extreme_p, max_evals)
    if tol <= 0:
        raise ValueError("tol must be positive")
    budget = _Budget(limit)
    exp_lo = 1.0 / p
    inv_tail = 1.0 / (2.0 - p)

    def f_lo(t: float) -> float:
        return g(t**exp_lo) / p

    def f_hi(s: float) -> float:
        u = s**inv_tail
        den = u * u
        if den == 0.0:
            return 0.0
        return g(1.0 / u) / den * inv_tail

    try:
        value, err, intervals = _improper_pair(f_lo, f_hi, tol, budget)
    except _BudgetExceeded as exc:
        raise QuadratureError("evaluation budget exhausted", exc.value, exc.error, budget.used)
    if err > tol:
        raise QuadratureError("tolerance not met at minimal interval width", value, err, budget.used)
    return value, QuadratureDiagnostics(budget.used, err, intervals)


def integrate_coulson(psi: PsiPoly, p: float, tol: float = DEFAULT_TOL,
                      max_evals: int = DEFAULT_MAX_EVALS,
                      allow_extreme_p: bool = False) -> tuple[float, QuadratureDiagnostics]:
    """(2 sin(p pi/2)/pi) * integral_0^inf z^(p-1) (two_n - z psi'/psi) dz."""
    limit = _check_p_range(p, allow_extreme_p, max_evals)
    if tol <= 0:
        raise ValueError("tol must be positive")
    pref = 2.0 * math.sin(p * math.pi / 2.0) / math.pi
    quad_tol = tol / pref
    budget = _Budget(limit)
    exp_lo = 2.0 / p
    exp_hi = 2.0 / (2.0 - p)
    num_lo, den_lo = psi._num_lo, psi._den_lo
    num_hi2, den_hi = psi._num_hi2, psi._den_hi
    ratio = kernels.poly_ratio

    def f_lo(t: float) -> float:
        return ratio(num_lo, den_lo, t**exp_lo) / p

    def f_hi(s: float) -> float:
        return ratio(num_hi2, den_hi, s**exp_hi) / (2.0 - p)

    try:
        raw, raw_err, intervals = _improper_pair(f_lo, f_hi, quad_tol, budget)
    except _BudgetExceeded as exc:
        raise QuadratureError(
            "evaluation budget exhausted", pref * exc.value, pref * exc.error, budget.used
        )
    value = pref * raw
    est = pref * raw_err
    if est > tol:
        raise QuadratureError("tolerance not met at minimal interval width", value, est, budget.used)
    return value, QuadratureDiagnostics(budget.used, est, intervals)


def energy_coulson(g: Graph, p: float, tol: float = DEFAULT_TOL, *,
                   eig_tol: float = DEFAULT_EIG_TOL,
                   max_evals: int = DEFAULT_MAX_EVALS,
                   allow_extreme_p: bool = False) -> EnergyReport:
    """Integral-formula energy with the spectral value as cross-check."""
    witness = is_bipartite(g)
    if not witness.is_bipartite:
        raise NotBipartiteError(witness.odd_cycle)
    psi = PsiPoly(b_coefficients(char_poly(pad_to_even(g))))
    integral, diag = integrate_coulson(psi, p, tol, max_evals, allow_extreme_p)
    spectral = energy_spectral(g, p, eig_tol)
    return EnergyReport(p, spectral, integral, abs(spectral - integral), diag)


def energy_difference_cj(g1: Graph, g2: Graph, p: float, tol: float = DEFAULT_TOL, *,
                         eig_tol: float = DEFAULT_EIG_TOL,
                         max_evals: int = DEFAULT_MAX_EVALS,
                         allow_extreme_p: bool = False) -> EnergyReport:
    """E_p(g1) - E_p(g2) via the log-ratio difference integral.

    Requires equal vertex counts after isolated-vertex padding.  The z^two_n
    factors cancel exactly in the ratio; when the nullities differ the
    leftover log z piece on [0,1] is integrated in closed form.
    """
    for g in (g1, g2):
        witness = is_bipartite(g)
        if not witness.is_bipartite:
            raise NotBipartiteError(witness.odd_cycle)
    pg1, pg2 = pad_to_even(g1), pad_to_even(g2)
    if pg1.n != pg2.n:
        raise OrderMismatchError(
            f"vertex counts differ after padding ({pg1.n} vs {pg2.n}); "
            "the difference formula needs equal orders"
        )
    limit = _check_p_range(p, allow_extreme_p, max_evals)
    if tol <= 0:
        raise ValueError("tol must be positive")
    psi1 = PsiPoly(b_coefficients(char_poly(pg1)))
    psi2 = PsiPoly(b_coefficients(char_poly(pg2)))
    pref = 2.0 * p * math.sin(p * math.pi / 2.0) / math.pi
    quad_tol = tol / pref
    budget = _Budget(limit)
    exp_lo = 2.0 / p
    exp_hi = 2.0 / (2.0 - p)
    analytic = (psi1.nullity - psi2.nullity) * (-1.0 / (p * p))
    den_lo1, den_lo2 = psi1._den_lo, psi2._den_lo
    tail1, tail2 = psi1._tail, psi2._tail
    log_ratio = kernels.log_poly_ratio
    tail_ratio = kernels.log1p_ratio_over_x

    def f_lo(t: float) -> float:
        return log_ratio(den_lo1, den_lo2, t**exp_lo) / p

    def f_hi(s: float) -> float:
        return tail_ratio(tail1, tail2, s**exp_hi) / (2.0 - p)

    try:
        raw, raw_err, intervals = _improper_pair(f_lo, f_hi, quad_tol, budget)
    except _BudgetExceeded as exc:
        raise QuadratureError(
            "evaluation budget exhausted",
            pref * (analytic + exc.value),
            pref * exc.error,
            budget.used,
        )
    value = pref * (analytic + raw)
    est = pref * raw_err
    if est > tol:
        raise QuadratureError("tolerance not met at minimal interval width", value, est, budget.used)
    spectral = energy_spectral(g1, p, eig_tol) - energy_spectral(g2, p, eig_tol)
    return EnergyReport(p, spectral, value, abs(spectral - value), QuadratureDiagnostics(budget.used, est, intervals))


# ---------------------------------------------------------------------------
# theorem-level verification drivers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TreeBoundsReport:
    """Star-below / path-above check over all (or sampled) trees on n vertices."""

    n: int
    p_grid: tuple[float, ...]
    tol: float
    tree_count: int
    violations: tuple[dict, ...]
    per_p_violations: dict
    star_attained: bool | None
    path_attained: bool | None
    sampled: bool
    sample: int | None
    seed: int | None

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p_grid": list(self.p_grid),
            "tol": self.tol,
            "tree_count": self.tree_count,
            "violation_count": len(self.violations),
            "violations": list(self.violations),
            "per_p_violations": {str(p): c for p, c in self.per_p_violations.items()},
            "star_attained": self.star_attained,
            "path_attained": self.path_attained,
            "sampled": self.sampled,
            "sample": self.sample,
            "seed": self.seed,
        }


def _tree_entries(n: int, eig_tol: float, sample: int | None, seed: int):
    trees = enumerate_trees(n) if sample is None else sample_trees(n, sample, seed)
    entries = []
    for t in trees:
        entries.append(
            (
                ahu_code(t),
                pruefer_from_tree(t),
                b_coefficients(char_poly(t)),
                eigenvalues(t, eig_tol),
            )
        )
    return entries


def verify_tree_bounds(n: int, p_grid, tol: float = 1e-9, *,
                       eig_tol: float = DEFAULT_EIG_TOL,
                       attain_tol: float = 1e-12,
                       sample: int | None = None,
                       seed: int = 0) -> TreeBoundsReport:
    """Check, over every tree T on n vertices, that the star sits below and the
    path above, both in the quasi-order on b-vectors and in spectral energy at
    each grid p in (0,2).  Violations carry the witness tree's canonical code
    and a Pruefer sequence of its labeled representative.
    """
    p_list = [float(p) for p in p_grid]
    for p in p_list:
        if not 0.0 < p < 2.0:
            raise ValueError(f"p_grid entries must lie in (0, 2), got {p}")
    star, path = star_graph(n), path_graph(n)
    b_star = b_coefficients(char_poly(star))
    b_path = b_coefficients(char_poly(path))
    spec_star = eigenvalues(star, eig_tol)
    spec_path = eigenvalues(path, eig_tol)
    cut = 10.0 * eig_tol
    entries = _tree_entries(n, eig_tol, sample, seed)

    violations: list[dict] = []
    for code, pruef, bt, _ in entries:
        verdict = quasi_compare(b_star, bt)
        if verdict not in (QuasiOrderResult.LESS, QuasiOrderResult.EQUAL):
            violations.append(
                {"kind": "quasi_star", "tree": code, "pruefer": pruef, "verdict": verdict.value}
            )
        verdict = quasi_compare(bt, b_path)
        if verdict not in (QuasiOrderResult.LESS, QuasiOrderResult.EQUAL):
            violations.append(
                {"kind": "quasi_path", "tree": code, "pruefer": pruef, "verdict": verdict.value}
            )

    per_p: dict[float, int] = {}
    star_attained = True
    path_attained = True
    for p in p_list:
        e_star = energy_from_spectrum(spec_star, p, cut)
        e_path = energy_from_spectrum(spec_path, p, cut)
        before = len(violations)
        star_gap = math.inf
        path_gap = math.inf
        for code, pruef, _, spec in entries:
            e_t = energy_from_spectrum(spec, p, cut)
            if e_star > e_t + tol:
                violations.append(
                    {"kind": "energy_star", "p": p, "tree": code, "pruefer": pruef,
                     "star_energy": e_star, "tree_energy": e_t}
                )
            if e_t > e_path + tol:
                violations.append(
                    {"kind": "energy_path", "p": p, "tree": code, "pruefer": pruef,
                     "path_energy": e_path, "tree_energy": e_t}
                )
            star_gap = min(star_gap, abs(e_t - e_star))
            path_gap = min(path_gap, abs(e_path - e_t))
        per_p[p] = len(violations) - before
        star_attained = star_attained and star_gap <= attain_tol
        path_attained = path_attained and path_gap <= attain_tol

    exhaustive = sample is None
    return TreeBoundsReport(
        n=n,
        p_grid=tuple(p_list),
        tol=tol,
        tree_count=len(entries),
        violations=tuple(violations),
        per_p_violations=per_p,
        star_attained=star_attained if exhaustive else None,
        path_attained=path_attained if exhaustive else None,
        sampled=not exhaustive,
        sample=sample,
        seed=seed if sample is not None else None,
    )


@dataclass(frozen=True)
class CsikvariReport:
    """Reversed chain star >= tree >= path for even p >= 4; equality at p = 2."""

    n: int
    p_grid: tuple[int, ...]
    tol: float
    tree_count: int
    violations: tuple[dict, ...]
    per_p_violations: dict
    sampled: bool
    sample: int | None
    seed: int | None

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p_grid": list(self.p_grid),
            "tol": self.tol,
            "tree_count": self.tree_count,
            "violation_count": len(self.violations),
            "violations": list(self.violations),
            "per_p_violations": {str(p): c for p, c in self.per_p_violations.items()},
            "sampled": self.sampled,
            "sample": self.sample,
            "seed": self.seed,
        }


def check_csikvari_direction(n: int, p_even_grid, tol: float = 1e-9, *,
                             eig_tol: float = DEFAULT_EIG_TOL,
                             sample: int | None = None,
                             seed: int = 0) -> CsikvariReport:
    """Spectral check of the reversed ordering at even integer p.

    p = 2 is the degenerate case: every tree on n vertices gives exactly
    2(n-1), checked as an equality.  For p in {4, 6, ...} the chain
    E_p(star) >= E_p(T) >= E_p(path) is verified within tol.
    """
    p_list: list[int] = []
    for p in p_even_grid:
        fp = float(p)
        if fp != int(fp) or int(fp) % 2 or int(fp) < 2:
            raise ValueError(f"p values must be even integers >= 2, got {p}")
        p_list.append(int(fp))
    star, path = star_graph(n), path_graph(n)
    spec_star = eigenvalues(star, eig_tol)
    spec_path = eigenvalues(path, eig_tol)
    cut = 10.0 * eig_tol
    entries = _tree_entries(n, eig_tol, sample, seed)

    violations: list[dict] = []
    per_p: dict[int, int] = {}
    for p in p_list:
        before = len(violations)
        if p == 2:
            target = 2.0 * (n - 1)
            for code, pruef, _, spec in entries:
                e_t = energy_from_spectrum(spec, 2.0, cut)
                if abs(e_t - target) > tol:
                    violations.append(
                        {"kind": "p2_equality", "p": 2, "tree": code, "pruefer": pruef,
                         "tree_energy": e_t, "expected": target}
                    )
        else:
            e_star = energy_from_spectrum(spec_star, float(p), cut)
            e_path = energy_from_spectrum(spec_path, float(p), cut)
            for code, pruef, _, spec in entries:
                e_t = energy_from_spectrum(spec, float(p), cut)
                if e_t > e_star + tol:
                    violations.append(
                        {"kind": "energy_star_reversed", "p": p, "tree": code, "pruefer": pruef,
                         "star_energy": e_star, "tree_energy": e_t}
                    )
                if e_path > e_t + tol:
                    violations.append(
                        {"kind": "energy_path_reversed", "p": p, "tree": code, "pruefer": pruef,
                         "path_energy": e_path, "tree_energy": e_t}
                    )
        per_p[p] = len(violations) - before

    return CsikvariReport(
        n=n,
        p_grid=tuple(p_list),
        tol=tol,
        tree_count=len(entries),
        violations=tuple(violations),
        per_p_violations=per_p,
        sampled=sample is not None,
        sample=sample,
        seed=seed if sample is not None else None,
    )
