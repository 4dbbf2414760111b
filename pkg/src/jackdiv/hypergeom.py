"""Truncated hypergeometric series of one and two matrix arguments.

The series are sums over partitions, degree by degree, of generalized
Pochhammer ratios times Jack polynomials of the eigenvalue argument(s).
Truncation policy: stop once ``stall_window`` consecutive degree sums are each
below ``rel_tol`` times the accumulated value; non-convergence within
``max_degree`` is reported, never silently ignored.

Matrix arguments are accepted only as eigenvalue vectors here; adapters from
numeric matrices live next to the samplers that need them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .core import DivisionAlgebra, DomainError
from .jack import ChatEvaluator, as_spectrum, get_table, log_chat_identity


@dataclass(frozen=True)
class SeriesTruncation:
    """Total-degree cutoff and early-stop policy for the partition series."""

    max_degree: int = 40
    rel_tol: float = 1e-10
    stall_window: int = 3

    def __post_init__(self):
        if self.max_degree < 0:
            raise DomainError(f"max_degree must be >= 0, got {self.max_degree}")
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be > 0, got {self.rel_tol}")
        if self.stall_window < 1:
            raise DomainError(f"stall_window must be >= 1, got {self.stall_window}")


DEFAULT_TRUNCATION = SeriesTruncation()


@dataclass
class SeriesResult:
    """Value and truncation metadata of one series evaluation."""

    value: float
    degrees_used: int
    last_term_ratio: float
    converged: bool
    log_value: float | None = None


@dataclass(frozen=True)
class HypergeomSpec:
    """Parameter set of a hypergeometric function of matrix argument(s)."""

    upper: tuple[float, ...]
    lower: tuple[float, ...]
    algebra: DivisionAlgebra
    m: int

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(float(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(float(b) for b in self.lower))
        if self.m < 1:
            raise DomainError(f"m must be >= 1, got {self.m}")
        beta = self.algebra.beta
        for b in self.lower:
            for j in range(1, self.m + 1):
                v = -b + (j - 1) * beta / 2
                if v > -1e-12 and abs(v - round(v)) < 1e-9:
                    raise DomainError(
                        f"lower parameter {b} is a pole: -b + (j-1)*beta/2 = {v} "
                        f"is a nonnegative integer at j = {j}"
                    )

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)


def _termination_bound(spec: HypergeomSpec) -> int | None:
    """Largest first part with a nonzero coefficient, when an upper parameter
    truncates the series; None when it does not terminate."""
    best = None
    for a in spec.upper:
        if a <= 1e-12 and abs(a - round(a)) < 1e-9:
            r = int(-round(a))
            best = r if best is None else min(best, r)
    return best


def _poch_ratio(spec: HypergeomSpec, kappa: tuple[int, ...]) -> float:
    """prod_i [a_i]_kappa / prod_j [b_j]_kappa with factor-level pairing."""
    beta = spec.algebra.beta
    acc = 1.0
    for i, ki in enumerate(kappa, start=1):
        shift = (i - 1) * beta / 2
        for t in range(ki):
            num = 1.0
            for a in spec.upper:
                num *= a - shift + t
            den = 1.0
            for b in spec.lower:
                den *= b - shift + t
            acc *= num / den
    return acc


def _convergence_check(spec: HypergeomSpec, norm: float, terminating: int | None):
    if terminating is not None:
        return
    if spec.p == spec.q + 1:
        if not norm < 1.0:
            raise DomainError(
                f"series with p = q+1 converges only for max |eigenvalue| < 1, got {norm}"
            )
    elif spec.p > spec.q + 1:
        raise DomainError(
            "series with p > q+1 diverges unless an upper parameter is a "
            "nonpositive integer making it terminate"
        )


def _run_series(trunc, term_of_degree, hard_cap, exact_finite=False):
    """Shared degree loop: term_of_degree(k) -> float sum of that degree.

    When ``exact_finite`` the series is a finite sum by construction; every
    degree up to ``hard_cap`` is accumulated and the result is exact.
    """
    sums: list[float] = []
    converged = False
    k = 0
    while k <= hard_cap:
        sums.append(term_of_degree(k))
        if not exact_finite:
            total = math.fsum(sums)
            w = trunc.stall_window
            if k + 1 > w and total != 0.0:
                recent = sums[-w:]
                if all(abs(s) <= trunc.rel_tol * abs(total) for s in recent):
                    converged = True
                    break
        k += 1
    total = math.fsum(sums)
    last_ratio = abs(sums[-1]) / abs(total) if total != 0.0 else abs(sums[-1])
    degrees = len(sums) - 1
    if exact_finite:
        converged = True
    log_value = math.log(total) if total > 0.0 else None
    return SeriesResult(total, degrees, last_ratio, converged, log_value)


def pfq(
    spec: HypergeomSpec,
    x,
    trunc: SeriesTruncation | None = None,
    max_first_part: int | None = None,
) -> SeriesResult:
    """Hypergeometric function of one matrix argument, as a truncated series.

    ``x`` is the eigenvalue vector of the argument.  Convergence domains are
    enforced up front: for p = q+1 the spectral radius must be below 1, and
    for p > q+1 the series must terminate.  ``max_first_part`` restricts the
    partitions to first part <= r, which makes the sum exact and finite.
    """
    trunc = trunc or DEFAULT_TRUNCATION
    spec_x = as_spectrum(x)
    if spec_x.m != spec.m:
        raise DomainError(f"argument has {spec_x.m} eigenvalues but spec.m = {spec.m}")
    terminating = _termination_bound(spec)
    _convergence_check(spec, spec_x.max_abs, terminating)

    r_cap = max_first_part
    if terminating is not None:
        r_cap = terminating if r_cap is None else min(r_cap, terminating)
    exact_finite = r_cap is not None
    hard_cap = spec.m * r_cap if exact_finite else trunc.max_degree

    table = get_table(spec.algebra)
    dp = ChatEvaluator(spec_x.eigenvalues, table, max_first_part=r_cap)

    def term_of_degree(k: int) -> float:
        vals = dp.degree_values(k)
        return math.fsum(_poch_ratio(spec, kap) * v for kap, v in vals.items())

    return _run_series(trunc, term_of_degree, hard_cap, exact_finite)


def pfq_two(
    spec: HypergeomSpec,
    x,
    y,
    trunc: SeriesTruncation | None = None,
) -> SeriesResult:
    """Hypergeometric function of two matrix arguments.

    Each term carries the product of Jack values of both spectra divided by
    the value at the identity (computed by closed form, never by recurrence).
    """
    trunc = trunc or DEFAULT_TRUNCATION
    sx = as_spectrum(x)
    sy = as_spectrum(y)
    if sx.m != sy.m:
        raise DomainError(f"arguments have different sizes: {sx.m} vs {sy.m}")
    if sx.m != spec.m:
        raise DomainError(f"arguments have {sx.m} eigenvalues but spec.m = {spec.m}")
    terminating = _termination_bound(spec)
    _convergence_check(spec, sx.max_abs * sy.max_abs, terminating)

    exact_finite = terminating is not None
    hard_cap = spec.m * terminating if exact_finite else trunc.max_degree
    table = get_table(spec.algebra)
    dpx = ChatEvaluator(sx.eigenvalues, table, max_first_part=terminating)
    dpy = ChatEvaluator(sy.eigenvalues, table, max_first_part=terminating)
    m = spec.m
    alg = spec.algebra

    def term_of_degree(k: int) -> float:
        vx = dpx.degree_values(k)
        vy = dpy.degree_values(k)
        terms = []
        for kap, v in vx.items():
            ci = math.exp(log_chat_identity(kap, m, alg)) if kap else 1.0
            terms.append(_poch_ratio(spec, kap) * v * vy[kap] / ci)
        return math.fsum(terms)

    return _run_series(trunc, term_of_degree, hard_cap, exact_finite)


def truncated_pfq_restricted(
    spec: HypergeomSpec,
    x,
    max_first_part: int,
    trunc: SeriesTruncation | None = None,
) -> SeriesResult:
    """Series restricted to partitions with first part <= ``max_first_part``.

    The restriction makes the sum finite (degree at most m * r), so the result
    is exact and always reported converged.
    """
    if max_first_part < 0:
        raise DomainError(f"max_first_part must be >= 0, got {max_first_part}")
    return pfq(spec, x, trunc=trunc, max_first_part=max_first_part)


def kummer_1f1(
    a: float,
    c: float,
    x,
    algebra: DivisionAlgebra,
    trunc: SeriesTruncation | None = None,
) -> tuple[SeriesResult, SeriesResult]:
    """Both sides of the Kummer relation for the confluent series.

    Returns (lhs, rhs) where lhs is the series at ``x`` with parameters
    (a; c) and rhs is ``etr(x)`` times the series at ``-x`` with parameters
    (c - a; c).  The caller asserts agreement.
    """
    sx = as_spectrum(x)
    lhs_spec = HypergeomSpec((a,), (c,), algebra, sx.m)
    rhs_spec = HypergeomSpec((c - a,), (c,), algebra, sx.m)
    lhs = pfq(lhs_spec, sx, trunc)
    inner = pfq(rhs_spec, sx.scaled(-1.0), trunc)
    scale = math.exp(sx.trace)
    rhs = SeriesResult(
        scale * inner.value,
        inner.degrees_used,
        inner.last_term_ratio,
        inner.converged,
        (math.log(scale * inner.value) if scale * inner.value > 0 else None),
    )
    return lhs, rhs


def euler_2f1(
    a: float,
    b: float,
    c: float,
    x,
    algebra: DivisionAlgebra,
    trunc: SeriesTruncation | None = None,
) -> tuple[SeriesResult, SeriesResult, SeriesResult]:
    """The Gauss series and its two Euler/Pfaff-transformed evaluations.

    Returns (direct, pfaff, euler): the series at ``x`` with (a, b; c); the
    determinant-weighted series at ``-x (I - x)^{-1}`` with (c-a, b; c); and
    the determinant-weighted series at ``x`` with (c-a, c-b; c).  All three
    agree on the common domain.
    """
    sx = as_spectrum(x)
    if not sx.max_abs < 1:
        raise DomainError(f"Gauss series requires max |eigenvalue| < 1, got {sx.max_abs}")
    direct = pfq(HypergeomSpec((a, b), (c,), algebra, sx.m), sx, trunc)

    u = tuple(-lam / (1.0 - lam) for lam in sx.eigenvalues)
    if not max(abs(v) for v in u) < 1:
        raise DomainError(
            "transformed argument -x(I-x)^{-1} leaves the unit ball; the "
            "Pfaff-transformed series does not converge here"
        )
    logdet = math.fsum(math.log1p(-lam) for lam in sx.eigenvalues)
    inner1 = pfq(HypergeomSpec((c - a, b), (c,), algebra, sx.m), u, trunc)
    v1 = math.exp(-b * logdet) * inner1.value
    pfaff = SeriesResult(v1, inner1.degrees_used, inner1.last_term_ratio, inner1.converged,
                         math.log(v1) if v1 > 0 else None)

    inner2 = pfq(HypergeomSpec((c - a, c - b), (c,), algebra, sx.m), sx, trunc)
    v2 = math.exp((c - a - b) * logdet) * inner2.value
    euler = SeriesResult(v2, inner2.degrees_used, inner2.last_term_ratio, inner2.converged,
                         math.log(v2) if v2 > 0 else None)
    return direct, pfaff, euler


@dataclass
class BatchSeriesResult:
    """Fixed-degree vectorized series values plus a convergence diagnostic."""

    values: np.ndarray
    degrees_used: int
    max_last_ratio: float


def pfq_batch(
    spec: HypergeomSpec,
    X: np.ndarray,
    degree: int,
    max_first_part: int | None = None,
    y_eigs=None,
) -> BatchSeriesResult:
    """Evaluate the series on every row of ``X`` to a fixed degree.

    With ``y_eigs`` set, evaluates the two-argument series with that fixed
    second argument instead.  Used by the Monte Carlo harness, where
    per-sample adaptive truncation would break vectorization; callers check
    ``max_last_ratio``.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[1] != spec.m:
        raise DomainError(f"X must be (batch, {spec.m})")
    table = get_table(spec.algebra)
    dp = ChatEvaluator(X, table, max_first_part=max_first_part)
    dpy = None
    if y_eigs is not None:
        dpy = ChatEvaluator(np.asarray(y_eigs, dtype=float), table, max_first_part=max_first_part)
    total = np.zeros(X.shape[0])
    last = np.zeros(X.shape[0])
    for k in range(degree + 1):
        vals = dp.degree_values(k)
        yvals = dpy.degree_values(k) if dpy is not None else None
        dsum = np.zeros(X.shape[0])
        for kap, v in vals.items():
            coef = _poch_ratio(spec, kap)
            if yvals is not None:
                ci = math.exp(log_chat_identity(kap, spec.m, spec.algebra)) if kap else 1.0
                coef *= yvals[kap] / ci
            dsum += coef * v
        total += dsum
        last = dsum
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = np.where(total != 0.0, np.abs(last) / np.abs(total), np.abs(last))
    return BatchSeriesResult(total, degree, float(ratios.max()))


# ---------------------------------------------------------------------------
# High-degree positive-term engine for two eigenvalues.
#
# The generic evaluator prices strip coefficients per (partition, predecessor)
# pair, which is wasteful once thousands of degrees are needed (far tails of
# eigenvalue distribution functions).  For m = 2 the strip coefficient has a
# closed form in log space, so each degree costs a handful of vector ops.
# ---------------------------------------------------------------------------


def _log_phi_table(alpha: float, n_max: int) -> np.ndarray:
    """log of prod_{t=0}^{n-1} (1 + alpha t) for n = 0..n_max."""
    n = np.arange(n_max + 1, dtype=float)
    return n * math.log(alpha) + gammaln(1.0 / alpha + n) - gammaln(1.0 / alpha)


def pfq_positive_m2(
    upper: tuple[float, ...],
    lower: tuple[float, ...],
    t,
    algebra: DivisionAlgebra,
    rel_tol: float = 1e-12,
    max_degree: int = 4000,
    stall_window: int = 3,
) -> SeriesResult:
    """One-argument series for m = 2 with nonnegative eigenvalues and positive
    shifted parameters, stable to very high degree.

    All terms are positive, so the accumulated value is exact to rounding and
    ``log_value`` is always finite.  Raises when a shifted parameter is not
    positive (use :func:`pfq` there instead).
    """
    beta = algebra.beta
    alpha = float(algebra.alpha)
    t1, t2 = sorted((float(t[0]), float(t[1])), reverse=True)
    if t2 < 0:
        raise DomainError("the high-degree engine requires nonnegative eigenvalues")
    for par in tuple(upper) + tuple(lower):
        for i in (1, 2):
            if not par - (i - 1) * beta / 2 > 0:
                raise DomainError(
                    f"parameter {par} has nonpositive shift at row {i}; outside the "
                    "positive-series domain of the high-degree engine"
                )
    if t1 == 0.0:
        return SeriesResult(1.0, 0, 0.0, True, 0.0)

    logphi = _log_phi_table(alpha, max_degree + 2)
    logt1 = math.log(t1)
    logt2 = math.log(t2) if t2 > 0 else -math.inf

    def row_logpoch(par: float, kvec: np.ndarray, row: int) -> np.ndarray:
        base = par - (row - 1) * beta / 2
        return gammaln(base + kvec) - gammaln(base)

    sums: list[float] = []
    converged = False
    k = 0
    while k <= max_degree:
        k1 = np.arange((k + 1) // 2, k + 1, dtype=int)
        k2 = k - k1
        logcoef = np.zeros(len(k1))
        for par in upper:
            logcoef += row_logpoch(par, k1.astype(float), 1)
            logcoef += row_logpoch(par, k2.astype(float), 2)
        for par in lower:
            logcoef -= row_logpoch(par, k1.astype(float), 1)
            logcoef -= row_logpoch(par, k2.astype(float), 2)

        if t2 == 0.0:
            # only mu1 = k1 = k with k2 = 0 contributes
            chat = np.where(k2 == 0, np.exp(k1 * logt1 - gammaln(k1 + 1.0)), 0.0)
            dsum = float(np.dot(np.exp(logcoef), chat))
        else:
            # flatten (kappa, mu1) pairs; segments are contiguous per kappa
            counts = k1 - k2 + 1
            offsets = np.concatenate(([0], np.cumsum(counts)[:-1]))
            idx = np.repeat(np.arange(len(k1)), counts)
            mu1 = np.concatenate([np.arange(b, a + 1) for a, b in zip(k1, k2)]) if len(k1) else np.array([], dtype=int)
            K1 = k1[idx]
            K2 = k2[idx]
            logg = (
                K2 * math.log(alpha)
                + gammaln(mu1 + 1.0)
                - gammaln(mu1 - K2 + 1.0)
                - gammaln(K2 + 1.0)
                - gammaln(K1 - mu1 + 1.0)
                + logphi[mu1 - K2]
                - logphi[K1 + 1]
                + logphi[K1 - K2 + 1]
                - logphi[K1 - K2]
                + logphi[K1 - mu1]
            )
            logterm = (
                mu1 * logt1
                - gammaln(mu1 + 1.0)
                + np.where(k - mu1 > 0, (k - mu1) * logt2, 0.0)
                + logg
                + logcoef[idx]
            )
            terms = np.exp(logterm)
            dsum = float(np.add.reduceat(terms, offsets).sum()) if len(terms) else 0.0

        sums.append(dsum)
        total = math.fsum(sums)
        if k + 1 > stall_window and total != 0.0:
            if all(abs(s) <= rel_tol * abs(total) for s in sums[-stall_window:]):
                converged = True
                break
        k += 1

    total = math.fsum(sums)
    last_ratio = abs(sums[-1]) / abs(total) if total != 0.0 else abs(sums[-1])
    return SeriesResult(
        total if total < math.inf else math.inf,
        len(sums) - 1,
        last_ratio,
        converged,
        math.log(total) if total > 0 else None,
    )
