"""Evaluation of Jack polynomials on eigenvalue spectra.

The evaluator runs a per-variable recurrence: the value on ``n`` variables is
a sum over horizontal-strip predecessors of the value on ``n - 1`` variables
times a power of the new variable and a rational coefficient.  Coefficients
depend only on (partition, predecessor, alpha), are computed in exact rational
arithmetic for moderate weights, and are memoized in a :class:`JackTable` so
a whole series evaluation prices each coefficient once.

Internally everything is carried in the normalization ``chat = C / k!`` which
keeps magnitudes representable at high degree; the public functions convert to
the ``C`` (trace-power) and ``J`` (monic-monomial) normalizations.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import (
    DivisionAlgebra,
    DomainError,
    Partition,
    enumerate_partitions,
    hook_product,
)

# Exact rational strip coefficients are used up to this weight; beyond it the
# same products are formed in floating point (relative error ~1e-13).
RATIONAL_DEGREE_CUTOFF = 20


@dataclass(frozen=True)
class SpectralArgument:
    """Eigenvalue vector standing in for a Hermitian matrix argument.

    Entries are stored sorted descending, so every evaluation is bit-identical
    under permutation of the input.
    """

    eigenvalues: tuple[float, ...]

    def __post_init__(self):
        vals = tuple(float(v) for v in self.eigenvalues)
        if len(vals) == 0:
            raise DomainError("a spectral argument needs at least one eigenvalue")
        if not all(math.isfinite(v) for v in vals):
            raise DomainError(f"eigenvalues must be finite, got {vals}")
        object.__setattr__(self, "eigenvalues", tuple(sorted(vals, reverse=True)))

    @property
    def m(self) -> int:
        return len(self.eigenvalues)

    @property
    def trace(self) -> float:
        return math.fsum(self.eigenvalues)

    @property
    def max_abs(self) -> float:
        return max(abs(v) for v in self.eigenvalues)

    def scaled(self, c: float) -> "SpectralArgument":
        return SpectralArgument(tuple(c * v for v in self.eigenvalues))


def as_spectrum(x) -> SpectralArgument:
    if isinstance(x, SpectralArgument):
        return x
    return SpectralArgument(tuple(np.asarray(x, dtype=float).ravel()))


def _conjugate_counts(parts: tuple[int, ...]) -> list[int]:
    if not parts:
        return []
    cols = [0] * parts[0]
    for p in parts:
        for j in range(p):
            cols[j] += 1
    return cols


def _interlacing_predecessors(parts: tuple[int, ...]):
    """All mu with kappa_{i+1} <= mu_i <= kappa_i (horizontal strips kappa/mu)."""
    n = len(parts)
    out = []

    def rec(i, prefix):
        if i == n:
            t = prefix
            while t and t[-1] == 0:
                t = t[:-1]
            out.append(tuple(t))
            return
        lo = parts[i + 1] if i + 1 < n else 0
        for v in range(parts[i], lo - 1, -1):
            rec(i + 1, prefix + (v,))

    rec(0, ())
    return out


def _strip_coefficient(kappa: tuple[int, ...], mu: tuple[int, ...], alpha):
    """Coefficient g in chat_kappa(x_1..x_n) = sum_mu chat_mu(x_1..x_{n-1}) x_n^s g.

    g = alpha^s * prod_{cells of mu} h~_mu / prod_{cells of kappa} h~_kappa,
    where at a cell in column j the hook h~ is the lower hook when kappa and
    mu have equal column length there and the upper hook otherwise.  Works for
    Fraction or float ``alpha``.
    """
    s = sum(kappa) - sum(mu)
    kc = _conjugate_counts(kappa)
    mc = _conjugate_counts(mu)
    mc += [0] * (len(kc) - len(mc))

    g = alpha**s

    for i, row in enumerate(mu, start=1):
        for j in range(1, row + 1):
            arm = row - j
            leg = mc[j - 1] - i
            if kc[j - 1] == mc[j - 1]:
                g *= leg + 1 + alpha * arm
            else:
                g *= leg + alpha * (arm + 1)
    for i, row in enumerate(kappa, start=1):
        for j in range(1, row + 1):
            arm = row - j
            leg = kc[j - 1] - i
            if kc[j - 1] == mc[j - 1]:
                g /= leg + 1 + alpha * arm
            else:
                g /= leg + alpha * (arm + 1)
    return g


@lru_cache(maxsize=200_000)
def _hook_cell_data(parts: tuple[int, ...], beta: int):
    """Per-cell hook values and column indices of a partition (float alpha).

    Returns (conjugate counts (int array, length parts[0]), upper hooks,
    lower hooks, 0-based cell column indices); cells in row-major order.
    """
    alpha = 2.0 / beta
    conj = np.asarray(_conjugate_counts(parts), dtype=np.int64)
    cols = np.concatenate([np.arange(row) for row in parts]) if parts else np.zeros(0, dtype=np.int64)
    rows = np.concatenate([np.full(row, i) for i, row in enumerate(parts)]) if parts else cols
    arms = np.asarray(parts, dtype=np.int64)[rows] - cols - 1
    legs = conj[cols] - rows - 1
    upper = legs + alpha * (arms + 1)
    lower = legs + 1 + alpha * arms
    return conj, upper, lower, cols


class JackTable:
    """Memoized recurrence coefficients for one division algebra.

    Entries are immutable once computed; lookups after the first return the
    identical float objects, and insertion is lock-protected so concurrent
    evaluations from several threads see a consistent cache.  Coefficients of
    weight up to RATIONAL_DEGREE_CUTOFF are priced in exact rationals; higher
    weights use vectorized float hook products (paired, so relative error
    stays near rounding level).
    """

    def __init__(self, algebra: DivisionAlgebra):
        self.algebra = algebra
        self._strips: dict[tuple[int, ...], tuple] = {}
        self._lock = threading.Lock()

    def strips(self, kappa: tuple[int, ...]):
        """Tuple of (mu, s, g) over horizontal-strip predecessors of kappa."""
        hit = self._strips.get(kappa)
        if hit is not None:
            return hit
        k = sum(kappa)
        preds = _interlacing_predecessors(kappa)
        if k <= RATIONAL_DEGREE_CUTOFF:
            alpha = self.algebra.alpha
            entries = tuple(
                (mu, k - sum(mu), float(_strip_coefficient(kappa, mu, alpha)))
                for mu in preds
            )
        else:
            g, s = self._float_coefficients(kappa, preds)
            entries = tuple((mu, int(si), gi) for mu, si, gi in zip(preds, s, g))
        with self._lock:
            self._strips.setdefault(kappa, entries)
        return self._strips[kappa]

    def _float_coefficients(self, kappa, preds):
        """Hook-product coefficients for every predecessor at once."""
        beta = self.algebra.beta
        alpha = 2.0 / beta
        k = sum(kappa)
        kc, k_up, k_lo, k_cols = _hook_cell_data(kappa, beta)
        width = len(kc)
        nrows = len(kappa)
        mmat = np.zeros((len(preds), nrows), dtype=np.int64)
        for r, mu in enumerate(preds):
            mmat[r, : len(mu)] = mu
        cols = np.arange(width, dtype=np.int64)
        # column counts of each predecessor, padded to kappa's width
        mc = (mmat[:, :, None] > cols[None, None, :]).sum(axis=1)
        match = mc == kc[None, :]
        # predecessor cells: (pair, row, column) tensor masked to the diagram
        exists = mmat[:, :, None] > cols[None, None, :]
        arms = mmat[:, :, None] - cols[None, None, :] - 1
        legs = mc[:, None, :] - np.arange(1, nrows + 1)[None, :, None]
        upper = legs + alpha * (arms + 1)
        lower = legs + 1 + alpha * arms
        chosen = np.where(match[:, None, :], lower, upper)
        num = np.where(exists, chosen, 1.0).prod(axis=(1, 2))
        # cells of kappa, selected per pair by the column-match flags
        den = np.where(match[:, k_cols], k_lo[None, :], k_up[None, :]).prod(axis=1)
        s = k - mmat.sum(axis=1)
        return alpha**s * num / den, s


_TABLES: dict[int, JackTable] = {}
_TABLES_LOCK = threading.Lock()


def get_table(algebra: DivisionAlgebra) -> JackTable:
    """Process-wide shared coefficient table for ``algebra``."""
    table = _TABLES.get(algebra.beta)
    if table is None:
        with _TABLES_LOCK:
            table = _TABLES.setdefault(algebra.beta, JackTable(algebra))
    return table


class ChatEvaluator:
    """Degree-incremental table of chat_kappa = C_kappa / k! for one spectrum.

    ``x`` is either a length-m sequence (scalar evaluation) or a (B, m) array
    (one value per row, vectorized).  Degrees must be requested in increasing
    order; each degree's values are cached.
    """

    def __init__(self, x, table: JackTable, max_first_part: int | None = None):
        arr = np.asarray(x, dtype=float)
        if arr.ndim == 1:
            self._batched = False
            self._x = [float(v) for v in arr]
            one = 1.0
        elif arr.ndim == 2:
            self._batched = True
            self._x = [np.ascontiguousarray(arr[:, j]) for j in range(arr.shape[1])]
            one = np.ones(arr.shape[0])
        else:
            raise DomainError("spectrum must be a vector or a (batch, m) array")
        self.m = len(self._x)
        self.table = table
        self.max_first_part = max_first_part
        # stage[n] holds values on the first n variables
        self._stage: list[dict] = [{(): one} for _ in range(self.m + 1)]
        self._done = -1

    def degree_values(self, k: int) -> dict:
        """chat values for every partition of weight k (length <= m)."""
        while self._done < k:
            self._advance()
        out = {}
        for p in enumerate_partitions(k, self.m, self.max_first_part):
            out[p.parts] = self._stage[self.m][p.parts]
        return out

    def value(self, kappa: tuple[int, ...]):
        k = sum(kappa)
        while self._done < k:
            self._advance()
        return self._stage[self.m].get(kappa, 0.0 if not self._batched else np.zeros_like(self._x[0]))

    def _advance(self):
        k = self._done + 1
        for n in range(1, self.m + 1):
            xn = self._x[n - 1]
            prev = self._stage[n - 1]
            cur = self._stage[n]
            for p in enumerate_partitions(k, n, self.max_first_part):
                kappa = p.parts
                if not kappa:
                    continue
                terms = []
                for mu, s, g in self.table.strips(kappa):
                    if len(mu) > n - 1:
                        continue
                    v = prev.get(mu)
                    if v is None:
                        continue
                    terms.append(v * (xn**s * g) if s else v * g)
                if self._batched:
                    acc = np.zeros_like(xn)
                    for t in terms:
                        acc += t
                    cur[kappa] = acc
                else:
                    cur[kappa] = math.fsum(terms)
        self._done = k


def _subshapes(kappa: tuple[int, ...]):
    """All partitions contained in kappa, sorted by weight then reverse-lex."""
    out = []

    def rec(i, prefix, cap):
        if i == len(kappa):
            t = prefix
            while t and t[-1] == 0:
                t = t[:-1]
            out.append(tuple(t))
            return
        for v in range(min(cap, kappa[i]), -1, -1):
            rec(i + 1, prefix + (v,), v)

    rec(0, (), kappa[0] if kappa else 0)
    return sorted(set(out), key=lambda t: (sum(t), tuple(-v for v in t)))


def _chat_restricted(kappa: tuple[int, ...], x, table: JackTable):
    """chat_kappa via the recurrence restricted to subshapes of kappa."""
    arr = np.asarray(x, dtype=float)
    batched = arr.ndim == 2
    xs = [np.ascontiguousarray(arr[:, j]) for j in range(arr.shape[1])] if batched else [float(v) for v in arr]
    m = len(xs)
    subs = _subshapes(kappa)
    one = np.ones(arr.shape[0]) if batched else 1.0
    prev = {(): one}
    for n in range(1, m + 1):
        xn = xs[n - 1]
        cur = {(): one}
        for mu_shape in subs:
            if not mu_shape or len(mu_shape) > n:
                continue
            terms = []
            for mu, s, g in table.strips(mu_shape):
                v = prev.get(mu)
                if v is None:
                    continue
                terms.append(v * (xn**s * g) if s else v * g)
            if not terms:
                continue
            if batched:
                acc = np.zeros_like(xn)
                for t in terms:
                    acc += t
                cur[mu_shape] = acc
            else:
                cur[mu_shape] = math.fsum(terms)
        prev = cur
    missing = np.zeros(arr.shape[0]) if batched else 0.0
    return prev.get(kappa, missing)


def _log_nu(p: Partition, algebra: DivisionAlgebra) -> float:
    hooks = hook_product(p, algebra)
    return math.fsum(math.log(float(u)) + math.log(float(l)) for u, l in zip(hooks.upper, hooks.lower))


def jack_C(p: Partition, x, algebra: DivisionAlgebra, table: JackTable | None = None) -> float:
    """Jack polynomial in the normalization where partitions of k sum to (tr x)^k.

    Returns 0 when the partition is longer than the spectrum.  Homogeneous of
    degree ``p.weight``; invariant (bit-identical) under permutations of the
    eigenvalues.
    """
    spec = as_spectrum(x)
    if p.length > spec.m:
        return 0.0
    if p.weight == 0:
        return 1.0
    table = table or get_table(algebra)
    chat = _chat_restricted(p.parts, spec.eigenvalues, table)
    return chat * math.factorial(p.weight)


def jack_C_batch(p: Partition, X: np.ndarray, algebra: DivisionAlgebra, table: JackTable | None = None) -> np.ndarray:
    """Vectorized :func:`jack_C` over the rows of a (batch, m) spectrum array."""
    X = np.asarray(X, dtype=float)
    if X.ndim != 2:
        raise DomainError("jack_C_batch expects a (batch, m) array")
    if p.length > X.shape[1]:
        return np.zeros(X.shape[0])
    if p.weight == 0:
        return np.ones(X.shape[0])
    table = table or get_table(algebra)
    return _chat_restricted(p.parts, X, table) * math.factorial(p.weight)


def jack_J(p: Partition, x, algebra: DivisionAlgebra, table: JackTable | None = None) -> float:
    """Jack polynomial in the monic normalization (coefficient k! on the
    bottom monomial); related to :func:`jack_C` by the hook-product constant."""
    spec = as_spectrum(x)
    if p.length > spec.m:
        return 0.0
    if p.weight == 0:
        return 1.0
    table = table or get_table(algebra)
    chat = _chat_restricted(p.parts, spec.eigenvalues, table)
    k = p.weight
    log_scale = _log_nu(p, algebra) - k * math.log(float(algebra.alpha))
    return chat * math.exp(log_scale)


@lru_cache(maxsize=None)
def _log_chat_identity_cached(kappa: tuple[int, ...], m: int, beta: int) -> float:
    algebra = DivisionAlgebra(beta)
    p = Partition(kappa)
    alpha = float(algebra.alpha)
    acc = 2.0 * p.weight * math.log(alpha) - _log_nu(p, algebra)
    for i, ki in enumerate(p.parts, start=1):
        base = (m - i + 1) / alpha
        for t in range(ki):
            acc += math.log(base + t)
    return acc


def log_chat_identity(kappa: tuple[int, ...], m: int, algebra: DivisionAlgebra) -> float:
    """log of C_kappa(I_m)/k!, for a partition with length <= m (positive)."""
    if sum(kappa) == 0:
        return 0.0
    return _log_chat_identity_cached(tuple(kappa), m, algebra.beta)


def jack_C_at_identity(p: Partition, m: int, algebra: DivisionAlgebra) -> float:
    """C_kappa at the all-ones spectrum of length m, by closed form.

    Equals ``jack_C(p, ones(m), algebra)`` without running the recurrence;
    0 when the partition is longer than m.
    """
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if p.length > m:
        return 0.0
    if p.weight == 0:
        return 1.0
    log_kfact = math.lgamma(p.weight + 1)
    return math.exp(log_chat_identity(p.parts, m, algebra) + log_kfact)
