"""Monte Carlo verification of the library's integral identities.

Each ``verify_*`` function estimates one side of an identity by sampling
(Haar matrices, cone matrices via the triangular construction, or matrix-beta
draws), computes the other side analytically, and returns a
:class:`VerificationReport` with the z-score and relative error against the
configured thresholds.

Samplers are chosen so that for the exponential kernels the proposal matches
the integrand exactly and only the polynomial factor carries variance; general
parameters fall back to importance weights with finite-variance guards.
Everything is seed-deterministic: estimates depend only on the identity, its
parameters, the seed and the sample count.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from . import _quat
from .core import DivisionAlgebra, DomainError, Partition, UnsupportedParameterError
from .hypergeom import (
    HypergeomSpec,
    _termination_bound,
    pfq,
    pfq_batch,
    pfq_two,
    truncated_pfq_restricted,
)
from .jack import get_table, jack_C, jack_C_at_identity, jack_C_batch
from .special import (
    WeightedGammaQuery,
    mv_beta_ln,
    mv_gamma_ln,
    mv_gamma_weighted_ln,
)

DEFAULT_Z_MAX = 3.0
DEFAULT_REL_MAX = 0.05

_CHUNK = 20_000


@dataclass
class VerificationReport:
    """Monte Carlo estimate vs analytic value with pass/fail verdict."""

    identity_id: str
    analytic: float
    estimate: float
    std_error: float
    n_samples: int
    z_score: float = field(init=False)
    rel_error: float = field(init=False)
    passed: bool = field(init=False)
    z_max: float = DEFAULT_Z_MAX
    rel_max: float = DEFAULT_REL_MAX
    param_digest: str = ""

    def __post_init__(self):
        diff = self.estimate - self.analytic
        scale = max(abs(self.analytic), abs(self.estimate))
        # floor the standard error at rounding level so exact (zero-variance)
        # cases do not turn float noise into huge z-scores
        se = max(self.std_error, 1e-13 * scale)
        if se > 0:
            self.z_score = diff / se
        else:
            self.z_score = 0.0 if diff == 0.0 else math.inf
        self.rel_error = abs(diff) / abs(self.analytic) if self.analytic != 0 else abs(diff)
        self.passed = abs(self.z_score) <= self.z_max and self.rel_error <= self.rel_max

    def to_line(self) -> str:
        """identity_id,param_digest,analytic,estimate,std_error,z,rel,pass"""
        return ",".join(
            [
                self.identity_id,
                self.param_digest,
                "%.17g" % self.analytic,
                "%.17g" % self.estimate,
                "%.17g" % self.std_error,
                "%.17g" % self.z_score,
                "%.17g" % self.rel_error,
                "1" if self.passed else "0",
            ]
        )


def _digest(*params) -> str:
    return "%08x" % zlib.crc32(repr(params).encode())


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(np.random.PCG64(seed))


def _mean_se(values: np.ndarray) -> tuple[float, float]:
    n = values.size
    mean = float(values.mean())
    if n < 2:
        return mean, 0.0
    var = float(values.var(ddof=1))
    return mean, math.sqrt(var / n)


def _report(identity_id, params, analytic, values, z_max, rel_max) -> VerificationReport:
    est, se = _mean_se(values)
    return VerificationReport(
        identity_id=identity_id,
        analytic=float(analytic),
        estimate=est,
        std_error=se,
        n_samples=values.size,
        z_max=z_max,
        rel_max=rel_max,
        param_digest=_digest(*params),
    )


# ---------------------------------------------------------------------------
# Haar sampling
# ---------------------------------------------------------------------------


def _haar_batch(m: int, algebra: DivisionAlgebra, rng: np.random.Generator, count: int):
    beta = algebra.beta
    if beta == 1:
        g = rng.standard_normal((count, m, m))
        qm, r = np.linalg.qr(g)
        d = np.sign(np.einsum("bii->bi", r))
        d[d == 0] = 1.0
        return qm * d[:, None, :]
    if beta == 2:
        g = rng.standard_normal((count, m, m)) + 1j * rng.standard_normal((count, m, m))
        qm, r = np.linalg.qr(g)
        d = np.einsum("bii->bi", r)
        ph = d / np.abs(d)
        return qm * ph[:, None, :]
    if beta == 4:
        return _quat.haar_batch(rng, count, m)
    raise UnsupportedParameterError("Haar sampling supports beta in {1, 2, 4}")


def haar_sample(m: int, algebra: DivisionAlgebra, seed: int):
    """One Haar-distributed element of the compact group for beta in {1, 2, 4}.

    Returns an (m, m) array for beta in {1, 2}; for beta = 4 the complex
    (2m, 2m) embedding of the quaternion matrix.
    """
    rng = _rng(seed)
    h = _haar_batch(m, algebra, rng, 1)
    if algebra.beta == 4:
        return _quat.embed(h[0][0], h[1][0])
    return h[0]


def _conjugated_spectra(x_eigs, y_eigs, algebra, h) -> np.ndarray:
    """Spectra of X H* Y H for diagonal X, Y over a batch of group elements."""
    x = np.asarray(x_eigs, dtype=float)
    y = np.asarray(y_eigs, dtype=float)
    if algebra.beta == 4:
        h1, h2 = h
        e = _quat.embed(h1, h2)
        x2 = np.concatenate([x, x])
        y2 = np.concatenate([y, y])
        inner = np.einsum("bji,j,bjk->bik", e.conj(), y2, e)
        a = np.sqrt(x2)[None, :, None] * inner * np.sqrt(x2)[None, None, :]
        vals, _ = _quat.dedupe_pairs(np.linalg.eigvalsh(a))
        return vals
    inner = np.einsum("bji,j,bjk->bik", h.conj(), y, h)
    a = np.sqrt(x)[None, :, None] * inner * np.sqrt(x)[None, None, :]
    return np.linalg.eigvalsh(a)[:, ::-1]


def verify_split_integral(
    kappa: Partition,
    x_eigs,
    y_eigs,
    m: int,
    algebra: DivisionAlgebra,
    n_samples: int,
    seed: int,
    z_max: float = DEFAULT_Z_MAX,
    rel_max: float = DEFAULT_REL_MAX,
) -> VerificationReport:
    """Haar average of C_kappa(X H* Y H) against C(X) C(Y) / C(I)."""
    if any(v < 0 for v in x_eigs) or any(v < 0 for v in y_eigs):
        raise DomainError("x_eigs and y_eigs must be nonnegative")
    analytic = (
        jack_C(kappa, np.asarray(x_eigs, dtype=float), algebra)
        * jack_C(kappa, np.asarray(y_eigs, dtype=float), algebra)
        / jack_C_at_identity(kappa, m, algebra)
        if kappa.weight
        else 1.0
    )
    rng = _rng(seed)
    chunks = []
    table = get_table(algebra)
    done = 0
    while done < n_samples:
        b = min(_CHUNK, n_samples - done)
        h = _haar_batch(m, algebra, rng, b)
        spectra = _conjugated_spectra(x_eigs, y_eigs, algebra, h)
        chunks.append(jack_C_batch(kappa, spectra, algebra, table))
        done += b
    values = np.concatenate(chunks)
    params = ("split", kappa.parts, tuple(x_eigs), tuple(y_eigs), m, algebra.beta, n_samples, seed)
    return _report(f"split-m{m}-b{algebra.beta}-k{''.join(map(str, kappa.parts))}",
                   params, analytic, values, z_max, rel_max)


# ---------------------------------------------------------------------------
# Cone sampling (triangular construction) and matrix-beta sampling
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConeSampler:
    """Matrix-gamma sampler on the positive-definite cone, beta in {1, 2}.

    Draws X with density etr(-X Z0) |X|^(a0 - (m-1)beta/2 - 1) |Z0|^a0 /
    Gamma_m[a0] via the triangular-factor construction: X = Z0^(-1/2) T* T
    Z0^(-1/2) with chi-squared diagonal and Gaussian off-diagonal entries.
    """

    m: int
    algebra: DivisionAlgebra
    shape_a0: float
    scale_eigs: tuple[float, ...]

    def __post_init__(self):
        if self.algebra.beta not in (1, 2):
            raise UnsupportedParameterError("cone sampling supports beta in {1, 2}")
        beta = self.algebra.beta
        if not self.shape_a0 > (self.m - 1) * beta / 2:
            raise DomainError(
                f"proposal shape must exceed (m-1)*beta/2 = {(self.m - 1) * beta / 2}, "
                f"got {self.shape_a0}"
            )
        if len(self.scale_eigs) != self.m or any(z <= 0 for z in self.scale_eigs):
            raise DomainError("scale eigenvalues must be m positive reals")

    def sample(self, rng: np.random.Generator, count: int):
        """Returns (X, logdet_X) with X of shape (count, m, m)."""
        m, beta = self.m, self.algebra.beta
        shapes = self.shape_a0 - np.arange(m) * beta / 2.0
        diag = np.sqrt(rng.gamma(shapes, size=(count, m)))
        if beta == 1:
            t = np.zeros((count, m, m))
        else:
            t = np.zeros((count, m, m), dtype=complex)
        iu = np.triu_indices(m, k=1)
        n_off = len(iu[0])
        if n_off:
            off = rng.standard_normal((count, n_off)) * math.sqrt(0.5)
            if beta == 2:
                off = off + 1j * rng.standard_normal((count, n_off)) * math.sqrt(0.5)
            t[:, iu[0], iu[1]] = off
        t[:, np.arange(m), np.arange(m)] = diag
        x = np.einsum("bji,bjk->bik", t.conj(), t)
        z = np.asarray(self.scale_eigs)
        inv_root = 1.0 / np.sqrt(z)
        x = x * inv_root[None, :, None] * inv_root[None, None, :]
        logdet = 2.0 * np.log(diag).sum(axis=1) - math.fsum(math.log(v) for v in z)
        return x, logdet

    def log_norm(self) -> float:
        """log of Gamma_m[a0] |Z0|^{-a0}, the proposal's inverse density scale."""
        return mv_gamma_ln(self.m, self.algebra, self.shape_a0) - self.shape_a0 * math.fsum(
            math.log(v) for v in self.scale_eigs
        )


def _matrix_gamma(m, algebra, a0, z_eigs, rng, count):
    return ConeSampler(m, algebra, a0, tuple(z_eigs)).sample(rng, count)


def _matrix_beta1(m, algebra, a1, a2, rng, count):
    """Matrix beta type I draws U in (0, I) with parameters (a1, a2)."""
    a, _ = _matrix_gamma(m, algebra, a1, np.ones(m), rng, count)
    b, _ = _matrix_gamma(m, algebra, a2, np.ones(m), rng, count)
    ell = np.linalg.cholesky(a + b)
    w = np.linalg.solve(ell, a)
    u = np.linalg.solve(ell, np.conj(np.transpose(w, (0, 2, 1))))
    return 0.5 * (u + np.conj(np.transpose(u, (0, 2, 1))))


def _matrix_beta2(m, algebra, a1, a2, rng, count):
    """Matrix beta type II (F-type) draws X > 0 with density proportional to
    |X|^(a1 - c - 1) |I + X|^-(a1 + a2).

    The conjugation must use the symmetric inverse square root of the
    denominator draw: a triangular factor changes the law here (the exponent
    couples to tr(XB), which only the Hermitian root preserves).
    """
    a, _ = _matrix_gamma(m, algebra, a1, np.ones(m), rng, count)
    b, _ = _matrix_gamma(m, algebra, a2, np.ones(m), rng, count)
    w, q = np.linalg.eigh(b)
    inv_root = np.einsum("bik,bk,bjk->bij", q, w**-0.5, q.conj())
    x = inv_root @ a @ inv_root
    return 0.5 * (x + np.conj(np.transpose(x, (0, 2, 1))))


def _eigs_times_diag(x: np.ndarray, d: np.ndarray, logdet_x: np.ndarray | None = None) -> np.ndarray:
    """Spectra (descending) of X diag(d) for Hermitian positive X and
    sign-definite d, batched.

    With ``logdet_x`` supplied (known exactly from a triangular construction),
    the smallest eigenvalue is rebuilt from the determinant so that extreme
    condition numbers do not poison products that cancel analytically.
    """
    d = np.asarray(d, dtype=float)
    if np.all(d >= 0):
        root = np.sqrt(d)
        a = root[None, :, None] * x * root[None, None, :]
        vals = np.linalg.eigvalsh(a)[:, ::-1]
        if logdet_x is not None and np.all(d > 0):
            total = logdet_x + math.fsum(math.log(v) for v in d)
            lead = np.log(vals[:, :-1]).sum(axis=1)
            vals[:, -1] = np.exp(total - lead)
        return vals
    if np.all(d <= 0):
        root = np.sqrt(-d)
        a = root[None, :, None] * x * root[None, None, :]
        return -np.linalg.eigvalsh(a)
    raise DomainError("diagonal factor must not mix signs")


def _logdet_h(x: np.ndarray) -> np.ndarray:
    sign, val = np.linalg.slogdet(x)
    return np.real(val)


def _auto_proposal_shape(a: float, c: float, k_extreme: int) -> float:
    """Proposal shape for |X|^(a - a0) reweighting with a C_kappa factor whose
    boundary decay contributes 2*k_extreme; keeps the second moment finite."""
    if a > c + 0.25:
        return a
    bound = 2 * a - c + 2 * k_extreme
    a0 = min(c + 0.9, 0.5 * (c + bound))
    if not (c < a0 < bound - 0.05):
        raise DomainError(
            f"no finite-variance proposal shape for a = {a} (bound {bound}); "
            "pass an explicit proposal"
        )
    return a0


def verify_laplace_jack(
    a: float,
    kappa: Partition,
    r_eigs,
    z_eigs,
    m: int,
    algebra: DivisionAlgebra,
    n_samples: int,
    seed: int,
    proposal_shape: float | None = None,
    z_max: float = DEFAULT_Z_MAX,
    rel_max: float = DEFAULT_REL_MAX,
) -> VerificationReport:
    """Cone integral of etr(-XZ) |X|^(a-c-1) C_kappa(XR) against its closed form.

    Valid down to the tight bound a > (m-1)*beta/2 - k_m, where k_m is the
    m-th part of kappa; below the classical bound the proposal shape shifts
    and the determinant weight carries the difference.
    """
    beta = algebra.beta
    c = (m - 1) * beta / 2
    k_m = kappa.part(m)
    if not a > c - k_m:
        raise DomainError(
            f"requires a > (m-1)*beta/2 - k_m = {c - k_m}, got a = {a}"
        )
    r = np.asarray(r_eigs, dtype=float)
    z = np.asarray(z_eigs, dtype=float)
    if np.any(r < 0) or np.any(z <= 0):
        raise DomainError("r_eigs must be nonnegative and z_eigs positive")

    log_gamma_w = mv_gamma_weighted_ln(WeightedGammaQuery(a, m, algebra, kappa, +1))
    analytic = math.exp(log_gamma_w - a * float(np.log(z).sum())) * jack_C(kappa, r / z, algebra)

    a0 = proposal_shape if proposal_shape is not None else _auto_proposal_shape(a, c, k_m)
    sampler = ConeSampler(m, algebra, a0, tuple(z))
    log_w0 = sampler.log_norm()
    rng = _rng(seed)
    table = get_table(algebra)
    chunks = []
    done = 0
    while done < n_samples:
        bsz = min(_CHUNK, n_samples - done)
        x, logdet = sampler.sample(rng, bsz)
        spectra = _eigs_times_diag(x, r, logdet_x=logdet if np.all(r > 0) else None)
        cvals = jack_C_batch(kappa, spectra, algebra, table)
        chunks.append(np.exp(log_w0 + (a - a0) * logdet) * cvals)
        done += bsz
    values = np.concatenate(chunks)
    params = ("laplace_jack", a, kappa.parts, tuple(r), tuple(z), m, beta, n_samples, seed, a0)
    return _report(
        f"laplace-jack-m{m}-b{beta}-k{''.join(map(str, kappa.parts))}-a{a:g}",
        params, analytic, values, z_max, rel_max,
    )


def verify_beta_jack(
    a: float,
    b: float,
    kappa: Partition,
    r_eigs,
    m: int,
    algebra: DivisionAlgebra,
    inverse_arg: bool = False,
    n_samples: int = 100_000,
    seed: int = 0,
    z_max: float = DEFAULT_Z_MAX,
    rel_max: float = DEFAULT_REL_MAX,
) -> VerificationReport:
    """Beta-type integral over 0 < X < I with a C_kappa(XR) factor, or the
    inverse-argument variant C_kappa(R X^{-1})."""
    beta = algebra.beta
    c = (m - 1) * beta / 2
    k_m, k_1 = kappa.part(m), kappa.part(1)
    if inverse_arg:
        if not a > c + k_1:
            raise DomainError(f"inverse-argument case requires a > (m-1)*beta/2 + k_1 = {c + k_1}")
    else:
        if not a > c - k_m:
            raise DomainError(f"requires a > (m-1)*beta/2 - k_m = {c - k_m}")
    if not b > c:
        raise DomainError(f"requires b > (m-1)*beta/2 = {c}")
    r = np.asarray(r_eigs, dtype=float)

    sign = -1 if inverse_arg else +1
    log_num = mv_gamma_weighted_ln(WeightedGammaQuery(a, m, algebra, kappa, sign))
    log_den = mv_gamma_weighted_ln(WeightedGammaQuery(a + b, m, algebra, kappa, sign))
    analytic = math.exp(log_num + mv_gamma_ln(m, algebra, b) - log_den) * jack_C(kappa, r, algebra)

    a1 = a if a > c + 0.25 else _auto_proposal_shape(a, c, k_m)
    a2 = b if b > c + 0.25 else c + 0.75
    log_w0 = mv_beta_ln(m, algebra, a1, a2)
    rng = _rng(seed)
    table = get_table(algebra)
    chunks = []
    done = 0
    while done < n_samples:
        bsz = min(_CHUNK, n_samples - done)
        u = _matrix_beta1(m, algebra, a1, a2, rng, bsz)
        if inverse_arg:
            spectra = _eigs_times_diag(np.linalg.inv(u), r)
        else:
            spectra = _eigs_times_diag(u, r)
        cvals = jack_C_batch(kappa, spectra, algebra, table)
        logw = (a - a1) * _logdet_h(u) + (b - a2) * _logdet_h(np.eye(m)[None] - u)
        chunks.append(np.exp(log_w0 + logw) * cvals)
        done += bsz
    values = np.concatenate(chunks)
    params = ("beta_jack", a, b, kappa.parts, tuple(r), m, beta, inverse_arg, n_samples, seed)
    tag = "inv" if inverse_arg else "fwd"
    return _report(
        f"beta-jack-{tag}-m{m}-b{beta}-k{''.join(map(str, kappa.parts))}-a{a:g}-b{b:g}",
        params, analytic, values, z_max, rel_max,
    )


# ---------------------------------------------------------------------------
# General radial kernels
# ---------------------------------------------------------------------------


def _kernel(f_id: str, beta: float, a: float, m: int, eta: float, j_power: int):
    """Scalar kernel f and its quadrature-friendly callable."""
    if f_id == "exp":
        return lambda y: np.exp(-y)
    if f_id == "exp_power":
        return lambda y: np.exp(-y) * y**j_power
    if f_id == "pareto":
        expo = beta * (a * m + eta)
        return lambda y: (1.0 + 2.0 * y / eta) ** (-expo)
    raise UnsupportedParameterError(f"unknown kernel {f_id!r}; use exp, exp_power or pareto")


def _scalar_moment(f, power: float) -> float:
    """integral of f(z) z^(power-1) over (0, inf) by adaptive quadrature."""
    if power <= 0:
        raise DomainError(f"kernel moment diverges at 0: exponent {power}")
    val, err = integrate.quad(
        lambda z: f(z) * z ** (power - 1.0), 0.0, np.inf, epsabs=1e-12, epsrel=1e-10, limit=400
    )
    if not math.isfinite(val) or err > 1e-6 * max(1.0, abs(val)):
        raise DomainError(f"kernel moment quadrature failed: value {val}, error {err}")
    return val


def verify_radial_kernel(
    f_id: str,
    a: float,
    kappa: Partition,
    u_eigs,
    z_eigs,
    m: int,
    algebra: DivisionAlgebra,
    inverse_arg: bool = True,
    n_samples: int = 100_000,
    seed: int = 0,
    eta: float = 3.0,
    j_power: int = 1,
    z_max: float = DEFAULT_Z_MAX,
    rel_max: float = DEFAULT_REL_MAX,
) -> VerificationReport:
    """Cone integral of f(tr XZ) |X|^(a-c-1) C_kappa(X^{+-1} U) against the
    closed form whose constant is the kernel's scalar moment (by quadrature).

    ``inverse_arg=True`` is the C_kappa(X^{-1} U) form (domain a > c + k_1);
    ``inverse_arg=False`` uses C_kappa(X U) (domain a > c - k_m).
    """
    beta = algebra.beta
    c = (m - 1) * beta / 2
    k = kappa.weight
    if inverse_arg:
        if not a > c + kappa.part(1):
            raise DomainError(f"requires a > (m-1)*beta/2 + k_1 = {c + kappa.part(1)}")
        moment_power = a * m - k
        sign = -1
    else:
        if not a > c - kappa.part(m):
            raise DomainError(f"requires a > (m-1)*beta/2 - k_m = {c - kappa.part(m)}")
        moment_power = a * m + k
        sign = +1
    u = np.asarray(u_eigs, dtype=float)
    z = np.asarray(z_eigs, dtype=float)
    if np.any(z <= 0) or np.any(u < 0):
        raise DomainError("u_eigs must be nonnegative and z_eigs positive")

    f = _kernel(f_id, beta, a, m, eta, j_power)
    moment = _scalar_moment(f, moment_power)
    log_gw = mv_gamma_weighted_ln(WeightedGammaQuery(a, m, algebra, kappa, sign))
    arg = u * z if inverse_arg else u / z
    analytic = (
        math.exp(log_gw - math.lgamma(moment_power) - a * float(np.log(z).sum()))
        * jack_C(kappa, arg, algebra)
        * moment
    )

    if not a > c:
        raise DomainError("the sampler needs a > (m-1)*beta/2; tighter domains are "
                          "exercised by verify_laplace_jack")
    rng = _rng(seed)
    table = get_table(algebra)
    chunks = []
    done = 0
    if f_id == "pareto":
        q0 = beta * (a * m + eta) - a * m
        if q0 <= 0.25:
            raise DomainError(f"pareto kernel needs beta*(a*m + eta) - a*m > 0.25, got {q0}")
        log_c0 = (
            a * float(np.log(z).sum())
            + a * m * math.log(2.0 / eta)
            + math.lgamma(a * m + q0)
            - math.lgamma(q0)
            - mv_gamma_ln(m, algebra, a)
        )
        sampler = ConeSampler(m, algebra, a, tuple(np.ones(m)))
        while done < n_samples:
            bsz = min(_CHUNK, n_samples - done)
            s, _ = sampler.sample(rng, bsz)
            g = rng.gamma(q0, size=bsz)
            scale = eta / (2.0 * g)
            x = s * scale[:, None, None] / np.sqrt(np.outer(z, z))[None]
            spectra = (
                _eigs_times_diag(np.linalg.inv(x), u)
                if inverse_arg
                else _eigs_times_diag(x, u)
            )
            cvals = jack_C_batch(kappa, spectra, algebra, table)
            chunks.append(math.exp(-log_c0) * cvals)
            done += bsz
    else:
        sampler = ConeSampler(m, algebra, a, tuple(z))
        log_w0 = sampler.log_norm()
        while done < n_samples:
            bsz = min(_CHUNK, n_samples - done)
            x, _ = sampler.sample(rng, bsz)
            spectra = (
                _eigs_times_diag(np.linalg.inv(x), u)
                if inverse_arg
                else _eigs_times_diag(x, u)
            )
            cvals = jack_C_batch(kappa, spectra, algebra, table)
            w = np.exp(log_w0)
            if f_id == "exp_power":
                tr_xz = np.einsum("bii->b", x * z[None, None, :]).real
                w = w * tr_xz**j_power
            chunks.append(w * cvals)
            done += bsz
    values = np.concatenate(chunks)
    params = ("radial_kernel", f_id, a, kappa.parts, tuple(u), tuple(z), m, beta,
              inverse_arg, eta, j_power, n_samples, seed)
    tag = "inv" if inverse_arg else "fwd"
    return _report(
        f"radial-{f_id}-{tag}-m{m}-b{beta}-k{''.join(map(str, kappa.parts))}",
        params, analytic, values, z_max, rel_max,
    )


def verify_beta2_jack(
    a: float,
    b: float,
    kappa: Partition,
    r_eigs,
    m: int,
    algebra: DivisionAlgebra,
    variant: str = "r2",
    n_samples: int = 100_000,
    seed: int = 0,
    z_max: float = DEFAULT_Z_MAX,
    rel_max: float = DEFAULT_REL_MAX,
) -> VerificationReport:
    """Type-II beta integral |X|^(a-c-1) |I+X|^-(a+b) with C_kappa(R X) (r2)
    or C_kappa(R X^{-1}) (r1), against the weighted-gamma closed form."""
    beta = algebra.beta
    c = (m - 1) * beta / 2
    k_m, k_1 = kappa.part(m), kappa.part(1)
    if variant == "r1":
        if not (a > c + k_1 and b > c - k_m):
            raise DomainError(
                f"r1 requires a > {c + k_1} and b > {c - k_m}, got a={a}, b={b}"
            )
        sign_a, sign_b = -1, +1
    elif variant == "r2":
        if not (a > c - k_m and b > c + k_1):
            raise DomainError(
                f"r2 requires a > {c - k_m} and b > {c + k_1}, got a={a}, b={b}"
            )
        sign_a, sign_b = +1, -1
    else:
        raise UnsupportedParameterError(f"variant must be r1 or r2, got {variant!r}")
    r = np.asarray(r_eigs, dtype=float)

    log_ga = mv_gamma_weighted_ln(WeightedGammaQuery(a, m, algebra, kappa, sign_a))
    log_gb = mv_gamma_weighted_ln(WeightedGammaQuery(b, m, algebra, kappa, sign_b))
    analytic = math.exp(log_ga + log_gb - mv_gamma_ln(m, algebra, a + b)) * jack_C(kappa, r, algebra)

    a1 = a if a > c + 0.25 else c + 0.75
    a2 = b if b > c + 0.25 else c + 0.75
    log_w0 = mv_beta_ln(m, algebra, a1, a2)
    rng = _rng(seed)
    table = get_table(algebra)
    eye = np.eye(m)[None]
    chunks = []
    done = 0
    while done < n_samples:
        bsz = min(_CHUNK, n_samples - done)
        x = _matrix_beta2(m, algebra, a1, a2, rng, bsz)
        spectra = (
            _eigs_times_diag(np.linalg.inv(x), r) if variant == "r1" else _eigs_times_diag(x, r)
        )
        cvals = jack_C_batch(kappa, spectra, algebra, table)
        logw = (a - a1) * _logdet_h(x) + ((a1 + a2) - (a + b)) * _logdet_h(eye + x)
        chunks.append(np.exp(log_w0 + logw) * cvals)
        done += bsz
    values = np.concatenate(chunks)
    params = ("beta2_jack", variant, a, b, kappa.parts, tuple(r), m, beta, n_samples, seed)
    return _report(
        f"beta2-{variant}-m{m}-b{beta}-k{''.join(map(str, kappa.parts))}-a{a:g}-b{b:g}",
        params, analytic, values, z_max, rel_max,
    )


# ---------------------------------------------------------------------------
# Incomplete gamma and beta
# ---------------------------------------------------------------------------


def verify_incomplete(
    kind: str,
    m: int,
    algebra: DivisionAlgebra,
    a: float,
    lambda_eigs=None,
    omega_eigs=None,
    b: float | None = None,
    xi_eigs=None,
    n_samples: int = 100_000,
    seed: int = 0,
    z_max: float = DEFAULT_Z_MAX,
    rel_max: float = DEFAULT_REL_MAX,
) -> VerificationReport:
    """Region integrals over {0 < X < Omega}, {0 < Y < Xi} or {X > Omega}
    against their confluent/Gauss/finite-sum closed forms.

    ``kind``: ``gamma_lower``, ``beta`` or ``gamma_upper``.
    """
    beta = algebra.beta
    c = (m - 1) * beta / 2
    rng = _rng(seed)

    if kind == "gamma_lower":
        lam = np.asarray(lambda_eigs, dtype=float)
        om = np.asarray(omega_eigs, dtype=float)
        if np.any(om <= 0):
            raise DomainError("region boundary must be positive definite")
        if not a > c:
            raise DomainError(f"sampler requires a > (m-1)*beta/2 = {c}")
        marg = om * lam
        series = pfq(HypergeomSpec((a,), (a + c + 1,), algebra, m), -marg)
        analytic = math.exp(mv_beta_ln(m, algebra, a, c + 1) + a * float(np.log(om).sum())) * series.value
        log_w0 = mv_beta_ln(m, algebra, a, c + 1) + a * float(np.log(om).sum())
        chunks = []
        done = 0
        while done < n_samples:
            bsz = min(_CHUNK, n_samples - done)
            u = _matrix_beta1(m, algebra, a, c + 1, rng, bsz)
            tr = np.einsum("bii->b", u * marg[None, None, :]).real
            chunks.append(np.exp(log_w0) * np.exp(-tr))
            done += bsz
        values = np.concatenate(chunks)
        identity = f"incgamma-lower-m{m}-b{beta}-a{a:g}"
        params = (kind, a, tuple(lam), tuple(om), m, beta, n_samples, seed)

    elif kind == "beta":
        if b is None or xi_eigs is None:
            raise DomainError("kind='beta' needs b and xi_eigs")
        xi = np.asarray(xi_eigs, dtype=float)
        if np.any(xi <= 0) or np.any(xi >= 1):
            raise DomainError("xi_eigs must lie strictly inside (0, 1)")
        if not a > c:
            raise DomainError(f"sampler requires a > (m-1)*beta/2 = {c}")
        if not b > c:
            raise DomainError(f"requires b > (m-1)*beta/2 = {c}")
        series = pfq(HypergeomSpec((a, -b + c + 1), (a + c + 1,), algebra, m), xi)
        analytic = math.exp(mv_beta_ln(m, algebra, a, c + 1) + a * float(np.log(xi).sum())) * series.value
        log_w0 = mv_beta_ln(m, algebra, a, c + 1) + a * float(np.log(xi).sum())
        root = np.sqrt(xi)
        eye = np.eye(m)[None]
        chunks = []
        done = 0
        while done < n_samples:
            bsz = min(_CHUNK, n_samples - done)
            u = _matrix_beta1(m, algebra, a, c + 1, rng, bsz)
            y = root[None, :, None] * u * root[None, None, :]
            logw = (b - c - 1) * _logdet_h(eye - y)
            chunks.append(np.exp(log_w0 + logw))
            done += bsz
        values = np.concatenate(chunks)
        identity = f"incbeta-m{m}-b{beta}-a{a:g}-b{b:g}"
        params = (kind, a, b, tuple(xi), m, beta, n_samples, seed)

    elif kind == "gamma_upper":
        lam = np.asarray(lambda_eigs, dtype=float)
        om = np.asarray(omega_eigs, dtype=float)
        if np.any(om <= 0) or np.any(lam <= 0):
            raise DomainError("gamma_upper needs positive lambda_eigs and omega_eigs")
        r = a - c - 1
        if abs(r - round(r)) > 1e-9 or round(r) < 1:
            raise UnsupportedParameterError(
                f"upper tail requires r = a - (m-1)*beta/2 - 1 to be a positive integer, got {r}"
            )
        r = int(round(r))
        marg = om * lam
        s = truncated_pfq_restricted(HypergeomSpec((), (), algebra, m), marg, r)
        analytic = math.exp(
            mv_gamma_ln(m, algebra, a) - a * float(np.log(lam).sum()) - float(marg.sum())
        ) * s.value
        log_w0 = (
            a * float(np.log(om).sum())
            - float(marg.sum())
            + mv_gamma_ln(m, algebra, c + 1)
            - (c + 1) * float(np.log(marg).sum())
        )
        sampler = ConeSampler(m, algebra, c + 1, tuple(marg))
        eye = np.eye(m)[None]
        chunks = []
        done = 0
        while done < n_samples:
            bsz = min(_CHUNK, n_samples - done)
            xr, _ = sampler.sample(rng, bsz)
            logw = r * _logdet_h(eye + xr)
            chunks.append(np.exp(log_w0 + logw))
            done += bsz
        values = np.concatenate(chunks)
        identity = f"incgamma-upper-m{m}-b{beta}-a{a:g}"
        params = (kind, a, tuple(lam), tuple(om), m, beta, n_samples, seed)

    else:
        raise UnsupportedParameterError(
            f"kind must be gamma_lower, beta or gamma_upper, got {kind!r}"
        )

    return _report(identity, params, analytic, values, z_max, rel_max)


# ---------------------------------------------------------------------------
# Laplace transforms of hypergeometric integrands
# ---------------------------------------------------------------------------


def verify_laplace_hypergeom(
    upper,
    lower,
    a: float,
    u_eigs,
    z_eigs,
    m: int,
    algebra: DivisionAlgebra,
    y_eigs=None,
    inverse_arg: bool = False,
    n_samples: int = 100_000,
    seed: int = 0,
    z_max: float = DEFAULT_Z_MAX,
    rel_max: float = DEFAULT_REL_MAX,
) -> VerificationReport:
    """Cone Laplace transform of a hypergeometric integrand against the
    parameter-shifted series on the other side.

    Forward argument (XU) appends ``a`` to the upper parameters; inverse
    argument (X^{-1}U, with U negative semidefinite) appends the reflected
    parameter to the lower list with argument -UZ.
    """
    beta = algebra.beta
    c = (m - 1) * beta / 2
    upper = tuple(float(v) for v in upper)
    lower = tuple(float(v) for v in lower)
    if len(upper) > len(lower):
        raise DomainError("integrand needs p <= q")
    u = np.asarray(u_eigs, dtype=float)
    z = np.asarray(z_eigs, dtype=float)
    if np.any(z <= 0):
        raise DomainError("z_eigs must be positive")
    if not a > c:
        raise DomainError(f"requires a > (m-1)*beta/2 = {c}")
    if not inverse_arg and len(upper) == len(lower) and np.any(1.0 / z >= 1.0):
        raise DomainError("p = q forward-argument integrands need all z eigenvalues > 1")

    two_arg = y_eigs is not None
    if inverse_arg:
        if np.any(u > 0):
            raise DomainError("inverse-argument transforms need U <= 0")
        # The inverse-argument transform is exact only when the integrand
        # series terminates; otherwise it carries a complementary Bessel-type
        # term (visible already at m = 1) and is formal.
        if not any(v <= 1e-12 and abs(v - round(v)) < 1e-9 for v in upper):
            raise UnsupportedParameterError(
                "inverse-argument transforms are verified only for terminating "
                "integrands (some upper parameter a nonpositive integer)"
            )
        rhs_spec = HypergeomSpec(upper, lower + (-a + c + 1,), algebra, m)
        rhs_arg = -u * z
    else:
        rhs_spec = HypergeomSpec(upper + (a,), lower, algebra, m)
        rhs_arg = u / z
    if two_arg:
        rhs = pfq_two(rhs_spec, rhs_arg, np.asarray(y_eigs, dtype=float))
    else:
        rhs = pfq(rhs_spec, rhs_arg)
    analytic = math.exp(mv_gamma_ln(m, algebra, a) - a * float(np.log(z).sum())) * rhs.value

    int_spec = HypergeomSpec(upper, lower, algebra, m)
    int_term = _termination_bound(int_spec)
    y = np.asarray(y_eigs, dtype=float) if two_arg else None
    sampler = ConeSampler(m, algebra, a, tuple(z))
    log_w0 = sampler.log_norm()
    rng = _rng(seed)
    chunks = []
    done = 0
    while done < n_samples:
        bsz = min(_CHUNK, n_samples - done)
        x, _ = sampler.sample(rng, bsz)
        spectra = (
            _eigs_times_diag(np.linalg.inv(x), u) if inverse_arg else _eigs_times_diag(x, u)
        )
        if not upper and not lower and not two_arg:
            fvals = np.exp(spectra.sum(axis=1))
        elif int_term is not None:
            ev = pfq_batch(int_spec, spectra, m * int_term, max_first_part=int_term, y_eigs=y)
            fvals = ev.values
        else:
            max_tr = float(np.abs(spectra).sum(axis=1).max())
            degree = min(130, int(max_tr + 12.0 * math.sqrt(max_tr + 1.0) + 25))
            ev = pfq_batch(int_spec, spectra, degree, y_eigs=y)
            if ev.max_last_ratio > 1e-8:
                degree = min(200, degree * 2)
                ev = pfq_batch(int_spec, spectra, degree, y_eigs=y)
            fvals = ev.values
        chunks.append(np.exp(log_w0) * fvals)
        done += bsz
    values = np.concatenate(chunks)
    params = ("laplace_hypergeom", upper, lower, a, tuple(u), tuple(z), m, beta,
              inverse_arg, n_samples, seed)
    tag = "inv" if inverse_arg else "fwd"
    return _report(
        f"laplace-{len(upper)}f{len(lower)}-{tag}-m{m}-b{beta}",
        params, analytic, values, z_max, rel_max,
    )


def verify_euler_1f1_integral(
    a: float,
    cpar: float,
    x_eigs,
    m: int,
    algebra: DivisionAlgebra,
    n_samples: int = 100_000,
    seed: int = 0,
    z_max: float = DEFAULT_Z_MAX,
    rel_max: float = DEFAULT_REL_MAX,
) -> VerificationReport:
    """Euler-type integral representation of the confluent series: the
    beta-weighted average of etr(XY) over 0 < Y < I equals 1F1(a; c; X)."""
    beta = algebra.beta
    c = (m - 1) * beta / 2
    if not (cpar > a + c and a > c):
        raise DomainError(f"requires c > a + (m-1)*beta/2 and a > (m-1)*beta/2 = {c}")
    x = np.asarray(x_eigs, dtype=float)
    series = pfq(HypergeomSpec((a,), (cpar,), algebra, m), x)
    analytic = series.value
    rng = _rng(seed)
    chunks = []
    done = 0
    while done < n_samples:
        bsz = min(_CHUNK, n_samples - done)
        u = _matrix_beta1(m, algebra, a, cpar - a, rng, bsz)
        tr = np.einsum("bii->b", u * x[None, None, :]).real
        chunks.append(np.exp(tr))
        done += bsz
    values = np.concatenate(chunks)
    params = ("euler_1f1", a, cpar, tuple(x), m, beta, n_samples, seed)
    return _report(f"euler-1f1-m{m}-b{beta}", params, analytic, values, z_max, rel_max)


# ---------------------------------------------------------------------------
# Group integrals
# ---------------------------------------------------------------------------


def verify_stiefel_0f1(
    xx_eigs,
    m: int,
    n: int,
    algebra: DivisionAlgebra,
    n_samples: int = 100_000,
    seed: int = 0,
    z_max: float = DEFAULT_Z_MAX,
    rel_max: float = DEFAULT_REL_MAX,
) -> VerificationReport:
    """Average of etr(beta X H1) over the first m columns of a Haar matrix
    against 0F1(beta n / 2; beta^2 X X* / 4); beta in {1, 2}."""
    if algebra.beta not in (1, 2):
        raise UnsupportedParameterError("Stiefel check supports beta in {1, 2}")
    if n < m:
        raise DomainError(f"requires n >= m, got n = {n} < m = {m}")
    beta = algebra.beta
    xx = np.asarray(xx_eigs, dtype=float)
    if np.any(xx < 0):
        raise DomainError("xx_eigs are eigenvalues of X X* and must be nonnegative")
    analytic = pfq(
        HypergeomSpec((), (beta * n / 2.0,), algebra, m), (beta**2 / 4.0) * xx
    ).value
    root = np.sqrt(xx)
    rng = _rng(seed)
    chunks = []
    done = 0
    while done < n_samples:
        bsz = min(_CHUNK, n_samples - done)
        h = _haar_batch(n, algebra, rng, bsz)
        diag = np.einsum("bii->bi", h[:, :m, :m])
        # trace in the algebra means the real part for the complex case
        tr = (root[None, :] * diag).sum(axis=1).real
        chunks.append(np.exp(beta * tr))
        done += bsz
    values = np.concatenate(chunks)
    params = ("stiefel", tuple(xx), m, n, algebra.beta, n_samples, seed)
    return _report(f"stiefel-0f1-m{m}-n{n}-b{beta}", params, analytic, values, z_max, rel_max)


def verify_two_matrix_0f0(
    x_eigs,
    y_eigs,
    m: int,
    algebra: DivisionAlgebra,
    n_samples: int = 100_000,
    seed: int = 0,
    z_max: float = DEFAULT_Z_MAX,
    rel_max: float = DEFAULT_REL_MAX,
) -> VerificationReport:
    """Haar average of etr(X H Y H*) against the two-argument exponential
    series; beta in {1, 2, 4}."""
    x = np.asarray(x_eigs, dtype=float)
    y = np.asarray(y_eigs, dtype=float)
    analytic = pfq_two(HypergeomSpec((), (), algebra, m), x, y).value
    rng = _rng(seed)
    chunks = []
    done = 0
    while done < n_samples:
        bsz = min(_CHUNK, n_samples - done)
        h = _haar_batch(m, algebra, rng, bsz)
        if algebra.beta == 4:
            e = _quat.embed(h[0], h[1])
            x2 = np.concatenate([x, x])
            y2 = np.concatenate([y, y])
            tr = 0.5 * np.einsum("i,bij,j,bij->b", x2, e, y2, e.conj()).real
        else:
            tr = np.einsum("i,bij,j,bij->b", x, h, y, h.conj()).real
        chunks.append(np.exp(tr))
        done += bsz
    values = np.concatenate(chunks)
    params = ("two_matrix_0f0", tuple(x), tuple(y), m, algebra.beta, n_samples, seed)
    return _report(f"two-matrix-0f0-m{m}-b{algebra.beta}", params, analytic, values, z_max, rel_max)


# ---------------------------------------------------------------------------
# Default identity suite
# ---------------------------------------------------------------------------


def _case_seed(base: int, label: str) -> int:
    return base + (zlib.crc32(label.encode()) & 0xFFFF)


def default_suite(quick: bool = False, seed: int = 20260811,
                  z_max: float = DEFAULT_Z_MAX, rel_max: float = DEFAULT_REL_MAX):
    """The curated identity list behind ``jackdiv verify all``.

    Returns (label, thunk) pairs; each thunk runs one Monte Carlo check and
    returns its report.  ``quick`` divides the sample budgets by five.
    """
    from .core import COMPLEX, QUATERNION, REAL

    div = 5 if quick else 1
    n_haar = 100_000 // div
    n_cone = 400_000 // div
    n_big = 1_000_000 // div

    P_ = Partition
    cases = []

    def add(label, fn):
        cases.append((label, fn))

    kwargs = dict(z_max=z_max, rel_max=rel_max)
    s = lambda label: _case_seed(seed, label)

    add("split/m2/b1/k21", lambda: verify_split_integral(
        P_((2, 1)), (1.0, 2.0), (3.0, 1.0), 2, REAL, n_haar, s("split/m2/b1/k21"), **kwargs))
    add("split/m2/b2/k2", lambda: verify_split_integral(
        P_((2,)), (1.0, 2.0), (3.0, 1.0), 2, COMPLEX, n_haar, s("split/m2/b2/k2"), **kwargs))
    add("split/m2/b4/k21", lambda: verify_split_integral(
        P_((2, 1)), (1.0, 2.0), (3.0, 1.0), 2, QUATERNION, n_haar, s("split/m2/b4/k21"), **kwargs))
    add("split/m3/b1/k3", lambda: verify_split_integral(
        P_((3,)), (1.0, 2.0, 0.5), (2.0, 1.0, 1.0), 3, REAL, n_haar, s("split/m3/b1/k3"), **kwargs))

    add("laplace-jack/m1/b1", lambda: verify_laplace_jack(
        1.3, P_((2,)), (0.8,), (1.2,), 1, REAL, n_cone, s("laplace-jack/m1/b1"), **kwargs))
    add("laplace-jack/m2/b1/std", lambda: verify_laplace_jack(
        1.7, P_((2,)), (1.0, 0.5), (1.0, 1.0), 2, REAL, n_cone, s("laplace-jack/m2/b1/std"), **kwargs))
    add("laplace-jack/m2/b1/corrected", lambda: verify_laplace_jack(
        0.25, P_((1, 1)), (1.0, 0.5), (1.0, 1.0), 2, REAL, n_big, s("laplace-jack/m2/b1/corrected"), **kwargs))
    add("laplace-jack/m2/b2/corrected", lambda: verify_laplace_jack(
        0.9, P_((2, 1)), (1.0, 0.5), (1.5, 1.0), 2, COMPLEX, n_big, s("laplace-jack/m2/b2/corrected"), **kwargs))

    add("beta-jack/fwd/m2/b2", lambda: verify_beta_jack(
        2.0, 3.0, P_((1, 1)), (1.0, 0.7), 2, COMPLEX, False, n_cone, s("beta-jack/fwd/m2/b2"), **kwargs))
    add("beta-jack/fwd/m2/b1/corrected", lambda: verify_beta_jack(
        0.3, 2.0, P_((1, 1)), (1.0, 0.7), 2, REAL, False, n_big, s("beta-jack/fwd/m2/b1/corrected"), **kwargs))
    add("beta-jack/inv/m2/b1", lambda: verify_beta_jack(
        4.6, 2.0, P_((2,)), (1.0, 0.7), 2, REAL, True, n_cone, s("beta-jack/inv/m2/b1"), **kwargs))

    add("radial/exp/inv", lambda: verify_radial_kernel(
        "exp", 3.3, P_((1,)), (0.8, 0.4), (1.0, 1.3), 2, REAL, True, n_cone, s("radial/exp/inv"), **kwargs))
    add("radial/exp-power/fwd", lambda: verify_radial_kernel(
        "exp_power", 1.4, P_((2,)), (0.8, 0.4), (1.0, 1.3), 2, REAL, False, n_cone,
        s("radial/exp-power/fwd"), j_power=1, **kwargs))
    add("radial/pareto/inv", lambda: verify_radial_kernel(
        "pareto", 3.2, P_((1,)), (0.8, 0.4), (1.0, 1.3), 2, REAL, True, n_cone,
        s("radial/pareto/inv"), eta=4.0, **kwargs))

    add("beta2/r1/m2/b1", lambda: verify_beta2_jack(
        5.6, 1.8, P_((1, 1)), (1.0, 0.6), 2, REAL, "r1", n_cone, s("beta2/r1/m2/b1"), **kwargs))
    add("beta2/r1/m2/b1/corrected", lambda: verify_beta2_jack(
        5.3, 0.3, P_((1, 1)), (1.0, 0.6), 2, REAL, "r1", n_big, s("beta2/r1/m2/b1/corrected"), **kwargs))
    add("beta2/r2/m2/b2", lambda: verify_beta2_jack(
        2.0, 6.1, P_((2,)), (1.0, 0.6), 2, COMPLEX, "r2", n_cone, s("beta2/r2/m2/b2"), **kwargs))

    add("incomplete/gamma-lower", lambda: verify_incomplete(
        "gamma_lower", 2, REAL, 1.5, lambda_eigs=(1.0, 0.5), omega_eigs=(1.2, 0.8),
        n_samples=n_cone, seed=s("incomplete/gamma-lower"), **kwargs))
    add("incomplete/beta", lambda: verify_incomplete(
        "beta", 2, REAL, 1.4, b=2.2, xi_eigs=(0.55, 0.3),
        n_samples=n_cone, seed=s("incomplete/beta"), **kwargs))
    add("incomplete/gamma-upper", lambda: verify_incomplete(
        "gamma_upper", 2, REAL, 3.5, lambda_eigs=(1.0, 0.7), omega_eigs=(1.0, 0.6),
        n_samples=n_cone, seed=s("incomplete/gamma-upper"), **kwargs))

    add("laplace-hg/0f0-to-1f0", lambda: verify_laplace_hypergeom(
        (), (), 1.8, (0.25, 0.1), (1.3, 1.1), 2, REAL,
        n_samples=n_cone, seed=s("laplace-hg/0f0-to-1f0"), **kwargs))
    add("laplace-hg/1f1-to-2f1", lambda: verify_laplace_hypergeom(
        (0.9,), (2.3,), 2.1, (0.3, 0.15), (1.4, 1.2), 2, COMPLEX,
        n_samples=n_haar, seed=s("laplace-hg/1f1-to-2f1"), **kwargs))
    add("laplace-hg/inv-terminating", lambda: verify_laplace_hypergeom(
        (-2.0,), (2.7,), 3.6, (-0.4, -0.2), (1.0, 0.8), 2, REAL, inverse_arg=True,
        n_samples=n_cone, seed=s("laplace-hg/inv-terminating"), **kwargs))
    add("laplace-hg/two-arg-0f0", lambda: verify_laplace_hypergeom(
        (), (), 1.9, (0.3, 0.12), (1.5, 1.2), 2, COMPLEX, y_eigs=(0.7, 0.3),
        n_samples=n_haar // 2, seed=s("laplace-hg/two-arg-0f0"), **kwargs))

    add("euler-integral/1f1", lambda: verify_euler_1f1_integral(
        1.6, 3.4, (0.8, 0.3), 2, REAL, n_cone, s("euler-integral/1f1"), **kwargs))

    add("stiefel/m1/b1", lambda: verify_stiefel_0f1(
        (0.81,), 1, 2, REAL, n_haar, s("stiefel/m1/b1"), **kwargs))
    add("stiefel/m2/b1", lambda: verify_stiefel_0f1(
        (0.9, 0.4), 2, 4, REAL, n_haar, s("stiefel/m2/b1"), **kwargs))
    add("stiefel/m2/b2", lambda: verify_stiefel_0f1(
        (0.9, 0.4), 2, 4, COMPLEX, n_haar, s("stiefel/m2/b2"), **kwargs))

    add("two-matrix-0f0/b1", lambda: verify_two_matrix_0f0(
        (0.5, 0.2), (0.3, 0.1), 2, REAL, n_haar, s("two-matrix-0f0/b1"), **kwargs))
    add("two-matrix-0f0/b2", lambda: verify_two_matrix_0f0(
        (0.5, 0.2), (0.3, 0.1), 2, COMPLEX, n_haar, s("two-matrix-0f0/b2"), **kwargs))
    add("two-matrix-0f0/b4", lambda: verify_two_matrix_0f0(
        (0.5, 0.2), (0.3, 0.1), 2, QUATERNION, n_haar, s("two-matrix-0f0/b4"), **kwargs))

    return cases


def run_suite(quick: bool = False, seed: int = 20260811, only: str | None = None,
              z_max: float = DEFAULT_Z_MAX, rel_max: float = DEFAULT_REL_MAX):
    """Run the default suite (optionally filtered by substring) and return
    the reports in declaration order."""
    reports = []
    for label, thunk in default_suite(quick=quick, seed=seed, z_max=z_max, rel_max=rel_max):
        if only and only not in label:
            continue
        reports.append(thunk())
    return reports
