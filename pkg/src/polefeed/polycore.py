"""Dense univariate complex polynomials.

Provides the arithmetic, simultaneous root finding, root-product
reconstruction, and Newton interpolation that the rest of the package
is built on.  Coefficients are stored in ascending powers; the zero
polynomial keeps an empty coefficient array and reports degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DuplicateNode, NoConvergence, ZeroPolynomial

# Trailing coefficients below DROP_REL * (max magnitude) are trimmed.
DROP_REL = 1e-12
# Per-root correction threshold for the simultaneous iteration.
ROOT_STEP_TOL = 1e-14
# Residual acceptance bound, relative to 1 + max coefficient magnitude.
ROOT_RESIDUAL_TOL = 1e-8
# Interpolation abscissae must be farther apart than this.
NODE_SEPARATION = 1e-12

_MAX_SWEEPS = 200


def _trim(coeffs) -> np.ndarray:
    c = np.atleast_1d(np.asarray(coeffs, dtype=complex)).ravel()
    if c.size == 0:
        return c
    m = np.abs(c).max()
    if m == 0.0:
        return c[:0]
    keep = np.nonzero(np.abs(c) > DROP_REL * m)[0]
    if keep.size == 0:
        return c[:0]
    return np.array(c[: keep[-1] + 1])


def _horner(coeffs: np.ndarray, z):
    """Evaluate ascending-order coefficients at scalar or array z."""
    z = np.asarray(z, dtype=complex)
    if coeffs.size == 0:
        return np.zeros_like(z)
    acc = np.full_like(z, coeffs[-1])
    for k in range(coeffs.size - 2, -1, -1):
        acc = acc * z + coeffs[k]
    return acc


def _horner_ld(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Horner evaluation preserving the dtype of its arguments."""
    if coeffs.size == 0:
        return np.zeros_like(z)
    acc = np.full_like(z, coeffs[-1])
    for k in range(coeffs.size - 2, -1, -1):
        acc = acc * z + coeffs[k]
    return acc


class Poly:
    """Polynomial with complex coefficients in ascending powers.

    Examples
    --------
    >>> p = Poly([1.0, 0.0, 1.0])      # 1 + s^2
    >>> p.degree
    2
    >>> p(1j)
    0j
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = _trim(coeffs)
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly((1.0,))

    @staticmethod
    def variable() -> "Poly":
        return Poly((0.0, 1.0))

    @staticmethod
    def constant(c) -> "Poly":
        return Poly((complex(c),))

    # -- basic queries ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 marking the zero polynomial."""
        return self.coeffs.size - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    @property
    def lc(self) -> complex:
        """Leading coefficient."""
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return complex(self.coeffs[-1])

    @property
    def norm(self) -> float:
        """Max coefficient magnitude (0 for the zero polynomial)."""
        if self.is_zero:
            return 0.0
        return float(np.abs(self.coeffs).max())

    def coeff(self, k: int) -> complex:
        """Coefficient of s**k (0 beyond the stored degree)."""
        if 0 <= k < self.coeffs.size:
            return complex(self.coeffs[k])
        return 0j

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        n = max(self.coeffs.size, other.coeffs.size)
        a = np.zeros(n, dtype=complex)
        a[: self.coeffs.size] += self.coeffs
        a[: other.coeffs.size] += other.coeffs
        return Poly(a)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return Poly(self.coeffs * complex(other))
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return Poly.zero()
        return Poly(np.convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero:
            raise ZeroPolynomial("division by the zero polynomial")
        if self.degree < other.degree:
            return Poly.zero(), self
        rem = np.array(self.coeffs)
        db = other.degree
        b = other.coeffs
        lead = b[-1]
        q = np.zeros(self.degree - db + 1, dtype=complex)
        for k in range(self.degree - db, -1, -1):
            c = rem[db + k] / lead
            q[k] = c
            rem[k : db + k + 1] -= c * b
        return Poly(q), Poly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, z):
        out = _horner(self.coeffs, z)
        if np.isscalar(z) or np.asarray(z).ndim == 0:
            return complex(out)
        return out

    def deriv(self) -> "Poly":
        if self.degree < 1:
            return Poly.zero()
        k = np.arange(1, self.coeffs.size)
        return Poly(self.coeffs[1:] * k)

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        return Poly(self.coeffs / self.coeffs[-1])

    def conj(self) -> "Poly":
        return Poly(np.conj(self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, (Poly, int, float, complex, np.number)):
            return NotImplemented
        other = _as_poly(other)
        return self.coeffs.shape == other.coeffs.shape and bool(
            np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __repr__(self):
        if self.is_zero:
            return "Poly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            cs = f"({c.real:.6g}{c.imag:+.6g}j)" if c.imag else f"{c.real:.6g}"
            terms.append(cs if k == 0 else (f"{cs}*s" if k == 1 else f"{cs}*s^{k}"))
        return "Poly(" + " + ".join(terms) + ")"


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, float, complex, np.number)):
        return Poly((complex(x),))
    return Poly(x)


@dataclass
class RootSet:
    """Roots of a polynomial together with evaluation residuals."""

    roots: np.ndarray
    residuals: np.ndarray

    def __len__(self):
        return self.roots.size


def _root_bound(monic: np.ndarray) -> float:
    """Fujiwara-style upper bound on root magnitudes of a monic polynomial."""
    n = monic.size - 1
    mags = np.abs(monic[:-1])
    best = 0.0
    for j in range(n):
        if mags[j] == 0.0:
            continue
        best = max(best, mags[j] ** (1.0 / (n - j)))
    return 2.0 * best if best > 0 else 1.0


def roots(p: Poly, max_sweeps: int = _MAX_SWEEPS) -> RootSet:
    """All complex roots by simultaneous (Aberth-type) iteration.

    No deflation is performed: every root is refined against the full
    polynomial, so clusters lose accuracy gracefully instead of breaking.
    Raises NoConvergence with the best iterate if the sweep limit is hit
    while residuals are still large.
    """
    if p.is_zero:
        raise ZeroPolynomial("root finding on the zero polynomial")
    n = p.degree
    if n == 0:
        return RootSet(np.zeros(0, complex), np.zeros(0))
    monic = p.coeffs / p.coeffs[-1]
    dcoef = monic[1:] * np.arange(1, n + 1)

    # Start on a circle around the root centroid, radius from the bound
    # of the recentered polynomial.
    mu = -monic[-2] / n if n >= 1 else 0j
    shifted = _taylor_shift(monic, mu)
    r = max(_root_bound(shifted), 1e-3)
    ang = 2.0 * np.pi * (np.arange(n) + 0.25) / n + 0.42
    z = mu + r * np.exp(1j * ang)

    done = np.zeros(n, dtype=bool)
    for _ in range(max_sweeps):
        pv = _horner(monic, z)
        pdv = _horner(dcoef, z)
        bad = pdv == 0
        if np.any(bad):
            z[bad] += 1e-12 * (1.0 + np.abs(z[bad]))
            pv = _horner(monic, z)
            pdv = _horner(dcoef, z)
        newton = pv / pdv
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        s = (1.0 / diff).sum(axis=1) - 1.0  # drop the diagonal placeholder
        w = newton / (1.0 - newton * s)
        w[~np.isfinite(w)] = 0.0
        z = z - w
        done = np.abs(w) < ROOT_STEP_TOL * (1.0 + np.abs(z))
        if done.all():
            break

    # Newton polish in extended precision: ill-conditioned roots (close
    # neighbors near the separation floor) carry errors ~eps * cond in
    # double, which can exceed downstream matching thresholds.
    cl = p.coeffs.astype(np.clongdouble)
    dl = p.deriv().coeffs.astype(np.clongdouble)
    zl = z.astype(np.clongdouble)
    res = np.abs(_horner_ld(cl, zl)).astype(float)
    for _ in range(3):
        pv = _horner_ld(cl, zl)
        pdv = _horner_ld(dl, zl)
        ok = pdv != 0
        cand = zl.copy()
        cand[ok] = zl[ok] - pv[ok] / pdv[ok]
        cres = np.abs(_horner_ld(cl, cand)).astype(float)
        better = cres < res
        zl[better] = cand[better]
        res[better] = cres[better]
    z = zl.astype(complex)

    scale = 1.0 + p.norm
    if not done.all() and np.any(res > ROOT_RESIDUAL_TOL * scale):
        order = np.lexsort((z.imag, z.real))
        raise NoConvergence(
            "simultaneous root iteration stalled",
            best=z[order],
            residuals=res[order],
        )
    order = np.lexsort((z.imag, z.real))
    return RootSet(z[order], res[order])


def _taylor_shift(coeffs: np.ndarray, mu: complex) -> np.ndarray:
    """Coefficients of p(x + mu) via repeated synthetic division."""
    c = np.array(coeffs)
    n = c.size
    out = np.zeros(n, dtype=complex)
    for k in range(n):
        # Divide by (x - mu); remainder is the next Taylor coefficient.
        for j in range(n - 2 - k, -1, -1):
            c[j] = c[j] + mu * c[j + 1]
        out[k] = c[0]
        c = c[1:]
    return out


def from_roots(rts) -> Poly:
    """Monic polynomial with the given roots (balanced pairwise product)."""
    rts = np.atleast_1d(np.asarray(rts, dtype=complex)).ravel()
    if rts.size == 0:
        return Poly.one()
    factors = [np.array([-r, 1.0 + 0j]) for r in rts]
    while len(factors) > 1:
        merged = []
        for i in range(0, len(factors) - 1, 2):
            merged.append(np.convolve(factors[i], factors[i + 1]))
        if len(factors) % 2:
            merged.append(factors[-1])
        factors = merged
    # Bypass trimming-by-magnitude on the fixed leading 1.
    return Poly(factors[0])


def newton_interpolate(nodes) -> Poly:
    """Interpolating polynomial through (x, y) pairs via divided differences.

    Abscissae must be pairwise separated by more than NODE_SEPARATION,
    otherwise DuplicateNode is raised.
    """
    pts = list(nodes)
    if not pts:
        raise ValueError("no interpolation nodes given")
    xs = np.array([complex(x) for x, _ in pts])
    ys = np.array([complex(y) for _, y in pts])
    n = xs.size
    if n > 1:
        diff = np.abs(xs[:, None] - xs[None, :])
        np.fill_diagonal(diff, np.inf)
        if diff.min() <= NODE_SEPARATION:
            i, j = np.unravel_index(np.argmin(diff), diff.shape)
            raise DuplicateNode(
                f"abscissae {xs[i]} and {xs[j]} are separated by {diff[i, j]:.3e}"
            )
    dd = ys.astype(complex).copy()
    for k in range(1, n):
        dd[k:] = (dd[k:] - dd[k - 1 : -1]) / (xs[k:] - xs[: n - k])
    # Expand the Newton form into monomial coefficients.
    acc = np.zeros(n, dtype=complex)
    basis = np.zeros(n, dtype=complex)
    basis[0] = 1.0
    blen = 1
    acc[0] = dd[0]
    for k in range(1, n):
        nxt = np.zeros(blen + 1, dtype=complex)
        nxt[1 : blen + 1] = basis[:blen]
        nxt[:blen] -= xs[k - 1] * basis[:blen]
        basis[: blen + 1] = nxt
        blen += 1
        acc[:blen] += dd[k] * basis[:blen]
    return Poly(acc)
