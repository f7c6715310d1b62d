"""Hermite polynomial families and their generating-function identities.

Three families are implemented:

* ``hermite_real``: the classical polynomials H_n(x) with real argument,
* ``hermite_holo``: the same recurrence continued to complex argument,
* ``hermite_complex_2v``: the two-index family H_{m,n}(z1, z2), polynomial
  in two complex variables and symmetric under ``(m, n, z1, z2) ->
  (n, m, z2, z1)``.

Recurrences are the primary evaluation path throughout (the alternating
explicit sums cancel catastrophically for moderate degrees); the finite sums
are kept as independent oracles in the test suite.  The two exponential
generating-function identities (``mehler_product``, ``mehler_two_variable``)
return the truncated series next to the closed form so callers can measure
the truncation error themselves, and ``orthogonality_integral`` evaluates
the weighted complex-plane inner product of the one-variable family by
tensor-product Gauss-Hermite quadrature.
"""

from __future__ import annotations

import math

import numpy as np

from .quadrature import gauss_hermite, require_convergence

__all__ = [
    "hermite_real",
    "hermite_holo",
    "hermite_holo_sequence",
    "hermite_complex_2v",
    "hermite_complex_2v_table",
    "mehler_product",
    "mehler_two_variable",
    "orthogonality_integral",
    "orthogonality_rhs",
]


def _check_index(n: int, name: str = "n") -> None:
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {n!r}")


def hermite_holo_sequence(n_max: int, z) -> np.ndarray:
    """Values H_0(z) .. H_{n_max}(z) by the three-term recurrence.

    ``z`` may be a scalar or an ndarray; the returned array has shape
    ``(n_max + 1, *shape(z))`` and complex dtype.
    """
    _check_index(n_max, "n_max")
    z = np.asarray(z, dtype=complex)
    out = np.empty((n_max + 1,) + z.shape, dtype=complex)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = 2.0 * z
    for n in range(1, n_max):
        out[n + 1] = 2.0 * z * out[n] - 2.0 * n * out[n - 1]
    return out


def hermite_real(n: int, x):
    """H_n(x) for real ``x`` via H_{n+1} = 2x H_n - 2n H_{n-1}.

    Total function: any finite real argument (scalar or array) is accepted.
    """
    _check_index(n)
    x = np.asarray(x, dtype=float)
    value = hermite_holo_sequence(n, x)[n].real
    return float(value) if value.ndim == 0 else value


def hermite_holo(n: int, z):
    """H_n(z) with complex argument, evaluated by the same recurrence."""
    _check_index(n)
    value = hermite_holo_sequence(n, z)[n]
    return complex(value) if value.ndim == 0 else value


def hermite_complex_2v_table(m_max: int, n_max: int, z1: complex, z2: complex) -> np.ndarray:
    """Table of H_{m,n}(z1, z2) for m <= m_max, n <= n_max.

    Built from H_{0,n} = z2^n and the recurrence
    H_{m+1,n} = z1 H_{m,n} - n H_{m,n-1} (the s-derivative of the
    generating function exp(s z1 + t z2 - s t)).
    """
    _check_index(m_max, "m_max")
    _check_index(n_max, "n_max")
    z1 = complex(z1)
    z2 = complex(z2)
    table = np.empty((m_max + 1, n_max + 1), dtype=complex)
    table[0, 0] = 1.0
    for n in range(n_max):
        table[0, n + 1] = z2 * table[0, n]
    for m in range(m_max):
        table[m + 1, 0] = z1 * table[m, 0]
        for n in range(1, n_max + 1):
            table[m + 1, n] = z1 * table[m, n] - n * table[m, n - 1]
    return table


def hermite_complex_2v(m: int, n: int, z1: complex, z2: complex) -> complex:
    """Two-variable complex Hermite polynomial H_{m,n}(z1, z2)."""
    _check_index(m, "m")
    _check_index(n, "n")
    return complex(hermite_complex_2v_table(m, n, z1, z2)[m, n])


def mehler_product(t: float, z1: complex, z2: complex, n_terms: int = 60) -> tuple[complex, complex]:
    """Truncated product generating series next to its closed form.

    Returns ``(series, closed)`` where::

        series = sum_{l<=n_terms} t^l / (2^l l!) H_l(z1) H_l(z2)
        closed = (1 - t^2)^(-1/2) exp([2 t z1 z2 - t^2 (z1^2 + z2^2)] / (1 - t^2))

    The identity holds for |t| < 1; arguments outside that disc are rejected.
    The caller compares the two values (the truncation error is the caller's
    to judge: convergence degrades as |t| -> 1).
    """
    t = float(t)
    if abs(t) >= 1.0:
        raise ValueError(f"|t| must be < 1, got {t}")
    _check_index(n_terms, "n_terms")
    h1 = hermite_holo_sequence(n_terms, complex(z1))
    h2 = hermite_holo_sequence(n_terms, complex(z2))
    series = 0.0 + 0.0j
    coeff = 1.0  # t^l / (2^l l!)
    for l in range(n_terms + 1):
        series += coeff * h1[l] * h2[l]
        coeff *= t / (2.0 * (l + 1))
    z1 = complex(z1)
    z2 = complex(z2)
    closed = (1.0 - t * t) ** -0.5 * np.exp(
        (2.0 * t * z1 * z2 - t * t * (z1 * z1 + z2 * z2)) / (1.0 - t * t)
    )
    return series, complex(closed)


def mehler_two_variable(
    s: float,
    t: float,
    z1: complex,
    z2: complex,
    u: float,
    v: float,
    n_terms: int = 60,
) -> tuple[complex, complex]:
    """Two-variable analogue of :func:`mehler_product`.

    Returns ``(series, closed)`` for the double generating series::

        sum_{m,n<=n_terms} s^m t^n / (sqrt(2^(m+n)) m! n!)
                           H_{m,n}(z1, z2) H_m(u) H_n(v)

    against the closed form valid for |s t| < 1.  Truncation applies to both
    summation indices.
    """
    s = float(s)
    t = float(t)
    if abs(s * t) >= 1.0:
        raise ValueError(f"|s*t| must be < 1, got {s * t}")
    _check_index(n_terms, "n_terms")
    z1 = complex(z1)
    z2 = complex(z2)
    table = hermite_complex_2v_table(n_terms, n_terms, z1, z2)
    hu = hermite_holo_sequence(n_terms, float(u)).real
    hv = hermite_holo_sequence(n_terms, float(v)).real
    # row/column coefficients s^m / (sqrt(2^m) m!), t^n / (sqrt(2^n) n!)
    am = np.empty(n_terms + 1)
    bn = np.empty(n_terms + 1)
    am[0] = bn[0] = 1.0
    for k in range(n_terms):
        am[k + 1] = am[k] * s / (math.sqrt(2.0) * (k + 1))
        bn[k + 1] = bn[k] * t / (math.sqrt(2.0) * (k + 1))
    series = complex(np.einsum("m,n,mn->", am * hu, bn * hv, table))

    st = s * t
    den = 2.0 * (1.0 - st * st)
    closed = (1.0 - st * st) ** -0.5 * np.exp(
        (
            2.0 * math.sqrt(2.0) * (s * u * z1 + t * v * z2 + st * (s * v * z1 + t * u * z2))
            - s * s * z1 * z1
            - t * t * z2 * z2
        )
        / den
        + (-4.0 * st * u * v - 2.0 * st * st * (z1 * z2 + u * u + v * v)) / den
    )
    return series, complex(closed)


def orthogonality_rhs(m: int, n: int, alpha: float) -> float:
    """Closed-form value of the weighted inner product of H_m and H_n.

    Diagonal value pi sqrt(alpha)/(1-alpha) * (2(1+alpha)/(1-alpha))^n n!;
    zero off the diagonal.
    """
    _check_index(m, "m")
    _check_index(n, "n")
    if m != n:
        return 0.0
    return (
        math.pi
        * math.sqrt(alpha)
        / (1.0 - alpha)
        * (2.0 * (1.0 + alpha) / (1.0 - alpha)) ** n
        * math.factorial(n)
    )


def _orthogonality_quad(m: int, n: int, alpha: float, order: int) -> complex:
    # per-axis rescaling to the two Gaussian weights exp(-(1-a)x^2), exp(-(1/a-1)y^2)
    nodes, weights = gauss_hermite(order)
    sx = 1.0 / math.sqrt(1.0 - alpha)
    sy = 1.0 / math.sqrt(1.0 / alpha - 1.0)
    z = sx * nodes[:, None] + 1j * sy * nodes[None, :]
    seq = hermite_holo_sequence(max(m, n), z)
    integrand = seq[m] * np.conj(seq[n])
    return sx * sy * complex(np.einsum("i,j,ij->", weights, weights, integrand))


def orthogonality_integral(
    m: int,
    n: int,
    alpha: float,
    order: int = 80,
    check: bool = True,
    rtol: float = 1e-10,
) -> complex:
    """Quadrature value of ``int_C H_m(z) conj(H_n(z)) w_alpha(z) dx dy``.

    The weight is exp(-(1-alpha) x^2 - (1/alpha - 1) y^2) over z = x + i y,
    for 0 < alpha < 1.  Tensor-product Gauss-Hermite nodes are rescaled
    per-axis to the two weights, which makes the rule exact once
    ``2*order - 1 >= m + n``.  With ``check=True`` the result is recomputed
    at doubled order and a :class:`~cvsqueeze.quadrature.ConvergenceError`
    is raised if the two values disagree beyond ``rtol``.
    """
    _check_index(m, "m")
    _check_index(n, "n")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    value = _orthogonality_quad(m, n, alpha, order)
    if check:
        refined = _orthogonality_quad(m, n, alpha, 2 * order)
        # scale the comparison by the diagonal magnitude so off-diagonal
        # zeros are not judged in relative terms against themselves
        scale = orthogonality_rhs(max(m, n), max(m, n), alpha)
        require_convergence(value / scale, refined / scale, rtol, "orthogonality_integral")
        value = refined
    return value
