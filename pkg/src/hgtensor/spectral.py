"""Degree extraction, the spectral-radius bound, and the H-eigensolver.

For a layered e-adjacency tensor the row sums recover every degree: the
slot of an original vertex sums to its degree, and the slot of special
vertex y_i sums to |{e : |e| <= i}|, so consecutive differences give the
per-layer edge counts.  Every H-eigenvalue lambda (convention
A x^{k-1} = lambda x^{[k-1]}) satisfies |lambda| <= max(Delta, Delta*),
the larger of the maximal original-vertex and special-vertex degrees;
for an r-regular r-uniform hypergraph the bound is attained.

``largest_h_eigenvalue`` runs a nonnegative-tensor power iteration on
the diagonally shifted tensor A + sigma*I (H-eigenpairs shift by exactly
sigma, which is subtracted back).  The shift keeps the iterate positive
and damps alternating modes; see the function docstring for the two
stopping rules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from hgtensor import kernels
from hgtensor.errors import (
    DimensionMismatch,
    MalformedTensor,
    NoConvergence,
    OrderTooSmall,
    UnexpectedRepeatedIndex,
)
from hgtensor.tensor import SymSparseTensor, _split_entry


@dataclass(frozen=True)
class DegreeReport:
    """Per-slot degrees of a layered e-adjacency tensor.

    ``degrees`` has length n + k_max - 1: original-vertex degrees first,
    then the cumulative special-vertex degrees (non-decreasing).
    ``layer_counts[j-1]`` is the number of edges of cardinality j; the
    top layer is |E| minus the last special degree, since there is no
    special vertex beyond level k_max - 1.
    """

    n: int
    k_max: int
    degrees: tuple[int, ...]
    layer_counts: tuple[int, ...]

    @property
    def n_edges(self) -> int:
        return sum(self.layer_counts)

    @property
    def delta(self) -> int:
        """Largest original-vertex degree."""
        return max(self.degrees[: self.n])

    @property
    def delta_star(self) -> int:
        """Largest special-vertex degree (0 when there are none)."""
        return max(self.degrees[self.n :], default=0)


@dataclass(frozen=True)
class EigenResult:
    eigenvalue: float
    vector: np.ndarray
    iterations: int
    residual: float


def degrees_from_tensor(t: SymSparseTensor, n: int) -> DegreeReport:
    """Row sums of the tensor, as exact per-slot degrees.

    Each canonical entry is validated against the layered pattern
    (MalformedTensor otherwise).  A slot's degree is the sum of the
    tensor over all tuples starting with that slot; sparsely, every
    canonical square-free tuple contributes (k-1)! * value to each of
    its k slots.  The fully-diagonal tuples excluded by that row-sum
    identity are always zero here, so no special casing is needed.
    """
    k = t.order
    if n < 1 or t.dim != n + k - 1:
        raise MalformedTensor(
            f"dimension {t.dim} incompatible with n={n} and order {k}"
        )
    weight = math.factorial(k - 1)
    sums = [Fraction(0)] * t.dim
    for tup, value in t.entries.items():
        _split_entry(tup, value, n, k)
        for i in tup:
            sums[i - 1] += weight * value
    degrees = tuple(int(s) for s in sums)

    m = t.nnz
    specials = degrees[n:]
    if any(a > b for a, b in zip(specials, specials[1:])):
        raise MalformedTensor("special-vertex degrees are not cumulative")
    if k == 1:
        layer_counts: tuple[int, ...] = (m,)
    else:
        counts = [specials[0]]
        counts += [specials[j] - specials[j - 1] for j in range(1, k - 1)]
        counts.append(m - specials[-1])
        layer_counts = tuple(counts)
    if any(c < 0 for c in layer_counts):
        raise MalformedTensor("negative layer count")
    return DegreeReport(n, k, degrees, layer_counts)


def spectral_bound(report: DegreeReport) -> int:
    """max(Delta, Delta*): bound on |lambda| for every H-eigenvalue."""
    return max(report.delta, report.delta_star)


def _coords(t: SymSparseTensor) -> tuple[np.ndarray, np.ndarray]:
    """Canonical entries as 0-based COO arrays; square-free tuples only."""
    items = t.canonical_items()
    indices = np.empty((len(items), t.order), dtype=np.int64)
    values = np.empty(len(items), dtype=np.float64)
    for row, (tup, value) in enumerate(items):
        if len(set(tup)) != len(tup):
            raise UnexpectedRepeatedIndex(
                f"entry {tup} repeats an index; the sparse product "
                "only supports square-free tensors"
            )
        indices[row] = [i - 1 for i in tup]
        values[row] = float(value)
    return np.ascontiguousarray(indices), values


def apply(t: SymSparseTensor, x) -> np.ndarray:
    """Multilinear product A x^{k-1}: component i sums value * x_{i_2}...x_{i_k}
    over all semantic tuples (i, i_2, ..., i_k)."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (t.dim,):
        raise DimensionMismatch(
            f"vector of length {x.shape} against dimension {t.dim}"
        )
    indices, values = _coords(t)
    return kernels.apply_coords(indices, values, x)


def largest_h_eigenvalue(
    t: SymSparseTensor,
    tol: float = 1e-10,
    max_iter: int = 100_000,
    shift: float | None = None,
    residual_tol: float = 1e-12,
) -> EigenResult:
    """Largest H-eigenvalue of a nonnegative symmetric tensor.

    Power iteration x <- (A x^{k-1} + sigma * x^{[k-1]})^{[1/(k-1)]},
    renormalized to unit 1-norm, with sigma = 1 + max row sum by default
    (H-eigenvalues of the shifted tensor are exactly lambda + sigma, so
    the shift is subtracted without error).  Two stopping rules:

    * Perron bracket: the component-wise ratios y_i / x_i^{k-1} bracket
      the shifted eigenvalue; converged when max - min < ``tol``.
    * Residual: converged when the unshifted residual
      max_i |(A x^{k-1})_i - lambda * x_i^{k-1}| <= ``residual_tol``,
      with lambda the quotient sum(x * A x^{k-1}) / sum(x^k).  This rule
      also covers tensors whose bracket cannot close: zero rows pin the
      min ratio at sigma and non-dominant irreducible blocks pin it at
      their own eigenvalue, while their components (and hence the
      residual) decay geometrically.

    Raises NoConvergence with the last bracket if ``max_iter`` is hit.
    """
    if t.order < 2:
        raise OrderTooSmall("the eigensolver needs a tensor of order >= 2")
    if any(v < 0 for v in t.entries.values()):
        raise ValueError("tensor must be nonnegative")
    k = t.order
    d = t.dim
    indices, values = _coords(t)

    row_sums = kernels.apply_coords(indices, values, np.ones(d))
    if shift is None:
        shift = 1.0 + float(row_sums.max(initial=0.0))
    if shift <= 0:
        raise ValueError("shift must be positive")

    x = np.full(d, 1.0 / d)
    root = 1.0 / (k - 1)
    lam_lo = lam_hi = math.nan
    for iteration in range(1, max_iter + 1):
        ax = kernels.apply_coords(indices, values, x)
        xk1 = x ** (k - 1)
        lam = float(np.dot(x, ax) / np.sum(x * xk1))
        residual = float(np.max(np.abs(ax - lam * xk1)))

        y = ax + shift * xk1
        positive = xk1 > 0.0
        ratios = y[positive] / xk1[positive]
        lam_lo = float(ratios.min()) - shift
        lam_hi = float(ratios.max()) - shift

        if (lam_hi - lam_lo) < tol or residual <= residual_tol:
            return EigenResult(lam, x / x.sum(), iteration, residual)

        x = y**root
        x /= x.sum()
    raise NoConvergence(lam_lo, lam_hi, max_iter)
