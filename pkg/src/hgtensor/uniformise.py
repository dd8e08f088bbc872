"""Uniformisation of a general hypergraph into a k_max-uniform one.

The process runs in two alternating phases.  Starting from the layer of
singleton edges (weighted c_1), step k first *inflates*: every edge
gains the special vertex y_k, raising uniformity from k to k+1.  It
then *merges* with layer k+1 (weighted c_{k+1}).  After k_max - 1 steps
every original hyperedge e of size j has become e u {y_j, ..., y_{k_max-1}}
with weight c_j, a k_max-uniform weighted hypergraph over the original
vertices plus k_max - 1 special ones.

Special vertex y_level is materialized as index n + level right away, so
one dense indexing scheme covers the whole pipeline.  All k_max - 1
special vertices are created even when some layers are empty.

``uniformise`` builds the result directly via the per-edge padding
formula (O(|E| * k_max)); ``uniformise_iterative`` runs the literal
two-phase fold.  Both produce identical output, edges ordered layer by
layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from hgtensor.errors import VertexCollision
from hgtensor.hypergraph import Hypergraph, WeightedHypergraph, uniform_weights


@dataclass(frozen=True)
class SpecialVertex:
    """Added vertex y_level, stored at index n + level."""

    level: int
    index: int


@dataclass(frozen=True)
class UniformisedHypergraph:
    """k_max-uniform weighted hypergraph over V plus the special vertices.

    Each edge keeps its original cardinality in ``origin_sizes``; an edge
    of origin size j contains exactly the special vertices y_j..y_{k_max-1}
    alongside its j original vertices.
    """

    n_original: int
    k_max: int
    edges: tuple[tuple[int, ...], ...]
    weights: tuple[Fraction, ...]
    origin_sizes: tuple[int, ...]

    def __post_init__(self):
        n, k_max = self.n_original, self.k_max
        if not (len(self.edges) == len(self.weights) == len(self.origin_sizes)):
            raise ValueError("edges, weights and origin_sizes must align")
        object.__setattr__(
            self, "weights", tuple(Fraction(w) for w in self.weights)
        )
        for e, w, j in zip(self.edges, self.weights, self.origin_sizes):
            if len(e) != k_max:
                raise ValueError(f"edge {e} is not {k_max}-uniform")
            if w <= 0:
                raise ValueError("weights must be positive")
            originals = tuple(v for v in e if v <= n)
            specials = tuple(v for v in e if v > n)
            if len(originals) != j or specials != tuple(range(n + j, n + k_max)):
                raise ValueError(
                    f"edge {e} does not match origin size {j} over n={n}"
                )

    @property
    def dim(self) -> int:
        """Total vertex count, n + k_max - 1."""
        return self.n_original + self.k_max - 1

    def special_vertices(self) -> tuple[SpecialVertex, ...]:
        n = self.n_original
        return tuple(
            SpecialVertex(level, n + level) for level in range(1, self.k_max)
        )

    def to_weighted(self) -> WeightedHypergraph:
        return WeightedHypergraph(Hypergraph(self.dim, self.edges), self.weights)

    def strip_specials(self) -> Hypergraph:
        """Drop the special vertices, recovering the original edge family."""
        n = self.n_original
        stripped = tuple(tuple(v for v in e if v <= n) for e in self.edges)
        return Hypergraph(n, stripped)


def default_coefficients(k_max: int) -> tuple[Fraction, ...]:
    """Dilatation coefficients c_j = k_max / j.

    This choice makes every nonzero entry of the layered e-adjacency
    tensor equal and the generalized handshake identity exact.
    """
    return tuple(Fraction(k_max, j) for j in range(1, k_max + 1))


def vertex_augment(hw: WeightedHypergraph, y: int) -> WeightedHypergraph:
    """Add vertex y to every hyperedge (weights preserved).

    y must not already be a vertex of the hypergraph; the vertex set is
    extended to include it.
    """
    if not isinstance(y, int) or y < 1:
        raise ValueError(f"vertex index must be a positive integer, got {y!r}")
    if y <= hw.n:
        raise VertexCollision(f"vertex {y} is already present (n={hw.n})")
    edges = tuple(e + (y,) for e in hw.edges)
    return WeightedHypergraph(Hypergraph(y, edges), hw.weights)


def merge(ha: WeightedHypergraph, hb: WeightedHypergraph) -> WeightedHypergraph:
    """Concatenate two weighted edge families over the union vertex set.

    Families admit repeats, so merging a hypergraph with itself doubles
    every edge.
    """
    n = max(ha.n, hb.n)
    return WeightedHypergraph(
        Hypergraph(n, ha.edges + hb.edges), ha.weights + hb.weights
    )


def _prepare(
    h: Hypergraph, coeffs: Sequence[Fraction] | None
) -> tuple[int, tuple[Fraction, ...]]:
    k_max = h.range()
    h.require_no_repeats()
    if coeffs is None:
        cs = default_coefficients(k_max)
    else:
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) != k_max:
            raise ValueError(f"need {k_max} coefficients, got {len(cs)}")
        if any(c <= 0 for c in cs):
            raise ValueError("coefficients must be positive")
    return k_max, cs


def uniformise(
    h: Hypergraph, coeffs: Sequence[Fraction] | None = None
) -> UniformisedHypergraph:
    """Per-edge padding shortcut: e of size j -> e u {y_j..y_{k_max-1}}, weight c_j."""
    k_max, cs = _prepare(h, coeffs)
    n = h.n
    edges: list[tuple[int, ...]] = []
    weights: list[Fraction] = []
    origins: list[int] = []
    for layer in h.layers():
        for e in layer.edges:
            j = len(e)
            edges.append(e + tuple(range(n + j, n + k_max)))
            weights.append(cs[j - 1])
            origins.append(j)
    return UniformisedHypergraph(
        n, k_max, tuple(edges), tuple(weights), tuple(origins)
    )


def uniformise_iterative(
    h: Hypergraph, coeffs: Sequence[Fraction] | None = None
) -> UniformisedHypergraph:
    """Literal inflation/merging fold; agrees with ``uniformise`` exactly."""
    k_max, cs = _prepare(h, coeffs)
    n = h.n
    layers = h.layers()
    current = uniform_weights(layers[0], cs[0])
    for k in range(1, k_max):
        current = vertex_augment(current, n + k)
        current = merge(current, uniform_weights(layers[k], cs[k]))
    origins = tuple(sum(1 for v in e if v <= n) for e in current.edges)
    return UniformisedHypergraph(
        n, k_max, current.edges, current.weights, origins
    )
