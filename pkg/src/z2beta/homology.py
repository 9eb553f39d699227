"""Equivariant Borel-Moore homology of finite Z/2Z-CW complexes over F2.

The complex is encoded by its cells, the mod-2 boundary map and a cellular
involution.  Homology in degree n is the homology of the total complex of a
double complex with one copy of the cellular chains C_q in bidegree (p, q)
for every p >= 0: 0-th column differentials are the boundary map, rows carry
1 + sigma (over F2 the two alternating differentials of the period-2
resolution of the group ring coincide).  The degree-n piece is the direct
sum of C_q over q >= max(0, n) with p = q - n, so each degree is finite
dimensional and no truncation is ever needed; both differential components
lower n by one.

Because only compact complexes are accepted, Borel-Moore homology agrees
with ordinary homology and the same matrices, transposed, compute
equivariant cohomology.

Ranks are taken by dense Gaussian elimination over F2 with Python integers
as bit rows; the curated complexes have well under a thousand cells.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .calculus import VirtualClass
from .algebra import IntPoly
from .errors import (
    AssertionMissing,
    FixedSetNotSubcomplex,
    InvalidComplex,
    TailNotStabilized,
)

#: How far below zero the series extraction looks; stabilization below zero
#: is exact, so two agreeing values suffice.
DEFAULT_WINDOW = 4


class GCWComplex:
    """A finite CW complex over F2 with a cellular involution.

    ``cells`` maps id -> dimension, ``boundary`` maps id -> frozenset of ids
    one dimension down (already reduced mod 2), ``sigma`` is the involution
    (missing entries mean fixed cells).  ``fixed_is_geometric`` is a caller
    assertion that the sigma-fixed cells model the geometric fixed set.
    """

    __slots__ = ("cells", "boundary", "sigma", "fixed_is_geometric")

    def __init__(self, cells, boundary=None, sigma=None, fixed_is_geometric=False):
        if isinstance(cells, dict):
            cell_map = {str(k): int(v) for k, v in cells.items()}
            if len(cell_map) != len(cells):
                raise InvalidComplex("duplicate cell ids")
        else:
            cell_map = {}
            for cell_id, dim in cells:
                if cell_id in cell_map:
                    raise InvalidComplex(f"duplicate cell id {cell_id!r}")
                cell_map[str(cell_id)] = int(dim)
        bnd = {}
        for cell_id, faces in (boundary or {}).items():
            reduced = set()
            for f in faces:  # repeated ids cancel mod 2
                reduced.symmetric_difference_update({str(f)})
            if reduced:
                bnd[str(cell_id)] = frozenset(reduced)
        invol = {c: c for c in cell_map}
        for a, b in (sigma or {}).items():
            invol[str(a)] = str(b)
        self.cells = cell_map
        self.boundary = bnd
        self.sigma = invol
        self.fixed_is_geometric = bool(fixed_is_geometric)

    # -- structured text form ------------------------------------------------

    @classmethod
    def from_dict(cls, data: dict) -> "GCWComplex":
        cells = [(c["id"], c["dim"]) for c in data.get("cells", [])]
        return cls(cells,
                   boundary=data.get("boundary", {}),
                   sigma=data.get("sigma", {}),
                   fixed_is_geometric=data.get("fixed_is_geometric", False))

    @classmethod
    def load(cls, path) -> "GCWComplex":
        with open(Path(path), encoding="utf-8") as handle:
            return cls.from_dict(json.load(handle))

    def to_dict(self) -> dict:
        return {
            "cells": [{"id": c, "dim": d} for c, d in sorted(self.cells.items())],
            "boundary": {c: sorted(fs) for c, fs in sorted(self.boundary.items())},
            "sigma": {a: b for a, b in sorted(self.sigma.items()) if a != b},
            "fixed_is_geometric": self.fixed_is_geometric,
        }

    # -- basic queries ---------------------------------------------------------

    @property
    def top_dimension(self) -> int:
        return max(self.cells.values(), default=-1)

    def cells_of_dim(self, q: int) -> list:
        return sorted(c for c, d in self.cells.items() if d == q)

    def is_identity_involution(self) -> bool:
        return all(a == b for a, b in self.sigma.items())


def validate_complex(x: GCWComplex) -> list:
    """Every violated invariant with the offending cells; empty means valid."""
    report = []
    for a, b in x.sigma.items():
        if a not in x.cells:
            report.append(f"sigma defined on unknown cell {a!r}")
            continue
        if b not in x.cells:
            report.append(f"sigma({a!r}) = {b!r} is not a cell")
            continue
        if x.cells[a] != x.cells[b]:
            report.append(f"sigma({a!r}) changes dimension "
                          f"{x.cells[a]} -> {x.cells[b]}")
        if x.sigma.get(b) != a:
            report.append(f"sigma is not an involution at {a!r}")
    for cell, faces in x.boundary.items():
        if cell not in x.cells:
            report.append(f"boundary defined on unknown cell {cell!r}")
            continue
        for f in faces:
            if f not in x.cells:
                report.append(f"boundary of {cell!r} hits unknown cell {f!r}")
            elif x.cells[f] != x.cells[cell] - 1:
                report.append(f"boundary of {cell!r} hits {f!r} of dimension "
                              f"{x.cells[f]}, expected {x.cells[cell] - 1}")
    if report:
        return report  # structural breakage; skip the algebraic checks
    for cell in x.cells:
        # d(d(cell)) = 0 over F2
        second = set()
        for f in x.boundary.get(cell, ()):
            second.symmetric_difference_update(x.boundary.get(f, ()))
        if second:
            report.append(f"boundary of boundary of {cell!r} is {sorted(second)}")
        # sigma commutes with the boundary
        mapped = {x.sigma[f] for f in x.boundary.get(cell, ())}
        if mapped != set(x.boundary.get(x.sigma[cell], ())):
            report.append(f"sigma does not commute with boundary at {cell!r}")
    return report


def _require_valid(x: GCWComplex):
    report = validate_complex(x)
    if report:
        raise InvalidComplex("; ".join(report))


# ---------------------------------------------------------------------------
# F2 linear algebra: a map is a list of column bitmasks

def gf2_rank(columns) -> int:
    pivots = {}
    rank = 0
    for v in columns:
        while v:
            top = v.bit_length() - 1
            if top in pivots:
                v ^= pivots[top]
            else:
                pivots[top] = v
                rank += 1
                break
    return rank


def _apply(columns, vector: int) -> int:
    out = 0
    j = 0
    while vector:
        if vector & 1:
            out ^= columns[j]
        vector >>= 1
        j += 1
    return out


class _ChainData:
    """Cached bases and differentials of one complex."""

    def __init__(self, x: GCWComplex):
        _require_valid(x)
        self.top = x.top_dimension
        self.basis = {q: x.cells_of_dim(q) for q in range(self.top + 1)}
        index = {q: {c: i for i, c in enumerate(self.basis[q])}
                 for q in self.basis}
        self.dims = {q: len(self.basis[q]) for q in self.basis}
        # boundary_q : C_q -> C_{q-1}
        self.boundary = {}
        for q in range(1, self.top + 1):
            cols = []
            for cell in self.basis[q]:
                bits = 0
                for f in x.boundary.get(cell, ()):
                    bits |= 1 << index[q - 1][f]
                cols.append(bits)
            self.boundary[q] = cols
        # one_plus_sigma_q : C_q -> C_q
        self.one_plus_sigma = {}
        for q in range(self.top + 1):
            cols = []
            for i, cell in enumerate(self.basis[q]):
                cols.append((1 << i) ^ (1 << index[q][x.sigma[cell]]))
            self.one_plus_sigma[q] = cols

    def dim(self, q: int) -> int:
        return self.dims.get(q, 0)


def _block_ranges(data: _ChainData, n: int):
    """(q, offset) pairs for the degree-n piece, plus its total dimension."""
    offsets = []
    total = 0
    for q in range(max(0, n), data.top + 1):
        offsets.append((q, total))
        total += data.dim(q)
    return offsets, total


def _total_boundary(data: _ChainData, n: int):
    """Columns of the total differential from degree n to degree n - 1."""
    src, _ = _block_ranges(data, n)
    dst, dst_dim = _block_ranges(data, n - 1)
    dst_offset = dict(dst)
    columns = []
    for q, _src_off in src:
        for j in range(data.dim(q)):
            col = 0
            if q >= 1 and (q - 1) in dst_offset:
                col ^= data.boundary[q][j] << dst_offset[q - 1]
            if q in dst_offset:
                col ^= data.one_plus_sigma[q][j] << dst_offset[q]
            columns.append(col)
    return columns, dst_dim


def equivariant_homology(x: GCWComplex, n: int) -> int:
    """dim over F2 of the n-th equivariant Borel-Moore homology group."""
    data = _ChainData(x)
    return _homology_dim(data, n)


def _homology_dim(data: _ChainData, n: int) -> int:
    _, piece_dim = _block_ranges(data, n)
    if piece_dim == 0:
        return 0
    out_cols, _ = _total_boundary(data, n)
    in_cols, _ = _total_boundary(data, n + 1)
    # the total differential squares to zero
    for col in in_cols:
        if _apply(out_cols, col):
            raise InvalidComplex(
                f"total differential fails to square to zero in degree {n + 1}")
    return piece_dim - gf2_rank(out_cols) - gf2_rank(in_cols)


def plain_homology(x: GCWComplex, n: int) -> int:
    """Ordinary cellular F2 homology dimension (the involution is ignored)."""
    data = _ChainData(x)
    return _plain_dim(data, n)


def _plain_dim(data: _ChainData, n: int) -> int:
    if n < 0 or n > data.top:
        return 0
    rank_out = gf2_rank(data.boundary[n]) if n >= 1 else 0
    rank_in = gf2_rank(data.boundary[n + 1]) if n + 1 <= data.top else 0
    return data.dim(n) - rank_out - rank_in


def equivariant_cohomology(x: GCWComplex, n: int) -> int:
    """dim over F2 of the n-th equivariant cohomology group.

    Built from the transposed differentials; valid because the accepted
    complexes are compact.
    """
    data = _ChainData(x)
    transposed_boundary = {
        q: _transpose(data.boundary[q], data.dim(q - 1))
        for q in data.boundary
    }

    def piece(m: int):
        offsets = []
        total = 0
        if m >= 0:
            for q in range(0, min(m, data.top) + 1):
                offsets.append((q, total))
                total += data.dim(q)
        return dict(offsets), total

    def differential(m: int):
        src, _ = piece(m)
        dst, _ = piece(m + 1)
        columns = []
        for q in sorted(src):
            for j in range(data.dim(q)):
                col = 0
                if (q + 1) in dst:
                    col ^= transposed_boundary[q + 1][j] << dst[q + 1]
                if q in dst:
                    col ^= data.one_plus_sigma[q][j] << dst[q]
                columns.append(col)
        return columns

    _, piece_dim = piece(n)
    if piece_dim == 0:
        return 0
    return piece_dim - gf2_rank(differential(n)) - gf2_rank(differential(n - 1))


def _transpose(columns, rows: int):
    out = [0] * rows
    for j, col in enumerate(columns):
        i = 0
        while col:
            if col & 1:
                out[i] |= 1 << j
            col >>= 1
            i += 1
    return out


# ---------------------------------------------------------------------------
# derived operations

@dataclass(frozen=True)
class HomologyResult:
    """A homology table: degree -> dimension, plus the stabilized value of
    every degree below the computed window when it is known."""

    group_dims: dict
    stable_negative_dim: int | None = field(default=None)


def homology_table(x: GCWComplex, n_min: int, n_max: int) -> HomologyResult:
    data = _ChainData(x)
    dims = {n: _homology_dim(data, n) for n in range(n_max, n_min - 1, -1)}
    stable = None
    if n_min <= -2 and dims[n_min] == dims[n_min + 1]:
        stable = dims[n_min]
    return HomologyResult(dims, stable)


def fixed_subcomplex(x: GCWComplex) -> GCWComplex:
    """Subcomplex of involution-fixed cells, with the identity involution."""
    _require_valid(x)
    if not x.fixed_is_geometric:
        raise AssertionMissing(
            "fixed_subcomplex requires the fixed_is_geometric assertion")
    fixed = {c for c, image in x.sigma.items() if c == image}
    for cell in fixed:
        stray = set(x.boundary.get(cell, ())) - fixed
        if stray:
            raise FixedSetNotSubcomplex(
                f"boundary of fixed cell {cell!r} leaves the fixed set: "
                f"{sorted(stray)}")
    return GCWComplex({c: x.cells[c] for c in fixed},
                      boundary={c: x.boundary[c] for c in fixed
                                if c in x.boundary},
                      sigma={},
                      fixed_is_geometric=True)


def equivariant_betti_series(x: GCWComplex, window: int = DEFAULT_WINDOW) -> VirtualClass:
    """The equivariant Poincare series of a compact nonsingular complex, in
    normal form P(u) + c*u/(u-1).

    Dimensions are read from the top dimension down to -window; the bottom
    two must agree (they always do for valid complexes, where the negative
    part is exactly the homology of the fixed set).
    """
    if window < 1:
        raise ValueError("window must be positive")
    data = _ChainData(x)
    top = max(data.top, 0)
    dims = {n: _homology_dim(data, n) for n in range(top, -window - 1, -1)}
    if dims[-window] != dims[-window + 1]:
        raise TailNotStabilized(
            f"dims at {-window} and {-window + 1} differ: "
            f"{dims[-window]} != {dims[-window + 1]}")
    tail = dims[-window]
    poly = IntPoly({n: dims[n] for n in range(1, top + 1)}) \
        + IntPoly({0: dims[0] - tail})
    return VirtualClass.from_parts(poly, tail)


def product_with_trivial(x: GCWComplex, y: GCWComplex) -> GCWComplex:
    """Product complex of x (any involution) with y (identity involution).

    Cells are pairs, dimensions add, the boundary is the Leibniz sum mod 2
    and the involution acts on the first factor.
    """
    _require_valid(x)
    _require_valid(y)
    if not y.is_identity_involution():
        raise InvalidComplex("second factor must carry the identity involution")

    def pair_id(a: str, b: str) -> str:
        return f"{a}|{b}"

    # a list, so the constructor can reject pair-id collisions
    cells = [(pair_id(a, b), da + db)
             for a, da in x.cells.items() for b, db in y.cells.items()]
    boundary = {}
    for a in x.cells:
        for b in y.cells:
            faces = [pair_id(fa, b) for fa in x.boundary.get(a, ())]
            faces += [pair_id(a, fb) for fb in y.boundary.get(b, ())]
            if faces:
                boundary[pair_id(a, b)] = faces
    sigma = {pair_id(a, b): pair_id(x.sigma[a], b)
             for a in x.cells for b in y.cells}
    return GCWComplex(cells, boundary, sigma,
                      fixed_is_geometric=x.fixed_is_geometric
                      and y.fixed_is_geometric)
