"""Post-construction analysis of rectangular designs.

Resolvability certificates, self-duality, block (tactical/global)
decompositions, row-intersection identities, the canonical efficiency
factor, perfect-square feasibility checks, and E-optimality classes.
All arithmetic is exact; floats appear only in rendered output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import binmat, design
from .binmat import BinaryMatrix, IntMatrix
from .design import Design, DesignTag, RDParams, Spectrum


# -- alpha-resolvability ------------------------------------------------------

@dataclass(frozen=True)
class ResolutionCertificate:
    """A verified partition of the blocks into equireplicate classes.

    Every treatment appears exactly alpha times inside each of the
    class_count classes of class_size blocks.  The affine pair (q1, q2)
    is present when all within-class block intersections equal q1 and
    all cross-class intersections equal q2.
    """

    alpha: int
    class_count: int
    class_size: int
    classes: tuple[tuple[int, ...], ...]
    affine: Optional[tuple[int, int]]


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _affine_pair(mat: BinaryMatrix, classes) -> Optional[tuple[int, int]]:
    inter = (mat.data.T @ mat.data).astype(np.int64)
    cls_of = {}
    for ci, cols in enumerate(classes):
        for c in cols:
            cls_of[c] = ci
    q1 = q2 = None
    b = mat.cols
    for i in range(b):
        for j in range(i + 1, b):
            val = int(inter[i, j])
            if cls_of[i] == cls_of[j]:
                if q1 is None:
                    q1 = val
                elif val != q1:
                    return None
            else:
                if q2 is None:
                    q2 = val
                elif val != q2:
                    return None
    if q1 is None or q2 is None:
        return None
    return q1, q2


def alpha_resolvability(d: Design) -> Optional[ResolutionCertificate]:
    """Smallest-alpha contiguous resolution of the block columns, if any.

    Only contiguous column partitions are tried; every built-in
    construction emits its resolution classes contiguously, so a miss here
    means "none found (contiguous)", not proven non-resolvability.
    """
    p = d.params
    mat = d.incidence
    for alpha in _divisors(p.r):
        t = p.r // alpha
        if t < 2:
            continue  # a single class is the whole design, not a resolution
        beta_num = p.v * alpha
        if beta_num % p.k:
            continue
        beta = beta_num // p.k
        if t * beta != p.b:
            continue
        classes = tuple(
            tuple(range(c * beta, (c + 1) * beta)) for c in range(t)
        )
        ok = True
        for cols in classes:
            sums = mat.data[:, list(cols)].sum(axis=1)
            if not (sums == alpha).all():
                ok = False
                break
        if ok:
            return ResolutionCertificate(
                alpha=alpha,
                class_count=t,
                class_size=beta,
                classes=classes,
                affine=_affine_pair(mat, classes),
            )
    return None


# -- self-duality and block decompositions -----------------------------------

@dataclass(frozen=True)
class CheckReport:
    ok: bool
    detail: str = ""


def self_dual_check(d: Design) -> CheckReport:
    """Does N^T N carry the same association pattern as N N^T?"""
    p = d.params
    if p.v != p.b:
        return CheckReport(False, f"not symmetric: v={p.v}, b={p.b}")
    if p.r != p.k:
        return CheckReport(False, f"not symmetric: r={p.r}, k={p.k}")
    dual_gram = binmat.matmul(binmat.transpose(d.incidence), d.incidence)
    want = design.expected_gram(p)
    diff = np.argwhere(dual_gram.data != want.data)
    if len(diff):
        i, j = (int(x) for x in diff[0])
        return CheckReport(
            False,
            f"N^T N deviates at ({i + 1},{j + 1}): "
            f"{int(dual_gram.data[i, j])} expected {int(want.data[i, j])}",
        )
    return CheckReport(True)


def _sbibd_block_ok(block: np.ndarray) -> bool:
    """Is this square 0/1 block an SBIBD incidence matrix (or all-zero)?"""
    if not block.any():
        return True
    n0 = block.shape[0]
    g = block @ block.T
    k0 = g[0, 0]
    if not (np.diag(g) == k0).all():
        return False
    off = g[~np.eye(n0, dtype=bool)]
    if len(off) and not (off == off[0]).all():
        return False
    rs = block.sum(axis=1)
    cs = block.sum(axis=0)
    return (rs == k0).all() and (cs == k0).all()


def global_decomposition_check(d: Design, block_order: int) -> CheckReport:
    """Partition N into square blocks of the given order and verify the
    global-decomposability conditions: every block is an SBIBD incidence
    matrix, diagonal block-row products sum to rI + lambda1*I^c, and
    off-diagonal ones to lambda2*I + lambda3*I^c."""
    p = d.params
    if p.v != p.b:
        return CheckReport(False, f"not symmetric: v={p.v}, b={p.b}")
    if p.v % block_order:
        return CheckReport(False, f"block order {block_order} does not divide v={p.v}")
    g = p.v // block_order
    a = d.incidence.data
    blocks = [
        [a[i * block_order:(i + 1) * block_order,
           j * block_order:(j + 1) * block_order] for j in range(g)]
        for i in range(g)
    ]
    for i in range(g):
        for j in range(g):
            if not _sbibd_block_ok(blocks[i][j]):
                return CheckReport(
                    False, f"block ({i + 1},{j + 1}) is not an SBIBD incidence matrix"
                )
    n0 = block_order
    eye = np.eye(n0, dtype=np.int64)
    diag_want = p.r * eye + p.lambda1 * (1 - eye)
    off_want = p.lambda2 * eye + p.lambda3 * (1 - eye)
    for i in range(g):
        for j in range(g):
            total = sum(blocks[i][t] @ blocks[j][t].T for t in range(g))
            want = diag_want if i == j else off_want
            if (total != want).any():
                which = "i" if i == j else "ii"
                return CheckReport(
                    False,
                    f"condition ({which}) fails on block rows ({i + 1},{j + 1})",
                )
    return CheckReport(True)


@dataclass(frozen=True)
class TacticalDecomposition:
    row_sizes: tuple[int, ...]
    col_sizes: tuple[int, ...]
    r_table: tuple[tuple[Optional[int], ...], ...]
    k_table: tuple[tuple[Optional[int], ...], ...]
    row_tactical: bool
    col_tactical: bool
    std_n: Optional[int]


def tactical_decomposition(d: Design, row_sizes: Sequence[int],
                           col_sizes: Sequence[int]) -> TacticalDecomposition:
    """Row/column sum tables over a contiguous block partition of N.

    r_table[i][j] is the common row sum of block N_ij, or None when the
    rows of that block disagree (and likewise k_table for column sums).
    std_n is the common block order when the decomposition is uniform
    tactical with all blocks square of one size.
    """
    if sum(row_sizes) != d.incidence.rows or any(s <= 0 for s in row_sizes):
        raise ValueError(f"row sizes {list(row_sizes)} do not partition {d.incidence.rows} rows")
    if sum(col_sizes) != d.incidence.cols or any(s <= 0 for s in col_sizes):
        raise ValueError(f"column sizes {list(col_sizes)} do not partition {d.incidence.cols} columns")
    a = d.incidence.data
    rstarts = np.cumsum([0, *row_sizes])
    cstarts = np.cumsum([0, *col_sizes])
    r_tab, k_tab = [], []
    row_ok = col_ok = True
    for i in range(len(row_sizes)):
        r_row, k_row = [], []
        for j in range(len(col_sizes)):
            blk = a[rstarts[i]:rstarts[i + 1], cstarts[j]:cstarts[j + 1]]
            rs = blk.sum(axis=1)
            cs = blk.sum(axis=0)
            if (rs == rs[0]).all():
                r_row.append(int(rs[0]))
            else:
                r_row.append(None)
                row_ok = False
            if (cs == cs[0]).all():
                k_row.append(int(cs[0]))
            else:
                k_row.append(None)
                col_ok = False
        r_tab.append(tuple(r_row))
        k_tab.append(tuple(k_row))
    std_n = None
    sizes = set(row_sizes) | set(col_sizes)
    if row_ok and col_ok and len(sizes) == 1:
        std_n = row_sizes[0]
    return TacticalDecomposition(
        tuple(row_sizes), tuple(col_sizes), tuple(r_tab), tuple(k_tab),
        row_ok, col_ok, std_n,
    )


# -- row-intersection identities ---------------------------------------------

@dataclass(frozen=True)
class RowIntersectionMatrix:
    entries: tuple[tuple[int, ...], ...]
    row_sum_ok: bool       # every row sums to n*r
    square_sum_ok: bool    # every row of squares sums to n*r + n*(n-1)*lambda1
    uniform_value: Optional[Fraction]  # k/m when the design is SR(II)


def row_intersection_check(d: Design) -> RowIntersectionMatrix:
    """The m x b table of array-row / block intersections, with identity
    checks; semi-regular (row direction) designs must be exactly uniform."""
    p = d.params
    a = d.incidence.data
    m_mat = a.reshape(p.m, p.n, p.b).sum(axis=1)
    row_sums = m_mat.sum(axis=1)
    sq_sums = (m_mat ** 2).sum(axis=1)
    row_ok = bool((row_sums == p.n * p.r).all())
    sq_ok = bool((sq_sums == p.n * p.r + p.n * (p.n - 1) * p.lambda1).all())
    uniform = None
    cls = design.classify(p)
    if cls.tag is DesignTag.SEMI_REGULAR_II:
        uniform = Fraction(p.k, p.m)
        assert (m_mat * p.m == p.k).all(), (
            "semi-regular design with a non-uniform row-intersection matrix"
        )
    return RowIntersectionMatrix(
        entries=tuple(tuple(int(x) for x in row) for row in m_mat),
        row_sum_ok=row_ok,
        square_sum_ok=sq_ok,
        uniform_value=uniform,
    )


# -- efficiency ---------------------------------------------------------------

@dataclass(frozen=True)
class EfficiencyReport:
    efficiency: Fraction
    c_eigenvalues: tuple[tuple[Fraction, int], ...]
    connected: bool

    def rendered(self, places: int = 4) -> str:
        q = Decimal(1).scaleb(-places)
        dec = Decimal(self.efficiency.numerator) / Decimal(self.efficiency.denominator)
        return str(dec.quantize(q, rounding=ROUND_HALF_UP))


class DisconnectedDesignError(ValueError):
    """All-contrast estimation is impossible: a C-matrix eigenvalue is zero."""


def efficiency(p: RDParams) -> EfficiencyReport:
    """Canonical efficiency factor: the harmonic mean of the nontrivial
    C-matrix eigenvalue ratios e_i = 1 - theta_i/(rk)."""
    s = design.spectrum(p)
    rk = p.r * p.k
    pairs = [(s.theta1, s.mult1), (s.theta2, s.mult2), (s.theta3, s.mult3)]
    c_eigs = tuple(
        (Fraction(rk - th, p.k), mu) for th, mu in pairs if mu > 0
    )
    if any(th >= rk for th, mu in pairs if mu > 0):
        raise DisconnectedDesignError(
            f"theta reaches rk = {rk}: the design is disconnected"
        )
    total = sum(Fraction(mu * rk, rk - th) for th, mu in pairs if mu > 0)
    e = Fraction(p.v - 1) / total
    assert 0 < e <= 1
    return EfficiencyReport(efficiency=e, c_eigenvalues=c_eigs, connected=True)


def efficiency_two_decimals(p: RDParams) -> str:
    return efficiency(p).rendered(places=2)


# -- perfect-square feasibility ----------------------------------------------

def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def square_condition(p: RDParams) -> tuple[str, bool]:
    """The parity-dependent perfect-square necessary condition for a
    symmetric regular design, as (label, holds).

    m even, n odd: theta2 square; m odd, n even: theta1 square; both even:
    theta1*theta2*theta3 square; both odd: the full multiplicity product
    theta1^(n-1) * theta2^(m-1) * theta3^((m-1)(n-1)) square.
    """
    s = design.spectrum(p)
    if p.m % 2 == 0 and p.n % 2 == 1:
        return "theta2 square", _is_square(s.theta2)
    if p.m % 2 == 1 and p.n % 2 == 0:
        return "theta1 square", _is_square(s.theta1)
    if p.m % 2 == 0 and p.n % 2 == 0:
        return "theta1*theta2*theta3 square", _is_square(s.theta1 * s.theta2 * s.theta3)
    prod = (s.theta1 ** s.mult1) * (s.theta2 ** s.mult2) * (s.theta3 ** s.mult3)
    return "full eigenvalue product square", _is_square(prod)


@dataclass(frozen=True)
class SymmetricRegularReport:
    symmetric: bool
    regular: bool
    square_label: Optional[str]
    square_holds: Optional[bool]
    fisher_ok: Optional[bool]
    resolvable_possible: Optional[bool]


def symmetric_regular_checks(p: RDParams, resolvable: bool = False) -> SymmetricRegularReport:
    """Necessary-condition battery for regular designs.

    Symmetric regular: exact perfect-square test by parity case.  Regular
    resolvable: the bound b >= v + r - 1.  A symmetric regular design
    cannot be resolvable unless r = 1.
    """
    s = design.spectrum(p)
    regular = s.theta1 > 0 and s.theta2 > 0 and s.theta3 > 0
    symmetric = p.v == p.b and p.r == p.k
    label = holds = fisher = res_ok = None
    if regular and symmetric:
        label, holds = square_condition(p)
    if regular and resolvable:
        fisher = p.b >= p.v + p.r - 1
        if symmetric:
            res_ok = p.r == 1
    return SymmetricRegularReport(symmetric, regular, label, holds, fisher, res_ok)


# -- E-optimality (two-row arrays) -------------------------------------------

def e_optimal_class(p: RDParams) -> Optional[str]:
    """'Type1', 'Type2' or None for a two-row-array design.

    Type1: lambda1 = lambda2 = lambda3 - 1 with v > 12.
    Type2: lambda1 + 1 = lambda2 - 1 = lambda3 with v >= 10.
    """
    if p.m != 2:
        raise ValueError(f"E-optimality classes are defined for m = 2, got m={p.m}")
    if p.lambda1 == p.lambda2 == p.lambda3 - 1 and p.v > 12:
        return "Type1"
    if p.lambda1 + 1 == p.lambda2 - 1 == p.lambda3 and p.v >= 10:
        return "Type2"
    return None


# -- report rendering ---------------------------------------------------------

def render_report(fields: Sequence[tuple[str, object]]) -> str:
    """Machine-diffable FIELD<TAB>VALUE lines."""
    return "".join(f"{k}\t{v}\n" for k, v in fields)


def design_report(d: Design) -> str:
    """The standard analysis block printed by the command-line tools."""
    p = d.params
    s = design.spectrum(p)
    cls = design.classify(p)
    fields: list[tuple[str, object]] = [
        ("V", p.v), ("B", p.b), ("R", p.r), ("K", p.k),
        ("LAMBDA1", p.lambda1), ("LAMBDA2", p.lambda2), ("LAMBDA3", p.lambda3),
        ("M", p.m), ("N", p.n),
        ("THETA1", s.theta1), ("THETA2", s.theta2), ("THETA3", s.theta3),
        ("CLASS", cls.tag.value),
        ("NATURE", cls.nature),
        ("REDUCTION", cls.reduction.value),
    ]
    try:
        fields.append(("EFFICIENCY", efficiency(p).rendered(places=4)))
    except DisconnectedDesignError:
        fields.append(("EFFICIENCY", "disconnected"))
    cert = alpha_resolvability(d)
    if cert is None:
        fields.append(("RESOLVABLE", "none found (contiguous)"))
    else:
        fields.append(("RESOLVABLE", f"alpha={cert.alpha}"))
        if cert.affine is not None:
            fields.append(("AFFINE", f"q1={cert.affine[0]} q2={cert.affine[1]}"))
    fields.append(("SELF_DUAL", "yes" if self_dual_check(d).ok else "no"))
    return render_report(fields)
