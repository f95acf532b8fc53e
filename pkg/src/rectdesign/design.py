"""Rectangular-design data model.

Parameter tuples, the concurrence-structure test, closed-form eigenvalues,
the five-way classification with subdesign reductions, and parameter
recovery straight from an incidence matrix (the oracle every construction
is checked against).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, TextIO

from . import binmat
from .binmat import BinaryMatrix, IntMatrix


class InadmissibleParamsError(ValueError):
    """Parameter tuple violates the rectangular-design identities."""


class NonexistentDesignError(ValueError):
    """A closed-form eigenvalue is negative: no such design exists."""


class NotAnRDError(ValueError):
    """An incidence matrix fails the rectangular-design structure test."""


class DesignParseError(ValueError):
    """A design descriptor file does not conform to the text format."""


@dataclass(frozen=True)
class RDParams:
    """(v, b, r, k, lambda1, lambda2, lambda3, m, n) with v = m*n."""

    v: int
    b: int
    r: int
    k: int
    lambda1: int
    lambda2: int
    lambda3: int
    m: int
    n: int

    def lambdas(self) -> tuple[int, int, int]:
        return (self.lambda1, self.lambda2, self.lambda3)


@dataclass(frozen=True)
class Spectrum:
    """Nontrivial eigenvalues of NN^T with their multiplicities.

    theta0 = r*k always appears once; theta1, theta2, theta3 appear with
    multiplicities n-1, m-1 and (m-1)(n-1).
    """

    theta0: int
    theta1: int
    theta2: int
    theta3: int
    mult1: int
    mult2: int
    mult3: int

    def as_multiset(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for theta, mult in [
            (self.theta0, 1),
            (self.theta1, self.mult1),
            (self.theta2, self.mult2),
            (self.theta3, self.mult3),
        ]:
            out[theta] = out.get(theta, 0) + mult
        return out


class DesignTag(enum.Enum):
    REGULAR = "Regular"
    LATIN_REGULAR = "LatinRegular"
    SEMI_REGULAR_I = "SemiRegularI"
    SEMI_REGULAR_II = "SemiRegularII"
    LATIN_SEMI_REGULAR = "LatinSemiRegular"
    SINGULAR = "Singular"


class Reduction(enum.Enum):
    NONE = "None"
    REGULAR_GDD = "RegularGDD"
    SEMI_REGULAR_GDD = "SemiRegularGDD"
    SINGULAR_GDD = "SingularGDD"
    L2_TYPE = "L2Type"
    BIBD = "BIBD"
    COMPLETE_DESIGN = "CompleteDesign"


#: short codes used in the bundled tables and the candidate listings
NATURE_CODE = {
    DesignTag.REGULAR: "R",
    DesignTag.LATIN_REGULAR: "LR",
    DesignTag.SEMI_REGULAR_I: "SR",
    DesignTag.SEMI_REGULAR_II: "SR",
    DesignTag.LATIN_SEMI_REGULAR: "LSR",
    DesignTag.SINGULAR: "S",
}


@dataclass(frozen=True)
class DesignClass:
    tag: DesignTag
    reduction: Reduction

    @property
    def nature(self) -> str:
        return NATURE_CODE[self.tag]


@dataclass(frozen=True)
class Design:
    """A verified incidence matrix together with its parameters.

    Treatment t (1-based, matrix row t) sits in array row ceil(t/n) and
    array column ((t-1) mod n) + 1.
    """

    incidence: BinaryMatrix
    params: RDParams


def check_params(p: RDParams) -> list[str]:
    """All violated admissibility invariants; empty list means admissible."""
    bad = []
    fields = [p.v, p.b, p.r, p.k, p.lambda1, p.lambda2, p.lambda3, p.m, p.n]
    if any(x < 0 for x in fields):
        bad.append("negative field")
    if p.m < 2 or p.n < 2:
        bad.append(f"degenerate array {p.m}x{p.n}: need m >= 2 and n >= 2")
    if p.v != p.m * p.n:
        bad.append(f"v = {p.v} != m*n = {p.m * p.n}")
    if p.r < 1:
        bad.append("replication r must be >= 1")
    if not (1 <= p.k <= p.v):
        bad.append(f"block size k = {p.k} outside [1, v]")
    if p.b * p.k != p.v * p.r:
        bad.append(f"bk = {p.b * p.k} != vr = {p.v * p.r}")
    lhs = (
        (p.n - 1) * p.lambda1
        + (p.m - 1) * p.lambda2
        + (p.n - 1) * (p.m - 1) * p.lambda3
    )
    if lhs != p.r * (p.k - 1):
        bad.append(f"concurrence identity: {lhs} != r(k-1) = {p.r * (p.k - 1)}")
    return bad


def spectrum(p: RDParams) -> Spectrum:
    bad = check_params(p)
    if bad:
        raise InadmissibleParamsError("; ".join(bad))
    t1 = p.r - p.lambda1 + (p.m - 1) * (p.lambda2 - p.lambda3)
    t2 = p.r - p.lambda2 + (p.n - 1) * (p.lambda1 - p.lambda3)
    t3 = p.r - p.lambda1 - p.lambda2 + p.lambda3
    return Spectrum(
        theta0=p.r * p.k,
        theta1=t1,
        theta2=t2,
        theta3=t3,
        mult1=p.n - 1,
        mult2=p.m - 1,
        mult3=(p.m - 1) * (p.n - 1),
    )


def classify(p: RDParams) -> DesignClass:
    """Five-way classification with subdesign reduction.

    Raises NonexistentDesignError when a closed-form eigenvalue is
    negative (no 0/1 incidence matrix can realize the parameters).
    """
    s = spectrum(p)
    t1, t2, t3 = s.theta1, s.theta2, s.theta3
    if t1 < 0 or t2 < 0 or t3 < 0:
        raise NonexistentDesignError(
            f"negative eigenvalue: theta = ({t1}, {t2}, {t3})"
        )
    if t3 == 0:
        if t1 == 0 and t2 == 0:
            return DesignClass(DesignTag.SINGULAR, Reduction.COMPLETE_DESIGN)
        if t1 == 0 or t2 == 0:
            return DesignClass(DesignTag.SINGULAR, Reduction.SINGULAR_GDD)
        # theta1, theta2 > 0: a singular RD that is not a GDD
        return DesignClass(DesignTag.SINGULAR, Reduction.NONE)
    if t1 == 0 and t2 == 0:
        red = Reduction.L2_TYPE if p.m == p.n else Reduction.NONE
        return DesignClass(DesignTag.LATIN_SEMI_REGULAR, red)
    if t1 == 0:
        red = Reduction.SEMI_REGULAR_GDD if t2 == t3 else Reduction.NONE
        return DesignClass(DesignTag.SEMI_REGULAR_I, red)
    if t2 == 0:
        red = Reduction.SEMI_REGULAR_GDD if t1 == t3 else Reduction.NONE
        return DesignClass(DesignTag.SEMI_REGULAR_II, red)
    # all three positive
    tag = DesignTag.LATIN_REGULAR if t1 == t2 else DesignTag.REGULAR
    if t1 == t2 == t3:
        red = Reduction.BIBD
    elif t1 == t3 or t2 == t3:
        red = Reduction.REGULAR_GDD
    elif t1 == t2 and p.m == p.n and p.lambda1 == p.lambda2:
        red = Reduction.L2_TYPE
    else:
        red = Reduction.NONE
    return DesignClass(tag, red)


def associate_class(t1: int, t2: int, m: int, n: int) -> int:
    """1, 2 or 3: same array row, same array column, or neither."""
    v = m * n
    if not (1 <= t1 <= v and 1 <= t2 <= v):
        raise ValueError(f"treatments must lie in 1..{v}")
    if t1 == t2:
        raise ValueError("associate class undefined for equal treatments")
    r1, c1 = divmod(t1 - 1, n)
    r2, c2 = divmod(t2 - 1, n)
    if r1 == r2:
        return 1
    if c1 == c2:
        return 2
    return 3


def expected_gram(p: RDParams) -> IntMatrix:
    """r(Im x In) + l1(Im x In^c) + l2(Im^c x In) + l3(Im^c x In^c)."""
    im = binmat.identity(p.m)
    imc = binmat.complement(im)
    inn = binmat.identity(p.n)
    innc = binmat.complement(inn)
    total = (
        p.r * binmat.kronecker(im, inn).data
        + p.lambda1 * binmat.kronecker(im, innc).data
        + p.lambda2 * binmat.kronecker(imc, inn).data
        + p.lambda3 * binmat.kronecker(imc, innc).data
    )
    return IntMatrix(total)


def verify_design(d: Design) -> list[str]:
    """Row sums, column sums and the full concurrence structure; every
    deviation is reported with its position."""
    p = d.params
    bad = check_params(p)
    nmat = d.incidence
    if nmat.rows != p.v or nmat.cols != p.b:
        bad.append(
            f"incidence is {nmat.rows}x{nmat.cols}, expected {p.v}x{p.b}"
        )
        return bad
    for i, s in enumerate(binmat.row_sums(nmat)):
        if s != p.r:
            bad.append(f"row {i + 1} sum {s} != r = {p.r}")
    for j, s in enumerate(binmat.col_sums(nmat)):
        if s != p.k:
            bad.append(f"column {j + 1} sum {s} != k = {p.k}")
    g = binmat.gram(nmat)
    want = expected_gram(p)
    if g != want:
        diff = (g.data != want.data)
        for i, j in zip(*diff.nonzero()):
            bad.append(
                f"NN^T[{i + 1},{j + 1}] = {g.data[i, j]}, expected {want.data[i, j]}"
            )
            if len(bad) >= 50:
                bad.append("... further deviations suppressed")
                return bad
    return bad


def params_from_matrix(incidence: BinaryMatrix, m: int, n: int) -> RDParams:
    """Recover (r, k, lambda1..3) from an incidence matrix; the brute-force
    oracle behind every construction."""
    if m < 2 or n < 2:
        raise NotAnRDError(f"degenerate array {m}x{n}")
    v = m * n
    if incidence.rows != v:
        raise NotAnRDError(f"matrix has {incidence.rows} rows, expected v = {v}")
    rsums = binmat.row_sums(incidence)
    if len(set(rsums)) != 1:
        raise NotAnRDError(f"not equireplicate: row sums {sorted(set(rsums))}")
    csums = binmat.col_sums(incidence)
    if len(set(csums)) != 1:
        raise NotAnRDError(f"not proper: column sums {sorted(set(csums))}")
    r, k = rsums[0], csums[0]
    g = binmat.gram(incidence).data
    lam: dict[int, Optional[int]] = {1: None, 2: None, 3: None}
    for t1 in range(1, v + 1):
        for t2 in range(t1 + 1, v + 1):
            cls = associate_class(t1, t2, m, n)
            val = int(g[t1 - 1, t2 - 1])
            if lam[cls] is None:
                lam[cls] = val
            elif lam[cls] != val:
                raise NotAnRDError(
                    f"associate class {cls} not constant: treatments "
                    f"({t1},{t2}) concur {val}, expected {lam[cls]}"
                )
    # m, n >= 2 guarantees every class is inhabited
    p = RDParams(v, incidence.cols, r, k, lam[1], lam[2], lam[3], m, n)
    bad = check_params(p)
    if bad:
        raise NotAnRDError("; ".join(bad))
    return p


def design_from_matrix(incidence: BinaryMatrix, m: int, n: int) -> Design:
    return Design(incidence, params_from_matrix(incidence, m, n))


def complement_design(d: Design) -> Design:
    p = d.params
    q = RDParams(
        v=p.v,
        b=p.b,
        r=p.b - p.r,
        k=p.v - p.k,
        lambda1=p.b - 2 * p.r + p.lambda1,
        lambda2=p.b - 2 * p.r + p.lambda2,
        lambda3=p.b - 2 * p.r + p.lambda3,
        m=p.m,
        n=p.n,
    )
    out = Design(binmat.complement(d.incidence), q)
    bad = verify_design(out)
    assert not bad, f"complement of a verified design must verify: {bad[:3]}"
    return out


def transpose_array(d: Design) -> Design:
    """Relabel treatments by transposing the m x n array.

    Swaps (m, n) and (lambda1, lambda2); the incidence rows are permuted
    accordingly, so the same design can be presented with either factor
    playing the row role.
    """
    p = d.params
    perm = []
    for j in range(p.n):  # new array rows, one per old column
        for i in range(p.m):
            perm.append(i * p.n + j)
    q = RDParams(p.v, p.b, p.r, p.k, p.lambda2, p.lambda1, p.lambda3, p.n, p.m)
    out = Design(binmat.permute_rows(d.incidence, perm), q)
    bad = verify_design(out)
    assert not bad, f"array transpose must preserve verification: {bad[:3]}"
    return out


def dual_params(p: RDParams) -> tuple[int, int, int, int]:
    """(v', b', r', k') of the dual design."""
    return (p.b, p.v, p.k, p.r)


def is_self_dual_compatible(p: RDParams) -> bool:
    return p.v == p.b and p.r == p.k


def spectrum_matches_matrix(d: Design) -> bool:
    """Numeric eigenvalues of NN^T match the closed-form multiset.

    The structural check in verify_design already implies this exactly;
    the numeric route is kept as an independent cross-check.
    """
    import numpy as np

    s = spectrum(d.params)
    eig = np.linalg.eigvalsh(binmat.gram(d.incidence).data.astype(float))
    got: dict[int, int] = {}
    for x in eig:
        key = int(round(x))
        if abs(x - key) > 1e-6:
            return False
        got[key] = got.get(key, 0) + 1
    return got == s.as_multiset()


# -- design descriptor text format -------------------------------------------

def write_design(d: Design, fh: TextIO) -> None:
    p = d.params
    fh.write(
        f"RD {p.v} {p.b} {p.r} {p.k} {p.lambda1} {p.lambda2} {p.lambda3} {p.m} {p.n}\n"
    )
    binmat.write_matrix(d.incidence, fh)


def read_design(fh: TextIO) -> Design:
    header = fh.readline().split()
    if len(header) != 10 or header[0] != "RD":
        raise DesignParseError(f"bad design header: {' '.join(header)!r}")
    try:
        nums = [int(x) for x in header[1:]]
    except ValueError:
        raise DesignParseError(f"bad design header: {' '.join(header)!r}") from None
    p = RDParams(*nums)
    try:
        incidence = binmat.read_matrix(fh)
    except binmat.MatrixParseError as exc:
        raise DesignParseError(str(exc)) from None
    if incidence.rows != p.v or incidence.cols != p.b:
        raise DesignParseError(
            f"matrix is {incidence.rows}x{incidence.cols}, header claims {p.v}x{p.b}"
        )
    return Design(incidence, p)
