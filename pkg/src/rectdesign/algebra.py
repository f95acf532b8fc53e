"""Algebraic raw materials: finite fields, skew-Hadamard designs, MOLS,
strongly regular graphs, and difference schemes.

Element enumeration is fixed once and for all so every generated matrix is
reproducible: prime fields use the natural order 0..p-1, extension fields
the lexicographic order of coefficient vectors over the polynomial basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence, TextIO

from . import binmat
from .binmat import BinaryMatrix


class NotPrimePowerError(ValueError):
    pass


class UnsupportedOrderError(ValueError):
    """No built-in generator covers the requested order."""


class SchemeParseError(ValueError):
    pass


class MolsParseError(ValueError):
    pass


def factor_prime_power(q: int) -> tuple[int, int]:
    """q = p^e with p prime, or raise."""
    if q < 2:
        raise NotPrimePowerError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if p * p > q and p < q:
            break
        if q % p == 0:
            e = 0
            x = q
            while x % p == 0:
                x //= p
                e += 1
            if x != 1:
                raise NotPrimePowerError(f"{q} is not a prime power")
            return p, e
    return q, 1  # q prime


def is_prime_power(q: int) -> bool:
    try:
        factor_prime_power(q)
        return True
    except NotPrimePowerError:
        return False


class FiniteField:
    """GF(p^e) with elements encoded as integers 0..q-1.

    The base-p digits of an element's code are its coefficients on the
    polynomial basis (least significant digit = constant term), so the
    numeric order of codes equals lexicographic order of coefficient
    vectors read constant-term first.
    """

    def __init__(self, q: int):
        if q > 1024:
            raise NotPrimePowerError(f"field order {q} exceeds the 1024 cap")
        p, e = factor_prime_power(q)
        self.q = q
        self.p = p
        self.e = e
        if e == 1:
            self._add = [[(a + b) % p for b in range(p)] for a in range(p)]
            self._mul = [[(a * b) % p for b in range(p)] for a in range(p)]
            self.modulus: Optional[tuple[int, ...]] = None
        else:
            self.modulus = self._find_irreducible()
            self._build_tables()
        self._neg = [self._find_neg(a) for a in range(q)]
        self._inv = [0] + [self._find_inv(a) for a in range(1, q)]
        self.primitive = self._find_primitive()

    # -- construction helpers -------------------------------------------

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits: Sequence[int]) -> int:
        a = 0
        for d in reversed(digits):
            a = a * self.p + d
        return a

    def _poly_mul_mod(self, a: int, b: int, modulus: Sequence[int]) -> int:
        # modulus: coefficients c_0..c_{e-1} of the monic polynomial
        # x^e + c_{e-1} x^{e-1} + ... + c_0
        p, e = self.p, self.e
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for deg in range(2 * e - 2, e - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for j in range(e):
                    prod[deg - e + j] = (prod[deg - e + j] - c * modulus[j]) % p
        return self._encode(prod[:e])

    def _find_irreducible(self) -> tuple[int, ...]:
        # lowest-lexicographic coefficient vector (c_0, ..., c_{e-1}) such
        # that x^e + c_{e-1} x^{e-1} + ... + c_0 makes a field
        p, e, q = self.p, self.e, self.q
        for coeffs in itertools.product(range(p), repeat=e):
            if coeffs[0] == 0:
                continue  # reducible: x divides
            if self._is_field_modulus(coeffs):
                return coeffs
        raise AssertionError(f"no irreducible polynomial found for GF({q})")

    def _is_field_modulus(self, coeffs: Sequence[int]) -> bool:
        # the quotient ring is a field iff there are no zero divisors
        q = self.q
        for a in range(1, q):
            seen_one = False
            for b in range(1, q):
                r = self._poly_mul_mod(a, b, coeffs)
                if r == 0:
                    return False
                if r == 1:
                    seen_one = True
            if not seen_one:
                return False
        return True

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        self._add = [
            [
                self._encode(
                    [(x + y) % p for x, y in zip(self._digits(a), self._digits(b))]
                )
                for b in range(q)
            ]
            for a in range(q)
        ]
        self._mul = [
            [self._poly_mul_mod(a, b, self.modulus) for b in range(q)]
            for a in range(q)
        ]

    def _find_neg(self, a: int) -> int:
        for b in range(self.q):
            if self._add[a][b] == 0:
                return b
        raise AssertionError("additive inverse missing")

    def _find_inv(self, a: int) -> int:
        for b in range(1, self.q):
            if self._mul[a][b] == 1:
                return b
        raise AssertionError("multiplicative inverse missing")

    def _find_primitive(self) -> int:
        for g in range(1, self.q):
            if self.order(g) == self.q - 1:
                return g
        raise AssertionError("no primitive element")

    # -- arithmetic ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._inv[a]

    def order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        x, k = a, 1
        while x != 1:
            x = self.mul(x, a)
            k += 1
            if k > self.q:
                raise AssertionError("order computation diverged")
        return k

    def squares(self) -> set[int]:
        """Nonzero squares of the field."""
        return {self.mul(a, a) for a in range(1, self.q)}


@lru_cache(maxsize=None)
def gffield(q: int) -> FiniteField:
    return FiniteField(q)


# -- skew-Hadamard designs ---------------------------------------------------

@dataclass(frozen=True)
class SkewHadamardDesign:
    t: int
    order: int  # 4t - 1
    incidence: BinaryMatrix


def skew_hadamard_design(t: int) -> SkewHadamardDesign:
    """Paley-core (4t-1, 2t-1, t-1)-design: N[i][j] = 1 iff e_j - e_i is a
    nonzero square in GF(4t-1)."""
    q = 4 * t - 1
    if q < 3 or not is_prime_power(q) or q % 4 != 3:
        raise UnsupportedOrderError(
            f"order {q} = 4t-1 is not a prime power congruent to 3 mod 4"
        )
    f = gffield(q)
    sq = f.squares()
    entries = [[1 if f.sub(j, i) in sq else 0 for j in range(q)] for i in range(q)]
    d = SkewHadamardDesign(t, q, BinaryMatrix(entries))
    bad = skew_hadamard_verify(d)
    assert not bad, f"Paley core failed its invariants: {bad}"
    return d


def skew_hadamard_verify(d: SkewHadamardDesign) -> list[str]:
    """The four structural identities of a skew-Hadamard design."""
    t, nmat = d.t, d.incidence
    q = d.order
    bad = []
    i_n = binmat.identity(q)
    inc = binmat.complement(i_n)
    nt = binmat.transpose(nmat)
    if binmat.add(nmat, nt) != binmat.IntMatrix(inc.data):
        bad.append("N + N^T != J - I")
    want_gram = binmat.IntMatrix((2 * t - 1) * i_n.data + (t - 1) * inc.data)
    if binmat.gram(nmat) != want_gram:
        bad.append("NN^T != (2t-1)I + (t-1)(J-I)")
    if binmat.matmul(nt, nmat) != want_gram:
        bad.append("N^T N != (2t-1)I + (t-1)(J-I)")
    n2 = binmat.matmul(nmat, nmat)
    nt2 = binmat.matmul(nt, nt)
    want_quad = binmat.IntMatrix(t * inc.data)
    if binmat.IntMatrix(n2.data + nmat.data) != want_quad:
        bad.append("N^2 + N != t(J-I)")
    if binmat.IntMatrix(nt2.data + nt.data) != want_quad:
        bad.append("(N^T)^2 + N^T != t(J-I)")
    if binmat.IntMatrix(n2.data + nt2.data) != binmat.IntMatrix((2 * t - 1) * inc.data):
        bad.append("N^2 + (N^T)^2 != (2t-1)(J-I)")
    return bad


def load_skew_hadamard(fh: TextIO, t: int) -> SkewHadamardDesign:
    """Read a skew-Hadamard incidence matrix from file; invariants enforced."""
    mat = binmat.read_matrix(fh)
    d = SkewHadamardDesign(t, mat.rows, mat)
    bad = skew_hadamard_verify(d)
    if bad:
        raise ValueError(f"file is not a skew-Hadamard design: {bad}")
    return d


# -- mutually orthogonal Latin squares ---------------------------------------

@dataclass(frozen=True)
class MolsSet:
    n: int
    squares: tuple[tuple[tuple[int, ...], ...], ...]  # symbols 1..n


def mols(q: int) -> MolsSet:
    """The q-1 field squares L_a[x][y] = a*x + y, symbols relabeled 1..q.

    Every square's first row is (1, 2, ..., q).
    """
    if q < 3:
        raise NotPrimePowerError(f"need q >= 3, got {q}")
    f = gffield(q)
    squares = []
    for a in range(1, q):
        sq = tuple(
            tuple(f.add(f.mul(a, x), y) + 1 for y in range(q)) for x in range(q)
        )
        squares.append(sq)
    out = MolsSet(q, tuple(squares))
    bad = mols_verify(out)
    assert not bad, f"field MOLS failed verification: {bad}"
    return out


def mols_verify(ms: MolsSet) -> list[str]:
    """Latinness of each square plus the full pairwise join census."""
    n = ms.n
    bad = []
    symbols = set(range(1, n + 1))
    for idx, sq in enumerate(ms.squares):
        for i in range(n):
            if set(sq[i]) != symbols:
                bad.append(f"square {idx + 1} row {i + 1} is not a permutation")
        for j in range(n):
            if {sq[i][j] for i in range(n)} != symbols:
                bad.append(f"square {idx + 1} column {j + 1} is not a permutation")
    for a, b in itertools.combinations(range(len(ms.squares)), 2):
        pairs = {
            (ms.squares[a][i][j], ms.squares[b][i][j])
            for i in range(n)
            for j in range(n)
        }
        if len(pairs) != n * n:
            bad.append(f"squares {a + 1} and {b + 1} are not orthogonal")
    return bad


def read_mols(fh: TextIO) -> MolsSet:
    """MOLS file: 'MOLS n count' then count n-line blocks of symbols 1..n."""
    header = fh.readline().split()
    if len(header) != 3 or header[0] != "MOLS":
        raise MolsParseError(f"bad MOLS header: {' '.join(header)!r}")
    try:
        n, count = int(header[1]), int(header[2])
    except ValueError:
        raise MolsParseError(f"bad MOLS header: {' '.join(header)!r}") from None
    squares = []
    for s in range(count):
        rows = []
        while len(rows) < n:
            line = fh.readline()
            if not line:
                raise MolsParseError(f"unexpected end of file in square {s + 1}")
            if not line.strip():
                continue
            try:
                row = tuple(int(x) for x in line.split())
            except ValueError:
                raise MolsParseError(f"bad row in square {s + 1}: {line!r}") from None
            if len(row) != n:
                raise MolsParseError(
                    f"square {s + 1} row has {len(row)} entries, expected {n}"
                )
            rows.append(row)
        squares.append(tuple(rows))
    out = MolsSet(n, tuple(squares))
    bad = mols_verify(out)
    if bad:
        raise MolsParseError(f"file is not a MOLS set: {bad}")
    return out


def write_mols(ms: MolsSet, fh: TextIO) -> None:
    fh.write(f"MOLS {ms.n} {len(ms.squares)}\n")
    for idx, sq in enumerate(ms.squares):
        if idx:
            fh.write("\n")
        for row in sq:
            fh.write(" ".join(str(x) for x in row) + "\n")


# -- strongly regular graphs -------------------------------------------------

@dataclass(frozen=True)
class SrgGraph:
    v: int
    k: int
    lam: int
    mu: int
    adjacency: BinaryMatrix


def paley_srg(q: int) -> SrgGraph:
    """Paley graph on GF(q), q = 1 mod 4: the canonical mu = lambda + 1 family."""
    if not is_prime_power(q) or q % 4 != 1:
        raise UnsupportedOrderError(f"Paley graph needs a prime power q = 1 mod 4, got {q}")
    f = gffield(q)
    sq = f.squares()
    entries = [[1 if f.sub(j, i) in sq else 0 for j in range(q)] for i in range(q)]
    g = SrgGraph(q, (q - 1) // 2, (q - 5) // 4, (q - 1) // 4, BinaryMatrix(entries))
    bad = srg_verify(g)
    assert not bad, f"Paley graph failed verification: {bad}"
    return g


def srg_verify(g: SrgGraph) -> list[str]:
    """Symmetry, zero diagonal, degree, 0 < k < v-1 and the quadratic identity."""
    bad = []
    a = g.adjacency
    if a.rows != g.v or a.cols != g.v:
        return [f"adjacency is {a.rows}x{a.cols}, expected {g.v}x{g.v}"]
    if a != binmat.transpose(a):
        bad.append("adjacency not symmetric")
    if any(a.data[i, i] != 0 for i in range(g.v)):
        bad.append("diagonal not zero")
    if not (0 < g.k < g.v - 1):
        bad.append(f"degree k = {g.k} outside (0, v-1): both edges and nonedges required")
    for i, s in enumerate(binmat.row_sums(a)):
        if s != g.k:
            bad.append(f"vertex {i + 1} has degree {s} != k = {g.k}")
    i_v = binmat.identity(g.v)
    want = binmat.IntMatrix(
        g.k * i_v.data
        + g.lam * a.data
        + g.mu * (binmat.ones(g.v, g.v).data - i_v.data - a.data)
    )
    if binmat.matmul(a, a) != want:
        bad.append("A^2 != kI + lambda*A + mu*(J - I - A)")
    return bad


# -- groups and difference schemes -------------------------------------------

@dataclass(frozen=True)
class Group:
    """Z_s (cyclic) or the additive group of GF(s) (elementary abelian)."""

    kind: str  # "cyclic" | "ea"
    s: int

    def __post_init__(self):
        if self.kind not in ("cyclic", "ea"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.s < 2:
            raise ValueError(f"group order must be >= 2, got {self.s}")
        if self.kind == "ea":
            factor_prime_power(self.s)  # raises if not a prime power

    def _field(self) -> FiniteField:
        return gffield(self.s)

    def add(self, a: int, b: int) -> int:
        if self.kind == "cyclic":
            return (a + b) % self.s
        return self._field().add(a, b)

    def sub(self, a: int, b: int) -> int:
        if self.kind == "cyclic":
            return (a - b) % self.s
        return self._field().sub(a, b)

    def elements(self) -> range:
        return range(self.s)


@dataclass(frozen=True)
class DifferenceScheme:
    """DS(m, s; x): column differences hit every group element x times."""

    m: int
    s: int
    x: int
    group: Group
    entries: tuple[tuple[int, ...], ...]


def ds_verify(d: DifferenceScheme) -> list[str]:
    """Full pairwise-column difference census plus normalization."""
    bad = []
    if d.m != d.x * d.s:
        bad.append(f"m = {d.m} != x*s = {d.x * d.s}")
    if len(d.entries) != d.m or any(len(row) != d.m for row in d.entries):
        bad.append(f"entry grid is not {d.m}x{d.m}")
        return bad
    if any(e < 0 or e >= d.s for row in d.entries for e in row):
        bad.append("entry outside [0, s)")
        return bad
    if any(d.entries[0][j] != 0 for j in range(d.m)):
        bad.append("first row not all zero")
    if any(d.entries[i][0] != 0 for i in range(d.m)):
        bad.append("first column not all zero")
    for j1 in range(d.m):
        for j2 in range(j1 + 1, d.m):
            census = [0] * d.s
            for i in range(d.m):
                census[d.group.sub(d.entries[i][j1], d.entries[i][j2])] += 1
            if any(c != d.x for c in census):
                bad.append(
                    f"columns {j1 + 1},{j2 + 1} difference census {census} != {d.x} each"
                )
    return bad


def _checked_scheme(m, s, x, group, entries) -> DifferenceScheme:
    d = DifferenceScheme(m, s, x, group, tuple(tuple(row) for row in entries))
    bad = ds_verify(d)
    assert not bad, f"constructed scheme failed verification: {bad[:3]}"
    return d


def ds_field(q: int) -> DifferenceScheme:
    """DS(q, q; 1) from the multiplication table of GF(q)."""
    f = gffield(q)
    group = Group("cyclic" if f.e == 1 else "ea", q)
    entries = [[f.mul(i, j) for j in range(q)] for i in range(q)]
    return _checked_scheme(q, q, 1, group, entries)


def ds_sylvester(k: int) -> DifferenceScheme:
    """DS(2^k, 2; 2^(k-1)) over Z_2: e[i][j] = parity of popcount(i AND j)."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    m = 2**k
    entries = [[bin(i & j).count("1") % 2 for j in range(m)] for i in range(m)]
    return _checked_scheme(m, 2, 2 ** (k - 1), Group("cyclic", 2), entries)


def ds_compose(a: DifferenceScheme, b: DifferenceScheme) -> DifferenceScheme:
    """Kronecker-sum composition: same group, multiplied index."""
    if a.group != b.group:
        raise ValueError(f"group mismatch: {a.group} vs {b.group}")
    m = a.m * b.m
    g = a.group
    entries = [
        [
            g.add(a.entries[i1][j1], b.entries[i2][j2])
            for j1 in range(a.m)
            for j2 in range(b.m)
        ]
        for i1 in range(a.m)
        for i2 in range(b.m)
    ]
    return _checked_scheme(m, a.s, m // a.s, g, entries)


def ds_search(
    m: int, s: int, x: int, group_kind: str = "cyclic"
) -> Optional[DifferenceScheme]:
    """Exhaustive backtracking for a normalized DS(m, s; x).

    Columns are built left to right, entries top down, trying group
    elements in ascending order with running pairwise-difference pruning,
    so the first scheme found is the lexicographically least one.  Returns
    None after exhausting the space.
    """
    if m != x * s:
        raise ValueError(f"need m = x*s, got m={m}, s={s}, x={x}")
    if m > 12:
        raise ValueError(f"search capped at m <= 12, got m={m}")
    group = Group(group_kind, s)
    sub = group.sub
    cols: list[list[int]] = [[0] * m]  # normalized: first column all zero
    col = [0] * m

    def fill(i: int, cnt: list[list[int]]) -> Optional[list[list[int]]]:
        if i == m:
            cols.append(list(col))
            found = next_column()
            if found is not None:
                return found
            cols.pop()
            return None
        for e in range(s):
            touched = []
            ok = True
            for j, prev in enumerate(cols):
                d = sub(e, prev[i])
                if cnt[j][d] >= x:
                    ok = False
                    break
                cnt[j][d] += 1
                touched.append((j, d))
            if ok:
                col[i] = e
                found = fill(i + 1, cnt)
                if found is not None:
                    return found
            for j, d in touched:
                cnt[j][d] -= 1
        return None

    def next_column() -> Optional[list[list[int]]]:
        if len(cols) == m:
            return [list(c) for c in cols]
        cnt = [[0] * s for _ in cols]
        col[0] = 0  # normalized first row
        for j, prev in enumerate(cols):
            cnt[j][sub(0, prev[0])] += 1
        return fill(1, cnt)

    found = next_column()
    if found is None:
        return None
    entries = [[found[j][i] for j in range(m)] for i in range(m)]
    return _checked_scheme(m, s, x, group, entries)


def group_permutation(e: int, group: Group) -> BinaryMatrix:
    """The permutation matrix of x -> x + e under the fixed enumeration."""
    if not (0 <= e < group.s):
        raise ValueError(f"element {e} outside group of order {group.s}")
    s = group.s
    entries = [[0] * s for _ in range(s)]
    for i in range(s):
        entries[i][group.add(i, e)] = 1
    return BinaryMatrix(entries)


# -- DS file format -----------------------------------------------------------

def read_scheme(fh: TextIO) -> DifferenceScheme:
    """'DS m s x <cyclic|ea>' then m rows of m integers; verified on load."""
    header = fh.readline().split()
    if len(header) != 5 or header[0] != "DS":
        raise SchemeParseError(f"bad DS header: {' '.join(header)!r}")
    try:
        m, s, x = int(header[1]), int(header[2]), int(header[3])
    except ValueError:
        raise SchemeParseError(f"bad DS header: {' '.join(header)!r}") from None
    kind = header[4]
    if kind not in ("cyclic", "ea"):
        raise SchemeParseError(f"unknown group kind {kind!r}")
    entries = []
    for i in range(m):
        line = fh.readline()
        try:
            row = [int(v) for v in line.split()]
        except ValueError:
            raise SchemeParseError(f"bad DS row {i + 1}: {line!r}") from None
        if len(row) != m:
            raise SchemeParseError(f"DS row {i + 1} has {len(row)} entries, expected {m}")
        entries.append(row)
    d = DifferenceScheme(m, s, x, Group(kind, s), tuple(tuple(r) for r in entries))
    bad = ds_verify(d)
    if bad:
        raise SchemeParseError(f"file is not a difference scheme: {bad[:3]}")
    return d


def write_scheme(d: DifferenceScheme, fh: TextIO) -> None:
    fh.write(f"DS {d.m} {d.s} {d.x} {d.group.kind}\n")
    for row in d.entries:
        fh.write(" ".join(str(v) for v in row) + "\n")
