"""Feasibility search for symmetric rectangular designs.

Given v = m*n and a block size k, enumerate every concurrence triple that
satisfies the replication identity, then filter by the eigenvalue sign and
perfect-square necessary conditions.  The search emits parameter sets, not
incidence matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from . import analyze, design
from .design import DesignClass, RDParams, Spectrum


@dataclass(frozen=True)
class Candidate:
    """A symmetric parameter set with its feasibility verdict.

    verdict is 'feasible' or 'nonexistent'; square_condition is one of
    'not-required', 'required+holds', 'required+fails'.  gdd_type flags
    candidates whose triple collapses to a group-divisible pattern.
    """

    params: RDParams
    spectrum: Spectrum
    design_class: Optional[DesignClass]
    verdict: str
    square_condition: str
    square_label: Optional[str]
    gdd_type: bool


def diophantine_lambdas(m: int, n: int, k: int) -> list[tuple[int, int, int]]:
    """All non-negative triples with
    (n-1)*l1 + (m-1)*l2 + (n-1)*(m-1)*l3 = k*(k-1), each l_i <= k.

    The l_i <= k cap is a concurrence bound: two treatments cannot meet in
    more blocks than either one occupies.
    """
    if m < 2 or n < 2:
        raise ValueError(f"need m, n >= 2, got m={m}, n={n}")
    if not 1 <= k <= m * n:
        raise ValueError(f"need 1 <= k <= v = {m * n}, got k={k}")
    target = k * (k - 1)
    a, b, c = n - 1, m - 1, (n - 1) * (m - 1)
    out = []
    for l1 in range(min(k, target // a) + 1):
        rem1 = target - a * l1
        for l2 in range(min(k, rem1 // b) + 1):
            rem2 = rem1 - b * l2
            if rem2 % c:
                continue
            l3 = rem2 // c
            if l3 <= k:
                out.append((l1, l2, l3))
    out.sort()
    return out


def feasibility_filter(c: Candidate) -> Candidate:
    """Apply the eigenvalue sign test and, for all-positive spectra, the
    parity-dependent perfect-square necessary condition."""
    s = c.spectrum
    thetas = (s.theta1, s.theta2, s.theta3)
    if any(t < 0 for t in thetas):
        return _replace(c, design_class=None, verdict="nonexistent",
                        square_condition="not-required", square_label=None)
    cls = design.classify(c.params)
    if all(t > 0 for t in thetas):
        label, holds = analyze.square_condition(c.params)
        cond = "required+holds" if holds else "required+fails"
        verdict = "feasible" if holds else "nonexistent"
        return _replace(c, design_class=cls, verdict=verdict,
                        square_condition=cond, square_label=label)
    return _replace(c, design_class=cls, verdict="feasible",
                    square_condition="not-required", square_label=None)


def _replace(c: Candidate, **kw) -> Candidate:
    import dataclasses

    return dataclasses.replace(c, **kw)


def _raw_candidate(m: int, n: int, k: int, lambdas: tuple[int, int, int]) -> Candidate:
    l1, l2, l3 = lambdas
    p = RDParams(v=m * n, b=m * n, r=k, k=k,
                 lambda1=l1, lambda2=l2, lambda3=l3, m=m, n=n)
    return Candidate(
        params=p, spectrum=design.spectrum(p), design_class=None,
        verdict="", square_condition="", square_label=None,
        gdd_type=(l1 == l3 or l2 == l3),
    )


def enumerate_candidates(v: int, k_range: Iterable[int] = range(2, 11),
                         feasible_only: bool = True) -> list[Candidate]:
    """All filtered symmetric candidates over every factorization v = m*n."""
    factorizations = [(m, v // m) for m in range(2, v) if v % m == 0 and v // m >= 2]
    if not factorizations:
        raise ValueError(f"v = {v} has no factorization with m, n >= 2")
    ks = sorted(set(k_range))
    out = []
    for m, n in factorizations:
        for k in ks:
            if not 2 <= k <= v:
                continue
            for lambdas in diophantine_lambdas(m, n, k):
                c = feasibility_filter(_raw_candidate(m, n, k, lambdas))
                if feasible_only and c.verdict != "feasible":
                    continue
                out.append(c)
    out.sort(key=lambda c: (c.params.m, c.params.n, c.params.k, c.params.lambdas()))
    return out


def candidate_line(c: Candidate) -> str:
    """'v m n k l1 l2 l3 t1 t2 t3 class verdict' — one row per candidate."""
    p, s = c.params, c.spectrum
    cls = "-"
    if c.design_class is not None:
        cls = c.design_class.nature
        if c.gdd_type and c.design_class.reduction.value != "None":
            cls += " GDD"
        else:
            cls += " RD"
    return (f"{p.v} {p.m} {p.n} {p.k} {p.lambda1} {p.lambda2} {p.lambda3} "
            f"{s.theta1} {s.theta2} {s.theta3} {cls} {c.verdict}")
