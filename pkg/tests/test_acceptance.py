"""Acceptance gate: eight criteria, one printed verdict line each.

Every criterion prints "[ACCEPTANCE] criterion N: PASS/FAIL" before its
assertions fire, so the run log always carries a complete scoreboard.
"""

from fractions import Fraction

import numpy as np
import pytest

from conftest import corpus_recipes
from rectdesign import algebra, analyze, binmat, cli, construct, design, search, tables
from rectdesign.design import DesignTag, RDParams


@pytest.fixture
def report(capsys):
    """Emit the criterion verdict outside pytest's capture so the line is
    always visible in the run log, then assert."""
    def _report(n, ok, detail=""):
        verdict = "PASS" if ok else "FAIL"
        with capsys.disabled():
            print(f"\n[ACCEPTANCE] criterion {n}: {verdict}  {detail}".rstrip())
        assert ok, f"criterion {n}: {detail}"
    return _report


def test_criterion_1_table4(report, ds_10_5_2, ds_8_4_2):
    """First reference table: all rows except the ambiguous row 4."""
    results = tables.run_table("T4")
    by_id = {r.row_id: r for r in results}
    bad = [f"row {r.row_id} {r.status}: {r.detail}"
           for r in results if r.row_id != 4 and r.status != "PASS"]
    if by_id[4].status != "SKIP":
        bad.append(f"row 4 must be SKIP, got {by_id[4].status}")
    counts = f"{sum(r.status == 'PASS' for r in results)}/28 pass, row 4 skipped"
    report(1, not bad, "; ".join(bad) or counts)


def test_criterion_2_table5(report, ds_10_5_2, ds_8_4_2):
    """Second reference table, including the searched difference schemes."""
    results = tables.run_table("T5")
    bad = [f"row {r.row_id} {r.status}: {r.detail}"
           for r in results if r.status != "PASS"]
    report(2, not bad, "; ".join(bad) or "14/14 pass")


def test_criterion_3_feasibility_table(report):
    """All ten expected-parameter rows survive the feasibility filter with
    the stated nature, and regular rows satisfy their square condition."""
    results = tables.run_table("S6")
    bad = [f"row {r.row_id}: {r.detail}" for r in results if r.status != "PASS"]
    for row in tables.load_feasibility_table():
        p = RDParams(row.v, row.v, row.k, row.k, *row.lambdas, row.m, row.n)
        s = design.spectrum(p)
        if s.theta1 > 0 and s.theta2 > 0 and s.theta3 > 0:
            label, holds = analyze.square_condition(p)
            if not holds:
                bad.append(f"row {row.row_id}: {label} fails")
    report(3, not bad, "; ".join(bad) or "10/10 pass incl. square conditions")


def test_criterion_4_oracle_equivalence(report, ds_10_5_2, ds_8_4_2):
    """Brute-force parameter recovery and exact integer spectra for every
    corpus construction."""
    bad = []
    for recipe in corpus_recipes():
        d = construct.run_recipe(recipe)
        p = d.params
        if design.params_from_matrix(d.incidence, p.m, p.n) != p:
            bad.append(f"oracle mismatch: {recipe}")
            continue
        s = design.spectrum(p)
        eig = np.linalg.eigvalsh(binmat.gram(d.incidence).data.astype(float))
        numeric = {}
        for ev in eig:
            iv = int(round(ev))
            if abs(ev - iv) > 1e-6:
                bad.append(f"non-integer eigenvalue {ev} in {recipe}")
                break
            numeric[iv] = numeric.get(iv, 0) + 1
        else:
            if numeric != s.as_multiset():
                bad.append(f"spectrum mismatch: {recipe}")
    report(4, not bad, "; ".join(bad[:3]) or f"{len(corpus_recipes())} constructions")


def test_criterion_5_structural_suites(report):
    bad = []
    for t in (1, 2, 3, 5, 6):
        if algebra.skew_hadamard_verify(algebra.skew_hadamard_design(t)):
            bad.append(f"skew identities fail at t={t}")
    for q in (3, 4, 5, 7, 8, 9, 11, 13, 16):
        if algebra.mols_verify(algebra.mols(q)):
            bad.append(f"MOLS census fails at q={q}")
    for q in (5, 9, 13, 17):
        if algebra.srg_verify(algebra.paley_srg(q)):
            bad.append(f"srg identity fails at q={q}")
    schemes = [algebra.ds_field(q) for q in (2, 3, 4, 5, 7, 8, 9)]
    schemes += [algebra.ds_sylvester(k) for k in (1, 2, 3)]
    for sch in schemes:
        if algebra.ds_verify(sch):
            bad.append(f"difference census fails for DS({sch.m},{sch.s};{sch.x})")
    global_cases = [
        (construct.lemma1_kronecker(construct.fano(), construct.fano()), 7),
        (construct.thm3(binmat.identity(2), 2), 7),
        (construct.thm3(binmat.identity(2), 3), 11),
        (construct.corollary_preset("cor2", 2, 1), 3),
        (construct.corollary_preset("cor2", 2, 2), 7),
        (construct.corollary_preset("cor2", 3, 1), 3),
        (construct.corollary_preset("cor2", 3, 2), 7),
        (construct.thm6(1), 3),
        (construct.thm6(2), 7),
    ]
    for d, order in global_cases:
        rep = analyze.global_decomposition_check(d, order)
        if not rep.ok:
            bad.append(f"global decomposition fails for v={d.params.v}: {rep.detail}")
    report(5, not bad, "; ".join(bad[:3]) or "skew/MOLS/srg/DS/global all verified")


def test_criterion_6_semi_regular_structure(report, ds_10_5_2, ds_8_4_2):
    bad = []
    seen = 0
    for recipe in corpus_recipes():
        d = construct.run_recipe(recipe)
        p = d.params
        if design.classify(p).tag is not DesignTag.SEMI_REGULAR_II:
            continue
        seen += 1
        if p.k % p.m:
            bad.append(f"{recipe}: m does not divide k")
            continue
        ri = analyze.row_intersection_check(d)
        if ri.uniform_value != Fraction(p.k, p.m):
            bad.append(f"{recipe}: intersections not k/m")
        td = analyze.tactical_decomposition(d, [p.n] * p.m, [1] * p.b)
        if not td.col_tactical:
            bad.append(f"{recipe}: column sums not tactical")
        dual = d.incidence.data.T
        for g in range(p.m):
            if not (dual[:, g * p.n:(g + 1) * p.n].sum(axis=1) * p.m == p.k).all():
                bad.append(f"{recipe}: dual resolution fails")
                break
    base = construct.thm6(1)
    for s in (1, 2, 3):
        keep = list(range((base.params.m - s) * base.params.n))
        mat = binmat.submatrix_rows(base.incidence, keep)
        q = design.params_from_matrix(mat, base.params.m - s, base.params.n)
        if q.lambdas() != base.params.lambdas() or q.k != base.params.k - s:
            bad.append(f"truncation s={s} breaks parameters")
    report(6, not bad, "; ".join(bad[:3]) or f"{seen} semi-regular designs checked")


def test_criterion_7_efficiency_pins(report):
    pins = [
        (RDParams(12, 12, 3, 3, 0, 0, 1, 3, 4), Fraction(68, 100)),
        (RDParams(14, 14, 5, 5, 2, 2, 1, 2, 7), Fraction(85, 100)),
        (RDParams(6, 14, 7, 3, 0, 3, 4, 3, 2), Fraction(76, 100)),
    ]
    bad = []
    for p, want in pins:
        e = analyze.efficiency(p).efficiency
        if abs(e - want) > Fraction(5, 1000):
            bad.append(f"E({p.v},{p.k}) = {float(e):.4f}, pinned {float(want)}")
    report(7, not bad, "; ".join(bad) or "0.68 / 0.85 / 0.76 all locked")


def test_criterion_8_negative_controls(report, tmp_path, capsys):
    bad = []
    rejected = 0
    for lam in search.diophantine_lambdas(2, 7, 5):
        c = search.feasibility_filter(search._raw_candidate(2, 7, 5, lam))
        s = c.spectrum
        if min(s.theta1, s.theta2, s.theta3) < 0:
            rejected += 1
            if c.verdict != "nonexistent":
                bad.append(f"negative theta not rejected for {lam}")
    if not rejected:
        bad.append("no lambda triple was eigenvalue-rejected for v=14, k=5")

    cls = design.classify(construct.example1(3).params)
    if cls.tag is not DesignTag.SINGULAR or cls.reduction.value != "None":
        bad.append(f"singular control misclassified: {cls}")

    path = tmp_path / "d.rd"
    import io

    buf = io.StringIO()
    design.write_design(construct.thm6(1), buf)
    lines = buf.getvalue().splitlines()
    lines[2] = ("1" if lines[2][0] == "0" else "0") + lines[2][1:]
    path.write_text("\n".join(lines) + "\n")
    code = cli.main(["verify", str(path)])
    out = capsys.readouterr().out
    if code != 1 or "DEVIATION" not in out:
        bad.append(f"bit-flip verify exited {code} without locating deviation")
    report(8, not bad, "; ".join(bad) or
           f"{rejected} triples rejected; singular and bit-flip controls hold")
