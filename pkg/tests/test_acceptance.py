"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines, or directly
with ``python3 tests/test_acceptance.py``. All comparisons are exact.
"""
import io
import json
import sys
from importlib import resources
from pathlib import Path as FsPath

sys.path.insert(0, str(FsPath(__file__).parent))

from leavitt_partial import cli, graded  # noqa: E402
from leavitt_partial.boundary import boundary_paths, theta_apply  # noqa: E402
from leavitt_partial.corpus import corpus, random_graphs  # noqa: E402
from leavitt_partial.fields import RATIONALS, prime_field  # noqa: E402
from leavitt_partial.functions import DFunction  # noqa: E402
from leavitt_partial.graded import AnnihilatorWitness, InverseTable, SeparatingCell, Verdict  # noqa: E402
from leavitt_partial.lpa import verify_ck  # noqa: E402
from leavitt_partial.partial_action import alpha_apply, idempotency_check, unit_of, verify_axioms  # noqa: E402
from leavitt_partial.skew import SkewElement  # noqa: E402
from leavitt_partial.words import EmptyDomain, Word, classify, words_up_to  # noqa: E402

from oracles import cell_values, random_pair, random_terms, seeded  # noqa: E402
from test_partial_action import swapped_alpha  # noqa: E402

GF5 = prime_field(5)
SEED = 20240601
CORPUS = corpus()


def data(name):
    return str(resources.files("leavitt_partial") / "data" / f"{name}.json")


def cli_run(*argv):
    out = io.StringIO()
    code, report = cli.run(list(argv), out=out)
    return code, report


def verdict_line(n, title, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {n:2d}: {title}" + (f" ({detail})" if detail else ""))
    assert ok, detail


def test_01_ck_relations():
    graphs = dict(CORPUS) | random_graphs(20, seed=SEED)
    bad, count = [], 0
    for name, g in graphs.items():
        assert not g.isolated
        for field in (RATIONALS, GF5):
            rep = verify_ck(g, field)
            count += len(rep)
            bad += [f"{name}: {r.name}" for r in rep.violations]
    verdict_line(1, "CK relations on corpus + 20 random graphs over Q and GF(5)", not bad,
                 f"{count} instances, {len(bad)} failures")


def test_02_partial_action_axioms():
    bad = []
    for name, g in CORPUS.items():
        rep = verify_axioms(g, 3)
        bad += [f"{name}: {r.name} {r.detail}" for r in rep.violations]
    caught = len(verify_axioms(CORPUS["rose2"], 2, alpha=swapped_alpha).violations)
    verdict_line(2, "axioms (P1)-(P3) with B = 3, mutation detected", not bad and caught >= 1,
                 f"{len(bad)} violations on corpus, {caught} on mutant")


def test_03_theta_compatibility():
    mismatches, checked = 0, 0
    for name, g in CORPUS.items():
        rng = seeded(f"{SEED}:theta:{name}")
        live = [w for w in words_up_to(g, 3) if not isinstance(classify(w, g), EmptyDomain)]
        paths = boundary_paths(g, 6)
        for _ in range(200):
            w = rng.choice(live)
            ug = unit_of(g, w)
            raw = DFunction.combination(g, RATIONALS, [(c, p) for c, p in random_terms(g, RATIONALS, rng, 4)])
            x = unit_of(g, ~w) * raw
            inside = [xi for xi in paths if ug.evaluate(xi)]
            xi = rng.choice(inside)
            checked += 1
            if alpha_apply(w, x).evaluate(xi) != x.evaluate(theta_apply(g, ~w, xi)):
                mismatches += 1
    verdict_line(3, "alpha_g(x)(xi) = x(theta_{g^-1}(xi)), 200 triples per graph", mismatches == 0,
                 f"{checked} triples, {mismatches} mismatches")


def test_04_domain_idempotency():
    bad = []
    for name, g in CORPUS.items():
        rep = idempotency_check(g, 3, seed=SEED)
        bad += [f"{name}: {r.name}" for r in rep.violations]
    verdict_line(4, "D_g D_g = D_g for |g| <= 3, with the sum-of-vertices witness for D_e", not bad,
                 f"{len(bad)} failures")


def test_05_strong_grading():
    ok = True
    code, report = cli_run("check", "strong", data("loop"), "--bound", "4")
    ok &= code == 0 and report.records[0].verdict is True
    loop_verdict = graded.decide_strongly_graded(CORPUS["loop"])
    (table,) = [c for c in loop_verdict.certificates if isinstance(c, InverseTable)]
    one = SkewElement.generator(CORPUS["loop"], Word())
    ok &= len(table.entries) == 8 and all(x * y == one == y * x for x, y in table.entries)
    for name in ("rose2", "a2", "toeplitz"):
        code, report = cli_run("check", "strong", data(name))
        ok &= code == 0 and report.records[0].verdict is False
        v = graded.decide_strongly_graded(CORPUS[name])
        cells = [c for c in v.certificates if isinstance(c, SeparatingCell)]
        ok &= bool(cells) and all(c.verify(CORPUS[name]) for c in cells)
    verdict_line(5, "strongly graded exactly for the loop, certificates verified", ok)


def test_06_equivalence_crosscheck(monkeypatch):
    code, report = cli_run("crosscheck", "--random", "20", "--seed", str(SEED))
    rows = report.records
    constant = all(len(set(r.verdict)) == 1 for r in rows)
    graphs = dict(CORPUS) | random_graphs(20, seed=SEED)
    by_inspection = sorted(n for n, g in graphs.items()
                           if len(g.vertices) == 1 and [(e.src == e.dst) for e in g.edges.values()] == [True])
    loops = [r.name for r in rows if r.verdict[0]]

    def tampered(graph, field=RATIONALS):
        x = SkewElement.generator(graph, next(iter(graph.edges)), field)
        return Verdict("graded clean", False, [AnnihilatorWitness(x, x)])

    monkeypatch.setattr(graded, "decide_graded_clean", tampered)
    bad_code, _ = cli_run("crosscheck", "--random", "0")
    verdict_line(6, "crosscheck rows constant on 24 graphs, certificate failure exits 2",
                 code == 0 and len(rows) == 24 and constant and loops == by_inspection and bad_code == 2,
                 f"exit {code}, loops {loops}, tampered exit {bad_code}")


def test_07_laurent():
    code, report = cli_run("laurent", data("loop"), "--N", "5", "--json")
    loop = CORPUS["loop"]
    got = graded.laurent_check(loop, 5)
    independent = all(
        r.data["product"] == str(SkewElement.generator(loop, Word((("f", 1 if r.data["m"] + r.data["n"] > 0 else -1),)
                                                             * abs(r.data["m"] + r.data["n"]))))
        for r in got.records)
    verdict_line(7, "Laurent products x^m x^n = x^(m+n), |m|,|n| <= 5",
                 code == 0 and len(got) == 121 and got.passed and independent, f"{len(got)} products")


def test_08_associativity():
    codes = {}
    for name in CORPUS:
        codes[name], _ = cli_run("assoc", data(name), "--trials", "200", "--depth", "3", "--seed", str(SEED))
    verdict_line(8, "associativity, 200 trials, support depth <= 3", set(codes.values()) == {0}, json.dumps(codes))


def test_09_beta_construction(tmp_path):
    codes = {}
    for name in CORPUS:
        codes[name], report = cli_run("iso", "beta", data(name), "--bound", "3")
    p = tmp_path / "isolated.json"
    p.write_text(json.dumps({"vertices": ["v", "w"], "edges": [{"id": "f", "src": "v", "dst": "v"}]}))
    rejected, _ = cli_run("iso", "beta", str(p))
    verdict_line(9, "beta realization, semi-saturation (B = 3), orthogonality; isolated vertex rejected",
                 set(codes.values()) == {0} and rejected == 1, json.dumps(codes) + f", isolated exit {rejected}")


def test_10_normal_form_soundness():
    disagreements, equal_pairs = 0, 0
    for name, g in CORPUS.items():
        rng = seeded(f"{SEED}:nf:{name}")
        for _ in range(500):
            tx, ty = random_pair(g, RATIONALS, rng, 4)
            x = DFunction.combination(g, RATIONALS, [(c, p) for c, p in tx])
            y = DFunction.combination(g, RATIONALS, [(c, p) for c, p in ty])
            oracle = cell_values(g, RATIONALS, tx, 4) == cell_values(g, RATIONALS, ty, 4)
            equal_pairs += oracle
            disagreements += x.equals(y) != oracle
    verdict_line(10, "normal-form equality matches the cylinder oracle, 500 pairs per graph",
                 disagreements == 0, f"{equal_pairs} equal pairs, {disagreements} disagreements")


if __name__ == "__main__":
    import pytest
    sys.exit(pytest.main(["-q", "-s", __file__]))
