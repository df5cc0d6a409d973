import json
import random

import pytest

from diffgraph.graphs.build import build_diff_graph
from diffgraph.groups import build_group, export_cayley
from diffgraph.numtheory import prime_factors
from diffgraph.suite import certificates as cert
from diffgraph.suite.checks import CHECKS, CheckResult, _verdict, triple_specs
from diffgraph.suite.runner import exit_code, render_report, report_dict, run_suite, selected_checks


@pytest.fixture(scope="module")
def results():
    return {r.id: r for r in run_suite("*", workers=1)}


def test_statuses(results):
    expected_skips = {"C8:A18": "SKIPPED(scale)", "C12:unconstructible": "SKIPPED(unconstructible)"}
    for cid, r in results.items():
        assert r.label == expected_skips.get(cid, "PASS"), (cid, r.reason)
    assert set(CHECKS) <= {cid.split(":")[0] for cid in results}


def test_report_schema(results, schema):
    data = report_dict(list(results.values()), 200, 0)
    schema("report", data)
    assert data["summary"] == {"PASS": len(results) - 2, "SKIPPED(scale)": 1, "SKIPPED(unconstructible)": 1}


def test_c1_edges_and_orders(results):
    recs = results["C1"].certificate["records"]
    assert len(recs) == 2327
    for rec in recs:
        if rec["eppo"]:
            assert all(o == 1 or len(prime_factors(o)) == 1 for o in rec["element_orders"])
    sample = random.Random(0).sample([r for r in recs if not r["eppo"]], 40)
    for rec in sample:
        assert cert.verify_edge(rec["group"], *rec["edge"])[0], rec


def test_c2_sampled_geodesics(results):
    recs = results["C2"].certificate["records"]
    assert max(r["diameter"] for r in recs) <= 6
    for rec in random.Random(1).sample(recs, 25):
        assert cert.verify_path(rec["group"], rec["geodesic"], rec["diameter"])[0], rec


def test_c3_certificate(results):
    c = results["C3"].certificate
    spec = c["group"]
    assert c["diameter"] == 6 and len(c["center"]) == 2
    assert cert.verify_path(spec, c["geodesic"], 6)[0]
    assert c["geodesic"][0] == c["layers"][0][0] and c["geodesic"][-1] in c["layers"][6]
    assert len(c["layers"]) == 7 and cert.verify_bfs_layers(spec, c["layers"])[0]
    a, b = (cert.lookup_for(spec)(t) for t in c["non_nilpotent_witness"])
    G = build_group(spec)
    assert G.multiply(a, b) != G.multiply(b, a)


def test_c4_tight_certificate(results):
    c = results["C4:tight"].certificate
    assert c["pair"] == ["(0,2,4)", "(2,2,4)"] and c["distance"] == 4
    assert cert.verify_path(c["group"], c["geodesic"], 4)[0]
    assert len(c["layers"]) == 5 and cert.verify_bfs_layers(c["group"], c["layers"])[0]
    assert "(2,2,4)" in c["layers"][4]


def test_c5_records(results):
    recs = results["C5"].certificate["records"]
    assert [r["n"] for r in recs] == list(range(2, 101))
    for r in recs:
        assert (r["vertices"] == 0) == r["prime_power"]
        if not r["prime_power"]:
            assert r["components"] == 1
            assert cert.verify_edge(f"D{r['n']}", *r["edge"])[0]


def test_c6_components_and_tree(results):
    recs = {r["n"]: r for r in results["C6"].certificate["records"]}
    assert [recs[n]["vertices"] for n in range(1, 5)] == [0, 0, 0, 0]
    assert len(recs[5]["components"]) == 10 and len(recs[6]["components"]) == 2 and len(recs[7]["components"]) == 8
    for n in (5, 6):
        assert cert.verify_components(f"S{n}", recs[n]["components"])[0]
    tree = recs[8]["spanning_tree"]
    vertices = sorted({v for e in tree for v in e})
    assert len(vertices) == recs[8]["vertices"] == 5439
    assert cert.verify_spanning_tree("S8", vertices, tree)[0]


def test_c7_c8_single_cycles_are_isolated(results):
    for cid, family in (("C7", "S"), ("C8", "A")):
        for r in results[cid].certificate["records"]:
            if r["count"]:
                assert cert.verify_isolated(f"{family}{r['n']}", r["examples"][:2])[0], (cid, r)


def test_c9_triples(results):
    c = results["C9:S3xS3"].certificate
    assert c["vertices"] == 10 and [len(x) for x in c["components"]] == [5, 5]
    assert cert.verify_components("S3 x S3", c["components"], c["spanning_trees"])[0]
    recs = results["C9"].certificate["records"]
    assert {r["group"] for r in recs} == set(triple_specs(200))
    assert all(r["components"] == 1 for r in recs)


def test_c10_law(results):
    recs = results["C10"].certificate["records"]
    assert len(recs) == 91
    pairs = {(r["n"], r["m"]): r for r in recs}
    for n, m in [(3, 9), (9, 27), (5, 25), (3, 27)]:
        assert pairs[(n, m)]["same_odd_prime"] and pairs[(n, m)]["components"] > 1
    for n, m in [(3, 5), (9, 15), (15, 21), (25, 27)]:
        assert not pairs[(n, m)]["same_odd_prime"] and pairs[(n, m)]["components"] == 1


def test_c11_c12_c13(results):
    assert all(r["status"] == "perfect" for r in results["C11"].certificate["records"])
    assert len(results["C11"].certificate["records"]) == 200
    assert all(r["status"] == "perfect" for r in results["C12"].certificate["records"])
    gaps = results["C12:unconstructible"].certificate["orders_with_gaps"]
    assert {g["order"] for g in gaps} >= {18, 24, 36}
    for r in results["C13"].certificate["records"]:
        if r["case"] == "two-primes":
            assert r["comparability"] == {"antisymmetric": True, "matches": True, "transitive": True}


def test_c14_holes(results):
    for cid in ("C14:Z30xZ2", "C14:Z5xZ3sdZ4", "C14:Z9xZ3sdZ4"):
        c = results[cid].certificate
        assert c["status"] == "imperfect"
        assert cert.verify_hole(c["group"], c["witness"])[0], cid
        if "explicit_cycle" in c:
            assert cert.verify_hole(c["group"], c["explicit_cycle"])[0], cid
    assert results["C14:Z30xZ2"].certificate["order_pattern"] == [5, 3, 10, 15, 6]


def test_c16_sampled_colorings(results):
    recs = [r for r in results["C16"].certificate["records"] if r["vertices"] and r["vertices"] <= 80]
    assert all(r["chi"] == r["omega"] for r in results["C16"].certificate["records"])
    for rec in random.Random(2).sample(recs, 12) + [r for r in recs if r["group"] == "S5"]:
        g = build_diff_graph(build_group(rec["group"]))
        assert cert.verify_coloring(rec["group"], list(g.descriptions), rec["coloring"])[0], rec["group"]
        assert cert.verify_clique(rec["group"], rec["clique"])[0]
        assert max(rec["coloring"]) + 1 == len(rec["clique"])


def test_k1(results):
    c = results["K1"].certificate
    assert c["groups"] == 2327 and c["pairs_sampled"] > 100000


# -- certificate checkers reject bad input ---------------------------------------------------------


def test_checkers_reject_tampering():
    assert not cert.verify_edge("Z6", "2", "4")[0]
    assert not cert.verify_path("Z6", ["2", "3", "4"], 3)[0]
    assert not cert.verify_path("Z6", ["2", "4"])[0]
    assert not cert.verify_hole("Z6", ["2", "3", "4"])[0]
    assert not cert.verify_isolated("Z6", ["2"])[0]
    assert cert.verify_isolated("Z6", ["1", "5"])[0]
    assert not cert.verify_components("Z6", [["2", "3"]])[0]  # 4 missing
    assert not cert.verify_components("S3 x S3", [["((1 2 3), ())"]])[0]
    assert cert.verify_components("Z6", [["2", "3", "4"]], [[["2", "3"], ["3", "4"]]])[0]
    assert not cert.verify_spanning_tree("Z6", ["2", "3", "4"], [["2", "3"], ["2", "4"]])[0]
    assert not cert.verify_bfs_layers("Z6", [["2"], ["3", "4"]])[0]
    assert cert.verify_bfs_layers("Z6", [["2"], ["3"], ["4"]])[0]
    assert not cert.verify_coloring("Z6", ["2", "3", "4"], [0, 0, 1])[0]
    assert cert.verify_coloring("Z6", ["2", "3", "4"], [0, 1, 0])[0]
    assert not cert.verify_clique("Z6", ["2", "3", "4"])[0]


# -- runner mechanics -----------------------------------------------------------------------------


def test_filter_semantics():
    assert selected_checks("C8") == ["C8"]
    assert selected_checks("C1*") == ["C1", "C10", "C11", "C12", "C13", "C14", "C15", "C16"]
    assert selected_checks("C8:A18") == ["C8"]
    assert [r.id for r in run_suite("C8")] == ["C8", "C8:A18"]
    assert [r.id for r in run_suite("C8:A18")] == ["C8:A18"]
    assert run_suite("nothing") == []


def test_small_max_order_and_worker_independence():
    one = render_report(run_suite("C1*", max_order=40, workers=1), 40, 0)
    two = render_report(run_suite("C1*", max_order=40, workers=2), 40, 0)
    assert one == two
    with pytest.raises(ValueError):
        run_suite("C1", max_order=0)


def test_failing_check_sets_exit_code(monkeypatch, schema):
    def broken(ctx):
        return [_verdict("C99", "a claim that fails", [{"group": "Z6", "why": "planted"}], {})]

    monkeypatch.setitem(CHECKS, "C99", broken)
    res = run_suite("C99")
    assert exit_code(res) == 1 and res[0].status == "FAIL"
    data = json.loads(render_report(res, 200, 0))
    schema("report", data)
    assert data["results"][0]["certificate"]["counterexamples"] == [{"group": "Z6", "why": "planted"}]
    assert exit_code([CheckResult("C1", "x", "PASS"), CheckResult("C8:A18", "y", "SKIPPED", "scale")]) == 0


def test_imported_cayley_tables(tmp_path):
    export_cayley(build_group("sd(Z7,Z12,3)"), tmp_path / "g84.txt")
    res = run_suite("C1", cayley_dir=tmp_path)
    recs = res[0].certificate["records"]
    assert len(recs) == 2328
    rec = next(r for r in recs if r["group"].startswith("cayley("))
    assert not rec["eppo"] and rec["vertices"] == 49
