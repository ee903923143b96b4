"""Exercise the compiled extension: python python/smoke_test.py"""

import triquad as t


def main():
    d = t.DivisorClass
    c = t.CurveClass

    assert t.cohomology(d(0, 0, -2)) == (0, 1, 0, 0)
    assert t.cohomology(d(2, -2, 0))[1] == 3
    assert t.ext1(d(0, 2, 1), d(2, 0, 1)) == 3
    assert t.ext1(d(0, 2, 1), d(1, 0, 2)) == 4
    assert len(t.initialized_acm_line_bundles()) == 13

    b = t.Bundle(d(2, 2, 2), c(2, 3, 3))
    assert b.chi() == b.chi_direct() == 12
    assert b.zero_locus() == (8, 1)
    assert t.Bundle.split(d(1, 0, 0), d(0, 1, 0)).c2 == c(0, 0, 1)
    try:
        t.Bundle(d(1, 0, 0), c(1, 0, 0)).chi()
    except ValueError:
        pass
    else:
        raise AssertionError("odd c1.c2 accepted")

    assert d(1, 0, 0) * d(0, 1, 0) == c(0, 0, 1)
    assert str(d(1, 2, 0)) == "h1+2h2"
    assert {d(1, 0, 0), d(1, 0, 0).permuted([0, 1, 2])} == {d(1, 0, 0)}

    labels = [r["label"] for r in t.intermediate_table()]
    assert labels == list("LMNPQRSTUVW")
    rows = t.divisorial_table()
    assert all(r["verdict"] in ("NegativeClass", "EmptyEForbidden", "GloballyGeneratedContradiction") for r in rows)

    v = t.classify(d(2, 2, 2), c(2, 3, 3))
    assert v["admissible"] and v["curve"].startswith("elliptic normal curve")
    assert not t.classify(d(1, 1, 1), c(1, 1, 1))["admissible"]
    assert (d(2, 0, 1), d(0, 2, 1)) in t.decomposable_candidates(d(2, 2, 2), h0_total=12)

    octics = t.curve_classes(8, 1)
    assert [(s.a, s.b) for s in octics] == [(3, (1, 0, 0)), (4, (2, 2, 0)), (5, (3, 2, 2))]
    assert octics[2].cremona() == octics[0]
    assert len(t.orbit_reduce(octics)) == 2
    assert octics[0].pushforward() == c(2, 3, 3)
    assert octics[0].normal_chi() == (9, 16)

    report = t.verify(only="delpezzo")
    assert report["summary"]["fail"] == 0 and report["summary"]["total"] >= 5
    print(f"ok: {report['summary']['total']} delpezzo checks, {len(rows)} divisorial rows")


if __name__ == "__main__":
    main()
