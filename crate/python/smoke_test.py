"""Smoke test for the coxbruhat extension module.

Build and install first:  cd crates/py && maturin build --release && pip install <wheel>
"""

import coxbruhat


def main():
    a3 = coxbruhat.CoxeterSystem.from_type("A3")
    w = a3.element("s1 s2 s3 s2 s1")
    assert str(w) == "s1s2s3s2s1" and w.length == 5

    table = {str(x): str(m) for x, m in a3.shifted_max_set(w, "s1,s2")}
    assert table == {"e": "s1s2s1", "s3": "s1s2s1", "s2s3": "s2s1", "s1s2s3": "s2s1"}, table

    q, m = a3.max_in_coset(w, "s2s3", ["s1", "s2"])
    assert (str(q), str(m)) == ("s2s3s2s1", "s2s1")

    dec = a3.decompose_poincare(w, "s1,s2")
    assert dec["factored"] == "(1+t)(1+2t+2t^2+t^3)+(t^2+t^3)(1+2t+t^2)"
    assert dec["total"] == a3.poincare(w) == [1, 3, 5, 6, 4, 1]

    bp = a3.bp_report(w, "s1,s2")
    assert not bp["is_bp"] and str(bp["u"]) == "s2s1" and str(bp["u_max"]) == "s1s2s1"

    assert len(a3.lower_interval(w)) == 20
    assert a3.leq("s2s1", w) and not a3.leq(w, "s2s1")
    assert a3.normalize([0, 0, 1]) == a3.element("s2")
    assert "graph hasse {" in a3.hasse_dot(w, "s1,s2")

    s5 = coxbruhat.type_a(4)
    q, m = s5.max_in_coset("s3s1s2s4s3s2s1", "s4s3", "s1,s2,s4")
    assert q == s5.element("s3s1s4s3s2s1"), q

    triples, failures = coxbruhat.CoxeterSystem.from_type("I2:5").verify(5)
    assert triples > 0 and not failures

    try:
        a3.max_in_coset(w, "s1", "s1")
    except ValueError as err:
        assert str(err).startswith("NotMinimalRep")
    else:
        raise AssertionError("expected NotMinimalRep")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
