"""Smoke test for the Python bindings.

Build and install first:

    pip install maturin
    pip install --no-build-isolation -e crates/python
    python3 python/smoke_test.py
"""

import coxeter_hecke as ch


def main():
    a1 = ch.CoxeterGroup("A1")
    assert a1.structure_constants([1], [1]) == [([], [0, 1]), ([1], [-1, 1])]

    a2 = ch.CoxeterGroup("A2")
    assert a2.order == 6 and a2.rank == 2
    assert a2.normal_form([2, 1, 2]) == [1, 2, 1]
    assert a2.longest_element() == [1, 2, 1]
    assert a2.structure_constant([1, 2], [2], [1, 2]) == [-1, 1]
    assert len(a2.e_set([])["members"]) == 6
    assert ch.evaluate(a2.regular_trace([]), -1) == 6
    assert a2.regular_trace([1]) == [-3, 3]
    assert ch.evaluate(a2.regular_trace([1]), -1) == -6

    a3 = ch.CoxeterGroup("A3")
    w0 = a3.longest_element()
    for c in a3.coxeter_elements():
        assert [m["z"] for m in a3.e_set(c)["members"]] == [w0]
    assert a3.bruhat_leq([2], [1, 2, 3])
    assert not a3.bruhat_leq([1, 3], [1, 2])

    inf = ch.CoxeterGroup("I2(inf)")
    assert inf.order is None and not inf.is_finite
    report = inf.e_set([1, 2, 1], max_len=6)
    assert report["truncation"] == 6 and report["d"] == 2
    assert [m["z"] for m in report["members"]][0] == [1, 2]
    try:
        inf.e_set([1, 2])
    except ValueError as exc:
        assert "length bound" in str(exc)
    else:
        raise AssertionError("an infinite group needs a length bound")

    space = ch.FlagSpace(3, 5)
    assert space.num_flags == 186
    rows = space.count_report()
    assert rows and all(r["matched"] for r in rows)
    assert sum(space.count_y_total(w) for w in ch.CoxeterGroup("A2").elements()) == 186

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
