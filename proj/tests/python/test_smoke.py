from fractions import Fraction

import pytest

import lieinner


def unit(n, i, j):
    return lieinner.matrix([[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(n)])


def test_delta_rows():
    assert lieinner.delta("E8")["fundamental"] == ["4", "5", "7", "10", "8", "6", "4", "2"]
    assert lieinner.delta("B", 5)["fundamental"][-1] == "2"
    m = lieinner.delta("A", 12, [0, 1] + [0] * 10)["module"]
    assert m["delta"] == "2"
    assert m["class"] == "non_diagonal"


def test_check_inner_and_classify():
    ideal = {"algebra": {"kind": "sl", "n": 3}, "elements": [unit(3, 0, 1), unit(3, 0, 2)]}
    r = lieinner.check_inner(ideal)
    assert r["inner"] and r["square_zero"] and r["regular"] and r["I3V_zero"]
    assert r["dim"] == 2
    k = lieinner.classify_sl(ideal)
    assert k["verified"]
    e = [Fraction(x) for x in k["e"]["entries"]]
    assert sum(e[::4]) == 1

    bad = {"algebra": {"kind": "sl", "n": 3}, "elements": [unit(3, 0, 1), unit(3, 1, 2)]}
    assert not lieinner.check_inner(bad)["inner"]


def test_invalid_input_raises():
    with pytest.raises(ValueError):
        lieinner.check_inner({"algebra": {"kind": "gl", "n": 3}, "elements": []})
    with pytest.raises(ValueError):
        lieinner.limit_demo("1,x,0")
    with pytest.raises(ValueError):
        lieinner.verify_suite(minimal=True, only=[11])


def test_embeddings():
    doubling = {"source": {"kind": "sl", "n": 3}, "map": {"type": "blocks", "blocks": ["natural", "natural"]}}
    a = lieinner.analyze_embedding(doubling)
    assert a["diagonal"] and a["plain"] and a["delta"] == "1"
    dual = {"source": {"kind": "sl", "n": 3}, "map": {"type": "blocks", "blocks": ["natural", "dual"]}}
    d = lieinner.analyze_embedding(dual)
    assert d["diagonal"] and not d["plain"]
    adj = lieinner.analyze_embedding({"source": {"kind": "sl", "n": 4}, "map": {"type": "adjoint"}})
    assert not adj["diagonal"] and adj["delta"] == "2"


def test_finitary_and_limits():
    f = lieinner.finitary_demo(seed=3, samples=5)
    assert f["WstarU"]["report"]["passed"]
    assert f["minimal_skew"]["report"]["passed"]
    assert f["minimal_symmetric"]["report"]["passed"]
    plain = lieinner.limit_demo("2,0,0", depth=3)
    assert plain["ranks"] == [1, 2, 4]
    assert plain["chain"]["passed"] and plain["levels"]["passed"]
    finitary = lieinner.limit_demo("1,0,1", depth=3, kind="orthogonal")
    assert finitary["ranks"] == [1, 1, 1] and finitary["rank_constant"]


def test_minimal_suite_deterministic():
    a = lieinner.verify_suite(seed=5, minimal=True)
    b = lieinner.verify_suite(seed=5, minimal=True)
    assert a == b
    assert a["schema_version"] == lieinner.SCHEMA_VERSION
    assert len(a["criteria"]) == lieinner.CRITERION_COUNT
    assert a["passed"]
