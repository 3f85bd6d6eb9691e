import json

import pytest

from brauergraph.graph import (
    BrauerGraph,
    BrauerGraphError,
    HalfEdge,
    HypothesisError,
    cycle_graph,
    from_dict,
    is_length_graded,
    is_reduced,
    loop_graph,
    path_graph,
    recognize_family,
    star_centers,
    star_graph,
    to_dict,
    triangle_graph,
    validate,
)


def test_validate_triangle_clean(triangle):
    assert validate(triangle).ok


def test_validate_rotation_mismatch(triangle):
    doc = to_dict(triangle)
    doc["rotation"]["alpha"] = doc["rotation"]["alpha"][:1]
    report = validate(from_dict(doc))
    assert any("rotation/incidence mismatch at alpha" in v for v in report.violations)


def test_validate_quantizer_on_truncated_edge(a4):
    doc = to_dict(a4)
    doc["quantizer"] = [{"edge": "e1", "vertex": "v2", "value": "2/3"}]
    report = validate(from_dict(doc))
    assert any("quantizer key outside X_Gamma" in v for v in report.violations)


def test_valency(triangle, a2):
    assert all(triangle.valency(v) == 2 for v in triangle.vertex_ids)
    assert loop_graph().valency("v1") == 2  # a loop counts twice
    assert a2.valency("v1") == 1


def test_is_truncated(a2, a4, triangle):
    assert a2.is_truncated("e1", "v1") and a2.is_truncated("e1", "v2")
    m2 = path_graph(2, [2, 2])
    assert not m2.is_truncated("e1", "v1") and not m2.is_truncated("e1", "v2")
    assert all(not triangle.is_truncated(e, v)
               for e in triangle.edge_ids for v in triangle.ends(e))
    assert a4.is_truncated("e1", "v1") and not a4.is_truncated("e1", "v2")


def test_successor(triangle, a4):
    assert triangle.successor("e1", "alpha") == "e3"
    assert a4.successor("e1", "v1") == "e1"  # valency one: its own successor
    assert triangle.successor("e1", "beta") == "e2"  # valency two: the other edge
    with pytest.raises(BrauerGraphError):
        triangle.successor("e1", "gamma")
    with pytest.raises(BrauerGraphError):
        loop_graph().successor("e1", "v1")  # loop needs a half-edge


def test_successor_sequence(triangle, a4):
    assert triangle.successor_sequence("e1", "alpha") == ["e1", "e3"]
    assert a4.successor_sequence("e1", "v2") == ["e1", "e2"]
    st = star_graph(3)
    assert st.successor_sequence("e1", "c") == ["e1", "e2", "e3"]
    with pytest.raises(BrauerGraphError):
        a4.successor_sequence("e1", "v1")  # truncated there


def test_successor_sequence_rotation_start_shift():
    st = star_graph(3)
    assert st.successor_sequence("e2", "c") == ["e2", "e3", "e1"]


def test_follows(triangle, a4):
    assert a4.follows("e1", "e2", "v2") == ("e3", "v3")
    assert triangle.follows("e1", "e2", "beta") == ("e3", "gamma")
    assert triangle.follows("e2", "e3", "gamma") == ("e1", "alpha")
    with pytest.raises(BrauerGraphError):
        triangle.follows("e1", "e1", "alpha")


def test_brauer_walk(a4, a2):
    walk = a4.brauer_walk("e1")
    assert walk.edges == ("e1", "e2", "e3")
    assert walk.via == ("v2", "v3")
    with pytest.raises(HypothesisError):
        a2.brauer_walk("e1")
    a3 = path_graph(3)
    assert a3.brauer_walk("e1").edges == ("e1", "e2")


def test_brauer_walk_reversal(a4):
    fwd = a4.brauer_walk("e1")
    bwd = a4.brauer_walk(fwd.edges[-1])
    assert bwd.edges == tuple(reversed(fwd.edges))


def test_predicates(triangle, a4):
    assert is_reduced(triangle) and is_length_graded(triangle)
    assert recognize_family(triangle) == "A~_n"
    assert is_reduced(a4) and is_length_graded(a4)
    assert recognize_family(a4) == "A_n"
    lp = loop_graph()
    assert not is_reduced(lp)
    assert recognize_family(lp) == "Loop"
    assert recognize_family(star_graph(3)) == "Star"
    assert recognize_family(cycle_graph(2)) == "A~_n"  # the double edge
    assert star_centers(star_graph(2)) == ["c"]
    assert set(star_centers(path_graph(2))) == {"v1", "v2"}


def test_length_graded_examples():
    assert is_length_graded(path_graph(4, [2, 1, 1, 2]))
    pend = path_graph(3, [1, 1, 1])
    assert is_length_graded(pend)
    # a pendant edge on a triangle breaks the degree match
    from conftest import pendant_triangle

    assert not is_length_graded(pendant_triangle())


def test_rotation_shift_invariance(triangle):
    doc = to_dict(triangle)
    doc["rotation"]["alpha"] = doc["rotation"]["alpha"][1:] + doc["rotation"]["alpha"][:1]
    shifted = from_dict(doc)
    assert validate(shifted).ok
    for e in triangle.edge_ids:
        for v in triangle.ends(e):
            assert shifted.successor(e, v) == triangle.successor(e, v)
            if not triangle.is_truncated(e, v):
                assert (shifted.successor_sequence(e, v)
                        == triangle.successor_sequence(e, v))


def test_serialization_roundtrip(triangle):
    doc = to_dict(triangle)
    text = json.dumps(doc)
    back = from_dict(json.loads(text))
    assert to_dict(back) == doc


def test_nilpotency_bound(triangle, star3_m2):
    assert triangle.nilpotency_bound() == 2
    assert star3_m2.nilpotency_bound() == 6
