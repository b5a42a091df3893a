import json

import pytest

from ukoszul import (
    CapExceeded,
    InternalInconsistency,
    Join,
    Leaf,
    LinearFormPair,
    ObstructionWitness,
    PatternKind,
    Verdict,
    classification_from_dict,
    classify,
    empty_graph,
)
from ukoszul.classify import Classification, validate

from conftest import labeled_upto


def test_classify_c4(named):
    c = classify(named["C4"], with_consequences=True)
    assert c.verdict is Verdict.UK and isinstance(c.certificate, Join)
    assert c.consequences.linear_resolution and c.consequences.complement_chordal


def test_classify_p4(named):
    c = classify(named["P4"], with_consequences=True)
    assert c.verdict is Verdict.NOT_UK
    assert c.obstruction == ObstructionWitness((0, 3), LinearFormPair(1, 2), "b")
    assert c.consequences.linear_resolution


def test_classify_k1(named):
    c = classify(named["K1"])
    assert c.verdict is Verdict.UK and c.certificate == Leaf(0)


def test_classify_2k2(named):
    c = classify(named["2K2"], with_consequences=True)
    assert c.witness.kind is PatternKind.TWO_K2 and c.obstruction.case == "a"
    assert not c.consequences.linear_resolution
    assert c.consequences.betti[2, 4] == 1


def test_classify_empty_graph():
    c = classify(empty_graph(0), with_consequences=True)
    assert c.is_uk


def test_consequence_cap():
    with pytest.raises(CapExceeded):
        classify(empty_graph(20), with_consequences=True)
    assert classify(empty_graph(20)).is_uk


def test_validate_rejects_tampering(named):
    c = classify(named["C4"])
    bad = Classification(named["P4"], Verdict.UK, certificate=c.certificate)
    with pytest.raises(InternalInconsistency):
        validate(bad)
    p4 = classify(named["P4"])
    bad = Classification(named["C4"], Verdict.NOT_UK, witness=p4.witness, obstruction=p4.obstruction)
    with pytest.raises(InternalInconsistency):
        validate(bad)


def test_json_roundtrip_revalidates():
    for g in labeled_upto(5):
        c = classify(g, with_consequences=g.n <= 4)
        d = json.loads(json.dumps(c.to_dict()))
        back = classification_from_dict(d)
        assert back == c


def test_json_load_detects_forgery(named):
    d = classify(named["C4"]).to_dict()
    d["graph6"] = "Ch"  # P4 instead of C4
    with pytest.raises(InternalInconsistency):
        classification_from_dict(d)
    d = classify(named["P4"]).to_dict()
    d["obstruction"]["outer"] = [0, 2]
    with pytest.raises((InternalInconsistency, ValueError)):
        classification_from_dict(d)
    with pytest.raises(ValueError):
        classification_from_dict({"schema_version": 99})
