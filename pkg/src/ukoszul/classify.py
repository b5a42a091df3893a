"""Top-level classifier: is the edge ring of a graph universally Koszul?

The verdict comes from the join decomposition.  A positive answer carries
a certificate tree that rebuilds the graph; a negative one carries an
induced 2K2 or P4 together with the colon-ideal obstruction it produces in
the edge ring.  Both kinds of evidence are re-checked before returning.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any

from .betti import DEFAULT_BETTI_CAP, RATIONALS, BettiTable, FieldSpec, froberg_check, is_linear_resolution
from .errors import CapExceeded, InternalInconsistency, UKoszulError
from .formats import emit_graph6, parse_graph6
from .graph import Graph, complement
from .ideal import (
    LinearFormPair,
    ObstructionWitness,
    edge_ideal,
    obstruction_from_witness,
    verify_obstruction,
)
from .recognize import (
    ChordalityCertificate,
    EmptyGraph,
    IsolatedExtension,
    Join,
    JoinCertificate,
    Leaf,
    PatternKind,
    PatternWitness,
    is_2k2_p4_free,
    join_decompose,
    replay,
)

SCHEMA_VERSION = 1


class Verdict(str, enum.Enum):
    UK = "universally_koszul"
    NOT_UK = "not_universally_koszul"


@dataclass(frozen=True)
class Consequences:
    linear_resolution: bool
    complement_chordal: bool
    chordality: ChordalityCertificate | PatternWitness
    betti: BettiTable


@dataclass(frozen=True)
class Classification:
    graph: Graph
    verdict: Verdict
    certificate: JoinCertificate | None = None
    witness: PatternWitness | None = None
    obstruction: ObstructionWitness | None = None
    consequences: Consequences | None = None

    @property
    def is_uk(self) -> bool:
        return self.verdict is Verdict.UK

    def to_dict(self) -> dict[str, Any]:
        return classification_to_dict(self)


def classify(g: Graph, with_consequences: bool = False, fld: FieldSpec = RATIONALS, *,
             betti_cap: int | None = None) -> Classification:
    if with_consequences:
        # fail on the cap before doing any other work
        cap = DEFAULT_BETTI_CAP if betti_cap is None else betti_cap
        if g.n > cap:
            raise CapExceeded(f"{g.n} vertices exceeds the Betti cap of {cap}")

    result = join_decompose(g)
    free, _ = is_2k2_p4_free(g)
    if isinstance(result, PatternWitness):
        if free:
            raise InternalInconsistency("join decomposition failed on a (2K2,P4)-free graph")
        obstruction = obstruction_from_witness(result)
        c = Classification(g, Verdict.NOT_UK, witness=result, obstruction=obstruction)
    else:
        if not free:
            raise InternalInconsistency("join certificate produced for a graph with an induced 2K2 or P4")
        c = Classification(g, Verdict.UK, certificate=result)

    if with_consequences:
        report = froberg_check(g, fld, cap=betti_cap)
        cons = Consequences(report.linear, report.complement_chordal, report.chordality, report.table)
        if c.is_uk and not cons.linear_resolution:
            raise InternalInconsistency("universally Koszul edge ring without a linear resolution")
        c = Classification(g, c.verdict, c.certificate, c.witness, c.obstruction, cons)

    validate(c)
    return c


def validate(c: Classification) -> None:
    """Re-check the evidence stored in a classification.  Raises on failure."""
    g = c.graph
    if c.verdict is Verdict.UK:
        if c.certificate is None:
            raise InternalInconsistency("positive verdict without a certificate")
        try:
            rebuilt = replay(c.certificate, g.n)
        except ValueError as exc:
            raise InternalInconsistency(f"certificate does not replay: {exc}") from None
        if rebuilt != g:
            raise InternalInconsistency("certificate replays to a different graph")
    else:
        if c.witness is None or c.obstruction is None:
            raise InternalInconsistency("negative verdict without witness and obstruction")
        if c.witness.kind not in (PatternKind.TWO_K2, PatternKind.P4) or not c.witness.check(g):
            raise InternalInconsistency("stored witness is not an induced 2K2 or P4")
        if c.obstruction != obstruction_from_witness(c.witness):
            raise InternalInconsistency("obstruction does not match the witness")
        if not verify_obstruction(edge_ideal(g), c.obstruction):
            raise InternalInconsistency("obstruction fails in the edge ring")
    cons = c.consequences
    if cons is not None:
        if isinstance(cons.chordality, ChordalityCertificate):
            if not cons.complement_chordal or not cons.chordality.check(complement(g)):
                raise InternalInconsistency("bad elimination ordering for the complement")
        elif cons.complement_chordal or not cons.chordality.check(complement(g)):
            raise InternalInconsistency("bad chordless cycle for the complement")
        if cons.linear_resolution != is_linear_resolution(cons.betti):
            raise InternalInconsistency("linearity flag disagrees with the Betti table")
        if c.is_uk and not cons.linear_resolution:
            raise InternalInconsistency("universally Koszul edge ring without a linear resolution")


# -- JSON ----------------------------------------------------------------------


def certificate_to_dict(cert: JoinCertificate) -> dict[str, Any]:
    if isinstance(cert, Leaf):
        return {"type": "leaf", "vertex": cert.vertex}
    if isinstance(cert, IsolatedExtension):
        return {"type": "isolated_extension", "child": certificate_to_dict(cert.child),
                "isolated": list(cert.isolated)}
    if isinstance(cert, Join):
        return {"type": "join", "left": certificate_to_dict(cert.left),
                "right": certificate_to_dict(cert.right), "cross_edges": cert.cross_edges}
    if isinstance(cert, EmptyGraph):
        return {"type": "empty"}
    raise TypeError(f"not a join certificate: {cert!r}")


def certificate_from_dict(d: dict[str, Any]) -> JoinCertificate:
    t = d["type"]
    if t == "leaf":
        return Leaf(d["vertex"])
    if t == "isolated_extension":
        return IsolatedExtension(certificate_from_dict(d["child"]), tuple(d["isolated"]))
    if t == "join":
        return Join(certificate_from_dict(d["left"]), certificate_from_dict(d["right"]),
                    d["cross_edges"])
    if t == "empty":
        return EmptyGraph()
    raise ValueError(f"unknown certificate node {t!r}")


def witness_to_dict(w: PatternWitness) -> dict[str, Any]:
    return {"kind": w.kind.value, "vertices": list(w.vertices)}


def witness_from_dict(d: dict[str, Any]) -> PatternWitness:
    return PatternWitness(PatternKind(d["kind"]), tuple(d["vertices"]))


def chordality_to_dict(c: ChordalityCertificate | PatternWitness) -> dict[str, Any]:
    if isinstance(c, ChordalityCertificate):
        return {"type": "perfect_elimination_order", "order": list(c.order)}
    return {"type": "chordless_cycle", "cycle": list(c.vertices)}


def chordality_from_dict(d: dict[str, Any]) -> ChordalityCertificate | PatternWitness:
    if d["type"] == "perfect_elimination_order":
        return ChordalityCertificate(tuple(d["order"]))
    return PatternWitness(PatternKind.CHORDLESS_CYCLE, tuple(d["cycle"]))


def classification_to_dict(c: Classification) -> dict[str, Any]:
    out: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "graph6": emit_graph6(c.graph),
        "n": c.graph.n,
        "edges": [list(e) for e in c.graph.edges()],
        "verdict": c.verdict.value,
    }
    if c.certificate is not None:
        out["certificate"] = certificate_to_dict(c.certificate)
    if c.witness is not None:
        out["witness"] = witness_to_dict(c.witness)
    if c.obstruction is not None:
        o = c.obstruction
        out["obstruction"] = {"outer": list(o.outer), "form": [o.form.a, o.form.b], "case": o.case}
    if c.consequences is not None:
        cons = c.consequences
        out["consequences"] = {
            "linear_resolution": cons.linear_resolution,
            "complement_chordal": cons.complement_chordal,
            "chordality": chordality_to_dict(cons.chordality),
            "betti": cons.betti.to_dict(),
        }
    return out


def classification_from_dict(d: dict[str, Any]) -> Classification:
    """Load a serialized classification and re-validate its evidence."""
    if d.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {d.get('schema_version')!r}")
    try:
        g = parse_graph6(d["graph6"])
        obstruction = None
        if "obstruction" in d:
            o = d["obstruction"]
            obstruction = ObstructionWitness(tuple(o["outer"]), LinearFormPair(*o["form"]), o["case"])
        cons = None
        if "consequences" in d:
            cd = d["consequences"]
            cons = Consequences(cd["linear_resolution"], cd["complement_chordal"],
                                chordality_from_dict(cd["chordality"]),
                                BettiTable.from_dict(cd["betti"]))
        c = Classification(
            g,
            Verdict(d["verdict"]),
            certificate=certificate_from_dict(d["certificate"]) if "certificate" in d else None,
            witness=witness_from_dict(d["witness"]) if "witness" in d else None,
            obstruction=obstruction,
            consequences=cons,
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, UKoszulError):
            raise
        raise ValueError(f"malformed classification: {exc}") from None
    validate(c)
    return c
