"""Cross-checks between the combinatorial layer and the brute-force oracle.

``verify_graph`` runs every check applicable to the input's regime and
returns a structured diff; an empty diff means full agreement.  Faults can
be injected - flipping one differential sign, dropping one relation from
the oracle's algebra - to confirm that the harness actually detects
corruption.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from ..classify import koszul_report, quadratic_family_check, two_d_conditions
from ..graph import BrauerGraph, is_length_graded, is_reduced, validate
from ..presentation import homogeneity, present
from ..resolution import (
    CanonicalExtElement,
    _Chain,
    delta,
    ext_dim,
    generation_certificate,
    generation_degrees,
    obstruction_element,
    resolve_simple,
    resolve_simple_2d,
)
from ..strings import dimension, iterate_syzygy, realize, syzygy
from .algebra import build_algebra, expected_projective_dims, is_redundant_relation
from .ext import (
    ExtElement,
    ProjResolution,
    canonical_element,
    element_in_span,
    yoneda_multiply,
)
from .fields import QQ
from .modules import min_resolution, projective_module, simple_module, syzygy_module


@dataclass
class Fault:
    """Deliberate corruption for harness self-tests."""

    flip_sign: Optional[tuple[str, int, int, int]] = None  # edge, degree, row, col
    drop_relation: Optional[int] = None


@dataclass
class DiffReport:
    entries: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.entries

    def add(self, check: str, detail: str, **extra):
        entry = {"check": check, "detail": detail}
        entry.update(extra)
        self.entries.append(entry)

    def to_json(self) -> dict:
        return {"ok": self.ok, "diffs": self.entries}


def _apply_fault(steps, fault: Optional[Fault], edge: str):
    if fault is None or fault.flip_sign is None:
        return steps
    fe, fn, fr, fc = fault.flip_sign
    if fe != edge:
        return steps
    out = []
    for s in steps:
        if s.degree != fn:
            out.append(s)
            continue
        diff = dict(s.differential)
        if (fr, fc) in diff:
            sign, path = diff[(fr, fc)]
            diff[(fr, fc)] = (-sign, path)
        out.append(type(s)(s.degree, s.summands, diff, s.generation_degrees))
    return out


def verify_graph(g: BrauerGraph, max_degree: int = 4, field_obj=QQ,
                 fault: Optional[Fault] = None,
                 certificate_degree: Optional[int] = None) -> DiffReport:
    report = DiffReport()
    vr = validate(g)
    if not vr.ok:
        for v in vr.violations:
            report.add("validation", v)
        return report

    pres = present(g)
    relations = list(pres.all_relations)
    if fault is not None and fault.drop_relation is not None:
        relations = [r for i, r in enumerate(relations) if i != fault.drop_relation]
    la = build_algebra(pres, field_obj, relations=relations)

    # dimension formula
    expected = expected_projective_dims(g)
    actual = {v: len(la.basis_by_source[v]) for v in la.quiver.vertices}
    if expected != actual:
        report.add("projective-dimensions",
                   f"expected {expected}, oracle got {actual}")

    if not la.check_associativity():
        report.add("associativity", "multiplication table is not associative")

    # weak symmetry: every projective has simple socle isomorphic to its top
    for e in g.edge_ids:
        P = projective_module(la, e)
        top, soc = P.top(), P.socle()
        if dict(top) != {e: 1} or dict(soc) != {e: 1}:
            report.add("selfinjectivity",
                       f"projective at {e} has top {dict(top)} and socle {dict(soc)}")

    # minimal generating set against ideal membership
    if not pres.a2_case:
        retained_ids = {id(r) for r in pres.minimal_relations}
        for i, r in enumerate(pres.all_relations):
            if r.kind != "two":
                continue
            retained = id(r) in retained_ids
            redundant = is_redundant_relation(pres, i, field_obj)
            if retained == redundant:
                report.add(
                    "minimal-generators",
                    f"relation {i} at edge {r.edge}: combinatorics "
                    f"{'keeps' if retained else 'drops'} it but the oracle says "
                    f"{'redundant' if redundant else 'essential'}",
                )

    # classification consistency
    h = homogeneity(g)
    if (h.kind == "Quadratic") != quadratic_family_check(g):
        report.add("classification",
                   f"homogeneity {h} disagrees with the quadratic families")
    if h.kind == "TwoDHomogeneous" and two_d_conditions(g, h.d) == "Neither":
        report.add("classification",
                   f"{h} but neither two-degree shape condition holds")

    reduced = is_reduced(g) and not g.is_a2_trivial() and g.quantizer_trivial()
    graded = is_length_graded(g) and la.graded

    if reduced:
        _check_strings(report, g, la, max_degree)

    no_trunc = not g.has_truncated_edge()
    if reduced and no_trunc:
        _check_resolution(report, g, la, max_degree, fault, two_d=False)
        if obstruction_element(g) is not None:
            report.add("obstruction", "no truncated edges yet a walk witness appeared")
        cert_cap = certificate_degree if certificate_degree is not None else min(4, max_degree)
        _check_certificates(report, g, la, cert_cap, max_degree)
    elif no_trunc and _uniform_d(g) and _uniform_d(g) >= 3 and g.quantizer_trivial():
        _check_resolution(report, g, la, max_degree, fault, two_d=True)
        cert_cap = certificate_degree if certificate_degree is not None else min(4, max_degree)
        _check_certificates(report, g, la, cert_cap, max_degree, two_d=True)

    if reduced and g.has_truncated_edge() and g.has_nontruncated_edge():
        _check_obstruction(report, g, la, max_degree)

    if graded and g.has_truncated_edge() and h.kind == "DHomogeneous":
        _check_nakayama_degrees(report, g, la, max_degree, h.d)

    kr = koszul_report(g)
    if kr.is_koszul and graded:
        _check_linear(report, g, la, min(5, max_degree + 1))

    return report


def _uniform_d(g: BrauerGraph) -> Optional[int]:
    vals = {g.valency(v) * g.multiplicity(v) for v in g.vertex_ids}
    return vals.pop() if len(vals) == 1 else None


def _check_strings(report: DiffReport, g, la, n_max: int):
    for e in g.edge_ids:
        trace = iterate_syzygy(g, e, n_max)
        mod = simple_module(la, e)
        for n in range(1, n_max + 1):
            om = syzygy_module(mod)[0]
            pred = trace.descriptors[n]
            want = (dimension(g, pred), dict(pred.top()), dict(pred.socle()))
            got = (om.total_dim, dict(om.top()), dict(om.socle()))
            if want != got:
                report.add(
                    "string-syzygy",
                    f"degree {n} of the simple at {e}: descriptor predicts "
                    f"{want}, oracle kernel computes {got}",
                )
            mod = om
        # reversal compatibility along the trace; literal for genuine strings,
        # up to the reversal identification for the palindromic simples
        for n in range(n_max):
            sig = trace.descriptors[n]
            lhs, rhs = syzygy(g, sig.reverse()), syzygy(g, sig).reverse()
            agree = (lhs.entries == rhs.entries if len(sig) > 1
                     else lhs.canonical() == rhs.canonical())
            if not agree:
                report.add("string-reversal",
                           f"syzygy does not commute with reversal at {sig}")
        # explicit realization of the first couple of descriptors
        for n in range(min(2, n_max) + 1):
            sig = trace.descriptors[n]
            m = realize(g, sig, la)
            if (m.total_dim, dict(m.top()), dict(m.socle())) != (
                dimension(g, sig), dict(sig.top()), dict(sig.socle())
            ):
                report.add("realize",
                           f"explicit module for {sig} disagrees with the descriptor")


def _check_resolution(report: DiffReport, g, la, n_max: int, fault, two_d: bool):
    oracle_steps = {e: min_resolution(la, e, n_max) for e in g.edge_ids}
    for e in g.edge_ids:
        resolver = resolve_simple_2d if two_d else resolve_simple
        steps = resolver(g, e, n_max + 1)
        steps = _apply_fault(steps, fault, e)
        res = ProjResolution.from_steps(la, e, steps)
        bad = res.complex_is_zero()
        if bad:
            report.add("complex",
                       f"differentials of the simple at {e} do not compose to "
                       f"zero in degrees {bad}")
        bad = res.exactness_defects(n_max)
        if bad:
            report.add("exactness",
                       f"resolution of the simple at {e} fails exactness at {bad}")
        bad = res.minimality_defects()
        if bad:
            report.add("minimality",
                       f"differential entries outside the radical in degrees {bad}")
        for n in range(n_max + 1):
            want = dict(res.summand_multiset(n))
            got = dict(oracle_steps[e][n]["summands"])
            if want != got:
                report.add("summands",
                           f"degree {n} of {e}: matrix resolution uses {want}, "
                           f"oracle cover uses {got}")
        if la.graded:
            for n in range(n_max + 1):
                want = res.generation_degrees(n)
                got = [d for d in oracle_steps[e][n]["generation_degrees"]
                       if d is not None]
                if want != got:
                    report.add("generation-degrees",
                               f"degree {n} of {e}: predicted {want}, oracle {got}")
                formula = generation_degrees(g, e, n)
                if want != formula:
                    report.add("generation-degrees",
                               f"degree {n} of {e}: summands say {want}, "
                               f"formula says {formula}")
                d_val = _uniform_d(g)
                if want and max(want) > delta(n, d_val):
                    report.add("delta-bound",
                               f"degree {n} of {e} exceeds the degree bound")
        if is_reduced(g):
            for n in range(n_max + 1):
                total = sum(ext_dim(g, e, t, n) for t in g.edge_ids)
                if total != n + 1:
                    report.add("ext-count",
                               f"degree {n} of {e}: canonical count {total} != {n + 1}")


def _check_certificates(report: DiffReport, g, la, cert_cap: int, n_max: int,
                        two_d: bool = False):
    resolver = resolve_simple_2d if two_d else resolve_simple
    resolutions = {
        e: ProjResolution.from_steps(la, e, resolver(g, e, n_max + 1))
        for e in g.edge_ids
    }
    f = la.field
    for e in g.edge_ids:
        chain = _Chain(g, e, cert_cap)
        for n in range(1, cert_cap + 1):
            for i in range(-n, n + 1, 2):
                elem = CanonicalExtElement(e, n, i, chain.edge[i])
                cert = generation_certificate(g, elem)
                value = _evaluate(cert, resolutions)
                target = canonical_element(resolutions[e], n, i)
                if not _scalar_multiple(value, target, f):
                    report.add(
                        "certificate",
                        f"degree {n} position {i} of {e}: the factored product "
                        f"is not a nonzero multiple of the canonical class",
                    )


def _evaluate(cert, resolutions):
    if cert.is_leaf:
        el = cert.element
        return canonical_element(resolutions[el.source], el.degree, el.position)
    left, right = cert.factors
    return yoneda_multiply(_evaluate(right, resolutions),
                           _evaluate(left, resolutions))


def _scalar_multiple(value: ExtElement, target: ExtElement, f) -> bool:
    if value.is_zero():
        return False
    v = {i: c for i, c in value.coeffs.items() if not f.is_zero(c)}
    t = {i: c for i, c in target.coeffs.items() if not f.is_zero(c)}
    if set(v) != set(t):
        return False
    ratios = {i: f.mul(v[i], f.inv(t[i])) for i in v}
    vals = list(ratios.values())
    return all(f.is_zero(f.sub(x, vals[0])) for x in vals)


def _check_obstruction(report: DiffReport, g, la, n_max: int):
    witness = obstruction_element(g)
    if witness is None:
        report.add("obstruction", "both edge kinds present but no walk witness")
        return
    n = witness["ext_degree"] - 1
    s0, sn = witness["from"], witness["to"]
    if ext_dim(g, s0, sn, n + 1) != 1:
        report.add("obstruction",
                   f"string count of the witness class is {ext_dim(g, s0, sn, n + 1)}")
    resolutions = {e: ProjResolution.from_oracle(la, e, n + 1) for e in g.edge_ids}
    r0 = resolutions[s0]
    idxs = [i for i, (e, _, _) in enumerate(r0.summands[n + 1]) if e == sn]
    if len(idxs) != 1:
        report.add("obstruction",
                   f"oracle sees {len(idxs)} copies of the witness target")
        return
    w = ExtElement(r0, n + 1, {idxs[0]: la.field.one})
    if element_in_span(resolutions, w, n):
        report.add("obstruction",
                   "witness class lies in the subalgebra generated in degrees "
                   f"at most {n}")


def _check_nakayama_degrees(report: DiffReport, g, la, n_max: int, d: int):
    for e in g.edge_ids:
        steps = min_resolution(la, e, n_max)
        for n, step in enumerate(steps):
            degs = [x for x in step["generation_degrees"] if x is not None]
            if degs != [delta(n, d)]:
                report.add("nakayama-degrees",
                           f"degree {n} of {e}: generated in {degs}, "
                           f"expected degree {delta(n, d)}")


def _check_linear(report: DiffReport, g, la, n_max: int):
    for e in g.edge_ids:
        steps = min_resolution(la, e, n_max)
        for n, step in enumerate(steps):
            degs = [x for x in step["generation_degrees"] if x is not None]
            if degs and degs != [n]:
                report.add("linearity",
                           f"degree {n} of {e}: generated in {degs}, not linearly")
