"""String-module combinatorics on reduced graphs.

A string module is encoded by an alternating sequence of signed edges: the
plus entries are its top, the minus entries its socle, and consecutive
entries share a unique vertex through which a uniserial segment connects
them.  Syzygies act on these descriptors by rewriting both ends and
flipping every interior sign; iterating from a simple module reproduces
the minimal resolution degree by degree.

Reduced graph means multiplicity one everywhere, no loops, no multiple
edges.  The single-edge graph is reduced but carries no strings beyond the
simple one, and its syzygy operations refuse.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .graph import BrauerGraph, BrauerGraphError, HypothesisError, is_reduced

PLUS = 1
MINUS = -1

_SIGN_CHAR = {PLUS: "+", MINUS: "-"}
_CHAR_SIGN = {"+": PLUS, "-": MINUS}


@dataclass(frozen=True)
class StringDescriptor:
    """Signed edge sequence; a single positive entry denotes a simple module."""

    entries: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.entries:
            raise BrauerGraphError("a string descriptor needs at least one entry")
        if len(self.entries) == 1 and self.entries[0][1] != PLUS:
            raise BrauerGraphError("a one-entry descriptor must be positive")

    @classmethod
    def simple(cls, edge: str) -> "StringDescriptor":
        return cls(((edge, PLUS),))

    @classmethod
    def of(cls, *pairs: tuple[str, int | str]) -> "StringDescriptor":
        entries = []
        for edge, sign in pairs:
            if isinstance(sign, str):
                sign = _CHAR_SIGN[sign]
            entries.append((edge, sign))
        return cls(tuple(entries))

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def is_simple(self) -> bool:
        return len(self.entries) == 1

    def edges(self) -> tuple[str, ...]:
        return tuple(e for e, _ in self.entries)

    def signs(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.entries)

    def reverse(self) -> "StringDescriptor":
        """Same module: a string read backwards is isomorphic to itself."""
        return StringDescriptor(tuple(reversed(self.entries)))

    def star_flip(self) -> "StringDescriptor":
        """Flip every sign; acceptable again but usually a different module."""
        if self.is_simple:
            raise HypothesisError("the flip of a one-entry descriptor is not a string")
        return StringDescriptor(tuple((e, -s) for e, s in self.entries))

    def top(self) -> Counter:
        return Counter(e for e, s in self.entries if s == PLUS)

    def socle(self) -> Counter:
        if self.is_simple:
            return Counter([self.entries[0][0]])  # a simple is its own socle
        return Counter(e for e, s in self.entries if s == MINUS)

    def canonical(self) -> tuple:
        """Representative invariant under reversal, for isomorphism tests."""
        return min(self.entries, tuple(reversed(self.entries)))

    def to_json(self) -> list:
        return [[e, _SIGN_CHAR[s]] for e, s in self.entries]

    @classmethod
    def from_json(cls, doc: list) -> "StringDescriptor":
        return cls(tuple((str(e), _CHAR_SIGN[s]) for e, s in doc))

    def __repr__(self):
        return "st(" + ",".join(f"{e}{_SIGN_CHAR[s]}" for e, s in self.entries) + ")"


@dataclass
class SyzygyTrace:
    start: str
    descriptors: list[StringDescriptor]
    period: Optional[int] = None
    cap_hit: bool = False

    def to_json(self) -> dict:
        out = {
            "start": self.start,
            "trace": [
                {"degree": n, "string": d.to_json()}
                for n, d in enumerate(self.descriptors)
            ],
        }
        out["period"] = self.period
        if self.cap_hit:
            out["period_search_capped"] = True
        return out


def _require_reduced(g: BrauerGraph):
    if not is_reduced(g):
        raise HypothesisError("string calculus requires a reduced graph")
    if not g.quantizer_trivial():
        raise HypothesisError("string calculus requires the trivial quantizer")


def links(g: BrauerGraph, sigma: StringDescriptor) -> tuple[str, ...]:
    """Connecting vertices, one per adjacent entry pair."""
    out = []
    edges = sigma.edges()
    for x, y in zip(edges, edges[1:]):
        out.append(g.link(x, y))
    return tuple(out)


def validate_acceptable(g: BrauerGraph, sigma: StringDescriptor) -> bool:
    _require_reduced(g)
    entries = sigma.entries
    if len(entries) == 1:
        return entries[0][0] in g.edge_ends
    for (x, sx), (y, sy) in zip(entries, entries[1:]):
        if sx == sy:
            return False
        if x == y:
            return False
        shared = [v for v in set(g.ends(x)) if v in set(g.ends(y))]
        if len(shared) != 1:
            return False
    alphas = links(g, sigma)
    for a, b in zip(alphas, alphas[1:]):
        if a == b:
            return False
    return True


def _dist(g: BrauerGraph, top_edge: str, socle_edge: str, v: str) -> int:
    """Successor steps from the top edge to the socle edge around ``v``."""
    val = g.valency(v)
    _, pi = g.position(g.half_at(top_edge, v))
    _, pj = g.position(g.half_at(socle_edge, v))
    return (pj - pi) % val


def dimension(g: BrauerGraph, sigma: StringDescriptor) -> int:
    """Total number of composition factors of the string module."""
    _require_reduced(g)
    if sigma.is_simple:
        return 1
    total = 0
    alphas = links(g, sigma)
    for i, v in enumerate(alphas):
        (x, sx), (y, _) = sigma.entries[i], sigma.entries[i + 1]
        top_e, soc_e = (x, y) if sx == PLUS else (y, x)
        total += _dist(g, top_e, soc_e, v) + 1
    return total - (len(sigma) - 2)


def uniserial(g: BrauerGraph, top: str, socle: str) -> Optional[StringDescriptor]:
    """The unique uniserial with the given top and socle, when one exists."""
    _require_reduced(g)
    if top == socle:
        return StringDescriptor.simple(top)
    shared = [v for v in set(g.ends(top)) if v in set(g.ends(socle))]
    if not shared:
        return None
    return StringDescriptor.of((top, PLUS), (socle, MINUS))


# ----------------------------------------------------------------------
# syzygies


def syzygy_of_simple(g: BrauerGraph, e: str) -> StringDescriptor:
    """Radical of the projective cover, as a string."""
    _require_reduced(g)
    trunc = g.truncated_ends(e)
    if len(trunc) == 2:
        raise HypothesisError("syzygies on the single-edge graph are not strings")
    if trunc:
        beta = g.other_end(e, trunc[0])
        s1 = g.successor(e, beta)
        return StringDescriptor.of((s1, PLUS), (e, MINUS))
    a, b = g.ends(e)
    s_minus = g.successor(e, a)
    s_plus = g.successor(e, b)
    return StringDescriptor.of((s_minus, PLUS), (e, MINUS), (s_plus, PLUS))


def _left_action(g: BrauerGraph, sigma: StringDescriptor):
    """Decide how the left end rewrites: (edges to prepend, drop first entry?)."""
    (s1, e1), (s2, _) = sigma.entries[0], sigma.entries[1]
    alpha = g.link(s1, s2)
    if e1 == PLUS:
        if g.edge_is_truncated(s1):
            return [], False
        s0, _ = g.follows(s2, s1, alpha)
        return [(s0, PLUS)], False
    t = g.successor(s1, alpha)
    if t == s2:
        return [], True
    return [(t, PLUS)], True


def syzygy(g: BrauerGraph, sigma: StringDescriptor) -> StringDescriptor:
    """First syzygy of the string module.

    Ends rewrite by the one-sided rules, applied to the right end through
    reversal; every surviving sign flips.  A result that collapses to one
    entry is the simple module at that edge.
    """
    _require_reduced(g)
    if sigma.is_simple:
        return syzygy_of_simple(g, sigma.entries[0][0])
    left_ext, left_drop = _left_action(g, sigma)
    right_ext, right_drop = _left_action(g, sigma.reverse())
    core = [(e, -s) for e, s in sigma.entries]
    if left_drop:
        core = core[1:]
    if right_drop:
        core = core[:-1]
    entries = left_ext + core + [pair for pair in reversed(right_ext)]
    if len(entries) == 1:
        return StringDescriptor.simple(entries[0][0])
    return StringDescriptor(tuple(entries))


def iterate_syzygy(g: BrauerGraph, e: str, n: int) -> SyzygyTrace:
    """Descriptors of the syzygies of the simple module at ``e`` up to degree n."""
    _require_reduced(g)
    start = StringDescriptor.simple(e)
    out = [start]
    cur = start
    per = None
    for k in range(1, n + 1):
        cur = syzygy(g, cur)
        out.append(cur)
        if per is None and cur.canonical() == start.canonical():
            per = k
    return SyzygyTrace(e, out, period=per)


def period(g: BrauerGraph, e: str, cap: Optional[int] = None) -> Optional[int]:
    """Least p with the p-th syzygy isomorphic to the simple module, or None."""
    _require_reduced(g)
    if cap is None:
        cap = 2 * len(g.edge_ids) * g.nilpotency_bound()
    start = StringDescriptor.simple(e)
    cur = start
    for k in range(1, cap + 1):
        cur = syzygy(g, cur)
        if cur.canonical() == start.canonical():
            return k
    return None


# ----------------------------------------------------------------------
# explicit realization


def realize(g: BrauerGraph, sigma: StringDescriptor, la):
    """Build the string module as an explicit representation over the oracle.

    One basis vector per node of the string diagram: the entries plus the
    interior composition slots of each connecting uniserial segment.  Each
    segment is a chain from its plus entry down to its minus entry, and
    the arrows along the connecting path shift the chain one step down.
    """
    from .oracle import linalg
    from .oracle.modules import Module
    from .presentation import special_path

    _require_reduced(g)
    if not validate_acceptable(g, sigma):
        raise HypothesisError(f"{sigma} is not acceptable on this graph")
    quiver = la.quiver
    f = la.field

    nodes: list[str] = [e for e, _ in sigma.entries]  # vertex (= edge of g) per node
    entry_node = list(range(len(sigma)))
    chains: list[tuple[list[int], list]] = []  # (node ids top->socle, path arrows)
    alphas = links(g, sigma) if len(sigma) > 1 else ()
    for i, v in enumerate(alphas):
        (x, sx), (y, _) = sigma.entries[i], sigma.entries[i + 1]
        if sx == PLUS:
            top_e, soc_e = x, y
            top_n, soc_n = entry_node[i], entry_node[i + 1]
        else:
            top_e, soc_e = y, x
            top_n, soc_n = entry_node[i + 1], entry_node[i]
        path = special_path(g, quiver, top_e, soc_e, v)
        chain = [top_n]
        for a in path.arrows[:-1]:
            nodes.append(a.target)
            chain.append(len(nodes) - 1)
        chain.append(soc_n)
        chains.append((chain, list(path.arrows)))

    by_vertex: dict[str, list[int]] = {v: [] for v in quiver.vertices}
    for n_id, v in enumerate(nodes):
        by_vertex[v].append(n_id)
    pos = {}
    for v, ids in by_vertex.items():
        for k, n_id in enumerate(ids):
            pos[n_id] = k
    degrees = {v: [None] * len(ids) for v, ids in by_vertex.items()}
    action = {
        a.name: linalg.zeros(len(by_vertex[a.source]), len(by_vertex[a.target]), f)
        for a in quiver.arrows
    }
    for chain, arrows in chains:
        for step, a in enumerate(arrows):
            src_node, tgt_node = chain[step], chain[step + 1]
            action[a.name][pos[src_node]][pos[tgt_node]] = f.one
    return Module(la, degrees, action)
