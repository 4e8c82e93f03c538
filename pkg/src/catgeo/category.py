"""Finite categories: representation, builders, and axiom validation.

A category is stored as objects, arrows (identities included) and a total
composition table over composable ordered pairs.  The table maps the pair
(f, g) with cod(f) = dom(g) to the composite g∘f, i.e. "f first, then g".
Arrow equality is id equality; the table is the sole source of composite
identification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import CyclicGraph, NontrivialCycle, ParseError

IDENTITY_PREFIX = "id:"

#: separator used in the ids of composite path arrows of free categories
PATH_SEP = "∘"  # "∘"


@dataclass(frozen=True)
class Arrow:
    id: str
    dom: str
    cod: str
    is_identity: bool = False


@dataclass(frozen=True)
class Violation:
    kind: str  # one of: totality, closure, dom-cod, associativity, unit
    detail: str

    def __str__(self):
        return "%s: %s" % (self.kind, self.detail)


class FiniteCategory:
    """Immutable finite category with a total composition table."""

    def __init__(
        self,
        objects: Sequence[str],
        arrows: Iterable[Arrow],
        table: Mapping[tuple[str, str], str],
        mode: str,
    ):
        self.objects = tuple(objects)
        self.arrows = {a.id: a for a in arrows}
        self.table = dict(table)
        self.mode = mode

    def arrow(self, arrow_id: str) -> Arrow:
        return self.arrows[arrow_id]

    def has_arrow(self, arrow_id: str) -> bool:
        return arrow_id in self.arrows

    def identity(self, obj: str) -> str:
        return IDENTITY_PREFIX + obj

    def is_identity(self, arrow_id: str) -> bool:
        return self.arrows[arrow_id].is_identity

    def non_identity_arrows(self) -> list[str]:
        """Non-identity arrow ids in the canonical (lexicographic) order."""
        return sorted(a.id for a in self.arrows.values() if not a.is_identity)

    def composable(self, f: str, g: str) -> bool:
        return self.arrows[f].cod == self.arrows[g].dom

    def __repr__(self):
        return "FiniteCategory(mode=%r, objects=%d, arrows=%d)" % (
            self.mode,
            len(self.objects),
            len(self.arrows),
        )


def compose(category: FiniteCategory, f: str, g: str) -> str:
    """Return g∘f, the composite of f followed by g.

    Raises NotComposable when cod(f) != dom(g).
    """
    from .errors import NotComposable, UnknownArrow

    for a in (f, g):
        if not category.has_arrow(a):
            raise UnknownArrow("no arrow %r in category" % a)
    if not category.composable(f, g):
        raise NotComposable(
            "cod(%s) = %s but dom(%s) = %s"
            % (f, category.arrow(f).cod, g, category.arrow(g).dom)
        )
    return category.table[(f, g)]


def _check_presentation(objects, generators):
    if len(set(objects)) != len(objects):
        raise ParseError("duplicate object ids")
    for obj in objects:
        if not obj or obj.startswith(IDENTITY_PREFIX):
            raise ParseError("bad object id %r" % obj)
    obj_set = set(objects)
    seen = set()
    for gid, dom, cod in generators:
        if not gid or gid.startswith(IDENTITY_PREFIX):
            raise ParseError("bad generator id %r" % gid)
        if gid in seen:
            raise ParseError("duplicate generator id %r" % gid)
        seen.add(gid)
        if dom not in obj_set or cod not in obj_set:
            raise ParseError("generator %r has undeclared endpoint" % gid)


def _identities(objects) -> list[Arrow]:
    return [Arrow(IDENTITY_PREFIX + o, o, o, is_identity=True) for o in objects]


def _fill_identity_entries(table, arrows):
    """Add the unit-law entries for every arrow, identities included."""
    for a in arrows:
        table[(IDENTITY_PREFIX + a.dom, a.id)] = a.id  # a ∘ id_dom(a)
        table[(a.id, IDENTITY_PREFIX + a.cod)] = a.id  # id_cod(a) ∘ a


def build_thin(objects: Sequence[str], generators: Sequence[tuple[str, str, str]]) -> FiniteCategory:
    """Thin category: one arrow a→b per nonempty generator path, a != b.

    Generator arrows keep their given ids; derived arrows are named
    "<dom>-><cod>" (unambiguous, since a thin category has at most one
    arrow per ordered object pair).  Raises NontrivialCycle when the
    reachability relation is not antisymmetric.
    """
    _check_presentation(objects, generators)
    succ: dict[str, set[str]] = {o: set() for o in objects}
    for _, dom, cod in generators:
        succ[dom].add(cod)

    # nonempty-path reachability by DFS from every object
    reach: dict[str, set[str]] = {}
    for start in objects:
        seen: set[str] = set()
        stack = list(succ[start])
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            stack.extend(succ[node])
        reach[start] = seen

    for a in objects:
        if a in reach[a]:
            raise NontrivialCycle("object %r lies on a directed cycle" % a)
        for b in reach[a]:
            if a in reach[b]:
                raise NontrivialCycle("objects %r and %r reach each other" % (a, b))

    generator_name = {}
    for gid, dom, cod in generators:
        generator_name.setdefault((dom, cod), gid)

    pair_to_id = {}
    arrows = _identities(objects)
    for a in objects:
        for b in sorted(reach[a]):
            aid = generator_name.get((a, b), "%s->%s" % (a, b))
            pair_to_id[(a, b)] = aid
            arrows.append(Arrow(aid, a, b))

    table: dict[tuple[str, str], str] = {}
    for (a, b), f in pair_to_id.items():
        for (c, d), g in pair_to_id.items():
            if b == c:
                table[(f, g)] = pair_to_id[(a, d)]
    _fill_identity_entries(table, arrows)
    return FiniteCategory(objects, arrows, table, "thin")


def build_free(objects: Sequence[str], generators: Sequence[tuple[str, str, str]]) -> FiniteCategory:
    """Free category on an acyclic multigraph: arrows are nonempty paths.

    A path through edges g1, g2, ..., gn (in traversal order) gets the id
    "gn∘...∘g2∘g1"; composition is path concatenation.  Raises CyclicGraph
    when the multigraph has a directed cycle.
    """
    _check_presentation(objects, generators)
    for gid, _, _ in generators:
        if PATH_SEP in gid:
            raise ParseError("generator id %r contains the reserved separator" % gid)

    out_edges: dict[str, list[tuple[str, str]]] = {o: [] for o in objects}
    for gid, dom, cod in generators:
        out_edges[dom].append((gid, cod))

    # cycle check (three-color DFS over the underlying digraph)
    state = {o: 0 for o in objects}  # 0 unseen, 1 active, 2 done

    def visit(node):
        state[node] = 1
        for _, nxt in out_edges[node]:
            if state[nxt] == 1:
                raise CyclicGraph("directed cycle through %r" % nxt)
            if state[nxt] == 0:
                visit(nxt)
        state[node] = 2

    for o in objects:
        if state[o] == 0:
            visit(o)

    # enumerate all nonempty paths; acyclicity keeps this finite
    paths: list[tuple[tuple[str, ...], str, str]] = []

    def extend(seq, start, node):
        for gid, nxt in out_edges[node]:
            new = seq + (gid,)
            paths.append((new, start, nxt))
            extend(new, start, nxt)

    for o in objects:
        extend((), o, o)

    def path_id(seq):
        return PATH_SEP.join(reversed(seq))

    arrows = _identities(objects)
    seq_to_id = {}
    for seq, dom, cod in paths:
        aid = path_id(seq)
        seq_to_id[seq] = aid
        arrows.append(Arrow(aid, dom, cod))

    table: dict[tuple[str, str], str] = {}
    for seq_f, dom_f, cod_f in paths:
        for seq_g, dom_g, cod_g in paths:
            if cod_f == dom_g:
                table[(seq_to_id[seq_f], seq_to_id[seq_g])] = seq_to_id[seq_f + seq_g]
    _fill_identity_entries(table, arrows)
    return FiniteCategory(objects, arrows, table, "free")


def build_explicit(
    objects: Sequence[str],
    arrows: Sequence[tuple[str, str, str]],
    compositions: Mapping[tuple[str, str], str],
) -> FiniteCategory:
    """Assemble a category verbatim from a full non-identity composition table.

    `compositions` maps (f, g) to g∘f and must cover exactly the composable
    non-identity pairs; identity entries are filled in by the unit law.
    The result is not validated here; run validate_axioms separately.
    """
    _check_presentation(objects, arrows)
    all_arrows = _identities(objects) + [Arrow(aid, dom, cod) for aid, dom, cod in arrows]
    by_id = {a.id: a for a in all_arrows}

    required = {
        (f.id, g.id)
        for f in all_arrows
        for g in all_arrows
        if not f.is_identity and not g.is_identity and f.cod == g.dom
    }
    given = set(compositions)
    if given - required:
        pair = sorted(given - required)[0]
        raise ParseError("composition entry %s is not a composable non-identity pair" % (pair,))
    if required - given:
        pair = sorted(required - given)[0]
        raise ParseError("incomplete composition table: missing entry %s" % (pair,))
    for pair, result in compositions.items():
        if result not in by_id:
            raise ParseError("composition %s names unknown arrow %r" % (pair, result))

    table = dict(compositions)
    _fill_identity_entries(table, all_arrows)
    return FiniteCategory(objects, all_arrows, table, "explicit")


def validate_axioms(category: FiniteCategory) -> list[Violation]:
    """Check the category axioms exhaustively; an empty list means valid.

    Covers: table totality and closure over composable pairs, dom/cod
    consistency of composites, associativity over all composable triples,
    and the unit law for every arrow.
    """
    violations: list[Violation] = []
    arrows = list(category.arrows.values())
    table = category.table

    for f in arrows:
        for g in arrows:
            key = (f.id, g.id)
            if f.cod == g.dom:
                if key not in table:
                    violations.append(Violation("totality", "missing entry (%s, %s)" % key))
                    continue
                result = table[key]
                if result not in category.arrows:
                    violations.append(
                        Violation("dom-cod", "entry (%s, %s) names unknown arrow %r" % (f.id, g.id, result))
                    )
                    continue
                r = category.arrow(result)
                if r.dom != f.dom or r.cod != g.cod:
                    violations.append(
                        Violation(
                            "dom-cod",
                            "(%s, %s) -> %s has type %s->%s, expected %s->%s"
                            % (f.id, g.id, result, r.dom, r.cod, f.dom, g.cod),
                        )
                    )
            elif key in table:
                violations.append(Violation("closure", "entry (%s, %s) for non-composable pair" % key))

    def lookup(f, g):
        return table.get((f, g))

    for f in arrows:
        left = lookup(category.identity(f.dom), f.id)
        if left != f.id:
            violations.append(Violation("unit", "%s ∘ id_%s = %s, expected %s" % (f.id, f.dom, left, f.id)))
        right = lookup(f.id, category.identity(f.cod))
        if right != f.id:
            violations.append(Violation("unit", "id_%s ∘ %s = %s, expected %s" % (f.cod, f.id, right, f.id)))

    for f in arrows:
        for g in arrows:
            if f.cod != g.dom:
                continue
            gf = lookup(f.id, g.id)
            for k in arrows:
                if g.cod != k.dom:
                    continue
                kg = lookup(g.id, k.id)
                if gf is None or kg is None or gf not in category.arrows or kg not in category.arrows:
                    continue  # already reported as totality/dom-cod
                lhs = lookup(gf, k.id)
                rhs = lookup(f.id, kg)
                if lhs != rhs:
                    violations.append(
                        Violation(
                            "associativity",
                            "(%s, %s, %s): %s != %s" % (f.id, g.id, k.id, lhs, rhs),
                        )
                    )
    return violations
