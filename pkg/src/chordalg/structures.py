"""Combinatorial objects: skeletons, dashed graphs, colored characters,
chord diagrams on skeletons, closed trivalent graphs.

Conventions used throughout:

* A dashed graph with ``e`` external (univalent) and ``i`` internal
  (trivalent) vertices is stored on a flat half-edge numbering: external
  vertex ``k`` owns the single half-edge ``k``; internal vertex ``j`` owns
  the three half-edges ``e + 3j + t`` for ``t = 0, 1, 2`` listed in the
  vertex's cyclic order.  Edges are a perfect matching on half-edges,
  stored as a sorted tuple of sorted pairs.

* Cyclic rotations of a vertex triple are identified by canonicalization
  (entering a fresh vertex always lands on local position 0).  Reversals
  of a triple are NOT identified: antisymmetry is a linear relation, not
  an identification.

* Circle components carry a base point used only for encoding; the
  canonical form minimizes over all rotations.

Degree of a graph is half its vertex count; it is an integer because each
edge has two endpoints and vertices have odd valence 1 or 3 only when the
total count is even (enforced).
"""

from __future__ import annotations

import itertools
from collections import deque

from .errors import ArgumentError, StructuralError

INTERVAL = "I"
CIRCLE = "O"


def _edge_map(edges):
    m = {}
    for a, b in edges:
        if a in m or b in m or a == b:
            raise StructuralError("half-edge used twice: %r" % ((a, b),))
        m[a] = b
        m[b] = a
    return m


def _check_graph(ne, nint, edges, allow_closed=False):
    m = _edge_map(edges)
    total = ne + 3 * nint
    if sorted(m) != list(range(total)):
        raise StructuralError("edges are not a perfect matching on %d half-edges" % total)
    if (ne + nint) % 2 != 0:
        raise StructuralError("odd total vertex count; degree undefined")
    # every connected component must contain an external vertex
    if not allow_closed and nint:
        comp = list(range(ne + nint))

        def find(x):
            while comp[x] != x:
                comp[x] = comp[comp[x]]
                x = comp[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                comp[rx] = ry

        def vert(h):
            return h if h < ne else ne + (h - ne) // 3

        for a, b in edges:
            union(vert(a), vert(b))
        roots_with_ext = {find(v) for v in range(ne)}
        for j in range(nint):
            if find(ne + j) not in roots_with_ext:
                raise StructuralError("dashed component without an external vertex")
    return m


def _vertex_of(h, ne):
    return ("E", h) if h < ne else ("V", (h - ne) // 3)


def _traverse(ne, nint, emap, ranks, seeds):
    """Deterministic traversal; returns (ext_rank_order, labels, edges).

    ``ranks``: dict external-id -> rank, or None to assign ranks by first
    visit (characters).  ``seeds``: iterable of starting half-edges in
    priority order.  Internal vertices are labeled in order of first visit;
    a fresh internal vertex is entered at local position 0, so rotations of
    its triple are quotiented out.  Returns canonical edge pairs over the
    canonical flat numbering, or None if the traversal does not reach every
    edge (caller treats that as a failed candidate).
    """
    label = {}
    rot = {}
    next_label = 0
    if ranks is None:
        ranks = {}
        assign_ranks = True
        next_rank = 0
    else:
        assign_ranks = False
        next_rank = None

    def canon_half(h):
        if h < ne:
            return ranks[h]
        j = (h - ne) // 3
        t = (h - ne) % 3
        return ne + 3 * label[j] + (t - rot[j]) % 3

    queue = deque()
    seen_ext = set()

    def visit_ext(h):
        nonlocal next_rank
        if assign_ranks and h not in ranks:
            ranks[h] = next_rank
            next_rank += 1
        seen_ext.add(h)

    def visit_int(h):
        nonlocal next_label
        j = (h - ne) // 3
        if j not in label:
            label[j] = next_label
            next_label += 1
            t = (h - ne) % 3
            rot[j] = t
            queue.append(ne + 3 * j + (t + 1) % 3)
            queue.append(ne + 3 * j + (t + 2) % 3)

    done = set()
    out = []
    for seed in seeds:
        if seed < ne:
            if seed in seen_ext:
                continue
            visit_ext(seed)
        else:
            if (seed - ne) // 3 in label:
                continue
            visit_int(seed)
        queue.appendleft(seed)
        while queue:
            h = queue.popleft()
            key = (min(h, emap[h]), max(h, emap[h]))
            if key in done:
                continue
            done.add(key)
            h2 = emap[h]
            if h2 < ne:
                visit_ext(h2)
            else:
                visit_int(h2)
            a, b = canon_half(h), canon_half(h2)
            out.append((a, b) if a <= b else (b, a))
    if len(done) != len(out) or len(out) * 2 != ne + 3 * nint:
        return None
    return tuple(sorted(out))


class Diagram:
    """Chinese character diagram on an ordered skeleton of strings/circles.

    ``skeleton``: tuple of 'I'/'O' kinds; ``legs``: tuple per component of
    how many slots it carries.  External vertex ids run over components in
    order, top-to-bottom per component (circles: from the base point).
    Instances are canonical on construction and usable as dict keys.
    """

    __slots__ = ("skeleton", "legs", "nint", "edges", "_hash")

    def __init__(self, skeleton, legs, nint, edges, _canonical=False):
        skeleton = tuple(skeleton)
        legs = tuple(legs)
        edges = tuple(sorted(tuple(sorted(e)) for e in edges))
        if len(skeleton) != len(legs):
            raise StructuralError("skeleton/legs length mismatch")
        if any(k not in (INTERVAL, CIRCLE) for k in skeleton):
            raise StructuralError("skeleton kinds must be 'I' or 'O'")
        ne = sum(legs)
        _check_graph(ne, nint, edges)
        if not _canonical:
            skeleton, legs, nint, edges = _canonical_diagram(skeleton, legs, nint, edges)
        self.skeleton = skeleton
        self.legs = legs
        self.nint = nint
        self.edges = edges
        self._hash = hash((skeleton, legs, nint, edges))

    @property
    def n_ext(self):
        return sum(self.legs)

    @property
    def degree(self):
        return (self.n_ext + self.nint) // 2

    def key(self):
        return (self.skeleton, self.legs, self.nint, self.edges)

    def sort_key(self):
        return ("D",) + self.key()

    def slot_of(self, ext):
        """(component, position) of external vertex id ``ext``."""
        c = 0
        while ext >= self.legs[c]:
            ext -= self.legs[c]
            c += 1
        return c, ext

    def ext_ids(self, comp):
        base = sum(self.legs[:comp])
        return list(range(base, base + self.legs[comp]))

    def is_g_connected(self):
        if self.nint == 0 and self.n_ext == 0:
            return True
        return n_components(self.n_ext, self.nint, self.edges) == 1

    def is_non_degenerate(self):
        return all(c > 0 for c in self.legs)

    def __eq__(self, other):
        return isinstance(other, Diagram) and self.key() == other.key()

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return "Diagram(%r, %r, %d, %r)" % (self.skeleton, self.legs, self.nint, self.edges)


def _rank_candidates(skeleton, legs):
    """All external-rank assignments compatible with homeomorphism: the
    identity on intervals, every rotation of each circle's base point."""
    per_comp = []
    base = 0
    for kind, m in zip(skeleton, legs):
        ids = list(range(base, base + m))
        base += m
        if kind == CIRCLE and m > 1:
            per_comp.append([ids[r:] + ids[:r] for r in range(m)])
        else:
            per_comp.append([ids])
    for combo in itertools.product(*per_comp):
        order = [x for grp in combo for x in grp]
        yield {ext: r for r, ext in enumerate(order)}


def _canonical_diagram(skeleton, legs, nint, edges):
    ne = sum(legs)
    emap = _edge_map(edges)
    best = None
    for ranks in _rank_candidates(skeleton, legs):
        seeds = sorted(range(ne), key=lambda h: ranks[h]) + [ne + 3 * j for j in range(nint)]
        enc = _traverse(ne, nint, emap, ranks, seeds)
        if enc is None:
            raise StructuralError("traversal failed; malformed graph")
        if best is None or enc < best:
            best = enc
    if best is None:
        best = ()
    return skeleton, legs, nint, best


def n_components(ne, nint, edges):
    nv = ne + nint
    if nv == 0:
        return 0
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def vert(h):
        return h if h < ne else ne + (h - ne) // 3

    for a, b in edges:
        ra, rb = find(vert(a)), find(vert(b))
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in range(nv)})


class Character:
    """Colored Chinese character: dashed graph with colored external
    vertices, no skeleton.  Canonical on construction; the canonical form
    lists connected components in sorted order, and within a component the
    external numbering is the traversal-minimal one."""

    __slots__ = ("colors", "nint", "edges", "_hash")

    def __init__(self, colors, nint, edges, _canonical=False):
        colors = tuple(colors)
        edges = tuple(sorted(tuple(sorted(e)) for e in edges))
        _check_graph(len(colors), nint, edges)
        if not _canonical:
            colors, nint, edges = _canonical_character(colors, nint, edges)
        self.colors = colors
        self.nint = nint
        self.edges = edges
        self._hash = hash((colors, nint, edges))

    @property
    def n_ext(self):
        return len(self.colors)

    @property
    def degree(self):
        return (self.n_ext + self.nint) // 2

    @property
    def e_grading(self):
        return self.n_ext

    def key(self):
        return (self.colors, self.nint, self.edges)

    def sort_key(self):
        return ("C",) + self.key()

    def color_counts(self):
        counts = {}
        for c in self.colors:
            counts[c] = counts.get(c, 0) + 1
        return counts

    def components(self):
        """Split into connected component Characters (each canonical)."""
        return [Character(*part) for part in _split_components(self.colors, self.nint, self.edges)]

    def is_connected(self):
        return n_components(self.n_ext, self.nint, self.edges) <= 1

    def __eq__(self, other):
        return isinstance(other, Character) and self.key() == other.key()

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return "Character(%r, %d, %r)" % (self.colors, self.nint, self.edges)


def _split_components(colors, nint, edges):
    ne = len(colors)
    nv = ne + nint
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def vert(h):
        return h if h < ne else ne + (h - ne) // 3

    for a, b in edges:
        ra, rb = find(vert(a)), find(vert(b))
        if ra != rb:
            parent[ra] = rb
    groups = {}
    for v in range(nv):
        groups.setdefault(find(v), []).append(v)
    parts = []
    for vs in groups.values():
        exts = [v for v in vs if v < ne]
        ints = [v - ne for v in vs if v >= ne]
        ext_new = {v: i for i, v in enumerate(sorted(exts))}
        int_new = {j: i for i, j in enumerate(sorted(ints))}
        ne2 = len(exts)

        def remap(h):
            if h < ne:
                return ext_new[h]
            j = (h - ne) // 3
            return ne2 + 3 * int_new[j] + (h - ne) % 3

        sub_edges = [
            (remap(a), remap(b))
            for a, b in edges
            if (vert(a) in vs if vert(a) < ne else ne + (a - ne) // 3 in vs)
        ]
        sub_colors = tuple(colors[v] for v in sorted(exts))
        parts.append((sub_colors, len(ints), sub_edges))
    return parts


def _canonical_component(colors, nint, edges):
    """Canonical encoding of a connected character piece."""
    ne = len(colors)
    emap = _edge_map(edges)
    best = None
    if ne == 0:
        raise StructuralError("character component without external vertex")
    for start in range(ne):
        ranks = None
        # traversal assigns ranks by first visit, starting at `start`;
        # remaining externals (unreachable only if disconnected) follow.
        seeds = [start] + [h for h in range(ne) if h != start]
        label = {}
        # re-run generic traversal but with rank assignment
        enc = _traverse_character(ne, nint, emap, seeds, colors)
        break
    # _traverse_character already minimizes over starts; see below
    return _traverse_character_min(ne, nint, emap, colors)


def _traverse_character_min(ne, nint, emap, colors):
    best = None
    for start in range(ne):
        seeds = [start] + [h for h in range(ne) if h != start] + [ne + 3 * j for j in range(nint)]
        res = _traverse_with_ranks(ne, nint, emap, seeds, colors)
        if res is not None and (best is None or res < best):
            best = res
    return best


def _traverse_with_ranks(ne, nint, emap, seeds, colors):
    """Like _traverse but external ranks assigned by first visit; encoding
    includes colors in rank order."""
    label = {}
    rot = {}
    ranks = {}
    state = {"next_label": 0, "next_rank": 0}
    queue = deque()

    def canon_half(h):
        if h < ne:
            return ranks[h]
        j = (h - ne) // 3
        t = (h - ne) % 3
        return ne + 3 * label[j] + (t - rot[j]) % 3

    def visit(h):
        if h < ne:
            if h not in ranks:
                ranks[h] = state["next_rank"]
                state["next_rank"] += 1
        else:
            j = (h - ne) // 3
            if j not in label:
                label[j] = state["next_label"]
                state["next_label"] += 1
                t = (h - ne) % 3
                rot[j] = t
                queue.append(ne + 3 * j + (t + 1) % 3)
                queue.append(ne + 3 * j + (t + 2) % 3)

    done = set()
    out = []
    for seed in seeds:
        if seed < ne and seed in ranks:
            continue
        if seed >= ne and (seed - ne) // 3 in label:
            continue
        visit(seed)
        queue.appendleft(seed)
        while queue:
            h = queue.popleft()
            key = (min(h, emap[h]), max(h, emap[h]))
            if key in done:
                continue
            done.add(key)
            h2 = emap[h]
            visit(h2)
            a, b = canon_half(h), canon_half(h2)
            out.append((a, b) if a <= b else (b, a))
    if len(out) * 2 != ne + 3 * nint:
        return None
    color_seq = tuple(c for _, c in sorted((r, colors[h]) for h, r in ranks.items()))
    return (color_seq, nint, tuple(sorted(out)))


def _canonical_character(colors, nint, edges):
    parts = _split_components(colors, nint, edges)
    encs = []
    for sub_colors, sub_nint, sub_edges in parts:
        emap = _edge_map(sub_edges)
        enc = _traverse_character_min(len(sub_colors), sub_nint, emap, sub_colors)
        if enc is None:
            raise StructuralError("character traversal failed")
        encs.append(enc)
    encs.sort()
    # reassemble: concatenate components in sorted order
    colors_out = []
    edges_out = []
    nint_out = sum(e[1] for e in encs)
    ne_out = sum(len(e[0]) for e in encs)
    ext_base = 0
    int_base = 0
    for color_seq, sub_nint, sub_edges in encs:
        sub_ne = len(color_seq)

        def remap(h, ext_base=ext_base, int_base=int_base, sub_ne=sub_ne):
            if h < sub_ne:
                return ext_base + h
            j = (h - sub_ne) // 3
            return ne_out + 3 * (int_base + j) + (h - sub_ne) % 3

        for a, b in sub_edges:
            edges_out.append((remap(a), remap(b)))
        colors_out.extend(color_seq)
        ext_base += sub_ne
        int_base += sub_nint
    return tuple(colors_out), nint_out, tuple(sorted(tuple(sorted(e)) for e in edges_out))


class ClosedGraph:
    """Vertex-oriented trivalent graph with no univalent vertices, plus a
    count of vertexless loop components.  Used by the 3-manifold layer."""

    __slots__ = ("nint", "edges", "loops", "_hash")

    def __init__(self, nint, edges, loops=0, _canonical=False):
        edges = tuple(sorted(tuple(sorted(e)) for e in edges))
        _check_graph(0, nint, edges, allow_closed=True)
        if loops < 0:
            raise ArgumentError("negative loop count")
        if not _canonical:
            nint, edges = _canonical_closed(nint, edges)
        self.nint = nint
        self.edges = edges
        self.loops = loops
        self._hash = hash((nint, edges, loops))

    @property
    def degree(self):
        """Half the vertex count of the non-loop part."""
        return self.nint // 2

    def key(self):
        return (self.nint, self.edges, self.loops)

    def sort_key(self):
        return ("G",) + self.key()

    def drop_loops(self, loops=0):
        return ClosedGraph(self.nint, self.edges, loops, _canonical=True)

    def components(self):
        parts = _split_components((), self.nint, self.edges)
        return [ClosedGraph(p[1], p[2]) for p in parts]

    def disjoint_union(self, other):
        ne = 0
        off = 3 * self.nint
        edges = list(self.edges) + [(a + off, b + off) for a, b in other.edges]
        return ClosedGraph(self.nint + other.nint, edges, self.loops + other.loops)

    def __eq__(self, other):
        return isinstance(other, ClosedGraph) and self.key() == other.key()

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return "ClosedGraph(%d, %r, loops=%d)" % (self.nint, self.edges, self.loops)


def _canonical_closed(nint, edges):
    if nint == 0:
        return 0, ()
    # canonicalize per connected component, then sort
    parts = _split_components((), nint, edges)
    encs = []
    for _, sub_nint, sub_edges in parts:
        emap = _edge_map(sub_edges)
        best = None
        for j in range(sub_nint):
            for t in range(3):
                seeds = [3 * j + t]
                res = _traverse(0, sub_nint, emap, {}, seeds)
                if res is not None and (best is None or res < best):
                    best = res
        encs.append((sub_nint, best))
    encs.sort()
    edges_out = []
    int_base = 0
    for sub_nint, sub_edges in encs:
        for a, b in sub_edges:
            edges_out.append((a + 3 * int_base, b + 3 * int_base))
        int_base += sub_nint
    return nint, tuple(sorted(edges_out))


EMPTY_CHARACTER = None  # set below


def empty_character():
    return Character((), 0, ())


def empty_diagram(skeleton):
    return Diagram(skeleton, (0,) * len(skeleton), 0, ())
