"""Partition of a variety over projective-line coordinates into parts.

Coordinates live on the projective line: coordinate j is a ratio pair
(y_{2j} : y_{2j-1}), pinned to the canonical representative (1:0) or
(a:1) by the constraints y_{2j-1}(y_{2j-1}-1) = 0 and
(y_{2j}-1)(y_{2j-1}-1) = 0.  A *part* is a node of the decomposition
tree: equality generators (a reduced basis, possibly written with frozen
z slots for the already-chosen low coordinates), inequality constraints
in z slots, and the freezing level that created it.

Splitting rule, applied bottom coordinate first: freeze the slots below
a level, look at each generator's leading coefficient in the frozen
slots, and saturate it by the part's inequality constraints.  If what
remains could still be zero or nonzero on the part, the part does not
extend uniformly and is split in two: one child adjoins the squarefree
reduced coefficient J as an equality, the other saturates it away and
records J as an inequality.  A part where every leading coefficient at
every level is certified nonzero is a leaf: values for the low slots
then always extend to roots of the lowest generator in the next slot.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .fields import Field
from .groebner import (
    IdealBasis, buchberger, heuristic_radical, ideal_saturate,
    principal_saturate, radical_membership,
)
from .parser import ProblemSpec
from .poly import Polynomial, ProjLayout, lead_split, squarefree_part


class MaxNodesExceeded(RuntimeError):
    """Raised when the node budget runs out; carries the partial tree."""

    def __init__(self, tree):
        super().__init__(f"node budget exhausted at {len(tree.nodes)} nodes")
        self.tree = tree


@dataclass(frozen=True)
class Part:
    """One node of the decomposition.

    ``eq`` generators may use z slots below ``frozen_level``; ``neq``
    polynomials are monic, squarefree, pairwise distinct z-slot
    constraints that must stay nonzero on the part.
    """

    id: int
    prev: int
    eq: IdealBasis
    neq: tuple
    frozen_level: int


@dataclass
class PartTree:
    nodes: list
    layout: ProjLayout
    field: Field
    discarded_unit: int = 0
    discarded_empty: int = 0
    diagnostics: list = dc_field(default_factory=list)

    def path(self, node_id: int) -> tuple:
        out = []
        i = node_id
        while i >= 0:
            out.append(i)
            i = self.nodes[i].prev
        return tuple(reversed(out))

    def leaf_ids(self) -> list:
        parents = {p.prev for p in self.nodes}
        return [p.id for p in self.nodes if p.id not in parents]


@dataclass(frozen=True)
class SplitFinding:
    """A freezing level plus the generator whose lead coefficient splits."""

    level: int
    pivot: Polynomial
    J: Polynomial


def multihomogenize(b: Polynomial, layout: ProjLayout) -> Polynomial:
    """Clear denominators of b(x) with each x_j read as y_{2j}/y_{2j-1}.

    Each term c * prod x_j^{e_j} becomes
    c * prod y_{2j}^{e_j} y_{2j-1}^{d_j - e_j} with d_j the x_j-degree of
    b, making the result homogeneous of degree d_j in every pair.
    """
    if b.is_zero():
        raise ValueError("cannot homogenize the zero polynomial")
    n = layout.n
    if b.nslots != n:
        raise ValueError("input must be written in the n affine slots")
    degs = [b.degree_in(pos) for pos in range(n)]  # pos i holds x_{n-i}
    out = {}
    for mono, c in b.terms.items():
        new = [0] * (4 * n)
        for i, e in enumerate(mono):
            j = n - i
            new[layout.y_pos(2 * j)] = e
            new[layout.y_pos(2 * j - 1)] = degs[i] - e
        out[tuple(new)] = c
    return Polynomial(b.field, 4 * n, out)


def canonical_constraints(layout: ProjLayout, field: Field) -> list:
    """The 2n constraints pinning each pair to (1:0) or (a:1)."""
    out = []
    n = layout.n
    for j in range(1, n + 1):
        h = Polynomial.var(field, 4 * n, layout.y_pos(2 * j - 1))
        g = Polynomial.var(field, 4 * n, layout.y_pos(2 * j))
        one = Polynomial.const(field, 4 * n, 1)
        out.append(h * h - h)
        out.append((g - one) * (h - one))
    return out


def _half(f: Polynomial) -> int:
    if f.nslots % 4:
        raise ValueError("not a projective layout polynomial")
    return f.nslots // 2


def freeze_below(f: Polynomial, j: int) -> Polynomial:
    """Substitute y_k -> z_k for all k <= j (input must be in y form)."""
    half = _half(f)
    if not 0 <= j <= half:
        raise ValueError(f"freeze level {j} out of range")
    lo = half - j  # y positions [lo, half) hold y_j .. y_1
    out = {}
    field = f.field
    for mono, c in f.terms.items():
        new = list(mono)
        for pos in range(lo, half):
            if new[pos]:
                new[pos + half] += new[pos]
                new[pos] = 0
        key = tuple(new)
        if key in out:
            v = field.add(out[key], c)
            if v:
                out[key] = v
            else:
                del out[key]
        else:
            out[key] = c
    return Polynomial._raw(field, f.nslots, out)


def unfreeze_all(f: Polynomial) -> Polynomial:
    """Substitute z_k -> y_k for all k; inverse of freezing on z images."""
    half = _half(f)
    out = {}
    field = f.field
    for mono, c in f.terms.items():
        new = list(mono[:half])
        for pos in range(half, f.nslots):
            if mono[pos]:
                new[pos - half] += mono[pos]
        key = tuple(new) + (0,) * half
        if key in out:
            v = field.add(out[key], c)
            if v:
                out[key] = v
            else:
                del out[key]
        else:
            out[key] = c
    return Polynomial._raw(field, f.nslots, out)


def reduced_lead_coefficient(lc: Polynomial, neq) -> Polynomial:
    """Saturate a frozen leading coefficient by each inequality constraint.

    A constant result certifies the coefficient nonzero on the part;
    otherwise the returned monic polynomial is the undetermined factor.
    """
    if lc.is_zero():
        raise ValueError("leading coefficient is zero")
    m = lc.monic()
    for q in neq:
        if m.is_constant():
            break
        m = principal_saturate(m, q)
    return m


def _scan_key(g: Polynomial):
    return (g.lead_monomial(), sorted(g.terms.items()))


def _support_level(g_y: Polynomial, half: int) -> int:
    """Highest slot level occurring in an unfrozen polynomial."""
    slots = g_y.occurring_slots()
    if not slots:
        return 0
    return max(half - pos for pos in slots)


def _low_constraints(eq_y, level: int, half: int):
    """Equality generators whose whole support sits at or below a level."""
    return tuple(g for g in eq_y if _support_level(g, half) <= level)


def split_scan(part: Part) -> Optional[SplitFinding]:
    """Find the first freezing level whose lead coefficients force a split.

    Levels are tried bottom-up; within a level the (re)frozen generators
    are scanned in increasing lex order of leading monomial, skipping the
    fully frozen ones.  A coefficient counts as certified nonzero when
    saturating by the inequality constraints at or below the level leaves
    a constant, or when it is invertible modulo the equality generators
    supported at or below the level.  Only level-local information may
    certify, because the extension step starts from partial solutions
    that satisfy exactly the constraints living down there.  Returns None
    when every coefficient at every level is certified, which makes the
    part a leaf.
    """
    if not part.eq.generators:
        return None
    eq_y = tuple(unfreeze_all(g) for g in part.eq.generators)
    half = _half(eq_y[0])
    neq_levels = [(q, _support_level(unfreeze_all(q), half)) for q in part.neq]
    for level in range(1, half):
        frozen = sorted(
            (freeze_below(g, level) for g in eq_y), key=_scan_key)
        low_neq = [q for q, lvl in neq_levels if lvl <= level]
        low_eq = _low_constraints(eq_y, level, half)
        for g in frozen:
            mono, lc = lead_split(g, half)
            if not any(mono):
                continue  # fully frozen generator
            m = reduced_lead_coefficient(lc, low_neq)
            if m.is_constant():
                continue
            J = squarefree_part(m)
            if buchberger(low_eq + (unfreeze_all(J),)).is_unit():
                continue  # J vanishes nowhere on the low-level solution set
            return SplitFinding(level, g, J)
    return None


def normalize_neq(neq, eq: IdealBasis):
    """Squarefree, monic, irredundant inequality constraints, or None.

    None signals an empty part: some constraint vanishes identically on
    the equality set.  A constraint is dropped as redundant when the
    equality generators supported at or below its own top level already
    keep it from vanishing; redundancy against higher-level generators
    does not count, since the constraint still carries information for
    the extension steps below them.  Membership tests run on fully
    unfrozen images, a z slot and its y twin naming the same coordinate.
    """
    eq_y = tuple(unfreeze_all(g) for g in eq.generators)
    half = _half(eq_y[0]) if eq_y else (_half(neq[0]) if neq else 0)
    out = []
    for q in neq:
        s = squarefree_part(q)
        if s.is_constant():
            continue  # a nonzero constant is never zero: redundant
        q_y = unfreeze_all(s)
        if radical_membership(q_y, eq_y):
            return None
        low_eq = _low_constraints(eq_y, _support_level(q_y, half), half)
        if buchberger(low_eq + (q_y,)).is_unit():
            continue
        if s not in out:
            out.append(s)
    out.sort(key=_scan_key)
    return tuple(out)


def _closed(basis: IdealBasis, radical: bool) -> IdealBasis:
    return heuristic_radical(basis) if radical else basis


def root_part(problem: ProblemSpec, radical: bool = True) -> Part:
    """Node 0: homogenized generators plus the canonical constraints."""
    layout = ProjLayout(problem.n)
    if problem.form == "x":
        gens = [multihomogenize(b, layout)
                for b in problem.generators if not b.is_zero()]
    else:
        gens = [b for b in problem.generators if not b.is_zero()]
    gens += canonical_constraints(layout, problem.field)
    eq = _closed(buchberger(gens), radical)
    return Part(0, -1, eq, (), 0)


def partition_variety(problem: ProblemSpec, *, max_nodes: int = 10000,
                      radical: bool = True) -> PartTree:
    """Decompose the variety of the problem ideal into disjoint parts.

    Nodes are processed first-in first-out; each split appends the
    equality child before the inequality child, so node numbering is
    deterministic.  Children that collapse to the unit ideal or whose
    inequality set is unsatisfiable are discarded and counted.
    """
    layout = ProjLayout(problem.n)
    tree = PartTree([], layout, problem.field)
    root = root_part(problem, radical)
    if root.eq.is_unit():
        tree.diagnostics.append("inconsistent input: equality ideal is the unit ideal")
        return tree
    tree.nodes.append(root)

    def append_child(parent: Part, eq: IdealBasis, neq, level: int, branch: str):
        if eq.is_unit():
            tree.discarded_unit += 1
            tree.diagnostics.append(
                f"discarded unit-ideal {branch} child of node {parent.id}")
            return
        cleaned = normalize_neq(neq, eq)
        if cleaned is None:
            tree.discarded_empty += 1
            tree.diagnostics.append(
                f"discarded empty {branch} child of node {parent.id}")
            return
        if len(tree.nodes) >= max_nodes:
            raise MaxNodesExceeded(tree)
        tree.nodes.append(Part(len(tree.nodes), parent.id, eq, cleaned, level))

    current = 0
    while current < len(tree.nodes):
        part = tree.nodes[current]
        finding = split_scan(part)
        if finding is not None:
            level, J = finding.level, finding.J
            frozen = tuple(
                freeze_below(unfreeze_all(g), level) for g in part.eq.generators)
            eq_a = _closed(buchberger(frozen + (J,)), radical)
            append_child(part, eq_a, part.neq, level, "equality")
            eq_b = _closed(ideal_saturate(frozen, J), radical)
            append_child(part, eq_b, part.neq + (J,), level, "inequality")
        current += 1
    return tree


def leaf_parts(tree: PartTree) -> list:
    """Parts never referenced as a parent, in node order."""
    return [tree.nodes[i] for i in tree.leaf_ids()]
