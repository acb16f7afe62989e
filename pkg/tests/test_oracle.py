import random

import pytest

from p1parts.fields import GF
from p1parts.groebner import IdealBasis
from p1parts.multiproj import (
    Part, leaf_parts, multihomogenize, partition_variety,
)
from p1parts.oracle import (
    EnumerationCapExceeded, ProjTuple, check_extension, check_partition,
    enumerate_proj_space, part_members, variety_points,
)
from p1parts.parser import parse_polynomial, parse_problem
from p1parts.poly import ProjLayout

PL2 = ProjLayout(2)
PL3 = ProjLayout(3)
F3 = GF(3)
F5 = GF(5)

EXAMPLE5 = ("char 5\nn 3\nform x\nideal:\n"
            "x_1*(x_3^2*x_2+x_3+1)\nx_3*(x_3^2*x_2+x_3+1)\n")


def P(text, layout, field):
    return parse_polynomial(text, layout, field)


def test_enumerate_proj_space():
    pts = enumerate_proj_space(3, 1)
    assert [t.coords[0] for t in pts] == [(1, 0), (0, 1), (1, 1), (2, 1)]
    assert len(enumerate_proj_space(5, 3)) == 216
    assert enumerate_proj_space(3, 0) == [ProjTuple(())]
    with pytest.raises(EnumerationCapExceeded):
        enumerate_proj_space(5, 3, cap=100)


def test_slot_values_binding():
    t = ProjTuple(((2, 1), (1, 0)))  # x_2 = 2, x_1 = inf
    # slots: y_4 y_3 y_2 y_1 z_4 z_3 z_2 z_1
    assert t.slot_values() == [2, 1, 1, 0, 2, 1, 1, 0]


def test_variety_points_hyperbola_f3():
    g = P("y_4*y_2-y_3*y_1", PL2, F3)
    pts = variety_points([g], 3, 2)
    assert len(pts) == 4
    coords = {t.coords for t in pts}
    # every x_1 pairs with the unique projective inverse x_2
    assert ((0, 1), (1, 0)) in coords  # x_2 = 0 with x_1 = inf
    assert ((1, 0), (0, 1)) in coords  # x_2 = inf with x_1 = 0
    assert ((1, 1), (1, 1)) in coords
    assert ((2, 1), (2, 1)) in coords  # 2*2 = 4 = 1 mod 3


def test_variety_points_axes_f3():
    g = P("y_4*y_2", PL2, F3)
    assert len(variety_points([g], 3, 2)) == 7


def test_variety_points_requires_pair_homogeneous():
    bad = P("y_4-1", PL2, F3)
    with pytest.raises(ValueError, match="homogeneous"):
        variety_points([bad], 3, 2)
    zbad = P("z_1", PL2, F3)
    with pytest.raises(ValueError, match="y slots"):
        variety_points([zbad], 3, 2)


def test_variety_points_wrong_characteristic():
    g = P("y_4*y_2", PL2, F3)
    with pytest.raises(ValueError, match="F_5"):
        variety_points([g], 5, 2)


def test_representative_independence():
    rng = random.Random(47)
    g = P("y_4*y_2-y_3*y_1", PL2, F5)
    for t in variety_points([g], 5, 2):
        vals = t.slot_values()
        for _ in range(3):
            lam = rng.randrange(1, 5)
            scaled = list(vals)
            for pos in (0, 1):  # rescale the pair (y_4 : y_3)
                scaled[pos] = scaled[pos] * lam % 5
            assert g.evaluate(scaled) == 0


def part_from_texts(eq_texts, neq_texts, layout, field):
    eq = IdealBasis(tuple(P(t, layout, field) for t in eq_texts), True)
    neq = tuple(P(t, layout, field) for t in neq_texts)
    return Part(0, -1, eq, neq, 0)


def test_part_members_published_parts():
    # the part where everything is affine and x_3^2 + x_3 = 0
    node17 = part_from_texts(
        ["z_1-1", "z_2", "z_3-1", "z_4", "z_5-1", "y_6^2+y_6"], [], PL3, F5)
    members = part_members(node17, 5, 3)
    assert {t.coords for t in members} == {
        ((0, 1), (0, 1), (0, 1)),
        ((4, 1), (0, 1), (0, 1)),  # x_3 = -1
    }

    node18 = part_from_texts(
        ["z_1-1", "z_2", "z_3-1", "z_4", "z_5", "y_6-1"], [], PL3, F5)
    assert {t.coords for t in part_members(node18, 5, 3)} == {
        ((1, 0), (0, 1), (0, 1)),  # x_3 = inf
    }

    unit = part_from_texts(["1"], [], PL3, F5)
    assert part_members(unit, 5, 3) == []


def test_check_partition_valid_and_induced_failures():
    prob = parse_problem(EXAMPLE5)
    tree = partition_variety(prob)
    gens = [multihomogenize(b, tree.layout) for b in prob.generators]
    report = check_partition(tree, gens, 5, 3)
    assert report.valid
    assert report.variety_size == 41
    assert report.tuples_scanned == 216
    assert "partition valid: 216 tuples scanned" == report.summary()

    # delete one leaf: coverage breaks
    broken = type(tree)(list(tree.nodes), tree.layout, tree.field)
    drop = tree.leaf_ids()[0]
    broken.nodes = [p for p in tree.nodes if p.id != drop]
    remap = {p.id: i for i, p in enumerate(broken.nodes)}
    broken.nodes = [Part(remap[p.id], remap.get(p.prev, -1), p.eq, p.neq,
                         p.frozen_level) for p in broken.nodes]
    rep2 = check_partition(broken, gens, 5, 3)
    assert rep2.missing and not rep2.valid

    # duplicate a leaf: double coverage
    dup = type(tree)(list(tree.nodes), tree.layout, tree.field)
    leaf = tree.nodes[tree.leaf_ids()[0]]
    dup.nodes = tree.nodes + [Part(len(tree.nodes), leaf.prev, leaf.eq,
                                   leaf.neq, leaf.frozen_level)]
    rep3 = check_partition(dup, gens, 5, 3)
    assert rep3.double_covered and not rep3.valid


def test_check_partition_rejects_cross_characteristic():
    prob = parse_problem(EXAMPLE5)
    tree = partition_variety(prob)
    gens = [multihomogenize(b, tree.layout) for b in prob.generators]
    with pytest.raises(ValueError, match="characteristic"):
        check_partition(tree, gens, 7, 3)


def test_check_extension_clean_fixture():
    prob = parse_problem(EXAMPLE5)
    tree = partition_variety(prob)
    for part in leaf_parts(tree):
        assert check_extension(part, 5, 3) == []


def test_check_extension_flags_truncated_part():
    # y_1 = 0 and y_2*y_1 = 1 cannot both hold: the y_1 = 0 start never
    # extends to slot 2, rationally or in the closure
    bad = part_from_texts(["z_1", "y_2*y_1-1"], [], PL2, F5)
    cex = check_extension(bad, 5, 2)
    assert cex
    assert cex[0][0] == 2  # fails when extending to slot 2
