"""Group construction, conjugacy data, subgroups.

The oracles here are deliberately primitive: set-based closure over raw
permutation composition, and O(n^2) conjugation scans straight off the
multiplication table. They share no code with the package internals.
"""

import random
from math import lcm

import numpy as np
import pytest

from charkit.errors import (
    BadParameters,
    BadSpec,
    ClosureExceedsCap,
    InvalidPermutation,
)
from charkit.groups import (
    GROUP_ORDER_CAP,
    Group,
    build_from_generators,
    builtin,
    conjugacy_classes,
    cycles_string,
    from_spec,
    group_invariants,
    is_prime,
    parse_cycles,
    subgroup_closure,
    subgroup_from_members,
    validate_group,
)


def compose(p, q):
    return tuple(p[q[i]] for i in range(len(q)))


def brute_closure(gens):
    """Independent closure oracle over concrete permutations."""
    n = len(gens[0])
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def brute_classes(G):
    """Independent conjugacy partition straight off the table."""
    n = G.order
    out = []
    assigned = [False] * n
    for g in range(n):
        if assigned[g]:
            continue
        orbit = set()
        for h in range(n):
            orbit.add(int(G.mul[G.mul[G.inv[h], g], h]))
        for m in orbit:
            assigned[m] = True
        out.append(frozenset(orbit))
    return set(out)


D8_GENS = [(1, 2, 3, 0), (2, 1, 0, 3)]
ORDER21_GENS = [
    parse_cycles("(0 1 2 3 4 5 6)", 7),
    parse_cycles("(1 2 4)(3 6 5)", 7),
]


def test_closure_matches_brute_force_oracle():
    for gens in (D8_GENS, ORDER21_GENS, [(1, 2, 0)]):
        expected = brute_closure(gens)
        G = build_from_generators(len(gens[0]), gens)
        assert G.order == len(expected)
        assert set(G.elements) == expected


def test_build_is_deterministic():
    a = build_from_generators(4, D8_GENS)
    b = build_from_generators(4, D8_GENS)
    assert a.elements == b.elements
    assert (a.mul == b.mul).all()
    assert a.spec == b.spec == "perm:4:(0 1 2 3);(0 2)"


def test_identity_is_index_zero():
    G = build_from_generators(4, D8_GENS)
    assert G.elements[0] == (0, 1, 2, 3)
    assert (G.mul[0] == np.arange(G.order)).all()


def test_invalid_permutation():
    with pytest.raises(InvalidPermutation):
        build_from_generators(3, [(0, 0, 1)])
    with pytest.raises(InvalidPermutation):
        build_from_generators(3, [(0, 1, 3)])
    with pytest.raises(InvalidPermutation):
        parse_cycles("(0 1 2", 3)
    with pytest.raises(InvalidPermutation):
        parse_cycles("(0 1)(1 2)", 3)
    with pytest.raises(InvalidPermutation):
        parse_cycles("(0 5)", 3)


def test_cycle_notation_round_trip():
    rng = random.Random(4)
    for _ in range(50):
        perm = list(range(6))
        rng.shuffle(perm)
        perm = tuple(perm)
        assert parse_cycles(cycles_string(perm), 6) == perm
    assert cycles_string((0, 1, 2)) == "()"
    assert parse_cycles("(0, 1, 2)(3 4)", 5) == parse_cycles("(0 1 2)(3 4)", 5)


def test_closure_cap():
    # A 31-cycle and a transposition generate S_31, far past the cap.
    c31 = tuple(list(range(1, 31)) + [0])
    t = tuple([1, 0] + list(range(2, 31)))
    with pytest.raises(ClosureExceedsCap):
        build_from_generators(31, [c31, t])


FAMILY_EXPECTATIONS = [
    # spec, order, exponent, abelian, center size
    ("cyclic:1", 1, 1, True, 1),
    ("cyclic:9", 9, 9, True, 9),
    ("cyclic:15", 15, 15, True, 15),
    ("dihedral:8", 8, 4, False, 2),
    ("dihedral:12", 12, 6, False, 2),
    ("quaternion:8", 8, 4, False, 2),
    ("sl23", 24, 12, False, 2),
    ("heisenberg:3", 27, 3, False, 3),
    ("heisenberg:5", 125, 5, False, 5),
    ("extraspecial_exp_p2:3", 27, 9, False, 3),
    ("metacyclic:7:3:2", 21, 21, False, 1),
    ("metacyclic:11:5:3", 55, 55, False, 1),
    # center of (C4 x C4) x| swap is the diagonal, order 4
    ("remark2:2", 32, 8, False, 4),
    ("wreath_cyclic:3", 81, 9, False, 3),
    ("direct:cyclic:2:cyclic:2", 4, 2, True, 4),
    ("direct:heisenberg:3:cyclic:5", 135, 15, False, 15),
]


@pytest.mark.parametrize("spec,order,exponent,abelian,zsize", FAMILY_EXPECTATIONS)
def test_family_invariants(spec, order, exponent, abelian, zsize):
    G = builtin(spec)
    assert G.order == order
    assert G.spec == spec
    inv = group_invariants(G)
    assert inv.exponent == exponent
    assert inv.is_abelian == abelian
    assert len(inv.center) == zsize
    assert G.metadata.odd_order == (order % 2 == 1)
    validate_group(G)


def test_family_flags():
    assert builtin("cyclic:9").metadata.nilpotent is True
    assert builtin("dihedral:8").metadata.nilpotent is True
    assert builtin("dihedral:12").metadata.nilpotent is False
    md = builtin("sl23").metadata
    assert (md.nilpotent, md.supersolvable, md.all_irreducibles_monomial) == (
        False,
        False,
        False,
    )
    md = builtin("metacyclic:7:3:2").metadata
    assert (md.nilpotent, md.supersolvable, md.all_irreducibles_monomial) == (
        False,
        True,
        True,
    )
    md = builtin("direct:heisenberg:3:cyclic:5").metadata
    assert (md.nilpotent, md.supersolvable, md.all_irreducibles_monomial) == (
        True,
        True,
        True,
    )
    assert build_from_generators(4, D8_GENS).metadata.nilpotent is None
    assert (
        build_from_generators(4, D8_GENS, nilpotent=True).metadata.nilpotent is True
    )


def test_bad_parameters():
    for spec in (
        "cyclic:0",
        "dihedral:7",
        "dihedral:4",
        "quaternion:16",
        "heisenberg:4",
        "heisenberg:2",
        "extraspecial_exp_p2:2",
        "metacyclic:7:3:3",  # 3^3 is not 1 mod 7
        "metacyclic:9:3:4",  # not coprime
        "metacyclic:7:3:1",
        "remark2:1",
        "wreath_cyclic:4",
    ):
        with pytest.raises(BadParameters):
            builtin(spec)
    for spec in ("heisenberg:17", "wreath_cyclic:5", "remark2:6"):
        with pytest.raises(ClosureExceedsCap):
            builtin(spec)


def test_bad_specs():
    for spec in (
        "",
        "nope:3",
        "cyclic",
        "cyclic:x",
        "cyclic:3:4",
        "direct:cyclic:3",
        "direct:perm:3:(0 1 2):cyclic:2",
        "perm:4",
        "perm:x:(0 1)",
    ):
        with pytest.raises(BadSpec):
            from_spec(spec)


def test_from_spec_perm_grammar():
    G = from_spec("perm:4:(0 1 2 3);(0 2)")
    assert G.order == 8
    assert from_spec(" cyclic:6 ").order == 6
    assert from_spec("perm:3:").order == 1  # no generators, trivial group


def test_conjugacy_classes_match_oracle():
    for spec in ("dihedral:8", "sl23", "metacyclic:7:3:2", "heisenberg:3", "remark2:2"):
        G = builtin(spec)
        cls = conjugacy_classes(G)
        oracle = brute_classes(G)
        ours = {
            frozenset(int(m) for m in cls.members(c)) for c in range(cls.num_classes)
        }
        assert ours == oracle


def test_class_canonical_order():
    G = builtin("dihedral:8")
    cls = G.classes
    assert cls.num_classes == 5
    assert cls.sizes[0] == 1 and cls.representatives[0] == 0
    keys = [
        (int(G.element_orders[cls.representatives[c]]), cls.sizes[c], cls.representatives[c])
        for c in range(cls.num_classes)
    ]
    assert keys == sorted(keys)
    assert sorted(cls.sizes) == [1, 1, 2, 2, 2]


def test_metacyclic_class_counts():
    # p singleton-power classes from the center of the quotient story aside,
    # a Frobenius group of order q*p has p + (q-1)/p classes.
    for q, p, k in ((7, 3, 2), (11, 5, 3), (13, 3, 3), (23, 11, 2), (31, 5, 2)):
        G = builtin(f"metacyclic:{q}:{p}:{k}")
        assert G.classes.num_classes == p + (q - 1) // p


def test_power_class_composition():
    for spec in ("metacyclic:7:3:2", "cyclic:9", "sl23"):
        G = builtin(spec)
        cls = G.classes
        e = cls.exponent
        for c in range(cls.num_classes):
            rep = cls.representatives[c]
            for m in (2, 3, e - 1):
                expected = cls.class_of[G.power(rep, m)]
                assert cls.power(m, c) == expected
        # power composition: (g^a)^b lands in the class of g^(ab)
        rng = random.Random(1)
        for _ in range(20):
            c = rng.randrange(cls.num_classes)
            a, b = rng.randrange(1, e), rng.randrange(1, e)
            rep_a = G.power(cls.representatives[c], a)
            assert cls.class_of[G.power(rep_a, b)] == cls.power(a * b, c)


def test_odd_order_squaring_permutes_classes():
    for spec in ("cyclic:9", "metacyclic:7:3:2", "heisenberg:3"):
        G = builtin(spec)
        cls = G.classes
        row = [cls.power(2, c) for c in range(cls.num_classes)]
        assert sorted(row) == list(range(cls.num_classes))
        half = (G.order + 1) // 2
        undo = [cls.power(half, c) for c in row]
        assert undo == list(range(cls.num_classes))


def test_inverse_class_is_involution():
    for spec in ("sl23", "metacyclic:7:3:2", "remark2:2"):
        cls = builtin(spec).classes
        for c in range(cls.num_classes):
            assert cls.inverse_class[cls.inverse_class[c]] == c


def test_exponent_is_lcm_of_orders():
    for spec in ("sl23", "remark2:2", "direct:heisenberg:3:cyclic:5"):
        G = builtin(spec)
        assert G.exponent == lcm(*{int(o) for o in G.element_orders})


def test_center_oracle():
    G = builtin("heisenberg:3")
    mine = set(G.center)
    oracle = {
        g
        for g in range(G.order)
        if all(G.mul[g, h] == G.mul[h, g] for h in range(G.order))
    }
    assert mine == oracle and len(mine) == 3


def test_subgroup_closure_dihedral():
    G = builtin("dihedral:8")
    # the rotation r is the first generator of the family carrier
    r = G.generator_witness[0]
    H = subgroup_closure(G, [r])
    assert H.order == 4
    assert H.index == 2
    assert H.is_normal
    assert len(H.left_transversal) == 2
    assert H.left_transversal[0] == 0
    carrier = H.as_group()
    assert carrier.order == 4
    validate_group(carrier)
    assert carrier.is_abelian


def test_subgroup_closure_nonnormal():
    G = builtin("dihedral:8")
    s = G.generator_witness[1]
    H = subgroup_closure(G, [s])
    assert H.order == 2
    assert not H.is_normal


def test_subgroup_transversal_covers():
    for spec in ("sl23", "remark2:2"):
        G = builtin(spec)
        H = subgroup_closure(G, [G.generator_witness[0]])
        seen = set()
        for t in H.left_transversal:
            for m in H.members:
                seen.add(int(G.mul[t, m]))
        assert len(seen) == G.order
        assert H.order * len(H.left_transversal) == G.order


def test_subgroup_from_members_and_witness():
    G = builtin("cyclic:9")
    H = subgroup_from_members(G, [0, 3, 6])
    assert H.order == 3
    assert H.is_normal
    assert subgroup_closure(G, H.generators).members == H.members
    carrier = H.as_group()
    assert carrier.exponent == 3


def test_trivial_subgroup():
    G = builtin("sl23")
    H = subgroup_closure(G, [0])
    assert H.members == (0,)
    assert H.index == 24
    assert H.is_normal
    assert H.as_group().order == 1


def test_lagrange_on_random_subgroups():
    rng = random.Random(8)
    for spec in ("sl23", "remark2:2", "wreath_cyclic:3"):
        G = builtin(spec)
        for _ in range(10):
            gens = [rng.randrange(G.order) for _ in range(2)]
            H = subgroup_closure(G, gens)
            assert G.order % H.order == 0


def test_validate_group_randomized_path():
    # order 729 exceeds the exhaustive associativity bound, so the seeded
    # random-triple path runs.
    G = builtin("cyclic:729")
    validate_group(G, samples=20_000)


def test_direct_product_structure():
    G = builtin("direct:cyclic:3:cyclic:5")
    assert G.order == 15
    assert G.exponent == 15
    assert G.is_abelian
    nested = builtin("direct:direct:cyclic:2:cyclic:3:cyclic:5")
    assert nested.order == 30
    assert nested.spec == "direct:direct:cyclic:2:cyclic:3:cyclic:5"
    assert nested.exponent == 30


def test_direct_cap():
    with pytest.raises(ClosureExceedsCap):
        builtin("direct:cyclic:100:cyclic:100")


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_group_power():
    G = builtin("sl23")
    rng = random.Random(3)
    for _ in range(50):
        g = rng.randrange(G.order)
        m = rng.randrange(0, 30)
        expected = 0
        for _ in range(m):
            expected = int(G.mul[expected, g])
        assert G.power(g, m) == expected
