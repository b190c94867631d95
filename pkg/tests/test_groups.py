import pytest

import oracles
from equilef.errors import DuplicateName, GroupTooLarge, NoIdentity, NoInverse, NotAssociative, NotLatinSquare
from equilef.groups import FiniteGroup, all_subgroups, element_classes, is_subconjugate, load_group, subgroup_classes, weyl
from equilef.library import by_name, cyclic, dihedral, elementary_abelian, small_groups, symmetric

ORDERS = {
    "C1": 1, "C2": 2, "C3": 3, "C4": 4, "C2xC2": 4, "C5": 5, "C6": 6, "S3": 6, "C7": 7, "C8": 8,
    "C4xC2": 8, "C2xC2xC2": 8, "D4": 8, "Q8": 8, "C9": 9, "C3xC3": 9, "C10": 10, "D5": 10,
    "C11": 11, "C12": 12, "C6xC2": 12, "A4": 12, "D6": 12, "Dic3": 12,
}

# number of subgroups / conjugacy classes of subgroups
LATTICE = {"S3": (6, 4), "D4": (10, 8), "Q8": (6, 6), "A4": (10, 5), "D6": (16, 10), "C2xC2xC2": (16, 16), "Dic3": (8, 6)}


def test_catalogue(groups):
    assert {n: G.order for n, G in groups.items()} == ORDERS


@pytest.mark.parametrize("name", sorted(LATTICE))
def test_lattice_sizes(name):
    G = by_name(name)
    assert (len(all_subgroups(G)), len(subgroup_classes(G))) == LATTICE[name]


def test_subgroups_match_subset_oracle(groups):
    for G in groups.values():
        mine = {frozenset(H.elements) for H in G.subgroups()}
        assert mine == set(oracles.subgroups_by_subsets(G))


def test_classes_match_oracle(groups):
    for G in groups.values():
        ref = oracles.subgroup_classes(G, oracles.subgroups_by_subsets(G))
        mine = {frozenset(frozenset(M.elements) for M in c.members) for c in G.subgroup_classes()}
        assert mine == set(ref)


def test_canonical_order_and_labels():
    G = symmetric(3)
    labels = [c.label for c in G.subgroup_classes()]
    assert labels == ["H1_0", "H2_0", "H3_0", "H6_0"]
    orders = [c.representative.order for c in G.subgroup_classes()]
    assert orders == sorted(orders)
    for c in G.subgroup_classes():
        assert c.representative == min(c.members, key=lambda M: M.elements)


def test_conjugators_carry_members_to_representative(groups):
    for G in groups.values():
        for c in G.subgroup_classes():
            assert c.conjugators[c.representative] == G.identity
            for M, a in c.conjugators.items():
                assert G.conjugate_subgroup(G.inv(a), M) == c.representative


def test_subconjugacy_matches_oracle():
    G = by_name("D4")
    subs = G.subgroups()
    for H in subs:
        for K in subs:
            ref = any(oracles.conjugate_set(G, H.elements, g) <= frozenset(K.elements) for g in range(G.order))
            assert is_subconjugate(H, K) == ref


def test_weyl_groups(groups):
    for G in groups.values():
        for c in G.subgroup_classes():
            H = c.representative
            N = oracles.normalizer(G, frozenset(H.elements))
            W = weyl(H)
            assert frozenset(W.normalizer.elements) == N
            assert W.order * H.order == len(N)
            # the quotient table is the coset product
            for a in range(W.order):
                for b in range(W.order):
                    ab = G.mul(W.lift(a), W.lift(b))
                    assert W.projection[ab] == W.quotient.table[a][b]


def test_weyl_examples():
    S3 = symmetric(3)
    C3 = next(H for H in S3.subgroups() if H.order == 3)
    C2 = next(H for H in S3.subgroups() if H.order == 2)
    assert weyl(C3).order == 2
    assert weyl(C2).order == 1
    assert weyl(S3.trivial_subgroup()).order == 6


def test_element_classes_match_oracle(groups):
    for G in groups.values():
        table = element_classes(G)
        assert {frozenset(c) for c in table.classes} == set(oracles.element_classes(G))
        assert [c[0] for c in table.classes] == sorted(c[0] for c in table.classes)


def test_element_class_counts():
    assert len(element_classes(symmetric(3)).classes) == 3
    assert len(element_classes(dihedral(4)).classes) == 5
    assert len(element_classes(by_name("A4")).classes) == 4


def test_backends_agree(backend):
    for G in (symmetric(4), elementary_abelian(2, 4), dihedral(6)):
        H = FiniteGroup(G.table, G.names, G.identity, backend=backend)
        assert [S.elements for S in H.subgroups()] == [S.elements for S in G.subgroups()]
        assert [c.label for c in H.subgroup_classes()] == [c.label for c in G.subgroup_classes()]


def test_larger_group_counts():
    assert len(symmetric(4).subgroups()) == 30
    assert len(symmetric(4).subgroup_classes()) == 11


def test_group_cap(monkeypatch):
    G = cyclic(12)
    monkeypatch.setenv("EQUILEF_GROUP_CAP", "8")
    with pytest.raises(GroupTooLarge):
        FiniteGroup(G.table, G.names, G.identity).subgroups()


def test_value_semantics():
    a, b = cyclic(5), cyclic(5)
    assert a == b and hash(a) == hash(b)
    assert a.subgroups()[0] == b.subgroups()[0]


def test_subgroup_rejects_non_subgroup():
    G = symmetric(3)
    with pytest.raises(ValueError):
        G.subgroup([0, 1, 2])


@pytest.mark.parametrize(
    "table, names, err",
    [
        ([[0, 1], [1, 1]], None, NotLatinSquare),
        ([[0, 1], [1]], None, NotLatinSquare),
        ([[0, 2], [1, 0]], None, NotLatinSquare),
        ([[1, 0], [0, 1]], ["a", "a"], DuplicateName),
        # Latin square with no identity
        ([[1, 0, 2], [0, 2, 1], [2, 1, 0]], None, NoIdentity),
    ],
)
def test_table_errors(table, names, err):
    with pytest.raises(err) as info:
        load_group(table, names)
    assert info.value.cell is not None or err is NotLatinSquare


def test_no_inverse_and_non_associative():
    # loops with identity 0: Latin squares that are not groups
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociative) as info:
        load_group(loop)
    a, b, c = info.value.cell
    assert loop[loop[a][b]][c] != loop[a][loop[b][c]]
    # a loop where 1*2 = 0 but 2*1 != 0
    bad = [
        [0, 1, 2, 3, 4],
        [1, 2, 0, 4, 3],
        [2, 3, 4, 0, 1],
        [3, 4, 1, 2, 0],
        [4, 0, 3, 1, 2],
    ]
    with pytest.raises(NoInverse):
        load_group(bad)
