import random

import pytest

from monosing.errors import (
    InfiniteDimensional,
    NonComposableRelation,
    RelationTooShort,
    ZeroPath,
)
from monosing.corpus import random_presentation
from monosing.presentation import (
    minimal_relations,
    parse_presentation,
    presentation_to_json,
    presentation_to_text,
)


def paths_of(pres, *names, order="traversal"):
    return pres.quiver.path(names, order=order)


def test_parse_single_relation_line():
    pres = parse_presentation("vertex 1 2 3\narrow a 1 2\narrow b 2 3\nrelation a b\n")
    assert [g.traversal for g in pres.generators] == [("a", "b")]
    # traversal (a, b) is the composition b.a
    g = pres.generators[0]
    assert g.arrows == ("b", "a") and g.source == "1" and g.target == "3"


def test_parse_two_triangle_quiver(glu):
    assert len(glu.quiver.vertices) == 5
    assert len(glu.quiver.arrows) == 6
    assert len(glu.generators) == 6
    assert all(g.length == 3 for g in glu.generators)


def test_parse_noncomposable_relation():
    with pytest.raises(NonComposableRelation):
        parse_presentation("vertex 1 2\narrow a 1 2\nrelation a a\n")


def test_parse_relation_too_short():
    with pytest.raises(RelationTooShort):
        parse_presentation("vertex 1 2\narrow a 1 2\nrelation a\n")


def test_parse_duplicate_identifiers():
    from monosing.errors import DuplicateIdentifier

    with pytest.raises(DuplicateIdentifier):
        parse_presentation("vertex 1 1\n")
    with pytest.raises(DuplicateIdentifier):
        parse_presentation("vertex 1 2\narrow a 1 2\narrow a 2 1\n")


def test_parse_unknown_arrow_in_relation():
    from monosing.errors import UnknownArrow

    with pytest.raises(UnknownArrow):
        parse_presentation("vertex 1 2\narrow a 1 2\nrelation a c\n")


def test_parse_comments_and_echo(z3r2):
    data = presentation_to_json(z3r2)
    assert data["vertices"] == ["1", "2", "3"]
    assert data["relations"] == [["a1", "a2"], ["a2", "a3"], ["a3", "a1"]]
    # round trip through the text writer
    again = parse_presentation(presentation_to_text(z3r2))
    assert again == z3r2


def test_minimal_relations_single(lin):
    assert [str(f) for f in minimal_relations(lin)] == ["a·b"]


def test_minimal_relations_filters_subsumed():
    pres = parse_presentation(
        "vertex 1 2 3 4\narrow a 1 2\narrow b 2 3\narrow c 3 4\n"
        "relation a b\nrelation a b c\n"
    )
    assert [f.traversal for f in minimal_relations(pres)] == [("a", "b")]


def test_minimal_relations_incomparable(z3r2):
    assert len(minimal_relations(z3r2)) == 3


def test_is_nonzero(z2r3):
    ab = paths_of(z2r3, "b", "a")  # composition a.b
    assert z2r3.is_nonzero(ab)
    aba = paths_of(z2r3, "a", "b", "a")
    assert not z2r3.is_nonzero(aba)
    assert z2r3.is_nonzero(z2r3.quiver.trivial_path("1"))


def test_enumerate_basis_z3r2(z3r2):
    basis = z3r2.basis()
    assert basis.dimension == 6
    assert sorted(str(p) for p in basis) == sorted(["e_1", "e_2", "e_3", "a1", "a2", "a3"])


def test_enumerate_basis_z2r3(z2r3):
    basis = z2r3.basis()
    assert basis.dimension == 6
    assert {str(p) for p in basis} == {"e_1", "e_2", "a", "b", "a·b", "b·a"}


def test_enumerate_basis_infinite():
    pres = parse_presentation("vertex 1 2 3\narrow x 1 2\narrow y 2 3\narrow z 3 1\n")
    with pytest.raises(InfiniteDimensional) as exc:
        pres.basis()
    assert exc.value.witness


def test_cyclic_module_basis(z3r2, z2r3):
    a1 = z3r2.quiver.arrow_path("a1")
    basis, vec = z3r2.cyclic_module_basis(a1)
    assert [str(p) for p in basis] == ["a1"]
    assert vec == {"1": 0, "2": 1, "3": 0}

    a = z2r3.quiver.arrow_path("a")
    basis, vec = z2r3.cyclic_module_basis(a)
    assert {str(p) for p in basis} == {"a", "a·b"}
    assert vec == {"1": 1, "2": 1}

    # trivial path gives the projective at the vertex
    e2 = z2r3.quiver.trivial_path("2")
    basis, vec = z2r3.cyclic_module_basis(e2)
    assert {str(p) for p in basis} == {"e_2", "b", "b·a"}


def test_cyclic_module_zero_path(z2r3):
    aba = paths_of(z2r3, "a", "b", "a")
    with pytest.raises(ZeroPath):
        z2r3.cyclic_module_basis(aba)


# -- module invariants ---------------------------------------------------------


def corpus(n=25, seed=99173, require_finite=True):
    rng = random.Random(seed)
    return [random_presentation(rng, require_finite=require_finite) for _ in range(n)]


def test_subpath_closure():
    for pres in corpus():
        basis = pres.basis()
        for p in basis:
            for k in range(p.length + 1):
                for i in range(p.length - k + 1):
                    window = p.arrows[i : i + k]
                    assert pres.word_is_nonzero(window)


def test_dimension_partition_by_projectives():
    for pres in corpus():
        total = 0
        for v in pres.quiver.vertices:
            b, _ = pres.cyclic_module_basis(pres.quiver.trivial_path(v))
            total += len(b)
        assert total == pres.basis().dimension


def test_is_nonzero_invariant_under_normalization():
    # append redundant generators (超paths of existing ones); verdicts must agree
    rng = random.Random(3021)
    for pres in corpus(15, seed=551):
        basis = pres.basis()
        redundant = list(pres.generators)
        for g in pres.generators:
            exts = [a for a in pres.quiver.arrows_from[g.target]]
            if exts:
                a = rng.choice(exts)
                redundant.append(pres.quiver.subword_path((a.name,) + g.arrows))
        from monosing.presentation import MonomialPresentation

        fat = MonomialPresentation(pres.quiver, redundant)
        words = [p.arrows for p in basis if not p.is_trivial]
        for w in words:
            assert fat.word_is_nonzero(w) == pres.word_is_nonzero(w)
        assert {f.arrows for f in fat.minimal} == {f.arrows for f in pres.minimal}


def test_determinism_of_basis_order():
    for pres in corpus(10, seed=77):
        text = presentation_to_text(pres)
        a = parse_presentation(text).basis()
        b = parse_presentation(text).basis()
        assert [str(p) for p in a] == [str(p) for p in b]


def has_nonzero_path_longer_than(pres, cap):
    """Plain depth-first word search for a nonzero path of length > cap.

    Exits on the first witness; on finite-dimensional input it simply
    exhausts the (finitely many) nonzero words.
    """

    def extend(word, end):
        if len(word) > cap:
            return True
        for a in pres.quiver.arrows_from[end]:
            new = (a.name,) + word
            if pres.word_is_nonzero(new) and extend(new, a.target):
                return True
        return False

    return any(extend((), v) for v in pres.quiver.vertices)


def test_automaton_soundness_against_capped_search():
    rng = random.Random(40404)
    for _ in range(25):
        pres = random_presentation(rng, require_finite=False)
        states, _ = pres.automaton()
        long_path = has_nonzero_path_longer_than(pres, len(states))
        assert (pres.automaton_cycle() is not None) == long_path
