import pytest

from src.diagrams.moves import (
    add_positive_kink,
    add_r2_pair,
    diagram_from_braid,
    diagram_from_plat,
    pretzel_diagram,
    rational_diagram,
    writhe_targets,
)
from src.diagrams.pd import (
    diagram_from_pd,
    diagram_from_signed_pd,
    diagram_summary,
    mirror,
    to_pd,
    unknot,
)
from src.errors import MalformedPD, NonOrientable, NonPlanar, PreconditionFailed


def _euler(d):
    return len(d.crossings) - len(d.semiarcs) + len(d.faces)


def _r2_choices(d):
    for face in d.faces:
        ids = sorted(set(face.boundary))
        for over in ids:
            for under in ids:
                if over != under:
                    yield over, under, face.id


def test_trefoil(trefoil):
    assert len(trefoil.crossings) == 3
    assert len(trefoil.semiarcs) == 6
    assert len(trefoil.faces) == 5
    assert len(trefoil.components) == 1
    assert trefoil.self_writhe == (-3,)
    assert _euler(trefoil) == 2


def test_figure_eight(figure_eight):
    assert len(figure_eight.faces) == 6
    assert figure_eight.self_writhe == (0,)
    assert sorted(figure_eight.signs) == [-1, -1, 1, 1]


def test_hopf_link(hopf):
    assert len(hopf.components) == 2
    assert len(hopf.faces) == 4
    assert hopf.self_writhe == (0, 0)


def test_unknot():
    d = unknot()
    assert len(d.semiarcs) == 1
    assert len(d.faces) == 2
    assert diagram_from_pd([]) == d


def test_semiarcs_follow_their_component(trefoil, hopf):
    for d in (trefoil, hopf):
        for s in d.semiarcs:
            assert d.semiarc(s.successor).component == s.component
            assert s.left_face != s.right_face


def test_crossing_reading(trefoil):
    for c in trefoil.crossings:
        assert c.sign == -1
        assert c.reading == (c.over_out, c.under_out, c.under_in, c.over_in)
        assert c.under_in == c.pd[0] and c.under_out == c.pd[2]


def test_reserialised_pd_gives_the_same_diagram(trefoil, figure_eight, hopf):
    for d in (trefoil, figure_eight, hopf):
        again = diagram_from_pd(to_pd(d).crossings, d.name)
        assert again.signs == d.signs
        assert len(again.faces) == len(d.faces)
        assert again.components == d.components
        assert again.self_writhe == d.self_writhe


def test_malformed_pd():
    with pytest.raises(MalformedPD):
        diagram_from_pd([[1, 2, 3, 4]])
    with pytest.raises(MalformedPD):
        diagram_from_pd([[1, 2, 3]])
    with pytest.raises(MalformedPD):
        diagram_from_signed_pd([[2, 2, 1, 1]], [0])


def test_non_orientable_pd():
    # semiarc 1 would enter both crossings as an understrand
    with pytest.raises(NonOrientable):
        diagram_from_pd([[1, 2, 3, 4], [1, 4, 3, 2]])


def test_split_diagram_is_not_planar():
    with pytest.raises(NonPlanar):
        diagram_from_pd([[1, 3, 2, 4], [3, 1, 4, 2], [5, 7, 6, 8], [7, 5, 8, 6]])


def test_kinks(circle, trefoil):
    once = add_positive_kink(circle, 0)
    assert len(once.crossings) == 1
    assert len(once.faces) == 3
    assert once.self_writhe == (1,)
    assert add_positive_kink(trefoil, 0).self_writhe == (-2,)
    assert len(add_positive_kink(trefoil, 0, 2).faces) == 7
    assert add_positive_kink(trefoil, 0, 0) is trefoil
    with pytest.raises(PreconditionFailed):
        add_positive_kink(trefoil, 1)


def test_kinks_on_one_component_of_a_link(hopf):
    d = add_positive_kink(hopf, 1, 3)
    assert d.self_writhe == (0, 3)
    assert _euler(d) == 2


def test_writhe_targets(trefoil, hopf):
    targets = writhe_targets(trefoil, 2)
    assert [w.residues for w, _ in targets] == [(0,), (1,)]
    for w, d in targets:
        assert tuple(x % 2 for x in d.self_writhe) == w.residues
    assert writhe_targets(trefoil, 1)[0][1] is trefoil
    assert len(writhe_targets(hopf, 2)) == 4
    assert [w.residues for w, _ in writhe_targets(hopf, 2)] == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_mirror(trefoil, hopf):
    m = mirror(trefoil)
    assert m.self_writhe == (3,)
    assert len(m.faces) == len(trefoil.faces)
    assert mirror(m).pd == trefoil.pd
    assert mirror(m).signs == trefoil.signs
    assert mirror(hopf).signs == (-1, -1)


@pytest.mark.parametrize("name", ["trefoil", "figure_eight", "hopf"])
def test_r2_pairs_everywhere(name, request):
    d = request.getfixturevalue(name)
    for over, under, face in _r2_choices(d):
        moved = add_r2_pair(d, over, under, face)
        assert len(moved.crossings) == len(d.crossings) + 2
        assert len(moved.faces) == len(d.faces) + 2
        assert moved.self_writhe == d.self_writhe
        assert len(moved.components) == len(d.components)
        assert sorted(moved.signs[-2:]) == [-1, 1]


def test_r2_needs_a_shared_face(trefoil):
    s = trefoil.semiarcs[0]
    other = next(t for t in trefoil.semiarcs
                 if s.left_face not in (t.left_face, t.right_face)
                 or s.right_face not in (t.left_face, t.right_face))
    face = s.left_face if s.left_face not in (other.left_face, other.right_face) else s.right_face
    with pytest.raises(PreconditionFailed):
        add_r2_pair(trefoil, s.id, other.id, face)
    with pytest.raises(PreconditionFailed):
        add_r2_pair(trefoil, s.id, s.id, s.left_face)


def test_braid_closures():
    trefoil = diagram_from_braid([1, 1, 1], 2)
    assert len(trefoil.crossings) == 3
    assert len(trefoil.faces) == 5
    assert trefoil.self_writhe == (3,)
    figure_eight = diagram_from_braid([1, -2, 1, -2], 3)
    assert len(figure_eight.components) == 1
    assert figure_eight.self_writhe == (0,)
    assert len(figure_eight.faces) == 6
    hopf = diagram_from_braid([1, 1], 2)
    assert len(hopf.components) == 2
    assert hopf.self_writhe == (0, 0)
    assert diagram_from_braid([], 1) == unknot()
    assert diagram_from_braid([-1], 2).self_writhe == (-1,)


def test_braid_semiarcs_are_numbered_along_components():
    d = diagram_from_braid([1, 1, 1], 2)
    assert d.components == ((1, 2, 3, 4, 5, 6),)


def test_bad_braids():
    with pytest.raises(PreconditionFailed):
        diagram_from_braid([1], 3)
    with pytest.raises(PreconditionFailed):
        diagram_from_braid([2], 2)
    with pytest.raises(PreconditionFailed):
        diagram_from_braid([0, 1], 2)
    with pytest.raises(PreconditionFailed):
        diagram_from_braid([], 2)


def test_plat_closures():
    trefoil = diagram_from_plat([2, 2, 2], 4)
    assert len(trefoil.components) == 1
    assert len(trefoil.faces) == 5
    assert abs(trefoil.self_writhe[0]) == 3
    assert diagram_from_plat([2, 2, 2], 4, caps=[(1, 2), (3, 4)]) == trefoil
    figure_eight = rational_diagram([2, 2])
    assert len(figure_eight.crossings) == 4
    assert figure_eight.self_writhe == (0,)


def test_conway_notation_is_normalised_to_odd_length():
    assert rational_diagram([2, 1]) == rational_diagram([3])
    assert rational_diagram([3, 2]).pd == rational_diagram([3, 1, 1]).pd
    assert len(rational_diagram([3, 3]).components) == 2


def test_pretzel_columns():
    chain = pretzel_diagram([2, 2, 2])
    assert len(chain.components) == 3
    assert len(chain.crossings) == 6
    assert len(chain.faces) == 8
    assert len(pretzel_diagram([1, 1, 1]).components) == 1


def test_bad_plats():
    with pytest.raises(PreconditionFailed):
        diagram_from_plat([1], 3)
    with pytest.raises(PreconditionFailed):
        diagram_from_plat([1], 4, caps=[(1, 2), (2, 3)])
    with pytest.raises(PreconditionFailed):
        diagram_from_plat([4], 4)
    with pytest.raises(PreconditionFailed, match="without crossings"):
        diagram_from_plat([1], 4)
    with pytest.raises(PreconditionFailed):
        rational_diagram([2, 0])
    with pytest.raises(PreconditionFailed):
        pretzel_diagram([3])


def test_summary(figure_eight):
    summary = diagram_summary(figure_eight)
    assert summary["faces"] == 6
    assert summary["crossings"] == 4
    assert summary["self_writhe"] == [0]
