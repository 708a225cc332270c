import random
from collections import Counter
from itertools import combinations

import pytest

from simphopf.cochains import coboundary
from simphopf.complex import build_complex
from simphopf.errors import LabelingInvalid, NotAFacet, WrongSourceDimension
from simphopf.fixtures import constant_labeling, random_valid_labeling
from simphopf.engine import oriented_facet_choices
from simphopf.pullback import (
    Labeling,
    OmegaChoice,
    TargetSphere,
    make_omega,
    pullback_omega,
    validate_labeling,
)


def test_full_label_facet_is_reported(s3):
    lab = Labeling((1, 2, 3, 4, 1))
    rep = validate_labeling(s3, lab, 2)
    assert not rep.valid
    assert (0, 1, 2, 3) in rep.offending


def test_constant_labeling_valid(s3):
    assert validate_labeling(s3, constant_labeling(s3), 2).valid


def test_hopf_fixture_labeling_valid(hopf):
    c, lab = hopf
    assert validate_labeling(c, lab, 2).valid


def test_wrong_dimension(s2):
    with pytest.raises(WrongSourceDimension):
        validate_labeling(s2, constant_labeling(s2), 2)


def test_omega_values():
    t = TargetSphere(2)
    om = make_omega(t, OmegaChoice((1, 2, 3)))
    assert om((1, 2, 3)) == 1
    assert om((1, 2, 4)) == om((1, 3, 4)) == om((2, 3, 4)) == 0
    assert make_omega(t, OmegaChoice((2, 1, 3)))((1, 2, 3)) == -1
    assert abs(om.total()) == 1
    with pytest.raises(NotAFacet):
        make_omega(t, OmegaChoice((1, 2)))
    with pytest.raises(NotAFacet):
        make_omega(t, OmegaChoice((1, 2, 5)))


def test_target_orientation_is_coherent():
    for n in (1, 2, 3):
        t = TargetSphere(n)
        acc = {}
        for f in t.facets:
            for i in range(len(f)):
                r = f[:i] + f[i + 1:]
                acc[r] = acc.get(r, 0) + t.orientation(f) * (-1) ** i
        assert not any(acc.values())


def test_pullback_on_triangle_labels():
    c = build_complex(combinations(range(5), 4))
    om = make_omega(TargetSphere(2), OmegaChoice((1, 2, 3)))
    cases = {(1, 2, 3): 1, (1, 2, 2): 0, (2, 1, 3): -1}
    for labs, want in cases.items():
        lab = Labeling(labs + (1, 1))  # vertices 3, 4 labeled 1
        assert pullback_omega(c, lab, om)((0, 1, 2)) == want


def test_pullback_rejects_invalid(s3):
    om = make_omega(TargetSphere(2), OmegaChoice.default(2))
    with pytest.raises(LabelingInvalid):
        pullback_omega(s3, Labeling((1, 2, 3, 4, 1)), om)


@pytest.mark.parametrize("fixture", ["s3", "join_s3", "hopf"])
def test_pullback_is_a_signed_cocycle(fixture, request):
    value = request.getfixturevalue(fixture)
    c = value[0] if isinstance(value, tuple) else value
    labs = [value[1]] if isinstance(value, tuple) else []
    labs += [random_valid_labeling(c, 2, seed) for seed in range(5)]
    for lab in labs:
        for sb in oriented_facet_choices(2):
            a = pullback_omega(c, lab, make_omega(TargetSphere(2), OmegaChoice(sb)))
            assert set(a.values.values()) <= {-1, 1}
            assert coboundary(a).is_zero()


def test_constant_labeling_pulls_back_to_zero(hopf):
    c, _ = hopf
    for sb in oriented_facet_choices(2):
        a = pullback_omega(c, constant_labeling(c, 2), make_omega(TargetSphere(2), OmegaChoice(sb)))
        assert a.is_zero()


def test_source_relabeling_keeps_value_multiset(hopf):
    c, lab = hopf
    om = make_omega(TargetSphere(2), OmegaChoice.default(2))
    a = pullback_omega(c, lab, om)
    base = Counter(abs(v) for v in a.values.values())
    rng = random.Random(0)
    for _ in range(5):
        perm = list(range(c.n_vertices))
        rng.shuffle(perm)
        c2 = build_complex([tuple(perm[v] for v in f) for f in c.facets])
        lab2 = Labeling.from_mapping(c2, {perm[v]: lab[v] for v in range(c.n_vertices)})
        a2 = pullback_omega(c2, lab2, om)
        assert Counter(abs(v) for v in a2.values.values()) == base
        for s in c.faces[2]:
            assert a2(tuple(perm[v] for v in s)) == a(s)
