import pytest

from rkdist import (
    InvalidProfile,
    Preorder,
    RkProfile,
    UnknownVertex,
    canonical_form,
    close_preorder,
    counts,
    is_isomorphic,
    make_profile,
    quotient,
    validate_profile,
)
from rkdist.catalog import chain_profile, get
from rkdist.io import parse


def test_close_preorder_reflexive_only():
    order = close_preorder({"a"}, [])
    assert order.leq == frozenset({("a", "a")})


def test_close_preorder_transitivity():
    order = close_preorder({"a", "b", "c"}, [("a", "b"), ("b", "c")])
    assert order.holds("a", "c")
    assert not order.holds("c", "a")


def test_close_preorder_symmetric_cycle_one_class():
    profile = make_profile({"a", "b"}, [("a", "b"), ("b", "a")], {"a": 1})
    assert quotient(profile).classes[0].size == 2


def test_close_preorder_unknown_vertex():
    with pytest.raises(UnknownVertex):
        close_preorder({"a"}, [("a", "b")])


def test_preorder_invariants_rejected():
    with pytest.raises(ValueError):
        Preorder(frozenset({"a"}), frozenset())  # not reflexive
    with pytest.raises(ValueError):
        Preorder(
            frozenset({"a", "b", "c"}),
            frozenset({("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")}),
        )  # not transitive
    with pytest.raises(ValueError):
        Preorder(frozenset({"bad name"}), frozenset({("bad name", "bad name")}))


def test_profile_il_must_cover_classes():
    order = close_preorder({"a", "b"}, [("a", "b")])
    with pytest.raises(ValueError):
        RkProfile(order, {frozenset({"a"}): 0})
    with pytest.raises(ValueError):
        RkProfile(order, {frozenset({"a"}): 0, frozenset({"b"}): -1})
    with pytest.raises(ValueError):
        RkProfile(order, {frozenset({"a", "b"}): 0})


def test_make_profile_errors():
    with pytest.raises(UnknownVertex):
        make_profile({"a"}, [], {"z": 0})
    with pytest.raises(ValueError):
        make_profile({"a", "b"}, [("a", "b"), ("b", "a")], {"a": 1, "b": 1})
    with pytest.raises(ValueError):
        make_profile({"a", "b"}, [("a", "b")], {"a": 0})


def test_quotient_two_singleton_classes():
    q = quotient(get("fig1a"))
    assert [(c.representative, c.size, c.limit_count) for c in q.classes] == [
        ("a", 1, 0),
        ("b", 1, 1),
    ]
    assert q.below == frozenset({("a", "b")})
    assert q.least() == "a" and q.greatest() == "b"


def test_quotient_oval_variant_class_sizes():
    q = quotient(get("fig1b.2"))
    assert sorted(c.size for c in q.classes) == [1, 2]
    assert q.summary("b").limit_count == 1


def test_quotient_single_vertex():
    q = quotient(chain_profile([0]))
    assert len(q.classes) == 1 and q.below == frozenset()


def test_validate_fig1a_all_pass():
    report = validate_profile(get("fig1a"))
    assert report.admissible
    assert all(c.passed for c in report.conditions)


def test_validate_v4_failure():
    profile = make_profile({"a", "b"}, [("a", "b")], {"a": 0, "b": 0})
    report = validate_profile(profile)
    assert not report.condition("V4").passed
    assert "b" in report.condition("V4").detail
    assert not report.admissible


def test_validate_v3_failure_two_maximal():
    profile = make_profile(
        {"a", "b", "c"}, [("a", "b"), ("a", "c")], {"a": 0, "b": 1, "c": 1}
    )
    report = validate_profile(profile)
    assert report.condition("V1").passed
    assert not report.condition("V3").passed


def test_validate_v2_failure_fat_least_class():
    profile = make_profile({"a", "b"}, [("a", "b"), ("b", "a")], {"a": 1})
    report = validate_profile(profile)
    assert not report.condition("V2").passed


def test_validate_v5_failure():
    profile = make_profile(
        {"a", "b", "c", "d"},
        [("a", "b"), ("b", "c"), ("c", "b"), ("b", "d"), ("c", "d")],
        {"a": 0, "b": 0, "d": 1},
    )
    report = validate_profile(profile)
    assert not report.condition("V5").passed
    assert "b" in report.condition("V5").detail


def test_validate_v6_informational_only():
    report = validate_profile(chain_profile([0]))
    assert not report.condition("V6").passed
    assert report.condition("V6").informational
    assert report.admissible  # V6 does not gate admissibility


def test_counts_fig1a():
    r = counts(get("fig1a"))
    assert (r.prime_count, r.limit_count, r.total) == (2, 1, 3)


def test_counts_fig2_first_chain():
    r = counts(get("fig2.1"))
    assert (r.prime_count, r.limit_count, r.total) == (2, 3, 5)


def test_counts_single_vertex():
    r = counts(chain_profile([0]))
    assert (r.prime_count, r.limit_count, r.total) == (1, 0, 1)


def test_counts_terms_in_topological_order():
    r = counts(get("fig2.8"))
    assert r.class_terms == ((1, 0), (1, 0), (1, 0), (1, 1))
    assert [c.representative for c in r.classes] == ["a", "b", "c", "d"]


def test_counts_requires_admissible():
    profile = make_profile({"a", "b"}, [("a", "b")], {"a": 0, "b": 0})
    with pytest.raises(InvalidProfile):
        counts(profile)


def test_canonical_relabeling_invariance():
    p = make_profile({"a", "b"}, [("a", "b")], {"a": 0, "b": 1})
    q = make_profile({"x", "y"}, [("x", "y")], {"x": 0, "y": 1})
    assert canonical_form(p).canonical_text == canonical_form(q).canonical_text


def test_canonical_distinguishes_limit_counts():
    p = chain_profile([0, 1])
    q = chain_profile([0, 2])
    assert canonical_form(p).canonical_text != canonical_form(q).canonical_text


def test_canonical_eight_fig2_variants_distinct():
    texts = {canonical_form(get(f"fig2.{i}")).canonical_text for i in range(1, 9)}
    assert len(texts) == 8


def test_canonical_idempotent(base):
    for profile in base.values():
        text = canonical_form(profile).canonical_text
        assert canonical_form(parse(text)).canonical_text == text


def test_canonical_rejects_inadmissible():
    profile = make_profile({"a", "b"}, [("a", "b")], {"a": 0, "b": 0})
    with pytest.raises(InvalidProfile):
        canonical_form(profile)


def test_is_isomorphic_under_permutation():
    p = make_profile(
        {"p", "q", "r"}, [("p", "q"), ("q", "r")], {"p": 0, "q": 0, "r": 1}
    )
    assert is_isomorphic(p, get("fig1b.3"))


def test_is_isomorphic_distinguishes_variants():
    assert not is_isomorphic(get("fig1b.1"), get("fig1b.3"))


def test_is_isomorphic_equivalence_relation(base):
    profiles = list(base.values())
    names = list(base)
    for i, p in enumerate(profiles):
        assert is_isomorphic(p, p)
        for j, q in enumerate(profiles):
            assert is_isomorphic(p, q) == is_isomorphic(q, p)
            if i != j:
                # base entries are pairwise non-isomorphic
                assert not is_isomorphic(p, q), (names[i], names[j])


def test_quotient_sizes_sum_to_vertex_count(base):
    for profile in base.values():
        q = quotient(profile)
        assert sum(c.size for c in q.classes) == len(profile.order.vertices)
