"""Normal ordering in the quantum sphere algebra.

Independent oracles used here:

* evaluation at q = 1 on an exact rational point of the classical sphere
  (the commutative specialisation turns every rule into an identity the
  point satisfies, so normal forms must evaluate equal to their inputs);
* structural shape of normal words (stars descending, then unstarred
  ascending, never both extreme letters), checked on reduction outputs;
* the junction-rule coefficients re-derived from the other three rules.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qcpn.rings import LaurentQ
from qcpn.sphere import (
    ALL_RULES,
    Generator,
    NCPoly,
    StepBudgetExceeded,
    defining_relations,
    exhaustive_pair_check,
    fuzz_confluence,
    normal_form,
    project_to_s3,
    sphere_sum,
    verify_defining_relations,
)

R123 = frozenset({"R1", "R2", "R3"})


def gen(n, i, starred=False):
    return NCPoly.gen(n, i, starred)


def word_poly(n, letters):
    p = NCPoly.one(n)
    for i, starred in letters:
        p = p * gen(n, i, starred)
    return p


@st.composite
def nc_polys(draw, max_n=3, max_words=3, max_len=4):
    n = draw(st.integers(1, max_n))
    terms = []
    for _ in range(draw(st.integers(1, max_words))):
        letters = draw(
            st.lists(
                st.tuples(st.integers(0, n), st.booleans()), max_size=max_len
            )
        )
        coeff = draw(st.integers(-5, 5))
        terms.append((coeff, [Generator(i, s) for i, s in letters]))
    return NCPoly.from_terms(n, terms)


def sphere_point(rng, n):
    """Exact rationals with sum(x_m * y_m) == 1; the classical sphere at q=1."""
    xs = [Fraction(rng.randint(1, 6), rng.randint(1, 6)) for _ in range(n + 1)]
    ys = [Fraction(rng.randint(-5, 5), rng.randint(1, 6)) for _ in range(n + 1)]
    partial = sum(x * y for x, y in zip(xs[:-1], ys[:-1]))
    ys[-1] = (1 - partial) / xs[-1]
    assert sum(x * y for x, y in zip(xs, ys)) == 1
    return xs, ys


def evaluate_q1(p, xs, ys):
    total = Fraction(0)
    for word, coeff in p.terms():
        v = Fraction(coeff.at_q_one())
        for g in word:
            v *= ys[g.index] if g.starred else xs[g.index]
        total += v
    return total


def assert_normal_shape(p):
    for word, _ in p.terms():
        stars = [g.index for g in word if g.starred]
        plains = [g.index for g in word if not g.starred]
        # block order: no unstarred letter before a starred one
        flags = [g.starred for g in word]
        assert flags == sorted(flags, reverse=True), f"blocks mixed in {word}"
        assert stars == sorted(stars, reverse=True), f"stars not descending in {word}"
        assert plains == sorted(plains), f"plain letters not ascending in {word}"
        assert not (0 in stars and 0 in plains), f"junction pair survived in {word}"


class TestRuleExamples:
    def test_plain_swap(self):
        p = word_poly(2, [(1, False), (0, False)])
        assert normal_form(p) == LaurentQ.q_power(-1) * word_poly(
            2, [(0, False), (1, False)]
        )

    def test_star_swap_descends(self):
        p = word_poly(2, [(0, True), (1, True)])
        assert normal_form(p) == LaurentQ.q_power(-1) * word_poly(
            2, [(1, True), (0, True)]
        )
        # descending input is already normal
        q = word_poly(2, [(1, True), (0, True)])
        assert normal_form(q) == q

    def test_mixed_swap(self):
        p = word_poly(2, [(0, False), (1, True)])
        assert normal_form(p) == LaurentQ.q_power(1) * word_poly(
            2, [(1, True), (0, False)]
        )

    def test_top_index_reorder_is_plain(self):
        for n in (1, 2, 3):
            p = word_poly(n, [(n, False), (n, True)])
            assert normal_form(p) == word_poly(n, [(n, True), (n, False)])

    def test_reorder_expands(self):
        p = word_poly(2, [(0, False), (0, True)])
        reorder = LaurentQ({-2: 1, 0: -1})
        expected = (
            word_poly(2, [(0, True), (0, False)])
            + reorder * normal_form(word_poly(2, [(1, False), (1, True)]))
            + reorder * normal_form(word_poly(2, [(2, False), (2, True)]))
        )
        assert normal_form(p) == normal_form(expected)

    def test_junction_elimination(self):
        p = word_poly(2, [(0, True), (0, False)])
        expected = (
            NCPoly.one(2)
            - LaurentQ.q_power(-2) * word_poly(2, [(1, True), (1, False)])
            - LaurentQ.q_power(-4) * word_poly(2, [(2, True), (2, False)])
        )
        assert normal_form(p) == expected

    def test_frozen_two_route_example(self):
        # route 1: direct reduction
        p = word_poly(1, [(0, False), (0, True)])
        direct = normal_form(p)
        assert str(direct) == "1 - z1s*z1"
        # route 2: substitute the sphere relation by hand first
        substituted = NCPoly.one(1) - word_poly(1, [(1, False), (1, True)])
        assert normal_form(substituted) == direct

    def test_sphere_sum_collapses(self):
        for n in range(1, 5):
            assert normal_form(sphere_sum(n)) == NCPoly.one(n)


class TestJunctionDerivation:
    def test_rule_subset_reduction(self):
        # without the junction rule, the sphere sum normal-orders to a
        # geometric combination whose coefficients fix that rule uniquely
        for n in range(1, 5):
            got = normal_form(sphere_sum(n), rules=R123)
            expected = NCPoly.zero(n)
            for k in range(n + 1):
                expected = expected + LaurentQ.q_power(-2 * k) * word_poly(
                    n, [(k, True), (k, False)]
                )
            assert got == expected

    def test_unknown_rule_rejected(self):
        with pytest.raises(ValueError):
            normal_form(NCPoly.one(1), rules=frozenset({"R9"}))


class TestNormalFormProperties:
    @given(nc_polys())
    def test_idempotent(self, p):
        nf = normal_form(p)
        assert normal_form(nf) == nf

    @given(nc_polys())
    def test_output_shape(self, p):
        assert_normal_shape(normal_form(p))

    @given(nc_polys())
    def test_adjoint_compatible(self, p):
        lhs = normal_form(p.adjoint())
        rhs = normal_form(normal_form(p).adjoint())
        assert lhs == rhs

    def test_adjoint_frozen_example(self):
        p = word_poly(2, [(1, False), (0, False)])
        assert normal_form(p.adjoint()) == normal_form(p).adjoint()
        assert normal_form(p.adjoint()) == LaurentQ.q_power(-1) * word_poly(
            2, [(1, True), (0, True)]
        )

    @settings(max_examples=60)
    @given(nc_polys(), st.integers(0, 10**9))
    def test_q1_evaluation_preserved(self, p, seed):
        xs, ys = sphere_point(random.Random(seed), p.n)
        assert evaluate_q1(normal_form(p), xs, ys) == evaluate_q1(p, xs, ys)

    @given(nc_polys())
    def test_degree_components_preserved(self, p):
        nf = normal_form(p)
        degrees = {
            sum(1 if not g.starred else -1 for g in w) for w, _ in p.terms()
        }
        for m in degrees | {0}:
            assert normal_form(p.spectral_component(m)) == nf.spectral_component(m)

    def test_cancellation_to_zero(self):
        p = word_poly(2, [(1, False), (0, False)]) - LaurentQ.q_power(
            -1
        ) * word_poly(2, [(0, False), (1, False)])
        assert normal_form(p).is_zero()


class TestGradingAndComponents:
    def test_u1_degree_examples(self):
        assert word_poly(2, [(0, False), (1, False)]).u1_degree() == 2
        assert word_poly(2, [(0, True), (1, False)]).u1_degree() == 0
        mixed = gen(2, 0) + gen(2, 0, True)
        assert mixed.u1_degree() is None
        assert NCPoly.zero(2).u1_degree() == 0
        assert NCPoly.one(2).u1_degree() == 0

    def test_spectral_components_reassemble(self):
        p = gen(2, 0) + gen(2, 0, True) + 3 * NCPoly.one(2)
        total = NCPoly.zero(2)
        for m in (-1, 0, 1):
            total = total + p.spectral_component(m)
        assert total == p

    def test_spectral_component_examples(self):
        p = gen(2, 0) + gen(2, 0, True)
        assert p.spectral_component(1) == gen(2, 0)
        assert NCPoly.one(2).spectral_component(0) == NCPoly.one(2)
        w = word_poly(2, [(0, False), (1, True)])
        assert w.spectral_component(-1).is_zero()

    def test_grading_multiplicative(self):
        a = word_poly(2, [(0, False), (1, False)])
        b = gen(2, 2, True)
        assert (a * b).u1_degree() == a.u1_degree() + b.u1_degree()


class TestProjection:
    def test_kills_high_indices(self):
        p = word_poly(2, [(2, False), (0, False)])
        assert project_to_s3(p).is_zero()

    def test_low_indices_reduce_in_target(self):
        p = word_poly(2, [(1, False), (0, False)])
        expected = LaurentQ.q_power(-1) * word_poly(1, [(0, False), (1, False)])
        assert project_to_s3(p) == expected

    def test_sphere_sum_maps_to_one(self):
        for n in range(1, 5):
            assert project_to_s3(sphere_sum(n)) == NCPoly.one(1)

    def test_requires_positive_ambient(self):
        with pytest.raises(ValueError):
            project_to_s3(NCPoly.one(0))

    @given(nc_polys(max_n=2))
    def test_multiplicative_up_to_reduction(self, p):
        q = word_poly(p.n, [(0, False), (1, True)])
        lhs = project_to_s3(p * q)
        rhs = normal_form(project_to_s3(p) * project_to_s3(q))
        assert lhs == rhs

    @given(nc_polys(max_n=2))
    def test_star_equivariant(self, p):
        assert project_to_s3(p.adjoint()) == normal_form(
            project_to_s3(p).adjoint()
        )


class TestRelations:
    def test_all_relations_reduce_to_zero(self):
        for n in (1, 2, 3):
            report = verify_defining_relations(n)
            assert report.passed, report.mismatches
            assert report.words == 2 * len(defining_relations(n))

    def test_relation_count(self):
        # n+1 choose 2 plain swaps, (n+1)n mixed swaps, n+1 reorders, 1 sphere
        rels = defining_relations(2)
        assert len(rels) == 3 + 6 + 3 + 1

    def test_requires_positive_ambient(self):
        with pytest.raises(ValueError):
            defining_relations(0)


class TestFuzz:
    def test_small_campaign_passes(self):
        report = fuzz_confluence(2, 5, 400, seed=11)
        assert report.passed
        assert report.words == 400
        assert report.max_steps > 0

    def test_deterministic_for_fixed_seed(self):
        a = fuzz_confluence(2, 6, 150, seed=3)
        b = fuzz_confluence(2, 6, 150, seed=3)
        assert a.as_dict() == b.as_dict()

    def test_exhaustive_pairs(self):
        for n in (1, 2):
            report = exhaustive_pair_check(n)
            assert report.passed
            assert report.words == (2 * (n + 1)) ** 2

    def test_max_len_validated(self):
        with pytest.raises(ValueError):
            fuzz_confluence(2, 1, 10, seed=0)

    def test_report_serialization(self):
        d = fuzz_confluence(1, 3, 5, seed=0).as_dict()
        assert set(d) == {"words", "max_steps", "mismatches", "passed"}
        assert d["passed"] is True and d["mismatches"] == []


class TestStepBudget:
    def test_explicit_cap_exceeded(self):
        p = word_poly(1, [(1, False), (0, False)])
        with pytest.raises(StepBudgetExceeded):
            normal_form(p, step_cap=0)

    def test_env_cap_honored(self, monkeypatch):
        monkeypatch.setenv("QCPN_STEP_CAP", "1")
        p = word_poly(2, [(0, False), (0, True)])  # needs several steps
        with pytest.raises(StepBudgetExceeded):
            normal_form(p)
        monkeypatch.setenv("QCPN_STEP_CAP", "1000000")
        assert normal_form(p) is not None

    def test_env_cap_validated(self, monkeypatch):
        monkeypatch.setenv("QCPN_STEP_CAP", "0")
        with pytest.raises(ValueError):
            normal_form(NCPoly.one(1))

    def test_explicit_cap_wins_over_env(self, monkeypatch):
        monkeypatch.setenv("QCPN_STEP_CAP", "1")
        p = word_poly(2, [(0, False), (0, True)])
        assert normal_form(p, step_cap=1000) is not None


class TestNCPolyPlumbing:
    def test_construction_validates_codes(self):
        with pytest.raises(ValueError):
            NCPoly(1, {(5,): LaurentQ.one()})
        with pytest.raises(ValueError):
            NCPoly(-1)

    def test_generator_range_checked(self):
        with pytest.raises(ValueError):
            NCPoly.gen(2, 3)

    def test_scalar_coercion(self):
        p = gen(1, 0)
        assert p + 1 - 1 == p
        assert 0 * p == NCPoly.zero(1)
        assert (LaurentQ.q_power(2) * p).coefficient([Generator(0, False)]) == (
            LaurentQ.q_power(2)
        )

    def test_mixed_ambient_rejected(self):
        with pytest.raises(ValueError):
            gen(1, 0) + gen(2, 0)

    def test_pow(self):
        p = gen(2, 0)
        assert p**3 == p * p * p
        assert p**0 == NCPoly.one(2)
        with pytest.raises(ValueError):
            p**-1

    def test_adjoint_involution(self):
        p = word_poly(2, [(0, False), (1, True), (2, False)])
        assert p.adjoint().adjoint() == p

    def test_adjoint_example(self):
        p = word_poly(2, [(0, False), (1, False)])
        assert p.adjoint() == word_poly(2, [(1, True), (0, True)])

    def test_str_rendering(self):
        assert str(NCPoly.zero(1)) == "0"
        assert str(NCPoly.one(1)) == "1"
        p = NCPoly.one(1) - word_poly(1, [(1, True), (1, False)])
        assert str(p) == "1 - z1s*z1"
        q = LaurentQ({-2: 1, 0: -1}) * word_poly(1, [(0, False)])
        assert str(q) == "(q^-2 - 1)*z0"

    def test_terms_are_canonically_ordered(self):
        p = gen(2, 1) + gen(2, 0, True) + NCPoly.one(2)
        words = [w for w, _ in p.terms()]
        assert words == [
            (),
            (Generator(0, True),),
            (Generator(1, False),),
        ]

    def test_immutability(self):
        p = NCPoly.one(1)
        with pytest.raises(AttributeError):
            p.n = 4

    def test_from_terms_merges(self):
        g = [Generator(0, False)]
        p = NCPoly.from_terms(1, [(2, g), (-2, g)])
        assert p.is_zero()
