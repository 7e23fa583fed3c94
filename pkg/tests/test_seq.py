import pytest

from monadica import core, seq
from monadica.core import make
from monadica.errors import DomainError, NotInvertible, UnknownGenerator


class TestGenerators:
    def test_impulse_terms(self):
        assert seq.term(make(2, {"e:1": 1}), 1) == 3.0
        assert seq.term(make(2, {"e:1": 1}), 2) == 2.0

    def test_harmonic_terms(self):
        h = make(0, {"h": 1})
        assert seq.term(h, 7) == 1 / 7

    def test_geometric_terms(self):
        assert seq.term(make(0, {"g:0.5": 0.5}), 3) == 0.0625

    def test_geometric_ratio_validation(self):
        with pytest.raises(DomainError):
            seq.geometric(1.0)
        with pytest.raises(DomainError):
            seq.geometric(0.0)

    def test_geometric_id_uses_round_trip_decimal(self):
        assert seq.geometric(0.5).id == "g:0.5"
        assert seq.geometric(0.1).id == "g:0.1"

    def test_unknown_generator(self):
        with pytest.raises(UnknownGenerator):
            seq.term(make(0, {"nope": 1}), 1)

    def test_index_must_be_positive(self):
        with pytest.raises(DomainError):
            seq.term(make(1), 0)

    def test_catalog_rejects_duplicates_and_dependence(self):
        with pytest.raises(DomainError):
            seq.Catalog([seq.impulse(1), seq.impulse(1)])
        twin = seq.SequenceGenerator("twin", lambda n: 2.0 if n == 1 else 0.0)
        with pytest.raises(DomainError):
            seq.Catalog([seq.impulse(1), twin])

    def test_default_catalog_is_independent(self):
        gens = list(seq.DEFAULT_CATALOG.generators())
        assert seq.independence_rank(gens) == len(gens)


class TestConvergenceWitness:
    def test_impulse_witness(self):
        assert seq.convergence_witness(make(2, {"e:1": 1}), 1e-9, 1024) == 2

    def test_harmonic_witness(self):
        assert seq.convergence_witness(make(0, {"h": 1}), 0.01, 1024) == 101

    def test_constant_sequence_witness(self):
        assert seq.convergence_witness(make(5), 1e-15, 100) == 1

    def test_failure_is_a_value(self):
        assert seq.convergence_witness(make(0, {"h": 1}), 1e-9, 16) is None

    def test_sampled_indices_cover_powers_of_two(self):
        idx = seq.sampled_indices(10**7)
        assert idx[0] == 1 and 1024 in idx and 2**23 in idx
        assert all(i <= 10**7 for i in idx)

    def test_catalog_members_converge(self):
        for gid in seq.DEFAULT_CATALOG.ids:
            assert seq.convergence_witness(make(0, {gid: 1}), 1e-6, 10**7) is not None


class TestTermwiseOracle:
    def test_product_prefix_by_hand(self):
        x = make(2, {"e:1": 1})
        y = make(3, {"e:2": 1})
        assert seq.oracle_binary("mul", x, y, 4) == [9.0, 8.0, 6.0, 6.0]
        assert seq.prefix(core.mul(x, y), 4) == [9.0, 8.0, 6.0, 6.0]

    def test_addition_with_zero_is_the_same_prefix(self):
        x = make(1.5, {"h": 2, "e:3": -1})
        assert seq.oracle_binary("add", x, core.ZERO, 16) == seq.prefix(x, 16)

    def test_product_of_infinitesimals_is_the_zero_prefix(self):
        e1 = make(0, {"e:1": 1})
        assert seq.oracle_binary("mul", e1, e1, 8) == [0.0] * 8

    def test_inverse_formula_requires_non_infinitesimal(self):
        with pytest.raises(NotInvertible):
            seq.oracle_inv(make(0, {"e:1": 1}), 4)

    def test_core_results_match_the_sequence_formulas(self):
        x = make(1.25, {"e:1": 0.5, "h": -2})
        y = make(-0.75, {"e:2": 3, "g:0.5": 1})
        for op, result in (("add", core.add(x, y)), ("mul", core.mul(x, y))):
            oracle = seq.oracle_binary(op, x, y, 64)
            got = seq.prefix(result, 64)
            assert all(abs(a - b) <= 1e-12 for a, b in zip(got, oracle))
        inv_oracle = seq.oracle_inv(x, 64)
        inv_got = seq.prefix(core.inv(x), 64)
        assert all(abs(a - b) <= 1e-12 for a, b in zip(inv_got, inv_oracle))
        for m in (2, 3, 4):
            pow_oracle = seq.oracle_pow_nat(x, m, 64)
            pow_got = seq.prefix(core.pow_nat(x, m), 64)
            assert all(
                abs(a - b) <= 1e-12 * max(1, abs(a)) for a, b in zip(pow_got, pow_oracle)
            )
