import itertools
import json

import pytest

from metazeta import (BerkovichShape, GroupParams, InvalidParameterError,
                      TwoAdicSignature, UnsupportedShapeError,
                      ZetaCoefficients, berkovich_counts, coefficients,
                      dirichlet_multiply, e_sequence, is_isomorphic,
                      kernel_log, kernel_profile, quasiregular_counts, u_ij,
                      valid_k_set, vp, zeta_equal_by_theorem)

from conftest import sweep_cells


def all_params(p, bound):
    for m, n in sweep_cells(p, bound):
        for k in valid_k_set(p, m, n):
            yield GroupParams(p, m, n, k)


class TestUij:
    def test_examples(self):
        assert u_ij(GroupParams(2, 5, 3, 3), 0, 3) == 3
        assert u_ij(GroupParams(2, 5, 3, 3), 0, 2) == 9
        assert u_ij(GroupParams(2, 2, 1, 3), 1, 1) == 1
        assert u_ij(GroupParams(2, 5, 3, 3), 5, 1) == 0

    def test_canonical_range(self):
        for params in all_params(2, 2**7):
            for i in range(params.m + 1):
                for j in range(params.n + 1):
                    u = u_ij(params, i, j)
                    assert 0 <= u < params.p ** (params.m - i)

    def test_j_zero_acts_trivially(self):
        # k^(p^n) = 1 mod p^m by validity, so every quotient sees 1.
        for params in all_params(2, 2**7):
            for i in range(params.m):
                assert u_ij(params, i, 0) == 1

    def test_index_bounds(self):
        with pytest.raises(InvalidParameterError):
            u_ij(GroupParams(2, 2, 1, 3), 3, 0)
        with pytest.raises(InvalidParameterError):
            u_ij(GroupParams(2, 2, 1, 3), 0, -1)


class TestKernelLog:
    def test_examples(self):
        assert kernel_log(GroupParams(2, 2, 1, 3), 0, 1) == 2
        assert kernel_log(GroupParams(2, 2, 1, 3), 0, 0) == 0
        assert kernel_log(GroupParams(2, 2, 1, 3), 2, 1) == 0
        assert kernel_log(GroupParams(3, 2, 1, 4), 0, 1) == 1

    def test_matches_norm_sum_valuation(self):
        # Independent route: the map is multiplication by the literal
        # geometric sum S = 1 + u + ... + u^(p^j - 1) on Z/p^(m-i), so
        # the kernel-size log is min(m-i, vp(S)) with S a big integer.
        for p, bound in ((2, 2**8), (3, 3**5), (5, 5**3)):
            for params in all_params(p, bound):
                for i in range(params.m + 1):
                    for j in range(params.n + 1):
                        u = u_ij(params, i, j)
                        s = sum(u**v for v in range(p**j))
                        want = min(params.m - i, vp(p, s))
                        assert kernel_log(params, i, j) == want, (params, i, j)

    def test_matches_counted_kernel(self):
        # Third route: literally count the solutions of S * x = 0.
        for params in (GroupParams(2, 3, 2, 3), GroupParams(2, 4, 2, 7),
                       GroupParams(3, 3, 1, 10), GroupParams(2, 4, 3, 15)):
            p = params.p
            for i in range(params.m + 1):
                for j in range(params.n + 1):
                    u = u_ij(params, i, j)
                    s = sum(u**v for v in range(p**j))
                    r = p ** (params.m - i)
                    count = sum(1 for x in range(r) if s * x % r == 0)
                    assert p ** kernel_log(params, i, j) == count

    def test_profile_bundles_fields(self):
        prof = kernel_profile(GroupParams(2, 2, 1, 3), 0, 1)
        assert (prof.i, prof.j, prof.u, prof.kernel_log) == (0, 1, 3, 2)


class TestCoefficients:
    def test_frozen_vectors(self):
        assert coefficients(GroupParams(2, 2, 1, 3)).counts == (1, 5, 3, 1)
        assert coefficients(GroupParams(2, 1, 1, 1)).counts == (1, 3, 1)
        assert coefficients(GroupParams(2, 2, 2, 3)).counts == (1, 3, 7, 3, 1)
        assert coefficients(GroupParams(2, 3, 1, 5)).counts == (1, 3, 3, 3, 1)
        assert coefficients(GroupParams(2, 3, 1, 3)).counts == (1, 5, 5, 3, 1)
        assert coefficients(GroupParams(2, 3, 1, 7)).counts == (1, 9, 5, 3, 1)

    def test_symmetric_endpoints_and_positivity(self):
        for params in all_params(2, 2**9):
            c = coefficients(params).counts
            assert c[0] == 1 and c[-1] == 1
            assert all(x >= 1 for x in c)

    def test_isomorphic_parameters_share_vector(self):
        for k1, k2 in [(3, 11), (5, 29), (7, 23), (9, 25)]:
            a = coefficients(GroupParams(2, 5, 3, k1))
            b = coefficients(GroupParams(2, 5, 3, k2))
            assert a.counts == b.counts

    def test_odd_p_k_independent(self):
        for p, bound in ((3, 3**6), (5, 5**4)):
            for m, n in sweep_cells(p, bound):
                vectors = {coefficients(GroupParams(p, m, n, k)).counts
                           for k in valid_k_set(p, m, n)}
                assert len(vectors) == 1

    def test_odd_p_matches_uniform_count_formula(self):
        for p, bound in ((3, 3**6), (5, 5**4)):
            for m, n in sweep_cells(p, bound):
                got = coefficients(GroupParams(p, m, n, 1)).counts
                want = quasiregular_counts(p, m + n, max(m, n))
                assert list(got) == want

    def test_invalid_k_rejected(self):
        with pytest.raises(InvalidParameterError):
            coefficients(GroupParams(2, 3, 1, 2))

    def test_as_order_map_and_json(self):
        c = coefficients(GroupParams(2, 2, 1, 3))
        assert c.as_order_map() == {1: 1, 2: 5, 4: 3, 8: 1}
        doc = json.loads(json.dumps(c.to_json_dict()))
        assert doc == {"p": 2, "m": 2, "n": 1,
                       "counts": ["1", "5", "3", "1"]}

    def test_vector_validation(self):
        with pytest.raises(InvalidParameterError):
            ZetaCoefficients(2, 2, 1, (1, 5, 3))
        with pytest.raises(InvalidParameterError):
            ZetaCoefficients(2, 2, 1, (1, 5, 3, 2))
        with pytest.raises(InvalidParameterError):
            ZetaCoefficients(2, 2, 1, (1, 0, 3, 1))


class TestTwoAdicSignature:
    def test_examples(self):
        sig = TwoAdicSignature.of(GroupParams(2, 5, 3, 7))
        assert (sig.s2, sig.cprime, sig.sigma) == (3, 1, 5)
        sig = TwoAdicSignature.of(GroupParams(2, 5, 3, 1))
        assert (sig.s2, sig.cprime, sig.sigma) == (1, 5, 3)

    def test_deep_s2_forces_shallow_cprime(self):
        # k = -1 (mod 4) makes k - 1 = 2 (mod 4) exactly.
        for params in all_params(2, 2**10):
            sig = TwoAdicSignature.of(params)
            if sig.s2 >= 2:
                assert sig.cprime == 1

    def test_odd_p_rejected(self):
        with pytest.raises(InvalidParameterError):
            TwoAdicSignature.of(GroupParams(3, 2, 1, 4))


class TestESequence:
    def test_frozen_examples(self):
        assert e_sequence(GroupParams(2, 5, 3, 7)) == [5, 4, 3, 2, 1]
        assert e_sequence(GroupParams(2, 5, 3, 1)) == [3, 3, 3, 2, 1]
        assert e_sequence(GroupParams(2, 5, 3, 3)) == [4, 4, 3, 2, 1]

    def test_matches_full_image_kernel_logs(self):
        # Independent route: the signature-driven sequence must equal
        # the j = n slice of the residue-driven kernel logs.
        for params in all_params(2, 2**10):
            seq = e_sequence(params)
            for i in range(params.m):
                assert seq[i] == kernel_log(params, i, params.n), (params, i)


class TestZetaEqualByTheorem:
    def test_frozen_examples(self):
        base = dict(p=2, m=5, n=3)
        assert zeta_equal_by_theorem(GroupParams(k=1, **base),
                                     GroupParams(k=17, **base))
        assert not zeta_equal_by_theorem(GroupParams(k=1, **base),
                                         GroupParams(k=3, **base))
        assert zeta_equal_by_theorem(GroupParams(3, 2, 1, 1),
                                     GroupParams(3, 2, 1, 4))

    def test_n_at_least_m_always_equal(self):
        for m, n in [(1, 1), (2, 2), (2, 3), (3, 3)]:
            ks = valid_k_set(2, m, n)
            for k1, k2 in itertools.combinations(ks, 2):
                assert zeta_equal_by_theorem(GroupParams(2, m, n, k1),
                                             GroupParams(2, m, n, k2))

    def test_agrees_with_vectors_everywhere(self):
        # The headline equivalence, formula side only: classifier
        # verdict == literal coefficient-vector equality.
        for p, bound in ((2, 2**10), (3, 3**5)):
            for m, n in sweep_cells(p, bound):
                ks = valid_k_set(p, m, n)
                vecs = {k: coefficients(GroupParams(p, m, n, k)).counts
                        for k in ks}
                for k1, k2 in itertools.combinations(ks, 2):
                    assert zeta_equal_by_theorem(
                        GroupParams(p, m, n, k1), GroupParams(p, m, n, k2)
                    ) == (vecs[k1] == vecs[k2]), (p, m, n, k1, k2)

    def test_isomorphic_implies_equal(self):
        for params in all_params(2, 2**8):
            for k2 in valid_k_set(params.p, params.m, params.n):
                other = GroupParams(params.p, params.m, params.n, k2)
                if is_isomorphic(params, other):
                    assert zeta_equal_by_theorem(params, other)

    def test_mismatched_base_rejected(self):
        with pytest.raises(InvalidParameterError):
            zeta_equal_by_theorem(GroupParams(2, 5, 3, 1),
                                  GroupParams(2, 5, 2, 1))


class TestQuasiregularCounts:
    def test_frozen_examples(self):
        assert quasiregular_counts(3, 3, 2) == [1, 4, 4, 1]
        assert quasiregular_counts(3, 2, 1) == [1, 4, 1]
        assert quasiregular_counts(5, 3, 2) == [1, 6, 6, 1]
        assert quasiregular_counts(3, 5, 3) == [1, 4, 13, 13, 4, 1]

    def test_rejects_bad_shape(self):
        with pytest.raises(InvalidParameterError):
            quasiregular_counts(2, 3, 2)
        with pytest.raises(InvalidParameterError):
            quasiregular_counts(3, 3, 3)
        with pytest.raises(InvalidParameterError):
            quasiregular_counts(3, 3, 0)
        with pytest.raises(InvalidParameterError):
            quasiregular_counts(3, 5, 2)  # two cyclic pieces cap ell at 2e

    def test_palindromic(self):
        for ell in range(2, 8):
            for e in range((ell + 1) // 2, ell):
                c = quasiregular_counts(3, ell, e)
                assert c == c[::-1]


class TestBerkovichShapes:
    def test_cyclic(self):
        assert berkovich_counts(BerkovichShape.cyclic(4)) == [1, 1, 1, 1, 1]
        assert berkovich_counts(BerkovichShape.cyclic(0)) == [1]

    def test_maximal_class(self):
        assert berkovich_counts(BerkovichShape.maximal_class("D", 3)) == [1, 5, 3, 1]
        assert berkovich_counts(BerkovichShape.maximal_class("Q", 3)) == [1, 1, 3, 1]
        assert berkovich_counts(BerkovichShape.maximal_class("D", 4)) == [1, 9, 5, 3, 1]
        assert berkovich_counts(BerkovichShape.maximal_class("Q", 4)) == [1, 1, 5, 3, 1]
        assert berkovich_counts(BerkovichShape.maximal_class("SD", 4)) == [1, 5, 5, 3, 1]

    def test_quaternion_has_unique_involution_subgroup(self):
        for ell in range(3, 9):
            assert berkovich_counts(BerkovichShape.maximal_class("Q", ell))[1] == 1

    def test_semidihedral_a2(self):
        for ell in range(4, 9):
            counts = berkovich_counts(BerkovichShape.maximal_class("SD", ell))
            assert counts[1] == 2 ** (ell - 2) + 1

    def test_omega_full(self):
        assert berkovich_counts(BerkovichShape.omega_full(1)) == [1, 3, 1]
        assert berkovich_counts(BerkovichShape.omega_full(2)) == [1, 3, 7, 3, 1]

    def test_cyclic_quotient(self):
        assert berkovich_counts(BerkovichShape.cyclic_quotient(1, 2)) == [1, 3, 3, 3, 1]
        assert berkovich_counts(BerkovichShape.cyclic_quotient(2, 1)) == [1, 3, 7, 7, 3, 1]

    def test_shape_validation(self):
        with pytest.raises(InvalidParameterError):
            BerkovichShape.maximal_class("SD", 3)
        with pytest.raises(InvalidParameterError):
            BerkovichShape.maximal_class("X", 4)
        with pytest.raises(InvalidParameterError):
            BerkovichShape.cyclic(-1)
        with pytest.raises(InvalidParameterError):
            BerkovichShape.omega_full(0)

    def test_unsupported_family(self):
        shape = BerkovichShape.maximal_quotient("D", 1, 3)
        with pytest.raises(UnsupportedShapeError):
            berkovich_counts(shape)


class TestDirichletMultiply:
    def test_examples(self):
        assert dirichlet_multiply({1: 1, 2: 1}, {1: 1, 3: 1}) == \
            {1: 1, 2: 1, 3: 1, 6: 1}
        assert dirichlet_multiply({1: 1}, {1: 1, 5: 2}) == {1: 1, 5: 2}

    def test_matches_subgroup_counts_of_product(self):
        d8 = {1: 1, 2: 5, 4: 3, 8: 1}
        z3 = {1: 1, 3: 1}
        assert dirichlet_multiply(d8, z3) == \
            {1: 1, 2: 5, 3: 1, 4: 3, 6: 5, 8: 1, 12: 3, 24: 1}

    def test_commutative_and_associative(self):
        f = {1: 1, 2: 3, 4: 2}
        g = {1: 1, 3: 4}
        h = {1: 2, 5: 1}
        assert dirichlet_multiply(f, g) == dirichlet_multiply(g, f)
        assert dirichlet_multiply(dirichlet_multiply(f, g), h) == \
            dirichlet_multiply(f, dirichlet_multiply(g, h))
