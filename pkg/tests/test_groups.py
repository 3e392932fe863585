import itertools
import json

import pytest

from metazeta import (GroupParams, InvalidParameterError, KPartition,
                      ResourceLimitError, cyclic_spans_equal, is_isomorphic,
                      is_valid, iso_classes, valid_k_set)

from conftest import sweep_cells


class TestGroupParams:
    def test_basic_properties(self):
        g = GroupParams(2, 5, 3, 7)
        assert (g.pm, g.pn, g.order) == (32, 8, 256)

    def test_k_canonicalized_mod_pm(self):
        assert GroupParams(2, 5, 3, -1).k == 31
        assert GroupParams(2, 5, 3, 39).k == 7

    def test_rejects_bad_parameters(self):
        with pytest.raises(InvalidParameterError):
            GroupParams(4, 2, 1, 1)
        with pytest.raises(InvalidParameterError):
            GroupParams(2, 0, 1, 1)
        with pytest.raises(InvalidParameterError):
            GroupParams(2, 2, 0, 1)


class TestIsValid:
    def test_examples(self):
        assert is_valid(GroupParams(2, 2, 1, 3))
        assert is_valid(GroupParams(3, 2, 1, 4))
        assert not is_valid(GroupParams(2, 2, 1, 2))
        assert not is_valid(GroupParams(3, 2, 1, 2))

    def test_k_one_always_valid(self):
        for p, m, n in [(2, 1, 1), (3, 4, 2), (5, 2, 3)]:
            assert is_valid(GroupParams(p, m, n, 1))


class TestValidKSet:
    def test_frozen_examples(self):
        assert valid_k_set(2, 5, 3) == list(range(1, 32, 2))
        assert valid_k_set(2, 1, 1) == [1]
        assert valid_k_set(2, 2, 1) == [1, 3]
        assert valid_k_set(3, 2, 1) == [1, 4, 7]

    def test_matches_definition(self):
        for p, m, n in [(2, 4, 2), (3, 3, 1), (5, 2, 1)]:
            got = valid_k_set(p, m, n)
            want = [k for k in range(p**m) if pow(k, p**n, p**m) == 1]
            assert got == want

    def test_counts_for_p2(self):
        # 1 for m = 1; 2 for m = 2; 2 * 2^min(m-2, n) once m >= 3.
        for m, n in sweep_cells(2, 2**9):
            count = len(valid_k_set(2, m, n))
            if m == 1:
                assert count == 1
            elif m == 2:
                assert count == 2
            else:
                assert count == 2 * 2 ** min(m - 2, n)

    def test_enum_bound(self):
        with pytest.raises(ResourceLimitError):
            valid_k_set(2, 30, 1, enum_bound=2**20)

    def test_rejects_bad_parameters(self):
        with pytest.raises(InvalidParameterError):
            valid_k_set(6, 2, 1)
        with pytest.raises(InvalidParameterError):
            valid_k_set(2, 0, 1)


class TestIsIsomorphic:
    def test_frozen_examples(self):
        base = dict(p=2, m=5, n=3)
        assert is_isomorphic(GroupParams(k=3, **base), GroupParams(k=11, **base))
        assert is_isomorphic(GroupParams(k=5, **base), GroupParams(k=29, **base))
        assert not is_isomorphic(GroupParams(k=7, **base), GroupParams(k=15, **base))
        assert not is_isomorphic(GroupParams(k=1, **base), GroupParams(k=5, **base))

    def test_mismatched_base_rejected(self):
        with pytest.raises(InvalidParameterError):
            is_isomorphic(GroupParams(2, 2, 1, 3), GroupParams(2, 2, 2, 3))

    def test_invalid_k_rejected(self):
        with pytest.raises(InvalidParameterError):
            is_isomorphic(GroupParams(2, 2, 1, 2), GroupParams(2, 2, 1, 3))

    def test_agrees_with_cyclic_span_route(self):
        # Two independent decisions: unit-power orbit membership vs
        # equality of the generated power sets.
        for p, bound in ((2, 2**8), (3, 3**5), (5, 5**3)):
            for m, n in sweep_cells(p, bound):
                for k1, k2 in itertools.combinations(valid_k_set(p, m, n), 2):
                    a, b = GroupParams(p, m, n, k1), GroupParams(p, m, n, k2)
                    assert is_isomorphic(a, b) == cyclic_spans_equal(a, b)


class TestIsoClasses:
    def test_frozen_partition_2_5_3(self):
        part = iso_classes(2, 5, 3)
        assert part.blocks == ((1,), (3, 11, 19, 27), (5, 13, 21, 29),
                               (7, 23), (9, 25), (15,), (17,), (31,))

    def test_partition_covers_valid_set(self):
        for p, m, n in [(2, 4, 2), (3, 2, 2), (5, 2, 1)]:
            part = iso_classes(p, m, n)
            flat = sorted(k for b in part.blocks for k in b)
            assert flat == valid_k_set(p, m, n)

    def test_is_the_equivalence_kernel(self):
        # Exhaustive: same block <=> is_isomorphic, for every pair.
        for p, bound in ((2, 2**10), (3, 3**6)):
            for m, n in sweep_cells(p, bound):
                part = iso_classes(p, m, n)
                ks = valid_k_set(p, m, n)
                for k1, k2 in itertools.combinations(ks, 2):
                    same = part.block_of(k1) is part.block_of(k2)
                    assert same == is_isomorphic(GroupParams(p, m, n, k1),
                                                 GroupParams(p, m, n, k2))

    def test_block_sizes_divide_unit_group_order(self):
        # A block is the generator set of one cyclic unit subgroup, so
        # its size phi(ord k) divides phi(p^n).
        for p, m, n in [(2, 5, 3), (2, 6, 2), (3, 3, 2), (5, 2, 1)]:
            phi = p**n - p ** (n - 1)
            for block in iso_classes(p, m, n).blocks:
                assert phi % len(block) == 0


class TestKPartition:
    def test_representatives_and_block_of(self):
        part = iso_classes(2, 5, 3)
        assert part.representatives() == (1, 3, 5, 7, 9, 15, 17, 31)
        assert part.block_of(27) == (3, 11, 19, 27)
        with pytest.raises(KeyError):
            part.block_of(2)

    def test_blocks_sorted_by_minimum(self):
        part = iso_classes(2, 6, 3)
        mins = [b[0] for b in part.blocks]
        assert mins == sorted(mins)
        assert all(list(b) == sorted(b) for b in part.blocks)

    def test_json_shape(self):
        part = iso_classes(3, 2, 1)
        doc = json.loads(json.dumps(part.to_json_dict()))
        assert doc == {"p": 3, "m": 2, "n": 1, "kind": "isomorphism",
                       "blocks": [[1], [4, 7]]}

    def test_rejects_overlapping_blocks(self):
        with pytest.raises(InvalidParameterError):
            KPartition(2, 2, 1, "isomorphism", ((1, 3), (3,)))
