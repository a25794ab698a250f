from django.test import SimpleTestCase
from hypothesis import given, settings

from decomp.exceptions import UniverseMismatch
from decomp.partition import (Partition, canonicalize, induced_partition, join_partition, meet,
                              refines)

from .strategies import partitions, relations
from .tables import airline, xnor_table

lattice_settings = settings(max_examples=200, derandomize=True, deadline=None)


class PartitionTests(SimpleTestCase):
    def test_canonical_form(self):
        p = Partition(((5, 3), (4, 0), (1,)))
        self.assertEqual(p.blocks, ((0, 4), (1,), (3, 5)))
        self.assertEqual(str(p), '{t0 t4 | t1 | t3 t5}')

    def test_labels_follow_blocks_and_are_ignored_by_equality(self):
        p = Partition(((3,), (1,)), labels=(('b',), ('a',)))
        self.assertEqual(p.labels, (('a',), ('b',)))
        self.assertEqual(p, Partition(((1,), (3,))))

    def test_rejects_overlap_and_empty_blocks(self):
        with self.assertRaises(ValueError):
            Partition(((0, 1), (1, 2)))
        with self.assertRaises(ValueError):
            Partition(((0,), ()))

    def test_top_and_bottom(self):
        self.assertEqual(Partition.top(range(3)).blocks, ((0, 1, 2),))
        self.assertEqual(len(Partition.bottom(range(3))), 3)


class InducedPartitionTests(SimpleTestCase):
    def test_bound_set_blocks(self):
        p = induced_partition(xnor_table(), ['x1', 'x4'])
        self.assertEqual(len(p), 4)
        self.assertEqual(p.blocks[0], (0, 2, 4, 6))
        self.assertEqual(p.labels[0], ('0', '0'))

    def test_all_inputs_give_bottom(self):
        R = xnor_table()
        self.assertEqual(induced_partition(R, R.inputs), Partition.bottom(R.tids))

    def test_empty_set_gives_top(self):
        R = xnor_table()
        self.assertEqual(induced_partition(R, []), Partition.top(R.tids))

    def test_airline_by_flight(self):
        self.assertEqual(induced_partition(airline(), ['F']).blocks, ((1, 2, 3, 4), (5, 6, 7, 8)))


class LatticeTests(SimpleTestCase):
    def test_disjoint_inputs_meet_in_bottom(self):
        R = xnor_table()
        p = meet(induced_partition(R, ['x1', 'x4']), induced_partition(R, ['x2', 'x3']))
        self.assertEqual(p, Partition.bottom(R.tids))

    def test_airline_meet(self):
        R = airline()
        p = meet(induced_partition(R, ['F']), induced_partition(R, ['D']))
        self.assertEqual(p.blocks, ((1, 3), (2, 4), (5, 7), (6, 8)))
        self.assertEqual(p, induced_partition(R, ['F', 'D']))

    def test_airline_join_by_flight(self):
        R = airline()
        p = join_partition(induced_partition(R, ['F', 'D']), induced_partition(R, ['F', 'P']))
        self.assertEqual(p.blocks, ((1, 2, 3, 4), (5, 6, 7, 8)))

    def test_disjoint_inputs_join_in_top(self):
        R = xnor_table()
        p = join_partition(induced_partition(R, ['x1', 'x4']), induced_partition(R, ['x2', 'x3']))
        self.assertEqual(p, Partition.top(R.tids))

    def test_refines(self):
        R = xnor_table()
        py = induced_partition(R, ['x1', 'x4'])
        self.assertTrue(refines(Partition.bottom(R.tids), py))
        self.assertFalse(refines(py, induced_partition(R, ['x2', 'x3'])))

    def test_universe_mismatch(self):
        with self.assertRaises(UniverseMismatch):
            meet(Partition.top(range(3)), Partition.top(range(4)))
        with self.assertRaises(UniverseMismatch):
            refines(Partition.top(range(3)), Partition.top(range(4)))

    @lattice_settings
    @given(partitions())
    def test_idempotence_and_commutativity(self, ps):
        a, b, _ = ps
        self.assertEqual(meet(a, a), a)
        self.assertEqual(join_partition(a, a), a)
        self.assertEqual(meet(a, b), meet(b, a))
        self.assertEqual(join_partition(a, b), join_partition(b, a))

    @lattice_settings
    @given(partitions())
    def test_associativity(self, ps):
        a, b, c = ps
        self.assertEqual(meet(meet(a, b), c), meet(a, meet(b, c)))
        self.assertEqual(join_partition(join_partition(a, b), c),
                         join_partition(a, join_partition(b, c)))

    @lattice_settings
    @given(partitions())
    def test_absorption(self, ps):
        a, b, _ = ps
        self.assertEqual(meet(a, join_partition(a, b)), a)
        self.assertEqual(join_partition(a, meet(a, b)), a)

    @lattice_settings
    @given(partitions())
    def test_refinement_agrees_with_meet_and_join(self, ps):
        a, b, _ = ps
        self.assertEqual(refines(a, b), meet(a, b) == a)
        self.assertEqual(refines(a, b), join_partition(a, b) == b)

    @lattice_settings
    @given(partitions())
    def test_canonical_form_is_a_fixed_point(self, ps):
        a = ps[0]
        self.assertEqual(canonicalize(a.blocks).blocks, a.blocks)

    @lattice_settings
    @given(relations())
    def test_union_of_attributes_is_the_meet(self, R):
        x, y = R.names[::2], R.names[1::2]
        self.assertEqual(induced_partition(R, x + y),
                         meet(induced_partition(R, x), induced_partition(R, y)))
