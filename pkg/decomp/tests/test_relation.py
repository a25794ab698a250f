from django.test import SimpleTestCase
from hypothesis import given, settings

from decomp.exceptions import SchemaError
from decomp.relation import (DONT_CARE, Attribute, Domain, Relation, Role, attributes,
                             cond_project, natural_join, project, relations_equal, select)

from .strategies import relations
from .tables import airline, xnor_table, xnor_with_w, output


def value_set(R: Relation, *names):
    return {R.restrict(t, names) for t in R.tids}


class DomainTests(SimpleTestCase):
    def test_needs_two_distinct_values(self):
        with self.assertRaises(SchemaError):
            Domain('x', ('0',))
        with self.assertRaises(SchemaError):
            Domain('x', ('0', '0'))

    def test_dont_care_is_reserved(self):
        with self.assertRaises(SchemaError):
            Domain('x', ('0', DONT_CARE))

    def test_rank_follows_declaration(self):
        d = Domain('x', ('lo', 'med', 'hi'))
        self.assertEqual([d.rank(v) for v in ('hi', 'lo', 'med')], [2, 0, 1])
        self.assertEqual(d.rank(DONT_CARE), 3)
        with self.assertRaisesMessage(SchemaError, "'top' is not in the domain of 'x'"):
            d.rank('top')


class RelationTests(SimpleTestCase):
    def test_duplicate_tuples_collapse(self):
        R = Relation(attributes('a', 'b'), [('0', '1'), ('0', '1'), ('1', '1')])
        self.assertEqual(len(R), 2)
        self.assertEqual(R.tids, (0, 2))
        self.assertEqual(R.sources(0), frozenset({0, 1}))

    def test_dont_care_only_in_outputs(self):
        schema = attributes('a') + [output()]
        Relation(schema, [('0', DONT_CARE)])
        with self.assertRaises(SchemaError):
            Relation(schema, [(DONT_CARE, '1')])

    def test_value_outside_domain(self):
        with self.assertRaises(SchemaError):
            Relation(attributes('a'), [('2',)])

    def test_repeated_attribute(self):
        with self.assertRaises(SchemaError):
            Relation(attributes('a', 'a'))

    def test_roles(self):
        R = xnor_with_w()
        self.assertEqual(R.inputs, ('x1', 'x2', 'x3', 'x4'))
        self.assertEqual(R.outputs, ('f',))
        self.assertEqual(R.bridges, ('W',))
        self.assertEqual(R.arguments, ('x1', 'x2', 'x3', 'x4', 'W'))

    def test_unknown_attribute(self):
        with self.assertRaisesMessage(SchemaError, 'unknown attribute(s): y'):
            xnor_table().ordered(['x1', 'y'])

    def test_tabulate_numbers_minterms(self):
        R = xnor_table()
        self.assertEqual(R.tids, tuple(range(16)))
        self.assertEqual(R.restrict(9, ('x1', 'x2', 'x3', 'x4')), ('1', '0', '0', '1'))

    def test_with_columns_rejects_taken_name(self):
        R = xnor_table()
        with self.assertRaises(SchemaError):
            R.with_columns([Attribute(Domain.binary('x1'), Role.BRIDGE)],
                           {t: ('0',) for t in R.tids})


class ProjectTests(SimpleTestCase):
    def test_airline_flight_day(self):
        R = project(airline(), ['F', 'D'])
        self.assertEqual(value_set(R, 'F', 'D'), {
            ('106', 'Mon.'), ('106', 'Thur.'), ('204', 'Wed.'), ('204', 'Fri.')})
        # the smallest source id names the tuple
        self.assertEqual(R.tids, (1, 2, 5, 6))
        self.assertEqual(R.sources(1), frozenset({1, 3}))

    def test_all_attributes_is_identity(self):
        R = airline()
        self.assertTrue(relations_equal(project(R, R.names), R))

    def test_bound_set_with_bridge(self):
        R = project(xnor_with_w(), ['x1', 'x4', 'W'])
        self.assertEqual(value_set(R, 'x1', 'x4', 'W'), {
            ('0', '0', '1'), ('0', '1', '0'), ('1', '0', '0'), ('1', '1', '1')})


class ConditionalProjectTests(SimpleTestCase):
    def test_block_of_bridge_value(self):
        R = xnor_with_w()
        self.assertEqual(select(R, {'W': '1'}).tids, (0, 2, 4, 6, 9, 11, 13, 15))
        self.assertEqual(value_set(cond_project(R, ['x1', 'x4'], {'W': '1'}), 'x1', 'x4'),
                         {('0', '0'), ('1', '1')})

    def test_no_match_is_empty(self):
        R = cond_project(airline(), ['P'], {'F': '106', 'D': 'Wed.'})
        self.assertEqual(len(R), 0)

    def test_airline_is_a_product(self):
        R = cond_project(airline(), ['P', 'D'], {'F': '106'})
        self.assertEqual(value_set(R, 'P', 'D'), {
            ('747', 'Mon.'), ('747', 'Thur.'), ('1011', 'Mon.'), ('1011', 'Thur.')})

    def test_value_outside_domain(self):
        with self.assertRaises(SchemaError):
            cond_project(airline(), ['P'], {'F': '999'})


class JoinTests(SimpleTestCase):
    def test_airline_is_lossless(self):
        R = airline()
        self.assertTrue(relations_equal(natural_join(project(R, ['F', 'D']),
                                                     project(R, ['F', 'P'])), R))

    def test_self_join(self):
        R = airline()
        self.assertTrue(relations_equal(natural_join(R, R), R))

    def test_bridge_tables_rebuild_the_table(self):
        T_wf = xnor_with_w()
        joined = natural_join(project(T_wf, ['x1', 'x4', 'W']),
                              project(T_wf, ['W', 'x2', 'x3', 'f']))
        self.assertEqual(len(joined), 16)
        self.assertTrue(relations_equal(joined, T_wf))

    def test_disjoint_schemas_give_the_product(self):
        a = Relation(attributes('a'), [('0',), ('1',)])
        b = Relation(attributes('b'), [('0',), ('1',)])
        self.assertEqual(len(natural_join(a, b)), 4)

    def test_mismatched_domains(self):
        a = Relation(attributes('a'), [('0',)])
        b = Relation(attributes('a', values=('0', '1', '2')), [('0',)])
        with self.assertRaises(SchemaError):
            natural_join(a, b)

    def test_equality_ignores_column_order(self):
        R = airline()
        self.assertTrue(relations_equal(project(R, ['P', 'F', 'D']), R))
        self.assertFalse(relations_equal(project(R, ['F', 'D']), R))

    @settings(max_examples=200, derandomize=True, deadline=None)
    @given(relations())
    def test_join_of_projections_contains_relation(self, R):
        half = R.names[:len(R.names) // 2 + 1]
        other = R.names[len(R.names) // 2:]
        joined = natural_join(project(R, half), project(R, other))
        self.assertTrue({v for _, v in R} <= {joined.restrict(t, R.names) for t in joined.tids})

    @settings(max_examples=200, derandomize=True, deadline=None)
    @given(relations())
    def test_projection_is_idempotent(self, R):
        names = R.names[::2]
        once = project(R, names)
        self.assertTrue(relations_equal(project(once, names), once))
