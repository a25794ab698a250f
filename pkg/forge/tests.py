from django.test import SimpleTestCase

from forge.utils import SeqMode, UnionFind, ceil_log2, deepmerge, split_names


class DeepmergeTests(SimpleTestCase):
    def test_nested(self):
        merged = deepmerge({'a': {'b': [1]}, 'c': 1}, {'a': {'b': [2], 'd': 3}, 'c': 2})
        self.assertEqual(merged, {'a': {'b': [1, 2], 'd': 3}, 'c': 2})

    def test_override_sequences(self):
        self.assertEqual(deepmerge({'h': ['x']}, {'h': []}, SeqMode.OVERRIDE), {'h': []})

    def test_unsupported_type(self):
        with self.assertRaises(TypeError):
            deepmerge(object(), object())


class UnionFindTests(SimpleTestCase):
    def test_groups_keep_registration_order(self):
        uf = UnionFind(range(5))
        uf.union(3, 1)
        uf.union(4, 0)
        self.assertTrue(uf.connected(0, 4))
        self.assertFalse(uf.connected(0, 1))
        self.assertEqual(sorted(map(sorted, uf.groups())), [[0, 4], [1, 3], [2]])
        self.assertEqual(uf.groups()[0][0], 0)

    def test_lazy_registration(self):
        uf: UnionFind[str] = UnionFind()
        uf.union('a', 'b')
        self.assertIn('a', uf)
        self.assertEqual(len(uf), 2)


class HelperTests(SimpleTestCase):
    def test_ceil_log2(self):
        self.assertEqual([ceil_log2(n) for n in (0, 1, 2, 3, 4, 5, 8, 9)], [0, 0, 1, 2, 2, 3, 3, 4])

    def test_split_names(self):
        self.assertEqual(split_names('x1,x4'), ['x1', 'x4'])
        self.assertEqual(split_names(' x1  x4, '), ['x1', 'x4'])
        self.assertEqual(split_names(None), [])
