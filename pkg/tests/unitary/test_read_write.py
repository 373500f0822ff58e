"""
Module testing low-level read-write methods
"""
from pathlib import Path

from redraw_core import dumps_json
from redraw_core import load_yaml_file
from redraw_core import loads_json
from redraw_core import SafeTestCase
from redraw_core.read_write import load_text_file

TEST_DIR = Path(__file__).resolve().parent


class ReadWriteTest(SafeTestCase):
    """
    Class testing low-level read-write methods
    """

    def test_read_write(self):
        """
        test json text round trip through a file
        """
        data = {'d': 2, 'points': ['p0'], 'normals': {'h0': ['1/2', '3']}}
        target = TEST_DIR / 'read_write_test.json'
        self.files_created.append(target)
        target.write_text(dumps_json(data), encoding='utf-8')
        self.assertEqual(loads_json(load_text_file(target)), data)

    def test_deterministic_dump(self):
        """
        Keys keep their insertion order, indentation is two spaces
        """
        self.assertEqual(dumps_json({'b': 1, 'a': [True, None]}),
                         '{\n  "b": 1,\n  "a": [\n    true,\n    null\n  ]\n}')

    def test_syntax_error(self):
        """
        Malformed json raises a ValueError
        """
        with self.assertRaises(ValueError):
            loads_json('{"d": ')

    def test_load_yaml(self):
        """
        Yaml configuration files load as nested dictionaries
        """
        loaded = load_yaml_file(TEST_DIR / 'data' / 'config' / 'local.yaml')
        self.assertEqual(loaded['matroid']['repetitions'], 5)
