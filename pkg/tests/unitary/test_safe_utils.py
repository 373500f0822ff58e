"""
Module testing safe execution of commands
"""
import typer

from redraw_core import safe_clt
from redraw_core import SafeTestCase
from redraw_core.exceptions import GeometryError
from redraw_core.safe_utils import EXIT_INPUT_ERROR
from redraw_core.safe_utils import EXIT_VANISHES


@safe_clt
def safe_divide(a: int, b: int):
    """
    Safe test divide for testing clt wrapper purposes.
    """
    return a / b


@safe_clt
def refuse_geometry():
    """
    Command failing with a library error
    """
    raise GeometryError('duplicate point labels')


@safe_clt
def vanish():
    """
    Command leaving with its own exit code
    """
    raise typer.Exit(code=EXIT_VANISHES)


class SafeUtilsTest(SafeTestCase):
    """
    Class testing safe execution of commands
    """

    def test_safe_clt(self):
        """
        Test that safe wrapper is working as intended.
        """
        self.assertEqual(safe_divide(1, 2), 0.5)
        with self.assertRaises(typer.Exit) as context:
            safe_divide(1, 0)
        self.assertEqual(context.exception.exit_code, EXIT_INPUT_ERROR)
        with self.assertRaises(typer.Exit) as context:
            refuse_geometry()
        self.assertEqual(context.exception.exit_code, EXIT_INPUT_ERROR)

    def test_exit_codes_pass_through(self):
        """
        Exits raised by the command itself are kept
        """
        with self.assertRaises(typer.Exit) as context:
            vanish()
        self.assertEqual(context.exception.exit_code, EXIT_VANISHES)
        self.assertEqual(safe_divide.__name__, 'safe_divide')
