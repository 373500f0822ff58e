"""
Allows `python -m redraw_core`
"""
from redraw_core.cli import app

app(prog_name='redraw')
