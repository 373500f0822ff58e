"""
Module regrouping low level reading and writing helper methods
"""
from pathlib import Path
from typing import Any
from typing import Union

import orjson
import yaml


def dumps_json(json_data: Any) -> str:
    """
    Deterministic json text of json_data: two spaces indentation, insertion ordered keys
    """
    return orjson.dumps(json_data, option=orjson.OPT_INDENT_2).decode('utf-8')


def loads_json(text: Union[str, bytes]) -> Any:
    """
    Parse json text. Raises orjson.JSONDecodeError (a ValueError) on syntax errors
    """
    return orjson.loads(text)


def load_text_file(file_path: Path) -> str:
    """
    Load a utf-8 text file at file_path location
    """
    with open(file_path, 'r', encoding='utf-8') as f:
        return f.read()


def load_yaml_file(file_path: Path):
    """
    Load a yaml file at file_path location
    """
    with open(file_path) as file:
        loaded_yaml = yaml.safe_load(file)

    return loaded_yaml
