"""
Module defining a dynamic setting class
"""
from contextlib import suppress
from pathlib import Path

from pydantic.v1.utils import deep_update
from pydantic_settings import BaseSettings
from pydantic_settings import SettingsConfigDict

from redraw_core.list_utils import dict_to_class
from redraw_core.read_write import load_yaml_file

DEFAULTS: dict = {
    'exact': {'prime': 2 ** 31 - 1},
    'matroid': {'deterministic_threshold': 24, 'brute_force_threshold': 12, 'repetitions': 3},
    'checks': {'random_bound': 99, 'trials': 100},
    'census': {'trials': 1, 'max_minors': 20000},
    'cli': {'seed': 0},
}
"""
Values used whenever the yaml configuration does not define them
"""


class EnvironmentSetting(BaseSettings):
    """
    Settings class used to load the configuration profile from environment variables.
    """
    environment: str = 'local'
    base_path: str = str(Path(__file__).resolve().parents[1])
    model_config = SettingsConfigDict(env_file='.env', env_prefix='REDRAW_', extra='ignore')


ENVIRONMENT_SETTINGS = EnvironmentSetting()
ENVIRONMENT = ENVIRONMENT_SETTINGS.environment.lower()
BASE_PATH = Path(ENVIRONMENT_SETTINGS.base_path)


class Settings:
    """
    Dynamic setting class, loading yaml configuration from config file on top of DEFAULTS, possibly
    overwriting some of this configuration with additional information coming from a secret file.
    """

    def __init__(self, base_path: Path = BASE_PATH, environment: str = ENVIRONMENT):
        """
        Dynamically setting Settings attributes, doing so recursively.
        """
        self.environment = environment
        data = DEFAULTS
        with suppress(FileNotFoundError):
            data = deep_update(data, load_yaml_file(base_path / 'config' / f'{environment}.yaml') or {})
            if (secrets_file := base_path / 'secrets' / f'{environment}.yaml').exists():
                data = deep_update(data, load_yaml_file(secrets_file) or {})
        for k, v in dict_to_class(data).items():
            setattr(self, k, v)


SETTINGS = Settings()
