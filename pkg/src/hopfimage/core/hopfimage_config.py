from pydantic import BaseSettings
from typing import Dict, Any, Optional
from .profile import Profile
from .exceptions import ConfigurationError
import yaml
import logging
from pathlib import Path

DEFAULT_CONFIG_PATH = Path.home() / '.hopfimage' / 'config.yaml'


class HopfImageConfig(BaseSettings):
    """Named profiles plus an optional logging dictConfig, loaded from YAML."""
    version: float = 1.0
    profiles: Dict[str, Profile] = {}
    logging_config: Optional[Dict[str, Any]] = None  # dictConfig from the "logging:" section
    default_profile: str = 'default'

    class Config:
        env_prefix = 'HOPFIMAGE_CONFIG_'

    def get_active_profile(self) -> Profile:
        """Retrieve the currently active profile"""
        return self.retrieve_profile(self.default_profile)

    def retrieve_profile(self, profile_name: str) -> Profile:
        """Retrieve a profile by name; only 'default' may be absent from the file"""
        if profile_name in self.profiles:
            return self.profiles[profile_name]
        if profile_name == 'default':
            return Profile()
        raise ConfigurationError(
            f"Unknown profile '{profile_name}'. Known profiles: {', '.join(sorted(self.profiles)) or 'none'}"
        )

    @classmethod
    def from_yaml(cls, file_path) -> 'HopfImageConfig':
        """ Create an instance of HopfImageConfig from a YAML file"""
        config_data = cls.load_config_data(file_path)
        profiles = cls.extract_profiles_from_data(config_data)
        return cls(
            version=config_data.get('version', 1.0),
            profiles=profiles,
            logging_config=config_data.get('logging'),
        )

    @classmethod
    def load(cls, file_path: Optional[str] = None) -> 'HopfImageConfig':
        """Load the given file, the default file if it exists, or built-in defaults."""
        if file_path is not None:
            return cls.from_yaml(file_path)
        if DEFAULT_CONFIG_PATH.exists():
            return cls.from_yaml(DEFAULT_CONFIG_PATH)
        return cls(profiles={'default': Profile()})

    @staticmethod
    def load_config_data(file_path) -> Dict[str, Any]:
        """ Load configuration data from a YAML file"""
        try:
            with open(file_path, 'r') as file:
                return yaml.safe_load(file) or {}
        except (OSError, yaml.YAMLError) as e:
            logging.error(f"Error loading configuration from {file_path}: {e}")
            raise ConfigurationError(f"Cannot load configuration from {file_path}: {e}") from e

    @staticmethod
    def extract_profiles_from_data(config_data: Dict[str, Any]) -> Dict[str, Profile]:
        """ Extract profile data from configuration data and create Profile instances"""
        profiles = {}
        for name, data in (config_data.get('profiles') or {}).items():
            try:
                profiles[name] = Profile(**(data or {}))
            except ValueError as e:
                raise ConfigurationError(f"Invalid profile '{name}': {e}") from e
        if 'default' not in profiles:
            profiles['default'] = Profile()
        return profiles

    def update_from_cli(self, profile: str, **cli_args) -> Profile:
        """ Return a copy of the named profile with every non-None CLI argument applied"""
        base = self.retrieve_profile(profile)
        overrides = {name: value for name, value in cli_args.items()
                     if value is not None and name in Profile.__fields__}
        try:
            return Profile(**{**base.dict(), **overrides})
        except ValueError as e:
            raise ConfigurationError(f"Invalid option: {e}") from e
