"""capg config objects."""
import logging
import os

from funcy import cached_property, memoize

from .exceptions import CapgException

logger = logging.getLogger(__name__)


class ConfigError(CapgException):
    """capg config exception."""

    def __init__(self, msg):
        super().__init__(f"config file error: {msg}")


@memoize
def get_compiled_schema():
    from voluptuous import Schema

    from .config_schema import SCHEMA

    return Schema(SCHEMA)


class Config(dict):
    """Layered configuration for the capg tools.

    Args:
        root_dir (str): optional directory holding a `.capg/config`
            file. The current working directory by default.
        validate (bool): optional flag to tell capg if it should validate
            the config or just load it as is. 'True' by default.
        config (dict): optional overrides merged on top of the files.

    Raises:
        ConfigError: thrown if config has an invalid format.
    """

    APPNAME = "capg"
    APPAUTHOR = "capg"

    SYSTEM_LEVELS = ("system", "global")
    REPO_LEVELS = ("repo",)
    # In the order they shadow each other
    LEVELS = SYSTEM_LEVELS + REPO_LEVELS

    CONFIG_DIR = ".capg"
    CONFIG = "config"

    def __init__(
        self, root_dir=None, validate=True, config=None
    ):  # pylint: disable=super-init-not-called
        self.root_dir = os.path.abspath(root_dir or os.curdir)
        self.load(validate=validate, config=config)

    @classmethod
    def get_dir(cls, level):
        from appdirs import site_config_dir, user_config_dir

        assert level in ("global", "system")

        if level == "global":
            return user_config_dir(cls.APPNAME, cls.APPAUTHOR)
        return site_config_dir(cls.APPNAME, cls.APPAUTHOR)

    @cached_property
    def files(self):
        files = {
            level: os.path.join(self.get_dir(level), self.CONFIG)
            for level in self.SYSTEM_LEVELS
        }
        files["repo"] = os.path.join(
            self.root_dir, self.CONFIG_DIR, self.CONFIG
        )
        return files

    def load(self, validate=True, config=None):
        """Loads config from all the config files.

        Raises:
            ConfigError: thrown if config has an invalid format.
        """
        conf = self.load_config_to_level()

        if config is not None:
            merge(conf, config)

        if validate:
            conf = self.validate(conf)

        self.clear()
        self.update(conf)

    def _load_config(self, level):
        from configobj import ConfigObj, ConfigObjError

        filename = self.files[level]

        if not os.path.exists(filename):
            return {}

        logger.debug("Reading '%s'.", filename)
        try:
            conf_obj = ConfigObj(filename, encoding="utf-8")
        except (ConfigObjError, UnicodeDecodeError) as exc:
            raise ConfigError(str(exc)) from exc
        return _lower_keys(conf_obj.dict())

    def load_one(self, level):
        conf = self._load_config(level)

        # Auto-verify sections
        for key in get_compiled_schema().schema:
            conf.setdefault(key, {})

        return conf

    def load_config_to_level(self, level=None):
        merged_conf = {}
        for merge_level in self.LEVELS:
            if merge_level == level:
                break
            merge(merged_conf, self.load_one(merge_level))
        return merged_conf

    @staticmethod
    def validate(data):
        from voluptuous import Invalid

        try:
            return get_compiled_schema()(data)
        except Invalid as exc:
            raise ConfigError(str(exc)) from None


def merge(into, update):
    """Merges second dict into first recursively"""
    for key, val in update.items():
        if isinstance(into.get(key), dict) and isinstance(val, dict):
            merge(into[key], val)
        else:
            into[key] = val


def _lower_keys(data):
    return {
        k.lower(): _lower_keys(v) if isinstance(v, dict) else v
        for k, v in data.items()
    }
