"""
File-backed settings.

A settings class reads, highest priority first: constructor arguments, ``JSJCUBE_*``
environment variables, a ``.env`` file, then its YAML file. Instances exposed through
``settings_property`` are re-read whenever that YAML file changes on disk, until a
caller pins them.
"""

from __future__ import annotations

import inspect
import typing as t
from io import StringIO
from pathlib import Path

import ruamel.yaml
from memoization import CachingAlgorithmFlag, cached
from pydantic import PrivateAttr
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    YamlConfigSettingsSource,
)
from ruamel.yaml.comments import CommentedMap

__all__ = [
    "BaseFileSettings",
    "SettingsConfigDict",
    "import_yaml",
    "settings_property",
]


def import_yaml() -> ruamel.yaml.YAML:
    """round-trip YAML with two-space maps and indented sequences"""
    yaml = ruamel.yaml.YAML()
    yaml.indent(mapping=2, sequence=4, offset=2)
    return yaml


def _dump(data: t.Any) -> str:
    buffer = StringIO()
    import_yaml().dump(data, buffer)
    return buffer.getvalue()


class BaseFileSettings(BaseSettings):
    model_config = SettingsConfigDict(
        use_attribute_docstrings=True,
        extra="ignore",
        yaml_file_encoding="utf-8",
        env_file_encoding="utf-8",
    )

    _pinned: bool = PrivateAttr(default=False)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (
            init_settings,
            env_settings,
            dotenv_settings,
            YamlConfigSettingsSource(settings_cls),
        )

    @property
    def pinned(self) -> bool:
        return self._pinned

    def pin(self, **values: t.Any) -> None:
        """Set fields in place and stop re-reading them from disk. ``None`` values are skipped."""
        for name, value in values.items():
            if value is not None:
                setattr(self, name, value)
        self._pinned = True

    def reload(self) -> None:
        if not self._pinned:
            self.__init__()

    def template(self) -> CommentedMap:
        """current values as a YAML mapping, commented with the field docstrings"""
        fields = type(self).model_fields
        doc = CommentedMap()
        for name, value in self.model_dump(mode="json").items():
            doc[name] = value
            if description := fields[name].description:
                doc.yaml_set_comment_before_after_key(name, before="\n" + description, indent=0)
        if type(self).__doc__:
            doc.yaml_set_start_comment(inspect.cleandoc(type(self).__doc__))
        return doc

    def create_template_file(self, write_file: bool | str | Path = False) -> str:
        """Render ``template()``. ``write_file=True`` writes it to the class's own YAML file."""
        text = _dump(self.template())
        target = self.model_config.get("yaml_file") if write_file is True else write_file
        if target:
            Path(target).write_text(text, encoding="utf-8")
        return text


_S = t.TypeVar("_S", bound=BaseFileSettings)


def _disk_stamp(settings: BaseFileSettings) -> t.Tuple:
    stamps: t.List[int | None] = []
    for option in ("env_file", "yaml_file"):
        path = settings.model_config.get(option)
        if isinstance(path, (str, Path)) and Path(path).is_file():
            stamps.append(Path(path).stat().st_mtime_ns)
        else:
            stamps.append(None)
    return (id(settings), *stamps)


@cached(
    max_size=8,
    algorithm=CachingAlgorithmFlag.LRU,
    thread_safe=True,
    custom_key_maker=_disk_stamp,
)
def _current(settings: _S) -> _S:
    settings.reload()
    return settings


def settings_property(settings: _S) -> property:
    """a read-only property that hands out ``settings``, refreshed when its files change"""
    return property(lambda self: _current(settings))
