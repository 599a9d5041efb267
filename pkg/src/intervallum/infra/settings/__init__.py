from intervallum.infra.settings.base import ToolkitSettings
from intervallum.infra.settings.protocols import SettingsProtocol

__all__ = [
    "ToolkitSettings",
    "SettingsProtocol",
]
