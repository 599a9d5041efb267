from typing import Protocol


class SettingsProtocol(Protocol):
    tool_name: str
    tool_version: str
    environment: str
    log_level: str
    enable_json_logging: bool
