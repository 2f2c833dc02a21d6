import os

from pydantic import BaseModel, ConfigDict, field_validator

LOGGING_LEVEL = os.getenv("LOGGING_LEVEL", "INFO")
# "console" for people, "json" for log collectors.
LOG_FORMAT = os.getenv("SCHUBDEG_LOG_FORMAT", "console")

# Comma-separated key=value overrides, e.g. "max_basis_size=800,max_degree=20".
RESOURCE_CAPS_OVERRIDE = os.getenv("SCHUBDEG_RESOURCE_CAPS", "")


class ResourceCaps(BaseModel):
    model_config = ConfigDict(frozen=True)

    # Groebner engine limits. Hitting any of them raises instead of looping.
    max_basis_size: int = 5000
    max_degree: int = 60
    max_pairs: int = 200000
    # Positive-root closure stops here; non-finite Cartan data never terminates otherwise.
    max_positive_roots: int = 10000
    max_complex_vertices: int = 25
    max_minor_size: int = 6

    @field_validator("*")
    @classmethod
    def cap_is_positive(cls, value: int) -> int:
        if value <= 0:
            raise ValueError("resource caps must be positive integers")
        return value

    @classmethod
    def from_override(cls, override: str) -> "ResourceCaps":
        values: dict[str, int] = {}
        for item in override.split(","):
            item = item.strip()
            if not item:
                continue
            key, sep, raw_value = item.partition("=")
            key = key.strip()
            if not sep or key not in cls.model_fields:
                raise ValueError(f"Unknown resource cap override: {item!r}")
            try:
                values[key] = int(raw_value)
            except ValueError:
                raise ValueError(f"Resource cap {key} must be an integer, got {raw_value!r}")
        return cls(**values)


RESOURCE_CAPS = ResourceCaps.from_override(RESOURCE_CAPS_OVERRIDE)
