"""Group constructions, the built-in catalog, file formats, reports and the CLI."""
from .catalog import default_catalog
from .constructions import GroupSpec, build
from .formats import (
    parse_group_file,
    parse_sigma_file,
    parse_spec_string,
    serialize_group_spec,
    serialize_sigma,
    spec_string,
)

__all__ = ["GroupSpec", "build", "default_catalog", "parse_group_file", "parse_sigma_file",
           "parse_spec_string", "serialize_group_spec", "serialize_sigma", "spec_string"]
