"""Radial damped wave solver."""

from ._radwave import (
    BlowUpDetected,
    ConfigError,
    DataFamily,
    DomainTooSmall,
    Error,
    IoError,
    MonitorLevel,
    OutOfDomain,
    RunConfig,
    Shape,
    StiffnessCollapse,
    ValidationError,
    channel_names,
    critical_index,
    hardy_check,
    initial_state,
    run,
    run_to_directory,
    scaling_exponent,
    strauss_check,
    verify_scaling,
)

__all__ = [
    "BlowUpDetected",
    "ConfigError",
    "DataFamily",
    "DomainTooSmall",
    "Error",
    "IoError",
    "MonitorLevel",
    "OutOfDomain",
    "RunConfig",
    "Shape",
    "StiffnessCollapse",
    "ValidationError",
    "channel_names",
    "critical_index",
    "hardy_check",
    "initial_state",
    "run",
    "run_to_directory",
    "scaling_exponent",
    "strauss_check",
    "verify_scaling",
]
