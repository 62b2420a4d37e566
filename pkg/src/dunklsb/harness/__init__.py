"""Configuration, check catalog, runner, reports and the command line."""

from .checks import CATALOG, CheckResult
from .config import SuiteConfig, load_config, reference_configs
from .report import emit_report
from .runner import Report, run_verification

__all__ = ["CATALOG", "CheckResult", "Report", "SuiteConfig", "emit_report", "load_config",
           "reference_configs", "run_verification"]
