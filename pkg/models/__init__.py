from .reports import CheckReport, CommandReport, DegreeReport
from .run_config import RunConfig

__all__ = ['CheckReport', 'CommandReport', 'DegreeReport', 'RunConfig']
