from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("cuboidcurves")
except PackageNotFoundError:  # running from source without an installed dist
    __version__ = "0.1.0"

from .types import FormulaVariant, OutputFormat, SingularFactor, WitnessClass
from .errors import (
    DegenerateCurveError,
    DegenerateParameterError,
    ExceptionalPointError,
    SingularInputError,
    VerificationError,
)
from . import arith
from . import curves
from . import cuboid
from . import parametrization
from . import sampling
from .parametrization import ParameterPoint, curve_pair, elementary_profile
from .scan import ScanConfig, report_point, scan_grid

__all__ = [
    "__version__",
    "arith",
    "curves",
    "cuboid",
    "parametrization",
    "sampling",
    "FormulaVariant",
    "OutputFormat",
    "SingularFactor",
    "WitnessClass",
    "DegenerateCurveError",
    "DegenerateParameterError",
    "ExceptionalPointError",
    "SingularInputError",
    "VerificationError",
    "ParameterPoint",
    "curve_pair",
    "elementary_profile",
    "ScanConfig",
    "report_point",
    "scan_grid",
]
