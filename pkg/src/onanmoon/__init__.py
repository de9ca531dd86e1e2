"""Exact-arithmetic workbench for the weight-3/2 moonshine module of the
sporadic O'Nan group: the thirty McKay-Thompson series from traces of
singular moduli, class numbers and cusp-form data; decomposition of the
graded module into irreducibles; congruence and table verification; and an
independent Kloosterman/Bessel numeric cross-check.
"""

from .chartable import (
    GROUP_ORDER,
    centralizer_orders,
    character_table,
    character_value,
    class_names,
    decompose,
    multiplicities_table,
)
from .mtseries import (
    CLASS_NAMES,
    mt_coefficient,
    mt_coefficient_at,
    mt_series,
    mt_series_for_class,
)
from .qseries import QSeries
from .quadforms import class_number, class_number_series, hurwitz_class_number
from .traces import trace4, trace4_plus, trace_series

__version__ = "0.1.0"

__all__ = [
    "QSeries",
    "GROUP_ORDER",
    "CLASS_NAMES",
    "mt_series",
    "mt_series_for_class",
    "mt_coefficient",
    "mt_coefficient_at",
    "class_number",
    "class_number_series",
    "hurwitz_class_number",
    "trace4",
    "trace4_plus",
    "trace_series",
    "character_table",
    "character_value",
    "class_names",
    "centralizer_orders",
    "decompose",
    "multiplicities_table",
    "__version__",
]
