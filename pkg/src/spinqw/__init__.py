"""Inhomogeneous spin q-Whittaker and stable spin Hall-Littlewood functions
built from integrable vertex-model weights, with an exact verification
harness for the Yang-Baxter equations and summation identities they satisfy.
"""

from .scalars import HorizonError, PoleError, Rat, parse_rational, qpoch, qpoch_inf
from .multipoly import MultiPoly
from .params import (
    ParameterBase,
    ParamView,
    fixture_p0,
    load_params,
    make_xi_bar,
    make_xi_equals_s,
    make_xi_equals_sbar,
    view,
)

__all__ = [
    "HorizonError",
    "PoleError",
    "Rat",
    "parse_rational",
    "qpoch",
    "qpoch_inf",
    "MultiPoly",
    "ParameterBase",
    "ParamView",
    "fixture_p0",
    "load_params",
    "make_xi_bar",
    "make_xi_equals_s",
    "make_xi_equals_sbar",
    "view",
]

__version__ = "0.1.0"
