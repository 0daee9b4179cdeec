from .bernoulli import bernoulli, bernoulli_exact
from .config import DEFAULT, MAX_IMAG, PrecisionConfig
from .gamma import digamma, log_gamma, polygamma
from .jet import Jet, Jet3
from .zeta import zeta, zeta_eta, zeta_jet

__all__ = [
    "bernoulli", "bernoulli_exact", "DEFAULT", "MAX_IMAG", "PrecisionConfig",
    "digamma", "log_gamma", "polygamma", "Jet", "Jet3", "zeta", "zeta_eta", "zeta_jet",
]
