"""
hyperjac

Generalized Jacobi elliptic-function analogues built from the incomplete
integral of F(1/2 - a, 1/2 + a; 1/2; kappa^2 sin^2 t), and a suite that checks
their identities and differential equations.

Modules:
- series_core: truncated power series arithmetic, composition and reversion
- hypergeom: the Gauss series F_a and its closed-form identity
- chebyshev: exact rational polynomials, Chebyshev families, discriminants
- classical: sn, cn, dn by the arithmetic-geometric mean
- analogue: phi, psi, s, c, d, partial, nabla, delta as series
- weierstrass: p near its pole and the signature 3 and 4 closed forms
- verify: theorem checks and the verification report
- cli: eval, series and verify subcommands
"""

__version__ = "1.0.0"

from .analogue import AnalogueSet, ModulusParams, build, evaluate, phi_oracle
from .errors import ConfigError, ConvergenceError, DomainError, HyperjacError
from .series_core import TruncatedSeries
from .verify import TheoremCheck, Tolerances, VerificationReport, run_suite

__all__ = [
    'AnalogueSet',
    'ModulusParams',
    'build',
    'evaluate',
    'phi_oracle',
    'TruncatedSeries',
    'TheoremCheck',
    'Tolerances',
    'VerificationReport',
    'run_suite',
    'HyperjacError',
    'DomainError',
    'ConvergenceError',
    'ConfigError',
]
