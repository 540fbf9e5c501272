"""Invariants of symmetric spaces of noncompact type.

Builds matrix Lie algebra realizations of the classical noncompact families
(sl, so, su, sp and real hyperbolic spaces), extracts their restricted root
data, and computes the isoperimetric constant, the volume entropy and the
bottom of the Laplace spectrum, together with verification suites that check
every quantity against independent numerical routes.
"""

from symmspace._core import Space, run_cli, __version__

__all__ = ["Space", "run_cli", "__version__"]
