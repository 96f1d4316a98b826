"""Exact q-statistics on symmetric groups.

Thin wrapper over the _permstat extension module: canonical decompositions,
q-statistics (inv_q, ell_q, del_q, des_q, maj_q, rmaj_q), covering maps and
fibers, dashed-pattern avoidance, q-Bell / q-Stirling numbers, distribution
polynomials and the identity-verification harness.
"""

try:
    from ._permstat import *  # noqa: F401,F403  (wheel layout)
    from ._permstat import __version__  # noqa: F401
except ImportError:  # pragma: no cover - build-tree layout
    from _permstat import *  # noqa: F401,F403
    from _permstat import __version__  # noqa: F401
