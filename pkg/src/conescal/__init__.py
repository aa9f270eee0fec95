"""conescal: conic scalarization toolkit for finite-dimensional vector optimization.

Submodules
----------
cone_core    cone representations, seminorms, bases, polytopes, the LP engine
scalarizers  seminorm-linear and sup-translation (Gerstewitz) scalarizing functions
augdual      augmented dual cone classes and pair finding
separation   nonlinear cone separation conditions and certificates
vopt         vector optimization problems, efficiency oracles, scalar solvers
expr         tiny arithmetic expression language for objective definitions
cli_io       problem files, run reports, command line interface
"""

from ._kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["KERNEL_BACKEND", "__version__"]
