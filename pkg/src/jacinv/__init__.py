"""Exact construction of classical and generalized orthogonal polynomials and
bit-exact verification of their inversion formulas and summation identities."""
from .exactnum import (
    ContinuityCaseError, PoleError, binom_general, format_rational, gamma_ratio, parse_rational, pochhammer,
)
from .families import (
    CharlierParams, JacobiDef, JacobiParams, LaguerreParams, charlier, check_derivative_shift, jacobi,
    laguerre, limit_check_jacobi_to_laguerre, ode_residual,
)
from .genfamilies import (
    GeneralizedJacobiParams, SobolevLaguerreParams, gen_jacobi, inner_product, sobolev_inner_product,
    sobolev_laguerre, sym_ultraspherical,
)
from .identities import (
    NonConstantError, gen_inv_laguerre, inv_charlier, inv_jacobi, inv_laguerre, laguerre_convolution,
    master_jacobi, master_jacobi_specializations, monomial_expansion, nulalg_sum, vandermonde,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .polyring import ONE, X, ZERO, Poly, format_poly, parse_poly
from .report import IdentityReport
from .solver import (
    ResidualError, SingularError, TriangularSystem, build_T, build_U, solve_backsub, solve_closed_form,
)

__version__ = "0.1.0"
