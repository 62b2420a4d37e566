"""Dunkl operators, generalized Hermite bases, Dunkl kernels and Segal-Bargmann transforms."""

from .coxeter import (
    MultiplicityFunction,
    RootSystem,
    build_root_system,
    generate_group,
    make_multiplicity,
    mms_constant,
    orbit_partition,
    reflect,
)
from .dunklkernel import KernelTable, build_kernel_blocks, eval_dunkl_kernel, heat_kernel, sb_kernel
from .errors import DunklError
from .hermite import HermiteFamily, OrthogonalBasis, build_orthogonal_basis
from .polyring import DunklContext, Polynomial, dunkl_apply, dunkl_laplacian, gaussian_moment, heat_apply
from .scalars import SqrtRational
from .transforms import (
    GaussianPolynomial,
    HermiteSpan,
    HolomorphicImage,
    bspace_inner,
    transform_A,
    transform_B,
    transform_BSO,
    transform_C,
)

__version__ = "0.1.0"
