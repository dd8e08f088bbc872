# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled kernel for the sparse symmetric tensor-vector product.

Same contract as ``hgtensor._kernels_py.apply_coords``; operates on the
canonical square-free COO arrays prepared by the spectral module.
"""

import numpy as np


def apply_coords(const long long[:, ::1] indices, const double[::1] values,
                 const double[::1] x):
    """y_i = sum over canonical tuples containing i of v*(k-1)!*prod_others(x).

    ``indices`` is the (nnz, k) array of 0-based canonical tuples, each
    with k distinct entries; ``values`` the matching float values.
    """
    cdef Py_ssize_t nnz = indices.shape[0]
    cdef Py_ssize_t k = indices.shape[1]
    cdef Py_ssize_t e, m, l
    cdef double v, prod, scale

    out_arr = np.zeros(x.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr

    scale = 1.0
    for l in range(1, k):
        scale *= l

    for e in range(nnz):
        v = values[e] * scale
        for m in range(k):
            prod = v
            for l in range(k):
                if l != m:
                    prod *= x[indices[e, l]]
            out[indices[e, m]] += prod
    return out_arr
