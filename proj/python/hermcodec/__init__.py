# Copyright 2026 The hermcodec Authors
# SPDX-License-Identifier: Apache-2.0
"""Semi-erasure decoding of one-point Hermitian codes.

Symbols are integers in the polynomial basis of GF(q^2), 0 .. q^2 - 1.
Codeword matrices are lists of q rows of q^2 symbols.
"""

from ._core import Hermitian, code_params

__all__ = ["Hermitian", "code_params"]
__version__ = "0.1.0"
