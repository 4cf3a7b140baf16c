"""Exact distributions induced by convolutions of Fibonacci sequences."""

from .analysis import (
    Family,
    argmax_scan,
    constants_suite,
    detect_convergence,
    ratio_convergence,
    variance_sweep,
    viswanath_estimate,
)
from .convolve import conv, conv_fast, self_conv
from .dist import argmax, gaussian_mse, mean, pmf_from_seq, theorem_check, variance
from .exactnum import golden_ratio, reduce, to_decimal
from .seqgen import Seq, binet_term, fib_seq, fib_term, random_fib, reverse, symmetrize

__version__ = "0.1.0"
