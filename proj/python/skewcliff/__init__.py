"""Exact workbench for graded skew Clifford algebras."""

from ._core import (
    __version__,
    hilbert,
    normal_form,
    run_manifest,
    validate_manifest,
)

__all__ = [
    "__version__",
    "hilbert",
    "normal_form",
    "run_manifest",
    "validate_manifest",
]
