"""Language-agnostic OO program representation with per-target renderers.

Programs are built once as immutable trees (builders module), then rendered
to idiomatic, documented Python, Java, C#, or C++ source (backends), with
optional Makefile and Doxygen-config generation (auxfiles), JSON interchange
(jsonio), and compile-and-run cross-checking on whatever toolchains the
machine has (verify). The gallery module holds runnable example programs,
and cli exposes all of it as the `oogen` command.
"""

from . import builders, gallery, ir, jsonio, patterns, verify
from .backends import TARGETS, assemble_package, get_backend
from .errors import BuildError, DecodeError, UnsupportedConstruct

__all__ = [
    "BuildError",
    "DecodeError",
    "TARGETS",
    "UnsupportedConstruct",
    "assemble_package",
    "builders",
    "gallery",
    "get_backend",
    "ir",
    "jsonio",
    "patterns",
    "verify",
]
