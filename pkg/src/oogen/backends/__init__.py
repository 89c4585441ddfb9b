"""Target-language renderers and the registry the CLI uses to find them."""

from __future__ import annotations

from .base import Renderer
from .cpp import CppRenderer
from .csharp import CSharpRenderer
from .java import JavaRenderer
from .python import PythonRenderer

_BACKENDS: dict[str, type[Renderer]] = {
    "python": PythonRenderer,
    "java": JavaRenderer,
    "csharp": CSharpRenderer,
    "cpp": CppRenderer,
}

TARGETS = tuple(_BACKENDS)


def get_backend(target: str) -> Renderer:
    try:
        return _BACKENDS[target]()
    except KeyError:
        raise ValueError(
            f"unknown target {target!r}; expected one of: {', '.join(TARGETS)}"
        ) from None


def assemble_package(pkg, target: str):
    """All files for one target: rendered code plus requested aux files."""
    from .. import auxfiles
    from ..layout import FileSet

    files = get_backend(target).render_package(pkg)
    files.extend(auxfiles.render_aux(pkg, target))
    return FileSet(tuple(files))


__all__ = [
    "Renderer",
    "PythonRenderer",
    "JavaRenderer",
    "CSharpRenderer",
    "CppRenderer",
    "TARGETS",
    "get_backend",
    "assemble_package",
]
