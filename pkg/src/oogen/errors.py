"""Errors raised while building IR or rendering it.

Build-time errors (everything except UnsupportedConstruct and DecodeError)
fire when a program is constructed, so a tree that builds successfully is
renderable by every backend.
"""

from __future__ import annotations


class BuildError(ValueError):
    """Base for IR construction failures."""


class InvalidIdentifier(BuildError):
    """Name is not a legal identifier in the common subset."""


class TypeMismatch(BuildError):
    """Operands or arguments disagree with an operation's typing rule."""


class ConstAssignment(BuildError):
    """A const state variable is the target of an assignment."""


class DuplicateParam(BuildError):
    """Two parameters of one function share a name."""


class DuplicateMethod(BuildError):
    """A class (or the program's main slot) declares a name twice."""


class DuplicateModule(BuildError):
    """Two modules in one program share a name."""


class EmptyConditional(BuildError):
    """ifCond called with no branches."""


class SignatureMismatch(BuildError):
    """inOutCall argument lists disagree with the callee's declaration."""


class UnknownStrategy(BuildError):
    """runStrategy's chosen name is not in the strategy table."""


class ObserverNotInitialized(BuildError):
    """addObserver/notifyObservers precede initObserverList in a body."""


class DuplicateStateLabel(BuildError):
    """checkState lists the same state label twice."""


class UnknownParamDoc(BuildError):
    """docFunc documents a parameter the function does not declare."""


class NoMainModule(BuildError):
    """An operation needed the program's main module and none exists."""


class UnsupportedConstruct(Exception):
    """A backend cannot express the given IR node.

    Carries enough context (module, item) to point at the offending input.
    """

    def __init__(self, message: str, *, module: str | None = None, item: str | None = None):
        self.module = module
        self.item = item
        where = "".join(
            f" [{label} {name}]"
            for label, name in (("module", module), ("in", item))
            if name
        )
        super().__init__(message + where)


class DecodeError(ValueError):
    """Package JSON rejected; `path` points at the offending node."""

    def __init__(self, message: str, path: str = "$"):
        self.path = path
        super().__init__(f"{path}: {message}")
