"""Task-level builders: the recurring idioms above raw statements.

Math/argument/list/print helpers return core IR; the design patterns
(in/out procedures, getters/setters, Strategy, Observer, State) either
partially evaluate at build time or produce dedicated nodes that backends
lower idiomatically.
"""

from __future__ import annotations

import dataclasses

from . import builders as bd
from . import ir
from .errors import (
    DuplicateStateLabel,
    SignatureMismatch,
    TypeMismatch,
    UnknownStrategy,
)

# Functions every target's math namespace provides under some spelling.
MATH_FNS = ("sin", "cos", "tan", "sqrt", "abs", "floor", "ceil", "log", "exp")


def math_fn(name: str, arg: ir.ExprRepr) -> ir.MathCall:
    if name not in MATH_FNS:
        raise TypeMismatch(f"unknown math function {name!r}")
    if not arg.type.is_numeric:
        raise TypeMismatch(f"{name} requires a numeric argument, got {arg.type.kind}")
    # abs preserves the argument type; the rest return float.
    result = arg.type if name == "abs" else ir.FLOAT
    return ir.MathCall(name, arg, result)


# ---------------------------------------------------------------------------
# Command-line arguments


def args_list() -> ir.ArgsList:
    return ir.ArgsList()


def arg_at(index: ir.ExprRepr) -> ir.ArgAt:
    if index.type.kind != "int":
        raise TypeMismatch("argAt index must be int")
    return ir.ArgAt(index)


def arg_exists(index: ir.ExprRepr) -> ir.ArgExists:
    if index.type.kind != "int":
        raise TypeMismatch("argExists index must be int")
    return ir.ArgExists(index)


# ---------------------------------------------------------------------------
# Lists


def _require_list(op: str, lst: ir.ExprRepr) -> ir.TypeRepr:
    if not lst.type.is_list:
        raise TypeMismatch(f"{op} requires a list, got {lst.type.kind}")
    return lst.type.elem


def _check_elem(op: str, elem: ir.TypeRepr, value: ir.ExprRepr) -> None:
    if elem == value.type:
        return
    if elem.is_numeric and value.type.is_numeric:
        return  # int literals may feed float lists and vice versa
    raise TypeMismatch(f"{op}: element type {elem.kind}, value type {value.type.kind}")


def list_access(lst: ir.ExprRepr, index: ir.ExprRepr) -> ir.ListAccess:
    _require_list("listAccess", lst)
    if index.type.kind != "int":
        raise TypeMismatch("listAccess index must be int")
    return ir.ListAccess(lst, index)


def list_size(lst: ir.ExprRepr) -> ir.ListSize:
    _require_list("listSize", lst)
    return ir.ListSize(lst)


def list_append(lst: ir.ExprRepr, value: ir.ExprRepr) -> ir.ListAppend:
    elem = _require_list("listAppend", lst)
    _check_elem("listAppend", elem, value)
    return ir.ListAppend(lst, value)


def list_set(lst: ir.ExprRepr, index: ir.ExprRepr, value: ir.ExprRepr) -> ir.ListSet:
    elem = _require_list("listSet", lst)
    if index.type.kind != "int":
        raise TypeMismatch("listSet index must be int")
    _check_elem("listSet", elem, value)
    return ir.ListSet(lst, index, value)


def list_index_exists(lst: ir.ExprRepr, index: ir.ExprRepr) -> ir.ListIndexExists:
    _require_list("listIndexExists", lst)
    if index.type.kind != "int":
        raise TypeMismatch("listIndexExists index must be int")
    return ir.ListIndexExists(lst, index)


def index_of(lst: ir.ExprRepr, value: ir.ExprRepr) -> ir.ListIndexOf:
    elem = _require_list("indexOf", lst)
    _check_elem("indexOf", elem, value)
    return ir.ListIndexOf(lst, value)


def list_slice(target: ir.VariableRepr, source: ir.ExprRepr,
               start: ir.ExprRepr | None = None, end: ir.ExprRepr | None = None,
               step: ir.ExprRepr | None = None) -> ir.ListSlice:
    _require_list("listSlice", source)
    if not target.type.is_list:
        raise TypeMismatch("listSlice target must be a list variable")
    for bound in (start, end, step):
        if bound is not None and bound.type.kind != "int":
            raise TypeMismatch("listSlice bounds must be int")
    return ir.ListSlice(target, source, start, end, step)


# ---------------------------------------------------------------------------
# Console I/O


def print_expr(value: ir.ExprRepr) -> ir.Print:
    return ir.Print(value, newline=False)


def print_ln(value: ir.ExprRepr) -> ir.Print:
    return ir.Print(value, newline=True)


def print_str(text: str) -> ir.Print:
    return ir.Print(bd.lit_string(text), newline=False)


def print_str_ln(text: str) -> ir.Print:
    return ir.Print(bd.lit_string(text), newline=True)


def read_line(variable: ir.VariableRepr) -> ir.Read:
    if variable.type.kind != "string":
        raise TypeMismatch("readLine target must be a string variable")
    return ir.Read(variable, parse_int=False)


def read_int(variable: ir.VariableRepr) -> ir.Read:
    if variable.type.kind != "int":
        raise TypeMismatch("readInt target must be an int variable")
    return ir.Read(variable, parse_int=True)


# ---------------------------------------------------------------------------
# In/out/in-out procedures


def in_out_func(name: str, scope: ir.Scope, binding: ir.Binding,
                ins: list[ir.VariableRepr], outs: list[ir.VariableRepr],
                inouts: list[ir.VariableRepr], body_: ir.BodyRepr) -> ir.MethodRepr:
    """A procedure with input, output, and input-output parameters.

    Every target renders a different signature from the same spec; the
    declared parameter order everywhere is in-outs, ins, outs.
    """
    spec = ir.InOutSpec(tuple(ins), tuple(outs), tuple(inouts))
    if not spec.outs and not spec.inouts:
        raise SignatureMismatch(f"inOutFunc {name!r} declares no outputs")
    params = [bd.param(v) for v in spec.inouts + spec.ins + spec.outs]
    base = bd.function(name, scope, binding, ir.VOID, params, body_)
    return dataclasses.replace(base, inout=spec)


def in_out_call(func: ir.MethodRepr, ins: list[ir.ExprRepr],
                outs: list[ir.VariableRepr], inouts: list[ir.VariableRepr]) -> ir.InOutCall:
    spec = func.inout
    if spec is None:
        raise SignatureMismatch(f"{func.name!r} is not an inOutFunc")
    groups = (("in", spec.ins, ins), ("out", spec.outs, outs), ("in-out", spec.inouts, inouts))
    for label, declared, actual in groups:
        if len(declared) != len(actual):
            raise SignatureMismatch(
                f"{func.name}: {len(actual)} {label} arguments, expected {len(declared)}"
            )
        for decl, act in zip(declared, actual):
            act_type = act.type if isinstance(act, ir.ExprRepr) else act.type
            if decl.type.kind != act_type.kind:
                raise SignatureMismatch(
                    f"{func.name}: {label} argument {decl.name!r} is {decl.type.kind},"
                    f" got {act_type.kind}"
                )
    return ir.InOutCall(func.name, tuple(ins), tuple(outs), tuple(inouts))


# ---------------------------------------------------------------------------
# Getters and setters


def _accessor_suffix(variable: ir.VariableRepr) -> str:
    return variable.name[0].upper() + variable.name[1:]


def get_method(class_name: str, variable: ir.VariableRepr) -> ir.MethodRepr:
    """getFoo: returns the state variable."""
    member = bd.self_var(variable.name, variable.type)
    body_ = bd.one_liner(bd.return_stmt(bd.value_of(member)))
    return bd.method(
        "get" + _accessor_suffix(variable), class_name, ir.Scope.PUBLIC,
        ir.Binding.DYNAMIC, variable.type, [], body_,
    )


def set_method(class_name: str, variable: ir.VariableRepr) -> ir.MethodRepr:
    """setFoo: assigns the state variable from a same-named parameter."""
    member = bd.self_var(variable.name, variable.type)
    fresh = bd.var(variable.name, variable.type)
    body_ = bd.one_liner(bd.assign(member, bd.value_of(fresh)))
    return bd.method(
        "set" + _accessor_suffix(variable), class_name, ir.Scope.PUBLIC,
        ir.Binding.DYNAMIC, ir.VOID, [bd.param(fresh)], body_,
    )


def get(obj: ir.ExprRepr, variable: ir.VariableRepr) -> ir.Call:
    return bd.method_call(obj, "get" + _accessor_suffix(variable), variable.type, [])


def set_(obj: ir.ExprRepr, variable: ir.VariableRepr, value: ir.ExprRepr) -> ir.ExprStmt:
    call = bd.method_call(obj, "set" + _accessor_suffix(variable), ir.VOID, [value])
    return bd.call_stmt(call)


# ---------------------------------------------------------------------------
# Strategy


def run_strategy(chosen: str, strategies: dict[str, ir.BodyRepr],
                 result_var: ir.VariableRepr | None = None,
                 result_value: ir.ExprRepr | None = None) -> ir.BlockRepr:
    """Generation-time Strategy: the chosen body is selected now, so unchosen
    strategies never reach the rendered program."""
    if (result_var is None) != (result_value is None):
        raise SignatureMismatch("runStrategy needs both result variable and value, or neither")
    if chosen not in strategies:
        raise UnknownStrategy(f"no strategy named {chosen!r}")
    statements = [s for blk in strategies[chosen].blocks for s in blk.statements]
    if result_var is not None:
        statements.append(bd.assign(result_var, result_value))
    return bd.block(statements)


# ---------------------------------------------------------------------------
# Observer


def observer_list_var(elem_type: ir.TypeRepr) -> ir.VariableRepr:
    return bd.var(ir.OBSERVER_LIST_NAME, ir.list_of(elem_type))


def init_observer_list(elem_type: ir.TypeRepr, init_values: list[ir.ExprRepr]) -> ir.ObserverInit:
    for v in init_values:
        if v.type != elem_type:
            raise TypeMismatch(
                f"initObserverList of {elem_type.class_name}, got {v.type.kind} value"
            )
    return ir.ObserverInit(elem_type, tuple(init_values))


def add_observer(value: ir.ExprRepr) -> ir.ObserverAdd:
    if value.type.kind != "object":
        raise TypeMismatch("addObserver takes an object value")
    return ir.ObserverAdd(value, value.type)


def notify_observers(method: str, elem_type: ir.TypeRepr) -> ir.ObserverNotify:
    bd.check_identifier(method)
    if elem_type.kind != "object":
        raise TypeMismatch("notifyObservers element type must be an object type")
    return ir.ObserverNotify(method, elem_type)


# ---------------------------------------------------------------------------
# State machine (string-labelled)


def _state_var(name: str) -> ir.VariableRepr:
    return bd.var(name, ir.STRING)


def init_state(name: str, initial_label: str) -> ir.VarDecDef:
    return bd.var_dec_def(_state_var(name), bd.lit_string(initial_label))


def change_state(name: str, new_label: str) -> ir.Assign:
    return bd.assign(_state_var(name), bd.lit_string(new_label))


def check_state(name: str, branches: list[tuple[ir.Lit, ir.BodyRepr]],
                fallback: ir.BodyRepr) -> ir.Switch:
    seen: set[object] = set()
    for label, _ in branches:
        if label.kind != "string":
            raise TypeMismatch("checkState labels must be string literals")
        if label.value in seen:
            raise DuplicateStateLabel(f"state label {label.value!r} listed twice")
        seen.add(label.value)
    return bd.switch(bd.value_of(_state_var(name)), branches, fallback)
