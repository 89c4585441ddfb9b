"""Validated constructors for the IR.

Everything user-facing goes through here (or `oogen.patterns`); a tree that
builds without raising is renderable on all four targets. Validation errors
are the `oogen.errors` taxonomy, raised at construction, never at render.
"""

from __future__ import annotations

import dataclasses
import re

from . import ir
from .errors import (
    BuildError,
    DuplicateMethod,
    DuplicateModule,
    DuplicateParam,
    EmptyConditional,
    InvalidIdentifier,
    ObserverNotInitialized,
    TypeMismatch,
    UnknownParamDoc,
)

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def check_identifier(name: str) -> str:
    if not _IDENT.match(name or ""):
        raise InvalidIdentifier(f"not a legal identifier: {name!r}")
    return name


# ---------------------------------------------------------------------------
# Variables


def var(name: str, type_: ir.TypeRepr, binding: ir.Binding = ir.Binding.DYNAMIC) -> ir.VariableRepr:
    return ir.VariableRepr(check_identifier(name), type_, binding)


def self_var(name: str, type_: ir.TypeRepr) -> ir.VariableRepr:
    return ir.VariableRepr(check_identifier(name), type_, ir.Binding.DYNAMIC, ir.VarForm.SELF)


def class_var(class_name: str, name: str, type_: ir.TypeRepr) -> ir.VariableRepr:
    return ir.VariableRepr(
        check_identifier(name), type_, ir.Binding.STATIC, ir.VarForm.CLASS_MEMBER,
        owner=check_identifier(class_name),
    )


def obj_var(owner: str, name: str, type_: ir.TypeRepr) -> ir.VariableRepr:
    return ir.VariableRepr(
        check_identifier(name), type_, ir.Binding.DYNAMIC, ir.VarForm.OBJECT_MEMBER,
        owner=check_identifier(owner),
    )


def ext_var(library: str, name: str, type_: ir.TypeRepr) -> ir.VariableRepr:
    return ir.VariableRepr(
        check_identifier(name), type_, ir.Binding.STATIC, ir.VarForm.EXTERNAL,
        owner=check_identifier(library),
    )


def param(variable: ir.VariableRepr) -> ir.ParamRepr:
    return ir.ParamRepr(variable)


# ---------------------------------------------------------------------------
# Literals and expressions


def lit_bool(value: bool) -> ir.Lit:
    return ir.Lit("bool", bool(value))


def lit_int(value: int) -> ir.Lit:
    return ir.Lit("int", int(value))


def lit_float(value: float) -> ir.Lit:
    return ir.Lit("float", float(value))


def lit_char(value: str) -> ir.Lit:
    if len(value) != 1:
        raise TypeMismatch(f"char literal must be one character: {value!r}")
    return ir.Lit("char", value)


def lit_string(value: str) -> ir.Lit:
    return ir.Lit("string", value)


def value_of(variable: ir.VariableRepr) -> ir.ValueOf:
    return ir.ValueOf(variable)


def _require_numeric(op: str, *exprs: ir.ExprRepr) -> None:
    for e in exprs:
        if not e.type.is_numeric:
            raise TypeMismatch(f"{op} requires numeric operands, got {e.type.kind}")


def _require_bool(op: str, *exprs: ir.ExprRepr) -> None:
    for e in exprs:
        if e.type.kind != "bool":
            raise TypeMismatch(f"{op} requires boolean operands, got {e.type.kind}")


def _numeric_join(a: ir.TypeRepr, b: ir.TypeRepr) -> ir.TypeRepr:
    return ir.FLOAT if "float" in (a.kind, b.kind) else ir.INT


def apply_unary(op_name: str, operand: ir.ExprRepr) -> ir.ExprRepr:
    op = ir.OPERATORS.get(op_name)
    if op is None or op.arity != 1:
        raise TypeMismatch(f"unknown unary operator {op_name!r}")
    if op_name == "?!":
        _require_bool(op_name, operand)
        return ir.Unary(op, operand, ir.BOOL)
    _require_numeric(op_name, operand)
    if op_name == "#/^":
        return ir.Unary(op, operand, ir.FLOAT)
    return ir.Unary(op, operand, operand.type)


_COMPARISONS = ("?<", "?<=", "?>", "?>=")
_EQUALITY = ("?==", "?!=")
_LOGICAL = ("?&&", "?||")
_ARITH = ("#+", "#-", "#*", "#/", "#^")


def apply_binary(op_name: str, left: ir.ExprRepr, right: ir.ExprRepr) -> ir.ExprRepr:
    op = ir.OPERATORS.get(op_name)
    if op is None or op.arity != 2:
        raise TypeMismatch(f"unknown binary operator {op_name!r}")
    if op_name in _LOGICAL:
        _require_bool(op_name, left, right)
        return ir.Binary(op, left, right, ir.BOOL)
    if op_name in _COMPARISONS:
        _require_numeric(op_name, left, right)
        return ir.Binary(op, left, right, ir.BOOL)
    if op_name in _EQUALITY:
        same_kind = left.type.kind == right.type.kind
        both_numeric = left.type.is_numeric and right.type.is_numeric
        if not (same_kind or both_numeric):
            raise TypeMismatch(
                f"{op_name} requires matching types, got {left.type.kind} and {right.type.kind}"
            )
        return ir.Binary(op, left, right, ir.BOOL)
    _require_numeric(op_name, left, right)
    # Power always joins to float: three of four targets lower it to a
    # double-returning library call.
    result = ir.FLOAT if op_name == "#^" else _numeric_join(left.type, right.type)
    return ir.Binary(op, left, right, result)


def inline_if(cond: ir.ExprRepr, then: ir.ExprRepr, other: ir.ExprRepr) -> ir.InlineIf:
    _require_bool("inlineIf", cond)
    if then.type.kind != other.type.kind:
        raise TypeMismatch(
            f"inlineIf branches must agree, got {then.type.kind} and {other.type.kind}"
        )
    return ir.InlineIf(cond, then, other)


def func_app(name: str, return_type: ir.TypeRepr, args: list[ir.ExprRepr]) -> ir.Call:
    return ir.Call(ir.CallForm.FUNCTION, check_identifier(name), tuple(args), return_type)


def ext_func_app(library: str, name: str, return_type: ir.TypeRepr, args: list[ir.ExprRepr]) -> ir.Call:
    return ir.Call(
        ir.CallForm.EXTERNAL, check_identifier(name), tuple(args), return_type,
        library=check_identifier(library),
    )


def new_obj(class_name: str, args: list[ir.ExprRepr]) -> ir.Call:
    return ir.Call(
        ir.CallForm.CONSTRUCTOR, check_identifier(class_name), tuple(args),
        ir.obj_of(class_name),
    )


def method_call(receiver: ir.ExprRepr, name: str, return_type: ir.TypeRepr,
                args: list[ir.ExprRepr]) -> ir.Call:
    return ir.Call(
        ir.CallForm.METHOD, check_identifier(name), tuple(args), return_type,
        receiver=receiver,
    )


# ---------------------------------------------------------------------------
# Statements


def var_dec(variable: ir.VariableRepr) -> ir.VarDec:
    return ir.VarDec(variable)


def var_dec_def(variable: ir.VariableRepr, value: ir.ExprRepr) -> ir.VarDecDef:
    return ir.VarDecDef(variable, value)


def assign(variable: ir.VariableRepr, value: ir.ExprRepr) -> ir.Assign:
    return ir.Assign(ir.AssignMode.SET, variable, value)


def add_eq(variable: ir.VariableRepr, value: ir.ExprRepr) -> ir.Assign:
    _require_numeric("&-=/&+=", ir.ValueOf(variable), value)
    return ir.Assign(ir.AssignMode.ADD_EQ, variable, value)


def sub_eq(variable: ir.VariableRepr, value: ir.ExprRepr) -> ir.Assign:
    _require_numeric("&-=/&+=", ir.ValueOf(variable), value)
    return ir.Assign(ir.AssignMode.SUB_EQ, variable, value)


def inc(variable: ir.VariableRepr) -> ir.Assign:
    _require_numeric("&++", ir.ValueOf(variable))
    return ir.Assign(ir.AssignMode.INC, variable, None)


def dec(variable: ir.VariableRepr) -> ir.Assign:
    _require_numeric("&~-", ir.ValueOf(variable))
    return ir.Assign(ir.AssignMode.DEC, variable, None)


def return_stmt(value: ir.ExprRepr) -> ir.Return:
    return ir.Return(value)


def throw(message: str) -> ir.Throw:
    return ir.Throw(message)


def free(variable: ir.VariableRepr) -> ir.Free:
    return ir.Free(variable)


def comment(text: str) -> ir.CommentStmt:
    return ir.CommentStmt(text)


def break_stmt() -> ir.Break:
    return ir.Break()


def continue_stmt() -> ir.Continue:
    return ir.Continue()


def call_stmt(expr: ir.ExprRepr) -> ir.ExprStmt:
    return ir.ExprStmt(expr)


def if_cond(branches: list[tuple[ir.ExprRepr, ir.BodyRepr]],
            else_body: ir.BodyRepr | None = None) -> ir.If:
    if not branches:
        raise EmptyConditional("ifCond requires at least one branch")
    for cond, _ in branches:
        _require_bool("ifCond", cond)
    return ir.If(tuple(branches), else_body)


def switch(value: ir.ExprRepr, cases: list[tuple[ir.Lit, ir.BodyRepr]],
           default: ir.BodyRepr | None = None) -> ir.Switch:
    for case_lit, _ in cases:
        if case_lit.kind != value.type.kind:
            raise TypeMismatch(
                f"switch case {case_lit.value!r} is {case_lit.kind}, scrutinee is {value.type.kind}"
            )
    return ir.Switch(value, tuple(cases), default)


def for_loop(init: ir.StatementRepr, cond: ir.ExprRepr, update: ir.StatementRepr,
             body_: ir.BodyRepr) -> ir.For:
    _require_bool("for", cond)
    return ir.For(init, cond, update, body_)


def for_range(variable: ir.VariableRepr, start: ir.ExprRepr, end: ir.ExprRepr,
              step: ir.ExprRepr, body_: ir.BodyRepr) -> ir.ForRange:
    if variable.type.kind != "int":
        raise TypeMismatch("forRange variable must be int")
    _require_numeric("forRange", start, end, step)
    return ir.ForRange(variable, start, end, step, body_)


def for_each(variable: ir.VariableRepr, iterable: ir.ExprRepr, body_: ir.BodyRepr) -> ir.ForEach:
    if not iterable.type.is_list:
        raise TypeMismatch("forEach iterates a list")
    if variable.type != iterable.type.elem:
        raise TypeMismatch(
            f"forEach variable is {variable.type.kind}, elements are {iterable.type.elem.kind}"
        )
    return ir.ForEach(variable, iterable, body_)


def while_loop(cond: ir.ExprRepr, body_: ir.BodyRepr) -> ir.While:
    _require_bool("while", cond)
    return ir.While(cond, body_)


def try_catch(try_body: ir.BodyRepr, catch_body: ir.BodyRepr) -> ir.TryCatch:
    return ir.TryCatch(try_body, catch_body)


# ---------------------------------------------------------------------------
# Blocks and bodies


def block(statements: list[ir.StatementRepr]) -> ir.BlockRepr:
    return ir.BlockRepr(tuple(statements))


def body(blocks: list[ir.BlockRepr]) -> ir.BodyRepr:
    return ir.BodyRepr(tuple(blocks))


def body_statements(statements: list[ir.StatementRepr]) -> ir.BodyRepr:
    return body([block(statements)])


def one_liner(statement: ir.StatementRepr) -> ir.BodyRepr:
    return body_statements([statement])


# ---------------------------------------------------------------------------
# Methods, classes, modules


def _check_params(params: list[ir.ParamRepr]) -> tuple[ir.ParamRepr, ...]:
    seen: set[str] = set()
    for p in params:
        if p.variable.name in seen:
            raise DuplicateParam(f"parameter {p.variable.name!r} declared twice")
        seen.add(p.variable.name)
    return tuple(params)


def _walk_statements(body_: ir.BodyRepr):
    """Pre-order statement traversal, descending into nested bodies."""
    for blk in body_.blocks:
        for stmt in blk.statements:
            yield stmt
            for child in _child_bodies(stmt):
                yield from _walk_statements(child)


def _child_bodies(stmt: ir.StatementRepr) -> list[ir.BodyRepr]:
    if isinstance(stmt, ir.If):
        out = [b for _, b in stmt.branches]
        if stmt.else_body is not None:
            out.append(stmt.else_body)
        return out
    if isinstance(stmt, ir.Switch):
        out = [b for _, b in stmt.cases]
        if stmt.default is not None:
            out.append(stmt.default)
        return out
    if isinstance(stmt, (ir.For, ir.ForRange, ir.ForEach, ir.While)):
        return [stmt.body]
    if isinstance(stmt, ir.TryCatch):
        return [stmt.try_body, stmt.catch_body]
    return []


def _check_observer_order(body_: ir.BodyRepr) -> None:
    initialized = False
    for stmt in _walk_statements(body_):
        if isinstance(stmt, ir.ObserverInit):
            initialized = True
        elif isinstance(stmt, (ir.ObserverAdd, ir.ObserverNotify)) and not initialized:
            raise ObserverNotInitialized(
                "observer list used before initObserverList in this body"
            )


def function(name: str, scope: ir.Scope, binding: ir.Binding, return_type: ir.TypeRepr,
             params: list[ir.ParamRepr], body_: ir.BodyRepr) -> ir.MethodRepr:
    check_identifier(name)
    _check_observer_order(body_)
    return ir.MethodRepr(name, scope, binding, return_type, _check_params(params), body_)


def main_function(body_: ir.BodyRepr) -> ir.MethodRepr:
    _check_observer_order(body_)
    return ir.MethodRepr(
        "main", ir.Scope.PUBLIC, ir.Binding.STATIC, ir.VOID, (), body_, is_main=True,
    )


def method(name: str, class_name: str, scope: ir.Scope, binding: ir.Binding,
           return_type: ir.TypeRepr, params: list[ir.ParamRepr],
           body_: ir.BodyRepr) -> ir.MethodRepr:
    check_identifier(name)
    _check_observer_order(body_)
    return ir.MethodRepr(
        name, scope, binding, return_type, _check_params(params), body_,
        containing_class=check_identifier(class_name),
    )


def state_var(scope: ir.Scope, binding: ir.Binding, variable: ir.VariableRepr,
              is_const: bool = False) -> ir.StateVarRepr:
    return ir.StateVarRepr(scope, binding, variable, is_const)


def pub_m_var(variable: ir.VariableRepr) -> ir.StateVarRepr:
    return state_var(ir.Scope.PUBLIC, ir.Binding.DYNAMIC, variable)


def priv_m_var(variable: ir.VariableRepr) -> ir.StateVarRepr:
    return state_var(ir.Scope.PRIVATE, ir.Binding.DYNAMIC, variable)


def pub_g_var(variable: ir.VariableRepr) -> ir.StateVarRepr:
    return state_var(ir.Scope.PUBLIC, ir.Binding.STATIC, variable)


def const_var(scope: ir.Scope, variable: ir.VariableRepr) -> ir.StateVarRepr:
    return state_var(scope, ir.Binding.STATIC, variable, is_const=True)


def _check_const_assignments(cls_name: str, const_names: set[str],
                             methods: tuple[ir.MethodRepr, ...]) -> None:
    from .errors import ConstAssignment

    for m in methods:
        for stmt in _walk_statements(m.body):
            names: list[str] = []
            if isinstance(stmt, ir.Assign):
                names = [stmt.var.name]
            elif isinstance(stmt, ir.Read):
                names = [stmt.var.name]
            elif isinstance(stmt, ir.InOutCall):
                names = [v.name for v in stmt.outs + stmt.inouts]
            for name in names:
                if name in const_names:
                    raise ConstAssignment(
                        f"{cls_name}.{name} is const but assigned in {m.name}"
                    )


def build_class(name: str, parent: str | None, scope: ir.Scope,
                state_vars: list[ir.StateVarRepr], methods: list[ir.MethodRepr],
                doc: ir.DocSpec | None = None) -> ir.ClassDeclRepr:
    check_identifier(name)
    if parent is not None:
        check_identifier(parent)
    seen: set[str] = set()
    for m in methods:
        if m.name in seen:
            raise DuplicateMethod(f"class {name} declares {m.name!r} twice")
        seen.add(m.name)
    # Methods built standalone adopt the class; a mismatch is a build bug.
    placed = tuple(
        m if m.containing_class == name
        else dataclasses.replace(m, containing_class=name)
        for m in methods
    )
    const_names = {sv.variable.name for sv in state_vars if sv.is_const}
    if const_names:
        _check_const_assignments(name, const_names, placed)
    return ir.ClassDeclRepr(name, parent, scope, tuple(state_vars), placed, doc)


def build_module(name: str, imports: list[str], functions: list[ir.MethodRepr],
                 classes: list[ir.ClassDeclRepr], doc: ir.DocSpec | None = None) -> ir.ModuleRepr:
    check_identifier(name)
    seen: set[str] = set()
    for f in functions:
        if f.name in seen:
            raise DuplicateMethod(f"module {name} declares function {f.name!r} twice")
        seen.add(f.name)
    return ir.ModuleRepr(name, tuple(imports), tuple(functions), tuple(classes), doc)


def prog(name: str, modules: list[ir.ModuleRepr]) -> ir.PackageTree:
    check_identifier(name)
    seen: set[str] = set()
    mains = 0
    for m in modules:
        if m.name in seen:
            raise DuplicateModule(f"module {m.name!r} appears twice")
        seen.add(m.name)
        mains += sum(1 for f in m.functions if f.is_main)
    if mains > 1:
        raise DuplicateMethod("program declares more than one main function")
    return ir.PackageTree(name, tuple(modules))


def package(program: ir.PackageTree, aux: list[ir.AuxFileSpec]) -> ir.PackageTree:
    kinds = [spec.kind for spec in aux]
    if len(kinds) != len(set(kinds)):
        raise BuildError("package lists an auxiliary file kind twice")
    return dataclasses.replace(program, aux=tuple(aux))


# ---------------------------------------------------------------------------
# Documentation


def doc_spec(description: str, param_descs: list[tuple[str, str]] | None = None,
             return_desc: str | None = None) -> ir.DocSpec:
    return ir.DocSpec(description, tuple(param_descs or ()), return_desc)


def doc_func(description: str, param_descs: list[tuple[str, str]],
             return_desc: str | None, method_: ir.MethodRepr) -> ir.MethodRepr:
    order = {p.variable.name: i for i, p in enumerate(method_.params)}
    for name, _ in param_descs:
        if name not in order:
            raise UnknownParamDoc(f"{method_.name} has no parameter {name!r}")
    # \param lines come out in declaration order no matter how they were given.
    ordered = tuple(sorted(param_descs, key=lambda nd: order[nd[0]]))
    return dataclasses.replace(
        method_, doc=ir.DocSpec(description, ordered, return_desc)
    )


def doc_class(description: str, class_: ir.ClassDeclRepr) -> ir.ClassDeclRepr:
    return dataclasses.replace(class_, doc=ir.DocSpec(description))


def doc_mod(description: str, module: ir.ModuleRepr) -> ir.ModuleRepr:
    return dataclasses.replace(module, doc=ir.DocSpec(description))
