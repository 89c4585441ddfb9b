"""Builder validation: anything that builds must be renderable everywhere,
so the checks all fire at construction time."""

import pytest

from oogen import builders as bd, ir, patterns as pt
from oogen.errors import (
    BuildError,
    ConstAssignment,
    DuplicateMethod,
    DuplicateModule,
    DuplicateParam,
    DuplicateStateLabel,
    EmptyConditional,
    InvalidIdentifier,
    ObserverNotInitialized,
    SignatureMismatch,
    TypeMismatch,
    UnknownParamDoc,
    UnknownStrategy,
)


@pytest.mark.parametrize("name", ["", "2start", "has space", "hy-phen", "a.b"])
def test_bad_identifiers_rejected(name):
    with pytest.raises(InvalidIdentifier):
        bd.var(name, ir.INT)


def test_char_literal_is_one_character():
    assert bd.lit_char("c").value == "c"
    with pytest.raises(TypeMismatch):
        bd.lit_char("cc")


def test_variable_forms_carry_owner():
    assert bd.var("x", ir.INT).form is ir.VarForm.PLAIN
    assert bd.self_var("foo", ir.INT).form is ir.VarForm.SELF
    cv = bd.class_var("Cls", "n", ir.INT)
    assert (cv.form, cv.owner, cv.binding) == (
        ir.VarForm.CLASS_MEMBER, "Cls", ir.Binding.STATIC)
    ov = bd.obj_var("fc", "foo", ir.INT)
    assert (ov.form, ov.owner) == (ir.VarForm.OBJECT_MEMBER, "fc")
    xv = bd.ext_var("sys", "stdout", ir.OUTFILE)
    assert (xv.form, xv.owner) == (ir.VarForm.EXTERNAL, "sys")


# -- expression typing --------------------------------------------------------


def _i(n=1):
    return bd.lit_int(n)


def _b():
    return bd.lit_bool(True)


def test_not_requires_bool():
    assert bd.apply_unary("?!", _b()).type == ir.BOOL
    with pytest.raises(TypeMismatch):
        bd.apply_unary("?!", _i())


def test_negate_requires_numeric():
    assert bd.apply_unary("#~", _i()).type == ir.INT
    with pytest.raises(TypeMismatch):
        bd.apply_unary("#~", _b())


def test_sqrt_yields_float():
    assert bd.apply_unary("#/^", _i()).type == ir.FLOAT


def test_abs_keeps_operand_type():
    assert bd.apply_unary("#|", _i()).type == ir.INT
    assert bd.apply_unary("#|", bd.lit_float(1.5)).type == ir.FLOAT


def test_arith_requires_numeric_and_joins():
    assert bd.apply_binary("#+", _i(), _i()).type == ir.INT
    assert bd.apply_binary("#+", _i(), bd.lit_float(2.0)).type == ir.FLOAT
    with pytest.raises(TypeMismatch):
        bd.apply_binary("#+", bd.lit_string("a"), bd.lit_string("b"))


def test_power_always_joins_to_float():
    assert bd.apply_binary("#^", _i(), _i()).type == ir.FLOAT


def test_logical_requires_bool():
    assert bd.apply_binary("?&&", _b(), _b()).type == ir.BOOL
    with pytest.raises(TypeMismatch):
        bd.apply_binary("?||", _i(), _b())


def test_comparison_requires_numeric():
    assert bd.apply_binary("?<", _i(), _i()).type == ir.BOOL
    with pytest.raises(TypeMismatch):
        bd.apply_binary("?<", bd.lit_string("a"), bd.lit_string("b"))


def test_equality_requires_matching_kinds():
    assert bd.apply_binary("?==", bd.lit_string("a"), bd.lit_string("b")).type == ir.BOOL
    assert bd.apply_binary("?!=", _i(), bd.lit_float(1.0)).type == ir.BOOL
    with pytest.raises(TypeMismatch):
        bd.apply_binary("?==", _i(), bd.lit_string("1"))


def test_unknown_operators_rejected():
    with pytest.raises(TypeMismatch):
        bd.apply_binary("#%", _i(), _i())
    with pytest.raises(TypeMismatch):
        bd.apply_unary("#+", _i())  # binary name in unary position


def test_inline_if_branches_must_agree():
    assert bd.inline_if(_b(), _i(), _i(2)).type == ir.INT
    with pytest.raises(TypeMismatch):
        bd.inline_if(_b(), _i(), bd.lit_string("x"))
    with pytest.raises(TypeMismatch):
        bd.inline_if(_i(), _i(), _i())


def test_atomic_nodes_have_max_precedence():
    assert _i().precedence == ir.ATOMIC_PRECEDENCE
    assert bd.value_of(bd.var("x", ir.INT)).precedence == ir.ATOMIC_PRECEDENCE
    assert bd.func_app("f", ir.INT, []).precedence == ir.ATOMIC_PRECEDENCE


def test_operator_nodes_take_table_precedence():
    assert bd.apply_binary("#+", _i(), _i()).precedence == 6
    assert bd.apply_binary("#*", _i(), _i()).precedence == 7
    assert bd.apply_unary("?!", _b()).precedence == 9
    assert ir.OPERATORS["#^"].assoc == "right"


def test_math_fn_typing():
    assert pt.math_fn("sin", bd.lit_float(1.0)).type == ir.FLOAT
    with pytest.raises(TypeMismatch):
        pt.math_fn("frob", bd.lit_float(1.0))


# -- list operation typing ------------------------------------------------------


def _float_list_var():
    return bd.var("ages", ir.list_of(ir.FLOAT))


def test_list_ops_type_check():
    lst = bd.value_of(_float_list_var())
    assert pt.list_access(lst, _i()).type == ir.FLOAT
    assert pt.list_size(lst).type == ir.INT
    with pytest.raises(TypeMismatch):
        pt.list_append(lst, bd.lit_string("old"))
    with pytest.raises(TypeMismatch):
        pt.list_size(_i())


def test_list_slice_requires_list_target():
    src = bd.value_of(_float_list_var())
    target = bd.var("someAges", ir.list_of(ir.FLOAT))
    sliced = pt.list_slice(target, src, start=_i(1), end=_i(3))
    assert (sliced.start.value, sliced.end.value, sliced.step) == (1, 3, None)
    with pytest.raises(TypeMismatch):
        pt.list_slice(bd.var("x", ir.INT), src)


# -- statement and declaration checks -----------------------------------------


def test_if_cond_needs_a_branch():
    with pytest.raises(EmptyConditional):
        bd.if_cond([], bd.one_liner(pt.print_str("x")))


def test_duplicate_params_rejected():
    p = bd.param(bd.var("x", ir.INT))
    with pytest.raises(DuplicateParam):
        bd.function("f", ir.Scope.PUBLIC, ir.Binding.STATIC, ir.INT,
                    [p, p], bd.one_liner(bd.return_stmt(_i())))


def test_duplicate_methods_rejected():
    m = pt.get_method("C", bd.var("foo", ir.INT))
    with pytest.raises(DuplicateMethod):
        bd.build_class("C", None, ir.Scope.PUBLIC, [], [m, m])


def test_duplicate_modules_rejected():
    mod = bd.build_module("M", [], [bd.main_function(
        bd.one_liner(pt.print_str_ln("hi")))], [])
    with pytest.raises(DuplicateModule):
        bd.prog("p", [mod, mod])


def test_const_state_var_cannot_be_assigned():
    cv = bd.const_var(ir.Scope.PRIVATE, bd.var("limit", ir.INT))
    setter = bd.method(
        "raiseLimit", "C", ir.Scope.PUBLIC, ir.Binding.DYNAMIC, ir.VOID, [],
        bd.one_liner(bd.assign(bd.self_var("limit", ir.INT), _i(99))))
    with pytest.raises(ConstAssignment):
        bd.build_class("C", None, ir.Scope.PUBLIC, [cv], [setter])


def test_observer_calls_must_follow_init():
    obs_t = ir.obj_of("Observer")
    add = pt.add_observer(bd.value_of(bd.var("o", obs_t)))
    with pytest.raises(ObserverNotInitialized):
        bd.main_function(bd.one_liner(add))
    ordered = bd.main_function(bd.body_statements(
        [pt.init_observer_list(obs_t, []), add]))
    assert ordered.is_main


def test_doc_func_rejects_unknown_param():
    func = bd.function("add", ir.Scope.PUBLIC, ir.Binding.STATIC, ir.INT,
                       [bd.param(bd.var("a", ir.INT))],
                       bd.one_liner(bd.return_stmt(_i())))
    with pytest.raises(UnknownParamDoc):
        bd.doc_func("adds", [("b", "not a param")], "sum", func)


def test_doc_func_orders_params_by_declaration():
    func = bd.function(
        "add", ir.Scope.PUBLIC, ir.Binding.STATIC, ir.INT,
        [bd.param(bd.var("a", ir.INT)), bd.param(bd.var("b", ir.INT))],
        bd.one_liner(bd.return_stmt(_i())))
    documented = bd.doc_func("adds", [("b", "second"), ("a", "first")], "sum", func)
    assert [name for name, _ in documented.doc.param_descs] == ["a", "b"]


def test_duplicate_state_labels_rejected():
    branch = bd.one_liner(pt.print_str("x"))
    with pytest.raises(DuplicateStateLabel):
        pt.check_state("fsm", [(bd.lit_string("On"), branch),
                               (bd.lit_string("On"), branch)], branch)


def test_check_state_labels_must_be_strings():
    branch = bd.one_liner(pt.print_str("x"))
    with pytest.raises(TypeMismatch):
        pt.check_state("fsm", [(bd.lit_int(1), branch)], branch)


def test_unknown_strategy_rejected():
    with pytest.raises(UnknownStrategy):
        pt.run_strategy("missing", {"a": bd.one_liner(pt.print_str("a"))})


def test_strategy_result_needs_var_and_value_together():
    with pytest.raises(SignatureMismatch):
        pt.run_strategy("a", {"a": bd.one_liner(pt.print_str("a"))},
                        result_var=bd.var("r", ir.INT))


def test_in_out_func_needs_an_output():
    with pytest.raises(SignatureMismatch):
        pt.in_out_func("f", ir.Scope.PUBLIC, ir.Binding.STATIC,
                       ins=[bd.var("x", ir.INT)], outs=[], inouts=[],
                       body_=bd.one_liner(pt.print_str("x")))


def test_in_out_call_checks_arity_and_types():
    func = pt.in_out_func(
        "f", ir.Scope.PUBLIC, ir.Binding.STATIC,
        ins=[bd.var("d", ir.INT)], outs=[bd.var("ok", ir.BOOL)],
        inouts=[bd.var("p", ir.INT)],
        body_=bd.one_liner(bd.assign(bd.var("ok", ir.BOOL), _b())))
    with pytest.raises(SignatureMismatch):
        pt.in_out_call(func, ins=[], outs=[bd.var("ok", ir.BOOL)],
                       inouts=[bd.var("p", ir.INT)])
    with pytest.raises(SignatureMismatch):
        pt.in_out_call(func, ins=[bd.lit_string("10")],
                       outs=[bd.var("ok", ir.BOOL)], inouts=[bd.var("p", ir.INT)])
    plain = bd.function("g", ir.Scope.PUBLIC, ir.Binding.STATIC, ir.VOID, [],
                        bd.one_liner(pt.print_str("x")))
    with pytest.raises(SignatureMismatch):
        pt.in_out_call(plain, ins=[], outs=[], inouts=[])


def test_package_rejects_duplicate_aux_kinds():
    program = bd.prog("p", [bd.build_module(
        "M", [], [bd.main_function(bd.one_liner(pt.print_str_ln("hi")))], [])])
    with pytest.raises(BuildError):
        bd.package(program, [ir.AuxFileSpec("makefile"), ir.AuxFileSpec("makefile")])


def test_observer_list_var_is_shared_constant():
    t = ir.obj_of("Observer")
    assert pt.observer_list_var(t).name == ir.OBSERVER_LIST_NAME
    assert pt.observer_list_var(t).type == ir.list_of(t)
