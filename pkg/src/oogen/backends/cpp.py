"""C++ backend.

Each module renders as a source/header pair: declarations (class shells,
free-function prototypes) go to the .hpp under an include guard, definitions
go to the .cpp, which includes its own header first. A module whose only
content is the entry point collapses to a single source file with no header.

Objects use value semantics, list loops use explicit iterators (reads through
the iterator deref, method calls through ->), and bool printing switches the
stream to boolalpha so `true`/`false` come out as words.
"""

from __future__ import annotations

from .. import ir
from ..layout import (
    EMPTY,
    Doc,
    FileType,
    RenderedFile,
    extract,
    indent,
    join_blocks,
    text,
    vcat,
)
from .cfamily import CFamilyRenderer


class CppRenderer(CFamilyRenderer):
    target = "cpp"
    extension = ".cpp"
    header_extension = ".hpp"
    switch_strings_as_chain = True  # no switch on std::string

    def __init__(self) -> None:
        super().__init__()
        self._iter_vars: set[str] = set()

    def prec_of(self, e: ir.ExprRepr) -> float:
        if isinstance(e, ir.Binary) and e.op.name == "#^":
            return ir.ATOMIC_PRECEDENCE  # renders as pow(...)
        return super().prec_of(e)

    def type_text(self, t: ir.TypeRepr) -> str:
        if t.kind == "float":
            return "double"
        if t.kind == "string":
            self.needs.add("string")
            return "std::string"
        if t.kind == "infile":
            self.needs.add("fstream")
            return "std::ifstream"
        if t.kind == "outfile":
            self.needs.add("fstream")
            return "std::ofstream"
        if t.kind == "list":
            self.needs.add("vector")
            return f"std::vector<{self.type_text(t.elem)}>"
        if t.kind == "object":
            return t.class_name
        return t.kind  # bool, int, char, void match the C++ spelling

    def var_ref(self, v: ir.VariableRepr) -> str:
        if v.form == ir.VarForm.PLAIN and v.name in self._iter_vars:
            return f"(*{v.name})"
        if v.form == ir.VarForm.SELF:
            return f"this->{v.name}"
        if v.form == ir.VarForm.OBJECT_MEMBER:
            return f"{v.owner}.{v.name}"
        if v.form in (ir.VarForm.CLASS_MEMBER, ir.VarForm.EXTERNAL):
            return f"{v.owner}::{v.name}"
        return v.name

    def math_call(self, fn: str, arg: ir.ExprRepr) -> str:
        # C's abs truncates; doubles need fabs, ints keep abs from stdlib.h.
        if fn == "abs":
            if arg.type.kind == "int":
                self.needs.add("stdlib.h")
                return f"abs({self.expr(arg)})"
            fn = "fabs"
        self.needs.add("math.h")
        return f"{fn}({self.expr(arg)})"

    def power(self, e: ir.Binary) -> str:
        self.needs.add("math.h")
        return f"pow({self.expr(e.left)}, {self.expr(e.right)})"

    def constructor_call(self, class_name: str, args: str) -> str:
        return f"{class_name}({args})"

    def method_call_text(self, receiver: ir.ExprRepr, name: str, args: str) -> str:
        if (
            isinstance(receiver, ir.ValueOf)
            and receiver.var.form == ir.VarForm.PLAIN
            and receiver.var.name in self._iter_vars
        ):
            return f"{receiver.var.name}->{name}({args})"
        return f"{self.atom(receiver)}.{name}({args})"

    def args_list(self) -> str:
        return "argv"

    def arg_at(self, index: ir.ExprRepr) -> str:
        return f"argv[{self.literal_plus_one(index)}]"  # argv[0] is the program

    def arg_exists(self, index: ir.ExprRepr) -> str:
        return f"argc > {self.literal_plus_one(index)}"

    def list_access(self, lst: ir.ExprRepr, index: ir.ExprRepr) -> str:
        return f"{self.atom(lst)}.at({self.expr(index)})"

    def list_size(self, lst: ir.ExprRepr) -> str:
        return f"(int)({self.atom(lst)}.size())"

    def list_append(self, lst: ir.ExprRepr, value: ir.ExprRepr) -> str:
        return f"{self.atom(lst)}.push_back({self.expr(value)})"

    def list_index_exists(self, lst: ir.ExprRepr, index: ir.ExprRepr) -> str:
        return f"(int)({self.atom(lst)}.size()) > {self.expr(index)}"

    def list_index_of(self, lst: ir.ExprRepr, value: ir.ExprRepr) -> str:
        self.needs.add("algorithm")
        seq = self.atom(lst)
        return (
            f"(int)(std::find({seq}.begin(), {seq}.end(),"
            f" {self.expr(value)}) - {seq}.begin())"
        )

    def empty_list_decl(self, name: str, elem: ir.TypeRepr) -> str:
        return f"{self.type_text(ir.list_of(elem))} {name}(0);"

    def throw_text(self, message: str) -> str:
        self.needs.add("stdexcept")
        return f'throw std::runtime_error("{message}");'

    def catch_header(self) -> str:
        return "catch (...) {"

    def free_doc(self, v: ir.VariableRepr) -> Doc:
        return text(f"delete {self.var_ref(v)};")

    def for_each_doc(self, s: ir.ForEach) -> Doc:
        header = self.for_each_header(s)
        added = s.var.name not in self._iter_vars
        if added:
            self._iter_vars.add(s.var.name)
        try:
            return self.braced(header, self.body(s.body))
        finally:
            if added:
                self._iter_vars.discard(s.var.name)

    def for_each_header(self, s: ir.ForEach) -> str:
        seq = self.atom(s.iterable)
        it_type = f"{self.type_text(ir.list_of(s.var.type))}::iterator"
        name = s.var.name
        return (
            f"for ({it_type} {name} = {seq}.begin();"
            f" {name} != {seq}.end(); {name}++) {{"
        )

    def print_scalar_doc(self, s: ir.Print) -> Doc:
        self.needs.add("iostream")
        value = self.expr(s.expr)
        if self.prec_of(s.expr) < 6:
            value = f"({value})"  # << binds tighter than comparisons
        chain = "std::cout"
        if s.expr.type.kind == "bool":
            chain += " << std::boolalpha"
        chain += f" << {value}"
        if s.newline:
            chain += " << std::endl"
        return text(chain + ";")

    def read_doc(self, s: ir.Read) -> Doc:
        self.needs.add("iostream")
        if s.parse_int:
            return text(f"std::cin >> {self.var_ref(s.var)};")
        return text(f"std::getline(std::cin, {self.var_ref(s.var)});")

    def in_out_call_doc(self, s: ir.InOutCall) -> Doc:
        args = (
            [self.var_ref(v) for v in s.inouts]
            + [self.expr(e) for e in s.ins]
            + [self.var_ref(v) for v in s.outs]
        )
        return text(f"{s.name}({', '.join(args)});")

    # -- declarations -----------------------------------------------------------

    def _param_text(self, v: ir.VariableRepr, by_ref: bool = False) -> str:
        ref = "&" if by_ref else ""
        return f"{self.type_text(v.type)} {ref}{v.name}"

    def _sig_params(self, m: ir.MethodRepr) -> str:
        if m.inout is not None:
            spec = m.inout
            parts = (
                [self._param_text(v, by_ref=True) for v in spec.inouts]
                + [self._param_text(v) for v in spec.ins]
                + [self._param_text(v, by_ref=True) for v in spec.outs]
            )
            return ", ".join(parts)
        return ", ".join(self._param_text(p.variable) for p in m.params)

    def _sig_head(self, m: ir.MethodRepr, qualify: bool) -> str:
        owner = f"{m.containing_class}::" if qualify and m.containing_class else ""
        return f"{self.type_text(m.return_type)} {owner}{m.name}({self._sig_params(m)})"

    def method_doc(self, m: ir.MethodRepr) -> Doc:
        """Definition, for the source file. Doc comments stay on the header
        prototypes; only main (which has no prototype) keeps its own."""
        if m.is_main:
            inner = join_blocks([self.body(m.body), text("return 0;")])
            header = "int main(int argc, const char *argv[]) {"
            return vcat([self.doc_comment(m.doc), self.braced(header, inner)])
        return self.braced(self._sig_head(m, qualify=True) + " {", self.body(m.body))

    def prototype_doc(self, m: ir.MethodRepr) -> Doc:
        return vcat([
            self.doc_comment(m.doc),
            text(self._sig_head(m, qualify=False) + ";"),
        ])

    def state_var_decl(self, sv: ir.StateVarRepr) -> Doc:
        static = "static " if sv.binding == ir.Binding.STATIC else ""
        const = "const " if sv.is_const else ""
        return text(
            f"{static}{const}{self.type_text(sv.variable.type)} {sv.variable.name};"
        )

    def class_decl_doc(self, c: ir.ClassDeclRepr) -> Doc:
        parent = f" : public {c.parent}" if c.parent else ""
        sections: list[Doc] = []
        for scope, label in ((ir.Scope.PUBLIC, "public:"), (ir.Scope.PRIVATE, "private:")):
            members: list[Doc] = []
            for m in c.methods:
                if m.scope != scope:
                    continue
                static = "static " if m.binding == ir.Binding.STATIC else ""
                members.append(vcat([
                    self.doc_comment(m.doc),
                    text(static + self._sig_head(m, qualify=False) + ";"),
                ]))
            members.extend(
                self.state_var_decl(sv) for sv in c.state_vars if sv.scope == scope
            )
            if members:
                sections.append(vcat([text(label), indent(vcat(members))]))
        body = vcat(sections) if sections else EMPTY
        return vcat([
            self.doc_comment(c.doc),
            text(f"class {c.name}{parent} {{"),
            indent(body),
            text("};"),
        ])

    def class_defs_doc(self, c: ir.ClassDeclRepr) -> Doc:
        # static members declared in the class still need one definition
        # at namespace scope or the program fails to link
        defs = vcat([
            text(f"{self.type_text(sv.variable.type)} {c.name}::{sv.variable.name};")
            for sv in c.state_vars
            if sv.binding == ir.Binding.STATIC and not sv.is_const
        ])
        return join_blocks([defs] + [self.method_doc(m) for m in c.methods])

    def module_files(self, module: ir.ModuleRepr) -> list[RenderedFile]:
        self._module = module
        plain = [f for f in module.functions if not f.is_main]
        mains = [f for f in module.functions if f.is_main]
        has_header = bool(module.classes) or bool(plain)
        name = module.name

        src_docs = [self.class_defs_doc(c) for c in module.classes]
        src_docs += [self.method_doc(f) for f in plain]
        src_docs += [self.method_doc(f) for f in mains]
        src_needs = set(self.needs)

        self.needs = set()
        hdr_docs = [self.prototype_doc(f) for f in plain]
        hdr_docs += [self.class_decl_doc(c) for c in module.classes]
        hdr_needs = set(self.needs)

        own = text(f'#include "{name}{self.header_extension}"') if has_header else EMPTY
        other = vcat(
            [text(f'#include "{imp}{self.header_extension}"')
             for imp in sorted(module.imports)]
            + [text(f"#include <{inc}>") for inc in sorted(src_needs)]
        )
        src_content = join_blocks([self.doc_comment(module.doc), own, other, *src_docs])
        files = [
            RenderedFile(f"{name}{self.extension}", FileType.SOURCE, extract(src_content))
        ]

        if has_header:
            guard = f"{name}_HPP"
            hdr_content = join_blocks([
                vcat([text(f"#ifndef {guard}"), text(f"#define {guard}")]),
                vcat([text(f"#include <{inc}>") for inc in sorted(hdr_needs)]),
                *hdr_docs,
                text("#endif"),
            ])
            files.append(RenderedFile(
                f"{name}{self.header_extension}", FileType.HEADER, extract(hdr_content)
            ))
        return files
