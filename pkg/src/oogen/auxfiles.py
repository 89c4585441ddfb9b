"""Non-code package artifacts: doc comments, Makefile, Doxygen config.

The Makefile shape is one canonical compiler invocation per target with the
command names lifted into variables so callers can override them the usual
way (`make CXX=clang++`). Rule bodies use hard tabs; that is a format
requirement, not a style choice.
"""

from __future__ import annotations

from . import ir
from .errors import NoMainModule, UnsupportedConstruct
from .layout import EMPTY, Doc, FileType, RenderedFile, extract, join_blocks, text, vcat

DOX_CONFIG_NAME = "doxConfig"


def doc_comment_doc(doc: ir.DocSpec | None, target: str) -> Doc:
    """Doxygen-style comment block; Python gets the same fields behind #."""
    if doc is None:
        return EMPTY
    fields: list[tuple[str, str]] = [("\\brief", doc.description)]
    fields += [("\\param", f"{name} {desc}") for name, desc in doc.param_descs]
    if doc.return_desc is not None:
        fields.append(("\\return", doc.return_desc))
    if target == "python":
        return vcat([text(f"# {tag} {value}") for tag, value in fields])
    tag, value = fields[0]
    lines = [f"/** {tag} {value}"]
    lines += [f"    {tag} {value}" for tag, value in fields[1:]]
    lines.append("*/")
    return vcat([text(line) for line in lines])


def _rule(name: str, commands: list[str], dep: str = "") -> Doc:
    return vcat([text(f"{name}:{dep}")] + [text("\t" + c) for c in commands])


def render_makefile(pkg: ir.PackageTree, target: str, with_doc_rule: bool) -> RenderedFile:
    from . import backends

    main = pkg.main_module
    if main is None:
        raise NoMainModule(f"a {target} makefile needs a module with a main function")
    files = backends.get_backend(target).render_package(pkg)
    sources = [f.path for f in files if f.file_type != FileType.HEADER]

    if target == "python":
        blocks = [
            text("PYTHON = python3"),
            _rule("run", [f"$(PYTHON) {main.name}.py"]),
        ]
    elif target == "java":
        blocks = [
            vcat([text("JC = javac"), text("JVM = java")]),
            _rule("build", ["$(JC) " + " ".join(sources)]),
            _rule("run", [f"$(JVM) {main.name}"], dep=" build"),
        ]
    elif target == "csharp":
        exe = f"{pkg.name}.exe"
        blocks = [
            vcat([text("CSC = mcs"), text("RUNNER = mono")]),
            _rule("build", [f"$(CSC) -out:{exe} " + " ".join(sources)]),
            _rule("run", [f"$(RUNNER) {exe}"], dep=" build"),
        ]
    elif target == "cpp":
        blocks = [
            text("CXX = g++"),
            _rule("build", [f"$(CXX) -o {pkg.name} " + " ".join(sources)]),
            _rule("run", [f"./{pkg.name}"], dep=" build"),
        ]
    else:
        raise UnsupportedConstruct(f"no makefile shape for target {target!r}")

    if with_doc_rule:
        blocks.append(_rule("doc", [f"doxygen {DOX_CONFIG_NAME}"]))
    return RenderedFile("Makefile", FileType.AUX, extract(join_blocks(blocks)))


def render_dox_config(pkg: ir.PackageTree) -> RenderedFile:
    content = extract(vcat([
        text(f'PROJECT_NAME = "{pkg.name}"'),
        text("INPUT = ."),
        text("EXTRACT_ALL = YES"),
    ]))
    return RenderedFile(DOX_CONFIG_NAME, FileType.AUX, content)


def render_aux(pkg: ir.PackageTree, target: str) -> list[RenderedFile]:
    out: list[RenderedFile] = []
    for spec in pkg.aux:
        if spec.kind == "makefile":
            out.append(render_makefile(pkg, target, spec.with_doc_rule))
        elif spec.kind == "doxygen":
            out.append(render_dox_config(pkg))
        else:
            raise UnsupportedConstruct(f"unknown auxiliary file kind {spec.kind!r}")
    return out
