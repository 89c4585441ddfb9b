"""CLI behaviour, driven through main() so exit codes are the real ones."""

import json
import os

import pytest

from oogen import cli, gallery, jsonio
from oogen.errors import UnsupportedConstruct


def test_render_writes_files_and_prints_manifest(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    rc = cli.main(["render", "--input", "example:helloWorld",
                   "--target", "python", "--target", "cpp",
                   "--out", "build"])
    assert rc == 0
    manifest = capsys.readouterr().out.splitlines()
    assert manifest == [
        os.path.join("build", "python", "HelloWorld.py"),
        os.path.join("build", "cpp", "HelloWorld.cpp"),
    ]
    for rel in manifest:
        assert (tmp_path / rel).is_file()


def test_render_repeated_target_writes_once(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    rc = cli.main(["render", "--input", "example:helloWorld",
                   "--target", "python", "--target", "python",
                   "--out", "build"])
    assert rc == 0
    assert len(capsys.readouterr().out.splitlines()) == 1


def test_render_aux_flags_add_makefile_and_doxconfig(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    rc = cli.main(["render", "--input", "example:helloWorld",
                   "--target", "java", "--out", "build",
                   "--makefile", "--doc"])
    assert rc == 0
    makefile = (tmp_path / "build" / "java" / "Makefile").read_text()
    assert "doc:\n\tdoxygen doxConfig" in makefile
    assert (tmp_path / "build" / "java" / "doxConfig").is_file()


def test_render_accepts_package_json_file(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    pkg_file = tmp_path / "pkg.json"
    pkg_file.write_text(jsonio.dumps(gallery.get("addFunction").package))
    rc = cli.main(["render", "--input", str(pkg_file),
                   "--target", "csharp", "--out", "build"])
    assert rc == 0
    assert (tmp_path / "build" / "csharp" / "AddFunction.cs").is_file()


def test_examples_lists_all_gallery_names(capsys):
    assert cli.main(["examples"]) == 0
    names = capsys.readouterr().out.split()
    assert names == [e.name for e in gallery.ENTRIES]
    assert len(names) == 9


def test_examples_emit_produces_loadable_json(capsys):
    assert cli.main(["examples", "--emit", "patternTest"]) == 0
    out = capsys.readouterr().out
    assert jsonio.loads(out) == gallery.get("patternTest").package
    json.loads(out)  # plain JSON, no trailing junk


def test_examples_emit_unknown_name_exits_2(capsys):
    assert cli.main(["examples", "--emit", "nosuch"]) == 2
    assert "nosuch" in capsys.readouterr().err


def test_render_unknown_example_exits_2(tmp_path, capsys):
    rc = cli.main(["render", "--input", "example:nosuch",
                   "--target", "python", "--out", str(tmp_path)])
    assert rc == 2
    assert "nosuch" in capsys.readouterr().err


def test_render_malformed_json_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{this is not json")
    rc = cli.main(["render", "--input", str(bad),
                   "--target", "python", "--out", str(tmp_path / "o")])
    assert rc == 2
    assert "invalid JSON" in capsys.readouterr().err


def test_render_missing_file_exits_2(tmp_path, capsys):
    rc = cli.main(["render", "--input", str(tmp_path / "absent.json"),
                   "--target", "python", "--out", str(tmp_path / "o")])
    assert rc == 2
    assert "cannot read" in capsys.readouterr().err


def test_unsupported_construct_exits_3(tmp_path, capsys, monkeypatch):
    def boom(pkg, target):
        raise UnsupportedConstruct("no makefile shape for target 'brainfuck'")

    monkeypatch.setattr(cli, "assemble_package", boom)
    rc = cli.main(["render", "--input", "example:helloWorld",
                   "--target", "python", "--out", str(tmp_path)])
    assert rc == 3
    assert "unsupported construct" in capsys.readouterr().err


def test_verify_agreeing_targets_exit_0(tmp_path, capsys):
    rc = cli.main(["verify", "--input", "example:addFunction",
                   "--target", "python", "--out", str(tmp_path)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "python" in out and "ok" in out


def test_verify_all_toolchains_missing_is_clean_skip(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("OOGEN_PYTHON", "/nonexistent/python3")
    rc = cli.main(["verify", "--input", "example:helloWorld",
                   "--target", "python", "--out", str(tmp_path)])
    assert rc == 0
    assert "skipped" in capsys.readouterr().out


def test_verify_reads_stdin_file(tmp_path, capsys):
    stdin_file = tmp_path / "in.txt"
    stdin_file.write_text("-7\n")
    rc = cli.main(["verify", "--input", "example:signTest",
                   "--target", "python",
                   "--stdin", str(stdin_file), "--out", str(tmp_path / "w")])
    assert rc == 0


def test_verify_missing_stdin_file_exits_2(tmp_path, capsys):
    rc = cli.main(["verify", "--input", "example:signTest",
                   "--target", "python",
                   "--stdin", str(tmp_path / "absent.txt")])
    assert rc == 2


def test_verify_passes_program_args(tmp_path, capsys):
    rc = cli.main(["verify", "--input", "example:argsEcho",
                   "--target", "python", "--args", "hello",
                   "--out", str(tmp_path)])
    assert rc == 0
