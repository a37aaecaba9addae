from __future__ import annotations

from types import SimpleNamespace

import pytest

from szl.cli import main as cli_main
from szl.errors import ConfigError, NotLumpable


def test_build_arg_parser_accepts_all_registered_commands() -> None:
    parser = cli_main.build_arg_parser()
    for command in ("gen", "lump", "quantize", "aggregate", "cmv", "simulate", "verify"):
        extra = ["hexahedron"] if command == "gen" else []
        args = parser.parse_args([command] + extra)
        assert args.command == command


def test_build_arg_parser_requires_add_subparser(monkeypatch: pytest.MonkeyPatch) -> None:
    bad_module = SimpleNamespace(run=lambda _args: 0)
    monkeypatch.setattr(cli_main, "_COMMANDS", {"bad": bad_module})
    with pytest.raises(RuntimeError, match="missing add_subparser"):
        cli_main.build_arg_parser()


def _fake_module(run=None) -> SimpleNamespace:
    def _add_subparser(subparsers: object) -> None:
        parser = subparsers.add_parser("fake")  # type: ignore[attr-defined]
        parser.add_argument("--out", default=None)
        parser.set_defaults(command="fake")

    if run is None:
        return SimpleNamespace(add_subparser=_add_subparser)
    return SimpleNamespace(add_subparser=_add_subparser, run=run)


def test_main_dispatches_to_selected_command(monkeypatch: pytest.MonkeyPatch) -> None:
    called: list[str] = []

    def _run(args: object) -> int:
        called.append(str(args.command))  # type: ignore[attr-defined]
        return 0

    monkeypatch.setattr(cli_main, "_COMMANDS", {"fake": _fake_module(_run)})

    assert cli_main.main(["fake"]) == 0
    assert called == ["fake"]


def test_main_requires_run_function(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(cli_main, "_COMMANDS", {"fake": _fake_module()})

    with pytest.raises(RuntimeError, match="missing run"):
        cli_main.main(["fake"])


def test_main_maps_failures_to_exit_codes(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    def _config(_args: object) -> int:
        raise ConfigError("bad flag")

    def _domain(_args: object) -> int:
        raise NotLumpable("Block B splits.", witness={"u": "B"})

    def _io(_args: object) -> int:
        raise FileNotFoundError("absent.json")

    for runner, expected in ((_config, 2), (_domain, 1), (_io, 2)):
        monkeypatch.setattr(cli_main, "_COMMANDS", {"fake": _fake_module(runner)})
        assert cli_main.main(["fake"]) == expected

    out = capsys.readouterr().out
    assert '"error": "NotLumpable"' in out
    assert '"type": "error"' in out


def test_usage_errors_and_help(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli_main.main([]) == 2
    assert cli_main.main(["--help"]) == 0
    assert "szl" in capsys.readouterr().out
