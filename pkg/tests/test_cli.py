"""Command-line behavior: parsing, orchestration, exit codes."""

from __future__ import annotations

import json

import pytest

from fixture_defs import FIXTURES
from tsdetect import UsageError
from tsdetect.cli import EvalConfig, RunConfig, main, parse_args
from tsdetect.languages import Language

GO_FIXTURE = next(f for f in FIXTURES if f.name == "go")


def _write_tree(tmp_path, files):
    for rel, text in files.items():
        path = tmp_path / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")


class TestParseArgs:
    def test_single_pattern(self):
        config = parse_args(["-p", "src", "-c", "cfg.py", "-t", "nested"])
        assert isinstance(config, RunConfig)
        assert config.pattern == "nested"
        assert config.project_path == "src"
        assert config.config_paths == ["cfg.py"]

    def test_repeatable_config(self):
        config = parse_args(["-p", "src", "-c", "a", "-c", "b"])
        assert config.config_paths == ["a", "b"]

    def test_default_pattern_is_all(self):
        assert parse_args(["-p", "s", "-c", "c"]).pattern == "all"

    def test_unknown_pattern_lists_choices(self):
        with pytest.raises(UsageError) as exc:
            parse_args(["-p", "s", "-c", "c", "-t", "bogus"])
        assert "nested" in str(exc.value)

    def test_missing_required_flags(self):
        with pytest.raises(UsageError):
            parse_args(["-p", "only-project"])

    def test_language_mapping(self):
        assert parse_args(["-p", "s", "-c", "c", "-l", "c++"]).language is Language.CPP
        assert parse_args(["-p", "s", "-c", "c", "-l", "go"]).language is Language.GO

    def test_long_forms(self):
        config = parse_args(
            ["--project", "s", "--config", "c", "--pattern", "dead", "--out", "o.json"]
        )
        assert (config.pattern, config.out_path) == ("dead", "o.json")

    def test_eval_subcommand(self):
        config = parse_args(["eval", "--report", "r.json", "--truth", "t.csv"])
        assert isinstance(config, EvalConfig)
        assert config.report_path == "r.json"

    def test_ignore_override(self):
        config = parse_args(["-p", "s", "-c", "c", "--ignore", "dist, gen"])
        assert config.ignore_names == ("dist", "gen")


class TestRun:
    def test_fixture_scan_matches_golden(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        code = main(
            [
                "-p", str(GO_FIXTURE.root),
                "-c", GO_FIXTURE.config_paths()[0],
                "-o", str(out),
            ]
        )
        assert code == 0
        assert out.read_text(encoding="utf-8") == GO_FIXTURE.golden.read_text(encoding="utf-8")

    def test_stdout_when_out_omitted(self, capsys):
        code = main(["-p", str(GO_FIXTURE.root), "-c", GO_FIXTURE.config_paths()[0], "-t", "dead"])
        assert code == 0
        document = json.loads(capsys.readouterr().out)
        assert set(document) == {"schema", "Dead_Toggles"}

    def test_nonexistent_project_exit_2(self, tmp_path, capsys):
        missing = tmp_path / "nope"
        code = main(["-p", str(missing), "-c", "x"])
        assert code == 2
        assert str(missing) in capsys.readouterr().err

    def test_unreadable_config_exit_2(self, tmp_path, capsys):
        _write_tree(tmp_path, {"a.go": "package a\n"})
        code = main(["-p", str(tmp_path), "-c", str(tmp_path / "missing.go")])
        assert code == 2

    def test_unwritable_out_exit_2(self, tmp_path, capsys):
        _write_tree(tmp_path, {"a.go": "package a\n", "cfg.go": "X_FLAG = 1\n"})
        code = main(
            [
                "-p", str(tmp_path),
                "-c", str(tmp_path / "cfg.go"),
                "-o", str(tmp_path / "no_dir" / "out.json"),
            ]
        )
        assert code == 2

    def test_usage_error_exit_1(self, capsys):
        assert main(["-t", "bogus"]) == 1

    def test_empty_registry_is_advisory(self, tmp_path, capsys):
        _write_tree(tmp_path, {"a.go": "package a\n", "cfg.go": "// nothing here\n"})
        code = main(["-p", str(tmp_path), "-c", str(tmp_path / "cfg.go")])
        captured = capsys.readouterr()
        assert code == 0
        assert "advisory" in captured.err
        document = json.loads(captured.out)
        assert document["Dead_Toggles"]["total_count_toggles"] == 0

    def test_empty_registry_fails_under_strict(self, tmp_path, capsys):
        _write_tree(tmp_path, {"a.go": "package a\n", "cfg.go": "// nothing\n"})
        code = main(["-p", str(tmp_path), "-c", str(tmp_path / "cfg.go"), "--strict"])
        assert code == 1

    def test_no_recognized_files_exit_1(self, tmp_path, capsys):
        _write_tree(tmp_path, {"readme.txt": "hi", "cfg.txt": "A_FLAG = 1\n"})
        code = main(["-p", str(tmp_path), "-c", str(tmp_path / "cfg.txt")])
        assert code == 1

    def test_language_override_rescues_unrecognized_tree(self, tmp_path, capsys):
        _write_tree(tmp_path, {"readme.txt": "hi", "cfg.txt": "A_FLAG = 1\n"})
        code = main(["-p", str(tmp_path), "-c", str(tmp_path / "cfg.txt"), "-l", "go"])
        assert code == 0

    def test_raw_mode_changes_dead_verdict(self, tmp_path, capsys):
        _write_tree(
            tmp_path,
            {"a.go": 'package a\n\nvar s = "GHOST_FLAG"\n', "cfg.go": "GHOST_FLAG := true\n"},
        )
        args = ["-p", str(tmp_path), "-c", str(tmp_path / "cfg.go"), "-t", "dead"]
        assert main(args) == 0
        masked_doc = json.loads(capsys.readouterr().out)
        assert masked_doc["Dead_Toggles"]["toggles"] == ["GHOST_FLAG"]
        assert main(args + ["--raw"]) == 0
        raw_doc = json.loads(capsys.readouterr().out)
        assert raw_doc["Dead_Toggles"]["toggles"] == []

    def test_env_var_extends_ignores(self, tmp_path, capsys, monkeypatch):
        _write_tree(
            tmp_path,
            {
                "gen/a.go": "package gen\n\nfunc f() { use(LIVE_FLAG) }\n",
                "cfg.go": "LIVE_FLAG = true\n",
            },
        )
        args = ["-p", str(tmp_path), "-c", str(tmp_path / "cfg.go"), "-t", "dead"]
        assert main(args) == 0
        assert json.loads(capsys.readouterr().out)["Dead_Toggles"]["toggles"] == []
        monkeypatch.setenv("TSD_IGNORE", "gen")
        assert main(args) == 0
        assert json.loads(capsys.readouterr().out)["Dead_Toggles"]["toggles"] == ["LIVE_FLAG"]

    def test_all_equals_union_of_singles(self, tmp_path, capsys):
        root = str(GO_FIXTURE.root)
        cfg = GO_FIXTURE.config_paths()[0]
        assert main(["-p", root, "-c", cfg]) == 0
        doc_all = json.loads(capsys.readouterr().out)
        merged = {"schema": doc_all["schema"]}
        for pattern in ("dead", "spread", "nested", "mixed", "enum"):
            assert main(["-p", root, "-c", cfg, "-t", pattern]) == 0
            single = json.loads(capsys.readouterr().out)
            key = next(k for k in single if k != "schema")
            merged[key] = single[key]
        assert doc_all == merged

    def test_internal_invariant_exit_3(self, tmp_path, capsys, monkeypatch):
        import tsdetect.cli as cli_module
        from tsdetect import InternalInvariantError

        _write_tree(tmp_path, {"a.go": "package a\n", "cfg.go": "LIVE_FLAG = 1\n"})

        def broken(document):
            raise InternalInvariantError("synthetic violation")

        monkeypatch.setattr(cli_module, "validate_document", broken)
        code = main(["-p", str(tmp_path), "-c", str(tmp_path / "cfg.go")])
        assert code == 3

    def test_unbalanced_directive_warning_on_stderr(self, tmp_path, capsys):
        _write_tree(
            tmp_path,
            {"a.c": "#ifdef LIVE_FLAG\nint a;\n", "cfg.h": "static const int LIVE_FLAG = 1;\n"},
        )
        code = main(["-p", str(tmp_path), "-c", str(tmp_path / "cfg.h"), "-o", str(tmp_path / "o.json")])
        assert code == 0
        assert "#ifdef" in capsys.readouterr().err

    def test_profile_override_flag(self, tmp_path, capsys):
        override = tmp_path / "profile.txt"
        override.write_text("[go]\nconditional = (?<![A-Za-z0-9_])if(?![A-Za-z0-9_])\n")
        code = main(
            [
                "-p", str(GO_FIXTURE.root),
                "-c", GO_FIXTURE.config_paths()[0],
                "-t", "nested",
                "--profile", str(override),
            ]
        )
        assert code == 0


class TestEvalCommand:
    def test_end_to_end(self, tmp_path, capsys):
        report = tmp_path / "report.json"
        assert main(["-p", str(GO_FIXTURE.root), "-c", GO_FIXTURE.config_paths()[0], "-o", str(report)]) == 0
        truth = tmp_path / "truth.csv"
        truth.write_text(
            "pattern,toggle,file\n"
            "spread,EnableFastPath,\n"
            "dead,DeadSwitch,\n"
            "nested,EnableSlowPath,pkg/feed/feed.go\n",
            encoding="utf-8",
        )
        assert main(["eval", "--report", str(report), "--truth", str(truth)]) == 0
        out = capsys.readouterr().out
        assert "precision" in out
        payload = json.loads(out[out.index("{"):])
        assert payload["spread"]["tp"] == 1
        assert payload["dead"]["tp"] == 1
        assert payload["nested"]["tp"] == 1

    def test_missing_report_exit_2(self, tmp_path, capsys):
        truth = tmp_path / "t.csv"
        truth.write_text("pattern,toggle\n", encoding="utf-8")
        assert main(["eval", "--report", str(tmp_path / "nope.json"), "--truth", str(truth)]) == 2

    def test_bad_truth_exit_1(self, tmp_path, capsys):
        report = tmp_path / "r.json"
        report.write_text("{}", encoding="utf-8")
        truth = tmp_path / "t.csv"
        truth.write_text("pattern,toggle\nbogus,XYZ_FLAG\n", encoding="utf-8")
        assert main(["eval", "--report", str(report), "--truth", str(truth)]) == 1
