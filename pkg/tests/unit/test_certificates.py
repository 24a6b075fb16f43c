"""
Tests for certificates: predicates, parameter grids, corpus loading and replay.
"""

import json

import pytest
from conftest import write_corpus
from pydantic import ValidationError

from hamcayley_cli.config import DEFAULT_CORPUS
from hamcayley_cli.engine.certificates import (
    Certificate,
    corpus_verify,
    load_corpus,
    parameter_grid,
    parse_bindings,
    parse_predicate,
    run_certificate,
)
from hamcayley_cli.engine.schemas import Status, Strategy
from hamcayley_cli.exceptions import CorpusParseError, InadmissibleBindingError, UnknownGroupError


def _direct(cycle="t^3, f, t^3, f", **extra):
    return {
        "id": extra.pop("id", "d8"),
        "group": "8.D8",
        "genset": {"t": "t", "f": "f"},
        "strategy": "direct",
        "cycle": cycle,
        **extra,
    }


@pytest.fixture(scope="module")
def shipped():
    return {c.id: c for c in load_corpus(DEFAULT_CORPUS)}


# ---------------------------------------------------------------------------
# Predicates and grids
# ---------------------------------------------------------------------------


class TestPredicates:
    @pytest.mark.parametrize(
        "source,binding,expected",
        [
            ("odd(i)", {"i": 3}, True),
            ("even(i)", {"i": 3}, False),
            ("prime(p)", {"p": 13}, True),
            ("prime(p)", {"p": 9}, False),
            ("4 | p-1", {"p": 5}, True),
            ("4 | p-1", {"p": 7}, False),
            ("ord(k, p) == 4", {"k": 2, "p": 5}, True),
            ("ord(k, p) == 4", {"k": 4, "p": 5}, False),
            ("p >= 5", {"p": 3}, False),
            ("k != p-1", {"k": 4, "p": 5}, False),
        ],
    )
    def test_holds(self, source, binding, expected):
        assert parse_predicate(source).holds(binding) is expected

    def test_unrecognized(self):
        with pytest.raises(ValueError):
            parse_predicate("p is prime")


class TestParameterGrid:
    def test_dependent_range_with_order_condition(self, shipped):
        grid = parameter_grid(shipped["6.2.a"])
        assert grid == [{"p": 5, "k": 2}, {"p": 5, "k": 3}, {"p": 13, "k": 5}, {"p": 13, "k": 8}]

    def test_no_params(self):
        assert parameter_grid(Certificate.model_validate(_direct())) == [{}]


def test_parse_bindings():
    assert parse_bindings("p=5, k=2") == {"p": 5, "k": 2}
    assert parse_bindings(None) == {}
    with pytest.raises(InadmissibleBindingError):
        parse_bindings("p")
    with pytest.raises(InadmissibleBindingError):
        parse_bindings("p=five")


# ---------------------------------------------------------------------------
# Model validation and loading
# ---------------------------------------------------------------------------


class TestModel:
    def test_direct_needs_cycle(self):
        with pytest.raises(ValidationError):
            Certificate.model_validate(_direct(cycle=None))

    def test_fgl_needs_subgroup(self):
        with pytest.raises(ValidationError):
            Certificate.model_validate({**_direct(), "strategy": "fgl"})

    def test_lemma_args_required(self):
        with pytest.raises(ValidationError):
            Certificate.model_validate({**_direct(cycle=None), "strategy": "rankin", "lemma_args": {"a": "t"}})

    def test_unknown_field(self):
        with pytest.raises(ValidationError):
            Certificate.model_validate({**_direct(), "notes": "x"})

    def test_bad_range(self):
        with pytest.raises(ValidationError):
            Certificate.model_validate({**_direct(), "params": {"p": "3-7"}})


class TestLoadCorpus:
    def test_skips_blank_lines(self, tmp_path):
        path = write_corpus(tmp_path / "c.jsonl", [_direct(), "", _direct(id="d8.2")])
        assert [c.id for c in load_corpus(path)] == ["d8", "d8.2"]

    def test_invalid_json(self, tmp_path):
        path = write_corpus(tmp_path / "c.jsonl", [_direct(), "{not json"])
        with pytest.raises(CorpusParseError) as exc:
            load_corpus(path)
        assert exc.value.line_no == 2

    def test_invalid_record(self, tmp_path):
        path = write_corpus(tmp_path / "c.jsonl", [{"id": "x", "group": "8.D8"}])
        with pytest.raises(CorpusParseError) as exc:
            load_corpus(path)
        assert exc.value.line_no == 1

    def test_duplicate_id(self, tmp_path):
        path = write_corpus(tmp_path / "c.jsonl", [_direct(), _direct()])
        with pytest.raises(CorpusParseError, match="duplicate"):
            load_corpus(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(CorpusParseError):
            load_corpus(tmp_path / "absent.jsonl")


# ---------------------------------------------------------------------------
# Replay
# ---------------------------------------------------------------------------


class TestRunCertificate:
    def test_direct_cycle(self):
        report = run_certificate(Certificate.model_validate(_direct()), show_vertices=True)
        assert report.status == Status.Passed
        assert report.group == "8.D8"
        assert [ch.name for ch in report.checks] == ["hamiltonian-cycle"]
        assert len(report.vertices) == 8
        assert len(set(report.vertices)) == 8

    def test_vertices_hidden_by_default(self):
        assert run_certificate(Certificate.model_validate(_direct())).vertices is None

    def test_failing_cycle(self):
        report = run_certificate(Certificate.model_validate(_direct("t^3, f, t^-3, f")))
        assert report.status == Status.Failed
        assert report.checks[0].detail == "repeated-vertex"

    def test_label_counts(self):
        c = Certificate.model_validate(_direct(expected_counts={"f": 3}))
        report = run_certificate(c)
        assert report.status == Status.Failed
        assert any(ch.name == "label-count:f" and not ch.passed for ch in report.checks)

    def test_alternative_candidate(self):
        c = Certificate.model_validate(_direct("t^4", alternatives=["t^3, f, t^3, f"]))
        report = run_certificate(c)
        assert report.passed
        assert report.alternative == 1

    def test_inadmissible_binding(self):
        c = Certificate.model_validate(_direct(params={"p": [5, 7]}, admissible=["4 | p-1"]))
        with pytest.raises(InadmissibleBindingError):
            run_certificate(c, {"p": 7})
        with pytest.raises(InadmissibleBindingError):
            run_certificate(c, {})

    def test_unknown_group(self):
        c = Certificate.model_validate({**_direct(), "group": "16.nonexistent"})
        with pytest.raises(UnknownGroupError):
            run_certificate(c)

    def test_domain_error_becomes_status(self):
        c = Certificate.model_validate({**_direct(), "genset": {"q": "q"}})
        report = run_certificate(c)
        assert report.status == Status.Error
        assert report.error

    def test_quotient_lift(self):
        c = Certificate.model_validate({
            "id": "z6",
            "group": {"kind": "cyclic", "generator": "x", "order": 6},
            "genset": {"x": "x", "y": "x^3"},
            "strategy": "fgl",
            "subgroup": ["x^2"],
            "expected_endpoint": "x^4",
            "cycle": "x, y",
        })
        report = run_certificate(c)
        assert report.passed, report.checks
        names = [ch.name for ch in report.checks]
        assert "endpoint-generates" in names
        assert "lifted-cycle" in names
        assert report.degenerate

    def test_lemma_tagged(self, s4z2):
        c = Certificate.model_validate({
            "id": "ne",
            "group": "48.S4xZ2",
            "genset": {"a": "(3,4)", "b": "(1,2,3)", "c": "(5,6)"},
            "strategy": "normal-easy",
            "lemma_args": {"s": "c"},
        })
        report = run_certificate(c)
        assert report.passed
        assert report.strategy == Strategy.NormalEasy


# ---------------------------------------------------------------------------
# Corpus
# ---------------------------------------------------------------------------


class TestCorpusVerify:
    def test_filter_and_counts(self, tmp_path):
        path = write_corpus(tmp_path / "c.jsonl", [_direct(), _direct("t^4", id="d8.bad")])
        report = corpus_verify(path)
        assert (report.total, report.passed, report.failed) == (2, 1, 1)
        assert not report.ok
        assert corpus_verify(path, pattern="d8").ok
        assert corpus_verify(path, pattern="nothing*").total == 0

    def test_grid_expansion_and_pinning(self, tmp_path):
        c = _direct(params={"p": "3..7"}, admissible=["prime(p)"])
        path = write_corpus(tmp_path / "c.jsonl", [c])
        assert [r.binding for r in corpus_verify(path).reports] == [{"p": 3}, {"p": 5}, {"p": 7}]
        assert [r.binding for r in corpus_verify(path, fixed={"p": 5}).reports] == [{"p": 5}]

    def test_pinning_outside_the_grid_is_an_error(self, tmp_path):
        path = write_corpus(tmp_path / "c.jsonl", [_direct(params={"p": [5]}, admissible=["4 | p-1"])])
        report = corpus_verify(path, fixed={"p": 7})
        assert report.reports[0].status == Status.Error


LOCATIONS = {
    "§3.2": ["3.2.1", "3.2.2"],
    "§3.3": [f"3.3.{i}" for i in range(1, 7)],
    "§5": ["5.prism", "5.case1", "5.case2"],
    "§6": [
        "6.case1.a", "6.case1.b", "6.1", "6.2.a", "6.2.b", "6.3.a", "6.3.b",
        "6.4.a", "6.4.b", "6.4.c", "6.4.d",
    ],
    "§7": ["7.1", "7.2.a", "7.2.b", "7.3", "7.4.a", "7.4.b", "7.5"],
    "§A2": [f"A2.2.{i}" for i in range(1, 5)] + [f"A2.3.{i}" for i in range(1, 40)] + ["A2.4"],
    "§A4 48.A4xZ2^2": [f"A4.A4xZ2^2.{i}" for i in range(1, 5)],
    "§A4 48.A4xZ4": ["A4.A4xZ4.1", "A4.A4xZ4.2"],
    "§A4 48.GL2(3)": [f"A4.GL2(3).{i}" for i in range(1, 5)],
    "§A4 48.S4hat": [f"A4.S4hat.{i}" for i in range(1, 5)],
    "§A4 48.Z2:SL2(3)": [f"A4.Z2:SL2(3).{i}" for i in range(1, 4)],
    "§A4 48.Z3:Z2^4": ["A4.Z3:Z2^4.1", "A4.Z3:Z2^4.2"],
    "§A4 48.Z3:Z4^2": ["A4.Z3:Z4^2"],
    "§A4 48.Z4:A4": [f"A4.Z4:A4.{i}" for i in range(1, 4)],
}


class TestShippedCorpus:
    def test_loads(self, shipped):
        ids = list(shipped)
        assert sum(1 for i in ids if i.startswith("3.3.")) == 6
        assert sum(1 for i in ids if i.startswith("A2.2.")) == 4
        assert sum(1 for i in ids if i.startswith("A2.3.")) == 39
        assert {i.split(".")[1] for i in ids if i.startswith("A4.")} == {
            "Z3:Z4^2", "A4xZ4", "A4xZ2^2", "Z3:Z2^4", "Z2:SL2(3)", "Z4:A4", "GL2(3)", "S4hat",
        }

    def test_every_location_has_its_certificates(self, shipped):
        found: dict[str, list[str]] = {}
        for c in shipped.values():
            found.setdefault(c.location, []).append(c.id)
        assert {k: sorted(v) for k, v in found.items()} == {k: sorted(v) for k, v in LOCATIONS.items()}
        assert len(shipped) == sum(len(v) for v in LOCATIONS.values())

    def test_no_certificate_is_listed_twice(self, shipped):
        fields = {"group", "genset", "strategy", "subgroup", "cycle", "lemma_args"}
        keys = [json.dumps(c.model_dump(include=fields), sort_keys=True, default=str) for c in shipped.values()]
        assert len(keys) == len(set(keys))

    @pytest.mark.parametrize(
        "cert_id", ["3.2.1", "A2.2.1", "A2.2.2", "A2.3.1", "5.case1", "5.case2", "6.case1.a", "6.case1.b"]
    )
    def test_selected_certificates_pass(self, shipped, cert_id):
        c = shipped[cert_id]
        for binding in parameter_grid(c):
            report = run_certificate(c, binding)
            assert report.passed, [ch for ch in report.checks if not ch.passed] or report.error

    @pytest.mark.slow
    def test_full_corpus(self):
        report = corpus_verify(DEFAULT_CORPUS)
        failures = [(r.id, r.binding, r.error) for r in report.reports if not r.passed]
        assert not failures
