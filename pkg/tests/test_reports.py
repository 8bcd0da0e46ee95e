"""Derivation plumbing and the three stem reports."""

import json

import pytest

from stemcert.derivation import (
    DerivationStep,
    StemReport,
    StepStatus,
    replay_step,
    report_from_json,
    report_to_json,
)
from stemcert.errors import VerificationError
from stemcert.reports import build_stem_report


# --------------------------------------------------------------------------
# Step and report invariants
# --------------------------------------------------------------------------


def test_computed_step_requires_check_evidence():
    with pytest.raises(ValueError):
        DerivationStep(claim="x", status=StepStatus.COMPUTED, citation="y")
    with pytest.raises(ValueError):
        DerivationStep(
            claim="x",
            status=StepStatus.COMPUTED,
            citation="y",
            evidence={"value": 1},
        )


def test_asserted_step_carries_no_evidence():
    with pytest.raises(ValueError):
        DerivationStep(
            claim="x",
            status=StepStatus.PAPER_ASSERTED,
            citation="y",
            evidence={"check": "anything"},
        )


def test_replay_rejects_unknown_check():
    step = DerivationStep(
        claim="x",
        status=StepStatus.COMPUTED,
        citation="y",
        evidence={"check": "no_such_check"},
    )
    with pytest.raises(VerificationError):
        replay_step(step)


def test_report_requires_the_known_conclusions():
    with pytest.raises(ValueError):
        StemReport(stem=1, group="Z24", generator="eta", steps=())
    with pytest.raises(ValueError):
        StemReport(stem=4, group="Z2", generator="eta", steps=())


# --------------------------------------------------------------------------
# The three reports
# --------------------------------------------------------------------------


EXPECTED = {1: ("Z2", "eta"), 2: ("Z2", "eta^2"), 3: ("Z24", "nu")}


@pytest.mark.parametrize("stem", [1, 2, 3])
def test_reports_conclude_correctly_and_replay(stem):
    report = build_stem_report(stem)
    assert (report.group, report.generator) == EXPECTED[stem]
    assert report.replay() is True
    assert len(report.computed_steps()) >= 1
    assert len(report.asserted_steps()) >= 1


def test_stem_two_ehp_step_is_asserted():
    report = build_stem_report(2)
    asserted_texts = [
        (s.claim + " " + s.citation).lower() for s in report.asserted_steps()
    ]
    assert any("ehp" in text for text in asserted_texts)


def test_build_stem_report_rejects_other_stems():
    for bad in (0, 4, -1):
        with pytest.raises(ValueError):
            build_stem_report(bad)


# --------------------------------------------------------------------------
# Serialization: exact round trip
# --------------------------------------------------------------------------


@pytest.mark.parametrize("stem", [1, 2, 3])
def test_report_json_round_trip_is_exact(stem):
    report = build_stem_report(stem)
    blob = report_to_json(report)
    # through an actual JSON string, as the CLI emits it
    recovered = report_from_json(json.loads(json.dumps(blob)))
    assert recovered == report
    assert recovered.replay() is True


def test_tampered_report_fails_replay():
    blob = report_to_json(build_stem_report(3))
    for step in blob["steps"]:
        if step["evidence"] and "value" in step["evidence"]:
            step["evidence"]["value"] = "23"
            break
    else:
        pytest.fail("expected a step with a 'value' evidence key")
    with pytest.raises(VerificationError):
        report_from_json(blob).replay()
