"""Replay certificates: step grading, verdict aggregation, determinism."""

import pytest

from conedef.delpezzo import (
    Certificate,
    CertStep,
    StepStatus,
    Verdict,
    delpezzo_certificate,
)


def steps_matching(cert, fragment, status=None):
    out = [s for s in cert.steps if fragment in s.term]
    if status is not None:
        out = [s for s in out if s.status is status]
    return out


# ---- verdict aggregation on synthetic certificates --------------------


def _step(status):
    return CertStep("t", 0, 0, "r", "a", status)


def test_verdict_all_verified_passes():
    cert = Certificate("c", [_step(StepStatus.VERIFIED), _step(StepStatus.VERIFIED)])
    assert cert.verdict == Verdict.PASS


def test_verdict_assertion_downgrades():
    cert = Certificate("c", [_step(StepStatus.VERIFIED), _step(StepStatus.ASSERTED)])
    assert cert.verdict == Verdict.PASS_WITH_ASSERTIONS


def test_verdict_contradiction_dominates():
    cert = Certificate(
        "c",
        [_step(StepStatus.VERIFIED), _step(StepStatus.ASSERTED), _step(StepStatus.CONTRADICTED)],
    )
    assert cert.verdict == Verdict.FAIL


def test_empty_certificate_is_not_a_pass():
    assert Certificate("c", []).verdict == Verdict.PASS_WITH_ASSERTIONS


# ---- the replayed argument --------------------------------------------


def test_r6_default_window_structure():
    cert = delpezzo_certificate(6)
    counts = cert.counts()
    assert cert.verdict == Verdict.FAIL
    assert counts["CONTRADICTED"] > 0
    assert counts["VERIFIED"] > 0
    assert counts["ASSERTED"] > 0


@pytest.mark.parametrize("m", [0, 1, 2])
def test_r6_nonnegative_twists_verify_up_to_two(m):
    cert = delpezzo_certificate(6, m, m)
    h1_steps = steps_matching(cert, f"[m={m}] first cohomology of the line bundle")
    assert len(h1_steps) == 1
    assert h1_steps[0].status is StepStatus.VERIFIED
    assert h1_steps[0].computed == 0


def test_r6_twist_three_is_contradicted():
    cert = delpezzo_certificate(6, 3, 3)
    h1_steps = steps_matching(cert, "[m=3] first cohomology of the line bundle")
    assert len(h1_steps) == 1
    assert h1_steps[0].status is StepStatus.CONTRADICTED
    assert h1_steps[0].computed == 1  # h^1 of the degree -2 bundle on a line
    assert cert.verdict == Verdict.FAIL


def test_r6_clean_window_passes_with_assertions():
    cert = delpezzo_certificate(6, 0, 2)
    assert cert.verdict == Verdict.PASS_WITH_ASSERTIONS
    assert cert.counts()["CONTRADICTED"] == 0


def test_r6_negative_twists_hit_two_contradictions_each():
    cert = delpezzo_certificate(6, -2, -2)
    assert cert.verdict == Verdict.FAIL
    ample = steps_matching(cert, "claimed ampleness", StepStatus.CONTRADICTED)
    assert len(ample) == 1
    assert "degree -1" in ample[0].computed
    h1 = steps_matching(cert, "[m=-2] first cohomology of the line bundle", StepStatus.CONTRADICTED)
    assert len(h1) == 1
    assert h1[0].computed == 1
    # the degree bookkeeping itself is sound and verifies
    deg = steps_matching(cert, "[m=-2] restriction of the twisted cotangent summand")
    assert deg[0].status is StepStatus.VERIFIED
    assert deg[0].computed == -2


def test_r7_deep_twist_contradiction_value():
    cert = delpezzo_certificate(7, -2, -2)
    assert cert.verdict == Verdict.FAIL
    h1 = steps_matching(cert, "first cohomology of the line bundle of degree -4", StepStatus.CONTRADICTED)
    assert len(h1) == 1
    assert h1[0].computed == 3
    # the plane cotangent vanishing it leans on does verify
    plane = steps_matching(cert, "plane cotangent sheaf")
    assert len(plane) == 1
    assert plane[0].status is StepStatus.VERIFIED


def test_r7_has_no_nonnegative_blocks():
    cert = delpezzo_certificate(7, 0, 3)
    assert steps_matching(cert, "first cohomology of the line bundle") == []
    # prelude only: everything checkable verifies
    assert cert.verdict in (Verdict.PASS, Verdict.PASS_WITH_ASSERTIONS)


def test_r8_deep_twist_scaling():
    cert = delpezzo_certificate(8, -3, -3)
    h1 = steps_matching(cert, "first cohomology of the line bundle of degree -5", StepStatus.CONTRADICTED)
    assert len(h1) == 1
    assert h1[0].computed == 4


def test_prelude_intersection_numbers():
    for r in range(1, 9):
        cert = delpezzo_certificate(r, 0, 0)
        k2 = steps_matching(cert, "self-intersection of the canonical class")
        assert k2[0].computed == 9 - r
        assert k2[0].status is StepStatus.VERIFIED
        deg = steps_matching(cert, "degree of the canonical class on an exceptional line")
        assert deg[0].computed == -1


def test_certificates_are_deterministic():
    a = delpezzo_certificate(6).to_dict()
    b = delpezzo_certificate(6).to_dict()
    assert a == b


def test_validation():
    with pytest.raises(ValueError):
        delpezzo_certificate(0)
    with pytest.raises(ValueError):
        delpezzo_certificate(9)
    with pytest.raises(ValueError):
        delpezzo_certificate(6, 2, -2)


def test_to_dict_shape():
    d = delpezzo_certificate(6, 0, 0).to_dict()
    assert set(d) == {"claim", "verdict", "counts", "steps"}
    for step in d["steps"]:
        assert set(step) == {"term", "claimed", "computed", "rule", "anchor", "status"}
        assert step["status"] in {"VERIFIED", "ASSERTED", "CONTRADICTED"}
