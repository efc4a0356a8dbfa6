"""Step-by-step replay certificates for the published vanishing argument
on anticanonical cones over blown-up planes.

The engine cannot compute cohomology of twisted tangent sheaves on a
blow-up directly, and it does not pretend to.  Instead, each certificate
replays the argument that is in circulation for these cones, one step at a
time, and grades every step:

* VERIFIED     -- the step's claim is a computation this package can do
                  exactly (restriction degrees, line cohomology on the
                  exceptional curves, plane cotangent cohomology), and the
                  recomputation agrees;
* CONTRADICTED -- the recomputation disagrees with the claimed value;
* ASSERTED     -- the step is structural (duality reductions, projection
                  formula, sequence chases) and is recorded but not
                  machine-checked.

A certificate PASSes only if every step is VERIFIED; any CONTRADICTED step
forces FAIL; otherwise it is PASS_WITH_ASSERTIONS.  The per-step "anchor"
quotes the claim being replayed so a reader can locate it, and the "rule"
names the computation used to grade it.

Twists are indexed by the integer m in the twisting class m*K (K the
canonical class), matching how the replayed argument is organized: m >= 0
steps come from the argument's first lemma (at most 6 points blown up),
m <= -2 from its second (at most 6 points) or third (7 or 8 points), and
m = -1 from the scaling-direction discussion around the main statement.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Union

from . import p1
from .projective import (
    SurfaceDivisor,
    hq_pn_omega1,
    intersection,
    restrict_to_exceptional,
)


class StepStatus(enum.Enum):
    VERIFIED = "VERIFIED"
    ASSERTED = "ASSERTED"
    CONTRADICTED = "CONTRADICTED"


class Verdict(enum.Enum):
    PASS = "PASS"
    PASS_WITH_ASSERTIONS = "PASS_WITH_ASSERTIONS"
    FAIL = "FAIL"


@dataclass(frozen=True)
class CertStep:
    """One graded step of a replay certificate."""

    term: str
    claimed: Optional[Union[int, str]]
    computed: Optional[Union[int, str]]
    rule: str
    anchor: str
    status: StepStatus

    def to_dict(self) -> dict:
        return {
            "term": self.term,
            "claimed": self.claimed,
            "computed": self.computed,
            "rule": self.rule,
            "anchor": self.anchor,
            "status": self.status.value,
        }


@dataclass
class Certificate:
    claim: str
    steps: list[CertStep] = field(default_factory=list)

    @property
    def verdict(self) -> Verdict:
        statuses = {s.status for s in self.steps}
        if StepStatus.CONTRADICTED in statuses:
            return Verdict.FAIL
        if statuses <= {StepStatus.VERIFIED} and self.steps:
            return Verdict.PASS
        return Verdict.PASS_WITH_ASSERTIONS

    def counts(self) -> dict[str, int]:
        out = {"VERIFIED": 0, "ASSERTED": 0, "CONTRADICTED": 0}
        for s in self.steps:
            out[s.status.value] += 1
        return out

    def steps_with_status(self, status: StepStatus) -> list[CertStep]:
        return [s for s in self.steps if s.status is status]

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "verdict": self.verdict.value,
            "counts": self.counts(),
            "steps": [s.to_dict() for s in self.steps],
        }


def _checked(term: str, claimed, computed, rule: str, anchor: str) -> CertStep:
    status = StepStatus.VERIFIED if claimed == computed else StepStatus.CONTRADICTED
    return CertStep(term, claimed, computed, rule, anchor, status)


def _asserted(term: str, anchor: str, rule: str = "structural step, not machine-checked") -> CertStep:
    return CertStep(term, None, None, rule, anchor, StepStatus.ASSERTED)


def _h1_line(k: int) -> int:
    return p1.h_dim(1, k)


def _prelude_steps(r: int) -> list[CertStep]:
    K = SurfaceDivisor.canonical(r)
    steps = [
        _checked(
            term="self-intersection of the canonical class",
            claimed=9 - r,
            computed=intersection(K, K),
            rule="intersection form in the (H; E_1..E_r) basis",
            anchor="K^2 = 9 - r on the blow-up of the plane in r points",
        ),
        _checked(
            term="degree of the canonical class on an exceptional line",
            claimed=-1,
            computed=restrict_to_exceptional(K, 1),
            rule="restriction degree from the intersection form",
            anchor="K restricts to degree -1 on each exceptional line",
        ),
    ]
    return steps


def _lemma_positive_block(r: int, m: int) -> list[CertStep]:
    """Replay for twist m >= 0 (argument stated for r <= 6): push the
    tangent sheaf through the blow-up and kill the exceptional terms."""
    K = SurfaceDivisor.canonical(r)
    twist_deg = 1 + m * restrict_to_exceptional(K, 1)
    steps = [
        _asserted(
            term=f"[m={m}] blow-up tangent sequence",
            anchor="0 -> T_Y -> pullback of the plane tangent sheaf -> degree-one sheaves on the exceptional lines -> 0",
        ),
        _checked(
            term=f"[m={m}] twist degree on each exceptional line",
            claimed=1 - m,
            computed=twist_deg,
            rule="restriction degree from the intersection form",
            anchor="the exceptional summand twists to degree 1 - m",
        ),
        _checked(
            term=f"[m={m}] first cohomology of the line bundle of degree 1 - m",
            claimed=0,
            computed=_h1_line(1 - m),
            rule="line cohomology closed form",
            anchor="for all m >= 0 the degree-(1-m) line bundle has no first cohomology",
        ),
        _asserted(
            term=f"[m={m}] vanishing of the pulled-back plane term",
            anchor="the projection formula reduces the pulled-back term to the plane, where it vanishes",
        ),
        _asserted(
            term=f"[m={m}] conclusion for the twisted tangent sheaf",
            anchor="the long exact sequence then gives the claimed vanishing in twist m",
            rule="sequence chase as stated; inputs above",
        ),
    ]
    return steps


def _lemma_negative_block_small_r(r: int, m: int) -> list[CertStep]:
    """Replay for twist m <= -2, r <= 6: Serre duality to the cotangent
    side, then an ampleness claim plus exceptional-line vanishing."""
    K = SurfaceDivisor.canonical(r)
    L = (-(m + 1)) * K  # the auxiliary class the argument calls ample
    deg_L_on_E = restrict_to_exceptional(L, 1)
    steps = [
        _asserted(
            term=f"[m={m}] duality reduction to the cotangent side",
            anchor="first cohomology of the tangent sheaf in twist m is dual to first cohomology of the cotangent sheaf twisted by -(m+1)K",
        ),
        CertStep(
            term=f"[m={m}] claimed ampleness of the auxiliary class -(m+1)K",
            claimed="positive degree on every exceptional line",
            computed=f"degree {deg_L_on_E} on each exceptional line",
            rule="an ample class must restrict to positive degree on every curve; degree computed from the intersection form",
            anchor="the auxiliary class is ample",
            status=StepStatus.CONTRADICTED if deg_L_on_E <= 0 else StepStatus.ASSERTED,
        ),
        _checked(
            term=f"[m={m}] restriction of the twisted cotangent summand to an exceptional line",
            claimed=m,
            computed=-1 + deg_L_on_E,
            rule="restriction degree from the intersection form",
            anchor="the exceptional summand restricts to degree m",
        ),
        _checked(
            term=f"[m={m}] sections of the line bundle of degree {m}",
            claimed=0,
            computed=p1.h_dim(0, m),
            rule="line cohomology closed form",
            anchor="no global sections in degree m <= -2",
        ),
        _checked(
            term=f"[m={m}] first cohomology of the line bundle of degree {m}",
            claimed=0,
            computed=_h1_line(m),
            rule="line cohomology closed form",
            anchor="both cohomology groups of the exceptional term vanish",
        ),
        _asserted(
            term=f"[m={m}] vanishing of the pulled-back cotangent term",
            anchor="the projection formula reduces the pulled-back cotangent term to the plane",
        ),
        _asserted(
            term=f"[m={m}] conclusion for the twisted tangent sheaf",
            anchor="the dual group vanishes, giving the claimed vanishing in twist m",
            rule="sequence chase as stated; inputs above",
        ),
    ]
    return steps


def _lemma_negative_block_large_r(r: int, m: int) -> list[CertStep]:
    """Replay for twist m <= -2, r in {7, 8}: duality with the class
    (1-m)K, exceptional degree m-2, and a plane cotangent vanishing."""
    K = SurfaceDivisor.canonical(r)
    dual_twist = (1 - m) * K
    deg_on_E = -1 + restrict_to_exceptional(dual_twist, 1)
    plane_twist = -3 * (1 - m)
    steps = [
        _asserted(
            term=f"[m={m}] duality reduction to the cotangent sheaf twisted by (1-m)K",
            anchor="the dual group is the first cohomology of the cotangent sheaf twisted by (1-m)K",
        ),
        _checked(
            term=f"[m={m}] restriction of the twisted cotangent summand to an exceptional line",
            claimed=m - 2,
            computed=deg_on_E,
            rule="restriction degree from the intersection form",
            anchor="the exceptional summand restricts to degree m - 2",
        ),
        _checked(
            term=f"[m={m}] first cohomology of the line bundle of degree {m - 2}",
            claimed=0,
            computed=_h1_line(m - 2),
            rule="line cohomology closed form",
            anchor="degree at most -4, hence no contribution",
        ),
        _asserted(
            term=f"[m={m}] projection-formula identification with a plane cotangent group",
            anchor="pushing forward identifies the remaining term with cotangent cohomology on the plane",
        ),
        _checked(
            term=f"[m={m}] first cohomology of the plane cotangent sheaf twisted by {plane_twist}",
            claimed=0,
            computed=hq_pn_omega1(2, plane_twist, 1),
            rule="cotangent chase on the plane with computed connecting ranks",
            anchor="the plane cotangent term vanishes in this twist range",
        ),
        _asserted(
            term=f"[m={m}] conclusion for the twisted tangent sheaf",
            anchor="combining the two vanishing statements gives the claim in twist m",
            rule="sequence chase as stated; inputs above",
        ),
    ]
    return steps


def _scaling_block(m: int = -1) -> list[CertStep]:
    """The m = -1 discussion: the graded piece carrying the scaling vector
    field.  Nothing here is a computation this engine can replay."""
    return [
        _asserted(
            term=f"[m={m}] identification of the untwisted tangent cohomology with the twist-(-1) group",
            anchor="the first tangent cohomology of the surface is identified with its twist by -K",
        ),
        _asserted(
            term=f"[m={m}] scaling direction spans the twist-(-1) contribution",
            anchor="the derivation generating the torus action spans this graded piece, so the quotient vanishes",
        ),
    ]


def _theorem_block(r: int) -> list[CertStep]:
    """The graded assembly claimed for r <= 6: every step is structural."""
    return [
        _asserted(
            term="graded decomposition of the cone's first deformation space",
            anchor="a short exact sequence splits the deformation space into a quotient in twist -1 and a sum over twists m >= 0",
        ),
        _asserted(
            term="duality for the nonnegative-twist block",
            anchor="each nonnegative twist is dual to a cotangent group twisted by -(m+1)K",
        ),
        _asserted(
            term="ampleness-based vanishing of the dual cotangent block",
            anchor="vanishing for cotangent twists by ample classes is invoked for the whole block",
        ),
        _asserted(
            term="conclusion: the anticanonical cone admits no graded deformations",
            anchor="combining the blocks, every graded piece of the deformation space vanishes",
        ),
    ]


def delpezzo_certificate(r: int, m_lo: int = -6, m_hi: int = 3) -> Certificate:
    """Build the replay certificate for the blow-up of the plane in r
    points (1 <= r <= 8), twists m_lo..m_hi of the canonical class."""
    if not 1 <= r <= 8:
        raise ValueError("r must be between 1 and 8")
    if m_lo > m_hi:
        raise ValueError("empty twist window")
    cert = Certificate(
        claim=(
            f"replay of the published vanishing argument for the anticanonical cone over the "
            f"blow-up of the plane in {r} points, twists {m_lo}..{m_hi} of the canonical class"
        )
    )
    cert.steps.extend(_prelude_steps(r))
    for m in range(m_lo, m_hi + 1):
        if m <= -2:
            if r <= 6:
                cert.steps.extend(_lemma_negative_block_small_r(r, m))
            else:
                cert.steps.extend(_lemma_negative_block_large_r(r, m))
        elif m == -1:
            if r <= 6:
                cert.steps.extend(_scaling_block(m))
        else:  # m >= 0
            if r <= 6:
                cert.steps.extend(_lemma_positive_block(r, m))
    if r <= 6:
        cert.steps.extend(_theorem_block(r))
    return cert
