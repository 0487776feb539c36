"""Lemma checks, certificate replay, and Euler-characteristic identities."""
from .identities import (verify_shift_identity, verify_step1_identity, verify_step2_vanishing,
                         verify_step3_pivot)
from .lemmas import check_demi1, check_demi2, check_prop1
from .replay import VanishingCertificate, stage_certificate, verify_wedge_vanishing
from .scenario import ProofScenario, audit_stages, build_scenario, verify_main_ses

__all__ = [
    "check_prop1", "check_demi1", "check_demi2",
    "VanishingCertificate", "verify_wedge_vanishing", "stage_certificate",
    "verify_shift_identity", "verify_step1_identity", "verify_step2_vanishing",
    "verify_step3_pivot",
    "ProofScenario", "build_scenario", "verify_main_ses", "audit_stages",
]
