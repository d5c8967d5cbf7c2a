from unittest import TestCase

from schmidt_subspaces.config import RunConfig
from schmidt_subspaces.construct import construct_max_rank_leq_subspace, construct_min_rank_subspace
from schmidt_subspaces.statemat import RATIONAL
from schmidt_subspaces.utils.exceptions import DomainError
from ..modes import default_direction, run_gfp, run_sample, run_structural
from ..report import (
    CONSISTENT, GEQ, INCONCLUSIVE, LEQ, REFUTED, SAMPLE_EXACT, SIGMA_MIN, WITNESS_LT,
    RankCertificate, VerificationReport, merge_reports
)
from ..sampling import sample_verify_exact


def witness():
    return RankCertificate(kind=WITNESS_LT, coeffs=(1, 0), field=RATIONAL, rank_found=1)


class TestVerificationReport(TestCase):
    def test_refuted_needs_witness(self):
        with self.assertRaises(DomainError):
            VerificationReport(SAMPLE_EXACT, 2, 10, 1, REFUTED)
        report = VerificationReport(SAMPLE_EXACT, 2, 10, 1, REFUTED, witnesses=[witness()])
        self.assertEqual(report.as_dict()["witnesses"][0]["coeffs"], ["1/1", "0/1"])

    def test_sigma_non_negative(self):
        with self.assertRaises(DomainError):
            VerificationReport(SIGMA_MIN, 2, 1, 2, INCONCLUSIVE, min_sigma_r=-1.0)

    def test_unknown_mode_and_verdict(self):
        with self.assertRaises(DomainError):
            VerificationReport("guess", 2, 1, 2, CONSISTENT)
        with self.assertRaises(DomainError):
            VerificationReport(SAMPLE_EXACT, 2, 1, 2, "maybe")


class TestMergeReports(TestCase):
    def test_chunks_merge_to_the_full_run(self):
        basis = construct_min_rank_subspace(3, 4, 2)
        full = sample_verify_exact(basis, 2, 20, seed=5)
        merged = merge_reports(
            sample_verify_exact(basis, 2, 8, seed=5),
            sample_verify_exact(basis, 2, 12, seed=5, start=8))
        self.assertEqual(merged.as_dict(), full.as_dict())

    def test_verdict_precedence(self):
        a = VerificationReport(SAMPLE_EXACT, 2, 10, 2, CONSISTENT)
        b = VerificationReport(SAMPLE_EXACT, 2, 10, 1, REFUTED, witnesses=[witness()])
        merged = merge_reports(a, b)
        self.assertEqual(merged.verdict, REFUTED)
        self.assertEqual(merged.samples_or_points, 20)
        self.assertEqual(merged.min_rank_observed, 1)
        self.assertEqual(len(merged.witnesses), 1)

    def test_mismatch(self):
        a = VerificationReport(SAMPLE_EXACT, 2, 10, 2, CONSISTENT)
        b = VerificationReport(SAMPLE_EXACT, 3, 10, 3, CONSISTENT)
        with self.assertRaises(DomainError):
            merge_reports(a, b)


class TestModes(TestCase):
    def test_direction_follows_basis_kind(self):
        config = RunConfig(command="verify", input="basis.json")
        self.assertEqual(default_direction(construct_min_rank_subspace(3, 3, 2), config), GEQ)
        self.assertEqual(default_direction(construct_max_rank_leq_subspace(3, 3, 2), config), LEQ)
        config.direction = GEQ
        self.assertEqual(default_direction(construct_max_rank_leq_subspace(3, 3, 2), config), GEQ)

    def test_runners(self):
        basis = construct_min_rank_subspace(3, 3, 2)
        config = RunConfig(command="verify", input="basis.json", samples=30, seed=2, p=3)
        self.assertEqual(run_sample(basis, config).verdict, CONSISTENT)
        self.assertEqual(run_structural(basis, config).samples_or_points, 30)
        self.assertEqual(run_gfp(basis, config).samples_or_points, 40)

        config.r, config.direction = 1, LEQ
        self.assertEqual(run_sample(basis, config).verdict, REFUTED)

    def test_structural_uses_the_basis_rank(self):
        basis = construct_min_rank_subspace(3, 3, 2)
        config = RunConfig(command="verify", input="basis.json", samples=5, r=2)
        self.assertEqual(run_structural(basis, config).r, 2)

        config.r = 3
        with self.assertRaisesRegex(DomainError, "structural mode certifies the basis r = 2"):
            run_structural(basis, config)
