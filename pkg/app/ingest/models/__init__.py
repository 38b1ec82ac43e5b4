"""
Data models for graph invariants, family predictions and survey output.
"""

from app.ingest.models.GraphFlags import GraphFlags
from app.ingest.models.InvariantBundle import InvariantBundle
from app.ingest.models.HilbertProfile import DegreeReport, HilbertProfile
from app.ingest.models.BettiTable import BettiEntry, BettiTable
from app.ingest.models.Recursions import AlphaMResult, BlockCheckReport, JKSplit, LeafCliqueSplit
from app.ingest.models.Prediction import PREDICTED_FIELDS, FieldCheck, Measurement, Prediction
from app.ingest.models.FamilySpecs import Radius2Spec, SplitSpec
from app.ingest.models.PairSet import PairSet
from app.ingest.models.SurveyRecord import SkippedGraph, SurveyRecord, SurveySummary, UnrealizableReport
from app.ingest.models.VerifyReport import SuiteResult, VerifyReport

__all__ = [
    'GraphFlags',
    'InvariantBundle',
    'DegreeReport',
    'HilbertProfile',
    'BettiEntry',
    'BettiTable',
    'AlphaMResult',
    'BlockCheckReport',
    'JKSplit',
    'LeafCliqueSplit',
    'PREDICTED_FIELDS',
    'FieldCheck',
    'Measurement',
    'Prediction',
    'Radius2Spec',
    'SplitSpec',
    'PairSet',
    'SkippedGraph',
    'SurveyRecord',
    'SurveySummary',
    'UnrealizableReport',
    'SuiteResult',
    'VerifyReport',
]
