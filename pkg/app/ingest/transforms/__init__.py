"""
Per-graph transforms and logging consumers.
"""

from app.ingest.transforms.graph_to_survey_record import SurveyJob, SurveyOutcome, graph_to_survey_record

__all__ = [
    'SurveyJob',
    'SurveyOutcome',
    'graph_to_survey_record',
]
