"""
API adapters for the command line.

Each module pairs a Params model with a Response model and one function:
- invariants: full invariant report for one graph
- family: construct a named family member, predict and measure
- pairs: predicted (reg, deg h) pairs with witnesses
- survey: batch survey over a corpus
- verify: cross-check suites
"""

from app.apis.invariants import InvariantsParams, InvariantsResponse, get_invariants, read_graph_input
from app.apis.family import FAMILIES, FamilyParams, FamilyResponse, get_family
from app.apis.pairs import PAIR_CLASSES, PairsParams, PairsResponse, get_pairs
from app.apis.survey import SurveyParams, get_survey
from app.apis.verify import VerifyParams, get_verify

__all__ = [
    'InvariantsParams',
    'InvariantsResponse',
    'get_invariants',
    'read_graph_input',
    'FAMILIES',
    'FamilyParams',
    'FamilyResponse',
    'get_family',
    'PAIR_CLASSES',
    'PairsParams',
    'PairsResponse',
    'get_pairs',
    'SurveyParams',
    'get_survey',
    'VerifyParams',
    'get_verify',
]
