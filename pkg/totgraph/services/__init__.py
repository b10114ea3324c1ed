"""totgraph.services"""
from .verification.conjecture import ConjectureExplorer
from .verification.reg import RegTheoremSuite
from .verification.total import TotalTheoremSuite

# Mapping of suite names to verification pipelines.
SUITES = {
    "total": TotalTheoremSuite,
    "reg": RegTheoremSuite,
    "conjecture": ConjectureExplorer,
}


def suite(name, options=None):
    """
    Retrieves the verification suite registered under a name.

    :returns: The suite, or None for an unknown name.
    :rtype: VerificationSuite
    """
    suite_class = SUITES.get(name.lower())
    return suite_class(options) if suite_class else None
