import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

# fixed derandomized profile: property runs are reproducible
settings.register_profile("repro", derandomize=True, deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repro")

# outcomes of property tests in this session, keyed by (module, function);
# the acceptance suite reads them instead of running the properties twice
PROPERTY_OUTCOMES = {}


def pytest_collection_modifyitems(session, config, items):
    # acceptance criteria go last so they can see the property outcomes
    items.sort(key=lambda item: item.module.__name__ == "test_acceptance")
    config._property_items = {item.nodeid: (item.module.__name__, item.name) for item in items
                              if getattr(item.function, "is_hypothesis_test", False)}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    key = getattr(item.config, "_property_items", {}).get(item.nodeid)
    if key and (rep.when == "call" or rep.failed):
        PROPERTY_OUTCOMES[key] = rep.passed and PROPERTY_OUTCOMES.get(key, True)
