import os
import sys

from hypothesis import HealthCheck, settings

# fixed seed, 1000 cases per property; FFCLASS_HYPOTHESIS=dev for a quick pass
settings.register_profile(
    "ci", max_examples=1000, derandomize=True, deadline=None, database=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.register_profile("dev", settings.get_profile("ci"), max_examples=50)
settings.load_profile(os.environ.get("FFCLASS_HYPOTHESIS", "ci"))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", [])
    if results:
        terminalreporter.section("acceptance criteria")
        for r in results:
            terminalreporter.write_line(r.line())
