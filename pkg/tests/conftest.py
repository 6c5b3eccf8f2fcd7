import math
import sys

import numpy as np
import pytest

from udwdelta import Family, make_scenario

# Documented sampling ranges for randomized scenarios (units of sigma).
RANGES = {
    "alpha": (0.0, 1.0),
    "theta": (0.0, 2.0 * math.pi),
    "gap": (0.0, 5.0),
    "coupling": (0.0, 3.0),
    "eta": (0.2, 3.0),
    "separation": (0.0, 15.0),
    "delay": (0.0, 15.0),
    "tau_a": (-5.0, 5.0),
}


def random_scenario(rng, family=None):
    u = {k: rng.uniform(*v) for k, v in RANGES.items()}
    if family is None:
        family = Family.GG if rng.uniform() < 0.5 else Family.GE
    return make_scenario(
        u["alpha"],
        theta=min(u["theta"], math.nextafter(2.0 * math.pi, 0.0)),
        family=family,
        coupling_a=u["coupling"],
        coupling_b=rng.uniform(*RANGES["coupling"]),
        eta=u["eta"],
        gap=u["gap"],
        separation=u["separation"],
        delay=u["delay"],
        tau_a=u["tau_a"],
    )


def random_scenarios(n, seed, family=None):
    rng = np.random.default_rng(seed)
    return [random_scenario(rng, family) for _ in range(n)]


@pytest.fixture(scope="session")
def scenarios_1000():
    return random_scenarios(1000, seed=20211)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
