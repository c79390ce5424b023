"""
Shared fixtures. The small plan keeps every solve tiny so the default
test run stays fast; acceptance runs use the default plan and are marked slow.
"""

from concurrent.futures import ThreadPoolExecutor

import pytest

from dataclass.config import Config, NumericalPlan, ProfileSpec


@pytest.fixture
def small_plan() -> NumericalPlan:
    return NumericalPlan(
        nx_pair=(20, 24),
        nx_verify=(28, 32),
        epsilon_pair=(0.02, 0.025),
        n_q=8,
        q_max=6.0,
        a0x=0.1,
        n0x=20,
        verify=False
    )


@pytest.fixture
def small_config(small_plan) -> Config:
    return Config(
        profile=ProfileSpec(kind='sine', amplitude=1.0, omega=1.0),
        plan=small_plan,
        workers=2
    )


@pytest.fixture
def pool():
    executor = ThreadPoolExecutor(max_workers=4)
    yield executor
    executor.shutdown(wait=True)
