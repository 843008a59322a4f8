"""
Shared fixtures for the test suite.
"""

import os
import sys

import pytest

# Make src/ importable without installing the package
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from sasaki_links.brieskorn_ci import build_link, link_summary  # noqa: E402
from sasaki_links.search import Series, gomez_series  # noqa: E402
from sasaki_links.summary import poincare_summary, sphere_summary  # noqa: E402
from sasaki_links.wh_link import hypersurface_summary  # noqa: E402

ROW2_POLY = "z0^12+z1^6+z2^4+z3^2*z0"
POINCARE_POLY = "z0^5+z1^3+z2^2"


@pytest.fixture
def poincare():
    return poincare_summary()


@pytest.fixture
def s3():
    return sphere_summary(1)


@pytest.fixture
def l237():
    return link_summary(build_link((2, 3, 7)))


@pytest.fixture
def l51113():
    return link_summary(build_link((5, 11, 13)))


@pytest.fixture
def second_series_9():
    return hypersurface_summary(gomez_series(Series.SECOND, 9), name="N9")
